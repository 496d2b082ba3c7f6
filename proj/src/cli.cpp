#include "itc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "itc/enumerate.hpp"
#include "itc/errors.hpp"
#include "itc/ingest.hpp"
#include "itc/oracle.hpp"

namespace itc::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string random;
  std::int64_t resolution = 20;
  bool no_normalize = false;

  void attach(CLI::App& app) {
    app.add_option("--input", input, "Contact list (timestamp u v per line)");
    app.add_option("--random", random, "Synthetic instance instead of --input: N,TAU,P,SEED");
    app.add_option("--resolution", resolution, "Seconds per layer")->check(CLI::PositiveNumber);
    app.add_flag("--no-normalize", no_normalize, "Bin absolute timestamps instead of shifting to the first contact");
  }
};

struct Loaded {
  std::string id;
  Dataset data;
};

Loaded load(const InputOptions& opts) {
  if (opts.input.empty() == opts.random.empty()) throw UsageError("exactly one of --input or --random is required");
  if (!opts.random.empty()) {
    std::istringstream fields(opts.random);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(fields, part, ',')) parts.push_back(part);
    if (parts.size() != 4) throw UsageError("--random expects N,TAU,P,SEED");
    std::size_t n = 0, tau = 0;
    double p = 0;
    std::uint64_t seed = 0;
    try {
      n = std::stoul(parts[0]);
      tau = std::stoul(parts[1]);
      p = std::stod(parts[2]);
      seed = std::stoull(parts[3]);
    } catch (const std::exception&) {
      throw UsageError("--random expects N,TAU,P,SEED");
    }
    std::vector<std::string> labels;
    for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    auto tg = generate_random_temporal_graph(n, tau, p, seed);
    const auto lifetime = static_cast<std::int64_t>(tau - 1) * opts.resolution;
    return {"random-" + parts[0] + "-" + parts[1] + "-" + parts[2] + "-" + parts[3],
            Dataset{std::move(tg), std::move(labels), lifetime, opts.resolution}};
  }
  std::ifstream in(opts.input);
  if (!in) throw InputError("cannot read " + opts.input);
  const ContactList contacts = parse_contact_list(in);
  return {std::filesystem::path(opts.input).stem().string(),
          bin_to_layers(contacts, {opts.resolution, !opts.no_normalize})};
}

std::size_t resolve_delta(const Dataset& d, long long delta_base, std::optional<std::size_t> delta_layers) {
  if (delta_layers) return *delta_layers;
  const std::size_t te = d.graph.time_edge_count();
  return te == 0 ? 0 : scale_delta(delta_base, d.lifetime_seconds, te, d.resolution);
}

IsolationSpec make_spec(const std::string& kind, const std::string& c) {
  auto k = parse_kind(kind);
  if (!k) throw UsageError("unknown isolation type '" + kind + "'");
  Rational value;
  try {
    value = Rational::parse(c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (value.num() <= 0) throw UsageError("--c must be positive");
  return {*k, value};
}

void require_supported(const IsolationSpec& spec, bool oracle) {
  if (spec.kind == IsolationKind::UsuallyMax && !oracle) {
    throw UsageError(
        "usually-max has no fast enumerator (its subset search cannot be bounded well below 2^n); "
        "rerun with --oracle on a small instance");
  }
}

std::string label_of(const Dataset& d, Vertex v) { return d.labels.empty() ? std::to_string(v + 1) : d.labels[v]; }

nlohmann::json label_json(const std::string& label) {
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), x);
  if (ec == std::errc{} && ptr == label.data() + label.size()) return x;
  return label;
}

// Windows are reported in input layers: a Delta-clique covers [a, b + delta].
void write_cliques(std::ostream& out, const ResultSet& rs, const Dataset& d, std::size_t delta,
                   const std::string& format) {
  const auto entries = rs.entries();
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
      nlohmann::json labels = nlohmann::json::array();
      for (Vertex v : e.vertices) labels.push_back(label_json(label_of(d, v)));
      arr.push_back({{"vertices", labels}, {"start", e.window.a}, {"end", e.window.b + delta}});
    }
    out << arr.dump() << '\n';
    return;
  }
  if (format == "csv") out << "start,end,vertices\n";
  for (const auto& e : entries) {
    const char sep = format == "csv" ? ',' : ' ';
    out << e.window.a << sep << e.window.b + delta << sep;
    for (std::size_t i = 0; i < e.vertices.size(); ++i) out << (i ? " " : "") << label_of(d, e.vertices[i]);
    out << '\n';
  }
}

void append_report(const std::string& path, const RunReport& report) {
  const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream csv(path, std::ios::app);
  if (!csv) throw InputError("cannot write " + path);
  if (fresh) csv << report_csv_header() << '\n';
  csv << report_csv_row(report) << '\n';
}

std::optional<Clock::time_point> deadline_after(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

struct RunOptions {
  InputOptions input;
  std::string kind;
  std::string c;
  long long delta = 0;
  std::optional<std::size_t> delta_layers;
  std::string format = "text";
  std::string out;
  std::string report;
  unsigned threads = 0;
  double time_limit = 0;
  bool oracle = false;
  bool corrupt = false;
};

void attach_run_options(CLI::App& app, RunOptions& o) {
  o.input.attach(app);
  app.add_option("--type", o.kind, "Isolation type")->required();
  app.add_option("--c", o.c, "Isolation parameter, decimal or p/q")->required();
  app.add_option("--delta", o.delta, "Protocol delta, scaled by L/(5|TE|) into layers");
  app.add_option("--delta-layers", o.delta_layers, "Delta in layers, applied unscaled");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

struct Prepared {
  Loaded loaded;
  std::size_t delta_layers;
  TemporalGraph graph;
};

Prepared prepare(const RunOptions& o) {
  Loaded loaded = load(o.input);
  const std::size_t delta = resolve_delta(loaded.data, o.delta, o.delta_layers);
  TemporalGraph graph = delta_union_transform(loaded.data.graph, delta);
  return {std::move(loaded), delta, std::move(graph)};
}

int cmd_run(const RunOptions& o, bool oracle, std::ostream& out, std::ostream& err) {
  const IsolationSpec spec = make_spec(o.kind, o.c);
  require_supported(spec, oracle);
  if (o.format != "json" && o.format != "csv" && o.format != "text") throw UsageError("unknown --format " + o.format);
  const Prepared p = prepare(o);

  RunReport report{p.loaded.id, o.kind, o.c, o.delta, p.delta_layers};
  const auto start = Clock::now();
  ResultSet result;
  int code = kOk;
  try {
    result = oracle ? brute_force_enumerate(p.graph, spec)
                    : enumerate_maximal_isolated(p.graph, spec, {o.threads, deadline_after(o.time_limit)});
  } catch (const TimeoutError&) {
    report.status = "timeout";
    code = kTimeout;
  }
  report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
  report.num_cliques = result.size();
  report.time_per_clique_s = report.wall_time_s / static_cast<double>(std::max<std::size_t>(report.num_cliques, 1));

  if (code == kOk) {
    if (o.out.empty()) {
      write_cliques(out, result, p.loaded.data, p.delta_layers, o.format);
    } else {
      std::ofstream file(o.out);
      if (!file) throw InputError("cannot write " + o.out);
      write_cliques(file, result, p.loaded.data, p.delta_layers, o.format);
    }
  } else {
    err << "time limit of " << o.time_limit << " s exceeded; no cliques written (partial report only)\n";
  }
  if (!o.report.empty()) append_report(o.report, report);
  err << report_csv_header() << '\n' << report_csv_row(report) << '\n';
  return code;
}

std::string describe(const TemporalClique& c, const Dataset& d, std::size_t delta) {
  std::string s = "[" + std::to_string(c.window.a) + "," + std::to_string(c.window.b + delta) + "]";
  for (Vertex v : c.vertices) s += " " + label_of(d, v);
  return s;
}

int cmd_compare(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const IsolationSpec spec = make_spec(o.kind, o.c);
  require_supported(spec, false);
  const Prepared p = prepare(o);
  const ResultSet expected = brute_force_enumerate(p.graph, spec);
  ResultSet fast = enumerate_maximal_isolated(p.graph, spec, {o.threads, std::nullopt});
  if (o.corrupt) {
    auto entries = fast.entries();
    ResultSet damaged;
    if (entries.empty()) {
      damaged.insert({0, 1}, {1, 1});
    } else {
      entries.pop_back();
      for (const auto& e : entries) damaged.insert(e);
    }
    fast = std::move(damaged);
  }

  const auto f = fast.entries();
  const auto e = expected.entries();
  std::vector<TemporalClique> only_fast, only_oracle;
  std::set_difference(f.begin(), f.end(), e.begin(), e.end(), std::back_inserter(only_fast));
  std::set_difference(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(only_oracle));
  for (const auto& c : only_fast) out << "+ fast only:   " << describe(c, p.loaded.data, p.delta_layers) << '\n';
  for (const auto& c : only_oracle) out << "- oracle only: " << describe(c, p.loaded.data, p.delta_layers) << '\n';
  if (only_fast.empty() && only_oracle.empty()) {
    out << "match: " << f.size() << " cliques\n";
    return kOk;
  }
  err << "mismatch: " << only_fast.size() << " fast-only, " << only_oracle.size() << " oracle-only\n";
  return kMismatch;
}

struct BenchOptions {
  InputOptions input;
  std::vector<std::string> kinds{"alltime-avg", "alltime-max", "avg-alltime", "max-usually", "usually-avg"};
  std::vector<std::string> cs{"0.001", "1", "5", "25", "125"};
  std::vector<long long> deltas{0, 125, 3125};
  std::string out;
  std::string dataset;
  unsigned threads = 0;
  double time_limit = 3600;
  bool oracle = false;
};

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<IsolationSpec> specs;
  for (const auto& k : o.kinds) {
    for (const auto& c : o.cs) {
      specs.push_back(make_spec(k, c));
      require_supported(specs.back(), o.oracle);
    }
  }
  Loaded loaded = load(o.input);
  const std::string id = o.dataset.empty() ? loaded.id : o.dataset;

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file = std::make_unique<std::ofstream>(o.out);
    if (!*file) throw InputError("cannot write " + o.out);
    sink = file.get();
  }
  *sink << report_csv_header() << '\n';

  bool any_timeout = false;
  for (long long delta_base : o.deltas) {
    const std::size_t delta = resolve_delta(loaded.data, delta_base, std::nullopt);
    if (delta >= loaded.data.graph.lifetime()) {
      err << "skipping delta " << delta_base << ": " << delta << " layers exceed the lifetime\n";
      continue;
    }
    const TemporalGraph graph = delta_union_transform(loaded.data.graph, delta);
    std::size_t idx = 0;
    for (const auto& k : o.kinds) {
      for (const auto& c : o.cs) {
        const IsolationSpec& spec = specs[idx++];
        RunReport report{id, k, c, delta_base, delta};
        const auto start = Clock::now();
        try {
          report.num_cliques = o.oracle ? brute_force_enumerate(graph, spec).size()
                                        : enumerate_maximal_isolated(graph, spec, {o.threads, deadline_after(o.time_limit)}).size();
        } catch (const TimeoutError&) {
          report.status = "timeout";
          any_timeout = true;
        }
        report.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
        report.time_per_clique_s =
            report.wall_time_s / static_cast<double>(std::max<std::size_t>(report.num_cliques, 1));
        *sink << report_csv_row(report) << '\n' << std::flush;
      }
    }
  }
  return any_timeout ? kTimeout : kOk;
}

}  // namespace

std::string report_csv_header() {
  return "dataset,kind,c,delta_base,delta_layers,num_cliques,wall_time_s,time_per_clique_s,status";
}

std::string report_csv_row(const RunReport& r) {
  std::ostringstream row;
  row << r.dataset << ',' << r.kind << ',' << r.c << ',' << r.delta_base << ',' << r.delta_layers << ','
      << r.num_cliques << ',' << std::setprecision(6) << r.wall_time_s << ',' << r.time_per_clique_s << ','
      << r.status;
  return row.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate maximal isolated temporal cliques", "itc"};
  app.require_subcommand(1);

  RunOptions enumerate_opts, oracle_opts, compare_opts;
  auto* enumerate = app.add_subcommand("enumerate", "Run the fast enumerator");
  attach_run_options(*enumerate, enumerate_opts);
  enumerate->add_option("--format", enumerate_opts.format, "json, csv or text");
  enumerate->add_option("--out", enumerate_opts.out, "Write cliques here instead of stdout");
  enumerate->add_option("--report", enumerate_opts.report, "Append a run report row to this CSV");
  enumerate->add_option("--time-limit", enumerate_opts.time_limit, "Abort after this many seconds");
  enumerate->add_flag("--oracle", enumerate_opts.oracle, "Use the brute-force oracle (small instances only)");

  auto* oracle = app.add_subcommand("oracle", "Run the brute-force oracle");
  attach_run_options(*oracle, oracle_opts);
  oracle->add_option("--format", oracle_opts.format, "json, csv or text");
  oracle->add_option("--out", oracle_opts.out, "Write cliques here instead of stdout");
  oracle->add_option("--report", oracle_opts.report, "Append a run report row to this CSV");

  auto* compare = app.add_subcommand("compare", "Check the fast enumerator against the oracle");
  attach_run_options(*compare, compare_opts);
  compare->add_flag("--corrupt-fast-path", compare_opts.corrupt)->group("");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Sweep kind x c x delta and emit run reports as CSV");
  bench_opts.input.attach(*bench);
  bench->add_option("--kinds", bench_opts.kinds, "Isolation types")->delimiter(',');
  bench->add_option("--cs", bench_opts.cs, "Values of c")->delimiter(',');
  bench->add_option("--deltas", bench_opts.deltas, "Protocol delta values")->delimiter(',');
  bench->add_option("--out", bench_opts.out, "CSV output path (default stdout)");
  bench->add_option("--dataset", bench_opts.dataset, "Dataset id for the report rows");
  bench->add_option("--threads", bench_opts.threads, "Worker threads (0 = all cores)");
  bench->add_option("--time-limit", bench_opts.time_limit, "Per-cell limit in seconds");
  bench->add_flag("--oracle", bench_opts.oracle, "Use the brute-force oracle");

  std::vector<std::string> argv_storage{"itc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_run(enumerate_opts, enumerate_opts.oracle, out, err);
    if (*oracle) return cmd_run(oracle_opts, true, out, err);
    if (*compare) return cmd_compare(compare_opts, out, err);
    if (*bench) return cmd_bench(bench_opts, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace itc::cli
