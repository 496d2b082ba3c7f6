#include "itc/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace itc {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text), 1);

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.size() > 17 || (int_part.empty() && frac_part.empty()) ||
      frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  std::int64_t whole = 0;
  if (!int_part.empty() && int_part != "-") whole = parse_int(int_part, text);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
  std::int64_t magnitude = (whole < 0 ? -whole : whole) * den + frac;
  return Rational(negative ? -magnitude : magnitude, den);
}

bool Rational::scaled_exceeds(std::int64_t value, std::int64_t factor) const {
  return static_cast<__int128>(value) * den_ < static_cast<__int128>(num_) * factor;
}

bool Rational::reached_by(std::int64_t value, std::int64_t offset) const {
  return static_cast<__int128>(value - offset) * den_ >= num_;
}

std::int64_t Rational::floor_minus(std::int64_t x) const { return floor_div(x * den_ - num_, den_); }

std::int64_t Rational::floor_plus(std::int64_t x) const { return floor_div(x * den_ + num_, den_); }

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // Exact decimal when the denominator only has factors 2 and 5.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = num_ * (scale / den_);
  std::string frac = std::to_string((scaled < 0 ? -scaled : scaled) % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string whole = std::to_string((scaled < 0 ? -scaled : scaled) / scale);
  return (scaled < 0 ? "-" : "") + whole + "." + frac;
}

}  // namespace itc
