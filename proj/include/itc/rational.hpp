#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace itc {

/// Exact positive rational used for the isolation parameter c.
///
/// Every isolation test is a strict inequality against a multiple of c, so
/// comparisons are done by cross-multiplication in 128-bit integers.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "3", "1.5", "0.001" or "1/6".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// True iff value < c * factor.
  bool scaled_exceeds(std::int64_t value, std::int64_t factor) const;
  /// True iff value >= offset + c.
  bool reached_by(std::int64_t value, std::int64_t offset) const;

  /// floor(x - c) and floor(x + c) for integer x.
  std::int64_t floor_minus(std::int64_t x) const;
  std::int64_t floor_plus(std::int64_t x) const;

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& l, const Rational& r) {
    return static_cast<__int128>(l.num_) * r.den_ < static_cast<__int128>(r.num_) * l.den_;
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace itc
