#include "korselt/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace korselt {

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = std::gcd(wide_abs(num), den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide qa = floor_div(a.num_, a.den_);
  const Wide qb = floor_div(b.num_, b.den_);
  if (qa != qb) return qa < qb ? std::strong_ordering::less : std::strong_ordering::greater;
  // Remainders are < den, so the cross products stay inside Wide for every
  // value an admissible pair can produce.
  const Wide ra = a.num_ - qa * a.den_;
  const Wide rb = b.num_ - qb * b.den_;
  const Wide lhs = ra * b.den_;
  const Wide rhs = rb * a.den_;
  if (lhs == rhs) return std::strong_ordering::equal;
  return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace korselt
