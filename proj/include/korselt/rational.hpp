#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "korselt/wide.hpp"

namespace korselt {

// Canonical fraction: den >= 1 and gcd(|num|, den) == 1; zero is 0/1.
// The sign lives in the numerator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Wide num, Wide den);  // canonicalizes; throws on den == 0

  // Caller guarantees the pair is already canonical.
  static Rational from_canonical(Wide num, Wide den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  Wide num() const { return num_; }
  Wide den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const;  // "3/2", integers without the denominator

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Wide num_ = 0;
  Wide den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Accepts "a/b" or a bare integer; throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace korselt
