#pragma once

#include <cstdint>
#include <string>

namespace korselt {

// Signed 128-bit integer. Prime inputs are capped at 2^31 - 1, so every
// intermediate this library forms (all bounded by pq * (p + q)) is exact.
using Wide = __int128;

constexpr Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

// Floor quotient; built-in '/' truncates toward zero.
constexpr Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// Remainder in [0, |b|).
constexpr Wide euclid_mod(Wide a, Wide b) {
  Wide r = a % b;
  if (r < 0) r += wide_abs(b);
  return r;
}

std::string to_string(Wide v);

}  // namespace korselt
