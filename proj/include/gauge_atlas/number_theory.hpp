#pragma once

#include <cstdint>
#include <optional>

#include "gauge_atlas/error.hpp"

namespace gauge_atlas {

/// Representative of `a` in [0, n).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  const std::int64_t m = a % n;
  return m < 0 ? m + n : m;
}

/// Bezout data: a*x + b*y == g with g = gcd(a, b) >= 0.
struct BezoutResult {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

constexpr BezoutResult extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

/// m in [0, n) with a*m == 1 (mod n), if gcd(a, n) == 1.
constexpr std::optional<std::int64_t> modular_inverse(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  if (n == 1) return 0;
  const auto [g, x, y] = extended_gcd(mod(a, n), n);
  (void)y;
  if (g != 1) return std::nullopt;
  return mod(x, n);
}

}  // namespace gauge_atlas
