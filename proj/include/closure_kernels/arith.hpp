#pragma once

#include <cstdint>
#include <limits>

namespace ck {

// Saturating unsigned arithmetic for explicit size bounds. A saturated value
// means "at least 2^64 - 1", which is still a valid (if useless) upper bound.
inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

constexpr std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

// C(n, r), saturating. Exact whenever the true value fits.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

constexpr std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

// sum_{i=0}^{upto} C(n, i)
constexpr std::uint64_t binomial_prefix_sum(std::uint64_t n, std::uint64_t upto) {
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= upto && i <= n; ++i) s = sat_add(s, binomial(n, i));
  return s;
}

}  // namespace ck
