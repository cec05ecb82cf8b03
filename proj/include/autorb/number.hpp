#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autorb/errors.hpp"

namespace autorb {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit overflow in exact arithmetic");
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs in
/// increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(
    std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      unsigned k = 0;
      while (m % p == 0) {
        m /= p;
        ++k;
      }
      out.emplace_back(p, k);
    }
  }
  if (m > 1) {
    out.emplace_back(m, 1);
  }
  return out;
}

inline bool is_prime(std::uint64_t m) {
  if (m < 2) {
    return false;
  }
  auto f = factorize(m);
  return f.size() == 1 && f[0].second == 1;
}

// Inputs up to 10^9 are supported (trial factorization).
inline std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) {
    throw input_error("euler_phi is defined for positive integers only");
  }
  if (m > 1'000'000'000ULL) {
    throw size_limit_error("euler_phi input exceeds 10^9");
  }
  std::uint64_t result = m;
  for (auto [p, k] : factorize(m)) {
    result = result / p * (p - 1);
  }
  return result;
}

// p-part of m.
inline std::uint64_t prime_part(std::uint64_t m, std::uint64_t p) {
  std::uint64_t r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

// Returns k with p^k == m, or -1 if m is not a power of p.
inline int log_exact(std::uint64_t m, std::uint64_t p) {
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return m == 1 ? k : -1;
}

inline bool is_prime_power(std::uint64_t m) {
  return m > 1 && factorize(m).size() == 1;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace autorb
