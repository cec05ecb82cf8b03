#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "autorb/config.hpp"
#include "autorb/constructions.hpp"
#include "autorb/errors.hpp"
#include "autorb/number.hpp"

namespace autorb {

using real = boost::multiprecision::cpp_dec_float_50;

/// Exact |Aut(P)| for P = Z/p^e_1 x ... x Z/p^e_n (e nondecreasing):
///   prod_k (p^d_k - p^(k-1)) * prod_j p^(e_j (n - d_j)) * prod_i p^((e_i - 1)(n - c_i + 1))
/// with d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k} (1-based).
inline std::uint64_t hillar_rhea_aut_order(AbelianType const& t) {
  t.validate();
  auto const&       e = t.exponents;
  std::size_t const n = e.size();
  std::uint64_t const p = t.prime;
  std::vector<std::size_t> d(n), c(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = k, hi = k;
    while (lo > 0 && e[lo - 1] == e[k]) {
      --lo;
    }
    while (hi + 1 < n && e[hi + 1] == e[k]) {
      ++hi;
    }
    d[k] = hi + 1;
    c[k] = lo + 1;
  }
  std::uint64_t result = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    result = checked_mul(result, checked_pow(p, d[k - 1]) - checked_pow(p, k - 1));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    result = checked_mul(result, checked_pow(p, e[j - 1] * (n - d[j - 1])));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    result = checked_mul(
        result, checked_pow(p, (e[i - 1] - 1) * (n - c[i - 1] + 1)));
  }
  return result;
}

/// max{p - 1, p^(e_n - 1)}, a lower bound for |Aut(P)|, P nontrivial.
inline std::uint64_t hr_lower_bound(AbelianType const& t) {
  t.validate();
  if (t.exponents.empty()) {
    throw input_error("hr_lower_bound needs a nontrivial p-group");
  }
  return std::max<std::uint64_t>(t.prime - 1,
                                 checked_pow(t.prime, t.exponents.back() - 1));
}

/// l^((7 + log l) / 2): bounds |G'| when every conjugacy class has length
/// at most l.
inline real gm_commutator_bound(real const& l) {
  if (l < 1) {
    throw input_error("gm_commutator_bound needs l >= 1");
  }
  real const L = boost::multiprecision::log(l);
  return boost::multiprecision::exp((7 + L) * L / 2);
}

/// Natural log of n^(log n / log 2), the upper bound on |Aut(G)| for |G| = n.
inline real log_aut_order_upper_bound(std::uint64_t n) {
  if (n == 0) {
    throw input_error("group order must be positive");
  }
  real const L = boost::multiprecision::log(real(n));
  return L * L / boost::multiprecision::log(real(2));
}

inline real aut_order_upper_bound(std::uint64_t n) {
  return boost::multiprecision::exp(log_aut_order_upper_bound(n));
}

// ---------------------------------------------------------------------------
// First Chebyshev function

namespace detail {

// Unevaluated sum hi + lo (double-double) with TwoSum accumulation.
struct DoubleDouble {
  double hi = 0;
  double lo = 0;

  void add(double x) {
    double s  = hi + x;
    double bp = s - hi;
    double e  = (hi - (s - bp)) + (x - bp);
    hi        = s;
    lo += e;
    double t = hi + lo;
    lo       = lo - (t - hi);
    hi       = t;
  }
};

inline std::vector<bool> prime_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!composite[p]) {
      for (std::uint64_t q = p * p; q <= limit; q += p) {
        composite[q] = true;
      }
    }
  }
  std::vector<bool> prime(limit + 1, false);
  for (std::uint64_t m = 2; m <= limit; ++m) {
    prime[m] = !composite[m];
  }
  return prime;
}

inline double log_hi_precision(std::uint64_t p, double& lo) {
  long double l  = std::log(static_cast<long double>(p));
  double      hi = static_cast<double>(l);
  lo             = static_cast<double>(l - hi);
  return hi;
}

}  // namespace detail

/// theta(x) = sum of log p over primes p <= x.
inline real chebyshev_theta(double x) {
  if (x < 2) {
    return real(0);
  }
  if (x > static_cast<double>(limits::max_sieve)) {
    throw size_limit_error("chebyshev_theta sieve range exceeded");
  }
  auto const            limit = static_cast<std::uint64_t>(std::floor(x));
  auto const            prime = detail::prime_sieve(limit);
  detail::DoubleDouble  acc;
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (prime[m]) {
      double lo = 0;
      acc.add(detail::log_hi_precision(m, lo));
      acc.add(lo);
    }
  }
  return real(acc.hi) + real(acc.lo);
}

struct ThetaCheck {
  std::uint64_t x_max       = 0;
  bool          pass        = true;
  bool          monotone    = true;
  double        worst_ratio = 0;  // max theta(x)/x over the range
  std::uint64_t worst_x     = 0;
  std::uint64_t violations  = 0;
};

/// Checks theta(x) < 1.01624 x for every integer 1 <= x <= x_max.
inline ThetaCheck check_rosser_schoenfeld(std::uint64_t x_max) {
  if (x_max > limits::max_sieve) {
    throw size_limit_error("check_rosser_schoenfeld sieve range exceeded");
  }
  ThetaCheck           out;
  out.x_max            = x_max;
  auto const           prime = detail::prime_sieve(std::max<std::uint64_t>(x_max, 2));
  detail::DoubleDouble acc;
  double               previous = 0;
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    if (prime[x]) {
      double lo = 0;
      acc.add(detail::log_hi_precision(x, lo));
      acc.add(lo);
    }
    double theta = acc.hi + acc.lo;
    if (theta < previous) {
      out.monotone = false;
    }
    previous = theta;
    // Compare theta against 1.01624 x exactly enough: both sides carry
    // relative error ~1e-15, far below the gap.
    double bound = 1.01624 * static_cast<double>(x);
    if (!(theta < bound)) {
      ++out.violations;
      out.pass = false;
    }
    double ratio = theta / static_cast<double>(x);
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_x     = x;
    }
  }
  out.pass = out.pass && out.monotone;
  return out;
}

// ---------------------------------------------------------------------------
// Bound on log|G| for d-generated G with maol(G) <= c

struct BoundReport {
  std::uint64_t c = 1;
  std::uint64_t d = 1;
  real          log_A;            // log A(c,d)
  real          log_order_bound;  // bound on log|G| (may be astronomically large)
  real          log_log_order_bound;
  // A(c,d) rounded to an integer when A(c,d) < 1e18.
  std::optional<std::uint64_t> A_rounded;

  /// True iff log(order) <= log_order_bound.
  bool admits(std::uint64_t order) const {
    if (order <= 1) {
      return true;
    }
    real const lg = boost::multiprecision::log(real(order));
    return boost::multiprecision::log(lg) <= log_log_order_bound;
  }
};

/// Evaluates, for c, d >= 1,
///   A(c,d) = c^(d + (7 + log c)/2 * (C(d,2) + d (7 + log c) log c / (2 log 2)))
///   bound  = 1.01624 d (A + 1)(log A / log 2 + 1) + (7 + log c) log c / 2
/// entirely in log space so that huge A(c,d) never overflows.
inline BoundReport maol_order_bound(std::uint64_t c, std::uint64_t d) {
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::log1p;
  if (c < 1 || d < 1) {
    throw input_error("maol_order_bound needs c, d >= 1");
  }
  real const L    = log(real(c));
  real const lg2  = log(real(2));
  real const D    = real(d);
  real const pair = D * (D - 1) / 2;
  BoundReport r;
  r.c     = c;
  r.d     = d;
  r.log_A = (D + (7 + L) / 2 * (pair + D * (7 + L) * L / (2 * lg2))) * L;

  // log(A + 1) = log A + log1p(exp(-log A)), valid since log A >= 0.
  real const log_A_plus_1 = r.log_A + log1p(exp(-r.log_A));
  real const log_main     = log(real(1.01624) * D) + log_A_plus_1
                        + log(r.log_A / lg2 + 1);
  real const tail = (7 + L) * L / 2;
  // log(main + tail) = log_main + log1p(tail / main)
  r.log_log_order_bound = log_main + log1p(tail * exp(-log_main));
  r.log_order_bound     = exp(r.log_log_order_bound);
  if (r.log_A < log(real(1e18))) {
    r.A_rounded = static_cast<std::uint64_t>(
        boost::multiprecision::round(exp(r.log_A)));
  }
  return r;
}

}  // namespace autorb
