#pragma once

// Slow reference computations that share no code with the search engine.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "autorb/group_table.hpp"

namespace oracle {

using autorb::elem_t;
using autorb::GroupTable;

inline bool is_hom(GroupTable const& G, std::vector<elem_t> const& f) {
  for (elem_t a = 0; a < G.order(); ++a) {
    for (elem_t b = 0; b < G.order(); ++b) {
      if (f[G.mul(a, b)] != G.mul(f[a], f[b])) {
        return false;
      }
    }
  }
  return true;
}

/// Every automorphism, found by trying all bijections fixing the identity.
inline std::vector<std::vector<elem_t>> automorphisms_by_bijections(
    GroupTable const& G) {
  std::vector<elem_t> f(G.order());
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<elem_t>> out;
  do {
    if (is_hom(G, f)) {
      out.push_back(f);
    }
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return out;
}

/// Automorphisms by trying every image pair for a generating pair (x, y);
/// each candidate map is spelled out along shortest words and then tested
/// on all pairs.
inline std::vector<std::vector<elem_t>> automorphisms_by_pairs(
    GroupTable const& G, elem_t x, elem_t y) {
  std::size_t const n = G.order();
  std::vector<std::vector<elem_t>> out;
  for (elem_t u = 0; u < n; ++u) {
    for (elem_t v = 0; v < n; ++v) {
      std::vector<elem_t> f(n, autorb::no_elem);
      std::vector<elem_t> queue{0};
      f[0] = 0;
      bool ok = true;
      for (std::size_t i = 0; i < queue.size() && ok; ++i) {
        elem_t g = queue[i];
        for (auto [s, t] : {std::pair{x, u}, std::pair{y, v}}) {
          elem_t h  = G.mul(g, s);
          elem_t fh = G.mul(f[g], t);
          if (f[h] == autorb::no_elem) {
            f[h] = fh;
            queue.push_back(h);
          } else if (f[h] != fh) {
            ok = false;
          }
        }
      }
      if (!ok || queue.size() != n) {
        continue;
      }
      std::set<elem_t> image(f.begin(), f.end());
      if (image.size() == n && is_hom(G, f)) {
        out.push_back(f);
      }
    }
  }
  return out;
}

/// Sorted orbit lengths of a list of permutations of 0..n-1 closed under
/// composition.
inline std::vector<std::size_t> orbit_lengths(
    std::vector<std::vector<elem_t>> const& auts, std::size_t n) {
  std::vector<std::size_t> out;
  std::vector<bool>        done(n, false);
  for (elem_t g = 0; g < n; ++g) {
    if (done[g]) {
      continue;
    }
    std::set<elem_t> orbit;
    for (auto const& a : auts) {
      orbit.insert(a[g]);
    }
    for (elem_t h : orbit) {
      done[h] = true;
    }
    out.push_back(orbit.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// |GL(d, p)| by counting invertible matrices (Gaussian elimination mod p).
inline std::uint64_t count_gl(int d, int p) {
  int const     entries = d * d;
  std::uint64_t total   = 1;
  for (int i = 0; i < entries; ++i) {
    total *= p;
  }
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::vector<int>> m(d, std::vector<int>(d));
    std::uint64_t                 c = code;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        m[i][j] = static_cast<int>(c % p);
        c /= p;
      }
    }
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
      int piv = -1;
      for (int r = rank; r < d; ++r) {
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      int inv = 1;
      while (m[rank][col] * inv % p != 1) {
        ++inv;
      }
      for (int r = 0; r < d; ++r) {
        if (r != rank && m[r][col] != 0) {
          int f = m[r][col] * inv % p;
          for (int k = 0; k < d; ++k) {
            m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
          }
        }
      }
      ++rank;
    }
    count += rank == d;
  }
  return count;
}

/// Conjugacy-class sizes of Sym(n) from cycle types: n! / prod k^m_k m_k!.
inline std::vector<std::uint64_t> symmetric_class_sizes(int n) {
  std::vector<std::uint64_t> out;
  std::uint64_t              nfact = 1;
  for (int i = 2; i <= n; ++i) {
    nfact *= i;
  }
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      std::uint64_t denom = 1;
      for (int k = 1; k <= n; ++k) {
        int m = static_cast<int>(std::count(parts.begin(), parts.end(), k));
        for (int i = 0; i < m; ++i) {
          denom *= k;
        }
        for (int i = 2; i <= m; ++i) {
          denom *= i;
        }
      }
      out.push_back(nfact / denom);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      parts.push_back(k);
      self(self, left - k, k);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// theta(x) by trial division and long double summation.
inline long double theta_naive(std::uint64_t x) {
  long double s = 0;
  for (std::uint64_t m = 2; m <= x; ++m) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      s += std::log(static_cast<long double>(m));
    }
  }
  return s;
}

}  // namespace oracle
