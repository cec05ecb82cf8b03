#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "autorb/config.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"

namespace autorb {

/// A bijection on element indices that respects multiplication.
///
/// The constructor only checks that `perm` is a bijection fixing 0; use
/// `is_automorphism` to check the homomorphism property.
class Automorphism {
 public:
  Automorphism() = default;

  explicit Automorphism(std::vector<elem_t> perm) : perm_(std::move(perm)) {
    std::vector<bool> hit(perm_.size(), false);
    for (elem_t v : perm_) {
      if (v >= perm_.size() || hit[v]) {
        throw input_error("automorphism map is not a bijection");
      }
      hit[v] = true;
    }
    if (!perm_.empty() && perm_[0] != 0) {
      throw input_error("automorphism map must fix the identity");
    }
  }

  static Automorphism identity(std::size_t n) {
    std::vector<elem_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<elem_t>(i);
    }
    return Automorphism(std::move(p));
  }

  elem_t operator()(elem_t g) const { return perm_[g]; }

  std::vector<elem_t> const& perm() const noexcept { return perm_; }
  std::size_t                size() const noexcept { return perm_.size(); }

  // Apply *this first, then `other`.
  Automorphism then(Automorphism const& other) const {
    std::vector<elem_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      p[i] = other.perm_[perm_[i]];
    }
    Automorphism r;
    r.perm_ = std::move(p);
    return r;
  }

  Automorphism inverse() const {
    std::vector<elem_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      p[perm_[i]] = static_cast<elem_t>(i);
    }
    Automorphism r;
    r.perm_ = std::move(p);
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (perm_[i] != i) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(Automorphism const&, Automorphism const&) = default;
  friend auto operator<=>(Automorphism const& a, Automorphism const& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  std::vector<elem_t> perm_;
};

struct AutomorphismHash {
  std::size_t operator()(Automorphism const& a) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : a.perm()) {
      h = (h ^ v) * 1099511628211ULL;
    }
    return h;
  }
};

/// True iff `map` is a bijection of G fixing 0 with map(gh) = map(g)map(h).
///
/// Checked on all pairs for |G| <= limits::max_full_aut_list; above that on
/// all pairs (g, s) with s from a generating set, which is equivalent, plus
/// random pairs.
inline bool is_automorphism(GroupTable const& G, std::span<elem_t const> map) {
  std::size_t const n = G.order();
  if (map.size() != n || map[0] != 0) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (elem_t v : map) {
    if (v >= n || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  if (n <= limits::max_full_aut_list) {
    for (elem_t a = 0; a < n; ++a) {
      for (elem_t b = 0; b < n; ++b) {
        if (map[G.mul(a, b)] != G.mul(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }
  for (elem_t s : greedy_generators(G)) {
    for (elem_t a = 0; a < n; ++a) {
      if (map[G.mul(a, s)] != G.mul(map[a], map[s])) {
        return false;
      }
    }
  }
  std::mt19937_64                       rng(0xa07);
  std::uniform_int_distribution<elem_t> pick(0, static_cast<elem_t>(n - 1));
  for (std::size_t i = 0; i < limits::random_assoc_samples; ++i) {
    elem_t a = pick(rng);
    elem_t b = pick(rng);
    if (map[G.mul(a, b)] != G.mul(map[a], map[b])) {
      return false;
    }
  }
  return true;
}

inline bool is_automorphism(GroupTable const& G, Automorphism const& a) {
  return is_automorphism(G, std::span<elem_t const>(a.perm()));
}

}  // namespace autorb
