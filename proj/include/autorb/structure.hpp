#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "autorb/config.hpp"
#include "autorb/constructions.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"

namespace autorb {

/// Conjugacy classes as sorted index sets, ordered by smallest member.
struct ConjClassSet {
  std::vector<std::vector<elem_t>> classes;
  std::vector<std::size_t>         class_of;

  std::size_t max_length() const {
    std::size_t m = 0;
    for (auto const& c : classes) {
      m = std::max(m, c.size());
    }
    return m;
  }
};

inline Subgroup centralizer(GroupTable const& G, elem_t g) {
  std::vector<elem_t> members;
  for (elem_t x = 0; x < G.order(); ++x) {
    if (G.mul(g, x) == G.mul(x, g)) {
      members.push_back(x);
    }
  }
  return Subgroup(G.order(), std::move(members));
}

inline Subgroup center(GroupTable const& G) {
  std::vector<elem_t> members;
  for (elem_t z = 0; z < G.order(); ++z) {
    bool central = true;
    for (elem_t x = 0; x < G.order() && central; ++x) {
      central = G.mul(z, x) == G.mul(x, z);
    }
    if (central) {
      members.push_back(z);
    }
  }
  return Subgroup(G.order(), std::move(members));
}

// Subgroup generated by a set of elements given as a mask.
inline Subgroup generate_from_set(GroupTable const& G,
                                  std::vector<bool> const& set) {
  std::vector<elem_t> gens;
  for (elem_t g = 1; g < G.order(); ++g) {
    if (set[g]) {
      gens.push_back(g);
    }
  }
  // Growing a generating subset greedily keeps the closure cheap.
  std::vector<elem_t> used;
  Subgroup            H = trivial_subgroup(G);
  for (elem_t g : gens) {
    if (!H.contains(g)) {
      used.push_back(g);
      H = generate(G, std::span<elem_t const>(used));
    }
  }
  return H;
}

/// [H, K] = < [h,k] : h in H, k in K >.
inline Subgroup commutator_of(GroupTable const& G, Subgroup const& H,
                              Subgroup const& K) {
  std::vector<bool> set(G.order(), false);
  for (elem_t h : H.members()) {
    for (elem_t k : K.members()) {
      set[G.comm(h, k)] = true;
    }
  }
  return generate_from_set(G, set);
}

inline Subgroup commutator_subgroup(GroupTable const& G) {
  Subgroup all = whole_group(G);
  return commutator_of(G, all, all);
}

inline ConjClassSet conjugacy_classes(GroupTable const& G) {
  ConjClassSet out;
  out.class_of.assign(G.order(), static_cast<std::size_t>(-1));
  for (elem_t g = 0; g < G.order(); ++g) {
    if (out.class_of[g] != static_cast<std::size_t>(-1)) {
      continue;
    }
    std::size_t const   id = out.classes.size();
    std::vector<elem_t> cls;
    for (elem_t x = 0; x < G.order(); ++x) {
      elem_t c = G.conj(g, x);
      if (out.class_of[c] == static_cast<std::size_t>(-1)) {
        out.class_of[c] = id;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

/// Maximum conjugacy class length.
inline std::size_t mccl(GroupTable const& G) {
  return conjugacy_classes(G).max_length();
}

inline std::uint64_t exponent(GroupTable const& G) {
  std::uint64_t e = 1;
  for (elem_t g = 0; g < G.order(); ++g) {
    e = std::lcm(e, static_cast<std::uint64_t>(element_order(G, g)));
  }
  return e;
}

inline bool is_normal(GroupTable const& G, Subgroup const& N) {
  for (elem_t n : N.members()) {
    for (elem_t x = 0; x < G.order(); ++x) {
      if (!N.contains(G.conj(n, x))) {
        return false;
      }
    }
  }
  return true;
}

/// Derived series of H: H, H', H'', ... ending at the first repeat.
inline std::vector<Subgroup> derived_series(GroupTable const& G,
                                            Subgroup const&   H) {
  std::vector<Subgroup> series{H};
  while (true) {
    Subgroup next = commutator_of(G, series.back(), series.back());
    if (next.order() == series.back().order()) {
      return series;
    }
    series.push_back(std::move(next));
  }
}

inline bool is_solvable(GroupTable const& G, Subgroup const& H) {
  return derived_series(G, H).back().is_trivial();
}

inline bool is_solvable(GroupTable const& G) {
  return is_solvable(G, whole_group(G));
}

/// Lower central series G = g_1 > g_2 = [g_1, G] > ... until it stabilises.
inline std::vector<Subgroup> lower_central_series(GroupTable const& G) {
  Subgroup const        all = whole_group(G);
  std::vector<Subgroup> series{all};
  while (true) {
    Subgroup next = commutator_of(G, series.back(), all);
    if (next.order() == series.back().order()) {
      return series;
    }
    series.push_back(std::move(next));
  }
}

/// Nilpotency class, or nullopt when G is not nilpotent. The trivial group
/// has class 0.
inline std::optional<std::size_t> nilpotency_class(GroupTable const& G) {
  auto series = lower_central_series(G);
  if (!series.back().is_trivial()) {
    return std::nullopt;
  }
  return series.size() - 1;
}

inline bool is_nilpotent(GroupTable const& G) {
  return nilpotency_class(G).has_value();
}

/// All normal subgroups, found as subgroups generated by unions of conjugacy
/// classes. Sorted by order, then by member list.
inline std::vector<Subgroup> normal_subgroups(GroupTable const& G) {
  if (G.order() > limits::max_normal_enum) {
    throw size_limit_error("normal subgroup enumeration is capped at order "
                           + std::to_string(limits::max_normal_enum));
  }
  auto const            cc = conjugacy_classes(G);
  std::vector<Subgroup> found{trivial_subgroup(G)};
  std::set<std::vector<elem_t>> seen{found[0].members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& cls : cc.classes) {
      if (found[i].contains(cls.front())) {
        continue;
      }
      std::vector<bool> set = found[i].mask();
      for (elem_t c : cls) {
        set[c] = true;
      }
      Subgroup N = generate_from_set(G, set);
      if (seen.insert(N.members()).second) {
        found.push_back(std::move(N));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
    if (a.order() != b.order()) {
      return a.order() < b.order();
    }
    return a.members() < b.members();
  });
  return found;
}

/// Largest solvable normal subgroup.
inline Subgroup solvable_radical(GroupTable const& G) {
  Subgroup best = trivial_subgroup(G);
  for (auto const& N : normal_subgroups(G)) {
    if (N.order() > best.order() && is_solvable(G, N)) {
      best = N;
    }
  }
  return best;
}

inline std::vector<Subgroup> minimal_normal_subgroups(GroupTable const& G) {
  auto const            all = normal_subgroups(G);
  std::vector<Subgroup> out;
  for (auto const& N : all) {
    if (N.is_trivial()) {
      continue;
    }
    bool minimal = true;
    for (auto const& M : all) {
      if (!M.is_trivial() && M.order() < N.order() && M.is_subset_of(N)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(N);
    }
  }
  return out;
}

/// Product of all minimal normal subgroups.
inline Subgroup socle(GroupTable const& G) {
  std::vector<bool> set(G.order(), false);
  set[0] = true;
  for (auto const& N : minimal_normal_subgroups(G)) {
    for (elem_t g : N.members()) {
      set[g] = true;
    }
  }
  return generate_from_set(G, set);
}

/// A Sylow p-subgroup, grown greedily by adjoining p-elements (in index
/// order) while the join stays a p-group.
inline Subgroup sylow(GroupTable const& G, std::uint64_t p) {
  if (!is_prime(p)) {
    throw input_error("sylow: " + std::to_string(p) + " is not prime");
  }
  std::uint64_t const target = prime_part(G.order(), p);
  std::vector<elem_t> gens;
  Subgroup            P = trivial_subgroup(G);
  auto const          orders = element_orders(G);
  bool                grew   = true;
  while (P.order() < target && grew) {
    grew = false;
    for (elem_t x = 1; x < G.order(); ++x) {
      if (P.contains(x) || log_exact(orders[x], p) < 0) {
        continue;
      }
      gens.push_back(x);
      Subgroup Q = generate(G, std::span<elem_t const>(gens));
      if (log_exact(Q.order(), p) >= 0) {
        P    = std::move(Q);
        grew = true;
        break;
      }
      gens.pop_back();
    }
  }
  return P;
}

/// A quotient G/N together with the projection map. Cosets are numbered by
/// their smallest member, so the identity coset has index 0.
struct Quotient {
  GroupTable          group;
  std::vector<elem_t> projection;
  std::vector<elem_t> representative;
};

inline Quotient quotient(GroupTable const& G, Subgroup const& N) {
  if (!is_normal(G, N)) {
    throw input_error("quotient by a non-normal subgroup");
  }
  Quotient out;
  out.projection.assign(G.order(), no_elem);
  for (elem_t g = 0; g < G.order(); ++g) {
    if (out.projection[g] != no_elem) {
      continue;
    }
    elem_t id = static_cast<elem_t>(out.representative.size());
    out.representative.push_back(g);
    for (elem_t n : N.members()) {
      out.projection[G.mul(g, n)] = id;
    }
  }
  std::size_t const   k = out.representative.size();
  std::vector<elem_t> mul(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = G.label(out.representative[a]) + "N";
    for (std::size_t b = 0; b < k; ++b) {
      mul[a * k + b] = out.projection[G.mul(out.representative[a],
                                            out.representative[b])];
    }
  }
  out.group = GroupTable::from_table(k, std::move(mul), std::move(labels));
  return out;
}

/// A subgroup as a standalone group; `embedding[i]` is the parent index of
/// element i (identity first, then members in increasing order).
struct SubgroupTable {
  GroupTable          group;
  std::vector<elem_t> embedding;
};

inline SubgroupTable subgroup_table(GroupTable const& G, Subgroup const& H) {
  SubgroupTable       out;
  out.embedding = H.members();
  std::vector<elem_t> local(G.order(), no_elem);
  for (std::size_t i = 0; i < out.embedding.size(); ++i) {
    local[out.embedding[i]] = static_cast<elem_t>(i);
  }
  std::size_t const        k = out.embedding.size();
  std::vector<elem_t>      mul(k * k);
  std::vector<std::string> labels(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels[a] = G.label(out.embedding[a]);
    for (std::size_t b = 0; b < k; ++b) {
      elem_t v = local[G.mul(out.embedding[a], out.embedding[b])];
      if (v == no_elem) {
        throw input_error("subgroup is not closed under multiplication");
      }
      mul[a * k + b] = v;
    }
  }
  out.group = GroupTable::from_table(k, std::move(mul), std::move(labels));
  return out;
}

/// Invariant factors of an abelian group, split by prime (primes ascending,
/// exponents nondecreasing).
inline std::vector<AbelianType> abelian_invariants(GroupTable const& G) {
  if (!G.is_abelian()) {
    throw input_error("abelian_invariants needs an abelian group");
  }
  std::vector<AbelianType> out;
  auto const               orders = element_orders(G);
  for (auto [p, mult] : factorize(G.order())) {
    // omega[k] = #{g : g^(p^k) = 1}
    std::vector<std::uint64_t> omega;
    for (unsigned k = 0; k <= mult; ++k) {
      std::uint64_t pk    = checked_pow(p, k);
      std::uint64_t count = 0;
      for (auto o : orders) {
        if (pk % o == 0) {
          ++count;
        }
      }
      omega.push_back(count);
    }
    // Number of cyclic factors of exponent >= k is log_p(omega[k]/omega[k-1]).
    std::vector<unsigned> at_least(mult + 2, 0);
    for (unsigned k = 1; k <= mult; ++k) {
      at_least[k] = static_cast<unsigned>(log_exact(omega[k] / omega[k - 1], p));
    }
    AbelianType t;
    t.prime = p;
    for (unsigned k = mult; k >= 1; --k) {
      unsigned exactly = at_least[k] - at_least[k + 1];
      for (unsigned i = 0; i < exactly; ++i) {
        t.exponents.push_back(k);
      }
    }
    std::sort(t.exponents.begin(), t.exponents.end());
    out.push_back(std::move(t));
  }
  return out;
}

/// Smallest generating set size d(G) and a witness tuple.
struct GeneratorResult {
  std::size_t         d = 0;
  std::vector<elem_t> tuple;
};

namespace detail {

// p-groups: d(G) = dim G/Phi(G) with Phi(G) = G' G^p (Burnside basis
// theorem). Witness: scan elements in index order, keep any element outside
// <Phi(G), chosen so far>.
inline GeneratorResult min_generators_pgroup(GroupTable const& G,
                                             std::uint64_t     p) {
  Subgroup const    derived = commutator_subgroup(G);
  std::vector<bool> set     = derived.mask();
  for (elem_t g = 0; g < G.order(); ++g) {
    set[G.pow(g, static_cast<std::int64_t>(p))] = true;
  }
  Subgroup const      frattini = generate_from_set(G, set);
  std::vector<elem_t> gens(frattini.members().begin(),
                           frattini.members().end());
  GeneratorResult     out;
  Subgroup            H = frattini;
  for (elem_t g = 1; g < G.order() && H.order() < G.order(); ++g) {
    if (!H.contains(g)) {
      out.tuple.push_back(g);
      gens.push_back(g);
      H = generate(G, std::span<elem_t const>(gens));
    }
  }
  out.d = out.tuple.size();
  return out;
}

}  // namespace detail

/// d(G) with a witness.
///
/// General groups: breadth-first search over the distinct subgroups generated
/// by k-tuples, k = 0, 1, ...; tuples are extended in element index order and
/// the first tuple reaching each subgroup is kept, so the witness is
/// deterministic. Groups of prime-power order use the Burnside basis theorem.
inline GeneratorResult min_generators(GroupTable const& G) {
  if (G.order() > limits::max_order) {
    throw size_limit_error("min_generators: order exceeds cap");
  }
  if (G.order() == 1) {
    return {};
  }
  auto const f = factorize(G.order());
  if (f.size() == 1) {
    return detail::min_generators_pgroup(G, f[0].first);
  }
  std::vector<std::pair<Subgroup, std::vector<elem_t>>> frontier{
      {trivial_subgroup(G), {}}};
  while (true) {
    std::vector<std::pair<Subgroup, std::vector<elem_t>>> next;
    std::set<std::vector<bool>>                            seen;
    std::optional<std::vector<elem_t>>                     best;
    for (auto const& [H, tuple] : frontier) {
      for (elem_t g = 1; g < G.order(); ++g) {
        if (H.contains(g)) {
          continue;
        }
        std::vector<elem_t> t = tuple;
        t.push_back(g);
        Subgroup K = generate(G, std::span<elem_t const>(t));
        if (K.order() == G.order()) {
          if (!best || t < *best) {
            best = t;
          }
          continue;
        }
        if (seen.insert(K.mask()).second) {
          next.emplace_back(std::move(K), std::move(t));
        }
      }
    }
    if (best) {
      return {best->size(), *best};
    }
    frontier = std::move(next);
  }
}

inline std::size_t rank(GroupTable const& G) { return min_generators(G).d; }

}  // namespace autorb
