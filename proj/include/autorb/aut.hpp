#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "autorb/automorphism.hpp"
#include "autorb/config.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"
#include "autorb/structure.hpp"

namespace autorb {

/// Cheap invariants that any isomorphism preserves; used to restrict the
/// candidate images of each generator.
struct ElementKey {
  elem_t      order          = 1;
  std::size_t class_size     = 1;
  std::size_t centralizer    = 1;
  elem_t      quotient_order = 1;  // order of the image in G/G'

  friend auto operator<=>(ElementKey const&, ElementKey const&) = default;
};

inline std::vector<ElementKey> element_keys(GroupTable const& G) {
  auto const          cc     = conjugacy_classes(G);
  auto const          orders = element_orders(G);
  Quotient const      ab     = quotient(G, commutator_subgroup(G));
  std::vector<elem_t> ab_orders = element_orders(ab.group);
  std::vector<ElementKey> keys(G.order());
  for (elem_t g = 0; g < G.order(); ++g) {
    std::size_t cls = cc.classes[cc.class_of[g]].size();
    keys[g]         = {orders[g], cls, G.order() / cls,
                       ab_orders[ab.projection[g]]};
  }
  return keys;
}

/// Backtracking search for homomorphisms src -> dst determined by the images
/// of a generating tuple of src.
///
/// Generator images are assigned one level at a time. After each assignment
/// the partial map is extended over the subgroup generated so far by walking
/// Cayley-graph edges; any edge whose two routes disagree (or, for injective
/// searches, any collision) rejects the branch immediately. A completed map
/// that is consistent on every edge is a homomorphism.
///
/// The candidate lists of unassigned generators are filtered after every
/// assignment: a candidate c for gens[j] must satisfy c^2 = image(gens[j]^2)
/// and [c, image(gens[k])] = image([gens[j], gens[k]]) whenever the
/// right-hand side is already determined. An empty list prunes the branch.
class HomomorphismSearch {
 public:
  HomomorphismSearch(GroupTable const& src, std::vector<elem_t> gens,
                     GroupTable const&                dst,
                     std::vector<std::vector<elem_t>> candidates,
                     bool                             injective)
      : src_(src),
        dst_(dst),
        gens_(std::move(gens)),
        candidates_(std::move(candidates)),
        injective_(injective) {
    if (candidates_.size() != gens_.size()) {
      throw std::logic_error("one candidate list per generator expected");
    }
    std::size_t const n = gens_.size();
    square_.resize(n);
    comm_.assign(n, std::vector<elem_t>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      square_[j] = src_.mul(gens_[j], gens_[j]);
      for (std::size_t k = 0; k < n; ++k) {
        comm_[j][k] = src_.comm(gens_[j], gens_[k]);
      }
    }
  }

  /// Calls `found(map)` for every homomorphism extending the fixed images
  /// of the first prefix.size() generators; stops early when it returns
  /// true. Returns true iff stopped early.
  bool for_each(std::vector<elem_t> const&                              prefix,
                std::function<bool(std::vector<elem_t> const&)> const& found) {
    reset();
    for (std::size_t level = 0; level < prefix.size(); ++level) {
      if (!assign(level, prefix[level])) {
        return false;
      }
    }
    Lists lists;
    if (!refine(prefix.size(), candidates_, lists)) {
      return false;
    }
    return descend(prefix.size(), lists, found);
  }

  std::optional<std::vector<elem_t>> first(std::vector<elem_t> const& prefix) {
    std::optional<std::vector<elem_t>> out;
    for_each(prefix, [&](std::vector<elem_t> const& m) {
      out = m;
      return true;
    });
    return out;
  }

  std::size_t nodes_visited() const noexcept { return nodes_; }

 private:
  using Lists = std::vector<std::vector<elem_t>>;

  // Filters parent[j] for j >= level against the current partial map.
  bool refine(std::size_t level, Lists const& parent, Lists& out) const {
    out.assign(gens_.size(), {});
    for (std::size_t j = level; j < gens_.size(); ++j) {
      elem_t const fixed = img_[gens_[j]];
      elem_t const sq    = img_[square_[j]];
      for (elem_t c : parent[j]) {
        if ((fixed != no_elem && c != fixed)
            || (injective_ && fixed == no_elem && used_[c])
            || (sq != no_elem && dst_.mul(c, c) != sq)) {
          continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < level && ok; ++k) {
          elem_t const w = img_[comm_[j][k]];
          ok = w == no_elem || dst_.comm(c, gen_img_[k]) == w;
        }
        if (ok) {
          out[j].push_back(c);
        }
      }
      if (out[j].empty()) {
        return false;
      }
    }
    return true;
  }

  void reset() {
    img_.assign(src_.order(), no_elem);
    used_.assign(dst_.order(), 0);
    gen_img_.assign(gens_.size(), no_elem);
    domain_.assign(1, 0);
    img_[0]  = 0;
    used_[0] = 1;
  }

  // Extends the map with gens_[level] -> h. On failure the state is rolled
  // back and false is returned.
  bool assign(std::size_t level, elem_t h) {
    ++nodes_;
    std::size_t const old_size = domain_.size();
    gen_img_[level]            = h;
    auto fail = [&] {
      rollback(old_size);
      return false;
    };
    auto visit = [&](elem_t x, std::size_t j) {
      elem_t y  = src_.mul(x, gens_[j]);
      elem_t iy = dst_.mul(img_[x], gen_img_[j]);
      if (img_[y] == no_elem) {
        if (injective_ && used_[iy]) {
          return false;
        }
        img_[y] = iy;
        if (injective_) {
          used_[iy] = 1;
        }
        domain_.push_back(y);
        return true;
      }
      return img_[y] == iy;
    };
    for (std::size_t i = 0; i < old_size; ++i) {
      if (!visit(domain_[i], level)) {
        return fail();
      }
    }
    for (std::size_t i = old_size; i < domain_.size(); ++i) {
      for (std::size_t j = 0; j <= level; ++j) {
        if (!visit(domain_[i], j)) {
          return fail();
        }
      }
    }
    return true;
  }

  void rollback(std::size_t size) {
    while (domain_.size() > size) {
      elem_t y = domain_.back();
      domain_.pop_back();
      if (injective_) {
        used_[img_[y]] = 0;
      }
      img_[y] = no_elem;
    }
  }

  bool descend(std::size_t level, Lists const& lists,
               std::function<bool(std::vector<elem_t> const&)> const& found) {
    if (level == gens_.size()) {
      if (domain_.size() != src_.order()) {
        throw input_error("homomorphism search: tuple does not generate");
      }
      return found(img_);
    }
    Lists next;
    for (elem_t h : lists[level]) {
      std::size_t const old_size = domain_.size();
      if (!assign(level, h)) {
        continue;
      }
      bool stop = refine(level + 1, lists, next)
                  && descend(level + 1, next, found);
      rollback(old_size);
      if (stop) {
        return true;
      }
    }
    return false;
  }

  GroupTable const&                src_;
  GroupTable const&                dst_;
  std::vector<elem_t>              gens_;
  std::vector<std::vector<elem_t>> candidates_;
  bool                             injective_;
  std::vector<elem_t>              img_;
  std::vector<char>                used_;
  std::vector<elem_t>              gen_img_;
  std::vector<elem_t>              domain_;
  std::vector<elem_t>              square_;
  std::vector<std::vector<elem_t>> comm_;
  std::size_t                      nodes_ = 0;
};

/// Aut(G) as a generating set with its order.
///
/// `base` is the generating tuple of G whose images define automorphisms;
/// `orbit_sizes[i]` is the length of the orbit of base[i] under the
/// pointwise stabilizer of base[0..i), so |Aut(G)| is their product.
struct AutGroup {
  std::vector<elem_t>       base;
  std::vector<Automorphism> generators;
  std::vector<std::size_t>  orbit_sizes;
  std::uint64_t             order = 1;
};

namespace detail {

inline std::vector<elem_t> orbit_closure(
    std::vector<Automorphism> const& gens, elem_t start, std::size_t n) {
  std::vector<bool>   in(n, false);
  std::vector<elem_t> orbit{start};
  in[start] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const& a : gens) {
      elem_t y = a(orbit[i]);
      if (!in[y]) {
        in[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

}  // namespace detail

/// Computes Aut(G) by backtracking over images of the generating tuple
/// `base`, organised as a stabilizer chain.
///
/// Levels are processed from the last base element to the first. At level i
/// the orbit of base[i] under the pointwise stabilizer of base[0..i) is
/// grown by closing under the automorphisms found so far; every candidate
/// image (same ElementKey) not yet in the orbit triggers a search for one
/// automorphism fixing base[0..i) and sending base[i] there.
inline AutGroup automorphism_group(GroupTable const& G,
                                   std::vector<elem_t> base) {
  if (G.order() > limits::max_aut_order) {
    throw size_limit_error("automorphism search is capped at order "
                           + std::to_string(limits::max_aut_order));
  }
  if (generate(G, std::span<elem_t const>(base)).order() != G.order()) {
    throw input_error("automorphism_group: tuple does not generate G");
  }
  auto const                       keys = element_keys(G);
  std::vector<std::vector<elem_t>> candidates(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (elem_t h = 0; h < G.order(); ++h) {
      if (keys[h] == keys[base[i]]) {
        candidates[i].push_back(h);
      }
    }
  }
  HomomorphismSearch search(G, base, G, candidates, true);
  AutGroup           out;
  out.base = base;
  out.orbit_sizes.assign(base.size(), 1);
  for (std::size_t level = base.size(); level-- > 0;) {
    std::vector<elem_t> prefix(base.begin(), base.begin() + level);
    auto orbit = detail::orbit_closure(out.generators, base[level], G.order());
    std::vector<bool> in(G.order(), false);
    for (elem_t x : orbit) {
      in[x] = true;
    }
    for (elem_t h : candidates[level]) {
      if (in[h]) {
        continue;
      }
      prefix.push_back(h);
      auto found = search.first(prefix);
      prefix.pop_back();
      if (!found) {
        continue;
      }
      out.generators.emplace_back(std::move(*found));
      orbit = detail::orbit_closure(out.generators, base[level], G.order());
      for (elem_t x : orbit) {
        in[x] = true;
      }
    }
    out.orbit_sizes[level] = orbit.size();
    out.order              = checked_mul(out.order, orbit.size());
  }
  return out;
}

inline AutGroup automorphism_group(GroupTable const& G) {
  return automorphism_group(G, min_generators(G).tuple);
}

/// Every element of Aut(G), by closure of the generators under composition.
inline std::vector<Automorphism> aut_elements(
    GroupTable const& G, AutGroup const& A,
    std::size_t cap = limits::max_aut_elements) {
  if (A.order > cap) {
    throw size_limit_error("|Aut(G)| = " + std::to_string(A.order)
                           + " exceeds element-list cap");
  }
  std::vector<Automorphism> all{Automorphism::identity(G.order())};
  std::unordered_set<Automorphism, AutomorphismHash> seen{all[0]};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto const& g : A.generators) {
      Automorphism next = all[i].then(g);
      if (seen.insert(next).second) {
        all.push_back(std::move(next));
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// Full automorphism list; only for |G| <= limits::max_full_aut_list.
inline std::vector<Automorphism> enumerate_automorphisms(GroupTable const& G) {
  if (G.order() > limits::max_full_aut_list) {
    throw size_limit_error("full automorphism lists are capped at order "
                           + std::to_string(limits::max_full_aut_list));
  }
  return aut_elements(G, automorphism_group(G));
}

/// Aut(G)-orbits on G, each sorted, ordered by smallest member.
struct OrbitPartition {
  std::vector<std::vector<elem_t>> orbits;

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (auto const& o : orbits) {
      out.push_back(o.size());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (auto const& o : orbits) {
      m = std::max(m, o.size());
    }
    return m;
  }
};

inline OrbitPartition orbits_under(std::vector<Automorphism> const& gens,
                                   std::size_t                      n) {
  OrbitPartition    out;
  std::vector<bool> done(n, false);
  for (elem_t g = 0; g < n; ++g) {
    if (done[g]) {
      continue;
    }
    auto orbit = detail::orbit_closure(gens, g, n);
    for (elem_t x : orbit) {
      done[x] = true;
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

inline OrbitPartition aut_orbits(GroupTable const& G, AutGroup const& A) {
  return orbits_under(A.generators, G.order());
}

inline OrbitPartition aut_orbits(GroupTable const& G) {
  return aut_orbits(G, automorphism_group(G));
}

/// Maximum length of an Aut(G)-orbit on G.
inline std::size_t maol(GroupTable const& G) {
  return aut_orbits(G).max_length();
}

// ---------------------------------------------------------------------------
// Central automorphisms

/// True iff g^-1 a(g) lies in the center for every g.
inline bool is_central(GroupTable const& G, Subgroup const& Z,
                       Automorphism const& a) {
  for (elem_t g = 0; g < G.order(); ++g) {
    if (!Z.contains(G.mul(G.inv(g), a(g)))) {
      return false;
    }
  }
  return true;
}

namespace detail {

// Calls on_central(f) for each homomorphism f : G -> Z(G) for which
// g -> g f(g) is bijective; f is passed as a callable on elements.
template <class F>
void for_each_central_map(GroupTable const& G, std::size_t cap,
                          F&& on_central) {
  if (G.order() > limits::max_aut_order) {
    throw size_limit_error("central automorphisms are capped at order "
                           + std::to_string(limits::max_aut_order));
  }
  Subgroup const      Z    = center(G);
  Quotient const      ab   = quotient(G, commutator_subgroup(G));
  SubgroupTable const Zt   = subgroup_table(G, Z);
  auto const          gens = min_generators(ab.group).tuple;
  auto const          zord = element_orders(Zt.group);

  std::vector<std::vector<elem_t>> candidates(gens.size());
  double                           estimate = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    elem_t o = element_order(ab.group, gens[i]);
    for (elem_t z = 0; z < Zt.group.order(); ++z) {
      if (o % zord[z] == 0) {
        candidates[i].push_back(z);
      }
    }
    estimate *= static_cast<double>(candidates[i].size());
  }
  if (estimate > static_cast<double>(cap)) {
    throw size_limit_error("Hom(G/G', Z(G)) search space exceeds cap");
  }
  HomomorphismSearch search(ab.group, gens, Zt.group, candidates, false);
  search.for_each({}, [&](std::vector<elem_t> const& hom) {
    auto f = [&](elem_t g) { return Zt.embedding[hom[ab.projection[g]]]; };
    for (elem_t z : Z.members()) {
      if (z != 0 && f(z) == G.inv(z)) {
        return false;
      }
    }
    on_central(f);
    return false;
  });
}

}  // namespace detail

/// Aut_cent(G): the maps g -> g f(g) for homomorphisms f : G -> Z(G) that
/// are bijective.
///
/// Such f factor through G/G'; they are enumerated as homomorphisms from
/// G/G' (given by images of a generating tuple) into the center. g -> g f(g)
/// is an automorphism iff the identity is the only central element that f
/// sends to its own inverse.
inline std::vector<Automorphism> central_automorphisms(
    GroupTable const& G, std::size_t cap = limits::max_aut_elements) {
  std::vector<Automorphism> out;
  detail::for_each_central_map(G, cap, [&](auto const& f) {
    std::vector<elem_t> perm(G.order());
    for (elem_t g = 0; g < G.order(); ++g) {
      perm[g] = G.mul(g, f(g));
    }
    out.emplace_back(std::move(perm));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// |Aut_cent(G)| without materialising the automorphisms.
inline std::uint64_t count_central_automorphisms(
    GroupTable const& G, std::size_t cap = 16 * limits::max_aut_elements) {
  std::uint64_t count = 0;
  detail::for_each_central_map(G, cap, [&](auto const&) { ++count; });
  return count;
}

/// |Aut(G) : Aut_cent(G)|.
inline std::uint64_t aut_index_central(GroupTable const& G,
                                       AutGroup const&   A) {
  std::uint64_t const c = count_central_automorphisms(G);
  if (c == 0 || A.order % c != 0) {
    throw std::logic_error("|Aut_cent(G)| does not divide |Aut(G)|");
  }
  return A.order / c;
}

inline std::uint64_t aut_index_central(GroupTable const& G) {
  return aut_index_central(G, automorphism_group(G));
}

/// Inner automorphism g -> x^-1 g x.
inline Automorphism inner_automorphism(GroupTable const& G, elem_t x) {
  std::vector<elem_t> perm(G.order());
  for (elem_t g = 0; g < G.order(); ++g) {
    perm[g] = G.conj(g, x);
  }
  return Automorphism(std::move(perm));
}

// ---------------------------------------------------------------------------
// Isomorphism testing

/// Isomorphism invariants compared before any search.
struct GroupFingerprint {
  std::size_t              order = 0;
  bool                     abelian = false;
  std::vector<AbelianType> abelianization;
  std::vector<ElementKey>  keys;  // sorted multiset

  friend bool operator==(GroupFingerprint const&,
                         GroupFingerprint const&) = default;
};

inline GroupFingerprint fingerprint(GroupTable const& G) {
  GroupFingerprint fp;
  fp.order          = G.order();
  fp.abelian        = G.is_abelian();
  fp.abelianization = abelian_invariants(
      quotient(G, commutator_subgroup(G)).group);
  fp.keys = element_keys(G);
  std::sort(fp.keys.begin(), fp.keys.end());
  return fp;
}

/// An isomorphism G -> H as an index map, or nullopt.
inline std::optional<std::vector<elem_t>> find_isomorphism(
    GroupTable const& G, GroupTable const& H) {
  if (G.order() != H.order()) {
    return std::nullopt;
  }
  if (fingerprint(G) != fingerprint(H)) {
    return std::nullopt;
  }
  auto const                       base  = min_generators(G).tuple;
  auto const                       key_g = element_keys(G);
  auto const                       key_h = element_keys(H);
  std::vector<std::vector<elem_t>> candidates(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (elem_t h = 0; h < H.order(); ++h) {
      if (key_h[h] == key_g[base[i]]) {
        candidates[i].push_back(h);
      }
    }
  }
  HomomorphismSearch search(G, base, H, candidates, true);
  return search.first({});
}

inline bool are_isomorphic(GroupTable const& G, GroupTable const& H) {
  return find_isomorphism(G, H).has_value();
}

}  // namespace autorb
