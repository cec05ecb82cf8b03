#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "autorb/aut.hpp"
#include "autorb/config.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"
#include "autorb/structure.hpp"

namespace autorb {

/// Order profile of standard generating tuples of an abelian group H.
///
/// For each prime p with Sylow subgroup Z/p^e_1 x ... x Z/p^e_m, entry i of
/// the tuple must project to an element of order p^e_i (i <= m) or 1. Since
/// the projections are powers, this is the same as ord(h_i) == entry_orders[i].
struct StandardProfile {
  std::vector<AbelianType>   invariants;
  std::size_t                length = 0;  // d(H)
  std::vector<std::uint64_t> entry_orders;
};

inline StandardProfile standard_profile(GroupTable const& H) {
  StandardProfile sp;
  sp.invariants = abelian_invariants(H);
  for (auto const& t : sp.invariants) {
    sp.length = std::max(sp.length, t.exponents.size());
  }
  sp.entry_orders.assign(sp.length, 1);
  for (auto const& t : sp.invariants) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      sp.entry_orders[i] *= checked_pow(t.prime, t.exponents[i]);
    }
  }
  return sp;
}

namespace detail {

// Depth-first enumeration of tuples (g_1..g_n) over G whose images in the
// abelian quotient H form a standard generating tuple. A prefix of length k
// survives only if its image generates a subgroup of order
// prod_{i<=k} entry_orders[i], which every prefix of a standard generating
// tuple does; at k = n this says the image generates H.
class StandardTupleWalker {
 public:
  StandardTupleWalker(GroupTable const& G, Quotient const& Q)
      : G_(G), Q_(Q), profile_(standard_profile(Q.group)) {
    auto const qorders = element_orders(Q.group);
    candidates_.resize(profile_.length);
    for (std::size_t i = 0; i < profile_.length; ++i) {
      for (elem_t g = 0; g < G.order(); ++g) {
        if (qorders[Q.projection[g]] == profile_.entry_orders[i]) {
          candidates_[i].push_back(g);
        }
      }
    }
  }

  StandardProfile const& profile() const { return profile_; }

  void run(std::function<void(std::vector<elem_t> const&)> const& visit) {
    std::vector<elem_t> tuple;
    std::vector<elem_t> images;
    descend(0, 1, tuple, images, visit);
  }

 private:
  void descend(std::size_t level, std::uint64_t expected,
               std::vector<elem_t>& tuple, std::vector<elem_t>& images,
               std::function<void(std::vector<elem_t> const&)> const& visit) {
    if (level == profile_.length) {
      visit(tuple);
      return;
    }
    std::uint64_t const next_expected = expected * profile_.entry_orders[level];
    // Validity depends only on the coset; test each coset once per node.
    std::vector<signed char> ok(Q_.group.order(), -1);
    for (elem_t g : candidates_[level]) {
      elem_t q = Q_.projection[g];
      if (ok[q] < 0) {
        images.push_back(q);
        ok[q] = generate(Q_.group, std::span<elem_t const>(images)).order()
                == next_expected;
        images.pop_back();
      }
      if (!ok[q]) {
        continue;
      }
      tuple.push_back(g);
      images.push_back(q);
      descend(level + 1, next_expected, tuple, images, visit);
      images.pop_back();
      tuple.pop_back();
    }
  }

  GroupTable const&                G_;
  Quotient const&                  Q_;
  StandardProfile                  profile_;
  std::vector<std::vector<elem_t>> candidates_;
};

}  // namespace detail

/// All standard generating tuples of an abelian group H.
inline std::vector<std::vector<elem_t>> standard_generating_tuples(
    GroupTable const& H) {
  if (!H.is_abelian()) {
    throw input_error("standard generating tuples need an abelian group");
  }
  if (H.order() > limits::max_tuple_enum) {
    throw size_limit_error("standard tuple enumeration capped at order "
                           + std::to_string(limits::max_tuple_enum));
  }
  Quotient const Q = quotient(H, trivial_subgroup(H));
  std::vector<std::vector<elem_t>> out;
  detail::StandardTupleWalker walker(H, Q);
  walker.run([&](auto const& t) { out.push_back(t); });
  return out;
}

/// The context shared by standard-tuple computations on G.
struct StandardTupleContext {
  Subgroup        derived;
  Quotient        abelianization;
  StandardProfile profile;
};

inline StandardTupleContext standard_tuple_context(GroupTable const& G) {
  if (G.order() > limits::max_tuple_enum) {
    throw size_limit_error("standard tuple enumeration capped at order "
                           + std::to_string(limits::max_tuple_enum));
  }
  StandardTupleContext ctx;
  ctx.derived        = commutator_subgroup(G);
  ctx.abelianization = quotient(G, ctx.derived);
  ctx.profile        = standard_profile(ctx.abelianization.group);
  return ctx;
}

/// Visits every standard tuple of G (tuples projecting to standard
/// generating tuples of G/G').
inline void for_each_standard_tuple(
    GroupTable const& G, StandardTupleContext const& ctx,
    std::function<void(std::vector<elem_t> const&)> const& visit) {
  detail::StandardTupleWalker walker(G, ctx.abelianization);
  walker.run(visit);
}

inline std::uint64_t count_standard_tuples(GroupTable const& G) {
  auto const    ctx   = standard_tuple_context(G);
  std::uint64_t count = 0;
  for_each_standard_tuple(G, ctx, [&](auto const&) { ++count; });
  return count;
}

inline std::vector<std::vector<elem_t>> standard_tuples(
    GroupTable const& G, std::size_t cap = limits::max_aut_elements) {
  auto const                       ctx = standard_tuple_context(G);
  std::vector<std::vector<elem_t>> out;
  for_each_standard_tuple(G, ctx, [&](auto const& t) {
    if (out.size() >= cap) {
      throw size_limit_error("standard tuple list exceeds cap");
    }
    out.push_back(t);
  });
  return out;
}

/// |Aut(G/G')| * |G'|^d(G/G').
inline std::uint64_t standard_tuple_count_formula(GroupTable const& G) {
  auto const          ctx = standard_tuple_context(G);
  std::uint64_t const aut = automorphism_group(ctx.abelianization.group).order;
  return checked_mul(aut, checked_pow(ctx.derived.order(), ctx.profile.length));
}

/// Power-automorphism-commutator data of a standard tuple:
/// powers[i] = g_i^o_i with o_i the order of g_i G' in G/G';
/// auts[i] = images of the members of G' (in sorted order) under x -> x^g_i;
/// comms = [g_i, g_j] for i < j in lexicographic order.
struct PACTuple {
  std::vector<elem_t>              powers;
  std::vector<std::vector<elem_t>> auts;
  std::vector<elem_t>              comms;

  friend auto operator<=>(PACTuple const&, PACTuple const&) = default;
  friend bool operator==(PACTuple const&, PACTuple const&)  = default;
};

inline PACTuple pac_tuple(GroupTable const& G, StandardTupleContext const& ctx,
                          std::vector<elem_t> const& t) {
  PACTuple out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.powers.push_back(
        G.pow(t[i], static_cast<std::int64_t>(ctx.profile.entry_orders[i])));
    std::vector<elem_t> images;
    for (elem_t x : ctx.derived.members()) {
      images.push_back(G.conj(x, t[i]));
    }
    out.auts.push_back(std::move(images));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      out.comms.push_back(G.comm(t[i], t[j]));
    }
  }
  return out;
}

inline PACTuple pac_tuple(GroupTable const& G, std::vector<elem_t> const& t) {
  return pac_tuple(G, standard_tuple_context(G), t);
}

/// Standard tuples grouped by their PACTuple; classes in PACTuple order.
inline std::vector<std::vector<std::vector<elem_t>>> equivalence_classes(
    GroupTable const& G, std::size_t cap = limits::max_aut_elements) {
  auto const ctx = standard_tuple_context(G);
  std::map<PACTuple, std::vector<std::vector<elem_t>>> classes;
  std::size_t                                          seen = 0;
  for_each_standard_tuple(G, ctx, [&](auto const& t) {
    if (++seen > cap) {
      throw size_limit_error("standard tuple list exceeds cap");
    }
    classes[pac_tuple(G, ctx, t)].push_back(t);
  });
  std::vector<std::vector<std::vector<elem_t>>> out;
  for (auto& [k, v] : classes) {
    out.push_back(std::move(v));
  }
  return out;
}

struct PacOrbitCheck {
  std::size_t tuples  = 0;
  std::size_t classes = 0;
  bool        pass    = true;
};

/// Checks that every PACTuple-equivalence class lies in one orbit of the
/// component-wise action of Aut(G) on tuples.
inline PacOrbitCheck check_pac_orbits(GroupTable const&                G,
                                      std::vector<Automorphism> const& aut) {
  PacOrbitCheck out;
  for (auto const& cls : equivalence_classes(G)) {
    ++out.classes;
    out.tuples += cls.size();
    std::set<std::vector<elem_t>> orbit;
    for (auto const& a : aut) {
      std::vector<elem_t> img;
      for (elem_t g : cls.front()) {
        img.push_back(a(g));
      }
      orbit.insert(std::move(img));
    }
    for (auto const& t : cls) {
      if (!orbit.count(t)) {
        out.pass = false;
      }
    }
  }
  return out;
}

}  // namespace autorb
