#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "autorb/aut.hpp"
#include "autorb/bounds.hpp"
#include "autorb/classification.hpp"
#include "autorb/corpus.hpp"
#include "autorb/parallel.hpp"
#include "autorb/pc_presentation.hpp"
#include "autorb/report.hpp"
#include "autorb/structure.hpp"
#include "autorb/tuples.hpp"

namespace autorb {

struct VerifyOptions {
  std::size_t jobs      = 1;
  bool        long_mode = false;
};

/// Everything the corpus sweeps need about one group, computed once.
struct GroupAnalysis {
  std::string    id;
  GroupTable     group;
  AutGroup       aut;
  OrbitPartition orbits;
  std::size_t    d             = 0;
  std::size_t    mccl          = 0;
  std::size_t    derived_order = 0;
};

inline GroupAnalysis analyze(std::string const& id) {
  GroupAnalysis a;
  a.id            = id;
  a.group         = build_builtin(id);
  auto const gens = min_generators(a.group);
  a.d             = gens.d;
  a.aut           = automorphism_group(a.group, gens.tuple);
  a.orbits        = aut_orbits(a.group, a.aut);
  a.mccl          = mccl(a.group);
  a.derived_order = commutator_subgroup(a.group).order();
  return a;
}

/// Analyses in sorted id order, whatever the thread count.
inline std::vector<GroupAnalysis> analyze_all(std::vector<std::string> ids,
                                              std::size_t              jobs) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return parallel_map(ids.size(), jobs,
                      [&](std::size_t i) { return analyze(ids[i]); });
}

inline std::vector<std::pair<std::string, std::size_t>> maol_goldens() {
  return {{"cyclic:1", 1},    {"cyclic:2", 1},    {"cyclic:3", 2},
          {"cyclic:4", 2},    {"cyclic:6", 2},    {"abelian:2x2", 3},
          {"sym:3", 3},       {"abelian:2x4", 4}, {"abelian:4x4", 12},
          {"abelian:3x3", 8}, {"alt:5", 24}};
}

/// Corpus for the one-sided bounds: the classification corpus plus a few
/// larger groups.
inline std::vector<std::string> bounds_corpus_ids() {
  auto ids = classification_corpus_ids();
  for (char const* s : {"Gn:1", "Gn:2", "alt:6", "psl2:7"}) {
    ids.emplace_back(s);
  }
  return ids;
}

/// Corpus for standard-tuple counting: groups of order <= 256 whose tuple
/// count stays enumerable.
inline std::vector<std::string> tuple_corpus_ids() {
  auto ids = classification_corpus_ids();
  ids.emplace_back("Gn:1");
  return ids;
}

/// Every abelian p-group type of order <= max_order.
inline std::vector<AbelianType> abelian_p_group_types(
    std::vector<std::uint64_t> const& primes, std::uint64_t max_order) {
  std::vector<AbelianType> out;
  for (std::uint64_t p : primes) {
    std::uint32_t kmax = 0;
    for (std::uint64_t q = p; q <= max_order; q *= p) {
      ++kmax;
    }
    // Partitions of k as nondecreasing exponent lists.
    std::vector<std::uint32_t> parts;
    auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t min_part) -> void {
      if (left == 0) {
        if (!parts.empty()) {
          out.push_back({static_cast<std::uint32_t>(p), parts});
        }
        return;
      }
      for (std::uint32_t e = min_part; e <= left; ++e) {
        parts.push_back(e);
        self(self, left - e, e);
        parts.pop_back();
      }
    };
    for (std::uint32_t k = 1; k <= kmax; ++k) {
      rec(rec, k, 1);
    }
  }
  return out;
}

inline json type_json(AbelianType const& t) {
  return json{{"prime", t.prime}, {"exponents", t.exponents}};
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_classification(VerifyOptions const& opt) {
  SuiteReport r{"classification", {}, {}};

  for (auto const& [id, expected] : maol_goldens()) {
    std::size_t const m = maol(build_builtin(id));
    r.add("maol_golden", {{"group", id}}, m, expected, m == expected);
  }

  auto const              analyses = analyze_all(classification_corpus_ids(), opt.jobs);
  std::vector<NamedGroup> corpus;
  std::vector<std::size_t> maols;
  for (auto const& a : analyses) {
    corpus.push_back({a.id, a.group});
    maols.push_back(a.orbits.max_length());
  }
  auto const cls = verify_maol_classification(corpus, maols);
  for (auto const& g : cls.groups) {
    json computed{{"order", g.order}, {"maol", g.maol}};
    if (g.match) {
      computed["isomorphic_to"] = *g.match;
    }
    r.add("maol_classification", {{"group", g.id}}, computed,
          g.maol <= 3 ? "isomorphic to one of the seven maol<=3 groups"
                      : "maol >= 4",
          g.pass);
  }
  r.add("maol_small_side_complete", {{"corpus_size", corpus.size()}},
        {{"found", cls.references_found}, {"missing", cls.references_missing}},
        small_maol_ids(), cls.references_missing.empty());
  r.notes.push_back(
      "maol classification: consistency, not proof. The corpus can only "
      "refute the claim that exactly seven groups have maol <= 3.");
  r.notes.push_back(
      "solvability of groups with maol <= 23 is not checked beyond this "
      "corpus.");

  std::map<std::string, std::size_t> es;
  for (auto const& a : analyses) {
    if (a.id.starts_with("extraspecial:27:")) {
      es[a.id] = a.orbits.max_length();
    }
  }
  std::vector<std::size_t> values;
  json                     computed = json::object();
  for (auto const& [id, m] : es) {
    computed[id] = m;
    values.push_back(m);
  }
  std::sort(values.begin(), values.end());
  r.add("extraspecial_27_maol", {{"groups", json::array({"extraspecial:27:exp3",
                                                          "extraspecial:27:exp9"})}},
        computed, json::array({18, 24}),
        values == std::vector<std::size_t>{18, 24});
  return r;
}

inline SuiteReport verify_gn(VerifyOptions const& opt) {
  SuiteReport                r{"gn", {}, {}};
  std::vector<std::size_t> ns{1, 2};
  if (opt.long_mode) {
    ns.push_back(3);
  } else {
    r.notes.push_back("G_3 skipped; run with --long.");
  }
  for (std::size_t n : ns) {
    json const           in{{"n", n}};
    PcPresentation const p = build_Gn(n);
    GroupTable const     G = instantiate(p);
    std::size_t const    m = gn_x_count(n);
    PcIndexer const      ix(p);

    std::uint64_t const order = std::uint64_t{1} << (m + 2);
    r.add("gn_order", in, G.order(), order, G.order() == order);

    Subgroup const Z  = center(G);
    auto const     zi = abelian_invariants(subgroup_table(G, Z).group);
    r.add("gn_center_klein", in, abelian_json(zi), "Z/2 x Z/2",
          zi == std::vector<AbelianType>{{2, {1, 1}}});

    Quotient const Q       = quotient(G, Z);
    bool const     elem_ab = Q.group.is_abelian() && exponent(Q.group) <= 2;
    std::uint64_t const qo = std::uint64_t{1} << m;
    r.add("gn_central_quotient", in,
          {{"order", Q.group.order()}, {"elementary_abelian", elem_ab}},
          {{"order", qo}, {"elementary_abelian", true}},
          elem_ab && Q.group.order() == qo);

    std::uint64_t const e = exponent(G);
    r.add("gn_exponent", in, e, 4, e == 4);
    auto const cls = nilpotency_class(G);
    r.add("gn_class", in, cls ? json(*cls) : json(nullptr), 2, cls == 2u);

    bool alpha_ok = false, alpha_noncentral = false, alpha_sq_central = false;
    std::string alpha_error;
    try {
      Automorphism const alpha = alpha_n(p);
      alpha_ok                 = is_automorphism(G, alpha);
      alpha_noncentral         = !is_central(G, Z, alpha);
      alpha_sq_central         = is_central(G, Z, alpha.then(alpha));
    } catch (std::exception const& ex) {
      alpha_error = ex.what();
    }
    json ac{{"automorphism", alpha_ok}, {"central", !alpha_noncentral},
            {"square_central", alpha_sq_central}};
    if (!alpha_error.empty()) {
      ac["error"] = alpha_error;
    }
    r.add("gn_alpha", in, ac,
          {{"automorphism", true}, {"central", false}, {"square_central", true}},
          alpha_ok && alpha_noncentral && alpha_sq_central);

    AutGroup const A = automorphism_group(G, min_generators(G).tuple);
    std::size_t const ml = aut_orbits(G, A).max_length();
    r.add("gn_maol", in, ml, 8, ml == 8);
    std::uint64_t const cent  = count_central_automorphisms(G);
    std::uint64_t const index = cent && A.order % cent == 0 ? A.order / cent : 0;
    r.add("gn_aut_central_index", in,
          {{"aut_order", A.order}, {"aut_cent_order", cent}, {"index", index}},
          2, index == 2);

    for (std::size_t k : {std::size_t{0}, m - 1}) {
      std::vector<elem_t> gens(Z.members().begin(), Z.members().end());
      gens.push_back(ix.generator(k));
      Subgroup const H         = generate(G, std::span<elem_t const>(gens));
      bool           invariant = true;
      for (auto const& a : A.generators) {
        for (elem_t h : H.members()) {
          invariant = invariant && H.contains(a(h));
        }
      }
      r.add("gn_characteristic_subgroup",
            {{"n", n}, {"subgroup", "<" + p.names[k] + ", Z>"}},
            {{"order", H.order()}, {"aut_invariant", invariant}},
            {{"aut_invariant", true}}, invariant);
    }
  }
  return r;
}

inline SuiteReport verify_bounds(VerifyOptions const& opt) {
  SuiteReport r{"bounds", {}, {}};
  for (auto const& a : analyze_all(bounds_corpus_ids(), opt.jobs)) {
    json const in{{"group", a.id}, {"order", a.group.order()}};

    real const gm = gm_commutator_bound(real(a.mccl));
    r.add("commutator_subgroup_bound",
          {{"group", a.id}, {"mccl", a.mccl}}, a.derived_order, to_string(gm),
          real(a.derived_order) <= gm);

    real const lhs = boost::multiprecision::log(real(a.aut.order));
    real const rhs = log_aut_order_upper_bound(a.group.order());
    r.add("aut_order_bound", in,
          {{"aut_order", a.aut.order}, {"log_aut_order", to_string(lhs)}},
          {{"log_bound", to_string(rhs)}}, lhs <= rhs);

    std::size_t const c = a.orbits.max_length();
    std::size_t const d = std::max<std::size_t>(a.d, 1);
    BoundReport const b = maol_order_bound(c, d);
    real const lg = boost::multiprecision::log(real(a.group.order()));
    r.add("maol_order_bound",
          {{"group", a.id}, {"maol", c}, {"d", a.d}, {"d_used", d}},
          {{"log_order", to_string(lg)}},
          {{"log_A", to_string(b.log_A)},
           {"log_order_bound", to_string(b.log_order_bound)}},
          b.admits(a.group.order()));
  }
  return r;
}

inline SuiteReport verify_formulas(VerifyOptions const& opt) {
  SuiteReport r{"formulas", {}, {}};

  auto const types = abelian_p_group_types({2, 3, 5, 7}, 128);
  struct HrRow {
    std::uint64_t engine = 0, formula = 0, lower = 0;
  };
  auto const rows = parallel_map(types.size(), opt.jobs, [&](std::size_t i) {
    GroupTable const G = build_abelian({types[i]});
    return HrRow{automorphism_group(G).order, hillar_rhea_aut_order(types[i]),
                 hr_lower_bound(types[i])};
  });
  for (std::size_t i = 0; i < types.size(); ++i) {
    json const in = type_json(types[i]);
    r.add("abelian_aut_order_formula", in, rows[i].formula, rows[i].engine,
          rows[i].formula == rows[i].engine);
    r.add("abelian_aut_lower_bound", in, rows[i].lower, rows[i].formula,
          rows[i].lower <= rows[i].formula);
    std::uint64_t const n   = types[i].order();
    real const          lhs = boost::multiprecision::log(real(rows[i].engine));
    real const          rhs = log_aut_order_upper_bound(n);
    r.add("aut_order_bound", in, to_string(lhs), to_string(rhs), lhs <= rhs);
  }

  ThetaCheck const tc = check_rosser_schoenfeld(1000000);
  r.add("chebyshev_theta_bound", {{"x_max", tc.x_max}},
        {{"violations", tc.violations},
         {"monotone", tc.monotone},
         {"max_theta_over_x", tc.worst_ratio},
         {"at_x", tc.worst_x}},
        {{"theta_over_x_below", 1.01624}}, tc.pass);

  auto ids = tuple_corpus_ids();
  std::sort(ids.begin(), ids.end());
  struct TupleRow {
    std::uint64_t count = 0, formula = 0;
    PacOrbitCheck pac;
    bool          pac_run = false;
    std::uint64_t order   = 0;
  };
  auto const trows = parallel_map(ids.size(), opt.jobs, [&](std::size_t i) {
    GroupTable const G = build_builtin(ids[i]);
    TupleRow         row;
    row.order   = G.order();
    row.count   = count_standard_tuples(G);
    row.formula = standard_tuple_count_formula(G);
    AutGroup const A = automorphism_group(G);
    if (A.order <= limits::max_aut_elements) {
      row.pac     = check_pac_orbits(G, aut_elements(G, A));
      row.pac_run = true;
    }
    return row;
  });
  for (std::size_t i = 0; i < ids.size(); ++i) {
    json const in{{"group", ids[i]}, {"order", trows[i].order}};
    r.add("standard_tuple_count", in, trows[i].count, trows[i].formula,
          trows[i].count == trows[i].formula);
    r.add("pac_tuple_orbits", in,
          {{"tuples", trows[i].pac.tuples},
           {"classes", trows[i].pac.classes},
           {"ran", trows[i].pac_run}},
          "equivalent tuples share an Aut-orbit",
          trows[i].pac_run && trows[i].pac.pass);
  }
  return r;
}

inline SuiteReport verify_simple_scan(VerifyOptions const& opt) {
  SuiteReport  r{"simple-scan", {}, {}};
  auto const   ids    = simple_corpus_ids();
  auto const   groups = parallel_map(ids.size(), opt.jobs,
                                     [&](std::size_t i) { return named(ids[i]); });
  auto const   scan   = simple_mccl_scan(groups);
  for (auto const& e : scan.entries) {
    json computed{{"order", e.order}, {"mccl", e.mccl}};
    json expected = e.id == "alt:5" ? json{{"mccl", 20}} : json{{"mccl_above", 23}};
    if (e.alt_degree) {
      computed["three_cycle_class"] =
          e.three_cycle_class ? json(*e.three_cycle_class) : json(nullptr);
      expected["three_cycle_class"] = 2 * binomial(*e.alt_degree, 3);
    }
    r.add("simple_mccl", {{"group", e.id}}, computed, expected, e.pass);
  }
  return r;
}

inline std::vector<std::string> suite_names() {
  return {"classification", "gn", "bounds", "formulas", "simple-scan", "all"};
}

inline SuiteReport run_suite(std::string const& name, VerifyOptions const& opt) {
  if (name == "classification") {
    return verify_classification(opt);
  }
  if (name == "gn") {
    return verify_gn(opt);
  }
  if (name == "bounds") {
    return verify_bounds(opt);
  }
  if (name == "formulas") {
    return verify_formulas(opt);
  }
  if (name == "simple-scan") {
    return verify_simple_scan(opt);
  }
  if (name == "all") {
    SuiteReport all{"all", {}, {}};
    for (auto const& s : suite_names()) {
      if (s != "all") {
        all.append(run_suite(s, opt));
      }
    }
    return all;
  }
  throw input_error("unknown suite '" + name + "'");
}

}  // namespace autorb
