#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "autorb/aut.hpp"
#include "autorb/classification.hpp"
#include "autorb/corpus.hpp"
#include "autorb/structure.hpp"
#include "oracles.hpp"

using namespace autorb;

TEST_CASE("Aut orders agree with brute force over all bijections") {
  for (auto const& id :
       {"cyclic:1", "cyclic:2", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:8",
        "abelian:2x2", "abelian:2x4", "abelian:2x2x2", "sym:3", "dih:4",
        "quaternion:8", "cyclic:7"}) {
    GroupTable const G     = build_builtin(id);
    auto const       brute = oracle::automorphisms_by_bijections(G);
    AutGroup const   A     = automorphism_group(G);
    INFO(id);
    CHECK(A.order == brute.size());
    CHECK(aut_orbits(G, A).lengths() == oracle::orbit_lengths(brute, G.order()));
  }
}

TEST_CASE("Aut orders agree with brute force over generator images") {
  for (auto const& id : {"abelian:3x3", "abelian:4x4", "sym:4", "alt:4",
                         "alt:5", "dih:6", "dicyclic:12", "frobenius:20",
                         "extraspecial:27:exp3", "extraspecial:27:exp9",
                         "product:cyclic:2,sym:3"}) {
    GroupTable const G    = build_builtin(id);
    auto const       gens = min_generators(G).tuple;
    REQUIRE(gens.size() == 2);
    auto const     brute = oracle::automorphisms_by_pairs(G, gens[0], gens[1]);
    AutGroup const A     = automorphism_group(G);
    INFO(id);
    CHECK(A.order == brute.size());
    CHECK(aut_orbits(G, A).lengths() == oracle::orbit_lengths(brute, G.order()));
  }
}

TEST_CASE("Aut of (Z/3)^2 is GL(2,3)") {
  CHECK(oracle::count_gl(2, 3) == 48);
  CHECK(oracle::count_gl(3, 2) == 168);
  CHECK(automorphism_group(build_abelian_from_orders({3, 3})).order == 48);
  CHECK(automorphism_group(build_abelian_from_orders({2, 2, 2})).order == 168);
  CHECK(automorphism_group(build_abelian_from_orders({5, 5})).order
        == oracle::count_gl(2, 5));
}

TEST_CASE("maol golden values") {
  std::vector<std::pair<char const*, std::size_t>> const cases{
      {"cyclic:1", 1},    {"cyclic:2", 1},      {"cyclic:3", 2},
      {"cyclic:4", 2},    {"cyclic:6", 2},      {"abelian:2x2", 3},
      {"sym:3", 3},       {"abelian:2x4", 4},   {"abelian:4x4", 12},
      {"abelian:3x3", 8}, {"alt:5", 24},        {"abelian:2x2x2", 7},
      {"Gn:1", 8},        {"Gn:2", 8}};
  for (auto const& [id, m] : cases) {
    INFO(id);
    CHECK(maol(build_builtin(id)) == m);
  }
}

TEST_CASE("orbit lengths of small groups") {
  CHECK(aut_orbits(build_abelian_from_orders({2, 2})).lengths()
        == std::vector<std::size_t>{1, 3});
  CHECK(aut_orbits(build_cyclic(6)).lengths()
        == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(aut_orbits(build_cyclic(1)).lengths() == std::vector<std::size_t>{1});
}

TEST_CASE("extraspecial groups of order 27") {
  CHECK(maol(build_builtin("extraspecial:27:exp3")) == 24);
  CHECK(maol(build_builtin("extraspecial:27:exp9")) == 18);
}

TEST_CASE("automorphism lists") {
  GroupTable const S3  = symmetric_group(3);
  auto const       all = enumerate_automorphisms(S3);
  CHECK(all.size() == 6);
  std::set<std::vector<elem_t>> inner;
  for (elem_t x = 0; x < S3.order(); ++x) {
    inner.insert(inner_automorphism(S3, x).perm());
  }
  CHECK(inner.size() == 6);
  for (auto const& a : all) {
    CHECK(inner.count(a.perm()) == 1);
  }
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS_AS(aut_elements(build_abelian_from_orders({2, 2, 2, 2}),
                               automorphism_group(build_abelian_from_orders({2, 2, 2, 2})),
                               100),
                  size_limit_error);
}

TEST_CASE("central automorphisms") {
  GroupTable const S3 = symmetric_group(3);
  auto const       c  = central_automorphisms(S3);
  REQUIRE(c.size() == 1);
  CHECK(c.front().is_identity());
  CHECK(aut_index_central(S3) == 6);

  // For abelian G every automorphism is central; the list is a subgroup.
  GroupTable const V  = build_abelian_from_orders({2, 2});
  auto const       cv = central_automorphisms(V);
  CHECK(cv.size() == 6);
  std::set<std::vector<elem_t>> set;
  for (auto const& a : cv) {
    CHECK(is_automorphism(V, a));
    set.insert(a.perm());
  }
  for (auto const& a : cv) {
    for (auto const& b : cv) {
      CHECK(set.count(a.then(b).perm()) == 1);
    }
  }

  // Brute force: automorphisms moving each element within its center coset.
  GroupTable const Q8    = build_builtin("quaternion:8");
  Subgroup const   Z     = center(Q8);
  std::size_t      brute = 0;
  for (auto const& f : oracle::automorphisms_by_bijections(Q8)) {
    bool central = true;
    for (elem_t g = 0; g < Q8.order(); ++g) {
      central = central && Z.contains(Q8.mul(Q8.inv(g), f[g]));
    }
    brute += central;
  }
  CHECK(central_automorphisms(Q8).size() == brute);
  CHECK(count_central_automorphisms(Q8) == brute);

  CHECK(aut_index_central(build_builtin("Gn:1")) == 2);
  CHECK(aut_index_central(build_builtin("Gn:2")) == 2);
}

TEST_CASE("automorphism validation") {
  GroupTable const Z4 = build_cyclic(4);
  CHECK(is_automorphism(Z4, Automorphism(std::vector<elem_t>{0, 3, 2, 1})));
  CHECK(!is_automorphism(Z4, Automorphism(std::vector<elem_t>{0, 2, 1, 3})));
  CHECK_THROWS_AS(Automorphism(std::vector<elem_t>{0, 1, 1, 3}), input_error);
  CHECK_THROWS_AS(Automorphism(std::vector<elem_t>{1, 0, 2, 3}), input_error);
}

TEST_CASE("isomorphism testing") {
  CHECK(are_isomorphic(generalized_dihedral(build_cyclic(3)), symmetric_group(3)));
  CHECK(are_isomorphic(build_builtin("dih:4"),
                       build_permutation_group(4, std::vector<std::string>{
                                                      "(1,2,3,4)", "(1,3)"})));
  CHECK(!are_isomorphic(build_builtin("dih:4"), build_builtin("quaternion:8")));
  CHECK(!are_isomorphic(build_builtin("extraspecial:27:exp3"),
                        build_builtin("extraspecial:27:exp9")));
  CHECK(are_isomorphic(build_cyclic(6), build_abelian_from_orders({2, 3})));
  CHECK(are_isomorphic(build_builtin("frobenius:21"),
                       build_permutation_group(
                           7, std::vector<std::string>{"(1,2,3,4,5,6,7)",
                                                       "(2,5,3)(4,6,7)"})));
  GroupTable const S4 = symmetric_group(4);
  GroupTable const T  = build_permutation_group(
      4, std::vector<std::string>{"(1,2,3,4)", "(1,2)"});
  auto const iso = find_isomorphism(S4, T);
  REQUIRE(iso.has_value());
  for (elem_t a = 0; a < S4.order(); ++a) {
    for (elem_t b = 0; b < S4.order(); ++b) {
      CHECK((*iso)[S4.mul(a, b)] == T.mul((*iso)[a], (*iso)[b]));
    }
  }
}

TEST_CASE("classification over a corpus") {
  std::vector<NamedGroup> corpus = build_all(
      {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6",
       "abelian:2x2", "dih:3", "sym:4", "abelian:2x2x2", "cyclic:5"});
  std::vector<std::size_t> maols;
  for (auto const& g : corpus) {
    maols.push_back(maol(g.group));
  }
  auto const r = verify_maol_classification(corpus, maols);
  CHECK(r.pass);
  CHECK(r.references_missing.empty());
  for (auto const& g : r.groups) {
    if (g.id == "dih:3") {
      CHECK(g.match == std::optional<std::string>("sym:3"));
    }
    if (g.id == "sym:4" || g.id == "abelian:2x2x2") {
      CHECK(g.maol > 3);
      CHECK(!g.match);
    }
  }

  corpus.pop_back();
  corpus.erase(corpus.begin() + 4);  // drop Z/6
  maols.pop_back();
  maols.erase(maols.begin() + 4);
  auto const missing = verify_maol_classification(corpus, maols);
  CHECK(!missing.pass);
  CHECK(missing.references_missing == std::vector<std::string>{"cyclic:6"});

  // A group claimed to have maol <= 3 that is none of the seven.
  auto bad = build_all({"cyclic:5"});
  CHECK(!verify_maol_classification(bad, {2}).groups[0].pass);
}

TEST_CASE("simple scan") {
  auto const r = simple_mccl_scan(build_all(simple_corpus_ids()));
  CHECK(r.pass);
  for (auto const& e : r.entries) {
    if (e.id == "alt:6") {
      CHECK(e.three_cycle_class == 40u);
    }
    if (e.id == "alt:7") {
      CHECK(e.three_cycle_class == 70u);
    }
    if (e.id == "psl2:7") {
      CHECK(e.mccl == 56);
    }
  }
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(automorphism_group(build_cyclic(4096)), size_limit_error);
  CHECK_THROWS_AS(normal_subgroups(build_cyclic(1024)), size_limit_error);
}
