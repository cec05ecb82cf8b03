#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "autorb/aut.hpp"
#include "autorb/corpus.hpp"
#include "autorb/tuples.hpp"

using namespace autorb;

TEST_CASE("standard generating tuples of abelian groups") {
  CHECK(standard_generating_tuples(build_cyclic(4)).size() == 2);
  CHECK(standard_generating_tuples(build_abelian_from_orders({2, 2})).size() == 6);
  CHECK(standard_generating_tuples(build_cyclic(1)).size() == 1);
  for (auto const& id : {"cyclic:12", "abelian:2x4", "abelian:3x3",
                         "abelian:2x2x2", "abelian:2x6", "abelian:4x4"}) {
    GroupTable const H = build_builtin(id);
    INFO(id);
    CHECK(standard_generating_tuples(H).size() == automorphism_group(H).order);
  }
  CHECK_THROWS_AS(standard_generating_tuples(symmetric_group(3)), input_error);
}

TEST_CASE("standard tuple profile") {
  auto const p = standard_profile(build_abelian_from_orders({2, 4, 3}));
  CHECK(p.length == 2);
  // Cyclic factors sorted so that each p-part is nondecreasing.
  CHECK(p.entry_orders == std::vector<std::uint64_t>{6, 4});
}

TEST_CASE("standard tuples of nonabelian groups") {
  GroupTable const S3 = symmetric_group(3);
  auto const       t  = standard_tuples(S3);
  CHECK(t.size() == 3);
  for (auto const& tup : t) {
    REQUIRE(tup.size() == 1);
    CHECK(element_order(S3, tup[0]) == 2);
  }
  CHECK(count_standard_tuples(S3) == standard_tuple_count_formula(S3));

  // All three tuples share one power-automorphism-commutator tuple.
  auto const classes = equivalence_classes(S3);
  CHECK(classes.size() == 1);
  CHECK(pac_tuple(S3, t[0]) == pac_tuple(S3, t[1]));

  GroupTable const G1 = build_builtin("Gn:1");
  CHECK(count_standard_tuples(G1) == 168 * 4 * 4 * 4);
  CHECK(standard_tuple_count_formula(G1) == 168 * 4 * 4 * 4);

  for (auto const& id : {"dih:4", "quaternion:8", "alt:4", "sym:4",
                         "dicyclic:12", "extraspecial:27:exp9"}) {
    GroupTable const G = build_builtin(id);
    INFO(id);
    CHECK(count_standard_tuples(G) == standard_tuple_count_formula(G));
  }
}

TEST_CASE("equivalent standard tuples share an Aut-orbit") {
  for (auto const& id : {"sym:3", "dih:4", "quaternion:8", "alt:4",
                         "extraspecial:27:exp3", "Gn:1"}) {
    GroupTable const G   = build_builtin(id);
    auto const       all = aut_elements(G, automorphism_group(G));
    auto const       r   = check_pac_orbits(G, all);
    INFO(id);
    CHECK(r.pass);
    CHECK(r.tuples == count_standard_tuples(G));
  }
}

TEST_CASE("orbit check detects a too-small automorphism list") {
  GroupTable const Q8 = build_builtin("quaternion:8");
  std::vector<Automorphism> only_id{Automorphism::identity(Q8.order())};
  CHECK(!check_pac_orbits(Q8, only_id).pass);
}
