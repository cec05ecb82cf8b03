#include <catch2/catch_amalgamated.hpp>

#include "autorb/aut.hpp"
#include "autorb/corpus.hpp"
#include "autorb/pc_presentation.hpp"
#include "autorb/structure.hpp"

using namespace autorb;

namespace {

PcPresentation klein() {
  return parse_presentation("gens x,y; orders 2,2; comm [x,y]=1");
}

parse_error parse_failure(std::string_view text) {
  try {
    parse_presentation(text);
  } catch (parse_error const& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return parse_error("", 0, 0);
}

}  // namespace

TEST_CASE("parsing a small presentation") {
  PcPresentation const p = klein();
  CHECK(p.size() == 2);
  CHECK(p.order() == 4);
  GroupTable const G = instantiate(p);
  CHECK(G.is_abelian());
  CHECK(exponent(G) == 2);
  CHECK(are_isomorphic(G, build_abelian_from_orders({2, 2})));
}

TEST_CASE("parser accepts comments, blank lines and products with '*'") {
  PcPresentation const p = parse_presentation(
      "# quaternion group\n"
      "\n"
      "gens x, y, z   # three generators\n"
      "orders 2,2,2\n"
      "pow x^2 = z; pow y^2 = z\n"
      "comm [x,y] = z\n");
  CHECK(instantiate(p).order() == 8);
  CHECK(p == parse_presentation(presentations::quaternion_8));
  PcPresentation const q = parse_presentation(
      "gens a,b,c\norders 2,2,2\ncomm [a,b] = b*c\n");
  CHECK(render_word(q.comm_rhs[0][1], q) == "b c");
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_failure("gens x1,x2\norders 2,2\ncomm [x1,x1] = x2\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 10);

  e = parse_failure("gens x,y\norders 2,2\npow x^2 = z\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);

  e = parse_failure("gens x,y\norders 2,2\ncomm [x,y] = x\n");
  CHECK(e.line() == 3);

  e = parse_failure("gens x,y\norders 2,2\npow x^3 = y\n");
  CHECK(e.line() == 3);

  e = parse_failure("gens x,y\norders 2,2\npow y^2 = x\n");
  CHECK(e.line() == 3);

  e = parse_failure("gens x,y,z\norders 3,3,3\ncomm [x,y] = z^3\n");
  CHECK(e.line() == 3);

  e = parse_failure("gens x,y,z\norders 2,2,2\ncomm [x,y] = z*y\n");
  CHECK(e.line() == 3);

  e = parse_failure("gens x,x\n");
  CHECK(e.line() == 1);
  CHECK(e.column() == 8);

  e = parse_failure("gens x,y\norders 2\n");
  CHECK(e.line() == 2);

  e = parse_failure("gens x\norders 2\nrel x = 1\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);

  e = parse_failure("gens x,y\norders 2,2\ncomm [x,y] = 1\ncomm [x,y] = 1\n");
  CHECK(e.line() == 4);

  CHECK_THROWS_AS(parse_presentation("gens x\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation(""), parse_error);
  CHECK(std::string(parse_failure("gens x,x\n").what()).starts_with("line 1, column 8"));
}

TEST_CASE("inconsistent presentations are rejected") {
  // x^2 = y with y of order 2 central and [x,y] = y cannot hold together.
  auto const p = parse_presentation("gens x,y\norders 2,2\npow x^2 = y\ncomm [x,y] = y\n");
  CHECK_THROWS_AS(instantiate(p), group_axiom_error);
}

TEST_CASE("collection") {
  PcPresentation const k = klein();
  CHECK(collect(parse_word("y*x", k), k).exps == std::vector<std::uint32_t>{1, 1});

  PcPresentation const p = build_Gn(1);
  auto const           b = *p.index_of("b");
  CollectedWord const  sq = collect(parse_word("x1^2", p), p);
  CHECK(sq == p.generator(b));
  CHECK(render_word(sq, p) == "b");

  CollectedWord const inv = collect(parse_word("x1^-1", p), p);
  CHECK(render_word(inv, p) == "x1 b");
  GroupTable const G = instantiate(p);
  PcIndexer const  ix(p);
  CHECK(G.inv(ix.generator(0)) == ix.index(inv));

  CHECK(render_word(collect(parse_word("x2 x1", p), p), p) == "x1 x2 a");
  CHECK(collect(Word{}, p).is_identity());
  CHECK_THROWS_AS(collect(parse_word("x1", p), p, 0), collection_budget_error);
}

TEST_CASE("render and parse round-trip") {
  for (std::size_t n = 1; n <= 3; ++n) {
    PcPresentation const p = build_Gn(n);
    CHECK(parse_presentation(render(p)) == p);
  }
  for (auto sv : {presentations::extraspecial_27_exp3,
                  presentations::extraspecial_27_exp9,
                  presentations::quaternion_8, presentations::dicyclic_12}) {
    PcPresentation const p = parse_presentation(sv);
    CHECK(parse_presentation(render(p)) == p);
  }
}

TEST_CASE("presented groups") {
  GroupTable const Q8 = instantiate(parse_presentation(presentations::quaternion_8));
  CHECK(Q8.order() == 8);
  auto const ord = element_orders(Q8);
  CHECK(std::count(ord.begin(), ord.end(), 4u) == 6);

  GroupTable const E3 = instantiate(parse_presentation(presentations::extraspecial_27_exp3));
  GroupTable const E9 = instantiate(parse_presentation(presentations::extraspecial_27_exp9));
  CHECK(exponent(E3) == 3);
  CHECK(exponent(E9) == 9);
  for (GroupTable const* E : {&E3, &E9}) {
    CHECK(center(*E).order() == 3);
    CHECK(commutator_subgroup(*E) == center(*E));
  }

  GroupTable const Dic = instantiate(parse_presentation(presentations::dicyclic_12));
  CHECK(Dic.order() == 12);
  CHECK(!Dic.is_abelian());
  CHECK(center(Dic).order() == 2);
}

TEST_CASE("the 2-groups G_n") {
  for (std::size_t n = 1; n <= 2; ++n) {
    PcPresentation const p = build_Gn(n);
    CHECK(p.size() == gn_x_count(n) + 2);
    GroupTable const G = instantiate(p);
    CHECK(G.order() == (std::size_t{1} << ((std::size_t{1} << n) + 3)));
    CHECK(exponent(G) == 4);
    CHECK(nilpotency_class(G) == 2u);
    Subgroup const Z = center(G);
    CHECK(Z.order() == 4);
    PcIndexer const ix(p);
    CHECK(Z.contains(ix.generator(*p.index_of("a"))));
    CHECK(Z.contains(ix.generator(*p.index_of("b"))));
  }
  CHECK(build_Gn(1).names
        == std::vector<std::string>{"x1", "x2", "x3", "a", "b"});
  CHECK_THROWS_AS(build_Gn(0), input_error);
  CHECK(gn_parameter(build_Gn(2)) == 2);
  CHECK_THROWS_AS(gn_parameter(klein()), input_error);
}

TEST_CASE("alpha_n") {
  PcPresentation const p = build_Gn(1);
  GroupTable const     G = instantiate(p);
  PcIndexer const      ix(p);
  Automorphism const   a = alpha_n(p);
  auto gen = [&](char const* name) { return ix.generator(*p.index_of(name)); };
  CHECK(a(gen("x1")) == gen("x1"));
  CHECK(a(gen("x3")) == gen("x3"));
  CHECK(a(gen("a")) == gen("a"));
  CHECK(a(gen("b")) == gen("b"));
  CHECK(a(gen("x2")) == G.mul(gen("x2"), gen("x3")));
  Subgroup const Z = center(G);
  CHECK(!is_central(G, Z, a));
  CHECK(is_central(G, Z, a.then(a)));
}
