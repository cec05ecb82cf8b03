#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "autorb/aut.hpp"
#include "autorb/bounds.hpp"
#include "autorb/corpus.hpp"
#include "oracles.hpp"

using namespace autorb;
using Catch::Approx;

namespace {

double to_double(real const& x) { return x.convert_to<double>(); }

// Direct long double evaluation for small parameters.
long double direct_bound(long double c, long double d) {
  long double const L  = std::log(c);
  long double const e  = d + (7 + L) / 2 * (d * (d - 1) / 2 + d * (7 + L) * L / (2 * std::log(2.0L)));
  long double const A  = std::pow(c, e);
  return 1.01624L * d * (A + 1) * (std::log(A) / std::log(2.0L) + 1) + (7 + L) * L / 2;
}

}  // namespace

TEST_CASE("abelian p-group automorphism counts") {
  CHECK(hillar_rhea_aut_order({5, {1}}) == 4);
  CHECK(hillar_rhea_aut_order({2, {1}}) == 1);
  CHECK(hillar_rhea_aut_order({2, {1, 2}}) == 8);
  CHECK(hillar_rhea_aut_order({3, {1, 1}}) == oracle::count_gl(2, 3));
  CHECK(hillar_rhea_aut_order({2, {1, 1, 1}}) == oracle::count_gl(3, 2));
  CHECK(hillar_rhea_aut_order({5, {1, 1}}) == 480);
  CHECK(hillar_rhea_aut_order({2, {3}}) == 4);
  for (AbelianType t : {AbelianType{2, {1, 1, 2}}, AbelianType{2, {2, 3}},
                        AbelianType{3, {1, 2}}, AbelianType{2, {1, 2, 2}},
                        AbelianType{7, {2}}}) {
    CHECK(hillar_rhea_aut_order(t) == automorphism_group(build_abelian({t})).order);
  }
  CHECK(hr_lower_bound({2, {3}}) == 4);
  CHECK(hr_lower_bound({5, {1, 1}}) == 4);
  CHECK(hr_lower_bound({2, {1}}) == 1);
  CHECK_THROWS_AS(hr_lower_bound({2, {}}), input_error);
}

TEST_CASE("commutator subgroup bound") {
  CHECK(to_double(gm_commutator_bound(1)) == Approx(1.0));
  real const e = boost::multiprecision::exp(real(1));
  CHECK(to_double(gm_commutator_bound(e)) == Approx(std::exp(4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(gm_commutator_bound(0), input_error);
}

TEST_CASE("automorphism group order bound") {
  CHECK(to_double(aut_order_upper_bound(2)) == Approx(2.0));
  CHECK(to_double(aut_order_upper_bound(4)) == Approx(16.0));
  CHECK(6 <= to_double(aut_order_upper_bound(4)));
  CHECK(120 <= to_double(aut_order_upper_bound(60)));
  CHECK(to_double(log_aut_order_upper_bound(1)) == 0.0);
}

TEST_CASE("chebyshev theta") {
  CHECK(to_double(chebyshev_theta(1)) == 0.0);
  CHECK(to_double(chebyshev_theta(10)) == Approx(std::log(210.0)).epsilon(1e-15));
  CHECK(to_double(chebyshev_theta(10)) == Approx(5.347).margin(5e-4));
  for (std::uint64_t x : {2u, 97u, 1000u, 10007u}) {
    long double const ref = oracle::theta_naive(x);
    CHECK(std::abs(to_double(chebyshev_theta(static_cast<double>(x)))
                   - static_cast<double>(ref))
          <= 1e-9 * static_cast<double>(ref));
  }
  ThetaCheck const c = check_rosser_schoenfeld(100000);
  CHECK(c.pass);
  CHECK(c.monotone);
  CHECK(c.violations == 0);
  CHECK(c.worst_ratio < 1.0);
  CHECK_THROWS_AS(check_rosser_schoenfeld(limits::max_sieve + 1), size_limit_error);
}

TEST_CASE("order bound from maol and rank") {
  BoundReport const b11 = maol_order_bound(1, 1);
  REQUIRE(b11.A_rounded.has_value());
  CHECK(*b11.A_rounded == 1);
  CHECK(to_double(b11.log_order_bound) == Approx(2.03248).epsilon(1e-12));

  for (auto [c, d] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    CHECK(to_double(maol_order_bound(c, d).log_order_bound)
          == Approx(static_cast<double>(direct_bound(c, d))).epsilon(1e-9));
  }

  BoundReport const b32 = maol_order_bound(3, 2);
  CHECK(b32.log_A > 0);
  for (auto const& id : small_maol_ids()) {
    CHECK(b32.admits(build_builtin(id).order()));
  }

  BoundReport const big = maol_order_bound(23, 5);
  CHECK(!big.A_rounded.has_value());
  CHECK(boost::multiprecision::isfinite(big.log_log_order_bound));
  CHECK(big.log_A > 1000);

  for (std::uint64_t c = 1; c < 30; c += 3) {
    for (std::uint64_t d = 1; d < 6; ++d) {
      CHECK(maol_order_bound(c + 1, d).log_log_order_bound
            > maol_order_bound(c, d).log_log_order_bound);
      CHECK(maol_order_bound(c, d + 1).log_log_order_bound
            > maol_order_bound(c, d).log_log_order_bound);
    }
  }
  CHECK_THROWS_AS(maol_order_bound(0, 1), input_error);
}
