// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "autorb/corpus.hpp"
#include "autorb/verify.hpp"
#include "properties.hpp"

using namespace autorb;

namespace {

struct Verdict {
  bool        pass = false;
  std::string detail;
};

// Checks of `r` whose name is in `names`; fails if there are none.
Verdict select(SuiteReport const& r, std::set<std::string> const& names) {
  std::size_t run = 0, bad = 0;
  std::string first;
  for (auto const& c : r.checks) {
    if (!names.count(c.check_name)) {
      continue;
    }
    ++run;
    if (!c.pass) {
      if (bad++ == 0) {
        first = c.check_name + " " + c.inputs.dump();
      }
    }
  }
  Verdict v{run > 0 && bad == 0,
            std::to_string(run - bad) + "/" + std::to_string(run) + " checks"};
  if (bad) {
    v.detail += "; first failure " + first;
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.jobs      = 1;
  opt.long_mode = argc > 1 && std::string(argv[1]) == "--long";

  using clock = std::chrono::steady_clock;
  int  failed = 0;
  auto report = [&](int id, std::function<Verdict()> const& f) {
    auto const    t0 = clock::now();
    Verdict const v  = f();
    double const  s  = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("criterion %2d: %s  (%s, %.1f s)\n", id, v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), s);
    std::fflush(stdout);
    failed += !v.pass;
  };

  SuiteReport classification;
  SuiteReport formulas;

  report(1, [&] {
    classification = verify_classification(opt);
    return select(classification, {"maol_golden"});
  });
  report(2, [&] {
    std::size_t small = 0;
    for (auto const& id : classification_corpus_ids()) {
      small += build_builtin(id).order() <= 60;
    }
    Verdict v = select(classification,
                       {"maol_classification", "maol_small_side_complete"});
    v.detail += "; " + std::to_string(small) + " groups of order <= 60";
    v.pass = v.pass && small >= 40;
    return v;
  });
  report(3, [&] {
    return select(verify_gn(opt),
                  {"gn_order", "gn_center_klein", "gn_central_quotient",
                   "gn_exponent", "gn_class", "gn_alpha", "gn_maol",
                   "gn_aut_central_index"});
  });
  report(4, [&] { return select(classification, {"extraspecial_27_maol"}); });
  report(5, [&] {
    formulas = verify_formulas(opt);
    return select(formulas, {"abelian_aut_order_formula"});
  });
  report(6, [&] {
    return select(verify_bounds(opt), {"commutator_subgroup_bound",
                                       "aut_order_bound", "maol_order_bound"});
  });
  report(7, [&] { return select(formulas, {"chebyshev_theta_bound"}); });
  report(8, [&] {
    return select(formulas, {"standard_tuple_count", "pac_tuple_orbits"});
  });
  report(9, [&] { return select(verify_simple_scan(opt), {"simple_mccl"}); });
  report(10, [&] {
    Verdict v{true, ""};
    for (auto const& o : props::run_all()) {
      if (!o.ok()) {
        v.pass = false;
        v.detail += o.name + " failed: " + o.first_failure + "; ";
      }
    }
    if (v.pass) {
      v.detail = "6 properties, 100 cases each";
    }
    return v;
  });

  for (auto const& n : classification.notes) {
    std::printf("note: %s\n", n.c_str());
  }
  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
