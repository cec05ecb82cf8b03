#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "autorb/aut.hpp"
#include "autorb/bounds.hpp"
#include "autorb/constructions.hpp"
#include "autorb/group_table.hpp"

namespace autorb {

using json = nlohmann::ordered_json;

/// One verified statement: what went in, what was computed, what it was
/// compared against.
struct CheckResult {
  std::string check_name;
  json        inputs;
  json        computed;
  json        bound_or_expected;
  bool        pass = false;
};

inline void to_json(json& j, CheckResult const& c) {
  j = json{{"check_name", c.check_name},
           {"inputs", c.inputs},
           {"computed", c.computed},
           {"bound_or_expected", c.bound_or_expected},
           {"pass", c.pass}};
}

struct SuiteReport {
  std::string              suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool pass() const {
    for (auto const& c : checks) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (auto const& c : checks) {
      n += !c.pass;
    }
    return n;
  }

  void add(std::string name, json inputs, json computed, json expected,
           bool pass) {
    checks.push_back({std::move(name), std::move(inputs), std::move(computed),
                      std::move(expected), pass});
  }

  void append(SuiteReport const& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

inline void to_json(json& j, SuiteReport const& r) {
  j = json{{"suite", r.suite},
           {"pass", r.pass()},
           {"checks_run", r.checks.size()},
           {"failures", r.failures()},
           {"notes", r.notes},
           {"checks", r.checks}};
}

/// Decimal string of a high-precision value, 20 significant digits.
inline std::string to_string(real const& x) {
  return x.str(20, std::ios_base::fmtflags(0));
}

inline json abelian_json(std::vector<AbelianType> const& ts) {
  json out = json::array();
  for (auto const& t : ts) {
    out.push_back({{"prime", t.prime}, {"exponents", t.exponents}});
  }
  return out;
}

inline json group_json(GroupTable const& G) {
  auto const t = G.table();
  return json{{"order", G.order()},
              {"mul", std::vector<elem_t>(t.begin(), t.end())},
              {"labels", G.labels()}};
}

inline json orbit_json(OrbitPartition const& P) {
  return json{{"orbits", P.orbits}, {"maol", P.max_length()}};
}

/// Plain-text rendering of a suite: one PASS/FAIL line per check.
inline std::string render_table(SuiteReport const& r) {
  std::ostringstream os;
  for (auto const& c : r.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.check_name << "  "
       << c.inputs.dump() << "  computed=" << c.computed.dump()
       << "  expected=" << c.bound_or_expected.dump() << '\n';
  }
  for (auto const& n : r.notes) {
    os << "note: " << n << '\n';
  }
  os << r.suite << ": " << (r.checks.size() - r.failures()) << '/'
     << r.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace autorb
