#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "autorb/aut.hpp"
#include "autorb/corpus.hpp"
#include "autorb/errors.hpp"
#include "autorb/pc_presentation.hpp"
#include "autorb/report.hpp"
#include "autorb/structure.hpp"
#include "autorb/verify.hpp"

namespace {

using namespace autorb;

enum exit_code : int { ok = 0, verify_failed = 1, bad_input = 2, cap_exceeded = 3 };

struct RunConfig {
  std::string format = "json";
  std::string out;
  std::size_t cap    = limits::max_order;
  std::size_t jobs   = 1;
  bool        long_mode = false;
};

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw input_error("cannot read '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A DSL file if the path exists, otherwise a builtin id.
GroupTable load_group(std::string const& source, RunConfig const& cfg) {
  GroupTable G;
  if (std::filesystem::is_regular_file(source)) {
    G = instantiate(parse_presentation(read_file(source)));
  } else {
    G = build_builtin(source);
  }
  if (G.order() > cfg.cap) {
    throw size_limit_error("group order " + std::to_string(G.order())
                           + " exceeds --cap " + std::to_string(cfg.cap));
  }
  return G;
}

void emit(json const& doc, std::string const& table, RunConfig const& cfg) {
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) {
      throw input_error("cannot write '" + cfg.out + "'");
    }
    os << doc.dump(2) << '\n';
  }
  if (cfg.format == "json") {
    if (cfg.out.empty()) {
      std::cout << doc.dump(2) << '\n';
    }
  } else {
    std::cout << table;
  }
}

int cmd_build(std::string const& source, RunConfig const& cfg) {
  GroupTable const G   = load_group(source, cfg);
  auto const       cls = nilpotency_class(G);
  json             doc{{"source", source},
                       {"order", G.order()},
                       {"abelian", G.is_abelian()},
                       {"center_order", center(G).order()},
                       {"derived_order", commutator_subgroup(G).order()},
                       {"exponent", exponent(G)},
                       {"nilpotency_class", cls ? json(*cls) : json(nullptr)},
                       {"group", group_json(G)}};
  std::ostringstream t;
  t << "source            " << source << '\n'
    << "order             " << G.order() << '\n'
    << "abelian           " << (G.is_abelian() ? "yes" : "no") << '\n'
    << "center order      " << doc["center_order"] << '\n'
    << "derived order     " << doc["derived_order"] << '\n'
    << "exponent          " << doc["exponent"] << '\n'
    << "nilpotency class  " << (cls ? std::to_string(*cls) : "not nilpotent")
    << '\n';
  emit(doc, t.str(), cfg);
  return ok;
}

int cmd_maol(std::string const& source, RunConfig const& cfg) {
  GroupTable const     G = load_group(source, cfg);
  AutGroup const       A = automorphism_group(G);
  OrbitPartition const P = aut_orbits(G, A);
  // For abelian G every automorphism is central.
  std::optional<std::uint64_t> cent;
  if (G.is_abelian()) {
    cent = A.order;
  } else {
    try {
      cent = count_central_automorphisms(G);
    } catch (size_limit_error const&) {
    }
  }
  json doc{{"source", source},
           {"order", G.order()},
           {"maol", P.max_length()},
           {"orbit_lengths", P.lengths()},
           {"aut_order", A.order},
           {"aut_cent_order", cent ? json(*cent) : json(nullptr)},
           {"aut_cent_index", cent ? json(A.order / *cent) : json(nullptr)},
           {"orbits", orbit_json(P)}};
  std::ostringstream t;
  t << "source          " << source << '\n'
    << "order           " << G.order() << '\n'
    << "maol            " << P.max_length() << '\n'
    << "orbit lengths  ";
  for (auto l : P.lengths()) {
    t << ' ' << l;
  }
  t << '\n'
    << "|Aut|           " << A.order << '\n'
    << "|Aut_cent|      " << (cent ? std::to_string(*cent) : "over cap") << '\n'
    << "index           "
    << (cent ? std::to_string(A.order / *cent) : "unknown") << '\n';
  emit(doc, t.str(), cfg);
  return ok;
}

int cmd_verify(std::string const& suite, RunConfig const& cfg) {
  SuiteReport const r = run_suite(suite, {cfg.jobs, cfg.long_mode});
  emit(json(r), render_table(r), cfg);
  return r.pass() ? ok : verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups: automorphism orbits, pc presentations, checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", cfg.out, "Write the JSON document to PATH");
    sub->add_option("--cap", cfg.cap, "Largest group order accepted")
        ->check(CLI::Range(std::size_t{1}, limits::max_order));
    sub->add_option("--jobs", cfg.jobs, "Worker threads for corpus sweeps")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    sub->add_flag("--long", cfg.long_mode, "Include long-running checks");
  };

  std::string source, suite;
  auto*       build = app.add_subcommand("build", "Build a group and summarise it");
  build->add_option("source", source, "Builtin id or presentation file")->required();
  add_common(build);
  auto* maol_cmd = app.add_subcommand("maol", "Aut(G)-orbits on G");
  maol_cmd->add_option("source", source, "Builtin id or presentation file")
      ->required();
  add_common(maol_cmd);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? ok : bad_input;
  }

  try {
    if (*build) {
      return cmd_build(source, cfg);
    }
    if (*maol_cmd) {
      return cmd_maol(source, cfg);
    }
    return cmd_verify(suite, cfg);
  } catch (parse_error const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return bad_input;
  } catch (input_error const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (group_axiom_error const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return bad_input;
  } catch (size_limit_error const& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return cap_exceeded;
  } catch (collection_budget_error const& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return cap_exceeded;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return verify_failed;
  }
}
