#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "autorb/aut.hpp"
#include "autorb/corpus.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"
#include "autorb/structure.hpp"

namespace autorb {

struct ClassifiedGroup {
  std::string                id;
  std::size_t                order = 0;
  std::size_t                maol  = 0;
  std::optional<std::string> match;  // small-maol reference it is isomorphic to
  bool                       pass = true;
};

struct ClassificationReport {
  std::vector<ClassifiedGroup> groups;
  std::vector<std::string>     references_found;
  std::vector<std::string>     references_missing;
  bool                         pass = true;
};

/// Splits a corpus at maol 3. Every group on the small side must be
/// isomorphic to one of the seven reference groups, and each reference must
/// occur in the corpus. A corpus can refute the classification, never prove
/// it.
inline ClassificationReport verify_maol_classification(
    std::vector<NamedGroup> const& corpus, std::vector<std::size_t> const& maols) {
  if (corpus.size() != maols.size()) {
    throw input_error("verify_maol_classification: one maol per group");
  }
  std::vector<NamedGroup> const refs = build_all(small_maol_ids());
  std::vector<bool>             found(refs.size(), false);
  ClassificationReport          report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ClassifiedGroup c{corpus[i].id, corpus[i].group.order(), maols[i], {}, true};
    if (c.maol <= 3) {
      for (std::size_t r = 0; r < refs.size(); ++r) {
        if (are_isomorphic(corpus[i].group, refs[r].group)) {
          c.match  = refs[r].id;
          found[r] = true;
          break;
        }
      }
      c.pass = c.match.has_value();
    }
    report.pass = report.pass && c.pass;
    report.groups.push_back(std::move(c));
  }
  for (std::size_t r = 0; r < refs.size(); ++r) {
    (found[r] ? report.references_found : report.references_missing)
        .push_back(refs[r].id);
  }
  report.pass = report.pass && report.references_missing.empty();
  return report;
}

struct SimpleScanEntry {
  std::string                id;
  std::size_t                order = 0;
  std::size_t                mccl  = 0;
  std::optional<std::size_t> alt_degree;
  std::optional<std::size_t> three_cycle_class;
  bool                       pass = true;
};

struct SimpleScanReport {
  std::vector<SimpleScanEntry> entries;
  bool                         pass = true;
};

/// Conjugacy-class length of the 3-cycle (1,2,3) in a permutation group
/// whose labels are cycle strings, or nullopt if it is absent.
inline std::optional<std::size_t> three_cycle_class_length(GroupTable const& G) {
  for (elem_t g = 0; g < G.order(); ++g) {
    if (G.label(g) == "(1,2,3)") {
      return G.order() / centralizer(G, g).order();
    }
  }
  return std::nullopt;
}

/// mccl over small nonabelian simple groups: 20 for Alt(5), above 23 for
/// the rest; in Alt(m) the 3-cycles form a class of length 2 C(m,3).
inline SimpleScanReport simple_mccl_scan(std::vector<NamedGroup> const& corpus) {
  SimpleScanReport report;
  for (auto const& [id, G] : corpus) {
    SimpleScanEntry e{id, G.order(), mccl(G), {}, {}, true};
    e.pass = (id == "alt:5") ? e.mccl == 20 : e.mccl > 23;
    if (id.starts_with("alt:")) {
      std::size_t const m = std::stoul(id.substr(4));
      e.alt_degree        = m;
      e.three_cycle_class = three_cycle_class_length(G);
      e.pass = e.pass && e.three_cycle_class == 2 * binomial(m, 3);
    }
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace autorb
