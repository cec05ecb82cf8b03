#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorb/constructions.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/pc_presentation.hpp"

namespace autorb {

struct NamedGroup {
  std::string id;
  GroupTable  group;
};

namespace presentations {

inline constexpr std::string_view extraspecial_27_exp3 =
    "gens x,y,z\n"
    "orders 3,3,3\n"
    "comm [x,y] = z\n";

inline constexpr std::string_view extraspecial_27_exp9 =
    "gens x,y,z\n"
    "orders 3,3,3\n"
    "pow x^3 = z\n"
    "comm [x,y] = z\n";

inline constexpr std::string_view quaternion_8 =
    "gens x,y,z\n"
    "orders 2,2,2\n"
    "pow x^2 = z\n"
    "pow y^2 = z\n"
    "comm [x,y] = z\n";

// Z/3 x| Z/4 with the generator of order 4 inverting.
inline constexpr std::string_view dicyclic_12 =
    "gens x,y,z\n"
    "orders 2,2,3\n"
    "pow x^2 = y\n"
    "comm [x,z] = z^2\n";

}  // namespace presentations

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view id) {
  std::size_t value = 0;
  auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw input_error("bad number in group id '" + std::string(id) + "'");
  }
  return value;
}

// "2x4x4" -> {2, 4, 4}
inline std::vector<std::size_t> parse_orders(std::string_view s,
                                             std::string_view id) {
  std::vector<std::size_t> out;
  std::size_t              start = 0;
  while (true) {
    std::size_t pos = s.find('x', start);
    out.push_back(parse_size(s.substr(start, pos - start), id));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

}  // namespace detail

/// Presentation for the builtin ids that are defined by one.
inline std::optional<PcPresentation> builtin_presentation(std::string_view id) {
  if (id == "extraspecial:27:exp3") {
    return parse_presentation(presentations::extraspecial_27_exp3);
  }
  if (id == "extraspecial:27:exp9") {
    return parse_presentation(presentations::extraspecial_27_exp9);
  }
  if (id == "quaternion:8") {
    return parse_presentation(presentations::quaternion_8);
  }
  if (id == "dicyclic:12") {
    return parse_presentation(presentations::dicyclic_12);
  }
  if (id.starts_with("Gn:")) {
    return build_Gn(detail::parse_size(id.substr(3), id));
  }
  return std::nullopt;
}

/// Builds a group from a builtin id:
///   cyclic:m  sym:n  alt:n  abelian:AxBx..  dih:AxBx..  psl2:q  Gn:n
///   extraspecial:27:exp3  extraspecial:27:exp9  quaternion:8  dicyclic:12
///   frobenius:20  frobenius:21  product:<id>,<id>[,...]
inline GroupTable build_builtin(std::string_view id) {
  if (auto p = builtin_presentation(id)) {
    return instantiate(*p);
  }
  auto const colon = id.find(':');
  if (colon == std::string_view::npos) {
    throw input_error("unknown group id '" + std::string(id) + "'");
  }
  std::string_view const kind = id.substr(0, colon);
  std::string_view const arg  = id.substr(colon + 1);
  if (kind == "cyclic") {
    return build_cyclic(detail::parse_size(arg, id));
  }
  if (kind == "sym") {
    return symmetric_group(detail::parse_size(arg, id));
  }
  if (kind == "alt") {
    return alternating_group(detail::parse_size(arg, id));
  }
  if (kind == "abelian") {
    return build_abelian_from_orders(detail::parse_orders(arg, id));
  }
  if (kind == "dih") {
    return generalized_dihedral(
        build_abelian_from_orders(detail::parse_orders(arg, id)));
  }
  if (kind == "psl2") {
    return psl2(static_cast<std::uint32_t>(detail::parse_size(arg, id)));
  }
  if (kind == "frobenius") {
    if (arg == "20") {
      return build_permutation_group(
          5, std::vector<std::string>{"(1,2,3,4,5)", "(2,3,5,4)"});
    }
    if (arg == "21") {
      return build_permutation_group(
          7, std::vector<std::string>{"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
    }
  }
  if (kind == "product") {
    GroupTable  result;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = arg.find(',', start);
      result = direct_product(result,
                              build_builtin(arg.substr(start, pos - start)));
      if (pos == std::string_view::npos) {
        return result;
      }
      start = pos + 1;
    }
  }
  throw input_error("unknown group id '" + std::string(id) + "'");
}

inline NamedGroup named(std::string id) {
  GroupTable g = build_builtin(id);
  return {std::move(id), std::move(g)};
}

/// Ids of the seven groups with maol <= 3.
inline std::vector<std::string> small_maol_ids() {
  return {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
          "cyclic:6", "abelian:2x2", "sym:3"};
}

/// Construction corpus for the classification and bound checks: mostly
/// groups of order <= 60, plus Sym(5).
inline std::vector<std::string> classification_corpus_ids() {
  std::vector<std::string> ids;
  for (int m = 1; m <= 24; ++m) {
    ids.push_back("cyclic:" + std::to_string(m));
  }
  for (char const* a : {"2x2", "2x4", "2x2x2", "3x3", "2x6", "2x8", "4x4",
                        "2x2x4", "2x2x2x2", "5x5", "3x9", "3x3x3", "2x12",
                        "2x2x6", "6x6", "2x4x4", "4x8"}) {
    ids.push_back(std::string("abelian:") + a);
  }
  for (int m = 3; m <= 15; ++m) {
    ids.push_back("dih:" + std::to_string(m));
  }
  for (char const* s :
       {"dih:3x3", "dih:2x4", "sym:3", "sym:4", "sym:5", "alt:4", "alt:5",
        "quaternion:8", "dicyclic:12", "extraspecial:27:exp3",
        "extraspecial:27:exp9", "frobenius:20", "frobenius:21",
        "product:cyclic:2,sym:3", "product:cyclic:3,sym:3",
        "product:alt:4,cyclic:2", "product:sym:3,sym:3",
        "product:quaternion:8,cyclic:3", "product:dih:5,cyclic:3"}) {
    ids.emplace_back(s);
  }
  return ids;
}

/// Small nonabelian simple groups used for the class-length scan.
inline std::vector<std::string> simple_corpus_ids() {
  return {"alt:5", "alt:6", "alt:7", "psl2:7", "psl2:8", "psl2:11"};
}

inline std::vector<NamedGroup> build_all(std::vector<std::string> const& ids) {
  std::vector<NamedGroup> out;
  for (auto const& id : ids) {
    out.push_back(named(id));
  }
  return out;
}

}  // namespace autorb
