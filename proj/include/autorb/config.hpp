#pragma once

#include <cstddef>
#include <cstdint>

namespace autorb {

using elem_t = std::uint32_t;

inline constexpr elem_t no_elem = static_cast<elem_t>(-1);

// Size caps for the various algorithms. Everything here is desk scale.
struct limits {
  static constexpr std::size_t max_order            = 4096;
  static constexpr std::size_t max_exhaustive_assoc = 512;
  static constexpr std::size_t max_normal_enum      = 512;
  static constexpr std::size_t max_aut_order        = 2048;
  static constexpr std::size_t max_full_aut_list    = 256;
  static constexpr std::size_t max_tuple_enum       = 512;
  static constexpr std::size_t max_aut_elements     = 1'000'000;
  static constexpr std::size_t collect_step_budget  = 10'000'000;
  static constexpr std::size_t random_assoc_samples = 100'000;
  static constexpr std::uint64_t max_sieve          = 10'000'000;
};

}  // namespace autorb
