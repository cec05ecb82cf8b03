#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autorb/config.hpp"
#include "autorb/errors.hpp"

namespace autorb {

class GroupTable;

/// A subset of a group's element indices known to form a subgroup.
///
/// Members are kept sorted; `contains` is O(1) through a mask sized to the
/// parent group.
class Subgroup {
 public:
  Subgroup() = default;

  Subgroup(std::size_t parent_order, std::vector<elem_t> members)
      : members_(std::move(members)), mask_(parent_order, false) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    for (elem_t g : members_) {
      mask_[g] = true;
    }
  }

  static Subgroup from_mask(std::vector<bool> mask) {
    Subgroup out;
    for (std::size_t g = 0; g < mask.size(); ++g) {
      if (mask[g]) {
        out.members_.push_back(static_cast<elem_t>(g));
      }
    }
    out.mask_ = std::move(mask);
    return out;
  }

  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return mask_.size(); }
  bool contains(elem_t g) const { return g < mask_.size() && mask_[g]; }
  bool is_trivial() const noexcept { return members_.size() <= 1; }
  std::vector<elem_t> const& members() const noexcept { return members_; }
  std::vector<bool> const& mask() const noexcept { return mask_; }

  bool is_subset_of(Subgroup const& other) const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](elem_t g) { return other.contains(g); });
  }

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<elem_t> members_;
  std::vector<bool>   mask_;
};

/// A concrete finite group given by its full multiplication table.
///
/// Element 0 is the identity. Instances are immutable and always satisfy the
/// group axioms: the factory validates the Latin-square property, the
/// identity and inverse axioms, and associativity (exhaustively up to
/// `limits::max_exhaustive_assoc`, on generator-complete triples plus random
/// samples above that).
class GroupTable {
 public:
  GroupTable() : order_(1), mul_{0}, inv_{0} {}

  static GroupTable from_table(std::size_t              order,
                               std::vector<elem_t>      mul,
                               std::vector<std::string> labels = {}) {
    return GroupTable(order, std::move(mul), std::move(labels));
  }

  std::size_t order() const noexcept { return order_; }

  elem_t mul(elem_t a, elem_t b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }

  elem_t inv(elem_t a) const noexcept { return inv_[a]; }

  elem_t pow(elem_t a, std::int64_t k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    elem_t result = 0;
    elem_t base   = a;
    while (k > 0) {
      if (k & 1) {
        result = mul(result, base);
      }
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  // x^-1 g x
  elem_t conj(elem_t g, elem_t x) const { return mul(mul(inv(x), g), x); }

  // [g,h] = g^-1 h^-1 g h
  elem_t comm(elem_t g, elem_t h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  std::span<elem_t const> table() const noexcept { return mul_; }

  std::span<elem_t const> row(elem_t a) const noexcept {
    return std::span<elem_t const>(mul_).subspan(
        static_cast<std::size_t>(a) * order_, order_);
  }

  std::vector<std::string> const& labels() const noexcept { return labels_; }

  std::string label(elem_t g) const {
    if (g < labels_.size()) {
      return labels_[g];
    }
    return "g" + std::to_string(g);
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = a + 1; b < order_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(GroupTable const& a, GroupTable const& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  GroupTable(std::size_t order, std::vector<elem_t> mul,
             std::vector<std::string> labels)
      : order_(order), mul_(std::move(mul)), labels_(std::move(labels)) {
    if (order_ == 0) {
      throw group_axiom_error("group order must be positive");
    }
    if (order_ > limits::max_order) {
      throw size_limit_error("group order " + std::to_string(order_)
                             + " exceeds cap "
                             + std::to_string(limits::max_order));
    }
    if (mul_.size() != order_ * order_) {
      throw group_axiom_error("multiplication table has wrong size");
    }
    if (!labels_.empty() && labels_.size() != order_) {
      throw group_axiom_error("label count does not match group order");
    }
    validate();
  }

  void validate();

  std::size_t              order_;
  std::vector<elem_t>      mul_;
  std::vector<elem_t>      inv_;
  std::vector<std::string> labels_;
};

/// The subgroup generated by `gens`: breadth-first closure from the identity
/// under right multiplication.
inline Subgroup generate(GroupTable const& G, std::span<elem_t const> gens) {
  std::vector<bool>   mask(G.order(), false);
  std::vector<elem_t> members{0};
  mask[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (elem_t s : gens) {
      elem_t y = G.mul(members[i], s);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup::from_mask(std::move(mask));
}

inline Subgroup generate(GroupTable const& G,
                         std::initializer_list<elem_t> gens) {
  std::vector<elem_t> v(gens);
  return generate(G, std::span<elem_t const>(v));
}

inline Subgroup whole_group(GroupTable const& G) {
  return Subgroup::from_mask(std::vector<bool>(G.order(), true));
}

inline Subgroup trivial_subgroup(GroupTable const& G) {
  return Subgroup(G.order(), {0});
}

// Greedy generating set: scan elements in index order and keep those not yet
// in the span. Not minimal in general.
inline std::vector<elem_t> greedy_generators(GroupTable const& G) {
  std::vector<elem_t> gens;
  Subgroup            H = trivial_subgroup(G);
  for (elem_t g = 1; g < G.order() && H.order() < G.order(); ++g) {
    if (!H.contains(g)) {
      gens.push_back(g);
      H = generate(G, std::span<elem_t const>(gens));
    }
  }
  return gens;
}

inline elem_t element_order(GroupTable const& G, elem_t g) {
  elem_t       x = g;
  elem_t       k = 1;
  while (x != 0) {
    x = G.mul(x, g);
    ++k;
  }
  return k;
}

inline std::vector<elem_t> element_orders(GroupTable const& G) {
  std::vector<elem_t> out(G.order());
  for (elem_t g = 0; g < G.order(); ++g) {
    out[g] = element_order(G, g);
  }
  return out;
}

inline void GroupTable::validate() {
  std::size_t const n = order_;
  for (elem_t v : mul_) {
    if (v >= n) {
      throw group_axiom_error("table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw group_axiom_error("index 0 is not a two-sided identity");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[mul(a, b)]++) {
        throw group_axiom_error("row " + std::to_string(a)
                                + " is not a permutation");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[mul(b, a)]++) {
        throw group_axiom_error("column " + std::to_string(a)
                                + " is not a permutation");
      }
    }
  }
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) {
          throw group_axiom_error("inverse is not two-sided");
        }
        inv_[a] = static_cast<elem_t>(b);
        break;
      }
    }
  }
  auto assoc_fail = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul(mul(a, b), c) != mul(a, mul(b, c));
  };
  if (n <= limits::max_exhaustive_assoc) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        elem_t ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw group_axiom_error("multiplication is not associative");
          }
        }
      }
    }
    return;
  }
  // (ab)s = a(bs) for every generator s implies full associativity.
  for (elem_t s : greedy_generators(*this)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (assoc_fail(a, b, s)) {
          throw group_axiom_error("multiplication is not associative");
        }
      }
    }
  }
  std::mt19937_64                            rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < limits::random_assoc_samples; ++i) {
    if (assoc_fail(pick(rng), pick(rng), pick(rng))) {
      throw group_axiom_error("multiplication is not associative");
    }
  }
}

}  // namespace autorb
