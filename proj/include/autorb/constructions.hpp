#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "autorb/config.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"

namespace autorb {

/// Z/p^e_1 x ... x Z/p^e_n with 1 <= e_1 <= ... <= e_n.
struct AbelianType {
  std::uint64_t         prime = 2;
  std::vector<unsigned> exponents;

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (unsigned e : exponents) {
      r = checked_mul(r, checked_pow(prime, e));
    }
    return r;
  }

  void validate() const {
    if (!is_prime(prime)) {
      throw input_error("abelian type prime " + std::to_string(prime)
                        + " is not prime");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) {
        throw input_error("abelian type exponents must be positive");
      }
      if (i > 0 && exponents[i] < exponents[i - 1]) {
        throw input_error("abelian type exponents must be nondecreasing");
      }
    }
  }

  friend bool operator==(AbelianType const&, AbelianType const&) = default;
};

inline GroupTable build_cyclic(std::size_t m) {
  if (m == 0) {
    throw input_error("cyclic group order must be positive");
  }
  if (m > limits::max_order) {
    throw size_limit_error("cyclic group order exceeds cap");
  }
  std::vector<elem_t>      mul(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < m; ++b) {
      mul[a * m + b] = static_cast<elem_t>((a + b) % m);
    }
  }
  return GroupTable::from_table(m, std::move(mul), std::move(labels));
}

// Elements are pairs ordered lexicographically: (g, h) has index g*|H| + h.
inline GroupTable direct_product(GroupTable const& G, GroupTable const& H) {
  std::size_t const m = G.order();
  std::size_t const k = H.order();
  if (m * k > limits::max_order) {
    throw size_limit_error("direct product order " + std::to_string(m * k)
                           + " exceeds cap");
  }
  std::size_t const        n = m * k;
  std::vector<elem_t>      mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    elem_t const g1 = static_cast<elem_t>(x / k);
    elem_t const h1 = static_cast<elem_t>(x % k);
    labels[x] = "(" + G.label(g1) + "," + H.label(h1) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const g2 = static_cast<elem_t>(y / k);
      elem_t const h2 = static_cast<elem_t>(y % k);
      mul[x * n + y]  = G.mul(g1, g2) * static_cast<elem_t>(k) + H.mul(h1, h2);
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels));
}

/// Direct product of the cyclic factors Z/p^e, primes ascending, exponents in
/// the listed (nondecreasing) order.
inline GroupTable build_abelian(std::vector<AbelianType> types) {
  std::uint64_t total = 1;
  for (auto const& t : types) {
    t.validate();
    total = checked_mul(total, t.order());
    if (total > limits::max_order) {
      throw size_limit_error("abelian group order exceeds cap");
    }
  }
  std::stable_sort(types.begin(), types.end(),
                   [](auto const& a, auto const& b) { return a.prime < b.prime; });
  GroupTable result;
  for (auto const& t : types) {
    for (unsigned e : t.exponents) {
      result = direct_product(result, build_cyclic(checked_pow(t.prime, e)));
    }
  }
  return result;
}

/// Direct product of cyclic groups of the given orders, in the given order.
inline GroupTable build_abelian_from_orders(std::vector<std::size_t> const& orders) {
  std::uint64_t total = 1;
  for (auto m : orders) {
    if (m == 0) {
      throw input_error("cyclic factor order must be positive");
    }
    total = checked_mul(total, m);
    if (total > limits::max_order) {
      throw size_limit_error("abelian group order exceeds cap");
    }
  }
  GroupTable result;
  for (auto m : orders) {
    result = direct_product(result, build_cyclic(m));
  }
  return result;
}

/// Dih(A) = A x| Z/2 with the involution acting by inversion. The element
/// (a, s) has index s*|A| + a.
inline GroupTable generalized_dihedral(GroupTable const& A) {
  if (!A.is_abelian()) {
    throw input_error("generalized dihedral group needs an abelian group");
  }
  std::size_t const m = A.order();
  if (2 * m > limits::max_order) {
    throw size_limit_error("generalized dihedral group order exceeds cap");
  }
  std::size_t const        n = 2 * m;
  std::vector<elem_t>      mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    elem_t const a = static_cast<elem_t>(x % m);
    std::size_t  s = x / m;
    labels[x]      = s ? A.label(a) + "*t" : A.label(a);
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const b = static_cast<elem_t>(y % m);
      std::size_t  t = y / m;
      elem_t const c = A.mul(a, s ? A.inv(b) : b);
      mul[x * n + y] = static_cast<elem_t>(((s + t) % 2) * m + c);
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels));
}

// ---------------------------------------------------------------------------
// Permutation groups

/// A permutation of {0, ..., degree-1}; composition is left to right
/// (apply `*this` first), matching right actions.
struct Permutation {
  std::vector<std::uint32_t> images;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      p.images[i] = static_cast<std::uint32_t>(i);
    }
    return p;
  }

  std::size_t degree() const noexcept { return images.size(); }

  Permutation then(Permutation const& other) const {
    Permutation r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      r.images[i] = other.images[images[i]];
    }
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] != i) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images) {
      h = (h ^ v) * 1099511628211ULL;
    }
    return h;
  }
};

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "(1 2 3)".
/// "()" and the empty string denote the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = Permutation::identity(degree);
  std::vector<bool> touched(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
      ++i;
    }
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw input_error("expected '(' in cycle notation: "
                        + std::string(text));
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i,
                                       text.data() + text.size(), value);
      if (ec != std::errc{} || value == 0 || value > degree) {
        throw input_error("bad point in cycle notation: " + std::string(text));
      }
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(value - 1);
    }
    for (auto v : cycle) {
      if (touched[v]) {
        throw input_error("point repeated in cycle notation: "
                          + std::string(text));
      }
      touched[v] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return p;
}

inline std::string cycles_string(Permutation const& p) {
  std::string       out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.images[i] == i) {
      continue;
    }
    out += "(";
    std::size_t j = i;
    bool        first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j     = p.images[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Cayley table of the subgroup of Sym(degree) generated by `generators`.
///
/// Elements are enumerated breadth-first from the identity, trying generators
/// in the given order, so the indexing is deterministic.
inline GroupTable build_permutation_group(
    std::size_t degree, std::vector<Permutation> const& generators) {
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw input_error("generator degree mismatch");
    }
    std::vector<bool> hit(degree, false);
    for (auto v : g.images) {
      if (v >= degree || hit[v]) {
        throw input_error("generator is not a permutation");
      }
      hit[v] = true;
    }
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, elem_t, PermutationHash> index{
      {elements[0], 0}};
  std::vector<elem_t> parent{no_elem};
  std::vector<elem_t> via{no_elem};
  std::size_t const   k = generators.size();
  std::vector<elem_t> right;  // right[i*k + s] = index of elements[i]*gen[s]
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation next = elements[i].then(generators[s]);
      auto [it, inserted] =
          index.try_emplace(next, static_cast<elem_t>(elements.size()));
      if (inserted) {
        if (elements.size() >= limits::max_order) {
          throw size_limit_error("permutation group closure exceeds cap "
                                 + std::to_string(limits::max_order));
        }
        elements.push_back(std::move(next));
        parent.push_back(static_cast<elem_t>(i));
        via.push_back(static_cast<elem_t>(s));
      }
      right.push_back(it->second);
    }
  }
  std::size_t const   n = elements.size();
  std::vector<elem_t> mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    elem_t* row = mul.data() + i * n;
    row[0]      = static_cast<elem_t>(i);
    for (std::size_t j = 1; j < n; ++j) {
      row[j] = right[static_cast<std::size_t>(row[parent[j]]) * k + via[j]];
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = cycles_string(elements[i]);
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels));
}

inline GroupTable build_permutation_group(
    std::size_t degree, std::vector<std::string> const& generators) {
  std::vector<Permutation> gens;
  for (auto const& g : generators) {
    gens.push_back(parse_cycles(g, degree));
  }
  return build_permutation_group(degree, gens);
}

inline std::string cycle_of_range(std::size_t from, std::size_t to) {
  std::string s = "(";
  for (std::size_t i = from; i <= to; ++i) {
    s += std::to_string(i) + (i < to ? "," : "");
  }
  return s + ")";
}

inline GroupTable symmetric_group(std::size_t n) {
  if (n == 0) {
    throw input_error("symmetric group degree must be positive");
  }
  if (n == 1) {
    return GroupTable();
  }
  if (n == 2) {
    return build_permutation_group(2, std::vector<std::string>{"(1,2)"});
  }
  return build_permutation_group(
      n, std::vector<std::string>{"(1,2)", cycle_of_range(1, n)});
}

inline GroupTable alternating_group(std::size_t n) {
  if (n == 0) {
    throw input_error("alternating group degree must be positive");
  }
  if (n < 3) {
    return GroupTable();
  }
  if (n == 3) {
    return build_permutation_group(3, std::vector<std::string>{"(1,2,3)"});
  }
  std::string second = n % 2 == 1 ? cycle_of_range(1, n) : cycle_of_range(2, n);
  return build_permutation_group(
      n, std::vector<std::string>{"(1,2,3)", second});
}

namespace detail {

// Arithmetic in GF(q) for q prime or q in {4, 8}; elements are 0..q-1.
class SmallField {
 public:
  explicit SmallField(std::uint32_t q) : q_(q) {
    if (is_prime(q)) {
      prime_ = true;
    } else if (q == 4) {
      poly_ = 0b111;
      bits_ = 2;
    } else if (q == 8) {
      poly_ = 0b1011;
      bits_ = 3;
    } else {
      throw input_error("unsupported field size " + std::to_string(q));
    }
  }

  std::uint32_t size() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return prime_ ? (a + b) % q_ : (a ^ b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    return prime_ ? (q_ - a) % q_ : a;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (prime_) {
      return static_cast<std::uint32_t>((std::uint64_t{a} * b) % q_);
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < bits_; ++i) {
      if (b & (1u << i)) {
        r ^= a << i;
      }
    }
    for (int i = 2 * static_cast<int>(bits_) - 2;
         i >= static_cast<int>(bits_); --i) {
      if (r & (1u << i)) {
        r ^= poly_ << (i - static_cast<int>(bits_));
      }
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        return b;
      }
    }
    throw input_error("zero has no inverse");
  }
  std::uint32_t primitive() const {
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t x = g;
      std::uint32_t k = 1;
      while (x != 1) {
        x = mul(x, g);
        ++k;
      }
      if (k == q_ - 1) {
        return g;
      }
    }
    return 1;
  }

 private:
  std::uint32_t q_;
  bool          prime_ = false;
  std::uint32_t poly_  = 0;
  unsigned      bits_  = 0;
};

}  // namespace detail

/// PSL(2,q) acting on the q+1 points of the projective line, generated by
/// x -> x+1, x -> -1/x and x -> w^2 x for a primitive element w. Supported
/// q: primes and 4, 8. Point q is infinity.
inline std::vector<Permutation> psl2_generators(std::uint32_t q) {
  detail::SmallField F(q);
  std::uint32_t const inf = q;
  auto mobius = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                    std::uint32_t d) {
    Permutation p;
    p.images.resize(q + 1);
    for (std::uint32_t x = 0; x <= q; ++x) {
      std::uint32_t num, den;
      if (x == inf) {
        num = a;
        den = c;
      } else {
        num = F.add(F.mul(a, x), b);
        den = F.add(F.mul(c, x), d);
      }
      p.images[x] = den == 0 ? inf : F.mul(num, F.inv(den));
    }
    return p;
  };
  std::uint32_t const w  = F.primitive();
  std::uint32_t const w2 = F.mul(w, w);
  return {mobius(1, 1, 0, 1), mobius(0, F.neg(1), 1, 0), mobius(w2, 0, 0, 1)};
}

inline GroupTable psl2(std::uint32_t q) {
  return build_permutation_group(q + 1, psl2_generators(q));
}

}  // namespace autorb
