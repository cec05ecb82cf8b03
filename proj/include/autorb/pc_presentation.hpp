#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autorb/automorphism.hpp"
#include "autorb/config.hpp"
#include "autorb/errors.hpp"
#include "autorb/group_table.hpp"
#include "autorb/number.hpp"

namespace autorb {

/// Normal form x_1^t_1 ... x_n^t_n with 0 <= t_i < e_i.
struct CollectedWord {
  std::vector<std::uint32_t> exps;

  bool is_identity() const {
    return std::all_of(exps.begin(), exps.end(),
                       [](auto t) { return t == 0; });
  }

  friend bool operator==(CollectedWord const&, CollectedWord const&) = default;
};

/// One factor x_gen^exp of an arbitrary word; exp may be negative.
struct Letter {
  std::size_t  gen = 0;
  std::int64_t exp = 1;

  friend bool operator==(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

/// A power-commutator presentation
///   x_i^e_i = power_rhs[i],  [x_i, x_j] = comm_rhs[i][j]  (i < j)
/// where every right-hand side is a normal form in generators after x_i.
struct PcPresentation {
  std::vector<std::string>                names;
  std::vector<std::uint32_t>              rel_orders;
  std::vector<CollectedWord>              power_rhs;
  std::vector<std::vector<CollectedWord>> comm_rhs;

  /// Presentation with the given generators and relative orders and all
  /// relations trivial.
  static PcPresentation trivial(std::vector<std::string>   names,
                                std::vector<std::uint32_t> orders) {
    PcPresentation p;
    std::size_t    n = names.size();
    p.names          = std::move(names);
    p.rel_orders     = std::move(orders);
    CollectedWord one{std::vector<std::uint32_t>(n, 0)};
    p.power_rhs.assign(n, one);
    p.comm_rhs.assign(n, std::vector<CollectedWord>(n, one));
    return p;
  }

  std::size_t size() const noexcept { return names.size(); }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (auto e : rel_orders) {
      r = checked_mul(r, e);
    }
    return r;
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  CollectedWord generator(std::size_t i) const {
    CollectedWord w{std::vector<std::uint32_t>(size(), 0)};
    w.exps[i] = 1;
    return w;
  }

  // Empty string when valid, otherwise a description of the violation.
  std::string check_rhs(CollectedWord const& w, std::size_t i) const {
    if (w.exps.size() != size()) {
      return "relation word has wrong length";
    }
    for (std::size_t k = 0; k < size(); ++k) {
      if (w.exps[k] == 0) {
        continue;
      }
      if (k <= i) {
        return "relation references generator " + names[k]
               + " whose index is not greater than " + names[i];
      }
      if (w.exps[k] >= rel_orders[k]) {
        return "exponent of " + names[k] + " out of range";
      }
    }
    return {};
  }

  void validate() const {
    std::size_t const n = size();
    if (rel_orders.size() != n || power_rhs.size() != n
        || comm_rhs.size() != n) {
      throw input_error("presentation component sizes disagree");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rel_orders[i] == 0) {
        throw input_error("relative orders must be positive");
      }
      if (auto e = check_rhs(power_rhs[i], i); !e.empty()) {
        throw input_error(e);
      }
      if (comm_rhs[i].size() != n) {
        throw input_error("commutator table has wrong size");
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (auto e = check_rhs(comm_rhs[i][j], i); !e.empty()) {
          throw input_error(e);
        }
      }
    }
  }

  friend bool operator==(PcPresentation const& a, PcPresentation const& b) {
    if (a.names != b.names || a.rel_orders != b.rel_orders
        || a.power_rhs != b.power_rhs) {
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (a.comm_rhs[i][j] != b.comm_rhs[i][j]) {
          return false;
        }
      }
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Text format

namespace detail {

class PcCursor {
 public:
  explicit PcCursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  // Skips blanks and comments, but not newlines or ';'.
  void skip_blanks() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') {
          advance();
        }
      } else {
        break;
      }
    }
  }

  bool at_statement_end() {
    skip_blanks();
    return at_end() || peek() == '\n' || peek() == ';';
  }

  [[noreturn]] void fail(std::string const& msg) const {
    throw parse_error(msg, line_, col_);
  }

  void expect(char c) {
    skip_blanks();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  bool accept(char c) {
    skip_blanks();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_blanks();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected identifier");
    }
    std::string out;
    while (!at_end()
           && (std::isalnum(static_cast<unsigned char>(peek()))
               || peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  std::int64_t integer() {
    skip_blanks();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') {
      advance();
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
    }
    std::int64_t value = 0;
    auto         first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec]     = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      fail("expected integer");
    }
    return value;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::string_view text_;
  std::size_t      pos_  = 0;
  std::size_t      line_ = 1;
  std::size_t      col_  = 1;
};

// <word> := '1' | factor (['*'] factor)*, factor := name ['^' int]
inline Word parse_word_at(PcCursor& cur, PcPresentation const& p) {
  Word w;
  cur.skip_blanks();
  if (cur.peek() == '1') {
    cur.advance();
    return w;
  }
  while (true) {
    std::size_t line = cur.line(), col = cur.column();
    std::string name = cur.identifier();
    auto        idx  = p.index_of(name);
    if (!idx) {
      throw parse_error("unknown generator '" + name + "'", line, col);
    }
    std::int64_t e = 1;
    if (cur.accept('^')) {
      e = cur.integer();
    }
    w.push_back({*idx, e});
    cur.accept('*');
    cur.skip_blanks();
    char c = cur.peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      return w;
    }
  }
}

// Converts a right-hand side to normal form, insisting on the canonical
// shape: strictly increasing generators after `after`, exponents in range.
inline CollectedWord rhs_at(PcCursor& cur, PcPresentation const& p,
                            std::size_t after) {
  std::size_t   line = cur.line(), col = cur.column();
  Word          w    = parse_word_at(cur, p);
  CollectedWord out{std::vector<std::uint32_t>(p.size(), 0)};
  std::size_t   last = after;
  bool          first = true;
  for (auto const& l : w) {
    if (l.gen <= after) {
      throw parse_error("relation references generator '" + p.names[l.gen]
                            + "' whose index is not greater than '"
                            + p.names[after] + "'",
                        line, col);
    }
    if (!first && l.gen <= last) {
      throw parse_error("relation word is not in normal form", line, col);
    }
    if (l.exp < 0 || l.exp >= static_cast<std::int64_t>(p.rel_orders[l.gen])) {
      throw parse_error("exponent of '" + p.names[l.gen] + "' out of range",
                        line, col);
    }
    out.exps[l.gen] = static_cast<std::uint32_t>(l.exp);
    last            = l.gen;
    first           = false;
  }
  return out;
}

}  // namespace detail

/// Parses the line-oriented presentation format:
///
///   gens x,y,z
///   orders 3,3,3
///   pow x^3 = z
///   comm [x,y] = z
///
/// Statements end at a newline or ';'. '#' starts a comment. Powers not
/// listed default to x^e = 1 and commutators default to 1.
inline PcPresentation parse_presentation(std::string_view text) {
  detail::PcCursor cur(text);
  PcPresentation   p;
  bool             have_gens = false, have_orders = false;
  std::vector<bool> pow_seen;
  std::vector<std::vector<bool>> comm_seen;

  while (true) {
    cur.skip_blanks();
    if (cur.at_end()) {
      break;
    }
    if (cur.peek() == '\n' || cur.peek() == ';') {
      cur.advance();
      continue;
    }
    std::size_t line = cur.line(), col = cur.column();
    std::string kw   = cur.identifier();
    if (kw == "gens") {
      if (have_gens) {
        throw parse_error("duplicate 'gens' statement", line, col);
      }
      std::vector<std::string> names;
      do {
        std::size_t l = cur.line(), c = cur.column();
        std::string name = cur.identifier();
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw parse_error("duplicate generator '" + name + "'", l, c);
        }
        names.push_back(name);
      } while (cur.accept(','));
      p         = PcPresentation::trivial(names, std::vector<std::uint32_t>(
                                                     names.size(), 1));
      have_gens = true;
    } else if (kw == "orders") {
      if (!have_gens) {
        throw parse_error("'orders' before 'gens'", line, col);
      }
      if (have_orders) {
        throw parse_error("duplicate 'orders' statement", line, col);
      }
      std::vector<std::uint32_t> orders;
      do {
        std::size_t  l = cur.line(), c = cur.column();
        std::int64_t e = cur.integer();
        if (e < 1 || e > static_cast<std::int64_t>(limits::max_order)) {
          throw parse_error("relative order out of range", l, c);
        }
        orders.push_back(static_cast<std::uint32_t>(e));
      } while (cur.accept(','));
      if (orders.size() != p.size()) {
        throw parse_error("expected " + std::to_string(p.size())
                              + " relative orders",
                          line, col);
      }
      p.rel_orders = orders;
      have_orders  = true;
      pow_seen.assign(p.size(), false);
      comm_seen.assign(p.size(), std::vector<bool>(p.size(), false));
    } else if (kw == "pow") {
      if (!have_orders) {
        throw parse_error("'pow' before 'gens' and 'orders'", line, col);
      }
      std::size_t l = cur.line(), c = cur.column();
      std::string name = cur.identifier();
      auto        i    = p.index_of(name);
      if (!i) {
        throw parse_error("unknown generator '" + name + "'", l, c);
      }
      cur.expect('^');
      std::size_t  el = cur.line(), ec = cur.column();
      std::int64_t e  = cur.integer();
      if (e != static_cast<std::int64_t>(p.rel_orders[*i])) {
        throw parse_error("power exponent must equal the relative order of '"
                              + name + "'",
                          el, ec);
      }
      if (pow_seen[*i]) {
        throw parse_error("duplicate power relation for '" + name + "'", l, c);
      }
      pow_seen[*i] = true;
      cur.expect('=');
      p.power_rhs[*i] = detail::rhs_at(cur, p, *i);
    } else if (kw == "comm") {
      if (!have_orders) {
        throw parse_error("'comm' before 'gens' and 'orders'", line, col);
      }
      cur.expect('[');
      std::size_t l1 = cur.line(), c1 = cur.column();
      std::string a  = cur.identifier();
      cur.expect(',');
      std::size_t l2 = cur.line(), c2 = cur.column();
      std::string b  = cur.identifier();
      cur.expect(']');
      auto i = p.index_of(a);
      auto j = p.index_of(b);
      if (!i) {
        throw parse_error("unknown generator '" + a + "'", l1, c1);
      }
      if (!j) {
        throw parse_error("unknown generator '" + b + "'", l2, c2);
      }
      if (*j <= *i) {
        throw parse_error("commutator [" + a + "," + b
                              + "] must name an earlier generator first",
                          l2, c2);
      }
      if (comm_seen[*i][*j]) {
        throw parse_error("duplicate commutator relation", l1, c1);
      }
      comm_seen[*i][*j] = true;
      cur.expect('=');
      p.comm_rhs[*i][*j] = detail::rhs_at(cur, p, *i);
    } else {
      throw parse_error("unknown statement '" + kw + "'", line, col);
    }
    if (!cur.at_statement_end()) {
      cur.fail("unexpected text after statement");
    }
  }
  if (!have_gens || !have_orders) {
    throw parse_error("presentation needs 'gens' and 'orders'", cur.line(),
                      cur.column());
  }
  return p;
}

/// Parses a word such as "x1 x2^-1 a^3" against the generators of `p`.
inline Word parse_word(std::string_view text, PcPresentation const& p) {
  detail::PcCursor cur(text);
  Word             w = detail::parse_word_at(cur, p);
  cur.skip_blanks();
  if (!cur.at_end()) {
    cur.fail("unexpected text after word");
  }
  return w;
}

inline std::string render_word(CollectedWord const&  w,
                               PcPresentation const& p) {
  std::string out;
  for (std::size_t k = 0; k < w.exps.size(); ++k) {
    if (w.exps[k] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += p.names[k];
    if (w.exps[k] != 1) {
      out += '^' + std::to_string(w.exps[k]);
    }
  }
  return out.empty() ? "1" : out;
}

/// Text form accepted by parse_presentation; only nontrivial relations are
/// written.
inline std::string render(PcPresentation const& p) {
  std::string out = "gens ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i ? "," : "") + p.names[i];
  }
  out += "\norders ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.rel_orders[i]);
  }
  out += '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.power_rhs[i].is_identity()) {
      out += "pow " + p.names[i] + "^" + std::to_string(p.rel_orders[i])
             + " = " + render_word(p.power_rhs[i], p) + "\n";
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (!p.comm_rhs[i][j].is_identity()) {
        out += "comm [" + p.names[i] + "," + p.names[j]
               + "] = " + render_word(p.comm_rhs[i][j], p) + "\n";
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Collection

class collection_budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void push_inverse(std::vector<Letter>& stack, CollectedWord const& w) {
  // w^-1 = x_n^-t_n ... x_1^-t_1; pushed so x_n^-t_n is processed first.
  for (std::size_t k = 0; k < w.exps.size(); ++k) {
    if (w.exps[k] != 0) {
      stack.push_back({k, -static_cast<std::int64_t>(w.exps[k])});
    }
  }
}

}  // namespace detail

/// Normal form of an arbitrary word by collection from the left.
///
/// The collected prefix x_1^r_1 ... x_n^r_n is kept as an exponent vector and
/// the rest of the word as a stack. Multiplying the prefix by x_g moves x_g
/// left past the tail x_{g+1}^r_{g+1} ... using x_k^{x_g} = x_k [x_g,x_k]^-1,
/// pushing the conjugated tail back onto the stack; reaching x_g^e_g is
/// replaced by the power relation. Inverses are rewritten as
/// x^-1 = x^(e-1) (x^e)^-1.
inline CollectedWord collect(Word const& w, PcPresentation const& p,
                             std::size_t budget = limits::collect_step_budget) {
  std::size_t const          n = p.size();
  std::vector<std::uint32_t> res(n, 0);
  std::vector<Letter>        stack(w.rbegin(), w.rend());
  for (auto const& l : w) {
    if (l.gen >= n) {
      throw input_error("word references an unknown generator");
    }
  }
  std::size_t         steps = 0;
  std::vector<Letter> pending;
  while (!stack.empty()) {
    if (++steps > budget) {
      throw collection_budget_error(
          "collection exceeded its step budget; presentation is likely "
          "inconsistent");
    }
    Letter l = stack.back();
    stack.pop_back();
    std::size_t const g = l.gen;
    if (l.exp == 0) {
      continue;
    }
    if (l.exp < 0) {
      if (l.exp < -1) {
        stack.push_back({g, l.exp + 1});
      }
      // Processed in this order: x_g^(e-1), then (x_g^e)^-1.
      detail::push_inverse(stack, p.power_rhs[g]);
      stack.push_back({g, static_cast<std::int64_t>(p.rel_orders[g]) - 1});
      continue;
    }
    if (l.exp > 1) {
      stack.push_back({g, l.exp - 1});
    }
    // Letters to process next, in order.
    pending.clear();
    for (std::size_t k = g + 1; k < n; ++k) {
      if (res[k] == 0) {
        continue;
      }
      CollectedWord const& c = p.comm_rhs[g][k];
      if (c.is_identity()) {
        pending.push_back({k, res[k]});
      } else {
        for (std::uint32_t r = 0; r < res[k]; ++r) {
          pending.push_back({k, 1});
          for (std::size_t m = n; m-- > 0;) {
            if (c.exps[m] != 0) {
              pending.push_back({m, -static_cast<std::int64_t>(c.exps[m])});
            }
          }
        }
      }
      res[k] = 0;
    }
    if (++res[g] == p.rel_orders[g]) {
      res[g] = 0;
      std::vector<Letter> power;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.power_rhs[g].exps[k] != 0) {
          power.push_back({k, p.power_rhs[g].exps[k]});
        }
      }
      pending.insert(pending.begin(), power.begin(), power.end());
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return CollectedWord{std::move(res)};
}

inline Word to_word(CollectedWord const& w) {
  Word out;
  for (std::size_t k = 0; k < w.exps.size(); ++k) {
    if (w.exps[k] != 0) {
      out.push_back({k, w.exps[k]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instantiation

/// Mixed-radix indexing of normal forms: x_1 is the most significant digit,
/// so the identity has index 0.
class PcIndexer {
 public:
  explicit PcIndexer(PcPresentation const& p) : orders_(p.rel_orders) {
    stride_.assign(orders_.size(), 1);
    for (std::size_t k = orders_.size(); k-- > 1;) {
      stride_[k - 1] = stride_[k] * orders_[k];
    }
  }

  elem_t index(CollectedWord const& w) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      idx += w.exps[k] * stride_[k];
    }
    return static_cast<elem_t>(idx);
  }

  CollectedWord word(elem_t idx) const {
    CollectedWord w{std::vector<std::uint32_t>(orders_.size(), 0)};
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      w.exps[k] = static_cast<std::uint32_t>((idx / stride_[k]) % orders_[k]);
    }
    return w;
  }

  elem_t generator(std::size_t k) const {
    return orders_[k] == 1 ? 0 : static_cast<elem_t>(stride_[k]);
  }

  std::size_t stride(std::size_t k) const { return stride_[k]; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t>   stride_;
};

/// The group defined by `p` as a Cayley table on its normal forms.
///
/// Right multiplication by each generator is computed by collection; the full
/// table follows by walking normal forms. The presentation is consistent iff
/// (gh)x_k = g(hx_k) for all g, h and generators x_k, which is checked
/// exhaustively; failure raises group_axiom_error.
inline GroupTable instantiate(PcPresentation const& p) {
  p.validate();
  std::uint64_t const total = p.order();
  if (total > limits::max_order) {
    throw size_limit_error("presentation order " + std::to_string(total)
                           + " exceeds cap");
  }
  std::size_t const n = total;
  std::size_t const k = p.size();
  PcIndexer const   ix(p);

  std::vector<elem_t> right(n * k);
  for (elem_t g = 0; g < n; ++g) {
    Word w = to_word(ix.word(g));
    for (std::size_t s = 0; s < k; ++s) {
      w.push_back({s, 1});
      right[g * k + s] = ix.index(collect(w, p));
      w.pop_back();
    }
  }

  // h = h' x_s with s the last generator occurring in h.
  std::vector<elem_t>      parent(n, no_elem), via(n, 0);
  std::vector<std::string> labels(n);
  for (elem_t h = 0; h < n; ++h) {
    CollectedWord w = ix.word(h);
    labels[h]       = render_word(w, p);
    for (std::size_t s = k; s-- > 0;) {
      if (w.exps[s] != 0) {
        parent[h] = static_cast<elem_t>(h - ix.stride(s));
        via[h]    = static_cast<elem_t>(s);
        break;
      }
    }
  }
  std::vector<elem_t> mul(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    elem_t* row = mul.data() + g * n;
    row[0]      = static_cast<elem_t>(g);
    for (std::size_t h = 1; h < n; ++h) {
      row[h] = right[static_cast<std::size_t>(row[parent[h]]) * k + via[h]];
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      elem_t gh = mul[g * n + h];
      for (std::size_t s = 0; s < k; ++s) {
        if (right[gh * k + s] != mul[g * n + right[h * k + s]]) {
          throw group_axiom_error(
              "inconsistent presentation: (gh)x != g(hx) for generator "
              + p.names[s]);
        }
      }
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels));
}

// ---------------------------------------------------------------------------
// The 2-groups G_n

/// Number of x-generators of G_n, i.e. 2^n + 1.
inline std::size_t gn_x_count(std::size_t n) { return (std::size_t{1} << n) + 1; }

/// G_n on generators x_1, ..., x_{2^n+1}, a, b (central generators last):
///   [x_{2i-1}, x_{2i}] = a, [x_{2i}, x_{2i+1}] = b   (1 <= i <= 2^(n-1)),
///   x_1^2 = x_{2^n+1}^2 = b, every other generator squares to 1,
///   all remaining commutators trivial. Order 2^(2^n+3).
inline PcPresentation build_Gn(std::size_t n) {
  if (n < 1 || n > 3) {
    throw input_error("build_Gn supports 1 <= n <= 3");
  }
  std::size_t const        m = gn_x_count(n);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  names.push_back("a");
  names.push_back("b");
  PcPresentation p = PcPresentation::trivial(
      names, std::vector<std::uint32_t>(m + 2, 2));
  std::size_t const a = m;
  std::size_t const b = m + 1;
  p.power_rhs[0]      = p.generator(b);
  p.power_rhs[m - 1]  = p.generator(b);
  for (std::size_t i = 1; i <= (std::size_t{1} << (n - 1)); ++i) {
    // 1-based: [x_{2i-1}, x_{2i}] = a and [x_{2i}, x_{2i+1}] = b.
    p.comm_rhs[2 * i - 2][2 * i - 1] = p.generator(a);
    p.comm_rhs[2 * i - 1][2 * i]     = p.generator(b);
  }
  return p;
}

/// Recovers n from a presentation built by build_Gn.
inline std::size_t gn_parameter(PcPresentation const& p) {
  for (std::size_t n = 1; n <= 3; ++n) {
    if (p == build_Gn(n)) {
      return n;
    }
  }
  throw input_error("presentation is not G_n for any 1 <= n <= 3");
}

/// Extends an assignment of pc-generator images to all normal forms:
/// x_1^t_1 ... x_n^t_n -> img_1^t_1 ... img_n^t_n. The result is a
/// homomorphism only if the images satisfy the relations; callers check.
inline std::vector<elem_t> extend_on_normal_forms(
    PcPresentation const& p, GroupTable const& G,
    std::vector<elem_t> const& generator_images) {
  PcIndexer const     ix(p);
  std::vector<elem_t> out(G.order());
  for (elem_t g = 0; g < G.order(); ++g) {
    CollectedWord w = ix.word(g);
    elem_t        x = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      x = G.mul(x, G.pow(generator_images[k], w.exps[k]));
    }
    out[g] = x;
  }
  return out;
}

/// The automorphism of instantiate(build_Gn(n)) fixing a, b and every x_i
/// except x_{2^n} -> x_{2^n} x_{2^n+1}.
inline Automorphism alpha_n(PcPresentation const& p) {
  std::size_t const n = gn_parameter(p);
  std::size_t const m = gn_x_count(n);
  GroupTable const  G = instantiate(p);
  PcIndexer const   ix(p);
  std::vector<elem_t> images;
  for (std::size_t k = 0; k < p.size(); ++k) {
    images.push_back(ix.generator(k));
  }
  images[m - 2] = G.mul(ix.generator(m - 2), ix.generator(m - 1));
  auto map      = extend_on_normal_forms(p, G, images);
  if (!is_automorphism(G, map)) {
    throw std::logic_error("alpha_n does not extend to an automorphism");
  }
  return Automorphism(std::move(map));
}

}  // namespace autorb
