// Commutator/power expressions over numbered variables and freely reduced
// words, with the inductive word families used throughout the verification
// suite, Hall basic commutators, expansion into the free group, and a textual
// grammar (parser + printer, round-trip exact):
//
//   xN            variable
//   (c A B)       commutator [A,B]
//   (p A k)       power A^k, k != 0
//   [A,B,C,...]   left-normed sugar, [[A,B],C]...
//
// Conventions, applied uniformly: [u,v] = u^-1 v^-1 u v, and every multi-entry
// bracket is left-normed.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilvar {

// ---------------------------------------------------------------------------
// FreeWord

struct Letter {
  int gen;   // generator index, >= 1
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word; reduction is eager on construction.
class FreeWord {
public:
  FreeWord() = default;

  static FreeWord from_letters(const std::vector<Letter>& raw) {
    FreeWord w;
    for (const Letter& l : raw) w.push_reduce(l);
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_reduce(Letter l) {
    if (l.gen < 1 || (l.sign != 1 && l.sign != -1))
      throw std::invalid_argument("FreeWord: bad letter");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  void append(const FreeWord& o) {
    for (const Letter& l : o.letters_) push_reduce(l);
  }

  FreeWord inverse() const {
    FreeWord w;
    for (std::size_t i = letters_.size(); i-- > 0;)
      w.letters_.push_back({letters_[i].gen, -letters_[i].sign});
    return w;  // reversal of a reduced word is reduced
  }

  int max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
  }

  // occurrences of generator g, either sign
  std::vector<long long> letter_counts() const {
    std::vector<long long> c(static_cast<std::size_t>(max_generator()) + 1, 0);
    for (const Letter& l : letters_) c[static_cast<std::size_t>(l.gen)]++;
    return c;
  }

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ' ';
      s += "x" + std::to_string(letters_[i].gen);
      if (letters_[i].sign < 0) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_;
  }

private:
  std::vector<Letter> letters_;
};

// ---------------------------------------------------------------------------
// CommutatorExpr

enum class ExprKind : std::uint8_t { variable, commutator, power };

// Immutable expression tree; cheap to copy, subtrees shared.
class CommutatorExpr {
public:
  struct Node {
    ExprKind kind;
    int var = 0;       // variable index (variable nodes)
    int exponent = 0;  // power nodes, != 0
    std::shared_ptr<const Node> left, right;  // commutator children / power base in `left`
  };

  static CommutatorExpr variable(int index) {
    if (index < 1) throw std::invalid_argument("CommutatorExpr: variable index must be >= 1");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::variable;
    n->var = index;
    return CommutatorExpr(std::move(n));
  }

  static CommutatorExpr commutator(const CommutatorExpr& a, const CommutatorExpr& b) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::commutator;
    n->left = a.node_;
    n->right = b.node_;
    return CommutatorExpr(std::move(n));
  }

  static CommutatorExpr power(const CommutatorExpr& base, int exponent) {
    if (exponent == 0) throw std::invalid_argument("CommutatorExpr: zero exponent");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::power;
    n->exponent = exponent;
    n->left = base.node_;
    return CommutatorExpr(std::move(n));
  }

  ExprKind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  int exponent() const { return node_->exponent; }
  CommutatorExpr left() const { return CommutatorExpr(node_->left); }
  CommutatorExpr right() const { return CommutatorExpr(node_->right); }
  CommutatorExpr base() const { return CommutatorExpr(node_->left); }
  const Node* raw() const { return node_.get(); }

  int var_count() const {
    switch (node_->kind) {
      case ExprKind::variable: return node_->var;
      case ExprKind::power: return base().var_count();
      case ExprKind::commutator: return std::max(left().var_count(), right().var_count());
    }
    return 0;
  }

  // leaf weight through commutator nodes; powers count as the weight of the base
  long long formal_weight() const {
    switch (node_->kind) {
      case ExprKind::variable: return 1;
      case ExprKind::power: return base().formal_weight();
      case ExprKind::commutator: return left().formal_weight() + right().formal_weight();
    }
    return 0;
  }

  // per-variable leaf counts, powers scaling by |exponent|; index 0 unused
  std::vector<long long> leaf_counts() const {
    std::vector<long long> c(static_cast<std::size_t>(var_count()) + 1, 0);
    accumulate_leaves(c, 1);
    return c;
  }

  bool same_tree(const CommutatorExpr& o) const {
    if (node_ == o.node_) return true;
    if (node_->kind != o.node_->kind) return false;
    switch (node_->kind) {
      case ExprKind::variable: return node_->var == o.node_->var;
      case ExprKind::power:
        return node_->exponent == o.node_->exponent && base().same_tree(o.base());
      case ExprKind::commutator:
        return left().same_tree(o.left()) && right().same_tree(o.right());
    }
    return false;
  }

  std::string to_string() const {
    std::string out;
    print(out);
    return out;
  }

  static CommutatorExpr parse(std::string_view text);

private:
  explicit CommutatorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  void accumulate_leaves(std::vector<long long>& c, long long mult) const {
    switch (node_->kind) {
      case ExprKind::variable:
        c[static_cast<std::size_t>(node_->var)] += mult;
        return;
      case ExprKind::power:
        base().accumulate_leaves(c, mult * std::abs(static_cast<long long>(node_->exponent)));
        return;
      case ExprKind::commutator:
        left().accumulate_leaves(c, mult);
        right().accumulate_leaves(c, mult);
        return;
    }
  }

  void print(std::string& out) const {
    switch (node_->kind) {
      case ExprKind::variable:
        out += "x" + std::to_string(node_->var);
        return;
      case ExprKind::power:
        out += "(p ";
        base().print(out);
        out += " " + std::to_string(node_->exponent) + ")";
        return;
      case ExprKind::commutator: {
        // flatten the left spine into the bracket sugar
        std::vector<CommutatorExpr> entries;
        CommutatorExpr cur = *this;
        while (cur.kind() == ExprKind::commutator) {
          entries.push_back(cur.right());
          cur = cur.left();
        }
        entries.push_back(cur);
        out += '[';
        for (std::size_t i = entries.size(); i-- > 0;) {
          entries[i].print(out);
          if (i) out += ',';
        }
        out += ']';
        return;
      }
    }
  }

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Parser

struct WordParseError : std::runtime_error {
  std::size_t position;  // 1-based column
  WordParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at column " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class WordParser {
public:
  explicit WordParser(std::string_view t) : text_(t) {}

  CommutatorExpr parse() {
    CommutatorExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw WordParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  CommutatorExpr parse_expr() {
    char c = peek();
    if (c == 'x') {
      ++pos_;
      long long idx = parse_int();
      if (idx < 1) fail("variable index must be >= 1");
      return CommutatorExpr::variable(static_cast<int>(idx));
    }
    if (c == '[') {
      ++pos_;
      std::vector<CommutatorExpr> entries;
      entries.push_back(parse_expr());
      while (peek() == ',') {
        ++pos_;
        entries.push_back(parse_expr());
      }
      expect(']');
      if (entries.size() < 2) fail("bracket needs at least two entries");
      CommutatorExpr e = CommutatorExpr::commutator(entries[0], entries[1]);
      for (std::size_t i = 2; i < entries.size(); ++i)
        e = CommutatorExpr::commutator(e, entries[i]);
      return e;
    }
    if (c == '(') {
      ++pos_;
      char tag = peek();
      if (tag == 'c') {
        ++pos_;
        CommutatorExpr a = parse_expr();
        CommutatorExpr b = parse_expr();
        expect(')');
        return CommutatorExpr::commutator(a, b);
      }
      if (tag == 'p') {
        ++pos_;
        CommutatorExpr a = parse_expr();
        long long k = parse_int();
        if (k == 0) fail("power exponent must be nonzero");
        if (k > 1000000 || k < -1000000) fail("power exponent out of range");
        expect(')');
        return CommutatorExpr::power(a, static_cast<int>(k));
      }
      fail("expected 'c' or 'p'");
    }
    fail("expected expression");
  }
};

}  // namespace detail

inline CommutatorExpr CommutatorExpr::parse(std::string_view text) {
  return detail::WordParser(text).parse();
}

// ---------------------------------------------------------------------------
// Word families

// [x1, x2, x2, ..., x2] with c trailing x2's
inline CommutatorExpr build_engel(int c) {
  if (c < 1) throw std::invalid_argument("build_engel: c must be >= 1");
  CommutatorExpr x1 = CommutatorExpr::variable(1), x2 = CommutatorExpr::variable(2);
  CommutatorExpr e = CommutatorExpr::commutator(x1, x2);
  for (int i = 1; i < c; ++i) e = CommutatorExpr::commutator(e, x2);
  return e;
}

// left-normed [x1, x2, ..., xk]
inline CommutatorExpr build_gamma_word(int k) {
  if (k < 2) throw std::invalid_argument("build_gamma_word: k must be >= 2");
  CommutatorExpr e =
      CommutatorExpr::commutator(CommutatorExpr::variable(1), CommutatorExpr::variable(2));
  for (int i = 3; i <= k; ++i) e = CommutatorExpr::commutator(e, CommutatorExpr::variable(i));
  return e;
}

// W_1 = [x1,x2,x1,x2];  W_n = [W_{n-1}, x_{n+1}, W_{n-1}, x_{n+1}]
inline CommutatorExpr build_w(int n) {
  if (n < 1) throw std::invalid_argument("build_w: n must be >= 1");
  CommutatorExpr x1 = CommutatorExpr::variable(1), x2 = CommutatorExpr::variable(2);
  CommutatorExpr w = CommutatorExpr::commutator(
      CommutatorExpr::commutator(CommutatorExpr::commutator(x1, x2), x1), x2);
  for (int i = 2; i <= n; ++i) {
    CommutatorExpr x = CommutatorExpr::variable(i + 1);
    w = CommutatorExpr::commutator(
        CommutatorExpr::commutator(CommutatorExpr::commutator(w, x), w), x);
  }
  return w;
}

// V_1 = [[x2,x1,x1,x1,x1], x3, [x2,x1,x1,x1,x1], x3];
// V_n = [V_{n-1}, x_{n+2}, V_{n-1}, x_{n+2}]
inline CommutatorExpr build_v(int n) {
  if (n < 1) throw std::invalid_argument("build_v: n must be >= 1");
  CommutatorExpr x1 = CommutatorExpr::variable(1), x2 = CommutatorExpr::variable(2);
  CommutatorExpr inner = CommutatorExpr::commutator(x2, x1);
  for (int i = 0; i < 3; ++i) inner = CommutatorExpr::commutator(inner, x1);
  CommutatorExpr x3 = CommutatorExpr::variable(3);
  CommutatorExpr v = CommutatorExpr::commutator(
      CommutatorExpr::commutator(CommutatorExpr::commutator(inner, x3), inner), x3);
  for (int i = 2; i <= n; ++i) {
    CommutatorExpr x = CommutatorExpr::variable(i + 2);
    v = CommutatorExpr::commutator(
        CommutatorExpr::commutator(CommutatorExpr::commutator(v, x), v), x);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Expansion into the free group

inline FreeWord expand(const CommutatorExpr& e) {
  switch (e.kind()) {
    case ExprKind::variable: {
      FreeWord w;
      w.push_reduce({e.var_index(), 1});
      return w;
    }
    case ExprKind::power: {
      FreeWord b = expand(e.base());
      if (e.exponent() < 0) b = b.inverse();
      FreeWord w;
      long long reps = std::abs(static_cast<long long>(e.exponent()));
      for (long long i = 0; i < reps; ++i) w.append(b);
      return w;
    }
    case ExprKind::commutator: {
      FreeWord u = expand(e.left());
      FreeWord v = expand(e.right());
      FreeWord w = u.inverse();
      w.append(v.inverse());
      w.append(u);
      w.append(v);
      return w;
    }
  }
  return FreeWord();
}

// ---------------------------------------------------------------------------
// Hall basic commutators
//
// Order: lower formal weight first; within weight 1, variables ascend by
// index; within higher weights, lexicographic on the (left, right) subterm
// pair. Basic condition for [a,b]: a and b basic, a > b, and when a = [a1,a2],
// additionally a2 <= b.

namespace detail {

inline int hall_cmp(const CommutatorExpr& a, const CommutatorExpr& b) {
  long long wa = a.formal_weight(), wb = b.formal_weight();
  if (wa != wb) return wa < wb ? -1 : 1;
  if (a.kind() == ExprKind::variable)
    return a.var_index() == b.var_index() ? 0 : (a.var_index() < b.var_index() ? -1 : 1);
  int c = hall_cmp(a.left(), b.left());
  if (c != 0) return c;
  return hall_cmp(a.right(), b.right());
}

}  // namespace detail

inline std::vector<CommutatorExpr> hall_basic_commutators(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("hall_basic_commutators: r, n must be >= 1");
  std::vector<std::vector<CommutatorExpr>> by_weight(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= r; ++v) by_weight[1].push_back(CommutatorExpr::variable(v));
  for (int w = 2; w <= n; ++w) {
    std::vector<CommutatorExpr>& out = by_weight[static_cast<std::size_t>(w)];
    for (int wa = 1; wa < w; ++wa) {
      int wb = w - wa;
      for (const CommutatorExpr& a : by_weight[static_cast<std::size_t>(wa)]) {
        for (const CommutatorExpr& b : by_weight[static_cast<std::size_t>(wb)]) {
          if (detail::hall_cmp(a, b) <= 0) continue;
          if (a.kind() == ExprKind::commutator && detail::hall_cmp(a.right(), b) > 0) continue;
          out.push_back(CommutatorExpr::commutator(a, b));
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const CommutatorExpr& x, const CommutatorExpr& y) {
      return detail::hall_cmp(x, y) < 0;
    });
  }
  return by_weight[static_cast<std::size_t>(n)];
}

}  // namespace nilvar
