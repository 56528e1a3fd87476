// Magnus embedding into truncated integer power series in noncommuting
// variables, and the lower-central weight decisions built on it.
//
// x_i maps to 1 + X_i and x_i^-1 to the truncated geometric series
// 1 - X_i + X_i^2 - ...; the map is multiplicative, and the weight of a word
// (the largest k with the word in the k-th lower central term of the free
// group) equals the minimal degree of a nonzero nonconstant term of its image.
//
// gamma_weight runs two routes:
//   * structural: bottom-up leading Lie terms via LieEngine; when no bracket
//     vanishes the weight is exact at any truncation, which is what makes the
//     deeply nested word families decidable far beyond series reach;
//   * series: direct truncated expansion of the expanded free word. The
//     optional multihomogeneous pruning drops monomials whose per-variable
//     degree exceeds the leaf count of that variable in the expression. The
//     pruned run is a valid certificate only alongside a structural one (the
//     leading component then sits at the leaf multidegree); unpruned runs are
//     unconditionally sound.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilvar/bigint.hpp"
#include "nilvar/lie.hpp"
#include "nilvar/words.hpp"

namespace nilvar {

// ---------------------------------------------------------------------------
// Monomial: packed sequence of variable indices, 4 bits per letter.

class Monomial {
public:
  static constexpr int kMaxLen = 30;
  static constexpr int kMaxVar = 15;

  Monomial() : key_(0) {}

  int degree() const { return static_cast<int>(key_ >> 120); }

  int letter(int i) const { return static_cast<int>((key_ >> (4 * i)) & 0xf); }

  bool can_append(int more) const { return degree() + more <= kMaxLen; }

  Monomial appended(int var) const {
    int d = degree();
    Monomial m;
    m.key_ = (key_ & kLetterMask) | (static_cast<unsigned __int128>(var) << (4 * d)) |
             (static_cast<unsigned __int128>(d + 1) << 120);
    return m;
  }

  static Monomial concat(const Monomial& a, const Monomial& b) {
    Monomial m;
    int da = a.degree(), db = b.degree();
    m.key_ = (a.key_ & kLetterMask) | ((b.key_ & kLetterMask) << (4 * da)) |
             (static_cast<unsigned __int128>(da + db) << 120);
    return m;
  }

  // (degree, lexicographic) order
  static bool lex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < da; ++i) {
      int la = a.letter(i), lb = b.letter(i);
      if (la != lb) return la < lb;
    }
    return false;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < degree(); ++i) s += "X" + std::to_string(letter(i));
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key_ == b.key_; }

  std::size_t hash() const {
    std::uint64_t lo = static_cast<std::uint64_t>(key_);
    std::uint64_t hi = static_cast<std::uint64_t>(key_ >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }

private:
  static constexpr unsigned __int128 kLetterMask =
      ((static_cast<unsigned __int128>(1) << 120) - 1);
  unsigned __int128 key_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// ---------------------------------------------------------------------------
// SparseSeries

class SparseSeries {
public:
  explicit SparseSeries(int truncation, std::vector<long long> caps = {})
      : trunc_(truncation), caps_(std::move(caps)) {
    if (truncation < 1 || truncation > Monomial::kMaxLen)
      throw std::invalid_argument("SparseSeries: truncation out of range");
  }

  static SparseSeries one(int truncation, std::vector<long long> caps = {}) {
    SparseSeries s(truncation, std::move(caps));
    s.constant_ = BigInt(1);
    return s;
  }

  int truncation() const { return trunc_; }
  const BigInt& constant() const { return constant_; }
  void set_constant(BigInt c) { constant_ = std::move(c); }
  std::size_t term_count() const { return terms_.size(); }

  bool admits(const Monomial& m) const {
    if (m.degree() > trunc_) return false;
    if (!caps_.empty()) {
      thread_local std::vector<long long> deg;
      deg.assign(caps_.size(), 0);
      for (int i = 0; i < m.degree(); ++i) {
        std::size_t v = static_cast<std::size_t>(m.letter(i));
        if (v >= caps_.size() || ++deg[v] > caps_[v]) return false;
      }
    }
    return true;
  }

  void add_term(const Monomial& m, const BigInt& c) {
    if (c.is_zero() || !admits(m)) return;
    if (m.degree() == 0) {
      constant_ += c;
      return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BigInt coeff(const Monomial& m) const {
    if (m.degree() == 0) return constant_;
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt() : it->second;
  }

  // multiply in place by the Magnus image of one letter x_var^sign
  void mul_letter(int var, int sign) {
    if (var < 1 || var > Monomial::kMaxVar)
      throw std::invalid_argument("SparseSeries: variable index out of packing range");
    std::vector<std::pair<Monomial, BigInt>> staged;
    staged.reserve(terms_.size() + 4);
    auto emit_tail = [&](const Monomial& m, const BigInt& c) {
      // append X_var^t for t = 1.. with alternating signs when sign < 0
      Monomial cur = m;
      BigInt factor = c;
      int limit = sign > 0 ? 1 : trunc_ - m.degree();
      for (int t = 1; t <= limit; ++t) {
        if (!cur.can_append(1)) break;
        cur = cur.appended(var);
        factor = sign > 0 ? factor : -factor;
        if (admits(cur)) staged.emplace_back(cur, factor);
        if (!admits(cur) && !caps_.empty()) {
          // further powers only grow this variable's degree
          break;
        }
      }
    };
    if (!constant_.is_zero()) emit_tail(Monomial(), constant_);
    for (const auto& [m, c] : terms_)
      if (m.degree() < trunc_) emit_tail(m, c);
    for (const auto& [m, c] : staged) add_term(m, c);
  }

  SparseSeries times(const SparseSeries& o) const {
    SparseSeries r(trunc_, caps_);
    r.constant_ = constant_ * o.constant_;
    for (const auto& [m, c] : terms_) r.add_term(m, c * o.constant_);
    for (const auto& [m, c] : o.terms_) r.add_term(m, constant_ * c);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        if (m1.degree() + m2.degree() > trunc_) continue;
        r.add_term(Monomial::concat(m1, m2), c1 * c2);
      }
    return r;
  }

  int min_nonconstant_degree() const {
    int best = 0;
    for (const auto& [m, c] : terms_)
      if (best == 0 || m.degree() < best) best = m.degree();
    return best;
  }

  std::vector<std::pair<Monomial, BigInt>> sorted_terms() const {
    std::vector<std::pair<Monomial, BigInt>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return Monomial::lex_less(a.first, b.first); });
    return v;
  }

  std::vector<std::pair<Monomial, BigInt>> homogeneous(int n) const {
    std::vector<std::pair<Monomial, BigInt>> v;
    for (const auto& [m, c] : terms_)
      if (m.degree() == n) v.emplace_back(m, c);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return Monomial::lex_less(a.first, b.first); });
    return v;
  }

  // terms sorted by (degree, lexicographic monomial), e.g. "1 + X1X2 - X2X1"
  std::string to_string() const {
    auto terms = sorted_terms();
    std::string out;
    bool first = true;
    auto emit = [&](const BigInt& c, const std::string& mono) {
      std::string mag = (c.sign() < 0 ? (-c) : c).to_string();
      if (first) {
        if (c.sign() < 0) out += "-";
        first = false;
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (mono.empty())
        out += mag;
      else if (mag == "1")
        out += mono;
      else
        out += mag + mono;
    };
    if (!constant_.is_zero()) emit(constant_, "");
    for (const auto& [m, c] : terms) emit(c, m.to_string());
    if (first) out = "0";
    return out;
  }

private:
  int trunc_;
  BigInt constant_;
  std::unordered_map<Monomial, BigInt, MonomialHash> terms_;
  std::vector<long long> caps_;  // per-variable degree caps, index 0 unused; empty = none
};

inline SparseSeries magnus_embed(const FreeWord& w, int D, std::vector<long long> caps = {}) {
  SparseSeries acc = SparseSeries::one(D, std::move(caps));
  for (const Letter& l : w.letters()) acc.mul_letter(l.gen, l.sign);
  return acc;
}

// ---------------------------------------------------------------------------
// gamma_weight

enum class WeightMethod { automatic, series_only, structural_only };

struct GammaWeightOptions {
  WeightMethod method = WeightMethod::automatic;
  bool prune = false;  // multihomogeneous caps from leaf counts (series route)
};

struct WeightResult {
  bool exceeds = false;  // weight > D
  int weight = 0;        // meaningful when !exceeds
  bool structural = false;
};

inline WeightResult gamma_weight(const CommutatorExpr& expr, int D,
                                 const GammaWeightOptions& opts = {}) {
  if (D < 1) throw std::invalid_argument("gamma_weight: D must be >= 1");
  if (opts.method != WeightMethod::series_only) {
    thread_local LieEngine engine;
    auto lead = engine.leading_term(expr);
    if (lead) {
      WeightResult r;
      r.structural = true;
      if (lead->weight > D) {
        r.exceeds = true;
      } else {
        r.weight = static_cast<int>(lead->weight);
      }
      return r;
    }
    if (opts.method == WeightMethod::structural_only)
      throw std::runtime_error("gamma_weight: structural route could not certify (a bracket vanished)");
  }
  FreeWord w = expand(expr);
  if (w.empty()) throw std::invalid_argument("identity word has no weight");
  std::vector<long long> caps;
  if (opts.prune) caps = expr.leaf_counts();
  SparseSeries s = magnus_embed(w, D, std::move(caps));
  int m = s.min_nonconstant_degree();
  WeightResult r;
  if (m == 0)
    r.exceeds = true;
  else
    r.weight = m;
  return r;
}

// Laws of the nilpotent-of-class-<= c variety are exactly the words of weight
// >= c + 1.
inline bool is_law_of_nc(const CommutatorExpr& expr, int c,
                         const GammaWeightOptions& opts = {}) {
  if (c < 0) throw std::invalid_argument("is_law_of_nc: c must be >= 0");
  if (c == 0) {
    if (expand(expr).empty()) throw std::invalid_argument("identity word has no weight");
    return true;
  }
  return gamma_weight(expr, c, opts).exceeds;
}

// ---------------------------------------------------------------------------
// Witt formula: rank of the degree-n layer of the free Lie ring on r
// generators, (1/n) * sum over d | n of mu(d) * r^(n/d).

inline long long witt_number(long long r, long long n) {
  if (r < 1 || n < 1) throw std::invalid_argument("witt_number: r, n must be >= 1");
  auto mobius = [](long long v) {
    int m = 1;
    for (long long p = 2; p * p <= v; ++p) {
      if (v % p == 0) {
        v /= p;
        if (v % p == 0) return 0;
        m = -m;
      }
    }
    if (v > 1) m = -m;
    return m;
  };
  BigInt total;
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt pw(1);
    for (long long i = 0; i < n / d; ++i) pw *= BigInt(r);
    total += mu > 0 ? pw : -pw;
  }
  return BigInt::exact_div(total, BigInt(n)).to_longlong();
}

// ---------------------------------------------------------------------------
// Rank of degree-n homogeneous Magnus components, by fraction-free
// (Bareiss) elimination over the integers.

namespace detail {

inline int bareiss_rank(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  BigInt prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = BigInt::exact_div(a[i][j] * a[rank][col] - a[i][col] * a[rank][j], prev);
      a[i][col] = BigInt();
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace detail

struct RankDetails {
  std::vector<std::size_t> zero_rows;  // expressions of weight > n
};

inline int leading_components_rank(const std::vector<CommutatorExpr>& exprs, int n,
                                   RankDetails* details = nullptr) {
  if (n < 1) throw std::invalid_argument("leading_components_rank: n must be >= 1");
  std::vector<std::vector<std::pair<Monomial, BigInt>>> rows;
  std::vector<Monomial> columns;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    FreeWord w = expand(exprs[i]);
    if (w.empty()) throw std::invalid_argument("leading_components_rank: identity expression");
    SparseSeries s = magnus_embed(w, n);
    if (int m = s.min_nonconstant_degree(); m != 0 && m < n)
      throw std::invalid_argument("leading_components_rank: expression of weight below n");
    auto row = s.homogeneous(n);
    if (row.empty() && details) details->zero_rows.push_back(i);
    for (const auto& [m, c] : row) columns.push_back(m);
    rows.push_back(std::move(row));
  }
  std::sort(columns.begin(), columns.end(), Monomial::lex_less);
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  std::vector<std::vector<BigInt>> mat(rows.size(), std::vector<BigInt>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [m, c] : rows[i]) {
      auto it = std::lower_bound(columns.begin(), columns.end(), m, Monomial::lex_less);
      mat[i][static_cast<std::size_t>(it - columns.begin())] = c;
    }
  if (columns.empty()) return 0;
  return detail::bareiss_rank(std::move(mat));
}

}  // namespace nilvar
