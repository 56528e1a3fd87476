// Assignment sweeps over finite groups: word-law checking (exhaustive or
// seeded sampling), Engel degree, and the class of the variety generated by
// d-generator subgroups.
//
// Expressions are compiled once into a straight-line program over element
// indices (shared subtrees evaluated once), then run per assignment. Sweeps
// that iterate over all pairs reduce the first coordinate to conjugacy class
// representatives where the quantity is invariant under simultaneous
// conjugation.
//
// Determinism: exhaustive verdicts and the reported counterexample (the
// lexicographically least assignment) do not depend on the thread count;
// sampling follows the splitmix64 stream of the given seed.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "nilvar/finite_group.hpp"
#include "nilvar/rng.hpp"
#include "nilvar/words.hpp"

namespace nilvar {

struct BudgetExceeded : std::runtime_error {
  std::uint64_t required;
  BudgetExceeded(const std::string& what, std::uint64_t req)
      : std::runtime_error(what + " (work " + std::to_string(req) +
                           " exceeds budget; use sample mode or raise --budget)"),
        required(req) {}
};

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : (n > 8 ? 8 : n);
}

// ---------------------------------------------------------------------------
// Straight-line program

class Slp {
public:
  static Slp compile(const CommutatorExpr& expr) {
    Slp slp;
    slp.nvars_ = expr.var_count();
    std::unordered_map<const CommutatorExpr::Node*, int> memo;
    slp.result_ = slp.emit(expr, memo);
    return slp;
  }

  int var_count() const { return nvars_; }
  std::size_t op_count() const { return ops_.size(); }

  // assignment[i] is the element index substituted for variable i+1
  std::uint32_t eval(const FiniteGroup& G, const std::uint32_t* assignment) const {
    thread_local std::vector<std::uint32_t> regs;
    regs.resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const Op& op = ops_[i];
      switch (op.kind) {
        case OpKind::load: regs[i] = assignment[op.a]; break;
        case OpKind::inv: regs[i] = G.inv(regs[static_cast<std::size_t>(op.a)]); break;
        case OpKind::mul:
          regs[i] = G.mul(regs[static_cast<std::size_t>(op.a)],
                          regs[static_cast<std::size_t>(op.b)]);
          break;
      }
    }
    return regs[static_cast<std::size_t>(result_)];
  }

private:
  enum class OpKind : std::uint8_t { load, inv, mul };
  struct Op {
    OpKind kind;
    int a = 0, b = 0;
  };

  int emit(const CommutatorExpr& e, std::unordered_map<const CommutatorExpr::Node*, int>& memo) {
    auto it = memo.find(e.raw());
    if (it != memo.end()) return it->second;
    int reg = -1;
    switch (e.kind()) {
      case ExprKind::variable:
        reg = push({OpKind::load, e.var_index() - 1, 0});
        break;
      case ExprKind::power: {
        int base = emit(e.base(), memo);
        long long exp = e.exponent();
        if (exp < 0) {
          base = push({OpKind::inv, base, 0});
          exp = -exp;
        }
        // binary powering
        int acc = -1, sq = base;
        while (exp > 0) {
          if (exp & 1) acc = acc < 0 ? sq : push({OpKind::mul, acc, sq});
          exp >>= 1;
          if (exp) sq = push({OpKind::mul, sq, sq});
        }
        reg = acc;
        break;
      }
      case ExprKind::commutator: {
        int u = emit(e.left(), memo);
        int v = emit(e.right(), memo);
        int iu = push({OpKind::inv, u, 0});
        int iv = push({OpKind::inv, v, 0});
        int t = push({OpKind::mul, iu, iv});
        t = push({OpKind::mul, t, u});
        reg = push({OpKind::mul, t, v});
        break;
      }
    }
    memo.emplace(e.raw(), reg);
    return reg;
  }

  int push(Op op) {
    ops_.push_back(op);
    return static_cast<int>(ops_.size()) - 1;
  }

  std::vector<Op> ops_;
  int nvars_ = 0;
  int result_ = -1;
};

// ---------------------------------------------------------------------------
// evaluate: substitution instance of a word

inline Element evaluate(const CommutatorExpr& expr,
                        const std::map<int, Element>& assignment, const FiniteGroup& G) {
  int k = expr.var_count();
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<bool> provided(static_cast<std::size_t>(k) + 1, false);
  for (const auto& [var, elem] : assignment) {
    if (var < 1) throw std::invalid_argument("evaluate: variable index must be >= 1");
    if (var <= k) {
      idx[static_cast<std::size_t>(var - 1)] = G.index_of(elem);
      provided[static_cast<std::size_t>(var)] = true;
    }
  }
  // every variable that occurs must be assigned
  std::vector<long long> counts = expr.leaf_counts();
  for (int v = 1; v <= k; ++v)
    if (counts[static_cast<std::size_t>(v)] > 0 && !provided[static_cast<std::size_t>(v)])
      throw std::invalid_argument("evaluate: no assignment for variable x" + std::to_string(v));
  Slp slp = Slp::compile(expr);
  return G.element(slp.eval(G, idx.data()));
}

// letter-by-letter evaluation of the expanded word; the independent route
inline Element evaluate_word(const FreeWord& w, const std::map<int, Element>& assignment,
                             const FiniteGroup& G) {
  std::uint32_t acc = 0;
  for (const Letter& l : w.letters()) {
    auto it = assignment.find(l.gen);
    if (it == assignment.end())
      throw std::invalid_argument("evaluate: no assignment for variable x" + std::to_string(l.gen));
    std::uint32_t g = G.index_of(it->second);
    acc = G.mul(acc, l.sign > 0 ? g : G.inv(g));
  }
  return G.element(acc);
}

// ---------------------------------------------------------------------------
// law_check

struct LawCheckResult {
  bool holds = true;
  bool sampled = false;
  std::vector<std::uint32_t> counterexample;  // assignment indices, empty when holds
  std::uint64_t assignments = 0;              // assignments examined
};

namespace detail {

inline void partition_ranges(std::uint64_t n, unsigned threads,
                             std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
  out.clear();
  if (threads == 0) threads = 1;
  std::uint64_t chunk = n / threads, extra = n % threads, at = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t len = chunk + (t < extra ? 1 : 0);
    out.emplace_back(at, at + len);
    at += len;
  }
}

}  // namespace detail

// Exhaustive sweep over |G|^k assignments in lexicographic order; the witness
// is the least counterexample. Throws BudgetExceeded up front when the
// assignment count is over budget.
inline LawCheckResult law_check_exhaustive(const FiniteGroup& G, const CommutatorExpr& expr,
                                           std::uint64_t budget = 100000000,
                                           unsigned threads = default_threads()) {
  int k = std::max(expr.var_count(), 1);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / G.order() + 1) total = budget + 1;
    else total *= G.order();
  }
  if (total > budget) throw BudgetExceeded("law_check exhaustive", total);

  Slp slp = Slp::compile(expr);
  std::uint64_t n = G.order();

  // split the leading coordinate across workers; least counterexample wins
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  detail::partition_ranges(n, threads, ranges);
  std::vector<std::vector<std::uint32_t>> found(ranges.size());
  std::vector<std::uint64_t> work(ranges.size(), 0);
  auto worker = [&](std::size_t r) {
    std::vector<std::uint32_t> a(static_cast<std::size_t>(k), 0);
    for (std::uint64_t first = ranges[r].first; first < ranges[r].second; ++first) {
      a.assign(static_cast<std::size_t>(k), 0);
      a[0] = static_cast<std::uint32_t>(first);
      while (true) {
        ++work[r];
        if (slp.eval(G, a.data()) != 0) {
          found[r] = a;
          return;
        }
        // odometer over coordinates 1..k-1
        int pos = k - 1;
        while (pos >= 1) {
          if (++a[static_cast<std::size_t>(pos)] < n) break;
          a[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 1) break;
      }
    }
  };
  if (ranges.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t r = 0; r < ranges.size(); ++r) pool.emplace_back(worker, r);
    for (auto& t : pool) t.join();
  }
  LawCheckResult res;
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    res.assignments += work[r];
    if (res.holds && !found[r].empty()) {
      res.holds = false;
      res.counterexample = found[r];
    }
  }
  return res;
}

// `count` seeded assignments; "holds" then means no counterexample was drawn
inline LawCheckResult law_check_sample(const FiniteGroup& G, const CommutatorExpr& expr,
                                       std::uint64_t count, std::uint64_t seed) {
  int k = std::max(expr.var_count(), 1);
  Slp slp = Slp::compile(expr);
  SplitMix64 rng(seed);
  LawCheckResult res;
  res.sampled = true;
  std::vector<std::uint32_t> a(static_cast<std::size_t>(k), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (int v = 0; v < k; ++v)
      a[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(rng.bounded(G.order()));
    ++res.assignments;
    if (slp.eval(G, a.data()) != 0) {
      res.holds = false;
      res.counterexample = a;
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Engel degree

struct EngelResult {
  bool bounded = false;  // some c <= cap works
  int degree = 0;
  std::uint64_t pairs = 0;
};

// minimal c with [x, c y] = 1 for all pairs; "none <= cap" when some chain
// fails to reach the identity within cap steps
inline EngelResult engel_degree(const FiniteGroup& G, int cap,
                                unsigned threads = default_threads()) {
  if (cap < 1) throw std::invalid_argument("engel_degree: cap must be >= 1");
  const auto& reps = G.conjugacy_class_reps();
  std::uint64_t n = G.order();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  detail::partition_ranges(reps.size(), threads, ranges);
  std::vector<int> worst(ranges.size(), 0);
  std::vector<std::uint8_t> unbounded(ranges.size(), 0);
  std::vector<std::uint64_t> pairs(ranges.size(), 0);
  auto worker = [&](std::size_t r) {
    for (std::uint64_t ri = ranges[r].first; ri < ranges[r].second; ++ri) {
      std::uint32_t x = reps[ri];
      for (std::uint32_t y = 0; y < n; ++y) {
        ++pairs[r];
        std::uint32_t h = G.commutator(x, y);
        int steps = 1;
        while (h != 0 && steps < cap) {
          h = G.commutator(h, y);
          ++steps;
        }
        if (h != 0) {
          unbounded[r] = 1;
          return;
        }
        if (steps > worst[r]) worst[r] = steps;
      }
    }
  };
  if (ranges.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t r = 0; r < ranges.size(); ++r) pool.emplace_back(worker, r);
    for (auto& t : pool) t.join();
  }
  EngelResult res;
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    res.pairs += pairs[r];
    if (unbounded[r]) return res;  // bounded = false
    if (worst[r] > res.degree) res.degree = worst[r];
  }
  res.bounded = true;
  if (res.degree == 0) res.degree = 1;  // trivial group; no pair constrains
  return res;
}

// ---------------------------------------------------------------------------
// variety_class

struct VarietyClassResult {
  bool nilpotent = true;  // every generated subgroup nilpotent
  int c = 0;              // max class over generated subgroups
  bool sampled = false;
  std::uint64_t tuples = 0;
  std::uint64_t distinct_subgroups = 0;
};

// max over d-tuples of the class of the generated subgroup; tuples are
// deduplicated by the generated index set. The first coordinate runs over
// conjugacy class representatives, the rest in nondecreasing order.
inline VarietyClassResult variety_class(const FiniteGroup& G, int d,
                                        std::uint64_t budget = 100000000,
                                        std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                            sample = std::nullopt /* count, seed */) {
  if (d < 1) throw std::invalid_argument("variety_class: d must be >= 1");
  if (!sample) {
    // refuse up front when even a minimal per-tuple closure cost overruns
    std::uint64_t tuples = G.conjugacy_class_reps().size();
    for (int i = 1; i < d; ++i) {
      if (tuples > budget) break;
      tuples *= G.order();
    }
    if (tuples > budget / 16) throw BudgetExceeded("variety_class", tuples * 16);
  }
  VarietyClassResult res;
  std::map<std::vector<std::uint32_t>, std::optional<int>> seen;
  std::uint64_t work = 0;
  auto measure = [&](const std::vector<std::uint32_t>& tuple) {
    ++res.tuples;
    SubgroupHandle h = subgroup(G, tuple);
    work += h.size();
    if (work > budget) throw BudgetExceeded("variety_class", work);
    auto [it, fresh] = seen.emplace(h.elements, std::nullopt);
    if (fresh) {
      it->second = nilpotency_class_of(G, h);
      ++res.distinct_subgroups;
    }
    if (!it->second) {
      res.nilpotent = false;
    } else if (*it->second > res.c) {
      res.c = *it->second;
    }
  };

  if (sample) {
    res.sampled = true;
    SplitMix64 rng(sample->second);
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(d));
    for (std::uint64_t i = 0; i < sample->first && res.nilpotent; ++i) {
      for (int j = 0; j < d; ++j)
        tuple[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rng.bounded(G.order()));
      measure(tuple);
    }
    return res;
  }

  const auto& reps = G.conjugacy_class_reps();
  std::vector<std::uint32_t> tuple(static_cast<std::size_t>(d));
  std::vector<std::uint32_t> rest(static_cast<std::size_t>(d - 1), 0);
  for (std::uint32_t rep : reps) {
    tuple[0] = rep;
    if (d == 1) {
      measure(tuple);
      continue;
    }
    // odometer over nondecreasing tuples of length d-1
    std::fill(rest.begin(), rest.end(), 0);
    while (true) {
      for (int j = 0; j < d - 1; ++j) tuple[static_cast<std::size_t>(j + 1)] = rest[static_cast<std::size_t>(j)];
      measure(tuple);
      int pos = d - 2;
      while (pos >= 0 && rest[static_cast<std::size_t>(pos)] + 1 >= G.order()) --pos;
      if (pos < 0) break;
      std::uint32_t v = rest[static_cast<std::size_t>(pos)] + 1;
      for (int j = pos; j < d - 1; ++j) rest[static_cast<std::size_t>(j)] = v;
    }
  }
  return res;
}

}  // namespace nilvar
