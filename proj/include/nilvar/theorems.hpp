// Named verifications over finite groups, one per finite-checkable statement,
// each emitting a machine-readable report.
//
// Report line format (documented field order, one line per check):
//   check=<name> group=<id> params=<k:v;...> verdict=<pass|fail|vacuous|skipped>
//   detail=<text> witness=<text> tuples=<N>
// Empty fields print "-"; values never contain spaces. Wall time is shown on
// the console only, never in report files, so identical runs stay
// byte-identical.
//
// Verdicts: "vacuous" means the statement's hypothesis failed for the group
// (distinct from pass, so corpus design gaps stay visible); "skipped" records
// a budget refusal or bad input.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilvar/corpus.hpp"
#include "nilvar/finite_group.hpp"
#include "nilvar/magnus.hpp"
#include "nilvar/rng.hpp"
#include "nilvar/sweeps.hpp"
#include "nilvar/words.hpp"

namespace nilvar {

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { pass, fail, vacuous, skipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct VerificationReport {
  std::string check;
  std::string group;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::pass;
  std::string detail;   // reason for vacuous/skipped, notes for pass
  std::string witness;  // on fail: re-checkable assignment, element indices
  std::uint64_t tuples = 0;
  double wall_ms = 0;
  int corpus_index = 0;  // sort key, not printed

  void param(const std::string& k, long long v) { params.emplace_back(k, std::to_string(v)); }

  std::string line(bool with_timing = false) const {
    auto clean = [](std::string s) {
      if (s.empty()) return std::string("-");
      for (char& c : s)
        if (c == ' ' || c == '\n' || c == '\t') c = '_';
      return s;
    };
    std::ostringstream os;
    os << "check=" << check << " group=" << clean(group) << " params=";
    if (params.empty()) {
      os << "-";
    } else {
      for (std::size_t i = 0; i < params.size(); ++i)
        os << (i ? ";" : "") << params[i].first << ":" << params[i].second;
    }
    os << " verdict=" << verdict_name(verdict) << " detail=" << clean(detail)
       << " witness=" << clean(witness) << " tuples=" << tuples;
    if (with_timing) os << " ms=" << static_cast<long long>(wall_ms);
    return os.str();
  }
};

struct SweepConfig {
  std::uint64_t law_budget = 100000000;
  std::uint64_t pair_budget = 100000000;
  std::uint64_t variety_budget = 100000000;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  unsigned threads = default_threads();
};

namespace detail {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string assignment_witness(const std::vector<std::uint32_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i)
    s += (i ? ";" : "") + ("x" + std::to_string(i + 1)) + "=" + std::to_string(idx[i]);
  return s;
}

inline std::optional<long long> p_group_prime(std::uint64_t order) {
  if (order < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  if (order != 1) return std::nullopt;
  return static_cast<long long>(p);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic of the bounds

// (2^d + 2^{d-1} - 3, 2^d + 2^{d-1} + 2^{d-2} - 3)
inline std::pair<long long, long long> theorem_bounds(int d) {
  if (d < 2 || d > 60) throw std::invalid_argument("bounds: d must be in 2..60");
  long long b1 = (1LL << d) + (1LL << (d - 1)) - 3;
  return {b1, b1 + (1LL << (d - 2))};
}

// unique r >= 0 with p^{r-1} < c <= p^r
inline int compute_r_engel(long long c, long long p) {
  if (c < 1) throw std::invalid_argument("compute_r_engel: c must be >= 1");
  if (p < 2) throw std::invalid_argument("compute_r_engel: p must be a prime >= 2");
  int r = 0;
  long long pw = 1;
  while (pw < c) {
    pw *= p;
    ++r;
  }
  return r;
}

// unique r >= 0 with p^{r-1} < c-1 <= p^r
inline int compute_r_variety(long long c, long long p) {
  if (c < 2) throw std::invalid_argument("compute_r_variety: c must be >= 2");
  return compute_r_engel(c - 1, p);
}

// ---------------------------------------------------------------------------
// Verified statement: if [g,x,g,x] = 1 for all x, the conjugates of g inside
// <g>^G generate an abelian group, and g lies in the Fitting subgroup.

// class representatives g with [g,x,g,x] = 1 for all x; the property is a
// class function, so testing representatives suffices
inline std::vector<std::uint32_t> heineken_qualifying_reps(const FiniteGroup& G,
                                                           unsigned threads,
                                                           std::uint64_t* pairs_out = nullptr) {
  const auto& reps = G.conjugacy_class_reps();
  std::vector<std::uint8_t> ok(reps.size(), 0);
  std::vector<std::uint64_t> pairs(threads ? threads : 1, 0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  detail::partition_ranges(reps.size(), threads, ranges);
  auto worker = [&](std::size_t r) {
    for (std::uint64_t i = ranges[r].first; i < ranges[r].second; ++i) {
      std::uint32_t g = reps[i];
      bool qualifies = true;
      for (std::uint32_t x = 0; x < G.order() && qualifies; ++x) {
        ++pairs[r];
        std::uint32_t c = G.commutator(g, x);
        c = G.commutator(c, g);
        if (G.commutator(c, x) != 0) qualifies = false;
      }
      ok[i] = qualifies ? 1 : 0;
    }
  };
  if (ranges.size() == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t r = 0; r < ranges.size(); ++r) pool.emplace_back(worker, r);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (ok[i]) out.push_back(reps[i]);
  if (pairs_out) {
    *pairs_out = 0;
    for (std::uint64_t p : pairs) *pairs_out += p;
  }
  return out;
}

// full qualifying element set (union of the qualifying classes)
inline std::vector<std::uint32_t> heineken_qualifying_set(const FiniteGroup& G,
                                                          unsigned threads = default_threads()) {
  std::vector<std::uint32_t> qreps = heineken_qualifying_reps(G, threads);
  const auto& cls = G.class_index();
  std::vector<std::uint8_t> keep(G.conjugacy_class_reps().size(), 0);
  for (std::uint32_t r : qreps) keep[cls[r]] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < G.order(); ++i)
    if (keep[cls[i]]) out.push_back(i);
  return out;
}

inline VerificationReport check_heineken(const FiniteGroup& G, const std::string& group_id,
                                         const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "heineken";
  rep.group = group_id;
  std::uint64_t reps_count = G.conjugacy_class_reps().size();
  if (reps_count * G.order() > cfg.pair_budget) {
    rep.verdict = Verdict::skipped;
    rep.detail = "pair budget exceeded";
    rep.wall_ms = clock.ms();
    return rep;
  }
  std::uint64_t pairs = 0;
  std::vector<std::uint32_t> qreps = heineken_qualifying_reps(G, cfg.threads, &pairs);
  rep.tuples = pairs;

  SubgroupHandle fit = fitting(G);
  std::uint64_t qualifying_elements = 0;
  const auto& cls = G.class_index();
  {
    std::vector<std::uint8_t> keep(G.conjugacy_class_reps().size(), 0);
    for (std::uint32_t r : qreps) keep[cls[r]] = 1;
    for (std::uint32_t i = 0; i < G.order(); ++i)
      if (keep[cls[i]]) ++qualifying_elements;
  }

  for (std::uint32_t g : qreps) {
    // (i) the conjugates of g inside H = <g>^G generate an abelian subgroup
    SubgroupHandle H = normal_closure(G, {g});
    std::vector<std::uint32_t> conjugates;
    for (std::uint32_t h : H.elements) conjugates.push_back(G.conj(g, h));
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    for (std::size_t i = 0; i < conjugates.size(); ++i)
      for (std::size_t j = i + 1; j < conjugates.size(); ++j)
        if (std::uint32_t a = conjugates[i], b = conjugates[j]; G.commutator(a, b) != 0) {
          rep.verdict = Verdict::fail;
          rep.detail = "conjugates of g in <g>^G do not commute";
          rep.witness = "g=" + std::to_string(g) + ";a=" + std::to_string(a) +
                        ";b=" + std::to_string(b);
          rep.wall_ms = clock.ms();
          return rep;
        }
    // (ii) g lies in the Fitting subgroup
    if (!fit.contains(g)) {
      rep.verdict = Verdict::fail;
      rep.detail = "qualifying g outside the Fitting subgroup";
      rep.witness = "g=" + std::to_string(g);
      rep.wall_ms = clock.ms();
      return rep;
    }
  }
  rep.verdict = Verdict::pass;
  rep.detail = "qualifying=" + std::to_string(qualifying_elements) + "/" +
               std::to_string(G.order()) + ";classes=" + std::to_string(qreps.size());
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Verified statement: a group satisfying the law W_n = 1 has Fitting height
// at most n.

inline VerificationReport check_fitting_series(const FiniteGroup& G, const std::string& group_id,
                                               int n, const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "fitting_series";
  rep.group = group_id;
  rep.param("n", n);
  try {
    LawCheckResult law = law_check_exhaustive(G, build_w(n), cfg.law_budget, cfg.threads);
    rep.tuples = law.assignments;
    if (!law.holds) {
      rep.verdict = Verdict::vacuous;
      rep.detail = "law fails";
      rep.witness = detail::assignment_witness(law.counterexample);
    } else {
      std::optional<int> h = fitting_height(G);
      if (h && *h <= n) {
        rep.verdict = Verdict::pass;
        rep.detail = "height=" + std::to_string(*h);
      } else {
        rep.verdict = Verdict::fail;
        rep.detail = h ? "height=" + std::to_string(*h) + " exceeds n"
                       : "height undefined (trivial Fitting)";
      }
    }
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::skipped;
    rep.detail = e.what();
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Verified statement: when every d-generator subgroup has class at most
// 2^d + 2^{d-1} - 3, the group is nilpotent.

inline VerificationReport check_variety_implication(const FiniteGroup& G,
                                                    const std::string& group_id, int d,
                                                    const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "variety_implication";
  rep.group = group_id;
  rep.param("d", d);
  long long b1 = theorem_bounds(d).first;
  try {
    VarietyClassResult vc = variety_class(G, d, cfg.variety_budget);
    rep.tuples = vc.tuples;
    if (!vc.nilpotent) {
      rep.verdict = Verdict::vacuous;
      rep.detail = "some d-generator subgroup is not nilpotent";
    } else if (vc.c > b1) {
      rep.verdict = Verdict::vacuous;
      rep.detail = "c*=" + std::to_string(vc.c) + " exceeds bound " + std::to_string(b1);
    } else if (nilpotency_class(G)) {
      rep.verdict = Verdict::pass;
      rep.detail = "c*=" + std::to_string(vc.c) + ";class=" + std::to_string(*nilpotency_class(G));
    } else {
      rep.verdict = Verdict::fail;
      rep.detail = "premise holds (c*=" + std::to_string(vc.c) + ") but group is not nilpotent";
    }
  } catch (const BudgetExceeded& e) {
    rep.verdict = Verdict::skipped;
    rep.detail = e.what();
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Verified statement: in a finite c-Engel p-group with p^{r-1} < c <= p^r,
// whenever x^{p^n} = y^{p^n} = 1 with n > r (odd p; n > r+1 for p = 2), the
// powers x^{p^{n-1}} and y^{p^{n-1}} commute.

inline VerificationReport check_power_commutation(const FiniteGroup& G,
                                                  const std::string& group_id, long long p,
                                                  const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "power_commutation";
  rep.group = group_id;
  rep.param("p", p);
  if (!is_prime_power_of(G.order(), static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("check_power_commutation: not a p-group for p=" +
                                std::to_string(p));
  std::uint64_t reps_count = G.conjugacy_class_reps().size();
  if (reps_count * G.order() > cfg.pair_budget) {
    rep.verdict = Verdict::skipped;
    rep.detail = "pair budget exceeded";
    rep.wall_ms = clock.ms();
    return rep;
  }
  EngelResult engel = engel_degree(G, nilpotency_class(G).value_or(1) + 1, cfg.threads);
  rep.tuples = engel.pairs;
  if (!engel.bounded) {
    rep.verdict = Verdict::fail;  // a finite p-group is nilpotent, hence Engel
    rep.detail = "no Engel degree within class bound";
    rep.wall_ms = clock.ms();
    return rep;
  }
  long long c = engel.degree;
  int r = compute_r_engel(c, p);
  rep.param("c", c);
  rep.param("r", r);

  // element orders, all powers of p
  std::vector<std::uint64_t> ord(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) ord[i] = G.element_order(i);
  std::uint64_t expo = 1;
  for (std::uint64_t o : ord) expo = std::max(expo, o);
  int emax = 0;
  for (std::uint64_t v = 1; v < expo; v *= static_cast<std::uint64_t>(p)) ++emax;

  const auto& reps = G.conjugacy_class_reps();
  std::uint64_t nontrivial = 0, checked = 0;
  int nmin = p == 2 ? r + 2 : r + 1;
  for (int n = nmin; n <= emax; ++n) {
    std::uint64_t pn = 1, pn1 = 1;
    for (int i = 0; i < n; ++i) pn *= static_cast<std::uint64_t>(p);
    for (int i = 0; i + 1 < n; ++i) pn1 *= static_cast<std::uint64_t>(p);
    std::vector<std::uint32_t> pw(G.order());
    for (std::uint32_t i = 0; i < G.order(); ++i)
      pw[i] = G.power(i, static_cast<long long>(pn1));
    for (std::uint32_t x : reps) {
      if (ord[x] > pn) continue;
      for (std::uint32_t y = 0; y < G.order(); ++y) {
        if (ord[y] > pn) continue;
        if (pw[x] == 0 || pw[y] == 0) continue;  // bracket trivially vanishes
        ++nontrivial;
        ++checked;
        if (G.commutator(pw[x], pw[y]) != 0) {
          rep.verdict = Verdict::fail;
          rep.detail = "powers fail to commute";
          rep.witness = "x=" + std::to_string(x) + ";y=" + std::to_string(y) +
                        ";n=" + std::to_string(n);
          rep.wall_ms = clock.ms();
          return rep;
        }
      }
    }
  }
  rep.tuples += checked;
  if (nontrivial == 0) {
    rep.verdict = Verdict::vacuous;
    rep.detail = "no nontrivial (x,y,n) meets the hypotheses";
  } else {
    rep.verdict = Verdict::pass;
    rep.detail = "nontrivial_pairs=" + std::to_string(nontrivial) + ";n_range=" +
                 std::to_string(nmin) + ".." + std::to_string(emax);
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Verified statement: for a p-group whose 2-generator subgroups have class at
// most c, and p^{r-1} < c-1 <= p^r, the subgroup of p^r-th powers (2^{r+1}
// for p = 2) is nilpotent.

inline VerificationReport check_power_subgroup_nilpotent(const FiniteGroup& G,
                                                         const std::string& group_id, long long p,
                                                         int c, const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "power_subgroup";
  rep.group = group_id;
  rep.param("p", p);
  rep.param("c", c);
  if (!is_prime_power_of(G.order(), static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("check_power_subgroup_nilpotent: not a p-group for p=" +
                                std::to_string(p));
  if (c < 2) throw std::invalid_argument("check_power_subgroup_nilpotent: c must be >= 2");

  // premise G in N_c^(2); class(G) <= c settles it without the tuple sweep
  std::optional<int> cls = nilpotency_class(G);
  bool premise = cls && *cls <= c;
  if (!premise) {
    try {
      VarietyClassResult vc = variety_class(G, 2, cfg.variety_budget);
      rep.tuples = vc.tuples;
      premise = vc.nilpotent && vc.c <= c;
    } catch (const BudgetExceeded& e) {
      rep.verdict = Verdict::skipped;
      rep.detail = e.what();
      rep.wall_ms = clock.ms();
      return rep;
    }
  }
  if (!premise) {
    rep.verdict = Verdict::vacuous;
    rep.detail = "group is not in the class-c 2-generator variety";
    rep.wall_ms = clock.ms();
    return rep;
  }
  int r = compute_r_variety(c, p);
  long long m = 1;
  for (int i = 0; i < (p == 2 ? r + 1 : r); ++i) m *= p;
  rep.param("r", r);
  rep.param("m", m);
  SubgroupHandle P = power_subgroup(G, m);
  std::optional<int> pcls = nilpotency_class_of(G, P);
  if (pcls) {
    rep.verdict = Verdict::pass;
    rep.detail = "power_subgroup_order=" + std::to_string(P.size()) +
                 ";class=" + std::to_string(*pcls);
  } else {
    rep.verdict = Verdict::fail;
    rep.detail = "power subgroup is not nilpotent";
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Verified statement: for 2-groups of exponent dividing 8 (3-groups of
// exponent dividing 9) in the class-5 2-generator variety, [x^4,y,x^4,y] = 1
// ([x^3,y,x^3,y] = 1) and x^4 (x^3) lies in the Fitting subgroup.

inline VerificationReport check_prop33(const FiniteGroup& G, const std::string& group_id,
                                       long long p, const SweepConfig& cfg = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.check = "prop33";
  rep.group = group_id;
  rep.param("p", p);
  if (p != 2 && p != 3) throw std::invalid_argument("check_prop33: p must be 2 or 3");
  long long pprime = p == 2 ? 4 : 3;
  long long target_exponent = p == 2 ? 8 : 9;

  std::uint64_t expo = exponent(G);
  if (target_exponent % expo != 0) {
    rep.verdict = Verdict::vacuous;
    rep.detail = "exponent " + std::to_string(expo) + " does not divide " +
                 std::to_string(target_exponent);
    rep.wall_ms = clock.ms();
    return rep;
  }
  std::optional<int> cls = nilpotency_class(G);
  bool premise = cls && *cls <= 5;
  if (!premise) {
    try {
      VarietyClassResult vc = variety_class(G, 2, cfg.variety_budget);
      premise = vc.nilpotent && vc.c <= 5;
    } catch (const BudgetExceeded& e) {
      rep.verdict = Verdict::skipped;
      rep.detail = e.what();
      rep.wall_ms = clock.ms();
      return rep;
    }
  }
  if (!premise) {
    rep.verdict = Verdict::vacuous;
    rep.detail = "not in the class-5 2-generator variety";
    rep.wall_ms = clock.ms();
    return rep;
  }

  std::vector<std::uint32_t> pw(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) pw[i] = G.power(i, pprime);

  const auto& reps = G.conjugacy_class_reps();
  bool exhaustive = static_cast<std::uint64_t>(reps.size()) * G.order() <= cfg.pair_budget;
  std::uint64_t pairs = 0;
  auto word_holds = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = pw[x];
    std::uint32_t c1 = G.commutator(a, y);
    std::uint32_t c2 = G.commutator(c1, a);
    return G.commutator(c2, y) == 0;
  };
  if (exhaustive) {
    for (std::uint32_t x : reps)
      for (std::uint32_t y = 0; y < G.order(); ++y) {
        ++pairs;
        if (!word_holds(x, y)) {
          rep.verdict = Verdict::fail;
          rep.detail = "[x^" + std::to_string(pprime) + ",y,x^" + std::to_string(pprime) +
                       ",y] != 1";
          rep.witness = "x=" + std::to_string(x) + ";y=" + std::to_string(y);
          rep.tuples = pairs;
          rep.wall_ms = clock.ms();
          return rep;
        }
      }
  } else {
    SplitMix64 rng(cfg.seed ^ fnv1a(group_id) ^ fnv1a("prop33"));
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
      std::uint32_t x = static_cast<std::uint32_t>(rng.bounded(G.order()));
      std::uint32_t y = static_cast<std::uint32_t>(rng.bounded(G.order()));
      ++pairs;
      if (!word_holds(x, y)) {
        rep.verdict = Verdict::fail;
        rep.detail = "[x^p',y,x^p',y] != 1 (sampled)";
        rep.witness = "x=" + std::to_string(x) + ";y=" + std::to_string(y);
        rep.tuples = pairs;
        rep.wall_ms = clock.ms();
        return rep;
      }
    }
  }

  // x^{p'} in fitting(G) for every x
  SubgroupHandle fit = fitting(G);
  for (std::uint32_t x = 0; x < G.order(); ++x)
    if (!fit.contains(pw[x])) {
      rep.verdict = Verdict::fail;
      rep.detail = "x^" + std::to_string(pprime) + " outside the Fitting subgroup";
      rep.witness = "x=" + std::to_string(x);
      rep.tuples = pairs;
      rep.wall_ms = clock.ms();
      return rep;
    }

  rep.verdict = Verdict::pass;
  rep.tuples = pairs;
  rep.detail = std::string(exhaustive ? "exhaustive" : "sampled") + ";pairs=" +
               std::to_string(pairs) + ";exponent=" + std::to_string(expo) +
               (cls ? ";class=" + std::to_string(*cls) : "") +
               (fit.size() == G.order() ? ";fitting=G(membership_trivial)" : "");
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Suite runner

struct SuiteOutcome {
  std::vector<VerificationReport> reports;
  bool any_fail = false;
  bool any_malformed = false;

  std::string summary() const {
    int counts[4] = {0, 0, 0, 0};
    for (const VerificationReport& r : reports) counts[static_cast<int>(r.verdict)]++;
    std::ostringstream os;
    os << "summary pass=" << counts[0] << " fail=" << counts[1] << " vacuous=" << counts[2]
       << " skipped=" << counts[3];
    return os.str();
  }
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "heineken", "fitting_series", "variety_implication", "power_commutation",
      "power_subgroup", "prop33"};
  return names;
}

// Runs `checks` (a subset of known_checks(), or {"all"}) over the corpus.
// Per-group parameters: fitting_series n = 1..3; variety_implication d = 2;
// power_commutation / power_subgroup (c = 5) / prop33 on p-group entries,
// prop33 only for p in {2,3}. Entries whose metadata self-check fails are
// reported as skipped and flagged as malformed input.
inline SuiteOutcome run_suite(const std::vector<CorpusEntry>& corpus,
                              std::vector<std::string> checks, const SweepConfig& cfg = {}) {
  if (checks.size() == 1 && checks[0] == "all") checks = known_checks();
  for (const std::string& c : checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw std::invalid_argument("unknown check '" + c + "'");
  auto selected = [&](const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };

  SuiteOutcome out;
  int corpus_index = 0;
  auto take = [&](VerificationReport rep) {
    rep.corpus_index = corpus_index;
    out.reports.push_back(std::move(rep));
  };
  for (const CorpusEntry& entry : corpus) {
    ++corpus_index;
    std::optional<FiniteGroup> G;
    try {
      G = build_entry(entry);
    } catch (const std::exception& e) {
      VerificationReport rep;
      rep.check = "corpus";
      rep.group = entry.name;
      rep.verdict = Verdict::skipped;
      rep.detail = e.what();
      take(std::move(rep));
      out.any_malformed = true;
      continue;
    }
    std::optional<long long> p = detail::p_group_prime(G->order());

    if (selected("heineken")) take(check_heineken(*G, entry.name, cfg));
    if (selected("fitting_series"))
      for (int n = 1; n <= 3; ++n) take(check_fitting_series(*G, entry.name, n, cfg));
    if (selected("variety_implication"))
      take(check_variety_implication(*G, entry.name, 2, cfg));
    if (p) {
      if (selected("power_commutation"))
        take(check_power_commutation(*G, entry.name, *p, cfg));
      if (selected("power_subgroup"))
        take(check_power_subgroup_nilpotent(*G, entry.name, *p, 5, cfg));
      if (selected("prop33") && (*p == 2 || *p == 3)) take(check_prop33(*G, entry.name, *p, cfg));
    }
  }
  for (const VerificationReport& r : out.reports)
    if (r.verdict == Verdict::fail) out.any_fail = true;
  // canonical order: corpus position, then check name, then parameters
  std::sort(out.reports.begin(), out.reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              if (a.corpus_index != b.corpus_index) return a.corpus_index < b.corpus_index;
              if (a.check != b.check) return a.check < b.check;
              return a.line() < b.line();
            });
  return out;
}

}  // namespace nilvar
