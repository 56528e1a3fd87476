// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 11 re-runs the installed CLI twice and compares the
// report files byte for byte; pass the binary with --cli <path>.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilvar/corpus.hpp"
#include "nilvar/magnus.hpp"
#include "nilvar/theorems.hpp"
#include "oracles.hpp"

using namespace nilvar;

namespace {

int failures = 0;

void report(bool ok, const std::string& what) {
  std::printf("%s %s\n", ok ? "[PASS]" : "[FAIL]", what.c_str());
  if (!ok) ++failures;
}

void skip(const std::string& what) { std::printf("[SKIP] %s\n", what.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  auto suite_start = std::chrono::steady_clock::now();

  // ------------------------------------------------------------------ 1
  {
    GammaWeightOptions series{WeightMethod::series_only, false};
    bool ok = gamma_weight(build_w(1), 6, series).weight == 4;
    ok = ok && gamma_weight(build_w(1), 6).weight == 4;
    auto t0 = std::chrono::steady_clock::now();
    ok = ok && gamma_weight(build_w(2), 10, series).weight == 10;
    double w2_series = seconds_since(t0);
    ok = ok && w2_series < 60.0;
    ok = ok && gamma_weight(build_w(2), 12).weight == 10;
    ok = ok && gamma_weight(build_v(1), 12, series).weight == 12;
    ok = ok && gamma_weight(build_v(1), 14).weight == 12;
    WeightResult v2 = gamma_weight(build_v(2), 28);
    ok = ok && v2.structural && v2.weight == 26;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "criterion 1: weights W1=4 W2=10 V1=12 V2=26 exact (W2 series at D=10 in %.2fs)",
                  w2_series);
    report(ok, buf);

    WeightResult w3 = gamma_weight(build_w(3), 24);
    std::snprintf(buf, sizeof buf,
                  "criterion 1 stretch: series route at D=22 infeasible; structural certificate "
                  "gives gamma_weight(W3)=%d",
                  w3.weight);
    skip(buf);
    report(w3.structural && w3.weight == 22, "criterion 1 stretch (structural): W3 weight 22");
  }

  // ------------------------------------------------------------------ 2
  {
    bool ok = true;
    for (int d : {2, 3}) {
      long long b1 = theorem_bounds(d).first;
      for (long long c = 0; c <= b1; ++c) ok = ok && is_law_of_nc(build_w(d - 1), static_cast<int>(c));
      ok = ok && !is_law_of_nc(build_w(d - 1), static_cast<int>(b1) + 1);
    }
    for (int c = 0; c <= 11; ++c) ok = ok && is_law_of_nc(build_v(1), c);
    ok = ok && !is_law_of_nc(build_v(1), 12);
    report(ok, "criterion 2: law-of-N_c boundaries for W_1, W_2, V_1 are exact");
  }

  // ------------------------------------------------------------------ 3
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string culprit;
    for (const CorpusEntry& e : default_corpus()) {
      FiniteGroup G = build_entry(e);
      VerificationReport rep = check_heineken(G, e.name);
      if (rep.verdict != Verdict::pass) {
        ok = false;
        culprit = e.name + " -> " + rep.line();
      }
      if (e.name == "sym3") {
        std::vector<std::uint32_t> q = heineken_qualifying_set(G);
        std::vector<std::uint32_t> expect = {0, G.index_of(Element::cycle(3, {1, 2, 3})),
                                             G.index_of(Element::cycle(3, {1, 3, 2}))};
        std::sort(expect.begin(), expect.end());
        ok = ok && q == expect;
      }
      if (e.name == "sym4") {
        std::vector<std::uint32_t> q = heineken_qualifying_set(G);
        std::vector<std::uint32_t> expect = {0, G.index_of(Element::permutation({2, 1, 4, 3})),
                                             G.index_of(Element::permutation({3, 4, 1, 2})),
                                             G.index_of(Element::permutation({4, 3, 2, 1}))};
        std::sort(expect.begin(), expect.end());
        ok = ok && q == expect;
      }
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 120.0;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "criterion 3: Heineken sweep clean on the full corpus, exact qualifying sets "
                  "for Sym(3)/Sym(4), %.1fs %s",
                  dt, culprit.c_str());
    report(ok, buf);
  }

  // ------------------------------------------------------------------ 4
  {
    bool ok = true;
    int checked = 0;
    for (const CorpusEntry& e : default_corpus()) {
      if (e.order > 100) continue;
      FiniteGroup G = build_entry(e);
      ++checked;
      if (fitting(G).elements != oracles::fitting_brute(G).elements) {
        ok = false;
        std::fprintf(stderr, "  fitting mismatch on %s\n", e.name.c_str());
      }
    }
    report(ok && checked >= 15,
           "criterion 4: fitting equals the join-closed lattice oracle on all " +
               std::to_string(checked) + " corpus groups of order <= 100");
  }

  // ------------------------------------------------------------------ 5
  {
    bool ok = fitting_height(make_symmetric(3)) == 2;
    ok = ok && fitting_height(make_symmetric(4)) == 3;
    ok = ok && !fitting_height(make_alternating(5)).has_value();
    report(ok, "criterion 5: fitting heights Sym(3)=2, Sym(4)=3, Alt(5)=undefined");
  }

  // ------------------------------------------------------------------ 6
  {
    FiniteGroup s3 = make_symmetric(3);
    FiniteGroup s4 = make_symmetric(4);
    VerificationReport r3 = check_fitting_series(s3, "sym3", 2);
    VerificationReport r4 = check_fitting_series(s4, "sym4", 3);
    bool ok = r3.verdict == Verdict::pass && r3.tuples == 216;
    ok = ok && r4.verdict == Verdict::pass;
    ok = ok && law_check_exhaustive(s3, build_w(2)).assignments == 216;
    report(ok, "criterion 6: fitting-series checks pass non-vacuously for (Sym(3),2) and "
               "(Sym(4),3); W_2 on Sym(3) by full 6^3 enumeration");
  }

  // ------------------------------------------------------------------ 7
  {
    bool ok = true;
    for (int r = 2; r <= 3; ++r)
      for (int n = 1; n <= (r == 2 ? 6 : 5); ++n) {
        auto basics = hall_basic_commutators(r, n);
        long long w = witt_number(r, n);
        ok = ok && static_cast<long long>(basics.size()) == w;
        ok = ok && leading_components_rank(basics, n) == w;
      }
    report(ok, "criterion 7: Hall counts and leading-component ranks match the Witt numbers "
               "(r=2 to n=6, r=3 to n=5)");
  }

  // ------------------------------------------------------------------ 8
  {
    // exhaustive over all 729^2 ordered pairs, directly
    FiniteGroup ut43 = make_unitriangular(4, 3);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint32_t> cubes(ut43.order());
    for (std::uint32_t i = 0; i < ut43.order(); ++i) cubes[i] = ut43.power(i, 3);
    bool ok = true;
    std::uint64_t pairs = 0;
    for (std::uint32_t x = 0; x < ut43.order() && ok; ++x)
      for (std::uint32_t y = 0; y < ut43.order(); ++y) {
        ++pairs;
        std::uint32_t c = ut43.commutator(cubes[x], y);
        c = ut43.commutator(c, cubes[x]);
        if (ut43.commutator(c, y) != 0) {
          ok = false;
          break;
        }
      }
    double dt43 = seconds_since(t0);
    ok = ok && pairs == 729ULL * 729ULL && dt43 < 60.0;
    VerificationReport rep43 = check_prop33(ut43, "ut_4_3", 3);
    ok = ok && rep43.verdict == Verdict::pass &&
         rep43.detail.find("fitting=G") != std::string::npos;

    // sampled on unitriangular(6,2) after confirming exponent 8 and class 5
    FiniteGroup ut62 = make_unitriangular(6, 2);
    ok = ok && exponent(ut62) == 8 && nilpotency_class(ut62) == 5;
    SweepConfig sampled_cfg;
    sampled_cfg.pair_budget = 1000;  // force the sampled path
    sampled_cfg.sample_count = 100000;
    sampled_cfg.seed = 1;
    VerificationReport rep62 = check_prop33(ut62, "ut_6_2", 2, sampled_cfg);
    ok = ok && rep62.verdict == Verdict::pass && rep62.tuples >= 100000 &&
         rep62.detail.find("sampled") != std::string::npos &&
         rep62.detail.find("fitting=G") != std::string::npos;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "criterion 8: [x^3,y,x^3,y]=1 on all 729^2 pairs in %.2fs; sampled 10^5 pairs "
                  "on unitriangular(6,2) (exponent 8, class 5); fitting=G reported",
                  dt43);
    report(ok, buf);
  }

  // ------------------------------------------------------------------ 9
  {
    VerificationReport rep = check_power_commutation(make_unitriangular(4, 3), "ut_4_3", 3);
    bool ok = rep.verdict == Verdict::pass;
    auto param = [&](const std::string& k) {
      for (const auto& [key, value] : rep.params)
        if (key == k) return value;
      return std::string();
    };
    ok = ok && param("c") == "3" && param("r") == "1";
    ok = ok && rep.detail.find("n_range=2..2") != std::string::npos;
    ok = ok && rep.detail.find("nontrivial_pairs=0") == std::string::npos;
    report(ok, "criterion 9: power commutation on unitriangular(4,3) passes non-vacuously "
               "with c=3, r=1, n=2");
  }

  // ------------------------------------------------------------------ 10
  {
    bool ok = compute_r_variety(5, 2) == 2 && compute_r_variety(5, 3) == 2;
    long long exp2 = 1LL << (compute_r_variety(5, 2) + 1);  // 2^{r+1}
    long long exp3 = 1;
    for (int i = 0; i < compute_r_variety(5, 3); ++i) exp3 *= 3;  // 3^r
    ok = ok && exp2 == 8 && exp3 == 9;
    report(ok, "criterion 10: r(5,2)=2 with exponent 8 and r(5,3)=2 with exponent 9");
  }

  // ------------------------------------------------------------------ 11
  {
    if (cli_path.empty()) {
      skip("criterion 11: no --cli path given");
      ++failures;
    } else {
      namespace fs = std::filesystem;
      fs::path dir = fs::temp_directory_path() / "nilvar_acceptance";
      fs::create_directories(dir);
      std::string out1 = (dir / "report1.txt").string();
      std::string out2 = (dir / "report2.txt").string();
      auto t0 = std::chrono::steady_clock::now();
      std::string base = "\"" + cli_path + "\" verify all --seed 1 --out ";
      int rc1 = std::system((base + "\"" + out1 + "\" > /dev/null 2>&1").c_str());
      double one_run = seconds_since(t0);
      int rc2 = std::system((base + "\"" + out2 + "\" > /dev/null 2>&1").c_str());
      std::string r1 = slurp(out1), r2 = slurp(out2);
      bool ok = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2 && one_run < 600.0;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "criterion 11: verify all --seed 1 twice, byte-identical reports (%zu bytes), "
                    "one run %.1fs",
                    r1.size(), one_run);
      report(ok, buf);
      fs::remove_all(dir);
    }
  }

  std::printf("acceptance total: %.1fs, %d failure(s)\n", seconds_since(suite_start), failures);
  return failures == 0 ? 0 : 1;
}
