// nilvar: weights of commutator words, word laws on finite groups, and the
// verification suite over the group corpus.
//
// Exit status: 0 when every requested computation succeeded and, for
// `verify`, no check failed and no input was malformed; 1 when a verify check
// fails; 2 on malformed input or usage errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilvar/corpus.hpp"
#include "nilvar/group_io.hpp"
#include "nilvar/lie.hpp"
#include "nilvar/magnus.hpp"
#include "nilvar/sweeps.hpp"
#include "nilvar/theorems.hpp"

using namespace nilvar;

namespace {

FiniteGroup load_group_arg(const std::string& arg, std::size_t cap) {
  // accept either a group file path or a constructor expression
  if (std::filesystem::exists(arg)) return load_group_file(arg, cap);
  return make_group(arg);
}

int cmd_weight(const std::string& word, int D, const std::string& method, bool prune,
               bool show_terms) {
  CommutatorExpr expr = CommutatorExpr::parse(word);
  GammaWeightOptions opts;
  if (method == "series") opts.method = WeightMethod::series_only;
  else if (method == "structural") opts.method = WeightMethod::structural_only;
  else if (method != "auto") throw CLI::ValidationError("--method must be auto|series|structural");
  opts.prune = prune;
  WeightResult r = gamma_weight(expr, D, opts);
  if (r.exceeds)
    std::cout << "weight exceeds " << D << (r.structural ? " (structural)" : "") << "\n";
  else
    std::cout << "weight " << r.weight << (r.structural ? " (structural)" : " (series)") << "\n";
  if (show_terms) {
    if (r.structural) {
      LieEngine engine;
      auto lead = engine.leading_term(expr);
      std::cout << "leading Lie term: " << engine.combo_to_string(lead->combo) << "\n";
    } else if (!r.exceeds) {
      SparseSeries s = magnus_embed(expand(expr), r.weight);
      std::cout << "minimal-degree terms:";
      for (const auto& [m, c] : s.homogeneous(r.weight))
        std::cout << " " << (c.sign() < 0 ? "-" : "+")
                  << (c.sign() < 0 ? (-c).to_string() : c.to_string()) << m.to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_law(const std::string& group_arg, const std::string& word, const std::string& mode,
            std::uint64_t budget, std::uint64_t sample, std::uint64_t seed, std::size_t cap,
            unsigned threads) {
  FiniteGroup G = load_group_arg(group_arg, cap);
  CommutatorExpr expr = CommutatorExpr::parse(word);
  LawCheckResult res;
  if (mode == "exhaustive") {
    res = law_check_exhaustive(G, expr, budget, threads);
  } else if (mode == "sample") {
    res = law_check_sample(G, expr, sample, seed);
  } else {
    throw CLI::ValidationError("--mode must be exhaustive|sample");
  }
  if (res.holds) {
    std::cout << (res.sampled ? "holds (sampled, " : "holds (exhaustive, ") << res.assignments
              << " assignments)\n";
  } else {
    std::cout << "counterexample:";
    for (std::size_t v = 0; v < res.counterexample.size(); ++v)
      std::cout << " x" << v + 1 << "=" << res.counterexample[v] << "("
                << G.element(res.counterexample[v]).to_string() << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& check, const std::string& corpus_arg, const SweepConfig& cfg,
               const std::string& out_path) {
  std::vector<CorpusEntry> corpus =
      corpus_arg == "default" ? default_corpus() : load_manifest_file(corpus_arg);
  SuiteOutcome outcome = run_suite(corpus, {check}, cfg);
  for (const VerificationReport& r : outcome.reports) std::cout << r.line(true) << "\n";
  std::cout << outcome.summary() << "\n";
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    for (const VerificationReport& r : outcome.reports) os << r.line(false) << "\n";
    os << outcome.summary() << "\n";
  }
  if (outcome.any_malformed) return 2;
  return outcome.any_fail ? 1 : 0;
}

int cmd_corpus_dump(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<CorpusEntry> corpus = default_corpus();
  for (const CorpusEntry& e : corpus) {
    FiniteGroup G = build_entry(e);
    save_group_file(G, (std::filesystem::path(dir) / (e.name + ".group")).string());
  }
  std::ofstream os((std::filesystem::path(dir) / "manifest.txt").string());
  os << manifest_to_text(corpus);
  std::cout << "wrote " << corpus.size() << " groups and manifest.txt to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutator word weights and finite-group verification"};
  app.require_subcommand(1);

  // ---- weight ----
  std::string word, method = "auto";
  int trunc = 16;
  bool prune = false, show_terms = false;
  CLI::App* weight = app.add_subcommand("weight", "lower-central weight of a word");
  weight->add_option("word", word, "word text, e.g. \"[x1,x2,x1,x2]\"")->required();
  weight->add_option("--D", trunc, "truncation degree")->check(CLI::Range(1, 30));
  weight->add_option("--method", method, "auto|series|structural");
  weight->add_flag("--prune", prune, "multihomogeneous pruning (series route)");
  weight->add_flag("--terms", show_terms, "print the minimal-degree terms");

  // ---- law ----
  std::string group_arg, law_word, mode = "exhaustive";
  std::uint64_t budget = 100000000, sample = 100000, seed = 1;
  std::size_t cap = FiniteGroup::kDefaultCap;
  unsigned threads = default_threads();
  CLI::App* law = app.add_subcommand("law", "check a word law on a group");
  law->add_option("group", group_arg, "group file or constructor, e.g. symmetric(4)")->required();
  law->add_option("word", law_word, "word text")->required();
  law->add_option("--mode", mode, "exhaustive|sample");
  law->add_option("--budget", budget, "assignment budget for exhaustive mode");
  law->add_option("--sample", sample, "sample count");
  law->add_option("--seed", seed, "sampling seed");
  law->add_option("--cap", cap, "group enumeration cap");
  law->add_option("--threads", threads, "worker threads");

  // ---- verify ----
  std::string check = "all", corpus_arg = "default", out_path;
  SweepConfig cfg;
  CLI::App* verify = app.add_subcommand("verify", "run verification checks over a corpus");
  verify->add_option("check", check, "check name or 'all'");
  verify->add_option("--corpus", corpus_arg, "'default' or a manifest path");
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_option("--sample", cfg.sample_count, "sample count for oversized sweeps");
  verify->add_option("--budget", cfg.law_budget, "law budget (assignments)");
  verify->add_option("--pair-budget", cfg.pair_budget, "pair-sweep budget");
  verify->add_option("--variety-budget", cfg.variety_budget, "variety sweep budget");
  verify->add_option("--threads", cfg.threads, "worker threads");
  verify->add_option("--out", out_path, "write the canonical report file here");

  // ---- bounds ----
  int bound_d = 2;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "class bounds for a generator count");
  bounds_cmd->add_option("d", bound_d, "generator count, >= 2")->required();

  // ---- r ----
  long long rc = 0, rp = 0;
  std::string variant = "engel";
  CLI::App* rcmd = app.add_subcommand("r", "the r of the power inequalities");
  rcmd->add_option("c", rc, "class / Engel degree")->required();
  rcmd->add_option("p", rp, "prime")->required();
  rcmd->add_option("--variant", variant, "engel|variety");

  // ---- witt ----
  long long wr = 0, wn = 0;
  CLI::App* witt = app.add_subcommand("witt", "rank of the degree-n free Lie layer");
  witt->add_option("r", wr, "rank")->required();
  witt->add_option("n", wn, "degree")->required();

  // ---- variety ----
  std::string vgroup;
  int vd = 2;
  std::uint64_t vbudget = 100000000, vsample = 0, vseed = 1;
  std::size_t vcap = FiniteGroup::kDefaultCap;
  CLI::App* variety = app.add_subcommand("variety", "max class over d-generator subgroups");
  variety->add_option("group", vgroup, "group file or constructor")->required();
  variety->add_option("--d", vd, "generator count")->check(CLI::Range(1, 4));
  variety->add_option("--budget", vbudget, "tuple-work budget");
  variety->add_option("--sample", vsample, "sample this many tuples instead of sweeping");
  variety->add_option("--seed", vseed, "sampling seed");
  variety->add_option("--cap", vcap, "group enumeration cap");

  // ---- fitting ----
  std::string fgroup;
  std::size_t fcap = FiniteGroup::kDefaultCap;
  CLI::App* fit = app.add_subcommand("fitting", "Fitting subgroup of a group");
  fit->add_option("group", fgroup, "group file or constructor")->required();
  fit->add_option("--cap", fcap, "group enumeration cap");

  // ---- word ----
  std::string family;
  int fam_n = 1;
  CLI::App* word_cmd = app.add_subcommand("word", "print a word family member");
  word_cmd->add_option("family", family, "w|v|engel|gamma")->required();
  word_cmd->add_option("n", fam_n, "index")->required();

  // ---- corpus ----
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus utilities");
  std::string dump_dir;
  CLI::App* dump = corpus_cmd->add_subcommand("dump", "write default corpus files + manifest");
  dump->add_option("--dir", dump_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*weight) return cmd_weight(word, trunc, method, prune, show_terms);
    if (*law) return cmd_law(group_arg, law_word, mode, budget, sample, seed, cap, threads);
    if (*verify) return cmd_verify(check, corpus_arg, cfg, out_path);
    if (*bounds_cmd) {
      auto [b1, b2] = theorem_bounds(bound_d);
      std::cout << b1 << " " << b2 << "\n";
      return 0;
    }
    if (*rcmd) {
      int r = variant == "variety" ? compute_r_variety(rc, rp) : compute_r_engel(rc, rp);
      long long m = 1;
      for (int i = 0; i < (rp == 2 && variant == "variety" ? r + 1 : r); ++i) m *= rp;
      std::cout << "r = " << r;
      if (variant == "variety") std::cout << ", exponent " << m;
      std::cout << "\n";
      return 0;
    }
    if (*witt) {
      std::cout << witt_number(wr, wn) << "\n";
      return 0;
    }
    if (*variety) {
      FiniteGroup G = load_group_arg(vgroup, vcap);
      std::optional<std::pair<std::uint64_t, std::uint64_t>> sampling;
      if (vsample > 0) sampling = std::make_pair(vsample, vseed);
      VarietyClassResult res = variety_class(G, vd, vbudget, sampling);
      if (!res.nilpotent)
        std::cout << "none (some " << vd << "-generator subgroup is not nilpotent"
                  << (res.sampled ? ", sampled" : "") << ")\n";
      else if (res.sampled)
        std::cout << "c* >= " << res.c << " (lower bound from " << res.tuples
                  << " sampled tuples)\n";
      else
        std::cout << "c* = " << res.c << " (" << res.distinct_subgroups
                  << " distinct subgroups over " << res.tuples << " tuples)\n";
      return 0;
    }
    if (*fit) {
      FiniteGroup G = load_group_arg(fgroup, fcap);
      SubgroupHandle f = fitting(G);
      std::cout << "order " << f.size() << "\n";
      if (f.size() <= 64) {
        for (std::uint32_t i : f.elements)
          std::cout << "  [" << i << "] " << G.element(i).to_string() << "\n";
      }
      return 0;
    }
    if (*word_cmd) {
      CommutatorExpr e = family == "w"       ? build_w(fam_n)
                         : family == "v"     ? build_v(fam_n)
                         : family == "engel" ? build_engel(fam_n)
                         : family == "gamma" ? build_gamma_word(fam_n)
                                             : throw std::invalid_argument("family must be w|v|engel|gamma");
      std::cout << e.to_string() << "\n";
      return 0;
    }
    if (*dump) return cmd_corpus_dump(dump_dir);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
