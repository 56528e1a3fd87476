#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "nilvar/corpus.hpp"
#include "nilvar/finite_group.hpp"
#include "nilvar/group_element.hpp"
#include "nilvar/rng.hpp"
#include "nilvar/sweeps.hpp"
#include "oracles.hpp"

using namespace nilvar;

namespace {

FiniteGroup sym3() { return make_symmetric(3); }

std::vector<std::uint32_t> indices_of(const FiniteGroup& G, const std::vector<Element>& es) {
  std::vector<std::uint32_t> out;
  for (const Element& e : es) out.push_back(G.index_of(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Elements

TEST_CASE("permutation composition applies left factor first") {
  Element t = Element::cycle(3, {1, 2});
  Element s = Element::cycle(3, {2, 3});
  Element ts = t * s;  // p -> s(t(p))
  CHECK(ts.perm_image(0) == 2);  // 1 -> 2 -> 3
  CHECK((t * t).is_identity());
  CHECK((t.inverse() * t).is_identity());
}

TEST_CASE("unitriangular arithmetic") {
  Element e12 = Element::elementary(3, 5, 1, 2);
  Element e23 = Element::elementary(3, 5, 2, 3);
  Element prod = e12 * e23;
  CHECK(prod.matrix_entry(0, 2) == 1);  // path 1->2->3
  CHECK((e12 * e12.inverse()).is_identity());
  SplitMix64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<int> entries(16, 0);
    for (int i = 0; i < 4; ++i) entries[static_cast<std::size_t>(i * 4 + i)] = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        entries[static_cast<std::size_t>(i * 4 + j)] = static_cast<int>(rng.bounded(9));
    Element m = Element::unitriangular(4, 9, entries);
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
  }
  CHECK_THROWS(Element::unitriangular(3, 5, {1, 0, 0, 0, 1, 0, 0, 6, 1}));  // entry >= mod
  CHECK_THROWS(Element::permutation({1, 1, 3}));                            // not a bijection
}

// ---------------------------------------------------------------------------
// Closure

TEST_CASE("close enumerates Sym(3)") {
  FiniteGroup G = sym3();
  CHECK(G.order() == 6);
  CHECK(G.element(0).is_identity());
  CHECK(G.has_table());
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(G.mul(i, G.inv(i)) == 0);
    CHECK(G.mul(0, i) == i);
  }
}

TEST_CASE("close of the identity alone") {
  FiniteGroup G = FiniteGroup::close({Element::identity_permutation(4)});
  CHECK(G.order() == 1);
}

TEST_CASE("close respects the cap and reports the partial count") {
  try {
    FiniteGroup::close({Element::cycle(7, {1, 2}), Element::cycle(7, {1, 2, 3, 4, 5, 6, 7})}, 100);
    FAIL("expected OrderCapExceeded");
  } catch (const OrderCapExceeded& e) {
    CHECK(e.partial_count == 101);
  }
}

TEST_CASE("unitriangular group orders match m^(n(n-1)/2)") {
  CHECK(make_unitriangular(3, 2).order() == 8);
  CHECK(make_unitriangular(3, 3).order() == 27);
  CHECK(make_unitriangular(4, 3).order() == 729);
  CHECK(make_unitriangular(4, 2).order() == 64);
}

TEST_CASE("mixed-carrier generators are rejected") {
  CHECK_THROWS(FiniteGroup::close({Element::cycle(3, {1, 2}), Element::elementary(3, 2, 1, 2)}));
  CHECK_THROWS_AS(FiniteGroup::close({}), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Subgroups and normal closures

TEST_CASE("subgroup and normal closure in Sym(3)") {
  FiniteGroup G = sym3();
  std::uint32_t r = G.index_of(Element::cycle(3, {1, 2, 3}));
  std::uint32_t t = G.index_of(Element::cycle(3, {1, 2}));

  CHECK(subgroup(G, {}).size() == 1);
  CHECK(subgroup(G, {r}).size() == 3);
  CHECK(normal_closure(G, {r}).size() == 3);
  CHECK(normal_closure(G, {t}).size() == 6);
  CHECK_THROWS(subgroup(G, {99}));
}

TEST_CASE("normal closure is conjugation invariant") {
  FiniteGroup G = make_symmetric(4);
  SplitMix64 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    std::uint32_t x = static_cast<std::uint32_t>(rng.bounded(G.order()));
    std::uint32_t g = static_cast<std::uint32_t>(rng.bounded(G.order()));
    SubgroupHandle h = normal_closure(G, {x});
    CHECK(normal_closure(G, {G.conj(x, g)}).elements == h.elements);
    for (std::uint32_t e : h.elements) CHECK(h.contains(G.conj(e, g)));
  }
}

TEST_CASE("commutator subgroup matches the all-pairs oracle") {
  for (const char* ctor : {"symmetric(3)", "symmetric(4)", "dihedral(16)", "quaternion(8)",
                           "unitriangular(3,3)", "alternating(4)"}) {
    FiniteGroup G = make_group(ctor);
    SubgroupHandle whole = whole_group(G);
    SubgroupHandle derived = commutator_subgroup(G, whole, whole);
    CHECK(derived.elements == oracles::commutator_subgroup_brute(G, whole, whole).elements);
    // and against a random proper subgroup
    SplitMix64 rng(fnv1a(ctor));
    SubgroupHandle A = subgroup(G, {static_cast<std::uint32_t>(rng.bounded(G.order()))});
    CHECK(commutator_subgroup(G, A, whole).elements ==
          oracles::commutator_subgroup_brute(G, A, whole).elements);
  }
}

TEST_CASE("commutator subgroup basics") {
  FiniteGroup G = sym3();
  SubgroupHandle whole = whole_group(G);
  CHECK(commutator_subgroup(G, whole, whole).size() == 3);
  CHECK(commutator_subgroup(G, whole, trivial_subgroup(G)).size() == 1);
  FiniteGroup Q = make_quaternion(8);
  SubgroupHandle qw = whole_group(Q);
  CHECK(commutator_subgroup(Q, qw, qw).size() == 2);
}

// ---------------------------------------------------------------------------
// Series, class, Fitting

TEST_CASE("nilpotency classes") {
  CHECK(nilpotency_class(FiniteGroup::close({Element::identity_permutation(2)})) == 0);
  CHECK(nilpotency_class(make_cyclic(6)) == 1);
  CHECK(!nilpotency_class(sym3()).has_value());
  CHECK(nilpotency_class(make_dihedral(8)) == 2);
  CHECK(nilpotency_class(make_unitriangular(4, 2)) == 3);
  CHECK(nilpotency_class(make_unitriangular(3, 3)) == 2);

  auto series = lower_central_series(sym3());
  CHECK(series.size() == 2);
  CHECK(series.back().size() == 3);  // stabilizes at the 3-cycle subgroup
}

TEST_CASE("fitting subgroups") {
  CHECK(fitting(sym3()).size() == 3);

  FiniteGroup s4 = make_symmetric(4);
  SubgroupHandle f = fitting(s4);
  std::vector<std::uint32_t> klein = indices_of(
      s4, {Element::identity_permutation(4),
           Element::permutation({2, 1, 4, 3}), Element::permutation({3, 4, 1, 2}),
           Element::permutation({4, 3, 2, 1})});
  std::sort(klein.begin(), klein.end());
  CHECK(f.elements == klein);

  FiniteGroup d8 = make_dihedral(8);
  CHECK(fitting(d8).size() == 8);  // nilpotent: the whole group

  CHECK(fitting(make_alternating(5)).size() == 1);
}

TEST_CASE("fitting equals the lattice oracle on small groups") {
  for (const char* ctor : {"symmetric(3)", "symmetric(4)", "alternating(4)", "dihedral(12)",
                           "quaternion(16)", "unitriangular(3,2)",
                           "direct_product(dihedral(8),cyclic(3))"}) {
    FiniteGroup G = make_group(ctor);
    CHECK(fitting(G).elements == oracles::fitting_brute(G).elements);
  }
}

TEST_CASE("quotients") {
  FiniteGroup G = sym3();
  SubgroupHandle a3 = normal_closure(G, {G.index_of(Element::cycle(3, {1, 2, 3}))});
  FiniteGroup Q = quotient(G, a3);
  CHECK(Q.order() == 2);

  SubgroupHandle t = subgroup(G, {G.index_of(Element::cycle(3, {1, 2}))});
  CHECK_THROWS_AS(quotient(G, t), std::invalid_argument);

  FiniteGroup s4 = make_symmetric(4);
  SubgroupHandle f = fitting(s4);
  FiniteGroup s4q = quotient(s4, f);
  CHECK(s4q.order() == 6);
  CHECK(!nilpotency_class(s4q).has_value());  // isomorphic to Sym(3)

  // order multiplicativity across a few random normal closures
  SplitMix64 rng(9);
  for (int iter = 0; iter < 10; ++iter) {
    std::uint32_t x = static_cast<std::uint32_t>(rng.bounded(s4.order()));
    SubgroupHandle n = normal_closure(s4, {x});
    CHECK(quotient(s4, n).order() * n.size() == s4.order());
  }
}

TEST_CASE("fitting heights") {
  CHECK(fitting_height(sym3()) == 2);
  CHECK(fitting_height(make_symmetric(4)) == 3);
  CHECK(!fitting_height(make_alternating(5)).has_value());
  CHECK(fitting_height(make_dihedral(16)) == 1);
  CHECK(fitting_height(make_cyclic(5)) == 1);
}

// ---------------------------------------------------------------------------
// Exponent, powers, powerfulness

TEST_CASE("exponent and power subgroups") {
  CHECK(exponent(sym3()) == 6);
  CHECK(exponent(make_unitriangular(4, 3)) == 9);
  CHECK(power_subgroup(make_cyclic(8), 2).size() == 4);

  // cubes in UT(4,3) form the order-3 center: only the corner entry survives
  FiniteGroup ut43 = make_unitriangular(4, 3);
  SubgroupHandle cubes = power_subgroup(ut43, 3);
  CHECK(cubes.size() == 3);
  for (std::uint32_t i : cubes.elements) {
    const Element& e = ut43.element(i);
    for (int r = 0; r < 4; ++r)
      for (int c = r + 1; c < 4; ++c)
        if (!(r == 0 && c == 3)) CHECK(e.matrix_entry(r, c) == 0);
  }
}

TEST_CASE("is_powerful") {
  CHECK(is_powerful(make_cyclic(8), 2));
  CHECK(is_powerful(make_cyclic(9), 3));
  CHECK(!is_powerful(make_dihedral(8), 2));
  CHECK(!is_powerful(make_unitriangular(3, 3), 3));
  CHECK_THROWS(is_powerful(sym3(), 2));  // not a p-group
}

// ---------------------------------------------------------------------------
// Sweeps

TEST_CASE("engel degrees") {
  CHECK(engel_degree(make_cyclic(6), 5).degree == 1);
  CHECK(engel_degree(make_dihedral(8), 5).degree == 2);
  CHECK(!engel_degree(sym3(), 8).bounded);
  EngelResult ut43 = engel_degree(make_unitriangular(4, 3), 5);
  CHECK(ut43.bounded);
  CHECK(ut43.degree == 3);
}

TEST_CASE("law_check on Sym(3)") {
  FiniteGroup G = sym3();
  LawCheckResult w1 = law_check_exhaustive(G, build_w(1));
  CHECK(!w1.holds);
  // witness reproduces the violation through evaluate
  std::map<int, Element> assign;
  for (std::size_t v = 0; v < w1.counterexample.size(); ++v)
    assign.emplace(static_cast<int>(v) + 1, G.element(w1.counterexample[v]));
  CHECK(!evaluate(build_w(1), assign, G).is_identity());

  LawCheckResult w2 = law_check_exhaustive(G, build_w(2));
  CHECK(w2.holds);
  CHECK(w2.assignments == 216);  // full 6^3 enumeration
}

TEST_CASE("law_check verdicts and witnesses are thread independent") {
  FiniteGroup G = make_symmetric(4);
  CommutatorExpr w1 = build_w(1);
  LawCheckResult a = law_check_exhaustive(G, w1, 100000000, 1);
  LawCheckResult b = law_check_exhaustive(G, w1, 100000000, 4);
  CHECK(a.holds == b.holds);
  CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("law_check class-2 facts") {
  FiniteGroup Q = make_quaternion(8);
  CHECK(law_check_exhaustive(Q, build_w(1)).holds);
  CHECK(law_check_exhaustive(Q, build_engel(2)).holds);
  FiniteGroup d8 = make_dihedral(8);
  CHECK(law_check_exhaustive(d8, build_gamma_word(3)).holds);
  CHECK(!law_check_exhaustive(d8, build_gamma_word(2)).holds);
}

TEST_CASE("law_check budget and sampling") {
  FiniteGroup G = make_symmetric(5);
  CHECK_THROWS_AS(law_check_exhaustive(G, build_w(3), 1000), BudgetExceeded);
  LawCheckResult s1 = law_check_sample(G, build_w(1), 500, 1);
  LawCheckResult s2 = law_check_sample(G, build_w(1), 500, 1);
  CHECK(s1.sampled);
  CHECK(s1.holds == s2.holds);
  CHECK(s1.counterexample == s2.counterexample);
  CHECK(s1.assignments == s2.assignments);
}

TEST_CASE("laws versus nilpotency class on corpus groups") {
  for (const char* ctor : {"dihedral(8)", "dihedral(16)", "quaternion(16)", "unitriangular(3,3)",
                           "unitriangular(4,2)", "cyclic(9)"}) {
    FiniteGroup G = make_group(ctor);
    int c = *nilpotency_class(G);
    CHECK(law_check_exhaustive(G, build_gamma_word(c + 1)).holds);
    if (c >= 2) CHECK(!law_check_exhaustive(G, build_gamma_word(c)).holds);
  }
}

TEST_CASE("engel degree is at most the class for nilpotent groups") {
  for (const char* ctor :
       {"dihedral(8)", "dihedral(32)", "quaternion(16)", "unitriangular(3,3)",
        "unitriangular(4,3)", "cyclic(8)"}) {
    FiniteGroup G = make_group(ctor);
    EngelResult e = engel_degree(G, 10);
    CHECK(e.bounded);
    CHECK(e.degree <= *nilpotency_class(G));
  }
}

TEST_CASE("variety_class") {
  CHECK(variety_class(make_quaternion(8), 2).c == 2);
  CHECK(!variety_class(sym3(), 2).nilpotent);
  CHECK(variety_class(make_cyclic(9), 3).c == 1);

  // monotone in d when both sides are defined
  for (const char* ctor : {"quaternion(8)", "dihedral(8)", "unitriangular(3,2)", "cyclic(8)"}) {
    FiniteGroup G = make_group(ctor);
    VarietyClassResult d1 = variety_class(G, 1);
    VarietyClassResult d2 = variety_class(G, 2);
    REQUIRE(d1.nilpotent);
    REQUIRE(d2.nilpotent);
    CHECK(d1.c <= d2.c);
  }

  CHECK_THROWS_AS(variety_class(make_unitriangular(6, 2), 2, 1000), BudgetExceeded);
}

// ---------------------------------------------------------------------------
// evaluate

TEST_CASE("evaluate W_1 at transpositions in Sym(3)") {
  FiniteGroup G = sym3();
  std::map<int, Element> a{{1, Element::cycle(3, {1, 2})}, {2, Element::cycle(3, {2, 3})}};
  Element v = evaluate(build_w(1), a, G);
  CHECK(v == Element::cycle(3, {1, 2, 3}));  // the 3-cycle [t,s], by hand
}

TEST_CASE("evaluate: commutator words die in abelian groups") {
  FiniteGroup C = make_cyclic(12);
  SplitMix64 rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    std::map<int, Element> a;
    for (int v = 1; v <= 4; ++v)
      a.emplace(v, C.element(static_cast<std::uint32_t>(rng.bounded(C.order()))));
    CHECK(evaluate(build_gamma_word(2 + static_cast<int>(rng.bounded(3))), a, C).is_identity());
  }
}

TEST_CASE("evaluate equals letter-by-letter evaluation of the expansion") {
  FiniteGroup G = make_symmetric(4);
  SplitMix64 rng(18);
  for (int iter = 0; iter < 150; ++iter) {
    // random expression on 3 variables
    std::vector<CommutatorExpr> pool;
    for (int v = 1; v <= 3; ++v) pool.push_back(CommutatorExpr::variable(v));
    for (int step = 0; step < 4; ++step) {
      std::size_t i = rng.bounded(pool.size()), j = rng.bounded(pool.size());
      if (rng.bounded(5) == 0)
        pool.push_back(CommutatorExpr::power(pool[i], 1 + static_cast<int>(rng.bounded(3))));
      else
        pool.push_back(CommutatorExpr::commutator(pool[i], pool[j]));
    }
    CommutatorExpr e = pool.back();
    std::map<int, Element> a;
    for (int v = 1; v <= e.var_count(); ++v)
      a.emplace(v, G.element(static_cast<std::uint32_t>(rng.bounded(G.order()))));
    FreeWord w = expand(e);
    Element via_tree = evaluate(e, a, G);
    if (w.empty())
      CHECK(via_tree.is_identity());
    else
      CHECK(via_tree == evaluate_word(w, a, G));
  }
}

TEST_CASE("evaluate reports the missing variable") {
  FiniteGroup G = sym3();
  std::map<int, Element> a{{1, Element::cycle(3, {1, 2})}};
  try {
    evaluate(build_w(1), a, G);
    FAIL("expected error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x2") != std::string::npos);
  }
  CHECK_THROWS(evaluate(build_w(1), {{1, Element::cycle(4, {1, 2})}, {2, Element::cycle(4, {1, 2})}}, G));
}

// ---------------------------------------------------------------------------
// Corpus

TEST_CASE("corpus constructors and metadata self-checks") {
  for (const CorpusEntry& e : default_corpus()) {
    if (e.name == "ut_6_2") continue;  // covered in the slower suites
    FiniteGroup G = build_entry(e);
    CHECK(static_cast<long long>(G.order()) == e.order);
  }
}

TEST_CASE("corpus metadata mismatches are refused") {
  CorpusEntry bad{"bad", "symmetric(3)", 7, 6, std::nullopt};
  CHECK_THROWS_AS(build_entry(bad), CorpusMetadataError);
  CorpusEntry bad2{"bad2", "symmetric(3)", 6, 6, std::optional<int>(1)};
  CHECK_THROWS_AS(build_entry(bad2), CorpusMetadataError);
}

TEST_CASE("group files round trip bit-exactly") {
  for (const char* ctor : {"symmetric(4)", "quaternion(8)", "unitriangular(4,3)",
                           "direct_product(dihedral(8),cyclic(3))"}) {
    FiniteGroup G = make_group(ctor);
    std::string text = group_to_text(G);
    std::istringstream is(text);
    FiniteGroup H = load_group(is);
    REQUIRE(H.order() == G.order());
    for (std::uint32_t i = 0; i < G.order(); ++i) CHECK(H.element(i) == G.element(i));
    CHECK(group_to_text(H) == text);
  }
}

TEST_CASE("group file validation errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream is(text);
    try {
      load_group(is);
    } catch (const GroupParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("perm 3\ngen 1 1 3\n") == 2);                     // not a bijection
  CHECK(line_of("perm 3\ngen 1 2 3\ngen 1 2\n") == 3);            // wrong image count
  CHECK(line_of("unitriangular 3 mod 2\ngen 1 1 0 0 1 0 0 0 1\ngen 1 2 0 0 1 0 0 0 1\n") == 3);
  CHECK(line_of("frob 3\n") == 1);
  CHECK(line_of("perm 3\nrow 1 2 3\n") == 2);
}

TEST_CASE("manifest round trip and validation") {
  std::vector<CorpusEntry> entries = default_corpus();
  std::string text = manifest_to_text(entries);
  std::istringstream is(text);
  std::vector<CorpusEntry> back = parse_manifest(is);
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(back[i].name == entries[i].name);
    CHECK(back[i].ctor == entries[i].ctor);
    CHECK(back[i].order == entries[i].order);
    CHECK(back[i].exponent_expected == entries[i].exponent_expected);
    CHECK(back[i].nilpotency_class_expected == entries[i].nilpotency_class_expected);
  }

  std::istringstream bad1("entry x symmetric(3) order=abc exponent=6 class=-\n");
  CHECK_THROWS_AS(parse_manifest(bad1), ManifestParseError);
  std::istringstream bad2("item x symmetric(3) order=6 exponent=6 class=-\n");
  CHECK_THROWS_AS(parse_manifest(bad2), ManifestParseError);
}

TEST_CASE("constructor expression errors") {
  CHECK_THROWS(make_group("frobenius(3)"));
  CHECK_THROWS(make_group("symmetric(3"));
  CHECK_THROWS(make_group("unitriangular(3,7)"));
  CHECK_THROWS(make_group("direct_product(cyclic(3),unitriangular(3,2))"));
}
