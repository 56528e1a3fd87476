// Standard test groups and the default verification corpus.
//
// Constructor expressions: symmetric(n), alternating(n), dihedral(order),
// quaternion(order), cyclic(n), unitriangular(n,m), and
// direct_product(expr,expr) with nesting. Canonical generators are documented
// at each constructor. Every corpus entry carries expected order, exponent
// and nilpotency class; build_entry recomputes all three and refuses to hand
// out a group that disagrees with its manifest line.
//
// Manifest format (text, one entry per line):
//   entry <name> <ctor> order=<N> exponent=<E> class=<c or - for not nilpotent>

#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilvar/finite_group.hpp"
#include "nilvar/group_io.hpp"

namespace nilvar {

// ---------------------------------------------------------------------------
// Constructors

// transposition (1 2) and the n-cycle (1 2 ... n)
inline FiniteGroup make_symmetric(int n) {
  if (n < 2 || n > 7) throw std::invalid_argument("symmetric: n must be in 2..7");
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
  return FiniteGroup::close({Element::cycle(n, {1, 2}), Element::cycle(n, cyc)});
}

// (1 2 3) and (1 2 ... n) for odd n, (2 3 ... n) for even n
inline FiniteGroup make_alternating(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("alternating: n must be in 3..7");
  std::vector<int> cyc;
  for (int i = (n % 2 == 1) ? 1 : 2; i <= n; ++i) cyc.push_back(i);
  return FiniteGroup::close({Element::cycle(n, {1, 2, 3}), Element::cycle(n, cyc)});
}

// rotation (1 ... n) and the reflection i -> n+1-i, order 2n
inline FiniteGroup make_dihedral(int order) {
  if (order < 6 || order % 2 != 0 || order / 2 > Element::kMaxPoints)
    throw std::invalid_argument("dihedral: order must be even and >= 6");
  int n = order / 2;
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
    refl[static_cast<std::size_t>(i)] = n - i;
  }
  return FiniteGroup::close({Element::permutation(rot), Element::permutation(refl)});
}

inline FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > Element::kMaxPoints) throw std::invalid_argument("cyclic: n out of range");
  if (n == 1) return FiniteGroup::close({Element::identity_permutation(1)});
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
  return FiniteGroup::close({Element::permutation(cyc)});
}

// generalized quaternion of order 2^k via the regular representation of the
// normal form a^i b^j (i < 2^{k-1}, j < 2) with b^2 = a^{2^{k-2}}, a^b = a^-1
inline FiniteGroup make_quaternion(int order) {
  if (order != 8 && order != 16 && order != 32)
    throw std::invalid_argument("quaternion: order must be 8, 16 or 32");
  int half = order / 2;
  auto mul = [&](std::pair<int, int> u, std::pair<int, int> v) {
    auto [i1, j1] = u;
    auto [i2, j2] = v;
    if (j1 == 0) return std::make_pair((i1 + i2) % half, j2);
    int i = ((i1 - i2) % half + half) % half;
    if (j2 == 0) return std::make_pair(i, 1);
    return std::make_pair((i + half / 2) % half, 0);
  };
  auto slot = [&](std::pair<int, int> u) { return u.first * 2 + u.second + 1; };  // 1-based
  auto right_mult_perm = [&](std::pair<int, int> g) {
    std::vector<int> images(static_cast<std::size_t>(order));
    for (int i = 0; i < half; ++i)
      for (int j = 0; j < 2; ++j)
        images[static_cast<std::size_t>(slot({i, j}) - 1)] = slot(mul({i, j}, g));
    return Element::permutation(images);
  };
  return FiniteGroup::close({right_mult_perm({1, 0}), right_mult_perm({0, 1})});
}

// superdiagonal elementary matrices e_{i,i+1}
inline FiniteGroup make_unitriangular(int n, int m) {
  if (n < 2 || n > 6) throw std::invalid_argument("unitriangular: n must be in 2..6");
  if (m != 2 && m != 3 && m != 4 && m != 5 && m != 8 && m != 9)
    throw std::invalid_argument("unitriangular: m must be one of 2,3,4,5,8,9");
  std::vector<Element> gens;
  for (int i = 1; i < n; ++i) gens.push_back(Element::elementary(n, m, i, i + 1));
  std::size_t cap = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) cap *= static_cast<std::size_t>(m);
  return FiniteGroup::close(gens, cap + 1);
}

// disjoint points for permutation pairs, block diagonal for matrix pairs over
// one modulus
inline FiniteGroup make_direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const Element& a0 = A.element(0);
  const Element& b0 = B.element(0);
  std::vector<Element> gens;
  if (a0.kind() == ElementKind::permutation && b0.kind() == ElementKind::permutation) {
    int da = a0.degree(), db = b0.degree();
    if (da + db > Element::kMaxPoints)
      throw std::invalid_argument("direct_product: combined degree too large");
    auto embed = [&](const Element& e, bool first) {
      std::vector<int> images(static_cast<std::size_t>(da + db));
      for (int i = 0; i < da; ++i)
        images[static_cast<std::size_t>(i)] = first ? e.perm_image(i) + 1 : i + 1;
      for (int i = 0; i < db; ++i)
        images[static_cast<std::size_t>(da + i)] = first ? da + i + 1 : da + e.perm_image(i) + 1;
      return Element::permutation(images);
    };
    for (std::uint32_t g : A.generator_indices()) gens.push_back(embed(A.element(g), true));
    for (std::uint32_t g : B.generator_indices()) gens.push_back(embed(B.element(g), false));
  } else if (a0.kind() == ElementKind::unitriangular && b0.kind() == ElementKind::unitriangular &&
             a0.modulus() == b0.modulus()) {
    int na = a0.degree(), nb = b0.degree(), n = na + nb, m = a0.modulus();
    if (n > Element::kMaxDim)
      throw std::invalid_argument("direct_product: combined dimension too large");
    auto embed = [&](const Element& e, bool first) {
      std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
      for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i * n + i)] = 1;
      int d = first ? na : nb, off = first ? 0 : na;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          entries[static_cast<std::size_t>((i + off) * n + (j + off))] = e.matrix_entry(i, j);
      return Element::unitriangular(n, m, entries);
    };
    for (std::uint32_t g : A.generator_indices()) gens.push_back(embed(A.element(g), true));
    for (std::uint32_t g : B.generator_indices()) gens.push_back(embed(B.element(g), false));
  } else {
    throw std::invalid_argument("direct_product: carriers must match (perm/perm or matrix/matrix over one modulus)");
  }
  return FiniteGroup::close(gens, A.order() * B.order() + 1);
}

// ---------------------------------------------------------------------------
// Constructor expressions

namespace detail {

struct CtorParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("constructor '" + std::string(text) + "': " + msg);
  }
  void expect(char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected name");
    return std::string(text.substr(start, pos - start));
  }
  int number() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  FiniteGroup parse() {
    FiniteGroup g = parse_expr();
    if (pos != text.size()) fail("trailing input");
    return g;
  }

  FiniteGroup parse_expr() {
    std::string name = ident();
    expect('(');
    if (name == "direct_product") {
      FiniteGroup a = parse_expr();
      expect(',');
      FiniteGroup b = parse_expr();
      expect(')');
      return make_direct_product(a, b);
    }
    int p1 = number();
    if (name == "unitriangular") {
      expect(',');
      int p2 = number();
      expect(')');
      return make_unitriangular(p1, p2);
    }
    expect(')');
    if (name == "symmetric") return make_symmetric(p1);
    if (name == "alternating") return make_alternating(p1);
    if (name == "dihedral") return make_dihedral(p1);
    if (name == "quaternion") return make_quaternion(p1);
    if (name == "cyclic") return make_cyclic(p1);
    fail("unknown constructor '" + name + "'");
  }
};

}  // namespace detail

inline FiniteGroup make_group(const std::string& ctor_expr) {
  detail::CtorParser p{ctor_expr};
  return p.parse();
}

// ---------------------------------------------------------------------------
// Corpus entries

struct CorpusEntry {
  std::string name;
  std::string ctor;
  long long order = 0;
  long long exponent_expected = 0;
  std::optional<int> nilpotency_class_expected;  // nullopt = not nilpotent
};

struct CorpusMetadataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// construct and verify the expected metadata exactly
inline FiniteGroup build_entry(const CorpusEntry& e) {
  FiniteGroup G = make_group(e.ctor);
  if (static_cast<long long>(G.order()) != e.order)
    throw CorpusMetadataError("corpus entry " + e.name + ": order is " +
                              std::to_string(G.order()) + ", manifest says " +
                              std::to_string(e.order));
  long long exp = static_cast<long long>(exponent(G));
  if (exp != e.exponent_expected)
    throw CorpusMetadataError("corpus entry " + e.name + ": exponent is " + std::to_string(exp) +
                              ", manifest says " + std::to_string(e.exponent_expected));
  std::optional<int> cls = nilpotency_class(G);
  if (cls != e.nilpotency_class_expected)
    throw CorpusMetadataError("corpus entry " + e.name + ": nilpotency class mismatch");
  return G;
}

inline std::vector<CorpusEntry> default_corpus() {
  auto nil = [](int c) { return std::optional<int>(c); };
  std::optional<int> no;
  return {
      {"sym3", "symmetric(3)", 6, 6, no},
      {"sym4", "symmetric(4)", 24, 12, no},
      {"sym5", "symmetric(5)", 120, 60, no},
      {"alt4", "alternating(4)", 12, 6, no},
      {"alt5", "alternating(5)", 60, 30, no},
      {"dihedral8", "dihedral(8)", 8, 4, nil(2)},
      {"dihedral12", "dihedral(12)", 12, 6, no},
      {"dihedral16", "dihedral(16)", 16, 8, nil(3)},
      {"dihedral32", "dihedral(32)", 32, 16, nil(4)},
      {"quaternion8", "quaternion(8)", 8, 4, nil(2)},
      {"quaternion16", "quaternion(16)", 16, 8, nil(3)},
      {"quaternion32", "quaternion(32)", 32, 16, nil(4)},
      {"cyclic3", "cyclic(3)", 3, 3, nil(1)},
      {"cyclic8", "cyclic(8)", 8, 8, nil(1)},
      {"cyclic9", "cyclic(9)", 9, 9, nil(1)},
      {"ut_3_2", "unitriangular(3,2)", 8, 4, nil(2)},
      {"ut_3_3", "unitriangular(3,3)", 27, 3, nil(2)},
      {"ut_3_5", "unitriangular(3,5)", 125, 5, nil(2)},
      {"ut_4_2", "unitriangular(4,2)", 64, 4, nil(3)},
      {"ut_4_3", "unitriangular(4,3)", 729, 9, nil(3)},
      {"ut_6_2", "unitriangular(6,2)", 32768, 8, nil(5)},
      {"d8xc3", "direct_product(dihedral(8),cyclic(3))", 24, 12, nil(2)},
      {"q8xc9", "direct_product(quaternion(8),cyclic(9))", 72, 36, nil(2)},
  };
}

// ---------------------------------------------------------------------------
// Manifest files

struct ManifestParseError : std::runtime_error {
  int line;
  ManifestParseError(const std::string& msg, int ln)
      : std::runtime_error("manifest: " + msg + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

inline std::string manifest_to_text(const std::vector<CorpusEntry>& entries) {
  std::ostringstream os;
  os << "# nilvar corpus manifest\n";
  for (const CorpusEntry& e : entries) {
    os << "entry " << e.name << " " << e.ctor << " order=" << e.order
       << " exponent=" << e.exponent_expected << " class=";
    if (e.nilpotency_class_expected)
      os << *e.nilpotency_class_expected;
    else
      os << "-";
    os << "\n";
  }
  return os.str();
}

inline std::vector<CorpusEntry> parse_manifest(std::istream& is) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "entry") throw ManifestParseError("expected 'entry'", lineno);
    CorpusEntry e;
    std::string orderf, expf, classf;
    if (!(ls >> e.name >> e.ctor >> orderf >> expf >> classf))
      throw ManifestParseError("truncated entry", lineno);
    auto field = [&](const std::string& s, const std::string& key) {
      if (s.rfind(key + "=", 0) != 0) throw ManifestParseError("expected " + key + "=...", lineno);
      return s.substr(key.size() + 1);
    };
    try {
      e.order = std::stoll(field(orderf, "order"));
      e.exponent_expected = std::stoll(field(expf, "exponent"));
      std::string c = field(classf, "class");
      if (c != "-") e.nilpotency_class_expected = std::stoi(c);
    } catch (const ManifestParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ManifestParseError("bad numeric field", lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<CorpusEntry> load_manifest_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return parse_manifest(is);
}

}  // namespace nilvar
