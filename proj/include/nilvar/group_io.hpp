// Group file format (text, one group per file):
//
//   perm <degree>
//   gen <img_1> ... <img_degree>          one line per generator, 1-based images
//
//   unitriangular <n> mod <m>
//   gen <n*n row-major entries>
//
// Lines starting with '#' and blank lines are ignored. Saving writes the
// canonical form above; load(save(G)) reproduces the generator list and hence
// the breadth-first element order bit-exactly.

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilvar/finite_group.hpp"

namespace nilvar {

struct GroupParseError : std::runtime_error {
  int line;
  GroupParseError(const std::string& msg, int ln)
      : std::runtime_error("group file: " + msg + " (line " + std::to_string(ln) + ")"),
        line(ln) {}
};

inline void save_group(const FiniteGroup& G, std::ostream& os) {
  const Element& proto = G.element(0);
  if (proto.kind() == ElementKind::permutation)
    os << "perm " << proto.degree() << "\n";
  else
    os << "unitriangular " << proto.degree() << " mod " << proto.modulus() << "\n";
  for (std::uint32_t g : G.generator_indices()) os << "gen " << G.element(g).to_string() << "\n";
}

inline std::string group_to_text(const FiniteGroup& G) {
  std::ostringstream os;
  save_group(G, os);
  return os.str();
}

inline void save_group_file(const FiniteGroup& G, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  save_group(G, os);
}

inline FiniteGroup load_group(std::istream& is,
                              std::size_t cap = FiniteGroup::kDefaultCap,
                              std::uint32_t table_threshold = FiniteGroup::kDefaultTableThreshold) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(is, line)) {
      ++lineno;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw GroupParseError("missing header", lineno);
  std::istringstream hs(header);
  std::string kind;
  hs >> kind;

  bool perm = kind == "perm";
  int degree = 0, mod = 0;
  if (perm) {
    if (!(hs >> degree)) throw GroupParseError("bad perm header", lineno);
  } else if (kind == "unitriangular") {
    std::string modword;
    if (!(hs >> degree >> modword >> mod) || modword != "mod")
      throw GroupParseError("bad unitriangular header", lineno);
  } else {
    throw GroupParseError("unknown kind '" + kind + "'", lineno);
  }

  std::vector<Element> gens;
  std::string body;
  while (next_line(body)) {
    std::istringstream bs(body);
    std::string tag;
    bs >> tag;
    if (tag != "gen") throw GroupParseError("expected 'gen' line", lineno);
    std::vector<int> values;
    int v;
    while (bs >> v) values.push_back(v);
    if (!bs.eof()) throw GroupParseError("non-numeric generator entry", lineno);
    try {
      gens.push_back(perm ? (static_cast<int>(values.size()) == degree
                                 ? Element::permutation(values)
                                 : throw std::invalid_argument("wrong image count"))
                          : Element::unitriangular(degree, mod, values));
    } catch (const std::invalid_argument& e) {
      throw GroupParseError(e.what(), lineno);
    }
  }
  if (gens.empty()) throw GroupParseError("no generators", lineno);
  return FiniteGroup::close(gens, cap, table_threshold);
}

inline FiniteGroup load_group_file(const std::string& path,
                                   std::size_t cap = FiniteGroup::kDefaultCap,
                                   std::uint32_t table_threshold =
                                       FiniteGroup::kDefaultTableThreshold) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return load_group(is, cap, table_threshold);
}

}  // namespace nilvar
