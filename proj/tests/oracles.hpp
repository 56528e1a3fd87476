// Test-only oracles, kept independent of the implementation paths they check.

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "nilvar/finite_group.hpp"

namespace nilvar::oracles {

// all-pairs commutator subgroup: closure of { [a,b] : a in A, b in B }
inline SubgroupHandle commutator_subgroup_brute(const FiniteGroup& G, const SubgroupHandle& A,
                                                const SubgroupHandle& B) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a : A.elements)
    for (std::uint32_t b : B.elements) gens.push_back(G.commutator(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup(G, gens);
}

// the full normal-subgroup lattice, generated by the principal normal
// closures { <x^G> : x in G } closed under pairwise join
inline std::vector<SubgroupHandle> normal_lattice(const FiniteGroup& G) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SubgroupHandle> lattice;
  auto add = [&](SubgroupHandle h) {
    if (seen.insert(h.elements).second) lattice.push_back(std::move(h));
  };
  add(trivial_subgroup(G));
  for (std::uint32_t x = 0; x < G.order(); ++x) add(normal_closure(G, {x}));
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::uint32_t> joint = lattice[i].elements;
      joint.insert(joint.end(), lattice[j].elements.begin(), lattice[j].elements.end());
      add(subgroup(G, joint));
    }
  return lattice;
}

// maximum nilpotent member of the lattice; also checks it contains every
// nilpotent member (so the maximum is unique)
inline SubgroupHandle fitting_brute(const FiniteGroup& G) {
  std::vector<SubgroupHandle> nilpotent_members;
  for (SubgroupHandle& h : normal_lattice(G))
    if (nilpotency_class_of(G, h)) nilpotent_members.push_back(std::move(h));
  SubgroupHandle* best = &nilpotent_members.front();
  for (SubgroupHandle& h : nilpotent_members)
    if (h.size() > best->size()) best = &h;
  for (const SubgroupHandle& h : nilpotent_members)
    for (std::uint32_t e : h.elements)
      if (!best->contains(e)) throw std::logic_error("fitting_brute: maximum is not unique");
  return *best;
}

}  // namespace nilvar::oracles
