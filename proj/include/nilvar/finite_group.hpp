// Fully enumerated finite groups and the subgroup algebra on top of them.
//
// A group is closed breadth-first from its generators (right multiplication,
// generator order as given), identity at index 0; all subgroup machinery then
// runs on element indices. A multiplication table is cached for orders up to
// the table threshold; above it products fall back to element arithmetic plus
// a hash lookup.
//
// SubgroupHandle is a sorted index set plus a small witness generating set.
// Commutator subgroups use the standard reduction: [A,B] is the normal
// closure, in <A,B>, of the commutators of the witness generators.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilvar/group_element.hpp"
#include "nilvar/words.hpp"

namespace nilvar {

struct OrderCapExceeded : std::runtime_error {
  std::size_t partial_count;
  explicit OrderCapExceeded(std::size_t n)
      : std::runtime_error("group order exceeds cap; elements enumerated so far: " +
                           std::to_string(n)),
        partial_count(n) {}
};

class FiniteGroup {
public:
  static constexpr std::uint32_t kDefaultTableThreshold = 8192;
  static constexpr std::size_t kDefaultCap = 2000000;

  FiniteGroup(FiniteGroup&& o) noexcept
      : elems_(std::move(o.elems_)),
        index_(std::move(o.index_)),
        gen_idx_(std::move(o.gen_idx_)),
        inv_(std::move(o.inv_)),
        table_(std::move(o.table_)),
        class_reps_(std::move(o.class_reps_)),
        class_of_(std::move(o.class_of_)) {}
  FiniteGroup& operator=(FiniteGroup&& o) noexcept {
    elems_ = std::move(o.elems_);
    index_ = std::move(o.index_);
    gen_idx_ = std::move(o.gen_idx_);
    inv_ = std::move(o.inv_);
    table_ = std::move(o.table_);
    class_reps_ = std::move(o.class_reps_);
    class_of_ = std::move(o.class_of_);
    return *this;
  }
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  static FiniteGroup close(const std::vector<Element>& generators,
                           std::size_t cap = kDefaultCap,
                           std::uint32_t table_threshold = kDefaultTableThreshold) {
    if (generators.empty()) throw std::invalid_argument("close: need at least one generator");
    for (const Element& g : generators)
      if (!g.same_carrier(generators.front()))
        throw std::invalid_argument("close: generators have mixed carriers");
    FiniteGroup G;
    Element id = generators.front().kind() == ElementKind::permutation
                     ? Element::identity_permutation(generators.front().degree())
                     : Element::identity_unitriangular(generators.front().degree(),
                                                       generators.front().modulus());
    G.elems_.push_back(id);
    G.index_.emplace(id, 0);
    for (std::size_t at = 0; at < G.elems_.size(); ++at) {
      Element cur = G.elems_[at];
      for (const Element& g : generators) {
        Element next = cur * g;
        if (G.index_.emplace(next, static_cast<std::uint32_t>(G.elems_.size())).second) {
          G.elems_.push_back(next);
          if (G.elems_.size() > cap) throw OrderCapExceeded(G.elems_.size());
        }
      }
    }
    for (const Element& g : generators) G.gen_idx_.push_back(G.index_.at(g));
    G.finish(table_threshold);
    return G;
  }

  std::size_t order() const { return elems_.size(); }
  const Element& element(std::uint32_t i) const { return elems_[i]; }
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }
  bool has_table() const { return !table_.empty(); }

  std::optional<std::uint32_t> find(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::uint32_t index_of(const Element& e) const {
    auto i = find(e);
    if (!i) throw std::invalid_argument("element does not belong to the group");
    return *i;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[a * elems_.size() + b];
    return index_.at(elems_[a] * elems_[b]);
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const {
    return mul(mul(inv_[g], x), g);
  }
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(mul(inv_[a], inv_[b]), a), b);
  }
  std::uint32_t power(std::uint32_t a, long long e) const {
    if (e < 0) {
      a = inv_[a];
      e = -e;
    }
    std::uint32_t r = 0, base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return r;
  }
  std::uint64_t element_order(std::uint32_t a) const {
    std::uint64_t n = 1;
    std::uint32_t cur = a;
    while (cur != 0) {
      cur = mul(cur, a);
      ++n;
    }
    return n;
  }

  // conjugation orbits; computed on first use, reps are minimal indices
  const std::vector<std::uint32_t>& conjugacy_class_reps() const {
    std::lock_guard<std::mutex> lock(class_mutex_);
    if (class_reps_.empty()) compute_classes();
    return class_reps_;
  }
  const std::vector<std::uint32_t>& class_index() const {
    std::lock_guard<std::mutex> lock(class_mutex_);
    if (class_reps_.empty()) compute_classes();
    return class_of_;
  }

private:
  FiniteGroup() = default;

  void finish(std::uint32_t table_threshold) {
    inv_.resize(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i)
      inv_[i] = index_.at(elems_[i].inverse());
    if (elems_.size() <= table_threshold && elems_.size() <= 65535) {
      table_.resize(elems_.size() * elems_.size());
      for (std::size_t i = 0; i < elems_.size(); ++i)
        for (std::size_t j = 0; j < elems_.size(); ++j)
          table_[i * elems_.size() + j] =
              static_cast<std::uint16_t>(index_.at(elems_[i] * elems_[j]));
    }
  }

  void compute_classes() const {
    std::size_t n = elems_.size();
    class_of_.assign(n, 0xffffffffu);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (class_of_[i] != 0xffffffffu) continue;
      std::uint32_t cls = static_cast<std::uint32_t>(class_reps_.size());
      class_reps_.push_back(i);
      std::vector<std::uint32_t> stack{i};
      class_of_[i] = cls;
      while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        for (std::uint32_t g : gen_idx_) {
          std::uint32_t y = conj(x, g);
          if (class_of_[y] == 0xffffffffu) {
            class_of_[y] = cls;
            stack.push_back(y);
          }
        }
      }
    }
  }

  std::vector<Element> elems_;
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint16_t> table_;

  mutable std::mutex class_mutex_;
  mutable std::vector<std::uint32_t> class_reps_;
  mutable std::vector<std::uint32_t> class_of_;
};

// ---------------------------------------------------------------------------
// SubgroupHandle

struct SubgroupHandle {
  std::vector<std::uint32_t> elements;  // sorted, contains 0
  std::vector<std::uint32_t> witness;   // small generating set, no identity

  std::size_t size() const { return elements.size(); }
  bool contains(std::uint32_t i) const {
    return std::binary_search(elements.begin(), elements.end(), i);
  }
  bool is_trivial() const { return elements.size() == 1; }
  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.elements == b.elements;
  }
};

namespace detail {

// BFS closure of a generator list, as a sorted index set
inline std::vector<std::uint32_t> closure_indices(const FiniteGroup& G,
                                                  const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint8_t> seen(G.order(), 0);
  std::vector<std::uint32_t> out{0};
  seen[0] = 1;
  for (std::size_t at = 0; at < out.size(); ++at)
    for (std::uint32_t g : gens) {
      std::uint32_t y = G.mul(out[at], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// greedy generator reduction: keep only generators that grow the closure
inline std::vector<std::uint32_t> reduce_generators(const FiniteGroup& G,
                                                    const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> kept;
  std::vector<std::uint32_t> closed{0};
  for (std::uint32_t g : gens) {
    if (g == 0 || std::binary_search(closed.begin(), closed.end(), g)) continue;
    kept.push_back(g);
    closed = closure_indices(G, kept);
  }
  return kept;
}

}  // namespace detail

inline SubgroupHandle subgroup(const FiniteGroup& G, const std::vector<std::uint32_t>& elems) {
  for (std::uint32_t i : elems)
    if (i >= G.order()) throw std::invalid_argument("subgroup: element index out of range");
  SubgroupHandle h;
  h.witness = detail::reduce_generators(G, elems);
  h.elements = detail::closure_indices(G, h.witness);
  return h;
}

inline SubgroupHandle whole_group(const FiniteGroup& G) {
  SubgroupHandle h;
  h.elements.resize(G.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  h.witness = detail::reduce_generators(G, G.generator_indices());
  return h;
}

inline SubgroupHandle trivial_subgroup(const FiniteGroup&) {
  SubgroupHandle h;
  h.elements = {0};
  return h;
}

// smallest subgroup containing `seeds` and closed under conjugation by the
// elements of `conjugators` (and everything they generate)
inline SubgroupHandle normal_closure_under(const FiniteGroup& G,
                                           const std::vector<std::uint32_t>& seeds,
                                           const std::vector<std::uint32_t>& conjugators) {
  SubgroupHandle h = subgroup(G, seeds);
  std::vector<std::uint8_t> member(G.order(), 0);
  for (std::uint32_t i : h.elements) member[i] = 1;
  std::vector<std::uint32_t> work = h.elements;  // conjugate-check frontier
  for (std::size_t at = 0; at < work.size(); ++at) {
    for (std::uint32_t g : conjugators) {
      std::uint32_t c = G.conj(work[at], g);
      if (member[c]) continue;
      // extend the subgroup by the new conjugate
      h.witness.push_back(c);
      std::vector<std::uint32_t> grown = detail::closure_indices(G, h.witness);
      for (std::uint32_t e : grown)
        if (!member[e]) {
          member[e] = 1;
          work.push_back(e);
        }
      h.elements = std::move(grown);
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

inline SubgroupHandle normal_closure(const FiniteGroup& G,
                                     const std::vector<std::uint32_t>& elems) {
  for (std::uint32_t i : elems)
    if (i >= G.order()) throw std::invalid_argument("normal_closure: element index out of range");
  return normal_closure_under(G, elems, G.generator_indices());
}

// subgroup generated by all [a,b], a in A, b in B
inline SubgroupHandle commutator_subgroup(const FiniteGroup& G, const SubgroupHandle& A,
                                          const SubgroupHandle& B) {
  std::vector<std::uint32_t> seeds;
  for (std::uint32_t a : A.witness)
    for (std::uint32_t b : B.witness) seeds.push_back(G.commutator(a, b));
  std::vector<std::uint32_t> conjugators = A.witness;
  conjugators.insert(conjugators.end(), B.witness.begin(), B.witness.end());
  SubgroupHandle h = normal_closure_under(G, detail::reduce_generators(G, seeds), conjugators);
  h.witness = detail::reduce_generators(G, h.witness);
  return h;
}

// ---------------------------------------------------------------------------
// Lower central series, nilpotency, Fitting subgroup

// series of H inside G: gamma_1 = H, gamma_{i+1} = [gamma_i, H], until stable
inline std::vector<SubgroupHandle> lower_central_series_of(const FiniteGroup& G,
                                                           const SubgroupHandle& H) {
  std::vector<SubgroupHandle> series{H};
  while (true) {
    SubgroupHandle next = commutator_subgroup(G, series.back(), H);
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

inline std::vector<SubgroupHandle> lower_central_series(const FiniteGroup& G) {
  return lower_central_series_of(G, whole_group(G));
}

// nilpotency class, or nullopt when the series stabilizes above the identity
inline std::optional<int> nilpotency_class_of(const FiniteGroup& G, const SubgroupHandle& H) {
  auto series = lower_central_series_of(G, H);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

inline std::optional<int> nilpotency_class(const FiniteGroup& G) {
  return nilpotency_class_of(G, whole_group(G));
}

// Fitting subgroup: the elements whose normal closure is nilpotent form
// exactly the largest nilpotent normal subgroup
inline SubgroupHandle fitting(const FiniteGroup& G) {
  if (nilpotency_class(G)) return whole_group(G);
  const auto& reps = G.conjugacy_class_reps();
  const auto& cls = G.class_index();
  std::vector<std::uint8_t> qualifying_class(reps.size(), 0);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    SubgroupHandle ncl = normal_closure(G, {reps[c]});
    if (nilpotency_class_of(G, ncl)) qualifying_class[c] = 1;
  }
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < G.order(); ++i)
    if (qualifying_class[cls[i]]) members.push_back(i);
  return subgroup(G, members);
}

// ---------------------------------------------------------------------------
// Quotient group (regular representation on right cosets)

inline bool is_normal(const FiniteGroup& G, const SubgroupHandle& N) {
  for (std::uint32_t n : N.elements)
    for (std::uint32_t g : G.generator_indices())
      if (!N.contains(G.conj(n, g))) return false;
  return true;
}

// Cosets are ordered by minimal member index; generator images act by right
// multiplication. The result is a permutation group isomorphic to G/N.
inline FiniteGroup quotient(const FiniteGroup& G, const SubgroupHandle& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient: subgroup is not normal");
  std::size_t n = G.order();
  std::vector<std::uint32_t> coset(n, 0xffffffffu);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset[i] != 0xffffffffu) continue;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (std::uint32_t x : N.elements) coset[G.mul(x, i)] = c;
  }
  if (reps.size() > Element::kMaxPoints)
    throw std::invalid_argument("quotient: index exceeds the permutation carrier limit (" +
                                std::to_string(Element::kMaxPoints) + " cosets)");
  std::vector<Element> gens;
  for (std::uint32_t g : G.generator_indices()) {
    std::vector<int> images(reps.size());
    for (std::size_t s = 0; s < reps.size(); ++s)
      images[s] = static_cast<int>(coset[G.mul(reps[s], g)]) + 1;
    gens.push_back(Element::permutation(images));
  }
  FiniteGroup Q = FiniteGroup::close(gens);
  if (Q.order() * N.size() != G.order())
    throw std::logic_error("quotient: order mismatch");  // cannot happen for normal N
  return Q;
}

// iterations of G <- G / fitting(G) until trivial; nullopt when some iterate
// is nontrivial with trivial Fitting subgroup
inline std::optional<int> fitting_height(const FiniteGroup& G) {
  std::optional<FiniteGroup> storage;
  const FiniteGroup* cur = &G;
  int h = 0;
  while (cur->order() > 1) {
    SubgroupHandle f = fitting(*cur);
    if (f.is_trivial()) return std::nullopt;
    storage = quotient(*cur, f);
    cur = &*storage;
    ++h;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Exponent, power subgroups, powerfulness

inline std::uint64_t exponent(const FiniteGroup& G) {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < G.order(); ++i)
    e = std::lcm(e, G.element_order(i));
  return e;
}

inline SubgroupHandle power_subgroup(const FiniteGroup& G, long long m) {
  if (m < 1) throw std::invalid_argument("power_subgroup: m must be >= 1");
  std::vector<std::uint32_t> powers;
  for (std::uint32_t i = 0; i < G.order(); ++i) powers.push_back(G.power(i, m));
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return subgroup(G, powers);
}

inline bool is_prime_power_of(std::uint64_t order, std::uint64_t p) {
  if (order == 0) return false;
  while (order % p == 0) order /= p;
  return order == 1;
}

// [G,G] <= G^p for odd p, [G,G] <= G^4 for p = 2
inline bool is_powerful(const FiniteGroup& G, long long p) {
  if (!is_prime_power_of(G.order(), static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("is_powerful: group is not a p-group for the given p");
  SubgroupHandle whole = whole_group(G);
  SubgroupHandle derived = commutator_subgroup(G, whole, whole);
  SubgroupHandle target = power_subgroup(G, p == 2 ? 4 : p);
  for (std::uint32_t d : derived.elements)
    if (!target.contains(d)) return false;
  return true;
}

}  // namespace nilvar
