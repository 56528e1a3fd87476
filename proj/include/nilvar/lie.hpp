// Free Lie ring over the integers in a Hall basis, built lazily.
//
// Basis elements are interned nodes; bracketing two basis elements rewrites
// into the basis with the Jacobi identity ([[a1,a2],b] = [[a1,b],a2] +
// [a1,[a2,b]] when a2 > b). The Hall order and basic condition match the ones
// in words.hpp.
//
// The point of the engine: the minimal-degree homogeneous component of the
// Magnus image of a commutator [u,v] equals the Lie bracket of the components
// of u and v whenever that bracket is nonzero, and powers scale the component
// by the exponent. So a bottom-up pass over a commutator expression either
// certifies the exact lower-central weight together with its leading Lie term,
// or reports that a bracket vanished and the series route must decide.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilvar/bigint.hpp"
#include "nilvar/words.hpp"

namespace nilvar {

class LieEngine {
public:
  using Combo = std::map<int, BigInt>;  // basis id -> nonzero coefficient

  struct Leading {
    long long weight = 0;
    Combo combo;
  };

  int var_basis(int v) {
    if (v < 1) throw std::invalid_argument("LieEngine: variable index must be >= 1");
    auto it = var_index_.find(v);
    if (it != var_index_.end()) return it->second;
    int id = static_cast<int>(pool_.size());
    pool_.push_back({v, -1, -1, 1});
    var_index_.emplace(v, id);
    return id;
  }

  bool is_var(int id) const { return pool_[static_cast<std::size_t>(id)].var > 0; }
  long long weight_of(int id) const { return pool_[static_cast<std::size_t>(id)].weight; }

  // Hall order: weight, then variable index, then (left, right) lexicographic.
  int cmp(int a, int b) const {
    if (a == b) return 0;
    const Elt& ea = pool_[static_cast<std::size_t>(a)];
    const Elt& eb = pool_[static_cast<std::size_t>(b)];
    if (ea.weight != eb.weight) return ea.weight < eb.weight ? -1 : 1;
    if (ea.var > 0) return ea.var < eb.var ? -1 : 1;
    int c = cmp(ea.left, eb.left);
    if (c != 0) return c;
    return cmp(ea.right, eb.right);
  }

  // normalized bracket of two basis elements
  const Combo& bracket_basis(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = bracket_memo_.find(key);
    if (it != bracket_memo_.end()) return it->second;
    Combo result;
    int c = cmp(a, b);
    if (c == 0) {
      // zero
    } else if (c < 0) {
      const Combo& flipped = bracket_basis(b, a);
      for (const auto& [id, coeff] : flipped) result.emplace(id, -coeff);
    } else if (is_var(a) || cmp(pool_[static_cast<std::size_t>(a)].right, b) <= 0) {
      result.emplace(intern_comm(a, b), BigInt(1));
    } else {
      // a = [a1,a2] with a2 > b: Jacobi rewrite
      int a1 = pool_[static_cast<std::size_t>(a)].left;
      int a2 = pool_[static_cast<std::size_t>(a)].right;
      Combo a1b = bracket_basis(a1, b);  // copy-free use below via add_bracket
      add_bracket(result, a1b, single(a2), BigInt(1));
      add_bracket(result, single(a1), bracket_basis(a2, b), BigInt(1));
    }
    return bracket_memo_.emplace(key, std::move(result)).first->second;
  }

  Combo bracket(const Combo& x, const Combo& y) {
    Combo r;
    add_bracket(r, x, y, BigInt(1));
    return r;
  }

  // exact leading term of the Magnus image of expr, when certifiable
  std::optional<Leading> leading_term(const CommutatorExpr& expr) {
    std::unordered_map<const CommutatorExpr::Node*, std::optional<Leading>> memo;
    return leading_term_rec(expr, memo);
  }

  CommutatorExpr basis_to_expr(int id) const {
    const Elt& e = pool_[static_cast<std::size_t>(id)];
    if (e.var > 0) return CommutatorExpr::variable(e.var);
    return CommutatorExpr::commutator(basis_to_expr(e.left), basis_to_expr(e.right));
  }

  std::string combo_to_string(const Combo& c) const {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, coeff] : c) {
      std::string mag = (coeff.sign() < 0 ? (-coeff) : coeff).to_string();
      if (first) {
        if (coeff.sign() < 0) out += "-";
        first = false;
      } else {
        out += coeff.sign() < 0 ? " - " : " + ";
      }
      if (mag != "1") out += mag + "*";
      out += basis_to_expr(id).to_string();
    }
    return out;
  }

private:
  struct Elt {
    int var;          // > 0 for variables, else -1
    int left, right;  // children for commutators
    long long weight;
  };

  std::vector<Elt> pool_;
  std::map<int, int> var_index_;
  std::map<std::pair<int, int>, int> comm_index_;
  std::map<std::pair<int, int>, Combo> bracket_memo_;

  static Combo single(int id) {
    Combo c;
    c.emplace(id, BigInt(1));
    return c;
  }

  int intern_comm(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = comm_index_.find(key);
    if (it != comm_index_.end()) return it->second;
    int id = static_cast<int>(pool_.size());
    pool_.push_back({-1, a, b,
                     pool_[static_cast<std::size_t>(a)].weight +
                         pool_[static_cast<std::size_t>(b)].weight});
    comm_index_.emplace(key, id);
    return id;
  }

  void add_scaled(Combo& target, const Combo& src, const BigInt& scale) {
    if (scale.is_zero()) return;
    for (const auto& [id, coeff] : src) {
      auto [it, inserted] = target.emplace(id, coeff * scale);
      if (!inserted) {
        it->second += coeff * scale;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  }

  void add_bracket(Combo& target, const Combo& x, const Combo& y, const BigInt& scale) {
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) add_scaled(target, bracket_basis(a, b), ca * cb * scale);
  }

  std::optional<Leading> leading_term_rec(
      const CommutatorExpr& expr,
      std::unordered_map<const CommutatorExpr::Node*, std::optional<Leading>>& memo) {
    auto it = memo.find(expr.raw());
    if (it != memo.end()) return it->second;
    std::optional<Leading> result;
    switch (expr.kind()) {
      case ExprKind::variable:
        result = Leading{1, single(var_basis(expr.var_index()))};
        break;
      case ExprKind::power: {
        auto b = leading_term_rec(expr.base(), memo);
        if (b) {
          Leading l{b->weight, {}};
          add_scaled(l.combo, b->combo, BigInt(expr.exponent()));
          result = std::move(l);  // exponent != 0, so never vanishes
        }
        break;
      }
      case ExprKind::commutator: {
        auto lu = leading_term_rec(expr.left(), memo);
        auto lv = leading_term_rec(expr.right(), memo);
        if (lu && lv) {
          Combo br = bracket(lu->combo, lv->combo);
          if (!br.empty()) result = Leading{lu->weight + lv->weight, std::move(br)};
        }
        break;
      }
    }
    memo.emplace(expr.raw(), result);
    return result;
  }
};

}  // namespace nilvar
