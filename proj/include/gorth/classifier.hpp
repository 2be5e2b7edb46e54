#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/forms.hpp"
#include "gorth/invariants.hpp"
#include "gorth/labels.hpp"
#include "gorth/matrix.hpp"
#include "gorth/structures.hpp"

namespace gorth {

/// Characteristic polynomial det(xI - m), monic, highest degree first
/// (Faddeev-LeVerrier; exact over Q).
inline std::vector<Rat> characteristic_polynomial(const Mat& m) {
  require(m.is_square(), "characteristic_polynomial: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Rat> coeffs(n + 1);
  coeffs[0] = 1;
  Mat mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeffs[k - 1];
    coeffs[k] = -trace(m * mk) / Rat(static_cast<long>(k));
  }
  return coeffs;
}

namespace detail {

inline std::vector<TypeLabel> type_multiplicities(const PowerTower& nbar, const SymForm& gbar) {
  std::vector<TypeLabel> out;
  std::size_t total = 0;
  for (std::size_t k = 0; k + 1 < nbar.size(); ++k) {
    if (nbar.blocks_of_size(k) == 0) continue;
    UniformLayer layer = uniform_layer(nbar, gbar, k);
    if (k % 2 == 0) {
      Signature sig = layer.signature();
      for (std::size_t i = 0; i < sig.positives; ++i) out.push_back(TypeLabel::even(k, +1));
      for (std::size_t i = 0; i < sig.negatives; ++i) out.push_back(TypeLabel::even(k, -1));
    } else {
      ensure(layer.dim() % 2 == 0, "odd layer of odd dimension");
      for (std::size_t i = 0; i < layer.dim() / 2; ++i) out.push_back(TypeLabel::pair(k));
    }
  }
  for (const auto& t : out) total += t.dim();
  ensure(total == gbar.dim(), "type multiplicities do not add up to the dimension");
  sort_types(out);
  return out;
}

}  // namespace detail

/// Indecomposable summands of a nilpotent pair, read off the uniform layers:
/// even layers contribute one signed chain per positive/negative square,
/// odd layers one hyperbolic pair per two dimensions.
inline std::vector<TypeLabel> type_multiplicities(const Mat& nbar, const SymForm& gbar) {
  if (!nbar.is_square() || nbar.rows() != gbar.dim()) throw InputError("type_multiplicities: shape mismatch");
  return detail::type_multiplicities(PowerTower(nbar), gbar);
}

namespace detail {

struct NilpotentAnalysis {
  std::size_t s = 0;
  SpecialLabel special = Tau{};
  std::vector<TypeLabel> induced_types;  // types of the whole induced pair
};

inline NilpotentAnalysis analyze_nilpotent(const Triple& t) {
  NilpotentAnalysis a;
  a.s = detail::special_height(PowerTower(t.xi), t.v0);
  if (t.dim() == 1) return a;
  InducedData ind = detail::induced_pair(t);
  PowerTower tower(ind.nbar);
  if (a.s >= 1) {
    if (!tower.power(a.s).is_zero())
      throw Undecidable("a type summand is at least as tall as the special height " + std::to_string(a.s) +
                        "; such triples are outside the classified range");
    ConnectionClass cc = detail::connection_class(ind, tower, a.s);
    if ((a.s - 1) % 2 == 0 && !cc.self_pairing.is_zero())
      a.special = SingleChain{a.s, cc.self_pairing.sign(), cc.self_pairing.abs().inverse()};
    else
      a.special = DoubleChain{a.s};
  }
  a.induced_types = detail::type_multiplicities(tower, ind.gbar);
  return a;
}

inline void remove_one(std::vector<TypeLabel>& types, const TypeLabel& t) {
  auto it = std::find(types.begin(), types.end(), t);
  ensure(it != types.end(), "induced types lack the summand " + canonical_string(t) + " of the special type");
  types.erase(it);
}

}  // namespace detail

/// Types induced on V̄ by the special summand alone.
inline std::vector<TypeLabel> induced_by_special(const SpecialLabel& l) {
  if (auto* a = std::get_if<SingleChain>(&l)) return {TypeLabel::even(a->s - 1, a->eps)};
  if (auto* b = std::get_if<DoubleChain>(&l)) {
    std::size_t h = b->s - 1;
    if (h % 2 == 1) return {TypeLabel::pair(h)};
    return {TypeLabel::even(h, +1), TypeLabel::even(h, -1)};
  }
  return {};
}

inline SpecialLabel special_summand(const Triple& t) {
  auto v = validate_triple(t);
  require(v.ok, "special_summand: invalid triple (" + v.report() + ")");
  require(is_nilpotent(t.xi), "special_summand: xi is not nilpotent");
  return detail::analyze_nilpotent(t).special;
}

inline Classification classify(const Triple& t) {
  auto v = validate_triple(t);
  require(v.ok, "classify: invalid triple (" + v.report() + ")");
  FittingSplit split = detail::fitting_split(t);

  Classification c;
  if (split.nonzero.dim() > 0) {
    NonzeroPart u;
    u.dim = split.nonzero.dim();
    u.charpoly = characteristic_polynomial(split.nonzero.xi);
    Signature sig = signature(split.nonzero.form);
    u.positives = sig.positives;
    u.negatives = sig.negatives;
    c.nonzero = std::move(u);
  }

  auto a = detail::analyze_nilpotent(split.nilpotent);
  c.special = a.special;
  c.types = std::move(a.induced_types);
  for (const auto& t0 : induced_by_special(a.special)) detail::remove_one(c.types, t0);
  sort_types(c.types);

  ensure(c.dim() == t.dim(), "classification dimensions do not add up");
  if (a.s > 0)
    for (const auto& ty : c.types) ensure(ty.height() < a.s, "type summand not below the special height");
  return c;
}

/// Orbit equivalence of two nilpotent triples. Throws Undecidable when
/// either carries a nonzero-eigenvalue part.
inline bool equivalent(const Triple& t1, const Triple& t2) {
  Classification c1 = classify(t1);
  Classification c2 = classify(t2);
  if (c1.nonzero || c2.nonzero)
    throw Undecidable("equivalence with a nonzero-eigenvalue part is not decided");
  return c1 == c2;
}

}  // namespace gorth
