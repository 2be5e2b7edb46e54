#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/labels.hpp"
#include "gorth/matrix.hpp"
#include "gorth/structures.hpp"

// Basis conventions of the emitted normal forms (v0 is always basis vector 0).
//
// Single chain, s = h+1 with h = 2m even, chain w, Nw, ..., N^h w, N^{h+1}w = v0/α:
//   v0; N^{m-1}w, ..., w; N^m w; -δN^{m+1}w, +δN^{m+2}w, ..., (-1)^m δ N^h w
// with δ = ε(-1)^m and γ(N^i w, N^{h-i} w) = ε(-1)^i. The Gram matrix is
// the bordered (0, 0, I_m; 0, δ, 0; I_m, 0, 0). The alternating signs on the
// trailing group make every leading/trailing pairing +1; with them the last
// trailing vector maps to ε α^-1 v0, so the top-right entry of N is ε/α.
//
// Double chain, s = h+1: v0; v, Nv, ..., N^h v; then a second chain of
// height h paired with the first by I_{h+1}. N^{h+1} v = v0.

namespace gorth {

/// Modulus for a single-chain label: the supplied α (checked against a2) or
/// the exact square root of a2 when a2 is a rational square.
inline Rat resolve_alpha(const SingleChain& l, const std::optional<Rat>& alpha) {
  if (alpha) {
    if (alpha->sign() <= 0) throw InputError("alpha must be positive");
    if (*alpha * *alpha != l.alpha_squared)
      throw InputError("alpha^2 = " + (*alpha * *alpha).str() + " does not match a2 = " + l.alpha_squared.str());
    return *alpha;
  }
  auto root = l.alpha_squared.sqrt();
  if (!root) throw InputError("a2 = " + l.alpha_squared.str() + " is not a rational square; supply alpha");
  return *root;
}

inline Triple emit_special(const SpecialLabel& label, const std::optional<Rat>& alpha = std::nullopt) {
  if (std::holds_alternative<Tau>(label)) {
    if (alpha) throw InputError("alpha is only meaningful for a single-chain special type");
    return {SymForm(Mat(1, 1)), Mat(1, 1), Vec{Rat(1)}};
  }

  if (auto* sc = std::get_if<SingleChain>(&label)) {
    if (sc->s % 2 == 0) throw InputError("single-chain special height must be odd");
    if (sc->eps != 1 && sc->eps != -1) throw InputError("eps must be +1 or -1");
    const Rat a = resolve_alpha(*sc, alpha);
    const std::size_t h = sc->s - 1, m = h / 2, n = h + 2;
    const int delta = sc->eps * (m % 2 == 0 ? 1 : -1);
    const std::size_t mid = m + 1;  // N^m w
    auto lead = [](std::size_t j) { return j; };            // N^{m-j} w, j = 1..m
    auto trail = [&](std::size_t j) { return mid + j; };    // j = 1..m

    Mat g(n, n), x(n, n);
    g(mid, mid) = delta;
    for (std::size_t j = 1; j <= m; ++j) g(lead(j), trail(j)) = g(trail(j), lead(j)) = 1;

    if (m == 0) {
      x(0, mid) = a.inverse();
    } else {
      for (std::size_t j = 2; j <= m; ++j) x(lead(j - 1), lead(j)) = 1;
      x(mid, lead(1)) = 1;
      x(trail(1), mid) = -delta;
      for (std::size_t j = 1; j < m; ++j) x(trail(j + 1), trail(j)) = -1;
      x(0, trail(m)) = Rat(sc->eps) * a.inverse();
    }
    return {SymForm(std::move(g)), std::move(x), unit_vector(n, 0)};
  }

  const auto& dc = std::get<DoubleChain>(label);
  if (alpha) throw InputError("alpha is only meaningful for a single-chain special type");
  if (dc.s == 0) throw InputError("double-chain special height must be at least 1");
  const std::size_t h = dc.s - 1, n = 2 * h + 3;
  auto p = [](std::size_t i) { return 1 + i; };
  auto q = [&](std::size_t j) { return h + 2 + j; };
  Mat g(n, n), x(n, n);
  for (std::size_t i = 0; i <= h; ++i) g(p(i), q(i)) = g(q(i), p(i)) = 1;
  for (std::size_t i = 0; i < h; ++i) x(p(i + 1), p(i)) = 1;
  x(0, p(h)) = 1;
  for (std::size_t j = 1; j <= h; ++j) x(q(j - 1), q(j)) = -1;
  return {SymForm(std::move(g)), std::move(x), unit_vector(n, 0)};
}

inline Pair emit_type(const TypeLabel& label) {
  const std::size_t k = label.k;
  if (label.kind == TypeLabel::Kind::EvenSign) {
    if (k % 2 != 0) throw InputError("even type needs an even height");
    // Chain top w sits last: basis N^k w, ..., Nw, w under the upper Jordan block.
    Mat g(k + 1, k + 1), x(k + 1, k + 1);
    for (std::size_t i = 0; i <= k; ++i) g(i, k - i) = Rat(label.sign * (i % 2 == 0 ? 1 : -1));
    for (std::size_t i = 1; i <= k; ++i) x(i - 1, i) = 1;
    return {SymForm(std::move(g)), std::move(x)};
  }
  if (k % 2 == 0) throw InputError("pair type needs an odd height");
  const std::size_t n = 2 * (k + 1);
  Mat g(n, n), x(n, n);
  for (std::size_t i = 0; i <= k; ++i) g(i, k + 1 + i) = g(k + 1 + i, i) = 1;
  for (std::size_t i = 0; i < k; ++i) x(i + 1, i) = 1;
  for (std::size_t j = 1; j <= k; ++j) x(k + j, k + 1 + j) = -1;
  return {SymForm(std::move(g)), std::move(x)};
}

/// Direct sum of the special normal form and the type blocks, v0 = e0.
inline Triple assemble(const Classification& c, const std::optional<Rat>& alpha = std::nullopt) {
  if (c.nonzero) throw InputError("assemble: nonzero-eigenvalue parts have no normal form here");
  const std::size_t s = special_height_of(c.special);
  if (!std::holds_alternative<Tau>(c.special))
    for (const auto& t : c.types)
      if (t.height() >= s)
        throw InputError("assemble: type " + canonical_string(t) + " is not below the special height " +
                         std::to_string(s));

  Triple sp = emit_special(c.special, alpha);
  std::vector<Mat> grams{sp.form.gram()}, xis{sp.xi};
  std::vector<TypeLabel> types = c.types;
  sort_types(types);
  for (const auto& t : types) {
    Pair p = emit_type(t);
    grams.push_back(p.form.gram());
    xis.push_back(p.xi);
  }
  Mat g = direct_sum(grams);
  const std::size_t n = g.rows();
  return {SymForm(std::move(g)), direct_sum(xis), unit_vector(n, 0)};
}

}  // namespace gorth
