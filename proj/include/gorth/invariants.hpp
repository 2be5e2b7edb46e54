#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/forms.hpp"
#include "gorth/matrix.hpp"
#include "gorth/structures.hpp"

namespace gorth {

inline bool is_nilpotent(const Mat& m) { return mat_power(m, m.rows()).is_zero(); }

/// N^0, N^1, ... up to and including the first zero power, with kernels and
/// ranks computed once per power.
class PowerTower {
 public:
  explicit PowerTower(const Mat& n) : zero_(n.rows(), n.cols()) {
    require(n.is_square(), "PowerTower: matrix is not square");
    pw_.push_back(Mat::identity(n.rows()));
    while (!pw_.back().is_zero()) {
      require(pw_.size() <= n.rows(), "PowerTower: matrix is not nilpotent");
      pw_.push_back(pw_.back() * n);
    }
    kernels_.resize(pw_.size());
  }

  std::size_t dim() const { return zero_.rows(); }
  // Largest k with N^k != 0 (0 for the zero map and the empty space).
  std::size_t height() const { return pw_.size() >= 2 ? pw_.size() - 2 : 0; }
  // Number of stored powers; N^j = 0 for j >= size() - 1.
  std::size_t size() const { return pw_.size(); }

  const Mat& power(std::size_t j) const { return j < pw_.size() ? pw_[j] : zero_; }

  const std::vector<Vec>& kernel(std::size_t j) const {
    if (j >= pw_.size()) j = pw_.size() - 1;
    if (!kernels_[j]) kernels_[j] = kernel_basis(pw_[j]);
    return *kernels_[j];
  }

  std::size_t rank(std::size_t j) const { return dim() - kernel(j).size(); }

  // Jordan blocks of size exactly k+1.
  std::size_t blocks_of_size(std::size_t k) const {
    long d = static_cast<long>(rank(k)) - 2 * static_cast<long>(rank(k + 1)) + static_cast<long>(rank(k + 2));
    ensure(d >= 0, "negative Jordan block count");
    return static_cast<std::size_t>(d);
  }

 private:
  Mat zero_;
  std::vector<Mat> pw_;
  mutable std::vector<std::optional<std::vector<Vec>>> kernels_;
};

/// Largest k with N^k != 0 (0 for the zero map and for the empty space).
inline std::size_t nilpotent_height(const Mat& n) { return PowerTower(n).height(); }

namespace detail {

// Special height from precomputed powers of a nilpotent xi.
inline std::size_t special_height(const PowerTower& xi, const Vec& v0) {
  for (std::size_t k = 1; k < xi.size(); ++k)
    if (!solve(xi.power(k), v0)) return k - 1;
  return xi.size() - 1;  // unreachable: the last power is zero
}

}  // namespace detail

/// Largest k >= 0 with v0 in the image of xi^k. The image chain is
/// decreasing, so the first unsolvable power ends the search.
inline std::size_t special_height(const Triple& t) {
  auto v = validate_triple(t);
  require(v.ok, "special_height: invalid triple (" + v.report() + ")");
  require(is_nilpotent(t.xi), "special_height: xi is not nilpotent (split off the nonzero part first)");
  return detail::special_height(PowerTower(t.xi), t.v0);
}

/// The pair induced on V̄ = V / span{v0}, together with the connection
/// covector c: the v0-component of xi on the chosen lift of V̄, turned into
/// a vector with γ̄.
struct InducedData {
  std::vector<Vec> projection_basis;  // lift of the basis of V̄, in V coordinates
  Mat nbar;
  SymForm gbar;
  Vec c;
};

namespace detail {

inline InducedData induced_pair(const Triple& t) {
  const std::size_t n = t.dim();
  std::vector<Vec> standard;
  for (std::size_t i = 0; i < n; ++i) standard.push_back(unit_vector(n, i));
  auto complement = extend_basis({t.v0}, standard, n);

  std::vector<Vec> full{t.v0};
  full.insert(full.end(), complement.begin(), complement.end());
  Mat to_coords = inverse(Mat::from_columns(n, full));

  const std::size_t m = n - 1;
  Mat nbar(m, m);
  Vec phi(m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec coords = to_coords * (t.xi * complement[j]);
    phi[j] = coords[0];
    for (std::size_t i = 0; i < m; ++i) nbar(i, j) = coords[i + 1];
  }
  SymForm gbar = quotient_form(t.form, t.v0, complement);
  auto c = solve(gbar.gram(), phi);
  ensure(c.has_value(), "induced form is singular");
  return {std::move(complement), std::move(nbar), std::move(gbar), std::move(*c)};
}

}  // namespace detail

inline InducedData induced_pair(const Triple& t) {
  require(t.dim() >= 2, "induced_pair: the one-dimensional triple has no induced pair");
  auto v = validate_triple(t);
  require(v.ok, "induced_pair: invalid triple (" + v.report() + ")");
  return detail::induced_pair(t);
}

/// ker N̄^{k+1} / (ker N̄^k + N̄ ker N̄^{k+2}) with γ̂_k(x, y) = γ̄(x, N̄^k y).
/// Symmetric for even k, antisymmetric for odd k; its dimension counts the
/// Jordan blocks of size exactly k+1.
struct UniformLayer {
  std::size_t k = 0;
  std::vector<Vec> layer_basis;
  std::vector<Vec> denominator_basis;
  Mat hat_form;

  std::size_t dim() const { return layer_basis.size(); }
  bool symmetric() const { return k % 2 == 0; }
  Signature signature() const {
    require(symmetric(), "signature of a skew layer form");
    return gorth::signature(SymForm(hat_form));
  }
};

namespace detail {

inline UniformLayer uniform_layer(const PowerTower& nbar, const SymForm& gbar, std::size_t k) {
  const std::size_t m = gbar.dim();
  EchelonSpan span(m);
  std::vector<Vec> denom_basis;
  for (const auto& x : nbar.kernel(k))
    if (span.add(x)) denom_basis.push_back(x);
  for (const auto& x : nbar.kernel(k + 2)) {
    Vec y = nbar.power(1) * x;
    if (span.add(y)) denom_basis.push_back(std::move(y));
  }
  std::vector<Vec> reps;
  for (const auto& x : nbar.kernel(k + 1))
    if (span.add(x)) reps.push_back(x);

  const Mat& nk = nbar.power(k);
  Mat h(reps.size(), reps.size());
  std::vector<Vec> images;
  for (const auto& y : reps) images.push_back(gbar.gram() * (nk * y));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) h(i, j) = dot(reps[i], images[j]);

  const std::string where = "layer k=" + std::to_string(k) + ": ";
  ensure(reps.size() == nbar.blocks_of_size(k), where + "dimension disagrees with the rank sequence");
  ensure(rank(h) == reps.size(), where + "induced form is degenerate");
  ensure(k % 2 == 0 ? h.is_symmetric() : (h + h.transpose()).is_zero(),
         where + (k % 2 == 0 ? "form is not symmetric" : "form is not antisymmetric"));
  return {k, std::move(reps), std::move(denom_basis), std::move(h)};
}

}  // namespace detail

inline UniformLayer uniform_layer(const Mat& nbar, const SymForm& gbar, std::size_t k) {
  if (!nbar.is_square() || nbar.rows() != gbar.dim()) throw InputError("uniform_layer: shape mismatch");
  return detail::uniform_layer(PowerTower(nbar), gbar, k);
}

/// Class of c in the top layer k = s-1 and its self-pairing γ̂_{s-1}(ĉ, ĉ).
/// Nonzero pairing marks the single-chain special summand; zero marks the
/// double-chain one.
struct ConnectionClass {
  Vec c_hat;  // coordinates on UniformLayer::layer_basis
  Rat self_pairing;
};

namespace detail {

inline ConnectionClass connection_class(const InducedData& ind, const PowerTower& nbar, std::size_t s) {
  require(s >= 1, "connection_class: special height must be positive");
  require(nbar.power(s).is_zero(), "connection_class: nbar^s is not zero");
  UniformLayer layer = uniform_layer(nbar, ind.gbar, s - 1);

  std::vector<Vec> cols = layer.denominator_basis;
  cols.insert(cols.end(), layer.layer_basis.begin(), layer.layer_basis.end());
  auto x = solve(Mat::from_columns(ind.gbar.dim(), cols), ind.c);
  ensure(x.has_value(), "connection covector lies outside ker nbar^s");
  Vec c_hat(x->begin() + static_cast<std::ptrdiff_t>(layer.denominator_basis.size()), x->end());
  ensure(!is_zero(c_hat), "connection class vanishes below the special height");

  Rat pairing = ind.gbar(ind.c, nbar.power(s - 1) * ind.c);
  ensure(pairing == dot(c_hat, layer.hat_form * c_hat), "connection pairing depends on the representative");
  return {std::move(c_hat), std::move(pairing)};
}

}  // namespace detail

inline ConnectionClass connection_class(const InducedData& ind, std::size_t s) {
  return detail::connection_class(ind, PowerTower(ind.nbar), s);
}

}  // namespace gorth
