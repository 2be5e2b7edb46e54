#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/forms.hpp"
#include "gorth/matrix.hpp"

namespace gorth {

/// An element xi of the Lie algebra of the generalized orthogonal group,
/// together with the degenerate form whose radical is span{v0}.
struct Triple {
  SymForm form;
  Mat xi;
  Vec v0;

  std::size_t dim() const { return form.dim(); }
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Element of an ordinary orthogonal algebra on a nondegenerate form.
struct Pair {
  SymForm form;
  Mat xi;

  std::size_t dim() const { return form.dim(); }
};

struct GroupElement {
  Mat a;
};

/// Outcome of a structural check. `identity` names the first identity that
/// failed; (row, col) locates a witness entry.
struct Validation {
  bool ok = true;
  std::string identity;
  std::size_t row = 0;
  std::size_t col = 0;

  static Validation pass() { return {}; }
  static Validation fail(std::string what, std::size_t r, std::size_t c = 0) {
    return {false, std::move(what), r, c};
  }
  std::string report() const {
    if (ok) return "ok";
    return "violation: " + identity + " at (" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

namespace detail {

// First nonzero entry of xiᵀG + Gxi, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> skew_defect(const Mat& gram, const Mat& xi) {
  Mat s = xi.transpose() * gram + gram * xi;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (!s(i, j).is_zero()) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace detail

inline Validation validate_triple(const Triple& t) {
  const std::size_t n = t.dim();
  if (t.xi.rows() != n || t.xi.cols() != n)
    return Validation::fail("shape(xi) == shape(gram)", t.xi.rows(), t.xi.cols());
  if (t.v0.size() != n) return Validation::fail("len(v0) == dim", t.v0.size());
  if (is_zero(t.v0)) return Validation::fail("v0 != 0", 0);

  auto rad = radical(t.form);
  if (rad.size() != 1) return Validation::fail("radical(gram) == span{v0}: radical dimension is 1", rad.size());
  Vec gv = t.form.gram() * t.v0;
  for (std::size_t i = 0; i < n; ++i)
    if (!gv[i].is_zero()) return Validation::fail("radical(gram) == span{v0}: gram*v0 == 0", i);

  Vec xv = t.xi * t.v0;
  for (std::size_t i = 0; i < n; ++i)
    if (!xv[i].is_zero()) return Validation::fail("xi*v0 == 0", i);

  if (auto d = detail::skew_defect(t.form.gram(), t.xi))
    return Validation::fail("xi^T*gram + gram*xi == 0", d->first, d->second);
  return Validation::pass();
}

inline Validation validate_pair(const Pair& p) {
  const std::size_t n = p.dim();
  if (p.xi.rows() != n || p.xi.cols() != n)
    return Validation::fail("shape(xi) == shape(gram)", p.xi.rows(), p.xi.cols());
  if (!p.form.nondegenerate()) return Validation::fail("det(gram) != 0", 0);
  if (auto d = detail::skew_defect(p.form.gram(), p.xi))
    return Validation::fail("xi^T*gram + gram*xi == 0", d->first, d->second);
  return Validation::pass();
}

inline Validation validate_group_element(const GroupElement& g, const SymForm& form, const Vec& v0) {
  const std::size_t n = form.dim();
  if (g.a.rows() != n || g.a.cols() != n) return Validation::fail("shape(a) == shape(gram)", g.a.rows(), g.a.cols());
  if (v0.size() != n) return Validation::fail("len(v0) == dim", v0.size());
  Vec av = g.a * v0;
  for (std::size_t i = 0; i < n; ++i)
    if (av[i] != v0[i]) return Validation::fail("a*v0 == v0", i);
  Mat c = g.a.transpose() * form.gram() * g.a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c(i, j) != form.gram()(i, j)) return Validation::fail("a^T*gram*a == gram", i, j);
  if (!try_inverse(g.a)) return Validation::fail("a invertible", 0);
  return Validation::pass();
}

/// Adjoint action: xi -> a xi a^-1.
inline Triple conjugate(const Triple& t, const GroupElement& g) {
  auto v = validate_group_element(g, t.form, t.v0);
  require(v.ok, "conjugate: not a group element (" + v.report() + ")");
  return {t.form, g.a * t.xi * inverse(g.a), t.v0};
}

/// Block group element (1, bᵀ; 0, Ã) with Ã = (I - s)(I + s)^-1, the Cayley
/// transform of s in o(G̃). Preserves G = (0, 0; 0, G̃) and fixes e0.
inline GroupElement cayley_group_element(const SymForm& gram_tilde, const Mat& s, const Vec& b) {
  const std::size_t n = gram_tilde.dim();
  if (s.rows() != n || s.cols() != n) throw InputError("cayley: s has shape " + s.shape());
  if (b.size() != n) throw InputError("cayley: translation has wrong length");
  require(!detail::skew_defect(gram_tilde.gram(), s), "cayley: s is not in o(gram_tilde)");
  Mat id = Mat::identity(n);
  auto inv = try_inverse(id + s);
  require(inv.has_value(), "cayley: I + s is singular");
  Mat at = (id - s) * *inv;

  Mat a(n + 1, n + 1);
  a(0, 0) = 1;
  for (std::size_t j = 0; j < n; ++j) a(0, j + 1) = b[j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i + 1, j + 1) = at(i, j);
  return {std::move(a)};
}

/// splitmix64: tiny, portable, and fully specified, so random streams are
/// identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (0xD1B54A32D192ED03ULL * (trial + 1)));
  mix.next();
  return mix.next();
}

struct RandomGroupOptions {
  long entry_bound = 1;       // skew entries in [-bound, bound]
  long translation_bound = 3; // translation entries in [-bound, bound]
  int density_percent = 35;   // chance that an upper skew entry is nonzero
};

/// Random element of the group for a triple whose form is (0, 0; 0, G̃) with
/// v0 = e0. s = G̃^-1 K for a random skew-symmetric integer K, which is
/// exactly the condition sᵀG̃ + G̃s = 0. The translation part is never zero.
inline GroupElement random_group_element(const Triple& t, std::uint64_t seed, RandomGroupOptions opt = {}) {
  const std::size_t n = t.dim();
  require(n >= 1 && t.v0 == unit_vector(n, 0), "random_group_element: v0 must be e0");
  for (std::size_t i = 0; i < n; ++i)
    require(t.form.gram()(0, i).is_zero(), "random_group_element: gram must have a zero first row");
  const std::size_t m = n - 1;
  Mat gt(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gt(i, j) = t.form.gram()(i + 1, j + 1);
  SymForm gram_tilde(gt);
  Mat gt_inv = inverse(gt);

  SplitMix64 rng(seed);
  Vec b(m);
  if (m > 0) {
    while (is_zero(b))
      for (auto& x : b) x = Rat(rng.uniform(-opt.translation_bound, opt.translation_bound));
  }
  for (;;) {
    Mat k(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (rng.uniform(0, 99) >= opt.density_percent) continue;
        Rat v(rng.uniform(-opt.entry_bound, opt.entry_bound));
        k(i, j) = v;
        k(j, i) = -v;
      }
    Mat s = gt_inv * k;
    if (!try_inverse(Mat::identity(m) + s)) continue;
    return cayley_group_element(gram_tilde, s, b);
  }
}

/// Fitting decomposition V = V0 ⊕ U: V0 = ker xi^dim (contains v0, xi
/// nilpotent there), U = im xi^dim (xi invertible there, form nondegenerate).
struct FittingSplit {
  Triple nilpotent;         // on the basis `nilpotent_basis`
  Pair nonzero;             // on the basis `nonzero_basis`
  std::vector<Vec> nilpotent_basis;
  std::vector<Vec> nonzero_basis;
};

namespace detail {

// Matrix of xi on an invariant subspace spanned by `basis`: one reduction
// of [B | xi B].
inline Mat restrict_map(const Mat& xi, const std::vector<Vec>& basis) {
  const std::size_t n = xi.rows(), m = basis.size();
  Mat aug(n, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = xi * basis[j];
    for (std::size_t i = 0; i < n; ++i) {
      aug(i, j) = basis[j][i];
      aug(i, m + j) = img[i];
    }
  }
  Echelon e = rref(std::move(aug), m);
  ensure(e.pivots.size() == m, "restrict_map: basis is dependent");
  for (std::size_t i = m; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) ensure(e.reduced(i, m + j).is_zero(), "subspace is not invariant");
  Mat out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = e.reduced(i, m + j);
  return out;
}

}  // namespace detail

namespace detail {

inline FittingSplit fitting_split(const Triple& t) {
  const std::size_t n = t.dim();
  Mat p = mat_power(t.xi, n);
  if (p.is_zero()) {
    FittingSplit out;
    out.nilpotent = t;
    for (std::size_t i = 0; i < n; ++i) out.nilpotent_basis.push_back(unit_vector(n, i));
    out.nonzero.form = SymForm(Mat(0, 0));
    out.nonzero.xi = Mat(0, 0);
    return out;
  }

  std::vector<Vec> v0_basis{t.v0};
  auto rest = extend_basis(v0_basis, kernel_basis(p), n);
  v0_basis.insert(v0_basis.end(), rest.begin(), rest.end());
  auto u_basis = column_space_basis(p);
  ensure(v0_basis.size() + u_basis.size() == n, "Fitting components do not span V");

  FittingSplit out;
  out.nilpotent.form = restrict(t.form, v0_basis);
  out.nilpotent.xi = detail::restrict_map(t.xi, v0_basis);
  out.nilpotent.v0 = unit_vector(v0_basis.size(), 0);
  out.nonzero.form = restrict(t.form, u_basis);
  out.nonzero.xi = detail::restrict_map(t.xi, u_basis);
  ensure(out.nonzero.form.nondegenerate(), "form restricted to the nonzero part is degenerate");
  out.nilpotent_basis = std::move(v0_basis);
  out.nonzero_basis = std::move(u_basis);
  return out;
}

}  // namespace detail

/// When xi is already nilpotent the triple is returned unchanged on the
/// standard basis; otherwise the nilpotent part is rebased with v0 = e0.
inline FittingSplit fitting_split(const Triple& t) {
  auto v = validate_triple(t);
  require(v.ok, "fitting_split: invalid triple (" + v.report() + ")");
  return detail::fitting_split(t);
}

}  // namespace gorth
