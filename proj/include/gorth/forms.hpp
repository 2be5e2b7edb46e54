#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/matrix.hpp"

namespace gorth {

/// Symmetric bilinear form, stored as its Gram matrix.
class SymForm {
 public:
  SymForm() = default;
  explicit SymForm(Mat gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw InputError("Gram matrix must be square, got " + gram_.shape());
    if (!gram_.is_symmetric()) throw InputError("Gram matrix is not symmetric");
  }

  const Mat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  Rat operator()(const Vec& u, const Vec& v) const { return dot(u, gram_ * v); }

  bool nondegenerate() const { return rank(gram_) == dim(); }

  friend bool operator==(const SymForm&, const SymForm&) = default;

 private:
  Mat gram_;
};

struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t nulls = 0;

  std::size_t dim() const { return positives + negatives + nulls; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::vector<Vec> radical(const SymForm& f) { return kernel_basis(f.gram()); }

/// Gram matrix of f on the span of `basis`, in the given order.
inline SymForm restrict(const SymForm& f, const std::vector<Vec>& basis) {
  for (const auto& b : basis)
    if (b.size() != f.dim()) throw InputError("restrict: basis vector has wrong length");
  if (!linearly_independent(basis, f.dim())) throw InputError("restrict: basis is linearly dependent");
  Mat b = Mat::from_columns(f.dim(), basis);
  return SymForm(b.transpose() * f.gram() * b);
}

/// The form induced on V / span{v0} by f, expressed on the cosets of the
/// complement vectors. Requires the radical of f to be exactly span{v0}.
inline SymForm quotient_form(const SymForm& f, const Vec& v0, const std::vector<Vec>& complement) {
  auto rad = radical(f);
  require(rad.size() == 1, "quotient_form: radical is not one-dimensional");
  require(!is_zero(v0) && is_zero(f.gram() * v0), "quotient_form: v0 is not in the radical");
  std::vector<Vec> all{v0};
  all.insert(all.end(), complement.begin(), complement.end());
  require(all.size() == f.dim() && linearly_independent(all, f.dim()),
          "quotient_form: v0 and the complement do not form a basis");
  SymForm q = restrict(f, complement);
  ensure(q.nondegenerate(), "quotient form is degenerate");
  return q;
}

struct Diagonalization {
  Mat basis_change;  // columns: new basis; basis_changeᵀ·G·basis_change is diagonal
  Mat diagonal;
  Signature signature;
};

/// Symmetric Gaussian congruence over Q. Diagonal entries are not normalized;
/// only their signs feed the signature.
inline Diagonalization diagonalize(const SymForm& f) {
  const std::size_t n = f.dim();
  Mat a = f.gram();
  Mat p = Mat::identity(n);

  // b_i <- b_i + s * b_j  (as a congruence on a, a column operation on p)
  auto add_to = [&](std::size_t i, std::size_t j, const Rat& s) {
    for (std::size_t k = 0; k < n; ++k)
      if (!a(j, k).is_zero()) a(i, k).add_mul(s, a(j, k));
    for (std::size_t k = 0; k < n; ++k)
      if (!a(k, j).is_zero()) a(k, i).add_mul(s, a(k, j));
    for (std::size_t k = 0; k < n; ++k)
      if (!p(k, j).is_zero()) p(k, i).add_mul(s, p(k, j));
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(p(k, i), p(k, j));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_basis(i, j);
      } else {
        j = i + 1;
        while (j < n && a(i, j).is_zero()) ++j;
        if (j == n) continue;  // b_i is orthogonal to everything left
        add_to(i, j, Rat(1));  // a(i,i) becomes 2 a(i,j)
      }
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      if (a(k, i).is_zero()) continue;
      add_to(k, i, -(a(k, i) / a(i, i)));
    }
  }

  Signature sig;
  for (std::size_t i = 0; i < n; ++i) {
    int s = a(i, i).sign();
    if (s > 0) ++sig.positives;
    else if (s < 0) ++sig.negatives;
    else ++sig.nulls;
  }
  return {std::move(p), std::move(a), sig};
}

inline Signature signature(const SymForm& f) { return diagonalize(f).signature; }

}  // namespace gorth
