#include "cauchygeom/linalg.hpp"

#include <cmath>
#include <cstdlib>

#include "cauchygeom/errors.hpp"

namespace cauchygeom {

Matrix::Matrix(std::size_t n, double fill) : n_(n), a_(n * n, fill) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool Matrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Vec Matrix::diag() const {
  Vec d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

std::optional<Matrix> Matrix::cholesky() const {
  Matrix l(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    double d = (*this)(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n_; ++i) {
      double s = (*this)(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

double Matrix::log_det_spd() const {
  auto l = cholesky();
  if (!l) throw NotPositiveDefiniteError("log_det_spd: matrix is not positive-definite");
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += std::log((*l)(i, i));
  return 2.0 * s;
}

Matrix Matrix::inverse_spd() const {
  auto lopt = cholesky();
  if (!lopt) throw NotPositiveDefiniteError("inverse_spd: matrix is not positive-definite");
  const Matrix& l = *lopt;
  Matrix inv(n_);
  // solve L L^T x = e_j per column
  for (std::size_t j = 0; j < n_; ++j) {
    Vec y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double s = (i == j) ? 1.0 : 0.0;
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
      y[i] = s / l(i, i);
    }
    for (std::size_t ii = n_; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t k = ii + 1; k < n_; ++k) s -= l(k, ii) * inv(k, j);
      inv(ii, j) = s / l(ii, ii);
    }
  }
  return inv;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("matmul: dimension mismatch");
  Matrix r(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t k = 0; k < x.dim(); ++k) {
      const double xik = x(i, k);
      for (std::size_t j = 0; j < x.dim(); ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

double frobenius_inner(const Matrix& x, const Matrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("frobenius_inner: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) s += x(i, j) * y(i, j);
  return s;
}

Vec matvec(const Matrix& m, const Vec& v) {
  if (m.dim() != v.size()) throw DimensionError("matvec: dimension mismatch");
  Vec r(m.dim(), 0.0);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace cauchygeom
