#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace cauchygeom {

using Vec = std::vector<double>;

// Dense square matrix, row-major. This project only ever needs small
// dimensions (Hessians and SPD points up to d=5 or so), so no BLAS.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);

  std::size_t dim() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric(double tol) const;
  double trace() const;
  Vec diag() const;

  // Lower Cholesky factor; nullopt when the matrix is not positive-definite.
  std::optional<Matrix> cholesky() const;
  // log det of a symmetric positive-definite matrix, via Cholesky.
  // Throws NotPositiveDefiniteError.
  double log_det_spd() const;
  // Inverse of a symmetric positive-definite matrix, via Cholesky.
  Matrix inverse_spd() const;

  Matrix transpose() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

Matrix matmul(const Matrix& x, const Matrix& y);
double frobenius_inner(const Matrix& x, const Matrix& y);
Vec matvec(const Matrix& m, const Vec& v);

}  // namespace cauchygeom
