#ifndef PINCH_LINALG_HPP
#define PINCH_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace pinch {

/// Dense row-major n x n matrix of doubles. Dimensions in this project are
/// tiny (n <= 8), so everything below is plain loops.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  std::span<double> data() { return a_; }
  std::span<const double> data() const { return a_; }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

private:
  int n_ = 0;
  std::vector<double> a_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<double> mat_vec(const Matrix& a, std::span<const double> x);

/// x^T a y
double bilinear(const Matrix& a, std::span<const double> x, std::span<const double> y);

/// Inverse via partial-pivot LU. Returns false if a pivot falls below tol.
bool invert(const Matrix& a, Matrix& out, double pivot_tol = 1e-14);

/// Cholesky factorization a = L L^T for SPD a; false if a pivot is <= tol.
bool cholesky(const Matrix& a, Matrix& lower, double tol = 0.0);

/// Solve L z = b in place for lower-triangular L.
void forward_subst(const Matrix& lower, std::span<double> b);
/// Solve L^T z = b in place.
void backward_subst_t(const Matrix& lower, std::span<double> b);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& a, int sweeps = 32);

/// Extremal eigenvalues of the pencil (m, g) with g SPD: the stationary
/// values of x^T m x / x^T g x. Returns {min, max}.
std::pair<double, double> generalized_eig_extremes(const Matrix& m, const Matrix& g);

/// Gram-Schmidt the columns of `vecs` (each length n) against the inner
/// product g. Returns false if some pivot norm falls below tol (vectors
/// nearly dependent).
bool gram_schmidt(const Matrix& g, std::vector<std::vector<double>>& vecs, double tol = 1e-10);

} // namespace pinch

#endif
