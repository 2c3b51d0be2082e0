#include "pinch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pinch {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = a.dim();
  Matrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x) {
  int n = a.dim();
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double bilinear(const Matrix& a, std::span<const double> x, std::span<const double> y) {
  int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += a(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

bool invert(const Matrix& a, Matrix& out, double pivot_tol) {
  int n = a.dim();
  Matrix lu = a;
  out = Matrix::identity(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best <= pivot_tol) return false;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(lu(piv, j), lu(col, j));
        std::swap(out(piv, j), out(col, j));
      }
    }
    double inv_p = 1.0 / lu(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = lu(r, col) * inv_p;
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        lu(r, j) -= f * lu(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
    for (int j = 0; j < n; ++j) {
      lu(col, j) *= inv_p;
      out(col, j) *= inv_p;
    }
  }
  return true;
}

bool cholesky(const Matrix& a, Matrix& lower, double tol) {
  int n = a.dim();
  lower = Matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      if (i == j) {
        if (s <= tol) return false;
        lower(i, i) = std::sqrt(s);
      } else {
        lower(i, j) = s / lower(j, j);
      }
    }
  }
  return true;
}

void forward_subst(const Matrix& lower, std::span<double> b) {
  int n = lower.dim();
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= lower(i, k) * b[k];
    b[i] = s / lower(i, i);
  }
}

void backward_subst_t(const Matrix& lower, std::span<double> b) {
  int n = lower.dim();
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= lower(k, i) * b[k];
    b[i] = s / lower(i, i);
  }
}

std::vector<double> symmetric_eigenvalues(const Matrix& a, int sweeps) {
  int n = a.dim();
  Matrix m = a;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = m(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::pair<double, double> generalized_eig_extremes(const Matrix& m, const Matrix& g) {
  int n = m.dim();
  Matrix lower;
  if (!cholesky(g, lower))
    throw std::runtime_error("generalized_eig_extremes: metric block not SPD");
  // B = L^-1 M L^-T has the pencil's eigenvalues.
  Matrix b(n);
  std::vector<double> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = m(i, j);
    forward_subst(lower, col);
    for (int i = 0; i < n; ++i) b(i, j) = col[i];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) col[j] = b(i, j);
    forward_subst(lower, col);
    for (int j = 0; j < n; ++j) b(i, j) = col[j];
  }
  // Symmetrize against roundoff before Jacobi.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.5 * (b(i, j) + b(j, i));
      b(i, j) = v;
      b(j, i) = v;
    }
  auto ev = symmetric_eigenvalues(b);
  return {ev.front(), ev.back()};
}

bool gram_schmidt(const Matrix& g, std::vector<std::vector<double>>& vecs, double tol) {
  int n = g.dim();
  for (size_t v = 0; v < vecs.size(); ++v) {
    for (size_t w = 0; w < v; ++w) {
      double proj = bilinear(g, vecs[v], vecs[w]);
      for (int i = 0; i < n; ++i) vecs[v][i] -= proj * vecs[w][i];
    }
    double nrm2 = bilinear(g, vecs[v], vecs[v]);
    if (nrm2 < tol) return false;
    double inv = 1.0 / std::sqrt(nrm2);
    for (int i = 0; i < n; ++i) vecs[v][i] *= inv;
  }
  return true;
}

} // namespace pinch
