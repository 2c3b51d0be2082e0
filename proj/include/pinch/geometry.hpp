#ifndef PINCH_GEOMETRY_HPP
#define PINCH_GEOMETRY_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "pinch/errors.hpp"

namespace pinch {

/// Chart coordinates of a point. Dimension is owned by the metric using it.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[i]; }
  double& operator[](int i) { return coords[i]; }

  bool finite() const {
    for (double c : coords)
      if (!std::isfinite(c)) return false;
    return true;
  }
};

struct TangentVector {
  Point base;
  std::vector<double> components;
};

struct TangentPlane {
  Point base;
  TangentVector u;
  TangentVector v;
};

/// Axis-aligned closed box; the chart domain of a metric.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }

  static Box cube(int dim, double lo_v, double hi_v) {
    Box b;
    b.lo.assign(dim, lo_v);
    b.hi.assign(dim, hi_v);
    return b;
  }

  bool contains(std::span<const double> p, double slack = 0.0) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
    return true;
  }

  bool contains(const Point& p, double slack = 0.0) const {
    return contains(std::span<const double>(p.coords), slack);
  }

  /// Shrink each axis toward its center by `factor` in [0, 1].
  Box shrunk(double factor) const {
    Box b = *this;
    for (int i = 0; i < dim(); ++i) {
      double c = 0.5 * (lo[i] + hi[i]);
      double h = 0.5 * (hi[i] - lo[i]) * factor;
      b.lo[i] = c - h;
      b.hi[i] = c + h;
    }
    return b;
  }

  std::vector<double> clamp(std::span<const double> p) const {
    std::vector<double> q(p.begin(), p.end());
    for (int i = 0; i < dim(); ++i) {
      if (q[i] < lo[i]) q[i] = lo[i];
      if (q[i] > hi[i]) q[i] = hi[i];
    }
    return q;
  }
};

/// Split structure of a metric: one distinguished coordinate t whose row of
/// the matrix is exactly r e_t (constant tt-entry r, zero mixed entries).
struct Split {
  int t_index = 0;
  double r = 1.0;
};

inline void require_point_dim(const Point& p, int dim, const char* where) {
  if (p.dim() != dim)
    throw Error(std::string(where) + ": point dimension " + std::to_string(p.dim()) +
                " does not match chart dimension " + std::to_string(dim));
  if (!p.finite()) throw Error(std::string(where) + ": point has non-finite coordinates");
}

} // namespace pinch

#endif
