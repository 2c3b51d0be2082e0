#ifndef PINCH_METRIC_HPP
#define PINCH_METRIC_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinch/dual.hpp"
#include "pinch/geometry.hpp"
#include "pinch/linalg.hpp"

namespace pinch {

/// Models of the form r dt^2 + e^{-2at} (flat N block), up to relabeling
/// the height coordinate. Metrics carrying this tag have a closed-form
/// distance (see geodesics.cpp); used as the oracle registry.
struct SplitHyperbolicForm {
  double a = 1.0; // warp rate of the N block
  double r = 1.0; // constant tt-entry
};

/// A chart-based metric tensor field. Evaluators must be pure and safely
/// shareable across threads; the three overloads are the same formula
/// instantiated at plain, first-order and second-order dual scalars.
class MetricField {
public:
  virtual ~MetricField() = default;

  int dim() const { return dim_; }
  const Box& domain_box() const { return box_; }
  const std::optional<Split>& split() const { return split_; }
  const std::string& name() const { return name_; }

  /// Fill `out` (row-major dim x dim) with the metric at x.
  virtual void eval(std::span<const double> x, std::span<double> out) const = 0;
  virtual void eval(std::span<const Dual1> x, std::span<Dual1> out) const = 0;
  virtual void eval(std::span<const Dual2> x, std::span<Dual2> out) const = 0;

  /// Closed-form distance support, when the field is a registered model.
  virtual std::optional<SplitHyperbolicForm> hyperbolic_form() const { return std::nullopt; }

  Matrix eval_matrix(const Point& p) const {
    require_point_dim(p, dim_, "MetricField::eval");
    Matrix g(dim_);
    eval(std::span<const double>(p.coords), g.data());
    return g;
  }

protected:
  MetricField(int dim, Box box, std::optional<Split> split, std::string name)
      : dim_(dim), box_(std::move(box)), split_(std::move(split)), name_(std::move(name)) {}

  int dim_;
  Box box_;
  std::optional<Split> split_;
  std::string name_;
};

using MetricPtr = std::shared_ptr<const MetricField>;

/// Routes the three virtual eval overloads to one Derived::eval_impl<T>.
template <typename Derived>
class MetricFieldCRTP : public MetricField {
public:
  void eval(std::span<const double> x, std::span<double> out) const override {
    static_cast<const Derived*>(this)->template eval_impl<double>(x, out);
  }
  void eval(std::span<const Dual1> x, std::span<Dual1> out) const override {
    static_cast<const Derived*>(this)->template eval_impl<Dual1>(x, out);
  }
  void eval(std::span<const Dual2> x, std::span<Dual2> out) const override {
    static_cast<const Derived*>(this)->template eval_impl<Dual2>(x, out);
  }

protected:
  using MetricField::MetricField;
};

} // namespace pinch

#endif
