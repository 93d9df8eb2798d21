#pragma once

// Iterated adaptive quadrature over boxes of dimension 1..6.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quadid/quad1d.hpp"

namespace quadid {

struct IntegrandN {
  std::size_t arity = 0;
  std::function<double(std::span<const double>)> eval;

  double operator()(std::span<const double> point) const { return eval(point); }
};

/// Product of intervals; at most one axis may be semi-infinite.
class Box {
 public:
  explicit Box(std::vector<Interval> axes);
  static Box unit(std::size_t d);
  static Box cube(std::size_t d, double alpha);

  std::size_t dim() const noexcept { return axes_.size(); }
  const Interval& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<Interval>& axes() const noexcept { return axes_; }

 private:
  std::vector<Interval> axes_;
};

constexpr std::size_t kMaxCubatureDim = 6;
constexpr double kInnerTolFloor = 1e-14;

/// Tolerance handed to the next-inner level: one tenth of the outer one,
/// floored at kInnerTolFloor (a zero component stays zero).
Tolerance inner_tolerance(const Tolerance& outer);

/// The outermost axis is integrated adaptively and every node triggers a
/// full integration of the remaining axes. Axis 0 is outermost unless a
/// semi-infinite axis is present, in which case that axis moves outermost
/// and the rest keep their order. neval counts calls of f itself.
QuadResult integrate_nd(const IntegrandN& f, const Box& box, const Tolerance& tol);

/// (x_1, ..., x_d) -> g(x_1) * ... * g(x_d)
IntegrandN product_integrand(Integrand1 g, std::size_t d);

}  // namespace quadid
