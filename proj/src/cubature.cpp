#include "quadid/cubature.hpp"

#include <algorithm>
#include <string>

namespace quadid {

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw ParameterError("box needs at least one axis");
  const auto semi = std::count_if(axes_.begin(), axes_.end(),
                                  [](const Interval& iv) { return iv.is_semi_infinite(); });
  if (semi > 1) throw ParameterError("box allows at most one semi-infinite axis");
}

Box Box::unit(std::size_t d) { return cube(d, 1.0); }

Box Box::cube(std::size_t d, double alpha) {
  return Box(std::vector<Interval>(d, Interval(0.0, alpha)));
}

Tolerance inner_tolerance(const Tolerance& outer) {
  Tolerance inner = outer;
  if (outer.abs_tol > 0.0) inner.abs_tol = std::max(outer.abs_tol / 10.0, kInnerTolFloor);
  if (outer.rel_tol > 0.0) inner.rel_tol = std::max(outer.rel_tol / 10.0, kInnerTolFloor);
  return inner;
}

namespace {

class Nested {
 public:
  Nested(const IntegrandN& f, const Box& box, const Tolerance& tol)
      : f_(f), box_(box), point_(box.dim(), 0.0) {
    for (std::size_t i = 0; i < box.dim(); ++i) {
      if (box.axis(i).is_semi_infinite()) order_.insert(order_.begin(), i);
      else order_.push_back(i);
    }
    tols_.push_back(tol);
    for (std::size_t level = 1; level < box.dim(); ++level) {
      tols_.push_back(inner_tolerance(tols_.back()));
    }
  }

  QuadResult run() {
    QuadResult r = integrate_level(0);
    r.neval = leaf_evals_;
    r.converged = r.converged && all_converged_;
    return r;
  }

 private:
  QuadResult integrate_level(std::size_t level) {
    const std::size_t axis = order_[level];
    Integrand1 g;
    if (level + 1 == order_.size()) {
      g = [this, axis](double x) {
        point_[axis] = x;
        ++leaf_evals_;
        return f_(point_);
      };
    } else {
      g = [this, axis, level](double x) {
        point_[axis] = x;
        const QuadResult inner = integrate_level(level + 1);
        if (!inner.converged) all_converged_ = false;
        return inner.value;
      };
    }
    return integrate_1d(g, box_.axis(axis), tols_[level]);
  }

  const IntegrandN& f_;
  const Box& box_;
  std::vector<std::size_t> order_;
  std::vector<Tolerance> tols_;
  std::vector<double> point_;
  std::size_t leaf_evals_ = 0;
  bool all_converged_ = true;
};

}  // namespace

QuadResult integrate_nd(const IntegrandN& f, const Box& box, const Tolerance& tol) {
  tol.validate();
  if (box.dim() < 1 || box.dim() > kMaxCubatureDim) {
    throw ParameterError("cubature dimension must lie in [1, 6], got " +
                         std::to_string(box.dim()));
  }
  if (f.arity != box.dim()) {
    throw ParameterError("integrand arity " + std::to_string(f.arity) +
                         " does not match box dimension " + std::to_string(box.dim()));
  }
  return Nested(f, box, tol).run();
}

IntegrandN product_integrand(Integrand1 g, std::size_t d) {
  if (d < 1) throw ParameterError("product integrand needs d >= 1");
  return {d, [g = std::move(g)](std::span<const double> x) {
            double p = 1.0;
            for (double xi : x) p *= g(xi);
            return p;
          }};
}

}  // namespace quadid
