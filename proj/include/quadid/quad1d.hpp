#pragma once

// Adaptive one-dimensional quadrature.
//
// Panels are integrated with the Gauss-Kronrod 7/15 embedded pair; the
// global driver keeps every panel in a worst-error-first queue and bisects
// until the summed error estimate meets the tolerance or the panel budget is
// spent. Semi-infinite intervals [lo, +inf) are mapped onto [0, 1) with
// x = lo + t/(1-t) before any panel is formed.

#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadid {

using Integrand1 = std::function<double(double)>;

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an integrand returns a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double abscissa)
      : std::runtime_error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Finite [lo, hi] or semi-infinite [lo, +inf).
class Interval {
 public:
  Interval(double lo, double hi);
  static Interval semi_infinite(double lo);

  double lo() const noexcept { return lo_; }
  /// +inf for semi-infinite intervals.
  double hi() const noexcept { return hi_; }
  bool is_semi_infinite() const noexcept { return semi_infinite_; }

 private:
  Interval(double lo, double hi, bool semi);

  double lo_;
  double hi_;
  bool semi_infinite_;
};

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_panels = 10000;

  /// Throws ParameterError unless abs, rel >= 0, not both zero, budget >= 1.
  void validate() const;
  double target(double value) const;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  std::size_t neval = 0;
  std::size_t n_panels = 0;
  bool converged = false;
};

struct GaussRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct PanelEstimate {
  double value;
  double err_est;
};

constexpr int kMaxGaussOrder = 64;
constexpr std::size_t kPanelEvals = 15;

/// Gauss-Legendre rule on [-1, 1] for 1 <= order <= 64.
GaussRule gauss_rule(int order);

/// One Gauss-Kronrod 7/15 panel on [lo, hi]; endpoints are never sampled.
PanelEstimate integrate_panel(const Integrand1& f, double lo, double hi);

QuadResult integrate_1d(const Integrand1& f, const Interval& iv,
                        const Tolerance& tol = {});

/// t -> f(lo + t/(1-t)) / (1-t)^2, for integrating f over [lo, +inf) on [0, 1).
Integrand1 transform_semi_infinite(Integrand1 f, double lo = 0.0);

/// Kronrod 15-point abscissae and weights on [-1, 1], ascending.
const std::vector<double>& kronrod15_nodes();
const std::vector<double>& kronrod15_weights();
/// Gauss 7-point weights aligned with kronrod15_nodes() (zero at Kronrod-only nodes).
const std::vector<double>& gauss7_weights_embedded();

}  // namespace quadid
