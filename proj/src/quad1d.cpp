#include "quadid/quad1d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>

namespace quadid {

namespace {

// QUADPACK qk15 tables, positive half, outermost node first.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Tables {
  std::vector<double> nodes;
  std::vector<double> kronrod;
  std::vector<double> gauss;
};

double monomial_moment(int degree) {
  return degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
}

// K15 must be exact through degree 22 and the embedded G7 through degree 13.
void self_check(const Tables& t) {
  for (int d = 0; d <= 22; ++d) {
    double k = 0.0, g = 0.0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const double p = std::pow(t.nodes[i], d);
      k += t.kronrod[i] * p;
      g += t.gauss[i] * p;
    }
    if (std::abs(k - monomial_moment(d)) > 1e-14 ||
        (d <= 13 && std::abs(g - monomial_moment(d)) > 1e-14)) {
      throw std::logic_error("Gauss-Kronrod table failed exactness check at degree " +
                             std::to_string(d));
    }
  }
}

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (int i = 0; i < 15; ++i) {
      const int k = i < 7 ? i : 14 - i;
      const double x = i < 7 ? -kXgk[k] : kXgk[k];
      out.nodes.push_back(x);
      out.kronrod.push_back(kWgk[k]);
      out.gauss.push_back(k % 2 == 1 ? kWg[k / 2] : 0.0);
    }
    self_check(out);
    return out;
  }();
  return t;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Panel {
  double lo;
  double hi;
  double value;
  double err;
};

struct WorstFirst {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.lo > b.lo;
  }
};

double legendre_with_derivative(int n, double x, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  dp = n * (x * p1 - p0) / (x * x - 1.0);
  return p1;
}

}  // namespace

Interval::Interval(double lo, double hi) : Interval(lo, hi, false) {}

Interval::Interval(double lo, double hi, bool semi)
    : lo_(lo), hi_(hi), semi_infinite_(semi) {
  if (!std::isfinite(lo)) throw ParameterError("interval lower bound must be finite");
  if (semi) return;
  if (!std::isfinite(hi)) {
    throw ParameterError("use Interval::semi_infinite for an infinite upper bound");
  }
  if (!(lo < hi)) throw ParameterError("interval requires lo < hi");
}

Interval Interval::semi_infinite(double lo) {
  return Interval(lo, std::numeric_limits<double>::infinity(), true);
}

void Tolerance::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw ParameterError("tolerances must be non-negative");
  }
  if (abs_tol == 0.0 && rel_tol == 0.0) {
    throw ParameterError("absolute and relative tolerance cannot both be zero");
  }
  if (max_panels < 1) throw ParameterError("panel budget must be at least 1");
}

double Tolerance::target(double value) const {
  return std::max(abs_tol, rel_tol * std::abs(value));
}

GaussRule gauss_rule(int order) {
  if (order < 1 || order > kMaxGaussOrder) {
    throw ParameterError("Gauss rule order must lie in [1, 64], got " +
                         std::to_string(order));
  }
  GaussRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  const int half = order / 2;
  // Positive roots, largest first, then mirrored.
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double p = legendre_with_derivative(order, x, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    legendre_with_derivative(order, x, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (order % 2 == 1) {
    double dp = 0.0;
    legendre_with_derivative(order, 0.0, dp);
    rule.nodes[half] = 0.0;
    rule.weights[half] = 2.0 / (dp * dp);
  }
  return rule;
}

const std::vector<double>& kronrod15_nodes() { return tables().nodes; }
const std::vector<double>& kronrod15_weights() { return tables().kronrod; }
const std::vector<double>& gauss7_weights_embedded() { return tables().gauss; }

PanelEstimate integrate_panel(const Integrand1& f, double lo, double hi) {
  const Tables& t = tables();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = 0.0, gauss = 0.0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const double x = center + half * t.nodes[i];
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand returned " << fx << " at x = " << x;
      throw EvaluationError(msg.str(), x);
    }
    kronrod += t.kronrod[i] * fx;
    gauss += t.gauss[i] * fx;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

Integrand1 transform_semi_infinite(Integrand1 f, double lo) {
  return [f = std::move(f), lo](double t) {
    const double s = 1.0 - t;
    return f(lo + t / s) / (s * s);
  };
}

QuadResult integrate_1d(const Integrand1& f, const Interval& iv, const Tolerance& tol) {
  tol.validate();
  if (iv.is_semi_infinite()) {
    return integrate_1d(transform_semi_infinite(f, iv.lo()), Interval(0.0, 1.0), tol);
  }

  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  const PanelEstimate first = integrate_panel(f, iv.lo(), iv.hi());
  queue.push({iv.lo(), iv.hi(), first.value, first.err_est});
  std::size_t evaluated = 1;

  double running_value = first.value;
  double running_err = first.err_est;
  bool converged = false;

  auto exact_totals = [&queue](double& value, double& err) {
    // priority_queue hides its container; copy it once to re-sum exactly.
    auto copy = queue;
    CompensatedSum v, e;
    while (!copy.empty()) {
      v.add(copy.top().value);
      e.add(copy.top().err);
      copy.pop();
    }
    value = v.value();
    err = e.value();
  };

  while (true) {
    if (running_err <= tol.target(running_value)) {
      exact_totals(running_value, running_err);
      if (running_err <= tol.target(running_value)) {
        converged = true;
        break;
      }
    }
    if (queue.size() >= tol.max_panels) break;

    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // cannot bisect further
    queue.pop();
    const PanelEstimate left = integrate_panel(f, worst.lo, mid);
    const PanelEstimate right = integrate_panel(f, mid, worst.hi);
    evaluated += 2;
    queue.push({worst.lo, mid, left.value, left.err_est});
    queue.push({mid, worst.hi, right.value, right.err_est});
    running_value += left.value + right.value - worst.value;
    running_err += left.err_est + right.err_est - worst.err;
    if (evaluated % 64 == 1) exact_totals(running_value, running_err);
  }

  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  CompensatedSum value, err;
  for (const Panel& p : panels) {
    value.add(p.value);
    err.add(p.err);
  }

  QuadResult result;
  result.value = value.value();
  result.err_est = std::max(0.0, err.value());
  result.neval = evaluated * kPanelEvals;
  result.n_panels = panels.size();
  result.converged = converged && result.err_est <= tol.target(result.value);
  return result;
}

}  // namespace quadid
