#include "quadid/reduction.hpp"

#include <array>
#include <cmath>
#include <string>

namespace quadid {

namespace {

void check_finite_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("alpha must be finite and positive for F1/F2 reduction");
  }
}

void check_order(std::size_t n) {
  if (n < 2 || n > kMaxReducedDim) {
    throw ParameterError("reduction order n must lie in [2, 18], got " + std::to_string(n));
  }
}

Box radial_last_box(std::size_t n, double alpha) {
  std::vector<Interval> axes(n - 1, Interval(0.0, 1.0));
  axes.emplace_back(0.0, alpha);
  return Box(std::move(axes));
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw ParameterError("factorial overflows 64 bits beyond 20");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

ReducedIntegrand reduce_f1(IntegrandN f, double alpha) {
  if (f.arity != 2) {
    throw ParameterError("reduce_f1 needs a bivariate integrand, got arity " +
                         std::to_string(f.arity));
  }
  check_finite_alpha(alpha);
  IntegrandN inner{2, [f = std::move(f)](std::span<const double> p) {
                     const double u = p[0];
                     const double beta = p[1];
                     const std::array<double, 2> a{beta, beta * u};
                     const std::array<double, 2> b{beta * u, beta};
                     return beta * (f(a) + f(b));
                   }};
  return {std::move(inner), 1, radial_last_box(2, alpha)};
}

ReducedIntegrand reduce_f2(IntegrandN f, std::size_t n, double alpha) {
  check_order(n);
  if (f.arity != n) {
    throw ParameterError("reduce_f2 needs an integrand of arity " + std::to_string(n) +
                         ", got " + std::to_string(f.arity));
  }
  check_finite_alpha(alpha);
  IntegrandN inner{n, [f = std::move(f), n](std::span<const double> p) {
                     const double beta = p[n - 1];
                     std::array<double, kMaxReducedDim> args{};
                     const std::span<const double> view(args.data(), n);
                     double sum = 0.0;
                     for (std::size_t slot = 0; slot < n; ++slot) {
                       std::size_t next = 0;
                       for (std::size_t i = 0; i < n; ++i) {
                         args[i] = i == slot ? beta : beta * p[next++];
                       }
                       sum += f(view);
                     }
                     double weight = 1.0;
                     for (std::size_t k = 1; k < n; ++k) weight *= beta;
                     return weight * sum;
                   }};
  return {std::move(inner), 1, radial_last_box(n, alpha)};
}

ReducedIntegrand power_integrand(PowerSpec spec) {
  check_order(spec.n);
  if (!(spec.alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (!spec.g) throw ParameterError("power construction needs a function g");
  const std::size_t n = spec.n;

  std::vector<Interval> axes;
  axes.push_back(std::isinf(spec.alpha) ? Interval::semi_infinite(0.0)
                                        : Interval(0.0, spec.alpha));
  axes.resize(n, Interval(0.0, 1.0));

  IntegrandN inner{n, [g = std::move(spec.g), n](std::span<const double> t) {
                     double weight = 1.0;
                     for (std::size_t j = 0; j < n; ++j) {
                       for (std::size_t k = j + 1; k < n; ++k) weight *= t[j];
                     }
                     double prefix = 1.0;
                     double values = 1.0;
                     for (std::size_t k = 0; k < n; ++k) {
                       prefix *= t[k];
                       values *= g(prefix);
                     }
                     return weight * values;
                   }};
  return {std::move(inner), factorial(n), Box(std::move(axes))};
}

QuadResult integrate_reduced(const ReducedIntegrand& r, const Tolerance& tol) {
  return integrate_nd(r.inner, r.box, tol);
}

IdentityReport verify_identity(const QuadResult& direct, const ReducedIntegrand& reduced,
                               const Tolerance& tol) {
  const QuadResult side = integrate_reduced(reduced, tol);
  const double m = static_cast<double>(reduced.multiplier);

  IdentityReport rep;
  rep.direct = direct.value;
  rep.direct_err = direct.err_est;
  rep.reduced = side.value;
  rep.reduced_err = side.err_est;
  rep.multiplier = reduced.multiplier;
  rep.reduced_total = m * side.value;
  rep.residual = std::abs(direct.value - rep.reduced_total);
  rep.threshold = tol.abs_tol + direct.err_est + m * side.err_est;
  rep.neval_direct = direct.neval;
  rep.neval_reduced = side.neval;
  rep.inconclusive = !direct.converged || !side.converged;
  rep.pass = !rep.inconclusive && rep.residual <= rep.threshold;
  return rep;
}

QuadResult power_of_integral(const Integrand1& g, std::size_t n, double alpha,
                             const Tolerance& tol) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  const Interval iv = std::isinf(alpha) ? Interval::semi_infinite(0.0) : Interval(0.0, alpha);
  QuadResult r = integrate_1d(g, iv, tol);
  const double base = r.value;
  r.value = std::pow(base, static_cast<double>(n));
  r.err_est = n * std::pow(std::abs(base), static_cast<double>(n - 1)) * r.err_est;
  return r;
}

}  // namespace quadid
