#include "quadid/chain.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "quadid/cubature.hpp"
#include "quadid/reduction.hpp"

namespace quadid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSq16 = kPi * kPi / 16.0;
constexpr double kAhmed = 5.0 * kPi * kPi / 96.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Quadratic form in the Gaussian chain exponent.
double chain_form(double x, double beta, double gamma) {
  const double g2 = gamma * gamma;
  const double b2 = beta * beta;
  return 1.0 + g2 + g2 * b2 + g2 * b2 * x * x;
}

ChainStep make_step(std::string id, std::string description, std::size_t dim,
                    double computed, double reference, double err, double tolerance,
                    std::size_t neval, bool converged, std::string anchor) {
  ChainStep s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.dimension = dim;
  s.computed = computed;
  s.reference = reference;
  s.residual = std::abs(computed - reference);
  s.err_est = err;
  s.tolerance = tolerance;
  s.neval = neval;
  s.converged = converged;
  s.pass = converged && s.residual <= tolerance;
  s.anchor = std::move(anchor);
  return s;
}

ChainCheck make_check(std::string id, std::string description, double lhs, double rhs,
                      double bound) {
  ChainCheck c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = std::abs(lhs - rhs);
  // Roundoff floor so that exactly agreeing values never fail on a zero bound.
  c.bound = bound + 64.0 * kEps * std::max(std::abs(lhs), std::abs(rhs));
  c.pass = c.residual <= c.bound;
  return c;
}

Tolerance abs_only(double abs_tol) { return Tolerance{abs_tol, 0.0}; }

}  // namespace

double profile_delta(double c) {
  if (!(c > 0.0)) throw ParameterError("profile_delta requires c > 0");
  return 1.0 / (2.0 * c * c);
}

double profile_beta(double gamma, double x) {
  if (!(gamma >= 0.0 && gamma <= 1.0 && x >= 0.0 && x <= 1.0)) {
    throw ParameterError("profile_beta requires gamma, x in [0, 1]");
  }
  const double x2 = x * x;
  const double g2 = gamma * gamma;
  return (1.0 / (2.0 * (1.0 + x2))) * (1.0 / (1.0 + g2) - 1.0 / (1.0 + g2 * (2.0 + x2)));
}

double profile_gamma(double k) {
  if (!(k > 0.0)) throw ParameterError("profile_gamma requires k > 0");
  const double r = std::sqrt(k);
  return std::atan(r) / r;
}

double ahmed_integrand(double x) {
  const double r = std::sqrt(2.0 + x * x);
  return std::atan(r) / ((1.0 + x * x) * r);
}

ChainReport run_chain(const ChainTolerances& tol) {
  ChainReport rep;
  rep.tolerances = tol;
  const Interval unit(0.0, 1.0);

  // S0
  const QuadResult gauss = integrate_1d([](double x) { return std::exp(-x * x); },
                                        Interval::semi_infinite(0.0), tol.quad_1d);
  const double g4 = std::pow(gauss.value, 4);
  rep.steps.push_back(make_step(
      "S0", "fourth power of the Gaussian half-line integral", 0, g4, kPiSq16,
      4.0 * std::pow(gauss.value, 3) * gauss.err_est, tol.s0, gauss.neval, gauss.converged,
      "(∫₀^{+∞} e^{−x²} dx)⁴ = π²/16"));

  // S1: axes (x, beta, gamma, delta), delta semi-infinite and therefore outermost.
  const IntegrandN gauss4{4, [](std::span<const double> p) {
                            const double d = p[3];
                            const double g = p[2];
                            return d * d * d * g * g * p[1] *
                                   std::exp(-d * d * chain_form(p[0], p[1], g));
                          }};
  const Box box4({unit, unit, unit, Interval::semi_infinite(0.0)});
  const QuadResult s1 = integrate_nd(gauss4, box4, abs_only(tol.quad_4d));
  rep.steps.push_back(make_step("S1", "24 x four-dimensional Gaussian chain integral", 4,
                                24.0 * s1.value, kPiSq16, 24.0 * s1.err_est, tol.s1,
                                s1.neval, s1.converged, "= 24 ∫₀¹ dx"));

  // S2: delta integrated in closed form.
  const IntegrandN triple{3, [](std::span<const double> p) {
                            const double c = chain_form(p[0], p[1], p[2]);
                            return p[2] * p[2] * p[1] / (c * c);
                          }};
  const QuadResult s2 = integrate_nd(triple, Box::unit(3), abs_only(tol.quad_3d));
  rep.steps.push_back(make_step("S2", "12 x triple integral after the delta integration", 3,
                                12.0 * s2.value, kPiSq16, 12.0 * s2.err_est, tol.s2,
                                s2.neval, s2.converged, "π²/16 = 12 ∫"));

  // S3: beta integrated in closed form.
  const IntegrandN first{2, [](std::span<const double> p) {
                           return 1.0 / ((1.0 + p[0] * p[0]) * (1.0 + p[1] * p[1]));
                         }};
  const IntegrandN second{2, [](std::span<const double> p) {
                            const double x2 = p[0] * p[0];
                            return 1.0 / ((1.0 + x2) * (1.0 + p[1] * p[1] * (2.0 + x2)));
                          }};
  const QuadResult i1 = integrate_nd(first, Box::unit(2), abs_only(tol.quad_2d));
  const QuadResult i2 = integrate_nd(second, Box::unit(2), abs_only(tol.quad_2d));
  rep.steps.push_back(make_step("S3", "6 x (I1 - I2) after the beta integration", 2,
                                6.0 * (i1.value - i2.value), kPiSq16,
                                6.0 * (i1.err_est + i2.err_est), tol.s3, i1.neval + i2.neval,
                                i1.converged && i2.converged, "(arctg 1)² = π²/16"));

  // S4: gamma integrated in closed form, compared with the Ahmed integrand.
  const QuadResult collapsed = integrate_1d(
      [](double x) { return profile_gamma(2.0 + x * x) / (1.0 + x * x); }, unit, tol.quad_1d);
  const QuadResult ahmed = integrate_1d(ahmed_integrand, unit, tol.quad_1d);
  rep.steps.push_back(make_step(
      "S4", "I2 collapsed in gamma vs the Ahmed integrand", 1, collapsed.value, ahmed.value,
      collapsed.err_est + ahmed.err_est, tol.s4, collapsed.neval + ahmed.neval,
      collapsed.converged && ahmed.converged, "integrate with regard to γ"));

  // S5
  rep.steps.push_back(make_step("S5", "Ahmed integral", 0, ahmed.value, kAhmed,
                                ahmed.err_est, tol.s5, ahmed.neval, ahmed.converged,
                                "A = 5π²/96"));

  // Adjacent steps that estimate the same constant.
  for (std::size_t k = 0; k + 1 < 4; ++k) {
    const ChainStep& a = rep.steps[k];
    const ChainStep& b = rep.steps[k + 1];
    rep.checks.push_back(make_check(a.id + "~" + b.id, "adjacent steps agree", a.computed,
                                    b.computed, a.err_est + b.err_est));
  }
  rep.checks.push_back(make_check("S3~S4", "I2 as a double integral vs collapsed in gamma",
                                  i2.value, collapsed.value, i2.err_est + collapsed.err_est));
  rep.checks.push_back(make_check("S4~S5", "collapsed I2 vs Ahmed integral", collapsed.value,
                                  ahmed.value, collapsed.err_est + ahmed.err_est));

  // S1 again through the general power construction with g = exp(-x^2).
  const ReducedIntegrand power = power_integrand(
      {[](double x) { return std::exp(-x * x); }, 4, std::numeric_limits<double>::infinity()});
  const QuadResult s1p = integrate_reduced(power, abs_only(tol.quad_4d));
  const double m = static_cast<double>(power.multiplier);
  rep.checks.push_back(make_check("S1.power", "power construction with n = 4 matches S1",
                                  m * s1p.value, 24.0 * s1.value,
                                  m * s1p.err_est + 24.0 * s1.err_est));

  // The delta step again, via the closed-form profile inside the triple integral.
  const IntegrandN composed{3, [](std::span<const double> p) {
                              return p[2] * p[2] * p[1] *
                                     profile_delta(chain_form(p[0], p[1], p[2]));
                            }};
  const QuadResult s2d = integrate_nd(composed, Box::unit(3), abs_only(tol.quad_3d));
  rep.checks.push_back(make_check("S2.delta", "24 x triple integral of the delta profile",
                                  24.0 * s2d.value, 12.0 * s2.value,
                                  24.0 * s2d.err_est + 12.0 * s2.err_est));

  // The beta step, via the closed-form profile in a double integral.
  const IntegrandN beta_profile{2, [](std::span<const double> p) {
                                  return profile_beta(p[1], p[0]);
                                }};
  const QuadResult s2b = integrate_nd(beta_profile, Box::unit(2), abs_only(tol.quad_2d));
  rep.checks.push_back(make_check("S2.beta", "12 x double integral of the beta profile",
                                  12.0 * s2b.value, 12.0 * s2.value,
                                  12.0 * (s2b.err_est + s2.err_est)));

  rep.checks.push_back(make_check("S3.I1", "first double integral equals (arctan 1)^2",
                                  i1.value, kPiSq16, std::min(tol.s3, 1e-10)));
  rep.checks.push_back(make_check("S3.I2", "second double integral equals A", i2.value,
                                  kAhmed, tol.s5));

  bool ok = true;
  for (const ChainStep& s : rep.steps) ok = ok && s.pass;
  for (const ChainCheck& c : rep.checks) ok = ok && c.pass;
  rep.all_pass = ok;
  return rep;
}

}  // namespace quadid
