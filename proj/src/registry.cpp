#include "quadid/registry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadid/chain.hpp"
#include "quadid/cubature.hpp"

namespace quadid {

namespace {

constexpr double kPi = std::numbers::pi;

double gaussian(double x) { return std::exp(-x * x); }

std::vector<NamedIntegral> build() {
  const Interval unit(0.0, 1.0);
  std::vector<NamedIntegral> r;

  r.push_back({"ahmed", "int_0^1 atan(sqrt(2+x^2)) / ((1+x^2) sqrt(2+x^2)) dx",
               "5*pi^2/96", 5.0 * kPi * kPi / 96.0, "A = 5π²/96", 1, Tolerance{1e-12, 1e-12},
               [unit](const Tolerance& tol) { return integrate_1d(ahmed_integrand, unit, tol); }});

  r.push_back({"ahmed_double", "int_0^1 int_0^1 1 / ((1+x^2)(1+g^2(2+x^2))) dg dx",
               "5*pi^2/96", 5.0 * kPi * kPi / 96.0, "integrate with regard to γ", 2,
               Tolerance{1e-12, 0.0}, [](const Tolerance& tol) {
                 const IntegrandN f{2, [](std::span<const double> p) {
                                      const double x2 = p[0] * p[0];
                                      return 1.0 / ((1.0 + x2) * (1.0 + p[1] * p[1] * (2.0 + x2)));
                                    }};
                 return integrate_nd(f, Box::unit(2), tol);
               }});

  r.push_back({"arctan_square", "int_0^1 int_0^1 1 / ((1+x^2)(1+g^2)) dg dx", "pi^2/16",
               kPi * kPi / 16.0, "(arctg 1)² = π²/16", 2, Tolerance{1e-12, 0.0},
               [](const Tolerance& tol) {
                 const IntegrandN f{2, [](std::span<const double> p) {
                                      return 1.0 / ((1.0 + p[0] * p[0]) * (1.0 + p[1] * p[1]));
                                    }};
                 return integrate_nd(f, Box::unit(2), tol);
               }});

  r.push_back({"eq2_triple",
               "int_[0,1]^3 g^2 b / (1 + g^2 + g^2 b^2 + g^2 b^2 x^2)^2 dg db dx", "pi^2/192",
               kPi * kPi / 192.0, "π²/16 = 12 ∫", 3, Tolerance{1e-10, 0.0},
               [](const Tolerance& tol) {
                 const IntegrandN f{3, [](std::span<const double> p) {
                                      const double g2 = p[2] * p[2];
                                      const double b2 = p[1] * p[1];
                                      const double c = 1.0 + g2 + g2 * b2 + g2 * b2 * p[0] * p[0];
                                      return g2 * p[1] / (c * c);
                                    }};
                 return integrate_nd(f, Box::unit(3), tol);
               }});

  r.push_back({"gauss", "int_0^inf exp(-x^2) dx", "sqrt(pi)/2", std::sqrt(kPi) / 2.0,
               "∫₀^{+∞} e^{−x²} dx = ½√π", 1, Tolerance{1e-12, 1e-12},
               [](const Tolerance& tol) {
                 return integrate_1d(gaussian, Interval::semi_infinite(0.0), tol);
               }});

  r.push_back({"power4_gauss_4d",
               "int_[0,1]^3 int_0^inf d^3 g^2 b exp(-d^2 (1 + g^2 + g^2 b^2 + g^2 b^2 x^2)) "
               "dd dg db dx",
               "pi^2/384", kPi * kPi / 384.0, "= 24 ∫₀¹ dx", 4, Tolerance{1e-7, 0.0},
               [unit](const Tolerance& tol) {
                 const IntegrandN f{4, [](std::span<const double> p) {
                                      const double d = p[3];
                                      const double g2 = p[2] * p[2];
                                      const double b2 = p[1] * p[1];
                                      const double c = 1.0 + g2 + g2 * b2 + g2 * b2 * p[0] * p[0];
                                      return d * d * d * g2 * p[1] * std::exp(-d * d * c);
                                    }};
                 return integrate_nd(f, Box({unit, unit, unit, Interval::semi_infinite(0.0)}),
                                     tol);
               }});

  std::sort(r.begin(), r.end(),
            [](const NamedIntegral& a, const NamedIntegral& b) { return a.name < b.name; });
  return r;
}

}  // namespace

const std::vector<NamedIntegral>& registry() {
  static const std::vector<NamedIntegral> r = build();
  return r;
}

const NamedIntegral* find_integral(std::string_view name) {
  for (const NamedIntegral& n : registry()) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

}  // namespace quadid
