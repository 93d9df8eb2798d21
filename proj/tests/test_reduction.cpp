#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "quadid/reduction.hpp"

using namespace quadid;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double gaussian(double x) { return std::exp(-x * x); }

IntegrandN bivariate(std::function<double(double, double)> f) {
  return {2, [f = std::move(f)](std::span<const double> p) { return f(p[0], p[1]); }};
}

IntegrandN trivariate(std::function<double(double, double, double)> f) {
  return {3, [f = std::move(f)](std::span<const double> p) { return f(p[0], p[1], p[2]); }};
}

struct Univariate {
  std::array<double, 3> c;
  double operator()(double x) const { return c[0] + c[1] * x + c[2] * x * x; }
};

}  // namespace

TEST_CASE("factorial multipliers are exact") {
  CHECK(factorial(2) == 2);
  CHECK(factorial(3) == 6);
  CHECK(factorial(4) == 24);
  CHECK(factorial(18) == 6402373705728000ULL);
}

TEST_CASE("reduce_f1 pointwise examples") {
  const ReducedIntegrand one = reduce_f1(bivariate([](double, double) { return 1.0; }), 1.0);
  const std::array<double, 2> p{0.3, 0.7};
  CHECK(one.inner(p) == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(one.multiplier == 1);
  CHECK(one.box.dim() == 2);
  CHECK(one.box.axis(1).hi() == 1.0);

  const ReducedIntegrand xy = reduce_f1(bivariate([](double x, double y) { return x * y; }), 1.0);
  const std::array<double, 2> q{0.5, 1.0};
  CHECK(xy.inner(q) == doctest::Approx(1.0).epsilon(1e-15));

  const QuadResult r = integrate_reduced(xy, Tolerance{1e-12, 0.0});
  CHECK(std::abs(r.value - 0.25) <= 1e-14);
}

TEST_CASE("reduce_f2 with n = 2 reproduces reduce_f1 pointwise") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const IntegrandN f = bivariate([](double x, double y) { return std::sin(3 * x) * std::exp(y) + x * x * y; });
  const ReducedIntegrand a = reduce_f1(f, 1.7);
  const ReducedIntegrand b = reduce_f2(f, 2, 1.7);
  for (int i = 0; i < 100; ++i) {
    const std::array<double, 2> p{u(rng), 1.7 * u(rng)};
    CHECK(a.inner(p) == b.inner(p));
  }
}

TEST_CASE("reduce_f2 examples") {
  const ReducedIntegrand one = reduce_f2(trivariate([](double, double, double) { return 1.0; }), 3, 1.0);
  const std::array<double, 3> p{0.2, 0.9, 0.5};
  CHECK(one.inner(p) == doctest::Approx(0.75).epsilon(1e-15));

  const IntegrandN xyz = trivariate([](double x, double y, double z) { return x * y * z; });
  const QuadResult reduced = integrate_reduced(reduce_f2(xyz, 3, 1.0), Tolerance{1e-12, 0.0});
  CHECK(std::abs(reduced.value - 0.125) <= 1e-13);
  const QuadResult brute = integrate_nd(xyz, Box::unit(3), Tolerance{1e-12, 0.0});
  CHECK(std::abs(reduced.value - brute.value) <= 1e-13);
}

TEST_CASE("reduce_f2 slot fill order is ascending") {
  // f records its arguments as digits so the slot layout is visible.
  const IntegrandN probe{3, [](std::span<const double> a) { return a[0] * 100 + a[1] * 10 + a[2]; }};
  const ReducedIntegrand r = reduce_f2(probe, 3, 1.0);
  const std::array<double, 3> p{0.2, 0.3, 1.0};  // beta = 1: beta*u = u
  // Phi_1 = f(1, .2, .3), Phi_2 = f(.2, 1, .3), Phi_3 = f(.2, .3, 1)
  const double expected = (100 + 2 + 0.3) + (20 + 10 + 0.3) + (20 + 3 + 1);
  CHECK(r.inner(p) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("F1 identity on random bivariate polynomials") {
  std::mt19937_64 rng(20100710);
  std::uniform_int_distribution<int> deg(0, 4);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const oracle::Poly2 p = oracle::random_poly2(rng, deg(rng));
    const IntegrandN f = bivariate(p);
    for (double alpha : {0.5, 1.0, 2.0}) {
      const QuadResult direct = integrate_nd(f, Box::cube(2, alpha), Tolerance{1e-12, 0.0});
      CHECK(std::abs(direct.value - p.square_integral(alpha)) <= 1e-12);
      const IdentityReport rep = verify_identity(direct, reduce_f1(f, alpha), Tolerance{1e-12, 0.0});
      CHECK(rep.pass);
      worst = std::max(worst, rep.residual);
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("F2 identity on separable and symmetric trivariate polynomials") {
  std::mt19937_64 rng(94530);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  const Tolerance tol{1e-11, 0.0};
  for (int k = 0; k < 10; ++k) {
    const Univariate a{{c(rng), c(rng), c(rng)}};
    const Univariate b{{c(rng), c(rng), c(rng)}};
    const Univariate d{{c(rng), c(rng), c(rng)}};
    const IntegrandN separable = trivariate([=](double x, double y, double z) { return a(x) * b(y) * d(z); });
    const std::array<double, 5> s{c(rng), c(rng), c(rng), c(rng), c(rng)};
    const IntegrandN symmetric = trivariate([=](double x, double y, double z) {
      return s[0] + s[1] * (x + y + z) + s[2] * (x * y + y * z + z * x) + s[3] * x * y * z +
             s[4] * (x * x + y * y + z * z);
    });
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (const IntegrandN* f : {&separable, &symmetric}) {
        const QuadResult direct = integrate_nd(*f, Box::cube(3, alpha), tol);
        const IdentityReport rep = verify_identity(direct, reduce_f2(*f, 3, alpha), tol);
        CHECK(rep.residual <= 1e-8);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("symmetric integrand collapses the slot sum to n copies") {
  const auto sym = [](double x, double y, double z) {
    return 0.1 + 0.2 * (x + y + z) + 0.05 * (x * y + y * z + z * x) + 0.1 * x * y * z;
  };
  const ReducedIntegrand r = reduce_f2(trivariate(sym), 3, 1.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double u1 = u(rng), u2 = u(rng), beta = u(rng);
    const std::array<double, 3> p{u1, u2, beta};
    const double collapsed = beta * beta * 3.0 * sym(beta, beta * u1, beta * u2);
    CHECK(std::abs(r.inner(p) - collapsed) <= 1e-15);
  }
}

TEST_CASE("power_integrand pointwise examples") {
  const ReducedIntegrand r = power_integrand({[](double) { return 1.0; }, 3, 1.0});
  const std::array<double, 3> p{0.5, 0.5, 0.5};
  CHECK(r.inner(p) == 0.125);
  CHECK(r.multiplier == 6);
  CHECK_FALSE(r.box.axis(0).is_semi_infinite());
  CHECK(power_integrand({gaussian, 4, kInf}).box.axis(0).is_semi_infinite());
}

TEST_CASE("power_integrand reproduces the displayed n = 3 and n = 4 integrands") {
  const auto g = [](double x) { return std::cos(x) + 2.0; };
  const ReducedIntegrand r3 = power_integrand({g, 3, 1.0});
  const ReducedIntegrand r4 = power_integrand({g, 4, 1.0});
  // n = 3: gamma^2 beta g(gamma) g(gamma beta) g(gamma beta x)
  const double gm = 0.8, b = 0.35, x = 0.6, d = 1.3;
  const std::array<double, 3> p3{gm, b, x};
  CHECK(r3.inner(p3) == doctest::Approx(gm * gm * b * g(gm) * g(gm * b) * g(gm * b * x)).epsilon(1e-15));
  // n = 4: delta^3 gamma^2 beta g(delta) g(delta gamma) g(delta gamma beta) g(delta gamma beta x)
  const std::array<double, 4> p4{d, gm, b, x};
  CHECK(r4.inner(p4) == doctest::Approx(d * d * d * gm * gm * b * g(d) * g(d * gm) * g(d * gm * b) *
                                        g(d * gm * b * x))
                           .epsilon(1e-15));
}

TEST_CASE("power_integrand with g = 1 is exactly the weight product") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n = 2; n <= 6; ++n) {
    const ReducedIntegrand r = power_integrand({[](double) { return 1.0; }, n, 1.0});
    for (int i = 0; i < 50; ++i) {
      std::vector<double> t(n);
      for (double& v : t) v = u(rng);
      double w = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n - 1 - j; ++k) w *= t[j];
      }
      CHECK(r.inner(t) == w);
    }
  }
}

TEST_CASE("power identity g = x, n = 3 gives (1/2)^3") {
  const ReducedIntegrand r = power_integrand({[](double x) { return x; }, 3, 1.0});
  const QuadResult q = integrate_reduced(r, Tolerance{1e-12, 0.0});
  CHECK(std::abs(6.0 * q.value - 0.125) <= 1e-13);
}

TEST_CASE("power identity over the grid of g, n and alpha") {
  const Integrand1 gs[] = {[](double) { return 1.0; }, [](double x) { return x; },
                           [](double x) { return x * x; }, [](double x) { return std::cos(x); },
                           gaussian};
  int cases = 0;
  for (const Integrand1& g : gs) {
    for (std::size_t n : {2, 3, 4}) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const QuadResult direct = power_of_integral(g, n, alpha);
        const double reduced = static_cast<double>(factorial(n)) *
                               integrate_reduced(power_integrand({g, n, alpha}), Tolerance{1e-11, 0.0}).value;
        CAPTURE(n);
        CAPTURE(alpha);
        CHECK(std::abs(direct.value - reduced) <= 1e-8);
        ++cases;
      }
    }
  }
  CHECK(cases == 45);
}

TEST_CASE("general power formula matches brute-force product cubature") {
  for (const Integrand1& g : {Integrand1([](double x) { return x; }), Integrand1(gaussian)}) {
    for (std::size_t n : {2, 3}) {
      const ReducedIntegrand r = power_integrand({g, n, 1.0});
      const double reduced = static_cast<double>(r.multiplier) * integrate_reduced(r, Tolerance{1e-12, 0.0}).value;
      const QuadResult brute = integrate_nd(product_integrand(g, n), Box::unit(n), Tolerance{1e-12, 0.0});
      CHECK(std::abs(reduced - brute.value) <= 1e-8);
    }
  }
}

TEST_CASE("fundamental theorem step: central differences of the cube converge at order two") {
  const double alpha = 1.0;
  const double base = integrate_1d(gaussian, Interval(0.0, alpha)).value;
  const double exact = 3.0 * gaussian(alpha) * base * base;
  std::vector<double> errors;
  for (double h : oracle::halving_steps()) {
    const double up = power_of_integral(gaussian, 3, alpha + h).value;
    const double down = power_of_integral(gaussian, 3, alpha - h).value;
    errors.push_back(std::abs((up - down) / (2.0 * h) - exact));
  }
  REQUIRE(errors.size() >= 7);
  for (double order : oracle::observed_orders(errors)) CHECK(order >= 1.9);
}

TEST_CASE("verify_identity examples") {
  const IntegrandN one = bivariate([](double, double) { return 1.0; });
  const QuadResult direct1 = integrate_nd(one, Box::unit(2), Tolerance{1e-12, 0.0});
  const IdentityReport f1 = verify_identity(direct1, reduce_f1(one, 1.0), Tolerance{1e-12, 0.0});
  CHECK(f1.pass);
  CHECK(f1.residual <= 1e-12);

  const Integrand1 lin = [](double x) { return x; };
  const IdentityReport p3 = verify_identity(power_of_integral(lin, 3, 1.0),
                                            power_integrand({lin, 3, 1.0}), Tolerance{1e-10, 0.0});
  CHECK(p3.pass);
  CHECK(p3.residual <= 1e-10);
  CHECK(p3.multiplier == 6);
  CHECK(p3.reduced_total == doctest::Approx(0.125));

  const IdentityReport g4 = verify_identity(power_of_integral(gaussian, 4, kInf),
                                            power_integrand({gaussian, 4, kInf}), Tolerance{1e-7, 0.0});
  CHECK(g4.pass);
  CHECK(g4.residual <= 1e-5);
  CHECK(std::abs(g4.reduced_total - kPi * kPi / 16.0) <= 1e-5);
}

TEST_CASE("non-converged sides make the report inconclusive") {
  const Integrand1 peaked = [](double x) { return 1.0 / (1e-6 + (x - 0.5) * (x - 0.5)); };
  Tolerance starved{1e-13, 0.0};
  starved.max_panels = 2;
  const IdentityReport rep = verify_identity(power_of_integral(peaked, 2, 1.0, starved),
                                             power_integrand({peaked, 2, 1.0}), starved);
  CHECK(rep.inconclusive);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("reduction parameter errors") {
  const IntegrandN f3 = trivariate([](double, double, double) { return 1.0; });
  CHECK_THROWS_AS(reduce_f1(f3, 1.0), ParameterError);
  CHECK_THROWS_AS(reduce_f1(bivariate([](double, double) { return 1.0; }), kInf), ParameterError);
  CHECK_THROWS_AS(reduce_f1(bivariate([](double, double) { return 1.0; }), 0.0), ParameterError);
  CHECK_THROWS_AS(reduce_f2(f3, 2, 1.0), ParameterError);
  CHECK_THROWS_AS(reduce_f2(f3, 3, kInf), ParameterError);
  CHECK_THROWS_AS(power_integrand({gaussian, 1, 1.0}), ParameterError);
  CHECK_THROWS_AS(power_integrand({gaussian, 19, 1.0}), ParameterError);
  CHECK_THROWS_AS(power_integrand({gaussian, 3, -1.0}), ParameterError);
}
