#pragma once

// Integrand transformers that rewrite an integral over the cube (0, alpha)^n
// as an integral over a unit cube times one radial axis.
//
// reduce_f1 / reduce_f2 use coordinates (u_1, ..., u_{n-1}, beta) on
// [0,1]^{n-1} x (0, alpha). power_integrand uses chain coordinates
// (t_1, ..., t_n) on (0, alpha) x [0,1]^{n-1} with t_1 radial, so that
// (int_0^alpha g)^n = n! * int prod_j t_j^{n-j} prod_k g(t_1 t_2 ... t_k).
// The exact constant multiplier is carried next to the floating-point
// integrand and applied only after integration.

#include <cstddef>
#include <cstdint>

#include "quadid/cubature.hpp"

namespace quadid {

constexpr std::size_t kMaxReducedDim = 18;  // 18! < 2^63

struct ReducedIntegrand {
  IntegrandN inner;
  std::uint64_t multiplier;
  Box box;
};

struct PowerSpec {
  Integrand1 g;
  std::size_t n = 2;
  /// May be +inf; the radial axis is then semi-infinite.
  double alpha = 1.0;
};

struct IdentityReport {
  double direct = 0.0;
  double direct_err = 0.0;
  double reduced = 0.0;  // integral of the inner integrand, before the multiplier
  double reduced_err = 0.0;
  std::uint64_t multiplier = 1;
  double reduced_total = 0.0;  // multiplier * reduced
  double residual = 0.0;
  double threshold = 0.0;
  std::size_t neval_direct = 0;
  std::size_t neval_reduced = 0;
  bool inconclusive = false;
  bool pass = false;
};

std::uint64_t factorial(std::size_t n);

/// inner(u, beta) = beta * (f(beta, beta u) + f(beta u, beta)).
ReducedIntegrand reduce_f1(IntegrandN f, double alpha);

/// inner(u_1..u_{n-1}, beta) = beta^{n-1} * sum_p Phi_p, where Phi_p puts
/// beta into argument slot p and beta*u_1, ..., beta*u_{n-1} into the other
/// slots in ascending order.
ReducedIntegrand reduce_f2(IntegrandN f, std::size_t n, double alpha);

ReducedIntegrand power_integrand(PowerSpec spec);

/// Integral of the inner integrand over its box (multiplier not applied).
QuadResult integrate_reduced(const ReducedIntegrand& r, const Tolerance& tol);

/// Integrates the reduced side and compares multiplier * value with the
/// direct result. Passes when the residual is within tol.abs_tol plus the
/// combined error estimates; inconclusive when either side did not converge.
IdentityReport verify_identity(const QuadResult& direct, const ReducedIntegrand& reduced,
                               const Tolerance& tol);

/// (int_0^alpha g)^n by 1-D quadrature, error estimate propagated to first order.
QuadResult power_of_integral(const Integrand1& g, std::size_t n, double alpha,
                             const Tolerance& tol = {});

}  // namespace quadid
