#pragma once

// Numerical replay of the chain of identities that starts from the fourth
// power of the Gaussian half-line integral, (sqrt(pi)/2)^4 = pi^2/16, and
// ends at Ahmed's integral A = 5 pi^2 / 96.
//
//   S0  (sqrt(pi)/2)^4, the base integral by quadrature          -> pi^2/16
//   S1  24 * 4-D Gaussian chain integral (delta on [0, inf))     -> pi^2/16
//   S2  12 * 3-D rational integrand after the delta integration  -> pi^2/16
//   S3  6 * (I1 - I2) after the beta integration                 -> pi^2/16
//   S4  I2 collapsed in gamma, equal to the Ahmed integrand      -> A
//   S5  Ahmed integral                                           -> 5 pi^2 / 96

#include <cstddef>
#include <string>
#include <vector>

#include "quadid/quad1d.hpp"

namespace quadid {

/// int_0^inf d^3 exp(-c d^2) dd = 1 / (2 c^2), c > 0.
double profile_delta(double c);

/// int_0^1 g^2 b / (1 + g^2 + g^2 b^2 (1 + x^2))^2 db, for g, x in [0, 1].
double profile_beta(double gamma, double x);

/// int_0^1 dg / (1 + k g^2) = atan(sqrt k) / sqrt k, k > 0.
double profile_gamma(double k);

double ahmed_integrand(double x);

struct ChainStep {
  std::string id;
  std::string description;
  std::size_t dimension = 0;
  double computed = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  double err_est = 0.0;
  double tolerance = 0.0;
  std::size_t neval = 0;
  bool converged = true;
  bool pass = false;
  std::string anchor;
};

/// Consistency check between two independently computed quantities.
struct ChainCheck {
  std::string id;
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct ChainTolerances {
  // Pass thresholds on each step's residual.
  double s0 = 1e-8;
  double s1 = 1e-5;
  double s2 = 1e-7;
  double s3 = 1e-9;
  double s4 = 1e-10;
  double s5 = 1e-10;
  // Absolute quadrature tolerances by dimension (rel = 0 above 1-D).
  Tolerance quad_1d{1e-12, 1e-12};
  double quad_2d = 1e-12;
  double quad_3d = 1e-10;
  double quad_4d = 1e-7;
};

struct ChainReport {
  std::vector<ChainStep> steps;
  std::vector<ChainCheck> checks;
  ChainTolerances tolerances;
  bool all_pass = false;
};

ChainReport run_chain(const ChainTolerances& tol = {});

}  // namespace quadid
