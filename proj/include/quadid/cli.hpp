#pragma once

// Command-line front end. Commands return a Report; run() parses arguments,
// prints the report as text or JSON and maps the outcome to an exit code.
//
// JSON report:
//   {command, params, steps: [{id, dim, computed, reference, residual, neval,
//    converged, anchor}], all_pass, wall_ms}
// chain reports also carry checks: [{id, lhs, rhs, residual, bound, pass}].

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadid/chain.hpp"
#include "quadid/quad1d.hpp"

namespace quadid::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kEvalError = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportRow {
  std::string id;
  std::size_t dim = 0;
  double computed = 0.0;
  double reference = 0.0;
  double residual = 0.0;
  std::size_t neval = 0;
  bool converged = false;
  std::string anchor;
};

struct Report {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<ReportRow> steps;
  std::vector<ChainCheck> checks;
  bool all_pass = false;
  double wall_ms = 0.0;
};

/// Overrides for the default tolerance of a command.
struct TolOverrides {
  std::optional<double> abs_tol;
  std::optional<double> rel_tol;
  std::optional<std::size_t> max_evals;  // per one-dimensional pass

  Tolerance apply(Tolerance base) const;
};

struct VerifyOptions {
  std::string kind;  // f1 | f2 | power
  std::string g;
  std::optional<std::size_t> n;
  std::string alpha = "1";  // number or "inf"
  TolOverrides tol;
};

std::string cmd_list();
Report cmd_eval(const std::string& name, const TolOverrides& tol = {});
Report cmd_verify(const VerifyOptions& opts);
Report cmd_chain(const ChainTolerances& tol = {});

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadid::cli
