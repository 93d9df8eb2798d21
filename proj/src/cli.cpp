#include "quadid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadid/cubature.hpp"
#include "quadid/expr.hpp"
#include "quadid/reduction.hpp"
#include "quadid/registry.hpp"

namespace quadid::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxVerifyOrder = kMaxCubatureDim;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

nlohmann::ordered_json tol_json(const Tolerance& t) {
  return {{"abs", t.abs_tol}, {"rel", t.rel_tol}, {"max_panels", t.max_panels}};
}

double parse_alpha(const std::string& text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--alpha must be a positive number or 'inf', got '" + text + "'");
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError("--alpha must be a positive number or 'inf', got '" + text + "'");
  }
  return v;
}

// Reports domain errors at quadrature nodes as evaluation errors at x.
Integrand1 expr_integrand(const expr::Expr& e) {
  return [e](double x) {
    try {
      return e.eval(x);
    } catch (const expr::DomainError& ex) {
      std::ostringstream msg;
      msg.precision(17);
      msg << ex.what() << " at x = " << x;
      throw EvaluationError(msg.str(), x);
    }
  };
}

std::string registry_names() {
  std::string names;
  for (const NamedIntegral& n : registry()) {
    if (!names.empty()) names += ", ";
    names += n.name;
  }
  return names;
}

}  // namespace

Tolerance TolOverrides::apply(Tolerance base) const {
  if (abs_tol) base.abs_tol = *abs_tol;
  if (rel_tol) base.rel_tol = *rel_tol;
  if (max_evals) base.max_panels = std::max<std::size_t>(1, *max_evals / kPanelEvals);
  try {
    base.validate();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  return base;
}

std::string cmd_list() {
  std::ostringstream os;
  for (const NamedIntegral& n : registry()) {
    os << n.name << "\n"
       << "  dim:         " << n.dim << "\n"
       << "  definition:  " << n.definition << "\n"
       << "  closed form: " << n.closed_form << " = " << fmt_value(n.reference) << "\n";
  }
  return os.str();
}

Report cmd_eval(const std::string& name, const TolOverrides& overrides) {
  const NamedIntegral* entry = find_integral(name);
  if (entry == nullptr) {
    throw UsageError("unknown integral '" + name + "'; valid names: " + registry_names());
  }
  const Tolerance tol = overrides.apply(entry->default_tol);
  const auto start = Clock::now();
  const QuadResult r = entry->evaluate(tol);

  Report rep;
  rep.command = "eval";
  rep.params = {{"name", name},
                {"tolerance", tol_json(tol)},
                {"closed_form", entry->closed_form},
                {"err_est", r.err_est}};
  ReportRow row{entry->name,        entry->dim, r.value, entry->reference,
                std::abs(r.value - entry->reference), r.neval, r.converged, entry->anchor};
  rep.all_pass = r.converged && row.residual <= r.err_est + tol.target(entry->reference);
  rep.steps.push_back(std::move(row));
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

Report cmd_verify(const VerifyOptions& opts) {
  if (opts.kind != "f1" && opts.kind != "f2" && opts.kind != "power") {
    throw UsageError("verify kind must be f1, f2 or power, got '" + opts.kind + "'");
  }
  if (opts.g.empty()) throw UsageError("--g <expr> is required");
  const expr::Expr g_expr = expr::parse(opts.g);  // SyntaxError surfaces as-is
  const Integrand1 g = expr_integrand(g_expr);
  const double alpha = parse_alpha(opts.alpha);

  std::size_t n = opts.n.value_or(opts.kind == "power" ? 3 : 2);
  if (opts.kind == "f1" && n != 2) throw UsageError("f1 is the n = 2 reduction; drop --n");
  if (n < 2 || n > kMaxVerifyOrder) {
    throw UsageError("--n must lie in [2, " + std::to_string(kMaxVerifyOrder) + "]");
  }
  if (opts.kind != "power" && std::isinf(alpha)) {
    throw UsageError("alpha = inf is only supported by the power construction");
  }

  // Reduced side sets the default: tighter for low dimensions.
  double abs_default = n == 2 ? 1e-12 : n == 3 ? 1e-10 : 1e-9;
  if (std::isinf(alpha) || n > 4) abs_default = 1e-7;
  const Tolerance tol = opts.tol.apply(Tolerance{abs_default, 0.0});

  const auto start = Clock::now();
  QuadResult direct;
  ReducedIntegrand reduced = [&] {
    if (opts.kind == "f1") {
      direct = integrate_nd(product_integrand(g, 2), Box::cube(2, alpha), tol);
      return reduce_f1(product_integrand(g, 2), alpha);
    }
    if (opts.kind == "f2") {
      direct = integrate_nd(product_integrand(g, n), Box::cube(n, alpha), tol);
      return reduce_f2(product_integrand(g, n), n, alpha);
    }
    direct = power_of_integral(g, n, alpha, tol);
    return power_integrand({g, n, alpha});
  }();
  const IdentityReport id = verify_identity(direct, reduced, tol);

  Report rep;
  rep.command = "verify";
  rep.params = {{"kind", opts.kind},
                {"g", expr::print(g_expr)},
                {"n", n},
                {"alpha", std::isinf(alpha) ? nlohmann::ordered_json("inf")
                                            : nlohmann::ordered_json(alpha)},
                {"tolerance", tol_json(tol)},
                {"multiplier", id.multiplier},
                {"direct", id.direct},
                {"direct_err", id.direct_err},
                {"reduced", id.reduced},
                {"reduced_err", id.reduced_err},
                {"threshold", id.threshold},
                {"inconclusive", id.inconclusive}};
  const std::string anchor = opts.kind == "f1"   ? "(F1)"
                             : opts.kind == "f2" ? "(F2)"
                                                 : "(∫₀^α g(x) dx)ⁿ = n! ∫…";
  rep.steps.push_back({"identity", n, id.reduced_total, id.direct, id.residual,
                       id.neval_direct + id.neval_reduced, !id.inconclusive, anchor});
  rep.all_pass = id.pass;
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

Report cmd_chain(const ChainTolerances& tol) {
  const auto start = Clock::now();
  const ChainReport chain = run_chain(tol);

  Report rep;
  rep.command = "chain";
  rep.params = {{"tolerances",
                 {{"S0", tol.s0}, {"S1", tol.s1}, {"S2", tol.s2}, {"S3", tol.s3},
                  {"S4", tol.s4}, {"S5", tol.s5}}},
                {"quadrature",
                 {{"1d", tol_json(tol.quad_1d)},
                  {"2d", tol.quad_2d},
                  {"3d", tol.quad_3d},
                  {"4d", tol.quad_4d}}}};
  for (const ChainStep& s : chain.steps) {
    rep.steps.push_back({s.id, s.dimension, s.computed, s.reference, s.residual, s.neval,
                         s.converged, s.anchor});
  }
  rep.checks = chain.checks;
  rep.all_pass = chain.all_pass;
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["params"] = r.params;
  j["steps"] = nlohmann::ordered_json::array();
  for (const ReportRow& s : r.steps) {
    j["steps"].push_back({{"id", s.id},
                          {"dim", s.dim},
                          {"computed", s.computed},
                          {"reference", s.reference},
                          {"residual", s.residual},
                          {"neval", s.neval},
                          {"converged", s.converged},
                          {"anchor", s.anchor}});
  }
  if (!r.checks.empty()) {
    j["checks"] = nlohmann::ordered_json::array();
    for (const ChainCheck& c : r.checks) {
      j["checks"].push_back({{"id", c.id},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"residual", c.residual},
                             {"bound", c.bound},
                             {"pass", c.pass}});
    }
  }
  j["all_pass"] = r.all_pass;
  j["wall_ms"] = r.wall_ms;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %3s  %-24s %-24s %-10s %10s  %s\n", "id", "dim",
                "computed", "reference", "residual", "neval", "anchor");
  os << line;
  for (const ReportRow& s : r.steps) {
    std::snprintf(line, sizeof line, "%-16s %3zu  %-24s %-24s %-10s %10zu  %s%s\n",
                  s.id.c_str(), s.dim, fmt_value(s.computed).c_str(),
                  fmt_value(s.reference).c_str(), fmt_sci(s.residual).c_str(), s.neval,
                  s.anchor.c_str(), s.converged ? "" : "  [not converged]");
    os << line;
  }
  if (!r.checks.empty()) {
    os << "\nchecks\n";
    for (const ChainCheck& c : r.checks) {
      std::snprintf(line, sizeof line, "  %-10s residual %-10s bound %-10s %s\n", c.id.c_str(),
                    fmt_sci(c.residual).c_str(), fmt_sci(c.bound).c_str(),
                    c.pass ? "ok" : "FAIL");
      os << line;
    }
  }
  std::snprintf(line, sizeof line, "\n%s  (%.1f ms)\n", r.all_pass ? "PASS" : "FAIL", r.wall_ms);
  os << line;
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Numerical verification of the Gaussian-integral route to Ahmed's integral.\n"
      "Integrand expressions use x, numbers, pi, e, + - * / ^, unary minus and\n"
      "sin cos exp sqrt atan abs log; ^ is right-associative and binds tighter\n"
      "than unary minus (-x^2 = -(x^2))."};
  app.name("quadid");
  app.require_subcommand(1);

  auto add_tol = [](CLI::App* sub, double& abs_tol, double& rel_tol, std::size_t& max_evals) {
    sub->add_option("--abs", abs_tol, "absolute tolerance");
    sub->add_option("--rel", rel_tol, "relative tolerance");
    sub->add_option("--max-evals", max_evals,
                    "integrand evaluations per one-dimensional pass");
  };
  auto collect = [](CLI::App* sub, double abs_tol, double rel_tol, std::size_t max_evals) {
    TolOverrides t;
    if (sub->get_option("--abs")->count() > 0) t.abs_tol = abs_tol;
    if (sub->get_option("--rel")->count() > 0) t.rel_tol = rel_tol;
    if (sub->get_option("--max-evals")->count() > 0) t.max_evals = max_evals;
    return t;
  };

  CLI::App* list = app.add_subcommand("list", "list the named integrals");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a named integral");
  std::string name;
  bool eval_json = false;
  double eval_abs = 0, eval_rel = 0;
  std::size_t eval_max = 0;
  eval->add_option("name", name, "registry name (see list)")->required();
  add_tol(eval, eval_abs, eval_rel, eval_max);
  eval->add_flag("--json", eval_json, "emit a JSON report");

  CLI::App* verify = app.add_subcommand("verify", "verify a reduction identity for g(x)");
  VerifyOptions vopts;
  std::size_t vn = 0;
  bool verify_json = false;
  double v_abs = 0, v_rel = 0;
  std::size_t v_max = 0;
  verify->add_option("kind", vopts.kind, "f1, f2 or power")->required();
  verify->add_option("--g", vopts.g, "integrand expression g(x)")->required();
  CLI::Option* n_opt = verify->add_option("--n", vn, "power / dimension n (2..6)");
  verify->add_option("--alpha", vopts.alpha, "upper limit, a positive number or inf");
  add_tol(verify, v_abs, v_rel, v_max);
  verify->add_flag("--json", verify_json, "emit a JSON report");

  CLI::App* chain = app.add_subcommand("chain", "replay the Gaussian-to-Ahmed derivation");
  bool chain_json = false;
  double tol4d = ChainTolerances{}.quad_4d;
  chain->add_flag("--json", chain_json, "emit a JSON report");
  chain->add_option("--tol-4d", tol4d, "absolute quadrature tolerance of the 4-D step")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    Report rep;
    bool json = false;
    if (list->parsed()) {
      out << cmd_list();
      return kPass;
    }
    if (eval->parsed()) {
      rep = cmd_eval(name, collect(eval, eval_abs, eval_rel, eval_max));
      json = eval_json;
    } else if (verify->parsed()) {
      if (n_opt->count() > 0) vopts.n = vn;
      vopts.tol = collect(verify, v_abs, v_rel, v_max);
      rep = cmd_verify(vopts);
      json = verify_json;
    } else {
      ChainTolerances tol;
      tol.quad_4d = tol4d;
      rep = cmd_chain(tol);
      json = chain_json;
    }
    if (json) out << to_json(rep).dump(2) << "\n";
    else out << to_text(rep);
    return rep.all_pass ? kPass : kFail;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const expr::SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kEvalError;
  } catch (const expr::DomainError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kEvalError;
  }
}

}  // namespace quadid::cli
