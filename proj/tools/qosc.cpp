// Command line front end: verify, solve, rep.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qosc/braiding_search.hpp"
#include "qosc/errors.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/reps.hpp"
#include "qosc/suites.hpp"

using namespace qosc;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << "\n";
}

Subgroup parse_subgroup(const std::string& s) {
  if (s == "full") return Subgroup::Full;
  if (s == "A") return Subgroup::A;
  if (s == "B") return Subgroup::B;
  throw UsageError("--subgroup must be full, A or B");
}

struct VerifyArgs {
  std::string scope = "all", subgroup, Q1, q, json;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  const auto scope = parse_scope(a.scope);
  if (!scope) throw UsageError("unknown scope '" + a.scope + "'");
  opt.scope = *scope;
  if (!a.subgroup.empty()) opt.subgroup = parse_subgroup(a.subgroup);
  std::optional<double> q;
  if (!a.q.empty()) {
    try {
      q = std::stod(a.q);
    } catch (const std::exception&) {
      throw UsageError("--q expects a number");
    }
    opt.points.push_back("q = " + a.q);
  }
  if (a.Q1 == "generic") {
    opt.q1 = Q1Mode::Generic;
  } else if (a.Q1 == "q2" || a.Q1 == "q^2") {
    opt.q1 = Q1Mode::AtQ2;
  } else if (!a.Q1.empty()) {
    // a number selects the matching exact mode; identities over Q(q, Q1)
    // hold at every point where they are defined
    double v;
    try {
      v = std::stod(a.Q1);
    } catch (const std::exception&) {
      throw UsageError("--Q1 expects a number, 'generic' or 'q2'");
    }
    if (!q) throw UsageError("a numeric --Q1 needs --q");
    opt.q1 = std::abs(v - *q * *q) < 1e-12 * std::max(1.0, v) ? Q1Mode::AtQ2 : Q1Mode::Generic;
    opt.points.push_back("Q1 = " + a.Q1);
  }
  const VerificationReport r = run_verify(opt);
  std::cout << r.text();
  write_json(a.json, r.json(a.timing));
  return r.ok() ? kPass : kFail;
}

struct SolveArgs {
  double q = 1.3;
  std::uint64_t seed = 7;
  int starts = 200;
  std::string json;
};

int cmd_solve(const SolveArgs& a) {
  SolverOptions opt;
  opt.q0 = a.q;
  opt.seed = a.seed;
  opt.starts = a.starts;
  SolveReport r;
  try {
    r = solve_braidings_numeric(oscillator_system(), opt);
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  }
  nlohmann::json sols = nlohmann::json::array();
  std::cout << "solve q0 = " << a.q << "  seed " << a.seed << "  starts " << a.starts << "\n";
  std::cout << r.converged_starts << " starts converged, " << r.solutions.size() << " distinct solutions\n";
  for (const auto& s : r.solutions) {
    std::cout << "  " << s.label << "  residual " << s.residual << "  nullity " << s.nullity << "\n    C =";
    std::vector<double> c(s.c.data(), s.c.data() + 14);
    for (double x : c) std::cout << " " << x;
    std::cout << "\n";
    sols.push_back({{"label", s.label}, {"residual", s.residual}, {"nullity", s.nullity}, {"C", c}});
  }
  write_json(a.json, {{"q0", a.q}, {"seed", a.seed}, {"starts", a.starts},
                      {"converged_starts", r.converged_starts}, {"solutions", sols}});
  return kPass;
}

struct RepArgs {
  std::string paramfile, json;
};

int cmd_rep(const RepArgs& a) {
  std::ifstream f(a.paramfile);
  if (!f) throw UsageError("cannot read " + a.paramfile);
  RepParams p;
  try {
    p = rep_params_from_json(nlohmann::json::parse(f));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("parameter file: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  nlohmann::json out{{"subgroup", subgroup_name(p.subgroup)}, {"q", p.q}, {"Q1", p.Q1}, {"dim", p.dim}};
  TruncatedRep rep;
  try {
    rep = p.subgroup == Subgroup::A ? build_rep_A(p.as_A()) : build_rep_B(p.as_B());
  } catch (const InvalidParams& e) {
    std::cout << "invalid parameters: " << e.what() << "\n";
    out["error"] = std::string("InvalidParams: ") + e.what();
    write_json(a.json, out);
    return kFail;
  } catch (const InadmissibleParams& e) {
    std::cout << "inadmissible parameters: " << e.what() << "\n";
    out["error"] = std::string("InadmissibleParams: ") + e.what();
    write_json(a.json, out);
    return kFail;
  }
  const RepReport r = verify_rep(rep);
  std::cout << "subgroup " << subgroup_name(p.subgroup) << " rep, dim " << rep.dim() << ", interior ["
            << rep.lower_mask << ", " << rep.dim() - rep.upper_mask << ")\n";
  std::cout << "hermitian: " << (r.hermitian ? "yes" : "no") << "\n";
  for (const auto& x : r.relations)
    std::cout << "  " << x.relation << "  residual " << x.residual << " at (" << x.row << ", " << x.col << ")\n";
  std::cout << "max residual " << r.max_residual() << (r.ok() ? "  PASS" : "  FAIL") << "\n";
  out["report"] = rep_report_json(r);
  bool ok = r.ok();
  if (p.subgroup == Subgroup::B) {
    const CasimirReport c = casimir_check(rep, p.as_B());
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& chk : c.checks()) {
      std::cout << (chk.status == Status::Pass ? "PASS " : chk.status == Status::Fail ? "FAIL " : "INFO ") << chk.id
                << "  [" << chk.detail << "]\n";
      cj.push_back({{"id", chk.id}, {"anchor", chk.anchor}, {"status", status_name(chk.status)}, {"detail", chk.detail}});
    }
    out["casimir"] = {{"scalar", c.scalar},
                      {"is_scalar", c.is_scalar},
                      {"max_commutator", c.max_commutator},
                      {"direct_value", c.direct_value},
                      {"printed_value", c.printed_value},
                      {"printed_value_disagrees", c.printed_value_disagrees},
                      {"checks", cj}};
    // scalarity is only expected where the symbolic check says C is central
    if (std::abs(p.Q1 - 1.0) < 1e-12) ok = ok && c.is_scalar && c.max_commutator <= kRepTolerance;
  }
  write_json(a.json, out);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of the deformed oscillator, its covariance quantum group and braided structure"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the symbolic verification suites");
  verify->add_option("--scope", va.scope, "all | qybe | rtt | covariance | braided | delta | star");
  verify->add_option("--subgroup", va.subgroup, "full | A | B");
  verify->add_option("--Q1", va.Q1, "number, 'generic' or 'q2'");
  verify->add_option("--q", va.q, "numeric q (recorded; selects the Q1 = q^2 mode with a numeric --Q1)");
  verify->add_option("--json", va.json, "write the machine report here");
  verify->add_flag("--timing", va.timing, "include wall time in the JSON report");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "multi-start numeric search for braiding matrices at Q1 = q^2");
  solve->add_option("--q", sa.q, "q0 > 0, q0 != 1");
  solve->add_option("--seed", sa.seed, "random seed");
  solve->add_option("--starts", sa.starts, "number of starts");
  solve->add_option("--json", sa.json, "write the machine report here");

  RepArgs ra;
  auto* rep = app.add_subcommand("rep", "build and check a truncated subgroup representation");
  rep->add_option("--paramfile", ra.paramfile, "JSON {subgroup, q, Q1, A, B, C, D, dim}")->required();
  rep->add_option("--json", ra.json, "write the residual report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (*verify) return cmd_verify(va);
    if (*solve) return cmd_solve(sa);
    if (*rep) return cmd_rep(ra);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
