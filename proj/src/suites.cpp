#include "qosc/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qosc/braided.hpp"
#include "qosc/braiding_search.hpp"
#include "qosc/exact_linalg.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/reps.hpp"
#include "qosc/rmatrix.hpp"

namespace qosc {

namespace {

using Checks = std::vector<CheckResult>;

void append(Checks& out, Checks more, const std::string& prefix = {}) {
  for (auto& c : more) {
    c.id = prefix + c.id;
    out.push_back(std::move(c));
  }
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

struct GroupSel {
  Subgroup s;
  bool at_q2;
  std::string tag() const { return std::string("qgroup.") + (s == Subgroup::Full ? "full" : subgroup_name(s)) + (at_q2 ? ".q2" : "") + "."; }
};

std::vector<GroupSel> groups(const VerifyOptions& opt) {
  auto mode = [&](Subgroup s) {
    if (opt.q1 == Q1Mode::Generic) return false;
    if (opt.q1 == Q1Mode::AtQ2) return true;
    return s == Subgroup::A;  // the subgroup A relations need Q1 = q^2
  };
  if (opt.subgroup) return {{*opt.subgroup, mode(*opt.subgroup)}};
  return {{Subgroup::Full, mode(Subgroup::Full)}, {Subgroup::A, mode(Subgroup::A)}, {Subgroup::B, mode(Subgroup::B)}};
}

// ---- R matrices and the covector algebra ----

Checks qybe_suite() {
  return {check("qybe.R", "R12 R13 R23 = R23 R13 R12 for the printed R", qybe_check(paper_R()))};
}

Checks rmatrix_suite() {
  Checks out;
  const RewriteSystem osc = oscillator_system();
  const ConfluenceReport cr = check_confluence(osc);
  out.push_back(check("oscillator.confluent", "a a* = Q1 a* a + q^2N, a q^N = q q^N a, q^N a* = q a* q^N is a PBW presentation",
                      cr.ok()));

  const BigRMatrix r = paper_R(), rp = paper_Rprime();
  const FieldElem q = FieldElem::q(), Q1 = FieldElem::Q1();
  bool prop = true;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) prop = prop && rp(i, j) == q * q / Q1 * r(i, j);
  out.push_back(check("rprime.proportional", "R' = q^2 Q1^-1 R", prop));
  const RprimeReport rr = rprime_conditions(r, rp);
  out.push_back(check("rprime.ybe", "R'12 R'13 R'23 = R'23 R'13 R'12", rr.ybe));
  out.push_back(check("rprime.mixed-left", "R'12 R'13 R23 = R23 R'13 R'12", rr.mixed_left));
  out.push_back(check("rprime.mixed-right", "R12 R'13 R'23 = R'23 R'13 R12", rr.mixed_right));
  out.push_back(check("rprime.hecke", "(P R' + 1)(P R - 1) = 0", rr.hecke));
  out.push_back(check("rprime.fifth-swapped", "R21 R' = R'21 R", rr.fifth_swapped));
  const bool printed_q2 = rprime_conditions(substitute_Q1_q2(r), substitute_Q1_q2(rp)).fifth_printed;
  out.push_back({"rprime.fifth-printed", "R'21 R = R21 R as printed", Status::Info,
                 std::string("generic: ") + (rr.fifth_printed ? "holds" : "fails") + "; at Q1 = q^2: " +
                     (printed_q2 ? "holds" : "fails")});

  out.push_back(check("triangular.at-q2", "R^-1 = R21 at Q1 = q^2", triangularity_check(substitute_Q1_q2(r))));
  out.push_back(check("triangular.generic-fails", "R is not triangular for generic Q1", !triangularity_check(r)));

  const ConstraintSet cs = covector_constraints(r, osc);
  out.push_back(check("covector.constraints", "x1 x2 = x2 x1 R is consistent with the oscillator", cs.empty(),
                      cs.empty() ? "" : cs.front().origin));
  const FMat rows = covector_relation_rows(r);
  FMat stacked(rows.rows() + 3, 9);
  stacked << rows, oscillator_relation_rows(osc);
  out.push_back(check("covector.ideal", "the covector relations span exactly the oscillator relations",
                      rank(rows) == 3 && rank(stacked) == 3,
                      "rank " + std::to_string(rank(rows)) + ", joint rank " + std::to_string(rank(stacked))));
  int caught = 0;
  for (const auto& [i, j] : r_ansatz_slots()) {
    BigRMatrix m = r;
    m(i, j) = m(i, j).is_zero() ? FieldElem(1) : FieldElem(2) * m(i, j);
    caught += !covector_constraints(m, osc).empty();
  }
  out.push_back(check("covector.mutation", "every single-slot change of the R ansatz breaks consistency",
                      caught == static_cast<int>(r_ansatz_slots().size()),
                      std::to_string(caught) + "/" + std::to_string(r_ansatz_slots().size()) + " detected"));
  return out;
}

// ---- quantum matrix group ----

Checks printed_implied(const QuantumGroup& g, const std::string& prefix) {
  Checks out;
  const RewriteSystem& rs = g.system;
  int ok = 0, n = 0;
  std::string first_bad;
  for (const auto& line : printed_subgroup_relations(g.subgroup)) {
    const auto eq = line.find('=');
    const NCPoly rel = rs.parse(line.substr(0, eq)) - rs.parse(line.substr(eq + 1));
    const bool good = rs.normal_form(rel).is_zero() && rs.normal_form(star(rel, rs)).is_zero();
    ok += good;
    ++n;
    if (!good && first_bad.empty()) first_bad = line;
  }
  out.push_back(check(prefix + "printed", "the printed subgroup relations and their stars hold", ok == n,
                      ok == n ? std::to_string(n) + " relations" : first_bad));
  const ConfluenceReport cr = check_confluence(rs);
  out.push_back(check(prefix + "confluent", "the subgroup relations form a PBW presentation", cr.ok()));
  out.push_back(check(prefix + "consistent", "setting the removed entries to zero is consistent",
                      g.obstructions.empty(),
                      g.obstructions.empty() ? "" : rs.str(g.obstructions.front())));
  return out;
}

Checks rtt_suite(const VerifyOptions& opt) {
  Checks out;
  if (!opt.subgroup || *opt.subgroup == Subgroup::Full) {
    const RttResult rtt = rtt_generate_relations(paper_R());
    out.push_back(check("rtt.rank", "R t1 t2 = t2 t1 R gives 36 independent relations", rtt.rank == 36,
                        "rank " + std::to_string(rtt.rank)));
    const MatchReport m = match_printed_relations(rtt);
    std::string detail = std::to_string(m.rules.size()) + " rules";
    if (!m.unparsable.empty()) detail += "; repaired by derivation: " + m.unparsable.front();
    if (!m.unmatched_printed.empty()) detail += "; unmatched: " + m.unmatched_printed.front();
    out.push_back(check("rtt.matching", "derived relations match the printed list and its stars", m.bijective(), detail));
    out.push_back(check("rtt.confluent", "the quantum matrix relations form a PBW presentation",
                        check_confluence(rtt.system).ok()));
  }
  for (const auto& sel : groups(opt)) {
    const QuantumGroup g = quantum_group(sel.s, sel.at_q2);
    append(out, coproduct_checks(g), sel.tag());
    append(out, counit_checks(g), sel.tag());
    if (sel.s != Subgroup::Full) append(out, printed_implied(g, ""), sel.tag());
  }
  return out;
}

Checks covariance_suite(const VerifyOptions& opt) {
  Checks out;
  for (const auto& sel : groups(opt)) {
    const CovarianceReport r = covariance_check(sel.s, sel.at_q2);
    std::string detail;
    if (!r.obstructions.empty()) {
      detail = "obstruction: " + quantum_group(sel.s, sel.at_q2).system.str(r.obstructions.front());
    } else {
      for (const auto& s : r.rendered)
        if (!s.empty() && s != "0") detail = s;
    }
    const std::string id = std::string("covariance.") + (sel.s == Subgroup::Full ? "full" : subgroup_name(sel.s)) +
                           (sel.at_q2 ? ".q2" : ".generic");
    out.push_back(check(id, "x' = x t preserves the oscillator relations", r.ok(), detail));
  }
  if (!opt.subgroup && opt.q1 == Q1Mode::Default) {
    // subgroup A for generic Q1: the failure must be exactly the Q1 = q^2 condition
    const CovarianceReport r = covariance_check(Subgroup::A, false);
    bool anticipated = !r.ok() && !r.obstructions.empty();
    for (const auto& ob : r.obstructions)
      for (const auto& [w, c] : ob.terms()) anticipated = anticipated && at_Q1_eq_q2(c).is_zero();
    out.push_back(check("covariance.A.generic-obstructed", "consistency of the subgroup A relations requires Q1 = q^2",
                        anticipated,
                        r.obstructions.empty() ? "" : quantum_group(Subgroup::A, false).system.str(r.obstructions.front())));
  }
  return out;
}

Checks delta_suite(const VerifyOptions& opt) {
  Checks out;
  for (const auto& sel : groups(opt)) {
    const QuantumGroup g = quantum_group(sel.s, sel.at_q2);
    append(out, inverse_check(g), sel.tag());
    append(out, delta_checks(g), sel.tag());
    append(out, antipode_square_check(g), sel.tag());
  }
  return out;
}

Checks star_suite(const VerifyOptions& opt) {
  Checks out;
  for (const auto& sel : groups(opt)) {
    const QuantumGroup g = quantum_group(sel.s, sel.at_q2);
    const auto bad = star_closure_failures(g.system);
    out.push_back(check(sel.tag() + "star-closed", "the relations are closed under *", bad.empty(),
                        bad.empty() ? "" : bad.front()));
  }
  if (!opt.subgroup) append(out, braided_star_check(Braiding(paper_braided())), "braided.generic.");
  return out;
}

BraidedStructure template_structure(const std::string& name) {
  for (const auto& t : braiding_templates())
    if (t.name == name) return braided_at_q2(rprime_ansatz<FieldElem>(t.c), name);
  throw std::logic_error("unknown braiding template " + name);
}

Checks braided_suite() {
  Checks out;
  const Braiding paper(paper_braided());
  append(out, braiding_list_check(paper), "braiding.");
  append(out, braided_axiom_suite(paper), "braided.generic.");
  append(out, braided_coproduct_homomorphism_check(paper), "braided.generic.");
  append(out, relation_tensor_check(paper), "braided.generic.");
  append(out, involutivity_info(paper), "braided.generic.");
  const std::pair<const char*, const char*> tmpl[] = {
      {"generic R' at Q1=q^2", "q2"}, {"sol1", "sol1"}, {"sol2", "sol2"}, {"sol3", "sol3"}};
  for (const auto& [name, tag] : tmpl) {
    const Braiding br(template_structure(name));
    const std::string prefix = std::string("braided.") + tag + ".";
    append(out, braided_axiom_suite(br), prefix);
    append(out, braided_coproduct_homomorphism_check(br), prefix);
    append(out, braided_star_check(br), prefix);
    const auto bad = verify_candidate_exact(oscillator_system(), rprime_ansatz_values(br.structure().rprime));
    out.push_back(check(prefix + "conditions", "R' conditions and oscillator compatibility hold exactly", bad.empty(),
                        bad.empty() ? "" : bad.front()));
  }
  return out;
}

// ---- representations ----

Checks reps_suite() {
  Checks out;
  RepParamsA a;
  a.A = 1.0;
  a.q = 1.2;
  a.B = std::sqrt(1.36);
  a.C = 0.7;
  a.D = 0.5;
  a.dim = 20;
  const RepReport ra = verify_rep(build_rep_A(a));
  out.push_back(check("rep.A.relations", "the seven-parameter ladder rep satisfies the subgroup A relations", ra.ok(),
                      "max residual " + num(ra.max_residual())));
  RepParamsA bad = a;
  bad.B = 1.0;
  bool rejected = false;
  try {
    build_rep_A(bad);
  } catch (const InvalidParams&) {
    rejected = true;
  }
  out.push_back(check("rep.A.constraint", "|B|^2 = A^2 + q^2 |D|^2 is enforced", rejected));

  RepParamsB b;
  b.A = 1.0;
  b.B = 0.3;
  b.q = 1.2;
  b.Q1 = 1.5;
  b.dim = 24;
  const RepReport rb = verify_rep(build_rep_B(b));
  out.push_back(check("rep.B.relations", "the five-parameter ladder rep satisfies the subgroup B relations", rb.ok(),
                      "max residual " + num(rb.max_residual())));
  double worst = 0.0;
  for (int n = 0; n < 25; ++n)
    worst = std::max(worst, std::abs(k2_squared_closed(b, n) - k2_squared_recursive(b, n)) /
                                std::max(1.0, k2_squared_scale(b, n)));
  out.push_back(check("rep.B.closed-form", "closed form for |k2,n|^2 solves K2 K2* = Q1 K2* K2 - K1* K1 + L2^2",
                      worst <= kRepTolerance, "max deviation " + num(worst)));
  RepParamsB pole = b;
  pole.Q1 = b.q * b.q;
  const RepReport rpole = verify_rep(build_rep_B(pole));
  out.push_back(check("rep.B.pole", "at Q1 = q^2 the recursion builds the rep", rpole.ok(),
                      "max residual " + num(rpole.max_residual())));

  RepParamsB c = b;
  c.Q1 = 1.0;
  append(out, casimir_check(build_rep_B(c), c).checks());
  append(out, uqsu2_check());
  return out;
}

}  // namespace

std::optional<Scope> parse_scope(const std::string& s) {
  static const std::pair<const char*, Scope> names[] = {{"all", Scope::All},       {"qybe", Scope::Qybe},
                                                        {"rtt", Scope::Rtt},       {"covariance", Scope::Covariance},
                                                        {"braided", Scope::Braided}, {"delta", Scope::Delta},
                                                        {"star", Scope::Star}};
  for (const auto& [n, v] : names)
    if (s == n) return v;
  return std::nullopt;
}

const char* scope_name(Scope s) {
  switch (s) {
    case Scope::All: return "all";
    case Scope::Qybe: return "qybe";
    case Scope::Rtt: return "rtt";
    case Scope::Covariance: return "covariance";
    case Scope::Braided: return "braided";
    case Scope::Delta: return "delta";
    default: return "star";
  }
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::json(bool timing) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks)
    rows.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"detail", c.detail}});
  nlohmann::json j{{"suite", suite},
                   {"points", points},
                   {"passed", count(Status::Pass)},
                   {"failed", count(Status::Fail)},
                   {"info", count(Status::Info)},
                   {"ok", ok()},
                   {"checks", rows}};
  if (timing) j["wall_time_s"] = seconds;
  return j;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "suite " << suite;
  for (const auto& p : points) os << "  [" << p << "]";
  os << "\n";
  for (const auto& c : checks) {
    os << (c.status == Status::Pass ? "PASS " : c.status == Status::Fail ? "FAIL " : "INFO ") << c.id << "  -- "
       << c.anchor;
    if (!c.detail.empty()) {
      // long residuals are kept whole in the JSON report
      constexpr std::size_t kMax = 240;
      os << "  [" << (c.detail.size() > kMax ? c.detail.substr(0, kMax) + " ..." : c.detail) << "]";
    }
    os << "\n";
  }
  os << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Info)
     << " informational in " << num(seconds) << " s\n";
  return os.str();
}

const std::vector<CoverageItem>& coverage_map() {
  static const std::vector<CoverageItem> items{
      {"oscillator relations", "oscillator."},
      {"covariance under x' = x t", "covariance."},
      {"RTT relations of the quantum matrix", "rtt."},
      {"quantum Yang-Baxter equation", "qybe."},
      {"covector algebra x1 x2 = x2 x1 R", "covector."},
      {"ansatz for R", "covector.mutation"},
      {"braided Hopf axioms", "braided.generic.axiom."},
      {"braided *-structure", "braided.generic.star."},
      {"braided covector Hopf structure", "braided.generic.coproduct."},
      {"conditions on R'", "rprime."},
      {"explicit R and R', R' = q^2 Q1^-1 R", "rprime.proportional"},
      {"triangularity at Q1 = q^2", "triangular."},
      {"quantum matrix relations as printed", "rtt.matching"},
      {"Hopf structure of the quantum matrix", "qgroup.full.coproduct."},
      {"inverse matrix", "qgroup.full.inverse."},
      {"quasi-determinant delta", "qgroup.full.delta."},
      {"explicit braidings", "braiding.psi["},
      {"further braidings at Q1 = q^2", "braided.sol"},
      {"seven-parameter subgroup relations", "qgroup.A.q2.printed"},
      {"seven-parameter subgroup inverse and delta", "qgroup.A.q2.delta."},
      {"seven-parameter representation and |B|^2 = A^2 + q^2 |D|^2", "rep.A."},
      {"five-parameter subgroup relations", "qgroup.B.printed"},
      {"five-parameter subgroup inverse and delta", "qgroup.B.delta."},
      {"five-parameter representation", "rep.B."},
      {"quadratic Casimir", "casimir."},
      {"U_q(su(2)) identification and Hopf structure", "uqsu2."},
  };
  return items;
}

std::vector<CheckResult> coverage_audit(const std::vector<CheckResult>& checks) {
  std::vector<CheckResult> out;
  for (const auto& item : coverage_map()) {
    const auto n = std::count_if(checks.begin(), checks.end(),
                                 [&](const CheckResult& c) { return c.id.rfind(item.prefix, 0) == 0; });
    out.push_back(check("coverage." + item.prefix, "covered: " + item.statement, n > 0, std::to_string(n) + " checks"));
  }
  return out;
}

const std::vector<std::string>& printed_subgroup_relations(Subgroup s) {
  static const std::vector<std::string> a{
      "K1 K1* = K1* K1",       "K1 K2 = (q^-1) K2 K1", "K1 K2* = (q) K2* K1",
      "K1 K3 = (q^-2) K3 K1",  "K1 K3* = (q^2) K3* K1", "K1 L2 = L2 K1",
      "K2 K2* = (q^2) K2* K2 + (q^2) K3* K3 - K1* K1 + L2 L2",
      "K2 K3 = (q^-1) K3 K2",  "K2 K3* = (q^3) K3* K2", "K2 L2 = (q) L2 K2",
      "K3 K3* = (q^4) K3* K3", "K3 L2 = (q^2) L2 K3"};
  static const std::vector<std::string> b{"K1 K1* = K1* K1",
                                          "K1 K2 = (q Q1^-1) K2 K1",
                                          "K1 K2* = (q^-1 Q1) K2* K1",
                                          "K1 L2 = L2 K1",
                                          "K2 K2* = (Q1) K2* K2 - K1* K1 + L2 L2",
                                          "K2 L2 = (q) L2 K2"};
  static const std::vector<std::string> none;
  return s == Subgroup::A ? a : s == Subgroup::B ? b : none;
}

VerificationReport run_verify(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = scope_name(opt.scope);
  if (opt.subgroup) rep.suite += std::string(" subgroup ") + subgroup_name(*opt.subgroup);
  rep.points = opt.points;
  rep.points.push_back(opt.q1 == Q1Mode::Generic ? "Q1 generic"
                       : opt.q1 == Q1Mode::AtQ2  ? "Q1 = q^2"
                                                 : "Q1 generic; subgroup A at Q1 = q^2");
  Checks& out = rep.checks;
  const Scope s = opt.scope;
  const bool all = s == Scope::All;
  if (s == Scope::Qybe) append(out, qybe_suite());
  if (all) {
    append(out, qybe_suite());
    append(out, rmatrix_suite());
  }
  if (all || s == Scope::Rtt) append(out, rtt_suite(opt));
  if (all || s == Scope::Covariance) append(out, covariance_suite(opt));
  if (all || s == Scope::Delta) append(out, delta_suite(opt));
  if (all || s == Scope::Star) append(out, star_suite(opt));
  if (all || s == Scope::Braided) append(out, braided_suite());
  if (all && !opt.subgroup) append(out, reps_suite());
  if (all && !opt.subgroup && opt.q1 == Q1Mode::Default) append(out, coverage_audit(out));

  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].id == out[i - 1].id) throw std::logic_error("duplicate check id " + out[i].id);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace qosc
