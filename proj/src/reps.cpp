#include "qosc/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

using Mat = Eigen::MatrixXcd;

double ipow(double x, int n) { return std::pow(x, n); }

Mat zeros(int d) { return Mat::Zero(d, d); }

void add_star_partners(TruncatedRep& rep, std::initializer_list<const char*> names) {
  for (const char* n : names) rep.ops[std::string(n) + "*"] = rep.ops.at(n).adjoint();
}

double interior_max(const TruncatedRep& rep, const Mat& m, int* row = nullptr, int* col = nullptr) {
  double best = -1.0;
  for (int i = 0; i < m.rows(); ++i) {
    if (!rep.interior(i)) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (!rep.interior(j) || std::abs(m(i, j)) <= best) continue;
      best = std::abs(m(i, j));
      if (row) *row = i;
      if (col) *col = j;
    }
  }
  return std::max(best, 0.0);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

// ---- subgroup A ----

double rep_A_constraint(const RepParamsA& p) {
  return std::norm(p.B) - p.A * p.A - p.q * p.q * std::norm(p.D);
}

TruncatedRep build_rep_A(const RepParamsA& p) {
  if (p.dim < 4) throw InvalidParams("subgroup A rep needs dim >= 4");
  if (p.q <= 0) throw InvalidParams("q must be positive");
  const double scale = std::max({1.0, std::norm(p.B), p.A * p.A});
  if (std::abs(rep_A_constraint(p)) > 1e-12 * scale)
    throw InvalidParams("|B|^2 = A^2 + q^2 |D|^2 violated by " + fmt(rep_A_constraint(p)));

  TruncatedRep rep;
  rep.subgroup = Subgroup::A;
  rep.q = p.q;
  rep.Q1 = p.q * p.q;
  rep.n0 = p.n0;
  // K3 followed by K2 reaches three states down; raising reaches up the same.
  rep.lower_mask = 4;
  rep.upper_mask = 4;
  const int d = p.dim;
  Mat L2 = zeros(d), K1 = zeros(d), K2 = zeros(d), K3 = zeros(d);
  for (int i = 0; i < d; ++i) {
    const double qn = ipow(p.q, p.n0 + i);
    L2(i, i) = p.A * qn;
    K1(i, i) = p.B * qn;
    if (i >= 1) K2(i - 1, i) = p.C * qn;
    if (i >= 2) K3(i - 2, i) = p.D * qn;
  }
  rep.ops = {{"L2", L2}, {"K1", K1}, {"K2", K2}, {"K3", K3}};
  add_star_partners(rep, {"K1", "K2", "K3"});
  return rep;
}

// ---- subgroup B ----

double k1_B(const RepParamsB& p, int n) { return std::norm(p.B) * ipow(p.Q1 / p.q, 2 * n); }

double k2_squared_closed(const RepParamsB& p, int n) {
  const double q2 = p.q * p.q, r2 = (p.Q1 / p.q) * (p.Q1 / p.q);
  if (p.Q1 - q2 == 0.0 || p.Q1 - r2 == 0.0) throw EvalPole("Q1 = q^2 in the closed form for |k2,n|^2");
  return p.A * p.A * (ipow(p.Q1, n) - ipow(q2, n)) / (p.Q1 - q2) -
         std::norm(p.B) * (ipow(p.Q1, n) - ipow(r2, n)) / (p.Q1 - r2);
}

double k2_squared_recursive(const RepParamsB& p, int n) {
  const double A2 = p.A * p.A;
  double k = 0.0;
  if (n >= 0) {
    for (int m = 0; m < n; ++m) k = p.Q1 * k - k1_B(p, m) + A2 * ipow(p.q, 2 * m);
  } else {
    for (int m = -1; m >= n; --m) k = (k + k1_B(p, m) - A2 * ipow(p.q, 2 * m)) / p.Q1;
  }
  return k;
}

double k2_squared_scale(const RepParamsB& p, int n) {
  const double A2 = p.A * p.A;
  double s = 0.0;
  if (n >= 0) {
    for (int m = 0; m < n; ++m) s = p.Q1 * s + k1_B(p, m) + A2 * ipow(p.q, 2 * m);
  } else {
    for (int m = -1; m >= n; --m) s = (s + k1_B(p, m) + A2 * ipow(p.q, 2 * m)) / p.Q1;
  }
  return s;
}

double k2_squared(const RepParamsB& p, int n) {
  const double q2 = p.q * p.q;
  if (std::abs(p.Q1 - q2) < 1e-6 * q2) return k2_squared_recursive(p, n);
  return k2_squared_closed(p, n);
}

TruncatedRep build_rep_B(const RepParamsB& p) {
  if (p.dim < 3) throw InvalidParams("subgroup B rep needs dim >= 3");
  if (p.q <= 0 || p.Q1 <= 0) throw InvalidParams("q and Q1 must be positive");
  TruncatedRep rep;
  rep.subgroup = Subgroup::B;
  rep.q = p.q;
  rep.Q1 = p.Q1;
  rep.n0 = p.two_sided ? p.n0 : 0;
  rep.lower_mask = p.two_sided ? 2 : 0;
  rep.upper_mask = 2;
  const int d = p.dim;
  Mat L2 = zeros(d), K1 = zeros(d), K2 = zeros(d);
  for (int i = 0; i < d; ++i) {
    const int n = rep.n0 + i;
    L2(i, i) = p.A * ipow(p.q, n);
    K1(i, i) = p.B * ipow(p.Q1 / p.q, n);
    double k2 = k2_squared(p, n);
    // rounding noise around a genuine zero is not a violation
    const double noise = 1e-12 * std::max(1.0, k2_squared_scale(p, n));
    if (k2 < -noise)
      throw InadmissibleParams("|k2," + std::to_string(n) + "|^2 = " + fmt(k2) + " is negative");
    k2 = std::max(k2, 0.0);
    if (i >= 1) K2(i - 1, i) = std::sqrt(k2);
  }
  rep.ops = {{"L2", L2}, {"K1", K1}, {"K2", K2}};
  add_star_partners(rep, {"K1", "K2"});
  return rep;
}

// ---- verification ----

const RewriteSystem& rep_relations(Subgroup s) {
  static const RewriteSystem a = quantum_group(Subgroup::A, true).system;
  static const RewriteSystem b = quantum_group(Subgroup::B, false).system;
  if (s == Subgroup::Full) throw InvalidParams("no ladder representation of the full group");
  return s == Subgroup::A ? a : b;
}

Eigen::MatrixXcd evaluate(const TruncatedRep& rep, const RewriteSystem& rs, const NCPoly& p, Eigen::MatrixXd* magnitude) {
  const int d = rep.dim();
  const DoublePoint at{rep.q, rep.Q1};
  Mat out = zeros(d);
  if (magnitude) *magnitude = Eigen::MatrixXd::Zero(d, d);
  for (const auto& [w, c] : p.terms()) {
    Mat m = Mat::Identity(d, d);
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d);
    for (GenId g : w) {
      const Mat& x = rep.op(rs.generator(g).name);
      m = m * x;
      if (magnitude) a = a * x.cwiseAbs();
    }
    const double cv = c.eval(at);
    out += cv * m;
    if (magnitude) *magnitude += std::abs(cv) * a;
  }
  return out;
}

Eigen::MatrixXd scaled_residual(const Eigen::MatrixXcd& r, const Eigen::MatrixXd& magnitude) {
  return r.cwiseAbs().cwiseQuotient(magnitude.cwiseMax(1.0));
}

double RepReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : relations) m = std::max(m, r.residual);
  return m;
}

RepReport verify_rep(const TruncatedRep& rep, const RewriteSystem& relations) {
  RepReport out;
  for (const auto& g : relations.generators()) {
    if (!g.star) continue;
    const Mat& m = rep.op(g.name);
    const Mat& s = rep.op(relations.generator(*g.star).name);
    out.hermiticity_defect = std::max(out.hermiticity_defect, (s - m.adjoint()).cwiseAbs().maxCoeff());
  }
  out.hermitian = out.hermiticity_defect == 0.0;
  for (auto [g, h] : relations.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *relations.rule(g, h);
    RelationResidual r;
    r.relation = relations.word_str({g, h}) + " = " + relations.str(*relations.rule(g, h));
    Eigen::MatrixXd mag;
    const Mat m = evaluate(rep, relations, rel, &mag);
    r.absolute = interior_max(rep, m);
    r.residual = interior_max(rep, scaled_residual(m, mag).cast<cplx>(), &r.row, &r.col);
    out.relations.push_back(std::move(r));
  }
  return out;
}

RepReport verify_rep(const TruncatedRep& rep) { return verify_rep(rep, rep_relations(rep.subgroup)); }

// ---- Casimir ----

NCPoly casimir_element(const RewriteSystem& b) {
  const FieldElem q = FieldElem::q();
  return b.word({"K1*", "K1"}) + b.word({"K2*", "K2"}, q.pow(-2) - FieldElem(1)) + b.word({"L2", "L2"}, q.pow(-2));
}

CentralityReport casimir_centrality() {
  const RewriteSystem& b = rep_relations(Subgroup::B);
  const NCPoly c = casimir_element(b);
  CentralityReport out;
  bool any = false;
  for (const auto& gen : b.generators()) {
    const NCPoly g = b.gen(gen.name);
    NCPoly r = b.normal_form(c * g - g * c);
    for (const auto& [w, coef] : r.terms()) {
      // strip monomial factors: q and Q1 are nonzero
      Poly n = coef.numerator();
      n = n.unshifted(n.min_exponents());
      out.condition = any ? gcd(out.condition, n) : n;
      any = true;
    }
    out.residuals.emplace_back(gen.name, std::move(r));
  }
  out.vanishes_at_Q1_eq_1 = true;
  for (const auto& [name, r] : out.residuals)
    for (const auto& [w, coef] : r.terms())
      if (!coef.substitute(FieldElem::q(), FieldElem(1)).is_zero()) out.vanishes_at_Q1_eq_1 = false;
  if (!any) {
    out.condition_text = "central for all q, Q1";
  } else if (out.condition.is_constant()) {
    out.condition_text = "never central";
  } else {
    out.condition_text = "every residual coefficient carries the factor " + out.condition.str() +
                         "; central where it vanishes";
  }
  return out;
}

std::vector<CheckResult> CasimirReport::checks() const {
  std::vector<CheckResult> out;
  out.push_back(check("casimir.scalar", "C acts as a scalar", is_scalar,
                      "value " + fmt(scalar) + ", defect " + fmt(scalar_defect)));
  out.push_back(check("casimir.commutes", "[C, g] = 0 for every generator", max_commutator <= kRepTolerance,
                      "max " + fmt(max_commutator) + " at " + worst_generator));
  out.push_back(check("casimir.direct-value", "C|0> = |k1,0|^2 + q^-2 A^2", std::abs(scalar - direct_value) <= kRepTolerance,
                      "computed " + fmt(scalar) + ", direct " + fmt(direct_value)));
  out.push_back({"casimir.printed-value", "C|n> = (A^2 + q^-2 |B|^2)|n> as printed", Status::Info,
                 (printed_value_disagrees ? "DISAGREES: printed " : "agrees: printed ") + fmt(printed_value) +
                     ", computed " + fmt(scalar)});
  out.push_back({"casimir.symbolic", "C g - g C reduced in the subgroup B relations", Status::Info,
                 symbolic.condition_text});
  return out;
}

CasimirReport casimir_check(const TruncatedRep& rep, const RepParamsB& p) {
  const RewriteSystem& b = rep_relations(Subgroup::B);
  CasimirReport out;
  Eigen::MatrixXd cmag;
  const Mat c = evaluate(rep, b, casimir_element(b), &cmag);
  int first = 0;
  while (first < rep.dim() && !rep.interior(first)) ++first;
  out.scalar = c(first, first).real();
  const Mat id = Mat::Identity(rep.dim(), rep.dim());
  out.scalar_defect = interior_max(rep, scaled_residual(c - out.scalar * id, cmag).cast<cplx>());
  out.is_scalar = out.scalar_defect <= kRepTolerance;
  for (const auto& [name, g] : rep.ops) {
    const Eigen::MatrixXd ga = g.cwiseAbs();
    const Eigen::MatrixXd mag = cmag * ga + ga * cmag;
    const double m = interior_max(rep, scaled_residual(c * g - g * c, mag).cast<cplx>());
    if (m >= out.max_commutator) {
      out.max_commutator = m;
      out.worst_generator = name;
    }
  }
  const double A2 = p.A * p.A, qm2 = 1.0 / (p.q * p.q);
  out.direct_value = std::norm(p.B) + qm2 * A2;  // k1,0 = B and k2,0 = 0
  out.printed_value = A2 + qm2 * std::norm(p.B);
  out.printed_value_disagrees = std::abs(out.printed_value - out.scalar) > kRepTolerance;
  out.symbolic = casimir_centrality();
  return out;
}

// ---- U_q(su(2)) ----

RewriteSystem uqsu2_algebra() {
  static const RewriteSystem u = parse_presentation(
      "generators: Ki K Xm Xp\n"
      "weights: 1 1 2 2\n"
      "star: K K, Ki Ki, Xp Xm\n"
      "rule: K Ki = 1\n"
      "rule: Ki K = 1\n"
      "rule: Xp K = (q^-1) K Xp\n"
      "rule: Xp Ki = (q) Ki Xp\n"
      "rule: Xm K = (q) K Xm\n"
      "rule: Xm Ki = (q^-1) Ki Xm\n"
      "rule: Xp Xm = Xm Xp + (q (q^2 - 1)^-1) K K - (q (q^2 - 1)^-1) Ki Ki\n");
  return u;
}

NCPoly uqsu2_identify(const NCPoly& p, const RewriteSystem& b, const RewriteSystem& u, const FieldElem& s2) {
  const std::map<std::string, std::string> image{{"L2", "K"}, {"K1", "Ki"}, {"K1*", "Ki"}, {"K2", "Xm"}, {"K2*", "Xp"}};
  int kmin = 1 << 20;
  for (const auto& [w, c] : p.terms()) {
    int k = 0;
    for (GenId g : w) k += b.generator(g).name.rfind("K2", 0) == 0;
    kmin = std::min(kmin, k);
  }
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word img;
    int k = 0;
    for (GenId g : w) {
      const std::string& n = b.generator(g).name;
      k += n.rfind("K2", 0) == 0;
      img.push_back(u.id(image.at(n)));
    }
    // an odd power of the square root cannot be absorbed into Q(q)
    if ((k - kmin) % 2 != 0) throw InvalidParams("relation is not homogeneous in K2, K2* modulo 2");
    out.add_term(img, c.substitute(FieldElem::q(), FieldElem(1)) * s2.pow((k - kmin) / 2));
  }
  return out;
}

namespace {

struct Identified {
  RewriteSystem system;
  std::vector<std::string> non_quadratic;  // images whose leading word is not a rule
};

// The subgroup B relations at Q1 = 1, mapped through the identification and
// oriented into rules on the U_q generators, plus K Ki = Ki K = 1.
Identified identified_system(const RewriteSystem& b, const RewriteSystem& u, const FieldElem& s2) {
  Identified out{RewriteSystem(u.generators()), {}};
  RewriteSystem& rs = out.system;
  rs.set_rule("K", "Ki", NCPoly::unit());
  rs.set_rule("Ki", "K", NCPoly::unit());
  for (auto [g, h] : b.rule_keys()) {
    NCPoly r = rs.normal_form(uqsu2_identify(NCPoly::word({g, h}) - *b.rule(g, h), b, u, s2));
    if (r.is_zero()) continue;
    Word lead;
    for (const auto& [w, c] : r.terms())
      if (lead.empty() || rs.word_less(lead, w)) lead = w;
    const FieldElem lc = r.coefficient(lead);
    if (lead.size() != 2 || rs.rule(lead[0], lead[1])) {
      out.non_quadratic.push_back(rs.str(r));
      continue;
    }
    NCPoly rhs = NCPoly::word(lead) - r * lc.inv();
    rs.set_rule(lead[0], lead[1], std::move(rhs));
  }
  return out;
}

CheckResult zero(const std::string& id, const std::string& anchor, const NCPoly& r, const RewriteSystem& rs) {
  return check(id, anchor, r.is_zero(), r.is_zero() ? "" : rs.str(r));
}

std::string rule_text(const RewriteSystem& rs, GenId g, GenId h) {
  return rs.word_str({g, h}) + " = " + rs.str(*rs.rule(g, h));
}

// (a (x) b)* = a* (x) b*, read off the left/right split of tensor words.
NCPoly star_factorwise(const NCPoly& p, const TensorAlgebra& t, const RewriteSystem& u) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly l = NCPoly::unit(), r = NCPoly::unit();
    for (GenId g : w) {
      if (g < t.right_offset) l = l * NCPoly::gen(g);
      else r = r * NCPoly::gen(static_cast<GenId>(g - t.right_offset));
    }
    out += c * (t.left(star(l, u)) * t.right(star(r, u)));
  }
  return t.system.normal_form(out);
}

}  // namespace

std::vector<CheckResult> uqsu2_check() {
  const RewriteSystem u = uqsu2_algebra();
  const RewriteSystem& b = rep_relations(Subgroup::B);
  std::vector<CheckResult> out;
  const FieldElem q = FieldElem::q();

  const ConfluenceReport cu = check_confluence(u);
  out.push_back(check("uqsu2.confluent", "the displayed relations form a confluent system", cu.ok(),
                      cu.ok() ? "" : std::to_string(cu.unresolved.size()) + " unresolved overlaps"));
  out.push_back(zero("uqsu2.conjugation.Xp", "q^H X+ q^-H = q X+",
                     u.normal_form(u.word({"K", "Xp", "Ki"}) - u.gen("Xp", q)), u));
  out.push_back(zero("uqsu2.conjugation.Xm", "q^H X- q^-H = q^-1 X-",
                     u.normal_form(u.word({"K", "Xm", "Ki"}) - u.gen("Xm", q.inv())), u));

  // (i) both directions of the identification
  for (auto [g, h] : b.rule_keys()) {
    const NCPoly img = uqsu2_identify(NCPoly::word({g, h}) - *b.rule(g, h), b, u);
    out.push_back(zero("uqsu2.image." + b.word_str({g, h}),
                       "identified relation holds in U_q(su(2)): " + rule_text(b, g, h), u.normal_form(img), u));
  }
  const FieldElem s2 = q - q.inv();
  const Identified id = identified_system(b, u, s2);
  out.push_back(check("uqsu2.identified.quadratic", "identified relations are quadratic rules", id.non_quadratic.empty(),
                      id.non_quadratic.empty() ? "" : id.non_quadratic.front()));
  for (auto [g, h] : u.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *u.rule(g, h);
    NCPoly r = id.system.normal_form(rel);
    std::string detail;
    if (!r.is_zero()) {
      const NCPoly* derived = id.system.rule(g, h);
      detail = "residual " + u.str(r) +
               (derived ? "; identification gives " + u.word_str({g, h}) + " = " + u.str(*derived) : "");
    }
    out.push_back(check("uqsu2.displayed." + u.word_str({g, h}),
                        "displayed relation follows from the identification: " + rule_text(u, g, h), r.is_zero(),
                        detail));
  }

  {
    // the same identification with s^2 = q^-1 - q instead
    const Identified alt = identified_system(b, u, -s2);
    bool all = alt.non_quadratic.empty();
    for (auto [g, h] : u.rule_keys())
      all = all && alt.system.normal_form(NCPoly::word({g, h}) - *u.rule(g, h)).is_zero();
    out.push_back({"uqsu2.identified.opposite-normalization",
                   "displayed relations with K2 = (q^-1 - q)^1/2 X-, K2* = (q^-1 - q)^1/2 X+", Status::Info,
                   all ? "all displayed relations follow" : "some displayed relation does not follow"});
  }

  // (ii) coproduct
  const TensorAlgebra t = tensor_algebra(u, u.renamed("~"), commuting_cross);
  auto L = [&](const char* n) { return t.left(u.gen(n)); };
  auto R = [&](const char* n) { return t.right(u.gen(n)); };
  std::vector<NCPoly> delta(u.size());
  delta[u.id("K")] = L("K") * R("K");
  delta[u.id("Ki")] = L("Ki") * R("Ki");
  delta[u.id("Xp")] = L("Xp") * R("Ki") + L("K") * R("Xp");
  delta[u.id("Xm")] = L("Xm") * R("Ki") + L("K") * R("Xm");
  for (auto [g, h] : u.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *u.rule(g, h);
    out.push_back(zero("uqsu2.coproduct." + u.word_str({g, h}), "Delta is a homomorphism on " + rule_text(u, g, h),
                       t.system.normal_form(apply_hom(rel, delta, t.system)), t.system));
  }

  // counit
  std::vector<NCPoly> eps(u.size());
  eps[u.id("K")] = eps[u.id("Ki")] = NCPoly::unit();
  for (auto [g, h] : u.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *u.rule(g, h);
    out.push_back(zero("uqsu2.counit." + u.word_str({g, h}), "epsilon is a homomorphism on " + rule_text(u, g, h),
                       u.normal_form(apply_hom(rel, eps, u)), u));
  }

  // (iii) antipode
  std::vector<NCPoly> S(u.size());
  S[u.id("K")] = u.gen("Ki");
  S[u.id("Ki")] = u.gen("K");
  S[u.id("Xp")] = u.gen("Xp", -q.inv());
  S[u.id("Xm")] = u.gen("Xm", -q);
  for (auto [g, h] : u.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *u.rule(g, h);
    out.push_back(zero("uqsu2.antipode.antihom." + u.word_str({g, h}),
                       "S is an anti-homomorphism on " + rule_text(u, g, h), u.normal_form(apply_antihom(rel, S, u)),
                       u));
  }
  for (GenId g = 0; g < u.size(); ++g) {
    const NCPoly dg = t.system.normal_form(delta[g]);
    NCPoly left, right;
    for (const auto& [w, c] : dg.terms()) {
      NCPoly a = NCPoly::unit(), bb = NCPoly::unit();
      for (GenId x : w) {
        if (x < t.right_offset) a = a * NCPoly::gen(x);
        else bb = bb * NCPoly::gen(static_cast<GenId>(x - t.right_offset));
      }
      left += c * (apply_antihom(a, S, u) * bb);
      right += c * (a * apply_antihom(bb, S, u));
    }
    const NCPoly unit_eps = apply_hom(NCPoly::gen(g), eps, u);
    const std::string name = u.generator(g).name;
    out.push_back(zero("uqsu2.antipode.left." + name, "m(S (x) id)Delta = eta epsilon on " + name,
                       u.normal_form(left - unit_eps), u));
    out.push_back(zero("uqsu2.antipode.right." + name, "m(id (x) S)Delta = eta epsilon on " + name,
                       u.normal_form(right - unit_eps), u));
  }

  // (iv) star structure
  for (auto [g, h] : u.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *u.rule(g, h);
    out.push_back(zero("uqsu2.star.relation." + u.word_str({g, h}), "star of " + rule_text(u, g, h),
                       u.normal_form(star(rel, u)), u));
  }
  for (GenId g = 0; g < u.size(); ++g) {
    const GenId sg = *u.generator(g).star;
    const NCPoly lhs = t.system.normal_form(delta[sg]);
    const NCPoly rhs = star_factorwise(t.system.normal_form(delta[g]), t, u);
    const std::string name = u.generator(g).name;
    out.push_back(zero("uqsu2.star.coproduct." + name, "Delta(g*) = (* (x) *)Delta(g) for " + name,
                       t.system.normal_form(lhs - rhs), t.system));
    const NCPoly ss = apply_antihom(star(apply_antihom(NCPoly::gen(g), S, u), u), S, u);
    out.push_back(zero("uqsu2.star.antipode." + name, "S(S(g)*)* = g for " + name,
                       u.normal_form(star(ss, u) - NCPoly::gen(g)), u));
  }
  return out;
}

// ---- parameter files ----

namespace {

cplx complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("complex value must be a number or [re, im]");
}

}  // namespace

RepParamsA RepParams::as_A() const { return {A, B, C, D, q, dim, n0}; }
RepParamsB RepParams::as_B() const { return {A, B, q, Q1, dim, two_sided, n0}; }

RepParams rep_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("parameter file must be a JSON object");
  RepParams p;
  try {
    const std::string s = j.at("subgroup").get<std::string>();
    if (s == "A") p.subgroup = Subgroup::A;
    else if (s == "B") p.subgroup = Subgroup::B;
    else throw ParseError("subgroup must be A or B");
    p.q = j.at("q").get<double>();
    p.A = j.at("A").get<double>();
    p.dim = j.at("dim").get<int>();
    if (j.contains("Q1")) p.Q1 = j.at("Q1").get<double>();
    else if (p.subgroup == Subgroup::B) throw ParseError("subgroup B needs Q1");
    if (p.subgroup == Subgroup::A) p.Q1 = p.q * p.q;
    p.B = complex_from_json(j.at("B"));
    if (j.contains("C")) p.C = complex_from_json(j.at("C"));
    if (j.contains("D")) p.D = complex_from_json(j.at("D"));
    p.two_sided = j.value("two_sided", false);
    p.n0 = j.value("n0", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter file: ") + e.what());
  }
  return p;
}

nlohmann::json rep_report_json(const RepReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : r.relations)
    rows.push_back({{"relation", x.relation}, {"max_residual", x.residual}, {"max_absolute", x.absolute}, {"location", {x.row, x.col}}});
  return {{"hermitian", r.hermitian},
          {"hermiticity_defect", r.hermiticity_defect},
          {"max_residual", r.max_residual()},
          {"relations", rows}};
}

}  // namespace qosc
