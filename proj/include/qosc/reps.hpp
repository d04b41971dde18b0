#pragma once

// Truncated ladder representations of the two subgroups, the quadratic
// Casimir, and the U_q(su(2)) specialization at Q1 = 1.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qosc/ncalg.hpp"
#include "qosc/qgroup.hpp"
#include "qosc/report.hpp"

namespace qosc {

using cplx = std::complex<double>;

/// Tolerance on interior matrix entries, applied to scaled residuals.
inline constexpr double kRepTolerance = 1e-10;

struct RepParamsA {
  double A = 1.0;
  cplx B{1.0, 0.0}, C{0.0, 0.0}, D{0.0, 0.0};
  double q = 1.2;
  int dim = 20;
  int n0 = 0;  // label of the first basis state
};

struct RepParamsB {
  double A = 1.0;
  cplx B{0.0, 0.0};
  double q = 1.2;
  double Q1 = 1.0;
  int dim = 24;
  bool two_sided = false;  // window |n0>..|n0+dim-1> with both edges masked
  int n0 = 0;
};

/// States |n0>..|n0+dim-1>; ops maps generator names to matrices with
/// M(m, n) = <m|g|n>. Entries with index in [lower, dim - upper) are interior.
struct TruncatedRep {
  Subgroup subgroup = Subgroup::B;
  double q = 1.0, Q1 = 1.0;
  int n0 = 0;
  int lower_mask = 0, upper_mask = 0;
  std::map<std::string, Eigen::MatrixXcd> ops;

  int dim() const { return ops.empty() ? 0 : static_cast<int>(ops.begin()->second.rows()); }
  bool interior(int i) const { return i >= lower_mask && i < dim() - upper_mask; }
  const Eigen::MatrixXcd& op(const std::string& name) const { return ops.at(name); }
};

/// |B|^2 - A^2 - q^2 |D|^2; must vanish.
double rep_A_constraint(const RepParamsA& p);
/// Throws InvalidParams when the constraint fails beyond 1e-12 (relative).
TruncatedRep build_rep_A(const RepParamsA& p);

double k1_B(const RepParamsB& p, int n);  // |k1,n|^2
/// Closed form for |k2,n|^2; throws EvalPole at Q1 = q^2.
double k2_squared_closed(const RepParamsB& p, int n);
/// |k2,n+1|^2 = Q1 |k2,n|^2 - |k1,n|^2 + A^2 q^2n from |k2,0|^2 = 0, run
/// forward or backward to n.
double k2_squared_recursive(const RepParamsB& p, int n);
/// Sum of the absolute contributions along the recursion; the natural scale
/// for comparing the two evaluations.
double k2_squared_scale(const RepParamsB& p, int n);
/// Closed form away from the pole, recursion near it (relative gap < 1e-6).
double k2_squared(const RepParamsB& p, int n);
/// Throws InadmissibleParams when some |k2,n|^2 in the window is negative.
TruncatedRep build_rep_B(const RepParamsB& p);

/// The rewrite rules a rep of this subgroup must satisfy: A at Q1 = q^2,
/// B for generic Q1.
const RewriteSystem& rep_relations(Subgroup s);

/// Matrix of a noncommutative polynomial, coefficients evaluated at the rep's
/// point. `magnitude` receives sum |c| |M_w| entrywise, the size of the terms
/// that cancel in a residual.
Eigen::MatrixXcd evaluate(const TruncatedRep& rep, const RewriteSystem& rs, const NCPoly& p,
                          Eigen::MatrixXd* magnitude = nullptr);
/// |r| / max(1, magnitude): absolute for entries of order one, relative beyond.
Eigen::MatrixXd scaled_residual(const Eigen::MatrixXcd& r, const Eigen::MatrixXd& magnitude);

struct RelationResidual {
  std::string relation;
  double residual = 0.0;  // max scaled residual over interior rows and columns
  double absolute = 0.0;  // max |entry| over the same window
  int row = -1, col = -1; // where the scaled residual peaks
};

struct RepReport {
  bool hermitian = false;
  double hermiticity_defect = 0.0;
  std::vector<RelationResidual> relations;
  double max_residual() const;
  bool ok(double tol = kRepTolerance) const { return hermitian && max_residual() <= tol; }
};

/// Star partners are conjugate transposes, then every rule lhs - rhs is
/// evaluated on the interior.
RepReport verify_rep(const TruncatedRep& rep, const RewriteSystem& relations);
RepReport verify_rep(const TruncatedRep& rep);

/// Symbolic part: C g - g C reduced in the subgroup B rewrite system.
struct CentralityReport {
  std::vector<std::pair<std::string, NCPoly>> residuals;  // per generator
  Poly condition;           // gcd of every residual coefficient numerator
  bool vanishes_at_Q1_eq_1 = false;
  std::string condition_text;
};

CentralityReport casimir_centrality();
/// C = K1* K1 + (q^-2 - 1) K2* K2 + q^-2 L2^2 in the subgroup B algebra.
NCPoly casimir_element(const RewriteSystem& b);

struct CasimirReport {
  double scalar = 0.0;         // C on the first interior state
  double scalar_defect = 0.0;  // max scaled |C - scalar * 1| on the interior
  bool is_scalar = false;
  double max_commutator = 0.0;  // scaled, as for relation residuals
  std::string worst_generator;
  double direct_value = 0.0;   // |k1,0|^2 + q^-2 A^2, evaluated independently
  double printed_value = 0.0;  // A^2 + q^-2 |B|^2 as printed
  bool printed_value_disagrees = false;
  CentralityReport symbolic;
  std::vector<CheckResult> checks() const;
};

CasimirReport casimir_check(const TruncatedRep& rep, const RepParamsB& p);

/// U_q(su(2)) on K = q^H, Ki = q^-H, Xp, Xm as displayed.
RewriteSystem uqsu2_algebra();
/// Subgroup B at Q1 = 1 pushed through L2 = K, K1 = K1* = Ki,
/// K2 = s Xm, K2* = s Xp with s^2 = q - q^-1 unless given.
NCPoly uqsu2_identify(const NCPoly& p, const RewriteSystem& b, const RewriteSystem& u,
                      const FieldElem& s2 = FieldElem::q() - FieldElem::q().inv());
std::vector<CheckResult> uqsu2_check();

/// JSON parameter file {subgroup, q, Q1, A, B, C, D, dim}; complex values are
/// numbers or [re, im]. Optional: two_sided, n0.
struct RepParams {
  Subgroup subgroup = Subgroup::B;
  double q = 1.2, Q1 = 1.0, A = 1.0;
  cplx B, C, D;
  int dim = 24;
  bool two_sided = false;
  int n0 = 0;

  RepParamsA as_A() const;
  RepParamsB as_B() const;
};

RepParams rep_params_from_json(const nlohmann::json& j);
nlohmann::json rep_report_json(const RepReport& r);

}  // namespace qosc
