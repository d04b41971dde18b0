#pragma once

// The nine-generator quantum matrix t = (K1 K3* L1; K3 K1* L1*; K2 K2* L2),
// its relations from R t1 t2 = t2 t1 R, Hopf structure, inverse and the
// quasi-determinant delta.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qosc/ncalg.hpp"
#include "qosc/report.hpp"
#include "qosc/rmatrix.hpp"

namespace qosc {

using EntryNames = std::array<std::array<const char*, 3>, 3>;
/// Row-major names of the entries of t.
const EntryNames& quantum_matrix_layout();

/// The nine generators without relations. Stars pair K_i with K_i*, L1 with
/// L1*; L2 is self-conjugate.
RewriteSystem quantum_matrix_generators();

struct RttResult {
  RewriteSystem system;  // one rule per independent relation, pivot word on the left
  int equations = 0;     // nonzero entry equations of R t1 t2 - t2 t1 R
  int rank = 0;
};

RttResult rtt_generate_relations(const BigRMatrix& r);

/// The relation lines as printed, one per line "lhs = rhs".
const std::vector<std::string>& printed_relations();

struct RelationMatch {
  std::string rule;    // derived rule, as text
  std::string source;  // "printed #n", "star of printed #n" or empty
};

struct MatchReport {
  std::vector<RelationMatch> rules;
  std::vector<std::string> unmatched_printed;  // printed lines not implied by the derived rules
  std::vector<std::string> unparsable;         // printed lines rejected by the parser
  bool bijective() const;
};

/// Every printed line (and its star) must reduce to zero under the derived
/// rules, and every derived rule must be one of them.
MatchReport match_printed_relations(const RttResult& rtt);

/// Relations whose star does not reduce to zero (empty when star-closed).
std::vector<std::string> star_closure_failures(const RewriteSystem& qg);

enum class Subgroup { Full, A, B };
const char* subgroup_name(Subgroup s);
/// Generators set to zero: A drops L1, L1*; B also K3, K3*.
std::vector<std::string> removed_generators(Subgroup s);

struct QuantumGroup {
  Subgroup subgroup = Subgroup::Full;
  bool at_q2 = false;  // coefficients specialized to Q1 = q^2
  RewriteSystem system;
  std::vector<NCPoly> obstructions;  // relations violated by setting generators to zero
  std::array<std::array<NCPoly, 3>, 3> t;
};

/// Derived from R by the RTT relations, specialized if requested, then restricted.
QuantumGroup quantum_group(Subgroup s, bool at_q2);

/// Delta(t_ij) = sum_k t_ik (x) t_kj applied to every rule, reduced in the
/// commuting tensor square.
std::vector<CheckResult> coproduct_checks(const QuantumGroup& g);
/// epsilon(t) = 1 sends every rule to a true scalar identity.
std::vector<CheckResult> counit_checks(const QuantumGroup& g);

struct CovarianceReport {
  std::array<NCPoly, 3> residuals;  // in oscillator (x) group
  std::vector<NCPoly> obstructions;
  std::string rendered[3];
  bool ok() const;
};

/// x'_j = sum_i x_i t_ij substituted into the three oscillator relations.
CovarianceReport covariance_check(Subgroup s, bool at_q2);

/// Printed inverse: t^-1 = M delta^-1, and delta^-1 g = c_g g delta^-1.
struct InverseData {
  Subgroup subgroup = Subgroup::Full;
  bool at_q2 = false;
  NCPoly delta;
  std::array<std::array<NCPoly, 3>, 3> m;
  std::map<GenId, FieldElem> commutation;  // g delta = c_g delta g
};

InverseData inverse_data(const QuantumGroup& g);

std::vector<CheckResult> inverse_check(const QuantumGroup& g);
/// Commutation with delta, delta* = delta, epsilon(delta) = 1,
/// Delta(delta) = delta (x) delta and S(delta) = delta^-1.
std::vector<CheckResult> delta_checks(const QuantumGroup& g);
/// S(S(g)) = g for every generator.
std::vector<CheckResult> antipode_square_check(const QuantumGroup& g);

}  // namespace qosc
