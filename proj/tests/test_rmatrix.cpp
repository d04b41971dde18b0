#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qosc/json_io.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/rmatrix.hpp"

using namespace qosc;

namespace {

const FieldElem q = FieldElem::q();
const FieldElem Q1 = FieldElem::Q1();

RationalPoint generic_point() { return {mpq_class(7, 5), mpq_class(11, 3)}; }

BigRMatrix identity9() { return BigRMatrix::Identity(); }

}  // namespace

TEST(ReferenceMatrices, Entries) {
  EXPECT_EQ(paper_R()(3, 1), (q * q - Q1) / (q * q));
  EXPECT_EQ(paper_R()(1, 1), Q1 * Q1 / (q * q));
  EXPECT_EQ(paper_R()(8, 3), -Q1.inv());
  EXPECT_EQ(paper_Rprime()(8, 8), q * q / Q1);
}

TEST(ReferenceMatrices, RprimeIsProportionalToR) {
  const BigRMatrix diff = paper_Rprime() - BigRMatrix((q * q / Q1) * paper_R());
  EXPECT_TRUE(all_zero(diff));
}

TEST(ReferenceMatrices, FitTheirAnsatzPatterns) {
  EXPECT_EQ(r_ansatz(r_ansatz_values(paper_R())), paper_R());
}

TEST(Qybe, PaperR) { EXPECT_TRUE(qybe_check(paper_R())); }

TEST(Qybe, Identity) { EXPECT_TRUE(qybe_check(identity9())); }

TEST(Qybe, AgreesWithOracleUnderSlotMutations) {
  // zero each nonzero ansatz slot in turn; the oracle decides the expected verdict
  const RationalPoint p = generic_point();
  ASSERT_TRUE(oracle::ybe_holds(paper_R(), paper_R(), paper_R(), p));
  int broken = 0;
  for (const auto& [r, c] : r_ansatz_slots()) {
    if (paper_R()(r, c).is_zero()) continue;
    BigRMatrix m = paper_R();
    m(r, c) = 0;
    const bool expected = oracle::ybe_holds(m, m, m, p);
    EXPECT_EQ(qybe_check(m), expected) << "slot " << r << "," << c;
    broken += !expected;
  }
  EXPECT_GT(broken, 0);
  // the slot at row 4, column 9 (1-based) is already zero in R
  EXPECT_TRUE(paper_R()(3, 8).is_zero());
}

TEST(Rprime, ReferencePairGenericParameters) {
  RprimeReport rep = rprime_conditions(paper_R(), paper_Rprime());
  EXPECT_TRUE(rep.ybe);
  EXPECT_TRUE(rep.mixed_left);
  EXPECT_TRUE(rep.mixed_right);
  EXPECT_TRUE(rep.hecke);
  EXPECT_TRUE(rep.fifth_swapped);
  // read literally, R'21 R = R21 R forces R' = R, which fails unless Q1 = q^2
  EXPECT_FALSE(rep.fifth_printed);
}

TEST(Rprime, ReferencePairAtQ1EqualsQSquared) {
  RprimeReport rep = rprime_conditions(substitute_Q1_q2(paper_R()), substitute_Q1_q2(paper_Rprime()));
  EXPECT_TRUE(rep.holds_with_swapped_fifth());
  EXPECT_TRUE(rep.fifth_printed);
}

TEST(Rprime, RprimeEqualToRFailsHecke) {
  RprimeReport rep = rprime_conditions(paper_R(), paper_R());
  EXPECT_FALSE(rep.hecke);
}

TEST(Rprime, HeckeAgreesWithOracle) {
  const RationalPoint p = generic_point();
  auto r = oracle::at(paper_R(), p);
  auto rp = oracle::at(paper_Rprime(), p);
  // (P R' + 1)(P R - 1) = P R' P R - P R' + P R - 1
  oracle::Q9 pr, prp;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      pr[i][j] = r[3 * (i % 3) + i / 3][j];
      prp[i][j] = rp[3 * (i % 3) + i / 3][j];
    }
  auto prod = oracle::product(prp, pr);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) EXPECT_EQ(prod[i][j] - prp[i][j] + pr[i][j] - (i == j ? 1 : 0), 0);
}

TEST(Triangularity, OnlyAtQ1EqualsQSquared) {
  EXPECT_TRUE(triangularity_check(substitute_Q1_q2(paper_R())));
  EXPECT_FALSE(triangularity_check(paper_R()));
  EXPECT_TRUE(triangularity_check(identity9()));
  // oracle: R R21 = 1 at sample points
  const RationalPoint special{mpq_class(3, 2), mpq_class(9, 4)};
  auto rs = oracle::at(paper_R(), special);
  EXPECT_TRUE(oracle::is_identity(oracle::product(rs, oracle::flip(rs))));
  auto rg = oracle::at(paper_R(), generic_point());
  EXPECT_FALSE(oracle::is_identity(oracle::product(rg, oracle::flip(rg))));
}

TEST(Triangularity, SingularThrows) {
  BigRMatrix m = identity9();
  m(4, 4) = 0;
  EXPECT_THROW(triangularity_check(m), NotInvertible);
}

TEST(Covector, ReferenceRIsConsistent) {
  RewriteSystem osc = oscillator_system();
  ConstraintSet cs = covector_constraints(paper_R(), osc);
  EXPECT_TRUE(cs.empty()) << (cs.empty() ? "" : cs.front().origin);
}

TEST(Covector, InducedIdealIsTheOscillatorIdeal) {
  RewriteSystem osc = oscillator_system();
  FMat rows = covector_relation_rows(paper_R());
  EXPECT_EQ(rank(rows), 3);  // 9 words, 3 relations, 6-dimensional quotient
  FMat stacked(12, 9);
  stacked << rows, oscillator_relation_rows(osc);
  EXPECT_EQ(rank(stacked), 3);
}

TEST(Covector, IdentityContradictsOscillator) {
  EXPECT_FALSE(covector_constraints(identity9(), oscillator_system()).empty());
}

TEST(Covector, SingleEntryPerturbation) {
  BigRMatrix m = paper_R();
  m(3, 3) = FieldElem(2) / Q1;
  EXPECT_FALSE(covector_constraints(m, oscillator_system()).empty());
}

TEST(Covector, MutationOfEverySlotIsDetected) {
  RewriteSystem osc = oscillator_system();
  for (const auto& [r, c] : r_ansatz_slots()) {
    BigRMatrix m = paper_R();
    m(r, c) = m(r, c).is_zero() ? FieldElem(1) : FieldElem(2) * m(r, c);
    EXPECT_FALSE(covector_constraints(m, osc).empty()) << "slot " << r << "," << c;
  }
}

TEST(Covector, AffineSystemAgreesWithDirectReduction) {
  RewriteSystem osc = oscillator_system();
  auto system = ansatz_covector_system(osc);
  ASSERT_FALSE(system.empty());
  auto values = r_ansatz_values(paper_R());
  for (const auto& c : system) EXPECT_TRUE(c.evaluate(values).is_zero()) << c.origin;
  // a mutated point: the affine forms must reproduce the direct residues
  values[6] = FieldElem(2) / Q1;
  ConstraintSet direct = covector_constraints(r_ansatz(values), osc);
  int nonzero = 0;
  for (const auto& c : system) {
    FieldElem v = c.evaluate(values);
    if (v.is_zero()) continue;
    ++nonzero;
    auto it = std::find_if(direct.begin(), direct.end(), [&](const Constraint& d) { return d.origin == c.origin; });
    ASSERT_NE(it, direct.end()) << c.origin;
    EXPECT_EQ(it->value, v);
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Serialization, JsonRoundTrip) {
  nlohmann::json j = matrix_to_json(paper_R());
  ASSERT_EQ(j.size(), 9u);
  EXPECT_EQ(j[3][1].get<std::string>(), paper_R()(3, 1).str());
  EXPECT_EQ(matrix_from_json(j), paper_R());
  EXPECT_THROW(matrix_from_json(nlohmann::json::array()), ParseError);
}

TEST(Degree2, ReductionMapMatchesNormalForms) {
  RewriteSystem osc = oscillator_system();
  FMat n = degree2_reduction(osc);
  ASSERT_EQ(n.rows(), 6);
  // every oscillator relation reduces to zero
  FMat rel = oscillator_relation_rows(osc);
  EXPECT_TRUE(all_zero(FMat(n * rel.transpose())));
}
