#include <gtest/gtest.h>

#include "qosc/errors.hpp"
#include "qosc/qgroup.hpp"

using namespace qosc;

namespace {

const RttResult& derived() {
  static const RttResult r = rtt_generate_relations(paper_R());
  return r;
}

NCPoly rule_of(const RewriteSystem& rs, const char* g, const char* h) {
  const NCPoly* r = rs.rule(rs.id(g), rs.id(h));
  return r ? *r : NCPoly::word({rs.id(g), rs.id(h)});
}

std::string failures(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (c.status == Status::Fail) out += c.id + ": " + c.detail + "\n";
  return out;
}

}  // namespace

TEST(QuantumMatrix, LayoutAndStars) {
  const auto& t = quantum_matrix_layout();
  EXPECT_STREQ(t[0][1], "K3*");
  EXPECT_STREQ(t[1][2], "L1*");
  EXPECT_STREQ(t[2][2], "L2");
  RewriteSystem rs = quantum_matrix_generators();
  EXPECT_EQ(rs.size(), 9u);
  EXPECT_EQ(*rs.generator(rs.id("K2")).star, rs.id("K2*"));
  EXPECT_EQ(*rs.generator(rs.id("L2")).star, rs.id("L2"));
}

TEST(Rtt, RankAndPrintedExamples) {
  const RttResult& r = derived();
  EXPECT_LE(r.equations, 81);
  EXPECT_EQ(r.rank, 36);  // every pair of distinct entries gets one rule
  const RewriteSystem& rs = r.system;
  const FieldElem q = FieldElem::q(), Q1 = FieldElem::Q1();
  EXPECT_EQ(rule_of(rs, "K1", "K3"), rs.word({"K3", "K1"}, q * q / (Q1 * Q1)));
  EXPECT_EQ(rule_of(rs, "L1", "L2"), rs.word({"L2", "L1"}, q / Q1));
}

TEST(Rtt, AgreesWithIndependentDerivation) {
  // rules not printed (star partners), from a separate computer-algebra derivation
  const RewriteSystem& rs = derived().system;
  EXPECT_EQ(rule_of(rs, "K1*", "K2"), rs.parse("(q Q1^-1) K2 K1* - ((q^2 - Q1) Q1^-2) K3 K2* - (q^-1) L2 L1*"));
  EXPECT_EQ(rule_of(rs, "K2*", "L2"), rs.parse("(q^-1) L1 K1* - (q Q1^-2) L1* K3* + (q^-1) L2 K2*"));
  EXPECT_EQ(rule_of(rs, "K1*", "L1"), rs.parse("(Q1 q^-1) L1 K1* - ((q^2 - Q1) Q1^-1 q^-1) L1* K3*"));
  EXPECT_EQ(rule_of(rs, "K2*", "K3"), rs.parse("(q Q1^-2) K3 K2* - (Q1^-1) L2 L1*"));
  EXPECT_EQ(rule_of(rs, "K1*", "K3"), rs.parse("(Q1^-1) K3 K1* - (Q1^-1) L1* L1*"));
}

TEST(Rtt, IdentityRGivesCommutingEntries) {
  RttResult r = rtt_generate_relations(BigRMatrix::Identity());
  EXPECT_EQ(r.rank, 36);
  for (auto [g, h] : r.system.rule_keys()) EXPECT_EQ(*r.system.rule(g, h), NCPoly::word({h, g}));
}

TEST(Rtt, MatchesPrintedLinesAndTheirStars) {
  MatchReport m = match_printed_relations(derived());
  EXPECT_TRUE(m.bijective());
  EXPECT_TRUE(m.unmatched_printed.empty());
  ASSERT_EQ(m.unparsable.size(), 1u);
  EXPECT_EQ(m.unparsable[0].rfind("K2 L2", 0), 0u);
  int direct = 0, starred = 0;
  for (const auto& r : m.rules) {
    direct += r.source.rfind("printed", 0) == 0;
    starred += r.source.rfind("star of", 0) == 0;
  }
  EXPECT_EQ(direct, 20);
  EXPECT_EQ(starred, 16);
}

TEST(Rtt, PrintedLineWithWrongCoefficientIsRejected) {
  RttResult r = derived();
  // a derived system with one corrupted rule no longer implies the printed line
  r.system.set_rule("K1", "K3", r.system.word({"K3", "K1"}, FieldElem::q()));
  MatchReport m = match_printed_relations(r);
  EXPECT_FALSE(m.bijective());
  EXPECT_FALSE(m.unmatched_printed.empty());
}

TEST(Rtt, Confluent) {
  ConfluenceReport rep = check_confluence(derived().system);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.overlaps_checked, 84u);
}

TEST(Rtt, CorruptedQ1CoefficientBreaksConfluence) {
  RewriteSystem rs = derived().system;
  const FieldElem Q1 = FieldElem::Q1();
  rs.set_rule("K1", "K3*", rs.word({"K3*", "K1"}, Q1 * Q1) + rs.word({"L1", "L1"}));
  EXPECT_FALSE(check_confluence(rs).ok());
}

TEST(Rtt, StarClosed) {
  EXPECT_TRUE(star_closure_failures(derived().system).empty());
  RewriteSystem rs = derived().system;
  rs.set_rule("K3", "L2", rs.word({"L2", "K3"}, FieldElem::q()));
  EXPECT_FALSE(star_closure_failures(rs).empty());
}

TEST(Hopf, CoproductAndCounitAreHomomorphisms) {
  QuantumGroup g = quantum_group(Subgroup::Full, false);
  auto d = coproduct_checks(g);
  EXPECT_EQ(d.size(), 36u);
  EXPECT_TRUE(all_pass(d)) << failures(d);
  auto e = counit_checks(g);
  EXPECT_TRUE(all_pass(e)) << failures(e);
}

TEST(Hopf, CoproductDetectsCorruptedRule) {
  QuantumGroup g = quantum_group(Subgroup::Full, false);
  g.system.set_rule("L1", "L2", g.system.word({"L2", "L1"}));
  EXPECT_FALSE(all_pass(coproduct_checks(g)));
}

TEST(Covariance, FullGroupGeneric) {
  CovarianceReport rep = covariance_check(Subgroup::Full, false);
  EXPECT_TRUE(rep.ok()) << rep.rendered[0] << " | " << rep.rendered[1] << " | " << rep.rendered[2];
}

TEST(Covariance, SubgroupANeedsQ1EqualsQSquared) {
  EXPECT_TRUE(covariance_check(Subgroup::A, true).ok());
  CovarianceReport generic = covariance_check(Subgroup::A, false);
  EXPECT_FALSE(generic.ok());
  // setting L1 = 0 kills the left side of K2 L1* = L1* K2 + q^-1 (q^2 - Q1) L2 K3
  EXPECT_EQ(generic.obstructions.size(), 2u);
}

TEST(Covariance, SubgroupBGeneric) { EXPECT_TRUE(covariance_check(Subgroup::B, false).ok()); }

TEST(Covariance, UndeformedLimitCommutes) {
  // q = Q1 = 1 with L1, L1*, K2, K2* removed: all remaining entries commute
  Restriction res = restrict_generators(derived().system, {"L1", "L1*", "K2", "K2*"});
  for (auto [g, h] : res.system.rule_keys()) {
    NCPoly r = res.system.rule(g, h)->map_coefficients(
        [](const FieldElem& c) { return c.substitute(FieldElem(1), FieldElem(1)); });
    EXPECT_EQ(r, NCPoly::word({h, g})) << res.system.word_str({g, h});
  }
}

TEST(Inverse, FullGroup) {
  auto r = inverse_check(quantum_group(Subgroup::Full, false));
  EXPECT_EQ(r.size(), 18u);
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Inverse, Subgroups) {
  auto a = inverse_check(quantum_group(Subgroup::A, true));
  EXPECT_TRUE(all_pass(a)) << failures(a);
  auto b = inverse_check(quantum_group(Subgroup::B, false));
  EXPECT_TRUE(all_pass(b)) << failures(b);
}

TEST(Inverse, RestrictedFormulasAreThePrintedSubgroupOnes) {
  QuantumGroup a = quantum_group(Subgroup::A, true);
  InverseData da = inverse_data(a);
  const RewriteSystem& ra = a.system;
  EXPECT_EQ(da.delta, ra.parse("L2 K1* K1 - (q^2) L2 K3* K3"));
  const char* ma[3][3] = {{"L2 K1*", "-(q^-4) L2 K3*", "0"},
                          {"-(q^4) L2 K3", "L2 K1", "0"},
                          {"K3 K2* - (q) K2 K1*", "K3* K2 - (q^-1) K2* K1", "K1* K1 - (q^2) K3* K3"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(da.m[i][j], std::string(ma[i][j]) == "0" ? NCPoly() : ra.parse(ma[i][j])) << i << j;
  EXPECT_EQ(da.commutation.at(ra.id("K2")), FieldElem::q().pow(3));
  EXPECT_EQ(da.commutation.at(ra.id("K3")), FieldElem::q().pow(6));

  QuantumGroup b = quantum_group(Subgroup::B, false);
  InverseData db = inverse_data(b);
  const RewriteSystem& rb = b.system;
  EXPECT_EQ(db.delta, rb.parse("L2 K1* K1"));
  const char* mb[3][3] = {{"L2 K1*", "0", "0"}, {"0", "L2 K1", "0"}, {"-(q) K2 K1*", "-(q^-1) K2* K1", "K1* K1"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(db.m[i][j], std::string(mb[i][j]) == "0" ? NCPoly() : rb.parse(mb[i][j])) << i << j;
}

TEST(Inverse, WrongCoefficientDetected) {
  QuantumGroup g = quantum_group(Subgroup::B, false);
  // B's inverse only works with the right commutation scalar of K2
  InverseData d = inverse_data(g);
  EXPECT_NE(d.commutation.at(g.system.id("K2")), FieldElem(1));
  g.system.set_rule("K1", "K2", g.system.word({"K2", "K1"}));
  EXPECT_FALSE(all_pass(inverse_check(g)));
}

TEST(Delta, FullGroup) {
  auto r = delta_checks(quantum_group(Subgroup::Full, false));
  EXPECT_TRUE(all_pass(r)) << failures(r);
  auto has = [&](const std::string& id) {
    return std::any_of(r.begin(), r.end(), [&](const CheckResult& c) { return c.id == id; });
  };
  EXPECT_TRUE(has("delta.commute.K1"));
  EXPECT_TRUE(has("delta.commute.L1"));
  EXPECT_TRUE(has("delta.star"));
  EXPECT_TRUE(has("delta.coproduct"));
}

TEST(Delta, Subgroups) {
  auto a = delta_checks(quantum_group(Subgroup::A, true));
  EXPECT_TRUE(all_pass(a)) << failures(a);
  auto b = delta_checks(quantum_group(Subgroup::B, false));
  EXPECT_TRUE(all_pass(b)) << failures(b);
}

TEST(Antipode, SquareIsIdentityAtQ1EqualsQSquared) {
  auto r = antipode_square_check(quantum_group(Subgroup::Full, true));
  EXPECT_EQ(r.size(), 9u);
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Antipode, GenericQ1IsRecordedOnly) {
  auto r = antipode_square_check(quantum_group(Subgroup::Full, false));
  for (const auto& c : r) EXPECT_EQ(c.status, Status::Info);
  auto k3 = std::find_if(r.begin(), r.end(), [](const CheckResult& c) { return c.id == "antipode.square.K3"; });
  ASSERT_NE(k3, r.end());
  EXPECT_FALSE(k3->detail.empty());
}

namespace {

void expect_implied(const QuantumGroup& g, const std::vector<std::string>& lines) {
  const RewriteSystem& rs = g.system;
  for (const auto& line : lines) {
    auto eq = line.find('=');
    NCPoly rel = rs.parse(line.substr(0, eq)) - rs.parse(line.substr(eq + 1));
    EXPECT_TRUE(rs.normal_form(rel).is_zero()) << line;
    EXPECT_TRUE(rs.normal_form(star(rel, rs)).is_zero()) << "star of " << line;
  }
}

}  // namespace

TEST(Subgroups, PrintedRelationsOfA) {
  QuantumGroup a = quantum_group(Subgroup::A, true);
  EXPECT_TRUE(check_confluence(a.system).ok());
  EXPECT_TRUE(a.obstructions.empty());
  expect_implied(a, {"K1 K1* = K1* K1", "K1 K2 = (q^-1) K2 K1", "K1 K2* = (q) K2* K1", "K1 K3 = (q^-2) K3 K1",
                     "K1 K3* = (q^2) K3* K1", "K1 L2 = L2 K1",
                     "K2 K2* = (q^2) K2* K2 + (q^2) K3* K3 - K1* K1 + L2 L2", "K2 K3 = (q^-1) K3 K2",
                     "K2 K3* = (q^3) K3* K2", "K2 L2 = (q) L2 K2", "K3 K3* = (q^4) K3* K3", "K3 L2 = (q^2) L2 K3"});
}

TEST(Subgroups, PrintedRelationsOfB) {
  QuantumGroup b = quantum_group(Subgroup::B, false);
  EXPECT_TRUE(check_confluence(b.system).ok());
  EXPECT_TRUE(b.obstructions.empty());
  expect_implied(b, {"K1 K1* = K1* K1", "K1 K2 = (q Q1^-1) K2 K1", "K1 K2* = (q^-1 Q1) K2* K1", "K1 L2 = L2 K1",
                     "K2 K2* = (Q1) K2* K2 - K1* K1 + L2 L2", "K2 L2 = (q) L2 K2"});
}

TEST(Subgroups, GenericAHasObstructions) {
  QuantumGroup a = quantum_group(Subgroup::A, false);
  ASSERT_EQ(a.obstructions.size(), 2u);
  const FieldElem q = FieldElem::q(), Q1 = FieldElem::Q1();
  EXPECT_EQ(a.obstructions[0], a.system.word({"L2", "K3"}, (q * q - Q1) / q));
}
