#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "qosc/ncalg.hpp"
#include "qosc/oscillator.hpp"
#include "random_field.hpp"

using namespace qosc;

namespace {

const FieldElem q = FieldElem::q();
const FieldElem Q1 = FieldElem::Q1();

NCPoly random_ncpoly(std::mt19937_64& rng, std::size_t ngens, int max_len = 3) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(ngens) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  NCPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(static_cast<GenId>(gen(rng)));
    int c = coef(rng);
    p.add_term(w, c == 0 ? FieldElem(1) : FieldElem(c) * (rng() % 2 ? q : Q1));
  }
  return p;
}

bool is_ordered_oscillator_word(const RewriteSystem& osc, const Word& w) {
  // a*^i qN^k a^j: ranks are non-decreasing
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (osc.generator(w[i]).rank > osc.generator(w[i + 1]).rank) return false;
  return true;
}

}  // namespace

TEST(NormalForm, OscillatorBasicRule) {
  RewriteSystem osc = oscillator_system();
  NCPoly expected = osc.word({"a*", "a"}, Q1) + osc.word({"qN", "qN"});
  EXPECT_EQ(osc.normal_form(osc.word({"a", "a*"})), expected);
  EXPECT_EQ(osc.normal_form(osc.word({"a*", "a"})), osc.word({"a*", "a"}));
}

TEST(NormalForm, ReductionOrderIrrelevant) {
  RewriteSystem osc = oscillator_system();
  NCPoly p = osc.word({"a", "qN", "a*"});
  NCPoly left = osc.normal_form(p, Strategy::Leftmost);
  NCPoly right = osc.normal_form(p, Strategy::Rightmost);
  EXPECT_EQ(left, right);
  // a qN a* = q qN a a* = q Q1 qN a* a + q qN^3 = q^2 Q1 a* qN a + q qN^3
  EXPECT_EQ(left, osc.word({"a*", "qN", "a"}, q * q * Q1) + osc.word({"qN", "qN", "qN"}, q));
}

TEST(NormalForm, BudgetDetectsBadOrientation) {
  RewriteSystem rs({{"x", std::nullopt, 0, 1}, {"y", std::nullopt, 1, 1}});
  rs.set_rule("y", "x", rs.word({"x", "y"}));
  rs.set_rule("x", "y", rs.word({"y", "x"}));
  EXPECT_THROW(rs.normal_form(rs.word({"y", "x"}), Strategy::Leftmost, 1000), Divergence);
  EXPECT_FALSE(check_confluence(rs).ok());
}

TEST(Confluence, Oscillator) {
  auto report = check_confluence(oscillator_system());
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.overlaps_checked, 1u);  // a qN a*
}

TEST(Confluence, CorruptedCoefficientIsCaught) {
  RewriteSystem osc = oscillator_system();
  // Q1 itself is free (any value is confluent); the q-commutation is not
  osc.set_rule("a", "qN", osc.word({"qN", "a"}, q * q));
  auto report = check_confluence(osc);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(osc.word_str(report.unresolved.front().overlap), "a qN a*");
}

TEST(Star, InvolutiveAntiautomorphism) {
  RewriteSystem osc = oscillator_system();
  EXPECT_EQ(star(osc.word({"a", "a*"}), osc), osc.word({"a", "a*"}));
  EXPECT_EQ(star(osc.word({"a", "qN"}, q), osc), osc.word({"qN", "a*"}, q));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    NCPoly p = random_ncpoly(rng, osc.size());
    NCPoly r = random_ncpoly(rng, osc.size());
    EXPECT_EQ(star(star(p, osc), osc), p);
    EXPECT_EQ(star(p * r, osc), star(r, osc) * star(p, osc));
  }
  RewriteSystem bare({{"x", std::nullopt, 0, 1}});
  EXPECT_THROW(star(bare.gen("x"), bare), StarUndefined);
}

TEST(Star, OscillatorRelationsAreStarClosed) {
  RewriteSystem osc = oscillator_system();
  for (auto [g, h] : osc.rule_keys()) {
    NCPoly rel = NCPoly::word({g, h}) - *osc.rule(g, h);
    EXPECT_TRUE(osc.normal_form(star(rel, osc)).is_zero()) << osc.str(rel);
  }
}

TEST(NormalFormProperty, ProjectionAndMultiplicative) {
  RewriteSystem osc = oscillator_system();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    NCPoly p = random_ncpoly(rng, osc.size());
    NCPoly r = random_ncpoly(rng, osc.size());
    NCPoly np = osc.normal_form(p);
    EXPECT_EQ(osc.normal_form(np), np);
    EXPECT_EQ(osc.normal_form(p * r), osc.normal_form(np * osc.normal_form(r)));
    EXPECT_EQ(osc.normal_form(p, Strategy::Rightmost), np);
  }
}

TEST(NormalFormProperty, OscillatorNormalWordsUpToDegreeFour) {
  RewriteSystem osc = oscillator_system();
  std::vector<Word> layer{{}};
  for (int d = 1; d <= 4; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (GenId g = 0; g < osc.size(); ++g) {
        Word v = w;
        v.push_back(g);
        next.push_back(v);
      }
    layer = next;
    int normal = 0;
    for (const auto& w : layer) {
      EXPECT_EQ(osc.is_normal(w), is_ordered_oscillator_word(osc, w)) << osc.word_str(w);
      normal += osc.is_normal(w);
      NCPoly nf = osc.normal_form(NCPoly::word(w));
      for (const auto& [nw, c] : nf.terms()) EXPECT_TRUE(osc.is_normal(nw));
    }
    EXPECT_EQ(normal, (d + 1) * (d + 2) / 2);
  }
}

TEST(Tensor, CommutingSquareIsConfluent) {
  RewriteSystem osc = oscillator_system();
  TensorAlgebra t = tensor_algebra(osc, osc.renamed("'"), commuting_cross);
  EXPECT_TRUE(t.report.ok());
  NCPoly lhs = t.right(osc.gen("a")) * t.left(osc.gen("a*"));
  EXPECT_EQ(t.system.normal_form(lhs), t.left(osc.gen("a*")) * t.right(osc.gen("a")));
}

TEST(Tensor, UnitAlgebraIsTrivial) {
  RewriteSystem osc = oscillator_system();
  RewriteSystem unit{std::vector<Generator>{}};
  TensorAlgebra t = tensor_algebra(osc, unit, commuting_cross);
  EXPECT_TRUE(t.report.ok());
  EXPECT_EQ(t.system.size(), osc.size());
  EXPECT_EQ(t.system.rule_count(), osc.rule_count());
}

TEST(Tensor, NameClashRejected) {
  RewriteSystem osc = oscillator_system();
  EXPECT_THROW(tensor_algebra(osc, osc, commuting_cross), Error);
}

TEST(Restriction, DropsGeneratorsAndReportsObstructions) {
  RewriteSystem osc = oscillator_system();
  Restriction r = restrict_generators(osc, {"qN"});
  EXPECT_EQ(r.system.size(), 2u);
  EXPECT_EQ(r.system.rule_count(), 1u);
  EXPECT_TRUE(r.obstructions.empty());
  // the remaining rule loses its qN qN term
  EXPECT_EQ(*r.system.rule(r.system.id("a"), r.system.id("a*")), r.system.word({"a*", "a"}, Q1));
}

TEST(Presentation, ParsePrintRoundTrip) {
  RewriteSystem osc = oscillator_system();
  std::string text = to_presentation(osc);
  RewriteSystem back = parse_presentation(text);
  EXPECT_EQ(to_presentation(back), text);
  for (auto [g, h] : osc.rule_keys()) EXPECT_EQ(*back.rule(g, h), *osc.rule(g, h));
  EXPECT_EQ(back.parse(back.str(back.word({"a", "a*"}, q - Q1))), back.word({"a", "a*"}, q - Q1));
  EXPECT_EQ(back.parse("-(q^2 - Q1) a* a + 2 qN - 1"),
            back.word({"a*", "a"}, Q1 - q * q) + back.gen("qN", 2) - NCPoly::unit());
  EXPECT_THROW(back.parse("a b"), ParseError);
}

TEST(Presentation, DataFileMatchesBuiltin) {
  std::ifstream in(QOSC_DATA_DIR "/oscillator.alg");
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  RewriteSystem file = parse_presentation(ss.str());
  RewriteSystem osc = oscillator_system();
  ASSERT_EQ(file.size(), osc.size());
  for (auto [g, h] : osc.rule_keys()) {
    GenId fg = file.id(osc.generator(g).name);
    GenId fh = file.id(osc.generator(h).name);
    ASSERT_NE(file.rule(fg, fh), nullptr);
    EXPECT_EQ(file.str(*file.rule(fg, fh)), osc.str(*osc.rule(g, h)));
  }
  EXPECT_TRUE(check_confluence(file).ok());
}
