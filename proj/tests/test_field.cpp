#include <gtest/gtest.h>

#include <random>

#include "qosc/field.hpp"
#include "random_field.hpp"

using qosc::FieldElem;
using qosc::Poly;

namespace {

FieldElem F(const char* s) { return FieldElem::parse(s); }
const FieldElem q = FieldElem::q();
const FieldElem Q1 = FieldElem::Q1();

}  // namespace

TEST(Field, AddCancels) {
  EXPECT_EQ((q * q - Q1) / (q * q) + Q1 / (q * q), FieldElem(1));
  FieldElem x = F("(q^2 - Q1)/q^2");
  EXPECT_EQ(x + FieldElem(0), x);
  EXPECT_EQ(F("1/Q1") + F("1/q"), (q + Q1) / (q * Q1));
}

TEST(Field, MulAndInverse) {
  EXPECT_EQ(F("Q1^2/q^2") * F("q^2/Q1^2"), FieldElem(1));
  EXPECT_EQ(inv(q * q * Q1.inv()), Q1 / (q * q));
  FieldElem x = F("(q - 3*Q1)/(q^2 + 1)");
  EXPECT_EQ(x * FieldElem(1), x);
  EXPECT_THROW(FieldElem(0).inv(), qosc::DivisionByZero);
}

TEST(Field, CanonicalFormIsUnique) {
  // (q^2 - Q1^2)/(q - Q1) == q + Q1 after gcd removal
  FieldElem a = (q * q - Q1 * Q1) / (q - Q1);
  EXPECT_EQ(a, q + Q1);
  EXPECT_TRUE(a.denominator().is_one());
  // leading coefficient of the denominator is normalized to 1
  FieldElem b = FieldElem(1) / (FieldElem(3) * Q1 + FieldElem(6) * q);
  EXPECT_EQ(b.denominator().leading_coefficient(), 1);
  EXPECT_EQ(b, F("1/3") / (Q1 + 2 * q));
  EXPECT_TRUE(FieldElem(0).denominator().is_one());
}

TEST(Field, BivariateGcd) {
  Poly qv = Poly::q_var();
  Poly Qv = Poly::Q1_var();
  Poly one(mpq_class(1));
  Poly c = qv * qv - Qv + one;  // irreducible common factor
  Poly a = c * (qv + Qv);
  Poly b = c * (qv * Qv - one) * qv;
  EXPECT_EQ(qosc::gcd(a, b), -c);  // monic under the Q1-major order
  EXPECT_TRUE(qosc::gcd(qv + Qv, qv - Qv).is_one());
  EXPECT_EQ(qosc::gcd(qv * qv * Qv, qv * Qv * Qv), qv * Qv);
}

TEST(Field, Eval) {
  qosc::DoublePoint p{1.7, 1.7 * 1.7};
  EXPECT_NEAR(F("(q^2 - Q1)/q^2").eval(p), 0.0, 1e-15);
  qosc::RationalPoint r{mpq_class(2), mpq_class(3)};
  EXPECT_EQ(F("Q1^2/q^2").eval(r), mpq_class(9, 4));
  qosc::RationalPoint pole{mpq_class(2), mpq_class(0)};
  EXPECT_THROW(F("1/Q1").eval(pole), qosc::EvalPole);
}

TEST(Field, SpecializeQ1ToQSquared) {
  EXPECT_TRUE(qosc::at_Q1_eq_q2(F("(q^2 - Q1)/q^2")).is_zero());
  EXPECT_EQ(qosc::at_Q1_eq_q2(F("q^2/Q1")), FieldElem(1));
}

TEST(Field, ParseGrammar) {
  EXPECT_EQ(F("Q1^-1"), Q1.inv());
  EXPECT_EQ(F("q^-2 Q1"), Q1 / (q * q));
  EXPECT_EQ(F("-(q^2 - Q1)/Q1"), (Q1 - q * q) / Q1);
  EXPECT_EQ(F("2q"), 2 * q);
  EXPECT_THROW(F("q +"), qosc::ParseError);
  EXPECT_THROW(F("1/(q - q)"), qosc::ParseError);
  EXPECT_THROW(F("x"), qosc::ParseError);
}

TEST(FieldProperty, FieldAxioms) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 150; ++i) {
    FieldElem a = qosc::testing::random_elem(rng);
    FieldElem b = qosc::testing::random_elem(rng);
    FieldElem c = qosc::testing::random_elem(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, FieldElem(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), FieldElem(1));
  }
}

TEST(FieldProperty, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(2, 9);
  for (int i = 0; i < 100; ++i) {
    FieldElem a = qosc::testing::random_elem(rng);
    FieldElem b = qosc::testing::random_elem(rng);
    qosc::RationalPoint p{mpq_class(pick(rng), 3), mpq_class(pick(rng), 5)};
    p.q.canonicalize();
    p.Q1.canonicalize();
    try {
      mpq_class ea = a.eval(p);
      mpq_class eb = b.eval(p);
      EXPECT_EQ((a * b).eval(p), ea * eb);
      EXPECT_EQ((a + b).eval(p), ea + eb);
    } catch (const qosc::EvalPole&) {
      // random point hit a pole; skip
    }
  }
}

TEST(FieldProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    FieldElem a = qosc::testing::random_elem(rng) * FieldElem::rational(i + 1, 7);
    EXPECT_EQ(F(a.str().c_str()), a) << a.str();
  }
}
