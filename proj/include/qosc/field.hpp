#pragma once

// Exact arithmetic in Q(q, Q1), the field of rational functions in the two
// deformation parameters.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qosc/errors.hpp"

namespace qosc {

/// Exponents of q^i Q1^j. Ordered lexicographically with Q1 the major variable.
struct Monomial {
  std::uint16_t q = 0;
  std::uint16_t Q1 = 0;

  friend bool operator==(Monomial a, Monomial b) { return a.q == b.q && a.Q1 == b.Q1; }
  friend bool operator<(Monomial a, Monomial b) {
    return a.Q1 != b.Q1 ? a.Q1 < b.Q1 : a.q < b.q;
  }
  bool divides(Monomial other) const { return q <= other.q && Q1 <= other.Q1; }
};

/// Polynomial in q, Q1 with rational coefficients. Terms are kept sorted in
/// strictly decreasing monomial order with no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Poly() = default;
  explicit Poly(const mpq_class& c);
  Poly(Monomial m, const mpq_class& c);

  static Poly q_var() { return Poly({1, 0}, 1); }
  static Poly Q1_var() { return Poly({0, 1}, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{}); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const mpq_class& leading_coefficient() const { return terms_.front().second; }
  int degree_Q1() const { return terms_.empty() ? -1 : terms_.front().first.Q1; }
  int degree_q() const;
  Monomial min_exponents() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  Poly shifted(Monomial m) const;        // multiply by the monomial m
  Poly unshifted(Monomial m) const;      // divide by a monomial dividing every term

  /// Multivariate division by d's leading term; returns {quotient, remainder}.
  std::pair<Poly, Poly> divide(const Poly& d) const;
  /// Division known to be exact; throws std::logic_error otherwise.
  Poly exact_div(const Poly& d) const;

  /// Coefficient of Q1^k as a polynomial in q alone.
  Poly coeff_Q1(int k) const;

  template <class T>
  T eval(const T& qv, const T& Q1v) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string str() const;
  friend void PrintTo(const Poly& p, std::ostream* os);

 private:
  friend class PolyBuilder;
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized to leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);

/// Point at which rational functions are evaluated; both coordinates nonzero.
template <class T>
struct NumericPoint {
  T q;
  T Q1;
};
using RationalPoint = NumericPoint<mpq_class>;
using DoublePoint = NumericPoint<double>;

/// An element of Q(q, Q1) in canonical form: coprime numerator and
/// denominator, denominator with leading coefficient 1, zero stored as 0/1.
class FieldElem {
 public:
  FieldElem() : den_(mpq_class(1)) {}
  FieldElem(int c) : FieldElem(mpq_class(c)) {}  // NOLINT: implicit literal conversion
  explicit FieldElem(const mpq_class& c);
  explicit FieldElem(const Poly& p) : num_(p), den_(mpq_class(1)) {}
  FieldElem(Poly num, Poly den);

  static FieldElem q() { return FieldElem(Poly::q_var()); }
  static FieldElem Q1() { return FieldElem(Poly::Q1_var()); }
  static FieldElem rational(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return FieldElem(r);
  }
  static FieldElem parse(std::string_view text);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem inv() const;
  FieldElem pow(int e) const;

  /// Exact substitution value; throws EvalPole where the denominator vanishes.
  mpq_class eval(const RationalPoint& p) const;
  double eval(const DoublePoint& p) const;
  /// Substitute field elements for q and Q1 (e.g. Q1 -> q^2).
  FieldElem substitute(const FieldElem& q_value, const FieldElem& Q1_value) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& x);
  friend void PrintTo(const FieldElem& x, std::ostream* os) { *os << x.str(); }

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

FieldElem inv(const FieldElem& x);
FieldElem pow(const FieldElem& x, int e);

/// Q1 -> q^2, the two-parameter specialization.
FieldElem at_Q1_eq_q2(const FieldElem& x);

template <class T>
T Poly::eval(const T& qv, const T& Q1v) const {
  T acc = T(0);
  for (const auto& [m, c] : terms_) {
    T t;
    if constexpr (std::is_same_v<T, mpq_class>) {
      t = c;
    } else {
      t = c.get_d();
    }
    for (int i = 0; i < m.q; ++i) t *= qv;
    for (int i = 0; i < m.Q1; ++i) t *= Q1v;
    acc += t;
  }
  return acc;
}

}  // namespace qosc

namespace Eigen {
template <>
struct NumTraits<qosc::FieldElem> : GenericNumTraits<qosc::FieldElem> {
  using Real = qosc::FieldElem;
  using NonInteger = qosc::FieldElem;
  using Literal = qosc::FieldElem;
  using Nested = qosc::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 50,
    MulCost = 100
  };
  // only consulted by Eigen's stream output
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};
}  // namespace Eigen
