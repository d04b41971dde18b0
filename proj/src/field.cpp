#include "qosc/field.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qosc {

namespace {

bool greater_mono(const Poly::Term& a, const Poly::Term& b) { return b.first < a.first; }

Monomial mono_mul(Monomial a, Monomial b) {
  return {static_cast<std::uint16_t>(a.q + b.q), static_cast<std::uint16_t>(a.Q1 + b.Q1)};
}

Monomial mono_div(Monomial a, Monomial b) {
  return {static_cast<std::uint16_t>(a.q - b.q), static_cast<std::uint16_t>(a.Q1 - b.Q1)};
}

}  // namespace

// Builds polynomials from unsorted term lists.
class PolyBuilder {
 public:
  static Poly from_terms(std::vector<Poly::Term> terms) {
    std::sort(terms.begin(), terms.end(), greater_mono);
    Poly out;
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first) {
        out.terms_.back().second += t.second;
      } else {
        if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
        out.terms_.push_back(std::move(t));
      }
    }
    if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
    return out;
  }

  // Both inputs sorted; computes a + sign*b.
  static Poly merge(const Poly& a, const Poly& b, int sign) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ib->first < ia->first)) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ia->first < ib->first) {
        out.terms_.emplace_back(ib->first, sign > 0 ? ib->second : mpq_class(-ib->second));
        ++ib;
      } else {
        mpq_class c = sign > 0 ? mpq_class(ia->second + ib->second) : mpq_class(ia->second - ib->second);
        if (c != 0) out.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  static std::vector<Poly::Term>& raw(Poly& p) { return p.terms_; }
};

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(Monomial m, const mpq_class& c) {
  if (c != 0) terms_.emplace_back(m, c);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

int Poly::degree_q() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.q);
  return d;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().first;
  for (const auto& t : terms_) {
    m.q = std::min(m.q, t.first.q);
    m.Q1 = std::min(m.Q1, t.first.Q1);
  }
  return m;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) { return PolyBuilder::merge(a, b, +1); }
Poly operator-(const Poly& a, const Poly& b) { return PolyBuilder::merge(a, b, -1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  if (a.is_monomial()) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  std::vector<Poly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(mono_mul(ma, mb), ca * cb);
  return PolyBuilder::from_terms(std::move(terms));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  if (c == 1) return *this;
  Poly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Poly Poly::shifted(Monomial m) const {
  Poly out = *this;
  for (auto& t : out.terms_) t.first = mono_mul(t.first, m);
  return out;
}

Poly Poly::unshifted(Monomial m) const {
  Poly out = *this;
  for (auto& t : out.terms_) t.first = mono_div(t.first, m);
  return out;
}

std::pair<Poly, Poly> Poly::divide(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  const Monomial lm = d.leading_monomial();
  const mpq_class lc = d.leading_coefficient();
  Poly p = *this;
  std::vector<Term> quot;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const auto& [m, c] = p.terms_.front();
    if (lm.divides(m)) {
      Poly t(mono_div(m, lm), c / lc);
      quot.push_back(t.terms_.front());
      p = p - t * d;
    } else {
      rem.push_back(p.terms_.front());
      p.terms_.erase(p.terms_.begin());
    }
  }
  return {PolyBuilder::from_terms(std::move(quot)), PolyBuilder::from_terms(std::move(rem))};
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_monomial()) {
    const auto& [m, c] = d.terms_.front();
    for (const auto& t : terms_)
      if (!m.divides(t.first)) throw std::logic_error("inexact monomial division");
    return unshifted(m).scaled(1 / c);
  }
  auto [quot, rem] = divide(d);
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return quot;
}

Poly Poly::coeff_Q1(int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.first.Q1 == k) out.emplace_back(Monomial{t.first.q, 0}, t.second);
  return PolyBuilder::from_terms(std::move(out));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m == Monomial{};
    if (constant || a != 1) {
      os << a.get_str();
      if (!constant) os << "*";
    }
    bool need_star = false;
    if (m.q > 0) {
      os << "q";
      if (m.q > 1) os << "^" << m.q;
      need_star = true;
    }
    if (m.Q1 > 0) {
      if (need_star) os << "*";
      os << "Q1";
      if (m.Q1 > 1) os << "^" << m.Q1;
    }
  }
  return os.str();
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_coefficient());
}

// gcd of polynomials in q alone.
Poly gcd_univariate(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divide(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly content_Q1(const Poly& a) {
  Poly g;
  for (int k = a.degree_Q1(); k >= 0; --k) {
    Poly c = a.coeff_Q1(k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_univariate(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part(const Poly& a) {
  Poly c = content_Q1(a);
  return c.is_one() ? monic(a) : monic(a.exact_div(c));
}

Poly pseudo_remainder(Poly a, const Poly& b) {
  const int db = b.degree_Q1();
  const Poly lcb = b.coeff_Q1(db);
  while (!a.is_zero() && a.degree_Q1() >= db) {
    const int da = a.degree_Q1();
    Poly lca = a.coeff_Q1(da).shifted({0, static_cast<std::uint16_t>(da - db)});
    a = a * lcb - lca * b;
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const Monomial ma = a.min_exponents();
  const Monomial mb = b.min_exponents();
  const Monomial mg{std::min(ma.q, mb.q), std::min(ma.Q1, mb.Q1)};
  const Poly mono(mg, 1);
  if (a.is_monomial() || b.is_monomial()) return mono;
  Poly ar = a.unshifted(ma);
  Poly br = b.unshifted(mb);
  if (ar.is_constant() || br.is_constant()) return mono;

  Poly cont = gcd_univariate(content_Q1(ar), content_Q1(br));
  Poly pa = primitive_part(ar);
  Poly pb = primitive_part(br);
  if (pa.degree_Q1() < pb.degree_Q1()) std::swap(pa, pb);
  Poly g;
  if (pb.degree_Q1() == 0) {
    g = Poly(mpq_class(1));
  } else {
    while (!pb.is_zero()) {
      Poly r = pseudo_remainder(pa, pb);
      pa = std::move(pb);
      pb = r.is_zero() ? Poly() : primitive_part(r);
    }
    g = pa.degree_Q1() == 0 ? Poly(mpq_class(1)) : primitive_part(pa);
  }
  return monic(mono * cont * g);
}

FieldElem::FieldElem(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}

FieldElem::FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void FieldElem::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(mpq_class(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

FieldElem FieldElem::operator-() const {
  FieldElem out = *this;
  out.num_ = -out.num_;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    if (!den_.is_one()) canonicalize();
    if (num_.is_zero()) den_ = Poly(mpq_class(1));
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly od = o.den_.exact_div(g);
  num_ = num_ * od + o.num_ * den_.exact_div(g);
  den_ = den_ * od;
  canonicalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  const mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inv(); }

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  FieldElem out;
  out.num_ = den_;
  out.den_ = num_;
  const mpq_class lc = out.den_.leading_coefficient();
  if (lc != 1) {
    out.num_ = out.num_.scaled(1 / lc);
    out.den_ = out.den_.scaled(1 / lc);
  }
  return out;
}

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem result(1);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElem inv(const FieldElem& x) { return x.inv(); }
FieldElem pow(const FieldElem& x, int e) { return x.pow(e); }

mpq_class FieldElem::eval(const RationalPoint& p) const {
  mpq_class d = den_.eval(p.q, p.Q1);
  if (d == 0) throw EvalPole(str());
  return num_.eval(p.q, p.Q1) / d;
}

double FieldElem::eval(const DoublePoint& p) const {
  double d = den_.eval(p.q, p.Q1);
  if (d == 0.0) throw EvalPole(str());
  return num_.eval(p.q, p.Q1) / d;
}

namespace {

FieldElem substitute_poly(const Poly& p, const FieldElem& qv, const FieldElem& Q1v) {
  std::vector<FieldElem> qpow{FieldElem(1)};
  std::vector<FieldElem> Qpow{FieldElem(1)};
  FieldElem acc;
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(qpow.size()) <= m.q) qpow.push_back(qpow.back() * qv);
    while (static_cast<int>(Qpow.size()) <= m.Q1) Qpow.push_back(Qpow.back() * Q1v);
    acc += FieldElem(c) * qpow[m.q] * Qpow[m.Q1];
  }
  return acc;
}

}  // namespace

FieldElem FieldElem::substitute(const FieldElem& q_value, const FieldElem& Q1_value) const {
  FieldElem d = substitute_poly(den_, q_value, Q1_value);
  if (d.is_zero()) throw EvalPole(str());
  return substitute_poly(num_, q_value, Q1_value) / d;
}

FieldElem at_Q1_eq_q2(const FieldElem& x) {
  static const FieldElem q = FieldElem::q();
  static const FieldElem q2 = q * q;
  return x.substitute(q, q2);
}

std::string FieldElem::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  const bool bare = den_.is_monomial() && den_.leading_coefficient() == 1 &&
                    (den_.leading_monomial().q == 0 || den_.leading_monomial().Q1 == 0);
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.str(); }
void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }

// Recursive-descent parser for the expression grammar
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | 'q' | 'Q1' | '(' expr ')'
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FieldElem parse_all() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'Q' || c == '(';
  }

  FieldElem expr() {
    FieldElem v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  FieldElem term() {
    FieldElem v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        FieldElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  FieldElem unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  FieldElem power() {
    FieldElem base = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      long e = integer();
      if (neg && base.is_zero()) fail("zero to a negative power");
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  FieldElem atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElem v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElem(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (s_.substr(pos_, 2) == "Q1") {
      pos_ += 2;
      return FieldElem::Q1();
    }
    if (c == 'q') {
      ++pos_;
      return FieldElem::q();
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qosc
