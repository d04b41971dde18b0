#include "qosc/braided.hpp"

#include <functional>

#include "qosc/errors.hpp"
#include "qosc/oscillator.hpp"

namespace qosc {

namespace {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string coef_prefix(const FieldElem& c, bool first) {
  if (c.is_one()) return first ? "" : " + ";
  if ((-c).is_one()) return first ? "-" : " - ";
  return (first ? "(" : " + (") + c.str() + ") ";
}

std::vector<std::pair<int, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0, sign = 1;
  std::string cur;
  auto blank = [](const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!blank(cur)) {
        out.emplace_back(sign, cur);
        cur.clear();
        sign = ch == '-' ? -1 : 1;
      } else {
        sign *= ch == '-' ? -1 : 1;
      }
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  if (!blank(cur)) out.emplace_back(sign, cur);
  return out;
}

// Words used by the axiom battery: generators and normal words of degree 2.
std::vector<Word> test_words(const BraidedStructure& b) {
  std::vector<Word> out;
  for (GenId g : b.x) out.push_back({g});
  for (GenId g : b.x)
    for (GenId h : b.x)
      if (b.algebra.is_normal({g, h})) out.push_back({g, h});
  return out;
}

struct AxiomRun {
  std::string id, anchor;
  int tested = 0, failed = 0;
  std::string first{};

  void record(bool ok, const std::string& tuple, const std::string& residual) {
    ++tested;
    if (ok) return;
    if (!failed++) first = tuple + ": " + residual;
  }
  CheckResult result() const {
    return check(id, anchor, failed == 0,
                 failed ? std::to_string(failed) + "/" + std::to_string(tested) + " fail, e.g. " + first
                        : std::to_string(tested) + " cases");
  }
};

}  // namespace

BraidedStructure paper_braided() {
  BraidedStructure b;
  b.algebra = oscillator_system();
  b.rprime = paper_Rprime();
  b.x = oscillator_covector(b.algebra);
  b.label = "generic R'";
  return b;
}

BraidedStructure braided_at_q2(const BigRMatrix& rprime, std::string label) {
  BraidedStructure b;
  b.algebra = map_rule_coefficients(oscillator_system(), at_Q1_eq_q2);
  b.rprime = substitute_Q1_q2(rprime);
  b.x = oscillator_covector(b.algebra);
  b.label = std::move(label);
  return b;
}

BraidedStructure flip_braided() {
  BraidedStructure b = paper_braided();
  b.rprime = BigRMatrix::Identity();
  b.label = "flip";
  return b;
}

Braiding::Braiding(BraidedStructure b) : b_(std::move(b)) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Tensor2 t;
      for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) t.add_term({Word{b_.x[c]}, Word{b_.x[a]}}, b_.rprime(pair_index(a, c), pair_index(i, j)));
      gen_psi_[{Word{b_.x[i]}, Word{b_.x[j]}}] = t;
    }
}

template <int N>
Tensor<N> Braiding::normalize(const Tensor<N>& t) const {
  Tensor<N> out;
  for (const auto& [key, c] : t.terms()) {
    std::vector<std::pair<typename Tensor<N>::Key, FieldElem>> acc{{{}, c}};
    for (int leg = 0; leg < N; ++leg) {
      const NCPoly nf = b_.algebra.normal_form(NCPoly::word(key[leg]));
      std::vector<std::pair<typename Tensor<N>::Key, FieldElem>> next;
      for (const auto& [k, v] : acc)
        for (const auto& [w, d] : nf.terms()) {
          auto k2 = k;
          k2[leg] = w;
          next.emplace_back(k2, v * d);
        }
      acc = std::move(next);
    }
    for (const auto& [k, v] : acc) out.add_term(k, v);
  }
  return out;
}

template Tensor2 Braiding::normalize(const Tensor2&) const;
template Tensor3 Braiding::normalize(const Tensor3&) const;

const Tensor2& Braiding::psi(const Word& u, const Word& v) const {
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Tensor2 raw;
  if (u.empty() || v.empty()) {
    raw.add_term({v, u}, 1);
  } else if (u.size() == 1 && v.size() == 1) {
    raw = gen_psi_.at(key);
  } else if (u.size() > 1) {
    // psi(x u' (x) v) = (id (x) m)(psi (x) id)(x (x) psi(u' (x) v))
    const Word x{u[0]}, rest(u.begin() + 1, u.end());
    const Tensor2 inner = psi(rest, v);
    for (const auto& [k, c] : inner.terms())
      for (const auto& [k2, d] : psi(x, k[0]).terms()) raw.add_term({k2[0], concat(k2[1], k[1])}, c * d);
  } else {
    // psi(x (x) y v') = (m (x) id)(id (x) psi)(psi (x) id)(x (x) y (x) v')
    const Word y{v[0]}, rest(v.begin() + 1, v.end());
    const Tensor2 first = psi(u, y);
    for (const auto& [k, c] : first.terms())
      for (const auto& [k2, d] : psi(k[1], rest).terms()) raw.add_term({concat(k[0], k2[0]), k2[1]}, c * d);
  }
  return memo_.emplace(key, normalize(raw)).first->second;
}

Tensor2 Braiding::psi(const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [k, c] : t.terms()) out += c * psi(k[0], k[1]);
  return out;
}

Tensor3 Braiding::psi12(const Tensor3& t) const {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [k2, d] : psi(k[0], k[1]).terms()) out.add_term({k2[0], k2[1], k[2]}, c * d);
  return out;
}

Tensor3 Braiding::psi23(const Tensor3& t) const {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [k2, d] : psi(k[1], k[2]).terms()) out.add_term({k[0], k2[0], k2[1]}, c * d);
  return out;
}

Tensor2 Braiding::product(const Tensor2& l, const Tensor2& r) const {
  Tensor2 raw;
  for (const auto& [a, c] : l.terms())
    for (const auto& [b, d] : r.terms())
      for (const auto& [k, e] : psi(a[1], b[0]).terms()) raw.add_term({concat(a[0], k[0]), concat(k[1], b[1])}, c * d * e);
  return normalize(raw);
}

NCPoly Braiding::multiply(const Tensor2& t) const {
  NCPoly out;
  for (const auto& [k, c] : t.terms()) out.add_term(concat(k[0], k[1]), c);
  return b_.algebra.normal_form(out);
}

Tensor2 Braiding::tensor(const NCPoly& l, const NCPoly& r) const {
  Tensor2 out;
  for (const auto& [u, c] : l.terms())
    for (const auto& [v, d] : r.terms()) out.add_term({u, v}, c * d);
  return normalize(out);
}

Tensor2 Braiding::coproduct(const NCPoly& p) const {
  Tensor2 out;
  const NCPoly nf = b_.algebra.normal_form(p);
  for (const auto& [w, c] : nf.terms()) {
    Tensor2 acc = Tensor2::basis({Word{}, Word{}});
    for (GenId g : w) {
      Tensor2 prim = Tensor2::basis({Word{g}, Word{}});
      prim.add_term({Word{}, Word{g}}, 1);
      acc = product(acc, prim);
    }
    out += c * acc;
  }
  return out;
}

FieldElem Braiding::counit(const NCPoly& p) const { return b_.algebra.normal_form(p).coefficient({}); }

NCPoly Braiding::antipode(const NCPoly& p) const {
  // S(x w') = m psi(S(x) (x) S(w')), S(x) = -x
  std::function<NCPoly(const Word&)> word_s = [&](const Word& w) -> NCPoly {
    if (w.empty()) return NCPoly::unit();
    if (w.size() == 1) return NCPoly::gen(w[0], -1);
    const Word rest(w.begin() + 1, w.end());
    return multiply(psi(tensor(NCPoly::gen(w[0], -1), word_s(rest))));
  };
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += c * word_s(w);
  return b_.algebra.normal_form(out);
}

std::string Braiding::str(const Tensor2& t) const {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    s += coef_prefix(it->second, first) + b_.algebra.word_str(it->first[0]) + " | " + b_.algebra.word_str(it->first[1]);
    first = false;
  }
  return s;
}

std::string Braiding::str(const Tensor3& t) const {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    s += coef_prefix(it->second, first) + b_.algebra.word_str(it->first[0]) + " | " +
         b_.algebra.word_str(it->first[1]) + " | " + b_.algebra.word_str(it->first[2]);
    first = false;
  }
  return s;
}

Tensor2 Braiding::parse(std::string_view text) const {
  Tensor2 out;
  for (const auto& [sign, term] : split_terms(text)) {
    auto bar = term.find('|');
    if (bar == std::string::npos) throw ParseError("tensor term without '|': " + term);
    out += FieldElem(sign) * tensor(b_.algebra.parse(term.substr(0, bar)), b_.algebra.parse(term.substr(bar + 1)));
  }
  return out;
}

const std::vector<PrintedBraiding>& printed_braidings() {
  static const std::vector<PrintedBraiding> list{
      {"qN | qN", "(q^2 Q1^-1) qN | qN"},
      {"qN | a", "(q Q1^-1) a | qN"},
      {"a* | qN", "(q Q1^-1) qN | a*"},
      {"qN | a*", "(q) a* | qN + (Q1^-1 (q^2 - Q1)) qN | a*"},
      {"a | qN", "(q) qN | a + (Q1^-1 (q^2 - Q1)) a | qN"},
      {"a | a", "(q^2 Q1^-1) a | a"},
      {"a* | a*", "(q^2 Q1^-1) a* | a*"},
      {"a | a*", "(Q1^-1 (q^2 - Q1)) a | a* + (Q1) a* | a + qN | qN"},
      {"a* | a", "-(q^2 Q1^-2) qN | qN + (q^2 Q1^-2) a | a*"},
  };
  return list;
}

std::vector<CheckResult> braiding_list_check(const Braiding& br) {
  std::vector<CheckResult> out;
  for (const auto& p : printed_braidings()) {
    const Tensor2 lhs = br.psi(br.parse(p.lhs));
    const Tensor2 rhs = br.parse(p.rhs);
    out.push_back(check("psi[" + p.lhs + "]", "psi(" + p.lhs + ") = " + p.rhs, lhs == rhs,
                        lhs == rhs ? "" : "computed " + br.str(lhs)));
  }
  const Tensor2 unit = br.psi(br.parse("1 | a"));
  out.push_back(check("psi[1 | a]", "psi(1 | a) = a | 1", unit == br.parse("a | 1"), br.str(unit)));
  return out;
}

std::vector<CheckResult> braided_axiom_suite(const Braiding& br) {
  const BraidedStructure& b = br.structure();
  const RewriteSystem& alg = b.algebra;
  const std::vector<Word> words = test_words(b);
  auto ws = [&](const Word& w) { return alg.word_str(w); };
  auto poly = [](const Word& w) { return NCPoly::word(w); };

  auto delta3_left = [&](const Tensor2& t) {  // (Delta (x) id)
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
      const Tensor2 d0 = br.coproduct(poly(k[0]));
      for (const auto& [k2, d] : d0.terms()) out.add_term({k2[0], k2[1], k[1]}, c * d);
    }
    return out;
  };
  auto delta3_right = [&](const Tensor2& t) {  // (id (x) Delta)
    Tensor3 out;
    for (const auto& [k, c] : t.terms()) {
      const Tensor2 d1 = br.coproduct(poly(k[1]));
      for (const auto& [k2, d] : d1.terms()) out.add_term({k[0], k2[0], k2[1]}, c * d);
    }
    return out;
  };

  std::vector<CheckResult> out;

  AxiomRun assoc{"axiom.associativity", "m (id (x) m) = m (m (x) id)"};
  AxiomRun unit{"axiom.unit", "m (id (x) eta) = m (eta (x) id) = id"};
  AxiomRun braid{"axiom.braid-relation", "(psi (x) id)(id (x) psi)(psi (x) id) = (id (x) psi)(psi (x) id)(id (x) psi)"};
  AxiomRun hex1{"axiom.hexagon-left", "psi (m (x) id) = (id (x) m)(psi (x) id)(id (x) psi)"};
  AxiomRun hex2{"axiom.hexagon-right", "psi (id (x) m) = (m (x) id)(id (x) psi)(psi (x) id)"};
  for (GenId x : b.x)
    for (GenId y : b.x)
      for (GenId z : b.x) {
        const std::string tuple = "(" + alg.word_str({x}) + ", " + alg.word_str({y}) + ", " + alg.word_str({z}) + ")";
        const NCPoly l = alg.normal_form(alg.normal_form(NCPoly::word({x, y})) * NCPoly::gen(z));
        const NCPoly r = alg.normal_form(NCPoly::gen(x) * alg.normal_form(NCPoly::word({y, z})));
        assoc.record(l == r, tuple, alg.str(l - r));

        const Tensor3 t = Tensor3::basis({Word{x}, Word{y}, Word{z}});
        const Tensor3 bl = br.psi12(br.psi23(br.psi12(t)));
        const Tensor3 brr = br.psi23(br.psi12(br.psi23(t)));
        braid.record(bl == brr, tuple, br.str(bl - brr));

        // hexagon sides built from generator braidings only
        Tensor2 lhs1 = br.psi(br.tensor(alg.normal_form(NCPoly::word({x, y})), NCPoly::gen(z)));
        Tensor2 rhs1;
        for (const auto& [k, c] : br.psi({y}, {z}).terms())
          for (const auto& [k2, d] : br.psi({x}, k[0]).terms())
            rhs1.add_term({k2[0], concat(k2[1], k[1])}, c * d);
        rhs1 = br.normalize(rhs1);
        hex1.record(lhs1 == rhs1, tuple, br.str(lhs1 - rhs1));

        Tensor2 lhs2 = br.psi(br.tensor(NCPoly::gen(x), alg.normal_form(NCPoly::word({y, z}))));
        Tensor2 rhs2;
        for (const auto& [k, c] : br.psi({x}, {y}).terms())
          for (const auto& [k2, d] : br.psi(k[1], {z}).terms())
            rhs2.add_term({concat(k[0], k2[0]), k2[1]}, c * d);
        rhs2 = br.normalize(rhs2);
        hex2.record(lhs2 == rhs2, tuple, br.str(lhs2 - rhs2));
      }

  AxiomRun coassoc{"axiom.coassociativity", "(id (x) Delta) Delta = (Delta (x) id) Delta"};
  AxiomRun counit{"axiom.counit", "(epsilon (x) id) Delta = (id (x) epsilon) Delta = id"};
  AxiomRun antipode{"axiom.antipode", "m (id (x) S) Delta = m (S (x) id) Delta = eta epsilon"};
  AxiomRun delta_s{"axiom.coproduct-antipode", "Delta S = (S (x) S) psi Delta"};
  for (const Word& w : words) {
    const NCPoly p = poly(w);
    unit.record(alg.normal_form(NCPoly::unit() * p) == p && alg.normal_form(p * NCPoly::unit()) == p, ws(w), "");
    const Tensor2 d = br.coproduct(p);
    const Tensor3 l = delta3_left(d), r = delta3_right(d);
    coassoc.record(l == r, ws(w), br.str(l - r));

    NCPoly el, er, sl, sr;
    for (const auto& [k, c] : d.terms()) {
      el += c * br.counit(poly(k[0])) * poly(k[1]);
      er += c * br.counit(poly(k[1])) * poly(k[0]);
      sl += c * alg.normal_form(poly(k[0]) * br.antipode(poly(k[1])));
      sr += c * alg.normal_form(br.antipode(poly(k[0])) * poly(k[1]));
    }
    counit.record(el == p && er == p, ws(w), alg.str(el - p) + " ; " + alg.str(er - p));
    const NCPoly eps = NCPoly::scalar(br.counit(p));
    antipode.record(sl == eps && sr == eps, ws(w), alg.str(sl - eps) + " ; " + alg.str(sr - eps));

    Tensor2 ss;
    const Tensor2 pd = br.psi(d);
    for (const auto& [k, c] : pd.terms()) ss += c * br.tensor(br.antipode(poly(k[0])), br.antipode(poly(k[1])));
    const Tensor2 ds = br.coproduct(br.antipode(p));
    delta_s.record(ds == ss, ws(w), br.str(ds - ss));
  }

  AxiomRun dpsi_r{"axiom.coproduct-braiding-right", "(id (x) Delta) psi = (psi (x) id)(id (x) psi)(Delta (x) id)"};
  AxiomRun dpsi_l{"axiom.coproduct-braiding-left", "(Delta (x) id) psi = (id (x) psi)(psi (x) id)(id (x) Delta)"};
  AxiomRun dm{"axiom.coproduct-multiplicative", "Delta m = (m (x) m)(id (x) psi (x) id)(Delta (x) Delta)"};
  AxiomRun sm{"axiom.antipode-braided-antihom", "S m = m psi (S (x) S)"};
  AxiomRun em{"axiom.counit-multiplicative", "epsilon m = epsilon (x) epsilon"};
  for (const Word& u : words)
    for (const Word& v : words) {
      const std::string tuple = "(" + ws(u) + ", " + ws(v) + ")";
      const Tensor2 uv = Tensor2::basis({u, v});
      const Tensor3 l1 = delta3_right(br.psi(uv)), r1 = br.psi12(br.psi23(delta3_left(uv)));
      dpsi_r.record(l1 == r1, tuple, br.str(l1 - r1));
      const Tensor3 l2 = delta3_left(br.psi(uv)), r2 = br.psi23(br.psi12(delta3_right(uv)));
      dpsi_l.record(l2 == r2, tuple, br.str(l2 - r2));

      const NCPoly prod = alg.normal_form(poly(concat(u, v)));
      const Tensor2 lhs = br.coproduct(prod), rhs = br.product(br.coproduct(poly(u)), br.coproduct(poly(v)));
      dm.record(lhs == rhs, tuple, br.str(lhs - rhs));

      const NCPoly s1 = br.antipode(prod);
      const NCPoly s2 = br.multiply(br.psi(br.tensor(br.antipode(poly(u)), br.antipode(poly(v)))));
      sm.record(s1 == s2, tuple, alg.str(s1 - s2));

      em.record(br.counit(prod) == br.counit(poly(u)) * br.counit(poly(v)), tuple, "");
    }

  for (const AxiomRun* a : {&assoc, &unit, &coassoc, &counit, &antipode, &hex1, &hex2, &dpsi_r, &dpsi_l, &dm, &sm,
                            &delta_s, &em, &braid})
    out.push_back(a->result());
  return out;
}

std::vector<CheckResult> braided_coproduct_homomorphism_check(const Braiding& br, bool braided) {
  const RewriteSystem& alg = br.algebra();
  CrossRule cross = commuting_cross;
  if (braided) {
    cross = [&br](GenId r, GenId l, const TensorAlgebra& t) {
      // (1 (x) r)(l (x) 1) = psi(r (x) l)
      NCPoly out;
      for (const auto& [k, c] : br.psi({r}, {l}).terms()) out += c * (t.left(NCPoly::word(k[0])) * t.right(NCPoly::word(k[1])));
      return out;
    };
  }
  const TensorAlgebra t = tensor_algebra(alg, alg.renamed("~"), cross);
  std::vector<NCPoly> images(alg.size());
  for (std::size_t g = 0; g < alg.size(); ++g)
    images[g] = NCPoly::gen(static_cast<GenId>(g)) + NCPoly::gen(t.right(static_cast<GenId>(g)));

  std::vector<CheckResult> out;
  const std::string kind = braided ? "braided" : "flip";
  for (auto [g, h] : alg.rule_keys()) {
    const NCPoly rel = NCPoly::word({g, h}) - *alg.rule(g, h);
    const NCPoly r = t.system.normal_form(apply_hom(rel, images, t.system));
    out.push_back(check("coproduct." + kind + "." + alg.word_str({g, h}),
                        "Delta(x) = x (x) 1 + 1 (x) x respects " + alg.word_str({g, h}) + " = " + alg.str(*alg.rule(g, h)),
                        r.is_zero(), r.is_zero() ? "" : t.system.str(r)));
  }
  out.push_back(check("coproduct." + kind + ".square-confluent", "the " + kind + " tensor square is confluent",
                      t.report.ok(), std::to_string(t.report.unresolved.size()) + " unresolved overlaps"));
  return out;
}

std::vector<CheckResult> braided_star_check(const Braiding& br) {
  const BraidedStructure& b = br.structure();
  const RewriteSystem& alg = b.algebra;
  auto tstar = [&](const Tensor2& t) {  // (u (x) v)* = v* (x) u*
    Tensor2 out;
    for (const auto& [k, c] : t.terms())
      out += c * br.tensor(star(NCPoly::word(k[1]), alg), star(NCPoly::word(k[0]), alg));
    return out;
  };

  AxiomRun dstar{"star.coproduct", "Delta * = pi (* (x) *) Delta"};
  AxiomRun sstar{"star.antipode", "S * = * S"};
  for (const Word& w : test_words(b)) {
    const NCPoly p = NCPoly::word(w);
    const NCPoly ps = alg.normal_form(star(p, alg));
    const Tensor2 l = br.coproduct(ps), r = tstar(br.coproduct(p));
    dstar.record(l == r, alg.word_str(w), br.str(l - r));
    const NCPoly s1 = br.antipode(ps), s2 = alg.normal_form(star(br.antipode(p), alg));
    sstar.record(s1 == s2, alg.word_str(w), alg.str(s1 - s2));
  }

  AxiomRun tensor_star{"star.tensor-product", "((a (x) b)(c (x) d))* = (c (x) d)* (a (x) b)* with (a (x) b)* = b* (x) a*"};
  std::vector<Word> atoms{{}};
  for (GenId g : b.x) atoms.push_back({g});
  for (const Word& a : atoms)
    for (const Word& c : atoms)
      for (const Word& d : atoms)
        for (const Word& e : atoms) {
          const Tensor2 x = Tensor2::basis({a, c}), y = Tensor2::basis({d, e});
          const Tensor2 l = tstar(br.product(x, y)), r = br.product(tstar(y), tstar(x));
          tensor_star.record(l == r,
                             "(" + alg.word_str(a) + " | " + alg.word_str(c) + ")(" + alg.word_str(d) + " | " +
                                 alg.word_str(e) + ")",
                             br.str(l - r));
        }
  return {dstar.result(), sstar.result(), tensor_star.result()};
}

std::vector<CheckResult> relation_tensor_check(const Braiding& br) {
  const RewriteSystem& alg = br.algebra();
  std::vector<CheckResult> out;
  for (auto [g, h] : alg.rule_keys()) {
    Tensor2 rho = Tensor2::basis({Word{g}, Word{h}});
    for (const auto& [w, c] : alg.rule(g, h)->terms()) {
      if (w.size() != 2) throw Error("relation is not quadratic");
      rho.add_term({Word{w[0]}, Word{w[1]}}, -c);
    }
    const Tensor2 p = br.psi(rho);
    const NCPoly mp = br.multiply(p), m = br.multiply(rho);
    const bool ok = (p + rho).is_zero() && mp.is_zero() && m.is_zero();
    out.push_back(check("relation-tensor." + alg.word_str({g, h}),
                        "(PR'+1)(PR-1) = 0: psi(rho) = -rho and m psi(rho) = m(rho) = 0 for rho = " +
                            alg.word_str({g, h}) + " - (" + alg.str(*alg.rule(g, h)) + ")",
                        ok, ok ? "" : "psi(rho) + rho = " + br.str(p + rho) + "; m psi(rho) = " + alg.str(mp)));
  }
  return out;
}

std::vector<CheckResult> involutivity_info(const Braiding& br) {
  const BraidedStructure& b = br.structure();
  std::vector<CheckResult> out;
  for (GenId x : b.x)
    for (GenId y : b.x) {
      const Tensor2 t = Tensor2::basis({Word{x}, Word{y}});
      const Tensor2 tt = br.psi(br.psi(t));
      const std::string pair = b.algebra.word_str({x}) + " | " + b.algebra.word_str({y});
      out.push_back({"psi-squared[" + pair + "]", "psi^2 = id on " + pair, Status::Info,
                     tt == t ? "holds" : "fails: " + br.str(tt)});
    }
  return out;
}

}  // namespace qosc
