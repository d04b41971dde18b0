#include "qosc/qgroup.hpp"

#include <algorithm>

#include "qosc/errors.hpp"
#include "qosc/exact_linalg.hpp"
#include "qosc/oscillator.hpp"

namespace qosc {

namespace {

const char* const kNames[9] = {"K1", "K1*", "K2", "K2*", "K3", "K3*", "L1", "L1*", "L2"};
// K and L1 entries are light, K2/K2* heavy and L2 in between; with these
// weights every relation from RTT has its ascending word as leading term.
const int kWeights[9] = {4, 4, 6, 6, 2, 2, 2, 2, 5};

Word leading_word(const NCPoly& p, const RewriteSystem& rs) {
  Word best;
  bool first = true;
  for (const auto& [w, c] : p.terms())
    if (first || rs.word_less(best, w)) {
      best = w;
      first = false;
    }
  return best;
}

NCPoly monic(const NCPoly& p, const RewriteSystem& rs) {
  if (p.is_zero()) return p;
  return p * p.coefficient(leading_word(p, rs)).inv();
}

NCPoly rule_relation(const RewriteSystem& rs, GenId g, GenId h) { return NCPoly::word({g, h}) - *rs.rule(g, h); }

std::string relation_str(const RewriteSystem& rs, GenId g, GenId h) {
  return rs.word_str({g, h}) + " = " + rs.str(*rs.rule(g, h));
}

RewriteSystem specialized(const RewriteSystem& rs) { return map_rule_coefficients(rs, at_Q1_eq_q2); }

const RttResult& derived_full() {
  static const RttResult r = rtt_generate_relations(paper_R());
  return r;
}

// Position of each generator in t, or nullopt.
std::vector<std::optional<std::pair<int, int>>> positions(const QuantumGroup& g) {
  std::vector<std::optional<std::pair<int, int>>> pos(g.system.size());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (auto id = g.system.find(quantum_matrix_layout()[i][j])) pos[*id] = {i, j};
  return pos;
}

std::vector<NCPoly> coproduct_images(const QuantumGroup& g, const TensorAlgebra& t) {
  std::vector<NCPoly> images(g.system.size());
  const auto pos = positions(g);
  for (std::size_t id = 0; id < pos.size(); ++id) {
    auto [i, j] = *pos[id];
    for (int k = 0; k < 3; ++k) images[id] += t.left(g.t[i][k]) * t.right(g.t[k][j]);
  }
  return images;
}

std::vector<NCPoly> counit_images(const QuantumGroup& g) {
  std::vector<NCPoly> images(g.system.size());
  const auto pos = positions(g);
  for (std::size_t id = 0; id < pos.size(); ++id)
    images[id] = pos[id]->first == pos[id]->second ? NCPoly::unit() : NCPoly();
  return images;
}

// Printed inverse of the full group, up to the factor delta^-1 on the right.
const char* const kFullInverse[3][3] = {
    {"L2 K1* - (q Q1^-1) L1* K2*", "-(Q1^-2) L2 K3* + (q^-1 Q1^-1) L1 K2*", "(q Q1^-2) L1* K3* - (q^-1) L1 K1*"},
    {"-(Q1^2) L2 K3 + (q Q1) L1* K2", "L2 K1 - (q^-1 Q1) L1 K2", "(q^-1 Q1^2) L1 K3 - (q) L1* K1"},
    {"(q^2 Q1^-1) K3 K2* - (q) K2 K1*", "(q^-2 Q1) K3* K2 - (q^-1) K2* K1", "K1* K1 - (q^-2 Q1^2) K3* K3"}};

const char* const kFullDelta =
    "L2 K1* K1 - (q^-2 Q1^2) L2 K3* K3 + L1 K3 K2* + L1* K3* K2 - (q Q1^-1) L1* K2* K1 - (q^-1 Q1) L1 K2 K1*";

// g delta = c_g delta g for the unstarred generators; the starred ones follow from delta* = delta.
const std::pair<const char*, const char*> kDeltaCommutation[5] = {
    {"K1", "1"}, {"K2", "q^-1 Q1^2"}, {"K3", "q^-2 Q1^4"}, {"L1", "q Q1^-2"}, {"L2", "1"}};

FieldElem word_factor(const Word& w, const InverseData& d) {
  FieldElem f(1);
  for (GenId g : w) f *= d.commutation.at(g);
  return f;
}

// delta^-n p delta^n
NCPoly pass_right(const NCPoly& p, const InverseData& d, int n) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(w, c * word_factor(w, d).pow(n));
  return out;
}

// S(w) = P delta^-|w|; returns P. S(g) = M_g delta^-1 and delta^-1 moves right.
NCPoly antipode_numerator(const NCPoly& p, const InverseData& d, const QuantumGroup& g) {
  const auto pos = positions(g);
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = NCPoly::scalar(c);
    int k = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it, ++k) {
      auto [i, j] = *pos[*it];
      acc = g.system.normal_form(acc * pass_right(d.m[i][j], d, k));
    }
    out += acc;
  }
  return g.system.normal_form(out);
}

NCPoly power(const NCPoly& p, int n, const RewriteSystem& rs) {
  NCPoly out = NCPoly::unit();
  for (int k = 0; k < n; ++k) out = rs.normal_form(out * p);
  return out;
}

CheckResult zero_check(const std::string& id, const std::string& anchor, const NCPoly& residual,
                       const RewriteSystem& rs) {
  return check(id, anchor, residual.is_zero(), residual.is_zero() ? "" : rs.str(residual));
}

}  // namespace

const EntryNames& quantum_matrix_layout() {
  static const EntryNames layout{{{"K1", "K3*", "L1"}, {"K3", "K1*", "L1*"}, {"K2", "K2*", "L2"}}};
  return layout;
}

RewriteSystem quantum_matrix_generators() {
  std::vector<Generator> gens;
  for (int i = 0; i < 9; ++i) gens.push_back({kNames[i], std::nullopt, 8 - i, kWeights[i]});
  for (int i = 0; i < 6; i += 2) {
    gens[i].star = static_cast<GenId>(i + 1);
    gens[i + 1].star = static_cast<GenId>(i);
  }
  gens[6].star = 7;
  gens[7].star = 6;
  gens[8].star = 8;
  return RewriteSystem(std::move(gens));
}

RttResult rtt_generate_relations(const BigRMatrix& r) {
  RttResult out;
  out.system = quantum_matrix_generators();
  const RewriteSystem& rs = out.system;
  GenId t[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = rs.id(quantum_matrix_layout()[i][j]);

  // (R t1 t2)_{ij,kl} = sum R_{ij,mn} t_mk t_nl,  (t2 t1 R)_{ij,kl} = sum t_jn t_im R_{mn,kl}
  std::vector<NCPoly> eqs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          NCPoly p;
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              const FieldElem& a = r(pair_index(i, j), pair_index(m, n));
              if (!a.is_zero()) p.add_term({t[m][k], t[n][l]}, a);
              const FieldElem& b = r(pair_index(m, n), pair_index(k, l));
              if (!b.is_zero()) p.add_term({t[j][n], t[i][m]}, -b);
            }
          if (!p.is_zero()) eqs.push_back(std::move(p));
        }
  out.equations = static_cast<int>(eqs.size());

  std::vector<Word> words;
  for (const auto& e : eqs)
    for (const auto& [w, c] : e.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return rs.word_less(b, a); });
  words.erase(std::unique(words.begin(), words.end()), words.end());

  FMat m(static_cast<Eigen::Index>(eqs.size()), static_cast<Eigen::Index>(words.size()));
  m.setConstant(FieldElem(0));
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t w = 0; w < words.size(); ++w) m(e, w) = eqs[e].coefficient(words[w]);
  const Rref red = rref(m);
  out.rank = red.rank();
  for (int row = 0; row < red.rank(); ++row) {
    const Word& lhs = words[red.pivots[row]];
    if (lhs.size() != 2) throw Error("RTT relation with non-quadratic leading word");
    NCPoly rhs;
    for (std::size_t w = 0; w < words.size(); ++w)
      if (static_cast<int>(w) != red.pivots[row]) rhs.add_term(words[w], -red.matrix(row, w));
    out.system.set_rule(lhs[0], lhs[1], std::move(rhs));
  }
  return out;
}

const std::vector<std::string>& printed_relations() {
  // verbatim, including the stray parenthesis at the end of the K2 L2 line
  static const std::vector<std::string> lines{
      "K1 K1* = K1* K1 + (q^2 Q1^-2) L1* L1 + (q^-2 Q1 (q^2 - Q1)) K3* K3",
      "K1 K2 = (q Q1^-1) K2 K1",
      "K1 K2* = (q^-1 Q1) K2* K1 + (q Q1^-1) L2 L1 + (q^-2 Q1 (q^2 - Q1)) K3* K2",
      "K1 K3 = (q^2 Q1^-2) K3 K1",
      "K1 K3* = (Q1) K3* K1 + L1 L1",
      "K1 L1 = (q) L1 K1",
      "K1 L1* = (q Q1^-1) L1* K1 + (q^-1 (q^2 - Q1)) L1 K3",
      "K1 L2 = L2 K1 + (q^-1 (q^2 - Q1)) L1 K2",
      "K2 K2* = (Q1) K2* K2 + (q^-2 Q1^2) K3* K3 - K1* K1 + L2 L2",
      "K2 K3 = (q Q1^-1) K3 K2",
      "K2 K3* = (q^-1 Q1^2) K3* K2 + L2 L1",
      "K2 L1 = (Q1) L1 K2",
      "K2 L1* = L1* K2 + (q^-1 (q^2 - Q1)) L2 K3",
      "K2 L2 = (q) L2 K2 - (q Q1^-1) L1* K1 + (q^-1 Q1) L1 K3)",
      "K3 K3* = (q^-2 Q1^3) K3* K3 + L1* L1",
      "K3 L1 = (q^-1 Q1^2) L1 K3",
      "K3 L1* = (q) L1* K3",
      "K3 L2 = (Q1) L2 K3",
      "L1 L1* = (q^2 Q1^-2) L1* L1",
      "L1 L2 = (q Q1^-1) L2 L1",
  };
  return lines;
}

bool MatchReport::bijective() const {
  if (!unmatched_printed.empty()) return false;
  return std::all_of(rules.begin(), rules.end(), [](const RelationMatch& m) { return !m.source.empty(); });
}

MatchReport match_printed_relations(const RttResult& rtt) {
  const RewriteSystem& rs = rtt.system;
  MatchReport rep;
  std::vector<std::pair<std::string, NCPoly>> printed;  // label, monic relation
  int n = 0;
  for (const auto& line : printed_relations()) {
    ++n;
    auto eq = line.find('=');
    std::string rhs = line.substr(eq + 1);
    NCPoly rel;
    try {
      rel = rs.parse(line.substr(0, eq)) - rs.parse(rhs);
    } catch (const ParseError&) {
      // drop unbalanced closing parentheses and let the derivation decide
      rep.unparsable.push_back(line);
      std::string repaired;
      int depth = 0;
      for (char ch : rhs) {
        if (ch == ')' && depth == 0) continue;
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        repaired += ch;
      }
      rel = rs.parse(line.substr(0, eq)) - rs.parse(repaired);
    }
    if (!rs.normal_form(rel).is_zero() || !rs.normal_form(star(rel, rs)).is_zero())
      rep.unmatched_printed.push_back(line);
    printed.emplace_back("printed #" + std::to_string(n), monic(rel, rs));
  }
  std::vector<int> used(printed.size(), 0);
  for (auto [g, h] : rs.rule_keys()) {
    const NCPoly rel = rule_relation(rs, g, h);
    RelationMatch m{relation_str(rs, g, h), {}};
    for (std::size_t k = 0; k < printed.size() && m.source.empty(); ++k) {
      if (printed[k].second == rel) {
        m.source = printed[k].first;
        ++used[k];
      } else {
        // the star of a printed line need not be written in normal words
        const NCPoly s = star(printed[k].second, rs);
        if (leading_word(s, rs) == Word{g, h} && rs.normal_form(s).is_zero()) m.source = "star of " + printed[k].first;
      }
    }
    rep.rules.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < printed.size(); ++k)
    if (used[k] != 1) rep.unmatched_printed.push_back(printed_relations()[k]);
  return rep;
}

std::vector<std::string> star_closure_failures(const RewriteSystem& qg) {
  std::vector<std::string> out;
  for (auto [g, h] : qg.rule_keys())
    if (!qg.normal_form(star(rule_relation(qg, g, h), qg)).is_zero()) out.push_back(relation_str(qg, g, h));
  return out;
}

const char* subgroup_name(Subgroup s) {
  switch (s) {
    case Subgroup::A: return "A";
    case Subgroup::B: return "B";
    default: return "full";
  }
}

std::vector<std::string> removed_generators(Subgroup s) {
  switch (s) {
    case Subgroup::A: return {"L1", "L1*"};
    case Subgroup::B: return {"L1", "L1*", "K3", "K3*"};
    default: return {};
  }
}

QuantumGroup quantum_group(Subgroup s, bool at_q2) {
  QuantumGroup g;
  g.subgroup = s;
  g.at_q2 = at_q2;
  const RewriteSystem base = at_q2 ? specialized(derived_full().system) : derived_full().system;
  Restriction res = restrict_generators(base, removed_generators(s));
  g.system = std::move(res.system);
  g.obstructions = std::move(res.obstructions);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (auto id = g.system.find(quantum_matrix_layout()[i][j])) g.t[i][j] = NCPoly::gen(*id);
  return g;
}

std::vector<CheckResult> coproduct_checks(const QuantumGroup& g) {
  const TensorAlgebra t = tensor_algebra(g.system, g.system.renamed("~"), commuting_cross);
  const auto images = coproduct_images(g, t);
  std::vector<CheckResult> out;
  for (auto [a, b] : g.system.rule_keys()) {
    NCPoly r = t.system.normal_form(apply_hom(rule_relation(g.system, a, b), images, t.system));
    out.push_back(zero_check("coproduct." + g.system.word_str({a, b}), "Delta(t) = t (x) t is a homomorphism: " +
                             relation_str(g.system, a, b), r, t.system));
  }
  return out;
}

std::vector<CheckResult> counit_checks(const QuantumGroup& g) {
  const auto images = counit_images(g);
  std::vector<CheckResult> out;
  for (auto [a, b] : g.system.rule_keys()) {
    NCPoly r = g.system.normal_form(apply_hom(rule_relation(g.system, a, b), images, g.system));
    out.push_back(zero_check("counit." + g.system.word_str({a, b}),
                             "epsilon(t) = 1 is a homomorphism: " + relation_str(g.system, a, b), r, g.system));
  }
  return out;
}

bool CovarianceReport::ok() const {
  return obstructions.empty() &&
         std::all_of(residuals.begin(), residuals.end(), [](const NCPoly& p) { return p.is_zero(); });
}

CovarianceReport covariance_check(Subgroup s, bool at_q2) {
  const QuantumGroup g = quantum_group(s, at_q2);
  const RewriteSystem osc = at_q2 ? specialized(oscillator_system()) : oscillator_system();
  const TensorAlgebra t = tensor_algebra(osc, g.system, commuting_cross);
  const auto x = covector_ids(osc);
  std::vector<NCPoly> primed(osc.size());
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) primed[x[j]] += NCPoly::gen(x[i]) * t.right(g.t[i][j]);

  auto coef = [&](const FieldElem& c) { return at_q2 ? at_Q1_eq_q2(c) : c; };
  const FieldElem q = FieldElem::q(), Q1 = coef(FieldElem::Q1());
  const NCPoly rels[3] = {osc.word({"a", "a*"}) - osc.word({"a*", "a"}, Q1) - osc.word({"qN", "qN"}),
                          osc.word({"a", "qN"}) - osc.word({"qN", "a"}, q),
                          osc.word({"qN", "a*"}) - osc.word({"a*", "qN"}, q)};
  CovarianceReport rep;
  for (int k = 0; k < 3; ++k) {
    rep.residuals[k] = t.system.normal_form(apply_hom(rels[k], primed, t.system));
    rep.rendered[k] = t.system.str(rep.residuals[k]);
  }
  rep.obstructions = g.obstructions;
  return rep;
}

InverseData inverse_data(const QuantumGroup& g) {
  InverseData d;
  d.subgroup = g.subgroup;
  d.at_q2 = g.at_q2;
  // parse in the full generator set, then specialize and drop removed entries
  const RewriteSystem full = quantum_matrix_generators();
  Restriction res = restrict_generators(full, removed_generators(g.subgroup));
  auto load = [&](const char* text) {
    NCPoly p = res.map(full.parse(text));
    return g.at_q2 ? p.map_coefficients(at_Q1_eq_q2) : p;
  };
  d.delta = load(kFullDelta);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d.m[i][j] = load(kFullInverse[i][j]);
  for (const auto& [name, text] : kDeltaCommutation) {
    auto id = g.system.find(name);
    if (!id) continue;
    FieldElem c = FieldElem::parse(text);
    if (g.at_q2) c = at_Q1_eq_q2(c);
    d.commutation[*id] = c;
    d.commutation[*g.system.generator(*id).star] = c.inv();
  }
  return d;
}

std::vector<CheckResult> inverse_check(const QuantumGroup& g) {
  const InverseData d = inverse_data(g);
  std::vector<CheckResult> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      NCPoly right = i == j ? -d.delta : NCPoly();
      NCPoly left = right;
      for (int k = 0; k < 3; ++k) {
        right += g.t[i][k] * d.m[k][j];
        // M_ik delta^-1 t_kj = M_ik c(t_kj) t_kj delta^-1
        left += d.m[i][k] * pass_right(g.t[k][j], d, 1);
      }
      const std::string idx = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      out.push_back(zero_check("inverse.right" + idx, "t t^-1 = 1 with t^-1 = M delta^-1",
                               g.system.normal_form(right), g.system));
      out.push_back(zero_check("inverse.left" + idx, "t^-1 t = 1 with t^-1 = M delta^-1",
                               g.system.normal_form(left), g.system));
    }
  return out;
}

std::vector<CheckResult> delta_checks(const QuantumGroup& g) {
  const InverseData d = inverse_data(g);
  const RewriteSystem& rs = g.system;
  std::vector<CheckResult> out;
  for (const auto& [id, c] : d.commutation) {
    const NCPoly gen = NCPoly::gen(id);
    const std::string name = rs.generator(id).name;
    out.push_back(zero_check("delta.commute." + name, name + " delta = (" + c.str() + ") delta " + name,
                             rs.normal_form(gen * d.delta - c * (d.delta * gen)), rs));
  }
  out.push_back(zero_check("delta.star", "delta* = delta", rs.normal_form(star(d.delta, rs) - d.delta), rs));
  out.push_back(zero_check("delta.counit", "epsilon(delta) = 1",
                           rs.normal_form(apply_hom(d.delta, counit_images(g), rs) - NCPoly::unit()), rs));

  const TensorAlgebra t = tensor_algebra(rs, rs.renamed("~"), commuting_cross);
  NCPoly grouplike = apply_hom(d.delta, coproduct_images(g, t), t.system) - t.left(d.delta) * t.right(d.delta);
  out.push_back(zero_check("delta.coproduct", "Delta(delta) = delta (x) delta", t.system.normal_form(grouplike),
                           t.system));

  // S(delta) = P delta^-3 with delta homogeneous of degree 3; S(delta) = delta^-1 iff P = delta^2
  NCPoly p = antipode_numerator(d.delta, d, g);
  out.push_back(zero_check("delta.antipode", "S(delta) = delta^-1", rs.normal_form(p - power(d.delta, 2, rs)), rs));
  return out;
}

std::vector<CheckResult> antipode_square_check(const QuantumGroup& g) {
  const InverseData d = inverse_data(g);
  const RewriteSystem& rs = g.system;
  std::vector<CheckResult> out;
  const NCPoly delta2 = power(d.delta, 2, rs);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (g.t[i][j].is_zero()) continue;
      // S(S(t_ij)) = S(delta^-1) S(M_ij) = delta P delta^-2 with S(M_ij) = P delta^-2
      NCPoly p = antipode_numerator(d.m[i][j], d, g);
      NCPoly r = rs.normal_form(d.delta * p - g.t[i][j] * delta2);
      const std::string name = rs.str(g.t[i][j]);
      CheckResult c = zero_check("antipode.square." + name, "S(S(" + name + ")) = " + name, r, rs);
      if (!g.at_q2) c.status = Status::Info;  // only claimed at Q1 = q^2
      if (!g.at_q2) c.detail = r.is_zero() ? "holds" : "fails: " + rs.str(r);
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace qosc
