#include "qosc/rmatrix.hpp"

#include <algorithm>
#include <map>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

const FieldElem q = FieldElem::q();
const FieldElem Q1 = FieldElem::Q1();

BigRMatrix zero9() {
  BigRMatrix m;
  m.setConstant(FieldElem(0));
  return m;
}

BigRMatrix mul(const BigRMatrix& a, const BigRMatrix& b) { return sparse_product(a, b); }

}  // namespace

const std::array<std::string, 9>& basis2_names() {
  static const std::array<std::string, 9> names{"a a",   "a a*",   "a qN", "a* a",  "a* a*",
                                                "a* qN", "qN a", "qN a*", "qN qN"};
  return names;
}

BigRMatrix paper_R() {
  BigRMatrix r = zero9();
  const FieldElem d = (q * q - Q1) / (q * q);
  r(0, 0) = 1;
  r(1, 1) = Q1 * Q1 / (q * q);
  r(2, 2) = Q1 / q;
  r(3, 1) = d;
  r(3, 3) = Q1.inv();
  r(4, 4) = 1;
  r(5, 5) = q.inv();
  r(5, 7) = d;
  r(6, 2) = d;
  r(6, 6) = q.inv();
  r(7, 7) = Q1 / q;
  r(8, 1) = Q1 / (q * q);
  r(8, 3) = -Q1.inv();
  r(8, 8) = 1;
  return r;
}

BigRMatrix paper_Rprime() {
  BigRMatrix r = zero9();
  const FieldElem d = (q * q - Q1) / Q1;
  r(0, 0) = q * q / Q1;
  r(1, 1) = Q1;
  r(2, 2) = q;
  r(3, 1) = d;
  r(3, 3) = q * q / (Q1 * Q1);
  r(4, 4) = q * q / Q1;
  r(5, 5) = q / Q1;
  r(5, 7) = d;
  r(6, 2) = d;
  r(6, 6) = q / Q1;
  r(7, 7) = q;
  r(8, 1) = 1;
  r(8, 3) = -q * q / (Q1 * Q1);
  r(8, 8) = q * q / Q1;
  return r;
}

BigRMatrix substitute_Q1_q2(const BigRMatrix& m) {
  return m.unaryExpr([](const FieldElem& x) { return at_Q1_eq_q2(x); });
}

Mat9<double> evaluate(const BigRMatrix& m, const DoublePoint& p) {
  Mat9<double> out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) out(i, j) = m(i, j).eval(p);
  return out;
}

const std::array<std::pair<int, int>, 17>& r_ansatz_slots() {
  static const std::array<std::pair<int, int>, 17> slots{{{1, 1},
                                                          {3, 1},
                                                          {8, 1},
                                                          {2, 2},
                                                          {6, 2},
                                                          {1, 3},
                                                          {3, 3},
                                                          {8, 3},
                                                          {5, 5},
                                                          {7, 5},
                                                          {2, 6},
                                                          {6, 6},
                                                          {5, 7},
                                                          {7, 7},
                                                          {1, 8},
                                                          {3, 8},
                                                          {8, 8}}};
  return slots;
}

BigRMatrix r_ansatz(const std::array<FieldElem, 17>& a) {
  BigRMatrix r = zero9();
  r(0, 0) = 1;
  r(4, 4) = 1;
  for (std::size_t s = 0; s < 17; ++s) r(r_ansatz_slots()[s].first, r_ansatz_slots()[s].second) = a[s];
  return r;
}

std::array<FieldElem, 17> r_ansatz_values(const BigRMatrix& r) {
  std::array<FieldElem, 17> a;
  for (std::size_t s = 0; s < 17; ++s) a[s] = r(r_ansatz_slots()[s].first, r_ansatz_slots()[s].second);
  return a;
}

const std::array<RprimeSlot, 19>& rprime_ansatz_slots() {
  static const std::array<RprimeSlot, 19> slots{{{0, 0, 1},
                                                 {1, 1, 2},
                                                 {1, 3, 7},
                                                 {1, 8, 12},
                                                 {2, 2, 5},
                                                 {2, 6, 11},
                                                 {3, 1, 3},
                                                 {3, 3, 8},
                                                 {3, 8, 13},
                                                 {4, 4, 1},
                                                 {5, 5, 10},
                                                 {5, 7, 6},
                                                 {6, 2, 6},
                                                 {6, 6, 10},
                                                 {7, 5, 11},
                                                 {7, 7, 5},
                                                 {8, 1, 4},
                                                 {8, 3, 9},
                                                 {8, 8, 14}}};
  return slots;
}

bool qybe_check(const BigRMatrix& m) { return all_zero(ybe_residual(m, m, m)); }

RprimeReport rprime_conditions(const BigRMatrix& r, const BigRMatrix& rp) {
  RprimeReport rep;
  rep.ybe = all_zero(ybe_residual(rp, rp, rp));
  rep.mixed_left = all_zero(ybe_residual(rp, rp, r));
  rep.mixed_right = all_zero(ybe_residual(r, rp, rp));
  const BigRMatrix p = swap9<FieldElem>();
  const BigRMatrix id = BigRMatrix::Identity();
  BigRMatrix left = mul(p, rp) + id;
  BigRMatrix right = mul(p, r) - id;
  rep.hecke = all_zero(mul(left, right));
  const BigRMatrix r21 = flipped(r);
  const BigRMatrix rp21 = flipped(rp);
  rep.fifth_printed = all_zero(BigRMatrix(mul(rp21, r) - mul(r21, r)));
  rep.fifth_swapped = all_zero(BigRMatrix(mul(r21, rp) - mul(rp21, r)));
  return rep;
}

bool triangularity_check(const BigRMatrix& r) {
  FMat inv = inverse(FMat(r));
  return all_zero(FMat(inv - FMat(flipped(r))));
}

// ------------------------------------------------------ covector relations

std::array<GenId, 3> covector_ids(const RewriteSystem& osc) {
  return {osc.id("a"), osc.id("a*"), osc.id("qN")};
}

FMat covector_relation_rows(const BigRMatrix& r) {
  FMat rows(9, 9);
  rows.setConstant(FieldElem(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int row = pair_index(i, j);
      rows(row, row) += 1;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) rows(row, pair_index(l, k)) -= r(pair_index(k, l), row);
    }
  return rows;
}

namespace {

NCPoly row_to_poly(const FMat& rows, Eigen::Index row, const std::array<GenId, 3>& ids) {
  NCPoly p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.add_term(Word{ids[i], ids[j]}, rows(row, pair_index(i, j)));
  return p;
}

// Surviving normal-form coefficients of each covector relation, keyed by origin.
std::map<std::string, FieldElem> covector_residues(const BigRMatrix& r, const RewriteSystem& osc) {
  const auto ids = covector_ids(osc);
  const FMat rows = covector_relation_rows(r);
  std::map<std::string, FieldElem> out;
  for (int row = 0; row < 9; ++row) {
    NCPoly nf = osc.normal_form(row_to_poly(rows, row, ids));
    for (const auto& [w, c] : nf.terms()) out["x1x2[" + basis2_names()[row] + "] : " + osc.word_str(w)] = c;
  }
  return out;
}

}  // namespace

ConstraintSet covector_constraints(const BigRMatrix& r, const RewriteSystem& osc) {
  ConstraintSet out;
  for (const auto& [origin, value] : covector_residues(r, osc)) out.push_back({origin, value});
  const FMat rows = covector_relation_rows(r);
  const FMat osc_rows = oscillator_relation_rows(osc);
  FMat stacked(rows.rows() + osc_rows.rows(), 9);
  stacked << rows, osc_rows;
  const int rel_rank = rank(rows);
  const int joint_rank = rank(stacked);
  const int osc_rank = static_cast<int>(osc_rows.rows());
  if (rel_rank != osc_rank || joint_rank != osc_rank) {
    out.push_back({"ideal: relation rank " + std::to_string(rel_rank) + ", joint rank " +
                       std::to_string(joint_rank) + ", oscillator rank " + std::to_string(osc_rank),
                   FieldElem(1)});
  }
  return out;
}

FieldElem LinearConstraint::evaluate(const std::array<FieldElem, 17>& a) const {
  FieldElem v = constant;
  for (std::size_t s = 0; s < 17; ++s)
    if (!coeffs[s].is_zero()) v += coeffs[s] * a[s];
  return v;
}

std::vector<LinearConstraint> ansatz_covector_system(const RewriteSystem& osc) {
  std::array<FieldElem, 17> a;
  a.fill(FieldElem(0));
  const auto base = covector_residues(r_ansatz(a), osc);
  std::array<std::map<std::string, FieldElem>, 17> unit;
  std::map<std::string, LinearConstraint> acc;
  auto entry = [&acc](const std::string& origin) -> LinearConstraint& {
    auto [it, inserted] = acc.try_emplace(origin);
    if (inserted) {
      it->second.origin = origin;
      it->second.coeffs.fill(FieldElem(0));
    }
    return it->second;
  };
  for (const auto& [origin, value] : base) entry(origin).constant = value;
  for (std::size_t s = 0; s < 17; ++s) {
    a.fill(FieldElem(0));
    a[s] = 1;
    const auto shifted = covector_residues(r_ansatz(a), osc);
    for (const auto& [origin, value] : shifted) {
      auto b = base.find(origin);
      entry(origin).coeffs[s] = b == base.end() ? value : value - b->second;
    }
    for (const auto& [origin, value] : base)
      if (!shifted.count(origin)) entry(origin).coeffs[s] = -value;
  }
  std::vector<LinearConstraint> out;
  for (auto& [origin, c] : acc) out.push_back(std::move(c));
  return out;
}

// ------------------------------------------------- oscillator in Kronecker

FMat oscillator_relation_rows(const RewriteSystem& osc) {
  const auto ids = covector_ids(osc);
  auto index_of = [&](GenId g) {
    for (int i = 0; i < 3; ++i)
      if (ids[i] == g) return i;
    throw Error("generator outside the covector");
  };
  const auto keys = osc.rule_keys();
  FMat rows(static_cast<Eigen::Index>(keys.size()), 9);
  rows.setConstant(FieldElem(0));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    auto [g, h] = keys[k];
    rows(static_cast<Eigen::Index>(k), pair_index(index_of(g), index_of(h))) += 1;
    for (const auto& [w, c] : osc.rule(g, h)->terms()) {
      if (w.size() != 2) throw Error("oscillator rule is not homogeneous quadratic");
      rows(static_cast<Eigen::Index>(k), pair_index(index_of(w[0]), index_of(w[1]))) -= c;
    }
  }
  return rows;
}

FMat degree2_reduction(const RewriteSystem& osc) {
  const auto ids = covector_ids(osc);
  std::vector<int> normal;
  for (int w = 0; w < 9; ++w)
    if (osc.is_normal(Word{ids[w / 3], ids[w % 3]})) normal.push_back(w);
  FMat n(static_cast<Eigen::Index>(normal.size()), 9);
  n.setConstant(FieldElem(0));
  for (int w = 0; w < 9; ++w) {
    NCPoly nf = osc.normal_form(NCPoly::word(Word{ids[w / 3], ids[w % 3]}));
    for (const auto& [word, c] : nf.terms()) {
      int idx = -1;
      for (int v = 0; v < 9; ++v)
        if (Word{ids[v / 3], ids[v % 3]} == word) idx = v;
      auto pos = std::find(normal.begin(), normal.end(), idx);
      n(pos - normal.begin(), w) = c;
    }
  }
  return n;
}

}  // namespace qosc
