#pragma once

// Constraints on the braiding matrix R' (ansatz C1..C14) at Q1 = q^2 and a
// multi-start numeric search for their solutions.
//
// A candidate must satisfy
//   - the mixed Yang-Baxter system with R, (PR'+1)(PR-1) = 0 and
//     R21 R' = R'21 R;
//   - compatibility with the oscillator: the primitive coproduct is
//     multiplicative, psi maps relation (x) x and x (x) relation into the
//     relation ideal, the antipode respects the relations, and psi commutes
//     with the *-flip.

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "qosc/rmatrix.hpp"

namespace qosc {

template <class S>
using Vec14 = Eigen::Matrix<S, 14, 1>;

template <class S>
struct BraidingData {
  Mat9<S> r;                     // R at the working point
  Eigen::Matrix<S, 3, 9> rel;    // oscillator relations on Kronecker words
  Eigen::Matrix<S, 6, 9> red;    // degree-2 normal-form map
};

BraidingData<FieldElem> braiding_data_q2(const RewriteSystem& osc);
BraidingData<double> braiding_data_numeric(const RewriteSystem& osc, double q0);

template <class T, class S>
BraidingData<T> cast_data(const BraidingData<S>& d) {
  return {d.r.template cast<T>(), d.rel.template cast<T>(), d.red.template cast<T>()};
}

struct ConstraintBlock {
  std::string name;
  std::size_t begin = 0, end = 0;
};

/// Flattened residuals of every condition; zero iff rp is admissible.
template <class S>
std::vector<S> braiding_residuals(const Mat9<S>& rp, const BraidingData<S>& d,
                                  std::vector<ConstraintBlock>* blocks = nullptr) {
  std::vector<S> out;
  auto open = [&](const char* name) {
    if (blocks) blocks->push_back({name, out.size(), out.size()});
  };
  auto close = [&]() {
    if (blocks) blocks->back().end = out.size();
  };
  auto push_all = [&](const auto& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  };

  open("R'12 R'13 R'23 = R'23 R'13 R'12");
  push_all(ybe_residual(rp, rp, rp));
  close();
  open("R'12 R'13 R23 = R23 R'13 R'12");
  push_all(ybe_residual(rp, rp, d.r));
  close();
  open("R12 R'13 R'23 = R'23 R'13 R12");
  push_all(ybe_residual(d.r, rp, rp));
  close();

  const Mat9<S> p = swap9<S>();
  const Mat9<S> id = Mat9<S>::Identity();
  open("(PR'+1)(PR-1) = 0");
  Mat9<S> lhs = sparse_product(p, rp) + id;
  Mat9<S> rhs = sparse_product(p, d.r) - id;
  push_all(sparse_product(lhs, rhs));
  close();
  open("R21 R' = R'21 R");
  push_all(Mat9<S>(sparse_product(flipped(d.r), rp) - sparse_product(flipped(rp), d.r)));
  close();

  // psi(x_i (x) x_j) = sum_{a,b} rp(3a+b, 3i+j) x_b (x) x_a
  auto psi = [&](int i, int j, int a, int b) -> const S& { return rp(pair_index(a, b), pair_index(i, j)); };

  open("coproduct multiplicative on relations");
  for (int r = 0; r < 3; ++r)
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        S acc = d.rel(r, pair_index(u, v));
        for (int w = 0; w < 9; ++w)
          if (!is_exact_zero(d.rel(r, w))) acc += d.rel(r, w) * psi(w / 3, w % 3, v, u);
        out.push_back(acc);
      }
  close();

  open("psi(relation (x) x) in the ideal");
  for (int r = 0; r < 3; ++r)
    for (int z = 0; z < 3; ++z) {
      // x_i x_j (x) z -> x_b2 (x) x_a2 x_a1
      Eigen::Matrix<S, 3, 9> t;
      t.setConstant(S(0));
      for (int w = 0; w < 9; ++w) {
        if (is_exact_zero(d.rel(r, w))) continue;
        const int i = w / 3, j = w % 3;
        for (int a1 = 0; a1 < 3; ++a1)
          for (int b1 = 0; b1 < 3; ++b1) {
            if (is_exact_zero(psi(j, z, a1, b1))) continue;
            for (int a2 = 0; a2 < 3; ++a2)
              for (int b2 = 0; b2 < 3; ++b2)
                if (!is_exact_zero(psi(i, b1, a2, b2)))
                  t(b2, pair_index(a2, a1)) += d.rel(r, w) * psi(j, z, a1, b1) * psi(i, b1, a2, b2);
          }
      }
      push_all(Eigen::Matrix<S, 3, 6>(sparse_product(t, Eigen::Matrix<S, 9, 6>(d.red.transpose()))));
    }
  close();

  open("psi(x (x) relation) in the ideal");
  for (int r = 0; r < 3; ++r)
    for (int z = 0; z < 3; ++z) {
      // z (x) x_i x_j -> x_b1 x_b2 (x) x_a2
      Eigen::Matrix<S, 9, 3> t;
      t.setConstant(S(0));
      for (int w = 0; w < 9; ++w) {
        if (is_exact_zero(d.rel(r, w))) continue;
        const int i = w / 3, j = w % 3;
        for (int a1 = 0; a1 < 3; ++a1)
          for (int b1 = 0; b1 < 3; ++b1) {
            if (is_exact_zero(psi(z, i, a1, b1))) continue;
            for (int a2 = 0; a2 < 3; ++a2)
              for (int b2 = 0; b2 < 3; ++b2)
                if (!is_exact_zero(psi(a1, j, a2, b2)))
                  t(pair_index(b1, b2), a2) += d.rel(r, w) * psi(z, i, a1, b1) * psi(a1, j, a2, b2);
          }
      }
      push_all(Eigen::Matrix<S, 6, 3>(sparse_product(d.red, t)));
    }
  close();

  open("antipode respects relations");
  for (int r = 0; r < 3; ++r) {
    Eigen::Matrix<S, 9, 1> t;
    t.setConstant(S(0));
    for (int w = 0; w < 9; ++w) {
      if (is_exact_zero(d.rel(r, w))) continue;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (!is_exact_zero(psi(w / 3, w % 3, a, b))) t(pair_index(b, a)) += d.rel(r, w) * psi(w / 3, w % 3, a, b);
    }
    push_all(Eigen::Matrix<S, 6, 1>(sparse_product(d.red, t)));
  }
  close();

  open("psi commutes with the *-flip");
  const int star[3] = {1, 0, 2};
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          out.push_back(rp(pair_index(star[u], star[v]), pair_index(i, j)) -
                        rp(pair_index(v, u), pair_index(star[j], star[i])));
  close();
  return out;
}

// ------------------------------------------------------------------ search

/// C-vector of a matrix in the R' ansatz pattern; throws if it does not fit.
Vec14<FieldElem> rprime_ansatz_values(const BigRMatrix& rp);

struct BraidingTemplate {
  std::string name;
  Vec14<FieldElem> c;  // exact, at Q1 = q^2
};
/// The Q1 = q^2 specialization of the generic R' plus the three extra solutions.
const std::vector<BraidingTemplate>& braiding_templates();
Vec14<double> evaluate_at(const Vec14<FieldElem>& c, double q0);

struct SolverOptions {
  double q0 = 1.3;
  std::uint64_t seed = 7;
  int starts = 200;
  double dedup_tol = 1e-6;
  double accept_tol = 1e-10;
};

struct BraidingSolution {
  Vec14<double> c;
  double residual = 0;  // max |residual|
  int nullity = 0;      // dimension of the Jacobian kernel at the solution
  std::string label;    // template name, or "unlisted"
};

struct SolveReport {
  SolverOptions options;
  std::vector<BraidingSolution> solutions;  // sorted lexicographically
  int converged_starts = 0;
  double seconds = 0;
};

SolveReport solve_braidings_numeric(const RewriteSystem& osc, const SolverOptions& opt);

struct CandidateCheck {
  double max_residual = 0;
  std::string worst_block;
  bool ok(double tol = 1e-10) const { return max_residual < tol; }
};
CandidateCheck verify_candidate(const RewriteSystem& osc, const Vec14<double>& c, double q0);

/// Exact check of a C-vector at Q1 = q^2; returns the names of failing blocks.
std::vector<std::string> verify_candidate_exact(const RewriteSystem& osc, const Vec14<FieldElem>& c);

}  // namespace qosc
