#pragma once

// 9x9 matrices on degree-2 covector words, tensor legs, and the R / R'
// consistency conditions.
//
// Index contract. The covector is x = (a, a*, qN) and degree-2 words are
// indexed in Kronecker order, (i, j) -> 3i + j:
//   a a, a a*, a qN, a* a, a* a*, a* qN, qN a, qN a*, qN qN.
// The covector relation x1 x2 = x2 x1 R reads
//   x_i x_j = sum_{k,l} x_l x_k R[(k,l), (i,j)].

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include <unsupported/Eigen/AutoDiff>

#include "qosc/exact_linalg.hpp"
#include "qosc/field.hpp"
#include "qosc/ncalg.hpp"

namespace qosc {

template <class S>
using Mat9 = Eigen::Matrix<S, 9, 9>;
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
using BigRMatrix = Mat9<FieldElem>;

inline int pair_index(int i, int j) { return 3 * i + j; }
/// Names of the nine degree-2 words in Kronecker order.
const std::array<std::string, 9>& basis2_names();

// ---------------------------------------------------------------- scalars

inline bool is_exact_zero(const FieldElem& x) { return x.is_zero(); }
inline bool is_exact_zero(double x) { return x == 0.0; }
template <class D>
bool is_exact_zero(const Eigen::AutoDiffScalar<D>& x) {
  return x.value() == 0.0 && (x.derivatives().array() == 0.0).all();
}

// ------------------------------------------------------------ dense tools

/// Product that skips structurally zero entries; the matrices here are
/// sparse and FieldElem arithmetic is expensive.
template <class S, int R, int K, int C>
Eigen::Matrix<S, R, C> sparse_product(const Eigen::Matrix<S, R, K>& a, const Eigen::Matrix<S, K, C>& b) {
  Eigen::Matrix<S, R, C> out(a.rows(), b.cols());
  out.setConstant(S(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_exact_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (is_exact_zero(b(k, j))) continue;
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

template <class S>
MatX<S> kron(const MatX<S>& a, const MatX<S>& b) {
  MatX<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setConstant(S(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_exact_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!is_exact_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// P (x_i (x) x_j) = x_j (x) x_i on the nine-dimensional space.
template <class S>
Mat9<S> swap9() {
  Mat9<S> p;
  p.setConstant(S(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(pair_index(i, j), pair_index(j, i)) = S(1);
  return p;
}

/// M21 = P M P.
template <class S>
Mat9<S> flipped(const Mat9<S>& m) {
  Mat9<S> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) out(pair_index(i, j), pair_index(k, l)) = m(pair_index(j, i), pair_index(l, k));
  return out;
}

template <class S>
struct Legs {
  MatX<S> m12, m13, m23;
};

/// M12 = M (x) 1, M23 = 1 (x) M, M13 = P23 M12 P23.
template <class S>
Legs<S> legs(const Mat9<S>& m) {
  MatX<S> id3 = MatX<S>::Identity(3, 3);
  MatX<S> mx = m;
  Legs<S> out;
  out.m12 = kron(mx, id3);
  out.m23 = kron(id3, mx);
  out.m13 = MatX<S>(27, 27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
              out.m13(9 * i + 3 * j + k, 9 * a + 3 * b + c) = out.m12(9 * i + 3 * k + j, 9 * a + 3 * c + b);
  return out;
}

/// X12 Y13 Z23 - Z23 Y13 X12; zero for the mixed Yang-Baxter equation.
template <class S>
MatX<S> ybe_residual(const Mat9<S>& x, const Mat9<S>& y, const Mat9<S>& z) {
  Legs<S> lx = legs(x), ly = legs(y), lz = legs(z);
  return sparse_product(sparse_product(lx.m12, ly.m13), lz.m23) -
         sparse_product(sparse_product(lz.m23, ly.m13), lx.m12);
}

// ------------------------------------------------------- reference matrices

BigRMatrix paper_R();
BigRMatrix paper_Rprime();
BigRMatrix substitute_Q1_q2(const BigRMatrix& m);
Mat9<double> evaluate(const BigRMatrix& m, const DoublePoint& p);

/// The 17 free slots A1..A17 of the R ansatz, as (row, col) 0-based.
const std::array<std::pair<int, int>, 17>& r_ansatz_slots();
/// Entries fixed to 1 by the ansatz ((1,1), (5,5) 1-based).
BigRMatrix r_ansatz(const std::array<FieldElem, 17>& a);
std::array<FieldElem, 17> r_ansatz_values(const BigRMatrix& r);

/// The 19 nonzero slots of the R' ansatz and the unknown C_k (1-based) in each.
struct RprimeSlot {
  int row, col, c;
};
const std::array<RprimeSlot, 19>& rprime_ansatz_slots();

template <class S>
Mat9<S> rprime_ansatz(const Eigen::Matrix<S, 14, 1>& c) {
  Mat9<S> m;
  m.setConstant(S(0));
  for (const auto& s : rprime_ansatz_slots()) m(s.row, s.col) = c(s.c - 1);
  return m;
}

// ------------------------------------------------------------------ checks

bool qybe_check(const BigRMatrix& m);

struct RprimeReport {
  bool ybe = false;           // R'12 R'13 R'23 = R'23 R'13 R'12
  bool mixed_left = false;    // R'12 R'13 R23 = R23 R'13 R'12
  bool mixed_right = false;   // R12 R'13 R'23 = R'23 R'13 R12
  bool hecke = false;         // (P R' + 1)(P R - 1) = 0
  bool fifth_printed = false; // R'21 R = R21 R
  bool fifth_swapped = false; // R21 R' = R'21 R
  bool holds_with_swapped_fifth() const { return ybe && mixed_left && mixed_right && hecke && fifth_swapped; }
};
RprimeReport rprime_conditions(const BigRMatrix& r, const BigRMatrix& rp);

/// R^{-1} == R21. Throws NotInvertible if R is singular.
bool triangularity_check(const BigRMatrix& r);

// ------------------------------------------------------ covector relations

struct Constraint {
  std::string origin;
  FieldElem value;  // must vanish
};
using ConstraintSet = std::vector<Constraint>;

/// The nine relations x_i x_j - sum x_l x_k R[(k,l),(i,j)] as rows over the
/// nine Kronecker words of the free algebra.
FMat covector_relation_rows(const BigRMatrix& r);

/// Residues of the covector relations modulo the oscillator, plus an "ideal"
/// entry when the relations span more or less than the oscillator's three.
ConstraintSet covector_constraints(const BigRMatrix& r, const RewriteSystem& osc);

/// The covector constraints are affine in the ansatz unknowns:
/// value = constant + sum_s coeffs[s] A_{s+1}.
struct LinearConstraint {
  std::string origin;
  std::array<FieldElem, 17> coeffs;
  FieldElem constant;
  FieldElem evaluate(const std::array<FieldElem, 17>& a) const;
};
std::vector<LinearConstraint> ansatz_covector_system(const RewriteSystem& osc);

// ------------------------------------------------- oscillator in Kronecker

/// Kronecker-ordered covector generators of the oscillator system.
std::array<GenId, 3> covector_ids(const RewriteSystem& osc);

/// The oscillator relations as rows over the nine Kronecker words (3 x 9).
FMat oscillator_relation_rows(const RewriteSystem& osc);

/// Linear map from the nine Kronecker words to their normal forms, written
/// on the normal degree-2 words (rows, in Kronecker order).
FMat degree2_reduction(const RewriteSystem& osc);

}  // namespace qosc
