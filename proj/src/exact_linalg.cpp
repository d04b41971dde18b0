#include "qosc/exact_linalg.hpp"

#include "qosc/errors.hpp"

namespace qosc {

Rref rref(FMat m) {
  Rref out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const FieldElem scale = m(row, col).inv();
    for (Eigen::Index c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= scale;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElem f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

int rank(const FMat& m) { return rref(m).rank(); }

FMat inverse(const FMat& m) {
  if (m.rows() != m.cols()) throw NotInvertible("matrix is not square");
  const Eigen::Index n = m.rows();
  FMat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = FMat::Identity(n, n);
  Rref r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) throw NotInvertible("matrix is singular");
  return r.matrix.rightCols(n);
}

}  // namespace qosc
