#pragma once

// Dense linear algebra over Q(q, Q1).

#include <Eigen/Core>
#include <vector>

#include "qosc/field.hpp"

namespace qosc {

using FMat = Eigen::Matrix<FieldElem, Eigen::Dynamic, Eigen::Dynamic>;

struct Rref {
  FMat matrix;              // reduced row echelon form, zero rows at the bottom
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(FMat m);
int rank(const FMat& m);
/// Throws NotInvertible for singular input.
FMat inverse(const FMat& m);

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace qosc
