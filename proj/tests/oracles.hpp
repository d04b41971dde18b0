#pragma once

// Independent reference computations used as test oracles. They work on
// exact rational values at a sample point and use explicit index sums rather
// than the library's Kronecker/permutation machinery.

#include <array>

#include "qosc/rmatrix.hpp"

namespace qosc::oracle {

using Q9 = std::array<std::array<mpq_class, 9>, 9>;

inline Q9 at(const BigRMatrix& m, const RationalPoint& p) {
  Q9 out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) out[i][j] = m(i, j).eval(p);
  return out;
}

// Entry of X12 Y13 Z23 at ((i,j,k),(a,b,c)) by direct summation.
inline mpq_class triple(const Q9& x, const Q9& y, const Q9& z, int i, int j, int k, int a, int b, int c,
                        bool reversed) {
  auto e12 = [](const Q9& m, int i, int j, int k, int a, int b, int c) {
    return k == c ? m[3 * i + j][3 * a + b] : mpq_class(0);
  };
  auto e13 = [](const Q9& m, int i, int j, int k, int a, int b, int c) {
    return j == b ? m[3 * i + k][3 * a + c] : mpq_class(0);
  };
  auto e23 = [](const Q9& m, int i, int j, int k, int a, int b, int c) {
    return i == a ? m[3 * j + k][3 * b + c] : mpq_class(0);
  };
  mpq_class sum = 0;
  for (int u = 0; u < 27; ++u) {
    const int u1 = u / 9, u2 = u / 3 % 3, u3 = u % 3;
    const mpq_class f = reversed ? e23(z, i, j, k, u1, u2, u3) : e12(x, i, j, k, u1, u2, u3);
    if (f == 0) continue;
    for (int v = 0; v < 27; ++v) {
      const int v1 = v / 9, v2 = v / 3 % 3, v3 = v % 3;
      const mpq_class g = e13(y, u1, u2, u3, v1, v2, v3);
      if (g == 0) continue;
      sum += f * g * (reversed ? e12(x, v1, v2, v3, a, b, c) : e23(z, v1, v2, v3, a, b, c));
    }
  }
  return sum;
}

/// Does X12 Y13 Z23 = Z23 Y13 X12 hold at the sample point?
inline bool ybe_holds(const BigRMatrix& x, const BigRMatrix& y, const BigRMatrix& z, const RationalPoint& p) {
  const Q9 qx = at(x, p), qy = at(y, p), qz = at(z, p);
  for (int r = 0; r < 27; ++r)
    for (int s = 0; s < 27; ++s)
      if (triple(qx, qy, qz, r / 9, r / 3 % 3, r % 3, s / 9, s / 3 % 3, s % 3, false) !=
          triple(qx, qy, qz, r / 9, r / 3 % 3, r % 3, s / 9, s / 3 % 3, s % 3, true))
        return false;
  return true;
}

inline Q9 product(const Q9& a, const Q9& b) {
  Q9 out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      out[i][j] = 0;
      for (int k = 0; k < 9; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// R21 entry ((i,j),(k,l)) = R((j,i),(l,k))
inline Q9 flip(const Q9& m) {
  Q9 out;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) out[i][j] = m[3 * (i % 3) + i / 3][3 * (j % 3) + j / 3];
  return out;
}

inline bool is_identity(const Q9& m) {
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace qosc::oracle
