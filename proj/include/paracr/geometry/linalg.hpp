#pragma once

// Gaussian elimination over any scalar type. Pivots are chosen on the value
// slot, so the elimination order (and hence rounding) is the same for a
// double evaluation and for every jet evaluation at the same point.

#include <cmath>
#include <utility>

#include "paracr/geometry/tensor.hpp"

namespace paracr {

template <class T>
struct LuFactors {
  Mat<T> lu;
  std::vector<int> perm;
  int sign = 1;
};

/// Partial-pivot LU. Throws `Singular` if a pivot magnitude drops below `tiny`.
template <class Singular = DegenerateMetric, class T>
LuFactors<T> lu_factor(Mat<T> a, double tiny = 1e-300) {
  const int m = a.dim();
  LuFactors<T> f{std::move(a), std::vector<int>(m), 1};
  for (int i = 0; i < m; ++i) f.perm[i] = i;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    double best = std::abs(value_of(f.lu(k, k)));
    for (int i = k + 1; i < m; ++i) {
      double c = std::abs(value_of(f.lu(i, k)));
      if (c > best) {
        best = c;
        piv = i;
      }
    }
    if (!(best > tiny)) throw Singular("matrix is numerically singular");
    if (piv != k) {
      for (int j = 0; j < m; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (int i = k + 1; i < m; ++i) {
      T l = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = l;
      for (int j = k + 1; j < m; ++j) f.lu(i, j) = f.lu(i, j) - l * f.lu(k, j);
    }
  }
  return f;
}

template <class T>
T lu_determinant(const LuFactors<T>& f) {
  T det = constant<T>(f.sign);
  for (int i = 0; i < f.lu.dim(); ++i) det = det * f.lu(i, i);
  return det;
}

template <class T>
Vec<T> lu_solve(const LuFactors<T>& f, const Vec<T>& b) {
  const int m = f.lu.dim();
  Vec<T> x(m);
  for (int i = 0; i < m; ++i) {
    T s = b(f.perm[i]);
    for (int j = 0; j < i; ++j) s = s - f.lu(i, j) * x(j);
    x(i) = s;
  }
  for (int i = m - 1; i >= 0; --i) {
    T s = x(i);
    for (int j = i + 1; j < m; ++j) s = s - f.lu(i, j) * x(j);
    x(i) = s / f.lu(i, i);
  }
  return x;
}

template <class T>
Mat<T> lu_inverse(const LuFactors<T>& f) {
  const int m = f.lu.dim();
  Mat<T> inv(m);
  for (int j = 0; j < m; ++j) {
    Vec<T> e(m);
    e(j) = constant<T>(1.0);
    Vec<T> col = lu_solve(f, e);
    for (int i = 0; i < m; ++i) inv(i, j) = col(i);
  }
  return inv;
}

/// Determinant without throwing (0 when elimination breaks down).
template <class T>
double determinant_value(const Mat<T>& a) {
  try {
    return value_of(lu_determinant(lu_factor(a, 0.0)));
  } catch (const DegenerateMetric&) {
    return 0.0;
  }
}

}  // namespace paracr
