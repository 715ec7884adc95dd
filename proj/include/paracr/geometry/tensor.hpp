#pragma once

// Small dense "cube" tensors: every index runs over 0..m-1. Enough for the
// pointwise tensor calculus on a single chart, where m <= 11.

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "paracr/ad/dual.hpp"

namespace paracr {

template <class T, int Rank>
class Tensor {
  static_assert(Rank >= 1 && Rank <= 4);

 public:
  Tensor() = default;
  explicit Tensor(int m) : m_(m), data_(size_for(m), constant<T>(0.0)) {}

  int dim() const { return m_; }
  std::size_t size() const { return data_.size(); }

  template <class... Idx>
  T& operator()(Idx... idx) {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(static_cast<int>(idx)...)];
  }
  template <class... Idx>
  const T& operator()(Idx... idx) const {
    static_assert(sizeof...(Idx) == Rank);
    return data_[offset(static_cast<int>(idx)...)];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  static std::size_t size_for(int m) {
    std::size_t s = 1;
    for (int r = 0; r < Rank; ++r) s *= static_cast<std::size_t>(m);
    return s;
  }
  template <class... Idx>
  std::size_t offset(Idx... idx) const {
    std::size_t off = 0;
    ((assert(idx >= 0 && idx < m_), off = off * static_cast<std::size_t>(m_) + static_cast<std::size_t>(idx)), ...);
    return off;
  }

  int m_ = 0;
  std::vector<T> data_;
};

template <class T>
using Vec = Tensor<T, 1>;
template <class T>
using Mat = Tensor<T, 2>;

/// Elementwise map, used to peel dual levels off whole tensors.
template <class F, class T, int R>
auto map(const Tensor<T, R>& t, F&& f) {
  using U = decltype(f(*t.data()));
  Tensor<U, R> out(t.dim());
  std::transform(t.begin(), t.end(), out.begin(), f);
  return out;
}

template <class T, int R>
auto primal(const Tensor<Dual<T>, R>& t) {
  return map(t, [](const Dual<T>& x) { return x.v; });
}
template <class T, int R>
auto tangent(const Tensor<Dual<T>, R>& t) {
  return map(t, [](const Dual<T>& x) { return x.d; });
}
template <class T, int R>
Tensor<double, R> values(const Tensor<T, R>& t) {
  return map(t, [](const T& x) { return value_of(x); });
}

template <int R>
double max_abs(const Tensor<double, R>& t) {
  double m = 0.0;
  for (double x : t) m = std::max(m, std::abs(x));
  return m;
}

template <class T>
Mat<T> identity(int m) {
  Mat<T> I(m);
  for (int i = 0; i < m; ++i) I(i, i) = constant<T>(1.0);
  return I;
}

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  const int m = a.dim();
  Mat<T> c(m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
  return c;
}

template <class T>
Vec<T> matvec(const Mat<T>& a, const Vec<T>& x) {
  const int m = a.dim();
  Vec<T> y(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) y(i) = y(i) + a(i, j) * x(j);
  return y;
}

/// x^T a (covector times matrix).
template <class T>
Vec<T> vecmat(const Vec<T>& x, const Mat<T>& a) {
  const int m = a.dim();
  Vec<T> y(m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) y(j) = y(j) + x(i) * a(i, j);
  return y;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  const int m = a.dim();
  Mat<T> t(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t(i, j) = a(j, i);
  return t;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s = constant<T>(0.0);
  for (int i = 0; i < a.dim(); ++i) s = s + a(i) * b(i);
  return s;
}

}  // namespace paracr
