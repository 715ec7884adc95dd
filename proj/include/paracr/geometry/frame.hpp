#pragma once

// Structures given by a frame (e_a) of vector fields and constant
// frame-basis tensors. Column a of the frame matrix E holds e_a in the
// coordinate basis; conversion to coordinates is
//   phi = E phi^ E^-1,  xi = E xi^,  eta = eta^ E^-1,  g = E^-T g^ E^-1.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "paracr/ad/dual.hpp"
#include "paracr/errors.hpp"
#include "paracr/expr/expr.hpp"
#include "paracr/geometry/linalg.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

inline constexpr double kMinFrameDeterminant = 1e-6;

struct FrameConstants {
  Mat<double> g_hat;
  Mat<double> phi_hat;
  Vec<double> xi_hat;
  Vec<double> eta_hat;

  int dimension() const { return g_hat.dim(); }

  /// Shape, symmetry and signature (n+1, n) of g^.
  void validate() const;

  /// (e_a, e_{n+a}) null pairs with g^(e_a, e_{n+a}) = 1, phi^ = diag(-1, +1, 0),
  /// xi^ = e_{2n+1}: the frame-basis tensors shared by the frame examples.
  static FrameConstants canonical(int n);
};

/// Number of positive and negative eigenvalues of a symmetric matrix.
std::pair<int, int> inertia(const Mat<double>& a);

template <class T>
StructureFields<T> frame_to_coordinates(const Mat<T>& frame, const FrameConstants& c) {
  const int m = frame.dim();
  auto lu = lu_factor<SingularFrame>(frame);
  const double det = value_of(lu_determinant(lu));
  if (!(std::abs(det) >= kMinFrameDeterminant)) {
    throw SingularFrame("frame determinant " + std::to_string(det) + " below 1e-6");
  }
  const Mat<T> inv = lu_inverse(lu);
  StructureFields<T> f(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      T phi = constant<T>(0.0);
      T g = constant<T>(0.0);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (c.phi_hat(a, b) != 0.0) phi = phi + frame(i, a) * (c.phi_hat(a, b) * inv(b, j));
          if (c.g_hat(a, b) != 0.0) g = g + inv(a, i) * (c.g_hat(a, b) * inv(b, j));
        }
      }
      f.phi(i, j) = phi;
      f.g(i, j) = g;
    }
    T xi = constant<T>(0.0);
    T eta = constant<T>(0.0);
    for (int a = 0; a < m; ++a) {
      if (c.xi_hat(a) != 0.0) xi = xi + frame(i, a) * c.xi_hat(a);
      if (c.eta_hat(a) != 0.0) eta = eta + c.eta_hat(a) * inv(a, i);
    }
    f.xi(i) = xi;
    f.eta(i) = eta;
  }
  return f;
}

/// Frame matrix given entrywise by expressions.
class ExprFrame {
 public:
  using ExprMatrix = std::vector<std::vector<expr::Expr>>;

  explicit ExprFrame(ExprMatrix entries) : entries_(std::move(entries)) {
    for (const auto& row : entries_) {
      if (row.size() != entries_.size()) throw ValidationError("frame: E must be square");
    }
  }

  int dimension() const { return static_cast<int>(entries_.size()); }

  template <class T>
  Mat<T> matrix(std::span<const T> x) const {
    const int m = dimension();
    Mat<T> e(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) e(i, j) = entries_[i][j].eval(x);
    return e;
  }

  const ExprMatrix& entries() const { return entries_; }

 private:
  ExprMatrix entries_;
};

/// d^2 f / dx^a dx^b at x, by two nested dual levels.
template <class T>
T second_partial(const expr::Expr& f, std::span<const T> x, int a, int b) {
  std::vector<Dual<Dual<T>>> y;
  y.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int k = static_cast<int>(i);
    Dual<T> inner(x[i], constant<T>(k == a ? 1.0 : 0.0));
    Dual<T> outer(constant<T>(k == b ? 1.0 : 0.0), constant<T>(0.0));
    y.emplace_back(inner, outer);
  }
  return f.eval(std::span<const Dual<Dual<T>>>(y)).d.d;
}

/// Frame of the almost para-cosymplectic family: coordinates
/// (x^1..x^n, y_1..y_n, z), e_a = d/dx^a - sum_w F^w_a d/dy_w, e_{n+a} = d/dy_a,
/// e_{2n+1} = d/dz, with F^w_a = d^2 H / dx^a dx^w from a potential H(x, z).
class HessianFrame {
 public:
  HessianFrame(int n, expr::Expr potential) : n_(n), potential_(std::move(potential)) {
    if (n < 1) throw ValidationError("cosymplectic frame: n must be >= 1");
    for (int a = 0; a < n; ++a) {
      if (potential_.uses_variable(n + a)) {
        throw ValidationError("cosymplectic frame: H must depend on x^a and z only");
      }
    }
    if (potential_.arity() > 2 * n + 1) throw ValidationError("cosymplectic frame: H uses unknown coordinates");
  }

  int dimension() const { return 2 * n_ + 1; }
  int n() const { return n_; }
  const expr::Expr& potential() const { return potential_; }

  template <class T>
  Mat<T> matrix(std::span<const T> x) const {
    Mat<T> e = identity<T>(dimension());
    for (int a = 0; a < n_; ++a) {
      for (int w = a; w < n_; ++w) {
        T f = second_partial(potential_, x, a, w);
        e(n_ + w, a) = -f;
        e(n_ + a, w) = -f;
      }
    }
    return e;
  }

 private:
  int n_;
  expr::Expr potential_;
};

template <class Frame>
class FrameSource {
 public:
  FrameSource(Frame frame, FrameConstants constants) : frame_(std::move(frame)), constants_(std::move(constants)) {
    if (frame_.dimension() != constants_.dimension()) {
      throw ValidationError("frame: E and frame-basis tensors disagree on dimension");
    }
    constants_.validate();
  }

  int dimension() const { return frame_.dimension(); }
  std::string kind() const { return "frame"; }

  template <class T>
  StructureFields<T> fields(std::span<const T> x) const {
    return frame_to_coordinates(frame_.template matrix<T>(x), constants_);
  }

  const Frame& frame() const { return frame_; }
  const FrameConstants& constants() const { return constants_; }

 private:
  Frame frame_;
  FrameConstants constants_;
};

}  // namespace paracr
