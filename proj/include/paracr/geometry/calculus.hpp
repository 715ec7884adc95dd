#pragma once

// First-order jets of vector fields at a point, enough to take brackets.
// A VectorField stores V^i and jac(k, i) = d_k V^i. Fields are built from
// constant vectors by applying the structure tensors, whose derivatives come
// from LocalGeometry.

#include "paracr/geometry/local_geometry.hpp"

namespace paracr {

struct VectorField {
  Vec<double> value;
  Mat<double> jac;

  explicit VectorField(int m = 0) : value(m), jac(m) {}
  int dim() const { return value.dim(); }

  static VectorField constant_field(const Vec<double>& v) {
    VectorField f(v.dim());
    f.value = v;
    return f;
  }
};

/// Scalar function with gradient.
struct ScalarField {
  double value = 0.0;
  Vec<double> grad;
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double c, const VectorField& a);
VectorField operator*(const ScalarField& f, const VectorField& a);

/// [U, V]^k = U^i d_i V^k - V^i d_i U^k, at the point.
Vec<double> lie_bracket(const VectorField& U, const VectorField& V);

/// A V for a (1,1) tensor field with values a(i, j) and derivatives da(k, i, j).
VectorField apply_tensor(const Mat<double>& a, const Tensor3<double>& da, const VectorField& V);
/// w(V) for a 1-form with values w(j) and derivatives dw(k, j).
ScalarField apply_form(const Vec<double>& w, const Mat<double>& dw, const VectorField& V);

VectorField phi_field(const LocalGeometry<double>& G, const VectorField& V);
VectorField xi_field(const LocalGeometry<double>& G);
ScalarField eta_of(const LocalGeometry<double>& G, const VectorField& V);
/// V - eta(V) xi, a section of D = ker eta.
VectorField project_to_d(const LocalGeometry<double>& G, const VectorField& V);
/// 1/2 (I + sign phi)(I - xi (x) eta) V, a section of D^sign.
VectorField project_to_eigen(const LocalGeometry<double>& G, int sign, const VectorField& V);

/// (L_V T) X = [V, T X] - T [V, X] for constant X; returns the (1,1) tensor at the point.
Mat<double> lie_derivative_11(const VectorField& V, const Mat<double>& t, const Tensor3<double>& dt);

/// d w(X, Y) = 1/2 (X w(Y) - Y w(X) - w([X, Y])) for fields X, Y.
double exterior_derivative(const Vec<double>& w, const Mat<double>& dw, const VectorField& X, const VectorField& Y);

/// Components of d w for a 1-form, (d w)_ij = 1/2 (d_i w_j - d_j w_i).
Mat<double> exterior_derivative(const Mat<double>& dw);

/// Components of d F for a 2-form with derivatives dF(k, i, j):
/// (d F)_ijk = 1/3 (d_i F_jk + d_j F_ki + d_k F_ij).
Tensor3<double> exterior_derivative(const Tensor3<double>& dF);

}  // namespace paracr
