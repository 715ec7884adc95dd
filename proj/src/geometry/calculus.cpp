#include "paracr/geometry/calculus.hpp"

namespace paracr {

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    r.value(i) = a.value(i) + b.value(i);
    for (int k = 0; k < a.dim(); ++k) r.jac(k, i) = a.jac(k, i) + b.jac(k, i);
  }
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-1.0) * b; }

VectorField operator*(double c, const VectorField& a) {
  VectorField r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    r.value(i) = c * a.value(i);
    for (int k = 0; k < a.dim(); ++k) r.jac(k, i) = c * a.jac(k, i);
  }
  return r;
}

VectorField operator*(const ScalarField& f, const VectorField& a) {
  VectorField r(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    r.value(i) = f.value * a.value(i);
    for (int k = 0; k < a.dim(); ++k) r.jac(k, i) = f.grad(k) * a.value(i) + f.value * a.jac(k, i);
  }
  return r;
}

Vec<double> lie_bracket(const VectorField& U, const VectorField& V) {
  const int m = U.dim();
  Vec<double> b(m);
  for (int k = 0; k < m; ++k) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += U.value(i) * V.jac(i, k) - V.value(i) * U.jac(i, k);
    b(k) = s;
  }
  return b;
}

VectorField apply_tensor(const Mat<double>& a, const Tensor3<double>& da, const VectorField& V) {
  const int m = V.dim();
  VectorField r(m);
  for (int i = 0; i < m; ++i) {
    double v = 0.0;
    for (int j = 0; j < m; ++j) v += a(i, j) * V.value(j);
    r.value(i) = v;
    for (int k = 0; k < m; ++k) {
      double d = 0.0;
      for (int j = 0; j < m; ++j) d += da(k, i, j) * V.value(j) + a(i, j) * V.jac(k, j);
      r.jac(k, i) = d;
    }
  }
  return r;
}

ScalarField apply_form(const Vec<double>& w, const Mat<double>& dw, const VectorField& V) {
  const int m = V.dim();
  ScalarField f{0.0, Vec<double>(m)};
  for (int j = 0; j < m; ++j) f.value += w(j) * V.value(j);
  for (int k = 0; k < m; ++k) {
    double d = 0.0;
    for (int j = 0; j < m; ++j) d += dw(k, j) * V.value(j) + w(j) * V.jac(k, j);
    f.grad(k) = d;
  }
  return f;
}

VectorField phi_field(const LocalGeometry<double>& G, const VectorField& V) { return apply_tensor(G.phi, G.dphi, V); }

VectorField xi_field(const LocalGeometry<double>& G) {
  VectorField f(G.m);
  f.value = G.xi;
  f.jac = G.dxi;
  return f;
}

ScalarField eta_of(const LocalGeometry<double>& G, const VectorField& V) { return apply_form(G.eta, G.deta, V); }

VectorField project_to_d(const LocalGeometry<double>& G, const VectorField& V) {
  return V - eta_of(G, V) * xi_field(G);
}

VectorField project_to_eigen(const LocalGeometry<double>& G, int sign, const VectorField& V) {
  const VectorField d = project_to_d(G, V);
  return 0.5 * (d + static_cast<double>(sign) * phi_field(G, d));
}

Mat<double> lie_derivative_11(const VectorField& V, const Mat<double>& t, const Tensor3<double>& dt) {
  const int m = V.dim();
  Mat<double> out(m);
  for (int j = 0; j < m; ++j) {
    Vec<double> e(m);
    e(j) = 1.0;
    const VectorField X = VectorField::constant_field(e);
    const Vec<double> a = lie_bracket(V, apply_tensor(t, dt, X));
    const Vec<double> b = matvec(t, lie_bracket(V, X));
    for (int i = 0; i < m; ++i) out(i, j) = a(i) - b(i);
  }
  return out;
}

double exterior_derivative(const Vec<double>& w, const Mat<double>& dw, const VectorField& X, const VectorField& Y) {
  const ScalarField wy = apply_form(w, dw, Y);
  const ScalarField wx = apply_form(w, dw, X);
  return 0.5 * (dot(X.value, wy.grad) - dot(Y.value, wx.grad) - dot(w, lie_bracket(X, Y)));
}

Mat<double> exterior_derivative(const Mat<double>& dw) {
  const int m = dw.dim();
  Mat<double> out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = 0.5 * (dw(i, j) - dw(j, i));
  return out;
}

Tensor3<double> exterior_derivative(const Tensor3<double>& dF) {
  const int m = dF.dim();
  Tensor3<double> out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out(i, j, k) = (dF(i, j, k) + dF(j, k, i) + dF(k, i, j)) / 3.0;
  return out;
}

}  // namespace paracr
