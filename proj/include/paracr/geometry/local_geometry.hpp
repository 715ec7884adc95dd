#pragma once

// Pointwise tensor calculus on one chart. Conventions:
//   gamma(k, i, j)      = Gamma^k_ij
//   dgamma(l, k, i, j)  = d_l Gamma^k_ij
//   riemann(i, j, k, l) = R^i_jkl = (R(d_k, d_l) d_j)^i,
//     R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   ricci(j, k) = Tr{X -> R(X, d_j) d_k}
//   d eta(X, Y) = 1/2 (X eta(Y) - Y eta(X) - eta([X, Y]))
//   d Phi(X, Y, Z) = 1/3 (cyclic sum)
// Derivatives are never differenced: each level is one more seeded dual.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "paracr/ad/seed.hpp"
#include "paracr/errors.hpp"
#include "paracr/geometry/linalg.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

inline constexpr double kMinMetricDeterminant = 1e-10;
inline constexpr double kMinPlaneGram = 1e-6;

template <class T>
using Tensor3 = Tensor<T, 3>;
template <class T>
using Tensor4 = Tensor<T, 4>;

/// Structure tensors with first derivatives and everything built from them.
template <class T>
struct LocalGeometry {
  int m = 0;
  Mat<T> g, ginv, phi;
  Vec<T> xi, eta;
  Tensor3<T> dg;    // dg(k, i, j) = d_k g_ij
  Tensor3<T> dphi;  // dphi(k, i, j) = d_k phi^i_j
  Mat<T> dxi;       // dxi(k, i) = d_k xi^i
  Mat<T> deta;      // deta(k, j) = d_k eta_j
  Tensor3<T> gamma;
  Tensor3<T> nabla_g;    // (nabla_k g)_ij
  Tensor3<T> nabla_phi;  // (nabla_k phi)^i_j
  Mat<T> nabla_xi;       // (nabla_k xi)^i
  Mat<T> nabla_eta;      // (nabla_k eta)_j
  Mat<T> h;              // 1/2 (L_xi phi)^i_j
  Mat<T> deta_form;      // d eta(d_i, d_j)
  Mat<T> fundamental;    // Phi(d_i, d_j) = g(d_i, phi d_j)
  Tensor3<T> dfundamental;  // d_k Phi_ij
  Tensor3<T> dphi_form;     // d Phi(d_i, d_j, d_k)
};

template <class T>
StructureFields<T> evaluate_fields(const StructureSource& s, std::span<const T> x) {
  if (static_cast<int>(x.size()) != s.dimension()) {
    throw WrongDimension("point has " + std::to_string(x.size()) + " coordinates, chart has " +
                         std::to_string(s.dimension()));
  }
  return s.evaluate(x);
}

template <class T>
LocalGeometry<T> local_geometry(const StructureSource& s, std::span<const T> x) {
  const int m = s.dimension();
  LocalGeometry<T> G;
  G.m = m;
  G.dg = Tensor3<T>(m);
  G.dphi = Tensor3<T>(m);
  G.dxi = Mat<T>(m);
  G.deta = Mat<T>(m);
  for (int k = 0; k < m; ++k) {
    const auto xk = seed(x, k);
    const StructureFields<Dual<T>> f = evaluate_fields(s, std::span<const Dual<T>>(xk));
    if (k == 0) {
      G.g = primal(f.g);
      G.phi = primal(f.phi);
      G.xi = primal(f.xi);
      G.eta = primal(f.eta);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        G.dg(k, i, j) = f.g(i, j).d;
        G.dphi(k, i, j) = f.phi(i, j).d;
      }
      G.dxi(k, i) = f.xi(i).d;
      G.deta(k, i) = f.eta(i).d;
    }
  }

  const auto lu = lu_factor<DegenerateMetric>(G.g, 0.0);
  const double det = value_of(lu_determinant(lu));
  if (!(std::abs(det) >= kMinMetricDeterminant)) {
    throw DegenerateMetric("metric determinant " + std::to_string(det) + " below 1e-10");
  }
  G.ginv = lu_inverse(lu);

  G.gamma = Tensor3<T>(m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        T s_ = constant<T>(0.0);
        for (int l = 0; l < m; ++l) s_ = s_ + G.ginv(k, l) * (G.dg(i, j, l) + G.dg(j, i, l) - G.dg(l, i, j));
        G.gamma(k, i, j) = 0.5 * s_;
        G.gamma(k, j, i) = G.gamma(k, i, j);
      }

  G.nabla_g = Tensor3<T>(m);
  G.nabla_phi = Tensor3<T>(m);
  G.nabla_xi = Mat<T>(m);
  G.nabla_eta = Mat<T>(m);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) {
      T nx = G.dxi(k, i);
      T ne = G.deta(k, i);
      for (int p = 0; p < m; ++p) {
        nx = nx + G.gamma(i, k, p) * G.xi(p);
        ne = ne - G.gamma(p, k, i) * G.eta(p);
      }
      G.nabla_xi(k, i) = nx;
      G.nabla_eta(k, i) = ne;
      for (int j = 0; j < m; ++j) {
        T ng = G.dg(k, i, j);
        T nphi = G.dphi(k, i, j);
        for (int p = 0; p < m; ++p) {
          ng = ng - G.gamma(p, k, i) * G.g(p, j) - G.gamma(p, k, j) * G.g(i, p);
          nphi = nphi + G.gamma(i, k, p) * G.phi(p, j) - G.gamma(p, k, j) * G.phi(i, p);
        }
        G.nabla_g(k, i, j) = ng;
        G.nabla_phi(k, i, j) = nphi;
      }
    }
  }

  G.h = Mat<T>(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      T l = constant<T>(0.0);
      for (int k = 0; k < m; ++k) {
        l = l + G.xi(k) * G.dphi(k, i, j) - G.phi(k, j) * G.dxi(k, i) + G.phi(i, k) * G.dxi(j, k);
      }
      G.h(i, j) = 0.5 * l;
    }

  G.deta_form = Mat<T>(m);
  G.fundamental = Mat<T>(m);
  G.dfundamental = Tensor3<T>(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      G.deta_form(i, j) = 0.5 * (G.deta(i, j) - G.deta(j, i));
      T phi_ij = constant<T>(0.0);
      for (int a = 0; a < m; ++a) phi_ij = phi_ij + G.g(i, a) * G.phi(a, j);
      G.fundamental(i, j) = phi_ij;
      for (int k = 0; k < m; ++k) {
        T d = constant<T>(0.0);
        for (int a = 0; a < m; ++a) d = d + G.dg(k, i, a) * G.phi(a, j) + G.g(i, a) * G.dphi(k, a, j);
        G.dfundamental(k, i, j) = d;
      }
    }
  G.dphi_form = Tensor3<T>(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        G.dphi_form(i, j, k) = (G.dfundamental(i, j, k) + G.dfundamental(j, k, i) + G.dfundamental(k, i, j)) / 3.0;
  return G;
}

/// Adds second-derivative objects: curvature, Ricci, star-Ricci, nabla h.
template <class T>
struct PointData {
  std::vector<double> point;
  LocalGeometry<T> geo;
  Tensor4<T> dgamma;     // d_l Gamma^k_ij
  Tensor3<T> dh;         // d_k h^i_j
  Tensor3<T> ddeta_form; // d_k (d eta)_ij
  Tensor3<T> nabla_h;    // (nabla_k h)^i_j
  Tensor4<T> riemann;
  Mat<T> ricci;
  Mat<T> ricci_star;
  T scalar{};
  T scalar_star{};

  int dim() const { return geo.m; }
};

using PointFrame = PointData<double>;

template <class T>
Tensor4<T> riemann_from(const LocalGeometry<T>& G, const Tensor4<T>& dgamma) {
  const int m = G.m;
  Tensor4<T> R(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          T r = dgamma(k, i, l, j) - dgamma(l, i, k, j);
          for (int p = 0; p < m; ++p) r = r + G.gamma(i, k, p) * G.gamma(p, l, j) - G.gamma(i, l, p) * G.gamma(p, k, j);
          R(i, j, k, l) = r;
          R(i, j, l, k) = -r;
        }
  return R;
}

template <class T>
PointData<T> point_data(const StructureSource& s, std::span<const T> x) {
  const int m = s.dimension();
  PointData<T> P;
  P.point.reserve(x.size());
  for (const auto& c : x) P.point.push_back(value_of(c));
  P.geo = local_geometry(s, x);
  P.dgamma = Tensor4<T>(m);
  P.dh = Tensor3<T>(m);
  P.ddeta_form = Tensor3<T>(m);
  for (int l = 0; l < m; ++l) {
    const auto xl = seed(x, l);
    const LocalGeometry<Dual<T>> Gl = local_geometry(s, std::span<const Dual<T>>(xl));
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i) {
        P.dh(l, k, i) = Gl.h(k, i).d;
        P.ddeta_form(l, k, i) = Gl.deta_form(k, i).d;
        for (int j = 0; j < m; ++j) P.dgamma(l, k, i, j) = Gl.gamma(k, i, j).d;
      }
  }
  const auto& G = P.geo;

  P.nabla_h = Tensor3<T>(m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        T v = P.dh(k, i, j);
        for (int p = 0; p < m; ++p) v = v + G.gamma(i, k, p) * G.h(p, j) - G.gamma(p, k, j) * G.h(i, p);
        P.nabla_h(k, i, j) = v;
      }

  P.riemann = riemann_from(G, P.dgamma);
  P.ricci = Mat<T>(m);
  P.ricci_star = Mat<T>(m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      T ric = constant<T>(0.0);
      for (int i = 0; i < m; ++i) ric = ric + P.riemann(i, k, i, j);
      P.ricci(j, k) = ric;
      T star = constant<T>(0.0);
      for (int i = 0; i < m; ++i)
        for (int a = 0; a < m; ++a) {
          if (value_of(G.phi(i, a)) == 0.0 && !is_dual<T>) continue;
          for (int b = 0; b < m; ++b) star = star - G.phi(i, a) * P.riemann(a, b, i, j) * G.phi(b, k);
        }
      P.ricci_star(j, k) = star;
    }
  P.scalar = constant<T>(0.0);
  P.scalar_star = constant<T>(0.0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      P.scalar = P.scalar + G.ginv(j, k) * P.ricci(j, k);
      P.scalar_star = P.scalar_star + G.ginv(j, k) * P.ricci_star(j, k);
    }
  return P;
}

inline PointFrame point_frame(const StructureSource& s, std::span<const double> x) { return point_data<double>(s, x); }

// ---- pointwise contractions on a PointFrame ----

inline Vec<double> apply(const Mat<double>& a, const Vec<double>& v) { return matvec(a, v); }

inline double inner(const Mat<double>& g, const Vec<double>& a, const Vec<double>& b) {
  double s = 0.0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) s += a(i) * g(i, j) * b(j);
  return s;
}

inline double pair(const Vec<double>& form, const Vec<double>& v) { return dot(form, v); }

/// R(X, Y)Z.
inline Vec<double> curvature(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y, const Vec<double>& Z) {
  const int m = P.dim();
  Vec<double> out(m);
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) s += P.riemann(i, j, k, l) * Z(j) * X(k) * Y(l);
    out(i) = s;
  }
  return out;
}

/// (nabla_X A) for a (1,1) tensor given as nabla(k, i, j).
inline Mat<double> along(const Tensor3<double>& nabla, const Vec<double>& X) {
  const int m = X.dim();
  Mat<double> out(m);
  for (int k = 0; k < m; ++k) {
    if (X(k) == 0.0) continue;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out(i, j) += X(k) * nabla(k, i, j);
  }
  return out;
}

/// nabla_X of a vector or covector field given as nabla(k, i).
inline Vec<double> along(const Mat<double>& nabla, const Vec<double>& X) { return vecmat(X, nabla); }

/// Sectional curvature of span{X, Y}. Throws DegeneratePlane when the Gram
/// determinant of the coordinate-normalised pair is below 1e-6.
double sectional_curvature(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y);

/// Max |R^i_jkl + R^i_klj + R^i_ljk| scaled by max(1, |R|).
double bianchi_residual(const PointFrame& P);

/// Max |(nabla g)_kij|.
double metric_compatibility_residual(const PointFrame& P);

/// Max |Gamma^k_ij - Gamma^k_ji|.
double christoffel_symmetry_residual(const PointFrame& P);

/// Max |d(d eta)_ijk|.
double dd_residual(const PointFrame& P);

/// Max component of the Weyl tensor (m >= 5), scaled by max(1, |R|).
double weyl_residual(const PointFrame& P);

/// Cotton-type obstruction for m = 3, scaled by max(1, term magnitudes).
/// Needs third derivatives, so it re-evaluates the source.
double cotton_residual(const StructureSource& s, std::span<const double> x);

/// Weyl for m >= 5, Cotton for m = 3.
double conformal_flatness(const StructureSource& s, std::span<const double> x);

}  // namespace paracr
