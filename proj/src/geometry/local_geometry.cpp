#include "paracr/geometry/local_geometry.hpp"

namespace paracr {

double sectional_curvature(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y) {
  const double nx = std::sqrt(dot(X, X));
  const double ny = std::sqrt(dot(Y, Y));
  if (!(nx > 0.0) || !(ny > 0.0)) throw DegeneratePlane("zero vector spans no plane");
  Vec<double> u = map(X, [nx](double v) { return v / nx; });
  Vec<double> v = map(Y, [ny](double w) { return w / ny; });
  const auto& g = P.geo.g;
  const double gram = inner(g, u, u) * inner(g, v, v) - inner(g, u, v) * inner(g, u, v);
  if (!(std::abs(gram) >= kMinPlaneGram)) {
    throw DegeneratePlane("plane Gram determinant " + std::to_string(gram) + " below 1e-6");
  }
  return inner(g, curvature(P, u, v, v), u) / gram;
}

double bianchi_residual(const PointFrame& P) {
  const int m = P.dim();
  double worst = 0.0;
  const double scale = std::max(1.0, max_abs(P.riemann));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double c = P.riemann(i, j, k, l) + P.riemann(i, k, l, j) + P.riemann(i, l, j, k);
          worst = std::max(worst, std::abs(c));
        }
  return worst / scale;
}

double metric_compatibility_residual(const PointFrame& P) { return max_abs(P.geo.nabla_g); }

double christoffel_symmetry_residual(const PointFrame& P) {
  const int m = P.dim();
  double worst = 0.0;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) worst = std::max(worst, std::abs(P.geo.gamma(k, i, j) - P.geo.gamma(k, j, i)));
  return worst;
}

double dd_residual(const PointFrame& P) {
  const int m = P.dim();
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const double c = (P.ddeta_form(i, j, k) + P.ddeta_form(j, k, i) + P.ddeta_form(k, i, j)) / 3.0;
        worst = std::max(worst, std::abs(c));
      }
  return worst;
}

double weyl_residual(const PointFrame& P) {
  const int m = P.dim();
  if (m < 5) throw WrongDimension("Weyl residual needs dimension >= 5");
  const int n = (m - 1) / 2;
  const auto& g = P.geo.g;
  const auto& ginv = P.geo.ginv;
  Mat<double> ric_up(m);  // Ric^i_k
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int a = 0; a < m; ++a) ric_up(i, k) += ginv(i, a) * P.ricci(a, k);
  const double c1 = 1.0 / (2.0 * n - 1.0);
  const double c2 = P.scalar / (2.0 * n * (2.0 * n - 1.0));
  double worst = 0.0;
  double scale = std::max(1.0, max_abs(P.riemann));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const double dik = i == k ? 1.0 : 0.0;
          const double dil = i == l ? 1.0 : 0.0;
          const double ricci_part =
              c1 * (g(l, j) * ric_up(i, k) + P.ricci(l, j) * dik - g(k, j) * ric_up(i, l) - P.ricci(k, j) * dil);
          const double scalar_part = c2 * (g(l, j) * dik - g(k, j) * dil);
          const double rhs = ricci_part - scalar_part;
          scale = std::max({scale, std::abs(ricci_part), std::abs(scalar_part)});
          worst = std::max(worst, std::abs(P.riemann(i, j, k, l) - rhs));
        }
  return worst / scale;
}

double cotton_residual(const StructureSource& s, std::span<const double> x) {
  const int m = s.dimension();
  if (m != 3) throw WrongDimension("Cotton residual is the dimension-3 obstruction");
  Tensor3<double> dric(m);  // d_a Ric_bc
  Vec<double> dr(m);
  Mat<double> ric(m), g(m);
  Tensor3<double> gamma(m);
  for (int a = 0; a < m; ++a) {
    const auto xa = seed(x, a);
    const PointData<Jet1> Pa = point_data<Jet1>(s, std::span<const Jet1>(xa));
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) dric(a, b, c) = Pa.ricci(b, c).d;
    dr(a) = Pa.scalar.d;
    if (a == 0) {
      ric = primal(Pa.ricci);
      g = primal(Pa.geo.g);
      gamma = primal(Pa.geo.gamma);
    }
  }
  Tensor3<double> nric(m);  // (nabla_a Ric)_bc
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        double v = dric(a, b, c);
        for (int p = 0; p < m; ++p) v -= gamma(p, a, b) * ric(p, c) + gamma(p, a, c) * ric(b, p);
        nric(a, b, c) = v;
      }
  double worst = 0.0;
  double scale = std::max(1.0, max_abs(nric));
  for (int X = 0; X < m; ++X)
    for (int Y = 0; Y < m; ++Y)
      for (int Z = 0; Z < m; ++Z) {
        const double scalar_part = 0.25 * (dr(X) * g(Y, Z) - dr(Z) * g(Y, X));
        scale = std::max(scale, std::abs(scalar_part));
        worst = std::max(worst, std::abs(nric(X, Y, Z) - nric(Z, Y, X) - scalar_part));
      }
  return worst / scale;
}

double conformal_flatness(const StructureSource& s, std::span<const double> x) {
  if (s.dimension() == 3) return cotton_residual(s, x);
  return weyl_residual(point_frame(s, x));
}

}  // namespace paracr
