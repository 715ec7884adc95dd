#pragma once

// Hypersurfaces of flat para-Kaehler space (R^{2n+2}, G, J) given as a graph
// over a (2n+1)-dimensional chart. The induced almost paracontact metric
// structure is
//   xi = -J N,   J X = phi X - eta(X) N,   g = G restricted,
// with N the position field (G(N, N) = -1 on the quadric).

#include <span>
#include <string>
#include <vector>

#include "paracr/ad/seed.hpp"
#include "paracr/errors.hpp"
#include "paracr/expr/expr.hpp"
#include "paracr/geometry/linalg.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

inline constexpr double kMinPatchRadicand = 1e-6;

class EmbeddedHypersurface {
 public:
  /// Patch x^{2n+2} = sqrt(1 + sum_{a<=n+1} u_a^2 - sum_{a>n+1} u_a^2) of
  /// sum_{a<=n+1} x_a^2 - sum_{a>n+1} x_a^2 = -1.
  static EmbeddedHypersurface hyperboloid(int n);

  int dimension() const { return 2 * n_ + 1; }
  int ambient_dimension() const { return 2 * n_ + 2; }
  int n() const { return n_; }
  std::string kind() const { return "hypersurface"; }

  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const expr::Expr& radicand() const { return radicand_; }
  /// Diagonal of G: +1 on the first n+1 ambient axes, -1 on the rest.
  double ambient_metric(int a) const { return a <= n_ ? 1.0 : -1.0; }

  /// Ambient index paired with `a` by J (blocks {0..n} <-> {n+1..2n+1}).
  int para_complex_partner(int a) const { return a <= n_ ? a + n_ + 1 : a - n_ - 1; }

  template <class T>
  std::vector<T> embed(std::span<const T> u) const {
    const T r = radicand_.eval(u);
    if (!(value_of(r) >= kMinPatchRadicand)) throw OutsidePatch("point outside the graph patch");
    std::vector<T> x(u.begin(), u.end());
    x.push_back(paracr::sqrt(r));
    return x;
  }

  template <class T>
  T ambient_product(const std::vector<T>& a, const std::vector<T>& b) const {
    T s = constant<T>(0.0);
    for (int k = 0; k < ambient_dimension(); ++k) s = s + ambient_metric(k) * (a[k] * b[k]);
    return s;
  }

  template <class T>
  std::vector<T> apply_j(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (int k = 0; k < ambient_dimension(); ++k) out[k] = v[para_complex_partner(k)];
    return out;
  }

  /// Induced (g, phi, xi, eta) in the chart basis.
  template <class T>
  StructureFields<T> fields(std::span<const T> u) const {
    const int m = dimension();
    const std::vector<T> position = embed(u);
    std::vector<std::vector<T>> tangents;
    tangents.reserve(m);
    for (int i = 0; i < m; ++i) {
      auto ui = seed(u, i);
      auto xi = embed(std::span<const Dual<T>>(ui));
      std::vector<T> t(xi.size());
      for (std::size_t k = 0; k < xi.size(); ++k) t[k] = xi[k].d;
      tangents.push_back(std::move(t));
    }

    StructureFields<T> f(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) f.g(i, j) = ambient_product(tangents[i], tangents[j]);

    std::vector<T> reeb = apply_j(position);
    for (auto& c : reeb) c = -c;
    for (int i = 0; i < m; ++i) f.eta(i) = ambient_product(tangents[i], reeb);

    const auto lu = lu_factor<DegenerateMetric>(f.g, 1e-12);
    f.xi = lu_solve(lu, f.eta);
    Mat<T> rhs(m);
    for (int j = 0; j < m; ++j) {
      const std::vector<T> jt = apply_j(tangents[j]);
      Vec<T> col(m);
      for (int i = 0; i < m; ++i) col(i) = ambient_product(tangents[i], jt);
      const Vec<T> phi_col = lu_solve(lu, col);
      for (int i = 0; i < m; ++i) f.phi(i, j) = phi_col(i);
    }
    return f;
  }

  /// sum_{a<=n+1} x_a^2 - sum_{a>n+1} x_a^2 + 1 at the embedded point.
  double quadric_residual(std::span<const double> u) const;
  /// G(N, N) + 1 with N the position vector.
  double normal_residual(std::span<const double> u) const;

 private:
  EmbeddedHypersurface(int n, std::vector<std::string> coordinates, expr::Expr radicand)
      : n_(n), coordinates_(std::move(coordinates)), radicand_(std::move(radicand)) {}

  int n_;
  std::vector<std::string> coordinates_;
  expr::Expr radicand_;
};

/// Induced structure at a chart point (same as `h.fields`).
template <class T>
StructureFields<T> hypersurface_pullback(const EmbeddedHypersurface& h, std::span<const T> u) {
  return h.fields(u);
}

}  // namespace paracr
