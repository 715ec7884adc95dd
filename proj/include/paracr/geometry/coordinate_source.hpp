#pragma once

#include <span>
#include <string>
#include <vector>

#include "paracr/expr/expr.hpp"
#include "paracr/geometry/source.hpp"

namespace paracr {

/// Structure given directly by coordinate-basis component expressions.
class CoordinateSource {
 public:
  using ExprMatrix = std::vector<std::vector<expr::Expr>>;

  CoordinateSource(ExprMatrix g, ExprMatrix phi, std::vector<expr::Expr> xi, std::vector<expr::Expr> eta)
      : g_(std::move(g)), phi_(std::move(phi)), xi_(std::move(xi)), eta_(std::move(eta)) {
    const std::size_t m = xi_.size();
    auto square = [m](const ExprMatrix& a) {
      if (a.size() != m) return false;
      for (const auto& row : a)
        if (row.size() != m) return false;
      return true;
    };
    if (m < 3 || eta_.size() != m || !square(g_) || !square(phi_)) {
      throw ValidationError("coordinate structure: g, phi must be m x m and xi, eta length m");
    }
  }

  int dimension() const { return static_cast<int>(xi_.size()); }
  std::string kind() const { return "coordinate"; }

  template <class T>
  StructureFields<T> fields(std::span<const T> x) const {
    const int m = dimension();
    StructureFields<T> f(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        f.g(i, j) = g_[i][j].eval(x);
        f.phi(i, j) = phi_[i][j].eval(x);
      }
      f.xi(i) = xi_[i].eval(x);
      f.eta(i) = eta_[i].eval(x);
    }
    return f;
  }

  const ExprMatrix& g() const { return g_; }
  const ExprMatrix& phi() const { return phi_; }
  const std::vector<expr::Expr>& xi() const { return xi_; }
  const std::vector<expr::Expr>& eta() const { return eta_; }

 private:
  ExprMatrix g_;
  ExprMatrix phi_;
  std::vector<expr::Expr> xi_;
  std::vector<expr::Expr> eta_;
};

}  // namespace paracr
