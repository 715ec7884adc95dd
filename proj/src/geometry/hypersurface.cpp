#include "paracr/geometry/hypersurface.hpp"

namespace paracr {

EmbeddedHypersurface EmbeddedHypersurface::hyperboloid(int n) {
  if (n < 1) throw ValidationError("hyperboloid: n must be >= 1");
  std::vector<std::string> coords;
  for (int a = 1; a <= 2 * n + 1; ++a) coords.push_back("u" + std::to_string(a));
  std::string text = "1";
  for (int a = 1; a <= 2 * n + 1; ++a) text += (a <= n + 1 ? " + u" : " - u") + std::to_string(a) + "^2";
  return EmbeddedHypersurface(n, coords, expr::parse(text, coords));
}

double EmbeddedHypersurface::quadric_residual(std::span<const double> u) const {
  const auto x = embed(u);
  double s = 1.0;
  for (int a = 0; a < ambient_dimension(); ++a) s += ambient_metric(a) * x[a] * x[a];
  return s;
}

double EmbeddedHypersurface::normal_residual(std::span<const double> u) const {
  const auto x = embed(u);
  return ambient_product(x, x) + 1.0;
}

}  // namespace paracr
