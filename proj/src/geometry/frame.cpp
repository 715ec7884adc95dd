#include "paracr/geometry/frame.hpp"

#include <algorithm>

namespace paracr {

std::pair<int, int> inertia(const Mat<double>& a) {
  // Cyclic Jacobi rotations; m is tiny so convergence is immediate.
  const int m = a.dim();
  Mat<double> s = a;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += s(p, q) * s(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (std::abs(s(p, q)) < 1e-300) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < m; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < m; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }
  double scale = 0.0;
  for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(s(i, i)));
  int pos = 0, neg = 0;
  for (int i = 0; i < m; ++i) {
    if (s(i, i) > 1e-12 * scale) ++pos;
    if (s(i, i) < -1e-12 * scale) ++neg;
  }
  return {pos, neg};
}

void FrameConstants::validate() const {
  const int m = g_hat.dim();
  if (m < 3 || m % 2 == 0) throw ValidationError("frame: dimension must be odd and >= 3");
  if (phi_hat.dim() != m || xi_hat.dim() != m || eta_hat.dim() != m) {
    throw ValidationError("frame: g_hat, phi_hat, xi_hat, eta_hat dimensions differ");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (std::abs(g_hat(i, j) - g_hat(j, i)) > 1e-12) throw ValidationError("frame: g_hat must be symmetric");
  const int n = (m - 1) / 2;
  auto [pos, neg] = inertia(g_hat);
  if (pos != n + 1 || neg != n) {
    throw ValidationError("frame: g_hat must have signature (" + std::to_string(n + 1) + ", " + std::to_string(n) +
                          "), got (" + std::to_string(pos) + ", " + std::to_string(neg) + ")");
  }
}

FrameConstants FrameConstants::canonical(int n) {
  const int m = 2 * n + 1;
  FrameConstants c{Mat<double>(m), Mat<double>(m), Vec<double>(m), Vec<double>(m)};
  for (int a = 0; a < n; ++a) {
    c.g_hat(a, n + a) = 1.0;
    c.g_hat(n + a, a) = 1.0;
    c.phi_hat(a, a) = -1.0;
    c.phi_hat(n + a, n + a) = 1.0;
  }
  c.g_hat(2 * n, 2 * n) = 1.0;
  c.xi_hat(2 * n) = 1.0;
  c.eta_hat(2 * n) = 1.0;
  return c;
}

}  // namespace paracr
