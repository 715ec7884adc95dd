#include "paracr/paracontact/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paracr {

namespace {

using V = Vec<double>;
using M = Mat<double>;

V operator+(const V& a, const V& b) {
  V r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r(i) = a(i) + b(i);
  return r;
}
V operator-(const V& a, const V& b) {
  V r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r(i) = a(i) - b(i);
  return r;
}
V operator*(double c, const V& a) {
  V r(a.dim());
  for (int i = 0; i < a.dim(); ++i) r(i) = c * a(i);
  return r;
}
M operator+(const M& a, const M& b) {
  M r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}
M operator-(const M& a, const M& b) { return a + map(b, [](double x) { return -x; }); }

/// Shorthand over one LocalGeometry.
struct Ops {
  const LocalGeometry<double>& G;
  int n() const { return (G.m - 1) / 2; }
  double g(const V& a, const V& b) const { return inner(G.g, a, b); }
  double eta(const V& a) const { return dot(G.eta, a); }
  V phi(const V& a) const { return matvec(G.phi, a); }
  V h(const V& a) const { return matvec(G.h, a); }
  const V& xi() const { return G.xi; }
  M nabla_phi(const V& X) const { return along(G.nabla_phi, X); }
  V nabla_xi(const V& X) const { return along(G.nabla_xi, X); }
  double nabla_eta(const V& X, const V& Y) const { return dot(vecmat(X, G.nabla_eta), Y); }
  double deta(const V& X, const V& Y) const { return inner(G.deta_form, X, Y); }
  V to_d(const V& X) const { return X - eta(X) * xi(); }
  V e(int k) const {
    V v(G.m);
    v(k) = 1.0;
    return v;
  }
};


const std::vector<ConditionInfo> kTable = {
    {"axioms", "phi^2 = I - eta (x) xi, eta(xi) = 1, phi xi = 0, eta o phi = 0, rank D+ = rank D- = n", ProbeUse::None, 0},
    {"compat", "g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y), eta = g(., xi), Phi skew", ProbeUse::None, 0},
    {"normal", "N(X, Y) - 2 d eta(X, Y) xi = 0", ProbeUse::Pair, 0},
    {"pcm", "Phi = d eta (paracontact metric)", ProbeUse::None, 0},
    {"apcos", "d eta = 0 and d Phi = 0 (almost para-cosymplectic)", ProbeUse::None, 0},
    {"s0", "eta([phi X, Y] + [X, phi Y]) = 0 for X, Y in D", ProbeUse::Pair, 0},
    {"s1", "[X, Y] + [phi X, phi Y] - phi([X, phi Y] + [phi X, Y]) = 0 for X, Y in D", ProbeUse::Pair, 0},
    {"involutivity+", "[D+, D+] lies in D+", ProbeUse::None, 0},
    {"involutivity-", "[D-, D-] lies in D-", ProbeUse::None, 0},
    {"news00", "d eta(X, phi Y) = d eta(Y, phi X) for X, Y in D", ProbeUse::Pair, 0},
    {"news01", "(nabla_X eta)(phi Y) + (nabla_{phi X} eta)(Y) symmetric in X, Y in D", ProbeUse::Pair, 0},
    {"thm1", "(nabla_X phi)Y + (nabla_{phi X} phi) phi Y = -((nabla_Y eta)(phi X) + (nabla_{phi Y} eta)(X)) xi, X, Y in D",
     ProbeUse::Pair, 0},
    {"jw3d", "(nabla_X phi)Y = g(phi nabla_X xi, Y) xi - eta(Y) phi nabla_X xi (dimension 3)", ProbeUse::Pair, 3},
    {"normal-nabla", "phi (nabla_X phi)Y - (nabla_{phi X} phi)Y + (nabla_X eta)(Y) xi = 0", ProbeUse::Pair, 0},
    {"wlasn", "nabla_xi xi = 0, nabla_xi eta = 0, nabla_{phi X} xi = phi nabla_X xi, nabla_xi phi = 0", ProbeUse::Pair, 0},
    {"h-props", "g(hX, Y) = g(X, hY), phi h + h phi = 0, Tr h = 0, h xi = 0, eta o h = 0", ProbeUse::None, 0},
    {"h-rel", "nabla_X xi = -phi X + phi h X", ProbeUse::Pair, 0},
    {"lemat", "(nabla_{phi X} phi) phi Y - (nabla_X phi)Y = 2 g(X, Y) xi - eta(Y)(X - hX + eta(X) xi)", ProbeUse::Pair, 0},
    {"sas", "(nabla_X phi)Y = -g(X, Y) xi + eta(Y) X", ProbeUse::Pair, 0},
    {"pScons", "nabla_X xi = -phi X and h = 0", ProbeUse::None, 0},
    {"wzor1", "(nabla_X phi)Y = g(phi nabla_X xi, Y) xi - eta(Y) phi nabla_X xi", ProbeUse::Pair, 0},
    {"wzorzamk", "(nabla_X phi)Y = -g(X - hX, Y) xi + eta(Y)(X - hX)", ProbeUse::Pair, 0},
    {"contparacr", "(nabla_X phi)Y = -g(X - hX, Y) xi for X, Y in D", ProbeUse::Pair, 0},
    {"dacko",
     "nabla_xi xi = 0, nabla_xi phi = 0, nabla_{phi X} xi = -phi nabla_X xi, "
     "(nabla_{phi X} phi) phi Y - (nabla_X phi)Y = eta(Y) phi nabla_X xi",
     ProbeUse::Pair, 0},
    {"wzor2", "para-Kaehler leaves: (nabla_X phi)Y = g(phi nabla_X xi, Y) xi - eta(Y) phi nabla_X xi", ProbeUse::Pair, 0},
    {"paracrcos", "(nabla_X phi)Y = g(phi nabla_X xi, Y) xi for X, Y in D", ProbeUse::Pair, 0},
    {"k1", "(R(W, X) phi)Y curvature identity through nabla h", ProbeUse::Triple, 0},
    {"k2", "g(R(W, X) phi Y, xi) curvature identity through nabla h", ProbeUse::Triple, 0},
    {"rsasaki", "R(X, Y) xi = eta(X) Y - eta(Y) X", ProbeUse::Pair, 0},
    {"ricsasaki", "Ric xi = -2n xi", ProbeUse::None, 0},
    {"rr-star", "r + r* + 4n^2 = 0", ProbeUse::None, 0},
    {"conformal-flat", "Weyl tensor = 0 (dimension >= 5), Cotton tensor = 0 (dimension 3)", ProbeUse::None, 0},
};

/// (nabla_X phi)Y - g(phi nabla_X xi, Y) xi + eta(Y) phi nabla_X xi
Residual leaves_form(const Ops& o, const V& X, const V& Y) {
  Residual r;
  const V lhs = matvec(o.nabla_phi(X), Y);
  const V pnx = o.phi(o.nabla_xi(X));
  const V t1 = o.g(pnx, Y) * o.xi();
  const V t2 = o.eta(Y) * pnx;
  r.term(lhs);
  r.term(t1);
  r.term(t2);
  r.diff(lhs - t1 + t2);
  return r;
}

Residual axioms(const Ops& o, const PointFrame& P) {
  const auto& G = o.G;
  Residual r;
  M phi2 = matmul(G.phi, G.phi);
  M lhs(G.m);
  for (int i = 0; i < G.m; ++i)
    for (int j = 0; j < G.m; ++j) lhs(i, j) = phi2(i, j) - (i == j ? 1.0 : 0.0) + G.xi(i) * G.eta(j);
  r.term(phi2);
  r.diff(lhs);
  const double ex = dot(G.eta, G.xi);
  r.term(ex);
  r.diff(ex - 1.0);
  r.diff(matvec(G.phi, G.xi));
  r.diff(vecmat(G.eta, G.phi));
  r.diff(static_cast<double>(eigendistribution_rank(P, +1) - o.n()));
  r.diff(static_cast<double>(eigendistribution_rank(P, -1) - o.n()));
  return r;
}

Residual compat(const Ops& o) {
  const auto& G = o.G;
  Residual r;
  const M a = matmul(transpose(G.phi), matmul(G.g, G.phi));
  M d(G.m);
  for (int i = 0; i < G.m; ++i)
    for (int j = 0; j < G.m; ++j) d(i, j) = a(i, j) + G.g(i, j) - G.eta(i) * G.eta(j);
  r.term(a);
  r.term(G.g);
  r.diff(d);
  r.diff(G.eta - matvec(G.g, G.xi));
  r.diff(G.fundamental + transpose(G.fundamental));
  return r;
}

Residual normal(const Ops& o, const PointFrame& P, const V& X, const V& Y) {
  Residual r;
  const V n = nijenhuis(P, X, Y);
  const V t = 2.0 * o.deta(X, Y) * o.xi();
  r.term(n);
  r.term(t);
  r.diff(n - t);
  return r;
}

Residual s0(const Ops& o, const V& X, const V& Y) {
  const auto& G = o.G;
  const VectorField x = project_to_d(G, VectorField::constant_field(X));
  const VectorField y = project_to_d(G, VectorField::constant_field(Y));
  const V b = lie_bracket(phi_field(G, x), y) + lie_bracket(x, phi_field(G, y));
  Residual r;
  r.term(b);
  r.diff(o.eta(b));
  return r;
}

Residual s1(const Ops& o, const V& X, const V& Y) {
  const auto& G = o.G;
  const VectorField x = project_to_d(G, VectorField::constant_field(X));
  const VectorField y = project_to_d(G, VectorField::constant_field(Y));
  const VectorField px = phi_field(G, x);
  const VectorField py = phi_field(G, y);
  const V a = lie_bracket(x, y);
  const V b = lie_bracket(px, py);
  const V c = o.phi(lie_bracket(x, py) + lie_bracket(px, y));
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a + b - c);
  return r;
}

Residual news00(const Ops& o, const V& X0, const V& Y0) {
  const V X = o.to_d(X0), Y = o.to_d(Y0);
  const double a = o.deta(X, o.phi(Y));
  const double b = o.deta(Y, o.phi(X));
  Residual r;
  r.term(a);
  r.term(b);
  r.diff(a - b);
  return r;
}

Residual news01(const Ops& o, const V& X0, const V& Y0) {
  const V X = o.to_d(X0), Y = o.to_d(Y0);
  const double a = o.nabla_eta(X, o.phi(Y)) + o.nabla_eta(o.phi(X), Y);
  const double b = o.nabla_eta(Y, o.phi(X)) + o.nabla_eta(o.phi(Y), X);
  Residual r;
  r.term(a);
  r.term(b);
  r.diff(a - b);
  return r;
}

Residual thm1(const Ops& o, const V& X0, const V& Y0) {
  const V X = o.to_d(X0), Y = o.to_d(Y0);
  const V a = matvec(o.nabla_phi(X), Y);
  const V b = matvec(o.nabla_phi(o.phi(X)), o.phi(Y));
  const V c = (o.nabla_eta(Y, o.phi(X)) + o.nabla_eta(o.phi(Y), X)) * o.xi();
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a + b + c);
  return r;
}

Residual normal_nabla(const Ops& o, const V& X, const V& Y) {
  const V a = o.phi(matvec(o.nabla_phi(X), Y));
  const V b = matvec(o.nabla_phi(o.phi(X)), Y);
  const V c = o.nabla_eta(X, Y) * o.xi();
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a - b + c);
  return r;
}

Residual wlasn(const Ops& o, const V& X) {
  const auto& G = o.G;
  Residual r;
  const V nxx = o.nabla_xi(G.xi);
  r.term(nxx);
  r.diff(nxx);
  const V nxe = vecmat(G.xi, G.nabla_eta);
  r.term(nxe);
  r.diff(nxe);
  const V a = o.nabla_xi(o.phi(X));
  const V b = o.phi(o.nabla_xi(X));
  r.term(a);
  r.term(b);
  r.diff(a - b);
  const M nxp = o.nabla_phi(G.xi);
  r.term(nxp);
  r.diff(nxp);
  return r;
}

Residual h_props(const Ops& o) {
  const auto& G = o.G;
  Residual r;
  const M gh = matmul(G.g, G.h);
  r.term(gh);
  r.diff(gh - transpose(gh));
  const M a = matmul(G.phi, G.h), b = matmul(G.h, G.phi);
  r.term(a);
  r.term(b);
  r.diff(a + b);
  double tr = 0.0;
  for (int i = 0; i < G.m; ++i) {
    tr += G.h(i, i);
    r.term(G.h(i, i));
  }
  r.diff(tr);
  r.diff(matvec(G.h, G.xi));
  r.diff(vecmat(G.eta, G.h));
  return r;
}

Residual h_rel(const Ops& o, const V& X) {
  const V a = o.nabla_xi(X);
  const V b = o.phi(X);
  const V c = o.phi(o.h(X));
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a + b - c);
  return r;
}

Residual lemat(const Ops& o, const V& X, const V& Y) {
  const V a = matvec(o.nabla_phi(o.phi(X)), o.phi(Y));
  const V b = matvec(o.nabla_phi(X), Y);
  const V c = 2.0 * o.g(X, Y) * o.xi();
  const V d = o.eta(Y) * (X - o.h(X) + o.eta(X) * o.xi());
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.term(d);
  r.diff(a - b - c + d);
  return r;
}

Residual sas(const Ops& o, const V& X, const V& Y) {
  const V a = matvec(o.nabla_phi(X), Y);
  const V b = o.g(X, Y) * o.xi();
  const V c = o.eta(Y) * X;
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a + b - c);
  return r;
}

Residual pscons(const Ops& o) {
  const auto& G = o.G;
  Residual r;
  M d(G.m);  // column k: nabla_{e_k} xi + phi e_k
  for (int k = 0; k < G.m; ++k)
    for (int i = 0; i < G.m; ++i) d(i, k) = G.nabla_xi(k, i) + G.phi(i, k);
  r.term(G.nabla_xi);
  r.term(G.phi);
  r.diff(d);
  r.diff(G.h);
  return r;
}

Residual wzorzamk(const Ops& o, const V& X, const V& Y) {
  const V a = matvec(o.nabla_phi(X), Y);
  const V xh = X - o.h(X);
  const V b = o.g(xh, Y) * o.xi();
  const V c = o.eta(Y) * xh;
  Residual r;
  r.term(a);
  r.term(b);
  r.term(c);
  r.diff(a + b - c);
  return r;
}

Residual contparacr(const Ops& o, const V& X0, const V& Y0) {
  const V X = o.to_d(X0), Y = o.to_d(Y0);
  const V a = matvec(o.nabla_phi(X), Y);
  const V b = o.g(X - o.h(X), Y) * o.xi();
  Residual r;
  r.term(a);
  r.term(b);
  r.diff(a + b);
  return r;
}

Residual dacko(const Ops& o, const V& X, const V& Y) {
  const auto& G = o.G;
  Residual r;
  const V nxx = o.nabla_xi(G.xi);
  r.term(nxx);
  r.diff(nxx);
  const M nxp = o.nabla_phi(G.xi);
  r.term(nxp);
  r.diff(nxp);
  const V a = o.nabla_xi(o.phi(X));
  const V b = o.phi(o.nabla_xi(X));
  r.term(a);
  r.term(b);
  r.diff(a + b);
  const V c = matvec(o.nabla_phi(o.phi(X)), o.phi(Y));
  const V d = matvec(o.nabla_phi(X), Y);
  const V e = o.eta(Y) * b;
  r.term(c);
  r.term(d);
  r.term(e);
  r.diff(c - d - e);
  return r;
}

Residual paracrcos(const Ops& o, const V& X0, const V& Y0) {
  const V X = o.to_d(X0), Y = o.to_d(Y0);
  const V a = matvec(o.nabla_phi(X), Y);
  const V b = o.g(o.phi(o.nabla_xi(X)), Y) * o.xi();
  Residual r;
  r.term(a);
  r.term(b);
  r.diff(a - b);
  return r;
}

Residual rsasaki(const Ops& o, const PointFrame& P, const V& X, const V& Y) {
  const V a = curvature(P, X, Y, o.xi());
  const V b = o.eta(X) * Y - o.eta(Y) * X;
  Residual r;
  r.term(a);
  r.term(b);
  r.diff(a - b);
  return r;
}

Residual ricsasaki(const Ops& o, const PointFrame& P) {
  const auto& G = o.G;
  V ric_xi(G.m);
  for (int i = 0; i < G.m; ++i)
    for (int a = 0; a < G.m; ++a)
      for (int j = 0; j < G.m; ++j) ric_xi(i) += G.ginv(i, a) * P.ricci(a, j) * G.xi(j);
  const V b = (2.0 * o.n()) * G.xi;
  Residual r;
  r.term(ric_xi);
  r.term(b);
  r.diff(ric_xi + b);
  return r;
}

Residual rr_star(const Ops& o, const PointFrame& P) {
  const double c = 4.0 * o.n() * o.n();
  Residual r;
  r.term(P.scalar);
  r.term(P.scalar_star);
  r.term(c);
  r.diff(P.scalar + P.scalar_star + c);
  return r;
}

}  // namespace

const std::vector<ConditionInfo>& condition_table() { return kTable; }

const ConditionInfo& condition_info(std::string_view id) {
  for (const auto& c : kTable)
    if (c.id == id) return c;
  throw ValidationError("unknown condition id '" + std::string(id) + "'");
}

bool is_condition(std::string_view id) {
  return std::any_of(kTable.begin(), kTable.end(), [id](const ConditionInfo& c) { return c.id == id; });
}

std::vector<std::string> conditions_for_dimension(int m) {
  std::vector<std::string> out;
  for (const auto& c : kTable)
    if (c.only_dimension == 0 || c.only_dimension == m) out.emplace_back(c.id);
  return out;
}

Vec<double> nijenhuis(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y) {
  const auto& G = P.geo;
  const VectorField x = VectorField::constant_field(X);
  const VectorField y = VectorField::constant_field(Y);
  const VectorField px = phi_field(G, x);
  const VectorField py = phi_field(G, y);
  const V a = matvec(G.phi, matvec(G.phi, lie_bracket(x, y)));
  const V b = lie_bracket(px, py);
  const V c = matvec(G.phi, lie_bracket(px, y) + lie_bracket(x, py));
  return a + b - c;
}

Mat<double> h_operator(const PointFrame& P) {
  const auto& G = P.geo;
  return map(lie_derivative_11(xi_field(G), G.phi, G.dphi), [](double v) { return 0.5 * v; });
}

double levi_form(const PointFrame& P, const Vec<double>& X, const Vec<double>& Y) {
  const Ops o{P.geo};
  return -o.deta(o.to_d(X), o.phi(o.to_d(Y)));
}

namespace {

std::vector<V> projector_columns(const PointFrame& P, int sign) {
  const auto& G = P.geo;
  const Ops o{G};
  std::vector<V> cols;
  for (int j = 0; j < G.m; ++j) {
    const V d = o.to_d(o.e(j));
    cols.push_back(0.5 * (d + static_cast<double>(sign) * o.phi(d)));
  }
  return cols;
}

std::vector<V> gram_schmidt(std::vector<V> cols) {
  double biggest = 0.0;
  for (const auto& c : cols) biggest = std::max(biggest, std::sqrt(dot(c, c)));
  std::vector<V> basis;
  if (biggest == 0.0) return basis;
  for (auto c : cols) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) c = c - dot(c, b) * b;
    const double nrm = std::sqrt(dot(c, c));
    if (nrm > 1e-8 * biggest) basis.push_back((1.0 / nrm) * c);
  }
  return basis;
}

}  // namespace

int eigendistribution_rank(const PointFrame& P, int sign) {
  return static_cast<int>(gram_schmidt(projector_columns(P, sign)).size());
}

EigenBases eigendistribution_bases(const PointFrame& P) {
  const int n = (P.dim() - 1) / 2;
  EigenBases b{gram_schmidt(projector_columns(P, +1)), gram_schmidt(projector_columns(P, -1))};
  if (static_cast<int>(b.plus.size()) != n || static_cast<int>(b.minus.size()) != n) {
    throw RankDefect("eigendistribution ranks (" + std::to_string(b.plus.size()) + ", " +
                     std::to_string(b.minus.size()) + "), expected " + std::to_string(n));
  }
  return b;
}

Residual involutivity_residual(const PointFrame& P, int sign) {
  const auto& G = P.geo;
  const Ops o{G};
  const EigenBases b = eigendistribution_bases(P);
  const auto& basis = sign > 0 ? b.plus : b.minus;
  std::vector<VectorField> fields;
  for (const auto& u : basis) fields.push_back(project_to_eigen(G, sign, VectorField::constant_field(u)));
  Residual r;
  for (std::size_t p = 0; p < fields.size(); ++p)
    for (std::size_t q = p + 1; q < fields.size(); ++q) {
      const V br = lie_bracket(fields[p], fields[q]);
      const V d = o.to_d(br);
      const V inside = 0.5 * (d + static_cast<double>(sign) * o.phi(d));
      Residual one;
      one.term(br);
      one.diff(br - inside);
      r.keep_worst(one);
    }
  return r;
}

Residual curvature_identity_k1(const PointFrame& P, const Vec<double>& W, const Vec<double>& X, const Vec<double>& Y) {
  const Ops o{P.geo};
  const V A = matvec(along(P.nabla_h, W), X) - matvec(along(P.nabla_h, X), W);
  const V hw = o.h(W) - W;
  const V hx = o.h(X) - X;
  const V lhs = curvature(P, W, X, o.phi(Y)) - o.phi(curvature(P, W, X, Y));
  const V t1 = o.g(A, Y) * o.xi();
  const V t2 = o.g(hx, Y) * o.phi(hw);
  const V t3 = o.g(hw, Y) * o.phi(hx);
  const V t4 = o.g(o.phi(hw), Y) * hx;
  const V t5 = o.g(o.phi(hx), Y) * hw;
  const V t6 = o.eta(Y) * A;
  Residual r;
  for (const V* t : {&lhs, &t1, &t2, &t3, &t4, &t5, &t6}) r.term(*t);
  r.diff(lhs - (t1 + t2 - t3 - t4 + t5 - t6));
  return r;
}

Residual curvature_identity_k2(const PointFrame& P, const Vec<double>& W, const Vec<double>& X, const Vec<double>& Y) {
  const Ops o{P.geo};
  const V A = matvec(along(P.nabla_h, W), X) - matvec(along(P.nabla_h, X), W);
  const V hw = o.h(W) - W;
  const V hx = o.h(X) - X;
  const double lhs = o.g(curvature(P, W, X, o.phi(Y)), o.xi());
  const double t1 = o.g(A, Y);
  const double t2 = 2.0 * o.eta(Y) * o.g(o.phi(o.h(o.h(W))), X);
  const double t3 = o.eta(X) * o.g(o.phi(hw), Y);
  const double t4 = o.eta(W) * o.g(o.phi(hx), Y);
  Residual r;
  for (double t : {lhs, t1, t2, t3, t4}) r.term(t);
  r.diff(lhs - (t1 - t2 + t3 - t4));
  return r;
}

double h_norm(const PointFrame& P) { return max_abs(P.geo.h); }

Residual residual_suite(const PointContext& ctx, std::string_view id, const Probes& q) {
  const PointFrame& P = ctx.frame;
  const Ops o{P.geo};
  const ConditionInfo& info = condition_info(id);
  if (info.only_dimension != 0 && info.only_dimension != P.dim()) {
    throw WrongDimension("condition " + std::string(id) + " is defined in dimension " +
                         std::to_string(info.only_dimension) + " only");
  }
  const V& X = q.X;
  const V& Y = q.Y;
  if (id == "axioms") return axioms(o, P);
  if (id == "compat") return compat(o);
  if (id == "normal") return normal(o, P, X, Y);
  if (id == "pcm") {
    Residual r;
    r.term(P.geo.fundamental);
    r.term(P.geo.deta_form);
    r.diff(P.geo.fundamental - P.geo.deta_form);
    return r;
  }
  if (id == "apcos") {
    Residual r;
    r.diff(P.geo.deta_form);
    r.diff(P.geo.dphi_form);
    r.term(P.geo.deta);
    r.term(P.geo.dfundamental);
    return r;
  }
  if (id == "s0") return s0(o, X, Y);
  if (id == "s1") return s1(o, X, Y);
  if (id == "involutivity+") return involutivity_residual(P, +1);
  if (id == "involutivity-") return involutivity_residual(P, -1);
  if (id == "news00") return news00(o, X, Y);
  if (id == "news01") return news01(o, X, Y);
  if (id == "thm1") return thm1(o, X, Y);
  if (id == "jw3d" || id == "wzor1" || id == "wzor2") return leaves_form(o, X, Y);
  if (id == "normal-nabla") return normal_nabla(o, X, Y);
  if (id == "wlasn") return wlasn(o, X);
  if (id == "h-props") return h_props(o);
  if (id == "h-rel") return h_rel(o, X);
  if (id == "lemat") return lemat(o, X, Y);
  if (id == "sas") return sas(o, X, Y);
  if (id == "pScons") return pscons(o);
  if (id == "wzorzamk") return wzorzamk(o, X, Y);
  if (id == "contparacr") return contparacr(o, X, Y);
  if (id == "dacko") return dacko(o, X, Y);
  if (id == "paracrcos") return paracrcos(o, X, Y);
  if (id == "k1") return curvature_identity_k1(P, q.W, X, Y);
  if (id == "k2") return curvature_identity_k2(P, q.W, X, Y);
  if (id == "rsasaki") return rsasaki(o, P, X, Y);
  if (id == "ricsasaki") return ricsasaki(o, P);
  if (id == "rr-star") return rr_star(o, P);
  if (id == "conformal-flat") {
    Residual r;
    r.diff(conformal_flatness(ctx.source, P.point));
    return r;
  }
  throw std::logic_error("condition without residual: " + std::string(id));
}

}  // namespace paracr
