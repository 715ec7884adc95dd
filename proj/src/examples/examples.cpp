#include "paracr/examples/examples.hpp"

#include <cmath>
#include <sstream>

#include "paracr/geometry/coordinate_source.hpp"
#include "paracr/geometry/hypersurface.hpp"

namespace paracr {

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::vector<Interval> cube(int m, double lo, double hi) { return std::vector<Interval>(m, Interval{lo, hi}); }

}  // namespace

ExampleDescriptor example_flat_3d() {
  const std::vector<std::string> c{"x", "y", "z"};
  auto e = [&c](const char* s) { return expr::parse(s, c); };
  CoordinateSource::ExprMatrix g{{e("-1"), e("0"), e("0")}, {e("0"), e("1"), e("0")}, {e("0"), e("0"), e("1")}};
  // column j is phi(d/dx^j)
  CoordinateSource::ExprMatrix phi{{e("0"), e("0"), e("cosh(2*z)")},
                                   {e("0"), e("0"), e("-sinh(2*z)")},
                                   {e("cosh(2*z)"), e("sinh(2*z)"), e("0")}};
  std::vector<expr::Expr> xi{e("-sinh(2*z)"), e("cosh(2*z)"), e("0")};
  std::vector<expr::Expr> eta{e("sinh(2*z)"), e("cosh(2*z)"), e("0")};

  ExampleDescriptor d;
  d.name = "flat3d";
  d.n = 1;
  d.chart = Chart{c, cube(3, -1.0, 1.0)};
  d.source = make_source(CoordinateSource(std::move(g), std::move(phi), std::move(xi), std::move(eta)));
  d.expected_classes = {cls::kParacontactMetric, cls::kParaCR};
  d.expected_non_classes = {cls::kNormal, cls::kParaSasakian};
  d.targets = {0.0, 0.0, 0.0};
  return d;
}

ExampleDescriptor example_hyperboloid(int n) {
  auto h = EmbeddedHypersurface::hyperboloid(n);
  ExampleDescriptor d;
  d.name = "hyperboloid";
  d.n = n;
  // Keeps 1 + sum u_+^2 - sum u_-^2 >= 1 - 0.64 on the whole box.
  const double b = 0.8 / std::sqrt(static_cast<double>(n));
  d.chart = Chart{h.coordinates(), cube(2 * n + 1, -b, b)};
  d.source = make_source(std::move(h));
  d.expected_classes = {cls::kParacontactMetric, cls::kNormal, cls::kParaSasakian, cls::kParaCR};
  d.expected_non_classes = {cls::kAlmostParaCosymplectic};
  d.targets = {-1.0, -2.0 * n * (2.0 * n + 1.0), 2.0 * n};
  return d;
}

ExprFrame p1_frame(int n, const expr::Expr& f) {
  const int m = 2 * n + 1;
  const auto coords = xyz_coordinates(n);
  const expr::Expr zero = expr::Expr::constant(0.0);
  const expr::Expr one = expr::Expr::constant(1.0);
  ExprFrame::ExprMatrix E(m, std::vector<expr::Expr>(m, zero));
  for (int a = 0; a < n; ++a) {
    E[a][a] = one;
    E[a][n + a] = -f;
    E[n + a][n + a] = one;
    E[2 * n][n + a] = expr::Expr::constant(-2.0) * expr::Expr::variable(a, coords[a]);
  }
  E[2 * n][2 * n] = one;
  return ExprFrame(std::move(E));
}

ExampleDescriptor example_p1(int n, const std::optional<std::string>& f, double c) {
  if (n < 2) throw ValidationError("p1: n must be >= 2");
  const auto coords = xyz_coordinates(n);
  std::string text;
  if (f) {
    text = *f;
  } else {
    text = "(c";
    for (int a = 1; a <= n; ++a) text += " + x" + std::to_string(a) + "^2";
    text += ")/z";
  }
  const expr::Expr fe = expr::parse(text, coords, {{"c", c}});

  ExampleDescriptor d;
  d.name = "p1";
  d.n = n;
  d.parameters = {{"f", text}, {"c", format_number(c)}};
  std::vector<Interval> box = cube(2 * n + 1, -1.0, 1.0);
  box[2 * n] = Interval{0.5, 1.5};
  d.chart = Chart{coords, box};
  d.source = make_source(FrameSource<ExprFrame>(p1_frame(n, fe), FrameConstants::canonical(n)));
  d.expected_classes = {cls::kParacontactMetric, cls::kParaCR};
  d.expected_non_classes = {cls::kNormal, cls::kParaSasakian};
  return d;
}

ExampleDescriptor example_p1_x1(int n) {
  ExampleDescriptor d = example_p1(n, std::string("x1"));
  d.name = "p1-x1";
  d.parameters.erase("c");
  d.expected_classes = {cls::kParacontactMetric};
  d.expected_non_classes = {cls::kParaCR, cls::kParaSasakian};
  return d;
}

ExampleDescriptor example_cosymplectic(int n, const std::optional<std::string>& H) {
  if (n < 1) throw ValidationError("cosymplectic: n must be >= 1");
  const auto coords = xyz_coordinates(n);
  std::string text;
  if (H) {
    text = *H;
  } else {
    text = "z*(";
    for (int a = 1; a <= n; ++a) text += (a > 1 ? " + x" : "x") + std::to_string(a) + "^2";
    text += ")";
  }
  ExampleDescriptor d;
  d.name = "cosymplectic";
  d.n = n;
  d.parameters = {{"H", text}};
  d.chart = Chart{coords, cube(2 * n + 1, -1.0, 1.0)};
  d.source = make_source(FrameSource<HessianFrame>(HessianFrame(n, expr::parse(text, coords)), FrameConstants::canonical(n)));
  d.expected_classes = {cls::kAlmostParaCosymplectic, cls::kParaCR, cls::kParaKaehlerLeaves};
  d.expected_non_classes = {cls::kNormal, cls::kParacontactMetric};
  return d;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"flat3d", "hyperboloid", "p1", "p1-x1", "cosymplectic"};
  return names;
}

ExampleDescriptor example_by_name(const std::string& name, const PresetParams& p) {
  if (name == "flat3d") {
    if (p.n > 0 && p.n != 1) throw ValidationError("flat3d is three-dimensional (n = 1)");
    return example_flat_3d();
  }
  if (name == "hyperboloid") return example_hyperboloid(p.n > 0 ? p.n : 1);
  if (name == "p1") return example_p1(p.n > 0 ? p.n : 2, p.f, p.c.value_or(1.0));
  if (name == "p1-x1") return example_p1_x1(p.n > 0 ? p.n : 2);
  if (name == "cosymplectic") return example_cosymplectic(p.n > 0 ? p.n : 2, p.H);
  throw ValidationError("unknown example '" + name + "' (flat3d, hyperboloid, p1, p1-x1, cosymplectic)");
}

}  // namespace paracr
