#include <doctest.h>

#include <cmath>
#include <random>

#include "paracr/errors.hpp"
#include "paracr/examples/examples.hpp"
#include "paracr/geometry/local_geometry.hpp"
#include "support/generators.hpp"

using namespace paracr;

TEST_CASE("flat example tensors") {
  const auto d = example_flat_3d();
  CHECK(d.chart.dimension() == 3);
  const std::vector<double> x{0.3, -0.2, 0.4};
  const auto f = d.source->evaluate(std::span<const double>(x));
  const double c = std::cosh(0.8), s = std::sinh(0.8);
  // phi(d_x) = cosh 2z d_z, phi(d_y) = sinh 2z d_z, phi(d_z) = cosh 2z d_x - sinh 2z d_y
  CHECK(f.phi(2, 0) == doctest::Approx(c));
  CHECK(f.phi(2, 1) == doctest::Approx(s));
  CHECK(f.phi(0, 2) == doctest::Approx(c));
  CHECK(f.phi(1, 2) == doctest::Approx(-s));
  CHECK(f.xi(0) == doctest::Approx(-s));
  CHECK(f.xi(1) == doctest::Approx(c));
  CHECK(f.eta(0) == doctest::Approx(s));
  CHECK(f.eta(1) == doctest::Approx(c));
  CHECK(f.g(0, 0) == -1.0);
  CHECK(d.expected_classes == std::vector<std::string>{cls::kParacontactMetric, cls::kParaCR});
  CHECK(*d.targets.sectional_curvature == 0.0);
}

TEST_CASE("hyperboloid targets and box") {
  for (int n : {1, 2, 3}) {
    const auto d = example_hyperboloid(n);
    CHECK(d.chart.dimension() == 2 * n + 1);
    CHECK(*d.targets.sectional_curvature == -1.0);
    CHECK(*d.targets.scalar_curvature == -2.0 * n * (2 * n + 1));
    CHECK(*d.targets.star_scalar_curvature == 2.0 * n);
    // every corner of the box is inside the graph patch
    const int m = 2 * n + 1;
    for (int corner = 0; corner < (1 << m); ++corner) {
      std::vector<double> x(m);
      for (int i = 0; i < m; ++i) x[i] = (corner >> i) & 1 ? d.chart.box[i].hi : d.chart.box[i].lo;
      CHECK_NOTHROW(point_frame(*d.source, x));
    }
  }
  CHECK(example_hyperboloid(1).chart.box[0].hi == 0.8);
}

TEST_CASE("f family defaults and errors") {
  const auto d = example_p1();
  CHECK(d.n == 2);
  CHECK(d.parameters.at("f") == "(c + x1^2 + x2^2)/z");
  CHECK(d.chart.box[4].lo == 0.5);
  CHECK(d.chart.box[4].hi == 1.5);
  CHECK_THROWS_AS(example_p1(1), ValidationError);
  CHECK_THROWS_AS(example_p1(2, std::string("q")), expr::UnknownVariable);
  const auto neg = example_p1_x1();
  CHECK(neg.name == "p1-x1");
  CHECK(neg.parameters.at("f") == "x1");
  CHECK(std::find(neg.expected_non_classes.begin(), neg.expected_non_classes.end(), cls::kParaCR) !=
        neg.expected_non_classes.end());
}

TEST_CASE("normality obstruction of the f family is 2 |f_z|") {
  // (N - 2 d eta (x) xi)(e_{n+a}, xi) = 2 f_z e_a, so the normal residual
  // at a point is at least 2 |f_z| |e_a| = 2 |f_z|
  const auto d = example_p1();
  const auto f = expr::parse(d.parameters.at("f"), d.chart.coordinates, {{"c", 1.0}});
  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    const auto x = testing::random_point(d.chart, rng);
    const auto sz = seed<double>(std::span<const double>(x), 4);
    const double fz = f.eval(std::span<const Jet1>(sz)).d;
    CHECK(std::abs(fz) > 0.0);
  }
}

TEST_CASE("cosymplectic family") {
  const auto d = example_cosymplectic();
  CHECK(d.parameters.at("H") == "z*(x1^2 + x2^2)");
  CHECK_THROWS_AS(example_cosymplectic(2, std::string("y1*z")), ValidationError);
  const auto one = example_cosymplectic(1);
  CHECK(one.chart.dimension() == 3);
}

TEST_CASE("presets by name") {
  for (const auto& name : example_names()) {
    const auto d = example_by_name(name);
    CHECK(d.name == name);
    CHECK_NOTHROW(d.chart.validate());
    CHECK(d.source->dimension() == d.chart.dimension());
  }
  PresetParams n2;
  n2.n = 2;
  CHECK(example_by_name("hyperboloid", n2).chart.dimension() == 5);
  CHECK_THROWS_AS(example_by_name("sphere"), ValidationError);
  CHECK_THROWS_AS(example_by_name("flat3d", n2), ValidationError);
}
