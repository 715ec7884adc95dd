#include <doctest.h>

#include <cmath>
#include <vector>

#include "paracr/ad/dual.hpp"
#include "paracr/ad/seed.hpp"

using namespace paracr;

TEST_CASE("sinh(2x) at 0, first order") {
  Jet1 x(0.0, 1.0);
  Jet1 y = sinh(2.0 * x);
  CHECK(y.v == 0.0);
  CHECK(y.d == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("x*x at 3, second order") {
  auto x = seed_nested<2>(std::vector<double>{3.0}, 0);
  Jet2 y = x[0] * x[0];
  CHECK(derivative_coefficient(y, 0) == 9.0);
  CHECK(derivative_coefficient(y, 1) == 6.0);
  CHECK(derivative_coefficient(y, 2) == 2.0);
}

TEST_CASE("cosh(2z) derivative against central difference") {
  const double z = 0.3, h = 1e-5;
  Jet1 y = cosh(2.0 * Jet1(z, 1.0));
  const double fd = (std::cosh(2 * (z + h)) - std::cosh(2 * (z - h))) / (2 * h);
  CHECK(std::abs(y.d - fd) / std::abs(y.d) <= 1e-8);
}

TEST_CASE("seed values and tangents") {
  const std::vector<double> p{1.0, 2.0};
  auto s = seed<double>(std::span<const double>(p), 0);
  CHECK(s[0].v == 1.0);
  CHECK(s[1].v == 2.0);
  CHECK(s[0].d == 1.0);
  CHECK(s[1].d == 0.0);
  CHECK_THROWS_AS(seed<double>(std::span<const double>(p), 2), std::out_of_range);
}

TEST_CASE("nested seeding gives mixed partial of x*y") {
  const std::vector<double> p{2.0, 5.0};
  auto s = seed_nested<2>(std::span<const double>(p), std::vector<int>{0, 1});
  CHECK(mixed_coefficient(s[0] * s[1]) == 1.0);
  CHECK(value_of(s[0] * s[1]) == 10.0);
}

TEST_CASE("third derivative of z^3 at 1") {
  auto s = seed_nested<3>(std::vector<double>{1.0}, 0);
  Jet3 y = ipow(s[0], 3);
  CHECK(derivative_coefficient(y, 3) == 6.0);
  CHECK(derivative_coefficient(y, 2) == 6.0);
  CHECK(derivative_coefficient(y, 1) == 3.0);
}

TEST_CASE("elementary functions match analytic derivatives") {
  const double x0 = 0.7;
  Jet1 x(x0, 1.0);
  CHECK(exp(x).d == doctest::Approx(std::exp(x0)));
  CHECK(log(x).d == doctest::Approx(1.0 / x0));
  CHECK(sqrt(x).d == doctest::Approx(0.5 / std::sqrt(x0)));
  CHECK(tanh(x).d == doctest::Approx(1.0 - std::tanh(x0) * std::tanh(x0)));
  CHECK((1.0 / x).d == doctest::Approx(-1.0 / (x0 * x0)));
  CHECK(ipow(x, -2).d == doctest::Approx(-2.0 / (x0 * x0 * x0)));
  CHECK(ipow(x, 0).v == 1.0);
  CHECK(ipow(x, 0).d == 0.0);
}

TEST_CASE("value slot is bitwise the double computation") {
  for (double x0 : {-1.3, -0.2, 0.4, 1.7}) {
    Jet2 x(Jet1(x0, 1.0), Jet1(1.0, 0.0));
    Jet2 y = sinh(x) * cosh(x) / (2.0 + tanh(x)) - exp(x * x);
    const double d = std::sinh(x0) * std::cosh(x0) / (2.0 + std::tanh(x0)) - std::exp(x0 * x0);
    CHECK(value_of(y) == d);
  }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(log(Jet1(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(sqrt(Jet1(0.0, 1.0)), DomainError);
  CHECK(paracr::sqrt(0.0) == 0.0);
  CHECK_THROWS_AS(Jet1(1.0, 0.0) / Jet1(0.0, 1.0), DomainError);
}
