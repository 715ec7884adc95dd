#include <doctest.h>

#include <cmath>
#include <random>

#include "paracr/errors.hpp"
#include "paracr/examples/examples.hpp"
#include "paracr/geometry/calculus.hpp"
#include "paracr/paracontact/classify.hpp"
#include "paracr/paracontact/conditions.hpp"
#include "support/generators.hpp"

using namespace paracr;
using testing::basis_vector;
using testing::random_point;
using testing::random_vector;

namespace {

struct Sampled {
  std::vector<std::vector<double>> points;
  std::vector<PointFrame> frames;
};

Sampled sample(const ExampleDescriptor& d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Sampled s;
  while (static_cast<int>(s.frames.size()) < count) {
    auto x = random_point(d.chart, rng);
    s.frames.push_back(point_frame(*d.source, x));
    s.points.push_back(std::move(x));
  }
  return s;
}

/// Max scaled residual of `id` over sampled points and random probes.
double worst(const ExampleDescriptor& d, const std::string& id, int count = 20, std::uint64_t seed = 1) {
  const auto s = sample(d, count, seed);
  std::mt19937_64 rng(seed + 100);
  const int m = d.chart.dimension();
  double w = 0.0;
  for (const auto& P : s.frames) {
    for (int k = 0; k < 3; ++k) {
      Probes q{random_vector(m, rng), random_vector(m, rng), random_vector(m, rng)};
      w = std::max(w, residual_suite(PointContext{*d.source, P}, id, q).scaled());
    }
  }
  return w;
}

/// Distance of v from the span of a coordinate-orthonormal family.
double off_span(const Vec<double>& v, const std::vector<Vec<double>>& basis) {
  Vec<double> r = v;
  for (const auto& u : basis) {
    const double c = dot(v, u);
    for (int i = 0; i < v.dim(); ++i) r(i) -= c * u(i);
  }
  return max_abs(r);
}

template <class F>
const F& frame_of(const ExampleDescriptor& d) {
  return dynamic_cast<const SourceModel<FrameSource<F>>&>(*d.source).impl().frame();
}

Vec<double> frame_vector(const Mat<double>& e, int a) {
  Vec<double> v(e.dim());
  for (int i = 0; i < e.dim(); ++i) v(i) = e(i, a);
  return v;
}

const std::vector<std::string> kParaCrIds{"s0", "s1", "involutivity+", "involutivity-", "news00", "news01", "thm1"};

}  // namespace

TEST_CASE("condition table") {
  CHECK(is_condition("s0"));
  CHECK_FALSE(is_condition("bogus"));
  CHECK(condition_info("jw3d").only_dimension == 3);
  const auto ids5 = conditions_for_dimension(5);
  CHECK(std::find(ids5.begin(), ids5.end(), "jw3d") == ids5.end());
  const auto d = example_p1();
  const auto P = point_frame(*d.source, std::vector<double>{0.1, 0.2, 0.3, 0.4, 1.0});
  Probes q{Vec<double>(5), Vec<double>(5), Vec<double>(5)};
  CHECK_THROWS_AS(residual_suite(PointContext{*d.source, P}, "jw3d", q), WrongDimension);
  for (const auto& c : condition_table()) CHECK_FALSE(c.statement.empty());
}

TEST_CASE("axioms and compatibility hold on every example") {
  for (const auto& d : {example_flat_3d(), example_hyperboloid(1), example_hyperboloid(2), example_p1(), example_p1_x1(),
                        example_cosymplectic()}) {
    CAPTURE(d.name);
    CHECK(worst(d, "axioms") <= 1e-9);
    CHECK(worst(d, "compat") <= 1e-9);
  }
}

TEST_CASE("eigendistributions") {
  SUBCASE("f family: D- = span e_a, D+ = span e_{n+a}") {
    const auto d = example_p1();
    const auto& frame = frame_of<ExprFrame>(d);
    const auto s = sample(d, 10, 2);
    double w = 0.0;
    for (std::size_t k = 0; k < s.frames.size(); ++k) {
      const auto B = eigendistribution_bases(s.frames[k]);
      REQUIRE(B.plus.size() == 2);
      REQUIRE(B.minus.size() == 2);
      const auto e = frame.matrix<double>(std::span<const double>(s.points[k]));
      std::vector<Vec<double>> em, ep;
      for (int a = 0; a < d.n; ++a) {
        em.push_back(frame_vector(e, a));
        ep.push_back(frame_vector(e, d.n + a));
        w = std::max({w, off_span(em.back(), B.minus), off_span(ep.back(), B.plus)});
      }
      // the other direction: recovered vectors lie in the frame spans
      for (const auto& u : B.minus) {
        Vec<double> r = u;
        // e_a = d/dx^a, so the span is the x-coordinate block
        for (int a = 0; a < d.n; ++a) r(a) = 0.0;
        w = std::max(w, max_abs(r));
      }
    }
    CHECK(w <= 1e-9);
  }
  SUBCASE("cosymplectic family: D+ = span e_{n+a}") {
    const auto d = example_cosymplectic();
    const auto s = sample(d, 10, 3);
    double w = 0.0;
    for (const auto& P : s.frames) {
      const auto B = eigendistribution_bases(P);
      for (int a = 0; a < d.n; ++a) w = std::max(w, off_span(basis_vector(5, d.n + a), B.plus));
    }
    CHECK(w <= 1e-9);
  }
  SUBCASE("ranks are (n, n)") {
    for (const auto& d : {example_flat_3d(), example_hyperboloid(2), example_cosymplectic()}) {
      const auto s = sample(d, 5, 4);
      for (const auto& P : s.frames) {
        CHECK(eigendistribution_rank(P, +1) == d.n);
        CHECK(eigendistribution_rank(P, -1) == d.n);
      }
    }
  }
}

TEST_CASE("involutivity") {
  CHECK(worst(example_p1(), "involutivity+") <= 1e-7);
  CHECK(worst(example_p1(), "involutivity-") <= 1e-7);
  CHECK(worst(example_cosymplectic(), "involutivity+") <= 1e-7);
  CHECK(worst(example_cosymplectic(), "involutivity-") <= 1e-7);
  // f = x1: f f_x - f_y + 2x f_z = x1 on the box
  const auto d = example_p1_x1();
  const auto s = sample(d, 20, 5);
  int generic = 0;
  for (const auto& P : s.frames) {
    if (std::abs(P.point[0]) > 0.2) {
      ++generic;
      CHECK(involutivity_residual(P, +1).scaled() >= 0.1);
    }
  }
  CHECK(generic > 5);
}

TEST_CASE("Nijenhuis tensor") {
  SUBCASE("constant structure on a flat chart") {
    const std::vector<std::string> c{"x", "y", "z"};
    ExprFrame::ExprMatrix e(3, std::vector<expr::Expr>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) e[i][j] = expr::Expr::constant(i == j ? 1.0 : 0.0);
    const auto src = make_source(FrameSource<ExprFrame>(ExprFrame(e), FrameConstants::canonical(1)));
    const auto P = point_frame(*src, std::vector<double>{0.1, 0.2, 0.3});
    std::mt19937_64 rng(6);
    for (int k = 0; k < 5; ++k) CHECK(max_abs(nijenhuis(P, random_vector(3, rng), random_vector(3, rng))) == 0.0);
  }
  SUBCASE("f family: N(e_{n+a}, xi) - 2 d eta(e_{n+a}, xi) xi = 2 f_z e_a") {
    const auto d = example_p1();
    const auto& frame = frame_of<ExprFrame>(d);
    const auto f = expr::parse(d.parameters.at("f"), d.chart.coordinates, {{"c", 1.0}});
    const auto s = sample(d, 20, 7);
    double w = 0.0, anti = 0.0;
    for (std::size_t k = 0; k < s.frames.size(); ++k) {
      const auto& P = s.frames[k];
      const auto e = frame.matrix<double>(std::span<const double>(s.points[k]));
      const auto sz = seed<double>(std::span<const double>(s.points[k]), 4);
      const double fz = f.eval(std::span<const Jet1>(sz)).d;
      for (int a = 0; a < d.n; ++a) {
        const auto X = frame_vector(e, d.n + a), xi = P.geo.xi;
        const auto N = nijenhuis(P, X, xi);
        const double de = inner(P.geo.deta_form, X, xi);
        for (int i = 0; i < 5; ++i) w = std::max(w, std::abs(N(i) - 2 * de * xi(i) - 2 * fz * e(i, a)));
        const auto Nr = nijenhuis(P, xi, X);
        for (int i = 0; i < 5; ++i) anti = std::max(anti, std::abs(N(i) + Nr(i)));
      }
    }
    CHECK(w <= 1e-7);
    CHECK(anti <= 1e-12);
  }
  SUBCASE("cosymplectic family: N(e_a, xi) - 2 d eta(e_a, xi) xi = 2 sum_w H_{w a z} e_{n+w}") {
    const auto d = example_cosymplectic();
    const auto& frame = frame_of<HessianFrame>(d);
    const auto s = sample(d, 20, 8);
    double w = 0.0;
    for (std::size_t k = 0; k < s.frames.size(); ++k) {
      const auto& P = s.frames[k];
      const auto e = frame.matrix<double>(std::span<const double>(s.points[k]));
      for (int a = 0; a < d.n; ++a) {
        const auto X = frame_vector(e, a), xi = P.geo.xi;
        const auto N = nijenhuis(P, X, xi);
        const double de = inner(P.geo.deta_form, X, xi);
        // z * sum x^2: the third derivative d_w d_a d_z H is 2 delta_wa
        for (int i = 0; i < 5; ++i) {
          const double want = i == d.n + a ? 4.0 : 0.0;
          w = std::max(w, std::abs(N(i) - 2 * de * xi(i) - want));
        }
      }
    }
    CHECK(w <= 1e-7);
  }
}

TEST_CASE("h operator") {
  SUBCASE("flat example: h(d/dz) = -d/dz, and the bracket form agrees") {
    const auto d = example_flat_3d();
    for (const auto& P : sample(d, 10, 9).frames) {
      const auto h = h_operator(P);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(h(i, 2) - (i == 2 ? -1.0 : 0.0)) <= 1e-12);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(h(i, j) - P.geo.h(i, j)) <= 1e-12);
    }
  }
  SUBCASE("f family: h e_a = 0, h e_{n+a} = -f_z e_a, h^2 = 0") {
    const auto d = example_p1();
    const auto& frame = frame_of<ExprFrame>(d);
    const auto f = expr::parse(d.parameters.at("f"), d.chart.coordinates, {{"c", 1.0}});
    const auto s = sample(d, 20, 10);
    double w = 0.0;
    for (std::size_t k = 0; k < s.frames.size(); ++k) {
      const auto& P = s.frames[k];
      const auto e = frame.matrix<double>(std::span<const double>(s.points[k]));
      const auto sz = seed<double>(std::span<const double>(s.points[k]), 4);
      const double fz = f.eval(std::span<const Jet1>(sz)).d;
      for (int a = 0; a < d.n; ++a) {
        const auto ha = matvec(P.geo.h, frame_vector(e, a));
        const auto hb = matvec(P.geo.h, frame_vector(e, d.n + a));
        for (int i = 0; i < 5; ++i) w = std::max({w, std::abs(ha(i)), std::abs(hb(i) + fz * e(i, a))});
      }
      w = std::max(w, max_abs(matmul(P.geo.h, P.geo.h)));
    }
    CHECK(w <= 1e-7);
  }
  SUBCASE("hyperboloid: h = 0") {
    for (const auto& P : sample(example_hyperboloid(2), 10, 11).frames) CHECK(h_norm(P) <= 1e-7);
  }
}

TEST_CASE("Levi form") {
  SUBCASE("symmetric on para-CR examples") {
    for (const auto& d : {example_flat_3d(), example_hyperboloid(1), example_p1(), example_cosymplectic()}) {
      CAPTURE(d.name);
      CHECK(worst(d, "news00") <= 1e-8);
    }
  }
  SUBCASE("hyperboloid: L(X, X) = -g(X, X) for X in D+") {
    const auto d = example_hyperboloid(1);
    for (const auto& P : sample(d, 10, 12).frames) {
      const auto B = eigendistribution_bases(P);
      for (const auto& X : B.plus) CHECK(std::abs(levi_form(P, X, X) + inner(P.geo.g, X, X)) <= 1e-9);
    }
  }
  SUBCASE("f = x1 is still paracontact metric, so L stays symmetric there") {
    CHECK(worst(example_p1_x1(), "news00") <= 1e-8);
  }
}

TEST_CASE("residual suite on the examples") {
  CHECK(worst(example_hyperboloid(1), "sas") <= 1e-6);
  CHECK(worst(example_hyperboloid(2), "sas") <= 1e-6);
  CHECK(worst(example_flat_3d(), "sas") >= 0.1);
  for (const char* id : {"pcm", "s0", "s1", "thm1"}) CHECK(worst(example_flat_3d(), id) <= 1e-7);
  for (const char* id : {"apcos", "wzor2", "paracrcos"}) CHECK(worst(example_cosymplectic(), id) <= 1e-7);
  // a normal structure has the normal-structure relations and is para-CR
  for (const char* id : {"normal", "normal-nabla", "wlasn", "thm1", "pScons", "rsasaki", "ricsasaki", "rr-star"}) {
    CAPTURE(id);
    CHECK(worst(example_hyperboloid(2), id) <= 1e-6);
  }
  // paracontact metric relations
  for (const auto& d : {example_flat_3d(), example_hyperboloid(1), example_p1(), example_p1_x1()}) {
    for (const char* id : {"h-props", "h-rel", "lemat"}) {
      CAPTURE(d.name);
      CAPTURE(id);
      CHECK(worst(d, id) <= 1e-6);
    }
  }
  // on paracontact metric structures wzor1 and wzorzamk follow para-CR
  CHECK(worst(example_p1(), "wzor1") <= 1e-6);
  CHECK(worst(example_p1(), "wzorzamk") <= 1e-6);
  CHECK(worst(example_p1_x1(), "wzor1") >= 1e-2);
  CHECK(worst(example_p1_x1(), "wzorzamk") >= 1e-2);
  CHECK(worst(example_flat_3d(), "jw3d") <= 1e-6);
}

TEST_CASE("curvature identities k1, k2") {
  for (const auto& d : {example_hyperboloid(1), example_hyperboloid(2), example_flat_3d(), example_p1()}) {
    CAPTURE(d.name);
    const auto s = sample(d, 20, 13);
    std::mt19937_64 rng(14);
    const int m = d.chart.dimension();
    double k1 = 0.0, k2 = 0.0, anti = 0.0, xi_slot = 0.0;
    for (const auto& P : s.frames) {
      const auto W = random_vector(m, rng), X = random_vector(m, rng), Y = random_vector(m, rng);
      const auto r = curvature_identity_k1(P, W, X, Y);
      k1 = std::max(k1, r.scaled());
      k2 = std::max(k2, curvature_identity_k2(P, W, X, Y).scaled());
      anti = std::max(anti, std::abs(r.raw - curvature_identity_k1(P, X, W, Y).raw));
      xi_slot = std::max(xi_slot, curvature_identity_k2(P, W, X, P.geo.xi).scaled());
    }
    CHECK(k1 <= 1e-6);
    CHECK(k2 <= 1e-6);
    CHECK(anti <= 1e-9);
    CHECK(xi_slot <= 1e-9);
  }
}

TEST_CASE("random three-dimensional frames are para-CR") {
  std::mt19937_64 rng(2718);
  const Chart chart{{"x", "y", "z"}, {{-0.5, 0.5}, {-0.5, 0.5}, {-0.5, 0.5}}};
  for (int t = 0; t < 5; ++t) {
    const auto rf = testing::random_frame(rng);
    ExampleDescriptor d;
    d.name = "random";
    d.chart = chart;
    d.source = testing::frame_source(rf.entries);
    for (const auto& id : kParaCrIds) {
      CAPTURE(id);
      CHECK(worst(d, id, 10, 15 + t) <= 1e-6);
    }
    CHECK(worst(d, "jw3d", 10, 15 + t) <= 1e-6);
  }
}

TEST_CASE("classification from residuals") {
  auto result = [](const std::string& id, double scaled) {
    CheckResult r;
    r.id = id;
    r.max_scaled = scaled;
    r.pass = scaled <= 1e-6;
    return r;
  };
  std::map<std::string, CheckResult> rs;
  for (const auto& id : kParaCrIds) rs[id] = result(id, 1e-12);
  rs["pcm"] = result("pcm", 1e-3);
  rs["apcos"] = result("apcos", 0.5);
  const auto c = classify(rs, 1e-6, 1e-2);
  auto status = [&c](const std::string& name) {
    for (const auto& v : c.classes)
      if (v.name == name) return v.status;
    FAIL("missing class " << name);
    return Membership::Indeterminate;
  };
  CHECK(status(cls::kParaCR) == Membership::Member);
  CHECK(status(cls::kParacontactMetric) == Membership::Indeterminate);
  CHECK(status(cls::kAlmostParaCosymplectic) == Membership::NonMember);
  CHECK(c.fingerprint == std::vector<std::string>{cls::kParaCR});

  rs["involutivity+"] = result("involutivity+", 0.3);
  CHECK_NOTHROW(classify(rs, 1e-6, 1e-2));  // no evidence the structure is almost paracontact metric
  rs["axioms"] = result("axioms", 1e-14);
  rs["compat"] = result("compat", 1e-14);
  CHECK_THROWS_AS(classify(rs, 1e-6, 1e-2), InconsistentVerdict);
}
