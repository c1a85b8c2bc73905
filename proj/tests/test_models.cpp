#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "adsgeo/models.hpp"
#include "adsgeo/sampling.hpp"
#include "oracles.hpp"

using namespace adsgeo;
using std::numbers::pi;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(Conformal, Examples) {
  auto c = ads_to_conformal(AdsPointd(vec({1, 0, 0, 0})));
  EXPECT_EQ(c.theta, 0.0);
  EXPECT_EQ(c.disk, vec({1, 0, 0}));
  c = ads_to_conformal(AdsPointd(vec({0, 1, 0, 0})));
  EXPECT_NEAR(c.theta, pi / 2, 1e-15);
  EXPECT_EQ(c.disk, vec({1, 0, 0}));
  c = ads_to_conformal(AdsPointd(vec({std::sqrt(2.0), 0, 1, 0})));
  EXPECT_EQ(c.theta, 0.0);
  EXPECT_NEAR((c.disk - vec({1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0})).norm(), 0, 1e-15);
  EXPECT_NEAR(c.disk.norm(), 1.0, 1e-15);

  EXPECT_NEAR((conformal_to_ads(ConformalAdsPointd{0, vec({1, 0, 0})}).coords() - vec({1, 0, 0, 0})).norm(), 0, 1e-15);
  EXPECT_NEAR((conformal_to_ads(ConformalAdsPointd{pi / 2, vec({1, 0, 0})}).coords() - vec({0, 1, 0, 0})).norm(), 0,
              1e-15);
  const Vector d = vec({1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0});
  EXPECT_NEAR((conformal_to_ads(ConformalAdsPointd{0, d}).coords() - vec({std::sqrt(2.0), 0, 1, 0})).norm(), 0,
              1e-14);
}

TEST(Conformal, RejectsBoundaryAndMalformedInput) {
  try {
    conformal_to_ads(ConformalAdsPointd{0.3, vec({0, 1, 0})});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundaryInput);
  }
  EXPECT_THROW(conformal_to_ads(ConformalAdsPointd{0.3, vec({0.5, 0.5, 0})}), GeometryError);
  EXPECT_THROW(AdsPointd(vec({1, 0, 1, 0})), GeometryError);
}

TEST(Conformal, RoundTripAgainstHandFormula) {
  Rng rng(21);
  for (int k = 0; k < 2000; ++k) {
    const Index n = 1 + k % 3;
    const AdsPointd p = random_ads_point(n, rng, 50.0);
    const ConformalAdsPointd c = ads_to_conformal(p);
    EXPECT_GT(c.disk(0), 0.0);
    EXPECT_NEAR(c.disk.norm(), 1.0, 1e-14);
    EXPECT_LE((oracle::ads_from_conformal(c.theta, c.disk) - p.coords()).norm(), 1e-12 * p.coords().norm());
    EXPECT_LE((conformal_to_ads(c).coords() - p.coords()).norm(), 1e-9);
  }
}

TEST(Einstein, NullRayExamples) {
  auto e = null_ray_to_einstein(ray(vec({1, 0, 1, 0})));
  EXPECT_EQ(e.theta, 0.0);
  EXPECT_NEAR((e.y - vec({1, 0})).norm(), 0, 1e-15);
  e = null_ray_to_einstein(ray(vec({0, 1, 0, 1})));
  EXPECT_NEAR(e.theta, pi / 2, 1e-15);
  EXPECT_NEAR((e.y - vec({0, 1})).norm(), 0, 1e-15);
  const auto f = null_ray_to_einstein(ray(vec({2, 0, 2, 0})));
  EXPECT_EQ(f.theta, 0.0);
  EXPECT_THROW(null_ray_to_einstein(ray(vec({1, 0, 0, 0}))), GeometryError);
}

TEST(Einstein, ScaleInvariance) {
  Rng rng(4);
  std::uniform_real_distribution<double> unif(-pi, pi), scale(0.01, 100);
  for (int k = 0; k < 500; ++k) {
    const EinPointd e{unif(rng), random_unit(1 + k % 3, rng)};
    const Vector x = einstein_to_null(e);
    const EinPointd a = null_ray_to_einstein(ray(x));
    const EinPointd b = null_ray_to_einstein(ray(Vector(scale(rng) * x)));
    EXPECT_NEAR(std::abs(wrap_angle(a.theta - e.theta)), 0, 1e-14);
    EXPECT_LE((a.y - e.y).norm(), 1e-14);
    EXPECT_LE(std::abs(a.theta - b.theta), 1e-15);
    EXPECT_LE((a.y - b.y).norm(), 1e-15);
  }
}

TEST(Einstein, AntipodeAndDeck) {
  const Vector y0 = vec({0.6, 0.8});
  const EinPointd e{0.0, y0};
  const EinPointd a = antipode(e);
  EXPECT_NEAR(a.theta, pi, 1e-15);
  EXPECT_EQ(a.y, Vector(-y0));
  const EinPointd aa = antipode(a);
  EXPECT_NEAR(std::abs(wrap_angle(aa.theta - e.theta)), 0, 1e-15);
  EXPECT_EQ(aa.y, y0);

  const UniversalPointd u = lift(e);
  const UniversalPointd d2 = deck(u, 2);
  EXPECT_EQ(d2.winding, 2);
  EXPECT_NEAR(d2.total_theta(), 4 * pi, 1e-15);
  EXPECT_GT(deck(u, 1).total_theta(), u.total_theta());
  EXPECT_EQ(d2.project().theta, e.theta);

  const UniversalPointd up = antipode(make_universal(3.0, Vector(y0)));
  EXPECT_NEAR(up.total_theta(), 3.0 + pi, 1e-14);
  EXPECT_EQ(up.winding, 1);
}

TEST(Einstein, WrapAndSplit) {
  EXPECT_EQ(wrap_angle(pi), pi);
  EXPECT_NEAR(wrap_angle(-pi), pi, 1e-15);
  EXPECT_NEAR(wrap_angle(3 * pi / 2), -pi / 2, 1e-15);
  for (double t : {-20.0, -3.5, 0.0, 2.0, 9.42, 100.0}) {
    const auto u = make_universal(t, vec({1.0}));
    EXPECT_NEAR(u.total_theta(), t, 1e-12);
    EXPECT_GT(u.theta, -pi);
    EXPECT_LE(u.theta, pi);
  }
}

TEST(AffineChart, Examples) {
  const AdsPointd base(vec({1, 0, 0, 0}));
  EXPECT_NEAR(affine_chart(base, vec({1, 0, 0, 0})).norm(), 0, 1e-15);
  const Vector c = affine_chart(base, vec({1, 1, 0, 0}));
  EXPECT_NEAR((c - vec({1, 0, 0})).norm(), 0, 1e-15);
  EXPECT_LT(chart_quadric(c), 1.0 + 1e-12);
  const Vector b = affine_chart(base, vec({1, 0, 1, 0}));
  EXPECT_NEAR((b - vec({0, 1, 0})).norm(), 0, 1e-15);
  EXPECT_NEAR(chart_quadric(b), 1.0, 1e-15);
  try {
    affine_chart(base, vec({-1, 0, 0, 0}));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideAffineDomain);
  }
}

TEST(AffineChart, NormalizerMovesBaseToAxis) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const AdsPointd p = random_ads_point(1 + k % 3, rng, 20.0);
    const Vector z = normalizer(p).apply(p.coords());
    EXPECT_NEAR(z(0), 1.0, 1e-10);
    EXPECT_LE(z.tail(z.size() - 1).norm(), 1e-10);
  }
}

TEST(AffineChart, GeodesicsBecomeLines) {
  Rng rng(19);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  for (int k = 0; k < 200; ++k) {
    const Index n = 2 + k % 2;
    const AdsPointd base = random_ads_point(n, rng, 5.0);
    const Vector v = normalize_tangent(base, random_unit(n + 2, rng));
    if (std::abs(q_eval(v)) < 1e-3) continue;
    std::vector<Vector> c;
    for (double t : {unif(rng), unif(rng), unif(rng)}) c.push_back(affine_chart(base, geodesic_point(base, v, t)));
    Matrix m(c[0].size(), 2);
    m.col(0) = c[1] - c[0];
    m.col(1) = c[2] - c[0];
    const auto sv = m.jacobiSvd().singularValues();
    EXPECT_LE(sv(1), 1e-8 * std::max(1.0, sv(0)));
  }
}

TEST(Geodesics, Examples) {
  const AdsPointd x(vec({1, 0, 0, 0}));
  EXPECT_EQ(geodesic_point(x, vec({0, 0, 1, 0}), 0.0), x.coords());
  const Vector p = geodesic_point(x, vec({0, 0, 1, 0}), 1.0);
  EXPECT_NEAR((p - vec({std::cosh(1.0), 0, std::sinh(1.0), 0})).norm(), 0, 1e-15);
  EXPECT_NEAR(q_eval(p), -1.0, 1e-12);
  EXPECT_NEAR((geodesic_point(x, vec({0, 1, 0, 0}), pi / 2) - vec({0, 1, 0, 0})).norm(), 0, 1e-15);
  EXPECT_EQ(geodesic_point(x, vec({0, 1, 1, 0}), 2.0), vec({1, 2, 2, 0}));
  EXPECT_THROW(geodesic_point(x, vec({1, 0, 1, 0}), 1.0), GeometryError);
  EXPECT_THROW(geodesic_point(x, vec({0, 0, 2, 0}), 1.0), GeometryError);
}

TEST(Geodesics, StayOnTheHyperboloid) {
  Rng rng(23);
  std::uniform_real_distribution<double> unif(-10, 10);
  for (int k = 0; k < 500; ++k) {
    const AdsPointd p = random_ads_point(1 + k % 3, rng, 3.0);
    const Vector v = normalize_tangent(p, random_unit(p.n() + 2, rng));
    const double t = unif(rng);
    const Vector x = geodesic_point(p, v, t);
    // Relative residual: entries grow like e^|t| on spacelike geodesics.
    EXPECT_LE(std::abs(q_eval(x) + 1.0), 1e-9 * std::max(1.0, x.squaredNorm()));
  }
}
