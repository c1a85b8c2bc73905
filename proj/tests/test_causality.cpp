#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "adsgeo/causality.hpp"
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

UniversalPointd up(double theta, const Vector& y) { return make_universal(theta, y); }

}  // namespace

TEST(SphericalDistance, Examples) {
  const Vector y = vec({0.6, 0.8});
  EXPECT_EQ(spherical_distance(y, y), 0.0);
  EXPECT_NEAR(spherical_distance(y, Vector(-y)), pi, 1e-15);
  EXPECT_NEAR(spherical_distance(vec({1, 0}), vec({0, 1})), pi / 2, 1e-15);
  // Roundoff slightly outside [-1, 1] is clamped.
  EXPECT_EQ(spherical_distance(vec({1, 0}), vec({1 + 1e-16, 0})), 0.0);
}

TEST(UniversalRelation, Examples) {
  const Vector y0 = vec({1, 0});
  auto r = universal_relation(up(0, y0), up(pi, Vector(-y0)));
  EXPECT_EQ(r.kind, RelationKind::LightlikeRelated);
  r = universal_relation(up(0, y0), up(pi / 2, y0));
  EXPECT_EQ(r.kind, RelationKind::TimelikeRelated);
  EXPECT_EQ(r.order, TimeOrder::FirstPast);
  r = universal_relation(up(pi / 2, y0), up(0, y0));
  EXPECT_EQ(r.order, TimeOrder::FirstFuture);
  const Vector y1 = vec({std::cos(1.0), std::sin(1.0)});
  r = universal_relation(up(0, y0), up(0.5, y1));
  EXPECT_EQ(r.kind, RelationKind::Unrelated);
  EXPECT_EQ(r.order, TimeOrder::NotApplicable);
}

TEST(UniversalRelation, AntipodesAreLightlikeOverOnePeriod) {
  Rng rng(2);
  std::uniform_real_distribution<double> unif(-pi, pi);
  for (int k = 0; k < 200; ++k) {
    const EinPointd e{unif(rng), random_unit(1 + k % 3, rng)};
    const UniversalPointd a = lift(e);
    EXPECT_EQ(universal_relation(a, antipode(a)).kind, RelationKind::LightlikeRelated);
    // One full period later the same point is strictly in the future.
    EXPECT_EQ(universal_relation(a, deck(a, 1)).kind, RelationKind::TimelikeRelated);
  }
}

TEST(KleinRelation, Examples) {
  const RayPointd x = ray(vec({1, 0, 1, 0}));
  EXPECT_EQ(klein_relation(x, ray(vec({1, 0, 0, 0}))).kind, RelationKind::Unrelated);
  EXPECT_EQ(klein_relation(x, ray(vec({0, 1, 0, 0}))).kind, RelationKind::LightlikeRelated);
  EXPECT_EQ(klein_relation(x, ray(vec({3, 0, 3, 0}))).kind, RelationKind::LightlikeRelated);
  EXPECT_THROW(klein_relation(ray(vec({1, 0, 0, 0})), x), GeometryError);
  EXPECT_THROW(klein_relation(x, ray(vec({0, 0, 1, 0}))), GeometryError);
  const AdsPointd base(vec({1, 0, 0, 0}));
  EXPECT_EQ(klein_relation(x, ray(vec({1, 0, 0, 0})), base).kind, RelationKind::Unrelated);
  EXPECT_THROW(klein_relation(x, ray(vec({-1, 0, 0.5, 0})), base), GeometryError);
}

// Pairs in the affine domain {u > 0}: both lifts have theta in (-pi/2, pi/2).
TEST(KleinRelation, AgreesWithConeRelation) {
  Rng rng(31);
  std::uniform_real_distribution<double> unif(-pi / 2, pi / 2), r01(0, 1);
  int compared = 0;
  for (int k = 0; k < 5000; ++k) {
    const Index n = 1 + k % 3;
    const EinPointd ex{unif(rng), random_unit(n, rng)};
    const double ty = unif(rng);
    const double rho = (pi / 2) * r01(rng);
    Vector disk(n + 1);
    disk(0) = std::cos(rho);
    disk.tail(n) = std::sin(rho) * random_unit(n, rng);
    const Vector x = einstein_to_null(ex);
    const Vector y = oracle::ads_from_conformal(ty, disk);
    const double s = inner(ray(x).rep(), ray(y).rep());
    const double gap = std::abs(ty - ex.theta) - spherical_distance(boundary_point(ex.y), disk);
    if (std::abs(s) <= 1e-8 || std::abs(gap) <= 1e-8) continue;
    const CausalRelation kr = klein_relation(ray(x), ray(y));
    const CausalRelation ur = universal_relation(up(ex.theta, boundary_point(ex.y)), up(ty, disk));
    EXPECT_EQ(kr.kind, ur.kind);
    if (ur.kind != RelationKind::Unrelated) {
      EXPECT_EQ(kr.order, ur.order);
    }
    ++compared;
  }
  EXPECT_GT(compared, 4900);
}

TEST(SetClassification, Examples) {
  std::vector<RayPointd> s{ray(vec({1, 0, 1, 0})), ray(vec({1, 0, -1, 0}))};
  auto c = set_causal_class(s);
  EXPECT_EQ(c.value, SetCausalClass::Acausal);
  EXPECT_FALSE(c.witness);

  s = {ray(vec({1, 0, 1, 0})), ray(vec({0, 1, 0, 1}))};
  c = set_causal_class(s);
  EXPECT_EQ(c.value, SetCausalClass::AchronalNotAcausal);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->i, 0u);
  EXPECT_EQ(c.witness->j, 1u);

  s = {ray(vec({1, 0, 1, 0})), ray(vec({-1, 0, 1, 0}))};
  c = set_causal_class(s);
  EXPECT_EQ(c.value, SetCausalClass::NotAchronal);
  ASSERT_TRUE(c.witness);
  EXPECT_GT(c.witness->inner, 0);
}

TEST(SetClassification, InputErrors) {
  std::vector<RayPointd> s{ray(vec({1, 0, 1, 0})), ray(vec({2, 0, 2, 0}))};
  try {
    set_causal_class(s);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateRay);
  }
  s = {ray(vec({1, 0, 1, 0})), ray(vec({1, 0, 0, 0}))};
  try {
    set_causal_class(s);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNull);
  }
}

TEST(SetClassification, WitnessIsSmallestViolatingPair) {
  std::vector<RayPointd> s{ray(vec({1, 0, 1, 0})), ray(vec({1, 0, -1, 0})), ray(vec({-1, 0, 1, 0})),
                           ray(vec({-1, 0, -1, 0}))};
  const auto c = set_causal_class(s);
  ASSERT_EQ(c.value, SetCausalClass::NotAchronal);
  EXPECT_EQ(c.witness->i, 0u);
  EXPECT_EQ(c.witness->j, 2u);
}

TEST(GraphAchronality, Examples) {
  const Vector y0 = vec({1, 0});
  std::vector<SamplePoint> pts;
  for (int k = 0; k < 8; ++k) pts.push_back({vec({std::cos(k * pi / 4), std::sin(k * pi / 4)}), 0.3});
  EXPECT_TRUE(graph_is_achronal(pts).achronal);

  pts = {{y0, 0.0}, {Vector(-y0), 4.0}};
  const auto r = graph_is_achronal(pts);
  EXPECT_FALSE(r.achronal);
  ASSERT_TRUE(r.violation);
  EXPECT_NEAR(r.violation->inner, 4.0 - pi, 1e-15);

  const Vector y1 = vec({std::cos(1.2), std::sin(1.2)});
  pts = {{y0, 0.0}, {y1, spherical_distance(y0, y1)}};
  EXPECT_TRUE(graph_is_achronal(pts).achronal);
}

TEST(GraphAchronality, LipschitzGraphsAreAchronalAsRaySets) {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const Index n = 1 + k % 3;
    const AchronalSample s = random_achronal_sample(n, n == 1 ? 2 : 12, rng, 0.999, true);
    ASSERT_TRUE(s.lipschitz_certified());
    EXPECT_NE(set_causal_class(s.null_rays()).value, SetCausalClass::NotAchronal);
  }
  // Strictly Lipschitz graphs are acausal; exact lightlike pairs are not.
  const AchronalSample cone = lightcone_graph(2, vec({1, 0}), 16);
  EXPECT_EQ(set_causal_class(cone.null_rays()).value, SetCausalClass::AchronalNotAcausal);
}

TEST(AchronalSampleType, Validation) {
  EXPECT_THROW(AchronalSample(2, {{vec({1, 0}), 0.0}}), GeometryError);
  EXPECT_THROW(AchronalSample(2, {{vec({1, 0}), 0.0}, {vec({1, 0, 0}), 0.0}}), GeometryError);
  EXPECT_THROW(AchronalSample(2, {{vec({1, 0}), 0.0}, {vec({2, 0}), 0.0}}), GeometryError);
  EXPECT_THROW(AchronalSample(2, {{vec({1, 0}), 0.0}, {vec({0, 1}), std::nan("")}}), GeometryError);
  const AchronalSample bad(1, {{vec({1}), 0.0}, {vec({-1}), 4.0}});
  EXPECT_FALSE(bad.lipschitz_certified());
  const AchronalSample good(1, {{vec({1}), 0.0}, {vec({-1}), 1.0}});
  EXPECT_TRUE(good.lipschitz_certified());
  EXPECT_NEAR(q_eval(good.null_ray(1).rep()), 0.0, 1e-15);
}
