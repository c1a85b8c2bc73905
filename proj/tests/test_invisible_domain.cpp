#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "adsgeo/invisible_domain.hpp"
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

Vector random_hemisphere(Index n, Rng& rng) {
  Vector x = random_unit(n + 1, rng);
  x(0) = std::abs(x(0));
  return x;
}

oracle::Env oracle_envelope(const AchronalSample& s, const Vector& x) {
  std::vector<Vector> ys;
  std::vector<double> th;
  for (const auto& p : s.points()) {
    ys.push_back(p.y);
    th.push_back(p.theta);
  }
  return oracle::envelope(ys, th, x);
}

}  // namespace

TEST(Envelope, Examples) {
  const AchronalSample eq = equator_sample(2, 32);
  const Vector pole = vec({1, 0, 0});
  Envelope e = envelope(eq, pole);
  EXPECT_NEAR(e.fminus, -pi / 2, 1e-15);
  EXPECT_NEAR(e.fplus, pi / 2, 1e-15);

  const AchronalSample two(2, {{vec({1, 0}), 0.0}, {vec({-1, 0}), 0.0}});
  e = envelope(two, pole);
  EXPECT_NEAR(e.fminus, -pi / 2, 1e-15);
  EXPECT_NEAR(e.fplus, pi / 2, 1e-15);

  const AchronalSample cone = lightcone_graph(2, vec({0.6, 0.8}), 40);
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Envelope c = envelope(cone, random_hemisphere(2, rng));
    EXPECT_NEAR(c.fplus, c.fminus, 1e-12);
  }
  EXPECT_THROW(envelope(eq, vec({1, 0})), GeometryError);
}

TEST(Envelope, MatchesDirectEnumeration) {
  Rng rng(7);
  for (int k = 0; k < 60; ++k) {
    const Index n = 1 + k % 3;
    const AchronalSample s = random_achronal_sample(n, 3 + k % 20, rng);
    for (int j = 0; j < 20; ++j) {
      const Vector x = random_hemisphere(n, rng);
      const Envelope e = envelope(s, x);
      const oracle::Env o = oracle_envelope(s, x);
      EXPECT_NEAR(e.fminus, o.lo, 1e-12);
      EXPECT_NEAR(e.fplus, o.hi, 1e-12);
      EXPECT_LE(e.fminus, e.fplus + 1e-12);
    }
  }
}

TEST(Envelope, WidthBoundedByPiWhenDirectionsSurroundTheSphere) {
  Rng rng(9);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const AchronalSample s = random_achronal_sample(1 + k % 3, 10, rng, 1.0, true);
    for (int j = 0; j < 50; ++j) worst = std::max(worst, envelope(s, random_hemisphere(s.n(), rng)).width());
  }
  EXPECT_LE(worst, pi + 1e-9);
}

TEST(Envelope, WidthCanExceedPiForDirectionsInOneHemisphere) {
  // All sampled directions near y0: far from them both envelopes open up.
  const AchronalSample s(2, {{vec({1, 0}), 0.0}, {vec({std::cos(0.1), std::sin(0.1)}), 0.0}});
  EXPECT_GT(envelope(s, vec({0, -1, 0})).width(), pi + 0.5);
}

TEST(Envelope, TraceOnTheBoundaryReproducesTheGraph) {
  Rng rng(13);
  for (int k = 0; k < 30; ++k) {
    const AchronalSample s = random_achronal_sample(1 + k % 3, 12, rng);
    for (const auto& p : s.points()) {
      const Envelope e = envelope(s, boundary_point(p.y));
      EXPECT_NEAR(e.fminus, p.theta, 1e-12);
      EXPECT_NEAR(e.fplus, p.theta, 1e-12);
    }
  }
}

TEST(Envelope, MonotoneUnderAddingPoints) {
  Rng rng(15);
  for (int k = 0; k < 40; ++k) {
    const AchronalSample big = random_achronal_sample(2, 12, rng);
    std::vector<SamplePoint> pts(big.points().begin(), big.points().end() - 3);
    const AchronalSample small(2, pts);
    for (int j = 0; j < 20; ++j) {
      const Vector x = random_hemisphere(2, rng);
      EXPECT_LE(envelope(big, x).fplus, envelope(small, x).fplus);
      EXPECT_GE(envelope(big, x).fminus, envelope(small, x).fminus);
    }
  }
}

TEST(Membership, Examples) {
  const AchronalSample eq = equator_sample(2, 32);
  const Vector pole = vec({1, 0, 0});
  EXPECT_EQ(contains(eq, {0, 0.0, pole}), Verdict::Inside);
  EXPECT_EQ(contains(eq, {0, pi / 2, pole}), Verdict::Boundary);
  EXPECT_EQ(contains(eq, {0, 2.0, pole}), Verdict::Outside);
  EXPECT_EQ(contains(eq, {1, 0.0, pole}), Verdict::Outside);
  EXPECT_STREQ(to_string(Verdict::Boundary), "boundary");

  EXPECT_TRUE(klein_membership(eq, ray(vec({1, 0, 0, 0}))));
  EXPECT_NEAR(max_klein_product(eq, ray(vec({1, 0, 0, 0}))), -std::sqrt(0.5), 1e-15);
  EXPECT_FALSE(klein_membership(eq, ray(vec({1, 0, 1, 0}))));
  const AchronalSample two(2, {{vec({1, 0}), 0.0}, {vec({-1, 0}), 0.0}});
  EXPECT_FALSE(klein_membership(two, ray(vec({0, 1, 0, 0}))));
  EXPECT_THROW(klein_membership(eq, ray(vec({0, 0, 1, 0}))), GeometryError);
}

TEST(PureLightlike, Examples) {
  const Vector y0 = vec({1, 0});
  EXPECT_TRUE(is_pure_lightlike(lightcone_graph(2, y0, 24)));
  EXPECT_FALSE(is_pure_lightlike(equator_sample(2, 24)));
  const AchronalSample two(2, {{y0, pi / 2}, {Vector(-y0), -pi / 2}});
  EXPECT_TRUE(is_pure_lightlike(two));
  const auto pair = pure_lightlike_pair(two);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first, 0u);
  EXPECT_EQ(pair->second, 1u);
  try {
    klein_membership(two, ray(vec({1, 0, 0, 0})));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PureLightlike);
  }
}

TEST(PureLightlike, AgreesWithEnvelopeCollapse) {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const Index n = 1 + k % 3;
    const AchronalSample cone = lightcone_graph(n, random_unit(n, rng), 20);
    const AchronalSample other = random_achronal_sample(n, 10, rng, 0.95, true);
    const Vector x = random_hemisphere(n, rng);
    EXPECT_EQ(is_pure_lightlike(cone), envelope_collapses(cone, x));
    EXPECT_EQ(is_pure_lightlike(other), envelope_collapses(other, x));
  }
}

TEST(PureLightlike, DomainIsEmptyOnAProbeGrid) {
  const AchronalSample cone = lightcone_graph(2, vec({0, 1}), 30);
  Rng rng(19);
  std::uniform_real_distribution<double> th(-4, 4);
  for (int k = 0; k < 1000; ++k)
    EXPECT_NE(contains(cone, {0, wrap_angle(th(rng)), random_hemisphere(2, rng)}), Verdict::Inside);
}

TEST(Membership, EnvelopeAndKleinTestsAgree) {
  Rng rng(23);
  int compared = 0;
  for (int k = 0; k < 40; ++k) {
    const Index n = 1 + k % 3;
    const AchronalSample s = random_achronal_sample(n, 3 + k % 30, rng);
    for (int j = 0; j < 50; ++j) {
      const AdsPointd p = random_ads_point(n, rng, 20.0);
      const Verdict a = contains(s, lift_probe(s, p));
      const Verdict b = klein_verdict(s, ray(p.coords()));
      if (a == Verdict::Boundary || b == Verdict::Boundary) continue;
      EXPECT_EQ(a, b);
      ++compared;
    }
  }
  EXPECT_GT(compared, 1900);
}

TEST(Membership, LiftLandsInTheWindow) {
  Rng rng(29);
  const AchronalSample s = random_achronal_sample(2, 8, rng);
  for (int k = 0; k < 200; ++k) {
    const AdsPointd p = random_ads_point(2, rng);
    const DomainProbe probe = lift_probe(s, p);
    const double f = envelope(s, probe.disk).fminus;
    EXPECT_GT(probe.total_theta(), f);
    EXPECT_LE(probe.total_theta(), f + 2 * pi + 1e-12);
    EXPECT_NEAR(wrap_angle(probe.total_theta()), ads_to_conformal(p).theta, 1e-12);
  }
}

TEST(Convexity, Examples) {
  const AchronalSample eq = equator_sample(2, 32);
  const AdsPointd a(vec({1, 0, 0, 0}));
  EXPECT_TRUE(convexity_probe(eq, a, a, 10));
  const AdsPointd b(geodesic_point(a, vec({0, 0, 1, 0}), 0.5));
  EXPECT_TRUE(convexity_probe(eq, a, b, 100));
  const AdsPointd outside(vec({0, 1, 0, 0}));
  try {
    convexity_probe(eq, a, outside, 10);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInside);
  }
  // A timelike chord inside the domain.
  const AdsPointd c(geodesic_point(a, vec({0, 1, 0, 0}), 0.3));
  try {
    convexity_probe(eq, a, c, 10);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSpacelikeChord);
  }
}

TEST(Convexity, RandomSpacelikeChords) {
  Rng rng(31);
  int checked = 0;
  for (int k = 0; k < 20000 && checked < 100; ++k) {
    const AchronalSample s = random_achronal_sample(2, 10, rng);
    const AdsPointd a = random_ads_point(2, rng, 1.5), b = random_ads_point(2, rng, 1.5);
    if (!klein_membership(s, ray(a.coords())) || !klein_membership(s, ray(b.coords()))) continue;
    if (!(inner(a.coords(), b.coords()) < -1.0 - 1e-6)) continue;
    EXPECT_TRUE(convexity_probe(s, a, b, 50));
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Probes, EvaluatedInOrder) {
  const AchronalSample eq = equator_sample(2, 16);
  const Vector pole = vec({1, 0, 0});
  const auto res = evaluate_probes(eq, {{0, 0.0, pole}, {0, 3.0, pole}});
  ASSERT_EQ(res.size(), 2u);
  EXPECT_EQ(res[0].verdict, Verdict::Inside);
  EXPECT_EQ(res[1].verdict, Verdict::Outside);
  EXPECT_NEAR(res[1].env.width(), pi, 1e-15);
}
