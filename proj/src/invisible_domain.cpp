#include "adsgeo/invisible_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace adsgeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double hemisphere_distance(const Vector& x, const Vector& y) {
  // d(x, (0, y)) on S^n, in chord form.
  const Index n = y.size();
  const double minus = std::sqrt(x(0) * x(0) + (x.tail(n) - y).squaredNorm());
  const double plus = std::sqrt(x(0) * x(0) + (x.tail(n) + y).squaredNorm());
  return 2.0 * std::atan2(minus, plus);
}

void check_hemisphere(const AchronalSample& lambda, const Vector& x) {
  if (x.size() != lambda.n() + 1) throw GeometryError(ErrorCode::DimensionMismatch, "hemisphere point size");
  if (x(0) < -default_tol()) throw GeometryError(ErrorCode::InvalidInput, "point below the equator");
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Boundary: return "boundary";
    case Verdict::Outside: return "outside";
  }
  return "?";
}

double DomainProbe::total_theta() const { return theta + kTwoPi * static_cast<double>(winding); }

Envelope envelope(const AchronalSample& lambda, const Vector& x) {
  check_hemisphere(lambda, x);
  Envelope e{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& p : lambda.points()) {
    const double d = hemisphere_distance(x, p.y);
    e.fminus = std::max(e.fminus, p.theta - d);
    e.fplus = std::min(e.fplus, p.theta + d);
  }
  return e;
}

double graph_interpolant(const AchronalSample& lambda, const Vector& y) {
  const Envelope e = envelope(lambda, boundary_point(y));
  return 0.5 * (e.fminus + e.fplus);
}

Verdict contains(const AchronalSample& lambda, const DomainProbe& p, double band) {
  const Envelope e = envelope(lambda, p.disk);
  const double t = p.total_theta();
  if (t > e.fminus + band && t < e.fplus - band) return Verdict::Inside;
  if (t >= e.fminus - band && t <= e.fplus + band) return Verdict::Boundary;
  return Verdict::Outside;
}

std::optional<std::pair<std::size_t, std::size_t>> pure_lightlike_pair(const AchronalSample& lambda, double tol) {
  const auto& pts = lambda.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j && pts[i].y.dot(pts[j].y) <= -1.0 + tol &&
          std::abs(pts[i].theta - pts[j].theta - std::numbers::pi) <= tol)
        return std::pair{i, j};
  return std::nullopt;
}

bool is_pure_lightlike(const AchronalSample& lambda, double tol) { return pure_lightlike_pair(lambda, tol).has_value(); }

bool envelope_collapses(const AchronalSample& lambda, const Vector& x, double tol) {
  return envelope(lambda, x).width() <= tol;
}

double max_klein_product(const AchronalSample& lambda, const RayPointd& y) {
  if (y.n() != lambda.n()) throw GeometryError(ErrorCode::DimensionMismatch, "klein point size");
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lambda.size(); ++i) worst = std::max(worst, inner(y.rep(), lambda.null_ray(i).rep()));
  return worst;
}

bool klein_membership(const AchronalSample& lambda, const RayPointd& y, double tol) {
  if (is_pure_lightlike(lambda)) throw GeometryError(ErrorCode::PureLightlike, "the invisible domain is empty");
  if (q_eval(y.rep()) > tol) throw GeometryError(ErrorCode::InvalidInput, "point outside AdS and its boundary");
  return max_klein_product(lambda, y) < -tol;
}

Verdict klein_verdict(const AchronalSample& lambda, const RayPointd& y, double band) {
  if (is_pure_lightlike(lambda)) throw GeometryError(ErrorCode::PureLightlike, "the invisible domain is empty");
  const double s = max_klein_product(lambda, y);
  if (s < -band) return Verdict::Inside;
  if (s <= band) return Verdict::Boundary;
  return Verdict::Outside;
}

DomainProbe lift_probe(const AchronalSample& lambda, const AdsPointd& p) {
  const ConformalAdsPointd c = ads_to_conformal(p);
  const Envelope e = envelope(lambda, c.disk);
  // Smallest total angle c.theta + 2 pi k that exceeds f-.
  const long k = static_cast<long>(std::floor((e.fminus - c.theta) / kTwoPi)) + 1;
  return {k, c.theta, c.disk};
}

bool convexity_probe(const AchronalSample& lambda, const AdsPointd& a, const AdsPointd& b, int samples, double tol) {
  if (samples < 1) throw GeometryError(ErrorCode::InvalidInput, "need at least one sample");
  if (!klein_membership(lambda, ray(a.coords()), tol) || !klein_membership(lambda, ray(b.coords()), tol))
    throw GeometryError(ErrorCode::NotInside, "segment endpoints must lie in the domain");
  const double ab = inner(a.coords(), b.coords());
  if (ab > -1.0 + tol) {
    if ((a.coords() - b.coords()).norm() <= tol) return true;
    throw GeometryError(ErrorCode::NonSpacelikeChord, "<a|b> = " + std::to_string(ab));
  }
  const double length = std::acosh(std::max(1.0, -ab));
  if (length <= tol) return true;
  const Vector v = (b.coords() + ab * a.coords()) / std::sinh(length);
  for (int k = 0; k <= samples; ++k) {
    const double t = length * static_cast<double>(k) / samples;
    const Vector x = geodesic_point(a, v, t, 1e3 * tol);
    if (!klein_membership(lambda, ray(x), tol)) return false;
  }
  return true;
}

std::vector<ProbeResult> evaluate_probes(const AchronalSample& lambda, const std::vector<DomainProbe>& probes,
                                         double band) {
  std::vector<ProbeResult> out;
  out.reserve(probes.size());
  for (const auto& p : probes) out.push_back({p, envelope(lambda, p.disk), contains(lambda, p, band)});
  return out;
}

}  // namespace adsgeo
