#include "adsgeo/causality.hpp"

#include <algorithm>
#include <cmath>

namespace adsgeo {

AchronalSample::AchronalSample(Index n, std::vector<SamplePoint> points, double tol)
    : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw GeometryError(ErrorCode::InvalidInput, "n must be >= 1");
  if (points_.size() < 2) throw GeometryError(ErrorCode::EmptySample, "a limit set needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.y.size() != n_)
      throw GeometryError(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has wrong dimension");
    if (!p.y.allFinite() || !std::isfinite(p.theta))
      throw GeometryError(ErrorCode::InvalidInput, "point " + std::to_string(i) + " is not finite");
    if (std::abs(p.y.norm() - 1.0) > tol)
      throw GeometryError(ErrorCode::InvalidInput, "point " + std::to_string(i) + " direction is not unit");
  }
  lipschitz_certified_ = graph_is_achronal(std::span<const SamplePoint>(points_), tol).achronal;
}

RayPointd AchronalSample::null_ray(std::size_t i) const {
  return ray(einstein_to_null(EinPointd{points_[i].theta, points_[i].y}));
}

std::vector<RayPointd> AchronalSample::null_rays() const {
  std::vector<RayPointd> rays;
  rays.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) rays.push_back(null_ray(i));
  return rays;
}

double spherical_distance(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw GeometryError(ErrorCode::DimensionMismatch, "spherical_distance");
  // Chord form: accurate near 0 and pi, where acos of the dot product loses
  // half the digits.
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::TimelikeRelated: return "TimelikeRelated";
    case RelationKind::LightlikeRelated: return "LightlikeRelated";
    case RelationKind::Unrelated: return "Unrelated";
  }
  return "?";
}

const char* to_string(TimeOrder o) {
  switch (o) {
    case TimeOrder::FirstPast: return "FirstPast";
    case TimeOrder::FirstFuture: return "FirstFuture";
    case TimeOrder::NotApplicable: return "NotApplicable";
  }
  return "?";
}

const char* to_string(SetCausalClass c) {
  switch (c) {
    case SetCausalClass::Acausal: return "Acausal";
    case SetCausalClass::AchronalNotAcausal: return "AchronalNotAcausal";
    case SetCausalClass::NotAchronal: return "NotAchronal";
  }
  return "?";
}

CausalRelation universal_relation(const UniversalPointd& p, const UniversalPointd& q, double tol) {
  if (p.y.size() != q.y.size()) throw GeometryError(ErrorCode::DimensionMismatch, "universal_relation");
  const double dtheta = q.total_theta() - p.total_theta();
  const double gap = std::abs(dtheta);
  const double d = spherical_distance(p.y, q.y);
  const TimeOrder order = dtheta > 0 ? TimeOrder::FirstPast : TimeOrder::FirstFuture;
  if (std::abs(gap - d) <= tol) {
    // Coincident points are lightlike-related to themselves; order is moot.
    return {RelationKind::LightlikeRelated, gap == 0.0 ? TimeOrder::FirstPast : order};
  }
  if (gap > d) return {RelationKind::TimelikeRelated, order};
  return {RelationKind::Unrelated, TimeOrder::NotApplicable};
}

namespace {

CausalRelation relation_from_sign(const RayPointd& x, const RayPointd& y, double tol) {
  if (x.n() != y.n()) throw GeometryError(ErrorCode::DimensionMismatch, "klein_relation");
  if (classify(x.rep(), tol) != CausalType::Lightlike)
    throw GeometryError(ErrorCode::NotNull, "first argument must lie on the boundary");
  if (q_eval(y.rep()) > tol)
    throw GeometryError(ErrorCode::InvalidInput, "second argument must lie in AdS or on its boundary");
  const double s = inner(x.rep(), y.rep());
  // Time order in the affine domain: y is in the future of x when its
  // representative has v-component rotated forward from x.
  const double cross = x.rep()(0) * y.rep()(1) - x.rep()(1) * y.rep()(0);
  const TimeOrder order = cross >= 0 ? TimeOrder::FirstPast : TimeOrder::FirstFuture;
  if (s > tol) return {RelationKind::TimelikeRelated, order};
  if (s >= -tol) return {RelationKind::LightlikeRelated, order};
  return {RelationKind::Unrelated, TimeOrder::NotApplicable};
}

}  // namespace

CausalRelation klein_relation(const RayPointd& x, const RayPointd& y, double tol) {
  return relation_from_sign(x, y, tol);
}

CausalRelation klein_relation(const RayPointd& x, const RayPointd& y, const AdsPointd& base, double tol) {
  const Vector cx = affine_chart(base, x.rep());
  const Vector cy = affine_chart(base, y.rep());
  if (std::abs(chart_quadric(cx) - 1.0) > 1e3 * tol)
    throw GeometryError(ErrorCode::OutsideAffineDomain, "first argument is not on the affine boundary");
  if (chart_quadric(cy) > 1.0 + 1e3 * tol)
    throw GeometryError(ErrorCode::OutsideAffineDomain, "second argument is outside the affine domain");
  return relation_from_sign(x, y, tol);
}

SetClassification set_causal_class(std::span<const RayPointd> rays, double tol) {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (classify(rays[i].rep(), tol) != CausalType::Lightlike)
      throw GeometryError(ErrorCode::NotNull, "member " + std::to_string(i) + " is not null");
  std::optional<PairWitness> lightlike;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (chordal_distance(rays[i], rays[j]) <= tol)
        throw GeometryError(ErrorCode::DuplicateRay,
                            "members " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      const double s = inner(rays[i].rep(), rays[j].rep());
      if (s > tol) return {SetCausalClass::NotAchronal, PairWitness{i, j, s}};
      if (s >= -tol && !lightlike) lightlike = PairWitness{i, j, s};
    }
  }
  if (lightlike) return {SetCausalClass::AchronalNotAcausal, lightlike};
  return {SetCausalClass::Acausal, std::nullopt};
}

AchronalityReport graph_is_achronal(std::span<const SamplePoint> points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double excess =
          std::abs(points[i].theta - points[j].theta) - spherical_distance(points[i].y, points[j].y);
      if (excess > tol) return {false, PairWitness{i, j, excess}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace adsgeo
