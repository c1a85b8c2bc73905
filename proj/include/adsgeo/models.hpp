#pragma once

// Coordinate models of AdS_{n+1} and its boundary Ein_n.
//
//   hyperboloid  q(x) = -1 in R^{2,n}
//   conformal    (theta, disk) with disk a unit vector of R^{n+1}, disk[0] > 0
//   Einstein     (theta, y) with y in S^{n-1}, i.e. the null ray of (cos, sin, y)
//   universal    conformal or Einstein data plus an integer winding

#include <cmath>
#include <numbers>

#include "adsgeo/quadratic_space.hpp"

namespace adsgeo {

/// Reduces an angle to (-pi, pi].
template <typename Scalar>
Scalar wrap_angle(Scalar theta) {
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  Scalar r = std::remainder(theta, two_pi);
  if (r <= -std::numbers::pi_v<Scalar>) r += two_pi;
  return r;
}

/// A point of the hyperboloid q = -1.
template <typename Scalar>
class AdsPoint {
 public:
  template <typename Derived>
  explicit AdsPoint(const Eigen::MatrixBase<Derived>& x, Scalar tol = Scalar(default_tol())) : x_(x) {
    check_ambient(x_);
    const Scalar q = q_eval(x_);
    if (!(std::abs(q + Scalar(1)) <= tol * std::max(Scalar(1), x_.squaredNorm())))
      throw GeometryError(ErrorCode::NotOnHyperboloid, "q(x) = " + std::to_string(double(q)));
  }

  const VectorX<Scalar>& coords() const { return x_; }
  Index n() const { return x_.size() - 2; }

 private:
  VectorX<Scalar> x_;
};

template <typename Scalar>
struct ConformalAdsPoint {
  Scalar theta;
  VectorX<Scalar> disk;  // unit vector of R^{n+1}, disk[0] > 0 in the interior
};

template <typename Scalar>
struct EinPoint {
  Scalar theta;
  VectorX<Scalar> y;  // unit vector of R^n
};

/// A point of a universal cover: wrapped angle plus winding, so deck
/// transformations act by exact integer shifts.
template <typename Scalar>
struct UniversalPoint {
  long winding = 0;
  Scalar theta = 0;      // in (-pi, pi]
  VectorX<Scalar> y;     // unit spatial vector

  Scalar total_theta() const { return theta + Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(winding); }
  EinPoint<Scalar> project() const { return {theta, y}; }
};

using AdsPointd = AdsPoint<double>;
using ConformalAdsPointd = ConformalAdsPoint<double>;
using EinPointd = EinPoint<double>;
using UniversalPointd = UniversalPoint<double>;

/// Splits an unbounded angle into wrapped angle and winding.
template <typename Scalar>
UniversalPoint<Scalar> make_universal(Scalar total_theta, VectorX<Scalar> y) {
  const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  const Scalar wrapped = wrap_angle(total_theta);
  const long winding = std::lround((total_theta - wrapped) / two_pi);
  return {winding, wrapped, std::move(y)};
}

template <typename Scalar>
ConformalAdsPoint<Scalar> ads_to_conformal(const AdsPoint<Scalar>& p) {
  const auto& x = p.coords();
  const Scalar r = std::hypot(x(0), x(1));
  ConformalAdsPoint<Scalar> c;
  c.theta = std::atan2(x(1), x(0));
  c.disk.resize(x.size() - 1);
  c.disk(0) = Scalar(1) / r;
  c.disk.tail(x.size() - 2) = x.tail(x.size() - 2) / r;
  return c;
}

template <typename Scalar>
AdsPoint<Scalar> conformal_to_ads(const ConformalAdsPoint<Scalar>& c, Scalar tol = Scalar(default_tol())) {
  if (c.disk.size() < 2) throw GeometryError(ErrorCode::DimensionMismatch, "disk point needs n+1 >= 2 entries");
  if (!(std::abs(c.disk.norm() - Scalar(1)) <= tol))
    throw GeometryError(ErrorCode::InvalidInput, "disk point is not a unit vector");
  if (!(c.disk(0) > tol)) throw GeometryError(ErrorCode::BoundaryInput, "disk point on or below the equator");
  const Scalar r = Scalar(1) / c.disk(0);
  VectorX<Scalar> x(c.disk.size() + 1);
  x(0) = r * std::cos(c.theta);
  x(1) = r * std::sin(c.theta);
  x.tail(c.disk.size() - 1) = r * c.disk.tail(c.disk.size() - 1);
  return AdsPoint<Scalar>(x, Scalar(100) * tol);
}

/// The representative (cos theta, sin theta, y) of a boundary point.
template <typename Scalar>
VectorX<Scalar> einstein_to_null(const EinPoint<Scalar>& e) {
  VectorX<Scalar> x(e.y.size() + 2);
  x(0) = std::cos(e.theta);
  x(1) = std::sin(e.theta);
  x.tail(e.y.size()) = e.y;
  return x;
}

template <typename Scalar>
EinPoint<Scalar> null_ray_to_einstein(const RayPoint<Scalar>& r, Scalar tol = Scalar(default_tol())) {
  const auto& x = r.rep();
  if (classify(x, tol) != CausalType::Lightlike) throw GeometryError(ErrorCode::NotNull, "ray is not null");
  const Scalar s = std::hypot(x(0), x(1));
  const Index n = x.size() - 2;
  EinPoint<Scalar> e;
  e.theta = std::atan2(x(1), x(0));
  e.y = x.tail(n) / s;
  e.y /= e.y.norm();
  return e;
}

/// (theta + pi, -y).
template <typename Scalar>
EinPoint<Scalar> antipode(const EinPoint<Scalar>& e) {
  return {wrap_angle(e.theta + std::numbers::pi_v<Scalar>), -e.y};
}

template <typename Scalar>
UniversalPoint<Scalar> antipode(const UniversalPoint<Scalar>& p) {
  return make_universal(p.total_theta() + std::numbers::pi_v<Scalar>, VectorX<Scalar>(-p.y));
}

/// k-th power of the future-directed generator of the deck group.
template <typename Scalar>
UniversalPoint<Scalar> deck(UniversalPoint<Scalar> p, long k) {
  p.winding += k;
  return p;
}

/// Lift of a boundary point with the given winding.
template <typename Scalar>
UniversalPoint<Scalar> lift(const EinPoint<Scalar>& e, long winding = 0) {
  return {winding, wrap_angle(e.theta), e.y};
}

/// Boundary direction y seen as the point (0, y) of the closed hemisphere.
template <typename Derived>
VectorX<typename Derived::Scalar> boundary_point(const Eigen::MatrixBase<Derived>& y) {
  VectorX<typename Derived::Scalar> h(y.size() + 1);
  h(0) = 0;
  h.tail(y.size()) = y;
  return h;
}

/// Rotation by phi in the (u,v)-plane.
template <typename Scalar>
Isometry<Scalar> time_rotation(Index n, Scalar phi) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Identity(n + 2, n + 2);
  m(0, 0) = std::cos(phi);
  m(0, 1) = -std::sin(phi);
  m(1, 0) = std::sin(phi);
  m(1, 1) = std::cos(phi);
  return certify_isometry(m);
}

/// Boost of rapidity s mixing the time axis `time_index` (0 or 1) with the
/// spatial unit direction `dir` (length n).
template <typename Scalar, typename Derived>
MatrixX<Scalar> boost_matrix(Index n, Index time_index, const Eigen::MatrixBase<Derived>& dir, Scalar s) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Identity(n + 2, n + 2);
  VectorX<Scalar> e = VectorX<Scalar>::Zero(n + 2);
  e.tail(n) = dir;
  VectorX<Scalar> t = VectorX<Scalar>::Zero(n + 2);
  t(time_index) = 1;
  m += (std::cosh(s) - Scalar(1)) * (t * t.transpose() + e * e.transpose());
  m += std::sinh(s) * (t * e.transpose() + e * t.transpose());
  return m;
}

/// A certified isometry mapping p to (1, 0, ..., 0).
template <typename Scalar>
Isometry<Scalar> normalizer(const AdsPoint<Scalar>& p) {
  const auto& x = p.coords();
  const Index n = x.size() - 2;
  const Isometry<Scalar> rot = time_rotation(n, -std::atan2(x(1), x(0)));
  const VectorX<Scalar> spatial = x.tail(n);
  const Scalar sn = spatial.norm();
  if (sn == Scalar(0)) return rot;
  const Scalar s = std::asinh(sn);
  const MatrixX<Scalar> b = boost_matrix<Scalar>(n, 0, VectorX<Scalar>(spatial / sn), -s);
  return certify_isometry(MatrixX<Scalar>(b * rot.matrix()), Scalar(1e3) * Scalar(default_tol()));
}

/// Affine chart of the affine domain of `base`: after moving base to the
/// u-axis, y maps to (v/u, x_1/u, ..., x_n/u). The domain lands in
/// {-t^2 + |x|^2 < 1}, its affine boundary on {-t^2 + |x|^2 = 1}.
template <typename Scalar, typename Derived>
VectorX<Scalar> affine_chart(const AdsPoint<Scalar>& base, const Eigen::MatrixBase<Derived>& y) {
  const VectorX<Scalar> z = normalizer(base).apply(y);
  if (!(z(0) > Scalar(0))) throw GeometryError(ErrorCode::OutsideAffineDomain, "u <= 0 after normalization");
  VectorX<Scalar> c(z.size() - 1);
  c(0) = z(1) / z(0);
  c.tail(z.size() - 2) = z.tail(z.size() - 2) / z(0);
  return c;
}

/// -t^2 + |x|^2 of a chart image; < 1 inside, = 1 on the affine boundary.
template <typename Derived>
typename Derived::Scalar chart_quadric(const Eigen::MatrixBase<Derived>& c) {
  return -c(0) * c(0) + c.tail(c.size() - 1).squaredNorm();
}

/// Point at parameter t on the geodesic through x with unit (or null)
/// tangent v orthogonal to x.
template <typename Scalar, typename DerivedV>
VectorX<Scalar> geodesic_point(const AdsPoint<Scalar>& p, const Eigen::MatrixBase<DerivedV>& v, Scalar t,
                               Scalar tol = Scalar(default_tol())) {
  const auto& x = p.coords();
  const Scalar scale = std::max(Scalar(1), x.norm() * v.norm());
  if (!(std::abs(inner(x, v)) <= tol * scale))
    throw GeometryError(ErrorCode::NotOrthogonal, "<x|v> = " + std::to_string(double(inner(x, v))));
  const Scalar qv = q_eval(v);
  const Scalar vtol = tol * std::max(Scalar(1), v.squaredNorm());
  if (std::abs(qv - Scalar(1)) <= vtol) return std::cosh(t) * x + std::sinh(t) * v;
  if (std::abs(qv + Scalar(1)) <= vtol) return std::cos(t) * x + std::sin(t) * v;
  if (std::abs(qv) <= vtol) return x + t * v;
  throw GeometryError(ErrorCode::NotNormalized, "q(v) = " + std::to_string(double(qv)));
}

/// Projects v onto the tangent space at x and rescales it to |q| = 1
/// (null tangents are returned as projected).
template <typename Scalar, typename DerivedV>
VectorX<Scalar> normalize_tangent(const AdsPoint<Scalar>& p, const Eigen::MatrixBase<DerivedV>& v,
                                  Scalar tol = Scalar(default_tol())) {
  const auto& x = p.coords();
  VectorX<Scalar> w = v + inner(x, v) * x;
  const Scalar q = q_eval(w);
  if (std::abs(q) <= tol * std::max(Scalar(1), w.squaredNorm())) {
    if (!(w.norm() > tol)) throw GeometryError(ErrorCode::ZeroVector, "tangent projects to zero");
    return w;
  }
  return w / std::sqrt(std::abs(q));
}

}  // namespace adsgeo
