#pragma once

// Geodesic flow on unit spacelike tangents of AdS_{n+1}, the boundary maps
// l+(x,v) = [x+v] and l-(x,v) = [x-v], and loxodromic spectral data.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "adsgeo/models.hpp"

namespace adsgeo {

/// (x, v) with q(x) = -1, q(v) = 1 and <x|v> = 0.
template <typename Scalar>
class UnitSpacelikeTangent {
 public:
  /// Residuals are measured relative to |x||v| so that far-out points of
  /// the flow validate at the same precision as points near the origin.
  template <typename DX, typename DV>
  UnitSpacelikeTangent(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DV>& v,
                       Scalar tol = Scalar(default_tol()))
      : x_(x), v_(v) {
    check_ambient(x_);
    check_ambient(v_);
    if (x_.size() != v_.size()) throw GeometryError(ErrorCode::DimensionMismatch, "tangent legs differ in size");
    const Scalar scale = std::max(Scalar(1), x_.squaredNorm() + v_.squaredNorm());
    if (!(std::abs(q_eval(x_) + Scalar(1)) <= tol * scale))
      throw GeometryError(ErrorCode::NotOnHyperboloid, "q(x) != -1");
    if (!(std::abs(q_eval(v_) - Scalar(1)) <= tol * scale))
      throw GeometryError(ErrorCode::NotNormalized, "q(v) != 1");
    if (!(std::abs(inner(x_, v_)) <= tol * scale)) throw GeometryError(ErrorCode::NotOrthogonal, "<x|v> != 0");
  }

  const VectorX<Scalar>& x() const { return x_; }
  const VectorX<Scalar>& v() const { return v_; }
  Index n() const { return x_.size() - 2; }

  /// Relative constraint residual max(|q(x)+1|, |q(v)-1|, |<x|v>|) / |x|^2.
  Scalar residual() const {
    const Scalar scale = std::max(Scalar(1), x_.squaredNorm());
    return std::max({std::abs(q_eval(x_) + Scalar(1)), std::abs(q_eval(v_) - Scalar(1)), std::abs(inner(x_, v_))}) /
           scale;
  }

  static UnitSpacelikeTangent unchecked(VectorX<Scalar> x, VectorX<Scalar> v) {
    return UnitSpacelikeTangent(std::move(x), std::move(v), Unchecked{});
  }

 private:
  struct Unchecked {};
  UnitSpacelikeTangent(VectorX<Scalar> x, VectorX<Scalar> v, Unchecked) : x_(std::move(x)), v_(std::move(v)) {}

  VectorX<Scalar> x_;
  VectorX<Scalar> v_;
};

using UnitSpacelikeTangentd = UnitSpacelikeTangent<double>;

/// Time-t geodesic flow, in closed form.
template <typename Scalar>
UnitSpacelikeTangent<Scalar> flow(const UnitSpacelikeTangent<Scalar>& w, Scalar t) {
  const Scalar c = std::cosh(t);
  const Scalar s = std::sinh(t);
  return UnitSpacelikeTangent<Scalar>::unchecked(c * w.x() + s * w.v(), s * w.x() + c * w.v());
}

/// The flip (x, v) -> (x, -v).
template <typename Scalar>
UnitSpacelikeTangent<Scalar> flip(const UnitSpacelikeTangent<Scalar>& w) {
  return UnitSpacelikeTangent<Scalar>::unchecked(w.x(), -w.v());
}

template <typename Scalar>
RayPoint<Scalar> plus_ray(const UnitSpacelikeTangent<Scalar>& w) {
  return ray(VectorX<Scalar>(w.x() + w.v()));
}

template <typename Scalar>
RayPoint<Scalar> minus_ray(const UnitSpacelikeTangent<Scalar>& w) {
  return ray(VectorX<Scalar>(w.x() - w.v()));
}

template <typename Scalar>
struct LimitEndpoints {
  EinPoint<Scalar> plus;
  EinPoint<Scalar> minus;
};

/// Future and past endpoints of the geodesic of w on Ein_n.
template <typename Scalar>
LimitEndpoints<Scalar> limit_endpoints(const UnitSpacelikeTangent<Scalar>& w) {
  const Scalar tol = Scalar(1e3) * Scalar(default_tol());
  return {null_ray_to_einstein(plus_ray(w), tol), null_ray_to_einstein(minus_ray(w), tol)};
}

/// The unit tangent of the spacelike geodesic with the given endpoints. The
/// representatives are scaled to equal Euclidean norm with <p+|p-> = -2 and
/// the base point is their midpoint; any point of the geodesic would do.
template <typename Scalar>
UnitSpacelikeTangent<Scalar> from_endpoints(const RayPoint<Scalar>& plus, const RayPoint<Scalar>& minus,
                                            Scalar tol = Scalar(default_tol())) {
  if (plus.n() != minus.n()) throw GeometryError(ErrorCode::DimensionMismatch, "endpoint sizes differ");
  for (const auto* r : {&plus, &minus})
    if (classify(r->rep(), tol) != CausalType::Lightlike) throw GeometryError(ErrorCode::NotNull, "endpoint not null");
  const Scalar s = inner(plus.rep(), minus.rep());
  if (!(s < -tol)) throw GeometryError(ErrorCode::CausallyRelated, "endpoints are causally related");
  const Scalar c = std::sqrt(Scalar(-2) / s);
  const VectorX<Scalar> p = c * plus.rep();
  const VectorX<Scalar> m = c * minus.rep();
  return UnitSpacelikeTangent<Scalar>::unchecked((p + m) / Scalar(2), (p - m) / Scalar(2));
}

/// Distance between points of a common spacelike totally geodesic slice,
/// arccosh(-<a|b>) evaluated as 2 asinh(sqrt(q(a-b))/2) to keep precision
/// for nearby points.
template <typename DA, typename DB>
typename DA::Scalar hyperbolic_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Scalar q = q_eval(VectorX<Scalar>(a - b));
  return Scalar(2) * std::asinh(std::sqrt(std::max(Scalar(0), q)) / Scalar(2));
}

/// Shift T putting base(flow(w1, t)) and base(flow(w2, t + T)) on a common
/// horosphere about the shared forward endpoint.
template <typename Scalar>
Scalar horospherical_shift(const UnitSpacelikeTangent<Scalar>& w1, const UnitSpacelikeTangent<Scalar>& w2) {
  const VectorX<Scalar> zeta = w1.x() + w1.v();
  return std::log(inner(w2.x(), zeta) / inner(w1.x(), zeta));
}

template <typename Scalar>
struct DecayReport {
  std::vector<Scalar> times;
  std::vector<Scalar> distances;
  Scalar rate;  // least-squares slope of log(distance) against t
  bool passed;  // rate <= -1 + 0.1, or the distances vanish identically
};

/// Distances d_H(base(flow(w1, t)), base(flow(w2, t + T))) on a uniform
/// grid of [0, tmax], with the fitted exponential rate. w1 and w2 must share
/// the forward endpoint.
template <typename Scalar>
DecayReport<Scalar> stable_contraction_check(const UnitSpacelikeTangent<Scalar>& w1,
                                             const UnitSpacelikeTangent<Scalar>& w2, Scalar T, Scalar tmax,
                                             int steps = 80) {
  const Scalar tol = Scalar(1e3) * Scalar(default_tol());
  if (chordal_distance(plus_ray(w1), plus_ray(w2)) > tol)
    throw GeometryError(ErrorCode::DifferentStableLeaf, "forward endpoints differ");
  DecayReport<Scalar> r;
  for (int k = 0; k <= steps; ++k) {
    const Scalar t = tmax * Scalar(k) / Scalar(steps);
    r.times.push_back(t);
    r.distances.push_back(hyperbolic_distance(flow(w1, t).x(), flow(w2, t + T).x()));
  }
  // Distances at roundoff level carry no rate information.
  const Scalar floor = Scalar(1e-10);
  Scalar st = 0, sl = 0, stt = 0, stl = 0;
  int count = 0;
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    if (r.distances[k] <= floor) continue;
    const Scalar l = std::log(r.distances[k]);
    st += r.times[k];
    sl += l;
    stt += r.times[k] * r.times[k];
    stl += r.times[k] * l;
    ++count;
  }
  if (count < 2) {
    r.rate = -std::numeric_limits<Scalar>::infinity();
    r.passed = true;
    return r;
  }
  r.rate = (count * stl - st * sl) / (count * stt - st * st);
  r.passed = r.rate <= Scalar(-0.9);
  return r;
}

/// <a|b> for the form with `time_dims` leading negative coordinates.
template <typename DA, typename DB>
typename DA::Scalar signature_inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, Index time_dims) {
  const Index k = a.size() - time_dims;
  return -a.head(time_dims).dot(b.head(time_dims)) + a.tail(k).dot(b.tail(k));
}

template <typename Scalar>
struct LoxodromicData {
  VectorX<Scalar> attracting;  // unit representative, eigenvalue exp(T)
  VectorX<Scalar> repelling;   // unit representative, eigenvalue exp(-T)
  Scalar translation_length;
};

using LoxodromicDatad = LoxodromicData<double>;

namespace detail {

// Sign convention: <attracting|repelling> < 0, and the axis point
// attracting + repelling lies on the side of `ref` (negative product).
template <typename Scalar>
void orient_loxodromic(LoxodromicData<Scalar>& d, Index time_dims) {
  if (signature_inner(d.attracting, d.repelling, time_dims) > 0) d.repelling = -d.repelling;
  const VectorX<Scalar> axis = d.attracting + d.repelling;
  Scalar s = -axis(0);
  if (time_dims == 2 && std::abs(s) < Scalar(1e-6)) s = -axis(1);
  if (s > 0) {
    d.attracting = -d.attracting;
    d.repelling = -d.repelling;
  }
}

template <typename Scalar>
MatrixX<Scalar> signature_inverse(const MatrixX<Scalar>& m, Index time_dims) {
  VectorX<Scalar> j = VectorX<Scalar>::Ones(m.rows());
  j.head(time_dims).setConstant(Scalar(-1));
  return j.asDiagonal() * m.transpose() * j.asDiagonal();
}

}  // namespace detail

/// Normalized orbit z, Mz, M^2 z, ... of a vector under M.
template <typename Scalar, typename Derived>
std::vector<VectorX<Scalar>> power_iterate(const MatrixX<Scalar>& m, const Eigen::MatrixBase<Derived>& z, int steps) {
  std::vector<VectorX<Scalar>> orbit;
  orbit.reserve(steps + 1);
  VectorX<Scalar> cur = z;
  cur.normalize();
  orbit.push_back(cur);
  for (int k = 0; k < steps; ++k) {
    cur = m * cur;
    cur.normalize();
    orbit.push_back(cur);
  }
  return orbit;
}

template <typename Scalar>
LoxodromicData<Scalar> loxodromic_by_power_iteration(const MatrixX<Scalar>& m, Index time_dims = 2,
                                                     int max_steps = 2000, Scalar tol = Scalar(default_tol()));

/// Fixed rays and translation length of a loxodromic isometry of the form
/// with `time_dims` negative directions (2 for R^{2,n}, 1 for R^{1,n}),
/// from the real Schur based eigen-decomposition. A dominant eigenvalue that
/// is not real and simple is reported as NotLoxodromic.
template <typename Scalar>
LoxodromicData<Scalar> loxodromic_analysis(const MatrixX<Scalar>& m, Index time_dims = 2,
                                           Scalar tol = Scalar(default_tol())) {
  if (m.rows() != m.cols() || m.rows() < time_dims + 1)
    throw GeometryError(ErrorCode::DimensionMismatch, "loxodromic_analysis needs a square matrix");
  Eigen::EigenSolver<MatrixX<Scalar>> es(m);
  if (es.info() != Eigen::Success) return loxodromic_by_power_iteration(m, time_dims, 2000, tol);
  const auto& values = es.eigenvalues();
  std::vector<Index> order(values.size());
  for (Index i = 0; i < values.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return std::abs(values(a)) > std::abs(values(b)); });
  const Index top = order.front();
  const Index bottom = order.back();
  const Scalar rho = std::abs(values(top));
  const Scalar gap_tol = Scalar(1e3) * tol;
  if (!(rho > Scalar(1) + gap_tol)) throw GeometryError(ErrorCode::NotLoxodromic, "spectral radius is 1");
  if (std::abs(values(top).imag()) > gap_tol || std::abs(values(bottom).imag()) > gap_tol)
    throw GeometryError(ErrorCode::NotLoxodromic, "dominant eigenvalue is not real");
  if (rho - std::abs(values(order[1])) <= gap_tol * rho ||
      std::abs(values(order[values.size() - 2])) - std::abs(values(bottom)) <= gap_tol * rho)
    throw GeometryError(ErrorCode::NotLoxodromic, "dominant eigenvalue is not simple");
  LoxodromicData<Scalar> d;
  d.attracting = es.eigenvectors().col(top).real().normalized();
  d.repelling = es.eigenvectors().col(bottom).real().normalized();
  d.translation_length = std::log(rho);
  detail::orient_loxodromic(d, time_dims);
  for (const auto* r : {&d.attracting, &d.repelling})
    if (std::abs(signature_inner(*r, *r, time_dims)) > Scalar(1e3) * tol)
      throw GeometryError(ErrorCode::NotLoxodromic, "fixed ray is not null");
  return d;
}

template <typename Scalar>
LoxodromicData<Scalar> loxodromic_analysis(const Isometry<Scalar>& g, Scalar tol = Scalar(default_tol())) {
  return loxodromic_analysis(g.matrix(), 2, tol);
}

/// Power-iteration route to the same data: iterates M for the attracting
/// ray and its form-inverse for the repelling one.
template <typename Scalar>
LoxodromicData<Scalar> loxodromic_by_power_iteration(const MatrixX<Scalar>& m, Index time_dims, int max_steps,
                                                     Scalar tol) {
  VectorX<Scalar> seed(m.rows());
  for (Index i = 0; i < seed.size(); ++i) seed(i) = Scalar(1) + Scalar(0.1) * Scalar(i);
  auto dominant = [&](const MatrixX<Scalar>& a, Scalar& growth) {
    VectorX<Scalar> cur = seed.normalized();
    for (int k = 0; k < max_steps; ++k) {
      VectorX<Scalar> next = a * cur;
      growth = next.norm();
      next /= growth;
      if (next.dot(cur) < 0) next = -next;
      const Scalar change = (next - cur).norm();
      cur = next;
      if (change <= tol * Scalar(1e-2)) break;
    }
    return cur;
  };
  Scalar grow_plus = 0, grow_minus = 0;
  LoxodromicData<Scalar> d;
  d.attracting = dominant(m, grow_plus);
  d.repelling = dominant(detail::signature_inverse(m, time_dims), grow_minus);
  if (!(grow_plus > Scalar(1) + Scalar(1e3) * tol)) throw GeometryError(ErrorCode::NotLoxodromic, "no growth");
  d.translation_length = std::log(grow_plus);
  detail::orient_loxodromic(d, time_dims);
  return d;
}

}  // namespace adsgeo
