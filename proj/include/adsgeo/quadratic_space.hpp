#pragma once

// The ambient space R^{2,n} with coordinates (u, v, x_1, ..., x_n) and the
// quadratic form q(u, v, x) = -u^2 - v^2 + |x|^2.

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

#include "adsgeo/config.hpp"
#include "adsgeo/errors.hpp"

namespace adsgeo {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;
using Eigen::Index;

/// Dimension parameter n of an ambient vector of length n + 2.
template <typename Derived>
Index dimension_of(const Eigen::MatrixBase<Derived>& x) {
  return x.size() - 2;
}

/// Throws unless x has length n + 2 with n >= 1 and finite entries.
template <typename Derived>
void check_ambient(const Eigen::MatrixBase<Derived>& x) {
  if (x.cols() != 1 || x.size() < 3)
    throw GeometryError(ErrorCode::DimensionMismatch,
                        "ambient vectors need length n+2 with n >= 1, got " + std::to_string(x.size()));
  if (!x.allFinite()) throw GeometryError(ErrorCode::InvalidInput, "non-finite coordinate");
}

/// Polarized form <a|b> = -a_u b_u - a_v b_v + sum a_i b_i.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size())
    throw GeometryError(ErrorCode::DimensionMismatch,
                        "inner: sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  const Index k = a.size() - 2;
  return -a(0) * b(0) - a(1) * b(1) + a.tail(k).dot(b.tail(k));
}

template <typename Derived>
typename Derived::Scalar q_eval(const Eigen::MatrixBase<Derived>& x) {
  const Index k = x.size() - 2;
  return -x(0) * x(0) - x(1) * x(1) + x.tail(k).squaredNorm();
}

/// J = diag(-1, -1, 1, ..., 1) of size n + 2.
template <typename Scalar = double>
MatrixX<Scalar> form_matrix(Index n) {
  VectorX<Scalar> d = VectorX<Scalar>::Ones(n + 2);
  d(0) = d(1) = Scalar(-1);
  return d.asDiagonal();
}

enum class CausalType { Timelike, Spacelike, Lightlike, Zero };

inline const char* to_string(CausalType c) {
  switch (c) {
    case CausalType::Timelike: return "Timelike";
    case CausalType::Spacelike: return "Spacelike";
    case CausalType::Lightlike: return "Lightlike";
    case CausalType::Zero: return "Zero";
  }
  return "?";
}

// Zero is decided by the Euclidean norm, not by q.
template <typename Derived>
CausalType classify(const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar tol = default_tol()) {
  const auto q = q_eval(x);
  if (q < -tol) return CausalType::Timelike;
  if (q > tol) return CausalType::Spacelike;
  return x.norm() > tol ? CausalType::Lightlike : CausalType::Zero;
}

/// A point of S(R^{2,n}): a nonzero vector up to positive scaling, stored
/// through its representative of unit Euclidean norm.
template <typename Scalar>
class RayPoint {
 public:
  template <typename Derived>
  explicit RayPoint(const Eigen::MatrixBase<Derived>& x) : rep_(x) {
    check_ambient(rep_);
    const Scalar norm = rep_.norm();
    if (!(norm > Scalar(0))) throw GeometryError(ErrorCode::ZeroVector, "ray of the zero vector");
    // Vectors already unit up to a few ulps are kept bit-for-bit, which
    // makes normalization idempotent.
    if (std::abs(norm - Scalar(1)) > Scalar(4) * std::numeric_limits<Scalar>::epsilon()) rep_ /= norm;
  }

  const VectorX<Scalar>& rep() const { return rep_; }
  Index n() const { return rep_.size() - 2; }

  friend bool operator==(const RayPoint& a, const RayPoint& b) {
    return a.rep_.size() == b.rep_.size() && a.rep_ == b.rep_;
  }

 private:
  VectorX<Scalar> rep_;
};

using RayPointd = RayPoint<double>;

template <typename Derived>
RayPoint<typename Derived::Scalar> ray(const Eigen::MatrixBase<Derived>& x) {
  return RayPoint<typename Derived::Scalar>(x);
}

/// Euclidean distance between unit representatives.
template <typename Scalar>
Scalar chordal_distance(const RayPoint<Scalar>& a, const RayPoint<Scalar>& b) {
  return (a.rep() - b.rep()).norm();
}

template <typename Scalar>
class Isometry;

template <typename Derived>
Isometry<typename Derived::Scalar> certify_isometry(const Eigen::MatrixBase<Derived>& m,
                                                    typename Derived::Scalar tol = default_tol());

/// An element of SO_0(2,n). Instances only come out of certify_isometry or
/// from operations that preserve the group (products, inverses).
template <typename Scalar>
class Isometry {
 public:
  static Isometry identity(Index n) { return Isometry(MatrixX<Scalar>::Identity(n + 2, n + 2)); }

  const MatrixX<Scalar>& matrix() const { return m_; }
  Index n() const { return m_.rows() - 2; }
  bool certified() const { return true; }

  template <typename Derived>
  VectorX<Scalar> apply(const Eigen::MatrixBase<Derived>& x) const {
    if (x.size() != m_.cols()) throw GeometryError(ErrorCode::DimensionMismatch, "isometry/vector sizes differ");
    return m_ * x;
  }

  RayPoint<Scalar> apply(const RayPoint<Scalar>& r) const { return RayPoint<Scalar>(VectorX<Scalar>(m_ * r.rep())); }

  /// J M^T J, exact for elements of O(2,n).
  Isometry inverse() const {
    const MatrixX<Scalar> j = form_matrix<Scalar>(n());
    return Isometry(j * m_.transpose() * j);
  }

  /// Product without re-certification; see compose() for the checked form.
  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    if (a.m_.rows() != b.m_.rows()) throw GeometryError(ErrorCode::DimensionMismatch, "isometry sizes differ");
    return Isometry(a.m_ * b.m_);
  }

 private:
  explicit Isometry(MatrixX<Scalar> m) : m_(std::move(m)) {}
  MatrixX<Scalar> m_;

  template <typename Derived>
  friend Isometry<typename Derived::Scalar> certify_isometry(const Eigen::MatrixBase<Derived>&,
                                                              typename Derived::Scalar);
};

using Isometryd = Isometry<double>;

/// Residual max|M^T J M - J|.
template <typename Derived>
typename Derived::Scalar isometry_residual(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const MatrixX<Scalar> j = form_matrix<Scalar>(m.rows() - 2);
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

/// Accepts M iff it preserves q within tol, has determinant 1 and a
/// positive (u,v) block determinant; the last two signs pick out the
/// identity component of O(2,n).
template <typename Derived>
Isometry<typename Derived::Scalar> certify_isometry(const Eigen::MatrixBase<Derived>& m,
                                                    typename Derived::Scalar tol) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols() || m.rows() < 3)
    throw GeometryError(ErrorCode::DimensionMismatch, "isometry must be square of size n+2 >= 3");
  if (!m.allFinite()) throw GeometryError(ErrorCode::InvalidInput, "non-finite matrix entry");
  const Scalar residual = isometry_residual(m);
  if (!(residual <= tol))
    throw GeometryError(ErrorCode::NotAnIsometry, "max|M^T J M - J| = " + std::to_string(double(residual)));
  const MatrixX<Scalar> mm = m;
  const Scalar det = mm.determinant();
  if (!(std::abs(det - Scalar(1)) <= tol))
    throw GeometryError(ErrorCode::NotIdentityComponent, "det = " + std::to_string(double(det)));
  if (!(mm.template topLeftCorner<2, 2>().determinant() > Scalar(0)))
    throw GeometryError(ErrorCode::NotIdentityComponent, "time block reverses orientation");
  return Isometry<Scalar>(mm);
}

/// Product with re-certification.
template <typename Scalar>
Isometry<Scalar> compose(const Isometry<Scalar>& a, const Isometry<Scalar>& b, Scalar tol = default_tol()) {
  return certify_isometry(MatrixX<Scalar>(a.matrix() * b.matrix()), tol);
}

}  // namespace adsgeo
