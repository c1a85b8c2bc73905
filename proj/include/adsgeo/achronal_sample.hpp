#pragma once

#include <vector>

#include "adsgeo/models.hpp"

namespace adsgeo {

struct SamplePoint {
  Vector y;      // unit vector of R^n
  double theta;  // lifted time coordinate
};

/// A finite closed achronal subset of the boundary of the universal cover,
/// given as a graph {(y_i, theta_i)} over a finite subset of S^{n-1}. The
/// finite set is the limit set itself, not a discretization of one.
class AchronalSample {
 public:
  /// Validates shapes (n >= 1, at least two points, unit directions) and
  /// runs the Lipschitz check, recording the outcome in lipschitz_certified().
  AchronalSample(Index n, std::vector<SamplePoint> points, double tol = default_tol());

  Index n() const { return n_; }
  const std::vector<SamplePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const SamplePoint& operator[](std::size_t i) const { return points_[i]; }
  bool lipschitz_certified() const { return lipschitz_certified_; }

  /// Unit representative of the null ray of point i.
  RayPointd null_ray(std::size_t i) const;
  std::vector<RayPointd> null_rays() const;

 private:
  Index n_;
  std::vector<SamplePoint> points_;
  bool lipschitz_certified_ = false;
};

}  // namespace adsgeo
