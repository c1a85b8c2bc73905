#pragma once

// Lower-bound estimates of the cosmological time of invisible domains from
// past timelike geodesic probes.

#include <cstdint>
#include <vector>

#include "adsgeo/invisible_domain.hpp"

namespace adsgeo {

/// Proper time along the past timelike geodesic cos(s) p - sin(s) u before
/// it leaves E(lambda), located by bisection on the Klein predicate.
/// Requires <p|u> = 0, q(u) = -1 and p inside; throws NotInside otherwise.
double timelike_exit_length(const AchronalSample& lambda, const AdsPointd& p, const Vector& u,
                            double bisection_tol = 1e-9);

/// The future unit timelike vector (-p_v, p_u, 0, ..., 0)/r at p.
Vector rest_frame_direction(const AdsPointd& p);

/// m future unit timelike tangents at p: the rest frame direction first,
/// then low-discrepancy velocities in the ball of rapidity <= max_rapidity,
/// shifted by a seeded random offset.
std::vector<Vector> timelike_direction_grid(const AdsPointd& p, std::size_t m, std::uint64_t seed,
                                            double max_rapidity = 3.0);

struct CtEstimate {
  double value = 0;
  std::size_t directions_used = 0;
  double bisection_tol = 1e-9;
  std::size_t argmax = 0;
  Vector argmax_dir;
  bool boundary = false;  // p within the band of the domain boundary
  std::vector<double> lengths;  // per direction, in grid order
};

/// Maximum of timelike_exit_length over the given future directions. A
/// point within `band` of the boundary gives value 0 and boundary = true.
CtEstimate cosmological_time_estimate(const AdsPointd& p, const AchronalSample& lambda,
                                      const std::vector<Vector>& directions, double bisection_tol = 1e-9,
                                      double band = tolerances().band);

CtEstimate cosmological_time_estimate(const AdsPointd& p, const AchronalSample& lambda, std::size_t m = 256,
                                      std::uint64_t seed = 0, double bisection_tol = 1e-9);

struct DecayTrace {
  double exit_length = 0;
  std::vector<double> params;     // sigma along the geodesic
  std::vector<double> estimates;  // estimate at each sampled point
};

/// Estimates along cos(s) p - sin(s) u for s from 0 up to delta short of
/// the exit, each grid augmented with the geodesic's own tangent.
DecayTrace past_decay_trace(const AchronalSample& lambda, const AdsPointd& p, const Vector& u, double delta,
                            int steps = 16, std::size_t m = 64, std::uint64_t seed = 0);

}  // namespace adsgeo
