#pragma once

// Invisible domains E(L) of finite achronal limit sets, through the
// Lipschitz envelopes f-(x) = max_i {theta_i - d(x, y_i)} and
// f+(x) = min_i {theta_i + d(x, y_i)} on the closed hemisphere, and through
// the Klein criterion <y|x_i> < 0.

#include <optional>
#include <utility>
#include <vector>

#include "adsgeo/causality.hpp"

namespace adsgeo {

struct Envelope {
  double fminus;
  double fplus;
  double width() const { return fplus - fminus; }
};

/// Exact envelopes of a finite sample at a point x of the closed upper
/// hemisphere of S^n (a unit vector of R^{n+1} with x[0] >= 0).
///
/// The width is at most pi whenever the sampled directions do not all lie in
/// one open hemisphere of S^{n-1} (some y_i is then within pi/2 of x).
Envelope envelope(const AchronalSample& lambda, const Vector& x);

/// Midpoint (f- + f+)/2 at a boundary direction y. Agrees with theta_i at
/// sampled directions and reproduces constant graphs exactly.
double graph_interpolant(const AchronalSample& lambda, const Vector& y);

enum class Verdict { Inside, Boundary, Outside };
const char* to_string(Verdict v);

/// A conformal point of the universal cover: (winding, theta) and a point of
/// the closed hemisphere.
struct DomainProbe {
  long winding = 0;
  double theta = 0;
  Vector disk;
  double total_theta() const;
};

/// Three-valued test of f-(x) < theta < f+(x); probes within `band` of
/// either envelope are Boundary.
Verdict contains(const AchronalSample& lambda, const DomainProbe& p, double band = tolerances().band);

/// True iff some antipodal pair of sampled directions realizes the maximal
/// gap theta_i - theta_j = pi.
bool is_pure_lightlike(const AchronalSample& lambda, double tol = default_tol());

/// The pair (i, j) with theta_i - theta_j = pi on antipodal directions, if any.
std::optional<std::pair<std::size_t, std::size_t>> pure_lightlike_pair(const AchronalSample& lambda,
                                                                       double tol = default_tol());

/// Cross-check of is_pure_lightlike: the envelopes collapse at x.
bool envelope_collapses(const AchronalSample& lambda, const Vector& x, double tol = default_tol());

/// Largest <y|x_i> over the sample, with unit Euclidean representatives on
/// both sides.
double max_klein_product(const AchronalSample& lambda, const RayPointd& y);

/// <y|x_i> < -tol for every sample ray x_i. Requires lambda not pure
/// lightlike and q(y) <= 0.
bool klein_membership(const AchronalSample& lambda, const RayPointd& y, double tol = default_tol());

/// Three-valued Klein verdict with the same band convention as contains().
Verdict klein_verdict(const AchronalSample& lambda, const RayPointd& y, double band = tolerances().band);

/// Lift of an AdS point to the universal cover with total theta in
/// (f-, f- + 2 pi], the window in which the two membership tests agree.
DomainProbe lift_probe(const AchronalSample& lambda, const AdsPointd& p);

/// Samples the geodesic segment [a, b] at `samples` + 1 points and checks
/// Klein membership of each. Throws NotInside for endpoints outside the
/// domain and NonSpacelikeChord unless <a|b> <= -1.
bool convexity_probe(const AchronalSample& lambda, const AdsPointd& a, const AdsPointd& b, int samples,
                     double tol = default_tol());

struct ProbeResult {
  DomainProbe probe;
  Envelope env;
  Verdict verdict;
};

/// Evaluates contains() at each probe, in order.
std::vector<ProbeResult> evaluate_probes(const AchronalSample& lambda, const std::vector<DomainProbe>& probes,
                                         double band = tolerances().band);

}  // namespace adsgeo
