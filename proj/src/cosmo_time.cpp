#include "adsgeo/cosmo_time.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "adsgeo/sampling.hpp"

namespace adsgeo {

namespace {

void check_timelike_tangent(const AdsPointd& p, const Vector& u) {
  const double scale = std::max(1.0, p.coords().norm() * u.norm());
  if (u.size() != p.coords().size()) throw GeometryError(ErrorCode::DimensionMismatch, "tangent size");
  if (!(std::abs(inner(p.coords(), u)) <= 1e3 * default_tol() * scale))
    throw GeometryError(ErrorCode::NotOrthogonal, "<p|u> != 0");
  if (!(std::abs(q_eval(u) + 1.0) <= 1e3 * default_tol() * std::max(1.0, u.squaredNorm())))
    throw GeometryError(ErrorCode::NotNormalized, "q(u) != -1");
}

bool inside(const AchronalSample& lambda, const Vector& x) { return max_klein_product(lambda, ray(x)) < 0.0; }

double exit_by_bisection(const AchronalSample& lambda, const Vector& p, const Vector& u, double tol) {
  auto point = [&](double s) { return Vector(std::cos(s) * p - std::sin(s) * u); };
  // The admissible parameters form an interval containing 0; at s = pi the
  // geodesic reaches -p, which sees every sample point.
  double lo = 0.0;
  double hi = std::numbers::pi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (inside(lambda, point(mid)) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double timelike_exit_length(const AchronalSample& lambda, const AdsPointd& p, const Vector& u, double bisection_tol) {
  check_timelike_tangent(p, u);
  if (is_pure_lightlike(lambda)) throw GeometryError(ErrorCode::NotInside, "the invisible domain is empty");
  if (!inside(lambda, p.coords())) throw GeometryError(ErrorCode::NotInside, "probe point outside the domain");
  return exit_by_bisection(lambda, p.coords(), u, bisection_tol);
}

Vector rest_frame_direction(const AdsPointd& p) {
  const auto& x = p.coords();
  const double r = std::hypot(x(0), x(1));
  Vector e = Vector::Zero(x.size());
  e(0) = -x(1) / r;
  e(1) = x(0) / r;
  return e;
}

std::vector<Vector> timelike_direction_grid(const AdsPointd& p, std::size_t m, std::uint64_t seed,
                                            double max_rapidity) {
  static constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  const Vector& x = p.coords();
  const Index n = p.n();
  if (n > static_cast<Index>(std::size(kPrimes)))
    throw GeometryError(ErrorCode::InvalidInput, "direction grids support n <= 15");
  const Vector e0 = rest_frame_direction(p);

  // Orthonormal spacelike frame of {p, e0}^perp.
  std::vector<Vector> frame;
  for (Index i = 0; i < n; ++i) {
    Vector w = Vector::Unit(n + 2, 2 + i);
    w += inner(w, x) * x + inner(w, e0) * e0;
    for (const auto& f : frame) w -= inner(w, f) * f;
    w /= std::sqrt(q_eval(w));
    frame.push_back(w);
  }

  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> shift(n);
  for (auto& s : shift) s = unif(rng);

  std::vector<Vector> out;
  out.reserve(m);
  if (m > 0) out.push_back(e0);
  const double beta_max = std::tanh(max_rapidity);
  for (std::uint64_t k = 1; out.size() < m; ++k) {
    Vector b(n);
    for (Index i = 0; i < n; ++i) {
      const double h = radical_inverse(k, kPrimes[i]) + shift[i];
      b(i) = 2.0 * (h - std::floor(h)) - 1.0;
    }
    if (b.squaredNorm() >= 1.0) continue;
    b *= beta_max;
    Vector u = e0;
    for (Index i = 0; i < n; ++i) u += b(i) * frame[i];
    out.push_back(u / std::sqrt(1.0 - b.squaredNorm()));
  }
  return out;
}

CtEstimate cosmological_time_estimate(const AdsPointd& p, const AchronalSample& lambda,
                                      const std::vector<Vector>& directions, double bisection_tol, double band) {
  CtEstimate est;
  est.bisection_tol = bisection_tol;
  est.directions_used = directions.size();
  const Verdict where = klein_verdict(lambda, ray(p.coords()), band);
  if (where == Verdict::Outside) throw GeometryError(ErrorCode::NotInside, "probe point outside the domain");
  if (where == Verdict::Boundary) {
    est.boundary = true;
    est.lengths.assign(directions.size(), 0.0);
    if (!directions.empty()) est.argmax_dir = directions.front();
    return est;
  }
  est.lengths.reserve(directions.size());
  for (const auto& u : directions) {
    check_timelike_tangent(p, u);
    est.lengths.push_back(exit_by_bisection(lambda, p.coords(), u, bisection_tol));
  }
  // Ties resolve to the first index so the argmax is reproducible.
  for (std::size_t i = 0; i < est.lengths.size(); ++i)
    if (est.lengths[i] > est.value) {
      est.value = est.lengths[i];
      est.argmax = i;
    }
  if (!directions.empty()) est.argmax_dir = directions[est.argmax];
  return est;
}

CtEstimate cosmological_time_estimate(const AdsPointd& p, const AchronalSample& lambda, std::size_t m,
                                      std::uint64_t seed, double bisection_tol) {
  return cosmological_time_estimate(p, lambda, timelike_direction_grid(p, m, seed), bisection_tol);
}

DecayTrace past_decay_trace(const AchronalSample& lambda, const AdsPointd& p, const Vector& u, double delta,
                            int steps, std::size_t m, std::uint64_t seed) {
  DecayTrace trace;
  trace.exit_length = timelike_exit_length(lambda, p, u);
  const double last = std::max(0.0, trace.exit_length - delta);
  for (int k = 0; k <= steps; ++k) {
    const double s = last * static_cast<double>(k) / steps;
    // Point and future tangent of the geodesic at parameter s.
    const Vector x = std::cos(s) * p.coords() - std::sin(s) * u;
    const Vector us = std::sin(s) * p.coords() + std::cos(s) * u;
    const AdsPointd q(x, 1e3 * default_tol());
    auto dirs = timelike_direction_grid(q, m, seed);
    dirs.push_back(us);
    trace.params.push_back(s);
    trace.estimates.push_back(cosmological_time_estimate(q, lambda, dirs, 1e-12, 0.0).value);
  }
  return trace;
}

}  // namespace adsgeo
