#include "adsgeo/anosov_fuchsian.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>

#include "adsgeo/sampling.hpp"

namespace adsgeo {

namespace {

double scaled(double tol, const Vector& a, const Vector& b) { return tol * std::max(1.0, a.norm() * b.norm()); }

// Future unit timelike vector of V^perp and an orthonormal spacelike frame
// of its complement in V^perp. For V = (0, 1, 0, ..., 0) this is e_u and
// the standard x-axes.
struct PerpFrame {
  Vector time;
  std::vector<Vector> space;
};

PerpFrame perp_frame(const Vector& V) {
  const Index n = V.size() - 2;
  const double r = std::hypot(V(0), V(1));
  PerpFrame f;
  f.time = Vector::Zero(n + 2);
  f.time(0) = V(1) / r;
  f.time(1) = -V(0) / r;
  for (Index i = 0; i < n; ++i) {
    Vector w = Vector::Unit(n + 2, 2 + i);
    w += inner(w, V) * V + inner(w, f.time) * f.time;
    for (const auto& e : f.space) w -= inner(w, e) * e;
    w /= std::sqrt(q_eval(w));
    f.space.push_back(w);
  }
  return f;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// <y|x> decays like the inverse of |x| along the flow, so the polar test is
// made at roundoff level rather than at the user tolerance.
double polar_product(const AdsPointd& x, const Vector& y) {
  const double s = inner(y, x.coords());
  if (!(std::abs(s) > 64 * std::numeric_limits<double>::epsilon() * y.norm() * x.coords().norm()))
    throw GeometryError(ErrorCode::InvalidInput, "y lies on the polar hyperplane of x");
  return s;
}

}  // namespace

FuchsianRep::FuchsianRep(Vector V, std::vector<Isometryd> generators, double tol)
    : V_(std::move(V)), generators_(std::move(generators)) {
  check_ambient(V_);
  if (!(std::abs(q_eval(V_) + 1.0) <= tol * std::max(1.0, V_.squaredNorm())))
    throw GeometryError(ErrorCode::NotOnHyperboloid, "fixed point V must satisfy q(V) = -1");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.n() != n()) throw GeometryError(ErrorCode::DimensionMismatch, "generator " + std::to_string(i) + " size");
    const double res = (g.matrix() * V_ - V_).norm();
    if (!(res <= tol * std::max(1.0, max_abs(g.matrix()) * V_.norm())))
      throw GeometryError(ErrorCode::InvalidInput, "generator " + std::to_string(i) + " does not fix V");
  }
}

Vector default_fixed_point(Index n) { return Vector::Unit(n + 2, 1); }

Isometryd fuchsian_embed(const Matrix& B, double tol) {
  if (B.rows() != B.cols() || B.rows() < 2)
    throw GeometryError(ErrorCode::DimensionMismatch, "B must be square of size n+1 >= 2");
  if (!B.allFinite()) throw GeometryError(ErrorCode::InvalidInput, "non-finite matrix entry");
  const Index n = B.rows() - 1;
  Vector jd = Vector::Ones(n + 1);
  jd(0) = -1.0;
  const Matrix J = jd.asDiagonal();
  const double scale = std::max(1.0, max_abs(B) * max_abs(B));
  if (!((B.transpose() * J * B - J).cwiseAbs().maxCoeff() <= tol * scale))
    throw GeometryError(ErrorCode::NotAnIsometry, "B does not preserve -u^2 + |x|^2");
  if (!(std::abs(B.determinant() - 1.0) <= tol * scale) || !(B(0, 0) > 0))
    throw GeometryError(ErrorCode::NotIdentityComponent, "B is not in the identity component");
  Matrix M = Matrix::Identity(n + 2, n + 2);
  auto idx = [](Index i) { return i == 0 ? Index(0) : i + 1; };
  for (Index i = 0; i <= n; ++i)
    for (Index j = 0; j <= n; ++j) M(idx(i), idx(j)) = B(i, j);
  return certify_isometry(M, tol * scale);
}

Isometryd evaluate_word(const FuchsianRep& rep, const std::vector<int>& word) {
  const auto& gens = rep.generators();
  Isometryd acc = Isometryd::identity(rep.n());
  int since_check = 0;
  for (int letter : word) {
    const std::size_t k = static_cast<std::size_t>(std::abs(letter));
    if (letter == 0 || k > gens.size())
      throw GeometryError(ErrorCode::InvalidInput, "word letter " + std::to_string(letter) + " out of range");
    acc = acc * (letter > 0 ? gens[k - 1] : gens[k - 1].inverse());
    if (++since_check == 64) {
      const double s = max_abs(acc.matrix());
      acc = certify_isometry(acc.matrix(), default_tol() * std::max(1.0, s * s));
      since_check = 0;
    }
  }
  return acc;
}

Vector section(const AdsPointd& x, const Vector& y) {
  return -y / polar_product(x, y);
}

Vector section_pushforward(const AdsPointd& x, const Vector& y, const Vector& w) {
  const double s = polar_product(x, y);
  return -w / s + y * (inner(w, x.coords()) / (s * s));
}

double g_metric(const AdsPointd& x, const Vector& V, const Vector& y, const Vector& w, double tol) {
  const Vector& xc = x.coords();
  if (V.size() != xc.size() || y.size() != xc.size() || w.size() != xc.size())
    throw GeometryError(ErrorCode::DimensionMismatch, "g_metric arguments differ in size");
  if (!(std::abs(q_eval(V) + 1.0) <= tol * std::max(1.0, V.squaredNorm())))
    throw GeometryError(ErrorCode::NotOnHyperboloid, "q(V) != -1");
  if (!(std::abs(inner(xc, V)) <= scaled(tol, xc, V))) throw GeometryError(ErrorCode::NotOrthogonal, "<x|V> != 0");
  if (!(std::abs(q_eval(y)) <= tol * std::max(1.0, y.squaredNorm())))
    throw GeometryError(ErrorCode::NotNull, "y is not null");
  if (!(std::abs(inner(w, y)) <= scaled(tol, w, y)))
    throw GeometryError(ErrorCode::NotOrthogonal, "w is not tangent to the cone at y");
  const Vector zeta = section(x, y);
  const Vector v = zeta - xc;
  const Vector wp = section_pushforward(x, y, w);
  const double Vv = inner(V, v);
  const Vector tau = (V - Vv * v) / std::sqrt(1.0 + Vv * Vv);
  const double wt = inner(wp, tau);
  return q_eval(wp) + 2.0 * wt * wt;
}

double expansion_ratio(const UnitSpacelikeTangentd& w0, const Vector& V, double t, const Vector& wtan,
                       Endpoint side, double tol) {
  if (!(std::abs(inner(w0.x(), V)) <= scaled(tol, w0.x(), V)) ||
      !(std::abs(inner(w0.v(), V)) <= scaled(tol, w0.v(), V)))
    throw GeometryError(ErrorCode::NotOrthogonal, "tangent is not orthogonal to V");
  const Vector zeta = side == Endpoint::Plus ? Vector(w0.x() + w0.v()) : Vector(w0.x() - w0.v());
  const AdsPointd x0(w0.x(), 1e3 * tol);
  const double g0 = g_metric(x0, V, zeta, wtan, tol);
  if (!(g0 > tol * std::max(1.0, wtan.squaredNorm()))) throw GeometryError(ErrorCode::RadialTangent, "radial tangent");
  const AdsPointd xt(flow(w0, t).x(), 1e3 * tol);
  return g_metric(xt, V, zeta, wtan, tol) / g0;
}

Vector random_cone_tangent(const UnitSpacelikeTangentd& w0, Rng& rng, Endpoint side) {
  const Vector zeta = side == Endpoint::Plus ? Vector(w0.x() + w0.v()) : Vector(w0.x() - w0.v());
  const Vector ref = side == Endpoint::Plus ? Vector(w0.x() - w0.v()) : Vector(w0.x() + w0.v());
  const Vector w = random_unit(zeta.size(), rng);
  return w - (inner(w, zeta) / inner(ref, zeta)) * ref;
}

UnitSpacelikeTangentd random_fuchsian_tangent(const Vector& V, Rng& rng, double spread) {
  const PerpFrame f = perp_frame(V);
  const Index n = V.size() - 2;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = spread * unif(rng);
  const Vector dir = random_unit(n, rng);
  Vector x = std::cosh(r) * f.time;
  for (Index i = 0; i < n; ++i) x += std::sinh(r) * dir(i) * f.space[i];
  const Vector c = random_unit(n + 1, rng);
  Vector v = c(0) * f.time;
  for (Index i = 0; i < n; ++i) v += c(i + 1) * f.space[i];
  v += inner(v, x) * x;
  v /= std::sqrt(q_eval(v));
  return UnitSpacelikeTangentd(x, v, 1e3 * default_tol());
}

AttractiveFixedPoint attractive_fixed_point_ein(const Isometryd& M, const std::optional<Vector>& hint,
                                                std::uint64_t seed, int trials, int steps) {
  LoxodromicDatad d = loxodromic_analysis(M);
  if (hint && inner(d.attracting, *hint) > 0) {
    d.attracting = -d.attracting;
    d.repelling = -d.repelling;
  }
  AttractiveFixedPoint out;
  out.ray = d.attracting;
  out.translation_length = d.translation_length;
  out.point = null_ray_to_einstein(RayPointd(d.attracting), 1e3 * default_tol());
  out.trials = trials;
  steps = std::max(steps, static_cast<int>(std::ceil(40.0 / d.translation_length)));

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 0.05);
  double log_sum = 0.0;
  int log_count = 0;
  out.worst_final_distance = 0.0;
  for (int k = 0; k < trials; ++k) {
    EinPointd e = out.point;
    e.theta += normal(rng);
    for (Index i = 0; i < e.y.size(); ++i) e.y(i) += normal(rng);
    e.y.normalize();
    const auto orbit = power_iterate(M.matrix(), einstein_to_null(e), steps);
    double prev = (orbit.front() - d.attracting).norm();
    for (std::size_t j = 1; j < orbit.size(); ++j) {
      const double cur = (orbit[j] - d.attracting).norm();
      if (prev > 1e-7 && cur > 1e-12) {
        log_sum += std::log(cur / prev);
        ++log_count;
      }
      prev = cur;
    }
    out.worst_final_distance = std::max(out.worst_final_distance, prev);
  }
  out.contraction_factor = log_count > 0 ? std::exp(log_sum / log_count) : 0.0;
  out.converged = out.worst_final_distance <= 1e-9;
  return out;
}

AchronalSample fuchsian_limit_set(const FuchsianRep& rep, std::size_t m) {
  const PerpFrame f = perp_frame(rep.V());
  const Index n = rep.n();
  std::vector<SamplePoint> pts;
  for (const auto& y : quasi_uniform_sphere(n, m)) {
    Vector z = f.time;
    for (Index i = 0; i < n; ++i) z += y(i) * f.space[i];
    const EinPointd e = null_ray_to_einstein(RayPointd(z), 1e3 * default_tol());
    // Lift next to the first point; acausal graphs vary by less than pi.
    const double theta = pts.empty() ? e.theta : pts.front().theta + wrap_angle(e.theta - pts.front().theta);
    pts.push_back({e.y, theta});
  }
  return AchronalSample(n, std::move(pts));
}

CertificateReport quasi_fuchsian_certificate(const std::vector<Isometryd>& generators, const AchronalSample& lambda,
                                             double mesh, double invariance_tol) {
  CertificateReport rep;
  const auto rays = lambda.null_rays();

  // (a) acausality. Repeated rays make the set non-acausal as well.
  try {
    const SetClassification c = set_causal_class(rays);
    rep.acausal = c.value == SetCausalClass::Acausal;
    rep.causality_witness = c.witness;
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::DuplicateRay) throw;
    rep.acausal = false;
    for (std::size_t i = 0; i < rays.size() && !rep.causality_witness; ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j)
        if (chordal_distance(rays[i], rays[j]) <= default_tol()) {
          rep.causality_witness = PairWitness{i, j, 0.0};
          break;
        }
  }

  // (b) 1-Lipschitz graph covering the sphere within the mesh.
  const AchronalityReport lip = graph_is_achronal(lambda);
  rep.lipschitz_witness = lip.violation;
  const Index n = lambda.n();
  const std::size_t reference = n == 2 ? 720 : 2000;
  rep.mesh = mesh;
  for (const auto& g : quasi_uniform_sphere(n, reference)) {
    double nearest = std::numbers::pi;
    for (const auto& p : lambda.points()) nearest = std::min(nearest, spherical_distance(g, p.y));
    rep.coverage_radius = std::max(rep.coverage_radius, nearest);
  }
  rep.graph = lip.achronal && rep.coverage_radius <= mesh;

  // (c) nonempty domain, witnessed by the midpoint above the pole.
  if (const auto pair = pure_lightlike_pair(lambda)) {
    const auto [i, j] = *pair;
    rep.lightlike_witness = PairWitness{i, j, lambda[i].theta - lambda[j].theta};
  } else {
    Vector pole = Vector::Unit(n + 1, 0);
    const Envelope env = envelope(lambda, pole);
    const double mid = 0.5 * (env.fminus + env.fplus);
    const UniversalPointd u = make_universal(mid, Vector(pole));
    DomainProbe probe{u.winding, u.theta, pole};
    if (contains(lambda, probe) == Verdict::Inside) {
      rep.nonempty = true;
      rep.interior_witness = probe;
    }
  }

  // (d) every generator maps the sampled points onto the graph.
  rep.invariant = true;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].n() != n) throw GeometryError(ErrorCode::DimensionMismatch, "generator size");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      const Vector image = generators[g].apply(einstein_to_null(EinPointd{lambda[i].theta, lambda[i].y}));
      const EinPointd e = null_ray_to_einstein(RayPointd(image), 1e3 * default_tol());
      const double dev = std::abs(wrap_angle(e.theta - graph_interpolant(lambda, e.y)));
      if (dev > rep.invariance_deviation) {
        rep.invariance_deviation = dev;
        if (dev > invariance_tol) rep.invariance_witness = InvarianceWitness{g, i, dev};
      }
    }
  }
  rep.invariant = !rep.invariance_witness.has_value();
  return rep;
}

GrowthCertificate growth_certificate(const Isometryd& gamma, const Vector& V, int periods, std::uint64_t seed) {
  const LoxodromicDatad d = loxodromic_analysis(gamma);
  const UnitSpacelikeTangentd w0 = from_endpoints(RayPointd(d.attracting), RayPointd(d.repelling));
  const Vector zeta = w0.x() + w0.v();
  Rng rng(seed);
  const Vector wtan = random_cone_tangent(w0, rng);
  const double g0 = g_metric(AdsPointd(w0.x(), 1e3 * default_tol()), V, zeta, wtan);
  if (!(g0 > 0)) throw GeometryError(ErrorCode::RadialTangent, "radial tangent");

  GrowthCertificate c;
  Vector x = w0.x();
  for (int k = 1; k <= periods; ++k) {
    x = gamma.apply(x);
    c.times.push_back(k * d.translation_length);
    c.ratios.push_back(g_metric(AdsPointd(x, 1e3 * default_tol()), V, zeta, wtan) / g0);
  }
  // Least-squares slope of log(ratio) against t.
  double st = 0, sl = 0, stt = 0, stl = 0;
  const double m = static_cast<double>(c.times.size());
  for (std::size_t k = 0; k < c.times.size(); ++k) {
    const double t = c.times[k], l = std::log(c.ratios[k]);
    st += t;
    sl += l;
    stt += t * t;
    stl += t * l;
  }
  const double denom = m * stt - st * st;
  c.a = denom > 0 ? (m * stl - st * sl) / denom : sl / st;
  c.b = 0;
  for (std::size_t k = 0; k < c.times.size(); ++k) c.b = std::max(c.b, std::exp(c.a * c.times[k]) / c.ratios[k]);
  c.passed = std::abs(c.a - 2.0) <= 0.05 && c.b <= 1.1;
  return c;
}

}  // namespace adsgeo
