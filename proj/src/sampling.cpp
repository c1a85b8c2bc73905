#include "adsgeo/sampling.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "adsgeo/causality.hpp"

namespace adsgeo {

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

Vector random_unit(Index dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Vector v(dim);
  do {
    for (Index i = 0; i < dim; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-8);
  return v.normalized();
}

std::vector<Vector> quasi_uniform_sphere(Index n, std::size_t m) {
  if (n < 1) throw GeometryError(ErrorCode::InvalidInput, "sphere dimension");
  std::vector<Vector> out;
  if (n == 1) {
    out.push_back(Vector::Constant(1, 1.0));
    out.push_back(Vector::Constant(1, -1.0));
    return out;
  }
  out.reserve(m);
  if (n == 2) {
    for (std::size_t k = 0; k < m; ++k) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
      Vector y(2);
      y << std::cos(a), std::sin(a);
      out.push_back(y);
    }
    return out;
  }
  if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < m; ++k) {
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(m);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * static_cast<double>(k);
      Vector y(3);
      y << r * std::cos(a), r * std::sin(a), z;
      out.push_back(y.normalized());
    }
    return out;
  }
  Rng rng(0x5eedULL + static_cast<std::uint64_t>(n));
  for (std::size_t k = 0; k < m; ++k) out.push_back(random_unit(n, rng));
  return out;
}

AdsPointd random_ads_point(Index n, Rng& rng, double max_radius) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ConformalAdsPointd c;
  c.theta = std::numbers::pi * (2.0 * unif(rng) - 1.0);
  const double rho = std::acos(1.0 / max_radius) * unif(rng);
  c.disk.resize(n + 1);
  c.disk(0) = std::cos(rho);
  c.disk.tail(n) = std::sin(rho) * random_unit(n, rng);
  return conformal_to_ads(c);
}

namespace {

Matrix random_generator(Index size, Index time_dims, Rng& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix k = Matrix::Zero(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = i + 1; j < size; ++j) {
      k(i, j) = normal(rng);
      k(j, i) = -k(i, j);
    }
  Vector j = Vector::Ones(size);
  j.head(time_dims).setConstant(-1.0);
  return j.asDiagonal() * k;
}

}  // namespace

Isometryd random_isometry(Index n, Rng& rng, double scale) {
  const Matrix a = random_generator(n + 2, 2, rng, scale);
  const Matrix m = a.exp();
  return certify_isometry(m, 1e-8);
}

Matrix random_lorentz(Index n, Rng& rng, double scale) {
  const Matrix a = random_generator(n + 1, 1, rng, scale);
  return a.exp();
}

Matrix lorentz_boost(Index n, double s) {
  Matrix b = Matrix::Identity(n + 1, n + 1);
  b(0, 0) = b(1, 1) = std::cosh(s);
  b(0, 1) = b(1, 0) = std::sinh(s);
  return b;
}

AchronalSample equator_sample(Index n, std::size_t m) {
  std::vector<SamplePoint> pts;
  for (auto& y : quasi_uniform_sphere(n, m)) pts.push_back({std::move(y), 0.0});
  return AchronalSample(n, std::move(pts));
}

AchronalSample lightcone_graph(Index n, const Vector& y0, std::size_t m) {
  std::vector<SamplePoint> pts;
  pts.push_back({y0, std::numbers::pi / 2});
  pts.push_back({-y0, -std::numbers::pi / 2});
  for (auto& y : quasi_uniform_sphere(n, m)) {
    if (std::abs(std::abs(y.dot(y0)) - 1.0) < 1e-12) continue;
    const double theta = std::numbers::pi / 2 - spherical_distance(y0, y);
    pts.push_back({std::move(y), theta});
  }
  return AchronalSample(n, std::move(pts));
}

AchronalSample random_achronal_sample(Index n, std::size_t k, Rng& rng, double lambda, bool antipodal_pair) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<SamplePoint> pts;
  for (std::size_t i = 0; i < k; ++i) {
    Vector y = (antipodal_pair && i == 1) ? Vector(-pts[0].y) : random_unit(n, rng);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
      const double d = spherical_distance(p.y, y);
      lo = std::max(lo, p.theta - lambda * d);
      hi = std::min(hi, p.theta + lambda * d);
    }
    const double theta = pts.empty() ? (2.0 * unif(rng) - 1.0) : lo + (hi - lo) * unif(rng);
    pts.push_back({std::move(y), theta});
  }
  return AchronalSample(n, std::move(pts));
}

}  // namespace adsgeo
