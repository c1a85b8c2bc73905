#include <gtest/gtest.h>

#include <random>

#include "adsgeo/models.hpp"
#include "adsgeo/sampling.hpp"
#include "oracles.hpp"

using namespace adsgeo;

namespace {

Vector v4(double a, double b, double c, double d) {
  Vector x(4);
  x << a, b, c, d;
  return x;
}

}  // namespace

TEST(QuadraticForm, Values) {
  EXPECT_EQ(q_eval(v4(1, 0, 0, 0)), -1.0);
  EXPECT_EQ(q_eval(v4(0, 0, 1, 0)), 1.0);
  EXPECT_EQ(q_eval(v4(1, 1, 1, 1)), 0.0);
}

TEST(QuadraticForm, InnerProducts) {
  EXPECT_EQ(inner(v4(1, 0, 0, 0), v4(0, 1, 0, 0)), 0.0);
  EXPECT_EQ(inner(v4(1, 0, 1, 0), v4(1, 0, -1, 0)), -2.0);
  EXPECT_EQ(inner(v4(1, 0, 1, 0), v4(1, 0, 1, 0)), 0.0);
  EXPECT_THROW(inner(v4(1, 0, 1, 0), Vector::Zero(5)), GeometryError);
}

TEST(QuadraticForm, PolarizationAndSymmetry) {
  Rng rng(11);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 500; ++k) {
    const Index n = 1 + k % 4;
    Vector x(n + 2), y(n + 2);
    for (Index i = 0; i < n + 2; ++i) {
      x(i) = normal(rng);
      y(i) = normal(rng);
    }
    EXPECT_NEAR(inner(x, y), (q_eval(Vector(x + y)) - q_eval(x) - q_eval(y)) / 2, 1e-12);
    EXPECT_EQ(inner(x, y), inner(y, x));
    EXPECT_EQ(inner(x, x), q_eval(x));
    EXPECT_NEAR(q_eval(x), oracle::q(x), 1e-12);
  }
}

TEST(QuadraticForm, FormMatrix) {
  const Matrix J = form_matrix(2);
  const Vector x = v4(0.3, -1.2, 2.0, 0.5), y = v4(1, 2, 3, 4);
  EXPECT_NEAR(x.dot(J * y), inner(x, y), 1e-14);
}

TEST(Classification, Examples) {
  EXPECT_EQ(classify(v4(1, 0, 0, 0)), CausalType::Timelike);
  EXPECT_EQ(classify(v4(0, 0, 1, 0)), CausalType::Spacelike);
  EXPECT_EQ(classify(v4(1, 1, 1, 1)), CausalType::Lightlike);
  EXPECT_EQ(classify(v4(0, 0, 0, 0)), CausalType::Zero);
  // Tiny but nonzero null-ish vectors are Zero only below the norm threshold.
  EXPECT_EQ(classify(v4(1e-12, 0, 0, 0), 1e-9), CausalType::Zero);
}

TEST(Rays, Normalization) {
  EXPECT_EQ(ray(v4(2, 0, 0, 0)).rep(), v4(1, 0, 0, 0));
  EXPECT_EQ(ray(v4(-2, 0, 0, 0)).rep(), v4(-1, 0, 0, 0));
  EXPECT_EQ(ray(v4(1, 1, 1, 1)).rep(), v4(0.5, 0.5, 0.5, 0.5));
  EXPECT_THROW(ray(v4(0, 0, 0, 0)), GeometryError);
  EXPECT_THROW(ray(Vector::Ones(2)), GeometryError);
}

TEST(Rays, PositiveHomothetyOnly) {
  Rng rng(3);
  std::uniform_real_distribution<double> scale(0.1, 50.0);
  for (int k = 0; k < 200; ++k) {
    const Vector x = random_unit(5, rng);
    const double lambda = scale(rng);
    EXPECT_LE(chordal_distance(ray(x), ray(Vector(lambda * x))), 1e-15);
    EXPECT_FALSE(ray(x) == ray(Vector(-x)));
    // A second normalization changes nothing.
    EXPECT_TRUE(ray(ray(Vector(lambda * x)).rep()) == ray(Vector(lambda * x)));
  }
}

TEST(Isometries, CertificationExamples) {
  EXPECT_NO_THROW(certify_isometry(Matrix::Identity(4, 4)));
  Matrix reflect = Matrix::Identity(4, 4);
  reflect(2, 2) = -1;
  try {
    certify_isometry(reflect);
    FAIL() << "reflection accepted";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIdentityComponent);
  }
  // det = 1 but the time block is reversed.
  Matrix flip = Matrix::Identity(4, 4);
  flip(0, 0) = flip(2, 2) = -1;
  EXPECT_THROW(certify_isometry(flip), GeometryError);
  Matrix shear = Matrix::Identity(4, 4);
  shear(0, 2) = 0.1;
  try {
    certify_isometry(shear);
    FAIL() << "shear accepted";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnIsometry);
  }
  for (double phi : {0.3, 1.0, 3.0, -2.0}) EXPECT_NO_THROW(time_rotation(2, phi));
}

TEST(Isometries, PreserveTheForm) {
  Rng rng(5);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 200; ++k) {
    const Index n = 1 + k % 3;
    const Isometryd g = random_isometry(n, rng);
    Vector x(n + 2), y(n + 2);
    for (Index i = 0; i < n + 2; ++i) {
      x(i) = normal(rng);
      y(i) = normal(rng);
    }
    EXPECT_LE(std::abs(inner(g.apply(x), g.apply(y)) - inner(x, y)), 1e-9 * (1 + x.norm() * y.norm()));
    const Isometryd h = compose(g, g.inverse(), 1e-8);
    EXPECT_LE((h.matrix() - Matrix::Identity(n + 2, n + 2)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Isometries, ProductsStayInTheGroup) {
  Rng rng(8);
  const Isometryd a = random_isometry(3, rng), b = random_isometry(3, rng);
  const Isometryd ab = a * b;
  EXPECT_LE(isometry_residual(ab.matrix()), 1e-10);
  EXPECT_NO_THROW(compose(a, b));
  EXPECT_THROW(a * Isometryd::identity(2), GeometryError);
}
