#pragma once

// Deterministic and seeded inputs: quasi-uniform sphere grids, random
// points and isometries, and the standard limit sets.

#include <cstdint>
#include <random>
#include <vector>

#include "adsgeo/achronal_sample.hpp"

namespace adsgeo {

using Rng = std::mt19937_64;

/// Van der Corput radical inverse of `index` in `base`.
double radical_inverse(std::uint64_t index, unsigned base);

/// Uniform random unit vector of R^dim.
Vector random_unit(Index dim, Rng& rng);

/// m quasi-uniform points of S^{n-1} in R^n: the pair {+1, -1} for n = 1,
/// equally spaced angles for n = 2, a Fibonacci lattice for n = 3 and a
/// fixed-seed random set above.
std::vector<Vector> quasi_uniform_sphere(Index n, std::size_t m);

/// Random AdS point with uniform conformal time and r = sqrt(u^2+v^2) at
/// most max_radius.
AdsPointd random_ads_point(Index n, Rng& rng, double max_radius = 10.0);

/// exp(J K) for a random antisymmetric K with entries of size `scale`;
/// always in the identity component.
Isometryd random_isometry(Index n, Rng& rng, double scale = 0.5);

/// Element of SO_0(1,n) acting on (u, x_1, ..., x_n), built the same way.
Matrix random_lorentz(Index n, Rng& rng, double scale = 0.5);

/// Boost of rapidity s in the (u, x_1)-plane of R^{1,n}.
Matrix lorentz_boost(Index n, double s);

/// The limit set of the standard Fuchsian group: theta = 0 over m
/// quasi-uniform directions.
AchronalSample equator_sample(Index n, std::size_t m);

/// The past lightcone graph theta(y) = pi/2 - d(y0, y) over m quasi-uniform
/// directions together with y0 and -y0; pure lightlike by construction.
AchronalSample lightcone_graph(Index n, const Vector& y0, std::size_t m);

/// k random directions with sequentially drawn lambda-Lipschitz values
/// (lambda < 1 gives an acausal set). With `antipodal_pair` the first two
/// directions are y and -y, so the directions never lie in an open
/// hemisphere.
AchronalSample random_achronal_sample(Index n, std::size_t k, Rng& rng, double lambda = 0.95,
                                      bool antipodal_pair = true);

}  // namespace adsgeo
