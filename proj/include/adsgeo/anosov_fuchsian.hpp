#pragma once

// Fuchsian representations into SO_0(2,n) and numeric certificates of the
// Anosov property: the section s_x, the Riemannian metrics g^{x,V} on the
// boundary, the e^{2t} expansion law, attractive fixed points and
// quasi-Fuchsian reports for finite limit sets.

#include <cstdint>
#include <optional>
#include <vector>

#include "adsgeo/causality.hpp"
#include "adsgeo/flows.hpp"
#include "adsgeo/invisible_domain.hpp"
#include "adsgeo/sampling.hpp"

namespace adsgeo {

/// Generators of a free group acting with a global fixed point V in AdS.
class FuchsianRep {
 public:
  /// Throws unless q(V) = -1 and every generator fixes V within tol
  /// (relative to the generator's norm).
  FuchsianRep(Vector V, std::vector<Isometryd> generators, double tol = 1e-9);

  const Vector& V() const { return V_; }
  const std::vector<Isometryd>& generators() const { return generators_; }
  Index n() const { return V_.size() - 2; }

 private:
  Vector V_;
  std::vector<Isometryd> generators_;
};

/// (0, 1, 0, ..., 0).
Vector default_fixed_point(Index n);

/// Embeds B in SO_0(1,n), acting on (u, x_1, ..., x_n), into SO_0(2,n) as
/// the stabilizer of (0, 1, 0, ..., 0).
Isometryd fuchsian_embed(const Matrix& B, double tol = default_tol());

/// Evaluates a word left to right. Letters are 1-based generator indices,
/// negative for inverses. The running product is re-certified every 64
/// factors.
Isometryd evaluate_word(const FuchsianRep& rep, const std::vector<int>& word);

/// s_x(y) = -y/<y|x>: the point of the ray of y on {<.|x> = -1}.
Vector section(const AdsPointd& x, const Vector& y);

/// Differential of s_x at y applied to w; kills the radial direction.
Vector section_pushforward(const AdsPointd& x, const Vector& y, const Vector& w);

/// g^{x,V} at the boundary point of the null vector y, applied to the cone
/// tangent w: q(w') + 2 <w'|tau>^2 where w' is the pushed-forward tangent at
/// zeta = s_x(y) = x + v and tau = (V - <V|v> v)/sqrt(1 + <V|v>^2).
double g_metric(const AdsPointd& x, const Vector& V, const Vector& y, const Vector& w, double tol = default_tol());

enum class Endpoint { Plus, Minus };

/// g at flow(w0, t).x over g at w0.x, evaluated at the endpoint
/// zeta = x +- v of w0. Throws RadialTangent if wtan is radial.
double expansion_ratio(const UnitSpacelikeTangentd& w0, const Vector& V, double t, const Vector& wtan,
                       Endpoint side = Endpoint::Plus, double tol = default_tol());

/// Random cone tangent at zeta = x +- v of w0, free of radial part in the
/// sense that it is orthogonal to zeta.
Vector random_cone_tangent(const UnitSpacelikeTangentd& w0, Rng& rng, Endpoint side = Endpoint::Plus);

/// Random unit tangent with both legs orthogonal to V (a unit tangent of the
/// totally geodesic H^n = V^perp).
UnitSpacelikeTangentd random_fuchsian_tangent(const Vector& V, Rng& rng, double spread = 1.0);

struct AttractiveFixedPoint {
  EinPointd point;
  Vector ray;                  // unit representative
  double translation_length;
  bool converged;              // all trials converged
  double contraction_factor;   // geometric mean per-step factor
  double worst_final_distance;
  int trials;
};

/// Attracting null eigen-ray of a loxodromic isometry, certified by
/// iterating `trials` random null rays near it.
///
/// Both a and -a attract (on the half-spaces <z|r> < 0 and > 0). Without a
/// hint the sign follows loxodromic_analysis; with a hint point p the ray
/// with <a|p> < 0 is returned, i.e. the forward end of the invariant
/// geodesic through the sheet of p.
AttractiveFixedPoint attractive_fixed_point_ein(const Isometryd& M, const std::optional<Vector>& hint = std::nullopt,
                                                std::uint64_t seed = 1, int trials = 50, int steps = 60);

/// m quasi-uniform null rays of the future sheet of the light cone of
/// V^perp, as a graph over the boundary directions.
AchronalSample fuchsian_limit_set(const FuchsianRep& rep, std::size_t m);

struct InvarianceWitness {
  std::size_t generator;
  std::size_t point;
  double deviation;
};

struct CertificateReport {
  bool acausal = false;
  std::optional<PairWitness> causality_witness;

  bool graph = false;
  std::optional<PairWitness> lipschitz_witness;
  double coverage_radius = 0;
  double mesh = 0;

  bool nonempty = false;
  std::optional<PairWitness> lightlike_witness;
  std::optional<DomainProbe> interior_witness;

  bool invariant = false;
  std::optional<InvarianceWitness> invariance_witness;
  double invariance_deviation = 0;

  bool passed() const { return acausal && graph && nonempty && invariant; }
};

/// The four defining checks of a quasi-Fuchsian limit set on finite data:
/// acausality, graph over a full direction grid within `mesh`, nonempty
/// invisible domain, and invariance of the graph under every generator.
CertificateReport quasi_fuchsian_certificate(const std::vector<Isometryd>& generators, const AchronalSample& lambda,
                                             double mesh = 0.3, double invariance_tol = 1e-8);

inline CertificateReport quasi_fuchsian_certificate(const FuchsianRep& rep, const AchronalSample& lambda,
                                                    double mesh = 0.3, double invariance_tol = 1e-8) {
  return quasi_fuchsian_certificate(rep.generators(), lambda, mesh, invariance_tol);
}

struct GrowthCertificate {
  std::vector<double> times;
  std::vector<double> ratios;
  double a = 0;  // fitted exponent
  double b = 0;  // smallest b with ratio >= e^{a t} / b
  bool passed = false;
};

/// Growth of g at the attracting endpoint along the orbit gamma^k x0 of a
/// point of the axis, k = 1..periods, for a given cone tangent. Passes when
/// a = 2 +- 0.05 and b <= 1.1. The product <zeta|x> shrinks like
/// e^{-periods T}, so keep periods * T below about 15.
GrowthCertificate growth_certificate(const Isometryd& gamma, const Vector& V, int periods, std::uint64_t seed = 1);

}  // namespace adsgeo
