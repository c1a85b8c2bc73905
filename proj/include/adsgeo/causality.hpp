#pragma once

// Causal relations in the universal Einstein universe and in the Klein
// model, and causal classification of finite sets.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "adsgeo/achronal_sample.hpp"

namespace adsgeo {

/// Great-circle distance between unit vectors, in [0, pi].
double spherical_distance(const Vector& a, const Vector& b);

enum class RelationKind { TimelikeRelated, LightlikeRelated, Unrelated };
enum class TimeOrder { FirstPast, FirstFuture, NotApplicable };

struct CausalRelation {
  RelationKind kind;
  TimeOrder order;  // NotApplicable iff kind == Unrelated
};

const char* to_string(RelationKind k);
const char* to_string(TimeOrder o);

/// Cone relation on R x S^k: |dtheta| against the spherical distance of the
/// spatial parts. Both spatial parts must have the same length (use
/// boundary_point() to compare a boundary point with a hemisphere point).
CausalRelation universal_relation(const UniversalPointd& p, const UniversalPointd& q, double tol = default_tol());

/// Sign of <x|y> for x on an affine boundary and y in the closure of the
/// same affine domain: positive is timelike, zero lightlike, negative
/// unrelated. Requires x null and q(y) <= 0.
CausalRelation klein_relation(const RayPointd& x, const RayPointd& y, double tol = default_tol());

/// Same, additionally certifying that both rays lie in the closure of the
/// affine domain of `base` through affine_chart.
CausalRelation klein_relation(const RayPointd& x, const RayPointd& y, const AdsPointd& base,
                              double tol = default_tol());

enum class SetCausalClass { Acausal, AchronalNotAcausal, NotAchronal };
const char* to_string(SetCausalClass c);

/// A pair of indices (i < j) and the scalar product of their unit
/// representatives.
struct PairWitness {
  std::size_t i;
  std::size_t j;
  double inner;
};

struct SetClassification {
  SetCausalClass value;
  /// For NotAchronal the first pair with positive product; for
  /// AchronalNotAcausal the first pair inside the lightlike band.
  std::optional<PairWitness> witness;
};

/// Classification by pairwise scalar-product signs. Members must be null
/// and pairwise distinct as rays.
SetClassification set_causal_class(std::span<const RayPointd> rays, double tol = default_tol());

struct AchronalityReport {
  bool achronal;
  std::optional<PairWitness> violation;  // `inner` holds |dtheta| - d
};

/// |theta_i - theta_j| <= d(y_i, y_j) + tol for all pairs; reports the
/// smallest violating index pair.
AchronalityReport graph_is_achronal(std::span<const SamplePoint> points, double tol = default_tol());
inline AchronalityReport graph_is_achronal(const AchronalSample& s, double tol = default_tol()) {
  return graph_is_achronal(std::span<const SamplePoint>(s.points()), tol);
}

}  // namespace adsgeo
