#pragma once

#include <cstdlib>
#include <string>

namespace adsgeo {

/// Process-wide numerical tolerances.
///
/// `exact` bounds residuals of identities that hold exactly in real
/// arithmetic, `derived` bounds quantities produced by iteration, and `band`
/// is the half-width of the boundary band used by three-valued verdicts.
struct Tolerances {
  double exact = 1e-9;
  double derived = 1e-7;
  double band = 1e-8;
};

namespace detail {
inline Tolerances& tolerance_storage() {
  static Tolerances storage;
  return storage;
}
}  // namespace detail

/// Set once at startup; read-only afterwards.
inline const Tolerances& tolerances() { return detail::tolerance_storage(); }
inline void set_tolerances(const Tolerances& t) { detail::tolerance_storage() = t; }

/// Defaults, with `exact` replaced by the value of ADSGEO_TOL when it parses
/// as a positive number.
inline Tolerances tolerances_from_env() {
  Tolerances t;
  if (const char* env = std::getenv("ADSGEO_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0.0) t.exact = value;
  }
  return t;
}

inline double default_tol() { return tolerances().exact; }

}  // namespace adsgeo
