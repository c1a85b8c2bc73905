#pragma once

// JSON codecs for the file formats. Readers are strict: every field must be
// known, numbers must be finite, and errors name the offending field.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "adsgeo/anosov_fuchsian.hpp"
#include "adsgeo/cosmo_time.hpp"

namespace adsgeo::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Two-space indented dump with a trailing newline; numbers use the
/// shortest representation that reads back to the same double.
std::string dump(const json& j);

json encode_array(const Vector& x);
Vector decode_array(const json& j, const std::string& path);

/// {"n": n, "coords": [...]}, coords of length n + 2.
json encode_vector(const Vector& x);
Vector decode_vector(const json& j, const std::string& path = "$");

/// {"rows": [[...], ...]}
json encode_matrix(const Matrix& m);
Matrix decode_matrix(const json& j, const std::string& path = "$");

/// {"theta": t, "disk": [...]}
json encode_conformal(const ConformalAdsPointd& c);
ConformalAdsPointd decode_conformal(const json& j, const std::string& path = "$");

/// {"theta": t, "y": [...]}
json encode_einstein(const EinPointd& e);
EinPointd decode_einstein(const json& j, const std::string& path = "$");

/// {"pair": [i, j], "inner": s}
json encode_witness(const PairWitness& w);
PairWitness decode_witness(const json& j, const std::string& path = "$");

/// {"n": n, "points": [{"y": [...], "theta": t}, ...]}
json encode_limit_set(const AchronalSample& s);
AchronalSample decode_limit_set(const json& j, const std::string& path = "$");

/// {"attracting": [...], "repelling": [...], "T": t}
json encode_loxodromic(const LoxodromicDatad& d);
LoxodromicDatad decode_loxodromic(const json& j, const std::string& path = "$");

/// {"n": n, "V": [...], "generators": [{"rows": [[...]]}, ...]}
json encode_rep(const FuchsianRep& r);
FuchsianRep decode_rep(const json& j, const std::string& path = "$");

/// {"tau_hat": t, "argmax_dir": [...]}
json encode_ct_summary(const CtEstimate& e);

json encode_certificate(const CertificateReport& r);

}  // namespace adsgeo::io
