#include "adsgeo/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace adsgeo::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw FormatError(path + ": " + what); }

void expect_fields(const json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) fail(path, std::string("missing field \"") + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) fail(path + "." + key, "unknown field \"" + key + "\"");
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(path, "non-finite number");
  return x;
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

json finite(double x, const std::string& what) {
  if (!std::isfinite(x)) throw FormatError(what + ": refusing to write a non-finite number");
  return x;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot write");
  out << dump(j);
}

json encode_array(const Vector& x) {
  json a = json::array();
  for (Index i = 0; i < x.size(); ++i) a.push_back(finite(x(i), "array"));
  return a;
}

Vector decode_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  Vector x(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) x(i) = number(j[i], path + "[" + std::to_string(i) + "]");
  return x;
}

json encode_vector(const Vector& x) { return {{"n", x.size() - 2}, {"coords", encode_array(x)}}; }

Vector decode_vector(const json& j, const std::string& path) {
  expect_fields(j, path, {"n", "coords"});
  const long n = integer(j["n"], path + ".n");
  Vector x = decode_array(j["coords"], path + ".coords");
  if (n < 1 || x.size() != n + 2) fail(path + ".coords", "expected " + std::to_string(n + 2) + " entries");
  return x;
}

json encode_matrix(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(encode_array(m.row(i).transpose()));
  return {{"rows", rows}};
}

Matrix decode_matrix(const json& j, const std::string& path) {
  expect_fields(j, path, {"rows"});
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.empty()) fail(path + ".rows", "expected a non-empty array of rows");
  const std::size_t cols = rows[0].is_array() ? rows[0].size() : 0;
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = path + ".rows[" + std::to_string(i) + "]";
    const Vector r = decode_array(rows[i], p);
    if (static_cast<std::size_t>(r.size()) != cols) fail(p, "ragged row");
    m.row(static_cast<Index>(i)) = r.transpose();
  }
  return m;
}

json encode_conformal(const ConformalAdsPointd& c) {
  return {{"theta", finite(c.theta, "theta")}, {"disk", encode_array(c.disk)}};
}

ConformalAdsPointd decode_conformal(const json& j, const std::string& path) {
  expect_fields(j, path, {"theta", "disk"});
  return {number(j["theta"], path + ".theta"), decode_array(j["disk"], path + ".disk")};
}

json encode_einstein(const EinPointd& e) { return {{"theta", finite(e.theta, "theta")}, {"y", encode_array(e.y)}}; }

EinPointd decode_einstein(const json& j, const std::string& path) {
  expect_fields(j, path, {"theta", "y"});
  return {number(j["theta"], path + ".theta"), decode_array(j["y"], path + ".y")};
}

json encode_witness(const PairWitness& w) {
  return {{"pair", json::array({w.i, w.j})}, {"inner", finite(w.inner, "inner")}};
}

PairWitness decode_witness(const json& j, const std::string& path) {
  expect_fields(j, path, {"pair", "inner"});
  const json& p = j["pair"];
  if (!p.is_array() || p.size() != 2) fail(path + ".pair", "expected two indices");
  const long a = integer(p[0], path + ".pair[0]");
  const long b = integer(p[1], path + ".pair[1]");
  if (a < 0 || b < 0) fail(path + ".pair", "negative index");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b), number(j["inner"], path + ".inner")};
}

json encode_limit_set(const AchronalSample& s) {
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back({{"y", encode_array(p.y)}, {"theta", finite(p.theta, "theta")}});
  return {{"n", s.n()}, {"points", pts}};
}

AchronalSample decode_limit_set(const json& j, const std::string& path) {
  expect_fields(j, path, {"n", "points"});
  const long n = integer(j["n"], path + ".n");
  if (n < 1) fail(path + ".n", "must be at least 1");
  const json& pts = j["points"];
  if (!pts.is_array()) fail(path + ".points", "expected an array");
  std::vector<SamplePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = path + ".points[" + std::to_string(i) + "]";
    expect_fields(pts[i], p, {"y", "theta"});
    Vector y = decode_array(pts[i]["y"], p + ".y");
    if (y.size() != n) fail(p + ".y", "expected " + std::to_string(n) + " entries");
    out.push_back({std::move(y), number(pts[i]["theta"], p + ".theta")});
  }
  try {
    return AchronalSample(n, std::move(out));
  } catch (const GeometryError& e) {
    fail(path, e.what());
  }
}

json encode_loxodromic(const LoxodromicDatad& d) {
  return {{"attracting", encode_array(d.attracting)},
          {"repelling", encode_array(d.repelling)},
          {"T", finite(d.translation_length, "T")}};
}

LoxodromicDatad decode_loxodromic(const json& j, const std::string& path) {
  expect_fields(j, path, {"attracting", "repelling", "T"});
  LoxodromicDatad d;
  d.attracting = decode_array(j["attracting"], path + ".attracting");
  d.repelling = decode_array(j["repelling"], path + ".repelling");
  d.translation_length = number(j["T"], path + ".T");
  if (d.attracting.size() != d.repelling.size()) fail(path, "fixed rays differ in size");
  return d;
}

json encode_rep(const FuchsianRep& r) {
  json gens = json::array();
  for (const auto& g : r.generators()) gens.push_back(encode_matrix(g.matrix()));
  return {{"n", r.n()}, {"V", encode_array(r.V())}, {"generators", gens}};
}

FuchsianRep decode_rep(const json& j, const std::string& path) {
  expect_fields(j, path, {"n", "V", "generators"});
  const long n = integer(j["n"], path + ".n");
  if (n < 1) fail(path + ".n", "must be at least 1");
  Vector V = decode_array(j["V"], path + ".V");
  if (V.size() != n + 2) fail(path + ".V", "expected " + std::to_string(n + 2) + " entries");
  const json& gens = j["generators"];
  if (!gens.is_array()) fail(path + ".generators", "expected an array");
  std::vector<Isometryd> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = path + ".generators[" + std::to_string(i) + "]";
    const Matrix m = decode_matrix(gens[i], p);
    if (m.rows() != n + 2 || m.cols() != n + 2) fail(p, "expected a square matrix of size " + std::to_string(n + 2));
    try {
      const double s = m.cwiseAbs().maxCoeff();
      out.push_back(certify_isometry(m, default_tol() * std::max(1.0, s * s)));
    } catch (const GeometryError& e) {
      fail(p, e.what());
    }
  }
  try {
    return FuchsianRep(std::move(V), std::move(out));
  } catch (const GeometryError& e) {
    fail(path, e.what());
  }
}

json encode_ct_summary(const CtEstimate& e) {
  return {{"tau_hat", finite(e.value, "tau_hat")}, {"argmax_dir", encode_array(e.argmax_dir)}};
}

json encode_certificate(const CertificateReport& r) {
  auto opt_pair = [](const std::optional<PairWitness>& w) { return w ? encode_witness(*w) : json(nullptr); };
  json inv = nullptr;
  if (r.invariance_witness)
    inv = {{"generator", r.invariance_witness->generator},
           {"point", r.invariance_witness->point},
           {"deviation", r.invariance_witness->deviation}};
  json probe = nullptr;
  if (r.interior_witness)
    probe = {{"winding", r.interior_witness->winding},
             {"theta", r.interior_witness->theta},
             {"disk", encode_array(r.interior_witness->disk)}};
  return {{"passed", r.passed()},
          {"acausal", {{"ok", r.acausal}, {"witness", opt_pair(r.causality_witness)}}},
          {"graph",
           {{"ok", r.graph},
            {"witness", opt_pair(r.lipschitz_witness)},
            {"coverage_radius", r.coverage_radius},
            {"mesh", r.mesh}}},
          {"nonempty", {{"ok", r.nonempty}, {"witness", opt_pair(r.lightlike_witness)}, {"interior_probe", probe}}},
          {"invariant", {{"ok", r.invariant}, {"witness", inv}, {"max_deviation", r.invariance_deviation}}}};
}

}  // namespace adsgeo::io
