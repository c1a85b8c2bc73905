#include "adsgeo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "adsgeo/io.hpp"
#include "adsgeo/sampling.hpp"
#include "adsgeo/svg.hpp"

namespace adsgeo {

namespace {

using io::json;

struct Options {
  int n = 2;
  std::uint64_t seed = 1;
  int samples = 100;
  double tol = 0;  // 0: keep the environment/default value
  int grid = 32;
  double t = 1.0;
  bool minus = false;
  std::string limit_set;
  std::string rep;
  std::string out;
  std::string summary;
  std::string decay_out;
  std::string svg;
  std::string witness;
};

// Fixed-format numbers so that tables are byte-identical across runs.
std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Sink {
  std::ostream& fallback;
  std::ofstream file;
  explicit Sink(std::ostream& out, const std::string& path) : fallback(out) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw io::FormatError(path + ": cannot write");
    }
  }
  std::ostream& stream() { return file.is_open() ? static_cast<std::ostream&>(file) : fallback; }
};

void emit_json(std::ostream& out, const std::string& path, const json& j) {
  if (path.empty())
    out << io::dump(j);
  else
    io::write_file(path, j);
}

int finish(bool ok, const Options& o, const std::string& command, const json& witness, std::ostream& err) {
  if (ok) return kExitOk;
  const std::string path = o.witness.empty() ? command + "_witness.json" : o.witness;
  io::write_file(path, witness);
  err << command << ": checks failed, witness written to " << path << "\n";
  return kExitCheckFailed;
}

// Models: random AdS points through the conformal model and random boundary
// points through null rays.
int cmd_roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
  Rng rng(o.seed);
  Sink sink(out, o.out);
  auto& csv = sink.stream();
  csv << "sample,ads_residual,boundary_residual\n";
  double worst = 0;
  json failures = json::array();
  for (int k = 0; k < o.samples; ++k) {
    const AdsPointd p = random_ads_point(o.n, rng);
    const AdsPointd back = conformal_to_ads(ads_to_conformal(p));
    const double r1 = (back.coords() - p.coords()).norm() / std::max(1.0, p.coords().norm());
    EinPointd e{std::numbers::pi * (2.0 * std::uniform_real_distribution<double>(0, 1)(rng) - 1.0),
                random_unit(o.n, rng)};
    const EinPointd eb = null_ray_to_einstein(RayPointd(einstein_to_null(e)));
    const double r2 = std::max(std::abs(wrap_angle(eb.theta - e.theta)), (eb.y - e.y).norm());
    csv << k << "," << num(r1) << "," << num(r2) << "\n";
    worst = std::max({worst, r1, r2});
    if (std::max(r1, r2) > default_tol()) failures.push_back({{"sample", k}, {"point", io::encode_array(p.coords())}});
  }
  return finish(worst <= default_tol(), o, "roundtrip", {{"failures", failures}}, err);
}

int cmd_causality(const Options& o, std::ostream& out, std::ostream& err) {
  const AchronalSample lambda = io::decode_limit_set(io::read_file(o.limit_set));
  const SetClassification c = set_causal_class(lambda.null_rays());
  json report = {{"class", to_string(c.value)},
                 {"witness", c.witness ? io::encode_witness(*c.witness) : json(nullptr)}};
  emit_json(out, o.out, report);
  return finish(c.value == SetCausalClass::Acausal, o, "causality-class", report, err);
}

std::vector<Vector> hemisphere_grid(Index n, int grid) {
  std::vector<Vector> pts{Vector::Unit(n + 1, 0)};
  for (auto& x : quasi_uniform_sphere(n + 1, static_cast<std::size_t>(2 * grid)))
    if (x(0) > 1e-3) pts.push_back(std::move(x));
  return pts;
}

int cmd_domain(const Options& o, std::ostream& out, std::ostream& err) {
  const AchronalSample lambda = io::decode_limit_set(io::read_file(o.limit_set));
  const Index n = lambda.n();
  const bool empty = is_pure_lightlike(lambda);
  Sink sink(out, o.out);
  auto& csv = sink.stream();
  csv << "theta";
  for (Index i = 0; i <= n; ++i) csv << ",disk_" << i;
  csv << ",fminus,fplus,verdict\n";

  double max_width = 0;
  json disagreements = json::array();
  json convexity_failures = json::array();
  std::vector<AdsPointd> inside_points;
  for (const Vector& x : hemisphere_grid(n, o.grid)) {
    const Envelope env = envelope(lambda, x);
    max_width = std::max(max_width, env.width());
    for (int j = 0; j < o.grid; ++j) {
      const double theta = env.fminus - 0.25 + (std::max(env.width(), 0.0) + 0.5) * (j + 0.5) / o.grid;
      const UniversalPointd u = make_universal(theta, Vector(x));
      const DomainProbe probe{u.winding, u.theta, x};
      const Verdict v = contains(lambda, probe);
      csv << num(theta);
      for (Index i = 0; i <= n; ++i) csv << "," << num(x(i));
      csv << "," << num(env.fminus) << "," << num(env.fplus) << "," << to_string(v) << "\n";
      if (empty) continue;
      const AdsPointd p = conformal_to_ads(ConformalAdsPointd{u.theta, x});
      const Verdict lifted = contains(lambda, lift_probe(lambda, p));
      const Verdict klein = klein_verdict(lambda, ray(p.coords()));
      if (lifted != Verdict::Boundary && klein != Verdict::Boundary && lifted != klein)
        disagreements.push_back({{"theta", theta}, {"disk", io::encode_array(x)}});
      if (klein == Verdict::Inside) inside_points.push_back(p);
    }
  }
  // Convexity along spacelike chords between successive interior probes.
  for (std::size_t i = 1; i < inside_points.size(); i += 7) {
    const auto& a = inside_points[i - 1];
    const auto& b = inside_points[i];
    if (!(inner(a.coords(), b.coords()) < -1.0 - 1e-6)) continue;
    if (!convexity_probe(lambda, a, b, 16))
      convexity_failures.push_back({{"a", io::encode_array(a.coords())}, {"b", io::encode_array(b.coords())}});
  }
  if (!o.svg.empty()) {
    std::ofstream svg(o.svg, std::ios::binary);
    if (!svg) throw io::FormatError(o.svg + ": cannot write");
    svg << render_domain_svg(lambda);
  }
  const bool ok = max_width <= std::numbers::pi + 1e-9 && disagreements.empty() && convexity_failures.empty();
  return finish(ok, o, "domain",
                {{"max_width", max_width}, {"disagreements", disagreements}, {"convexity", convexity_failures}}, err);
}

int cmd_cosmotime(const Options& o, std::ostream& out, std::ostream& err) {
  const AchronalSample lambda = io::decode_limit_set(io::read_file(o.limit_set));
  if (is_pure_lightlike(lambda)) throw GeometryError(ErrorCode::PureLightlike, "the invisible domain is empty");
  const Index n = lambda.n();
  // Probe point: the middle of the band above the centre of the disk.
  const Vector pole = Vector::Unit(n + 1, 0);
  const Envelope env = envelope(lambda, pole);
  const AdsPointd p = conformal_to_ads(ConformalAdsPointd{wrap_angle(0.5 * (env.fminus + env.fplus)), pole});
  const auto dirs = timelike_direction_grid(p, static_cast<std::size_t>(o.samples), o.seed);
  const CtEstimate est = cosmological_time_estimate(p, lambda, dirs);

  Sink sink(out, o.out);
  auto& csv = sink.stream();
  csv << "probe_index";
  for (Index i = 0; i < n + 2; ++i) csv << ",direction_" << i;
  csv << ",exit_length\n";
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    csv << k;
    for (Index i = 0; i < n + 2; ++i) csv << "," << num(dirs[k](i));
    csv << "," << num(est.lengths[k]) << "\n";
  }

  const DecayTrace trace = past_decay_trace(lambda, p, est.argmax_dir, 1e-3, 16, 64, o.seed);
  bool monotone = true;
  for (std::size_t k = 1; k < trace.estimates.size(); ++k)
    if (trace.estimates[k] > trace.estimates[k - 1] + 1e-9) monotone = false;
  if (!o.decay_out.empty()) {
    std::ofstream d(o.decay_out, std::ios::binary);
    if (!d) throw io::FormatError(o.decay_out + ": cannot write");
    d << "sigma,estimate\n";
    for (std::size_t k = 0; k < trace.params.size(); ++k)
      d << num(trace.params[k]) << "," << num(trace.estimates[k]) << "\n";
  }
  json summary = io::encode_ct_summary(est);
  if (o.summary.empty())
    err << io::dump(summary);
  else
    io::write_file(o.summary, summary);

  const bool bounded = est.value > 0 && est.value <= std::numbers::pi + 1e-9;
  const bool decays = trace.estimates.back() <= 1e-2 && monotone;
  json witness = summary;
  witness["bounded"] = bounded;
  witness["decay_final"] = trace.estimates.back();
  witness["decay_monotone"] = monotone;
  return finish(bounded && decays, o, "cosmotime", witness, err);
}

int cmd_expansion(const Options& o, std::ostream& out, std::ostream& err) {
  Rng rng(o.seed);
  const Vector V = default_fixed_point(o.n);
  const Endpoint side = o.minus ? Endpoint::Minus : Endpoint::Plus;
  const double expected = std::exp((o.minus ? -2.0 : 2.0) * o.t);
  Sink sink(out, o.out);
  auto& csv = sink.stream();
  csv << "sample,t,ratio,expected,rel_error\n";
  json failures = json::array();
  for (int k = 0; k < o.samples; ++k) {
    const UnitSpacelikeTangentd w0 = random_fuchsian_tangent(V, rng);
    const Vector wtan = random_cone_tangent(w0, rng, side);
    const double ratio = expansion_ratio(w0, V, o.t, wtan, side);
    const double rel = std::abs(ratio - expected) / expected;
    csv << k << "," << num(o.t) << "," << num(ratio) << "," << num(expected) << "," << num(rel) << "\n";
    if (!(rel <= 1e-8)) failures.push_back({{"sample", k}, {"ratio", ratio}});
  }
  return finish(failures.empty(), o, "expansion", {{"failures", failures}}, err);
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const FuchsianRep rep = io::decode_rep(io::read_file(o.rep));
  const AchronalSample lambda = o.limit_set.empty()
                                    ? fuchsian_limit_set(rep, static_cast<std::size_t>(o.samples))
                                    : io::decode_limit_set(io::read_file(o.limit_set));
  if (lambda.n() != rep.n()) throw io::FormatError("limit set and representation dimensions differ");
  const CertificateReport report = quasi_fuchsian_certificate(rep, lambda);
  json j = io::encode_certificate(report);
  bool growth_ok = true;
  json growth = json::array();
  for (std::size_t g = 0; g < rep.generators().size(); ++g) {
    try {
      const GrowthCertificate c = growth_certificate(rep.generators()[g], rep.V(), 5, o.seed);
      growth.push_back({{"generator", g}, {"a", c.a}, {"b", c.b}, {"ok", c.passed}});
      growth_ok = growth_ok && c.passed;
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::NotLoxodromic) throw;
      growth.push_back({{"generator", g}, {"loxodromic", false}});
    }
  }
  j["growth"] = growth;
  j["passed"] = report.passed() && growth_ok;
  emit_json(out, o.out, j);
  return finish(report.passed() && growth_ok, o, "certify", j, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical experiments on anti-de Sitter spacetimes and their boundaries", "adsgeo"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--n", o.n, "Dimension parameter n of AdS_{n+1}")->check(CLI::Range(1, 15));
  app.add_option("--seed", o.seed, "Seed of all random draws");
  app.add_option("--samples", o.samples, "Number of samples, directions or limit points")->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol, "Tolerance for exact identities (overrides ADSGEO_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--grid", o.grid, "Probe grid resolution")->check(CLI::Range(2, 4096));
  app.add_option("--limit-set", o.limit_set, "Limit set JSON");
  app.add_option("--rep", o.rep, "Representation JSON");
  app.add_option("--out", o.out, "Output table or report (default: standard output)");
  app.add_option("--witness", o.witness, "Witness file written on failure");

  auto* roundtrip = app.add_subcommand("roundtrip", "Conformal and boundary model round trips");
  auto* causality = app.add_subcommand("causality-class", "Causal classification of a limit set");
  auto* domain = app.add_subcommand("domain", "Envelopes, membership and convexity over a probe grid");
  domain->add_option("--svg", o.svg, "SVG picture (n = 2)");
  auto* cosmo = app.add_subcommand("cosmotime", "Cosmological time estimate and decay probe");
  cosmo->add_option("--summary", o.summary, "Summary JSON (default: standard error)");
  cosmo->add_option("--decay-out", o.decay_out, "Decay trace CSV");
  auto* expansion = app.add_subcommand("expansion", "Expansion law of the boundary metrics");
  expansion->add_option("--t", o.t, "Flow time");
  expansion->add_flag("--minus", o.minus, "Use the contracting endpoint x - v");
  auto* certify = app.add_subcommand("certify", "Quasi-Fuchsian certificate of a representation");
  for (auto* sub : {roundtrip, causality, domain, cosmo, expansion, certify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitBadInput;
  }

  Tolerances tol = tolerances_from_env();
  if (o.tol > 0) tol.exact = o.tol;
  set_tolerances(tol);

  auto require = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw io::FormatError(std::string("missing required flag ") + flag);
  };
  try {
    if (*roundtrip) return cmd_roundtrip(o, out, err);
    if (*causality) return require(o.limit_set, "--limit-set"), cmd_causality(o, out, err);
    if (*domain) return require(o.limit_set, "--limit-set"), cmd_domain(o, out, err);
    if (*cosmo) return require(o.limit_set, "--limit-set"), cmd_cosmotime(o, out, err);
    if (*expansion) return cmd_expansion(o, out, err);
    if (*certify) return require(o.rep, "--rep"), cmd_certify(o, out, err);
  } catch (const io::FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GeometryError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace adsgeo
