#include "adsgeo/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace adsgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPanelW = 360, kPanelH = 360, kMargin = 40;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Panel {
  double x0, y0;          // top-left corner in the SVG
  double a_min, a_max;    // horizontal data range
  double t_min, t_max;    // vertical data range (theta)
  double px(double a) const { return x0 + (a - a_min) / (a_max - a_min) * kPanelW; }
  double py(double t) const { return y0 + (t_max - t) / (t_max - t_min) * kPanelH; }
};

std::string polyline(const Panel& p, const std::vector<double>& a, const std::vector<double>& t,
                     const char* stroke) {
  std::string pts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) pts += ' ';
    pts += fmt(p.px(a[i])) + "," + fmt(p.py(t[i]));
  }
  return "<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"1.5\" points=\"" + pts +
         "\"/>\n";
}

std::string band(const Panel& p, const std::vector<double>& a, const std::vector<double>& lo,
                 const std::vector<double>& hi) {
  std::string pts;
  for (std::size_t i = 0; i < a.size(); ++i) pts += fmt(p.px(a[i])) + "," + fmt(p.py(hi[i])) + " ";
  for (std::size_t i = a.size(); i-- > 0;) pts += fmt(p.px(a[i])) + "," + fmt(p.py(lo[i])) + " ";
  pts.pop_back();
  return "<polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\" points=\"" + pts + "\"/>\n";
}

std::string frame(const Panel& p, const std::string& title, const std::string& xlabel) {
  std::ostringstream s;
  s << "<rect x=\"" << fmt(p.x0) << "\" y=\"" << fmt(p.y0) << "\" width=\"" << fmt(kPanelW) << "\" height=\""
    << fmt(kPanelH) << "\" fill=\"white\" stroke=\"black\"/>\n";
  s << "<text x=\"" << fmt(p.x0 + kPanelW / 2) << "\" y=\"" << fmt(p.y0 - 12)
    << "\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n";
  s << "<text x=\"" << fmt(p.x0 + kPanelW / 2) << "\" y=\"" << fmt(p.y0 + kPanelH + 24)
    << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << "</text>\n";
  for (double t : {p.t_min, 0.0, p.t_max})
    s << "<text x=\"" << fmt(p.x0 - 6) << "\" y=\"" << fmt(p.py(t) + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
      << fmt(t) << "</text>\n";
  s << "<line x1=\"" << fmt(p.x0) << "\" y1=\"" << fmt(p.py(0)) << "\" x2=\"" << fmt(p.x0 + kPanelW) << "\" y2=\""
    << fmt(p.py(0)) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  return s.str();
}

}  // namespace

std::string render_domain_svg(const AchronalSample& lambda, double meridian_angle, int samples) {
  if (lambda.n() != 2) throw GeometryError(ErrorCode::InvalidInput, "SVG output supports n = 2 only");
  if (samples < 2) throw GeometryError(ErrorCode::InvalidInput, "need at least two samples per curve");

  double tmin = lambda[0].theta, tmax = lambda[0].theta;
  for (const auto& p : lambda.points()) {
    tmin = std::min(tmin, p.theta);
    tmax = std::max(tmax, p.theta);
  }
  const double lo = std::floor((tmin - kPi / 2) * 4) / 4;
  const double hi = std::ceil((tmax + kPi / 2) * 4) / 4;

  // Meridian slice: x(r) = (cos r, sin r w) for r in [-pi/2, pi/2].
  const Panel left{kMargin + 20, kMargin + 10, -kPi / 2, kPi / 2, lo, hi};
  const double c = std::cos(meridian_angle), s = std::sin(meridian_angle);
  std::vector<double> ra, rlo, rhi;
  for (int k = 0; k < samples; ++k) {
    const double r = -kPi / 2 + kPi * k / (samples - 1);
    Vector x(3);
    x << std::cos(r), std::sin(r) * c, std::sin(r) * s;
    const Envelope e = envelope(lambda, x);
    ra.push_back(r);
    rlo.push_back(e.fminus);
    rhi.push_back(std::max(e.fminus, e.fplus));
  }

  // Boundary: (0, cos phi, sin phi).
  const Panel right{left.x0 + kPanelW + 2 * kMargin, left.y0, 0.0, 2 * kPi, lo, hi};
  std::vector<double> pa, plo, phi_hi;
  for (int k = 0; k < samples; ++k) {
    const double phi = 2 * kPi * k / (samples - 1);
    Vector x(3);
    x << 0.0, std::cos(phi), std::sin(phi);
    const Envelope e = envelope(lambda, x);
    pa.push_back(phi);
    plo.push_back(e.fminus);
    phi_hi.push_back(std::max(e.fminus, e.fplus));
  }

  std::ostringstream out;
  const double width = right.x0 + kPanelW + kMargin;
  const double height = left.y0 + kPanelH + kMargin + 10;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << frame(left, "meridian slice, angle " + fmt(meridian_angle), "signed polar angle r");
  out << band(left, ra, rlo, rhi) << polyline(left, ra, rlo, "#08519c") << polyline(left, ra, rhi, "#a50f15");
  out << frame(right, "boundary (phi, theta)", "phi");
  out << band(right, pa, plo, phi_hi) << polyline(right, pa, plo, "#08519c") << polyline(right, pa, phi_hi, "#a50f15");
  for (const auto& p : lambda.points()) {
    double phi = std::atan2(p.y(1), p.y(0));
    if (phi < 0) phi += 2 * kPi;
    out << "<circle cx=\"" << fmt(right.px(phi)) << "\" cy=\"" << fmt(right.py(p.theta))
        << "\" r=\"2.5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace adsgeo
