#include "pizza/render/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace pizza {

namespace {

constexpr double kSize = 640, kCenter = kSize / 2, kRadius = 170, kLabel = 235;
constexpr double kStart = -std::numbers::pi / 4;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::fabs(v) < 5e-3 ? 0.0 : v);
  return buf;
}

std::string point(double r, double angle) {
  return fmt(kCenter + r * std::cos(angle)) + "," + fmt(kCenter - r * std::sin(angle));
}

std::string exponent_text(const Exponent& e) { return e.is_infinite() ? "∞" : e.str(); }

std::string sign_text(int s) { return s > 0 ? "+" : s < 0 ? "−" : "0"; }

std::string width_text(const Slice& s) {
  if (!s.mu.is_linear()) return "μ(∞)=" + exponent_text(s.mu.value);
  if (s.Q.is_point()) return "μ(" + exponent_text(s.Q.a) + ")=" + exponent_text(s.beta);
  std::string w = s.mu.str();
  for (std::size_t p = 0; (p = w.find('*', p)) != std::string::npos;) w.replace(p, 1, "·");
  return "μ=" + w;
}

const char* fill(int sign) { return sign > 0 ? "#f4c7b8" : sign < 0 ? "#b8d4f4" : "#dddddd"; }

std::string arc_to(double angle, bool large) {
  return " A " + fmt(kRadius) + " " + fmt(kRadius) + " 0 " + (large ? "1" : "0") + " 0 " + point(kRadius, angle);
}

std::string sector_path(double a0, double a1) {
  if (a1 - a0 >= 2 * std::numbers::pi - 1e-9)
    return "M " + point(kRadius, 0) + arc_to(std::numbers::pi, true) + arc_to(0, true) + " Z";
  return "M " + point(0, 0) + " L " + point(kRadius, a0) + arc_to(a1, a1 - a0 > std::numbers::pi) + " Z";
}

// Horn inside the sector: both sides leave the center tangent to the bisector.
std::string cusp_path(double a0, double a1) {
  double mid = (a0 + a1) / 2, inset = (a1 - a0) * 0.15;
  std::string c = point(kRadius * 0.6, mid);
  return "M " + point(0, 0) + " Q " + c + " " + point(kRadius, a0 + inset) +
         arc_to(a1 - inset, a1 - a0 - 2 * inset > std::numbers::pi) + " Q " + c + " " + point(0, 0) + " Z";
}

}  // namespace

std::string render_svg(const AbstractPizza& h) {
  require_valid(h);
  std::vector<double> weight;
  double total = 0;
  for (const auto& s : h.slices) {
    weight.push_back(1 / exact::to_double(s.beta.value()));
    total += weight.back();
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n"
      << "<circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\"" << fmt(kRadius)
      << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  double a0 = kStart;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Slice& s = h.slices[i];
    double a1 = a0 + 2 * std::numbers::pi * weight[i] / total, mid = (a0 + a1) / 2;
    out << "<g class=\"slice\" data-index=\"" << i << "\">\n"
        << "<path d=\"" << sector_path(a0, a1) << "\" fill=\"" << fill(s.sign)
        << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    if (s.beta > Exponent(1) && h.size() > 1)
      out << "<path class=\"cusp\" d=\"" << cusp_path(a0, a1) << "\" fill=\"#000\" fill-opacity=\"0.08\" "
          << "stroke=\"#333\" stroke-dasharray=\"3 2\"/>\n";
    // Reading direction of Q: counterclockwise across the slice.
    double r = kRadius * 0.8, span = (a1 - a0) * 0.3;
    out << "<path d=\"M " << point(r, mid - span) << " A " << fmt(r) << " " << fmt(r) << " 0 0 0 "
        << point(r, mid + span) << "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>\n";
    std::vector<std::string> lines{"β=" + exponent_text(s.beta),
                                   "Q=[" + exponent_text(s.Q.a) + " → " + exponent_text(s.Q.b) + "]",
                                   "s=" + sign_text(s.sign), width_text(s)};
    double x = kCenter + kLabel * std::cos(mid), y = kCenter - kLabel * std::sin(mid) - 6 * (lines.size() - 1);
    const char* anchor = std::cos(mid) > 0.2 ? "start" : std::cos(mid) < -0.2 ? "end" : "middle";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor << "\">";
    for (std::size_t k = 0; k < lines.size(); ++k)
      out << "<tspan x=\"" << fmt(x) << "\" dy=\"" << (k == 0 ? 0 : 13) << "\">" << lines[k] << "</tspan>";
    out << "</text>\n</g>\n";
    a0 = a1;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pizza
