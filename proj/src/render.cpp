#include "tsurf/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tsurf/contacts.hpp"

namespace tsurf {

namespace {

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
const char* const kDashes[] = {"none", "6,3", "2,2", "8,2,2,2"};
const char* const kFills[] = {"#f4a6a6", "#f9c98a", "#a6c8f4", "#b5e3a6", "#d9b8f0", "#f0e0a0"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

class Canvas {
 public:
  Canvas(PlanarPoint lo, PlanarPoint hi, double width) : lo_(lo), hi_(hi) {
    const double w = std::max(hi.x - lo.x, 1e-9);
    const double h = std::max(hi.y - lo.y, 1e-9);
    scale_ = width / w;
    width_ = width;
    height_ = h * scale_;
  }
  double x(PlanarPoint p) const { return (p.x - lo_.x) * scale_; }
  double y(PlanarPoint p) const { return (hi_.y - p.y) * scale_; }
  std::string xy(PlanarPoint p) const { return num(x(p)) + "," + num(y(p)); }
  double len(double l) const { return l * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }

 private:
  PlanarPoint lo_, hi_;
  double scale_ = 1.0, width_ = 0.0, height_ = 0.0;
};

void piece_path(std::ostringstream& out, const Canvas& cv, const Surface& s, const DiskPiece& p,
                const char* fill) {
  const bool whole = p.entry_edge < 0 && p.sweep >= kTwoPi - 1e-12;
  if (whole) {
    bool inside = true;
    for (int k = 0; k < 64 && inside; ++k) {
      const RayExit e = trace_exit(s, p.polygon, p.center, kTwoPi * k / 64, 0.0, -1, 1e-12);
      inside = e.t >= p.radius;
    }
    if (inside) {
      out << "<circle class=\"disk\" cx=\"" << num(cv.x(p.center)) << "\" cy=\"" << num(cv.y(p.center))
          << "\" r=\"" << num(cv.len(p.radius)) << "\" fill=\"" << fill << "\" stroke=\"#444444\" stroke-width=\"0.600000\"/>\n";
      return;
    }
  }
  const int steps = std::max(4, static_cast<int>(std::ceil(p.sweep / (kPi / 90))));
  std::vector<PlanarPoint> outer, inner;
  for (int k = 0; k <= steps; ++k) {
    const double theta = p.start + p.sweep * k / steps;
    const Vec2 u = unit(theta);
    double near = 0.0;
    if (p.entry_edge >= 0) {
      const EdgeRef e{p.polygon, p.entry_edge};
      if (const auto t = ray_line(p.center, u, s.edge_start(e), s.edge_end(e))) near = *t;
    }
    const RayExit ex = trace_exit(s, p.polygon, p.center, theta, near, p.entry_edge, 1e-12);
    const double far = std::max(near, std::min(p.radius, ex.t));
    inner.push_back(p.center + u * near);
    outer.push_back(p.center + u * far);
  }
  out << "<path class=\"sector\" d=\"M" << cv.xy(inner.front());
  for (const auto& q : outer) out << " L" << cv.xy(q);
  for (auto it = inner.rbegin(); it != inner.rend(); ++it) out << " L" << cv.xy(*it);
  out << " Z\" fill=\"" << fill << "\" stroke=\"#444444\" stroke-width=\"0.600000\"/>\n";
}

}  // namespace

std::string render_svg(const SurfaceSpec& spec, const Packing* packing, const RenderOptions& opt) {
  const Surface own(spec, opt.tol);
  const Surface& s = packing ? *packing->surface : own;

  PlanarPoint lo = s.vertex(0, 0), hi = lo;
  for (int p = 0; p < s.polygon_count(); ++p)
    for (const auto& v : s.vertices(p)) {
      lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
      hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
    }
  const double pad = 0.05 * std::max(hi.x - lo.x, hi.y - lo.y);
  lo -= Vec2{pad, pad};
  hi += Vec2{pad, pad};
  const Canvas cv(lo, hi, opt.width);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(cv.width())
      << "\" height=\"" << num(cv.height()) << "\" viewBox=\"0 0 " << num(cv.width()) << " "
      << num(cv.height()) << "\">\n";

  out << "<g class=\"polygons\">\n";
  for (int p = 0; p < s.polygon_count(); ++p) {
    out << "<path class=\"polygon\" d=\"";
    for (int v = 0; v < s.size(p); ++v) out << (v == 0 ? "M" : " L") << cv.xy(s.vertex(p, v));
    out << " Z\" fill=\"#fafafa\" stroke=\"none\"/>\n";
  }
  out << "</g>\n";

  if (packing) {
    out << "<g class=\"circles\">\n";
    for (const auto& c : packing->circles) {
      const char* fill = kFills[static_cast<size_t>(c.id) % std::size(kFills)];
      out << "<g class=\"circle\" id=\"circle-" << c.id << "\" fill-opacity=\"0.700000\">\n";
      for (const auto& piece : develop_circle(s, c).pieces) piece_path(out, cv, s, piece, fill);
      out << "</g>\n";
    }
    out << "</g>\n";
  }

  out << "<g class=\"edges\">\n";
  const auto& pairings = s.spec().pairings;
  for (size_t k = 0; k < pairings.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    const char* dash = kDashes[(k / std::size(kPalette)) % std::size(kDashes)];
    for (const EdgeRef e : {pairings[k].a, pairings[k].b}) {
      const PlanarPoint a = s.edge_start(e), b = s.edge_end(e);
      out << "<line class=\"edge pair-" << k << "\" x1=\"" << num(cv.x(a)) << "\" y1=\"" << num(cv.y(a))
          << "\" x2=\"" << num(cv.x(b)) << "\" y2=\"" << num(cv.y(b)) << "\" stroke=\"" << color
          << "\" stroke-width=\"2.000000\"";
      if (std::string(dash) != "none") out << " stroke-dasharray=\"" << dash << "\"";
      out << "/>\n";
    }
  }
  out << "</g>\n";

  if (packing && opt.tangencies) {
    out << "<g class=\"tangencies\">\n";
    for (const auto& t : find_tangencies(*packing, opt.tol)) {
      const SurfacePoint at = s.presentations(t.location).front();
      out << "<circle class=\"tangency\" cx=\"" << num(cv.x(at.position)) << "\" cy=\""
          << num(cv.y(at.position)) << "\" r=\"3.000000\" fill=\"#000000\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tsurf
