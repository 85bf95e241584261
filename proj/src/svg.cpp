#include "ditopo/svg.hpp"

#include <cstdio>
#include <sstream>

#include "ditopo/errors.hpp"

namespace ditopo {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else if (c == '"')
      out += "&quot;";
    else
      out += c;
  }
  return out;
}

struct Frame {
  Point lo, hi;
  int size, margin;
  bool oneDim;

  std::pair<double, double> map(const Point& p) const {
    auto scale = [&](std::size_t i) {
      double span = (hi[i] - lo[i]).to_double();
      return span == 0 ? 0.5 : (p[i] - lo[i]).to_double() / span;
    };
    double x = margin + scale(0) * size;
    double y = oneDim ? margin + size / 2.0 : margin + (1.0 - scale(1)) * size;
    return {x, y};
  }
};

}  // namespace

std::string render_svg(const ContextedComplex& cx, const std::optional<RectRegion>& region,
                       const std::vector<std::vector<std::string>>& paths, const RenderOptions& opt) {
  const DiComplex& c = cx.space;
  if (c.dimension != 1 && c.dimension != 2) throw UnsupportedError("rendering needs a 1- or 2-dimensional embedding");
  if (c.vertices.empty()) throw UnsupportedError("nothing to render");
  for (const auto& v : c.vertices)
    if (!v.coords) throw UnsupportedError("vertex '" + v.id + "' has no coordinates");

  Frame fr{*c.vertices[0].coords, *c.vertices[0].coords, opt.size, opt.margin, c.dimension == 1};
  for (const auto& v : c.vertices)
    for (std::size_t i = 0; i < c.dimension; ++i) {
      fr.lo[i] = rmin(fr.lo[i], (*v.coords)[i]);
      fr.hi[i] = rmax(fr.hi[i], (*v.coords)[i]);
    }
  if (region) {
    fr.lo = region->outer.lo;
    fr.hi = region->outer.hi;
  }
  int total = opt.size + 2 * opt.margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
     << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (region && c.dimension == 2) {
    for (const auto& b : region->forbidden) {
      auto [x0, y1] = fr.map(b.lo);
      auto [x1, y0] = fr.map(b.hi);
      os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0) << "\" height=\""
         << num(y1 - y0) << "\" fill=\"#bbbbbb\" stroke=\"none\"/>\n";
    }
  }

  for (const auto& e : c.edges) {
    auto [x0, y0] = fr.map(*c.vertices[c.vertex(e.src)].coords);
    auto [x1, y1] = fr.map(*c.vertices[c.vertex(e.dst)].coords);
    bool directed = e.kind == EdgeKind::Directed;
    double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
    os << "<polyline points=\"" << num(x0) << "," << num(y0) << " " << num(mx) << "," << num(my) << " " << num(x1)
       << "," << num(y1) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"" << num(opt.strokeWidth) << "\"";
    if (!directed) os << " stroke-dasharray=\"4,3\"";
    if (directed) os << " marker-mid=\"url(#arrow)\"";
    os << "><title>" << escape(e.id) << "</title></polyline>\n";
  }

  for (std::size_t k = 0; k < paths.size(); ++k) {
    const std::string& colour = opt.classColors.empty() ? std::string("#d62728")
                                                        : opt.classColors[k % opt.classColors.size()];
    if (paths[k].empty()) continue;
    std::ostringstream pts;
    const Edge& first = c.edges[c.edge(paths[k][0])];
    auto [sx, sy] = fr.map(*c.vertices[c.vertex(first.src)].coords);
    pts << num(sx) << "," << num(sy);
    for (const auto& id : paths[k]) {
      const Edge& e = c.edges[c.edge(id)];
      auto [x, y] = fr.map(*c.vertices[c.vertex(e.dst)].coords);
      pts << " " << num(x) << "," << num(y);
    }
    os << "<polyline class=\"dipath\" points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << escape(colour)
       << "\" stroke-opacity=\"0.6\" stroke-width=\"" << num(opt.pathWidth) << "\"><title>class " << k
       << "</title></polyline>\n";
  }

  for (const auto& v : c.vertices) {
    auto [x, y] = fr.map(*v.coords);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"2\" fill=\"#333\"/>\n";
    if (opt.vertexLabels)
      os << "<text x=\"" << num(x + 3) << "\" y=\"" << num(y - 3) << "\" font-size=\"8\">" << escape(v.id)
         << "</text>\n";
  }
  for (const auto& [a, v] : cx.marking) {
    auto [x, y] = fr.map(*c.vertices[c.vertex(v)].coords);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6) << "\" font-size=\"14\" font-style=\"italic\">"
       << escape(a) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const GeoSpace& s, const std::vector<std::vector<std::string>>& paths,
                       const RenderOptions& opt) {
  std::optional<RectRegion> region;
  if (s.pl && s.pl->region) region = s.pl->region;
  return render_svg(s.cx, region, paths, opt);
}

}  // namespace ditopo
