#include "simplewedge/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace swedge {
namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Box {
  Rational x0, y0, x1, y1;

  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

// Endpoints of the chord cut by the box from a*x + b*y + c = 0, computed
// exactly.  The line passes through configuration points inside the box,
// so at least two boundary hits exist.
std::pair<Point, Point> chord(const LineKey& key, const Box& box) {
  const Rational a(key.a()), b(key.b()), c(key.c());
  std::vector<Point> hits;
  if (!b.is_zero()) {
    for (const Rational* x : {&box.x0, &box.x1}) {
      Point p{*x, -(a * *x + c) / b};
      if (box.contains(p)) hits.push_back(p);
    }
  }
  if (!a.is_zero()) {
    for (const Rational* y : {&box.y0, &box.y1}) {
      Point p{-(b * *y + c) / a, *y};
      if (box.contains(p)) hits.push_back(p);
    }
  }
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
  return {*lo, *hi};
}

}  // namespace

std::string render_svg(const Configuration& config, const AnalysisReport& report) {
  const auto& pts = config.points();
  Box box{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    box.x0 = std::min(box.x0, p.x);
    box.x1 = std::max(box.x1, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.y1 = std::max(box.y1, p.y);
  }
  const Rational pad_x = (box.x1 - box.x0) / Rational(20);
  const Rational pad_y = (box.y1 - box.y0) / Rational(20);
  box.x0 -= pad_x;
  box.x1 += pad_x;
  box.y0 -= pad_y;
  box.y1 += pad_y;

  const double width = (box.x1 - box.x0).to_double();
  const double height = (box.y1 - box.y0).to_double();
  const double scale = std::max(width, height);
  const double stroke = scale / 400.0;
  const double radius = scale / 100.0;

  std::set<LineKey> simple;
  for (const auto& s : report.simple_lines) simple.insert(s.key);
  std::set<std::size_t> apexes;
  for (const auto& w : report.wedges) apexes.insert(w.apex);

  std::ostringstream out;
  // SVG y grows downwards, so the drawing uses -y throughout.
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.x0.to_double()) << ' '
      << num((-box.y1).to_double()) << ' ' << num(width) << ' ' << num(height) << "\">\n"
      << "<style>.ln{stroke:#999;stroke-width:" << num(stroke)
      << "}.simple{stroke:#d33}.pt{fill:#222}.apex{fill:#d33}</style>\n";

  for (const auto& line : config.incidence().lines()) {
    auto [p, q] = chord(line.key, box);
    out << "<line class=\"ln" << (simple.count(line.key) ? " simple" : "") << "\" x1=\""
        << num(p.x.to_double()) << "\" y1=\"" << num((-p.y).to_double()) << "\" x2=\""
        << num(q.x.to_double()) << "\" y2=\"" << num((-q.y).to_double()) << "\"/>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << "<circle class=\"pt" << (apexes.count(i) ? " apex" : "") << "\" id=\"p" << i
        << "\" cx=\"" << num(pts[i].x.to_double()) << "\" cy=\""
        << num((-pts[i].y).to_double()) << "\" r=\"" << num(radius) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace swedge
