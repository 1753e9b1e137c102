// Copyright 2026 The severi-census Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "severi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "severi/errors.hpp"

namespace severi {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Box {
  double x0, y0, x1, y1;
};

// Maps math coordinates into a panel with y pointing up.
struct Panel {
  Box box;
  double scale, left, top;

  double px(double x) const { return left + (x - box.x0) * scale; }
  double py(double y) const { return top + (box.y1 - y) * scale; }
};

void lattice_panel(std::ostringstream& out, const Triangulation& tri, std::int64_t& width,
                   std::int64_t& height) {
  const auto& vs = tri.polygon.vertices();
  std::int64_t x0 = vs[0].x, x1 = vs[0].x, y0 = vs[0].y, y1 = vs[0].y;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  // Integer pixel coordinates: (x - x0 + 1) * S, (y1 - y + 1) * S.
  auto X = [&](std::int64_t x) { return (x - x0 + 1) * kSvgScale; };
  auto Y = [&](std::int64_t y) { return (y1 - y + 1) * kSvgScale; };
  width = (x1 - x0 + 2) * kSvgScale;
  height = (y1 - y0 + 2) * kSvgScale;

  for (const auto& t : tri.triangles) {
    out << "  <path class=\"triangle\" d=\"M " << X(tri.vertices[t[0]].x) << ' ' << Y(tri.vertices[t[0]].y);
    for (int i = 1; i < 3; ++i) out << " L " << X(tri.vertices[t[i]].x) << ' ' << Y(tri.vertices[t[i]].y);
    out << " Z\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"1\"/>\n";
  }
  out << "  <path class=\"polygon\" d=\"M " << X(vs[0].x) << ' ' << Y(vs[0].y);
  for (std::size_t i = 1; i < vs.size(); ++i) out << " L " << X(vs[i].x) << ' ' << Y(vs[i].y);
  out << " Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  for (const auto& p : lattice_points(tri.polygon, Region::All)) {
    if (!contains(tri.lattice, p)) continue;
    out << "  <circle class=\"lattice-point\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
        << "\" r=\"3\" fill=\"#000\"/>\n";
  }
}

void curve_panel(std::ostringstream& out, const TropicalCurve& curve, double left, double size) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : curve.vertices) pts.emplace_back(v.x.get_d(), v.y.get_d());
  Box box{0, 0, 1, 1};
  if (!pts.empty()) {
    box = {pts[0].first, pts[0].second, pts[0].first, pts[0].second};
    for (const auto& [x, y] : pts) {
      box.x0 = std::min(box.x0, x);
      box.x1 = std::max(box.x1, x);
      box.y0 = std::min(box.y0, y);
      box.y1 = std::max(box.y1, y);
    }
  }
  const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  const double margin = 0.25 * span;
  box = {box.x0 - margin, box.y0 - margin, box.x0 + span + margin, box.y0 + span + margin};
  const Panel panel{box, size / (span + 2 * margin), left, 0.0};
  const double leg = 0.2 * span;

  for (const auto& e : curve.edges)
    out << "  <line class=\"dual-edge\" x1=\"" << num(panel.px(pts[e.from].first)) << "\" y1=\""
        << num(panel.py(pts[e.from].second)) << "\" x2=\"" << num(panel.px(pts[e.to].first))
        << "\" y2=\"" << num(panel.py(pts[e.to].second)) << "\" stroke=\"#b03a2e\" stroke-width=\""
        << e.weight << "\"/>\n";
  for (const auto& l : curve.legs) {
    const double nx = static_cast<double>(l.slope.x), ny = static_cast<double>(l.slope.y);
    const double len = std::hypot(nx, ny);
    const auto [x, y] = pts[l.from];
    out << "  <line class=\"dual-leg\" x1=\"" << num(panel.px(x)) << "\" y1=\"" << num(panel.py(y))
        << "\" x2=\"" << num(panel.px(x + leg * nx / len)) << "\" y2=\""
        << num(panel.py(y + leg * ny / len)) << "\" stroke=\"#b03a2e\" stroke-dasharray=\"4 2\"/>\n";
  }
  for (const auto& [x, y] : pts)
    out << "  <circle class=\"dual-vertex\" cx=\"" << num(panel.px(x)) << "\" cy=\"" << num(panel.py(y))
        << "\" r=\"3\" fill=\"#b03a2e\"/>\n";
}

void amoeba_panel(std::ostringstream& out, const std::vector<AmoebaPoint>& cloud, double size) {
  Box box{-2.5, -2.5, 2.5, 2.5};
  for (const auto& p : cloud) {
    box.x0 = std::min(box.x0, p.u - 0.5);
    box.x1 = std::max(box.x1, p.u + 0.5);
    box.y0 = std::min(box.y0, p.v - 0.5);
    box.y1 = std::max(box.y1, p.v + 0.5);
  }
  const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const Panel panel{box, size / span, 0.0, 0.0};
  out << "  <line class=\"axis\" x1=\"" << num(panel.px(box.x0)) << "\" y1=\"" << num(panel.py(0))
      << "\" x2=\"" << num(panel.px(box.x1)) << "\" y2=\"" << num(panel.py(0)) << "\" stroke=\"#888\"/>\n";
  out << "  <line class=\"axis\" x1=\"" << num(panel.px(0)) << "\" y1=\"" << num(panel.py(box.y0))
      << "\" x2=\"" << num(panel.px(0)) << "\" y2=\"" << num(panel.py(box.y1)) << "\" stroke=\"#888\"/>\n";
  for (const auto& p : cloud)
    out << "  <circle class=\"amoeba-point\" cx=\"" << num(panel.px(p.u)) << "\" cy=\""
        << num(panel.py(p.v)) << "\" r=\"1.5\" fill=\"#2e7d32\"/>\n";
}

}  // namespace

std::string render_svg(const Figure& figure) {
  std::ostringstream body;
  std::int64_t width = 0, height = 0;
  if (figure.triangulation) {
    lattice_panel(body, *figure.triangulation, width, height);
    if (figure.curve) {
      const std::int64_t size = height;
      curve_panel(body, *figure.curve, static_cast<double>(width), static_cast<double>(size));
      width += size;
    }
  } else if (figure.curve) {
    width = height = 400;
    curve_panel(body, *figure.curve, 0.0, 400.0);
  }
  if (figure.amoeba) {
    const std::int64_t size = 400;
    std::ostringstream cloud;
    amoeba_panel(cloud, *figure.amoeba, static_cast<double>(size));
    // The amoeba gets its own figure when nothing else is drawn; otherwise it
    // is stacked below.
    body << "  <g transform=\"translate(0 " << height << ")\">\n" << cloud.str() << "  </g>\n";
    height += size;
    width = std::max(width, size);
  }
  if (width == 0) width = height = kSvgScale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-scale=\"" << kSvgScale << "\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

void emit_svg(const Figure& figure, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << render_svg(figure);
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

}  // namespace severi
