// Copyright 2026 The planepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace planepack {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

constexpr double kCanvas = 800;
constexpr double kMargin = 40;
constexpr double kLegendLine = 20;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const Packing& p, std::string_view method) {
  const PointSet& s = p.ground();
  const std::size_t n = s.size();
  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& q = s[static_cast<VertexId>(i)];
    if (i == 0) {
      min_x = max_x = q.x;
      min_y = max_y = q.y;
    }
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }
  const double span =
      static_cast<double>(std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto x_of = [&](VertexId v) { return kMargin + (s[v].x - min_x) * scale; };
  // SVG y grows downwards.
  auto y_of = [&](VertexId v) {
    return kCanvas - kMargin - (s[v].y - min_y) * scale;
  };

  const double height = kCanvas + kLegendLine * (p.size() + 1) + 10;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(kCanvas)
     << "\" height=\"" << Num(height) << "\" viewBox=\"0 0 " << Num(kCanvas)
     << " " << Num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t m = 0; m < p.size(); ++m) {
    const char* colour = kPalette[m % kPalette.size()];
    os << "<g stroke=\"" << colour << "\" stroke-width=\"2\">\n";
    for (const EdgeRef& e : p.members()[m].edges) {
      os << "<line x1=\"" << Num(x_of(e.a)) << "\" y1=\"" << Num(y_of(e.a))
         << "\" x2=\"" << Num(x_of(e.b)) << "\" y2=\"" << Num(y_of(e.b))
         << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">\n";
  for (VertexId v = 0; v < n; ++v) {
    os << "<circle cx=\"" << Num(x_of(v)) << "\" cy=\"" << Num(y_of(v))
       << "\" r=\"8\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<text x=\"" << Num(x_of(v)) << "\" y=\"" << Num(y_of(v) + 3)
       << "\">" << v << "</text>\n";
  }
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"14\">\n";
  double y = kCanvas + kLegendLine;
  os << "<text x=\"" << Num(kMargin) << "\" y=\"" << Num(y)
     << "\">method: " << Escape(method) << "</text>\n";
  for (std::size_t m = 0; m < p.size(); ++m) {
    y += kLegendLine;
    os << "<rect x=\"" << Num(kMargin) << "\" y=\"" << Num(y - 11)
       << "\" width=\"24\" height=\"12\" fill=\""
       << kPalette[m % kPalette.size()] << "\"/>\n";
    os << "<text x=\"" << Num(kMargin + 32) << "\" y=\"" << Num(y)
       << "\">member " << m << " (" << KindName(p.members()[m].kind)
       << ")</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace planepack
