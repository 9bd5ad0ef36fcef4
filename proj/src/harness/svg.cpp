// Copyright 2026 The qobjectivity Authors
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


#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "qobj/harness.hpp"

namespace qobj::harness {
namespace {

constexpr double kWidth = 640, kHeight = 400, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string curve_svg(const std::vector<CurveRow>& rows, bool with_information, const std::string& title) {
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Series> series;
  std::map<double, std::size_t> by_time;
  for (const auto& row : rows) {
    auto [it, fresh] = by_time.emplace(row.t, series.size());
    if (fresh) {
      if (with_information) series.push_back({"I(S:fE), t=" + format_double(row.t), {}});
      series.push_back({"epsilon, t=" + format_double(row.t), {}});
    }
    const std::size_t base = it->second;
    if (with_information) series[base].points.emplace_back(row.result.f, *row.result.I_SfE);
    series[base + (with_information ? 1 : 0)].points.emplace_back(row.result.f, row.result.epsilon);
  }

  double ymax = 0.0;
  for (const auto& s : series)
    for (const auto& p : s.points) ymax = std::max(ymax, p.second);
  if (ymax <= 0.0) ymax = 1.0;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto x = [&](double f) { return kLeft + f * pw; };
  auto y = [&](double v) { return kTop + ph * (1.0 - v / ymax); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"20\">" << escape(title) << "</text>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double f = i / 5.0, v = ymax * i / 5.0;
    out << "<text x=\"" << num(x(f)) << "\" y=\"" << num(kTop + ph + 16) << "\" text-anchor=\"middle\">" << num(f)
        << "</text>\n";
    out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y(v) + 4) << "\" text-anchor=\"end\">" << num(v)
        << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10) << "\" text-anchor=\"middle\">f</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [f, v] : series[i].points) out << num(x(f)) << ',' << num(y(v)) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << num(kLeft + pw - 150) << "\" y=\"" << num(kTop + 14 * (i + 1)) << "\" fill=\"" << color
        << "\">" << escape(series[i].label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qobj::harness
