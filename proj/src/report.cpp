// Copyright 2026 The dronecell Authors
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

#include "dronecell/report.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dronecell::report {
namespace {

constexpr std::array<const char*, 6> kTenantColors{"#1f77b4", "#d62728", "#2ca02c",
                                                   "#ff7f0e", "#9467bd", "#8c564b"};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 6);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return {buf.data(), res.ptr};
}

void write_solve_csv(std::ostream& out, const Scenario& scenario, const SolveResult& r) {
  out << "x,y,h,radius,objective,t1_served,t2_deviation,t3_energy,t4_content";
  for (int j = 0; j < scenario.num_mvnos; ++j) out << ",count_" << j;
  out << ",served_ids\n";

  out << format_number(r.placement.x()) << ',' << format_number(r.placement.y()) << ','
      << format_number(r.placement.z()) << ',' << format_number(r.coverage_radius_used) << ','
      << format_number(r.terms.objective) << ',' << format_number(r.terms.served) << ','
      << format_number(r.terms.deviation) << ',' << format_number(r.terms.energy) << ','
      << format_number(r.terms.content);
  for (Eigen::Index j = 0; j < r.mvno_counts.size(); ++j) out << ',' << r.mvno_counts(j);
  out << ',';
  bool first = true;
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    if (r.assignment.served(static_cast<Eigen::Index>(i)) == 0) continue;
    if (!first) out << ';';
    out << scenario.users[i].id;
    first = false;
  }
  out << '\n';
}

void write_experiment_csv(std::ostream& out, const ExperimentSummary& summary) {
  out << "environment,policy,mean_total,std_total";
  for (int j = 0; j < summary.num_mvnos; ++j) out << ",mean_per_mvno_" << j;
  out << ",runs\n";
  for (const auto& row : summary.rows) {
    out << row.environment << ',' << to_string(row.policy) << ',' << format_number(row.mean_total)
        << ',' << format_number(row.std_total);
    for (Eigen::Index j = 0; j < row.mean_per_mvno.size(); ++j) {
      out << ',' << format_number(row.mean_per_mvno(j));
    }
    out << ',' << row.runs << '\n';
  }
}

std::vector<AltitudeSample> altitude_scan(const Environment& env, const ChannelConfig& cfg,
                                          double threshold, double h_min, double h_max,
                                          int steps) {
  if (!(h_min > 0 && h_min < h_max) || steps < 1) {
    throw DomainError("altitude_scan: require 0 < h_min < h_max and steps >= 1");
  }
  std::vector<AltitudeSample> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double h = k == steps ? h_max : h_min + (h_max - h_min) * k / steps;
    out.push_back({h, coverage_radius(h, threshold, env, cfg)});
  }
  return out;
}

void write_altitude_profile_csv(std::ostream& out, const std::vector<AltitudeSample>& scan,
                                const AltitudeOptimum& optimum) {
  out << "kind,h,coverage_radius\n";
  for (const auto& s : scan) {
    out << "scan," << format_number(s.h) << ',' << format_number(s.radius) << '\n';
  }
  out << "optimum," << format_number(optimum.h_star) << ',' << format_number(optimum.r_max)
      << '\n';
}

std::string render_svg(const Scenario& s, const SolveResult& r) {
  const double pad = 0.05 * std::max(s.field_x.width(), s.field_y.width());
  const double x0 = std::min(s.field_x.min, r.placement.x() - r.coverage_radius_used) - pad;
  const double x1 = std::max(s.field_x.max, r.placement.x() + r.coverage_radius_used) + pad;
  const double y0 = std::min(s.field_y.min, r.placement.y() - r.coverage_radius_used) - pad;
  const double y1 = std::max(s.field_y.max, r.placement.y() + r.coverage_radius_used) + pad;
  const double width = x1 - x0;
  const double dot = width / 150.0;
  const auto f = format_number;

  // SVG y grows downwards; plot -y so north stays up.
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f(x0) << ' ' << f(-y1) << ' '
     << f(width) << ' ' << f(y1 - y0) << "\" width=\"800\" height=\""
     << f(800.0 * (y1 - y0) / width) << "\">\n";
  os << "<!-- scale: 1 svg unit = 1 m; svg y = -y -->\n";
  os << "<!-- environment: " << xml_escape(s.environment.name) << ", altitude " << f(r.placement.z())
     << " m, coverage radius " << f(r.coverage_radius_used) << " m -->\n";
  os << "<rect x=\"" << f(s.field_x.min) << "\" y=\"" << f(-s.field_y.max) << "\" width=\""
     << f(s.field_x.width()) << "\" height=\"" << f(s.field_y.width())
     << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" << f(dot / 3) << "\"/>\n";

  os << "<circle class=\"drone-cell\" cx=\"" << f(r.placement.x()) << "\" cy=\""
     << f(-r.placement.y()) << "\" r=\"" << f(r.coverage_radius_used)
     << "\" fill=\"#2ca02c\" fill-opacity=\"0.12\" stroke=\"#2ca02c\" stroke-width=\""
     << f(dot / 2) << "\"/>\n";

  for (std::size_t i = 0; i < s.users.size(); ++i) {
    const auto& u = s.users[i];
    const char* color = kTenantColors[static_cast<std::size_t>(u.mvno_id) % kTenantColors.size()];
    const bool served = r.assignment.served(static_cast<Eigen::Index>(i)) != 0;
    os << "<ellipse class=\"user mvno-" << u.mvno_id << "\" cx=\"" << f(u.position.x())
       << "\" cy=\"" << f(-u.position.y()) << "\" rx=\"" << f(dot) << "\" ry=\"" << f(dot)
       << "\" fill=\"" << (served ? color : "none") << "\" stroke=\"" << color
       << "\" stroke-width=\"" << f(dot / 3) << "\"/>\n";
    os << "<text x=\"" << f(u.position.x() + 1.2 * dot) << "\" y=\"" << f(-u.position.y() - dot)
       << "\" font-size=\"" << f(2.5 * dot) << "\">" << u.id << "</text>\n";
  }

  const double m = 2.0 * dot;
  const double px = r.placement.x();
  const double py = -r.placement.y();
  os << "<polygon class=\"drone\" points=\"" << f(px) << ',' << f(py - m) << ' ' << f(px - m)
     << ',' << f(py + m) << ' ' << f(px + m) << ',' << f(py + m)
     << "\" fill=\"#000000\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace dronecell::report
