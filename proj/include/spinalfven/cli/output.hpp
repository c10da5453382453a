#pragma once

// CSV, SVG and JSON writers. Numbers are printed in the shortest form that
// reads back to the same double.

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "spinalfven/nls_solver.hpp"
#include "spinalfven/regime_map.hpp"

namespace spinalfven::cli {

inline std::string num(double x) { return fmt::format("{}", x); }

inline std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

inline constexpr const char* timeseries_header = "step,t,norm,momentum,hamiltonian,max_amp";
inline constexpr const char* snapshot_header = "zeta,re_amp,im_amp,abs_amp";
inline constexpr const char* regime_header = "effect,B0_tesla,n0_per_m3,Te_kelvin";

inline void write_timeseries_row(std::ostream& out, std::size_t step, double t, const ConservedDiagnostics& d,
                                 double max_amp) {
  out << step << ',' << num(t) << ',' << num(d.norm) << ',' << num(d.momentum) << ',' << num(d.hamiltonian) << ','
      << num(max_amp) << '\n';
}

inline void write_snapshot(const std::filesystem::path& path, const Grid& grid,
                           std::span<const std::complex<double>> amp) {
  auto out = open_output(path);
  out << snapshot_header << '\n';
  for (std::size_t j = 0; j < amp.size(); ++j) {
    out << num(grid.coordinate(j)) << ',' << num(amp[j].real()) << ',' << num(amp[j].imag()) << ','
        << num(std::abs(amp[j])) << '\n';
  }
}

/// Field-independent curves carry an empty B0 column.
inline void write_regime_csv(std::ostream& out, const std::vector<RegimeCurve>& curves) {
  out << regime_header << '\n';
  for (const auto& c : curves) {
    const std::string b0 = c.fixed_field ? num(*c.fixed_field) : std::string();
    for (const auto& p : c.points) {
      out << to_string(c.effect) << ',' << b0 << ',' << num(p.density) << ',' << num(p.temperature) << '\n';
    }
  }
}

inline void write_regime_svg(std::ostream& out, const std::vector<RegimeCurve>& curves, const RegimeWindow& w) {
  constexpr double width = 720, height = 540, left = 80, right = 200, top = 30, bottom = 60;
  const double lx0 = std::log10(w.density_min), lx1 = std::log10(w.density_max);
  const double ly0 = std::log10(w.temperature_min), ly1 = std::log10(w.temperature_max);
  auto px = [&](double n) { return left + (std::log10(n) - lx0) / (lx1 - lx0) * (width - left - right); };
  auto py = [&](double t) { return height - bottom - (std::log10(t) - ly0) / (ly1 - ly0) * (height - top - bottom); };
  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

  out << fmt::format(R"(<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" font-family="sans-serif" font-size="12">)",
                     width, height)
      << '\n';
  out << fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)", left, top,
                     width - left - right, height - top - bottom)
      << '\n';
  for (int e = static_cast<int>(std::ceil(lx0)); e <= static_cast<int>(std::floor(lx1)); e += 2) {
    const double x = px(std::pow(10.0, e));
    out << fmt::format(R"(<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="black"/>)", x, height - bottom,
                       height - bottom + 5)
        << fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">1e{}</text>)", x, height - bottom + 18, e) << '\n';
  }
  for (int e = static_cast<int>(std::ceil(ly0)); e <= static_cast<int>(std::floor(ly1)); ++e) {
    const double y = py(std::pow(10.0, e));
    out << fmt::format(R"(<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="black"/>)", left - 5, y, left)
        << fmt::format(R"(<text x="{}" y="{}" text-anchor="end">1e{}</text>)", left - 8, y + 4, e) << '\n';
  }
  out << fmt::format(R"svg(<text x="{}" y="{}" text-anchor="middle">n0 (m^-3)</text>)svg", left + (width - left - right) / 2,
                     height - 20)
      << '\n';
  out << fmt::format(R"svg(<text x="20" y="{0}" text-anchor="middle" transform="rotate(-90 20 {0})">Te (K)</text>)svg",
                     top + (height - top - bottom) / 2)
      << '\n';

  double legend_y = top + 10;
  for (const auto& c : curves) {
    const char* colour = palette[static_cast<std::size_t>(c.effect)];
    const std::string dash = c.fixed_field && *c.fixed_field > 1.0 ? R"( stroke-dasharray="6 3")"
                             : c.fixed_field && *c.fixed_field < 1.0 ? R"( stroke-dasharray="2 2")"
                                                                     : "";
    out << fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="1.5"{} points=")", colour, dash);
    for (const auto& p : c.points) out << fmt::format("{:.2f},{:.2f} ", px(p.density), py(p.temperature));
    out << "\"/>\n";
    std::string label(to_string(c.effect));
    if (c.fixed_field) label += fmt::format(" B0={} T", *c.fixed_field);
    out << fmt::format(R"(<line x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="{3}" stroke-width="1.5"{4}/>)",
                       width - right + 10, legend_y, width - right + 30, colour, dash)
        << fmt::format(R"(<text x="{}" y="{}">{}</text>)", width - right + 35, legend_y + 4, label) << '\n';
    legend_y += 16;
  }
  out << "</svg>\n";
}

}  // namespace spinalfven::cli
