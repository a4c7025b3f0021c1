#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hbounds/harmonic.hpp"

namespace hbounds {

struct PlotSeries {
  std::string name;  // used as the polyline's class attribute
  std::vector<std::pair<double, double>> points;
};

// Standalone SVG 1.1 line chart. Each series becomes one <polyline> whose
// points are written in data coordinates (fixed 5-decimal formatting) inside
// a single transform group, so the attribute values can be parsed back and
// checked. Byte-deterministic for fixed inputs.
std::string svg_line_plot(const std::vector<PlotSeries>& series,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label);

// Standalone SVG 1.1 picture: polylines tracing the images of concentric
// circles |z| = rho under f, plus a <circle> of the given radius in the same
// data coordinates marking the certified univalence disk.
std::string svg_disk_image(const CoefficientSeries& f, double guaranteed_radius,
                           std::size_t circles = 8,
                           std::size_t angular_samples = 256);

}  // namespace hbounds
