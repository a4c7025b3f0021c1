#include "hbounds/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hbounds {

namespace {

std::string fixed5(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 5);
  return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void include(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  void pad(double frac) {
    double dx = std::max(xmax - xmin, 1e-12) * frac;
    double dy = std::max(ymax - ymin, 1e-12) * frac;
    xmin -= dx;
    xmax += dx;
    ymin -= dy;
    ymax += dy;
  }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

}  // namespace

std::string svg_line_plot(const std::vector<PlotSeries>& series,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label) {
  if (series.empty()) throw std::invalid_argument("svg_line_plot: no series");
  Box box;
  for (const PlotSeries& s : series) {
    for (auto [x, y] : s.points) box.include(x, y);
  }
  if (!std::isfinite(box.xmin) || !std::isfinite(box.ymin)) {
    throw std::invalid_argument("svg_line_plot: series have no finite points");
  }
  box.pad(0.05);

  const double view_w = 800.0, view_h = 500.0;
  const double margin = 60.0;
  const double sx = (view_w - 2.0 * margin) / box.width();
  const double sy = (view_h - 2.0 * margin) / box.height();
  // y axis flipped: data ymin maps to the bottom of the canvas
  const double tx = margin - box.xmin * sx;
  const double ty = view_h - margin + box.ymin * sy;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << view_w << "\" height=\"" << view_h << "\" "
      << "viewBox=\"0 0 " << view_w << " " << view_h << "\">\n"
      << "  <title>" << xml_escape(title) << "</title>\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << view_w << "\" height=\""
      << view_h << "\" fill=\"white\"/>\n"
      << "  <text x=\"" << view_w / 2.0
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << xml_escape(title) << "</text>\n"
      << "  <text x=\"" << view_w / 2.0 << "\" y=\"" << view_h - 12.0
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << xml_escape(x_label) << "</text>\n"
      << "  <text x=\"16\" y=\"" << view_h / 2.0
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 "
      << view_h / 2.0 << ")\">" << xml_escape(y_label) << "</text>\n"
      << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
      << view_w - 2.0 * margin << "\" height=\"" << view_h - 2.0 * margin
      << "\" fill=\"none\" stroke=\"#cccccc\"/>\n"
      << "  <g transform=\"translate(" << fixed5(tx) << " " << fixed5(ty)
      << ") scale(" << fixed5(sx) << " " << fixed5(-sy) << ")\">\n";

  // data-units width that renders as roughly one device pixel
  double stroke_w = 1.0 / std::min(sx, sy);
  std::size_t color = 0;
  for (const PlotSeries& s : series) {
    out << "    <polyline class=\"" << xml_escape(s.name)
        << "\" fill=\"none\" stroke=\"" << kPalette[color % 6]
        << "\" stroke-width=\"" << fixed5(stroke_w * 1.5) << "\" points=\"";
    bool first = true;
    for (auto [x, y] : s.points) {
      if (!first) out << ' ';
      first = false;
      out << fixed5(x) << ',' << fixed5(y);
    }
    out << "\"/>\n";
    ++color;
  }
  out << "  </g>\n";

  // legend
  double ly = margin + 16.0;
  color = 0;
  for (const PlotSeries& s : series) {
    out << "  <text x=\"" << margin + 12.0 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << kPalette[color % 6] << "\">" << xml_escape(s.name) << "</text>\n";
    ly += 16.0;
    ++color;
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_disk_image(const CoefficientSeries& f, double guaranteed_radius,
                           std::size_t circles, std::size_t angular_samples) {
  if (circles < 1 || angular_samples < 16) {
    throw std::invalid_argument("svg_disk_image: too few circles or samples");
  }
  if (!(guaranteed_radius > 0.0 && guaranteed_radius < 1.0)) {
    throw std::invalid_argument("svg_disk_image: radius in (0,1) required");
  }

  std::vector<std::vector<std::pair<double, double>>> rings(circles);
  Box box;
  box.include(-guaranteed_radius, -guaranteed_radius);
  box.include(guaranteed_radius, guaranteed_radius);
  for (std::size_t i = 0; i < circles; ++i) {
    double rho = 0.9 * static_cast<double>(i + 1) / static_cast<double>(circles);
    auto& ring = rings[i];
    ring.reserve(angular_samples + 1);
    for (std::size_t j = 0; j <= angular_samples; ++j) {
      double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                   static_cast<double>(angular_samples);
      std::complex<double> w = evaluate(f, std::polar(rho, phi));
      ring.emplace_back(w.real(), w.imag());
      box.include(w.real(), w.imag());
    }
  }
  box.pad(0.05);

  double stroke_w = std::max(box.width(), box.height()) / 400.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"600\" height=\"600\" viewBox=\"" << fixed5(box.xmin) << " "
      << fixed5(-box.ymax) << " " << fixed5(box.width()) << " "
      << fixed5(box.height()) << "\">\n"
      << "  <title>images of concentric circles</title>\n"
      << "  <g transform=\"scale(1 -1)\">\n";
  for (std::size_t i = 0; i < circles; ++i) {
    out << "    <polyline class=\"image-circle\" fill=\"none\" "
           "stroke=\"#1f77b4\" stroke-width=\""
        << fixed5(stroke_w) << "\" points=\"";
    bool first = true;
    for (auto [x, y] : rings[i]) {
      if (!first) out << ' ';
      first = false;
      out << fixed5(x) << ',' << fixed5(y);
    }
    out << "\"/>\n";
  }
  out << "    <circle class=\"certified-disk\" cx=\"0\" cy=\"0\" r=\""
      << fixed5(guaranteed_radius) << "\" fill=\"none\" stroke=\"#d62728\" "
      << "stroke-width=\"" << fixed5(stroke_w * 1.5) << "\"/>\n"
      << "  </g>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace hbounds
