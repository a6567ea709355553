#include "bellwave/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bellwave/units.hpp"

namespace bellwave {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0, kRight = 30.0, kTop = 50.0, kBottom = 70.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
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

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

// Roughly five ticks at 1, 2 or 5 times a power of ten.
double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

std::string format_tick(double v, double step) {
  const int digits = std::max(0, static_cast<int>(-std::floor(std::log10(step) + 1e-9)));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, std::abs(v) < 1e-12 * step ? 0.0 : v);
  return buf;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min)) {
    throw ValidationError("plot ranges must be non-empty");
  }
  const Frame f{spec.x_min, spec.x_max, spec.y_min, spec.y_max};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">"
      << escape(spec.title) << "</text>\n";

  // axes box
  out << "<path class=\"axis\" d=\"M" << num(f.px(f.x0)) << ' ' << num(f.py(f.y1)) << " L"
      << num(f.px(f.x0)) << ' ' << num(f.py(f.y0)) << " L" << num(f.px(f.x1)) << ' '
      << num(f.py(f.y0)) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  const double xs = tick_step(f.x1 - f.x0);
  for (double x = std::ceil(f.x0 / xs) * xs; x <= f.x1 + 1e-9 * xs; x += xs) {
    out << "<path class=\"tick\" d=\"M" << num(f.px(x)) << ' ' << num(f.py(f.y0)) << " v6\" stroke=\"black\"/>"
        << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.py(f.y0) + 22)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << format_tick(x, xs)
        << "</text>\n";
  }
  const double ys = tick_step(f.y1 - f.y0);
  for (double y = std::ceil(f.y0 / ys) * ys; y <= f.y1 + 1e-9 * ys; y += ys) {
    out << "<path class=\"tick\" d=\"M" << num(f.px(f.x0)) << ' ' << num(f.py(y)) << " h-6\" stroke=\"black\"/>"
        << "<text x=\"" << num(f.px(f.x0) - 10) << "\" y=\"" << num(f.py(y) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\">" << format_tick(y, ys)
        << "</text>\n";
  }
  out << "<text x=\"" << num(0.5 * (f.px(f.x0) + f.px(f.x1))) << "\" y=\"" << num(kHeight - 20)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" << escape(spec.x_label)
      << "</text>\n";
  out << "<text x=\"20\" y=\"" << num(0.5 * (f.py(f.y0) + f.py(f.y1)))
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\" transform=\"rotate(-90 20 "
      << num(0.5 * (f.py(f.y0) + f.py(f.y1))) << ")\">" << escape(spec.y_label) << "</text>\n";

  for (const auto& ref : spec.references) {
    out << "<line class=\"reference\" x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(ref.y))
        << "\" x2=\"" << num(f.px(f.x1)) << "\" y2=\"" << num(f.py(ref.y)) << "\" stroke=\""
        << escape(ref.color) << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"><title>"
        << escape(ref.label) << "</title></line>\n";
  }
  for (const auto& s : spec.series) {
    out << "<polyline class=\"series\" fill=\"none\" stroke=\"" << escape(s.color)
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!first) out << ' ';
      out << num(f.px(x)) << ',' << num(f.py(y));
      first = false;
    }
    out << "\"><title>" << escape(s.label) << "</title></polyline>\n";
  }

  // legend, top right
  double ly = kTop + 20;
  const double lx = kWidth - kRight - 190;
  auto legend_entry = [&](const std::string& label, const std::string& color, bool dashed) {
    out << "<path class=\"legend\" d=\"M" << num(lx) << ' ' << num(ly) << " h30\" stroke=\"" << escape(color)
        << "\" stroke-width=\"2\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>"
        << "<text x=\"" << num(lx + 38) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"13\">" << escape(label) << "</text>\n";
    ly += 20;
  };
  for (const auto& s : spec.series) legend_entry(s.label, s.color, false);
  for (const auto& r : spec.references) legend_entry(r.label, r.color, true);
  out << "</svg>\n";
  return out.str();
}

}  // namespace bellwave
