#include "tqnet/chart.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "tqnet/format.hpp"

namespace tqnet {

namespace {

constexpr double kLeft = 40.0;
constexpr double kRight = 10.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 22.0;

std::string fixed(double v) {
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

Time label_step(Time span) {
  for (Time step : {1, 2, 5, 10, 20, 50, 100, 200, 500}) {
    if (span / step <= 20) return step;
  }
  return 1000;
}

}  // namespace

std::string render_svg(const TemporalQuantity& q, const ChartOptions& options) {
  const auto summary = summarize(q);
  const Time tmin = options.tmin.value_or(summary ? summary->min_time : 0);
  const Time tmax = options.tmax.value_or(summary ? summary->max_time : tmin + 1);
  if (tmin >= tmax) {
    throw std::invalid_argument("chart: tmin (" + std::to_string(tmin) +
                                ") must be below tmax (" + std::to_string(tmax) +
                                ")");
  }
  Value vmax = options.tqmax.value_or(summary ? summary->max_value : 1.0);
  if (!(vmax > 0)) vmax = 1.0;

  const double w = options.width;
  const double h = options.height;
  const double plot_w = w - kLeft - kRight;
  const double plot_h = h - kTop - kBottom;
  const double per_year = plot_w / static_cast<double>(tmax - tmin);
  const double base = kTop + plot_h;
  auto x_of = [&](Time t) { return kLeft + per_year * static_cast<double>(t - tmin); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
       std::to_string(options.width) + "\" height=\"" +
       std::to_string(options.height) + "\" viewBox=\"0 0 " +
       std::to_string(options.width) + " " + std::to_string(options.height) +
       "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(options.width) +
       "\" height=\"" + std::to_string(options.height) + "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    s += "<text x=\"" + fixed(w / 2) +
         "\" y=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" +
         escape(options.title) + "</text>\n";
  }

  for (const Interval& iv : q) {
    const Time from = std::max(iv.start, tmin);
    const Time to = std::min(iv.finish, tmax);
    if (from >= to || iv.value <= 0) continue;
    const double bar_h = plot_h * std::min(1.0, iv.value / vmax);
    s += "<rect class=\"bar\" x=\"" + fixed(x_of(from)) + "\" y=\"" +
         fixed(base - bar_h) + "\" width=\"" + fixed(x_of(to) - x_of(from)) +
         "\" height=\"" + fixed(bar_h) + "\" fill=\"" + escape(options.fill) +
         "\" stroke=\"black\" stroke-width=\"0.5\"><title>[" +
         std::to_string(iv.start) + ", " + std::to_string(iv.finish) + "): " +
         format_value(iv.value) + "</title></rect>\n";
  }

  s += "<line class=\"axis\" x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(base) +
       "\" x2=\"" + fixed(kLeft + plot_w) + "\" y2=\"" + fixed(base) +
       "\" stroke=\"black\"/>\n";
  s += "<line class=\"axis\" x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) +
       "\" x2=\"" + fixed(kLeft) + "\" y2=\"" + fixed(base) +
       "\" stroke=\"black\"/>\n";
  s += "<text x=\"" + fixed(kLeft - 4) + "\" y=\"" + fixed(kTop + 4) +
       "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"9\">" +
       format_value(vmax) + "</text>\n";

  const Time step = label_step(tmax - tmin);
  for (Time t = tmin; t <= tmax; ++t) {
    const double x = x_of(t);
    s += "<line class=\"tick\" x1=\"" + fixed(x) + "\" y1=\"" + fixed(base) +
         "\" x2=\"" + fixed(x) + "\" y2=\"" + fixed(base + 3) +
         "\" stroke=\"black\"/>\n";
    if (t < tmax && t % step == 0) {
      s += "<text class=\"year\" x=\"" + fixed(x + per_year / 2) + "\" y=\"" +
           fixed(base + 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"9\">" +
           std::to_string(t) + "</text>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace tqnet
