#pragma once

#include <optional>
#include <string>

#include "tqnet/temporal_quantity.hpp"

namespace tqnet {

/// Layout of a single bar chart.
struct ChartOptions {
  std::optional<Time> tmin;       // default: first start
  std::optional<Time> tmax;       // default: last finish
  std::optional<Value> tqmax;     // default: largest value
  std::string title;
  std::string fill = "red";
  int width = 600;
  int height = 150;
};

/// Static SVG bar chart, one `<rect class="bar">` per interval with a
/// positive value inside [tmin, tmax), and a year axis. Throws
/// std::invalid_argument when tmin >= tmax.
std::string render_svg(const TemporalQuantity& q, const ChartOptions& options);

}  // namespace tqnet
