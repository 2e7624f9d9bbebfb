#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biasnet/experiment.hpp"

namespace biasnet {

// One plotted series: mean polyline plus a lo..hi envelope band, and an
// optional dashed reference level (the matching no-noise mean).
struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> lo;
  std::vector<double> hi;
  std::optional<double> reference;
};

// Static chart: axes, ticks, envelope polygons, one mean polyline per
// series, text legend. No styling beyond inline attributes.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<PlotSeries>& series);

// One chart per (noise type, metric) found in the records; metric is the
// top-k minority fraction or the retained edge count. Returns the paths
// written.
std::vector<std::string> write_sweep_charts(
    const std::vector<SweepRecord>& records, const std::string& out_prefix);

}  // namespace biasnet
