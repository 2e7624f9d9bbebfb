#include "biasnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "biasnet/io.hpp"

namespace biasnet {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<PlotSeries>& series) {
  if (series.empty()) {
    throw std::invalid_argument("chart needs at least one series");
  }
  constexpr double width = 640, height = 420;
  constexpr double left = 64, right = 620, top = 36, bottom = 376;

  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool first = true;
  for (const auto& s : series) {
    if (s.x.empty() || s.x.size() != s.mean.size() ||
        s.x.size() != s.lo.size() || s.x.size() != s.hi.size()) {
      throw std::invalid_argument("series '" + s.name + "' is ragged or empty");
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      for (const double y : {s.mean[i], s.lo[i], s.hi[i]}) {
        if (first || y < y_min) y_min = y;
        if (first || y > y_max) y_max = y;
      }
      if (first || s.x[i] < x_min) x_min = s.x[i];
      if (first || s.x[i] > x_max) x_max = s.x[i];
      first = false;
    }
    if (s.reference) {
      y_min = std::min(y_min, *s.reference);
      y_max = std::max(y_max, *s.reference);
    }
  }
  if (x_max == x_min) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  if (y_max == y_min) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const auto sx = [&](double x) {
    return left + (x - x_min) / (x_max - x_min) * (right - left);
  };
  const auto sy = [&](double y) {
    return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
  };

  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write '" + path + "'");
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"20\" font-size=\"14\""
      << " text-anchor=\"middle\" font-family=\"sans-serif\">" << title
      << "</text>\n";

  // Axes and ticks.
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  for (int t = 0; t < 5; ++t) {
    const double fx = x_min + (x_max - x_min) * t / 4.0;
    const double fy = y_min + (y_max - y_min) * t / 4.0;
    out << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << bottom << "\" x2=\""
        << num(sx(fx)) << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << bottom + 18
        << "\" font-size=\"11\" text-anchor=\"middle\""
        << " font-family=\"sans-serif\">" << tick_label(fx) << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << num(sy(fy)) << "\" x2=\""
        << left << "\" y2=\"" << num(sy(fy)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << num(sy(fy) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\""
        << " font-family=\"sans-serif\">" << tick_label(fy) << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 8
      << "\" font-size=\"12\" text-anchor=\"middle\""
      << " font-family=\"sans-serif\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << (top + bottom) / 2
      << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " transform=\"rotate(-90 16 " << (top + bottom) / 2 << ")\">"
      << y_label << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % (sizeof(kPalette) / sizeof(*kPalette))];

    // Envelope band: forward along hi, back along lo.
    out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\""
        << " stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << num(sx(s.x[i])) << ',' << num(sy(s.hi[i])) << ' ';
    }
    for (std::size_t i = s.x.size(); i-- > 0;) {
      out << num(sx(s.x[i])) << ',' << num(sy(s.lo[i]));
      if (i != 0) out << ' ';
    }
    out << "\"/>\n";

    if (s.reference) {
      out << "<line x1=\"" << left << "\" y1=\"" << num(sy(*s.reference))
          << "\" x2=\"" << right << "\" y2=\"" << num(sy(*s.reference))
          << "\" stroke=\"" << color
          << "\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
    }

    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i != 0) out << ' ';
      out << num(sx(s.x[i])) << ',' << num(sy(s.mean[i]));
    }
    out << "\"/>\n";

    const double ly = top + 14 + 16 * static_cast<double>(si);
    out << "<rect x=\"" << right - 150 << "\" y=\"" << ly - 9
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
    out << "<text x=\"" << right - 134 << "\" y=\"" << ly + 1
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.name
        << (s.reference ? " (dashed: no noise)" : "") << "</text>\n";
  }
  out << "</svg>\n";
}

std::vector<std::string> write_sweep_charts(
    const std::vector<SweepRecord>& records, const std::string& out_prefix) {
  const auto aggregates = aggregate(records);

  // No-noise reference levels per (h_or_dataset, k).
  std::map<std::pair<std::string, NodeId>, std::pair<double, double>> reference;
  for (const auto& a : aggregates) {
    if (a.noise_type == "none") {
      reference[{a.h_or_dataset, a.k}] = {a.fraction.mean, a.retained.mean};
    }
  }

  // noise type -> (h_or_dataset, k) -> aggregates ordered by param value.
  std::map<std::string, std::map<std::pair<std::string, NodeId>,
                                 std::vector<const Aggregate*>>>
      charts;
  for (const auto& a : aggregates) {
    if (a.noise_type == "none") continue;
    charts[a.noise_type][{a.h_or_dataset, a.k}].push_back(&a);
  }

  std::vector<std::string> written;
  for (auto& [noise_type, groups] : charts) {
    const std::string param = noise_param_name(noise_type);
    for (const bool retained_metric : {false, true}) {
      const std::string metric =
          retained_metric ? "retained_edges" : "topk_minority_fraction";
      std::vector<PlotSeries> series;
      for (auto& [key, aggs] : groups) {
        std::sort(aggs.begin(), aggs.end(),
                  [](const Aggregate* a, const Aggregate* b) {
                    return a->param_value < b->param_value;
                  });
        PlotSeries s;
        s.name = key.first + " k=" + std::to_string(key.second);
        for (const Aggregate* a : aggs) {
          const MetricStats& m = retained_metric ? a->retained : a->fraction;
          s.x.push_back(a->param_value);
          s.mean.push_back(m.mean);
          s.lo.push_back(m.min);
          s.hi.push_back(m.max);
        }
        const auto ref = reference.find(key);
        if (ref != reference.end()) {
          s.reference =
              retained_metric ? ref->second.second : ref->second.first;
        }
        series.push_back(std::move(s));
      }
      const std::string path =
          out_prefix + "_" + noise_type + "_" + metric + ".svg";
      write_line_chart(path, noise_type + ": " + metric + " vs " + param,
                       param, metric, series);
      written.push_back(path);
    }
  }
  if (written.empty()) {
    throw DataError("no noise records to plot");
  }
  return written;
}

}  // namespace biasnet
