#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biasnet/graph.hpp"
#include "biasnet/netgen.hpp"
#include "biasnet/noise.hpp"

namespace biasnet {

struct DatasetSource {
  std::string edges_path;
  std::string labels_path;
  std::string name;  // printed in the h_or_dataset column
  std::optional<std::string> minority_label;
};

// One noise family plus the parameter values to sweep. `type` is one of
// baseline, intra, inter, majority, minority, jaccard, inverse_jaccard,
// centrality, inverse_centrality; `other` is the non-targeted retain
// probability of the attribute presets.
struct NoiseGridEntry {
  std::string type;
  std::vector<double> values;
  double other = 0.9;
};

struct SweepConfig {
  std::optional<GenParams> generate;   // exactly one source must be set
  std::optional<DatasetSource> dataset;
  std::vector<NoiseGridEntry> noise;
  int replicates = 10;
  std::vector<NodeId> k_values;
  std::uint64_t master_seed = 0;
  std::string out_path;
};

// One row per (grid point x replicate x k). The seed column records the
// tie-break seed of that row's ranking evaluation.
struct SweepRecord {
  std::string noise_type;
  std::string param_name;
  double param_value = 0.0;
  std::string h_or_dataset;
  int replicate = 0;
  std::uint64_t seed = 0;
  NodeId k = 0;
  std::int64_t latent_edges = 0;
  std::int64_t retained_edges = 0;
  double topk_minority_fraction = 0.0;
};

// Order-independent, collision-resistant mixing of the sweep coordinates
// into a 64-bit seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replicate,
                          std::uint64_t grid_point, std::string_view stage);

const std::vector<std::string>& noise_type_names();

// p for baseline, rho for the attribute presets, alpha for the structure
// families. Throws on an unknown type.
std::string noise_param_name(const std::string& type);

NoiseSpec make_noise_spec(const std::string& type, double value, double other);

// Runs the full grid. Synthetic sources generate one latent graph per
// replicate (reused across all grid points of that replicate); dataset
// sources share one latent graph. Every grid gets an extra no-noise
// evaluation per replicate, recorded with noise_type "none". threads = 0
// reads BIASNET_THREADS, falling back to the hardware count; the record
// table is identical for any thread count.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, int threads = 0);

int effective_thread_count(int requested);

struct MetricStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single value
};

// Per-grid-point summary over replicates.
struct Aggregate {
  std::string noise_type;
  std::string param_name;
  double param_value = 0.0;
  std::string h_or_dataset;
  NodeId k = 0;
  int replicates = 0;
  MetricStats fraction;  // topk_minority_fraction
  MetricStats retained;  // retained edge count
};

// Groups records by (noise_type, param_name, param_value, h_or_dataset, k),
// output sorted by that key; invariant to record order.
std::vector<Aggregate> aggregate(const std::vector<SweepRecord>& records);

}  // namespace biasnet
