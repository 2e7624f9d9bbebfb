#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "biasnet/experiment.hpp"
#include "biasnet/graph.hpp"

namespace biasnet {

// Bad command-line usage (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input data (exit code 2).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetLoad {
  Graph graph;
  std::vector<std::string> node_names;      // dense id -> original token
  std::array<std::string, 2> label_names;   // group -> original label token
  std::int64_t duplicate_edges_dropped = 0;
  std::int64_t self_loops_dropped = 0;
};

// Reads a label file ("node label" per line) and an edge list ("u v" per
// line, '#' comments ignored). Node ids are opaque tokens; dense ids are
// assigned in label-file order, so files written by this toolkit round-trip
// exactly. Nodes appearing only in the label file become isolated nodes;
// edge endpoints missing from the label file are an error. Duplicate edges
// and self-loops are dropped and counted, not fatal. Labels must be 0/1 or
// two distinct strings; minority_label overrides which token maps to the
// minority (1).
DatasetLoad load_dataset(const std::string& edges_path,
                         const std::string& labels_path,
                         const std::optional<std::string>& minority_label);

// Edge list in canonical order, one "u v" line per edge, trailing newline.
// With names, dense ids are translated back to the original tokens.
void write_edge_file(const std::string& path, const std::vector<Edge>& edges,
                     const std::vector<std::string>* names = nullptr);

void write_label_file(const std::string& path,
                      std::span<const std::uint8_t> labels,
                      const std::vector<std::string>* names = nullptr);

// "dense_id<TAB>original_token" per line; traceability for remapped data.
void write_id_map(const std::string& path,
                  const std::vector<std::string>& names);

SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

inline constexpr const char* kSweepCsvHeader =
    "noise_type,param_name,param_value,h_or_dataset,replicate,seed,k,"
    "latent_edges,retained_edges,topk_minority_fraction";

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(const std::string& path);

// Shortest decimal form that round-trips; '.' separator, locale-free.
std::string format_double(double value);

std::string read_text_file(const std::string& path);

}  // namespace biasnet
