#include "biasnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace biasnet {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_comment_or_blank(const std::string& line) {
  for (const char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("invalid " + what + ": '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("invalid " + what + ": '" + s + "'");
  }
  return v;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot read '" + path + "'");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write '" + path + "'");
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw std::logic_error("double formatting failed");
  }
  return std::string(buf.data(), ptr);
}

std::string read_text_file(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

DatasetLoad load_dataset(const std::string& edges_path,
                         const std::string& labels_path,
                         const std::optional<std::string>& minority_label) {
  DatasetLoad result;

  // Pass 1: the label file fixes the dense id space and the label alphabet.
  std::unordered_map<std::string, NodeId> id_of;
  std::vector<std::string> label_tokens;  // per dense id
  {
    auto in = open_input(labels_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (is_comment_or_blank(line)) continue;
      const auto tokens = split_tokens(line);
      if (tokens.size() != 2) {
        throw DataError(labels_path + ":" + std::to_string(lineno) +
                        ": expected 'node label', got '" + line + "'");
      }
      if (!id_of.emplace(tokens[0], static_cast<NodeId>(result.node_names.size()))
               .second) {
        throw DataError(labels_path + ":" + std::to_string(lineno) +
                        ": node '" + tokens[0] + "' labeled twice");
      }
      result.node_names.push_back(tokens[0]);
      label_tokens.push_back(tokens[1]);
    }
  }

  // Map label tokens to {0,1}: numeric 0/1 directly, otherwise first-seen
  // order, overridden by an explicit minority token.
  std::vector<std::string> distinct;
  for (const auto& tok : label_tokens) {
    if (std::find(distinct.begin(), distinct.end(), tok) == distinct.end()) {
      distinct.push_back(tok);
    }
  }
  if (distinct.size() > 2) {
    throw DataError(labels_path + ": more than two distinct labels");
  }
  std::unordered_map<std::string, std::uint8_t> group_of;
  if (minority_label.has_value()) {
    if (std::find(distinct.begin(), distinct.end(), *minority_label) ==
        distinct.end()) {
      throw DataError("minority label '" + *minority_label +
                      "' does not occur in " + labels_path);
    }
    for (const auto& tok : distinct) {
      group_of[tok] = (tok == *minority_label) ? 1 : 0;
    }
  } else if (distinct.size() == 2 &&
             ((distinct[0] == "0" && distinct[1] == "1") ||
              (distinct[0] == "1" && distinct[1] == "0"))) {
    group_of["0"] = 0;
    group_of["1"] = 1;
  } else {
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      group_of[distinct[i]] = static_cast<std::uint8_t>(i);
    }
  }
  result.label_names = {"0", "1"};
  for (const auto& [tok, group] : group_of) {
    result.label_names[group] = tok;
  }

  std::vector<std::uint8_t> labels;
  labels.reserve(label_tokens.size());
  for (const auto& tok : label_tokens) {
    labels.push_back(group_of.at(tok));
  }

  // Pass 2: edges, with duplicates and self-loops dropped and counted.
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  {
    auto in = open_input(edges_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (is_comment_or_blank(line)) continue;
      const auto tokens = split_tokens(line);
      if (tokens.size() != 2) {
        throw DataError(edges_path + ":" + std::to_string(lineno) +
                        ": expected 'u v', got '" + line + "'");
      }
      const auto find_id = [&](const std::string& tok) {
        const auto it = id_of.find(tok);
        if (it == id_of.end()) {
          throw DataError(edges_path + ":" + std::to_string(lineno) +
                          ": node '" + tok + "' missing from " + labels_path);
        }
        return it->second;
      };
      const NodeId u = find_id(tokens[0]);
      const NodeId v = find_id(tokens[1]);
      if (u == v) {
        ++result.self_loops_dropped;
        continue;
      }
      const Edge e = make_edge(u, v);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(e.first) << 32) |
          static_cast<std::uint32_t>(e.second);
      if (!seen.insert(key).second) {
        ++result.duplicate_edges_dropped;
        continue;
      }
      edges.push_back(e);
    }
  }

  result.graph = Graph::from_edges(static_cast<NodeId>(result.node_names.size()),
                                   std::move(edges), std::move(labels));
  return result;
}

void write_edge_file(const std::string& path, const std::vector<Edge>& edges,
                     const std::vector<std::string>* names) {
  auto out = open_output(path);
  for (const auto& [u, v] : edges) {
    if (names != nullptr) {
      out << (*names)[static_cast<std::size_t>(u)] << ' '
          << (*names)[static_cast<std::size_t>(v)] << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
}

void write_label_file(const std::string& path,
                      std::span<const std::uint8_t> labels,
                      const std::vector<std::string>* names) {
  auto out = open_output(path);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (names != nullptr) {
      out << (*names)[i] << ' ' << int(labels[i]) << '\n';
    } else {
      out << i << ' ' << int(labels[i]) << '\n';
    }
  }
}

void write_id_map(const std::string& path,
                  const std::vector<std::string>& names) {
  auto out = open_output(path);
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << i << '\t' << names[i] << '\n';
  }
}

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& message) {
  throw DataError("sweep config: " + message);
}

const json& require_key(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    config_error(std::string("missing key '") + key + "'");
  }
  return *it;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(e.what());
  }
  if (!doc.is_object()) config_error("top level must be an object");

  SweepConfig cfg;
  cfg.master_seed = require_key(doc, "master_seed").get<std::uint64_t>();
  const json& graph = require_key(doc, "graph");
  if (graph.contains("generate") == graph.contains("dataset")) {
    config_error("graph needs exactly one of 'generate' or 'dataset'");
  }
  if (graph.contains("generate")) {
    const json& g = graph["generate"];
    GenParams p;
    p.n = require_key(g, "n").get<NodeId>();
    p.m = require_key(g, "m").get<NodeId>();
    p.minority_fraction = require_key(g, "f").get<double>();
    p.homophily = require_key(g, "h").get<double>();
    // The generation stage can be re-seeded independently; it defaults to
    // the sweep's master seed.
    p.seed = g.value("seed", cfg.master_seed);
    cfg.generate = p;
  } else {
    const json& d = graph["dataset"];
    DatasetSource src;
    src.edges_path = require_key(d, "edges").get<std::string>();
    src.labels_path = require_key(d, "labels").get<std::string>();
    src.name = d.value("name", std::string{});
    if (d.contains("minority")) {
      src.minority_label = d["minority"].get<std::string>();
    }
    cfg.dataset = src;
  }

  const json& noise = require_key(doc, "noise");
  if (!noise.is_array() || noise.empty()) {
    config_error("'noise' must be a non-empty array");
  }
  for (const json& entry : noise) {
    NoiseGridEntry e;
    e.type = require_key(entry, "type").get<std::string>();
    try {
      noise_param_name(e.type);  // rejects unknown types
    } catch (const std::invalid_argument& err) {
      config_error(err.what());
    }
    const json& values = require_key(entry, "values");
    if (!values.is_array() || values.empty()) {
      config_error("noise entry '" + e.type + "' needs non-empty 'values'");
    }
    for (const json& v : values) e.values.push_back(v.get<double>());
    e.other = entry.value("other", 0.9);
    cfg.noise.push_back(std::move(e));
  }

  cfg.replicates = require_key(doc, "replicates").get<int>();
  const json& ks = require_key(doc, "k");
  if (!ks.is_array() || ks.empty()) config_error("'k' must be a non-empty array");
  for (const json& k : ks) cfg.k_values.push_back(k.get<NodeId>());
  cfg.out_path = doc.value("out", std::string{});
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  return parse_sweep_config(read_text_file(path));
}

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRecord>& records) {
  auto out = open_output(path);
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.noise_type << ',' << r.param_name << ','
        << format_double(r.param_value) << ',' << r.h_or_dataset << ','
        << r.replicate << ',' << r.seed << ',' << r.k << ',' << r.latent_edges
        << ',' << r.retained_edges << ','
        << format_double(r.topk_minority_fraction) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw DataError(path + ": missing or unexpected CSV header");
  }
  std::vector<SweepRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 10) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected 10 fields, got " +
                      std::to_string(fields.size()));
    }
    SweepRecord r;
    r.noise_type = fields[0];
    r.param_name = fields[1];
    r.param_value = parse_double(fields[2], "param_value");
    r.h_or_dataset = fields[3];
    r.replicate = static_cast<int>(parse_u64(fields[4], "replicate"));
    r.seed = parse_u64(fields[5], "seed");
    r.k = static_cast<NodeId>(parse_u64(fields[6], "k"));
    r.latent_edges = static_cast<std::int64_t>(parse_u64(fields[7], "latent_edges"));
    r.retained_edges =
        static_cast<std::int64_t>(parse_u64(fields[8], "retained_edges"));
    r.topk_minority_fraction =
        parse_double(fields[9], "topk_minority_fraction");
    records.push_back(std::move(r));
  }
  if (records.empty()) {
    throw DataError(path + ": no records");
  }
  return records;
}

}  // namespace biasnet
