#include "biasnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "biasnet/io.hpp"
#include "biasnet/ranking.hpp"
#include "biasnet/rng.hpp"

namespace biasnet {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t replicate,
                          std::uint64_t grid_point, std::string_view stage) {
  std::uint64_t h = mix64(master);
  h = mix_seed(h, replicate);
  h = mix_seed(h, grid_point);
  h = mix_seed(h, hash_tag(stage));
  return h;
}

const std::vector<std::string>& noise_type_names() {
  static const std::vector<std::string> names = {
      "baseline",  "intra",           "inter",      "majority",
      "minority",  "jaccard",         "inverse_jaccard",
      "centrality", "inverse_centrality"};
  return names;
}

std::string noise_param_name(const std::string& type) {
  if (type == "baseline") return "p";
  if (type == "intra" || type == "inter" || type == "majority" ||
      type == "minority") {
    return "rho";
  }
  if (type == "jaccard" || type == "inverse_jaccard" || type == "centrality" ||
      type == "inverse_centrality") {
    return "alpha";
  }
  throw std::invalid_argument("unknown noise type '" + type + "'");
}

NoiseSpec make_noise_spec(const std::string& type, double value, double other) {
  if (type == "baseline") return BaselineNoise{value};
  if (type == "intra") return omega_preset(OmegaKind::Intra, value, other);
  if (type == "inter") return omega_preset(OmegaKind::Inter, value, other);
  if (type == "majority") return omega_preset(OmegaKind::Majority, value, other);
  if (type == "minority") return omega_preset(OmegaKind::Minority, value, other);
  if (type == "jaccard") return JaccardNoise{value, false};
  if (type == "inverse_jaccard") return JaccardNoise{value, true};
  if (type == "centrality") return CentralityNoise{value, false};
  if (type == "inverse_centrality") return CentralityNoise{value, true};
  throw std::invalid_argument("unknown noise type '" + type + "'");
}

int effective_thread_count(int requested) {
  if (requested <= 0) {
    if (const char* env = std::getenv("BIASNET_THREADS")) {
      requested = std::atoi(env);
    }
  }
  if (requested <= 0) {
    requested = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::max(1, requested);
}

namespace {

struct GridPoint {
  std::string noise_type;  // "none" for the baseline row
  std::string param_name;
  double value = 1.0;
  double other = 0.9;
};

std::vector<GridPoint> expand_grid(const SweepConfig& cfg) {
  std::vector<GridPoint> grid;
  grid.push_back({"none", "none", 1.0, 0.9});
  for (const auto& entry : cfg.noise) {
    if (entry.values.empty()) {
      throw std::invalid_argument("noise entry '" + entry.type +
                                  "' has an empty value grid");
    }
    const std::string param = noise_param_name(entry.type);
    for (const double v : entry.values) {
      grid.push_back({entry.type, param, v, entry.other});
    }
  }
  return grid;
}

void validate(const SweepConfig& cfg) {
  if (cfg.generate.has_value() == cfg.dataset.has_value()) {
    throw std::invalid_argument(
        "exactly one of generate/dataset must be configured");
  }
  if (cfg.replicates < 1) {
    throw std::invalid_argument("replicates must be >= 1");
  }
  if (cfg.k_values.empty()) {
    throw std::invalid_argument("at least one k value is required");
  }
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, int threads) {
  validate(cfg);
  const auto grid = expand_grid(cfg);
  const int reps = cfg.replicates;

  // Latent graphs, one per replicate. Dataset sources share a single graph.
  std::string source_tag;
  std::vector<Graph> latents;
  latents.reserve(static_cast<std::size_t>(reps));
  if (cfg.generate) {
    source_tag = format_double(cfg.generate->homophily);
    const std::uint64_t gen_master = cfg.generate->seed;
    for (int r = 0; r < reps; ++r) {
      GenParams p = *cfg.generate;
      p.seed = derive_seed(gen_master, static_cast<std::uint64_t>(r), 0,
                           "generate");
      latents.push_back(generate(p));
    }
  } else {
    source_tag = cfg.dataset->name.empty() ? "dataset" : cfg.dataset->name;
    DatasetLoad loaded = load_dataset(cfg.dataset->edges_path,
                                      cfg.dataset->labels_path,
                                      cfg.dataset->minority_label);
    for (int r = 0; r < reps; ++r) {
      latents.push_back(loaded.graph);
    }
  }
  for (const NodeId k : cfg.k_values) {
    if (k < 1 || k > latents.front().node_count()) {
      throw std::invalid_argument("k=" + std::to_string(k) +
                                  " outside [1, n]");
    }
  }

  // Work item = (grid point, replicate); each one fills a pre-assigned slot,
  // so the record table is independent of scheduling.
  const std::size_t items = grid.size() * static_cast<std::size_t>(reps);
  std::vector<std::vector<SweepRecord>> slots(items);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t item = next.fetch_add(1);
      if (item >= items) return;
      const std::size_t gp = item / static_cast<std::size_t>(reps);
      const int rep = static_cast<int>(item % static_cast<std::size_t>(reps));
      const GridPoint& point = grid[gp];
      const Graph& latent = latents[static_cast<std::size_t>(rep)];

      Graph observed = [&]() {
        if (point.noise_type == "none") return latent;
        const NoiseSpec spec =
            make_noise_spec(point.noise_type, point.value, point.other);
        const RetainProbabilities probs = retain_probs(latent, spec);
        return apply_noise(latent, probs,
                           derive_seed(cfg.master_seed,
                                       static_cast<std::uint64_t>(rep), gp,
                                       "noise"));
      }();

      // One tie permutation per replicate, shared by every grid point, so
      // noise effects are isolated from tie-break variance and identity
      // noise reproduces the no-noise rows exactly.
      const std::uint64_t tie_seed = derive_seed(
          cfg.master_seed, static_cast<std::uint64_t>(rep), 0, "ties");
      const RankingResult ranking = degree_ranking(observed, tie_seed);

      auto& out = slots[item];
      out.reserve(cfg.k_values.size());
      for (const NodeId k : cfg.k_values) {
        SweepRecord rec;
        rec.noise_type = point.noise_type;
        rec.param_name = point.param_name;
        rec.param_value = point.value;
        rec.h_or_dataset = source_tag;
        rec.replicate = rep;
        rec.seed = tie_seed;
        rec.k = k;
        rec.latent_edges = latent.edge_count();
        rec.retained_edges = observed.edge_count();
        rec.topk_minority_fraction =
            topk_minority_fraction(ranking, observed.labels(), k);
        out.push_back(std::move(rec));
      }
    }
  };

  const int n_threads = std::min<int>(effective_thread_count(threads),
                                      static_cast<int>(items));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<SweepRecord> records;
  records.reserve(items * cfg.k_values.size());
  for (auto& slot : slots) {
    for (auto& rec : slot) records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Aggregate> aggregate(const std::vector<SweepRecord>& records) {
  using Key = std::tuple<std::string, std::string, double, std::string, NodeId>;
  std::map<Key, std::vector<const SweepRecord*>> groups;
  for (const auto& rec : records) {
    groups[{rec.noise_type, rec.param_name, rec.param_value, rec.h_or_dataset,
            rec.k}]
        .push_back(&rec);
  }

  auto stats_of = [](const std::vector<double>& xs) {
    MetricStats s;
    s.min = s.max = xs.front();
    double sum = 0.0;
    for (const double x : xs) {
      sum += x;
      s.min = std::min(s.min, x);
      s.max = std::max(s.max, x);
    }
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
      double ss = 0.0;
      for (const double x : xs) ss += (x - s.mean) * (x - s.mean);
      s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
  };

  std::vector<Aggregate> out;
  out.reserve(groups.size());
  for (const auto& [key, members] : groups) {
    if (members.empty()) {
      throw std::logic_error("empty aggregation group");
    }
    Aggregate agg;
    std::tie(agg.noise_type, agg.param_name, agg.param_value, agg.h_or_dataset,
             agg.k) = key;
    agg.replicates = static_cast<int>(members.size());
    std::vector<double> fractions, retained;
    fractions.reserve(members.size());
    retained.reserve(members.size());
    for (const auto* rec : members) {
      fractions.push_back(rec->topk_minority_fraction);
      retained.push_back(static_cast<double>(rec->retained_edges));
    }
    agg.fraction = stats_of(fractions);
    agg.retained = stats_of(retained);
    out.push_back(std::move(agg));
  }
  return out;
}

}  // namespace biasnet
