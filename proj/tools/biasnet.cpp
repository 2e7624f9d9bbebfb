#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "biasnet/experiment.hpp"
#include "biasnet/io.hpp"
#include "biasnet/metrics.hpp"
#include "biasnet/netgen.hpp"
#include "biasnet/noise.hpp"
#include "biasnet/ranking.hpp"
#include "biasnet/svg.hpp"

namespace {

using namespace biasnet;

// --h is a data flag, so help is long-form only.
CLI::App* add_command(CLI::App& app, const std::string& name,
                      const std::string& description) {
  CLI::App* cmd = app.add_subcommand(name, description);
  cmd->set_help_flag("--help", "print usage");
  return cmd;
}

struct DatasetArgs {
  std::string edges_path;
  std::string labels_path;
  std::string minority;

  void attach(CLI::App* cmd) {
    cmd->add_option("--edges", edges_path, "edge list file")->required();
    cmd->add_option("--labels", labels_path, "node label file")->required();
    cmd->add_option("--minority", minority,
                    "label token treated as the minority group");
  }

  DatasetLoad load() const {
    return load_dataset(edges_path, labels_path,
                        minority.empty()
                            ? std::nullopt
                            : std::optional<std::string>(minority));
  }
};

void report_dropped(const DatasetLoad& data) {
  if (data.self_loops_dropped > 0 || data.duplicate_edges_dropped > 0) {
    std::printf("dropped self_loops=%" PRId64 " duplicate_edges=%" PRId64 "\n",
                data.self_loops_dropped, data.duplicate_edges_dropped);
  }
}

void add_generate(CLI::App& app) {
  auto cmd = add_command(app, "generate", "generate a synthetic attributed network");
  auto params = std::make_shared<GenParams>();
  auto prefix = std::make_shared<std::string>();
  cmd->add_option("--n", params->n, "node count")->required();
  cmd->add_option("--m", params->m, "edges per arriving node")->required();
  cmd->add_option("--f", params->minority_fraction, "minority fraction")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--h", params->homophily, "homophily")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", params->seed, "RNG seed")->required();
  cmd->add_option("--out-prefix", *prefix, "output path prefix")->required();
  cmd->callback([params, prefix]() {
    if (params->n <= params->m || params->m < 1) {
      throw UsageError("need --n > --m >= 1");
    }
    GenReport report;
    const Graph g = generate(*params, &report);
    write_edge_file(*prefix + ".edges", g.edges());
    write_label_file(*prefix + ".labels", g.labels());
    std::printf("wrote %s.edges %s.labels nodes=%d edges=%" PRId64 "\n",
                prefix->c_str(), prefix->c_str(), g.node_count(),
                g.edge_count());
    if (report.zero_weight_fallbacks > 0) {
      std::printf("zero_weight_fallbacks=%" PRId64 "\n",
                  report.zero_weight_fallbacks);
    }
  });
}

void add_perturb(CLI::App& app) {
  auto cmd = add_command(app, "perturb", "apply edge noise to a network");
  auto data = std::make_shared<DatasetArgs>();
  data->attach(cmd);
  auto type = std::make_shared<std::string>();
  auto p = std::make_shared<double>();
  auto rho = std::make_shared<double>();
  auto alpha = std::make_shared<double>();
  auto other = std::make_shared<double>(0.9);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--noise", *type, "noise type")->required();
  auto p_opt = cmd->add_option("--p", *p, "baseline retain probability")
                   ->check(CLI::Range(0.0, 1.0));
  auto rho_opt = cmd->add_option("--rho", *rho, "attribute retain parameter")
                     ->check(CLI::Range(0.0, 1.0));
  auto alpha_opt = cmd->add_option("--alpha", *alpha, "structure noise exponent")
                       ->check(CLI::NonNegativeNumber);
  cmd->add_option("--other", *other, "non-targeted retain probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", *seed, "RNG seed")->required();
  cmd->add_option("--out", *out, "output edge list path")->required();
  cmd->callback([=]() {
    std::string param;
    try {
      param = noise_param_name(*type);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    double value = 0.0;
    const auto take = [&](const CLI::Option* opt, double v,
                          const char* flag) {
      if (opt->count() == 0) {
        throw UsageError("noise type '" + *type + "' requires " + flag);
      }
      value = v;
    };
    if (param == "p") take(p_opt, *p, "--p");
    if (param == "rho") take(rho_opt, *rho, "--rho");
    if (param == "alpha") take(alpha_opt, *alpha, "--alpha");

    const DatasetLoad loaded = data->load();
    report_dropped(loaded);
    const NoiseSpec spec = make_noise_spec(*type, value, *other);
    const RetainProbabilities probs = retain_probs(loaded.graph, spec);
    const Graph observed = apply_noise(loaded.graph, probs, *seed);
    write_edge_file(*out, observed.edges(), &loaded.node_names);
    write_id_map(*out + ".idmap", loaded.node_names);
    std::printf("latent_edges=%" PRId64 " retained_edges=%" PRId64 "\n",
                loaded.graph.edge_count(), observed.edge_count());
  });
}

void add_rank(CLI::App& app) {
  auto cmd = add_command(app, "rank", "degree ranking and top-k minority fraction");
  auto data = std::make_shared<DatasetArgs>();
  data->attach(cmd);
  auto k = std::make_shared<NodeId>(0);
  auto tie_seed = std::make_shared<std::uint64_t>(0);
  auto curve_path = std::make_shared<std::string>();
  auto k_min = std::make_shared<NodeId>(kDefaultCurveStart);
  auto k_max = std::make_shared<NodeId>(0);
  cmd->add_option("--k", *k, "ranking prefix size (default: top 1%)");
  cmd->add_option("--tie-seed", *tie_seed, "tie-break seed");
  cmd->add_option("--curve", *curve_path, "write the fraction-vs-k curve CSV");
  cmd->add_option("--k-min", *k_min, "curve start (must exceed 10)");
  cmd->add_option("--k-max", *k_max, "curve end (default: n)");
  cmd->callback([=]() {
    const DatasetLoad loaded = data->load();
    report_dropped(loaded);
    const NodeId n = loaded.graph.node_count();
    const NodeId eff_k = *k > 0 ? *k : default_top_k(n);
    const RankingResult ranking = degree_ranking(loaded.graph, *tie_seed);
    const double fraction =
        topk_minority_fraction(ranking, loaded.graph.labels(), eff_k);
    std::printf("k=%d minority_fraction=%s tie_seed=%" PRIu64 "\n", eff_k,
                format_double(fraction).c_str(), *tie_seed);
    if (!curve_path->empty()) {
      const NodeId hi = *k_max > 0 ? *k_max : n;
      const auto curve = minority_fraction_curve(
          ranking, loaded.graph.labels(), *k_min, hi);
      std::ofstream out(*curve_path);
      if (!out) throw DataError("cannot write '" + *curve_path + "'");
      out << "k,minority_fraction\n";
      for (const auto& [kk, frac] : curve) {
        out << kk << ',' << format_double(frac) << '\n';
      }
      std::printf("wrote %s\n", curve_path->c_str());
    }
  });
}

void add_stats(CLI::App& app) {
  auto cmd = add_command(app, "stats", "label partition statistics");
  auto data = std::make_shared<DatasetArgs>();
  data->attach(cmd);
  cmd->callback([data]() {
    const DatasetLoad loaded = data->load();
    report_dropped(loaded);
    const PartitionReport r = partition_report(loaded.graph);
    std::printf("nodes=%d\n", r.nodes);
    std::printf("edges=%" PRId64 "\n", r.edges);
    std::printf("minority_fraction=%.3f\n", r.minority_fraction);
    std::printf("Q_mod=%.3f\n", r.modularity);
    std::printf("assortativity=%.3f%s\n", r.assortativity,
                r.assortativity_degenerate ? " (degenerate: single group)" : "");
  });
}

void add_sweep(CLI::App& app) {
  auto cmd = add_command(app, "sweep", "run a Monte Carlo noise sweep");
  auto config_path = std::make_shared<std::string>();
  auto out_override = std::make_shared<std::string>();
  auto threads = std::make_shared<int>(0);
  cmd->add_option("--config", *config_path, "sweep config JSON")->required();
  cmd->add_option("--out", *out_override, "override the config output path");
  cmd->add_option("--threads", *threads, "worker count (default: BIASNET_THREADS)");
  cmd->callback([=]() {
    SweepConfig cfg = load_sweep_config(*config_path);
    if (!out_override->empty()) cfg.out_path = *out_override;
    if (cfg.out_path.empty()) {
      throw UsageError("no output path: set 'out' in the config or pass --out");
    }
    const auto records = run_sweep(cfg, *threads);
    write_sweep_csv(cfg.out_path, records);
    if (cfg.dataset) {
      const DatasetLoad loaded =
          load_dataset(cfg.dataset->edges_path, cfg.dataset->labels_path,
                       cfg.dataset->minority_label);
      write_id_map(cfg.out_path + ".idmap", loaded.node_names);
    }
    std::printf("wrote %s records=%zu\n", cfg.out_path.c_str(),
                records.size());
  });
}

void add_plot(CLI::App& app) {
  auto cmd = add_command(app, "plot", "render sweep results as SVG charts");
  auto csv_path = std::make_shared<std::string>();
  auto prefix = std::make_shared<std::string>();
  cmd->add_option("--csv", *csv_path, "sweep CSV")->required();
  cmd->add_option("--out-prefix", *prefix, "output path prefix")->required();
  cmd->callback([=]() {
    const auto records = read_sweep_csv(*csv_path);
    const auto written = write_sweep_charts(records, *prefix);
    for (const auto& path : written) {
      std::printf("wrote %s\n", path.c_str());
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attributed-network edge-noise simulation toolkit"};
  app.require_subcommand(1);
  add_generate(app);
  add_perturb(app);
  add_rank(app);
  add_stats(app);
  add_sweep(app);
  add_plot(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
