#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "biasnet/io.hpp"
#include "biasnet/netgen.hpp"
#include "biasnet/svg.hpp"
#include "test_util.hpp"

using namespace biasnet;

TEST_CASE("generated graphs round-trip through the file formats") {
  const Graph g = generate({.n = 90, .m = 3, .minority_fraction = 0.2,
                            .homophily = 0.3, .seed = 8});
  const auto dir = testutil::scratch_dir("roundtrip");
  write_edge_file((dir / "g.edges").string(), g.edges());
  write_label_file((dir / "g.labels").string(), g.labels());

  const auto loaded = load_dataset((dir / "g.edges").string(),
                                   (dir / "g.labels").string(), std::nullopt);
  CHECK(loaded.graph.node_count() == g.node_count());
  CHECK(loaded.graph.edges() == g.edges());
  CHECK(loaded.graph.labels() == g.labels());
  CHECK(loaded.duplicate_edges_dropped == 0);
  CHECK(loaded.self_loops_dropped == 0);

  // files end with a newline
  const auto text = testutil::slurp(dir / "g.edges");
  REQUIRE_FALSE(text.empty());
  CHECK(text.back() == '\n');
}

TEST_CASE("dirty empirical data is cleaned and counted") {
  const auto dir = testutil::scratch_dir("dirty");
  testutil::write_file(dir / "d.labels",
                       "alice F\nbob M\ncarol F\ndave M\nisolated F\n");
  testutil::write_file(dir / "d.edges",
                       "# comment line\n"
                       "alice bob\n"
                       "bob\talice\n"   // reversed duplicate
                       "alice bob\n"    // duplicate
                       "carol carol\n"  // self-loop
                       "carol dave\n"
                       "\n");
  const auto loaded = load_dataset((dir / "d.edges").string(),
                                   (dir / "d.labels").string(), std::nullopt);
  CHECK(loaded.graph.node_count() == 5);
  CHECK(loaded.graph.edge_count() == 2);
  CHECK(loaded.duplicate_edges_dropped == 2);
  CHECK(loaded.self_loops_dropped == 1);
  CHECK(loaded.graph.degree(4) == 0);  // label-file-only node is isolated

  // first-seen label becomes the majority
  CHECK(loaded.graph.label(0) == 0);  // alice F
  CHECK(loaded.graph.label(1) == 1);  // bob M
  CHECK(loaded.label_names[0] == "F");
  CHECK(loaded.label_names[1] == "M");
}

TEST_CASE("minority override flips the label mapping") {
  const auto dir = testutil::scratch_dir("minority");
  testutil::write_file(dir / "d.labels", "a F\nb M\n");
  testutil::write_file(dir / "d.edges", "a b\n");
  const auto loaded = load_dataset((dir / "d.edges").string(),
                                   (dir / "d.labels").string(), "F");
  CHECK(loaded.graph.label(0) == 1);
  CHECK(loaded.graph.label(1) == 0);
  CHECK(loaded.label_names[1] == "F");

  CHECK_THROWS_AS(load_dataset((dir / "d.edges").string(),
                               (dir / "d.labels").string(), "X"),
                  DataError);
}

TEST_CASE("numeric 0/1 labels keep their identity regardless of order") {
  const auto dir = testutil::scratch_dir("numeric");
  testutil::write_file(dir / "d.labels", "a 1\nb 0\n");
  testutil::write_file(dir / "d.edges", "a b\n");
  const auto loaded = load_dataset((dir / "d.edges").string(),
                                   (dir / "d.labels").string(), std::nullopt);
  CHECK(loaded.graph.label(0) == 1);
  CHECK(loaded.graph.label(1) == 0);
}

TEST_CASE("label file problems are data errors") {
  const auto dir = testutil::scratch_dir("labelerr");
  testutil::write_file(dir / "three.labels", "a x\nb y\nc z\n");
  testutil::write_file(dir / "d.edges", "a b\n");
  CHECK_THROWS_AS(load_dataset((dir / "d.edges").string(),
                               (dir / "three.labels").string(), std::nullopt),
                  DataError);

  testutil::write_file(dir / "dup.labels", "a 0\na 1\n");
  CHECK_THROWS_AS(load_dataset((dir / "d.edges").string(),
                               (dir / "dup.labels").string(), std::nullopt),
                  DataError);

  testutil::write_file(dir / "short.labels", "a 0\n");
  CHECK_THROWS_AS(load_dataset((dir / "d.edges").string(),
                               (dir / "short.labels").string(), std::nullopt),
                  DataError);  // edge endpoint 'b' unlabeled

  CHECK_THROWS_AS(load_dataset((dir / "missing.edges").string(),
                               (dir / "dup.labels").string(), std::nullopt),
                  DataError);
}

TEST_CASE("sweep CSV round-trips with the fixed column order") {
  std::vector<SweepRecord> records;
  for (int rep = 0; rep < 3; ++rep) {
    SweepRecord r;
    r.noise_type = "inter";
    r.param_name = "rho";
    r.param_value = 0.3;
    r.h_or_dataset = "0.5";
    r.replicate = rep;
    r.seed = 1234567890123456789ull + static_cast<std::uint64_t>(rep);
    r.k = 20;
    r.latent_edges = 9985;
    r.retained_edges = 4000 + rep;
    r.topk_minority_fraction = 0.05 * rep;
    records.push_back(r);
  }
  const auto dir = testutil::scratch_dir("csv");
  const auto path = (dir / "s.csv").string();
  write_sweep_csv(path, records);

  const auto text = testutil::slurp(path);
  CHECK(text.rfind("noise_type,param_name,param_value,h_or_dataset,replicate,"
                   "seed,k,latent_edges,retained_edges,topk_minority_fraction\n",
                   0) == 0);
  CHECK(text.back() == '\n');
  CHECK(text.find("inter,rho,0.3,0.5,1,") != std::string::npos);

  const auto back = read_sweep_csv(path);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].noise_type == records[i].noise_type);
    CHECK(back[i].param_value == records[i].param_value);
    CHECK(back[i].seed == records[i].seed);
    CHECK(back[i].retained_edges == records[i].retained_edges);
    CHECK(back[i].topk_minority_fraction == records[i].topk_minority_fraction);
  }
}

TEST_CASE("malformed CSV input is rejected") {
  const auto dir = testutil::scratch_dir("badcsv");
  testutil::write_file(dir / "bad_header.csv", "a,b,c\n");
  CHECK_THROWS_AS(read_sweep_csv((dir / "bad_header.csv").string()), DataError);

  testutil::write_file(dir / "short_row.csv",
                       std::string(kSweepCsvHeader) + "\nnone,none,1\n");
  CHECK_THROWS_AS(read_sweep_csv((dir / "short_row.csv").string()), DataError);

  testutil::write_file(dir / "empty.csv", std::string(kSweepCsvHeader) + "\n");
  CHECK_THROWS_AS(read_sweep_csv((dir / "empty.csv").string()), DataError);
}

TEST_CASE("format_double uses a dot separator and round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.25) == "-2.25");
}

TEST_CASE("sweep config parsing") {
  const std::string text = R"({
    "graph": {"generate": {"n": 2000, "m": 5, "f": 0.1, "h": 0.5}},
    "noise": [
      {"type": "inter", "values": [0.1, 0.5], "other": 0.8},
      {"type": "jaccard", "values": [0, 1, 2]}
    ],
    "replicates": 10,
    "k": [20],
    "master_seed": 42,
    "out": "sweep.csv"
  })";
  const SweepConfig cfg = parse_sweep_config(text);
  REQUIRE(cfg.generate.has_value());
  CHECK(cfg.generate->n == 2000);
  CHECK(cfg.generate->minority_fraction == 0.1);
  CHECK(cfg.generate->seed == 42);  // defaults to the master seed
  REQUIRE(cfg.noise.size() == 2);
  CHECK(cfg.noise[0].other == 0.8);
  CHECK(cfg.noise[1].other == 0.9);
  CHECK(cfg.noise[1].values == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(cfg.replicates == 10);
  CHECK(cfg.k_values == std::vector<NodeId>{20});
  CHECK(cfg.out_path == "sweep.csv");

  const std::string dataset_text = R"({
    "graph": {"dataset": {"edges": "aps.edges", "labels": "aps.labels",
                          "name": "aps", "minority": "B"}},
    "noise": [{"type": "baseline", "values": [0.9]}],
    "replicates": 2, "k": [10], "master_seed": 1
  })";
  const SweepConfig ds = parse_sweep_config(dataset_text);
  REQUIRE(ds.dataset.has_value());
  CHECK(ds.dataset->name == "aps");
  CHECK(ds.dataset->minority_label == "B");
  CHECK(ds.out_path.empty());
}

TEST_CASE("sweep config rejects schema violations") {
  CHECK_THROWS_AS(parse_sweep_config("not json"), DataError);
  CHECK_THROWS_AS(parse_sweep_config("{}"), DataError);
  // both sources
  CHECK_THROWS_AS(parse_sweep_config(R"({
    "graph": {"generate": {"n":10,"m":2,"f":0.1,"h":0.5},
              "dataset": {"edges":"e","labels":"l"}},
    "noise": [{"type":"baseline","values":[0.5]}],
    "replicates":1,"k":[1],"master_seed":0})"),
                  DataError);
  // unknown noise type
  CHECK_THROWS_AS(parse_sweep_config(R"({
    "graph": {"generate": {"n":10,"m":2,"f":0.1,"h":0.5}},
    "noise": [{"type":"wat","values":[0.5]}],
    "replicates":1,"k":[1],"master_seed":0})"),
                  DataError);
  // empty values
  CHECK_THROWS_AS(parse_sweep_config(R"({
    "graph": {"generate": {"n":10,"m":2,"f":0.1,"h":0.5}},
    "noise": [{"type":"baseline","values":[]}],
    "replicates":1,"k":[1],"master_seed":0})"),
                  DataError);
}

TEST_CASE("sweep charts contain one polyline per series") {
  std::vector<SweepRecord> records;
  for (const double value : {0.2, 0.8}) {
    for (int rep = 0; rep < 2; ++rep) {
      for (const NodeId k : {5, 10}) {
        SweepRecord r;
        r.noise_type = "inter";
        r.param_name = "rho";
        r.param_value = value;
        r.h_or_dataset = "0.5";
        r.replicate = rep;
        r.k = k;
        r.latent_edges = 100;
        r.retained_edges = static_cast<std::int64_t>(90 * value) + rep;
        r.topk_minority_fraction = 0.2 * value + 0.01 * rep;
        records.push_back(r);
      }
    }
  }
  // matching no-noise rows feed the reference line
  for (int rep = 0; rep < 2; ++rep) {
    for (const NodeId k : {5, 10}) {
      SweepRecord r;
      r.noise_type = "none";
      r.param_name = "none";
      r.param_value = 1.0;
      r.h_or_dataset = "0.5";
      r.replicate = rep;
      r.k = k;
      r.latent_edges = 100;
      r.retained_edges = 100;
      r.topk_minority_fraction = 0.15;
      records.push_back(r);
    }
  }

  const auto dir = testutil::scratch_dir("svg");
  const auto written =
      write_sweep_charts(records, (dir / "chart").string());
  REQUIRE(written.size() == 2);  // one noise type x two metrics

  for (const auto& path : written) {
    const auto svg = testutil::slurp(path);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t polylines = 0, pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
      ++polylines;
      pos += 9;
    }
    CHECK(polylines == 2);  // two k series
    CHECK(svg.find("<polygon") != std::string::npos);        // envelope band
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // reference
  }
}
