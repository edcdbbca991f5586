#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cramsim/config.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/manifest.hpp"

using namespace cramsim;

namespace {
RunConfig parse(const std::string& text) { return parse_config_text(text, "test"); }
}  // namespace

TEST_CASE("ini parsing") {
  SUBCASE("defaults survive an empty document") {
    const RunConfig cfg = parse("");
    CHECK(cfg.device.lx == 45e-9);
    CHECK(cfg.device.tsf_target == 45.7);
    CHECK(cfg.campaign.v_points == 41);
    CHECK(cfg.campaign.trials == 2000);
    CHECK_FALSE(cfg.campaign.seed_set);
    CHECK(cfg.gate.name == "nand");
    CHECK(cfg.sweep.tmr_grid == std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0});
    CHECK(cfg.sweep.xi_values == std::vector<double>{0.0, 200e-15});
    CHECK_FALSE(cfg.device.tmr_override.has_value());
  }
  SUBCASE("sections, comments, whitespace, repeated keys") {
    const RunConfig cfg = parse(
        "# material set\n"
        "[device]\n"
        "xi = 200e-15\n"
        "t   =  77\n"
        "; semicolon comment\n"
        "tmr_override = 2.5\n"
        "noise_mode = computed\n"
        "\n"
        "[campaign]\n"
        "seed = 12345\n"
        "trials = 100\n"
        "trials = 250\n"
        "delta_ladder = 30, 45.7, 60\n"
        "[gate]\n"
        "name = maj\n"
        "[output]\n"
        "dir = /tmp/somewhere\n");
    CHECK(cfg.device.xi == 200e-15);
    CHECK(cfg.device.temperature == 77.0);
    CHECK(cfg.device.tmr_override == 2.5);
    CHECK(cfg.device.noise_mode == NoiseMode::computed);
    CHECK(cfg.campaign.seed == 12345);
    CHECK(cfg.campaign.seed_set);
    CHECK(cfg.campaign.trials == 250);  // last assignment wins
    CHECK(cfg.campaign.delta_ladder == std::vector<double>{30.0, 45.7, 60.0});
    CHECK(cfg.gate.name == "maj");
    CHECK(cfg.output.dir == "/tmp/somewhere");
  }
  SUBCASE("rejects unknown keys, sections, and malformed lines") {
    CHECK_THROWS_AS(parse("[device]\nwidth = 1\n"), config_error);
    CHECK_THROWS_AS(parse("[materials]\nxi = 1\n"), config_error);
    CHECK_THROWS_AS(parse("[device\nxi = 1\n"), config_error);
    CHECK_THROWS_AS(parse("[device]\nxi\n"), config_error);
    CHECK_THROWS_AS(parse("xi = 1\n"), config_error);  // key outside a section
    CHECK_THROWS_AS(parse("[device]\nxi = fast\n"), config_error);
    CHECK_THROWS_AS(parse("[campaign]\nseed = -4\n"), config_error);
    CHECK_THROWS_AS(parse("[campaign]\ntrials = many\n"), config_error);
    CHECK_THROWS_AS(parse("[device]\nnoise_mode = loud\n"), config_error);
  }
  SUBCASE("seed accepts the full unsigned range") {
    const RunConfig cfg = parse("[campaign]\nseed = 18446744073709551615\n");
    CHECK(cfg.campaign.seed == 18446744073709551615ull);
  }
}

TEST_CASE("json parsing") {
  SUBCASE("plain document") {
    const RunConfig cfg = parse(
        R"({"device": {"xi": 2e-13, "t": 250},
            "campaign": {"seed": 7, "v_points": 11, "delta_ladder": [30, 60]},
            "sweep": {"tmr_grid": [1.0, 2.0]}})");
    CHECK(cfg.device.xi == 2e-13);
    CHECK(cfg.device.temperature == 250.0);
    CHECK(cfg.campaign.seed == 7);
    CHECK(cfg.campaign.seed_set);
    CHECK(cfg.campaign.v_points == 11);
    CHECK(cfg.campaign.delta_ladder == std::vector<double>{30.0, 60.0});
    CHECK(cfg.sweep.tmr_grid == std::vector<double>{1.0, 2.0});
  }
  SUBCASE("manifest documents are accepted as configs; meta is ignored") {
    const RunConfig cfg = parse(
        R"({"config": {"campaign": {"seed": 99}},
            "meta": {"tool": "x", "wall_clock_s": 1.5, "checksums": {"a.csv": "00"}}})");
    CHECK(cfg.campaign.seed == 99);
    CHECK(cfg.campaign.seed_set);
  }
  SUBCASE("rejects unknown keys and malformed documents") {
    CHECK_THROWS_AS(parse(R"({"device": {"width": 1}})"), config_error);
    CHECK_THROWS_AS(parse(R"({"device": 3})"), config_error);
    CHECK_THROWS_AS(parse(R"({"device": {"xi": [1, 2]}})"), config_error);
    CHECK_THROWS_AS(parse(R"({"campaign": {"delta_ladder": ["a"]}})"), config_error);
    CHECK_THROWS_AS(parse(R"({"device": {"xi": 1)"), config_error);
  }
}

TEST_CASE("round trip through the resolved-json form") {
  const RunConfig cfg = parse(
      "[device]\nxi = 200e-15\ntmr_override = 2\nnoise_mode = computed\n"
      "[pulse]\namplitude = -1\n"
      "[campaign]\nseed = 31\nv_points = 5\ndelta_ladder = 30,60\n"
      "[gate]\nname = or\n");
  const nlohmann::json j1 = config_to_json(cfg);
  const RunConfig back = config_from_json(j1, "round-trip");
  const nlohmann::json j2 = config_to_json(back);
  CHECK(j1.dump() == j2.dump());
  CHECK(back.campaign.seed_set);
  CHECK(back.device.tmr_override == 2.0);
  CHECK(back.pulse.amplitude == -1.0);
}

TEST_CASE("campaign grid endpoints are exact") {
  RunConfig cfg = parse("[campaign]\nseed = 1\n");
  const auto grid = cfg.campaign_grid();
  REQUIRE(grid.size() == 41);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.5);
  CHECK(grid[20] == doctest::Approx(0.75).epsilon(1e-14));

  cfg.campaign.v_min = 0.2;
  cfg.campaign.v_max = 1.0;
  cfg.campaign.v_points = 5;
  const auto g2 = cfg.campaign_grid();
  REQUIRE(g2.size() == 5);
  CHECK(g2.front() == 0.2);
  CHECK(g2.back() == 1.0);
  for (size_t i = 0; i < 5; ++i)
    CHECK(g2[i] == doctest::Approx(0.2 + 0.2 * i).epsilon(1e-14));
}

TEST_CASE("validation") {
  RunConfig cfg = parse("[campaign]\nseed = 1\n");
  CHECK_NOTHROW(cfg.validate());

  RunConfig bad = cfg;
  bad.campaign.seed_set = false;
  CHECK_THROWS_WITH_AS(bad.validate(), "campaign.seed is mandatory", config_error);

  bad = cfg;
  bad.campaign.v_points = 1;
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.campaign.v_max = bad.campaign.v_min;
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.campaign.v_min = -0.5;
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.campaign.trials = 0;
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.campaign.delta_ladder = {30.0, -1.0};
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.gate.name = "xnor";
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.sweep.tmr_grid = {1.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.sweep.xi_values.clear();
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.device.p0 = 1.2;
  CHECK_THROWS_AS(bad.validate(), config_error);

  bad = cfg;
  bad.pulse.dt = -1.0;
  CHECK_THROWS_AS(bad.validate(), config_error);
}

TEST_CASE("file loading and checksums") {
  const std::string path = "test_cfg_tmp.ini";
  {
    std::ofstream out(path, std::ios::binary);
    out << "[campaign]\nseed = 5\n";
  }
  const RunConfig cfg = load_config_file(path);
  CHECK(cfg.campaign.seed == 5);
  CHECK_THROWS_AS(load_config_file("no_such_file.ini"), config_error);

  {
    std::ofstream out(path, std::ios::binary);
    out << "foobar";
  }
  // FNV-1a 64 reference vector for "foobar"
  CHECK(fnv1a_hex(fnv1a_file(path)) == "85944171f73967e8");
  CHECK(fnv1a_hex(0) == "0000000000000000");
  std::remove(path.c_str());
}
