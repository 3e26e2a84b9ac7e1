// SPDX-License-Identifier: Apache-2.0
//
// bandspec: Monte Carlo laboratory for random Hermitian finite-band matrices
// Copyright (C) 2026 The bandspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "bandspec/closed_forms.hpp"
#include "bandspec/harness.hpp"

using namespace bandspec;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t data_rows(fs::path const& p)
{
    std::ifstream in(p);
    std::string line;
    std::size_t n = 0;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen)
            header_seen = true;
        else
            ++n;
    }
    return n;
}

fs::path scratch(std::string const& name)
{
    auto const dir = fs::temp_directory_path() / ("bandspec_test_" + name);
    fs::remove_all(dir);
    return dir;
}

json wyner_channel(std::size_t N, std::size_t K, double alpha, std::string const& fading, double P = 1.0)
{
    return {{"N", N}, {"K", K}, {"P", P}, {"alpha", alpha}, {"fading", fading}};
}

} // namespace

TEST_CASE("identical config and seed give byte-identical files")
{
    json j = {{"experiment", "capacity_vs_P"},
              {"channel", wyner_channel(128, 2, 0.5, "rayleigh")},
              {"P_grid", {0.1, 1, 10}},
              {"replications", 6},
              {"seed", 11}};
    auto cfg = parse_config(j);
    cfg.output_dir = scratch("det_a").string();
    auto const a = run_experiment(cfg, {1, false});
    cfg.output_dir = scratch("det_b").string();
    auto const b = run_experiment(cfg, {3, false});
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i)
        CHECK(slurp(a.files[i]) == slurp(b.files[i]));

    cfg.seed = 12;
    cfg.output_dir = scratch("det_c").string();
    auto const c = run_experiment(cfg, {1, false});
    CHECK(slurp(a.files[0]) != slurp(c.files[0]));
}

TEST_CASE("capacity grid row count and metadata")
{
    json j = {{"experiment", "capacity_vs_P"},
              {"channel", wyner_channel(64, 1, 0.3, "rayleigh")},
              {"P_grid", {0.01, 0.1, 1, 10, 100}},
              {"replications", 3},
              {"seed", 5}};
    auto cfg = parse_config(j);
    cfg.output_dir = scratch("rows").string();
    auto const r = run_experiment(cfg);
    REQUIRE(r.points.size() == 5);
    fs::path const csv = fs::path(cfg.output_dir) / "capacity.csv";
    CHECK(data_rows(csv) == 5);
    auto const text = slurp(csv);
    CHECK(text.find("# seed=5 config_hash=" + config_hash(cfg)) != std::string::npos);
    for (auto const& p : r.points)
    {
        CHECK(p.replications == 3);
        CHECK(p.failed == 0);
    }
}

TEST_CASE("spectrum experiment matches the Szego capacity")
{
    json j = {{"experiment", "spectrum"},
              {"channel", wyner_channel(512, 1, 0.5, "deterministic", 10.0)},
              {"replications", 1},
              {"bins", 50}};
    auto cfg = parse_config(j);
    cfg.output_dir = scratch("spectrum").string();
    auto const r = run_experiment(cfg, {1, true});
    REQUIRE(r.points.size() == 1);
    CHECK(std::abs(r.points[0].estimate - wyner_capacity_nonfading(10.0, 0.5)) < 2e-2);
    REQUIRE(r.points[0].reference);
    CHECK(*r.points[0].reference == doctest::Approx(wyner_capacity_nonfading(10.0, 0.5)));
    CHECK(r.reference_kind == "szego");
    CHECK(data_rows(fs::path(cfg.output_dir) / "spectrum.csv") == 512);
    CHECK(data_rows(fs::path(cfg.output_dir) / "histogram.csv") == 50);
    CHECK(fs::exists(fs::path(cfg.output_dir) / "spectrum.csv.gp"));
}

TEST_CASE("other experiment kinds produce their tables")
{
    auto run = [](json j, std::string const& name) {
        auto cfg = parse_config(j);
        cfg.output_dir = scratch(name).string();
        return run_experiment(cfg);
    };
    auto const m = run({{"experiment", "moments"}, {"channel", wyner_channel(256, 1, 0.5, "rayleigh")}, {"replications", 4}},
                       "moments");
    REQUIRE(m.points.size() == 3);
    CHECK(m.reference_kind == "limiting_moments");
    CHECK(m.points[0].estimate == doctest::Approx(*m.points[0].reference).epsilon(0.05));

    auto const n = run({{"experiment", "capacity_vs_N"},
                        {"channel", wyner_channel(8, 1, 0.5, "deterministic", 10.0)},
                        {"N_grid", {32, 64, 128}}},
                       "cap_n");
    REQUIRE(n.points.size() == 3);
    // Edge effects shrink with N.
    CHECK(std::abs(n.points[2].estimate - *n.points[2].reference) < std::abs(n.points[0].estimate - *n.points[0].reference));

    auto const lo = run({{"experiment", "extreme_snr"},
                         {"channel", wyner_channel(256, 1, 0.0, "deterministic")},
                         {"P_grid", {1e-3, 2e-3}},
                         {"regime", "low"}},
                        "low");
    CHECK(lo.points[0].label == "eb_n0_min");
    CHECK(lo.points[1].estimate == doctest::Approx(2.0).epsilon(0.01));

    auto const mp = run({{"experiment", "mp_compare"},
                         {"channel", wyner_channel(128, 2, 0.5, "rayleigh")},
                         {"alpha_grid", {0.1, 0.9}}},
                        "mp");
    CHECK(mp.points.size() == 2);

    auto const pp = run({{"experiment", "power_profile"},
                         {"channel", wyner_channel(8, 1, 0.5, "rayleigh")},
                         {"N_grid", {8, 16}}},
                        "pp");
    CHECK(pp.points[0].estimate >= 0.5);

    auto const nar = run({{"experiment", "narula"},
                          {"channel", {{"N", 4}, {"K", 1}, {"P", 1.0}, {"diagonals", {{{"offset", 0}, {"gain", 1.0}, {"fading", "rayleigh"}}, {{"offset", -1}, {"gain", 1.0}, {"fading", "rayleigh"}}}}}},
                          {"P_grid", {1.0}},
                          {"chain", {{"steps", 20000}, {"ks_samples", 1000}, {"dump", 10}}}},
                         "narula");
    CHECK(nar.points[0].reference == doctest::Approx(narula_capacity(1.0)));
}

TEST_CASE("config errors")
{
    json const good = {{"experiment", "spectrum"}, {"channel", wyner_channel(16, 1, 0.5, "rayleigh")}};
    CHECK_NOTHROW(parse_config(good).validate());

    json j = good;
    j["bogus"] = 1;
    CHECK_THROWS_AS(parse_config(j), ConfigError);
    j = good;
    j.erase("channel");
    CHECK_THROWS_AS(parse_config(j), ConfigError);
    j = good;
    j["channel"]["fading"] = "nakagami";
    CHECK_THROWS_AS(parse_config(j), ConfigError);
    j = good;
    j["experiment"] = "bogus";
    CHECK_THROWS_AS(parse_config(j), ConfigError);
    j = good;
    j["channel"]["N"] = 2;
    CHECK_THROWS_AS(parse_config(j).validate(), ConfigError);
    j = good;
    j["experiment"] = "capacity_vs_P";
    CHECK_THROWS_AS(parse_config(j).validate(), ConfigError);
    j = good;
    j["experiment"] = "extreme_snr";
    j["P_grid"] = {1.0};
    CHECK_THROWS_AS(parse_config(j).validate(), ConfigError);
    j = good;
    j["replications"] = 0;
    CHECK_THROWS_AS(parse_config(j).validate(), ConfigError);
}

TEST_CASE("config serialisation round-trips")
{
    json const j = {{"experiment", "narula"},
                    {"channel", wyner_channel(16, 2, 0.25, "rician:nu=0.8,s2=0.36", 3.0)},
                    {"P_grid", {1, 10}},
                    {"seed", 99},
                    {"output_dir", "x"}};
    auto const cfg = parse_config(j);
    auto const back = parse_config(to_json(cfg));
    CHECK(config_hash(back) == config_hash(cfg));
    auto moved = cfg;
    moved.output_dir = "elsewhere";
    CHECK(config_hash(moved) == config_hash(cfg));
    moved.seed = 100;
    CHECK(config_hash(moved) != config_hash(cfg));
}

TEST_CASE("reference selection")
{
    auto const det = ChannelParams::wyner(16, 1, 0.5, 0.5, FadingSpec::deterministic());
    CHECK(reference_capacity(det, 10.0)->kind == "szego");
    auto const large = ChannelParams::wyner(16, 8, 0.5, 0.5, FadingSpec::rayleigh());
    CHECK(reference_capacity(large, 10.0)->kind == "large_k");
    auto const single = ChannelParams::wyner(16, 1, 0.5, 0.5, FadingSpec::rayleigh());
    CHECK_FALSE(reference_capacity(single, 10.0).has_value());
    ChannelParams two;
    two.N = 16;
    two.diagonals = {{0, 1.0, FadingSpec::rayleigh()}, {-1, 1.0, FadingSpec::rayleigh()}};
    CHECK(reference_capacity(two, 1.0)->value == doctest::Approx(narula_capacity(1.0)));
}

TEST_CASE("command-line exit codes")
{
    auto const dir = scratch("cli");
    fs::create_directories(dir);
    auto write = [&](std::string const& name, json const& j) {
        std::ofstream(dir / name) << j.dump();
        return (dir / name).string();
    };
    std::string const cli = BANDSPEC_CLI;
    auto const ok = write("ok.json", {{"channel", wyner_channel(16, 1, 0.5, "rayleigh")}, {"P_grid", {1, 2}}});
    auto const bad = write("bad.json", {{"channel", wyner_channel(16, 1, 0.5, "rayleigh")}, {"nope", 1}});
    auto const quiet = " > " + (dir / "log").string() + " 2>&1";
    auto status = [&](std::string const& args) { return WEXITSTATUS(std::system((cli + " " + args + quiet).c_str())); };
    CHECK(status("capacity " + ok + " --out " + (dir / "o").string()) == 0);
    CHECK(fs::exists(dir / "o" / "capacity.csv"));
    CHECK(status("capacity " + bad) == 2);
    CHECK(status("moments " + (dir / "missing.json").string()) == 2);
    auto const mismatch = write("mismatch.json", {{"experiment", "capacity_vs_P"},
                                                  {"channel", wyner_channel(16, 1, 0.5, "rayleigh")},
                                                  {"P_grid", {1}}});
    CHECK(status("narula " + mismatch) == 2);
    CHECK(status("closed-form --expr narula --P 1") == 0);
    CHECK(status("closed-form --expr nothing") == 2);
}
