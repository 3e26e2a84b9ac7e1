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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandspec/closed_forms.hpp"
#include "bandspec/harness.hpp"

using namespace bandspec;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAllFailed = 3;

std::string number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Subcommand name -> experiment kinds it accepts.
bool accepts(std::string const& sub, ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::Spectrum:
        return sub == "spectrum";
    case ExperimentKind::CapacityVsP:
    case ExperimentKind::CapacityVsN:
        return sub == "capacity";
    case ExperimentKind::Moments:
        return sub == "moments";
    case ExperimentKind::Narula:
        return sub == "narula";
    case ExperimentKind::ExtremeSnr:
        return sub == "extreme-snr";
    case ExperimentKind::MpCompare:
        return sub == "mp-compare";
    case ExperimentKind::PowerProfile:
        return sub == "power-profile";
    }
    return false;
}

ExperimentKind default_kind(std::string const& sub, nlohmann::json const& j)
{
    static std::map<std::string, ExperimentKind> const table{
        {"spectrum", ExperimentKind::Spectrum},       {"moments", ExperimentKind::Moments},
        {"narula", ExperimentKind::Narula},           {"extreme-snr", ExperimentKind::ExtremeSnr},
        {"mp-compare", ExperimentKind::MpCompare},    {"power-profile", ExperimentKind::PowerProfile}};
    if (sub == "capacity")
        return j.contains("N_grid") ? ExperimentKind::CapacityVsN : ExperimentKind::CapacityVsP;
    return table.at(sub);
}

nlohmann::json read_json(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ConfigError("config: " + path + ": " + e.what());
    }
}

struct SimulationArgs
{
    std::string config;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::optional<std::string> out;
    bool gnuplot = false;
};

int run_simulation(std::string const& sub, SimulationArgs const& args)
{
    nlohmann::json j = read_json(args.config);
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");
    if (j.contains("experiment"))
    {
        ExperimentKind const kind = parse_experiment_kind(j["experiment"].get<std::string>());
        if (!accepts(sub, kind))
            throw ConfigError("config: experiment '" + std::string(to_string(kind)) + "' does not match subcommand '" +
                              sub + "'");
    }
    else
        j["experiment"] = std::string(to_string(default_kind(sub, j)));

    ExperimentConfig cfg = parse_config(j);
    if (args.seed)
        cfg.seed = *args.seed;
    if (args.out)
        cfg.output_dir = *args.out;
    cfg.validate();

    auto const result = run_experiment(cfg, RunOptions{args.jobs, args.gnuplot});
    for (auto const& f : result.files)
        std::cout << f << '\n';
    std::size_t failed = 0;
    for (auto const& p : result.points)
        failed += p.failed;
    std::cerr << "bandspec " << to_string(cfg.kind) << ": " << result.points.size() << " grid points, " << failed
              << " failed replicates, " << result.wall_clock_seconds << " s\n";
    return 0;
}

struct ClosedFormArgs
{
    std::string config;
    std::string expr;
    std::optional<double> P, alpha, x, sigma2;
    std::optional<int> K;
    std::optional<std::string> fading, fading_b;
};

int run_closed_form(ClosedFormArgs const& a)
{
    double P = 1.0, alpha = 0.0, sigma2 = 1.0;
    int K = 1;
    FadingSpec fa = FadingSpec::rayleigh();
    if (!a.config.empty())
    {
        // Configuration fields act as defaults for the flags below.
        nlohmann::json j = read_json(a.config);
        j.erase("experiment");
        ExperimentConfig const cfg = parse_config(j);
        P = cfg.channel.power;
        K = static_cast<int>(cfg.channel.K);
        for (auto const& d : cfg.channel.diagonals)
        {
            if (d.offset == 0)
                fa = d.fading;
            else if (d.offset == 1)
                alpha = d.gain;
        }
    }
    P = a.P.value_or(P);
    alpha = a.alpha.value_or(alpha);
    K = a.K.value_or(K);
    sigma2 = a.sigma2.value_or(sigma2);
    try
    {
        if (a.fading)
            fa = FadingSpec::parse(*a.fading);
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(std::string("--fading: ") + e.what());
    }
    FadingSpec fb = fa;
    if (a.fading_b)
    {
        try
        {
            fb = FadingSpec::parse(*a.fading_b);
        }
        catch (std::invalid_argument const& e)
        {
            throw ConfigError(std::string("--fading-b: ") + e.what());
        }
    }
    auto need_x = [&]() {
        if (!a.x)
            throw ConfigError("closed-form: --expr " + a.expr + " needs --x");
        return *a.x;
    };

    std::cout << "quantity,value\n";
    auto emit = [](std::string const& name, double v) { std::cout << name << ',' << number(v) << '\n'; };
    if (a.expr == "wyner")
        emit("capacity_nats", wyner_capacity_nonfading(P, alpha));
    else if (a.expr == "large-k")
        emit("capacity_nats", wyner_capacity_large_k(P, alpha, amplitude_moment(fa, 2), complex_mean(fa)));
    else if (a.expr == "moments")
    {
        auto const M = limiting_moments(amplitude_moment(fa, 2), amplitude_moment(fa, 4), amplitude_moment(fa, 6), alpha);
        emit("M1", M.m1);
        emit("M2", M.m2);
        emit("M3", M.m3);
    }
    else if (a.expr == "narula-pdf")
    {
        double const x = need_x();
        emit("pdf", narula_stationary_pdf(x, P));
        emit("cdf", narula_stationary_cdf(x, P));
    }
    else if (a.expr == "narula")
        emit("capacity_nats", narula_capacity(P));
    else if (a.expr == "low-snr")
    {
        auto const L = low_snr_params(K, alpha, amplitude_moment(fa, 2), amplitude_moment(fa, 4));
        emit("eb_n0_min", L.eb_n0_min);
        emit("s0", L.s0);
    }
    else if (a.expr == "high-snr")
    {
        auto const H = high_snr_params(fa, fb);
        emit("s_inf", H.s_inf);
        emit("l_inf", H.l_inf);
        emit("l_inf_std_err", H.l_inf_std_err);
    }
    else if (a.expr == "mp-cdf")
    {
        double const x = need_x();
        emit("pdf", marchenko_pastur_pdf(x, K, sigma2));
        emit("cdf", marchenko_pastur_cdf(x, K, sigma2));
    }
    else if (a.expr == "exp-integral")
        emit("E1", exp_integral(need_x()));
    else
        throw ConfigError("closed-form: unknown --expr '" + a.expr + "'");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo laboratory for random Hermitian finite-band matrices"};
    app.require_subcommand(1);

    SimulationArgs sim;
    std::map<std::string, CLI::App*> sims;
    for (char const* name : {"spectrum", "capacity", "moments", "narula", "extreme-snr", "mp-compare", "power-profile"})
    {
        auto* s = app.add_subcommand(name, std::string("run the ") + name + " experiment");
        s->add_option("config", sim.config, "JSON configuration")->required();
        s->add_option("--seed", sim.seed, "master seed (overrides the config)");
        s->add_option("--jobs", sim.jobs, "concurrent replicates")->check(CLI::PositiveNumber);
        s->add_option("--out", sim.out, "output directory (overrides the config)");
        s->add_flag("--emit-gnuplot", sim.gnuplot, "write a gnuplot script next to every CSV");
        sims[name] = s;
    }

    ClosedFormArgs cf;
    auto* closed = app.add_subcommand("closed-form", "evaluate a closed-form reference without simulation");
    closed->add_option("config", cf.config, "optional JSON configuration supplying defaults");
    closed->add_option("--expr", cf.expr, "wyner|large-k|moments|narula-pdf|narula|low-snr|high-snr|mp-cdf|exp-integral")
        ->required();
    closed->add_option("--P", cf.P, "total transmit power");
    closed->add_option("--alpha", cf.alpha, "side gain");
    closed->add_option("--K", cf.K, "users per cell");
    closed->add_option("--fading", cf.fading, "fading law of the centre tap");
    closed->add_option("--fading-b", cf.fading_b, "fading law of the second tap (high-snr)");
    closed->add_option("--x", cf.x, "evaluation point");
    closed->add_option("--sigma2", cf.sigma2, "Marchenko-Pastur scale");
    // Accepted for a uniform interface; closed forms are deterministic.
    std::optional<std::uint64_t> unused_seed;
    unsigned unused_jobs = 1;
    std::optional<std::string> unused_out;
    bool unused_gnuplot = false;
    closed->add_option("--seed", unused_seed);
    closed->add_option("--jobs", unused_jobs);
    closed->add_option("--out", unused_out);
    closed->add_flag("--emit-gnuplot", unused_gnuplot);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try
    {
        if (closed->parsed())
            return run_closed_form(cf);
        for (auto const& [name, s] : sims)
            if (s->parsed())
                return run_simulation(name, sim);
    }
    catch (ConfigError const& e)
    {
        std::cerr << "bandspec: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (AllReplicatesFailed const& e)
    {
        std::cerr << "bandspec: " << e.what() << '\n';
        return kExitAllFailed;
    }
    catch (std::exception const& e)
    {
        std::cerr << "bandspec: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
