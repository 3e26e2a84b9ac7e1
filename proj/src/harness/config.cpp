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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "bandspec/harness.hpp"

namespace bandspec {

using nlohmann::json;

namespace {

struct KindName
{
    ExperimentKind kind;
    std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ExperimentKind::Spectrum, "spectrum"},       {ExperimentKind::CapacityVsP, "capacity_vs_P"},
    {ExperimentKind::CapacityVsN, "capacity_vs_N"}, {ExperimentKind::Moments, "moments"},
    {ExperimentKind::Narula, "narula"},           {ExperimentKind::ExtremeSnr, "extreme_snr"},
    {ExperimentKind::MpCompare, "mp_compare"},    {ExperimentKind::PowerProfile, "power_profile"},
};

void require_known_keys(json const& j, std::set<std::string> const& allowed, std::string const& where)
{
    for (auto const& [key, value] : j.items())
        if (!allowed.count(key))
            throw ConfigError("config: unknown key '" + key + "' in " + where);
}

template <class T>
T get_or(json const& j, char const* key, T fallback)
{
    if (!j.contains(key))
        return fallback;
    try
    {
        return j.at(key).get<T>();
    }
    catch (json::exception const& e)
    {
        throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
    }
}

FadingSpec parse_fading(json const& j, char const* key)
{
    try
    {
        return FadingSpec::parse(get_or<std::string>(j, key, "rayleigh"));
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(e.what());
    }
}

ChannelParams parse_channel(json const& j)
{
    if (!j.is_object())
        throw ConfigError("config: 'channel' must be an object");
    require_known_keys(j, {"N", "K", "P", "alpha", "beta", "fading", "diagonals"}, "channel");

    ChannelParams p;
    p.N = get_or<std::size_t>(j, "N", 0);
    p.K = get_or<std::size_t>(j, "K", 1);
    p.power = get_or<double>(j, "P", 1.0);
    if (j.contains("diagonals"))
    {
        if (j.contains("alpha") || j.contains("beta") || j.contains("fading"))
            throw ConfigError("config: use either 'diagonals' or the alpha/beta/fading shorthand");
        for (auto const& d : j.at("diagonals"))
        {
            require_known_keys(d, {"offset", "gain", "fading"}, "diagonal");
            if (!d.contains("offset"))
                throw ConfigError("config: diagonal without 'offset'");
            p.diagonals.push_back({get_or<int>(d, "offset", 0), get_or<double>(d, "gain", 1.0),
                                   parse_fading(d, "fading")});
        }
    }
    else
    {
        double const alpha = get_or<double>(j, "alpha", 0.0);
        double const beta = get_or<double>(j, "beta", alpha);
        p = ChannelParams::wyner(p.N, p.K, alpha, beta, parse_fading(j, "fading"), p.power);
    }
    return p;
}

template <class T>
void check_increasing(std::vector<T> const& grid, char const* name)
{
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i]))
            throw ConfigError(std::string("config: ") + name + " must be strictly increasing");
}

} // namespace

std::string_view to_string(ExperimentKind kind)
{
    for (auto const& kn : kKindNames)
        if (kn.kind == kind)
            return kn.name;
    return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name)
{
    for (auto const& kn : kKindNames)
        if (kn.name == name)
            return kn.kind;
    throw ConfigError("config: unknown experiment '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const
{
    try
    {
        channel.validate();
    }
    catch (std::invalid_argument const& e)
    {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (replications < 1)
        throw ConfigError("config: replications must be >= 1");
    if (bins < 1)
        throw ConfigError("config: bins must be >= 1");
    check_increasing(p_grid, "P_grid");
    check_increasing(n_grid, "N_grid");
    check_increasing(alpha_grid, "alpha_grid");
    for (double P : p_grid)
        if (!(P >= 0.0) || !std::isfinite(P))
            throw ConfigError("config: P_grid values must be finite and >= 0");

    switch (kind)
    {
    case ExperimentKind::CapacityVsP:
        if (p_grid.empty())
            throw ConfigError("config: capacity_vs_P needs a nonempty P_grid");
        break;
    case ExperimentKind::CapacityVsN:
    case ExperimentKind::PowerProfile:
        if (n_grid.empty())
            throw ConfigError("config: " + std::string(to_string(kind)) + " needs a nonempty N_grid");
        for (auto n : n_grid)
        {
            ChannelParams c = channel;
            c.N = n;
            try
            {
                c.validate();
            }
            catch (std::invalid_argument const& e)
            {
                throw ConfigError(std::string("config: N_grid entry: ") + e.what());
            }
        }
        break;
    case ExperimentKind::Narula:
        if (p_grid.empty())
            throw ConfigError("config: narula needs a nonempty P_grid");
        if (p_grid.front() <= 0.0)
            throw ConfigError("config: narula needs P > 0");
        if (chain.steps < 100)
            throw ConfigError("config: chain.steps must be >= 100");
        break;
    case ExperimentKind::ExtremeSnr:
        if (regime != "low" && regime != "high")
            throw ConfigError("config: regime must be 'low' or 'high'");
        if (p_grid.size() != 2 || p_grid.front() <= 0.0)
            throw ConfigError("config: extreme_snr needs exactly two positive P values");
        break;
    case ExperimentKind::MpCompare:
        if (alpha_grid.empty())
            throw ConfigError("config: mp_compare needs a nonempty alpha_grid");
        for (double a : alpha_grid)
            if (!(a >= 0.0 && a <= 1.0))
                throw ConfigError("config: alpha_grid values must lie in [0, 1]");
        break;
    case ExperimentKind::Spectrum:
    case ExperimentKind::Moments:
        break;
    }
}

ExperimentConfig parse_config(json const& j)
{
    if (!j.is_object())
        throw ConfigError("config: top level must be an object");
    require_known_keys(j,
                       {"experiment", "channel", "P_grid", "N_grid", "alpha_grid", "replications", "seed",
                        "output_dir", "bins", "chain", "regime"},
                       "config");
    ExperimentConfig cfg;
    if (j.contains("experiment"))
        cfg.kind = parse_experiment_kind(get_or<std::string>(j, "experiment", ""));
    if (!j.contains("channel"))
        throw ConfigError("config: missing 'channel'");
    cfg.channel = parse_channel(j.at("channel"));
    cfg.p_grid = get_or<std::vector<double>>(j, "P_grid", {});
    cfg.n_grid = get_or<std::vector<std::size_t>>(j, "N_grid", {});
    cfg.alpha_grid = get_or<std::vector<double>>(j, "alpha_grid", {});
    cfg.replications = get_or<std::size_t>(j, "replications", 1);
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    cfg.output_dir = get_or<std::string>(j, "output_dir", "out");
    cfg.bins = get_or<std::size_t>(j, "bins", 200);
    cfg.regime = get_or<std::string>(j, "regime", "low");
    if (j.contains("chain"))
    {
        auto const& c = j.at("chain");
        require_known_keys(c, {"steps", "burn_in", "dump", "ks_samples"}, "chain");
        cfg.chain.steps = get_or<std::size_t>(c, "steps", cfg.chain.steps);
        cfg.chain.burn_in = get_or<std::size_t>(c, "burn_in", cfg.chain.burn_in);
        cfg.chain.dump = get_or<std::size_t>(c, "dump", cfg.chain.dump);
        cfg.chain.ks_samples = get_or<std::size_t>(c, "ks_samples", cfg.chain.ks_samples);
    }
    return cfg;
}

ExperimentConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    json j;
    try
    {
        in >> j;
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError("config: " + path + ": " + e.what());
    }
    return parse_config(j);
}

json to_json(ExperimentConfig const& cfg)
{
    json diagonals = json::array();
    for (auto const& d : cfg.channel.diagonals)
        diagonals.push_back({{"offset", d.offset}, {"gain", d.gain}, {"fading", d.fading.tag()}});
    json j = {
        {"experiment", std::string(to_string(cfg.kind))},
        {"channel", {{"N", cfg.channel.N}, {"K", cfg.channel.K}, {"P", cfg.channel.power}, {"diagonals", diagonals}}},
        {"P_grid", cfg.p_grid},
        {"N_grid", cfg.n_grid},
        {"alpha_grid", cfg.alpha_grid},
        {"replications", cfg.replications},
        {"seed", cfg.seed},
        {"output_dir", cfg.output_dir},
        {"bins", cfg.bins},
        {"chain",
         {{"steps", cfg.chain.steps},
          {"burn_in", cfg.chain.burn_in},
          {"dump", cfg.chain.dump},
          {"ks_samples", cfg.chain.ks_samples}}},
        {"regime", cfg.regime},
    };
    return j;
}

std::string config_hash(ExperimentConfig const& cfg)
{
    json j = to_json(cfg);
    j.erase("output_dir");
    std::string const text = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace bandspec
