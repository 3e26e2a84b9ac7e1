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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bandspec/band_matrix.hpp"
#include "bandspec/rng.hpp"

namespace bandspec {

class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Every replicate of every grid point failed numerically.
class AllReplicatesFailed : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind
{
    Spectrum,
    CapacityVsP,
    CapacityVsN,
    Moments,
    Narula,
    ExtremeSnr,
    MpCompare,
    PowerProfile,
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

struct ChainSettings
{
    std::size_t steps = 1'000'000;
    std::size_t burn_in = 1'000;
    std::size_t dump = 0;           // pivots written to the sample CSV
    std::size_t ks_samples = 100'000; // pivots of replicate 0 used for the KS column
};

struct ExperimentConfig
{
    ExperimentKind kind = ExperimentKind::Spectrum;
    ChannelParams channel;
    std::vector<double> p_grid;
    std::vector<std::size_t> n_grid;
    std::vector<double> alpha_grid;
    std::size_t replications = 1;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    std::size_t bins = 200;
    ChainSettings chain;
    std::string regime = "low"; // extreme_snr: "low" or "high"

    // Throws ConfigError.
    void validate() const;
};

// JSON schema:
//   { "experiment": "<kind>", "channel": {...}, "P_grid": [...], "N_grid": [...],
//     "alpha_grid": [...], "replications": R, "seed": S, "output_dir": "...",
//     "bins": B, "chain": {"steps", "burn_in", "dump", "ks_samples"},
//     "regime": "low" | "high" }
// "channel" holds N, K, P and either the Wyner shorthand (alpha, beta,
// fading) or an explicit "diagonals" list of {offset, gain, fading}.
ExperimentConfig parse_config(nlohmann::json const& j);
ExperimentConfig load_config(std::string const& path);
nlohmann::json to_json(ExperimentConfig const& cfg);

// FNV-1a over the canonical JSON dump, excluding the output directory.
std::string config_hash(ExperimentConfig const& cfg);

struct GridPoint
{
    std::string label; // value of the grid coordinate as written to CSV
    double x = 0.0;
    double estimate = 0.0;
    double std_err = 0.0;
    std::size_t replications = 0;
    std::size_t failed = 0;
    std::optional<double> reference;
};

struct ExperimentResult
{
    ExperimentKind kind = ExperimentKind::Spectrum;
    std::vector<GridPoint> points;
    std::vector<std::string> files;
    std::string reference_kind;
    double wall_clock_seconds = 0.0;
};

struct RunOptions
{
    unsigned jobs = 1;
    bool emit_gnuplot = false;
};

// Runs the configured experiment and writes its CSV artifacts. Replicate r of
// grid point g draws from derive_stream(seed, (g << 32) | r); outputs are
// byte-identical for identical (config, seed) regardless of `jobs`.
ExperimentResult run_experiment(ExperimentConfig const& cfg, RunOptions const& opts = {});

struct ReferenceValue
{
    double value;
    std::string kind;
};

// Closed-form per-cell capacity for this ensemble at total power P, when one
// applies: Szego (non-fading Wyner), large-K (fading Wyner, K > 1), Narula
// (Rayleigh two-tap), or the two-tap Szego symbol for unit-modulus taps.
std::optional<ReferenceValue> reference_capacity(ChannelParams const& params, double P);

} // namespace bandspec
