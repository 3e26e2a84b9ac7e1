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
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "bandspec/closed_forms.hpp"
#include "bandspec/eig.hpp"
#include "bandspec/harness.hpp"
#include "bandspec/narula_chain.hpp"
#include "bandspec/quadrature.hpp"
#include "bandspec/spectral.hpp"
#include "bandspec/stats.hpp"
#include "output.hpp"

namespace bandspec {

namespace fs = std::filesystem;
using detail::CsvWriter;
using detail::format_number;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t stream_index(std::size_t point, std::size_t replicate)
{
    return (static_cast<std::uint64_t>(point) << 32) | static_cast<std::uint64_t>(replicate);
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Each index owns its
// own result slot, so the reduction order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    unsigned const workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), count));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                    }
                }
            });
    }
    if (error)
        std::rethrow_exception(error);
}

/// Replicate values for one grid point; NaN marks a numerically failed replicate.
struct ReplicateValues
{
    std::vector<double> values;

    Estimate estimate() const
    {
        std::vector<double> ok;
        for (double v : values)
            if (!std::isnan(v))
                ok.push_back(v);
        return summarize(ok);
    }
    std::size_t failed() const
    {
        return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }));
    }
};

struct WynerShape
{
    double alpha;
    FadingSpec fading;
};

// Offsets exactly {-1, 0, +1}, centre gain 1, equal side gains, one shared law.
std::optional<WynerShape> symmetric_wyner(ChannelParams const& p)
{
    if (p.diagonals.size() != 3)
        return std::nullopt;
    Diagonal const* by_offset[3] = {nullptr, nullptr, nullptr};
    for (auto const& d : p.diagonals)
    {
        if (d.offset < -1 || d.offset > 1)
            return std::nullopt;
        by_offset[d.offset + 1] = &d;
    }
    if (!by_offset[0] || !by_offset[1] || !by_offset[2])
        return std::nullopt;
    if (by_offset[1]->gain != 1.0 || by_offset[0]->gain != by_offset[2]->gain)
        return std::nullopt;
    if (!(by_offset[0]->fading == by_offset[1]->fading) || !(by_offset[2]->fading == by_offset[1]->fading))
        return std::nullopt;
    return WynerShape{by_offset[0]->gain, by_offset[1]->fading};
}

struct TwoTapShape
{
    FadingSpec a; // offset 0
    FadingSpec b; // offset -1
};

// K = 1, unit gains on offsets 0 and -1, and nothing else with nonzero gain.
std::optional<TwoTapShape> two_tap(ChannelParams const& p)
{
    if (p.K != 1)
        return std::nullopt;
    Diagonal const* a = nullptr;
    Diagonal const* b = nullptr;
    for (auto const& d : p.diagonals)
    {
        if (d.offset == 0)
            a = &d;
        else if (d.offset == -1)
            b = &d;
        else if (d.gain != 0.0)
            return std::nullopt;
    }
    if (!a || !b || a->gain != 1.0 || b->gain != 1.0)
        return std::nullopt;
    return TwoTapShape{a->fading, b->fading};
}

bool unit_modulus(FadingSpec const& f)
{
    return f.kind() == FadingKind::Deterministic || f.kind() == FadingKind::UniformPhaseUnit;
}

bool phase_symmetric(FadingSpec const& f)
{
    return f.kind() == FadingKind::ComplexGaussianUnit || f.kind() == FadingKind::UniformPhaseUnit ||
           (f.kind() == FadingKind::Rician && f.nu() == cplx{});
}

struct MomentReference
{
    std::array<double, 3> values;
    std::string kind;
};

std::optional<MomentReference> moment_reference(ChannelParams const& p)
{
    auto const w = symmetric_wyner(p);
    if (!w)
        return std::nullopt;
    if (w->fading.kind() == FadingKind::Deterministic)
    {
        // H H^dagger -> K T^2 with T the symbol 1 + 2 alpha cos(2 pi f).
        std::array<double, 3> v{};
        for (int q = 1; q <= 3; ++q)
        {
            auto integrand = [&](double f) { return std::pow(1.0 + 2.0 * w->alpha * std::cos(2.0 * std::numbers::pi * f), 2 * q); };
            v[q - 1] = std::pow(static_cast<double>(p.K), q) * integrate(integrand, 0.0, 1.0, 1e-12).value;
        }
        return MomentReference{v, "szego"};
    }
    if (p.K == 1 && phase_symmetric(w->fading))
    {
        auto const M = limiting_moments(amplitude_moment(w->fading, 2), amplitude_moment(w->fading, 4),
                                        amplitude_moment(w->fading, 6), w->alpha);
        return MomentReference{{M.m1, M.m2, M.m3}, "limiting_moments"};
    }
    return std::nullopt;
}

double two_tap_szego(double P)
{
    if (P == 0.0)
        return 0.0;
    auto integrand = [&](double f) { return std::log1p(P * (2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * f))); };
    return 2.0 * integrate(integrand, 0.0, 0.5, 5e-11).value;
}

std::string optional_cell(std::optional<double> v)
{
    return v ? format_number(*v) : std::string{};
}

class Runner
{
  public:
    Runner(ExperimentConfig const& cfg, RunOptions const& opts) : cfg_(cfg), opts_(opts)
    {
        fs::create_directories(cfg_.output_dir);
        result_.kind = cfg_.kind;
    }

    ExperimentResult run()
    {
        auto const start = std::chrono::steady_clock::now();
        switch (cfg_.kind)
        {
        case ExperimentKind::Spectrum:
            spectrum();
            break;
        case ExperimentKind::CapacityVsP:
            capacity_vs_p();
            break;
        case ExperimentKind::CapacityVsN:
            capacity_vs_n();
            break;
        case ExperimentKind::Moments:
            moments();
            break;
        case ExperimentKind::Narula:
            narula();
            break;
        case ExperimentKind::ExtremeSnr:
            if (cfg_.regime == "low")
                low_snr();
            else
                high_snr();
            break;
        case ExperimentKind::MpCompare:
            mp_compare();
            break;
        case ExperimentKind::PowerProfile:
            power_profile_gap();
            break;
        }
        result_.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool any_ok = result_.points.empty();
        for (auto const& p : result_.points)
            any_ok = any_ok || p.failed < p.replications + p.failed;
        if (!any_ok)
            throw AllReplicatesFailed("all replicates failed numerically");
        return result_;
    }

  private:
    fs::path file(std::string const& name) const { return fs::path(cfg_.output_dir) / name; }

    void finish(CsvWriter const& w, std::string const& xlabel, std::string const& ylabel, int x = 1, int y = 2,
                bool errorbars = true)
    {
        result_.files.push_back(w.path().string());
        if (opts_.emit_gnuplot)
            result_.files.push_back(detail::write_gnuplot(w.path(), xlabel, ylabel, x, y, errorbars).string());
    }

    void add_point(std::string label, double x, Estimate const& e, std::size_t failed, std::optional<double> ref)
    {
        result_.points.push_back({std::move(label), x, e.mean, e.std_err, e.count, failed, ref});
    }

    std::vector<std::string> estimate_cells(GridPoint const& p) const
    {
        return {p.label, format_number(p.estimate), format_number(p.std_err), format_number(p.replications),
                format_number(p.failed), optional_cell(p.reference)};
    }

    std::vector<std::string> reference_meta() const
    {
        return {"reference=" + (result_.reference_kind.empty() ? std::string("none") : result_.reference_kind)};
    }

    std::vector<double> power_grid() const
    {
        return cfg_.p_grid.empty() ? std::vector<double>{cfg_.channel.power} : cfg_.p_grid;
    }

    // ---- spectrum ---------------------------------------------------------

    void spectrum()
    {
        std::size_t const R = cfg_.replications;
        std::vector<std::vector<double>> spectra(R);
        std::vector<char> ok(R, 0);
        parallel_for(R, opts_.jobs, [&](std::size_t r) {
            RandomStream rng = derive_stream(cfg_.seed, stream_index(0, r));
            try
            {
                auto const S = eigenvalues(gram(generate_channel(cfg_.channel, rng)));
                spectra[r].assign(S.values().begin(), S.values().end());
                ok[r] = 1;
            }
            catch (NumericalError const&)
            {
            }
        });

        std::vector<double> pooled;
        for (std::size_t r = 0; r < R; ++r)
            if (ok[r])
                pooled.insert(pooled.end(), spectra[r].begin(), spectra[r].end());
        EmpiricalSpectrum const all(std::move(pooled));

        {
            CsvWriter w(file("spectrum.csv"), cfg_, {"index", "eigenvalue"});
            for (std::size_t i = 0; i < all.size(); ++i)
                w.row({format_number(i), format_number(all.values()[i])});
            finish(w, "index", "eigenvalue", 1, 2, false);
        }
        {
            CsvWriter w(file("histogram.csv"), cfg_, {"bin_left", "bin_right", "count", "cum_fraction"});
            for (auto const& b : histogram(all, cfg_.bins))
                w.row({format_number(b.left), format_number(b.right), format_number(b.count), format_number(b.cum_fraction)});
            finish(w, "eigenvalue", "cumulative fraction", 2, 4, false);
        }

        double const K = static_cast<double>(cfg_.channel.K);
        for (double P : power_grid())
        {
            ReplicateValues rv;
            for (std::size_t r = 0; r < R; ++r)
                rv.values.push_back(ok[r] ? shannon_transform(EmpiricalSpectrum(spectra[r]), P / K) : kNaN);
            auto const ref = reference_capacity(cfg_.channel, P);
            if (ref)
                result_.reference_kind = ref->kind;
            add_point(format_number(P), P, rv.estimate(), rv.failed(), ref ? std::optional(ref->value) : std::nullopt);
        }
        write_points("shannon.csv", "P", "Shannon transform [nats]");
    }

    void write_points(std::string const& name, std::string const& xname, std::string const& ylabel)
    {
        CsvWriter w(file(name), cfg_, {xname, "estimate", "std_err", "replications", "failed", "reference"},
                    reference_meta());
        for (auto const& p : result_.points)
            w.row(estimate_cells(p));
        finish(w, xname, ylabel);
    }

    // ---- capacity -----------------------------------------------------------

    void capacity_vs_p()
    {
        std::size_t const R = cfg_.replications;
        auto const grid = cfg_.p_grid;
        std::vector<ReplicateValues> per_p(grid.size(), ReplicateValues{std::vector<double>(R, kNaN)});
        parallel_for(R, opts_.jobs, [&](std::size_t r) {
            RandomStream rng = derive_stream(cfg_.seed, stream_index(0, r));
            auto const A = gram(generate_channel(cfg_.channel, rng));
            for (std::size_t g = 0; g < grid.size(); ++g)
            {
                try
                {
                    per_p[g].values[r] = log_det_shifted_per_dim(A, grid[g] / static_cast<double>(cfg_.channel.K));
                }
                catch (NumericalError const&)
                {
                }
            }
        });
        for (std::size_t g = 0; g < grid.size(); ++g)
        {
            auto const ref = reference_capacity(cfg_.channel, grid[g]);
            if (ref)
                result_.reference_kind = ref->kind;
            add_point(format_number(grid[g]), grid[g], per_p[g].estimate(), per_p[g].failed(),
                      ref ? std::optional(ref->value) : std::nullopt);
        }
        write_points("capacity.csv", "P", "capacity [nats/cell]");
    }

    void capacity_vs_n()
    {
        std::size_t const R = cfg_.replications;
        auto const grid = cfg_.n_grid;
        double const P = cfg_.channel.power;
        std::vector<ReplicateValues> per_n(grid.size(), ReplicateValues{std::vector<double>(R, kNaN)});
        parallel_for(grid.size() * R, opts_.jobs, [&](std::size_t task) {
            std::size_t const g = task / R;
            std::size_t const r = task % R;
            ChannelParams params = cfg_.channel;
            params.N = grid[g];
            RandomStream rng = derive_stream(cfg_.seed, stream_index(g, r));
            try
            {
                per_n[g].values[r] = log_det_shifted_per_dim(gram(generate_channel(params, rng)), params.rho());
            }
            catch (NumericalError const&)
            {
            }
        });
        auto const ref = reference_capacity(cfg_.channel, P);
        if (ref)
            result_.reference_kind = ref->kind;
        for (std::size_t g = 0; g < grid.size(); ++g)
            add_point(format_number(grid[g]), static_cast<double>(grid[g]), per_n[g].estimate(), per_n[g].failed(),
                      ref ? std::optional(ref->value) : std::nullopt);
        write_points("capacity_vs_n.csv", "N", "capacity [nats/cell]");
    }

    // ---- moments ------------------------------------------------------------

    void moments()
    {
        std::size_t const R = cfg_.replications;
        std::vector<ReplicateValues> per_p(3, ReplicateValues{std::vector<double>(R, kNaN)});
        parallel_for(R, opts_.jobs, [&](std::size_t r) {
            RandomStream rng = derive_stream(cfg_.seed, stream_index(0, r));
            auto const A = gram(generate_channel(cfg_.channel, rng));
            for (int p = 1; p <= 3; ++p)
                per_p[p - 1].values[r] = trace_moment(A, p);
        });
        auto const ref = moment_reference(cfg_.channel);
        if (ref)
            result_.reference_kind = ref->kind;
        for (int p = 1; p <= 3; ++p)
            add_point(std::to_string(p), p, per_p[p - 1].estimate(), per_p[p - 1].failed(),
                      ref ? std::optional(ref->values[p - 1]) : std::nullopt);
        write_points("moments.csv", "p", "normalized trace moment");
    }

    // ---- Narula chain -------------------------------------------------------

    void narula()
    {
        std::size_t const R = cfg_.replications;
        auto const grid = cfg_.p_grid;
        std::size_t const retain0 = std::max(cfg_.chain.dump, cfg_.chain.ks_samples);
        std::vector<ChainRun> runs(grid.size() * R);
        parallel_for(runs.size(), opts_.jobs, [&](std::size_t task) {
            std::size_t const g = task / R;
            std::size_t const r = task % R;
            ChainOptions o;
            o.n_steps = cfg_.chain.steps;
            o.burn_in = cfg_.chain.burn_in;
            o.retain = r == 0 ? retain0 : 0;
            RandomStream rng = derive_stream(cfg_.seed, stream_index(g, r));
            runs[task] = simulate_chain(grid[g], o, rng);
        });

        result_.reference_kind = "narula";
        CsvWriter summary(file("narula_summary.csv"), cfg_, {"P", "capacity_estimate", "std_err", "n_steps"});
        CsvWriter compare(file("narula_compare.csv"), cfg_,
                          {"P", "capacity_estimate", "std_err", "replications", "closed_form", "ks_distance"});
        for (std::size_t g = 0; g < grid.size(); ++g)
        {
            // Inverse-variance combination of independent chains.
            double wsum = 0.0, wmean = 0.0;
            for (std::size_t r = 0; r < R; ++r)
            {
                auto const& run = runs[g * R + r];
                double const w = run.std_err > 0.0 ? 1.0 / (run.std_err * run.std_err) : 1.0;
                wsum += w;
                wmean += w * run.ergodic_log_mean;
            }
            Estimate e{wmean / wsum, std::sqrt(1.0 / wsum), R};
            double const P = grid[g];
            double const closed = narula_capacity(P);

            auto const& first = runs[g * R];
            std::size_t const nks = std::min(cfg_.chain.ks_samples, first.samples.size());
            double ks = kNaN;
            if (nks > 0)
            {
                EmpiricalSpectrum const S(std::vector<double>(first.samples.begin(), first.samples.begin() + nks));
                ks = ks_distance(S, [P](double x) { return narula_stationary_cdf(x, P); });
            }
            add_point(format_number(P), P, e, 0, closed);
            summary.row({format_number(P), format_number(e.mean), format_number(e.std_err),
                         format_number(cfg_.chain.steps * R)});
            compare.row({format_number(P), format_number(e.mean), format_number(e.std_err), format_number(R),
                         format_number(closed), format_number(ks)});

            if (cfg_.chain.dump > 0)
            {
                CsvWriter w(file("narula_chain_" + std::to_string(g) + ".csv"), cfg_, {"step", "d", "log_d"},
                            {"P=" + format_number(P)});
                std::size_t const n = std::min(cfg_.chain.dump, first.samples.size());
                for (std::size_t i = 0; i < n; ++i)
                    w.row({format_number(i), format_number(first.samples[i]), format_number(std::log(first.samples[i]))});
                finish(w, "step", "d_n", 1, 2, false);
            }
        }
        finish(summary, "P", "ergodic mean of log d");
        finish(compare, "P", "ergodic mean of log d");
    }

    // ---- extreme SNR --------------------------------------------------------

    struct PairRuns
    {
        std::vector<double> c1, c2; // NaN on failure
    };

    PairRuns capacities_at_two_powers()
    {
        std::size_t const R = cfg_.replications;
        double const K = static_cast<double>(cfg_.channel.K);
        PairRuns pr{std::vector<double>(R, kNaN), std::vector<double>(R, kNaN)};
        parallel_for(R, opts_.jobs, [&](std::size_t r) {
            RandomStream rng = derive_stream(cfg_.seed, stream_index(0, r));
            auto const A = gram(generate_channel(cfg_.channel, rng));
            try
            {
                double const c1 = log_det_shifted_per_dim(A, cfg_.p_grid[0] / K);
                double const c2 = log_det_shifted_per_dim(A, cfg_.p_grid[1] / K);
                pr.c1[r] = c1;
                pr.c2[r] = c2;
            }
            catch (NumericalError const&)
            {
            }
        });
        return pr;
    }

    void write_parameters(std::string const& name)
    {
        CsvWriter w(file(name), cfg_, {"parameter", "estimate", "std_err", "replications", "failed", "reference"},
                    reference_meta());
        for (auto const& p : result_.points)
            w.row(estimate_cells(p));
        finish(w, "parameter", "value", 1, 2, false);
    }

    void low_snr()
    {
        double const P1 = cfg_.p_grid[0];
        double const P2 = cfg_.p_grid[1];
        auto const pr = capacities_at_two_powers();

        // Per replicate, fit C(P) = a P + b P^2 / 2 through both points.
        double const det = P1 * P2 * (P2 - P1) / 2.0;
        std::vector<double> a, b, c1, c2;
        std::size_t failed = 0;
        for (std::size_t r = 0; r < pr.c1.size(); ++r)
        {
            if (std::isnan(pr.c1[r]))
            {
                ++failed;
                continue;
            }
            a.push_back((pr.c1[r] * P2 * P2 / 2.0 - pr.c2[r] * P1 * P1 / 2.0) / det);
            b.push_back((P1 * pr.c2[r] - P2 * pr.c1[r]) / det);
            c1.push_back(pr.c1[r]);
            c2.push_back(pr.c2[r]);
        }
        Estimate const ea = summarize(a);
        Estimate const eb = summarize(b);
        double cov = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            cov += (a[i] - ea.mean) * (b[i] - eb.mean);
        cov = a.size() > 1 ? cov / static_cast<double>(a.size() - 1) / static_cast<double>(a.size()) : 0.0;

        double const ln2 = std::numbers::ln2;
        Estimate ebn0{ln2 / ea.mean, ln2 / (ea.mean * ea.mean) * ea.std_err, ea.count};
        double const s0 = 2.0 * ea.mean * ea.mean / (-eb.mean);
        double const ga = 4.0 * ea.mean / (-eb.mean);
        double const gb = 2.0 * ea.mean * ea.mean / (eb.mean * eb.mean);
        double const var_s0 = ga * ga * ea.std_err * ea.std_err + gb * gb * eb.std_err * eb.std_err + 2.0 * ga * gb * cov;
        Estimate es0{s0, std::sqrt(std::max(var_s0, 0.0)), ea.count};

        std::optional<LowSnrParams> ref;
        if (auto const w = symmetric_wyner(cfg_.channel))
        {
            ref = low_snr_params(static_cast<int>(cfg_.channel.K), w->alpha, amplitude_moment(w->fading, 2),
                                 amplitude_moment(w->fading, 4));
            result_.reference_kind = "low_snr";
        }
        add_point("eb_n0_min", 0, ebn0, failed, ref ? std::optional(ref->eb_n0_min) : std::nullopt);
        add_point("s0", 1, es0, failed, ref ? std::optional(ref->s0) : std::nullopt);
        add_point("capacity_nats@P=" + format_number(P1), P1, summarize(c1), failed, std::nullopt);
        add_point("capacity_nats@P=" + format_number(P2), P2, summarize(c2), failed, std::nullopt);
        write_parameters("extreme_snr.csv");
    }

    void high_snr()
    {
        double const P1 = cfg_.p_grid[0];
        double const P2 = cfg_.p_grid[1];
        auto const pr = capacities_at_two_powers();
        double const span = std::log2(P2) - std::log2(P1);

        // Affine high-SNR expansion C = S (log2 P - L) in bits; the offset is
        // read at the largest power with the asymptotic slope S = 1.
        std::vector<double> slope, offset, c1, c2;
        std::size_t failed = 0;
        for (std::size_t r = 0; r < pr.c1.size(); ++r)
        {
            if (std::isnan(pr.c1[r]))
            {
                ++failed;
                continue;
            }
            double const b1 = pr.c1[r] / std::numbers::ln2;
            double const b2 = pr.c2[r] / std::numbers::ln2;
            slope.push_back((b2 - b1) / span);
            offset.push_back(std::log2(P2) - b2);
            c1.push_back(b1);
            c2.push_back(b2);
        }
        std::optional<HighSnrParams> ref;
        if (auto const t = two_tap(cfg_.channel))
        {
            ref = high_snr_params(t->a, t->b);
            result_.reference_kind = "high_snr";
        }
        add_point("s_inf", 0, summarize(slope), failed, ref ? std::optional(ref->s_inf) : std::nullopt);
        add_point("l_inf", 1, summarize(offset), failed, ref ? std::optional(ref->l_inf) : std::nullopt);
        add_point("capacity_bits@P=" + format_number(P1), P1, summarize(c1), failed, std::nullopt);
        add_point("capacity_bits@P=" + format_number(P2), P2, summarize(c2), failed, std::nullopt);
        write_parameters("extreme_snr.csv");
    }

    // ---- Marchenko-Pastur comparison ---------------------------------------

    void mp_compare()
    {
        std::size_t const R = cfg_.replications;
        auto const grid = cfg_.alpha_grid;
        int const K = static_cast<int>(cfg_.channel.K);
        FadingSpec const law = cfg_.channel.diagonals.at(0).fading;
        double const sigma2 = amplitude_moment(law, 2);
        std::vector<ReplicateValues> per_alpha(grid.size(), ReplicateValues{std::vector<double>(R, kNaN)});
        parallel_for(grid.size() * R, opts_.jobs, [&](std::size_t task) {
            std::size_t const g = task / R;
            std::size_t const r = task % R;
            double const alpha = grid[g];
            auto const params = ChannelParams::wyner(cfg_.channel.N, cfg_.channel.K, alpha, alpha, law, cfg_.channel.power);
            RandomStream rng = derive_stream(cfg_.seed, stream_index(g, r));
            auto const S = eigenvalues(gram(generate_channel(params, rng)));
            double const scale = 1.0 / (K * (1.0 + 2.0 * alpha * alpha));
            std::vector<double> normalized(S.values().begin(), S.values().end());
            for (auto& v : normalized)
                v *= scale;
            per_alpha[g].values[r] = ks_distance(EmpiricalSpectrum(std::move(normalized)),
                                                 [&](double x) { return marchenko_pastur_cdf(x, K, sigma2); });
        });

        CsvWriter w(file("mp_compare.csv"), cfg_, {"alpha", "ks_distance", "std_err", "replications", "failed"},
                    {"reference=marchenko_pastur y=1/K sigma2=" + format_number(sigma2)});
        for (std::size_t g = 0; g < grid.size(); ++g)
        {
            auto const e = per_alpha[g].estimate();
            add_point(format_number(grid[g]), grid[g], e, per_alpha[g].failed(), std::nullopt);
            w.row({format_number(grid[g]), format_number(e.mean), format_number(e.std_err), format_number(e.count),
                   format_number(per_alpha[g].failed())});
        }
        finish(w, "alpha", "KS distance to MP");
    }

    // ---- power profile ------------------------------------------------------

    void power_profile_gap()
    {
        double m2max = 0.0;
        for (auto const& d : cfg_.channel.diagonals)
            m2max = std::max(m2max, amplitude_moment(d.fading, 2));

        CsvWriter w(file("power_profile.csv"), cfg_, {"N", "sup_gap_vs_2N", "m2"});
        for (std::size_t N : cfg_.n_grid)
        {
            ChannelParams params = cfg_.channel;
            params.N = N;
            double const gap = power_profile_refinement_gap(params);
            add_point(format_number(N), static_cast<double>(N), Estimate{gap, 0.0, 1}, 0, std::nullopt);
            w.row({format_number(N), format_number(gap), format_number(m2max)});
        }
        finish(w, "N", "sup |P_N - P_2N|", 1, 2, false);

        ChannelParams params = cfg_.channel;
        params.N = cfg_.n_grid.front();
        std::size_t const cols = params.N * params.K;
        if (params.N * cols <= (1u << 20))
        {
            auto const grid = power_profile(params, params.N, cols);
            CsvWriter g(file("power_grid.csv"), cfg_, {"r", "t", "value"}, {"N=" + format_number(params.N)});
            for (std::size_t r = 0; r < grid.rows; ++r)
                for (std::size_t c = 0; c < grid.cols; ++c)
                    g.row({format_number(static_cast<double>(r) / grid.rows), format_number(static_cast<double>(c) / grid.cols),
                           format_number(grid(r, c))});
            result_.files.push_back(g.path().string());
        }
    }

    ExperimentConfig const& cfg_;
    RunOptions opts_;
    ExperimentResult result_;
};

} // namespace

std::optional<ReferenceValue> reference_capacity(ChannelParams const& params, double P)
{
    if (auto const w = symmetric_wyner(params))
    {
        if (w->fading.kind() == FadingKind::Deterministic)
            return ReferenceValue{wyner_capacity_nonfading(P, w->alpha), "szego"};
        if (params.K > 1)
            return ReferenceValue{wyner_capacity_large_k(P, w->alpha, amplitude_moment(w->fading, 2), complex_mean(w->fading)),
                                  "large_k"};
        return std::nullopt;
    }
    if (auto const t = two_tap(params))
    {
        if (t->a.kind() == FadingKind::ComplexGaussianUnit && t->b.kind() == FadingKind::ComplexGaussianUnit)
            return ReferenceValue{P > 0.0 ? narula_capacity(P) : 0.0, "narula"};
        if (unit_modulus(t->a) && unit_modulus(t->b))
            return ReferenceValue{two_tap_szego(P), "szego_two_tap"};
    }
    return std::nullopt;
}

ExperimentResult run_experiment(ExperimentConfig const& cfg, RunOptions const& opts)
{
    cfg.validate();
    return Runner(cfg, opts).run();
}

} // namespace bandspec
