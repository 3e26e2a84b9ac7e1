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

#include "bandspec/fading.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bandspec {

namespace {

double parse_double(std::string_view text, std::string_view what)
{
    double value = 0.0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("fading: bad value for " + std::string(what) + ": '" +
                                    std::string(text) + "'");
    return value;
}

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

double binomial(int n, int k)
{
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

} // namespace

FadingSpec FadingSpec::rician(cplx nu, double s2)
{
    if (!(s2 >= 0.0) || !std::isfinite(s2) || !std::isfinite(nu.real()) || !std::isfinite(nu.imag()))
        throw std::invalid_argument("fading: rician needs finite nu and s2 >= 0");
    return FadingSpec(FadingKind::Rician, nu, s2);
}

FadingSpec FadingSpec::parse(std::string_view tag)
{
    if (tag == "deterministic")
        return deterministic();
    if (tag == "rayleigh")
        return rayleigh();
    if (tag == "uniform-phase")
        return uniform_phase();

    constexpr std::string_view prefix = "rician:";
    if (tag.substr(0, prefix.size()) != prefix)
        throw std::invalid_argument("fading: unknown law '" + std::string(tag) + "'");

    std::string_view rest = tag.substr(prefix.size());
    double nu = 0.0;
    double s2 = 0.0;
    bool have_nu = false;
    bool have_s2 = false;
    while (!rest.empty())
    {
        auto const comma = rest.find(',');
        std::string_view const item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);

        auto const eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("fading: expected key=value in '" + std::string(tag) + "'");
        std::string_view const key = item.substr(0, eq);
        std::string_view const value = item.substr(eq + 1);
        if (key == "nu")
        {
            nu = parse_double(value, key);
            have_nu = true;
        }
        else if (key == "s2")
        {
            s2 = parse_double(value, key);
            have_s2 = true;
        }
        else
        {
            throw std::invalid_argument("fading: unknown rician parameter '" + std::string(key) + "'");
        }
    }
    if (!have_nu || !have_s2)
        throw std::invalid_argument("fading: rician needs both nu and s2");
    return rician(nu, s2);
}

std::string FadingSpec::tag() const
{
    switch (kind_)
    {
    case FadingKind::Deterministic:
        return "deterministic";
    case FadingKind::ComplexGaussianUnit:
        return "rayleigh";
    case FadingKind::UniformPhaseUnit:
        return "uniform-phase";
    case FadingKind::Rician: {
        std::ostringstream os;
        os.precision(17);
        os << "rician:nu=" << nu_.real() << ",s2=" << s2_;
        return os.str();
    }
    }
    return {};
}

cplx sample(FadingSpec const& spec, RandomStream& rng)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (spec.kind())
    {
    case FadingKind::Deterministic:
        return {1.0, 0.0};
    case FadingKind::UniformPhaseUnit: {
        double const theta = two_pi * rng.uniform();
        return {std::cos(theta), std::sin(theta)};
    }
    case FadingKind::ComplexGaussianUnit:
    case FadingKind::Rician: {
        // |w|^2 ~ Exp(1) and an independent uniform phase give w ~ CN(0, 1).
        double const radius = std::sqrt(-std::log(rng.uniform_positive()));
        double const theta = two_pi * rng.uniform();
        cplx const w(radius * std::cos(theta), radius * std::sin(theta));
        if (spec.kind() == FadingKind::ComplexGaussianUnit)
            return w;
        return spec.nu() + std::sqrt(spec.s2()) * w;
    }
    }
    return {};
}

double amplitude_moment(FadingSpec const& spec, int order)
{
    if (order < 1)
        throw std::invalid_argument("amplitude_moment: order must be >= 1");
    switch (spec.kind())
    {
    case FadingKind::Deterministic:
    case FadingKind::UniformPhaseUnit:
        return 1.0;
    case FadingKind::ComplexGaussianUnit:
        // |h|^2 ~ Exp(1), so E|h|^i = Gamma(1 + i/2).
        return std::tgamma(1.0 + 0.5 * order);
    case FadingKind::Rician: {
        double const nu2 = std::norm(spec.nu());
        double const s2 = spec.s2();
        if (s2 == 0.0)
            return std::pow(std::sqrt(nu2), order);
        if (order % 2 != 0)
            throw MomentUnavailable("amplitude_moment: odd Rician moments are not implemented");
        // E|h|^{2k} = k! s^{2k} L_k(-|nu|^2 / s2), expanded termwise.
        int const k = order / 2;
        double sum = 0.0;
        for (int j = 0; j <= k; ++j)
            sum += binomial(k, j) * std::pow(nu2, j) * std::pow(s2, k - j) / factorial(j);
        return factorial(k) * sum;
    }
    }
    return 0.0;
}

cplx complex_mean(FadingSpec const& spec)
{
    switch (spec.kind())
    {
    case FadingKind::Deterministic:
        return {1.0, 0.0};
    case FadingKind::Rician:
        return spec.nu();
    case FadingKind::ComplexGaussianUnit:
    case FadingKind::UniformPhaseUnit:
        return {0.0, 0.0};
    }
    return {};
}

double coefficient_variance(FadingSpec const& spec)
{
    return amplitude_moment(spec, 2) - std::norm(complex_mean(spec));
}

double kurtosis(FadingSpec const& spec)
{
    double const m2 = amplitude_moment(spec, 2);
    return amplitude_moment(spec, 4) / (m2 * m2);
}

} // namespace bandspec
