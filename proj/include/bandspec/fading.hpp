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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bandspec/rng.hpp"

namespace bandspec {

using cplx = std::complex<double>;

/// Raised when no closed form is implemented for a requested moment.
class MomentUnavailable : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

enum class FadingKind
{
    Deterministic,       // h = 1
    ComplexGaussianUnit, // h ~ CN(0, 1)
    UniformPhaseUnit,    // h = exp(i*theta), theta ~ U[0, 2pi)
    Rician,              // h = nu + w, w ~ CN(0, s2)
};

/// Law of a single fading coefficient, together with the analytic metadata
/// (amplitude moments, complex mean) that the closed-form baselines consume.
///
/// Two families of moments are kept apart on purpose: amplitude moments
/// E|h|^i (the m_i of the limiting-moment polynomials) and the complex mean
/// E[h], which enters the large-K capacity through |E h|^2.
class FadingSpec
{
  public:
    static FadingSpec deterministic() { return FadingSpec(FadingKind::Deterministic, 1.0, 0.0); }
    static FadingSpec rayleigh() { return FadingSpec(FadingKind::ComplexGaussianUnit, 0.0, 1.0); }
    static FadingSpec uniform_phase() { return FadingSpec(FadingKind::UniformPhaseUnit, 0.0, 0.0); }
    static FadingSpec rician(cplx nu, double s2);

    // Parses "deterministic", "rayleigh", "uniform-phase" or
    // "rician:nu=<float>,s2=<float>". Throws std::invalid_argument.
    static FadingSpec parse(std::string_view tag);

    FadingKind kind() const { return kind_; }
    cplx nu() const { return nu_; }
    double s2() const { return s2_; }

    // Inverse of parse(); round-trips exactly for the three fixed laws.
    std::string tag() const;

    bool operator==(FadingSpec const&) const = default;

  private:
    FadingSpec(FadingKind kind, cplx nu, double s2) : kind_(kind), nu_(nu), s2_(s2) {}

    FadingKind kind_;
    cplx nu_;
    double s2_;
};

cplx sample(FadingSpec const& spec, RandomStream& rng);

// Exact E|h|^order. Throws MomentUnavailable for odd orders of a Rician law
// with nonzero diffuse part, and std::invalid_argument for order < 1.
double amplitude_moment(FadingSpec const& spec, int order);

cplx complex_mean(FadingSpec const& spec);

// m2 - |E h|^2
double coefficient_variance(FadingSpec const& spec);

// m4 / m2^2
double kurtosis(FadingSpec const& spec);

} // namespace bandspec
