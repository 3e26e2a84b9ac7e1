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
#include <vector>

#include "bandspec/band_matrix.hpp"
#include "bandspec/spectral.hpp"

namespace bandspec {

/// Real symmetric tridiagonal matrix with nonnegative off-diagonal.
struct RealTridiagonal
{
    std::vector<double> diag;
    std::vector<double> offdiag; // size diag.size() - 1 (or 0)
};

// Unitary band reduction by Givens rotations with bulge chasing, followed by
// a diagonal phase similarity that makes the off-diagonal real and >= 0.
RealTridiagonal reduce_to_tridiagonal(BandedHermitian const& A);

// Number of eigenvalues strictly below x (Sturm sequence with pivmin guard).
std::size_t sturm_count(RealTridiagonal const& T, double x);

struct BisectionOptions
{
    // Interval width at which an eigenvalue is accepted, relative to the
    // Gershgorin scale of T.
    double relative_tolerance = 1e-13;
    // Worker threads; the slicing of the spectrum is fixed, so results do not
    // depend on this value.
    unsigned threads = 1;
};

// All eigenvalues in nondecreasing order.
std::vector<double> tridiag_eigenvalues(RealTridiagonal const& T, BisectionOptions const& opts = {});

EmpiricalSpectrum eigenvalues(BandedHermitian const& A, BisectionOptions const& opts = {});

} // namespace bandspec
