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
#include <functional>

namespace bandspec {

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t intervals = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b]. The
// interval with the largest error estimate is bisected until the summed
// estimate drops below abs_tol or max_intervals is reached.
QuadratureResult integrate(Integrand const& f, double a, double b, double abs_tol,
                           std::size_t max_intervals = 10000);

// Integral over [a, inf), mapped onto (0, 1] by t = a + (1 - u) / u.
QuadratureResult integrate_to_infinity(Integrand const& f, double a, double abs_tol,
                                       std::size_t max_intervals = 10000);

} // namespace bandspec
