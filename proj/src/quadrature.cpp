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

#include "bandspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bandspec {

namespace {

// Kronrod abscissae (descending) and weights; odd entries are the 7-point
// Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double a;
    double b;
    double value;
    double error;
};

Segment gauss_kronrod_15(Integrand const& f, double a, double b)
{
    double const center = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    double const fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int k = 0; k < 7; ++k)
    {
        double const dx = half * kXgk[k];
        double const pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[k] * pair;
        if (k % 2 == 1)
            gauss += kWg[k / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate(Integrand const& f, double a, double b, double abs_tol, std::size_t max_intervals)
{
    if (a == b)
        return {0.0, 0.0, 0, true};
    double sign = 1.0;
    if (b < a)
    {
        std::swap(a, b);
        sign = -1.0;
    }

    auto by_error = [](Segment const& x, Segment const& y) { return x.error < y.error; };
    std::vector<Segment> heap{gauss_kronrod_15(f, a, b)};
    double total_error = heap.front().error;
    while (total_error > abs_tol && heap.size() < max_intervals)
    {
        std::pop_heap(heap.begin(), heap.end(), by_error);
        Segment const worst = heap.back();
        heap.pop_back();
        double const mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
        {
            // Interval can no longer be split; keep it and stop refining.
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), by_error);
            break;
        }
        Segment const left = gauss_kronrod_15(f, worst.a, mid);
        Segment const right = gauss_kronrod_15(f, mid, worst.b);
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        total_error += left.error + right.error - worst.error;
    }

    // Sum in left-to-right order so the result does not depend on heap layout.
    std::sort(heap.begin(), heap.end(), [](Segment const& x, Segment const& y) { return x.a < y.a; });
    QuadratureResult r;
    for (auto const& s : heap)
    {
        r.value += s.value;
        r.abs_error += s.error;
    }
    r.value *= sign;
    r.intervals = heap.size();
    r.converged = r.abs_error <= abs_tol;
    return r;
}

QuadratureResult integrate_to_infinity(Integrand const& f, double a, double abs_tol, std::size_t max_intervals)
{
    auto mapped = [&](double u) {
        double const t = a + (1.0 - u) / u;
        return f(t) / (u * u);
    };
    return integrate(mapped, 0.0, 1.0, abs_tol, max_intervals);
}

} // namespace bandspec
