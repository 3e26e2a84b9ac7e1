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

#include "bandspec/eig.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <limits>
#include <thread>

namespace bandspec {

namespace {

/// Lower band of a Hermitian matrix with one spare diagonal for the bulge.
class WorkBand
{
  public:
    WorkBand(BandedHermitian const& A)
        : n_(A.order()), width_(A.bandwidth() + 1), data_(n_ * (width_ + 1))
    {
        for (std::size_t i = 0; i < n_; ++i)
            at(i, 0) = A.diag(i);
        for (std::size_t k = 1; k <= A.bandwidth(); ++k)
            for (std::size_t j = 0; j + k < n_; ++j)
                at(j + k, k) = A.sub(k, j);
    }

    std::size_t order() const { return n_; }
    std::size_t width() const { return width_; }

    // Entry (i, j) of the full Hermitian matrix; zero outside storage.
    cplx get(std::size_t i, std::size_t j) const
    {
        if (i >= j)
            return i - j <= width_ ? data_[i * (width_ + 1) + (i - j)] : cplx{};
        return j - i <= width_ ? std::conj(data_[j * (width_ + 1) + (j - i)]) : cplx{};
    }

    void set(std::size_t i, std::size_t j, cplx v)
    {
        if (i >= j)
        {
            if (i - j <= width_)
                data_[i * (width_ + 1) + (i - j)] = v;
        }
        else if (j - i <= width_)
        {
            data_[j * (width_ + 1) + (j - i)] = std::conj(v);
        }
    }

    // Applies G A G^H with G acting on rows/columns (p, p + 1), chosen so that
    // entry (p + 1, col) vanishes. Returns false when it already was zero.
    bool annihilate(std::size_t p, std::size_t col)
    {
        std::size_t const q = p + 1;
        cplx const x1 = get(p, col);
        cplx const x2 = get(q, col);
        if (x2 == cplx{})
            return false;

        double const ax1 = std::abs(x1);
        double const r = std::hypot(ax1, std::abs(x2));
        double c;
        cplx s;
        if (ax1 == 0.0)
        {
            c = 0.0;
            s = std::conj(x2) / std::abs(x2);
        }
        else
        {
            c = ax1 / r;
            s = (x1 / ax1) * std::conj(x2) / r;
        }

        std::size_t const jlo = p >= width_ ? p - width_ : 0;
        std::size_t const jhi = std::min(n_ - 1, q + width_);
        for (std::size_t j = jlo; j <= jhi; ++j)
        {
            if (j == p || j == q)
                continue;
            cplx const x = get(p, j);
            cplx const y = get(q, j);
            set(p, j, c * x + s * y);
            set(q, j, -std::conj(s) * x + c * y);
        }
        set(q, col, cplx{});

        // 2x2 block: B' = G B G^H with G = [[c, s], [-conj(s), c]].
        cplx const app = get(p, p);
        cplx const aqp = get(q, p);
        cplx const apq = std::conj(aqp);
        cplx const aqq = get(q, q);
        cplx const m00 = c * app + s * aqp;
        cplx const m01 = c * apq + s * aqq;
        cplx const m10 = -std::conj(s) * app + c * aqp;
        cplx const m11 = -std::conj(s) * apq + c * aqq;
        set(p, p, (m00 * c + m01 * std::conj(s)).real());
        set(q, p, m10 * c + m11 * std::conj(s));
        set(q, q, (-m10 * s + m11 * c).real());
        return true;
    }

  private:
    cplx& at(std::size_t i, std::size_t k) { return data_[i * (width_ + 1) + k]; }

    std::size_t n_;
    std::size_t width_;
    std::vector<cplx> data_;
};

constexpr std::size_t kSpectrumSlices = 16;

struct SturmData
{
    std::vector<double> const& d;
    std::vector<double> e2;
    double pivmin;
};

SturmData make_sturm(RealTridiagonal const& T)
{
    SturmData s{T.diag, {}, 0.0};
    s.e2.reserve(T.offdiag.size());
    double max_e2 = 1.0;
    for (double e : T.offdiag)
    {
        s.e2.push_back(e * e);
        max_e2 = std::max(max_e2, e * e);
    }
    s.pivmin = DBL_MIN * max_e2;
    return s;
}

std::size_t count_below(SturmData const& s, double x)
{
    std::size_t const n = s.d.size();
    if (n == 0)
        return 0;
    std::size_t count = 0;
    double q = s.d[0] - x;
    if (std::abs(q) < s.pivmin)
        q = -s.pivmin;
    count += q < 0.0;
    for (std::size_t i = 1; i < n; ++i)
    {
        q = s.d[i] - x - s.e2[i - 1] / q;
        if (std::abs(q) < s.pivmin)
            q = -s.pivmin;
        count += q < 0.0;
    }
    return count;
}

// Fills out[clo, chi) with the eigenvalues in [lo, hi); clo and chi are the
// Sturm counts at the interval ends.
void bisect(SturmData const& s, double lo, double hi, std::size_t clo, std::size_t chi, double tol,
            std::vector<double>& out)
{
    if (chi <= clo)
        return;
    double const mid = lo + 0.5 * (hi - lo);
    if (hi - lo <= tol || mid <= lo || mid >= hi)
    {
        std::fill(out.begin() + clo, out.begin() + chi, mid);
        return;
    }
    std::size_t const cm = std::clamp(count_below(s, mid), clo, chi);
    bisect(s, lo, mid, clo, cm, tol, out);
    bisect(s, mid, hi, cm, chi, tol, out);
}

} // namespace

RealTridiagonal reduce_to_tridiagonal(BandedHermitian const& A)
{
    std::size_t const n = A.order();
    RealTridiagonal T;
    T.diag.resize(n);
    T.offdiag.resize(n > 0 ? n - 1 : 0);
    if (n == 0)
        return T;

    WorkBand W(A);
    for (std::size_t m = A.bandwidth(); m >= 2; --m)
    {
        for (std::size_t k = 0; k + m < n; ++k)
        {
            // Zero (k + m, k), then chase the bulge each rotation creates at
            // distance m + 1 down the band.
            std::size_t p = k + m - 1;
            std::size_t col = k;
            while (W.annihilate(p, col))
            {
                std::size_t const bulge_row = p + 1 + m;
                if (bulge_row >= n)
                    break;
                col = p;
                p = bulge_row - 1;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        T.diag[i] = W.get(i, i).real();
    // Diagonal unitary similarity: only the moduli of the off-diagonal matter.
    for (std::size_t i = 0; i + 1 < n; ++i)
        T.offdiag[i] = std::abs(W.get(i + 1, i));
    return T;
}

std::size_t sturm_count(RealTridiagonal const& T, double x)
{
    return count_below(make_sturm(T), x);
}

std::vector<double> tridiag_eigenvalues(RealTridiagonal const& T, BisectionOptions const& opts)
{
    std::size_t const n = T.diag.size();
    std::vector<double> out(n);
    if (n == 0)
        return out;
    if (n == 1)
    {
        out[0] = T.diag[0];
        return out;
    }

    SturmData const s = make_sturm(T);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i)
    {
        double r = 0.0;
        if (i > 0)
            r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n)
            r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    double const scale = std::max(std::abs(lo), std::abs(hi));
    if (scale == 0.0)
        return out;
    double const pad = 2.0 * DBL_EPSILON * scale + 2.0 * s.pivmin;
    lo -= pad;
    hi += pad;
    double const tol = std::max(opts.relative_tolerance * scale, 1e-300);

    // Slice boundaries are fixed independently of the thread count so the
    // bisection tree, and therefore every returned bit, is reproducible.
    std::vector<double> edge(kSpectrumSlices + 1);
    std::vector<std::size_t> count(kSpectrumSlices + 1);
    for (std::size_t k = 0; k <= kSpectrumSlices; ++k)
        edge[k] = lo + (hi - lo) * static_cast<double>(k) / kSpectrumSlices;
    count.front() = 0;
    count.back() = n;
    for (std::size_t k = 1; k < kSpectrumSlices; ++k)
        count[k] = std::clamp(count_below(s, edge[k]), count[k - 1], n);

    auto run_slice = [&](std::size_t k) {
        bisect(s, edge[k], edge[k + 1], count[k], count[k + 1], tol, out);
    };

    unsigned const workers = std::clamp<unsigned>(opts.threads, 1, kSpectrumSlices);
    if (workers == 1)
    {
        for (std::size_t k = 0; k < kSpectrumSlices; ++k)
            run_slice(k);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < kSpectrumSlices; k = next++)
                    run_slice(k);
            });
    }
    return out;
}

EmpiricalSpectrum eigenvalues(BandedHermitian const& A, BisectionOptions const& opts)
{
    return EmpiricalSpectrum(tridiag_eigenvalues(reduce_to_tridiagonal(A), opts));
}

} // namespace bandspec
