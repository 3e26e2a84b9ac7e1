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

#include <array>
#include <cstdint>
#include <limits>

namespace bandspec {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A stream is identified by a 64-bit key and a 64-bit stream index. The
/// 128-bit counter is laid out as (block_lo, block_hi, stream_lo, stream_hi),
/// so distinct stream indices never share a counter block. The bit layout and
/// the integer-to-real conversions below are part of the reproducibility
/// contract: outputs must not change between releases.
class RandomStream
{
  public:
    using result_type = std::uint64_t;

    RandomStream(std::uint64_t key, std::uint64_t stream_index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on (0, 1]; safe as a log argument.
    double uniform_positive();

    std::uint64_t key() const { return key_; }
    std::uint64_t stream_index() const { return stream_; }

  private:
    void refill();

    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int next_word_ = 4;
};

using Counter4 = std::array<std::uint32_t, 4>;
using Key2 = std::array<std::uint32_t, 2>;

// Raw Philox4x32 with 10 rounds.
Counter4 philox4x32_10(Counter4 counter, Key2 key);

// Independent stream for replicate `replicate_index` of a run seeded with
// `master_seed`.
RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t replicate_index);

} // namespace bandspec
