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

#include "bandspec/rng.hpp"

namespace bandspec {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    std::uint64_t const p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace

Counter4 philox4x32_10(Counter4 ctr, Key2 key)
{
    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

RandomStream::RandomStream(std::uint64_t key, std::uint64_t stream_index)
    : key_(key), stream_(stream_index)
{
}

void RandomStream::refill()
{
    Counter4 const ctr{static_cast<std::uint32_t>(block_),
                       static_cast<std::uint32_t>(block_ >> 32),
                       static_cast<std::uint32_t>(stream_),
                       static_cast<std::uint32_t>(stream_ >> 32)};
    Key2 const key{static_cast<std::uint32_t>(key_), static_cast<std::uint32_t>(key_ >> 32)};
    buffer_ = philox4x32_10(ctr, key);
    ++block_;
    next_word_ = 0;
}

RandomStream::result_type RandomStream::operator()()
{
    if (next_word_ > 2)
        refill();
    std::uint64_t const lo = buffer_[next_word_];
    std::uint64_t const hi = buffer_[next_word_ + 1];
    next_word_ += 2;
    return lo | (hi << 32);
}

double RandomStream::uniform()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_positive()
{
    return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
}

RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t replicate_index)
{
    return RandomStream(master_seed, replicate_index);
}

} // namespace bandspec
