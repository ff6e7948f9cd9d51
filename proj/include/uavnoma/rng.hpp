// uavnoma: aerial-terrestrial uplink NOMA rate-coverage analysis
// Copyright (C) 2026 The uavnoma Authors
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

#ifndef UAVNOMA_RNG_HPP
#define UAVNOMA_RNG_HPP

#include <cstdint>
#include <random>

namespace uavnoma::rng {

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t z);

/// Seed of substream `index` under master `seed`. Distinct indices give
/// statistically independent engines, so streams can run on any thread in
/// any order and still reproduce the same draws.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

/// One substream. The engine is std::mt19937_64 (its output sequence is fixed
/// by the standard) and all variates are built here from raw 64-bit words,
/// never through std::*_distribution, whose algorithms vary between library
/// implementations.
class Stream
{
public:
    Stream(std::uint64_t seed, std::uint64_t index) : engine_(derive_stream_seed(seed, index)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open_below() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Exponential with unit mean.
    double exponential();

    /// Gamma with integer shape and unit scale, as a sum of `shape` exponentials.
    double gamma_int(int shape);

private:
    std::mt19937_64 engine_;
};

} // namespace uavnoma::rng

#endif
