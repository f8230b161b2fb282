// SPDX-FileCopyrightText: Copyright (c) 2026 The uamnet Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace uam {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a base seed and a list of stream identifiers into one 64-bit seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> streams) noexcept;

/// Seedable, splittable generator. Every stochastic routine in the library
/// takes one of these (or a seed it turns into one) explicitly.
class Rng {
public:
    using result_type = std::mt19937_64::result_type;

    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// Child generator for a named sub-stream; does not advance this one.
    [[nodiscard]] Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, {stream})); }
    [[nodiscard]] Rng split(std::uint64_t a, std::uint64_t b) const { return Rng(derive_seed(seed_, {a, b})); }
    [[nodiscard]] Rng split(std::uint64_t a, std::uint64_t b, std::uint64_t c) const
    {
        return Rng(derive_seed(seed_, {a, b, c}));
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    std::uint64_t poisson(double mean);
    double rayleigh(double sigma);
    /// Gamma(shape, scale) draw; Nakagami-m power gain is gamma(m, 1/m).
    double gamma(double shape, double scale) { return std::gamma_distribution<double>(shape, scale)(engine_); }
    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace uam
