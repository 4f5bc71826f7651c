// Copyright 2026 The phaseop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASEOP_SEEDING_H
#define PHASEOP_SEEDING_H

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace phaseop {

/// Engine used everywhere randomness is consumed. Its output sequence is
/// fixed by the standard; the draws below avoid std::*_distribution so that
/// results do not depend on the standard library implementation.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Stable 64-bit FNV-1a hash of a string.
std::uint64_t stable_hash(std::string_view text);

/// Mixes a sequence of words into one seed. Order-sensitive.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_index(Rng &rng, std::uint64_t bound);

/// Uniform double in [lo, hi) with 53 random bits.
double uniform_real(Rng &rng, double lo, double hi);

}  // namespace phaseop

#endif
