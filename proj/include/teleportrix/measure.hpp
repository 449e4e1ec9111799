// Copyright 2026 The Teleportrix Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "teleportrix/ebasis.hpp"
#include "teleportrix/qcore.hpp"

namespace teleportrix {

/// One branch of a projective measurement of a qubit pair.
struct MeasurementOutcome {
    BasisLabel label = BasisLabel::PhiPlus;
    double probability = 0.0;
    /// Normalized post-measurement state of the unmeasured qubits; empty when
    /// the probability is below tol::kProb.
    std::optional<PureState> residual;
};

using QubitPair = std::pair<QubitLabel, QubitLabel>;

/// Projects `pair` of `s` onto each vector of `basis`. Basis vector index bits
/// map to (pair.first, pair.second). The residual keeps the remaining qubits
/// in register order. Throws BadPair when the pair is not two distinct
/// qubits of `s` or leaves nothing unmeasured.
std::array<MeasurementOutcome, 4> project_all(const PureState& s, const QubitPair& pair,
                                              const EntangledBasis& basis);

/// Draws one outcome with the inverse CDF over the project_all probabilities.
///
/// The generator is std::mt19937_64 seeded with `seed`; its first output is
/// mapped to a uniform double in [0, 1) from its top 53 bits. Identical seeds
/// give identical outcomes on every platform. Batches of shots use seed + i
/// for shot i.
MeasurementOutcome sample(const PureState& s, const QubitPair& pair, const EntangledBasis& basis,
                          std::uint64_t seed);

/// Inverse-CDF pick over four probabilities for a uniform draw u in [0, 1).
/// Never returns a zero-probability outcome.
BasisLabel pick_outcome(const std::array<double, 4>& probabilities, double u);

/// Uniform double in [0, 1) from the first output of mt19937_64(seed).
double seeded_uniform(std::uint64_t seed);

}  // namespace teleportrix
