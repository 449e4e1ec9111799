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

#include "teleportrix/measure.hpp"

#include <random>

#include "teleportrix/errors.hpp"
#include "teleportrix/tolerances.hpp"

namespace teleportrix {

std::array<MeasurementOutcome, 4> project_all(const PureState& s, const QubitPair& pair,
                                              const EntangledBasis& basis) {
    const std::size_t k = s.num_qubits();
    const std::size_t pos_a = s.position(pair.first);
    const std::size_t pos_b = s.position(pair.second);
    if (pos_a == PureState::npos || pos_b == PureState::npos) {
        throw BadPair("measured qubits must belong to the register");
    }
    if (pos_a == pos_b) {
        throw BadPair("measured qubits must be distinct");
    }
    if (k < 3) {
        throw BadPair("measurement must leave at least one qubit unmeasured");
    }

    const std::size_t bit_a = std::size_t{1} << (k - 1 - pos_a);
    const std::size_t bit_b = std::size_t{1} << (k - 1 - pos_b);
    std::vector<QubitLabel> rest_labels;
    std::vector<std::size_t> rest_bits;
    for (std::size_t pos = 0; pos < k; ++pos) {
        if (pos != pos_a && pos != pos_b) {
            rest_labels.push_back(s.labels()[pos]);
            rest_bits.push_back(std::size_t{1} << (k - 1 - pos));
        }
    }
    const std::size_t rest_dim = std::size_t{1} << rest_bits.size();

    std::array<MeasurementOutcome, 4> out;
    for (BasisLabel label : kBasisLabels) {
        const PureState& b = basis.vector(label);
        std::vector<Complex> residual(rest_dim, 0.0);
        for (std::size_t r = 0; r < rest_dim; ++r) {
            std::size_t base = 0;
            for (std::size_t j = 0; j < rest_bits.size(); ++j) {
                if ((r >> (rest_bits.size() - 1 - j)) & 1U) {
                    base |= rest_bits[j];
                }
            }
            Complex acc = 0.0;
            for (std::size_t xy = 0; xy < 4; ++xy) {
                std::size_t idx = base;
                if (xy & 2U) {
                    idx |= bit_a;
                }
                if (xy & 1U) {
                    idx |= bit_b;
                }
                acc += std::conj(b.amplitude(xy)) * s.amplitude(idx);
            }
            residual[r] = acc;
        }
        double prob = 0.0;
        for (const auto& z : residual) {
            prob += std::norm(z);
        }
        MeasurementOutcome& o = out[index_of(label)];
        o.label = label;
        o.probability = prob;
        if (prob >= tol::kProb) {
            o.residual = make_state(rest_labels, residual);
        }
    }
    return out;
}

double seeded_uniform(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

BasisLabel pick_outcome(const std::array<double, 4>& probabilities, double u) {
    double total = 0.0;
    for (double p : probabilities) {
        total += p;
    }
    const double target = u * total;
    double cumulative = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (probabilities[i] <= 0.0) {
            continue;
        }
        last_nonzero = i;
        cumulative += probabilities[i];
        if (target < cumulative) {
            return kBasisLabels[i];
        }
    }
    return kBasisLabels[last_nonzero];
}

MeasurementOutcome sample(const PureState& s, const QubitPair& pair, const EntangledBasis& basis,
                          std::uint64_t seed) {
    auto outcomes = project_all(s, pair, basis);
    std::array<double, 4> probs{};
    for (std::size_t i = 0; i < 4; ++i) {
        probs[i] = outcomes[i].probability;
    }
    return outcomes[index_of(pick_outcome(probs, seeded_uniform(seed)))];
}

}  // namespace teleportrix
