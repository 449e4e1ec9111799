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

#include "teleportrix/swap.hpp"

#include <algorithm>
#include <cmath>

#include "teleportrix/errors.hpp"
#include "teleportrix/measure.hpp"
#include "teleportrix/tolerances.hpp"

namespace teleportrix {

namespace {

void require_finite(const SwapParams& s) {
    for (Complex z : {s.m, s.n, s.ell, s.p, s.ell_prime, s.p_prime}) {
        if (!is_finite(z)) {
            throw NonFinite("swap parameters must be finite");
        }
    }
}

bool nearly_equal(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol::kEq * scale;
}

}  // namespace

PureState swap_inputs(Complex m, Complex n) {
    if (!is_finite(m) || !is_finite(n)) {
        throw NonFinite("swap parameters must be finite");
    }
    const double big_m = 1.0 / std::sqrt(1.0 + std::norm(m));
    const double big_n = 1.0 / std::sqrt(1.0 + std::norm(n));
    const PureState ab = make_state({"a", "b"}, {big_m, 0.0, 0.0, big_m * m});
    const PureState pair12 = make_state({"1", "2"}, {0.0, big_n, big_n * n, 0.0});
    return tensor(ab, pair12);
}

std::array<SwapOutcome, 4> swap_run(const SwapParams& params) {
    require_finite(params);
    const PureState joint = swap_inputs(params.m, params.n);
    const auto measured = project_all(joint, {"a", "1"}, general_basis({params.ell, params.p}));
    const EntangledBasis primed = general_basis({params.ell_prime, params.p_prime});

    std::array<SwapOutcome, 4> out;
    for (const auto& o : measured) {
        SwapOutcome& so = out[index_of(o.label)];
        so.label = o.label;
        so.probability = o.probability;
        if (!o.residual) {
            continue;
        }
        so.b2_state = o.residual;
        so.b2_entropy = entanglement_entropy(*o.residual);
        std::size_t best = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            const PureState& v = primed.vectors()[j];
            Complex c = 0.0;
            for (std::size_t x = 0; x < 4; ++x) {
                c += std::conj(v.amplitude(x)) * o.residual->amplitude(x);
            }
            so.primed_coefficients[j] = c;
            if (std::abs(c) > std::abs(so.primed_coefficients[best])) {
                best = j;
            }
        }
        const double lead = std::abs(so.primed_coefficients[best]);
        so.reliable = true;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != best && std::abs(so.primed_coefficients[j]) >= tol::kVanish * lead) {
                so.reliable = false;
            }
        }
        if (so.reliable) {
            so.target = kBasisLabels[best];
        }
    }
    return out;
}

double swap_probability_two_outcome(Complex m, Complex n) {
    const double a = std::norm(m);
    const double b = std::norm(n);
    const double m2 = 1.0 / (1.0 + a);
    const double n2 = 1.0 / (1.0 + b);
    return m2 * m2 * n2 * n2 * (b * (1.0 + a) * (1.0 + a) + a * (1.0 + b) * (1.0 + b));
}

double swap_probability_three_outcome(Complex n) {
    const double b = std::norm(n);
    const double n2 = 1.0 / (1.0 + b);
    return 3.0 * b * std::pow(n2, 4) * (1.0 + b) * (1.0 + b);
}

std::string SwapReport::name() const {
    switch (regime) {
        case Regime::Deterministic:
            return "Deterministic";
        case Regime::Probabilistic:
            return "Probabilistic" + std::to_string(k());
        case Regime::NoFaithful:
            return "None";
    }
    return "?";
}

SwapReport classify_swap(const SwapParams& params) {
    SwapReport r;
    r.outcomes = swap_run(params);
    for (const auto& o : r.outcomes) {
        if (o.reliable) {
            r.reliable_outcomes.push_back(o.label);
            r.reliable_probability += o.probability;
        }
    }
    if (r.k() == 4) {
        r.regime = Regime::Deterministic;
    } else if (r.k() > 0) {
        r.regime = Regime::Probabilistic;
    }
    const Complex mn = params.m * params.n;
    r.condition1 = nearly_equal(params.p_prime, mn * std::conj(params.ell)) &&
                   nearly_equal(params.ell, mn * std::conj(params.p_prime));
    r.condition2 = nearly_equal(params.n * params.ell_prime, params.m * std::conj(params.p)) &&
                   nearly_equal(params.n * params.p, params.m * std::conj(params.ell_prime));
    return r;
}

}  // namespace teleportrix
