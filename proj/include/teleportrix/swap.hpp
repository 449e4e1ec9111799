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
#include <optional>
#include <string>
#include <vector>

#include "teleportrix/ebasis.hpp"
#include "teleportrix/qcore.hpp"
#include "teleportrix/teleport.hpp"

namespace teleportrix {

/// Pairs M(|00> + m|11>)_ab and N(|01> + n|10>)_12; Alice measures (a, 1) in
/// the (ell, p) basis and the (b, 2) state is read in the (ell', p') basis.
struct SwapParams {
    Complex m;
    Complex n;
    Complex ell;
    Complex p;
    Complex ell_prime;
    Complex p_prime;
};

struct SwapOutcome {
    BasisLabel label = BasisLabel::PhiPlus;
    double probability = 0.0;
    /// Conditional state of (b, 2); empty for zero-probability outcomes.
    std::optional<PureState> b2_state;
    /// Coefficients of b2_state in the primed basis, canonical label order.
    std::array<Complex, 4> primed_coefficients{};
    /// b2_state equals one primed basis vector up to phase.
    bool reliable = false;
    /// That primed basis vector, when reliable.
    std::optional<BasisLabel> target;
    double b2_entropy = 0.0;
};

/// Joint state over (a, b, 1, 2). Throws NonFinite.
PureState swap_inputs(Complex m, Complex n);

/// Enumerates the four outcomes of the (a, 1) measurement. Throws NonFinite.
std::array<SwapOutcome, 4> swap_run(const SwapParams& params);

/// M^4 N^4 [|n|^2 (1+|m|^2)^2 + |m|^2 (1+|n|^2)^2], the two-outcome swapping
/// probability. Reduces to |n|^2/(1+|n|^2)^2 + |m|^2/(1+|m|^2)^2.
double swap_probability_two_outcome(Complex m, Complex n);

/// 3 |n|^2 N^8 (1+|n|^2)^2, the three-outcome swapping probability for pairs of
/// equal entanglement. Algebraically 3 |n|^2 / (1+|n|^2)^2.
double swap_probability_three_outcome(Complex n);

struct SwapReport {
    Regime regime = Regime::NoFaithful;
    std::vector<BasisLabel> reliable_outcomes;
    double reliable_probability = 0.0;
    /// p' = m n ell* and ell = m n p'*.
    bool condition1 = false;
    /// n ell' = m p* and n p = m ell'*.
    bool condition2 = false;
    std::array<SwapOutcome, 4> outcomes;

    std::size_t k() const { return reliable_outcomes.size(); }
    /// "Deterministic", "Probabilistic<k>" or "None".
    std::string name() const;
};

/// Counts reliable outcomes by brute force and reports the two condition sets
/// alongside, evaluated independently. Throws NonFinite.
SwapReport classify_swap(const SwapParams& params);

}  // namespace teleportrix
