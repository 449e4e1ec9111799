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

#include "teleportrix/ebasis.hpp"

#include <cmath>

#include "teleportrix/errors.hpp"

namespace teleportrix {

namespace {

double inv_norm(Complex c) { return 1.0 / std::sqrt(1.0 + std::norm(c)); }

const std::vector<QubitLabel> kPairLabels{"x", "y"};

void require_finite(Complex c, const char* what) {
    if (!is_finite(c)) {
        throw NonFinite(std::string(what) + " is not finite");
    }
}

}  // namespace

std::string_view to_string(BasisLabel label) {
    switch (label) {
        case BasisLabel::PhiPlus:
            return "PhiPlus";
        case BasisLabel::PhiMinus:
            return "PhiMinus";
        case BasisLabel::PsiPlus:
            return "PsiPlus";
        case BasisLabel::PsiMinus:
            return "PsiMinus";
    }
    return "?";
}

EntangledBasis general_basis(BasisParams params) {
    require_finite(params.ell, "basis parameter ell");
    require_finite(params.p, "basis parameter p");
    const Complex l = params.ell;
    const Complex p = params.p;
    const double big_l = inv_norm(l);
    const double big_p = inv_norm(p);
    std::array<PureState, 4> v{
        make_state(kPairLabels, {big_l, 0.0, 0.0, big_l * l}),
        make_state(kPairLabels, {big_l * std::conj(l), 0.0, 0.0, -big_l}),
        make_state(kPairLabels, {0.0, big_p, big_p * p, 0.0}),
        make_state(kPairLabels, {0.0, big_p * std::conj(p), -big_p, 0.0}),
    };
    return EntangledBasis(params, std::move(v));
}

PureState resource_state(Complex n) { return resource_state(n, "1", "2"); }

PureState resource_state(Complex n, const QubitLabel& first, const QubitLabel& second) {
    require_finite(n, "resource parameter n");
    const double big_n = inv_norm(n);
    return make_state({first, second}, {big_n, 0.0, 0.0, big_n * n});
}

double basis_entropy(Complex c) {
    const double l2 = 1.0 / (1.0 + std::norm(c));
    const double w = l2 * std::norm(c);
    double h = -l2 * std::log2(l2);
    if (w > 0.0) {
        h -= w * std::log2(w);
    }
    return std::max(h, 0.0);
}

Expansion expand_computational(ComputationalLabel x, BasisParams params) {
    const double big_l = inv_norm(params.ell);
    const double big_p = inv_norm(params.p);
    switch (x) {
        case ComputationalLabel::Zero0:
            return {BasisLabel::PhiPlus, BasisLabel::PhiMinus, big_l, big_l * params.ell};
        case ComputationalLabel::One1:
            return {BasisLabel::PhiPlus, BasisLabel::PhiMinus, big_l * std::conj(params.ell), -big_l};
        case ComputationalLabel::Zero1:
            return {BasisLabel::PsiPlus, BasisLabel::PsiMinus, big_p, big_p * params.p};
        case ComputationalLabel::One0:
            return {BasisLabel::PsiPlus, BasisLabel::PsiMinus, big_p * std::conj(params.p), -big_p};
    }
    throw BadInput("unknown computational basis label");
}

}  // namespace teleportrix
