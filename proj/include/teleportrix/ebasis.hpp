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
#include <string_view>

#include "teleportrix/qcore.hpp"

namespace teleportrix {

/// Outcome labels of the entangled basis family, in canonical order.
enum class BasisLabel { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<BasisLabel, 4> kBasisLabels{
    BasisLabel::PhiPlus, BasisLabel::PhiMinus, BasisLabel::PsiPlus, BasisLabel::PsiMinus};

std::string_view to_string(BasisLabel label);

constexpr std::size_t index_of(BasisLabel label) { return static_cast<std::size_t>(label); }

/// Parameters of the basis: `ell` shapes the {|00>, |11>} pair and `p` the
/// {|01>, |10>} pair.
struct BasisParams {
    Complex ell;
    Complex p;
};

/// Four orthonormal two-qubit vectors
///   PhiPlus  = L (|00> + ell |11>)     PhiMinus = L (ell* |00> - |11>)
///   PsiPlus  = P (|01> + p |10>)       PsiMinus = P (p* |01> - |10>)
/// with L = 1/sqrt(1+|ell|^2) and P = 1/sqrt(1+|p|^2). ell = p = 0 gives the
/// computational basis and ell = p = 1 the Bell basis.
class EntangledBasis {
 public:
    const BasisParams& params() const { return params_; }
    const PureState& vector(BasisLabel label) const { return vectors_[index_of(label)]; }
    const std::array<PureState, 4>& vectors() const { return vectors_; }

 private:
    EntangledBasis(BasisParams params, std::array<PureState, 4> vectors)
        : params_(params), vectors_(std::move(vectors)) {}

    friend EntangledBasis general_basis(BasisParams params);

    BasisParams params_;
    std::array<PureState, 4> vectors_;
};

/// Throws NonFinite for non-finite parameters.
EntangledBasis general_basis(BasisParams params);

/// N (|00> + n |11>) over qubits ("1", "2"), N = 1/sqrt(1+|n|^2).
PureState resource_state(Complex n);

/// Same shape as resource_state on caller-chosen labels.
PureState resource_state(Complex n, const QubitLabel& first, const QubitLabel& second);

/// Entanglement of L (|00> + c |11>) in ebits, evaluated from the closed form
/// -L^2 log2 L^2 - L^2 |c|^2 log2 (L^2 |c|^2). Same value for every vector in a
/// basis pair built from c.
double basis_entropy(Complex c);

/// Computational basis states of two qubits, named by their bit strings.
enum class ComputationalLabel { Zero0 = 0, Zero1 = 1, One0 = 2, One1 = 3 };

/// Coefficients of a computational basis vector in the entangled basis. The
/// vector lies in the span of exactly two basis vectors: {PhiPlus, PhiMinus}
/// for |00>, |11> and {PsiPlus, PsiMinus} for |01>, |10>.
struct Expansion {
    BasisLabel first;
    BasisLabel second;
    Complex first_coeff;
    Complex second_coeff;
};

///   |00> = L (PhiPlus + ell PhiMinus)    |11> = L (ell* PhiPlus - PhiMinus)
///   |01> = P (PsiPlus + p PsiMinus)      |10> = P (p* PsiPlus - PsiMinus)
Expansion expand_computational(ComputationalLabel x, BasisParams params);

}  // namespace teleportrix
