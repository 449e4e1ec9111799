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
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "teleportrix/ebasis.hpp"
#include "teleportrix/qcore.hpp"

namespace teleportrix {

/// Resource N(|00> + n|11>) on qubits (1, 2) and measurement basis (ell, p)
/// on qubits (a, 1).
struct ProtocolParams {
    Complex n;
    Complex ell;
    Complex p;
};

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

/// Maps the input amplitudes (alpha, beta) to Bob's unnormalized qubit for a
/// single measurement outcome.
struct TransferMatrix {
    BasisLabel label = BasisLabel::PhiPlus;
    Matrix2 m;
};

/// For each outcome k, Bob holds M_k (alpha, beta)^T with
///   M(PhiPlus)  = N L diag(1, n ell*)     M(PhiMinus) = N L diag(ell, -n)
///   M(PsiPlus)  = N P [[0, p*], [n, 0]]   M(PsiMinus) = N P [[0, -1], [n p, 0]]
/// The four satisfy sum_k M_k^dagger M_k = I. Throws NonFinite.
std::array<TransferMatrix, 4> transfer_matrices(const ProtocolParams& params);

/// True when M^dagger M = c I with c > tol::kSingular, to relative tolerance
/// tol::kProportional. Such an outcome succeeds with the same probability c for
/// every input and is undone exactly by a fixed unitary.
bool is_faithful(const Matrix2& m);

/// Adjoint of the unitary polar factor of `m`. For faithful outcomes
/// correction * m is proportional to I. Throws SingularMatrix when both
/// singular values are below tol::kSingular.
Matrix2 correction_unitary(const Matrix2& m);

enum class Regime { Deterministic, Probabilistic, NoFaithful };

/// "Deterministic", "Probabilistic<k>" or "NoFaithful".
std::string regime_name(Regime regime, std::size_t faithful_count);

struct RegimeReport {
    Regime regime = Regime::NoFaithful;
    std::vector<BasisLabel> faithful_outcomes;
    /// Sum of the faithful outcome probabilities, measured on the assembled
    /// three-qubit state.
    double success_probability = 0.0;
    /// 1 / success_probability, kInfinite when nothing succeeds.
    double expected_repetitions = kInfinite;
    /// Outcome probabilities measured with input |0>. Only the faithful
    /// entries are independent of the input.
    std::array<double, 4> probabilities{};

    std::size_t k() const { return faithful_outcomes.size(); }
    std::string name() const { return regime_name(regime, k()); }
};

/// Deterministic when all four outcomes are faithful, Probabilistic(k) for
/// 1 <= k <= 3, NoFaithful otherwise. Throws NonFinite.
RegimeReport classify(const ProtocolParams& params);

/// k |n|^2 / (1 + |n|^2)^2: the success probability when k outcomes match the
/// resource entanglement.
double success_probability_analytic(Complex n, int k);

/// (1 + |n|^2)^2 / |n|^2, or kInfinite at n = 0.
double expected_repetitions(Complex n);

/// Both readings of the repetition count: the closed form above and the
/// reciprocal of the two-outcome success probability. They differ by a factor
/// of two everywhere (4 vs 2 at |n| = 1).
struct RepetitionReport {
    double formula = kInfinite;
    double inverse_success = kInfinite;
};

RepetitionReport repetition_report(Complex n);

/// `count` Haar-random input amplitude pairs: |alpha|^2 uniform on [0, 1] and a
/// uniform relative phase, drawn from mt19937_64(seed ^ 0x9e3779b97f4a7c15).
std::vector<std::array<Complex, 2>> haar_inputs(std::size_t count, std::uint64_t seed);

struct OutcomeRecord {
    BasisLabel label = BasisLabel::PhiPlus;
    double probability = 0.0;
    bool faithful = false;
    Matrix2 correction;
    /// Corrected state of qubit 2; empty when the outcome has zero probability.
    std::optional<PureState> bob_state;
    /// Fidelity of bob_state with the input; 0 for impossible outcomes.
    double fidelity = 0.0;
};

struct Exhaustive {};

struct Sampled {
    std::size_t shots = 1;
    std::uint64_t seed = 0;
};

using RunMode = std::variant<Exhaustive, Sampled>;

struct SampleSummary {
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::array<std::size_t, 4> counts{};
    std::array<double, 4> frequencies{};
    /// Fraction of shots landing on a faithful outcome.
    double faithful_frequency = 0.0;
    /// Mean post-correction fidelity over the shots.
    double mean_fidelity = 0.0;
    std::vector<BasisLabel> per_shot;
};

struct RunResult {
    std::array<OutcomeRecord, 4> records;
    RegimeReport report;
    std::optional<SampleSummary> sampled;
};

/// Input qubit alpha|0> + beta|1> on label "a". Throws BadInput unless
/// |alpha|^2 + |beta|^2 = 1 within tol::kEq.
PureState input_state(Complex alpha, Complex beta);

/// Assembles input (a) x resource (1, 2), measures (a, 1) in the (ell, p)
/// basis and applies each outcome's correction to qubit 2. Records always hold
/// the exact probabilities; Sampled mode also draws `shots` outcomes, shot i
/// using seed + i.
RunResult run(Complex alpha, Complex beta, const ProtocolParams& params, const RunMode& mode);

/// Sampled teleportation over several inputs: shot i uses input i mod
/// inputs.size() and seed + i.
SampleSummary sample_shots(std::span<const std::array<Complex, 2>> inputs,
                           const ProtocolParams& params, std::size_t shots, std::uint64_t seed);

}  // namespace teleportrix
