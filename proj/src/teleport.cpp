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

#include "teleportrix/teleport.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "teleportrix/errors.hpp"
#include "teleportrix/measure.hpp"
#include "teleportrix/tolerances.hpp"

namespace teleportrix {

namespace {

const QubitPair kAlicePair{"a", "1"};

void require_finite(const ProtocolParams& params) {
    if (!is_finite(params.n) || !is_finite(params.ell) || !is_finite(params.p)) {
        throw NonFinite("protocol parameters must be finite");
    }
}

PureState joint_state(Complex alpha, Complex beta, Complex n) {
    return tensor(input_state(alpha, beta), resource_state(n));
}

Matrix2 safe_correction(const Matrix2& m) {
    if (svd(m).s[0] < tol::kSingular) {
        return Matrix2::identity();
    }
    return correction_unitary(m);
}

}  // namespace

std::array<TransferMatrix, 4> transfer_matrices(const ProtocolParams& params) {
    require_finite(params);
    const Complex n = params.n;
    const Complex l = params.ell;
    const Complex p = params.p;
    const double big_n = 1.0 / std::sqrt(1.0 + std::norm(n));
    const double nl = big_n / std::sqrt(1.0 + std::norm(l));
    const double np = big_n / std::sqrt(1.0 + std::norm(p));
    return {{
        {BasisLabel::PhiPlus, Complex{nl} * Matrix2::diag(1.0, n * std::conj(l))},
        {BasisLabel::PhiMinus, Complex{nl} * Matrix2::diag(l, -n)},
        {BasisLabel::PsiPlus, Complex{np} * Matrix2{0.0, std::conj(p), n, 0.0}},
        {BasisLabel::PsiMinus, Complex{np} * Matrix2{0.0, -1.0, n * p, 0.0}},
    }};
}

bool is_faithful(const Matrix2& m) {
    const Matrix2 g = m.adjoint() * m;
    const double c = 0.5 * (g(0, 0).real() + g(1, 1).real());
    if (!(c > tol::kSingular)) {
        return false;
    }
    const double spread = std::abs(g(0, 0).real() - g(1, 1).real());
    return spread <= tol::kProportional * c && std::abs(g(0, 1)) <= tol::kProportional * c;
}

Matrix2 correction_unitary(const Matrix2& m) {
    const Svd2 d = svd(m);
    if (d.s[0] < tol::kSingular) {
        throw SingularMatrix("transfer matrix is numerically zero");
    }
    // Polar factor W = U V^dagger; the correction is W^dagger = V U^dagger.
    return d.v * d.u.adjoint();
}

std::string regime_name(Regime regime, std::size_t faithful_count) {
    switch (regime) {
        case Regime::Deterministic:
            return "Deterministic";
        case Regime::Probabilistic:
            return "Probabilistic" + std::to_string(faithful_count);
        case Regime::NoFaithful:
            return "NoFaithful";
    }
    return "?";
}

RegimeReport classify(const ProtocolParams& params) {
    const auto mats = transfer_matrices(params);
    // Faithful branches are input independent, so any fixed input measures them.
    const auto outcomes = project_all(joint_state(1.0, 0.0, params.n), kAlicePair,
                                      general_basis({params.ell, params.p}));
    RegimeReport r;
    for (std::size_t j = 0; j < 4; ++j) {
        r.probabilities[j] = outcomes[j].probability;
    }
    for (const auto& t : mats) {
        if (is_faithful(t.m)) {
            r.faithful_outcomes.push_back(t.label);
            r.success_probability += outcomes[index_of(t.label)].probability;
        }
    }
    if (r.k() == 4) {
        r.regime = Regime::Deterministic;
    } else if (r.k() > 0) {
        r.regime = Regime::Probabilistic;
    } else {
        r.regime = Regime::NoFaithful;
    }
    r.expected_repetitions = r.success_probability > 0.0 ? 1.0 / r.success_probability : kInfinite;
    return r;
}

double success_probability_analytic(Complex n, int k) {
    const double a = std::norm(n);
    return k * a / ((1.0 + a) * (1.0 + a));
}

double expected_repetitions(Complex n) {
    const double a = std::norm(n);
    if (a == 0.0) {
        return kInfinite;
    }
    return (1.0 + a) * (1.0 + a) / a;
}

RepetitionReport repetition_report(Complex n) {
    RepetitionReport r;
    r.formula = expected_repetitions(n);
    const double p = success_probability_analytic(n, 2);
    r.inverse_success = p > 0.0 ? 1.0 / p : kInfinite;
    return r;
}

std::vector<std::array<Complex, 2>> haar_inputs(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
    auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    std::vector<std::array<Complex, 2>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double w = uniform();
        const double phi = 2.0 * std::numbers::pi * uniform();
        out.push_back({Complex{std::sqrt(w)}, std::polar(std::sqrt(1.0 - w), phi)});
    }
    return out;
}

PureState input_state(Complex alpha, Complex beta) {
    if (!is_finite(alpha) || !is_finite(beta)) {
        throw BadInput("input amplitudes must be finite");
    }
    const double norm2 = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm2 - 1.0) > tol::kEq) {
        throw BadInput("input amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
    return make_state({"a"}, {alpha, beta});
}

namespace {

std::array<OutcomeRecord, 4> exhaustive_records(const PureState& input, const ProtocolParams& params,
                                                const std::array<TransferMatrix, 4>& mats) {
    const PureState joint = tensor(input, resource_state(params.n));
    const auto outcomes = project_all(joint, kAlicePair, general_basis({params.ell, params.p}));
    const PureState target = make_state({"2"}, input.amplitudes());

    std::array<OutcomeRecord, 4> records;
    for (const auto& t : mats) {
        const auto& o = outcomes[index_of(t.label)];
        OutcomeRecord& rec = records[index_of(t.label)];
        rec.label = t.label;
        rec.probability = o.probability;
        rec.faithful = is_faithful(t.m);
        rec.correction = safe_correction(t.m);
        if (o.residual) {
            rec.bob_state = apply_unitary(*o.residual, "2", rec.correction);
            rec.fidelity = fidelity(*rec.bob_state, target);
        }
    }
    return records;
}

}  // namespace

RunResult run(Complex alpha, Complex beta, const ProtocolParams& params, const RunMode& mode) {
    const PureState input = input_state(alpha, beta);
    const auto mats = transfer_matrices(params);
    RunResult result;
    result.records = exhaustive_records(input, params, mats);
    result.report = classify(params);
    if (const auto* s = std::get_if<Sampled>(&mode)) {
        const std::array<std::array<Complex, 2>, 1> inputs{{{alpha, beta}}};
        result.sampled = sample_shots(inputs, params, s->shots, s->seed);
    }
    return result;
}

SampleSummary sample_shots(std::span<const std::array<Complex, 2>> inputs,
                           const ProtocolParams& params, std::size_t shots, std::uint64_t seed) {
    if (inputs.empty()) {
        throw BadInput("sampling needs at least one input state");
    }
    if (shots == 0) {
        throw BadInput("shot count must be at least 1");
    }
    const auto mats = transfer_matrices(params);
    std::vector<std::array<OutcomeRecord, 4>> per_input;
    per_input.reserve(inputs.size());
    for (const auto& in : inputs) {
        per_input.push_back(exhaustive_records(input_state(in[0], in[1]), params, mats));
    }

    SampleSummary out;
    out.shots = shots;
    out.seed = seed;
    out.per_shot.reserve(shots);
    std::size_t faithful_hits = 0;
    double fidelity_sum = 0.0;
    for (std::size_t i = 0; i < shots; ++i) {
        const auto& records = per_input[i % per_input.size()];
        std::array<double, 4> probs{};
        for (std::size_t j = 0; j < 4; ++j) {
            probs[j] = records[j].probability;
        }
        const BasisLabel label = pick_outcome(probs, seeded_uniform(seed + i));
        const OutcomeRecord& rec = records[index_of(label)];
        ++out.counts[index_of(label)];
        faithful_hits += rec.faithful ? 1 : 0;
        fidelity_sum += rec.fidelity;
        out.per_shot.push_back(label);
    }
    for (std::size_t j = 0; j < 4; ++j) {
        out.frequencies[j] = static_cast<double>(out.counts[j]) / static_cast<double>(shots);
    }
    out.faithful_frequency = static_cast<double>(faithful_hits) / static_cast<double>(shots);
    out.mean_fidelity = fidelity_sum / static_cast<double>(shots);
    return out;
}

}  // namespace teleportrix
