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

#include <cmath>

#include "doctest.h"
#include "support/oracle.hpp"
#include "teleportrix/ebasis.hpp"
#include "teleportrix/errors.hpp"
#include "teleportrix/qcore.hpp"

using namespace teleportrix;

namespace {

PureState random_state(oracle::Rng& rng, std::vector<QubitLabel> labels) {
    const auto amps = rng.random_state(std::size_t{1} << labels.size());
    return make_state(std::move(labels), amps);
}

double max_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace

TEST_CASE("make_state normalizes and validates") {
    const PureState zero = make_state({"a"}, {1.0, 0.0});
    CHECK(zero.amplitude(0) == Complex{1.0});
    CHECK(zero.amplitude(1) == Complex{0.0});

    const PureState bell = make_state({"1", "2"}, {1.0, 0.0, 0.0, 1.0});
    CHECK(bell.amplitude(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bell.amplitude(3).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bell.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(make_state({"a"}, {0.0, 0.0}), NormalizationError);
    CHECK_THROWS_AS(make_state({"a"}, {1.0, 0.0, 0.0}), ShapeError);
    CHECK_THROWS_AS(make_state({"a", "a"}, {1.0, 0.0, 0.0, 0.0}), LabelCollision);
    CHECK_THROWS_AS(make_state({"a"}, {std::nan(""), 1.0}), NonFinite);
}

TEST_CASE("tensor orders amplitudes first register first") {
    const PureState s = tensor(make_state({"a"}, {1.0, 0.0}), make_state({"b"}, {0.0, 1.0}));
    CHECK(s.labels() == std::vector<QubitLabel>{"a", "b"});
    CHECK(std::abs(s.amplitude(1) - 1.0) < 1e-15);

    const PureState plus = make_state({"x"}, {1.0, 1.0});
    const PureState pp = tensor(plus, make_state({"y"}, {1.0, 1.0}));
    for (const auto& a : pp.amplitudes()) {
        CHECK(std::abs(a - 0.5) < 1e-15);
    }

    CHECK_THROWS_AS(tensor(plus, plus), LabelCollision);
}

TEST_CASE("input tensor resource matches the four-term joint expansion") {
    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    const Complex n{0.5, -0.25};
    const double big_n = 1.0 / std::sqrt(1.0 + std::norm(n));
    const PureState joint = tensor(make_state({"a"}, {alpha, beta}), resource_state(n));
    // N (alpha|00>|0> + alpha n|01>|1> + beta|10>|0> + beta n|11>|1>) over (a,1,2)
    const std::vector<Complex> expected{big_n * alpha, 0.0, 0.0, big_n * alpha * n,
                                        big_n * beta,  0.0, 0.0, big_n * beta * n};
    CHECK(max_deviation(joint.amplitudes(), expected) < 1e-15);
}

TEST_CASE("apply_unitary") {
    const PureState zero = make_state({"q"}, {1.0, 0.0});
    const PureState one = apply_unitary(zero, "q", pauli::X);
    CHECK(std::abs(one.amplitude(1) - 1.0) < 1e-15);

    const Complex alpha{0.6, 0.0};
    const Complex beta{0.0, 0.8};
    const PureState flipped = make_state({"q"}, {alpha, -beta});
    const PureState restored = apply_unitary(flipped, "q", pauli::Z);
    CHECK(fidelity(restored, make_state({"q"}, {alpha, beta})) == doctest::Approx(1.0).epsilon(1e-12));

    oracle::Rng rng(11);
    const PureState s = random_state(rng, {"a", "b", "c"});
    CHECK(max_deviation(apply_unitary(s, "b", pauli::I).amplitudes(), s.amplitudes()) < 1e-15);

    CHECK_THROWS_AS(apply_unitary(zero, "q", Matrix2{1.0, 1.0, 0.0, 1.0}), NotUnitary);
    CHECK_THROWS_AS(apply_unitary(zero, "r", pauli::X), LabelMismatch);
}

TEST_CASE("reduced_density") {
    const DensityMatrix half = reduced_density(resource_state(1.0), {"1"});
    CHECK(std::abs(half(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(half(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(half(0, 1)) < 1e-15);

    const PureState product = tensor(make_state({"a"}, {0.6, 0.8}), make_state({"b"}, {1.0, 0.0}));
    const DensityMatrix proj = reduced_density(product, {"a"});
    CHECK(std::abs(proj(0, 1) - 0.48) < 1e-15);
    CHECK(proj.eigenvalues().back() == doctest::Approx(1.0).epsilon(1e-12));

    // diag(N^2, N^2 |n|^2) for n = 0.5: (0.8, 0.2).
    const DensityMatrix d = reduced_density(resource_state(0.5), {"2"});
    CHECK(d(0, 0).real() == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(d(1, 1).real() == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::abs(d(0, 1)) < 1e-15);

    CHECK_THROWS_AS(reduced_density(product, {"a", "b"}), BadSubset);
    CHECK_THROWS_AS(reduced_density(product, std::span<const QubitLabel>{}), BadSubset);
    CHECK_THROWS_AS(reduced_density(product, {"z"}), BadSubset);
}

TEST_CASE("reduced_density agrees with bit-string enumeration") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const PureState s = random_state(rng, {"a", "b", "c", "d"});
        const std::vector<std::size_t> keep{2, 0};
        const auto expected = oracle::partial_trace(s.amplitudes(), 4, keep);
        const DensityMatrix got = reduced_density(s, {"c", "a"});
        CHECK(max_deviation(got.entries(), expected) < 1e-14);
    }
}

TEST_CASE("schmidt") {
    const double big_n = 1.0 / std::sqrt(1.25);
    const SchmidtForm r = schmidt(resource_state(0.5));
    CHECK(r.coeffs[0] == doctest::Approx(big_n).epsilon(1e-14));
    CHECK(r.coeffs[1] == doctest::Approx(0.5 * big_n).epsilon(1e-14));

    const SchmidtForm big = schmidt(resource_state(2.0));
    CHECK(big.coeffs[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(big.coeffs[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));

    const SchmidtForm prod = schmidt(make_state({"x", "y"}, {1.0, 0.0, 0.0, 0.0}));
    CHECK(prod.coeffs[0] == doctest::Approx(1.0));
    CHECK(prod.coeffs[1] == doctest::Approx(0.0));

    const SchmidtForm bell = schmidt(resource_state(1.0));
    CHECK(bell.coeffs[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(bell.coeffs[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    // Singular values frozen from an independent numpy SVD.
    const PureState generic = make_state(
        {"x", "y"}, {Complex{0.3, 0.1}, Complex{-0.2, 0.5}, Complex{0.7, 0.0}, Complex{0.1, -0.3}});
    const SchmidtForm g = schmidt(generic);
    CHECK(g.coeffs[0] == doctest::Approx(0.791077978082774).epsilon(1e-13));
    CHECK(g.coeffs[1] == doctest::Approx(0.6117153198935512).epsilon(1e-13));
    CHECK(entanglement_entropy(generic) == doctest::Approx(0.953839219924679).epsilon(1e-12));

    CHECK_THROWS_AS(schmidt(make_state({"x"}, {1.0, 0.0})), ShapeError);
}

TEST_CASE("svd reconstructs and orders singular values") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const Matrix2 m{rng.gaussian_complex(), rng.gaussian_complex(), rng.gaussian_complex(),
                        rng.gaussian_complex()};
        const Svd2 d = svd(m);
        CHECK(d.s[0] >= d.s[1]);
        CHECK(unitarity_defect(d.u) < 1e-12);
        CHECK(unitarity_defect(d.v) < 1e-12);
        const Matrix2 back = d.u * Matrix2::diag(d.s[0], d.s[1]) * d.v.adjoint();
        CHECK((back - m).max_abs() < 1e-12);
    }
    // Rank-one and zero matrices.
    const Svd2 rank1 = svd(Matrix2{1.0, 2.0, 2.0, 4.0});
    CHECK(rank1.s[0] == doctest::Approx(5.0));
    CHECK(rank1.s[1] == 0.0);
    const Svd2 zero = svd(Matrix2{});
    CHECK(zero.s[0] == 0.0);
    CHECK(unitarity_defect(zero.u) < 1e-15);
}

TEST_CASE("entropy") {
    CHECK(entropy(make_density(2, {0.5, 0.0, 0.0, 0.5})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(entropy(make_density(2, {1.0, 0.0, 0.0, 0.0})) == doctest::Approx(0.0));
    CHECK(entropy(reduced_density(resource_state(0.5), {"1"})) ==
          doctest::Approx(0.7219280948873623).epsilon(1e-13));
    CHECK(entropy(make_density(4, {0.25, 0, 0, 0, 0, 0.25, 0, 0, 0, 0, 0.25, 0, 0, 0, 0, 0.25})) ==
          doctest::Approx(2.0).epsilon(1e-13));

    CHECK_THROWS_AS(make_density(2, {0.5, 0.1, 0.0, 0.5}), ShapeError);
    CHECK_THROWS_AS(make_density(2, {0.7, 0.0, 0.0, 0.5}), NormalizationError);
    CHECK_THROWS_AS(make_density(2, {1.5, 0.0, 0.0, -0.5}), NormalizationError);
    CHECK_THROWS_AS(make_density(3, std::vector<Complex>(9)), ShapeError);
}

TEST_CASE("fidelity") {
    oracle::Rng rng(14);
    const PureState s = random_state(rng, {"a", "b"});
    CHECK(fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-14));
    const PureState zero = make_state({"q"}, {1.0, 0.0});
    CHECK(fidelity(zero, make_state({"q"}, {0.0, 1.0})) == doctest::Approx(0.0));
    CHECK(fidelity(zero, make_state({"q"}, {1.0, 1.0})) == doctest::Approx(0.5).epsilon(1e-14));
    // Global phase does not matter.
    const Complex phase = std::polar(1.0, 0.7);
    CHECK(fidelity(zero, make_state({"q"}, {phase, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(fidelity(zero, make_state({"r"}, {1.0, 0.0})), LabelMismatch);
}

TEST_CASE("property: norm conservation under tensor and unitaries") {
    oracle::Rng rng(15);
    for (int trial = 0; trial < 1000; ++trial) {
        PureState s = tensor(random_state(rng, {"a"}), random_state(rng, {"b", "c"}));
        for (int step = 0; step < 5; ++step) {
            const Svd2 d = svd(Matrix2{rng.gaussian_complex(), rng.gaussian_complex(),
                                       rng.gaussian_complex(), rng.gaussian_complex()});
            const Matrix2 u = d.u * d.v.adjoint();
            s = apply_unitary(s, s.labels()[step % 3], u);
        }
        CHECK(std::abs(s.norm_squared() - 1.0) < 1e-10);
    }
}

TEST_CASE("property: complementary subsystems carry equal entropy") {
    oracle::Rng rng(16);
    for (int trial = 0; trial < 300; ++trial) {
        const PureState three = random_state(rng, {"a", "b", "c"});
        CHECK(std::abs(entropy(reduced_density(three, {"b"})) -
                       entropy(reduced_density(three, {"a", "c"}))) < 1e-9);
        const PureState four = random_state(rng, {"a", "b", "c", "d"});
        CHECK(std::abs(entropy(reduced_density(four, {"a", "d"})) -
                       entropy(reduced_density(four, {"b", "c"}))) < 1e-9);
        CHECK(std::abs(entropy(reduced_density(four, {"c"})) -
                       entropy(reduced_density(four, {"a", "b", "d"}))) < 1e-9);
    }
}

TEST_CASE("property: schmidt reconstruction on random two-qubit states") {
    oracle::Rng rng(17);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const PureState s = random_state(rng, {"x", "y"});
        const SchmidtForm f = schmidt(s);
        const auto back = f.reconstruct();
        for (std::size_t i = 0; i < 4; ++i) {
            worst = std::max(worst, std::abs(back[i] - s.amplitude(i)));
        }
        CHECK(std::abs(f.coeffs[0] * f.coeffs[0] + f.coeffs[1] * f.coeffs[1] - 1.0) < 1e-10);
        CHECK(std::abs(entanglement_entropy(s) - entropy(reduced_density(s, {"x"}))) < 1e-9);
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("property: local unitaries leave entanglement unchanged") {
    oracle::Rng rng(18);
    for (int trial = 0; trial < 300; ++trial) {
        const PureState s = random_state(rng, {"x", "y"});
        const Svd2 d = svd(Matrix2{rng.gaussian_complex(), rng.gaussian_complex(),
                                   rng.gaussian_complex(), rng.gaussian_complex()});
        const Matrix2 u = d.u * d.v.adjoint();
        const double before = entropy(reduced_density(s, {"x"}));
        CHECK(std::abs(entropy(reduced_density(apply_unitary(s, "x", u), {"x"})) - before) < 1e-9);
        CHECK(std::abs(entropy(reduced_density(apply_unitary(s, "y", u), {"x"})) - before) < 1e-9);
    }
}
