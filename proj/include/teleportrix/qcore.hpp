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
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace teleportrix {

using Complex = std::complex<double>;
using QubitLabel = std::string;

inline constexpr std::size_t kMaxQubits = 4;

/// True when both parts are finite.
bool is_finite(Complex z);

/// Dense 2x2 complex matrix, row major.
class Matrix2 {
 public:
    constexpr Matrix2() = default;
    constexpr Matrix2(Complex m00, Complex m01, Complex m10, Complex m11)
        : e_{m00, m01, m10, m11} {}

    static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Matrix2 diag(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr Complex operator()(std::size_t r, std::size_t c) const { return e_[2 * r + c]; }
    constexpr Complex& operator()(std::size_t r, std::size_t c) { return e_[2 * r + c]; }

    Matrix2 adjoint() const;
    Complex det() const;
    Complex trace() const;
    /// Largest entry magnitude.
    double max_abs() const;
    bool is_finite() const;
    std::array<Complex, 2> apply(std::array<Complex, 2> v) const;

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(Complex s, const Matrix2& a);
    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);

 private:
    std::array<Complex, 4> e_{};
};

/// Max entrywise deviation of U^dagger U from the identity.
double unitarity_defect(const Matrix2& u);

namespace pauli {
inline constexpr Matrix2 I = Matrix2::identity();
inline constexpr Matrix2 X{0.0, 1.0, 1.0, 0.0};
inline constexpr Matrix2 Y{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
inline constexpr Matrix2 Z{1.0, 0.0, 0.0, -1.0};
}  // namespace pauli

/// M = U diag(s0, s1) V^dagger with s0 >= s1 >= 0. Columns of U and V are the
/// left and right singular vectors.
struct Svd2 {
    Matrix2 u;
    std::array<double, 2> s{};
    Matrix2 v;
};

/// Closed-form singular value decomposition of a 2x2 complex matrix, built
/// from the eigen-decomposition of the Gram matrix M^dagger M. The smaller
/// singular value is recovered as |det M| / s0 to keep relative accuracy.
Svd2 svd(const Matrix2& m);

/// Normalized complex amplitude vector over a labeled register. The first
/// label is the most significant bit of the amplitude index.
class PureState {
 public:
    const std::vector<QubitLabel>& labels() const { return labels_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    std::size_t num_qubits() const { return labels_.size(); }
    Complex amplitude(std::size_t index) const { return amps_[index]; }
    /// Position of `label` in the register, or npos.
    std::size_t position(const QubitLabel& label) const;
    double norm_squared() const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
    PureState(std::vector<QubitLabel> labels, std::vector<Complex> amps)
        : labels_(std::move(labels)), amps_(std::move(amps)) {}

    friend PureState make_state(std::vector<QubitLabel> labels, std::span<const Complex> amps);

    std::vector<QubitLabel> labels_;
    std::vector<Complex> amps_;
};

/// Validates shape, labels and finiteness, then stores a normalized copy.
/// Throws ShapeError, LabelCollision, NonFinite or NormalizationError.
PureState make_state(std::vector<QubitLabel> labels, std::span<const Complex> amps);

inline PureState make_state(std::vector<QubitLabel> labels, std::initializer_list<Complex> amps) {
    return make_state(std::move(labels), std::span<const Complex>(amps.begin(), amps.size()));
}

/// Kronecker product, register order `first` then `second`.
PureState tensor(const PureState& first, const PureState& second);

/// Applies a single-qubit unitary to `target`. Throws NotUnitary when
/// U^dagger U deviates from I by more than tol::kEq.
PureState apply_unitary(const PureState& s, const QubitLabel& target, const Matrix2& u);

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 4 or 8.
class DensityMatrix {
 public:
    std::size_t dim() const { return dim_; }
    Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<Complex>& entries() const { return entries_; }

    /// Eigenvalues in ascending order.
    std::vector<double> eigenvalues() const;

 private:
    DensityMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    friend DensityMatrix make_density(std::size_t dim, std::vector<Complex> entries);

    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Validates and wraps a row-major density matrix. Throws ShapeError or
/// NormalizationError when the invariants fail.
DensityMatrix make_density(std::size_t dim, std::vector<Complex> entries);

/// Partial trace over every qubit not in `keep`; the kept qubits stay in the
/// order given. Throws BadSubset unless `keep` is a nonempty proper subset.
DensityMatrix reduced_density(const PureState& s, std::span<const QubitLabel> keep);
DensityMatrix reduced_density(const PureState& s, std::initializer_list<QubitLabel> keep);

/// Two-term Schmidt decomposition psi = sum_i c_i |u_i>|v_i>, where u_i and
/// v_i are the columns of `first` and `second`.
struct SchmidtForm {
    std::array<double, 2> coeffs{};
    Matrix2 first;
    Matrix2 second;

    /// Amplitudes of sum_i c_i |u_i>|v_i> in the computational basis.
    std::array<Complex, 4> reconstruct() const;
};

/// Throws ShapeError unless `s` has exactly two qubits.
SchmidtForm schmidt(const PureState& s);

/// Von Neumann entropy in ebits, with 0 log 0 = 0.
double entropy(const DensityMatrix& d);

/// |<a|b>|^2. Throws LabelMismatch unless both registers have identical labels.
double fidelity(const PureState& a, const PureState& b);

/// Entropy of the first qubit of a two-qubit pure state, via its Schmidt
/// coefficients.
double entanglement_entropy(const PureState& two_qubit);

}  // namespace teleportrix
