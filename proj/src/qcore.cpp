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

#include "teleportrix/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "teleportrix/errors.hpp"
#include "teleportrix/tolerances.hpp"

namespace teleportrix {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Matrix2 Matrix2::adjoint() const {
    return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

Complex Matrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

Complex Matrix2::trace() const { return e_[0] + e_[3]; }

double Matrix2::max_abs() const {
    double m = 0.0;
    for (const auto& z : e_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

bool Matrix2::is_finite() const {
    return std::all_of(e_.begin(), e_.end(), [](Complex z) { return teleportrix::is_finite(z); });
}

std::array<Complex, 2> Matrix2::apply(std::array<Complex, 2> v) const {
    return {e_[0] * v[0] + e_[1] * v[1], e_[2] * v[0] + e_[3] * v[1]};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        }
    }
    return r;
}

Matrix2 operator*(Complex s, const Matrix2& a) {
    return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

double unitarity_defect(const Matrix2& u) {
    return (u.adjoint() * u - Matrix2::identity()).max_abs();
}

namespace {

using Vec2 = std::array<Complex, 2>;

Vec2 normalized(Vec2 v) {
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return {v[0] / n, v[1] / n};
}

// Unit vector orthogonal to a unit vector in C^2.
Vec2 orthogonal_complement(const Vec2& v) { return {-std::conj(v[1]), std::conj(v[0])}; }

Matrix2 from_columns(const Vec2& c0, const Vec2& c1) { return {c0[0], c1[0], c0[1], c1[1]}; }

}  // namespace

Svd2 svd(const Matrix2& m) {
    const double g00 = std::norm(m(0, 0)) + std::norm(m(1, 0));
    const double g11 = std::norm(m(0, 1)) + std::norm(m(1, 1));
    const Complex g01 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);

    const double half_gap = 0.5 * (g00 - g11);
    const double disc = std::hypot(half_gap, std::abs(g01));
    const double lambda0 = 0.5 * (g00 + g11) + disc;

    // Eigenvector of the Gram matrix for lambda0. Of the two algebraically
    // equivalent candidates, the longer one is the better conditioned.
    Vec2 v0;
    if (std::abs(g01) == 0.0) {
        v0 = g00 >= g11 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    } else {
        const Vec2 x{g01, lambda0 - g00};
        const Vec2 y{lambda0 - g11, std::conj(g01)};
        const double nx = std::norm(x[0]) + std::norm(x[1]);
        const double ny = std::norm(y[0]) + std::norm(y[1]);
        v0 = normalized(nx >= ny ? x : y);
    }
    const Vec2 v1 = orthogonal_complement(v0);

    Svd2 out;
    out.s[0] = std::sqrt(std::max(lambda0, 0.0));
    out.s[1] = out.s[0] > 0.0 ? std::min(std::abs(m.det()) / out.s[0], out.s[0]) : 0.0;

    Vec2 u0{1.0, 0.0};
    if (out.s[0] > 0.0) {
        u0 = normalized(m.apply(v0));
    }
    Vec2 u1 = orthogonal_complement(u0);
    // Match the phase of u1 to M v1 so that M = U S V^dagger holds exactly.
    const Vec2 mv1 = m.apply(v1);
    const Complex overlap = std::conj(u1[0]) * mv1[0] + std::conj(u1[1]) * mv1[1];
    if (std::abs(overlap) > tol::kSingular * out.s[0]) {
        const Complex phase = overlap / std::abs(overlap);
        u1 = {u1[0] * phase, u1[1] * phase};
    }

    out.u = from_columns(u0, u1);
    out.v = from_columns(v0, v1);
    return out;
}

std::size_t PureState::position(const QubitLabel& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? npos : static_cast<std::size_t>(it - labels_.begin());
}

double PureState::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

PureState make_state(std::vector<QubitLabel> labels, std::span<const Complex> amps) {
    if (labels.empty() || labels.size() > kMaxQubits) {
        throw ShapeError("register must hold between 1 and " + std::to_string(kMaxQubits) +
                         " qubits, got " + std::to_string(labels.size()));
    }
    const std::size_t expected = std::size_t{1} << labels.size();
    if (amps.size() != expected) {
        throw ShapeError("expected " + std::to_string(expected) + " amplitudes, got " +
                         std::to_string(amps.size()));
    }
    std::set<QubitLabel> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw LabelCollision("duplicate qubit label '" + l + "'");
        }
    }
    double norm2 = 0.0;
    for (const auto& a : amps) {
        if (!is_finite(a)) {
            throw NonFinite("amplitude is not finite");
        }
        norm2 += std::norm(a);
    }
    if (norm2 < tol::kZeroVector) {
        throw NormalizationError("cannot normalize a zero vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> stored(amps.begin(), amps.end());
    for (auto& a : stored) {
        a *= scale;
    }
    return PureState(std::move(labels), std::move(stored));
}

PureState tensor(const PureState& first, const PureState& second) {
    std::vector<QubitLabel> labels = first.labels();
    for (const auto& l : second.labels()) {
        if (first.position(l) != PureState::npos) {
            throw LabelCollision("qubit label '" + l + "' appears in both registers");
        }
        labels.push_back(l);
    }
    if (labels.size() > kMaxQubits) {
        throw ShapeError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    const auto& a = first.amplitudes();
    const auto& b = second.amplitudes();
    std::vector<Complex> amps;
    amps.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            amps.push_back(x * y);
        }
    }
    return make_state(std::move(labels), amps);
}

PureState apply_unitary(const PureState& s, const QubitLabel& target, const Matrix2& u) {
    if (!u.is_finite() || unitarity_defect(u) > tol::kEq) {
        throw NotUnitary("operator applied to '" + target + "' is not unitary");
    }
    const std::size_t pos = s.position(target);
    if (pos == PureState::npos) {
        throw LabelMismatch("qubit '" + target + "' is not in the register");
    }
    const std::size_t bit = std::size_t{1} << (s.num_qubits() - 1 - pos);
    std::vector<Complex> amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return make_state(s.labels(), amps);
}

DensityMatrix make_density(std::size_t dim, std::vector<Complex> entries) {
    if ((dim != 2 && dim != 4 && dim != 8) || entries.size() != dim * dim) {
        throw ShapeError("density matrix must be 2x2, 4x4 or 8x8");
    }
    Complex tr = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        tr += entries[i * dim + i];
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex z = entries[i * dim + j];
            if (!is_finite(z)) {
                throw NonFinite("density matrix entry is not finite");
            }
            if (std::abs(z - std::conj(entries[j * dim + i])) > tol::kNorm) {
                throw ShapeError("density matrix is not Hermitian");
            }
        }
    }
    if (std::abs(tr - 1.0) > tol::kNorm) {
        throw NormalizationError("density matrix trace is not 1");
    }
    DensityMatrix d(dim, std::move(entries));
    if (d.eigenvalues().front() < -tol::kNorm) {
        throw NormalizationError("density matrix has a negative eigenvalue");
    }
    return d;
}

namespace {

// Cyclic Jacobi sweeps on a real symmetric matrix; returns its eigenvalues.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += at(p, q) * at(p, q);
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = at(i, i);
    }
    return out;
}

}  // namespace

std::vector<double> DensityMatrix::eigenvalues() const {
    std::vector<double> ev;
    if (dim_ == 2) {
        const double a = (*this)(0, 0).real();
        const double d = (*this)(1, 1).real();
        const double r = std::hypot(0.5 * (a - d), std::abs((*this)(0, 1)));
        ev = {0.5 * (a + d) - r, 0.5 * (a + d) + r};
    } else {
        // H = A + iB has the same spectrum, doubled, as [[A, -B], [B, A]].
        const std::size_t n = 2 * dim_;
        std::vector<double> real(n * n);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                const Complex z = (*this)(i, j);
                real[i * n + j] = z.real();
                real[(i + dim_) * n + (j + dim_)] = z.real();
                real[i * n + (j + dim_)] = -z.imag();
                real[(i + dim_) * n + j] = z.imag();
            }
        }
        auto doubled = symmetric_eigenvalues(std::move(real), n);
        std::sort(doubled.begin(), doubled.end());
        for (std::size_t i = 0; i < n; i += 2) {
            ev.push_back(0.5 * (doubled[i] + doubled[i + 1]));
        }
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

DensityMatrix reduced_density(const PureState& s, std::span<const QubitLabel> keep) {
    const std::size_t k = s.num_qubits();
    if (keep.empty() || keep.size() >= k) {
        throw BadSubset("kept qubits must form a nonempty proper subset of the register");
    }
    std::vector<std::size_t> kept_bits;
    std::vector<bool> is_kept(k, false);
    for (const auto& label : keep) {
        const std::size_t pos = s.position(label);
        if (pos == PureState::npos) {
            throw BadSubset("qubit '" + label + "' is not in the register");
        }
        if (is_kept[pos]) {
            throw BadSubset("qubit '" + label + "' listed twice");
        }
        is_kept[pos] = true;
        kept_bits.push_back(k - 1 - pos);
    }
    std::vector<std::size_t> env_bits;
    for (std::size_t pos = 0; pos < k; ++pos) {
        if (!is_kept[pos]) {
            env_bits.push_back(k - 1 - pos);
        }
    }

    // Full-register index of (kept value, environment value).
    auto compose = [&](std::size_t kv, std::size_t ev) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < kept_bits.size(); ++j) {
            if ((kv >> (kept_bits.size() - 1 - j)) & 1U) {
                idx |= std::size_t{1} << kept_bits[j];
            }
        }
        for (std::size_t j = 0; j < env_bits.size(); ++j) {
            if ((ev >> (env_bits.size() - 1 - j)) & 1U) {
                idx |= std::size_t{1} << env_bits[j];
            }
        }
        return idx;
    };

    const std::size_t dim = std::size_t{1} << kept_bits.size();
    const std::size_t env_dim = std::size_t{1} << env_bits.size();
    std::vector<Complex> rho(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex acc = 0.0;
            for (std::size_t e = 0; e < env_dim; ++e) {
                acc += s.amplitude(compose(i, e)) * std::conj(s.amplitude(compose(j, e)));
            }
            rho[i * dim + j] = acc;
        }
    }
    return make_density(dim, std::move(rho));
}

DensityMatrix reduced_density(const PureState& s, std::initializer_list<QubitLabel> keep) {
    return reduced_density(s, std::span<const QubitLabel>(keep.begin(), keep.size()));
}

std::array<Complex, 4> SchmidtForm::reconstruct() const {
    std::array<Complex, 4> amps{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t y = 0; y < 2; ++y) {
                amps[2 * x + y] += coeffs[i] * first(x, i) * second(y, i);
            }
        }
    }
    return amps;
}

SchmidtForm schmidt(const PureState& s) {
    if (s.num_qubits() != 2) {
        throw ShapeError("Schmidt decomposition needs a two-qubit state");
    }
    // psi_{xy} = C(x, y) = sum_i s_i U(x, i) conj(V(y, i)).
    const Matrix2 c{s.amplitude(0), s.amplitude(1), s.amplitude(2), s.amplitude(3)};
    const Svd2 d = svd(c);
    SchmidtForm out;
    out.coeffs = d.s;
    out.first = d.u;
    out.second = {std::conj(d.v(0, 0)), std::conj(d.v(0, 1)), std::conj(d.v(1, 0)),
                  std::conj(d.v(1, 1))};
    return out;
}

double entropy(const DensityMatrix& d) {
    double h = 0.0;
    for (double lambda : d.eigenvalues()) {
        if (lambda > 0.0) {
            h -= lambda * std::log2(lambda);
        }
    }
    return std::clamp(h, 0.0, std::log2(static_cast<double>(d.dim())));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.labels() != b.labels()) {
        throw LabelMismatch("fidelity needs identical registers");
    }
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

double entanglement_entropy(const PureState& two_qubit) {
    const SchmidtForm f = schmidt(two_qubit);
    double h = 0.0;
    for (double c : f.coeffs) {
        const double w = c * c;
        if (w > 0.0) {
            h -= w * std::log2(w);
        }
    }
    return std::max(h, 0.0);
}

}  // namespace teleportrix
