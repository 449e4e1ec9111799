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

namespace teleportrix::tol {

// Every numeric threshold used by the library lives here.

/// Norm conservation of states and unit trace of density matrices.
inline constexpr double kNorm = 1e-10;
/// State and unitary equality (fidelity >= 1 - kEq, U^dagger U = I).
inline constexpr double kEq = 1e-9;
/// Smallest squared norm accepted when normalizing a user vector.
inline constexpr double kZeroVector = 1e-12;
/// Measurement outcomes below this probability carry no residual state.
inline constexpr double kProb = 1e-12;
/// Singular values below this are treated as zero.
inline constexpr double kSingular = 1e-12;
/// Relative tolerance for M^dagger M being proportional to the identity.
inline constexpr double kProportional = 1e-9;
/// Relative magnitude below which a basis coefficient counts as vanished.
inline constexpr double kVanish = 1e-9;

}  // namespace teleportrix::tol
