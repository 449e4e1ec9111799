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

#include <string>

#include "json.hpp"
#include "teleportrix/qcore.hpp"

namespace teleportrix::cli {

/// Significant-digit rounding applied at serialization time only.
class NumberFormat {
 public:
    explicit NumberFormat(int precision) : precision_(precision) {}

    int precision() const { return precision_; }
    double round(double v) const;
    /// JSON number, or the string "Infinity" / "-Infinity" / "NaN".
    nlohmann::ordered_json json(double v) const;
    /// {"re": .., "im": ..}
    nlohmann::ordered_json json(Complex z) const;
    /// Row-major [[z00, z01], [z10, z11]] of complex objects.
    nlohmann::ordered_json json(const Matrix2& m) const;
    std::string csv(double v) const;

 private:
    int precision_;
};

}  // namespace teleportrix::cli
