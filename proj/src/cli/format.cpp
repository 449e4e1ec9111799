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

#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace teleportrix::cli {

double NumberFormat::round(double v) const {
    if (!std::isfinite(v) || v == 0.0) {
        return v == 0.0 ? 0.0 : v;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision_, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::ordered_json NumberFormat::json(double v) const {
    if (std::isnan(v)) {
        return "NaN";
    }
    if (std::isinf(v)) {
        return v > 0 ? "Infinity" : "-Infinity";
    }
    return round(v);
}

nlohmann::ordered_json NumberFormat::json(Complex z) const {
    return {{"re", json(z.real())}, {"im", json(z.imag())}};
}

nlohmann::ordered_json NumberFormat::json(const Matrix2& m) const {
    return nlohmann::ordered_json::array({nlohmann::ordered_json::array({json(m(0, 0)), json(m(0, 1))}),
                                  nlohmann::ordered_json::array({json(m(1, 0)), json(m(1, 1))})});
}

std::string NumberFormat::csv(double v) const {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision_, round(v));
    return buf;
}

}  // namespace teleportrix::cli
