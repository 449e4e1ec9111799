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
#include <string_view>

#include "teleportrix/qcore.hpp"

namespace teleportrix {

/// Parses "a", "bi", "a+bi" or "a-bi" with decimal reals (optional sign,
/// fraction and exponent). A bare "i" means "1i". Throws ParseError naming the
/// offending token, including for values that overflow to infinity.
Complex parse_complex(std::string_view text);

/// Shortest text that parse_complex maps back to the same value, e.g. "0.3-0.4i".
std::string format_complex(Complex z);

}  // namespace teleportrix
