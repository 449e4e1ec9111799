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

#include <stdexcept>
#include <string>

namespace teleportrix {

/// Base for every error raised by the library. Callers that only care about
/// "bad numbers in, no result out" can catch this one type.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

#define TELEPORTRIX_DEFINE_ERROR(Name)        \
    class Name : public Error {               \
     public:                                  \
        using Error::Error;                   \
    };

TELEPORTRIX_DEFINE_ERROR(NormalizationError)
TELEPORTRIX_DEFINE_ERROR(ShapeError)
TELEPORTRIX_DEFINE_ERROR(LabelCollision)
TELEPORTRIX_DEFINE_ERROR(LabelMismatch)
TELEPORTRIX_DEFINE_ERROR(NotUnitary)
TELEPORTRIX_DEFINE_ERROR(BadSubset)
TELEPORTRIX_DEFINE_ERROR(BadPair)
TELEPORTRIX_DEFINE_ERROR(NonFinite)
TELEPORTRIX_DEFINE_ERROR(SingularMatrix)
TELEPORTRIX_DEFINE_ERROR(BadInput)
TELEPORTRIX_DEFINE_ERROR(ParseError)

#undef TELEPORTRIX_DEFINE_ERROR

}  // namespace teleportrix
