// Copyright 2026 The rwis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rwis {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// CSV / ingest
struct MissingColumnError final : Error { using Error::Error; };
struct EmptyInputError final : Error { using Error::Error; };
struct MalformedPayloadError final : Error { using Error::Error; };

// Timeline / features
struct CadenceTooCoarseError final : Error { using Error::Error; };
struct OutOfRangeError final : Error { using Error::Error; };
struct IndexOutOfBoundsError final : Error { using Error::Error; };

// Numerics
struct NonFiniteInputError final : Error { using Error::Error; };
struct SingularSystemError final : Error { using Error::Error; };
struct StepTooLargeError final : Error { using Error::Error; };
struct InsufficientMeteoError final : Error { using Error::Error; };

// Training
struct LengthMismatchError final : Error { using Error::Error; };
struct DimensionMismatchError final : Error { using Error::Error; };
struct DegenerateInputError final : Error { using Error::Error; };
struct ConfigInvalidError final : Error { using Error::Error; };
struct AlignmentError final : Error { using Error::Error; };
struct MissingModelCellError final : Error { using Error::Error; };

// Anomaly injection / scoring
struct SpanTooShortError final : Error { using Error::Error; };
struct OverlapExhaustionError final : Error { using Error::Error; };
struct DegenerateLabelsError final : Error { using Error::Error; };

// Evaluation
struct SpecInvalidError final : Error { using Error::Error; };

// Serialization
struct FormatError final : Error { using Error::Error; };

}  // namespace rwis
