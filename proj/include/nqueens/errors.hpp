// Copyright 2026 The nqueens-sim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nqueens {

/// Board size or enumeration bound outside the supported range.
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Row/column/qubit/ancilla index outside its valid range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A sparse state that violates a precondition (e.g. not normalized).
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A basis label that does not decode to a one-queen-per-row board.
/// Seeing this from a solver run means the simulator is broken.
struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {
    }
    std::size_t line_number;
};

}  // namespace nqueens
