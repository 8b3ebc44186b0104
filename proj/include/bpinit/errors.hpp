// Copyright 2026 The bpinit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by every bpinit module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace bpinit {

/// Bad argument value or shape (length mismatch, equal slots, h <= 0, ...).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Qubit or parameter index outside the valid range.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Requested register is larger than the simulator supports.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Decay fit could not be computed (e.g. a zero variance).
class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Failure reading or writing a result file; the message names the path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace bpinit
