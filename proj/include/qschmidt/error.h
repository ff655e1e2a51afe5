// Copyright 2026 The qschmidt Authors
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

#ifndef QSCHMIDT_ERROR_H
#define QSCHMIDT_ERROR_H

#include <stdexcept>
#include <string>

namespace qschmidt {

/// Base class of every error raised by the library.
///
/// The CLI maps subclasses onto exit codes: InputError and its children are
/// user-input problems (exit 2), InconsistencyError is an internal numerical
/// disagreement (exit 3).
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied data: malformed matrices, bad partitions, states of
/// the wrong size, non-Hermitian operators.
class InputError : public Error {
   public:
    using Error::Error;
};

class DimensionError : public InputError {
   public:
    using InputError::InputError;
};

class NotHermitianError : public InputError {
   public:
    NotHermitianError(const std::string &what, double max_asymmetry)
        : InputError(what), max_asymmetry_(max_asymmetry) {
    }
    double max_asymmetry() const {
        return max_asymmetry_;
    }

   private:
    double max_asymmetry_;
};

/// Two routes that must agree did not.
class InconsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace qschmidt

#endif
