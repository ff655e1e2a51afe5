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

#ifndef QSCHMIDT_KETPARSE_H
#define QSCHMIDT_KETPARSE_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qschmidt/error.h"
#include "qschmidt/state.h"

namespace qschmidt {

/// Widest ket the parser accepts.
inline constexpr size_t kMaxKetQubits = 16;

/// Syntax tree of a ket expression.
///
/// Grammar (whitespace-insensitive, UTF-8; `⟩` is accepted for `>`):
///
///     expr    := term (('+' | '-') term)*
///     term    := factor ('*' factor | '/' divisor | factor)*
///     divisor := scalar | '(' expr ')'
///     factor  := scalar | ket | '(' expr ')' | '-' factor
///     scalar  := number | 'sqrt' '(' number ')' | 'i'
///     ket     := '|' [01]+ '>'
///
/// Juxtaposed factors multiply, so `1/2(|0>+|1>)` is (1/2) * (|0>+|1>).
struct KetExpr {
    enum class Kind { Number, Sqrt, ImaginaryUnit, Ket, Neg, Add, Sub, Mul, Div, Paren };

    explicit KetExpr(Kind k, size_t pos = 0) : kind(k), position(pos) {
    }

    Kind kind;
    /// Literal for Number, radicand for Sqrt.
    double value = 0;
    /// Bitstring for Ket.
    std::string bits;
    std::vector<KetExpr> children;
    /// Byte offset of the node's first token in the source text.
    size_t position = 0;
};

/// Compact prefix rendering, e.g. `Mul(Div(1,2),Paren(Add(|0>,|1>)))`.
std::string to_string(const KetExpr &expr);

class ParseError : public InputError {
   public:
    enum class Kind { Lexical, Syntax, WidthMismatch, Evaluation };

    ParseError(Kind kind, size_t position, std::string detail, std::vector<std::string> expected = {});

    Kind kind() const {
        return kind_;
    }
    /// Byte offset into the input.
    size_t position() const {
        return position_;
    }
    const std::string &detail() const {
        return detail_;
    }
    /// Tokens that would have been accepted (syntax errors only).
    const std::vector<std::string> &expected() const {
        return expected_;
    }

   private:
    Kind kind_;
    size_t position_;
    std::string detail_;
    std::vector<std::string> expected_;
};

const char *to_string(ParseError::Kind kind);

KetExpr parse(std::string_view text);

struct Evaluation {
    StateVector state;
    /// Norm of the accumulated amplitudes before normalization.
    double raw_norm;
    /// True when |raw_norm - 1| exceeded 1e-9 and the state was rescaled.
    bool renormalized;
};

/// Accumulates amplitudes per basis string and normalizes the result.
Evaluation evaluate(const KetExpr &expr);

/// Unnormalized amplitudes of a ket-valued expression.
std::vector<Complex> evaluate_amplitudes(const KetExpr &expr);

/// parse + evaluate.
Evaluation parse_state(std::string_view text);

/// Canonical text for a state: global phase chosen so the first amplitude
/// above `tolerance` is real positive, terms with |amplitude| <= tolerance
/// dropped, 6 significant digits per component.
std::string format_state(const StateVector &state, double tolerance = 1e-10);

}  // namespace qschmidt

#endif
