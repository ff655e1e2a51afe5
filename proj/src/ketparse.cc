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

#include "qschmidt/ketparse.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace qschmidt {

namespace {

constexpr std::string_view kKetCloseUtf8 = "\xE2\x9F\xA9";  // U+27E9

enum class Tok { Number, Sqrt, I, Ket, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    Token(Tok t, size_t pos) : type(t), position(pos) {
    }

    Tok type;
    size_t position;
    double number = 0;
    std::string bits;
};

std::string describe_tok(Tok t) {
    switch (t) {
        case Tok::Number:
            return "number";
        case Tok::Sqrt:
            return "'sqrt'";
        case Tok::I:
            return "'i'";
        case Tok::Ket:
            return "ket";
        case Tok::Plus:
            return "'+'";
        case Tok::Minus:
            return "'-'";
        case Tok::Star:
            return "'*'";
        case Tok::Slash:
            return "'/'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::End:
            return "end of input";
    }
    return "?";
}

// Full UTF-8 sequence starting at `pos`, for error messages.
std::string char_at(std::string_view text, size_t pos) {
    auto lead = static_cast<unsigned char>(text[pos]);
    size_t len = 1;
    if (lead >= 0xF0) {
        len = 4;
    } else if (lead >= 0xE0) {
        len = 3;
    } else if (lead >= 0xC0) {
        len = 2;
    }
    return std::string(text.substr(pos, len));
}

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, pos_});
                return out;
            }
            out.push_back(next());
        }
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
            pos_++;
        }
    }

    [[noreturn]] void fail(size_t at, const std::string &why) {
        if (at >= text_.size()) {
            throw ParseError(ParseError::Kind::Lexical, at, why + " at end of input");
        }
        throw ParseError(ParseError::Kind::Lexical, at, why + " '" + char_at(text_, at) + "'");
    }

    static bool is_digit(char c) {
        return c >= '0' && c <= '9';
    }
    static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }

    Token next() {
        size_t start = pos_;
        char c = text_[pos_];
        switch (c) {
            case '+':
                pos_++;
                return {Tok::Plus, start};
            case '-':
                pos_++;
                return {Tok::Minus, start};
            case '*':
                pos_++;
                return {Tok::Star, start};
            case '/':
                pos_++;
                return {Tok::Slash, start};
            case '(':
                pos_++;
                return {Tok::LParen, start};
            case ')':
                pos_++;
                return {Tok::RParen, start};
            case '|':
                return ket();
            default:
                break;
        }
        if (is_digit(c) || c == '.') {
            return number();
        }
        if (is_alpha(c)) {
            size_t end = pos_;
            while (end < text_.size() && is_alpha(text_[end])) {
                end++;
            }
            std::string_view word = text_.substr(pos_, end - pos_);
            if (word == "sqrt") {
                pos_ = end;
                return {Tok::Sqrt, start};
            }
            if (word == "i") {
                pos_ = end;
                return {Tok::I, start};
            }
            // Point at the first character that stops the word from being a
            // keyword ("ix" fails at 'x', "foo" at 'f').
            size_t bad = pos_;
            if (word.size() > 1 && word[0] == 'i') {
                bad = pos_ + 1;
            }
            fail(bad, "unexpected character");
        }
        fail(pos_, "unexpected character");
    }

    Token number() {
        size_t start = pos_;
        size_t end = pos_;
        bool digits = false;
        while (end < text_.size() && is_digit(text_[end])) {
            end++;
            digits = true;
        }
        if (end < text_.size() && text_[end] == '.') {
            end++;
            while (end < text_.size() && is_digit(text_[end])) {
                end++;
                digits = true;
            }
        }
        if (!digits) {
            fail(start, "malformed number at");
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            size_t exp = end + 1;
            if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) {
                exp++;
            }
            if (exp < text_.size() && is_digit(text_[exp])) {
                while (exp < text_.size() && is_digit(text_[exp])) {
                    exp++;
                }
                end = exp;
            }
        }
        double value = 0;
        auto first = text_.data() + start;
        auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
        if (ec != std::errc() || ptr != text_.data() + end || !std::isfinite(value)) {
            fail(start, "number out of range at");
        }
        pos_ = end;
        Token t{Tok::Number, start};
        t.number = value;
        return t;
    }

    Token ket() {
        size_t start = pos_;
        pos_++;
        std::string bits;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
            bits.push_back(text_[pos_]);
            pos_++;
        }
        bool closed = false;
        size_t close_len = 0;
        if (pos_ < text_.size() && text_[pos_] == '>') {
            closed = true;
            close_len = 1;
        } else if (text_.substr(pos_, kKetCloseUtf8.size()) == kKetCloseUtf8) {
            closed = true;
            close_len = kKetCloseUtf8.size();
        }
        if (!closed) {
            fail(pos_, bits.empty() ? "expected a bit (0 or 1) in ket, found" : "expected '>' to close ket, found");
        }
        if (bits.empty()) {
            fail(pos_, "empty ket; expected a bit (0 or 1) before");
        }
        pos_ += close_len;
        if (bits.size() > kMaxKetQubits) {
            throw ParseError(ParseError::Kind::Lexical, start,
                             "ket has " + std::to_string(bits.size()) + " qubits; at most " + std::to_string(kMaxKetQubits) +
                                 " are supported");
        }
        Token t{Tok::Ket, start};
        t.bits = std::move(bits);
        return t;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    }

    KetExpr run() {
        KetExpr e = expr();
        if (peek().type != Tok::End) {
            syntax_error({"'+'", "'-'", "'*'", "'/'", "number", "'sqrt'", "'i'", "ket", "'('", "end of input"});
        }
        return e;
    }

   private:
    const Token &peek() const {
        return toks_[i_];
    }
    const Token &take() {
        return toks_[i_++];
    }

    [[noreturn]] void syntax_error(std::vector<std::string> expected) {
        const Token &t = peek();
        std::string msg = "unexpected " + describe_tok(t.type) + "; expected ";
        for (size_t k = 0; k < expected.size(); k++) {
            msg += (k ? ", " : "") + expected[k];
        }
        throw ParseError(ParseError::Kind::Syntax, t.position, msg, std::move(expected));
    }

    static bool starts_operand(Tok t) {
        return t == Tok::Number || t == Tok::Sqrt || t == Tok::I || t == Tok::Ket || t == Tok::LParen;
    }

    static KetExpr binary(KetExpr::Kind kind, KetExpr lhs, KetExpr rhs) {
        KetExpr node(kind);
        node.position = lhs.position;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    KetExpr expr() {
        KetExpr lhs = term();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            auto kind = take().type == Tok::Plus ? KetExpr::Kind::Add : KetExpr::Kind::Sub;
            lhs = binary(kind, std::move(lhs), term());
        }
        return lhs;
    }

    KetExpr term() {
        KetExpr lhs = factor();
        while (true) {
            Tok t = peek().type;
            if (t == Tok::Star) {
                take();
                lhs = binary(KetExpr::Kind::Mul, std::move(lhs), factor());
            } else if (t == Tok::Slash) {
                take();
                lhs = binary(KetExpr::Kind::Div, std::move(lhs), divisor());
            } else if (starts_operand(t)) {
                lhs = binary(KetExpr::Kind::Mul, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    KetExpr divisor() {
        if (peek().type == Tok::LParen) {
            return paren();
        }
        if (peek().type == Tok::Number || peek().type == Tok::Sqrt || peek().type == Tok::I) {
            return scalar();
        }
        syntax_error({"number", "'sqrt'", "'i'", "'('"});
    }

    KetExpr paren() {
        size_t at = take().position;
        KetExpr inner = expr();
        if (peek().type != Tok::RParen) {
            syntax_error({"')'", "'+'", "'-'", "'*'", "'/'"});
        }
        take();
        KetExpr node(KetExpr::Kind::Paren);
        node.position = at;
        node.children.push_back(std::move(inner));
        return node;
    }

    KetExpr scalar() {
        const Token &t = take();
        if (t.type == Tok::Number) {
            KetExpr node(KetExpr::Kind::Number);
            node.value = t.number;
            node.position = t.position;
            return node;
        }
        if (t.type == Tok::I) {
            KetExpr node(KetExpr::Kind::ImaginaryUnit);
            node.position = t.position;
            return node;
        }
        // sqrt '(' number ')'
        if (peek().type != Tok::LParen) {
            syntax_error({"'('"});
        }
        take();
        if (peek().type != Tok::Number) {
            syntax_error({"number"});
        }
        double radicand = take().number;
        if (peek().type != Tok::RParen) {
            syntax_error({"')'"});
        }
        take();
        KetExpr node(KetExpr::Kind::Sqrt);
        node.value = radicand;
        node.position = t.position;
        return node;
    }

    KetExpr factor() {
        const Token &t = peek();
        switch (t.type) {
            case Tok::Number:
            case Tok::Sqrt:
            case Tok::I:
                return scalar();
            case Tok::Ket: {
                if (width_ && *width_ != t.bits.size()) {
                    std::ostringstream msg;
                    msg << "ket width mismatch: |" << t.bits << "> has " << t.bits.size() << " qubit(s), expected " << *width_;
                    throw ParseError(ParseError::Kind::WidthMismatch, t.position, msg.str());
                }
                width_ = t.bits.size();
                KetExpr node(KetExpr::Kind::Ket);
                node.bits = t.bits;
                node.position = t.position;
                take();
                return node;
            }
            case Tok::LParen:
                return paren();
            case Tok::Minus: {
                size_t at = take().position;
                KetExpr node(KetExpr::Kind::Neg);
                node.position = at;
                node.children.push_back(factor());
                return node;
            }
            default:
                syntax_error({"number", "'sqrt'", "'i'", "ket", "'('", "'-'"});
        }
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    std::optional<size_t> width_;
};

// Value of a subexpression: either a scalar or an unnormalized ket.
struct Value {
    static Value of(Complex z) {
        Value v;
        v.scalar = z;
        return v;
    }

    bool is_ket = false;
    Complex scalar{};
    size_t width = 0;
    std::vector<Complex> amps;
};

[[noreturn]] void type_error(const KetExpr &node, const std::string &why) {
    throw ParseError(ParseError::Kind::Evaluation, node.position, why);
}

Value eval(const KetExpr &node) {
    using K = KetExpr::Kind;
    switch (node.kind) {
        case K::Number:
            return Value::of(node.value);
        case K::Sqrt:
            if (node.value < 0) {
                type_error(node, "sqrt of a negative number");
            }
            return Value::of(std::sqrt(node.value));
        case K::ImaginaryUnit:
            return Value::of(Complex(0, 1));
        case K::Ket: {
            Value v;
            v.is_ket = true;
            v.width = node.bits.size();
            v.amps.assign(size_t{1} << v.width, Complex{});
            size_t index = 0;
            for (char b : node.bits) {
                index = (index << 1) | static_cast<size_t>(b == '1');
            }
            v.amps[index] = 1;
            return v;
        }
        case K::Paren:
            return eval(node.children[0]);
        case K::Neg: {
            Value v = eval(node.children[0]);
            v.scalar = -v.scalar;
            for (auto &z : v.amps) {
                z = -z;
            }
            return v;
        }
        case K::Add:
        case K::Sub: {
            Value a = eval(node.children[0]);
            Value b = eval(node.children[1]);
            double sign = node.kind == K::Add ? 1.0 : -1.0;
            if (a.is_ket != b.is_ket) {
                type_error(node.children[1], "cannot add or subtract a scalar and a ket");
            }
            if (!a.is_ket) {
                return Value::of(a.scalar + sign * b.scalar);
            }
            if (a.width != b.width) {
                type_error(node.children[1], "ket width mismatch in sum");
            }
            for (size_t k = 0; k < a.amps.size(); k++) {
                a.amps[k] += sign * b.amps[k];
            }
            return a;
        }
        case K::Mul: {
            Value a = eval(node.children[0]);
            Value b = eval(node.children[1]);
            if (a.is_ket && b.is_ket) {
                type_error(node.children[1], "product of two kets is not supported");
            }
            if (!a.is_ket && !b.is_ket) {
                return Value::of(a.scalar * b.scalar);
            }
            Value &ket = a.is_ket ? a : b;
            Complex s = a.is_ket ? b.scalar : a.scalar;
            for (auto &z : ket.amps) {
                z *= s;
            }
            return std::move(ket);
        }
        case K::Div: {
            Value a = eval(node.children[0]);
            Value b = eval(node.children[1]);
            if (b.is_ket) {
                type_error(node.children[1], "cannot divide by a ket");
            }
            if (b.scalar == Complex{}) {
                type_error(node.children[1], "division by zero");
            }
            if (!a.is_ket) {
                return Value::of(a.scalar / b.scalar);
            }
            for (auto &z : a.amps) {
                z /= b.scalar;
            }
            return a;
        }
    }
    type_error(node, "unknown node");
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

ParseError::ParseError(Kind kind, size_t position, std::string detail, std::vector<std::string> expected)
    : InputError(std::string(to_string(kind)) + " error at position " + std::to_string(position) + ": " + detail),
      kind_(kind),
      position_(position),
      detail_(std::move(detail)),
      expected_(std::move(expected)) {
}

const char *to_string(ParseError::Kind kind) {
    switch (kind) {
        case ParseError::Kind::Lexical:
            return "lexical";
        case ParseError::Kind::Syntax:
            return "syntax";
        case ParseError::Kind::WidthMismatch:
            return "width";
        case ParseError::Kind::Evaluation:
            return "evaluation";
    }
    return "parse";
}

std::string to_string(const KetExpr &expr) {
    using K = KetExpr::Kind;
    auto join = [&](const char *name) {
        std::string out = std::string(name) + "(";
        for (size_t k = 0; k < expr.children.size(); k++) {
            out += (k ? "," : "") + to_string(expr.children[k]);
        }
        return out + ")";
    };
    switch (expr.kind) {
        case K::Number:
            return format_number(expr.value);
        case K::Sqrt:
            return "sqrt(" + format_number(expr.value) + ")";
        case K::ImaginaryUnit:
            return "i";
        case K::Ket:
            return "|" + expr.bits + ">";
        case K::Neg:
            return join("Neg");
        case K::Add:
            return join("Add");
        case K::Sub:
            return join("Sub");
        case K::Mul:
            return join("Mul");
        case K::Div:
            return join("Div");
        case K::Paren:
            return join("Paren");
    }
    return "?";
}

KetExpr parse(std::string_view text) {
    return Parser(Lexer(text).run()).run();
}

std::vector<Complex> evaluate_amplitudes(const KetExpr &expr) {
    Value v = eval(expr);
    if (!v.is_ket) {
        type_error(expr, "expression is a scalar; a state needs at least one ket");
    }
    return std::move(v.amps);
}

Evaluation evaluate(const KetExpr &expr) {
    auto amps = evaluate_amplitudes(expr);
    double raw = norm(amps);
    if (!(raw > 1e-300) || !std::isfinite(raw)) {
        type_error(expr, "amplitudes cancel to the zero vector");
    }
    size_t qubits = 0;
    while ((size_t{1} << qubits) < amps.size()) {
        qubits++;
    }
    bool drift = std::abs(raw - 1) > kNormTolerance;
    return {StateVector::normalized(qubits, std::move(amps)), raw, drift};
}

Evaluation parse_state(std::string_view text) {
    return evaluate(parse(text));
}

std::string format_state(const StateVector &state, double tolerance) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    size_t largest = 0;
    for (size_t k = 0; k < amps.size(); k++) {
        if (std::abs(amps[k]) > std::abs(amps[largest])) {
            largest = k;
        }
    }
    // Always print something, even for an oversized tolerance.
    double cut = std::min(tolerance, 0.5 * std::abs(amps[largest]));
    for (auto &lead : amps) {
        double mag = std::abs(lead);
        if (mag > cut) {
            Complex rot = std::conj(lead) / mag;
            for (auto &z : amps) {
                z *= rot;
            }
            lead = mag;
            break;
        }
    }

    std::string out;
    for (size_t index = 0; index < amps.size(); index++) {
        if (std::abs(amps[index]) <= cut) {
            continue;
        }
        double re = std::abs(amps[index].real()) > cut ? amps[index].real() : 0.0;
        double im = std::abs(amps[index].imag()) > cut ? amps[index].imag() : 0.0;
        std::string coef;
        bool negative = false;
        if (im == 0) {
            negative = re < 0;
            coef = format_number(std::abs(re));
        } else if (re == 0) {
            negative = im < 0;
            coef = format_number(std::abs(im)) + "i";
        } else {
            coef = "(" + format_number(re) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i)";
        }
        if (out.empty()) {
            out = negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string bits(state.qubits(), '0');
        for (size_t q = 0; q < state.qubits(); q++) {
            if ((index >> (state.qubits() - 1 - q)) & 1) {
                bits[q] = '1';
            }
        }
        out += coef + "|" + bits + ">";
    }
    return out;
}

}  // namespace qschmidt
