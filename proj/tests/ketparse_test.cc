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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace qschmidt;
using namespace qschmidt::testing;

namespace {

ParseError parse_failure(const std::string &text) {
    try {
        parse_state(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "expected a ParseError for: " << text;
    return ParseError(ParseError::Kind::Syntax, 0, "");
}

void expect_amplitudes(const std::string &text, const std::vector<Complex> &want, double tol = 1e-12) {
    Evaluation e = parse_state(text);
    ASSERT_EQ(e.state.dim(), want.size()) << text;
    for (size_t k = 0; k < want.size(); k++) {
        EXPECT_NEAR(std::abs(e.state[k] - want[k]), 0.0, tol) << text << " index " << k;
    }
}

}  // namespace

TEST(parse, tree_for_uniform_superposition) {
    EXPECT_EQ(to_string(parse("1/2(|00>+|01>+|10>+|11>)")), "Mul(Div(1,2),Paren(Add(Add(Add(|00>,|01>),|10>),|11>)))");
}

TEST(parse, precedence_and_unary_minus) {
    EXPECT_EQ(to_string(parse("|0> - 2*|1>")), "Sub(|0>,Mul(2,|1>))");
    EXPECT_EQ(to_string(parse("-|0>")), "Neg(|0>)");
    EXPECT_EQ(to_string(parse("1/sqrt(2)(|0>+|1>)")), "Mul(Div(1,sqrt(2)),Paren(Add(|0>,|1>)))");
}

TEST(parse, positions_are_byte_offsets) {
    KetExpr e = parse("  |01> + |10>");
    ASSERT_EQ(e.kind, KetExpr::Kind::Add);
    EXPECT_EQ(e.children[0].position, 2u);
    EXPECT_EQ(e.children[1].position, 9u);
}

TEST(parse, width_mismatch_reported_at_second_ket) {
    ParseError e = parse_failure("1/sqrt(2)(|00> + |1>)");
    EXPECT_EQ(e.kind(), ParseError::Kind::WidthMismatch);
    EXPECT_EQ(e.position(), 17u);
}

TEST(parse, bad_digit_in_ket_is_lexical) {
    ParseError e = parse_failure("|0> + |2>");
    EXPECT_EQ(e.kind(), ParseError::Kind::Lexical);
    EXPECT_EQ(e.position(), 7u);
}

TEST(parse, syntax_errors_list_expected_tokens) {
    ParseError e = parse_failure("(3|0>");
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(e.position(), 5u);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());

    EXPECT_EQ(parse_failure("|0> +").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_failure("").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_failure("|0>)").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_failure("|>").kind(), ParseError::Kind::Lexical);
    EXPECT_EQ(parse_failure("|01").kind(), ParseError::Kind::Lexical);
}

TEST(parse, rejects_scalar_only_and_ket_products) {
    EXPECT_EQ(parse_failure("1/2").kind(), ParseError::Kind::Evaluation);
    EXPECT_EQ(parse_failure("|0>|1>").kind(), ParseError::Kind::Evaluation);
    EXPECT_EQ(parse_failure("|0> / |1>").kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(parse_failure("|0> + 1").kind(), ParseError::Kind::Evaluation);
}

TEST(parse, too_wide_ket) {
    EXPECT_NO_THROW(parse_state("|" + std::string(kMaxKetQubits, '0') + ">"));
    EXPECT_EQ(parse_failure("|" + std::string(kMaxKetQubits + 1, '0') + ">").kind(), ParseError::Kind::Lexical);
}

TEST(evaluate, w_state) {
    double a = 1 / std::sqrt(3.0);
    expect_amplitudes("1/sqrt(3)(|001>+|010>+|100>)", {0, a, a, 0, a, 0, 0, 0});
}

TEST(evaluate, bell_states) {
    double h = 1 / std::sqrt(2.0);
    expect_amplitudes("1/sqrt(2)(|00>+|11>)", {h, 0, 0, h});
    expect_amplitudes("1/sqrt(2)(|00>-|11>)", {h, 0, 0, -h});
    expect_amplitudes("1/sqrt(2)(|01>+|10>)", {0, h, h, 0});
    expect_amplitudes("1/sqrt(2)(|01>-|10>)", {0, h, -h, 0});
}

TEST(evaluate, imaginary_unit_and_exponents) {
    expect_amplitudes("0.6|0> + 0.8i|1>", {0.6, Complex(0, 0.8)});
    expect_amplitudes("0.6|0> + i*0.8|1>", {0.6, Complex(0, 0.8)});
    expect_amplitudes("6e-1|0> + 8E-1|1>", {0.6, 0.8});
    expect_amplitudes("(1+i)/2|0> + (1-i)/2|1>", {Complex(0.5, 0.5), Complex(0.5, -0.5)});
}

TEST(evaluate, unicode_ket_close) {
    expect_amplitudes("|0\xE2\x9F\xA9", {1, 0});
}

TEST(evaluate, repeated_kets_accumulate) {
    expect_amplitudes("|0> + |0> + |1> + |1>", {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
}

TEST(evaluate, cancellation_is_an_error) {
    ParseError e = parse_failure("|0> - |0>");
    EXPECT_EQ(e.kind(), ParseError::Kind::Evaluation);
}

TEST(evaluate, division_by_zero_is_an_error) {
    EXPECT_EQ(parse_failure("1/0|0>").kind(), ParseError::Kind::Evaluation);
    EXPECT_EQ(parse_failure("|0>/(1-1)").kind(), ParseError::Kind::Evaluation);
}

TEST(evaluate, drift_is_flagged_and_renormalized) {
    Evaluation e = parse_state("(3|0> + 4|1>)");
    EXPECT_TRUE(e.renormalized);
    EXPECT_NEAR(e.raw_norm, 5.0, 1e-12);
    EXPECT_NEAR(e.state[0].real(), 0.6, 1e-12);
    EXPECT_NEAR(e.state[1].real(), 0.8, 1e-12);

    Evaluation exact = parse_state("1/sqrt(2)|0> + 1/sqrt(2)|1>");
    EXPECT_FALSE(exact.renormalized);
}

TEST(evaluate, linear_in_coefficients) {
    TestRng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        Complex a = rng.complex_normal();
        Complex b = rng.complex_normal();
        char buf[256];
        std::snprintf(buf, sizeof buf, "(%.17g+%.17gi)|01> + (%.17g+%.17gi)|10>", a.real(), a.imag(), b.real(),
                      b.imag());
        std::vector<Complex> amps = evaluate_amplitudes(parse(buf));
        EXPECT_LT(std::abs(amps[1] - a), 1e-12);
        EXPECT_LT(std::abs(amps[2] - b), 1e-12);
        EXPECT_EQ(amps[0], Complex(0));
        EXPECT_EQ(amps[3], Complex(0));
    }
}

TEST(format, canonical_text) {
    EXPECT_EQ(format_state(parse_state("1/2(|00>+|01>+|10>+|11>)").state), "0.5|00> + 0.5|01> + 0.5|10> + 0.5|11>");
    EXPECT_EQ(format_state(StateVector::basis(3, 0)), "1|000>");
    EXPECT_EQ(format_state(parse_state("0.6|0> - 0.8i|1>").state), "0.6|0> - 0.8i|1>");
    // Global phase removed: first amplitude real positive.
    EXPECT_EQ(format_state(parse_state("-0.6|0> + 0.8|1>").state), "0.6|0> - 0.8|1>");
    EXPECT_EQ(format_state(parse_state("i|1>").state), "1|1>");
}

TEST(format, round_trip_random_states) {
    TestRng rng(17);
    for (int trial = 0; trial < 200; trial++) {
        StateVector s = random_state(rng, 1 + rng.below(4));
        std::string text = format_state(s);
        StateVector back = parse_state(text).state;
        ASSERT_LT(phase_distance(s.amplitudes(), back.amplitudes()), 1e-6) << text;
    }
}

namespace {

// Either parses or throws ParseError with an in-range position.
void expect_total(const std::string &text) {
    try {
        parse_state(text);
    } catch (const ParseError &e) {
        ASSERT_LE(e.position(), text.size()) << text;
    } catch (const std::exception &e) {
        FAIL() << "non-parse exception for '" << text << "': " << e.what();
    }
}

}  // namespace

TEST(parse, fuzz_random_strings) {
    const std::string alphabet = "|01>()+-*/ .2e9isqrt";
    TestRng rng(99);
    for (int trial = 0; trial < 20000; trial++) {
        std::string text;
        size_t len = rng.below(16);
        for (size_t k = 0; k < len; k++) {
            text.push_back(alphabet[rng.below(alphabet.size())]);
        }
        expect_total(text);
    }
}

TEST(parse, fuzz_mutated_corpus) {
    const std::vector<std::string> corpus = {"1/2(|00>+|01>+|10>+|11>)", "1/sqrt(3)(|001>+|010>+|100>)",
                                             "0.6|0> + 0.8i|1>", "(1+i)/2|0> - 1e-3|1>"};
    const std::string alphabet = "|01>()+-*/ .2ei\xff";
    TestRng rng(7);
    for (int trial = 0; trial < 20000; trial++) {
        std::string text = corpus[rng.below(corpus.size())];
        size_t edits = 1 + rng.below(3);
        for (size_t k = 0; k < edits; k++) {
            size_t at = rng.below(text.size() + 1);
            switch (rng.below(3)) {
                case 0:
                    text.insert(text.begin() + static_cast<long>(at), alphabet[rng.below(alphabet.size())]);
                    break;
                case 1:
                    if (at < text.size()) {
                        text.erase(at, 1);
                    }
                    break;
                default:
                    if (at < text.size()) {
                        text[at] = alphabet[rng.below(alphabet.size())];
                    }
            }
        }
        expect_total(text);
    }
}
