/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/diagnostic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syrec {
    enum class TokenKind {
        Identifier,
        Integer,
        LoopVariable, // $i
        WidthOf,      // #x
        LParen,
        RParen,
        Comma,
        Dot,
        Colon,
        Semicolon,
        SwapOp,       // <=>
        CaretEq,      // ^=
        PlusEq,       // +=
        MinusEq,      // -=
        TildeEq,      // ~=
        PlusPlusEq,   // ++=
        MinusMinusEq, // --=
        Plus,
        Minus,
        Caret,
        Amp,
        Pipe,
        AmpAmp,
        PipePipe,
        Less,
        Greater,
        Equal,
        NotEqual,
        LessEqual,
        GreaterEqual,
        ShiftLeft,
        ShiftRight,
        // recognised only to be rejected by the parser
        Star,
        Slash,
        Percent,
        KwModule,
        KwIn,
        KwOut,
        KwInout,
        KwWire,
        KwState,
        KwIf,
        KwThen,
        KwElse,
        KwFi,
        KwFor,
        KwTo,
        KwStep,
        KwDo,
        KwRof,
        KwCall,
        KwUncall,
        KwSkip,
        EndOfFile
    };

    struct Token {
        TokenKind   kind = TokenKind::EndOfFile;
        std::string text;
        SourceSpan  span;
        /// Integer literal value; only meaningful for TokenKind::Integer.
        std::uint64_t value = 0;
        /// True when at least one line break separates this token from the previous one.
        bool newlineBefore = false;

        [[nodiscard]] bool operator==(const Token& other) const {
            return kind == other.kind && text == other.text && value == other.value;
        }
    };

    struct TokenizeResult {
        std::vector<Token> tokens; ///< never contains an EndOfFile token
        Diagnostics        diagnostics;

        [[nodiscard]] bool ok() const { return !hasErrors(diagnostics); }
    };

    /// Splits SyReC source into tokens. Whitespace and comments are dropped;
    /// lexical errors are collected and lexing resumes after the offending
    /// character.
    [[nodiscard]] TokenizeResult tokenize(std::string_view source);

    [[nodiscard]] std::string_view describe(TokenKind kind);
} // namespace syrec
