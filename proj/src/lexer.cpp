/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/lexer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

namespace syrec {
    namespace {
        constexpr std::array<std::pair<std::string_view, TokenKind>, 18> KEYWORDS{{
                {"module", TokenKind::KwModule},
                {"in", TokenKind::KwIn},
                {"out", TokenKind::KwOut},
                {"inout", TokenKind::KwInout},
                {"wire", TokenKind::KwWire},
                {"state", TokenKind::KwState},
                {"if", TokenKind::KwIf},
                {"then", TokenKind::KwThen},
                {"else", TokenKind::KwElse},
                {"fi", TokenKind::KwFi},
                {"for", TokenKind::KwFor},
                {"to", TokenKind::KwTo},
                {"step", TokenKind::KwStep},
                {"do", TokenKind::KwDo},
                {"rof", TokenKind::KwRof},
                {"call", TokenKind::KwCall},
                {"uncall", TokenKind::KwUncall},
                {"skip", TokenKind::KwSkip},
        }};

        // Longest operators first so that prefix matching picks the longest token.
        constexpr std::array<std::pair<std::string_view, TokenKind>, 32> PUNCTUATION{{
                {"<=>", TokenKind::SwapOp},
                {"++=", TokenKind::PlusPlusEq},
                {"--=", TokenKind::MinusMinusEq},
                {"^=", TokenKind::CaretEq},
                {"+=", TokenKind::PlusEq},
                {"-=", TokenKind::MinusEq},
                {"~=", TokenKind::TildeEq},
                {"&&", TokenKind::AmpAmp},
                {"||", TokenKind::PipePipe},
                {"!=", TokenKind::NotEqual},
                {"<=", TokenKind::LessEqual},
                {">=", TokenKind::GreaterEqual},
                {"<<", TokenKind::ShiftLeft},
                {">>", TokenKind::ShiftRight},
                {"(", TokenKind::LParen},
                {")", TokenKind::RParen},
                {",", TokenKind::Comma},
                {".", TokenKind::Dot},
                {":", TokenKind::Colon},
                {";", TokenKind::Semicolon},
                {"+", TokenKind::Plus},
                {"-", TokenKind::Minus},
                {"^", TokenKind::Caret},
                {"&", TokenKind::Amp},
                {"|", TokenKind::Pipe},
                {"<", TokenKind::Less},
                {">", TokenKind::Greater},
                {"=", TokenKind::Equal},
                {"*", TokenKind::Star},
                {"/", TokenKind::Slash},
                {"%", TokenKind::Percent},
                {"", TokenKind::EndOfFile},
        }};

        bool isIdentStart(char c) {
            return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
        }

        bool isIdentChar(char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
        }

        std::size_t utf8SequenceLength(unsigned char lead) {
            if (lead < 0x80U) {
                return 1;
            }
            if ((lead >> 5U) == 0x6U) {
                return 2;
            }
            if ((lead >> 4U) == 0xEU) {
                return 3;
            }
            if ((lead >> 3U) == 0x1EU) {
                return 4;
            }
            return 1;
        }

        class Lexer {
        public:
            explicit Lexer(std::string_view source):
                source(source) {}

            TokenizeResult run() {
                TokenizeResult result;
                bool           sawNewline = false;
                while (true) {
                    sawNewline |= skipTrivia(result.diagnostics);
                    if (pos >= source.size()) {
                        break;
                    }
                    const SourceLocation start = location;
                    Token                token;
                    if (lexToken(token, result.diagnostics)) {
                        token.span          = SourceSpan{start, location};
                        token.newlineBefore = sawNewline;
                        result.tokens.emplace_back(std::move(token));
                        sawNewline = false;
                    }
                }
                return result;
            }

        private:
            std::string_view source;
            std::size_t      pos = 0;
            SourceLocation   location;

            void advance(std::size_t count = 1) {
                for (std::size_t i = 0; i < count && pos < source.size(); ++i) {
                    const auto c = static_cast<unsigned char>(source[pos]);
                    ++pos;
                    if (c == '\n') {
                        ++location.line;
                        location.column = 1;
                    } else if ((c & 0xC0U) != 0x80U) {
                        // continuation bytes do not start a new column
                        ++location.column;
                    }
                }
            }

            [[nodiscard]] char peek(std::size_t offset = 0) const {
                return pos + offset < source.size() ? source[pos + offset] : '\0';
            }

            /// Returns true if a line break was skipped.
            bool skipTrivia(Diagnostics& diagnostics) {
                bool newline = false;
                while (pos < source.size()) {
                    const char c = peek();
                    if (c == '\n') {
                        newline = true;
                        advance();
                    } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                        advance();
                    } else if (c == '/' && peek(1) == '/') {
                        while (pos < source.size() && peek() != '\n') {
                            advance();
                        }
                    } else if (c == '/' && peek(1) == '*') {
                        const SourceLocation start = location;
                        advance(2);
                        bool closed = false;
                        while (pos < source.size()) {
                            if (peek() == '*' && peek(1) == '/') {
                                advance(2);
                                closed = true;
                                break;
                            }
                            newline |= peek() == '\n';
                            advance();
                        }
                        if (!closed) {
                            diagnostics.emplace_back(makeError("unterminated block comment", SourceSpan{start, location}));
                        }
                    } else {
                        break;
                    }
                }
                return newline;
            }

            std::string_view takeIdentifier() {
                const std::size_t start = pos;
                while (pos < source.size() && isIdentChar(peek())) {
                    advance();
                }
                return source.substr(start, pos - start);
            }

            bool lexToken(Token& token, Diagnostics& diagnostics) {
                const SourceLocation start = location;
                const char           c     = peek();

                if (isIdentStart(c)) {
                    const auto word = takeIdentifier();
                    token.text      = std::string(word);
                    token.kind      = TokenKind::Identifier;
                    for (const auto& [keyword, kind]: KEYWORDS) {
                        if (keyword == word) {
                            token.kind = kind;
                            break;
                        }
                    }
                    return true;
                }

                if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                    const std::size_t begin    = pos;
                    std::uint64_t     value    = 0;
                    bool              overflow = false;
                    while (pos < source.size() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                        const auto digit = static_cast<std::uint64_t>(peek() - '0');
                        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10U) {
                            overflow = true;
                        }
                        value = value * 10U + digit;
                        advance();
                    }
                    token.kind  = TokenKind::Integer;
                    token.text  = std::string(source.substr(begin, pos - begin));
                    token.value = value;
                    if (overflow) {
                        diagnostics.emplace_back(makeError("integer literal '" + token.text + "' does not fit into 64 bits", SourceSpan{start, location}));
                        return false;
                    }
                    return true;
                }

                if (c == '$' || c == '#') {
                    advance();
                    if (!isIdentStart(peek())) {
                        diagnostics.emplace_back(makeError(std::string("expected identifier after '") + c + "'", SourceSpan{start, location}));
                        return false;
                    }
                    token.text = std::string(takeIdentifier());
                    token.kind = c == '$' ? TokenKind::LoopVariable : TokenKind::WidthOf;
                    return true;
                }

                for (const auto& [spelling, kind]: PUNCTUATION) {
                    if (!spelling.empty() && source.substr(pos, spelling.size()) == spelling) {
                        token.kind = kind;
                        token.text = std::string(spelling);
                        advance(spelling.size());
                        return true;
                    }
                }

                const std::size_t length = std::min(utf8SequenceLength(static_cast<unsigned char>(c)), source.size() - pos);
                const std::string offending(source.substr(pos, length));
                advance(length);
                diagnostics.emplace_back(makeError("unexpected character '" + offending + "'", SourceSpan{start, location}));
                return false;
            }
        };
    } // namespace

    TokenizeResult tokenize(std::string_view source) {
        return Lexer(source).run();
    }

    std::string_view describe(TokenKind kind) {
        for (const auto& [spelling, k]: PUNCTUATION) {
            if (k == kind && !spelling.empty()) {
                return spelling;
            }
        }
        for (const auto& [keyword, k]: KEYWORDS) {
            if (k == kind) {
                return keyword;
            }
        }
        switch (kind) {
            case TokenKind::Identifier:
                return "identifier";
            case TokenKind::Integer:
                return "integer";
            case TokenKind::LoopVariable:
                return "loop variable";
            case TokenKind::WidthOf:
                return "width query";
            case TokenKind::EndOfFile:
                return "end of input";
            default:
                return "token";
        }
    }
} // namespace syrec
