/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/parser.hpp"

#include "syrec/lexer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace syrec {
    namespace {
        struct SyntaxError {
            Diagnostic diagnostic;
        };

        class Parser {
        public:
            explicit Parser(std::vector<Token> tokens):
                tokens(std::move(tokens)) {
                if (!this->tokens.empty()) {
                    eof.span.begin = this->tokens.back().span.end;
                    eof.span.end   = this->tokens.back().span.end;
                }
            }

            Program parseProgram(Diagnostics& diagnostics) {
                Program program;
                while (!atEnd()) {
                    try {
                        program.modules.emplace_back(parseModule());
                    } catch (const SyntaxError& error) {
                        diagnostics.emplace_back(error.diagnostic);
                        synchronize();
                    }
                }
                return program;
            }

        private:
            std::vector<Token> tokens;
            std::size_t        pos = 0;
            Token              eof;

            [[nodiscard]] bool atEnd() const { return pos >= tokens.size(); }

            [[nodiscard]] const Token& peek(std::size_t offset = 0) const {
                return pos + offset < tokens.size() ? tokens[pos + offset] : eof;
            }

            [[nodiscard]] bool check(TokenKind kind) const { return peek().kind == kind; }

            const Token& advance() {
                const Token& token = peek();
                if (!atEnd()) {
                    ++pos;
                }
                return token;
            }

            bool accept(TokenKind kind) {
                if (check(kind)) {
                    advance();
                    return true;
                }
                return false;
            }

            [[noreturn]] void fail(const std::string& message, const SourceSpan& span) const {
                throw SyntaxError{makeError(message, span)};
            }

            [[noreturn]] void failExpected(std::string_view what) const {
                const Token& token = peek();
                std::string  found = token.kind == TokenKind::EndOfFile ? std::string("end of input") : "'" + token.text + "'";
                fail("expected " + std::string(what) + ", found " + found, token.span);
            }

            const Token& expect(TokenKind kind) {
                if (!check(kind)) {
                    failExpected("'" + std::string(describe(kind)) + "'");
                }
                return advance();
            }

            std::string expectIdentifier() {
                if (!check(TokenKind::Identifier)) {
                    failExpected("identifier");
                }
                return advance().text;
            }

            void synchronize() {
                if (!atEnd()) {
                    advance();
                }
                while (!atEnd() && !check(TokenKind::KwModule)) {
                    advance();
                }
            }

            static SourceSpan join(const SourceSpan& from, const SourceSpan& to) {
                return SourceSpan{from.begin, to.end};
            }

            [[nodiscard]] SourceSpan previousSpan() const {
                return pos > 0 ? tokens[pos - 1].span : eof.span;
            }

            // -------------------------------------------------------------
            // Declarations

            std::optional<unsigned> parseOptionalWidth() {
                if (!accept(TokenKind::LParen)) {
                    return std::nullopt;
                }
                const Token& width = expect(TokenKind::Integer);
                if (width.value > 0xFFFFU) {
                    fail("signal width " + width.text + " is too large", width.span);
                }
                expect(TokenKind::RParen);
                return static_cast<unsigned>(width.value);
            }

            ModuleDecl parseModule() {
                const Token& keyword = expect(TokenKind::KwModule);
                ModuleDecl   module;
                module.name = expectIdentifier();
                expect(TokenKind::LParen);
                if (!check(TokenKind::RParen)) {
                    do {
                        module.params.emplace_back(parseParam());
                    } while (accept(TokenKind::Comma));
                }
                expect(TokenKind::RParen);

                while (check(TokenKind::KwWire) || check(TokenKind::KwState)) {
                    const LocalKind kind = advance().kind == TokenKind::KwWire ? LocalKind::Wire : LocalKind::State;
                    do {
                        LocalSignal local;
                        local.kind       = kind;
                        const Token& id  = peek();
                        local.name       = expectIdentifier();
                        local.width      = parseOptionalWidth();
                        local.span       = join(id.span, previousSpan());
                        module.locals.emplace_back(std::move(local));
                    } while (accept(TokenKind::Comma));
                }

                module.body = parseStatementList();
                module.span = join(keyword.span, previousSpan());
                return module;
            }

            Param parseParam() {
                const Token& start = peek();
                Param        param;
                switch (start.kind) {
                    case TokenKind::KwIn:
                        param.direction = Direction::In;
                        break;
                    case TokenKind::KwOut:
                        param.direction = Direction::Out;
                        break;
                    case TokenKind::KwInout:
                        param.direction = Direction::Inout;
                        break;
                    default:
                        failExpected("parameter direction ('in', 'out' or 'inout')");
                }
                advance();
                param.name  = expectIdentifier();
                param.width = parseOptionalWidth();
                param.span  = join(start.span, previousSpan());
                return param;
            }

            // -------------------------------------------------------------
            // Statements

            [[nodiscard]] bool atStatementStart() const {
                switch (peek().kind) {
                    case TokenKind::KwSkip:
                    case TokenKind::Identifier:
                    case TokenKind::TildeEq:
                    case TokenKind::PlusPlusEq:
                    case TokenKind::MinusMinusEq:
                    case TokenKind::KwIf:
                    case TokenKind::KwFor:
                    case TokenKind::KwCall:
                    case TokenKind::KwUncall:
                        return true;
                    default:
                        return false;
                }
            }

            StatementList parseStatementList() {
                StatementList statements;
                statements.emplace_back(parseStatement());
                while (true) {
                    if (accept(TokenKind::Semicolon)) {
                        statements.emplace_back(parseStatement());
                    } else if (peek().newlineBefore && atStatementStart()) {
                        statements.emplace_back(parseStatement());
                    } else {
                        break;
                    }
                }
                return statements;
            }

            Statement parseStatement() {
                const Token& start = peek();
                Statement    statement;
                switch (start.kind) {
                    case TokenKind::KwSkip:
                        advance();
                        statement.node = SkipStmt{};
                        break;
                    case TokenKind::TildeEq:
                    case TokenKind::PlusPlusEq:
                    case TokenKind::MinusMinusEq: {
                        advance();
                        const UnaryOp op = start.kind == TokenKind::TildeEq      ? UnaryOp::Invert
                                         : start.kind == TokenKind::PlusPlusEq ? UnaryOp::Increment
                                                                               : UnaryOp::Decrement;
                        statement.node = UnaryStmt{op, parseAccess()};
                        break;
                    }
                    case TokenKind::KwIf:
                        statement.node = parseIf();
                        break;
                    case TokenKind::KwFor:
                        statement.node = parseFor();
                        break;
                    case TokenKind::KwCall:
                    case TokenKind::KwUncall:
                        statement.node = parseCall();
                        break;
                    case TokenKind::Identifier: {
                        SignalAccess lhs = parseAccess();
                        if (accept(TokenKind::SwapOp)) {
                            statement.node = SwapStmt{std::move(lhs), parseAccess()};
                            break;
                        }
                        AssignOp op{};
                        if (accept(TokenKind::CaretEq)) {
                            op = AssignOp::Exor;
                        } else if (accept(TokenKind::PlusEq)) {
                            op = AssignOp::Add;
                        } else if (accept(TokenKind::MinusEq)) {
                            op = AssignOp::Subtract;
                        } else {
                            failExpected("'<=>', '^=', '+=' or '-='");
                        }
                        statement.node = AssignStmt{op, std::move(lhs), parseExpression()};
                        break;
                    }
                    default:
                        failExpected("statement");
                }
                statement.span = join(start.span, previousSpan());
                return statement;
            }

            IfStmt parseIf() {
                expect(TokenKind::KwIf);
                IfStmt stmt;
                stmt.condition = parseExpression();
                expect(TokenKind::KwThen);
                stmt.thenBody = parseStatementList();
                expect(TokenKind::KwElse);
                stmt.elseBody = parseStatementList();
                expect(TokenKind::KwFi);
                stmt.fiCondition = parseExpression();
                return stmt;
            }

            ForStmt parseFor() {
                expect(TokenKind::KwFor);
                ForStmt stmt;
                stmt.variable = expect(TokenKind::LoopVariable).text;
                expect(TokenKind::Equal);
                stmt.from = parseNumber();
                expect(TokenKind::KwTo);
                stmt.to = parseNumber();
                if (accept(TokenKind::KwStep)) {
                    stmt.negativeStep = accept(TokenKind::Minus);
                    stmt.step         = parseNumber();
                }
                expect(TokenKind::KwDo);
                stmt.body = parseStatementList();
                expect(TokenKind::KwRof);
                return stmt;
            }

            CallStmt parseCall() {
                CallStmt stmt;
                stmt.uncall = advance().kind == TokenKind::KwUncall;
                stmt.module = expectIdentifier();
                expect(TokenKind::LParen);
                if (!check(TokenKind::RParen)) {
                    do {
                        stmt.arguments.emplace_back(expectIdentifier());
                    } while (accept(TokenKind::Comma));
                }
                expect(TokenKind::RParen);
                return stmt;
            }

            SignalAccess parseAccess() {
                const Token& id = peek();
                SignalAccess access;
                access.name = expectIdentifier();
                if (accept(TokenKind::Dot)) {
                    access.first = parseNumber();
                    if (accept(TokenKind::Colon)) {
                        access.last = parseNumber();
                    }
                }
                access.span = join(id.span, previousSpan());
                return access;
            }

            // -------------------------------------------------------------
            // Numbers

            Number parseNumber() {
                const Token& start = peek();
                switch (start.kind) {
                    case TokenKind::Integer:
                        advance();
                        return Number{start.value, start.span};
                    case TokenKind::LoopVariable:
                        advance();
                        return Number{LoopVariableRef{start.text}, start.span};
                    case TokenKind::WidthOf:
                        advance();
                        return Number{WidthOfRef{start.text}, start.span};
                    case TokenKind::LParen: {
                        advance();
                        Number lhs = parseNumber();
                        BinaryOp op{};
                        if (accept(TokenKind::Plus)) {
                            op = BinaryOp::Add;
                        } else if (accept(TokenKind::Minus)) {
                            op = BinaryOp::Subtract;
                        } else if (check(TokenKind::Star) || check(TokenKind::Slash) || check(TokenKind::Percent)) {
                            fail("operator '" + peek().text + "' is not supported", peek().span);
                        } else {
                            failExpected("'+' or '-'");
                        }
                        Number rhs = parseNumber();
                        expect(TokenKind::RParen);
                        return Number{NumberBinary{op, std::move(lhs), std::move(rhs)}, join(start.span, previousSpan())};
                    }
                    default:
                        failExpected("number");
                }
            }

            // -------------------------------------------------------------
            // Expressions, loosest binding first

            Expression makeBinary(BinaryOp op, Expression lhs, Expression rhs) {
                const SourceSpan span = join(lhs.span, rhs.span);
                return Expression{BinaryExpr{op, std::move(lhs), std::move(rhs)}, span};
            }

            Expression parseExpression() { return parseLogicalOr(); }

            Expression parseLogicalOr() {
                Expression lhs = parseLogicalAnd();
                while (accept(TokenKind::PipePipe)) {
                    lhs = makeBinary(BinaryOp::LogicalOr, std::move(lhs), parseLogicalAnd());
                }
                return lhs;
            }

            Expression parseLogicalAnd() {
                Expression lhs = parseComparison();
                while (accept(TokenKind::AmpAmp)) {
                    lhs = makeBinary(BinaryOp::LogicalAnd, std::move(lhs), parseComparison());
                }
                return lhs;
            }

            std::optional<BinaryOp> comparisonOperator() const {
                switch (peek().kind) {
                    case TokenKind::Less:
                        return BinaryOp::LessThan;
                    case TokenKind::Greater:
                        return BinaryOp::GreaterThan;
                    case TokenKind::Equal:
                        return BinaryOp::Equals;
                    case TokenKind::NotEqual:
                        return BinaryOp::NotEquals;
                    case TokenKind::LessEqual:
                        return BinaryOp::LessEquals;
                    case TokenKind::GreaterEqual:
                        return BinaryOp::GreaterEquals;
                    default:
                        return std::nullopt;
                }
            }

            Expression parseComparison() {
                Expression lhs = parseBitwiseOr();
                if (const auto op = comparisonOperator()) {
                    advance();
                    lhs = makeBinary(*op, std::move(lhs), parseBitwiseOr());
                    if (comparisonOperator()) {
                        fail("comparison operators cannot be chained; add parentheses", peek().span);
                    }
                }
                return lhs;
            }

            Expression parseBitwiseOr() {
                Expression lhs = parseExor();
                while (accept(TokenKind::Pipe)) {
                    lhs = makeBinary(BinaryOp::BitwiseOr, std::move(lhs), parseExor());
                }
                return lhs;
            }

            Expression parseExor() {
                Expression lhs = parseBitwiseAnd();
                while (accept(TokenKind::Caret)) {
                    lhs = makeBinary(BinaryOp::Exor, std::move(lhs), parseBitwiseAnd());
                }
                return lhs;
            }

            Expression parseBitwiseAnd() {
                Expression lhs = parseShift();
                while (accept(TokenKind::Amp)) {
                    lhs = makeBinary(BinaryOp::BitwiseAnd, std::move(lhs), parseShift());
                }
                return lhs;
            }

            Expression parseShift() {
                Expression lhs = parseAdditive();
                while (check(TokenKind::ShiftLeft) || check(TokenKind::ShiftRight)) {
                    const ShiftOp op     = advance().kind == TokenKind::ShiftLeft ? ShiftOp::Left : ShiftOp::Right;
                    Number        amount = parseNumber();
                    const SourceSpan span = join(lhs.span, amount.span);
                    lhs = Expression{ShiftExpr{op, std::move(lhs), std::move(amount)}, span};
                }
                return lhs;
            }

            Expression parseAdditive() {
                Expression lhs = parseUnsupportedMultiplicative();
                while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
                    const BinaryOp op = advance().kind == TokenKind::Plus ? BinaryOp::Add : BinaryOp::Subtract;
                    lhs               = makeBinary(op, std::move(lhs), parseUnsupportedMultiplicative());
                }
                return lhs;
            }

            Expression parseUnsupportedMultiplicative() {
                Expression lhs = parsePrimary();
                if (check(TokenKind::Star) || check(TokenKind::Slash) || check(TokenKind::Percent)) {
                    const Token&      op   = peek();
                    const std::string name = op.kind == TokenKind::Star ? "multiplication" : op.kind == TokenKind::Slash ? "division" : "modulo";
                    fail("operator '" + op.text + "' (" + name + ") is not supported", op.span);
                }
                return lhs;
            }

            Expression parsePrimary() {
                const Token& start = peek();
                switch (start.kind) {
                    case TokenKind::LParen: {
                        advance();
                        Expression inner = parseExpression();
                        expect(TokenKind::RParen);
                        inner.span = join(start.span, previousSpan());
                        return inner;
                    }
                    case TokenKind::Identifier: {
                        SignalAccess     access = parseAccess();
                        const SourceSpan span   = access.span;
                        return Expression{SignalExpr{std::move(access)}, span};
                    }
                    case TokenKind::Integer:
                    case TokenKind::LoopVariable:
                    case TokenKind::WidthOf: {
                        Number           number = parseNumber();
                        const SourceSpan span   = number.span;
                        return Expression{ConstantExpr{std::move(number)}, span};
                    }
                    default:
                        failExpected("expression");
                }
            }
        };
    } // namespace

    ParseResult parse(std::string_view source) {
        ParseResult result;
        auto        tokens = tokenize(source);
        result.diagnostics = std::move(tokens.diagnostics);
        if (hasErrors(result.diagnostics)) {
            return result;
        }
        Parser  parser(std::move(tokens.tokens));
        Program program = parser.parseProgram(result.diagnostics);
        if (!hasErrors(result.diagnostics)) {
            result.program = std::move(program);
        }
        return result;
    }
} // namespace syrec
