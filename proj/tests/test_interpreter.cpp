/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "support.hpp"

#include "syrec/arith.hpp"
#include "syrec/interpreter.hpp"
#include "syrec/parser.hpp"
#include "syrec/printer.hpp"

#include <gtest/gtest.h>
#include <random>
#include <set>

using namespace syrec;

namespace {
    std::uint64_t run(const std::string& source, const SignalState& inputs, const std::string& signal) {
        return interpret(test::compileOrThrow(source), inputs).finalState.at(signal);
    }

    /// Statements of the first module of `source`, elaborated.
    StatementList statements(const std::string& source) {
        return test::compileOrThrow(source).entryModule().body;
    }

    std::vector<std::string> printed(const StatementList& body) {
        std::vector<std::string> lines;
        for (const auto& statement: body) {
            lines.push_back(toString(statement));
        }
        return lines;
    }

    /// Random value for every signal of `module`, respecting widths.
    SignalState randomState(const ModuleDecl& module, std::mt19937_64& rng) {
        SignalState state;
        for (const auto& param: module.params) {
            state[param.name] = rng() & widthMask(*param.width);
        }
        for (const auto& local: module.locals) {
            state[local.name] = rng() & widthMask(*local.width);
        }
        return state;
    }
} // namespace

TEST(Interpreter, ModularSumExample) {
    const std::string source = "module m(inout x0(2), in x1(2), in x2(2)) x0 ^= (x1 + x2)";
    EXPECT_EQ(run(source, {{"x0", 0}, {"x1", 1}, {"x2", 2}}, "x0"), 3U);
}

TEST(Interpreter, AluSum) {
    EXPECT_EQ(run(test::corpusSource("alu"), {{"op", 1}, {"x1", 3}, {"x2", 1}}, "x0"), 0U);
}

TEST(Interpreter, AluDifference) {
    EXPECT_EQ(run(test::corpusSource("alu"), {{"op", 0}, {"x1", 1}, {"x2", 2}}, "x0"), 3U);
}

TEST(Interpreter, OutputsAndWiresStartAtZero) {
    const auto result = interpret(test::compileOrThrow("module m(in a(2), out b(2)) wire w(2) w ^= a; b ^= w"), {{"a", 2}});
    EXPECT_EQ(result.finalState.at("b"), 2U);
    EXPECT_EQ(result.finalState.at("w"), 2U);
}

TEST(Interpreter, ArithmeticWraps) {
    const std::string source = "module m(inout a(3)) ++= a";
    EXPECT_EQ(run(source, {{"a", 7}}, "a"), 0U);
    EXPECT_EQ(run("module m(inout a(3)) --= a", {{"a", 0}}, "a"), 7U);
    EXPECT_EQ(run("module m(inout a(3)) ~= a", {{"a", 5}}, "a"), 2U);
}

TEST(Interpreter, ShiftsFillWithZeros) {
    const std::string source = "module m(in a(4), out b(4), out c(4), out d(4)) b ^= (a << 1); c ^= (a >> 2); d ^= (a << 4)";
    const auto        state  = interpret(test::compileOrThrow(source), {{"a", 0b1011}}).finalState;
    EXPECT_EQ(state.at("b"), 0b0110U);
    EXPECT_EQ(state.at("c"), 0b0010U);
    EXPECT_EQ(state.at("d"), 0U);
}

TEST(Interpreter, BitRangesSwap) {
    const auto state = interpret(test::compileOrThrow("module m(inout a(4)) a.0:1 <=> a.2:3"), {{"a", 0b0110}}).finalState;
    EXPECT_EQ(state.at("a"), 0b1001U);
}

TEST(Interpreter, CallUsesArgumentsByReference) {
    const auto state = interpret(test::compileOrThrow(test::corpusSource("call_uncall")), {{"a", 1}, {"b", 3}}).finalState;
    // a = 1 + 2 = 3; a ^= b -> 0; b = 3 - 2 = 1
    EXPECT_EQ(state.at("a"), 0U);
    EXPECT_EQ(state.at("b"), 1U);
}

TEST(Interpreter, MissingInputIsAnError) {
    EXPECT_THROW((void)interpret(test::compileOrThrow(test::corpusSource("alu")), {{"op", 0}, {"x1", 1}}), InterpreterError);
}

TEST(Interpreter, FiMismatchIsReported) {
    const auto program = test::compileOrThrow("module m(inout c(1)) if c then ~= c else skip fi c");
    EXPECT_NO_THROW((void)interpret(program, {{"c", 0}}));
    EXPECT_THROW((void)interpret(program, {{"c", 1}}), InterpreterError);
}

TEST(Interpreter, TraceListsExecutedStatements) {
    InterpOptions options;
    options.trace     = true;
    const auto result = interpret(test::compileOrThrow("module m(inout a(2), in c(1)) if c then ++= a else --= a fi c; a ^= 1"), {{"a", 0}, {"c", 1}}, options);
    ASSERT_TRUE(result.trace.has_value());
    EXPECT_EQ(*result.trace, (std::vector<std::string>{"++= a", "a ^= 1"}));
    EXPECT_FALSE(interpret(test::compileOrThrow("module m(inout a(2)) ++= a"), {{"a", 0}}).trace.has_value());
}

// -------------------------------------------------------- invert_statements

TEST(InvertStatements, AddBecomesSubtract) {
    EXPECT_EQ(printed(invertStatements(statements("module m(inout a(2), in b(2)) a += b"))), (std::vector<std::string>{"a -= b"}));
}

TEST(InvertStatements, ReversesOrder) {
    EXPECT_EQ(printed(invertStatements(statements("module m(inout a(2), inout b(2)) ++= a; a <=> b"))), (std::vector<std::string>{"a <=> b", "--= a"}));
}

TEST(InvertStatements, InvertsBranches) {
    const auto inverse = invertStatements(statements("module m(inout a(2), in c(1)) if c then ++= a else --= a fi c"));
    ASSERT_EQ(inverse.size(), 1U);
    const auto& branch = std::get<IfStmt>(inverse[0].node);
    EXPECT_EQ(printed(branch.thenBody), (std::vector<std::string>{"--= a"}));
    EXPECT_EQ(printed(branch.elseBody), (std::vector<std::string>{"++= a"}));
    EXPECT_EQ(toString(branch.condition), "c");
}

TEST(InvertStatements, CallBecomesUncall) {
    const auto program = test::compileOrThrow(test::corpusSource("call_uncall"));
    EXPECT_EQ(printed(invertStatements(program.entryModule().body)), (std::vector<std::string>{"call inc2(b)", "a ^= b", "uncall inc2(a)"}));
}

// ------------------------------------------------------------- properties

// body ++ invert_statements(body) restores every state.
TEST(InterpreterProperties, BodyThenInverseRestoresState) {
    for (const auto& file: test::corpusFiles()) {
        SCOPED_TRACE(file.string());
        const auto      program = test::compileOrThrow(test::readFile(file));
        const auto&     module  = program.entryModule();
        const auto      inverse = invertStatements(module.body);
        std::mt19937_64 rng(7);
        for (int sample = 0; sample < 1000; ++sample) {
            const auto initial = randomState(module, rng);
            auto       state   = initial;
            execute(program, module, module.body, state);
            execute(program, module, inverse, state);
            ASSERT_EQ(state, initial);
        }
    }
}

TEST(InterpreterProperties, XorAssignIsAnInvolution) {
    const auto program = test::compileOrThrow("module m(inout a(3), in b(3), in c(3)) a ^= ((b & c) | (b + c))");
    for (std::uint64_t word = 0; word < 512; ++word) {
        SignalState state{{"a", word & 7U}, {"b", (word >> 3) & 7U}, {"c", word >> 6}};
        const auto  initial = state;
        execute(program, program.entryModule(), program.entryModule().body, state);
        execute(program, program.entryModule(), program.entryModule().body, state);
        ASSERT_EQ(state, initial);
    }
}

TEST(InterpreterProperties, AddSubAndIncDecCancel) {
    const auto program = test::compileOrThrow("module m(inout a(3), in b(3)) a += (b ^ 5); a -= (b ^ 5); ++= a; --= a; skip");
    for (std::uint64_t word = 0; word < 64; ++word) {
        const SignalState inputs{{"a", word & 7U}, {"b", word >> 3}};
        EXPECT_EQ(interpret(program, inputs).finalState, inputs);
    }
}

TEST(InterpreterProperties, SwapIsAnInvolution) {
    const auto program = test::compileOrThrow("module m(inout a(2), inout b(2)) a <=> b; a <=> b");
    for (std::uint64_t word = 0; word < 16; ++word) {
        const SignalState inputs{{"a", word & 3U}, {"b", word >> 2}};
        EXPECT_EQ(interpret(program, inputs).finalState, inputs);
    }
}

// The input -> output map is injective for small corpus programs.
TEST(InterpreterProperties, ProgramsAreBijective) {
    for (const auto& file: test::corpusFiles()) {
        const auto program = test::compileOrThrow(test::readFile(file));
        const auto inputs  = primaryInputs(program.entryModule());
        if (test::totalWidth(inputs) > 10) {
            continue;
        }
        SCOPED_TRACE(file.string());
        std::set<SignalState> images;
        std::size_t           count = 0;
        test::forEachInput(program.entryModule(), [&](const SignalState& state) {
            auto result = interpret(program, state).finalState;
            // Wires are internal; `in` values pass through and are part of the image.
            for (const auto& local: program.entryModule().locals) {
                if (local.kind == LocalKind::Wire) {
                    result.erase(local.name);
                }
            }
            images.insert(result);
            ++count;
        });
        EXPECT_EQ(images.size(), count);
    }
}
