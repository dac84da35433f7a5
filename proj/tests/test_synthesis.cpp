/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "support.hpp"
#include "syrec/simulator.hpp"
#include "syrec/synthesis.hpp"

#include <gtest/gtest.h>

using namespace syrec;
using namespace syrec::test;

namespace {
    const SynthesisMode allModes[] = {SynthesisMode::CostAware, SynthesisMode::LineAware};

    SignalState outputsOf(const ElaboratedProgram& program, const SignalState& finalState) {
        SignalState outputs;
        const auto& module = program.entryModule();
        for (const auto& param: module.params) {
            if (param.direction != Direction::In) {
                outputs[param.name] = finalState.at(param.name);
            }
        }
        for (const auto& local: module.locals) {
            if (local.kind == LocalKind::State) {
                outputs[local.name] = finalState.at(local.name);
            }
        }
        return outputs;
    }
} // namespace

TEST(Synthesis, SingleXorIsOneCnotInBothModes) {
    const auto program = compileOrThrow("module main(inout a(1), in b(1)) a ^= b");
    for (const auto mode: allModes) {
        const auto result = synthesize(program, mode);
        EXPECT_EQ(result.circuit.numLines(), 2U);
        ASSERT_EQ(result.circuit.gates().size(), 1U);
        EXPECT_EQ(result.circuit.gates()[0], Gate::cnot(1, 0));
    }
}

TEST(Synthesis, AluLineCounts) {
    const auto program = compileOrThrow(corpusSource("alu"));
    const auto lineAware = synthesize(program, SynthesisMode::LineAware);
    EXPECT_EQ(lineAware.stats.lineCount, 7U);
    EXPECT_EQ(lineAware.stats.constantLineCount, 0U);
    const auto costAware = synthesize(program, SynthesisMode::CostAware);
    EXPECT_EQ(costAware.stats.lineCount, 11U);
    EXPECT_EQ(costAware.stats.constantLineCount, 4U);
    EXPECT_LT(costAware.stats.gateCount, lineAware.stats.gateCount);
    EXPECT_LT(costAware.stats.quantumCost, lineAware.stats.quantumCost);
    for (LineIndex i = 7; i < 11; ++i) {
        EXPECT_EQ(costAware.circuit.line(i).label, "const_0");
    }
}

TEST(Synthesis, AluSimulationExamples) {
    const auto program = compileOrThrow(corpusSource("alu"));
    for (const auto mode: allModes) {
        const auto result = synthesize(program, mode);
        EXPECT_EQ(simulate(result, {{"op", 1}, {"x1", 3}, {"x2", 1}}).at("x0"), 0U);
        EXPECT_EQ(simulate(result, {{"op", 0}, {"x1", 1}, {"x2", 2}}).at("x0"), 3U);
    }
}

TEST(Synthesis, CorpusMatchesInterpreter) {
    for (const auto& file: corpusFiles()) {
        SCOPED_TRACE(file.filename().string());
        const auto program = compileOrThrow(readFile(file));
        for (const auto mode: allModes) {
            SCOPED_TRACE(std::string(toString(mode)));
            const auto result = synthesize(program, mode);
            forEachInput(program.entryModule(), [&](const SignalState& inputs) {
                const auto expected = outputsOf(program, interpret(program, inputs).finalState);
                ASSERT_EQ(simulate(result, inputs), expected);
            });
        }
    }
}

TEST(Synthesis, LineAwareRestoresInputs) {
    for (const auto& file: corpusFiles()) {
        SCOPED_TRACE(file.filename().string());
        const auto program = compileOrThrow(readFile(file));
        const auto result  = synthesize(program, SynthesisMode::LineAware);
        forEachInput(program.entryModule(), [&](const SignalState& inputs) {
            const auto word  = run(result.circuit, embedInputs(result.binding, inputs, result.circuit.numLines()));
            const auto state = extractSignals(result.binding, word);
            for (const auto& signal: result.binding.signals) {
                if (signal.isInput && !signal.isOutput) {
                    ASSERT_EQ(state.at(signal.name), inputs.at(signal.name)) << signal.name;
                }
            }
            for (LineIndex i = 0; i < result.circuit.numLines(); ++i) {
                if (result.circuit.line(i).isConstant && !result.circuit.line(i).isGarbage) {
                    ASSERT_FALSE(word.test(i)) << "helper line " << i << " left dirty";
                }
            }
        });
    }
}

TEST(Synthesis, LineAwareNeverUsesMoreLines) {
    for (const auto& file: corpusFiles()) {
        SCOPED_TRACE(file.filename().string());
        const auto program = compileOrThrow(readFile(file));
        EXPECT_LE(synthesize(program, SynthesisMode::LineAware).stats.lineCount, synthesize(program, SynthesisMode::CostAware).stats.lineCount);
    }
}

TEST(Synthesis, IsDeterministic) {
    for (const auto& file: corpusFiles()) {
        const auto program = compileOrThrow(readFile(file));
        for (const auto mode: allModes) {
            EXPECT_EQ(synthesize(program, mode).circuit, synthesize(program, mode).circuit);
        }
    }
}

TEST(Synthesis, LineBudgetIsEnforced) {
    const auto program = compileOrThrow(corpusSource("alu"));
    EXPECT_THROW((void)synthesize(program, SynthesisMode::CostAware, SynthesisSettings{8}), SynthesisError);
    EXPECT_NO_THROW((void)synthesize(program, SynthesisMode::LineAware, SynthesisSettings{7}));
}

TEST(Synthesis, EmbedExtractRoundTrip) {
    const auto program = compileOrThrow(corpusSource("alu"));
    const auto result  = synthesize(program, SynthesisMode::LineAware);
    const SignalState inputs{{"op", 1}, {"x1", 3}, {"x2", 1}};
    const auto        word = embedInputs(result.binding, inputs, result.circuit.numLines());
    const auto        back = extractSignals(result.binding, word);
    EXPECT_EQ(back.at("op"), 1U);
    EXPECT_EQ(back.at("x1"), 3U);
    EXPECT_EQ(back.at("x2"), 1U);
    EXPECT_EQ(back.at("x0"), 0U);
    EXPECT_EQ(embedInputsWord(result.binding, {{"op", 0}, {"x1", 0}, {"x2", 0}}, result.circuit.numLines()), 0U);
    EXPECT_THROW((void)embedInputs(result.binding, {{"op", 1}, {"x1", 3}}, 7), std::invalid_argument);
}

// [call m; uncall m] is the identity: exactly (every input word, ancillas
// included) for line-aware lowerings of modules without locals, and on
// every input with zero-initialized ancillas otherwise.
TEST(Synthesis, CallThenUncallIsIdentity) {
    std::size_t exact = 0;
    for (const auto& file: corpusFiles()) {
        const auto original = compileOrThrow(readFile(file));
        for (const auto& module: original.program.modules) {
            SCOPED_TRACE(file.stem().string() + " " + module.name);
            const auto program = callUncallProgram(original, module);
            for (const auto mode: allModes) {
                const auto  result = synthesize(program, mode);
                const auto& c      = result.circuit;
                if (c.numLines() > 12) {
                    continue;
                }
                const auto words = permutation(c);
                if (mode == SynthesisMode::LineAware && !usesLocals(program.program, module)) {
                    ++exact;
                    for (std::uint64_t word = 0; word < words.size(); ++word) {
                        ASSERT_EQ(words[word], word);
                    }
                    continue;
                }
                std::uint64_t constantMask = 0;
                for (LineIndex i = 0; i < c.numLines(); ++i) {
                    if (c.line(i).isConstant) {
                        constantMask |= std::uint64_t{1} << i;
                    }
                }
                for (std::uint64_t word = 0; word < words.size(); ++word) {
                    if ((word & constantMask) == 0U) {
                        ASSERT_EQ(words[word] & ~constantMask, word);
                    }
                }
            }
        }
    }
    EXPECT_GT(exact, 0U);
}
