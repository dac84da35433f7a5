/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "support.hpp"

#include "syrec/real_format.hpp"
#include "syrec/simulator.hpp"
#include "syrec/stats_json.hpp"
#include "syrec/synthesis.hpp"

#include <gtest/gtest.h>
#include <set>

using namespace syrec;

namespace {
    Circuit named(const std::vector<std::string>& labels) {
        Circuit circuit;
        for (const auto& label: labels) {
            circuit.addLine(Line{label, false, false, label, label});
        }
        return circuit;
    }

    bool hasLine(const std::string& text, const std::string& line) {
        std::istringstream stream(text);
        std::string        current;
        while (std::getline(stream, current)) {
            if (current == line) {
                return true;
            }
        }
        return false;
    }

    /// Parses `text` and returns the error, failing when parsing succeeds.
    RealParseError parseError(const std::string& text) {
        try {
            (void)parseReal(text);
        } catch (const RealParseError& error) {
            return error;
        }
        ADD_FAILURE() << "expected a parse error for:\n" << text;
        return RealParseError(0, "none");
    }

    std::vector<std::pair<std::string, SynthesisResult>> corpusResults() {
        std::vector<std::pair<std::string, SynthesisResult>> results;
        for (const auto& file: test::corpusFiles()) {
            const auto program = test::compileOrThrow(test::readFile(file));
            for (const auto mode: {SynthesisMode::CostAware, SynthesisMode::LineAware}) {
                results.emplace_back(file.stem().string() + " " + std::string(toString(mode)), synthesize(program, mode));
            }
        }
        return results;
    }

    const std::string MINIMAL = ".version 2.0\n.numvars 2\n.variables a b\n.inputs a b\n.outputs a b\n.constants --\n.garbage --\n.begin\nt2 a b\n.end\n";
} // namespace

// ------------------------------------------------------------------- emit

TEST(RealEmit, CnotLine) {
    auto circuit = named({"a", "b"});
    circuit.appendGate(Gate::cnot(0, 1));
    EXPECT_TRUE(hasLine(emitReal(circuit), "t2 a b"));
}

TEST(RealEmit, NotLine) {
    auto circuit = named({"x"});
    circuit.appendGate(Gate::inverter(0));
    EXPECT_TRUE(hasLine(emitReal(circuit), "t1 x"));
}

TEST(RealEmit, HeaderLayout) {
    auto circuit = named({"a", "b", "c"});
    circuit.appendGate(Gate::mct({0, 1}, 2));
    circuit.appendGate(Gate::mcf({2}, 0, 1));
    circuit.appendGate(Gate::mcf({}, 0, 1));
    EXPECT_EQ(emitReal(circuit), ".version 2.0\n.numvars 3\n.variables a b c\n.inputs a b c\n.outputs a b c\n.constants ---\n.garbage ---\n.begin\nt3 a b c\nf3 c a b\nf2 a b\n.end\n");
}

TEST(RealEmit, AluCostAwareHeader) {
    const auto result = synthesize(test::compileOrThrow(test::corpusSource("alu")), SynthesisMode::CostAware);
    const auto text   = emitReal(result.circuit);
    EXPECT_TRUE(hasLine(text, ".numvars 11"));
    EXPECT_TRUE(hasLine(text, ".constants -------0000"));
    EXPECT_TRUE(hasLine(text, ".variables op_0 x0_0 x0_1 x1_0 x1_1 x2_0 x2_1 const_0 const_0_1 const_0_2 const_0_3"));
    EXPECT_EQ(parseReal(text), result.circuit);
}

TEST(RealEmit, LabelsAreSanitizedAndMapped) {
    auto circuit = named({"x1.0", "x1.1"});
    circuit.appendGate(Gate::cnot(0, 1));
    const auto text = emitReal(circuit);
    EXPECT_TRUE(hasLine(text, "# map x1_0=x1.0"));
    EXPECT_TRUE(hasLine(text, "# map x1_1=x1.1"));
    EXPECT_TRUE(hasLine(text, "t2 x1_0 x1_1"));
    EXPECT_EQ(parseReal(text).line(0).label, "x1.0");
}

TEST(RealEmit, CollidingLabelsStayDistinct) {
    Circuit circuit;
    circuit.addLine(Line{"a.b"});
    circuit.addLine(Line{"a_b"});
    circuit.addLine(Line{"const_0", true});
    circuit.addLine(Line{"const_0", true});
    circuit.appendGate(Gate::mct({0, 1, 2}, 3));
    const auto text = emitReal(circuit);
    EXPECT_EQ(parseReal(text), circuit);
}

TEST(RealEmit, PlaceholderNamesAreNeverLabels) {
    Circuit circuit;
    circuit.addLine(Line{"0"});
    circuit.addLine(Line{"g", false, true});
    const auto back = parseReal(emitReal(circuit));
    EXPECT_EQ(back, circuit);
}

TEST(RealEmit, EmptyLabelViolatesThePrecondition) {
    Circuit circuit;
    circuit.addLine(Line{""});
    EXPECT_THROW((void)emitReal(circuit), std::invalid_argument);
}

// ------------------------------------------------------------------ parse

TEST(RealParse, MinimalDocument) {
    const auto circuit = parseReal(MINIMAL);
    ASSERT_EQ(circuit.numLines(), 2U);
    EXPECT_EQ(circuit.gates(), (std::vector<Gate>{Gate::cnot(0, 1)}));
    EXPECT_EQ(circuit.line(0).inputName, "a");
    EXPECT_EQ(emitReal(circuit), MINIMAL);
}

TEST(RealParse, OptionalHeaderLinesDefault) {
    const auto circuit = parseReal(".numvars 2\n.variables a b\n.begin\nt2 a b\nf2 a b\n.end\n");
    EXPECT_EQ(circuit.numLines(), 2U);
    EXPECT_EQ(circuit.gates().size(), 2U);
    EXPECT_FALSE(circuit.line(0).isConstant);
}

TEST(RealParse, CommentsAndBlankLinesAreIgnored) {
    const auto circuit = parseReal("# a circuit\n\n.version 2.0\n.numvars 1\n.variables x\n.begin\n# a gate\nt1 x\n\n.end\n# done\n");
    EXPECT_EQ(circuit.gates().size(), 1U);
}

TEST(RealParse, MissingEndIsAnUnterminatedGateSection) {
    const auto error = parseError(".version 2.0\n.numvars 2\n.variables a b\n.begin\nt2 a b\n");
    EXPECT_NE(std::string(error.what()).find("unterminated gate section"), std::string::npos);
}

TEST(RealParse, DuplicateLineInGate) {
    const auto error = parseError(".version 2.0\n.numvars 2\n.variables a b\n.begin\nt2 a a\n.end\n");
    EXPECT_NE(std::string(error.what()).find("duplicate line in gate"), std::string::npos);
    EXPECT_EQ(error.line(), 5U);
    EXPECT_EQ(std::string(error.what()).rfind("line 5: ", 0), 0U);
}

TEST(RealParse, UnknownMnemonic) {
    const auto error = parseError(".numvars 2\n.variables a b\n.begin\nv2 a b\n.end\n");
    EXPECT_NE(std::string(error.what()).find("unknown gate mnemonic 'v2'"), std::string::npos);
    EXPECT_EQ(error.line(), 4U);
}

TEST(RealParse, LabelMismatches) {
    EXPECT_EQ(parseError(".numvars 3\n.variables a b\n.begin\n.end\n").line(), 2U);
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a b\n.begin\nt2 a c\n.end\n").what()).find("label mismatch"), std::string::npos);
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a b\n.inputs a\n.begin\n.end\n").what()).find("label mismatch"), std::string::npos);
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a a\n.begin\n.end\n").what()).find("label mismatch"), std::string::npos);
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a b\n.constants 0\n.begin\n.end\n").what()).find("label mismatch"), std::string::npos);
}

TEST(RealParse, MalformedHeaders) {
    for (const std::string text: {".numvars two\n", ".variables a\n", ".numvars 1\n.variables a\n.constants 1\n.begin\n.end\n", ".numvars 1\n.variables a\n.garbage 0\n.begin\n.end\n", ".numvars 1\n.numvars 1\n", ".begin\n.end\n"}) {
        SCOPED_TRACE(text);
        EXPECT_NE(std::string(parseError(text).what()).find("malformed header"), std::string::npos);
    }
}

TEST(RealParse, ArityIsChecked) {
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a b\n.begin\nt3 a b\n.end\n").what()).find("expects 3 lines"), std::string::npos);
    EXPECT_NE(std::string(parseError(".numvars 2\n.variables a b\n.begin\nf1 a\n.end\n").what()).find("at least 2"), std::string::npos);
}

TEST(RealParse, UnsupportedDirectivesAreRejected) {
    const auto module = parseError(".module top\n.numvars 1\n.variables a\n.begin\n.end\n");
    EXPECT_NE(std::string(module.what()).find("unsupported directive .module"), std::string::npos);
    EXPECT_EQ(module.line(), 1U);
    const auto bus = parseError(".numvars 1\n.variables a\n.inputbus x a\n.begin\n.end\n");
    EXPECT_NE(std::string(bus.what()).find("unsupported directive .inputbus"), std::string::npos);
    EXPECT_EQ(bus.line(), 3U);
}

TEST(RealParse, ContentOutsideTheGateSection) {
    EXPECT_NE(std::string(parseError(".numvars 1\n.variables a\nt1 a\n.begin\n.end\n").what()).find("outside the gate section"), std::string::npos);
    EXPECT_NE(std::string(parseError(MINIMAL + "t1 a\n").what()).find("after .end"), std::string::npos);
}

// ------------------------------------------------------------ round trips

TEST(RealRoundTrip, CorpusIsStructurallyAndByteStable) {
    for (const auto& [name, result]: corpusResults()) {
        SCOPED_TRACE(name);
        const auto text = emitReal(result.circuit);
        const auto back = parseReal(text);
        EXPECT_EQ(back, result.circuit);
        EXPECT_EQ(emitReal(back), text);
        if (result.circuit.numLines() <= 12) {
            EXPECT_EQ(permutation(back), permutation(result.circuit));
        }
    }
}

TEST(RealRoundTrip, EmitIsInjectiveOnTheCorpus) {
    std::set<std::string> texts;
    std::size_t           distinct = 0;
    std::vector<Circuit>  seen;
    for (const auto& [name, result]: corpusResults()) {
        if (std::find(seen.begin(), seen.end(), result.circuit) == seen.end()) {
            seen.push_back(result.circuit);
            ++distinct;
            texts.insert(emitReal(result.circuit));
        }
    }
    EXPECT_EQ(texts.size(), distinct);
}

TEST(RealRoundTrip, DocumentLayerRoundTrips) {
    for (const auto& [name, result]: corpusResults()) {
        const auto document = toRealDocument(result.circuit);
        EXPECT_EQ(parseRealDocument(renderReal(document)), document);
        EXPECT_EQ(document.variables.size(), result.circuit.numLines());
    }
}

// ------------------------------------------------------------------ stats

TEST(StatsJson, AluLineAware) {
    const auto result = synthesize(test::compileOrThrow(test::corpusSource("alu")), SynthesisMode::LineAware);
    const auto json   = emitStats(result.stats, "line-aware", "alu");
    EXPECT_EQ(json.rfind(R"({"program":"alu","mode":"line-aware","lines":7,"constants":0,)", 0), 0U) << json;
}

TEST(StatsJson, AluCostAware) {
    const auto result = synthesize(test::compileOrThrow(test::corpusSource("alu")), SynthesisMode::CostAware);
    const auto json   = nlohmann::json::parse(emitStats(result.stats, "cost-aware", "alu"));
    EXPECT_EQ(json["lines"], 11);
    EXPECT_EQ(json["constants"], 4);
}

TEST(StatsJson, EmptyCircuitAndKeyOrder) {
    EXPECT_EQ(emitStats(statistics(Circuit{}), "cost-aware", "empty"), R"({"program":"empty","mode":"cost-aware","lines":0,"constants":0,"garbage":0,"gates":0,"quantumCost":0})");
}
