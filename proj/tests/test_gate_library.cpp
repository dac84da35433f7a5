/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/arith.hpp"
#include "syrec/gate_library.hpp"
#include "syrec/simulator.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>

using namespace syrec;

namespace {
    // Lines: a = [0, w), b = [w, 2w), ctx = 2w, result = 2w + 1, helpers after.
    struct Layout {
        unsigned  w;
        Lines     a;
        Lines     b;
        LineIndex ctx;
        LineIndex result;

        explicit Layout(unsigned width):
            w(width), ctx(2 * width), result(2 * width + 1) {
            for (unsigned i = 0; i < w; ++i) {
                a.push_back(i);
                b.push_back(w + i);
            }
        }

        [[nodiscard]] Circuit circuit() const {
            Circuit c;
            for (unsigned i = 0; i < 2 * w + 2; ++i) {
                c.addLine(Line{"l" + std::to_string(i)});
            }
            return c;
        }

        [[nodiscard]] std::uint64_t field(std::uint64_t word, const Lines& lines) const {
            std::uint64_t value = 0;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                value |= ((word >> lines[i]) & 1U) << i;
            }
            return value;
        }
    };

    // Checks every input word whose helper lines are zero: the block must be
    // the identity when ctx is 0 and produce `expected` otherwise.
    void checkExhaustive(const Circuit& circuit, const Layout& layout, std::size_t baseLines, const std::function<std::uint64_t(std::uint64_t)>& expected) {
        const std::uint64_t inputs = std::uint64_t{1} << baseLines;
        for (std::uint64_t word = 0; word < inputs; ++word) {
            const auto out = run(circuit, word);
            if (((word >> layout.ctx) & 1U) == 0U) {
                ASSERT_EQ(out, word) << "gated-off input " << word << " is not a fixed point";
            } else {
                ASSERT_EQ(out, expected(word)) << "input " << word;
            }
        }
    }

    std::uint64_t setField(std::uint64_t word, const Lines& lines, std::uint64_t value) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::uint64_t mask = std::uint64_t{1} << lines[i];
            word                     = ((value >> i) & 1U) != 0U ? (word | mask) : (word & ~mask);
        }
        return word;
    }
} // namespace

TEST(GateLibrary, XorAssignSingleBitIsCnot) {
    Circuit c;
    c.addLine({"s"});
    c.addLine({"t"});
    buildXorAssign(c, {}, {1}, Lines{0});
    ASSERT_EQ(c.gates().size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::cnot(0, 1));
}

TEST(GateLibrary, XorAssignConstantTouchesOneBitsOnly) {
    Circuit c;
    c.addLine({"t0"});
    c.addLine({"t1"});
    buildXorAssign(c, {}, {0, 1}, Const{2, 2});
    ASSERT_EQ(c.gates().size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::inverter(1));
}

TEST(GateLibrary, XorAssignUnderContextIsToffoli) {
    Circuit c;
    c.addLine({"c"});
    c.addLine({"s"});
    c.addLine({"t"});
    buildXorAssign(c, {{0}}, {2}, Lines{1});
    ASSERT_EQ(c.gates().size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::toffoli(0, 1, 2));
}

TEST(GateLibrary, OneBitAdderIsCnot) {
    Circuit c;
    c.addLine({"s"});
    c.addLine({"t"});
    buildAddAssign(c, {}, {1}, Lines{0});
    ASSERT_EQ(c.gates().size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::cnot(0, 1));
}

class BlockWidth: public testing::TestWithParam<unsigned> {};

TEST_P(BlockWidth, AdderMatchesModularSum) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    buildAddAssign(c, {{layout.ctx}}, layout.b, layout.a);
    EXPECT_EQ(c.numLines(), 2U * layout.w + 2U) << "adder must not add lines";
    checkExhaustive(c, layout, c.numLines(), [&](std::uint64_t word) {
        return setField(word, layout.b, applyBinary(BinaryOp::Add, layout.field(word, layout.b), layout.field(word, layout.a), layout.w));
    });
}

TEST_P(BlockWidth, SubtractorMatchesModularDifference) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    buildSubAssign(c, {{layout.ctx}}, layout.b, layout.a);
    checkExhaustive(c, layout, c.numLines(), [&](std::uint64_t word) {
        return setField(word, layout.b, applyBinary(BinaryOp::Subtract, layout.field(word, layout.b), layout.field(word, layout.a), layout.w));
    });
}

TEST_P(BlockWidth, SubtractorIsReversedAdder) {
    const Layout layout(GetParam());
    auto         add = layout.circuit();
    auto         sub = layout.circuit();
    buildAddAssign(add, {{layout.ctx}}, layout.b, layout.a);
    buildSubAssign(sub, {{layout.ctx}}, layout.b, layout.a);
    EXPECT_EQ(sub, reverseCircuit(add));
}

TEST_P(BlockWidth, AdderWithAddendInContextFallsBack) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    buildAddAssign(c, {{layout.a[0]}}, layout.b, layout.a);
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << c.numLines()); ++word) {
        const auto out      = run(c, word);
        auto       expected = word;
        if ((word & 1U) != 0U) {
            expected = setField(word, layout.b, applyBinary(BinaryOp::Add, layout.field(word, layout.b), layout.field(word, layout.a), layout.w));
        }
        ASSERT_EQ(out, expected);
    }
}

TEST_P(BlockWidth, ConstantAdderAndSubtractor) {
    const Layout layout(GetParam());
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << layout.w); ++k) {
        auto add = layout.circuit();
        auto sub = layout.circuit();
        buildAddAssign(add, {{layout.ctx}}, layout.b, Const{k, layout.w});
        buildSubAssign(sub, {{layout.ctx}}, layout.b, Const{k, layout.w});
        checkExhaustive(add, layout, add.numLines(), [&](std::uint64_t word) {
            return setField(word, layout.b, applyBinary(BinaryOp::Add, layout.field(word, layout.b), k, layout.w));
        });
        checkExhaustive(sub, layout, sub.numLines(), [&](std::uint64_t word) {
            return setField(word, layout.b, applyBinary(BinaryOp::Subtract, layout.field(word, layout.b), k, layout.w));
        });
    }
}

TEST_P(BlockWidth, AddThenSubIsIdentity) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    buildAddAssign(c, {{layout.ctx}}, layout.b, layout.a);
    buildSubAssign(c, {{layout.ctx}}, layout.b, layout.a);
    const auto image = permutation(c);
    for (std::uint64_t word = 0; word < image.size(); ++word) {
        ASSERT_EQ(image[word], word);
    }
}

TEST_P(BlockWidth, IncrementThenDecrementIsIdentity) {
    const Layout layout(GetParam());
    auto         inc = layout.circuit();
    buildIncrement(inc, {{layout.ctx}}, layout.b);
    checkExhaustive(inc, layout, inc.numLines(), [&](std::uint64_t word) {
        return setField(word, layout.b, (layout.field(word, layout.b) + 1U) & widthMask(layout.w));
    });
    buildDecrement(inc, {{layout.ctx}}, layout.b);
    const auto image = permutation(inc);
    for (std::uint64_t word = 0; word < image.size(); ++word) {
        ASSERT_EQ(image[word], word);
    }
}

TEST_P(BlockWidth, SwapTwiceIsIdentity) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    buildSwap(c, {{layout.ctx}}, layout.a, layout.b);
    EXPECT_EQ(c.gates().size(), layout.w);
    checkExhaustive(c, layout, c.numLines(), [&](std::uint64_t word) {
        return setField(setField(word, layout.a, layout.field(word, layout.b)), layout.b, layout.field(word, layout.a));
    });
    buildSwap(c, {{layout.ctx}}, layout.a, layout.b);
    const auto image = permutation(c);
    for (std::uint64_t word = 0; word < image.size(); ++word) {
        ASSERT_EQ(image[word], word);
    }
}

TEST_P(BlockWidth, BinaryOntoMatchesOperatorSemantics) {
    const unsigned w = GetParam();
    for (const auto op: {BinaryOp::BitwiseAnd, BinaryOp::BitwiseOr, BinaryOp::Exor, BinaryOp::LessThan, BinaryOp::GreaterThan, BinaryOp::Equals,
                         BinaryOp::NotEquals, BinaryOp::LessEquals, BinaryOp::GreaterEquals}) {
        const Layout   layout(w);
        const unsigned resultWidth = producesSingleBit(op) ? 1U : w;
        auto           c           = layout.circuit();
        Lines          result{layout.result};
        for (unsigned i = 1; i < resultWidth; ++i) {
            result.push_back(c.addLine({"r" + std::to_string(i)}));
        }
        const std::size_t baseLines = c.numLines();
        PoolAllocator     pool(c);
        buildBinaryOnto(c, {{layout.ctx}}, op, layout.a, layout.b, result, pool);
        EXPECT_EQ(pool.created(), binaryHelperLines(op, layout.a, layout.b));
        checkExhaustive(c, layout, baseLines, [&](std::uint64_t word) {
            const auto value = applyBinary(op, layout.field(word, layout.a), layout.field(word, layout.b), w);
            return setField(word, result, layout.field(word, result) ^ value);
        });
    }
}

TEST_P(BlockWidth, BinaryOntoWithConstantOperand) {
    const unsigned w = GetParam();
    for (const auto op: {BinaryOp::BitwiseAnd, BinaryOp::BitwiseOr, BinaryOp::Exor, BinaryOp::LessThan, BinaryOp::GreaterThan, BinaryOp::Equals,
                         BinaryOp::NotEquals, BinaryOp::LessEquals, BinaryOp::GreaterEquals}) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << w); ++k) {
            for (const bool constantLeft: {false, true}) {
                const Layout   layout(w);
                const unsigned resultWidth = producesSingleBit(op) ? 1U : w;
                auto           c           = layout.circuit();
                Lines          result{layout.result};
                for (unsigned i = 1; i < resultWidth; ++i) {
                    result.push_back(c.addLine({"r" + std::to_string(i)}));
                }
                const std::size_t baseLines = c.numLines();
                PoolAllocator     pool(c);
                const Operand     constant = Const{k, w};
                const Operand     lines    = layout.a;
                buildBinaryOnto(c, {{layout.ctx}}, op, constantLeft ? constant : lines, constantLeft ? lines : constant, result, pool);
                checkExhaustive(c, layout, baseLines, [&](std::uint64_t word) {
                    const auto a     = layout.field(word, layout.a);
                    const auto value = constantLeft ? applyBinary(op, k, a, w) : applyBinary(op, a, k, w);
                    return setField(word, result, layout.field(word, result) ^ value);
                });
            }
        }
    }
}

TEST_P(BlockWidth, ComparatorWithSharedOperandUsesHelpers) {
    const Layout layout(GetParam());
    auto         c = layout.circuit();
    PoolAllocator pool(c);
    buildBinaryOnto(c, {{layout.ctx}}, BinaryOp::LessEquals, layout.a, layout.a, {layout.result}, pool);
    EXPECT_EQ(pool.created(), layout.w);
    checkExhaustive(c, layout, 2U * layout.w + 2U, [&](std::uint64_t word) { return word ^ (std::uint64_t{1} << layout.result); });
}

INSTANTIATE_TEST_SUITE_P(Widths, BlockWidth, testing::Values(1U, 2U, 3U));

TEST(GateLibrary, EqualityOnSingleBitsMatchesTruthTable) {
    Circuit c;
    c.addLine({"a"});
    c.addLine({"b"});
    c.addLine({"r"});
    PoolAllocator pool(c);
    buildBinaryOnto(c, {}, BinaryOp::Equals, Lines{0}, Lines{1}, {2}, pool);
    const std::vector<Gate> expected{Gate::cnot(0, 2), Gate::cnot(1, 2), Gate::inverter(2)};
    EXPECT_EQ(c.gates(), expected);
}

TEST(GateLibrary, AndOnSingleBitsIsToffoli) {
    Circuit c;
    c.addLine({"a"});
    c.addLine({"b"});
    c.addLine({"r"});
    PoolAllocator pool(c);
    buildBinaryOnto(c, {}, BinaryOp::BitwiseAnd, Lines{0}, Lines{1}, {2}, pool);
    ASSERT_EQ(c.gates().size(), 1U);
    EXPECT_EQ(c.gates()[0], Gate::toffoli(0, 1, 2));
}

TEST(GateLibrary, IncrementStaircaseShape) {
    Circuit c;
    for (int i = 0; i < 3; ++i) {
        c.addLine({"t" + std::to_string(i)});
    }
    buildIncrement(c, {}, {0, 1, 2});
    const std::vector<Gate> expected{Gate::mct({0, 1}, 2), Gate::cnot(0, 1), Gate::inverter(0)};
    EXPECT_EQ(c.gates(), expected);
}

TEST(GateLibrary, RejectsTargetInContext) {
    Circuit c;
    c.addLine({"a"});
    c.addLine({"b"});
    EXPECT_THROW(buildXorAssign(c, {{1}}, {1}, Lines{0}), std::invalid_argument);
    EXPECT_THROW(buildSwap(c, {}, {0}, {0}), std::invalid_argument);
    EXPECT_THROW(buildXorAssign(c, {}, {0, 1}, Lines{0}), std::invalid_argument);
}

TEST(GateLibrary, CarryAdderProducesCarryOut) {
    for (unsigned w = 1; w <= 3; ++w) {
        Circuit c;
        Lines   a;
        Lines   b;
        for (unsigned i = 0; i < w; ++i) {
            a.push_back(c.addLine({"a"}));
        }
        for (unsigned i = 0; i < w; ++i) {
            b.push_back(c.addLine({"b"}));
        }
        const auto z = c.addLine({"z"});
        buildCarryAdder(c, {}, a, b, z);
        for (std::uint64_t word = 0; word < (std::uint64_t{1} << c.numLines()); ++word) {
            const auto av  = word & widthMask(w);
            const auto bv  = (word >> w) & widthMask(w);
            const auto sum = av + bv;
            auto       exp = av | ((sum & widthMask(w)) << w);
            exp |= ((((word >> z) & 1U) ^ (sum >> w)) & 1U) << z;
            ASSERT_EQ(run(c, word), exp) << "w=" << w << " word=" << word;
        }
    }
}
