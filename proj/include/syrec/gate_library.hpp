/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/circuit.hpp"
#include "syrec/operators.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace syrec {
    /// Ordered circuit lines, least significant bit first.
    using Lines = std::vector<LineIndex>;

    /// Extra controls added to every gate a block emits onto its targets.
    struct ControlContext {
        std::vector<LineIndex> controls;

        [[nodiscard]] ControlContext with(LineIndex line) const;
        [[nodiscard]] bool contains(LineIndex line) const;
    };

    struct Const {
        std::uint64_t value = 0;
        unsigned      width = 0;

        [[nodiscard]] bool bit(unsigned i) const { return ((value >> i) & 1U) != 0U; }
    };

    using Operand = std::variant<Lines, Const>;

    [[nodiscard]] unsigned width(const Operand& operand);

    /// Source of zero-initialised helper lines. Lines are handed back with
    /// value 0 once a block is done with them.
    class LineAllocator {
    public:
        LineAllocator()                                = default;
        LineAllocator(const LineAllocator&)            = default;
        LineAllocator& operator=(const LineAllocator&) = default;
        LineAllocator(LineAllocator&&)                 = default;
        LineAllocator& operator=(LineAllocator&&)      = default;
        virtual ~LineAllocator()                       = default;

        [[nodiscard]] virtual LineIndex acquire() = 0;
        virtual void                    release(LineIndex line) = 0;
    };

    /// Allocator that appends fresh constant lines to a circuit and reuses
    /// released ones, lowest index first.
    class PoolAllocator: public LineAllocator {
    public:
        explicit PoolAllocator(Circuit& circuit, std::size_t maxLines = SIZE_MAX):
            circuit(circuit), maxLines(maxLines) {}

        [[nodiscard]] LineIndex acquire() override;
        void                    release(LineIndex line) override;

        [[nodiscard]] std::size_t created() const { return createdCount; }

    private:
        Circuit&               circuit;
        std::size_t            maxLines;
        std::vector<LineIndex> freeLines;
        std::size_t            createdCount = 0;
    };

    /// target ^= source.
    void buildXorAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& source);

    /// target = (target + addend) mod 2^w, without any extra lines.
    void buildAddAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& addend);

    /// target = (target - subtrahend) mod 2^w; the reverse of the adder.
    void buildSubAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& subtrahend);

    /// target = (target + 1) mod 2^w.
    void buildIncrement(Circuit& circuit, const ControlContext& ctx, const Lines& target);
    /// target = (target - 1) mod 2^w.
    void buildDecrement(Circuit& circuit, const ControlContext& ctx, const Lines& target);

    /// target = ~target.
    void buildInvert(Circuit& circuit, const ControlContext& ctx, const Lines& target);

    /// a <=> b, one Fredkin gate per bit pair.
    void buildSwap(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b);

    /// result ^= left op right for op in {&, |, ^, comparisons, &&, ||}; + and -
    /// are built in place by the adder instead.
    /// The value is xored onto `result`, so the result lines need not be zero.
    /// Operand lines are restored; helper lines come from `allocator`. Only
    /// gates targeting `result` carry the context, so ctx must not contain
    /// operand lines the block modifies temporarily.
    void buildBinaryOnto(Circuit& circuit, const ControlContext& ctx, BinaryOp op, const Operand& left, const Operand& right, const Lines& result, LineAllocator& allocator);

    /// Helper lines buildBinaryOnto borrows for the given operands.
    [[nodiscard]] std::size_t binaryHelperLines(BinaryOp op, const Operand& left, const Operand& right);

    /// b = (a + b) mod 2^n and carry ^= carry-out, in place (a restored).
    void buildCarryAdder(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b, LineIndex carry);
} // namespace syrec
