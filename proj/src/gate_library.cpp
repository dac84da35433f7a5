/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/gate_library.hpp"

#include "syrec/arith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace syrec {
    namespace {
        void emit(Circuit& circuit, const ControlContext& ctx, const Gate& gate) {
            circuit.appendGate(gate.withControls(ctx.controls));
        }

        void emitPlain(Circuit& circuit, const Gate& gate) {
            circuit.appendGate(gate);
        }

        bool overlaps(const Lines& a, const Lines& b) {
            const std::set<LineIndex> set(a.begin(), a.end());
            return std::any_of(b.begin(), b.end(), [&](LineIndex line) { return set.count(line) != 0U; });
        }

        bool overlaps(const Lines& lines, const ControlContext& ctx) {
            return overlaps(lines, ctx.controls);
        }

        void requireDistinct(const Lines& lines, const char* what) {
            const std::set<LineIndex> set(lines.begin(), lines.end());
            if (set.size() != lines.size()) {
                throw std::invalid_argument(std::string(what) + " lines are not distinct");
            }
        }

        void requireTargetOutsideContext(const Lines& target, const ControlContext& ctx) {
            requireDistinct(target, "target");
            if (overlaps(target, ctx)) {
                throw std::invalid_argument("target lines overlap the control context");
            }
        }

        void requireWidth(unsigned expected, unsigned actual) {
            if (expected != actual) {
                throw std::invalid_argument("width mismatch " + std::to_string(expected) + " vs " + std::to_string(actual));
            }
        }

        Lines slice(const Lines& lines, std::size_t first, std::size_t count) {
            return {lines.begin() + static_cast<std::ptrdiff_t>(first), lines.begin() + static_cast<std::ptrdiff_t>(first + count)};
        }

        // Carry ripple adder without ancillae: b = a + b (mod 2^n), carry ^=
        // carry-out. When `onlyCarryControlled` is set, the context is put on
        // the gates targeting `carry` only: every other gate cancels out on
        // its own, which makes the block usable for comparators.
        void carryAdder(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b, LineIndex carry, bool onlyCarryControlled) {
            const std::size_t n      = a.size();
            const auto        bodyCx = onlyCarryControlled ? ControlContext{} : ctx;
            const auto        aAt    = [&](std::size_t i) { return i == n ? carry : a[i]; };
            const auto        put    = [&](const Gate& gate) { emit(circuit, gate.targets.front() == carry ? ctx : bodyCx, gate); };

            for (std::size_t i = 1; i < n; ++i) {
                put(Gate::cnot(a[i], b[i]));
            }
            for (std::size_t i = n - 1; i >= 1; --i) {
                put(Gate::cnot(a[i], aAt(i + 1)));
            }
            for (std::size_t i = 0; i < n; ++i) {
                put(Gate::toffoli(a[i], b[i], aAt(i + 1)));
            }
            for (std::size_t i = n - 1; i >= 1; --i) {
                put(Gate::cnot(a[i], b[i]));
                put(Gate::toffoli(a[i - 1], b[i - 1], a[i]));
            }
            for (std::size_t i = 1; i + 1 < n; ++i) {
                put(Gate::cnot(a[i], a[i + 1]));
            }
            for (std::size_t i = 0; i < n; ++i) {
                put(Gate::cnot(a[i], b[i]));
            }
        }

        // b = (a + b) mod 2^n: the carry out of the low n-1 bits lands in the top bit of b.
        void modularAdder(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b) {
            const std::size_t n = a.size();
            if (n == 0U) {
                return;
            }
            if (n > 1U) {
                carryAdder(circuit, ctx, slice(a, 0, n - 1U), slice(b, 0, n - 1U), b[n - 1U], false);
            }
            emit(circuit, ctx, Gate::cnot(a[n - 1U], b[n - 1U]));
        }

        void increment(Circuit& circuit, const ControlContext& ctx, const Lines& target) {
            for (std::size_t k = target.size(); k-- > 1U;) {
                emit(circuit, ctx, Gate::mct(slice(target, 0, k), target[k]));
            }
            if (!target.empty()) {
                emit(circuit, ctx, Gate::inverter(target[0]));
            }
        }

        template<typename Build>
        void emitReversed(Circuit& circuit, Build&& build) {
            Circuit scratch(circuit.lines());
            build(scratch);
            circuit.append(reverseGates(scratch.gates()));
        }

        // Lines holding `operand` for the duration of a block: constants are
        // written into helpers; line operands that collide with `avoid` are
        // copied. `unstage` undoes the setup and returns the helpers.
        struct Staged {
            Lines lines;
            Lines helpers;
            std::vector<Gate> setup;
        };

        Staged stage(Circuit& circuit, const Operand& operand, const Lines& avoid, LineAllocator& allocator) {
            Staged staged;
            const auto* lines = std::get_if<Lines>(&operand);
            if (lines != nullptr && !overlaps(*lines, avoid)) {
                staged.lines = *lines;
                return staged;
            }
            const unsigned w = width(operand);
            for (unsigned i = 0; i < w; ++i) {
                staged.helpers.push_back(allocator.acquire());
            }
            for (unsigned i = 0; i < w; ++i) {
                if (lines != nullptr) {
                    staged.setup.push_back(Gate::cnot((*lines)[i], staged.helpers[i]));
                } else if (std::get<Const>(operand).bit(i)) {
                    staged.setup.push_back(Gate::inverter(staged.helpers[i]));
                }
            }
            for (const auto& gate: staged.setup) {
                emitPlain(circuit, gate);
            }
            staged.lines = staged.helpers;
            return staged;
        }

        void unstage(Circuit& circuit, const Staged& staged, LineAllocator& allocator) {
            for (auto it = staged.setup.rbegin(); it != staged.setup.rend(); ++it) {
                emitPlain(circuit, *it);
            }
            for (const auto helper: staged.helpers) {
                allocator.release(helper);
            }
        }

        // result ^= [l < r] for disjoint line operands; both are restored.
        void lessThan(Circuit& circuit, const ControlContext& ctx, const Lines& l, const Lines& r, LineIndex result) {
            for (const auto line: l) {
                emitPlain(circuit, Gate::inverter(line));
            }
            // ~l + r overflows exactly when r > l.
            carryAdder(circuit, ctx, r, l, result, true);
            emitReversed(circuit, [&](Circuit& scratch) { modularAdder(scratch, {}, r, l); });
            for (const auto line: l) {
                emitPlain(circuit, Gate::inverter(line));
            }
        }

        // result ^= [l == r]; r may be a constant.
        void equals(Circuit& circuit, const ControlContext& ctx, const Lines& l, const Operand& r, LineIndex result) {
            std::vector<Gate> setup;
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (const auto* lines = std::get_if<Lines>(&r)) {
                    setup.push_back(Gate::cnot((*lines)[i], l[i]));
                    setup.push_back(Gate::inverter(l[i]));
                } else if (!std::get<Const>(r).bit(static_cast<unsigned>(i))) {
                    setup.push_back(Gate::inverter(l[i]));
                }
            }
            for (const auto& gate: setup) {
                emitPlain(circuit, gate);
            }
            emit(circuit, ctx, Gate::mct(l, result));
            for (auto it = setup.rbegin(); it != setup.rend(); ++it) {
                emitPlain(circuit, *it);
            }
        }

        void bitwise(Circuit& circuit, const ControlContext& ctx, BinaryOp op, const Operand& left, const Operand& right, const Lines& result) {
            const auto* ll = std::get_if<Lines>(&left);
            const auto* rl = std::get_if<Lines>(&right);
            for (std::size_t i = 0; i < result.size(); ++i) {
                const auto bit = static_cast<unsigned>(i);
                if (ll != nullptr && rl != nullptr) {
                    if (op == BinaryOp::BitwiseOr || op == BinaryOp::Exor) {
                        emit(circuit, ctx, Gate::cnot((*ll)[i], result[i]));
                        emit(circuit, ctx, Gate::cnot((*rl)[i], result[i]));
                    }
                    if (op != BinaryOp::Exor) {
                        emit(circuit, ctx, Gate::mct({(*ll)[i], (*rl)[i]}, result[i]));
                    }
                    continue;
                }
                // One constant side: the bit either passes the other operand or fixes the result.
                const auto* lines  = ll != nullptr ? ll : rl;
                const auto& value  = std::get<Const>(ll != nullptr ? right : left);
                const bool  set    = value.bit(bit);
                const bool  passes = op == BinaryOp::Exor || (op == BinaryOp::BitwiseAnd ? set : !set);
                if (passes) {
                    emit(circuit, ctx, Gate::cnot((*lines)[i], result[i]));
                }
                if ((op == BinaryOp::BitwiseOr || op == BinaryOp::Exor) && set) {
                    emit(circuit, ctx, Gate::inverter(result[i]));
                }
            }
        }
    } // namespace

    ControlContext ControlContext::with(LineIndex line) const {
        ControlContext extended = *this;
        if (!contains(line)) {
            extended.controls.push_back(line);
            std::sort(extended.controls.begin(), extended.controls.end());
        }
        return extended;
    }

    bool ControlContext::contains(LineIndex line) const {
        return std::find(controls.begin(), controls.end(), line) != controls.end();
    }

    unsigned width(const Operand& operand) {
        if (const auto* lines = std::get_if<Lines>(&operand)) {
            return static_cast<unsigned>(lines->size());
        }
        return std::get<Const>(operand).width;
    }

    LineIndex PoolAllocator::acquire() {
        if (!freeLines.empty()) {
            const auto it   = std::min_element(freeLines.begin(), freeLines.end());
            const auto line = *it;
            freeLines.erase(it);
            return line;
        }
        if (circuit.numLines() >= maxLines) {
            throw std::length_error("line budget of " + std::to_string(maxLines) + " lines exceeded");
        }
        ++createdCount;
        return circuit.addLine(Line{"const_0", true, false, std::nullopt, std::nullopt});
    }

    void PoolAllocator::release(LineIndex line) {
        freeLines.push_back(line);
    }

    void buildXorAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& source) {
        requireTargetOutsideContext(target, ctx);
        requireWidth(static_cast<unsigned>(target.size()), width(source));
        if (const auto* lines = std::get_if<Lines>(&source)) {
            if (overlaps(target, *lines)) {
                throw std::invalid_argument("xor target overlaps its source");
            }
            for (std::size_t i = 0; i < target.size(); ++i) {
                emit(circuit, ctx, Gate::cnot((*lines)[i], target[i]));
            }
            return;
        }
        const auto& value = std::get<Const>(source);
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (value.bit(static_cast<unsigned>(i))) {
                emit(circuit, ctx, Gate::inverter(target[i]));
            }
        }
    }

    void buildCarryAdder(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b, LineIndex carry) {
        requireWidth(static_cast<unsigned>(b.size()), static_cast<unsigned>(a.size()));
        Lines all = a;
        all.insert(all.end(), b.begin(), b.end());
        all.push_back(carry);
        requireTargetOutsideContext(all, ctx);
        if (!a.empty()) {
            carryAdder(circuit, ctx, a, b, carry, false);
        }
    }

    void buildAddAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& addend) {
        requireTargetOutsideContext(target, ctx);
        requireWidth(static_cast<unsigned>(target.size()), width(addend));
        const std::size_t n = target.size();
        if (const auto* value = std::get_if<Const>(&addend)) {
            for (std::size_t i = 0; i < n; ++i) {
                if (value->bit(static_cast<unsigned>(i))) {
                    increment(circuit, ctx, slice(target, i, n - i));
                }
            }
            return;
        }
        const auto& lines = std::get<Lines>(addend);
        requireDistinct(lines, "addend");
        if (overlaps(target, lines)) {
            throw std::invalid_argument("adder target overlaps its addend");
        }
        if (overlaps(lines, ctx)) {
            // The ripple adder borrows the addend lines, which a controlling
            // line must never be; fall back to controlled increments.
            for (std::size_t i = 0; i < n; ++i) {
                increment(circuit, ctx.with(lines[i]), slice(target, i, n - i));
            }
            return;
        }
        modularAdder(circuit, ctx, lines, target);
    }

    void buildSubAssign(Circuit& circuit, const ControlContext& ctx, const Lines& target, const Operand& subtrahend) {
        emitReversed(circuit, [&](Circuit& scratch) { buildAddAssign(scratch, ctx, target, subtrahend); });
    }

    void buildIncrement(Circuit& circuit, const ControlContext& ctx, const Lines& target) {
        requireTargetOutsideContext(target, ctx);
        increment(circuit, ctx, target);
    }

    void buildDecrement(Circuit& circuit, const ControlContext& ctx, const Lines& target) {
        emitReversed(circuit, [&](Circuit& scratch) { buildIncrement(scratch, ctx, target); });
    }

    void buildInvert(Circuit& circuit, const ControlContext& ctx, const Lines& target) {
        requireTargetOutsideContext(target, ctx);
        for (const auto line: target) {
            emit(circuit, ctx, Gate::inverter(line));
        }
    }

    void buildSwap(Circuit& circuit, const ControlContext& ctx, const Lines& a, const Lines& b) {
        requireWidth(static_cast<unsigned>(a.size()), static_cast<unsigned>(b.size()));
        Lines all = a;
        all.insert(all.end(), b.begin(), b.end());
        requireTargetOutsideContext(all, ctx);
        for (std::size_t i = 0; i < a.size(); ++i) {
            emit(circuit, ctx, Gate::mcf({}, a[i], b[i]));
        }
    }

    std::size_t binaryHelperLines(BinaryOp op, const Operand& left, const Operand& right) {
        const bool leftConst  = std::holds_alternative<Const>(left);
        const bool rightConst = std::holds_alternative<Const>(right);
        if ((leftConst && rightConst) || !isComparison(op)) {
            return 0U;
        }
        const unsigned w = width(left);
        if (op == BinaryOp::Equals || op == BinaryOp::NotEquals) {
            if (leftConst || rightConst || w == 1U) {
                return 0U;
            }
            return overlaps(std::get<Lines>(left), std::get<Lines>(right)) ? w : 0U;
        }
        // Relations copy one operand when it is a constant or shares lines
        // with the other.
        if (leftConst || rightConst) {
            return w;
        }
        return overlaps(std::get<Lines>(left), std::get<Lines>(right)) ? w : 0U;
    }

    void buildBinaryOnto(Circuit& circuit, const ControlContext& ctx, BinaryOp op, const Operand& left, const Operand& right, const Lines& result, LineAllocator& allocator) {
        if (op == BinaryOp::Add || op == BinaryOp::Subtract) {
            throw std::invalid_argument("arithmetic operators are built in place, not onto a result");
        }
        requireTargetOutsideContext(result, ctx);
        requireWidth(width(left), width(right));
        const unsigned resultWidth = producesSingleBit(op) ? 1U : width(left);
        requireWidth(resultWidth, static_cast<unsigned>(result.size()));
        for (const auto* operand: {&left, &right}) {
            if (const auto* lines = std::get_if<Lines>(operand); lines != nullptr && overlaps(*lines, result)) {
                throw std::invalid_argument("result lines overlap an operand");
            }
        }

        if (std::holds_alternative<Const>(left) && std::holds_alternative<Const>(right)) {
            const auto value = applyBinary(op, std::get<Const>(left).value, std::get<Const>(right).value, width(left));
            buildXorAssign(circuit, ctx, result, Const{value, resultWidth});
            return;
        }

        switch (op) {
            case BinaryOp::BitwiseAnd:
            case BinaryOp::BitwiseOr:
            case BinaryOp::Exor:
            case BinaryOp::LogicalAnd:
            case BinaryOp::LogicalOr: {
                const auto bitOp = op == BinaryOp::LogicalAnd ? BinaryOp::BitwiseAnd : op == BinaryOp::LogicalOr ? BinaryOp::BitwiseOr :
                                                                                                                      op;
                bitwise(circuit, ctx, bitOp, left, right, result);
                return;
            }
            case BinaryOp::Equals:
            case BinaryOp::NotEquals: {
                const bool swapSides = std::holds_alternative<Const>(left);
                const auto& l        = std::get<Lines>(swapSides ? right : left);
                const auto& r        = swapSides ? left : right;
                if (overlaps(l, ctx.controls)) {
                    throw std::invalid_argument("comparison operands overlap the control context");
                }
                if (const auto* rl = std::get_if<Lines>(&r); rl != nullptr && l.size() == 1U) {
                    // 1-bit operands: result ^= a ^ b, negated for equality.
                    emit(circuit, ctx, Gate::cnot(l[0], result[0]));
                    emit(circuit, ctx, Gate::cnot((*rl)[0], result[0]));
                    if (op == BinaryOp::Equals) {
                        emit(circuit, ctx, Gate::inverter(result[0]));
                    }
                    return;
                }
                if (std::holds_alternative<Lines>(r)) {
                    const auto staged = stage(circuit, r, l, allocator);
                    equals(circuit, ctx, l, staged.lines, result[0]);
                    unstage(circuit, staged, allocator);
                } else {
                    equals(circuit, ctx, l, r, result[0]);
                }
                if (op == BinaryOp::NotEquals) {
                    emit(circuit, ctx, Gate::inverter(result[0]));
                }
                return;
            }
            case BinaryOp::LessThan:
            case BinaryOp::GreaterThan:
            case BinaryOp::LessEquals:
            case BinaryOp::GreaterEquals: {
                // l < r directly; l > r as r < l; <= and >= as negations.
                const bool  flip   = op == BinaryOp::GreaterThan || op == BinaryOp::LessEquals;
                const auto& first  = flip ? right : left;
                const auto& second = flip ? left : right;
                for (const auto* operand: {&first, &second}) {
                    if (const auto* lines = std::get_if<Lines>(operand); lines != nullptr && overlaps(*lines, ctx.controls)) {
                        throw std::invalid_argument("comparison operands overlap the control context");
                    }
                }
                // Stage whichever side is a constant or shares lines with the other.
                Staged stagedFirst;
                Staged stagedSecond;
                if (std::holds_alternative<Const>(first)) {
                    stagedFirst  = stage(circuit, first, {}, allocator);
                    stagedSecond = stage(circuit, second, stagedFirst.lines, allocator);
                } else {
                    stagedSecond = stage(circuit, second, std::get<Lines>(first), allocator);
                    stagedFirst  = stage(circuit, first, stagedSecond.lines, allocator);
                }
                lessThan(circuit, ctx, stagedFirst.lines, stagedSecond.lines, result[0]);
                unstage(circuit, std::holds_alternative<Const>(first) ? stagedSecond : stagedFirst, allocator);
                unstage(circuit, std::holds_alternative<Const>(first) ? stagedFirst : stagedSecond, allocator);
                if (op == BinaryOp::LessEquals || op == BinaryOp::GreaterEquals) {
                    emit(circuit, ctx, Gate::inverter(result[0]));
                }
                return;
            }
            default:
                throw std::invalid_argument("unsupported operator '" + std::string(toString(op)) + "'");
        }
    }
} // namespace syrec
