/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/operators.hpp"

#include <cstdint>

namespace syrec {
    [[nodiscard]] constexpr std::uint64_t widthMask(unsigned width) noexcept {
        return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1U;
    }

    /// Value semantics of the binary operators on `width`-bit unsigned
    /// operands. Arithmetic wraps modulo 2^width, relations yield 0 or 1.
    [[nodiscard]] constexpr std::uint64_t applyBinary(BinaryOp op, std::uint64_t lhs, std::uint64_t rhs, unsigned width) noexcept {
        const std::uint64_t mask = widthMask(width);
        lhs &= mask;
        rhs &= mask;
        switch (op) {
            case BinaryOp::Add:
                return (lhs + rhs) & mask;
            case BinaryOp::Subtract:
                return (lhs - rhs) & mask;
            case BinaryOp::Exor:
                return lhs ^ rhs;
            case BinaryOp::BitwiseAnd:
                return lhs & rhs;
            case BinaryOp::BitwiseOr:
                return lhs | rhs;
            case BinaryOp::LessThan:
                return lhs < rhs ? 1U : 0U;
            case BinaryOp::GreaterThan:
                return lhs > rhs ? 1U : 0U;
            case BinaryOp::Equals:
                return lhs == rhs ? 1U : 0U;
            case BinaryOp::NotEquals:
                return lhs != rhs ? 1U : 0U;
            case BinaryOp::LessEquals:
                return lhs <= rhs ? 1U : 0U;
            case BinaryOp::GreaterEquals:
                return lhs >= rhs ? 1U : 0U;
            case BinaryOp::LogicalAnd:
                return (lhs != 0U && rhs != 0U) ? 1U : 0U;
            case BinaryOp::LogicalOr:
                return (lhs != 0U || rhs != 0U) ? 1U : 0U;
        }
        return 0U;
    }

    /// Logical shift with zero fill; amounts >= width give 0.
    [[nodiscard]] constexpr std::uint64_t applyShift(ShiftOp op, std::uint64_t value, std::uint64_t amount, unsigned width) noexcept {
        const std::uint64_t mask = widthMask(width);
        if (amount >= width) {
            return 0U;
        }
        value &= mask;
        return (op == ShiftOp::Left ? value << amount : value >> amount) & mask;
    }
} // namespace syrec
