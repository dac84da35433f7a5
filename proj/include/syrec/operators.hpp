/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <optional>
#include <string_view>

namespace syrec {
    enum class BinaryOp {
        Add,
        Subtract,
        Exor,
        BitwiseAnd,
        BitwiseOr,
        LessThan,
        GreaterThan,
        Equals,
        NotEquals,
        LessEquals,
        GreaterEquals,
        LogicalAnd,
        LogicalOr
    };

    enum class ShiftOp { Left, Right };
    enum class UnaryOp { Invert, Increment, Decrement };
    enum class AssignOp { Exor, Add, Subtract };

    [[nodiscard]] constexpr bool isArithmetic(BinaryOp op) noexcept {
        return op == BinaryOp::Add || op == BinaryOp::Subtract || op == BinaryOp::Exor;
    }

    [[nodiscard]] constexpr bool isBitwise(BinaryOp op) noexcept {
        return op == BinaryOp::BitwiseAnd || op == BinaryOp::BitwiseOr;
    }

    [[nodiscard]] constexpr bool isLogical(BinaryOp op) noexcept {
        return op == BinaryOp::LogicalAnd || op == BinaryOp::LogicalOr;
    }

    /// Relational operators yield a single bit.
    [[nodiscard]] constexpr bool isComparison(BinaryOp op) noexcept {
        switch (op) {
            case BinaryOp::LessThan:
            case BinaryOp::GreaterThan:
            case BinaryOp::Equals:
            case BinaryOp::NotEquals:
            case BinaryOp::LessEquals:
            case BinaryOp::GreaterEquals:
                return true;
            default:
                return false;
        }
    }

    [[nodiscard]] constexpr bool producesSingleBit(BinaryOp op) noexcept {
        return isComparison(op) || isLogical(op);
    }

    [[nodiscard]] constexpr std::string_view toString(BinaryOp op) noexcept {
        switch (op) {
            case BinaryOp::Add:
                return "+";
            case BinaryOp::Subtract:
                return "-";
            case BinaryOp::Exor:
                return "^";
            case BinaryOp::BitwiseAnd:
                return "&";
            case BinaryOp::BitwiseOr:
                return "|";
            case BinaryOp::LessThan:
                return "<";
            case BinaryOp::GreaterThan:
                return ">";
            case BinaryOp::Equals:
                return "=";
            case BinaryOp::NotEquals:
                return "!=";
            case BinaryOp::LessEquals:
                return "<=";
            case BinaryOp::GreaterEquals:
                return ">=";
            case BinaryOp::LogicalAnd:
                return "&&";
            case BinaryOp::LogicalOr:
                return "||";
        }
        return "?";
    }

    [[nodiscard]] constexpr std::string_view toString(ShiftOp op) noexcept {
        return op == ShiftOp::Left ? "<<" : ">>";
    }

    [[nodiscard]] constexpr std::string_view toString(UnaryOp op) noexcept {
        switch (op) {
            case UnaryOp::Invert:
                return "~=";
            case UnaryOp::Increment:
                return "++=";
            case UnaryOp::Decrement:
                return "--=";
        }
        return "?";
    }

    [[nodiscard]] constexpr std::string_view toString(AssignOp op) noexcept {
        switch (op) {
            case AssignOp::Exor:
                return "^=";
            case AssignOp::Add:
                return "+=";
            case AssignOp::Subtract:
                return "-=";
        }
        return "?";
    }
} // namespace syrec
