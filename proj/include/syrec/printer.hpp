/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/ast.hpp"

#include <string>

namespace syrec {
    // Canonical source form. Binary expressions are always parenthesised so
    // that printing and re-parsing yields a structurally equal tree.
    [[nodiscard]] std::string prettyPrint(const Program& program);
    [[nodiscard]] std::string toString(const Number& number);
    [[nodiscard]] std::string toString(const SignalAccess& access);
    [[nodiscard]] std::string toString(const Expression& expression);
    /// Single-line rendering, nested bodies are joined with "; ".
    [[nodiscard]] std::string toString(const Statement& statement);
} // namespace syrec
