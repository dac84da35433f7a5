/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/ast.hpp"
#include "syrec/diagnostic.hpp"

#include <optional>
#include <string_view>

namespace syrec {
    struct ParseResult {
        std::optional<Program> program;
        Diagnostics            diagnostics;

        [[nodiscard]] bool ok() const { return program.has_value() && !hasErrors(diagnostics); }
    };

    /// Parses SyReC source text. Syntax errors are reported with their
    /// location; after an error the parser resynchronises at the next
    /// `module` keyword so that several broken modules are all reported.
    [[nodiscard]] ParseResult parse(std::string_view source);
} // namespace syrec
