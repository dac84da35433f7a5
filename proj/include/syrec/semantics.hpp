/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/ast.hpp"
#include "syrec/diagnostic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syrec {
    /// Signals are simulated on 64-bit words, so wider declarations are rejected.
    inline constexpr unsigned MAX_SIGNAL_WIDTH = 64;

    struct AnalyzeSettings {
        /// Width of signals declared without an explicit `(n)`.
        unsigned defaultWidth = 32;
    };

    struct ElabSettings {
        /// Upper bound on the total number of loop iterations unrolled per module.
        std::size_t maxUnroll = 4096;
    };

    /// A program that passed static checking. Every declaration carries an
    /// explicit width.
    struct CheckedProgram {
        Program  program;
        unsigned defaultWidth = 32;
    };

    /// Loop-free program: statements are Skip, Swap, Unary, Assign, IfElse,
    /// Call and Uncall only; all numbers are literals, constant
    /// sub-expressions are folded and every expression node carries its width.
    struct ElaboratedProgram {
        Program     program;
        std::string entry;

        [[nodiscard]] const ModuleDecl& entryModule() const { return *program.findModule(entry); }
        [[nodiscard]] bool operator==(const ElaboratedProgram&) const = default;
    };

    struct AnalysisResult {
        std::optional<CheckedProgram> program;
        Diagnostics                   diagnostics;
        [[nodiscard]] bool ok() const { return program.has_value(); }
    };

    struct ElaborationResult {
        std::optional<ElaboratedProgram> program;
        Diagnostics                      diagnostics;
        [[nodiscard]] bool ok() const { return program.has_value(); }
    };

    /// Resolves names, infers and checks widths, and verifies the
    /// reversibility restrictions. All violations are reported. Checks that
    /// depend on loop-variable values are completed during elaboration.
    [[nodiscard]] AnalysisResult analyze(const Program& program, const AnalyzeSettings& settings = {});

    [[nodiscard]] ElaborationResult elaborate(const CheckedProgram& program, const ElabSettings& settings = {});

    struct FrontendSettings {
        AnalyzeSettings analyze;
        ElabSettings    elab;
    };

    /// parse, analyze and elaborate in one go.
    [[nodiscard]] ElaborationResult compile(std::string_view source, const FrontendSettings& settings = {});

    // ---------------------------------------------------------------------
    // Helpers shared by the back ends

    /// Bit positions selected by an elaborated access, least significant first.
    [[nodiscard]] std::vector<unsigned> selectedBits(const SignalAccess& access, unsigned signalWidth);

    /// Width of a declared signal of `module` (parameters first, then locals).
    [[nodiscard]] std::optional<unsigned> declaredWidth(const ModuleDecl& module, std::string_view signal);

    /// Bits of named signals read by an elaborated expression.
    struct SignalBit {
        std::string name;
        unsigned    bit = 0;
        [[nodiscard]] auto operator<=>(const SignalBit&) const = default;
    };
    [[nodiscard]] std::vector<SignalBit> bitsRead(const Expression& expression, const ModuleDecl& module);
} // namespace syrec
