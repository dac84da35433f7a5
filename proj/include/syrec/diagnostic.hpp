/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace syrec {
    struct SourceLocation {
        unsigned line   = 1;
        unsigned column = 1;

        [[nodiscard]] bool operator==(const SourceLocation&) const = default;
    };

    /// Half-open region of the source text. Spans never take part in structural
    /// comparison of syntax trees, see the operator below.
    struct SourceSpan {
        SourceLocation begin;
        SourceLocation end;
    };

    // Locations are metadata: two trees that differ only in where they were
    // parsed from compare equal.
    [[nodiscard]] constexpr bool operator==(const SourceSpan& /*lhs*/, const SourceSpan& /*rhs*/) noexcept {
        return true;
    }

    enum class Severity { Error, Warning };

    struct Diagnostic {
        Severity    severity = Severity::Error;
        std::string message;
        SourceSpan  span;
    };

    using Diagnostics = std::vector<Diagnostic>;

    [[nodiscard]] inline bool hasErrors(const Diagnostics& diagnostics) {
        return std::any_of(diagnostics.cbegin(), diagnostics.cend(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
    }

    [[nodiscard]] inline Diagnostic makeError(std::string message, SourceSpan span = {}) {
        return Diagnostic{Severity::Error, std::move(message), span};
    }

    [[nodiscard]] inline Diagnostic makeWarning(std::string message, SourceSpan span = {}) {
        return Diagnostic{Severity::Warning, std::move(message), span};
    }

    [[nodiscard]] inline const char* toString(Severity severity) {
        return severity == Severity::Error ? "error" : "warning";
    }

    /// Formats as `file:line:col: error: message`.
    inline void printDiagnostic(std::ostream& os, const std::string& file, const Diagnostic& diagnostic) {
        os << file << ':' << diagnostic.span.begin.line << ':' << diagnostic.span.begin.column << ": " << toString(diagnostic.severity) << ": " << diagnostic.message << '\n';
    }
} // namespace syrec
