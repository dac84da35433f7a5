/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/circuit.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syrec {
    /// Raised by parseReal; the message starts with "line N: ".
    class RealParseError: public std::runtime_error {
    public:
        RealParseError(std::size_t line, const std::string& message):
            std::runtime_error("line " + std::to_string(line) + ": " + message), lineNumber(line) {}

        [[nodiscard]] std::size_t line() const { return lineNumber; }

    private:
        std::size_t lineNumber;
    };

    /// Textual view of a `.real` file: every name is a sanitized token.
    struct RealDocument {
        std::string                        version = "2.0";
        std::vector<std::string>           variables;
        std::vector<std::string>           inputs;
        std::vector<std::string>           outputs;
        std::string                        constants;
        std::string                        garbage;
        std::vector<std::string>           gates;
        /// token -> original name, written as `# map token=original`.
        std::map<std::string, std::string> originals;

        [[nodiscard]] bool operator==(const RealDocument&) const = default;
    };

    /// Replaces every character outside [A-Za-z0-9_] by '_'.
    [[nodiscard]] std::string sanitizeLabel(std::string_view label);

    [[nodiscard]] RealDocument toRealDocument(const Circuit& circuit);
    [[nodiscard]] std::string  renderReal(const RealDocument& document);
    [[nodiscard]] RealDocument parseRealDocument(std::string_view text);
    [[nodiscard]] Circuit      fromRealDocument(const RealDocument& document);

    /// Serializes to RevLib `.real` (version 2.0); output is deterministic.
    [[nodiscard]] std::string emitReal(const Circuit& circuit);
    /// Inverse of emitReal. Throws RealParseError.
    [[nodiscard]] Circuit parseReal(std::string_view text);
} // namespace syrec
