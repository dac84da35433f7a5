/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/driver.hpp"

#include "syrec/arith.hpp"

#include <algorithm>
#include <charconv>

namespace syrec {
    FrontendSettings frontendSettings(const PipelineOptions& options) {
        FrontendSettings settings;
        settings.analyze.defaultWidth = options.defaultWidth;
        return settings;
    }

    std::optional<std::uint64_t> parseUnsigned(std::string_view text) {
        int base = 10;
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            base = 16;
            text.remove_prefix(2);
        } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
            base = 2;
            text.remove_prefix(2);
        }
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            return std::nullopt;
        }
        return value;
    }

    Diagnostics checkInputs(const ElaboratedProgram& program, const SignalState& inputs) {
        Diagnostics diagnostics;
        const auto  expected = primaryInputs(program.entryModule());
        for (const auto& [name, value]: inputs) {
            const auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& input) { return input.first == name; });
            if (it == expected.end()) {
                diagnostics.push_back(makeError("'" + name + "' is not an input of module '" + program.entry + "'"));
            } else if ((value & ~widthMask(it->second)) != 0U) {
                diagnostics.push_back(makeError("value " + std::to_string(value) + " of input " + name + " does not fit into " + std::to_string(it->second) + " bits"));
            }
        }
        for (const auto& [name, width]: expected) {
            if (!inputs.contains(name)) {
                diagnostics.push_back(makeError("unassigned input " + name));
            }
        }
        return diagnostics;
    }

    std::vector<std::pair<std::string, std::uint64_t>> orderedOutputs(const SignalBinding& binding, const SignalState& values) {
        std::vector<std::pair<std::string, std::uint64_t>> outputs;
        for (const auto& signal: binding.signals) {
            if (const auto it = values.find(signal.name); signal.isOutput && it != values.end()) {
                outputs.emplace_back(signal.name, it->second);
            }
        }
        return outputs;
    }
} // namespace syrec
