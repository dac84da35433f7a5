/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/circuit.hpp"

#include <json.hpp>
#include <string>
#include <string_view>

namespace syrec {
    /// {program, mode, lines, constants, garbage, gates, quantumCost} in this order.
    [[nodiscard]] nlohmann::ordered_json statsToJson(const CircuitStats& stats, std::string_view mode, std::string_view programName);
    [[nodiscard]] std::string            emitStats(const CircuitStats& stats, std::string_view mode, std::string_view programName);
} // namespace syrec
