/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/stats_json.hpp"

namespace syrec {
    nlohmann::ordered_json statsToJson(const CircuitStats& stats, std::string_view mode, std::string_view programName) {
        nlohmann::ordered_json json;
        json["program"]     = programName;
        json["mode"]        = mode;
        json["lines"]       = stats.lineCount;
        json["constants"]   = stats.constantLineCount;
        json["garbage"]     = stats.garbageCount;
        json["gates"]       = stats.gateCount;
        json["quantumCost"] = stats.quantumCost;
        return json;
    }

    std::string emitStats(const CircuitStats& stats, std::string_view mode, std::string_view programName) {
        return statsToJson(stats, mode, programName).dump();
    }
} // namespace syrec
