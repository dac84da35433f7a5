/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/diagnostic.hpp"
#include "syrec/interpreter.hpp"
#include "syrec/semantics.hpp"
#include "syrec/synthesis.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syrec {
    /// Shared by the command line tool and the HTTP service so that both
    /// produce identical artifacts for identical requests.
    struct PipelineOptions {
        SynthesisMode mode         = SynthesisMode::CostAware;
        unsigned      defaultWidth = 32;
    };

    [[nodiscard]] FrontendSettings frontendSettings(const PipelineOptions& options);

    /// Decimal, `0x` hexadecimal or `0b` binary unsigned 64-bit number.
    [[nodiscard]] std::optional<std::uint64_t> parseUnsigned(std::string_view text);

    /// Reports unknown names, missing primary inputs and values that do not
    /// fit their signal. The entry module's primary inputs must all be set.
    [[nodiscard]] Diagnostics checkInputs(const ElaboratedProgram& program, const SignalState& inputs);

    /// Output signals of a simulation in declaration order.
    [[nodiscard]] std::vector<std::pair<std::string, std::uint64_t>> orderedOutputs(const SignalBinding& binding, const SignalState& values);
} // namespace syrec
