/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/circuit.hpp"
#include "syrec/gate_library.hpp"
#include "syrec/interpreter.hpp"
#include "syrec/semantics.hpp"
#include "syrec/simulator.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syrec {
    enum class SynthesisMode {
        /// Fresh constant lines for every intermediate result.
        CostAware,
        /// Compute in place, apply, then undo the computation.
        LineAware
    };

    [[nodiscard]] std::string_view             toString(SynthesisMode mode);
    [[nodiscard]] std::optional<SynthesisMode> parseSynthesisMode(std::string_view text);

    struct SynthesisSettings {
        std::size_t maxLines = 4096;
    };

    class SynthesisError: public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    /// One signal of the entry module and the lines holding it.
    struct BoundSignal {
        std::string name;
        Lines       lines; ///< least significant bit first
        bool        isInput  = false; ///< in, inout, state
        bool        isOutput = false; ///< out, inout, state

        [[nodiscard]] bool operator==(const BoundSignal&) const = default;
    };

    struct SignalBinding {
        std::vector<BoundSignal> signals;
        /// Ancilla lines that were borrowed and returned clean.
        std::size_t helperLines = 0;

        [[nodiscard]] const BoundSignal* find(std::string_view name) const;
        [[nodiscard]] bool operator==(const SignalBinding&) const = default;
    };

    struct SynthesisResult {
        Circuit       circuit;
        SignalBinding binding;
        CircuitStats  stats;
    };

    /// Lowers the entry module of `program`. Throws SynthesisError when the
    /// line budget is exceeded.
    [[nodiscard]] SynthesisResult synthesize(const ElaboratedProgram& program, SynthesisMode mode, const SynthesisSettings& settings = {});

    /// Input word: every primary input placed on its lines, all other lines 0.
    [[nodiscard]] BitVector     embedInputs(const SignalBinding& binding, const SignalState& inputs, std::size_t lineCount);
    [[nodiscard]] std::uint64_t embedInputsWord(const SignalBinding& binding, const SignalState& inputs, std::size_t lineCount);

    /// Values of the output signals read from a final word.
    [[nodiscard]] SignalState extractOutputs(const SignalBinding& binding, const BitVector& word);
    [[nodiscard]] SignalState extractOutputs(const SignalBinding& binding, std::uint64_t word);
    /// Values of every bound signal, inputs included.
    [[nodiscard]] SignalState extractSignals(const SignalBinding& binding, const BitVector& word);

    /// embed, run and extract in one step.
    [[nodiscard]] SignalState simulate(const SynthesisResult& result, const SignalState& inputs);
} // namespace syrec
