/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/circuit.hpp"

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syrec {
    /// Bit i is the value of line i. Used for circuits wider than 64 lines.
    using BitVector = boost::dynamic_bitset<>;

    /// Largest line count for which whole truth tables are enumerated.
    inline constexpr std::size_t MAX_ENUMERATION_LINES = 20;

    [[nodiscard]] std::uint64_t applyGate(std::uint64_t word, const Gate& gate);
    [[nodiscard]] BitVector     applyGate(BitVector word, const Gate& gate);

    /// Simulates the circuit on one input word (requires at most 64 lines).
    [[nodiscard]] std::uint64_t run(const Circuit& circuit, std::uint64_t word);
    /// Simulates the circuit on an arbitrary-width input.
    [[nodiscard]] BitVector run(const Circuit& circuit, const BitVector& word);

    /// Output word for every input word 0 .. 2^n-1 (n <= 20).
    [[nodiscard]] std::vector<std::uint64_t> permutation(const Circuit& circuit);

    struct ReversibilityReport {
        bool reversible = true;
        /// Two distinct inputs mapped to the same output, if any.
        std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
    };

    [[nodiscard]] ReversibilityReport checkReversible(const Circuit& circuit);

    /// `input_bits -> output_bits` per input word in ascending order, most
    /// significant line first (line 0 is the rightmost character).
    [[nodiscard]] std::string truthTable(const Circuit& circuit);
} // namespace syrec
