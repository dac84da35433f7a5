/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/simulator.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace syrec {
    namespace {
        // Gate lowered to masks for the word-level fast path.
        struct CompiledGate {
            std::uint64_t controlMask = 0;
            std::uint64_t first       = 0;
            std::uint64_t second      = 0;
            bool          isSwap      = false;
        };

        CompiledGate compile(const Gate& gate) {
            CompiledGate compiled;
            for (const auto control: gate.controls) {
                compiled.controlMask |= std::uint64_t{1} << control;
            }
            compiled.first = std::uint64_t{1} << gate.targets.at(0);
            if (gate.kind == GateKind::Mcf) {
                compiled.isSwap = true;
                compiled.second = std::uint64_t{1} << gate.targets.at(1);
            }
            return compiled;
        }

        std::uint64_t apply(std::uint64_t word, const CompiledGate& gate) {
            if ((word & gate.controlMask) != gate.controlMask) {
                return word;
            }
            if (!gate.isSwap) {
                return word ^ gate.first;
            }
            if (((word & gate.first) != 0U) != ((word & gate.second) != 0U)) {
                return word ^ gate.first ^ gate.second;
            }
            return word;
        }

        std::vector<CompiledGate> compileAll(const Circuit& circuit) {
            if (circuit.numLines() > 64U) {
                throw std::invalid_argument("word-level simulation supports at most 64 lines, circuit has " + std::to_string(circuit.numLines()));
            }
            std::vector<CompiledGate> compiled;
            compiled.reserve(circuit.gates().size());
            for (const auto& gate: circuit.gates()) {
                compiled.push_back(compile(gate));
            }
            return compiled;
        }

        void requireEnumerable(const Circuit& circuit) {
            if (circuit.numLines() > MAX_ENUMERATION_LINES) {
                throw std::invalid_argument("cannot enumerate " + std::to_string(circuit.numLines()) + " lines; the limit is " + std::to_string(MAX_ENUMERATION_LINES));
            }
        }

        std::string bits(std::uint64_t word, std::size_t width) {
            std::string text(width, '0');
            for (std::size_t i = 0; i < width; ++i) {
                if (((word >> i) & 1U) != 0U) {
                    text[width - 1U - i] = '1';
                }
            }
            return text;
        }
    } // namespace

    std::uint64_t applyGate(std::uint64_t word, const Gate& gate) {
        return apply(word, compile(gate));
    }

    BitVector applyGate(BitVector word, const Gate& gate) {
        for (const auto control: gate.controls) {
            if (!word.test(control)) {
                return word;
            }
        }
        if (gate.kind == GateKind::Mct) {
            word.flip(gate.targets.at(0));
        } else {
            const bool first = word.test(gate.targets.at(0));
            word.set(gate.targets.at(0), word.test(gate.targets.at(1)));
            word.set(gate.targets.at(1), first);
        }
        return word;
    }

    std::uint64_t run(const Circuit& circuit, std::uint64_t word) {
        for (const auto& gate: compileAll(circuit)) {
            word = apply(word, gate);
        }
        return word;
    }

    BitVector run(const Circuit& circuit, const BitVector& word) {
        if (word.size() != circuit.numLines()) {
            throw std::invalid_argument("input has " + std::to_string(word.size()) + " bits but the circuit has " + std::to_string(circuit.numLines()) + " lines");
        }
        BitVector state = word;
        for (const auto& gate: circuit.gates()) {
            state = applyGate(std::move(state), gate);
        }
        return state;
    }

    std::vector<std::uint64_t> permutation(const Circuit& circuit) {
        requireEnumerable(circuit);
        const auto                 gates = compileAll(circuit);
        const std::uint64_t        size  = std::uint64_t{1} << circuit.numLines();
        std::vector<std::uint64_t> image(size);
        for (std::uint64_t input = 0; input < size; ++input) {
            std::uint64_t word = input;
            for (const auto& gate: gates) {
                word = apply(word, gate);
            }
            image[input] = word;
        }
        return image;
    }

    ReversibilityReport checkReversible(const Circuit& circuit) {
        const auto                 image = permutation(circuit);
        std::vector<std::uint64_t> preimage(image.size(), image.size());
        for (std::uint64_t input = 0; input < image.size(); ++input) {
            const auto output = image[input];
            if (output >= image.size()) {
                return {false, std::make_pair(input, input)};
            }
            if (preimage[output] != image.size()) {
                return {false, std::make_pair(preimage[output], input)};
            }
            preimage[output] = input;
        }
        return {};
    }

    std::string truthTable(const Circuit& circuit) {
        const auto         image = permutation(circuit);
        std::ostringstream os;
        for (std::uint64_t input = 0; input < image.size(); ++input) {
            os << bits(input, circuit.numLines()) << " -> " << bits(image[input], circuit.numLines()) << '\n';
        }
        return os.str();
    }
} // namespace syrec
