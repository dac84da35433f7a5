/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/circuit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace syrec {
    namespace {
        // Controls form a set: a line listed twice conditions the gate once.
        void normalise(std::vector<LineIndex>& controls) {
            std::sort(controls.begin(), controls.end());
            controls.erase(std::unique(controls.begin(), controls.end()), controls.end());
        }

        std::uint64_t saturatingAdd(std::uint64_t a, std::uint64_t b) {
            return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
        }
    } // namespace

    Gate Gate::mct(std::vector<LineIndex> controls, LineIndex target) {
        normalise(controls);
        return Gate{GateKind::Mct, std::move(controls), {target}};
    }

    Gate Gate::mcf(std::vector<LineIndex> controls, LineIndex first, LineIndex second) {
        normalise(controls);
        return Gate{GateKind::Mcf, std::move(controls), {first, second}};
    }

    Gate Gate::withControls(const std::vector<LineIndex>& extra) const {
        Gate gate = *this;
        gate.controls.insert(gate.controls.end(), extra.begin(), extra.end());
        normalise(gate.controls);
        return gate;
    }

    void validateGate(const Gate& gate, std::size_t numLines) {
        const std::size_t expectedTargets = gate.kind == GateKind::Mct ? 1U : 2U;
        if (gate.targets.size() != expectedTargets) {
            throw std::invalid_argument(std::string(gate.kind == GateKind::Mct ? "MCT" : "MCF") + " gate needs exactly " + std::to_string(expectedTargets) + " target(s)");
        }
        if (!std::is_sorted(gate.controls.begin(), gate.controls.end()) || std::adjacent_find(gate.controls.begin(), gate.controls.end()) != gate.controls.end()) {
            throw std::invalid_argument("controls must be sorted and unique");
        }
        if (gate.kind == GateKind::Mcf && gate.targets[0] == gate.targets[1]) {
            throw std::invalid_argument("swap targets must differ");
        }
        for (const auto target: gate.targets) {
            if (std::binary_search(gate.controls.begin(), gate.controls.end(), target)) {
                throw std::invalid_argument("control equals target");
            }
        }
        const auto outOfRange = [&](LineIndex index) { return index >= numLines; };
        if (std::any_of(gate.controls.begin(), gate.controls.end(), outOfRange) || std::any_of(gate.targets.begin(), gate.targets.end(), outOfRange)) {
            throw std::invalid_argument("line index out of range for a circuit with " + std::to_string(numLines) + " lines");
        }
    }

    LineIndex Circuit::addLine(Line line) {
        lineList.push_back(std::move(line));
        return static_cast<LineIndex>(lineList.size() - 1U);
    }

    void Circuit::appendGate(Gate gate) {
        validateGate(gate, lineList.size());
        gateList.push_back(std::move(gate));
    }

    void Circuit::append(const std::vector<Gate>& gates) {
        for (const auto& gate: gates) {
            appendGate(gate);
        }
    }

    std::vector<Gate> Circuit::takeGatesFrom(std::size_t first) {
        if (first > gateList.size()) {
            throw std::out_of_range("gate position " + std::to_string(first) + " beyond the end of the circuit");
        }
        std::vector<Gate> tail(gateList.begin() + static_cast<std::ptrdiff_t>(first), gateList.end());
        gateList.resize(first);
        return tail;
    }

    void Circuit::append(const Circuit& other) {
        append(other.gates());
    }

    std::vector<Gate> reverseGates(const std::vector<Gate>& gates) {
        return {gates.rbegin(), gates.rend()};
    }

    Circuit reverseCircuit(const Circuit& circuit) {
        Circuit reversed(circuit.lines());
        for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
            reversed.appendGate(*it);
        }
        return reversed;
    }

    std::uint64_t defaultMctCost(std::size_t controls) {
        if (controls <= 1U) {
            return 1U;
        }
        if (controls == 2U) {
            return 5U;
        }
        if (controls + 1U >= 64U) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        return (std::uint64_t{1} << (controls + 1U)) - 3U;
    }

    std::uint64_t defaultMcfCost(std::size_t controls) {
        return saturatingAdd(2U, defaultMctCost(controls + 1U));
    }

    CostModel CostModel::quantumCost() {
        return CostModel{defaultMctCost, defaultMcfCost};
    }

    std::uint64_t CostModel::cost(const Gate& gate) const {
        return gate.kind == GateKind::Mct ? mctCost(gate.controls.size()) : mcfCost(gate.controls.size());
    }

    CircuitStats statistics(const Circuit& circuit, const CostModel& model) {
        CircuitStats stats;
        stats.lineCount = circuit.numLines();
        for (const auto& line: circuit.lines()) {
            stats.constantLineCount += line.isConstant ? 1U : 0U;
            stats.garbageCount += line.isGarbage ? 1U : 0U;
        }
        stats.gateCount = circuit.gates().size();
        for (const auto& gate: circuit.gates()) {
            stats.quantumCost = saturatingAdd(stats.quantumCost, model.cost(gate));
        }
        return stats;
    }
} // namespace syrec
