/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace syrec {
    using LineIndex = std::uint32_t;

    enum class GateKind { Mct, Mcf };

    /// Multiple-controlled Toffoli (one target) or Fredkin (two targets)
    /// gate with positive controls. Controls are kept sorted and unique.
    struct Gate {
        GateKind               kind = GateKind::Mct;
        std::vector<LineIndex> controls;
        std::vector<LineIndex> targets;

        [[nodiscard]] static Gate mct(std::vector<LineIndex> controls, LineIndex target);
        [[nodiscard]] static Gate mcf(std::vector<LineIndex> controls, LineIndex first, LineIndex second);
        [[nodiscard]] static Gate inverter(LineIndex target) { return mct({}, target); }
        [[nodiscard]] static Gate cnot(LineIndex control, LineIndex target) { return mct({control}, target); }
        [[nodiscard]] static Gate toffoli(LineIndex c1, LineIndex c2, LineIndex target) { return mct({c1, c2}, target); }

        /// Copy of this gate with the extra controls added (set union).
        [[nodiscard]] Gate withControls(const std::vector<LineIndex>& extra) const;

        [[nodiscard]] bool operator==(const Gate&) const = default;
    };

    struct Line {
        std::string                label;
        /// Ancilla introduced by synthesis; always starts at 0.
        bool                       isConstant = false;
        /// The final value carries no meaning for the program's outputs.
        bool                       isGarbage = false;
        std::optional<std::string> inputName{};
        std::optional<std::string> outputName{};

        [[nodiscard]] bool operator==(const Line&) const = default;
    };

    class Circuit {
    public:
        Circuit() = default;
        explicit Circuit(std::vector<Line> lines):
            lineList(std::move(lines)) {}

        LineIndex addLine(Line line);

        /// Validates and appends; never touches earlier gates. Throws
        /// std::invalid_argument for malformed gates.
        void appendGate(Gate gate);
        /// Appends all gates of `other`, which must not use more lines.
        void append(const Circuit& other);
        void append(const std::vector<Gate>& gates);
        /// Removes and returns the gates from position `first` on. Used by
        /// synthesis to replace a freshly emitted segment by its reverse.
        [[nodiscard]] std::vector<Gate> takeGatesFrom(std::size_t first);

        [[nodiscard]] std::size_t numLines() const { return lineList.size(); }
        [[nodiscard]] const std::vector<Line>& lines() const { return lineList; }
        [[nodiscard]] std::vector<Line>&       lines() { return lineList; }
        [[nodiscard]] const Line&              line(LineIndex index) const { return lineList.at(index); }
        [[nodiscard]] Line&                    line(LineIndex index) { return lineList.at(index); }
        [[nodiscard]] const std::vector<Gate>& gates() const { return gateList; }

        [[nodiscard]] bool operator==(const Circuit&) const = default;

    private:
        std::vector<Line> lineList;
        std::vector<Gate> gateList;
    };

    /// Throws std::invalid_argument unless `gate` is well formed over
    /// `numLines` lines.
    void validateGate(const Gate& gate, std::size_t numLines);

    /// Same lines, gates in reverse order (every gate is self-inverse).
    [[nodiscard]] Circuit reverseCircuit(const Circuit& circuit);
    [[nodiscard]] std::vector<Gate> reverseGates(const std::vector<Gate>& gates);

    struct CostModel {
        std::function<std::uint64_t(std::size_t)> mctCost;
        std::function<std::uint64_t(std::size_t)> mcfCost;

        /// Quantum cost table: 1 for up to one control, 5 for Toffoli,
        /// 2^(c+1)-3 beyond; Fredkin costs 2 + mct(c+1).
        [[nodiscard]] static CostModel quantumCost();
        [[nodiscard]] std::uint64_t cost(const Gate& gate) const;
    };

    [[nodiscard]] std::uint64_t defaultMctCost(std::size_t controls);
    [[nodiscard]] std::uint64_t defaultMcfCost(std::size_t controls);

    struct CircuitStats {
        std::size_t   lineCount         = 0;
        std::size_t   constantLineCount = 0;
        std::size_t   garbageCount      = 0;
        std::size_t   gateCount         = 0;
        std::uint64_t quantumCost       = 0;

        [[nodiscard]] bool operator==(const CircuitStats&) const = default;
    };

    [[nodiscard]] CircuitStats statistics(const Circuit& circuit, const CostModel& model = CostModel::quantumCost());
} // namespace syrec
