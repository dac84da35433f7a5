/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/real_format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace syrec {
    namespace {
        /// Placeholder names for lines without an input/output name.
        constexpr std::string_view NO_INPUT       = "0";
        constexpr std::string_view NO_OUTPUT      = "0";
        constexpr std::string_view GARBAGE_OUTPUT = "g";

        bool isPlaceholder(std::string_view token) {
            return token == NO_INPUT || token == GARBAGE_OUTPUT;
        }

        /// Assigns unique sanitized tokens to original names.
        class Namer {
        public:
            /// Token for line `index`; distinct lines always get distinct tokens.
            std::string variable(const std::string& label) {
                auto token = fresh(label);
                if (!byOriginal.contains(label)) {
                    byOriginal.emplace(label, token);
                }
                return token;
            }

            /// Token for an input/output name; reuses the variable token of an
            /// equally named line.
            std::string name(const std::string& original) {
                if (const auto it = byOriginal.find(original); it != byOriginal.end()) {
                    return it->second;
                }
                auto token = fresh(original);
                byOriginal.emplace(original, token);
                return token;
            }

            [[nodiscard]] const std::map<std::string, std::string>& originals() const { return tokenToOriginal; }

        private:
            std::set<std::string>              used;
            std::map<std::string, std::string> byOriginal;
            std::map<std::string, std::string> tokenToOriginal;

            std::string fresh(const std::string& original) {
                const auto base  = sanitizeLabel(original);
                auto       token = base;
                for (std::size_t k = 1; used.contains(token) || isPlaceholder(token); ++k) {
                    token = base + "_" + std::to_string(k);
                }
                used.insert(token);
                if (token != original) {
                    tokenToOriginal.emplace(token, original);
                }
                return token;
            }
        };

        std::vector<std::string> splitWords(std::string_view text) {
            std::vector<std::string> words;
            std::istringstream       stream{std::string(text)};
            std::string              word;
            while (stream >> word) {
                words.push_back(word);
            }
            return words;
        }

        std::string_view trim(std::string_view text) {
            const auto first = text.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) {
                return {};
            }
            const auto last = text.find_last_not_of(" \t\r");
            return text.substr(first, last - first + 1);
        }

        /// Decodes one gate line; throws std::invalid_argument with the reason.
        Gate decodeGate(std::string_view text, const std::map<std::string, LineIndex, std::less<>>& index) {
            const auto words    = splitWords(text);
            const auto mnemonic = words.front();
            const char family   = mnemonic.front();
            std::size_t arity   = 0;
            const auto* digits  = mnemonic.data() + 1;
            const auto [ptr, ec] = std::from_chars(digits, mnemonic.data() + mnemonic.size(), arity);
            if ((family != 't' && family != 'f') || mnemonic.size() < 2 || ec != std::errc{} || ptr != mnemonic.data() + mnemonic.size()) {
                throw std::invalid_argument("unknown gate mnemonic '" + mnemonic + "'");
            }
            const std::size_t targets = family == 't' ? 1 : 2;
            if (arity < targets) {
                throw std::invalid_argument("gate '" + mnemonic + "' needs at least " + std::to_string(targets) + " lines");
            }
            if (words.size() - 1 != arity) {
                throw std::invalid_argument("gate '" + mnemonic + "' expects " + std::to_string(arity) + " lines, got " + std::to_string(words.size() - 1));
            }
            std::vector<LineIndex> lines;
            for (std::size_t k = 1; k < words.size(); ++k) {
                const auto it = index.find(words[k]);
                if (it == index.end()) {
                    throw std::invalid_argument("label mismatch: gate uses undeclared line '" + words[k] + "'");
                }
                if (std::find(lines.begin(), lines.end(), it->second) != lines.end()) {
                    throw std::invalid_argument("duplicate line in gate: '" + words[k] + "'");
                }
                lines.push_back(it->second);
            }
            const std::vector<LineIndex> controls(lines.begin(), lines.end() - static_cast<std::ptrdiff_t>(targets));
            return family == 't' ? Gate::mct(controls, lines.back()) : Gate::mcf(controls, lines[lines.size() - 2], lines.back());
        }

        std::map<std::string, LineIndex, std::less<>> variableIndex(const std::vector<std::string>& variables) {
            std::map<std::string, LineIndex, std::less<>> index;
            for (std::size_t i = 0; i < variables.size(); ++i) {
                index.emplace(variables[i], static_cast<LineIndex>(i));
            }
            return index;
        }

        std::string joined(const std::vector<std::string>& words) {
            std::string text;
            for (const auto& word: words) {
                text += ' ';
                text += word;
            }
            return text;
        }
    } // namespace

    std::string sanitizeLabel(std::string_view label) {
        std::string result(label);
        for (auto& c: result) {
            const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
            if (!keep) {
                c = '_';
            }
        }
        return result;
    }

    RealDocument toRealDocument(const Circuit& circuit) {
        RealDocument document;
        Namer        namer;
        for (const auto& line: circuit.lines()) {
            if (line.label.empty()) {
                throw std::invalid_argument("cannot serialize a line with an empty label");
            }
            document.variables.push_back(namer.variable(line.label));
        }
        for (const auto& line: circuit.lines()) {
            document.inputs.push_back(line.inputName ? namer.name(*line.inputName) : std::string(NO_INPUT));
            if (line.outputName) {
                document.outputs.push_back(namer.name(*line.outputName));
            } else {
                document.outputs.emplace_back(line.isGarbage ? GARBAGE_OUTPUT : NO_OUTPUT);
            }
            document.constants += line.isConstant ? '0' : '-';
            document.garbage += line.isGarbage ? '1' : '-';
        }
        for (const auto& gate: circuit.gates()) {
            const bool  fredkin = gate.kind == GateKind::Mcf;
            std::string text    = (fredkin ? "f" : "t") + std::to_string(gate.controls.size() + gate.targets.size());
            for (const auto control: gate.controls) {
                text += ' ' + document.variables[control];
            }
            for (const auto target: gate.targets) {
                text += ' ' + document.variables[target];
            }
            document.gates.push_back(std::move(text));
        }
        document.originals = namer.originals();
        return document;
    }

    std::string renderReal(const RealDocument& document) {
        std::string text = ".version " + document.version + "\n";
        for (const auto& [token, original]: document.originals) {
            text += "# map " + token + "=" + original + "\n";
        }
        text += ".numvars " + std::to_string(document.variables.size()) + "\n";
        text += ".variables" + joined(document.variables) + "\n";
        text += ".inputs" + joined(document.inputs) + "\n";
        text += ".outputs" + joined(document.outputs) + "\n";
        text += ".constants " + document.constants + "\n";
        text += ".garbage " + document.garbage + "\n";
        text += ".begin\n";
        for (const auto& gate: document.gates) {
            text += gate + "\n";
        }
        text += ".end\n";
        return text;
    }

    RealDocument parseRealDocument(std::string_view text) {
        RealDocument               document;
        std::optional<std::size_t> numvars;
        std::map<std::string, LineIndex, std::less<>> gateIndex;
        bool                       inGates     = false;
        bool                       ended       = false;
        std::set<std::string>      seen;
        std::size_t                lineNumber = 0;

        const auto requireCount = [&](const std::vector<std::string>& names, std::string_view directive) {
            if (!numvars) {
                throw RealParseError(lineNumber, "malformed header: " + std::string(directive) + " before .numvars");
            }
            if (names.size() != *numvars) {
                throw RealParseError(lineNumber, "label mismatch: " + std::string(directive) + " lists " + std::to_string(names.size()) + " names but .numvars is " + std::to_string(*numvars));
            }
        };
        const auto requireOnce = [&](std::string_view directive) {
            if (!seen.insert(std::string(directive)).second) {
                throw RealParseError(lineNumber, "malformed header: duplicate " + std::string(directive));
            }
        };

        std::size_t position = 0;
        while (position <= text.size()) {
            const auto end  = std::min(text.find('\n', position), text.size());
            const auto line = trim(text.substr(position, end - position));
            position        = end + 1;
            ++lineNumber;
            if (line.empty()) {
                if (end == text.size()) {
                    break;
                }
                continue;
            }
            if (line.front() == '#') {
                constexpr std::string_view MAP_PREFIX = "# map ";
                if (line.starts_with(MAP_PREFIX)) {
                    const auto entry = line.substr(MAP_PREFIX.size());
                    const auto equal = entry.find('=');
                    if (equal == std::string_view::npos || equal == 0 || equal + 1 == entry.size()) {
                        throw RealParseError(lineNumber, "malformed map comment");
                    }
                    document.originals[std::string(entry.substr(0, equal))] = std::string(entry.substr(equal + 1));
                }
                continue;
            }
            if (ended) {
                throw RealParseError(lineNumber, "unexpected content after .end");
            }
            auto words = splitWords(line);
            if (inGates) {
                if (words.front() == ".end") {
                    if (words.size() != 1) {
                        throw RealParseError(lineNumber, "malformed .end");
                    }
                    inGates = false;
                    ended   = true;
                    continue;
                }
                if (words.front().front() == '.') {
                    throw RealParseError(lineNumber, "unexpected directive " + words.front() + " inside the gate section");
                }
                try {
                    static_cast<void>(decodeGate(line, gateIndex));
                } catch (const std::invalid_argument& error) {
                    throw RealParseError(lineNumber, error.what());
                }
                document.gates.push_back(joined(words).substr(1));
                continue;
            }
            const auto& directive = words.front();
            const std::vector<std::string> arguments(words.begin() + 1, words.end());
            if (directive == ".version") {
                requireOnce(directive);
                if (arguments.size() != 1) {
                    throw RealParseError(lineNumber, "malformed header: .version expects one argument");
                }
                document.version = arguments.front();
            } else if (directive == ".numvars") {
                requireOnce(directive);
                std::size_t value = 0;
                if (arguments.size() != 1) {
                    throw RealParseError(lineNumber, "malformed header: .numvars expects one argument");
                }
                const auto& digits = arguments.front();
                const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
                if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                    throw RealParseError(lineNumber, "malformed header: .numvars expects a number, got '" + digits + "'");
                }
                numvars = value;
            } else if (directive == ".variables") {
                requireOnce(directive);
                requireCount(arguments, directive);
                std::set<std::string> unique;
                for (const auto& name: arguments) {
                    if (!unique.insert(name).second) {
                        throw RealParseError(lineNumber, "label mismatch: variable '" + name + "' declared twice");
                    }
                }
                document.variables = arguments;
            } else if (directive == ".inputs" || directive == ".outputs") {
                requireOnce(directive);
                requireCount(arguments, directive);
                (directive == ".inputs" ? document.inputs : document.outputs) = arguments;
            } else if (directive == ".constants" || directive == ".garbage") {
                requireOnce(directive);
                const bool constants = directive == ".constants";
                const auto value     = arguments.empty() ? std::string{} : arguments.front();
                if (arguments.size() > 1) {
                    throw RealParseError(lineNumber, "malformed header: " + directive + " expects one string");
                }
                if (!numvars) {
                    throw RealParseError(lineNumber, "malformed header: " + directive + " before .numvars");
                }
                if (value.size() != *numvars) {
                    throw RealParseError(lineNumber, "label mismatch: " + directive + " has length " + std::to_string(value.size()) + " but .numvars is " + std::to_string(*numvars));
                }
                const char mark = constants ? '0' : '1';
                if (std::any_of(value.begin(), value.end(), [&](char c) { return c != mark && c != '-'; })) {
                    throw RealParseError(lineNumber, "malformed header: " + directive + " may only contain '" + std::string(1, mark) + "' and '-'");
                }
                (constants ? document.constants : document.garbage) = value;
            } else if (directive == ".begin") {
                if (words.size() != 1) {
                    throw RealParseError(lineNumber, "malformed .begin");
                }
                requireOnce(directive);
                for (const auto* required: {".numvars", ".variables"}) {
                    if (!seen.contains(required)) {
                        throw RealParseError(lineNumber, std::string("malformed header: missing ") + required);
                    }
                }
                gateIndex = variableIndex(document.variables);
                inGates   = true;
            } else if (directive == ".module" || directive == ".inputbus" || directive == ".outputbus" || directive == ".state" || directive == ".define") {
                throw RealParseError(lineNumber, "unsupported directive " + directive);
            } else if (directive.front() == '.') {
                throw RealParseError(lineNumber, "unknown directive " + directive);
            } else {
                throw RealParseError(lineNumber, "gate outside the gate section");
            }
            if (end == text.size()) {
                break;
            }
        }
        if (inGates) {
            throw RealParseError(lineNumber, "unterminated gate section");
        }
        if (!ended) {
            throw RealParseError(lineNumber, "missing .begin/.end gate section");
        }
        const auto n = *numvars;
        if (document.inputs.empty() && n > 0) {
            document.inputs = document.variables;
        }
        if (document.outputs.empty() && n > 0) {
            document.outputs = document.variables;
        }
        if (document.constants.empty()) {
            document.constants.assign(n, '-');
        }
        if (document.garbage.empty()) {
            document.garbage.assign(n, '-');
        }
        return document;
    }

    Circuit fromRealDocument(const RealDocument& document) {
        const auto original = [&](const std::string& token) {
            const auto it = document.originals.find(token);
            return it == document.originals.end() ? token : it->second;
        };
        if (document.inputs.size() != document.variables.size() || document.outputs.size() != document.variables.size() || document.constants.size() != document.variables.size() || document.garbage.size() != document.variables.size()) {
            throw std::invalid_argument("label mismatch: header lists disagree on the number of lines");
        }
        Circuit circuit;
        for (std::size_t i = 0; i < document.variables.size(); ++i) {
            Line line;
            line.label      = original(document.variables[i]);
            line.isConstant = document.constants[i] == '0';
            line.isGarbage  = document.garbage[i] == '1';
            if (document.inputs[i] != NO_INPUT) {
                line.inputName = original(document.inputs[i]);
            }
            if (document.outputs[i] != NO_OUTPUT && document.outputs[i] != GARBAGE_OUTPUT) {
                line.outputName = original(document.outputs[i]);
            }
            circuit.addLine(std::move(line));
        }
        const auto index = variableIndex(document.variables);
        for (const auto& gate: document.gates) {
            circuit.appendGate(decodeGate(gate, index));
        }
        return circuit;
    }

    std::string emitReal(const Circuit& circuit) {
        return renderReal(toRealDocument(circuit));
    }

    Circuit parseReal(std::string_view text) {
        return fromRealDocument(parseRealDocument(text));
    }
} // namespace syrec
