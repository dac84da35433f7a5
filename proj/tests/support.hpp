/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/interpreter.hpp"
#include "syrec/printer.hpp"
#include "syrec/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace syrec::test {
    inline std::string readFile(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw std::runtime_error("cannot open " + path.string());
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    inline std::vector<std::filesystem::path> corpusFiles() {
        std::vector<std::filesystem::path> files;
        for (const auto& entry: std::filesystem::directory_iterator(SYREC_CORPUS_DIR)) {
            if (entry.path().extension() == ".syrec") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        return files;
    }

    inline std::string corpusSource(const std::string& name) {
        return readFile(std::filesystem::path(SYREC_CORPUS_DIR) / (name + ".syrec"));
    }

    inline std::string describe(const Diagnostics& diagnostics) {
        std::string text;
        for (const auto& diagnostic: diagnostics) {
            text += diagnostic.message + "\n";
        }
        return text;
    }

    inline ElaboratedProgram compileOrThrow(const std::string& source) {
        auto result = compile(source);
        if (!result.ok()) {
            throw std::runtime_error("compilation failed:\n" + describe(result.diagnostics));
        }
        return *result.program;
    }

    inline unsigned totalWidth(const std::vector<std::pair<std::string, unsigned>>& signals) {
        unsigned total = 0;
        for (const auto& [name, width]: signals) {
            total += width;
        }
        return total;
    }

    /// Splits `word` over the signals, first signal in the lowest bits.
    inline SignalState unpack(const std::vector<std::pair<std::string, unsigned>>& signals, std::uint64_t word) {
        SignalState state;
        unsigned    offset = 0;
        for (const auto& [name, width]: signals) {
            state[name] = (word >> offset) & ((std::uint64_t{1} << width) - 1U);
            offset += width;
        }
        return state;
    }

    /// Calls `visit` with every assignment of the primary inputs when they
    /// have at most `exhaustiveBits` bits in total, otherwise with `samples`
    /// random assignments drawn from a fixed seed.
    inline void forEachInput(const ModuleDecl& module, const std::function<void(const SignalState&)>& visit, unsigned exhaustiveBits = 10, std::size_t samples = 1000) {
        const auto inputs = primaryInputs(module);
        const auto bits   = totalWidth(inputs);
        if (bits <= exhaustiveBits) {
            for (std::uint64_t word = 0; word < (std::uint64_t{1} << bits); ++word) {
                visit(unpack(inputs, word));
            }
            return;
        }
        std::mt19937_64 rng(42);
        for (std::size_t i = 0; i < samples; ++i) {
            SignalState state;
            for (const auto& [name, width]: inputs) {
                state[name] = rng() & (width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1U);
            }
            visit(state);
        }
    }
    /// True when `module` or any module it calls declares local signals.
    inline bool usesLocals(const Program& program, const ModuleDecl& module) {
        if (!module.locals.empty()) {
            return true;
        }
        std::function<bool(const StatementList&)> scan = [&](const StatementList& body) {
            return std::any_of(body.begin(), body.end(), [&](const Statement& statement) {
                if (const auto* call = std::get_if<CallStmt>(&statement.node)) {
                    return usesLocals(program, *program.findModule(call->module));
                }
                if (const auto* branch = std::get_if<IfStmt>(&statement.node)) {
                    return scan(branch->thenBody) || scan(branch->elseBody);
                }
                return false;
            });
        };
        return scan(module.body);
    }

    /// `program` extended by an entry module that runs
    /// `call m(...); uncall m(...)` on fresh inout signals shaped like the
    /// parameters of `m`. The original entry module is renamed if needed.
    inline ElaboratedProgram callUncallProgram(const ElaboratedProgram& program, const ModuleDecl& m) {
        Program copy = program.program;
        const std::string renamed = "main_original";
        std::function<void(StatementList&)> rename = [&](StatementList& body) {
            for (auto& statement: body) {
                if (auto* call = std::get_if<CallStmt>(&statement.node); call != nullptr && call->module == "main") {
                    call->module = renamed;
                } else if (auto* branch = std::get_if<IfStmt>(&statement.node)) {
                    rename(branch->thenBody);
                    rename(branch->elseBody);
                }
            }
        };
        for (auto& module: copy.modules) {
            if (module.name == "main") {
                module.name = renamed;
            }
            rename(module.body);
        }
        const auto  callee = m.name == "main" ? renamed : m.name;
        std::string params;
        std::string arguments;
        for (const auto& param: m.params) {
            params += (params.empty() ? "" : ", ") + std::string("inout p_") + param.name + "(" + std::to_string(*param.width) + ")";
            arguments += (arguments.empty() ? "" : ", ") + std::string("p_") + param.name;
        }
        const auto source = prettyPrint(copy) + "\nmodule main(" + params + ")\n    call " + callee + "(" + arguments + ");\n    uncall " + callee + "(" + arguments + ")\n";
        return compileOrThrow(source);
    }
} // namespace syrec::test
