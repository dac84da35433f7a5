/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/semantics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syrec {
    /// Values of named signals; every value fits into the signal's width.
    using SignalState = std::map<std::string, std::uint64_t, std::less<>>;

    /// Raised when execution reaches a state that a reversible program can
    /// never be in (fi mismatch) or when the caller omits a required input.
    class InterpreterError: public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    struct InterpOptions {
        bool trace = false;
    };

    struct InterpResult {
        /// Final values of all parameters and locals of the entry module.
        SignalState finalState;
        /// Executed primitive statements, innermost first for inlined calls.
        std::optional<std::vector<std::string>> trace;
    };

    /// Builds the initial state of the entry module: `in`/`inout` parameters
    /// and `state` locals are taken from `inputs` (missing ones are an
    /// error), `out` parameters and `wire` locals start at zero.
    [[nodiscard]] SignalState initialState(const ElaboratedProgram& program, const SignalState& inputs);

    /// Runs the entry module on the given primary inputs.
    [[nodiscard]] InterpResult interpret(const ElaboratedProgram& program, const SignalState& inputs, const InterpOptions& options = {});

    /// Runs `body` in the context of `module` on an arbitrary complete state
    /// (every parameter and local present); `state` is updated in place.
    void execute(const ElaboratedProgram& program, const ModuleDecl& module, const StatementList& body, SignalState& state, std::vector<std::string>* trace = nullptr);

    /// Reversed statement list with every statement replaced by its inverse.
    /// Only loop-free statement lists are accepted.
    [[nodiscard]] StatementList invertStatements(const StatementList& body);

    /// Evaluates an elaborated expression of `module` on `state`.
    [[nodiscard]] std::uint64_t evaluate(const Expression& expression, const ModuleDecl& module, const SignalState& state);

    /// Primary input signals of the entry module in declaration order
    /// (`in`/`inout` parameters followed by `state` locals) with their widths.
    [[nodiscard]] std::vector<std::pair<std::string, unsigned>> primaryInputs(const ModuleDecl& module);
} // namespace syrec
