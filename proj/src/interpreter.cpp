/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/interpreter.hpp"

#include "syrec/arith.hpp"
#include "syrec/overloaded.hpp"
#include "syrec/printer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace syrec {
    namespace {
        unsigned widthOf(const ModuleDecl& module, const std::string& name) {
            const auto width = declaredWidth(module, name);
            if (!width) {
                throw std::invalid_argument("unknown signal '" + name + "' in module '" + module.name + "'");
            }
            return *width;
        }

        std::uint64_t& slot(SignalState& state, const std::string& name) {
            const auto it = state.find(name);
            if (it == state.end()) {
                throw std::invalid_argument("signal '" + name + "' missing from state");
            }
            return it->second;
        }

        std::uint64_t readAccess(const SignalAccess& access, const ModuleDecl& module, const SignalState& state) {
            const auto it = state.find(access.name);
            if (it == state.end()) {
                throw std::invalid_argument("signal '" + access.name + "' missing from state");
            }
            const auto    bits  = selectedBits(access, widthOf(module, access.name));
            std::uint64_t value = 0;
            for (std::size_t k = 0; k < bits.size(); ++k) {
                value |= ((it->second >> bits[k]) & 1U) << k;
            }
            return value;
        }

        void writeAccess(const SignalAccess& access, const ModuleDecl& module, SignalState& state, std::uint64_t value) {
            auto&      word = slot(state, access.name);
            const auto bits = selectedBits(access, widthOf(module, access.name));
            for (std::size_t k = 0; k < bits.size(); ++k) {
                const std::uint64_t mask = std::uint64_t{1} << bits[k];
                word                     = ((value >> k) & 1U) != 0U ? (word | mask) : (word & ~mask);
            }
        }

        class Executor {
        public:
            Executor(const ElaboratedProgram& program, std::vector<std::string>* trace):
                program(program), trace(trace) {}

            void run(const ModuleDecl& module, const StatementList& body, SignalState& state) {
                for (const auto& statement: body) {
                    step(module, statement, state);
                }
            }

        private:
            const ElaboratedProgram&  program;
            std::vector<std::string>* trace;

            void record(const Statement& statement) {
                if (trace != nullptr) {
                    trace->push_back(toString(statement));
                }
            }

            void step(const ModuleDecl& module, const Statement& statement, SignalState& state) {
                std::visit(Overloaded{
                                   [&](const SkipStmt&) { record(statement); },
                                   [&](const SwapStmt& s) {
                                       record(statement);
                                       const auto lhs = readAccess(s.lhs, module, state);
                                       const auto rhs = readAccess(s.rhs, module, state);
                                       writeAccess(s.lhs, module, state, rhs);
                                       writeAccess(s.rhs, module, state, lhs);
                                   },
                                   [&](const UnaryStmt& s) {
                                       record(statement);
                                       const auto width = static_cast<unsigned>(selectedBits(s.target, widthOf(module, s.target.name)).size());
                                       const auto value = readAccess(s.target, module, state);
                                       std::uint64_t result = 0;
                                       switch (s.op) {
                                           case UnaryOp::Invert:
                                               result = ~value;
                                               break;
                                           case UnaryOp::Increment:
                                               result = value + 1U;
                                               break;
                                           case UnaryOp::Decrement:
                                               result = value - 1U;
                                               break;
                                       }
                                       writeAccess(s.target, module, state, result & widthMask(width));
                                   },
                                   [&](const AssignStmt& s) {
                                       record(statement);
                                       const auto width = static_cast<unsigned>(selectedBits(s.lhs, widthOf(module, s.lhs.name)).size());
                                       const auto rhs   = evaluate(s.rhs, module, state);
                                       const auto lhs   = readAccess(s.lhs, module, state);
                                       std::uint64_t result = 0;
                                       switch (s.op) {
                                           case AssignOp::Exor:
                                               result = lhs ^ rhs;
                                               break;
                                           case AssignOp::Add:
                                               result = lhs + rhs;
                                               break;
                                           case AssignOp::Subtract:
                                               result = lhs - rhs;
                                               break;
                                       }
                                       writeAccess(s.lhs, module, state, result & widthMask(width));
                                   },
                                   [&](const IfStmt& s) {
                                       const auto condition = evaluate(s.condition, module, state) & 1U;
                                       run(module, condition != 0U ? s.thenBody : s.elseBody, state);
                                       const auto fi = evaluate(s.fiCondition, module, state) & 1U;
                                       if (fi != condition) {
                                           throw InterpreterError("fi condition " + toString(s.fiCondition) + " evaluated to " + std::to_string(fi) + " but the if condition was " + std::to_string(condition));
                                       }
                                   },
                                   [&](const ForStmt&) {
                                       throw std::invalid_argument("loops must be unrolled before execution");
                                   },
                                   [&](const CallStmt& s) {
                                       record(statement);
                                       const auto* callee = program.program.findModule(s.module);
                                       if (callee == nullptr) {
                                           throw std::invalid_argument("unknown module '" + s.module + "'");
                                       }
                                       // Arguments are pairwise distinct, so copy-in/copy-out is
                                       // equivalent to passing by reference.
                                       SignalState inner;
                                       for (std::size_t i = 0; i < callee->params.size(); ++i) {
                                           inner[callee->params[i].name] = slot(state, s.arguments[i]);
                                       }
                                       for (const auto& local: callee->locals) {
                                           inner[local.name] = 0;
                                       }
                                       run(*callee, s.uncall ? invertStatements(callee->body) : callee->body, inner);
                                       for (std::size_t i = 0; i < callee->params.size(); ++i) {
                                           slot(state, s.arguments[i]) = inner[callee->params[i].name];
                                       }
                                   },
                           },
                           statement.node);
            }
        };

        Statement invertStatement(const Statement& statement) {
            return std::visit(Overloaded{
                                      [&](const SkipStmt&) { return statement; },
                                      [&](const SwapStmt&) { return statement; },
                                      [&](const UnaryStmt& s) {
                                          UnaryStmt inverse = s;
                                          if (s.op == UnaryOp::Increment) {
                                              inverse.op = UnaryOp::Decrement;
                                          } else if (s.op == UnaryOp::Decrement) {
                                              inverse.op = UnaryOp::Increment;
                                          }
                                          return Statement{inverse, statement.span};
                                      },
                                      [&](const AssignStmt& s) {
                                          AssignStmt inverse = s;
                                          if (s.op == AssignOp::Add) {
                                              inverse.op = AssignOp::Subtract;
                                          } else if (s.op == AssignOp::Subtract) {
                                              inverse.op = AssignOp::Add;
                                          }
                                          return Statement{inverse, statement.span};
                                      },
                                      [&](const IfStmt& s) {
                                          IfStmt inverse;
                                          inverse.condition   = s.fiCondition;
                                          inverse.fiCondition = s.condition;
                                          inverse.thenBody    = invertStatements(s.thenBody);
                                          inverse.elseBody    = invertStatements(s.elseBody);
                                          return Statement{std::move(inverse), statement.span};
                                      },
                                      [&](const ForStmt&) -> Statement {
                                          throw std::invalid_argument("loops must be unrolled before inversion");
                                      },
                                      [&](const CallStmt& s) {
                                          CallStmt inverse = s;
                                          inverse.uncall   = !s.uncall;
                                          return Statement{inverse, statement.span};
                                      },
                              },
                              statement.node);
        }
    } // namespace

    std::uint64_t evaluate(const Expression& expression, const ModuleDecl& module, const SignalState& state) {
        return std::visit(Overloaded{
                                  [&](const ConstantExpr& e) { return e.value.literal() & widthMask(expression.width); },
                                  [&](const SignalExpr& e) { return readAccess(e.access, module, state); },
                                  [&](const BinaryExpr& e) {
                                      const auto lhs   = evaluate(*e.lhs, module, state);
                                      const auto rhs   = evaluate(*e.rhs, module, state);
                                      const auto width = std::max(e.lhs->width, e.rhs->width);
                                      return applyBinary(e.op, lhs, rhs, width);
                                  },
                                  [&](const ShiftExpr& e) { return applyShift(e.op, evaluate(*e.operand, module, state), e.amount.literal(), expression.width); },
                          },
                          expression.node);
    }

    StatementList invertStatements(const StatementList& body) {
        StatementList inverse;
        inverse.reserve(body.size());
        for (auto it = body.rbegin(); it != body.rend(); ++it) {
            inverse.push_back(invertStatement(*it));
        }
        return inverse;
    }

    std::vector<std::pair<std::string, unsigned>> primaryInputs(const ModuleDecl& module) {
        std::vector<std::pair<std::string, unsigned>> inputs;
        for (const auto& param: module.params) {
            if (param.direction != Direction::Out) {
                inputs.emplace_back(param.name, param.width.value_or(1U));
            }
        }
        for (const auto& local: module.locals) {
            if (local.kind == LocalKind::State) {
                inputs.emplace_back(local.name, local.width.value_or(1U));
            }
        }
        return inputs;
    }

    SignalState initialState(const ElaboratedProgram& program, const SignalState& inputs) {
        const auto& module = program.entryModule();
        SignalState state;
        for (const auto& param: module.params) {
            state[param.name] = 0;
        }
        for (const auto& local: module.locals) {
            state[local.name] = 0;
        }
        for (const auto& [name, width]: primaryInputs(module)) {
            const auto it = inputs.find(name);
            if (it == inputs.end()) {
                throw InterpreterError("unassigned input " + name);
            }
            if ((it->second & ~widthMask(width)) != 0U) {
                throw InterpreterError("value " + std::to_string(it->second) + " of input " + name + " does not fit into " + std::to_string(width) + " bits");
            }
            state[name] = it->second;
        }
        return state;
    }

    void execute(const ElaboratedProgram& program, const ModuleDecl& module, const StatementList& body, SignalState& state, std::vector<std::string>* trace) {
        Executor(program, trace).run(module, body, state);
    }

    InterpResult interpret(const ElaboratedProgram& program, const SignalState& inputs, const InterpOptions& options) {
        InterpResult result;
        result.finalState = initialState(program, inputs);
        if (options.trace) {
            result.trace.emplace();
        }
        execute(program, program.entryModule(), program.entryModule().body, result.finalState, result.trace ? &*result.trace : nullptr);
        return result;
    }
} // namespace syrec
