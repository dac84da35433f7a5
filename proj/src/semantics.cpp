/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/semantics.hpp"

#include "syrec/arith.hpp"
#include "syrec/overloaded.hpp"
#include "syrec/parser.hpp"
#include "syrec/printer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace syrec {
    namespace {
        struct SignalInfo {
            unsigned  width    = 1;
            bool      writable = true;
            Direction direction{};
            bool      isParam = false;
        };

        using SignalTable = std::map<std::string, SignalInfo, std::less<>>;

        SignalTable buildSignalTable(const ModuleDecl& module, unsigned defaultWidth) {
            SignalTable table;
            for (const auto& param: module.params) {
                table.try_emplace(param.name, SignalInfo{param.width.value_or(defaultWidth), param.direction != Direction::In, param.direction, true});
            }
            for (const auto& local: module.locals) {
                table.try_emplace(local.name, SignalInfo{local.width.value_or(defaultWidth), true, Direction::Inout, false});
            }
            return table;
        }

        std::string quoted(std::string_view name) {
            return "'" + std::string(name) + "'";
        }

        std::vector<unsigned> bitsBetween(std::uint64_t first, std::uint64_t last) {
            std::vector<unsigned> bits;
            if (first <= last) {
                for (auto i = first; i <= last; ++i) {
                    bits.push_back(static_cast<unsigned>(i));
                }
            } else {
                for (auto i = first + 1; i-- > last;) {
                    bits.push_back(static_cast<unsigned>(i));
                }
            }
            return bits;
        }

        // -----------------------------------------------------------------
        // Static checks. Used twice: by analyze on the source program, where
        // loop-variable values are unknown and the dependent checks are
        // skipped, and by elaborate on the unrolled program, where all
        // numbers are literals and every check applies.

        class Checker {
        public:
            Checker(const Program& program, std::size_t moduleIndex, const SignalTable& signals, Diagnostics& diagnostics):
                program(program), moduleIndex(moduleIndex), module(program.modules[moduleIndex]), signals(signals), diagnostics(diagnostics) {}

            void checkList(const StatementList& statements) {
                for (const auto& statement: statements) {
                    checkStatement(statement);
                }
            }

        private:
            const Program&           program;
            std::size_t              moduleIndex;
            const ModuleDecl&        module;
            const SignalTable&       signals;
            Diagnostics&             diagnostics;
            std::vector<std::string> loopVariables;

            void error(std::string message, const SourceSpan& span) {
                diagnostics.emplace_back(makeError(std::move(message), span));
            }

            // Value of a compile-time number, nullopt when it depends on a loop variable.
            std::optional<std::uint64_t> evaluate(const Number& number, bool report = true) {
                return std::visit(Overloaded{
                                          [](std::uint64_t value) -> std::optional<std::uint64_t> { return value; },
                                          [&](const LoopVariableRef& ref) -> std::optional<std::uint64_t> {
                                              if (std::find(loopVariables.cbegin(), loopVariables.cend(), ref.name) == loopVariables.cend() && report) {
                                                  error("unknown loop variable $" + ref.name, number.span);
                                              }
                                              return std::nullopt;
                                          },
                                          [&](const WidthOfRef& ref) -> std::optional<std::uint64_t> {
                                              const auto it = signals.find(ref.signal);
                                              if (it == signals.end()) {
                                                  if (report) {
                                                      error("unknown signal " + quoted(ref.signal) + " in width query", number.span);
                                                  }
                                                  return std::nullopt;
                                              }
                                              return it->second.width;
                                          },
                                          [&](const NumberBinary& bin) -> std::optional<std::uint64_t> {
                                              const auto lhs = evaluate(*bin.lhs, report);
                                              const auto rhs = evaluate(*bin.rhs, report);
                                              if (!lhs || !rhs) {
                                                  return std::nullopt;
                                              }
                                              if (bin.op == BinaryOp::Subtract) {
                                                  if (*rhs > *lhs) {
                                                      if (report) {
                                                          error("compile-time expression " + toString(number) + " is negative", number.span);
                                                      }
                                                      return std::nullopt;
                                                  }
                                                  return *lhs - *rhs;
                                              }
                                              return *lhs + *rhs;
                                          },
                                  },
                                  number.value);
            }

            struct AccessInfo {
                bool                                 valid = false;
                std::optional<unsigned>              width;
                std::optional<std::vector<unsigned>> bits;
            };

            AccessInfo checkAccess(const SignalAccess& access, bool mustBeWritable, bool report = true) {
                AccessInfo info;
                const auto it = signals.find(access.name);
                if (it == signals.end()) {
                    if (report) {
                        error("unknown signal " + quoted(access.name), access.span);
                    }
                    return info;
                }
                info.valid = true;
                if (mustBeWritable && !it->second.writable && report) {
                    error("signal " + quoted(access.name) + " is an input and cannot be modified", access.span);
                }
                const unsigned width = it->second.width;
                if (!access.first) {
                    info.width = width;
                    info.bits  = bitsBetween(0, width - 1U);
                    return info;
                }
                const auto first = evaluate(*access.first, report);
                std::optional<std::uint64_t> last;
                if (access.last) {
                    last = evaluate(*access.last, report);
                }
                bool inRange = true;
                for (const auto& index: {first, last}) {
                    if (index && *index >= width) {
                        inRange = false;
                        if (report) {
                            error("bit index " + std::to_string(*index) + " out of range for signal " + quoted(access.name) + " of width " + std::to_string(width), access.span);
                        }
                    }
                }
                if (!access.last) {
                    info.width = 1;
                    if (first && inRange) {
                        info.bits = std::vector<unsigned>{static_cast<unsigned>(*first)};
                    }
                    return info;
                }
                if (first && last) {
                    info.width = static_cast<unsigned>((*first > *last ? *first - *last : *last - *first) + 1U);
                    if (inRange) {
                        info.bits = bitsBetween(*first, *last);
                    }
                }
                return info;
            }

            // Width of an expression that does not depend on its context.
            std::optional<unsigned> intrinsicWidth(const Expression& expression) {
                return std::visit(Overloaded{
                                          [](const ConstantExpr&) -> std::optional<unsigned> { return std::nullopt; },
                                          [&](const SignalExpr& e) -> std::optional<unsigned> { return checkAccess(e.access, false, false).width; },
                                          [&](const BinaryExpr& e) -> std::optional<unsigned> {
                                              if (producesSingleBit(e.op)) {
                                                  return 1U;
                                              }
                                              if (auto lhs = intrinsicWidth(*e.lhs)) {
                                                  return lhs;
                                              }
                                              return intrinsicWidth(*e.rhs);
                                          },
                                          [&](const ShiftExpr& e) -> std::optional<unsigned> { return intrinsicWidth(*e.operand); },
                                  },
                                  expression.node);
            }

            std::optional<unsigned> checkExpression(const Expression& expression, std::optional<unsigned> expected) {
                return std::visit(Overloaded{
                                          [&](const ConstantExpr& e) -> std::optional<unsigned> {
                                              evaluate(e.value);
                                              return std::nullopt;
                                          },
                                          [&](const SignalExpr& e) -> std::optional<unsigned> { return checkAccess(e.access, false).width; },
                                          [&](const BinaryExpr& e) -> std::optional<unsigned> {
                                              if (isLogical(e.op)) {
                                                  for (const auto* operand: {&*e.lhs, &*e.rhs}) {
                                                      const auto width = checkExpression(*operand, 1U);
                                                      if (width && *width != 1U) {
                                                          error("operand of '" + std::string(toString(e.op)) + "' must be 1 bit wide, got " + std::to_string(*width), operand->span);
                                                      }
                                                  }
                                                  return 1U;
                                              }
                                              const auto lhsWidth = intrinsicWidth(*e.lhs);
                                              const auto rhsWidth = intrinsicWidth(*e.rhs);
                                              if (lhsWidth && rhsWidth && *lhsWidth != *rhsWidth) {
                                                  error("operand width mismatch " + std::to_string(*lhsWidth) + " vs " + std::to_string(*rhsWidth) + " for '" + std::string(toString(e.op)) + "'", expression.span);
                                              }
                                              std::optional<unsigned> width = lhsWidth ? lhsWidth : rhsWidth;
                                              if (!width && !isComparison(e.op)) {
                                                  width = expected;
                                              }
                                              checkExpression(*e.lhs, width);
                                              checkExpression(*e.rhs, width);
                                              return isComparison(e.op) ? std::optional<unsigned>{1U} : width;
                                          },
                                          [&](const ShiftExpr& e) -> std::optional<unsigned> {
                                              evaluate(e.amount);
                                              return checkExpression(*e.operand, expected);
                                          },
                                  },
                                  expression.node);
            }

            // Signal bits read by an expression, nullopt if some index is not yet known.
            std::optional<std::set<SignalBit>> readBits(const Expression& expression) {
                std::set<SignalBit> bits;
                bool                known = true;
                std::function<void(const Expression&)> visit = [&](const Expression& e) {
                    if (const auto* signal = e.as<SignalExpr>()) {
                        const auto info = checkAccess(signal->access, false, false);
                        if (!info.bits) {
                            known = false;
                            return;
                        }
                        for (const auto bit: *info.bits) {
                            bits.insert(SignalBit{signal->access.name, bit});
                        }
                    } else if (const auto* binary = e.as<BinaryExpr>()) {
                        visit(*binary->lhs);
                        visit(*binary->rhs);
                    } else if (const auto* shift = e.as<ShiftExpr>()) {
                        visit(*shift->operand);
                    }
                };
                visit(expression);
                if (!known) {
                    return std::nullopt;
                }
                return bits;
            }

            static std::set<SignalBit> toSet(const SignalAccess& access, const std::vector<unsigned>& bits) {
                std::set<SignalBit> set;
                for (const auto bit: bits) {
                    set.insert(SignalBit{access.name, bit});
                }
                return set;
            }

            static bool intersects(const std::set<SignalBit>& a, const std::set<SignalBit>& b) {
                return std::any_of(a.cbegin(), a.cend(), [&](const SignalBit& bit) { return b.count(bit) != 0U; });
            }

            void checkStatement(const Statement& statement) {
                std::visit(Overloaded{
                                   [](const SkipStmt&) {},
                                   [&](const SwapStmt& s) {
                                       const auto lhs = checkAccess(s.lhs, true);
                                       const auto rhs = checkAccess(s.rhs, true);
                                       if (lhs.width && rhs.width && *lhs.width != *rhs.width) {
                                           error("swap width mismatch " + std::to_string(*lhs.width) + " vs " + std::to_string(*rhs.width), statement.span);
                                       }
                                       if (lhs.bits && rhs.bits && intersects(toSet(s.lhs, *lhs.bits), toSet(s.rhs, *rhs.bits))) {
                                           error("swap operands overlap", statement.span);
                                       }
                                   },
                                   [&](const UnaryStmt& s) { checkAccess(s.target, true); },
                                   [&](const AssignStmt& s) {
                                       const auto lhs   = checkAccess(s.lhs, true);
                                       const auto width = checkExpression(s.rhs, lhs.width);
                                       if (lhs.width && width && *lhs.width != *width) {
                                           error("assignment width mismatch: target has " + std::to_string(*lhs.width) + " bits, expression has " + std::to_string(*width), statement.span);
                                       }
                                       if (lhs.bits) {
                                           if (const auto reads = readBits(s.rhs); reads && intersects(toSet(s.lhs, *lhs.bits), *reads)) {
                                               error("assignment target read on right-hand side", statement.span);
                                           }
                                       }
                                   },
                                   [&](const IfStmt& s) {
                                       for (const auto* condition: {&s.condition, &s.fiCondition}) {
                                           const auto width = checkExpression(*condition, 1U);
                                           if (width && *width != 1U) {
                                               error("condition must be 1 bit wide, got " + std::to_string(*width), condition->span);
                                           }
                                       }
                                       checkList(s.thenBody);
                                       checkList(s.elseBody);
                                   },
                                   [&](const ForStmt& s) {
                                       if (std::find(loopVariables.cbegin(), loopVariables.cend(), s.variable) != loopVariables.cend()) {
                                           error("loop variable $" + s.variable + " shadows an enclosing loop variable", statement.span);
                                       }
                                       const auto from = evaluate(s.from);
                                       const auto to   = evaluate(s.to);
                                       if (s.step) {
                                           if (const auto step = evaluate(*s.step); step && *step == 0U) {
                                               error("loop step must not be zero", s.step->span);
                                           }
                                       }
                                       if (s.negativeStep && from && to && *from < *to) {
                                           error("negative step requires the start value to exceed the end value", statement.span);
                                       }
                                       loopVariables.push_back(s.variable);
                                       checkList(s.body);
                                       loopVariables.pop_back();
                                   },
                                   [&](const CallStmt& s) { checkCall(s, statement.span); },
                           },
                           statement.node);
            }

            void checkCall(const CallStmt& call, const SourceSpan& span) {
                const ModuleDecl* target = nullptr;
                for (std::size_t i = 0; i < program.modules.size(); ++i) {
                    if (program.modules[i].name == call.module) {
                        if (i >= moduleIndex) {
                            error("module " + quoted(call.module) + " must be declared before it is called (recursion is not allowed)", span);
                            return;
                        }
                        target = &program.modules[i];
                        break;
                    }
                }
                if (target == nullptr) {
                    error("unknown module " + quoted(call.module), span);
                    return;
                }
                if (call.arguments.size() != target->params.size()) {
                    error("module " + quoted(call.module) + " expects " + std::to_string(target->params.size()) + " arguments, got " + std::to_string(call.arguments.size()), span);
                    return;
                }
                std::set<std::string> seen;
                for (std::size_t i = 0; i < call.arguments.size(); ++i) {
                    const auto& argument = call.arguments[i];
                    const auto& formal   = target->params[i];
                    if (!seen.insert(argument).second) {
                        error("argument " + quoted(argument) + " passed more than once", span);
                        continue;
                    }
                    const auto it = signals.find(argument);
                    if (it == signals.end()) {
                        error("unknown signal " + quoted(argument), span);
                        continue;
                    }
                    // callee widths are resolved by the caller of analyze; fall back to argument width otherwise
                    if (formal.width && *formal.width != it->second.width) {
                        error("argument " + quoted(argument) + " has width " + std::to_string(it->second.width) + " but parameter " + quoted(formal.name) + " of " + quoted(call.module) + " has width " + std::to_string(*formal.width), span);
                    }
                    if (formal.direction != Direction::In && !it->second.writable) {
                        error("argument " + quoted(argument) + " is not writable but parameter " + quoted(formal.name) + " is '" + std::string(toString(formal.direction)) + "'", span);
                    }
                }
            }
        };

        void checkDeclarations(const ModuleDecl& module, Diagnostics& diagnostics) {
            std::set<std::string> names;
            const auto            declare = [&](const std::string& name, const std::optional<unsigned>& width, const SourceSpan& span) {
                if (!names.insert(name).second) {
                    diagnostics.emplace_back(makeError("duplicate declaration of signal " + quoted(name) + " in module " + quoted(module.name), span));
                }
                if (width && *width == 0U) {
                    diagnostics.emplace_back(makeError("signal " + quoted(name) + " must be at least 1 bit wide", span));
                }
                if (width && *width > MAX_SIGNAL_WIDTH) {
                    diagnostics.emplace_back(makeError("signal " + quoted(name) + " is wider than " + std::to_string(MAX_SIGNAL_WIDTH) + " bits", span));
                }
            };
            for (const auto& param: module.params) {
                declare(param.name, param.width, param.span);
            }
            for (const auto& local: module.locals) {
                declare(local.name, local.width, local.span);
            }
        }

        // -----------------------------------------------------------------
        // Elaboration

        class Elaborator {
        public:
            Elaborator(const CheckedProgram& checked, const ElabSettings& settings, Diagnostics& diagnostics):
                checked(checked), settings(settings), diagnostics(diagnostics) {}

            std::optional<ElaboratedProgram> run() {
                ElaboratedProgram result;
                const auto*       entry = checked.program.entryModule();
                if (entry == nullptr) {
                    diagnostics.emplace_back(makeError("program contains no modules"));
                    return std::nullopt;
                }
                result.entry = entry->name;
                for (std::size_t i = 0; i < checked.program.modules.size(); ++i) {
                    result.program.modules.emplace_back(elaborateModule(i));
                }
                if (hasErrors(diagnostics)) {
                    return std::nullopt;
                }
                return result;
            }

        private:
            const CheckedProgram&                checked;
            const ElabSettings&                  settings;
            Diagnostics&                         diagnostics;
            SignalTable                          signals;
            std::map<std::string, std::uint64_t> loopValues;
            std::size_t                          unrolled  = 0;
            bool                                 exhausted = false;

            ModuleDecl elaborateModule(std::size_t index) {
                const auto& source = checked.program.modules[index];
                signals            = buildSignalTable(source, checked.defaultWidth);
                loopValues.clear();
                unrolled  = 0;
                exhausted = false;

                ModuleDecl module = source;
                for (auto& param: module.params) {
                    param.width = param.width.value_or(checked.defaultWidth);
                }
                for (auto& local: module.locals) {
                    local.width = local.width.value_or(checked.defaultWidth);
                }
                module.body.clear();
                substituteList(source.body, module.body);
                if (exhausted) {
                    return module;
                }

                // Every number is a literal now, so the checker sees all indices.
                const std::size_t errorsBefore = diagnostics.size();
                Program           view;
                view.modules = checked.program.modules;
                view.modules[index].body = module.body;
                Checker(view, index, signals, diagnostics).checkList(module.body);
                if (hasErrors(Diagnostics(diagnostics.begin() + static_cast<std::ptrdiff_t>(errorsBefore), diagnostics.end()))) {
                    return module;
                }
                annotateList(module.body);
                return module;
            }

            std::uint64_t evaluate(const Number& number) {
                return std::visit(Overloaded{
                                          [](std::uint64_t value) { return value; },
                                          [&](const LoopVariableRef& ref) { return loopValues.at(ref.name); },
                                          [&](const WidthOfRef& ref) { return static_cast<std::uint64_t>(signals.at(ref.signal).width); },
                                          [&](const NumberBinary& bin) {
                                              const auto lhs = evaluate(*bin.lhs);
                                              const auto rhs = evaluate(*bin.rhs);
                                              if (bin.op == BinaryOp::Subtract) {
                                                  if (rhs > lhs) {
                                                      diagnostics.emplace_back(makeError("compile-time expression " + toString(number) + " is negative", number.span));
                                                      return std::uint64_t{0};
                                                  }
                                                  return lhs - rhs;
                                              }
                                              return lhs + rhs;
                                          },
                                  },
                                  number.value);
            }

            Number substitute(const Number& number) {
                return Number{evaluate(number), number.span};
            }

            SignalAccess substitute(const SignalAccess& access) {
                SignalAccess out = access;
                if (access.first) {
                    out.first = substitute(*access.first);
                }
                if (access.last) {
                    out.last = substitute(*access.last);
                }
                return out;
            }

            Expression substitute(const Expression& expression) {
                Expression out = expression;
                std::visit(Overloaded{
                                   [&](ConstantExpr& e) { e.value = substitute(e.value); },
                                   [&](SignalExpr& e) { e.access = substitute(e.access); },
                                   [&](BinaryExpr& e) {
                                       e.lhs = substitute(*e.lhs);
                                       e.rhs = substitute(*e.rhs);
                                   },
                                   [&](ShiftExpr& e) {
                                       e.operand = substitute(*e.operand);
                                       e.amount  = substitute(e.amount);
                                   },
                           },
                           out.node);
                return out;
            }

            void substituteList(const StatementList& statements, StatementList& out) {
                for (const auto& statement: statements) {
                    if (exhausted) {
                        return;
                    }
                    substituteStatement(statement, out);
                }
            }

            void substituteStatement(const Statement& statement, StatementList& out) {
                std::visit(Overloaded{
                                   [&](const SkipStmt&) { out.push_back(statement); },
                                   [&](const SwapStmt& s) { out.push_back(Statement{SwapStmt{substitute(s.lhs), substitute(s.rhs)}, statement.span}); },
                                   [&](const UnaryStmt& s) { out.push_back(Statement{UnaryStmt{s.op, substitute(s.target)}, statement.span}); },
                                   [&](const AssignStmt& s) { out.push_back(Statement{AssignStmt{s.op, substitute(s.lhs), substitute(s.rhs)}, statement.span}); },
                                   [&](const IfStmt& s) {
                                       IfStmt stmt;
                                       stmt.condition   = substitute(s.condition);
                                       stmt.fiCondition = substitute(s.fiCondition);
                                       substituteList(s.thenBody, stmt.thenBody);
                                       substituteList(s.elseBody, stmt.elseBody);
                                       out.push_back(Statement{std::move(stmt), statement.span});
                                   },
                                   [&](const ForStmt& s) { unroll(s, statement.span, out); },
                                   [&](const CallStmt&) { out.push_back(statement); },
                           },
                           statement.node);
            }

            void unroll(const ForStmt& loop, const SourceSpan& span, StatementList& out) {
                const std::uint64_t from = evaluate(loop.from);
                const std::uint64_t to   = evaluate(loop.to);
                const std::uint64_t step = loop.step ? evaluate(*loop.step) : 1U;
                if (step == 0U) {
                    diagnostics.emplace_back(makeError("loop step must not be zero", span));
                    exhausted = true;
                    return;
                }
                if (loop.negativeStep && from < to) {
                    diagnostics.emplace_back(makeError("negative step requires the start value to exceed the end value", span));
                    exhausted = true;
                    return;
                }
                const bool    ascending = from <= to;
                std::uint64_t value     = from;
                while (true) {
                    if (++unrolled > settings.maxUnroll) {
                        diagnostics.emplace_back(makeError("loop unrolling exceeds the limit of " + std::to_string(settings.maxUnroll) + " iterations", span));
                        exhausted = true;
                        return;
                    }
                    loopValues[loop.variable] = value;
                    substituteList(loop.body, out);
                    if (exhausted) {
                        return;
                    }
                    if (ascending) {
                        if (to - value < step) {
                            break;
                        }
                        value += step;
                    } else {
                        if (value - to < step) {
                            break;
                        }
                        value -= step;
                    }
                }
                loopValues.erase(loop.variable);
            }

            // -------------------------------------------------------------
            // Width annotation and constant folding

            unsigned accessWidth(const SignalAccess& access) {
                return static_cast<unsigned>(selectedBits(access, signals.at(access.name).width).size());
            }

            std::optional<unsigned> intrinsicWidth(const Expression& expression) {
                return std::visit(Overloaded{
                                          [](const ConstantExpr&) -> std::optional<unsigned> { return std::nullopt; },
                                          [&](const SignalExpr& e) -> std::optional<unsigned> { return accessWidth(e.access); },
                                          [&](const BinaryExpr& e) -> std::optional<unsigned> {
                                              if (producesSingleBit(e.op)) {
                                                  return 1U;
                                              }
                                              if (auto lhs = intrinsicWidth(*e.lhs)) {
                                                  return lhs;
                                              }
                                              return intrinsicWidth(*e.rhs);
                                          },
                                          [&](const ShiftExpr& e) -> std::optional<unsigned> { return intrinsicWidth(*e.operand); },
                                  },
                                  expression.node);
            }

            static std::optional<std::uint64_t> constantValue(const Expression& expression) {
                if (const auto* constant = expression.as<ConstantExpr>()) {
                    return constant->value.literal();
                }
                return std::nullopt;
            }

            Expression folded(std::uint64_t value, unsigned width, const SourceSpan& span) {
                Expression out{ConstantExpr{Number{value & widthMask(width), span}}, span};
                out.width = width;
                return out;
            }

            Expression annotate(const Expression& expression, std::optional<unsigned> expected) {
                const unsigned fallback = expected.value_or(checked.defaultWidth);
                return std::visit(Overloaded{
                                          [&](const ConstantExpr& e) {
                                              const std::uint64_t value = e.value.literal();
                                              if ((value & ~widthMask(fallback)) != 0U) {
                                                  diagnostics.emplace_back(makeWarning("constant " + std::to_string(value) + " does not fit into " + std::to_string(fallback) + " bits and is truncated", expression.span));
                                              }
                                              return folded(value, fallback, expression.span);
                                          },
                                          [&](const SignalExpr& e) {
                                              Expression out = expression;
                                              out.width      = accessWidth(e.access);
                                              return out;
                                          },
                                          [&](const BinaryExpr& e) {
                                              unsigned operandWidth = 1U;
                                              if (!isLogical(e.op)) {
                                                  auto width = intrinsicWidth(*e.lhs);
                                                  if (!width) {
                                                      width = intrinsicWidth(*e.rhs);
                                                  }
                                                  operandWidth = width.value_or(isComparison(e.op) ? checked.defaultWidth : fallback);
                                              }
                                              Expression     lhs         = annotate(*e.lhs, operandWidth);
                                              Expression     rhs         = annotate(*e.rhs, operandWidth);
                                              const unsigned resultWidth = producesSingleBit(e.op) ? 1U : operandWidth;
                                              const auto     lv          = constantValue(lhs);
                                              const auto     rv          = constantValue(rhs);
                                              if (lv && rv) {
                                                  return folded(applyBinary(e.op, *lv, *rv, operandWidth), resultWidth, expression.span);
                                              }
                                              Expression out{BinaryExpr{e.op, std::move(lhs), std::move(rhs)}, expression.span};
                                              out.width = resultWidth;
                                              return out;
                                          },
                                          [&](const ShiftExpr& e) {
                                              Expression operand = annotate(*e.operand, expected);
                                              const auto width   = operand.width;
                                              if (const auto value = constantValue(operand)) {
                                                  return folded(applyShift(e.op, *value, e.amount.literal(), width), width, expression.span);
                                              }
                                              Expression out{ShiftExpr{e.op, std::move(operand), e.amount}, expression.span};
                                              out.width = width;
                                              return out;
                                          },
                                  },
                                  expression.node);
            }

            void annotateList(StatementList& statements) {
                for (auto& statement: statements) {
                    if (auto* assign = std::get_if<AssignStmt>(&statement.node)) {
                        assign->rhs = annotate(assign->rhs, accessWidth(assign->lhs));
                    } else if (auto* branch = std::get_if<IfStmt>(&statement.node)) {
                        branch->condition   = annotate(branch->condition, 1U);
                        branch->fiCondition = annotate(branch->fiCondition, 1U);
                        if (!(branch->condition == branch->fiCondition)) {
                            diagnostics.emplace_back(makeError("fi condition " + toString(branch->fiCondition) + " must repeat the if condition " + toString(branch->condition), branch->fiCondition.span));
                        }
                        annotateList(branch->thenBody);
                        annotateList(branch->elseBody);
                    }
                }
            }
        };
    } // namespace

    std::vector<unsigned> selectedBits(const SignalAccess& access, unsigned signalWidth) {
        if (!access.first) {
            return bitsBetween(0, signalWidth - 1U);
        }
        const auto first = access.first->literal();
        if (!access.last) {
            return {static_cast<unsigned>(first)};
        }
        return bitsBetween(first, access.last->literal());
    }

    std::optional<unsigned> declaredWidth(const ModuleDecl& module, std::string_view signal) {
        for (const auto& param: module.params) {
            if (param.name == signal) {
                return param.width;
            }
        }
        for (const auto& local: module.locals) {
            if (local.name == signal) {
                return local.width;
            }
        }
        return std::nullopt;
    }

    std::vector<SignalBit> bitsRead(const Expression& expression, const ModuleDecl& module) {
        std::vector<SignalBit>                 bits;
        std::function<void(const Expression&)> visit = [&](const Expression& e) {
            if (const auto* signal = e.as<SignalExpr>()) {
                for (const auto bit: selectedBits(signal->access, declaredWidth(module, signal->access.name).value_or(1U))) {
                    bits.push_back(SignalBit{signal->access.name, bit});
                }
            } else if (const auto* binary = e.as<BinaryExpr>()) {
                visit(*binary->lhs);
                visit(*binary->rhs);
            } else if (const auto* shift = e.as<ShiftExpr>()) {
                visit(*shift->operand);
            }
        };
        visit(expression);
        std::sort(bits.begin(), bits.end());
        bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
        return bits;
    }

    AnalysisResult analyze(const Program& program, const AnalyzeSettings& settings) {
        AnalysisResult result;
        if (program.modules.empty()) {
            result.diagnostics.emplace_back(makeError("program contains no modules"));
            return result;
        }

        CheckedProgram checked{program, settings.defaultWidth};
        for (auto& module: checked.program.modules) {
            for (auto& param: module.params) {
                param.width = param.width.value_or(settings.defaultWidth);
            }
            for (auto& local: module.locals) {
                local.width = local.width.value_or(settings.defaultWidth);
            }
        }

        std::set<std::string> moduleNames;
        for (std::size_t i = 0; i < program.modules.size(); ++i) {
            const auto& module = program.modules[i];
            if (!moduleNames.insert(module.name).second) {
                result.diagnostics.emplace_back(makeError("duplicate module " + quoted(module.name), module.span));
            }
            checkDeclarations(module, result.diagnostics);
            const auto signals = buildSignalTable(checked.program.modules[i], settings.defaultWidth);
            Checker(checked.program, i, signals, result.diagnostics).checkList(module.body);
        }

        if (!hasErrors(result.diagnostics)) {
            result.program = std::move(checked);
        }
        return result;
    }

    ElaborationResult elaborate(const CheckedProgram& program, const ElabSettings& settings) {
        ElaborationResult result;
        result.program = Elaborator(program, settings, result.diagnostics).run();
        return result;
    }

    ElaborationResult compile(std::string_view source, const FrontendSettings& settings) {
        ElaborationResult result;
        auto              parsed = parse(source);
        result.diagnostics       = std::move(parsed.diagnostics);
        if (!parsed.ok()) {
            return result;
        }
        auto analyzed = analyze(*parsed.program, settings.analyze);
        result.diagnostics.insert(result.diagnostics.end(), analyzed.diagnostics.begin(), analyzed.diagnostics.end());
        if (!analyzed.ok()) {
            return result;
        }
        auto elaborated = elaborate(*analyzed.program, settings.elab);
        result.diagnostics.insert(result.diagnostics.end(), elaborated.diagnostics.begin(), elaborated.diagnostics.end());
        result.program = std::move(elaborated.program);
        return result;
    }
} // namespace syrec
