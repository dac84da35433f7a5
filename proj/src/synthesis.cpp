/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/synthesis.hpp"

#include "syrec/arith.hpp"
#include "syrec/overloaded.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace syrec {
    namespace {
        // One bit of an evaluated expression: a circuit line or a constant.
        struct Bit {
            std::optional<LineIndex> line;
            bool                     one = false;
        };

        struct Value {
            std::vector<Bit> bits;
            /// The lines may be modified in place (and are restored by the caller).
            bool owned = false;

            [[nodiscard]] bool isLines() const {
                return std::all_of(bits.begin(), bits.end(), [](const Bit& bit) { return bit.line.has_value(); });
            }
            [[nodiscard]] bool isConst() const {
                return std::none_of(bits.begin(), bits.end(), [](const Bit& bit) { return bit.line.has_value(); });
            }
            [[nodiscard]] Lines lines() const {
                Lines out;
                for (const auto& bit: bits) {
                    out.push_back(*bit.line);
                }
                return out;
            }
            [[nodiscard]] std::uint64_t constant() const {
                std::uint64_t value = 0;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    value |= static_cast<std::uint64_t>(bits[i].one) << i;
                }
                return value;
            }
            [[nodiscard]] unsigned width() const { return static_cast<unsigned>(bits.size()); }

            static Value ofLines(const Lines& lines, bool owned) {
                Value value;
                for (const auto line: lines) {
                    value.bits.push_back(Bit{line, false});
                }
                value.owned = owned;
                return value;
            }
            static Value ofConstant(std::uint64_t constant, unsigned width) {
                Value value;
                for (unsigned i = 0; i < width; ++i) {
                    value.bits.push_back(Bit{std::nullopt, ((constant >> i) & 1U) != 0U});
                }
                return value;
            }
        };

        struct Frame {
            const ModuleDecl*                             module = nullptr;
            std::map<std::string, Lines, std::less<>> signals;
        };

        // State of one statement-level expression evaluation.
        struct Scope {
            std::map<LineIndex, unsigned> reads;
            ControlContext                applyCtx;
            std::vector<LineIndex>        helpers;
        };

        bool isOntoOperator(BinaryOp op) {
            return op != BinaryOp::Add && op != BinaryOp::Subtract;
        }

        bool moduleHasLocals(const Program& program, const ModuleDecl& module) {
            if (!module.locals.empty()) {
                return true;
            }
            std::function<bool(const StatementList&)> scan = [&](const StatementList& list) {
                return std::any_of(list.begin(), list.end(), [&](const Statement& statement) {
                    if (const auto* call = statement.as<CallStmt>()) {
                        const auto* callee = program.findModule(call->module);
                        return callee != nullptr && moduleHasLocals(program, *callee);
                    }
                    if (const auto* branch = statement.as<IfStmt>()) {
                        return scan(branch->thenBody) || scan(branch->elseBody);
                    }
                    return false;
                });
            };
            return scan(module.body);
        }

        class Synthesizer;

        // Zero lines that are always handed back clean.
        class HelperPool: public LineAllocator {
        public:
            explicit HelperPool(Synthesizer& owner):
                owner(owner) {}

            [[nodiscard]] LineIndex acquire() override;
            void                    release(LineIndex line) override { freeLines.insert(line); }

            [[nodiscard]] const std::set<LineIndex>& lines() const { return all; }

        private:
            Synthesizer&        owner;
            std::set<LineIndex> freeLines;
            std::set<LineIndex> all;
        };

        class Synthesizer {
        public:
            Synthesizer(const ElaboratedProgram& program, SynthesisMode mode, const SynthesisSettings& settings):
                program(program), mode(mode), settings(settings), pool(*this) {}

            SynthesisResult run() {
                const auto&   entry = program.entryModule();
                Frame         frame{&entry, {}};
                SignalBinding binding;
                for (const auto& param: entry.params) {
                    const bool input  = param.direction != Direction::Out;
                    const bool output = true; // `in` lines pass their value through unchanged
                    frame.signals[param.name] = bindSignal(param.name, *param.width, input, output);
                    binding.signals.push_back(BoundSignal{param.name, frame.signals[param.name], input, param.direction != Direction::In});
                }
                for (const auto& local: entry.locals) {
                    const bool state          = local.kind == LocalKind::State;
                    frame.signals[local.name] = bindSignal(local.name, *local.width, state, state);
                    binding.signals.push_back(BoundSignal{local.name, frame.signals[local.name], state, state});
                }

                lowerList(frame, entry.body, {});

                // Lines that were written but are neither outputs nor returned
                // helpers hold meaningless values at the end.
                std::set<LineIndex> written;
                for (const auto& gate: circuit.gates()) {
                    written.insert(gate.targets.begin(), gate.targets.end());
                }
                for (LineIndex i = 0; i < circuit.numLines(); ++i) {
                    auto& line     = circuit.line(i);
                    line.isGarbage = !line.outputName && written.count(i) != 0U && pool.lines().count(i) == 0U;
                }

                binding.helperLines = pool.lines().size();
                SynthesisResult result{circuit, binding, statistics(circuit)};
                return result;
            }

            LineIndex newLine(Line line) {
                if (circuit.numLines() >= settings.maxLines) {
                    throw SynthesisError("line budget of " + std::to_string(settings.maxLines) + " lines exceeded");
                }
                return circuit.addLine(std::move(line));
            }

            LineIndex newConstantLine() {
                return newLine(Line{"const_0", true, false, std::nullopt, std::nullopt});
            }

        private:
            const ElaboratedProgram& program;
            SynthesisMode            mode;
            SynthesisSettings        settings;
            Circuit                  circuit;
            HelperPool               pool;

            [[nodiscard]] bool lineAware() const { return mode == SynthesisMode::LineAware; }

            Lines bindSignal(const std::string& name, unsigned width, bool input, bool output) {
                Lines lines;
                for (unsigned i = 0; i < width; ++i) {
                    const auto label = name + "." + std::to_string(i);
                    lines.push_back(newLine(Line{label, false, false, input ? std::optional<std::string>(label) : std::nullopt, output ? std::optional<std::string>(label) : std::nullopt}));
                }
                return lines;
            }

            static Lines accessLines(const Frame& frame, const SignalAccess& access) {
                const auto& all = frame.signals.at(access.name);
                Lines       lines;
                for (const auto bit: selectedBits(access, static_cast<unsigned>(all.size()))) {
                    lines.push_back(all.at(bit));
                }
                return lines;
            }

            static void countReads(const Frame& frame, const Expression& expression, std::map<LineIndex, unsigned>& reads) {
                std::visit(Overloaded{
                                   [](const ConstantExpr&) {},
                                   [&](const SignalExpr& e) {
                                       for (const auto line: accessLines(frame, e.access)) {
                                           ++reads[line];
                                       }
                                   },
                                   [&](const BinaryExpr& e) {
                                       countReads(frame, *e.lhs, reads);
                                       countReads(frame, *e.rhs, reads);
                                   },
                                   [&](const ShiftExpr& e) { countReads(frame, *e.operand, reads); },
                           },
                           expression.node);
            }

            Scope openScope(const Frame& frame, const Expression& expression, const ControlContext& ctx) const {
                Scope scope;
                countReads(frame, expression, scope.reads);
                scope.applyCtx = ctx;
                return scope;
            }

            // Undoes the computation in [start, end) (line-aware) and returns the helpers.
            void closeScope(Scope& scope, std::size_t start, std::size_t end) {
                if (lineAware()) {
                    const std::vector<Gate> segment(circuit.gates().begin() + static_cast<std::ptrdiff_t>(start), circuit.gates().begin() + static_cast<std::ptrdiff_t>(end));
                    circuit.append(reverseGates(segment));
                }
                for (const auto helper: scope.helpers) {
                    pool.release(helper);
                }
                scope.helpers.clear();
            }

            Lines scratchLines(unsigned width, Scope& scope) {
                Lines lines;
                for (unsigned i = 0; i < width; ++i) {
                    if (lineAware()) {
                        lines.push_back(pool.acquire());
                        scope.helpers.push_back(lines.back());
                    } else {
                        lines.push_back(newConstantLine());
                    }
                }
                return lines;
            }

            // Mixed line/constant values are written into scratch lines.
            Operand toOperand(const Value& value, Scope& scope) {
                if (value.isConst()) {
                    return Const{value.constant(), value.width()};
                }
                if (value.isLines()) {
                    return value.lines();
                }
                Lines lines;
                for (const auto& bit: value.bits) {
                    if (bit.line) {
                        lines.push_back(*bit.line);
                        continue;
                    }
                    const auto line = scratchLines(1, scope).front();
                    if (bit.one) {
                        circuit.appendGate(Gate::inverter(line));
                    }
                    lines.push_back(line);
                }
                return lines;
            }

            void xorInto(const Lines& target, const Value& value, const ControlContext& ctx) {
                for (std::size_t i = 0; i < target.size(); ++i) {
                    const auto& bit = value.bits.at(i);
                    if (bit.line) {
                        buildXorAssign(circuit, ctx, {target[i]}, Lines{*bit.line});
                    } else if (bit.one) {
                        buildXorAssign(circuit, ctx, {target[i]}, Const{1, 1});
                    }
                }
            }

            void mutate(const Lines& target, BinaryOp op, const Value& value, Scope& scope) {
                switch (op) {
                    case BinaryOp::Exor:
                        xorInto(target, value, {});
                        break;
                    case BinaryOp::Add:
                        buildAddAssign(circuit, {}, target, toOperand(value, scope));
                        break;
                    case BinaryOp::Subtract:
                        buildSubAssign(circuit, {}, target, toOperand(value, scope));
                        break;
                    default:
                        throw SynthesisError("operator '" + std::string(toString(op)) + "' cannot be applied in place");
                }
            }

            Value lower(const Frame& frame, const Expression& expression, Scope& scope) {
                return std::visit(Overloaded{
                                          [&](const ConstantExpr& e) { return Value::ofConstant(e.value.literal(), expression.width); },
                                          [&](const SignalExpr& e) {
                                              const auto lines = accessLines(frame, e.access);
                                              // A signal may be modified in place when nothing else
                                              // in the expression reads it and it controls nothing.
                                              const bool owned = lineAware() && std::all_of(lines.begin(), lines.end(), [&](LineIndex line) {
                                                                     return scope.reads[line] == 1U && !scope.applyCtx.contains(line);
                                                                 });
                                              return Value::ofLines(lines, owned);
                                          },
                                          [&](const ShiftExpr& e) {
                                              const Value operand = lower(frame, *e.operand, scope);
                                              const auto  width   = operand.width();
                                              const auto  amount  = e.amount.literal();
                                              Value       shifted = Value::ofConstant(0, width);
                                              for (unsigned i = 0; i < width; ++i) {
                                                  if (e.op == ShiftOp::Left && i >= amount) {
                                                      shifted.bits[i] = operand.bits[i - amount];
                                                  } else if (e.op == ShiftOp::Right && i + amount < width) {
                                                      shifted.bits[i] = operand.bits[i + amount];
                                                  }
                                              }
                                              shifted.owned = amount == 0U && operand.owned;
                                              return shifted;
                                          },
                                          [&](const BinaryExpr& e) {
                                              const Value lhs = lower(frame, *e.lhs, scope);
                                              const Value rhs = lower(frame, *e.rhs, scope);
                                              return combine(e.op, lhs, rhs, expression.width, scope);
                                          },
                                  },
                                  expression.node);
            }

            Value combine(BinaryOp op, const Value& lhs, const Value& rhs, unsigned resultWidth, Scope& scope) {
                if (lhs.isConst() && rhs.isConst()) {
                    return Value::ofConstant(applyBinary(op, lhs.constant(), rhs.constant(), lhs.width()), resultWidth);
                }
                if (!isOntoOperator(op) || op == BinaryOp::Exor) {
                    if (lhs.owned && lhs.isLines()) {
                        mutate(lhs.lines(), op, rhs, scope);
                        return lhs;
                    }
                    if (op != BinaryOp::Subtract && rhs.owned && rhs.isLines()) {
                        mutate(rhs.lines(), op, lhs, scope);
                        return rhs;
                    }
                    const Lines target = scratchLines(lhs.width(), scope);
                    xorInto(target, lhs, {});
                    mutate(target, op, rhs, scope);
                    return Value::ofLines(target, lineAware());
                }
                const Operand left   = toOperand(lhs, scope);
                const Operand right  = toOperand(rhs, scope);
                const Lines   target = scratchLines(resultWidth, scope);
                buildBinaryOnto(circuit, {}, op, left, right, target, pool);
                return Value::ofLines(target, lineAware());
            }

            static bool intersects(const Operand& operand, const ControlContext& ctx) {
                const auto* lines = std::get_if<Lines>(&operand);
                return lines != nullptr && std::any_of(lines->begin(), lines->end(), [&](LineIndex line) { return ctx.contains(line); });
            }

            // target ^= expression under ctx.
            void xorAssign(const Frame& frame, const Lines& target, const Expression& expression, const ControlContext& ctx) {
                Scope             scope = openScope(frame, expression, ctx);
                const std::size_t start = circuit.gates().size();
                const auto*       top   = expression.as<BinaryExpr>();
                if (top != nullptr && isOntoOperator(top->op)) {
                    // Operator blocks write straight onto the target.
                    const Value   lhs   = lower(frame, *top->lhs, scope);
                    const Value   rhs   = lower(frame, *top->rhs, scope);
                    const Operand left  = toOperand(lhs, scope);
                    const Operand right = toOperand(rhs, scope);
                    const bool    clash = isComparison(top->op) && (intersects(left, ctx) || intersects(right, ctx));
                    if (!clash) {
                        const std::size_t end = circuit.gates().size();
                        if (top->op == BinaryOp::Exor) {
                            xorInto(target, lhs, ctx);
                            xorInto(target, rhs, ctx);
                        } else {
                            buildBinaryOnto(circuit, ctx, top->op, left, right, target, pool);
                        }
                        closeScope(scope, start, end);
                        return;
                    }
                    const Value       value = combine(top->op, lhs, rhs, expression.width, scope);
                    const std::size_t end   = circuit.gates().size();
                    xorInto(target, value, ctx);
                    closeScope(scope, start, end);
                    return;
                }
                const Value       value = lower(frame, expression, scope);
                const std::size_t end   = circuit.gates().size();
                xorInto(target, value, ctx);
                closeScope(scope, start, end);
            }

            void arithmeticAssign(const Frame& frame, AssignOp op, const Lines& target, const Expression& expression, const ControlContext& ctx) {
                Scope             scope   = openScope(frame, expression, ctx);
                const std::size_t start   = circuit.gates().size();
                const Value       value   = lower(frame, expression, scope);
                const Operand     operand = toOperand(value, scope);
                const std::size_t end     = circuit.gates().size();
                if (op == AssignOp::Add) {
                    buildAddAssign(circuit, ctx, target, operand);
                } else {
                    buildSubAssign(circuit, ctx, target, operand);
                }
                closeScope(scope, start, end);
            }

            void collectWrites(const Frame& frame, const StatementList& list, std::set<LineIndex>& lines) const {
                for (const auto& statement: list) {
                    std::visit(Overloaded{
                                       [](const SkipStmt&) {},
                                       [&](const SwapStmt& s) {
                                           for (const auto* access: {&s.lhs, &s.rhs}) {
                                               const auto accessed = accessLines(frame, *access);
                                               lines.insert(accessed.begin(), accessed.end());
                                           }
                                       },
                                       [&](const UnaryStmt& s) {
                                           const auto accessed = accessLines(frame, s.target);
                                           lines.insert(accessed.begin(), accessed.end());
                                       },
                                       [&](const AssignStmt& s) {
                                           const auto accessed = accessLines(frame, s.lhs);
                                           lines.insert(accessed.begin(), accessed.end());
                                       },
                                       [&](const IfStmt& s) {
                                           collectWrites(frame, s.thenBody, lines);
                                           collectWrites(frame, s.elseBody, lines);
                                       },
                                       [](const ForStmt&) {},
                                       [&](const CallStmt& s) {
                                           for (const auto& argument: s.arguments) {
                                               const auto& accessed = frame.signals.at(argument);
                                               lines.insert(accessed.begin(), accessed.end());
                                           }
                                       },
                               },
                               statement.node);
                }
            }

            // A condition that is a single signal bit, optionally compared
            // with a constant, can control the branches without a copy.
            static std::optional<std::pair<LineIndex, bool>> directCondition(const Frame& frame, const Expression& condition) {
                if (const auto* signal = condition.as<SignalExpr>()) {
                    const auto lines = accessLines(frame, signal->access);
                    if (lines.size() == 1U) {
                        return std::make_pair(lines.front(), true);
                    }
                    return std::nullopt;
                }
                const auto* binary = condition.as<BinaryExpr>();
                if (binary == nullptr || (binary->op != BinaryOp::Equals && binary->op != BinaryOp::NotEquals)) {
                    return std::nullopt;
                }
                const auto* signal   = binary->lhs->as<SignalExpr>();
                const auto* constant = binary->rhs->as<ConstantExpr>();
                if (signal == nullptr) {
                    signal   = binary->rhs->as<SignalExpr>();
                    constant = binary->lhs->as<ConstantExpr>();
                }
                if (signal == nullptr || constant == nullptr) {
                    return std::nullopt;
                }
                const auto lines = accessLines(frame, signal->access);
                if (lines.size() != 1U) {
                    return std::nullopt;
                }
                const bool isOne = (constant->value.literal() & 1U) != 0U;
                return std::make_pair(lines.front(), isOne == (binary->op == BinaryOp::Equals));
            }

            void lowerIf(const Frame& frame, const IfStmt& branch, const ControlContext& ctx) {
                if (const auto* constant = branch.condition.as<ConstantExpr>()) {
                    lowerList(frame, (constant->value.literal() & 1U) != 0U ? branch.thenBody : branch.elseBody, ctx);
                    return;
                }
                if (const auto direct = directCondition(frame, branch.condition)) {
                    const auto [line, positive] = *direct;
                    std::set<LineIndex> written;
                    collectWrites(frame, branch.thenBody, written);
                    collectWrites(frame, branch.elseBody, written);
                    if (!ctx.contains(line) && written.count(line) == 0U) {
                        const auto inner = ctx.with(line);
                        if (!positive) {
                            circuit.appendGate(Gate::inverter(line));
                        }
                        lowerList(frame, branch.thenBody, inner);
                        circuit.appendGate(Gate::inverter(line));
                        lowerList(frame, branch.elseBody, inner);
                        if (positive) {
                            circuit.appendGate(Gate::inverter(line));
                        }
                        return;
                    }
                }
                const LineIndex condition = lineAware() ? pool.acquire() : newConstantLine();
                xorAssign(frame, {condition}, branch.condition, {});
                const auto inner = ctx.with(condition);
                lowerList(frame, branch.thenBody, inner);
                circuit.appendGate(Gate::inverter(condition));
                lowerList(frame, branch.elseBody, inner);
                circuit.appendGate(Gate::inverter(condition));
                if (lineAware()) {
                    // The fi condition evaluates to the if condition, clearing the helper.
                    xorAssign(frame, {condition}, branch.fiCondition, {});
                    pool.release(condition);
                }
            }

            void lowerCall(const Frame& frame, const CallStmt& call, const ControlContext& ctx) {
                const auto* callee = program.program.findModule(call.module);
                if (callee == nullptr) {
                    throw SynthesisError("unknown module '" + call.module + "'");
                }
                Frame inner{callee, {}};
                for (std::size_t i = 0; i < callee->params.size(); ++i) {
                    inner.signals[callee->params[i].name] = frame.signals.at(call.arguments.at(i));
                }
                for (const auto& local: callee->locals) {
                    Lines lines;
                    for (unsigned i = 0; i < *local.width; ++i) {
                        lines.push_back(newLine(Line{callee->name + "_" + local.name + "." + std::to_string(i), true, false, std::nullopt, std::nullopt}));
                    }
                    inner.signals[local.name] = lines;
                }
                if (!call.uncall) {
                    lowerList(inner, callee->body, ctx);
                } else if (lineAware() && !moduleHasLocals(program.program, *callee)) {
                    // Without garbage or locals the lowering is exactly invertible.
                    const std::size_t start = circuit.gates().size();
                    lowerList(inner, callee->body, ctx);
                    const auto segment = circuit.takeGatesFrom(start);
                    circuit.append(reverseGates(segment));
                } else {
                    lowerList(inner, invertStatements(callee->body), ctx);
                }
            }

            void lowerList(const Frame& frame, const StatementList& list, const ControlContext& ctx) {
                for (const auto& statement: list) {
                    lowerStatement(frame, statement, ctx);
                }
            }

            void lowerStatement(const Frame& frame, const Statement& statement, const ControlContext& ctx) {
                std::visit(Overloaded{
                                   [](const SkipStmt&) {},
                                   [&](const SwapStmt& s) { buildSwap(circuit, ctx, accessLines(frame, s.lhs), accessLines(frame, s.rhs)); },
                                   [&](const UnaryStmt& s) {
                                       const auto target = accessLines(frame, s.target);
                                       switch (s.op) {
                                           case UnaryOp::Invert:
                                               buildInvert(circuit, ctx, target);
                                               break;
                                           case UnaryOp::Increment:
                                               buildIncrement(circuit, ctx, target);
                                               break;
                                           case UnaryOp::Decrement:
                                               buildDecrement(circuit, ctx, target);
                                               break;
                                       }
                                   },
                                   [&](const AssignStmt& s) {
                                       const auto target = accessLines(frame, s.lhs);
                                       if (s.op == AssignOp::Exor) {
                                           xorAssign(frame, target, s.rhs, ctx);
                                       } else {
                                           arithmeticAssign(frame, s.op, target, s.rhs, ctx);
                                       }
                                   },
                                   [&](const IfStmt& s) { lowerIf(frame, s, ctx); },
                                   [](const ForStmt&) { throw SynthesisError("loops must be unrolled before synthesis"); },
                                   [&](const CallStmt& s) { lowerCall(frame, s, ctx); },
                           },
                           statement.node);
            }
        };

        LineIndex HelperPool::acquire() {
            if (!freeLines.empty()) {
                const auto line = *freeLines.begin();
                freeLines.erase(freeLines.begin());
                return line;
            }
            const auto line = owner.newConstantLine();
            all.insert(line);
            return line;
        }

        void placeValue(BitVector& word, const BoundSignal& signal, std::uint64_t value) {
            if ((value & ~widthMask(static_cast<unsigned>(signal.lines.size()))) != 0U) {
                throw std::invalid_argument("value " + std::to_string(value) + " of input " + signal.name + " does not fit into " + std::to_string(signal.lines.size()) + " bits");
            }
            for (std::size_t i = 0; i < signal.lines.size(); ++i) {
                word.set(signal.lines[i], ((value >> i) & 1U) != 0U);
            }
        }

        std::uint64_t readValue(const BitVector& word, const BoundSignal& signal) {
            std::uint64_t value = 0;
            for (std::size_t i = 0; i < signal.lines.size(); ++i) {
                value |= static_cast<std::uint64_t>(word.test(signal.lines[i])) << i;
            }
            return value;
        }

        BitVector toBits(std::uint64_t word, std::size_t lineCount) {
            BitVector bits(lineCount);
            for (std::size_t i = 0; i < lineCount && i < 64U; ++i) {
                bits.set(i, ((word >> i) & 1U) != 0U);
            }
            return bits;
        }
    } // namespace

    std::string_view toString(SynthesisMode mode) {
        return mode == SynthesisMode::CostAware ? "cost-aware" : "line-aware";
    }

    std::optional<SynthesisMode> parseSynthesisMode(std::string_view text) {
        if (text == "cost-aware") {
            return SynthesisMode::CostAware;
        }
        if (text == "line-aware") {
            return SynthesisMode::LineAware;
        }
        return std::nullopt;
    }

    const BoundSignal* SignalBinding::find(std::string_view name) const {
        const auto it = std::find_if(signals.begin(), signals.end(), [&](const BoundSignal& signal) { return signal.name == name; });
        return it == signals.end() ? nullptr : &*it;
    }

    SynthesisResult synthesize(const ElaboratedProgram& program, SynthesisMode mode, const SynthesisSettings& settings) {
        try {
            return Synthesizer(program, mode, settings).run();
        } catch (const std::length_error& error) {
            throw SynthesisError(error.what());
        }
    }

    BitVector embedInputs(const SignalBinding& binding, const SignalState& inputs, std::size_t lineCount) {
        BitVector word(lineCount);
        for (const auto& signal: binding.signals) {
            if (!signal.isInput) {
                continue;
            }
            const auto it = inputs.find(signal.name);
            if (it == inputs.end()) {
                throw std::invalid_argument("unassigned input " + signal.name);
            }
            placeValue(word, signal, it->second);
        }
        return word;
    }

    std::uint64_t embedInputsWord(const SignalBinding& binding, const SignalState& inputs, std::size_t lineCount) {
        if (lineCount > 64U) {
            throw std::invalid_argument("a single word holds at most 64 lines");
        }
        return embedInputs(binding, inputs, lineCount).to_ulong();
    }

    SignalState extractSignals(const SignalBinding& binding, const BitVector& word) {
        SignalState state;
        for (const auto& signal: binding.signals) {
            state[signal.name] = readValue(word, signal);
        }
        return state;
    }

    SignalState extractOutputs(const SignalBinding& binding, const BitVector& word) {
        SignalState state;
        for (const auto& signal: binding.signals) {
            if (signal.isOutput) {
                state[signal.name] = readValue(word, signal);
            }
        }
        return state;
    }

    SignalState extractOutputs(const SignalBinding& binding, std::uint64_t word) {
        std::size_t lines = 0;
        for (const auto& signal: binding.signals) {
            for (const auto line: signal.lines) {
                lines = std::max<std::size_t>(lines, line + 1U);
            }
        }
        return extractOutputs(binding, toBits(word, std::max<std::size_t>(lines, 1U)));
    }

    SignalState simulate(const SynthesisResult& result, const SignalState& inputs) {
        const auto input = embedInputs(result.binding, inputs, result.circuit.numLines());
        return extractOutputs(result.binding, run(result.circuit, input));
    }
} // namespace syrec
