/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#include "syrec/printer.hpp"

#include "syrec/overloaded.hpp"

#include <sstream>
#include <string>
#include <type_traits>
#include <variant>

namespace syrec {
    namespace {
        std::string widthSuffix(const std::optional<unsigned>& width) {
            return width ? "(" + std::to_string(*width) + ")" : std::string();
        }

        void printList(std::ostringstream& os, const StatementList& statements, unsigned indent);

        void printStatement(std::ostringstream& os, const Statement& statement, unsigned indent) {
            const std::string pad(indent * 4U, ' ');
            std::visit(Overloaded{
                               [&](const IfStmt& stmt) {
                                   os << pad << "if " << toString(stmt.condition) << " then\n";
                                   printList(os, stmt.thenBody, indent + 1);
                                   os << pad << "else\n";
                                   printList(os, stmt.elseBody, indent + 1);
                                   os << pad << "fi " << toString(stmt.fiCondition) << '\n';
                               },
                               [&](const ForStmt& stmt) {
                                   os << pad << "for $" << stmt.variable << " = " << toString(stmt.from) << " to " << toString(stmt.to);
                                   if (stmt.step) {
                                       os << " step " << (stmt.negativeStep ? "-" : "") << toString(*stmt.step);
                                   }
                                   os << " do\n";
                                   printList(os, stmt.body, indent + 1);
                                   os << pad << "rof\n";
                               },
                               [&](const auto&) { os << pad << toString(statement) << '\n'; },
                       },
                       statement.node);
        }

        void printList(std::ostringstream& os, const StatementList& statements, unsigned indent) {
            if (statements.empty()) {
                os << std::string(indent * 4U, ' ') << "skip\n";
                return;
            }
            for (const auto& statement: statements) {
                printStatement(os, statement, indent);
            }
        }

        std::string joinInline(const StatementList& statements) {
            if (statements.empty()) {
                return "skip";
            }
            std::string out;
            for (std::size_t i = 0; i < statements.size(); ++i) {
                out += (i == 0 ? "" : "; ") + toString(statements[i]);
            }
            return out;
        }
    } // namespace

    std::string toString(const Number& number) {
        return std::visit(Overloaded{
                                  [](std::uint64_t value) { return std::to_string(value); },
                                  [](const LoopVariableRef& ref) { return "$" + ref.name; },
                                  [](const WidthOfRef& ref) { return "#" + ref.signal; },
                                  [](const NumberBinary& bin) { return "(" + toString(*bin.lhs) + " " + std::string(toString(bin.op)) + " " + toString(*bin.rhs) + ")"; },
                          },
                          number.value);
    }

    std::string toString(const SignalAccess& access) {
        std::string out = access.name;
        if (access.first) {
            out += "." + toString(*access.first);
            if (access.last) {
                out += ":" + toString(*access.last);
            }
        }
        return out;
    }

    std::string toString(const Expression& expression) {
        return std::visit(Overloaded{
                                  [](const ConstantExpr& e) { return toString(e.value); },
                                  [](const SignalExpr& e) { return toString(e.access); },
                                  [](const BinaryExpr& e) { return "(" + toString(*e.lhs) + " " + std::string(toString(e.op)) + " " + toString(*e.rhs) + ")"; },
                                  [](const ShiftExpr& e) { return "(" + toString(*e.operand) + " " + std::string(toString(e.op)) + " " + toString(e.amount) + ")"; },
                          },
                          expression.node);
    }

    std::string toString(const Statement& statement) {
        return std::visit(Overloaded{
                                  [](const SkipStmt&) { return std::string("skip"); },
                                  [](const SwapStmt& s) { return toString(s.lhs) + " <=> " + toString(s.rhs); },
                                  [](const UnaryStmt& s) { return std::string(toString(s.op)) + " " + toString(s.target); },
                                  [](const AssignStmt& s) { return toString(s.lhs) + " " + std::string(toString(s.op)) + " " + toString(s.rhs); },
                                  [](const IfStmt& s) {
                                      return "if " + toString(s.condition) + " then " + joinInline(s.thenBody) + " else " + joinInline(s.elseBody) + " fi " + toString(s.fiCondition);
                                  },
                                  [](const ForStmt& s) {
                                      std::string out = "for $" + s.variable + " = " + toString(s.from) + " to " + toString(s.to);
                                      if (s.step) {
                                          out += " step " + std::string(s.negativeStep ? "-" : "") + toString(*s.step);
                                      }
                                      return out + " do " + joinInline(s.body) + " rof";
                                  },
                                  [](const CallStmt& s) {
                                      std::string out = std::string(s.uncall ? "uncall " : "call ") + s.module + "(";
                                      for (std::size_t i = 0; i < s.arguments.size(); ++i) {
                                          out += (i == 0 ? "" : ", ") + s.arguments[i];
                                      }
                                      return out + ")";
                                  },
                          },
                          statement.node);
    }

    std::string prettyPrint(const Program& program) {
        std::ostringstream os;
        for (std::size_t m = 0; m < program.modules.size(); ++m) {
            const auto& module = program.modules[m];
            if (m > 0) {
                os << '\n';
            }
            os << "module " << module.name << '(';
            for (std::size_t i = 0; i < module.params.size(); ++i) {
                const auto& param = module.params[i];
                os << (i == 0 ? "" : ", ") << toString(param.direction) << ' ' << param.name << widthSuffix(param.width);
            }
            os << ")\n";
            for (const auto& local: module.locals) {
                os << "    " << toString(local.kind) << ' ' << local.name << widthSuffix(local.width) << '\n';
            }
            printList(os, module.body, 1);
        }
        return os.str();
    }
} // namespace syrec
