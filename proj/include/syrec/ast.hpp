/*
 * SPDX-License-Identifier: MIT
 *
 * Licensed under the MIT License
 */

#pragma once

#include "syrec/diagnostic.hpp"
#include "syrec/operators.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace syrec {
    /// Heap cell with value semantics, used to close the recursion of the
    /// syntax tree. Copies are deep, comparison is by value.
    template<typename T>
    class Box {
    public:
        Box(T value): // NOLINT(google-explicit-constructor)
            ptr(std::make_unique<T>(std::move(value))) {}
        Box(const Box& other):
            ptr(std::make_unique<T>(*other.ptr)) {}
        Box(Box&&) noexcept = default;
        Box& operator=(const Box& other) {
            if (this != &other) {
                ptr = std::make_unique<T>(*other.ptr);
            }
            return *this;
        }
        Box& operator=(Box&&) noexcept = default;
        ~Box()                         = default;

        [[nodiscard]] T&       operator*() { return *ptr; }
        [[nodiscard]] const T& operator*() const { return *ptr; }
        [[nodiscard]] T*       operator->() { return ptr.get(); }
        [[nodiscard]] const T* operator->() const { return ptr.get(); }

        [[nodiscard]] bool operator==(const Box& other) const { return *ptr == *other.ptr; }

    private:
        std::unique_ptr<T> ptr;
    };

    // ---------------------------------------------------------------------
    // Compile-time numbers: loop bounds, bit indices, shift amounts

    struct Number;

    struct LoopVariableRef {
        std::string name;
        [[nodiscard]] bool operator==(const LoopVariableRef&) const = default;
    };

    struct WidthOfRef {
        std::string signal;
        [[nodiscard]] bool operator==(const WidthOfRef&) const = default;
    };

    struct NumberBinary {
        BinaryOp    op; // Add or Subtract
        Box<Number> lhs;
        Box<Number> rhs;
        [[nodiscard]] bool operator==(const NumberBinary&) const = default;
    };

    struct Number {
        std::variant<std::uint64_t, LoopVariableRef, WidthOfRef, NumberBinary> value;
        SourceSpan span;

        [[nodiscard]] bool operator==(const Number&) const = default;

        [[nodiscard]] bool isLiteral() const { return std::holds_alternative<std::uint64_t>(value); }
        [[nodiscard]] std::uint64_t literal() const { return std::get<std::uint64_t>(value); }

        static Number of(std::uint64_t v, SourceSpan span = {}) { return Number{v, span}; }
    };

    // ---------------------------------------------------------------------
    // Expressions

    /// `x`, `x.i` or `x.i:j`. A range whose first index exceeds its last
    /// selects the bits in descending order.
    struct SignalAccess {
        std::string           name;
        std::optional<Number> first;
        std::optional<Number> last;
        SourceSpan            span;

        [[nodiscard]] bool operator==(const SignalAccess&) const = default;
    };

    struct Expression;

    struct ConstantExpr {
        Number value;
        [[nodiscard]] bool operator==(const ConstantExpr&) const = default;
    };

    struct SignalExpr {
        SignalAccess access;
        [[nodiscard]] bool operator==(const SignalExpr&) const = default;
    };

    struct BinaryExpr {
        BinaryOp        op;
        Box<Expression> lhs;
        Box<Expression> rhs;
        [[nodiscard]] bool operator==(const BinaryExpr&) const = default;
    };

    struct ShiftExpr {
        ShiftOp         op;
        Box<Expression> operand;
        Number          amount;
        [[nodiscard]] bool operator==(const ShiftExpr&) const = default;
    };

    struct Expression {
        std::variant<ConstantExpr, SignalExpr, BinaryExpr, ShiftExpr> node;
        SourceSpan span;
        /// Bit width, filled in by elaboration (0 = not yet inferred).
        unsigned width = 0;

        [[nodiscard]] bool operator==(const Expression&) const = default;

        template<typename T>
        [[nodiscard]] const T* as() const {
            return std::get_if<T>(&node);
        }
    };

    // ---------------------------------------------------------------------
    // Statements

    struct Statement;
    using StatementList = std::vector<Statement>;

    struct SkipStmt {
        [[nodiscard]] bool operator==(const SkipStmt&) const = default;
    };

    struct SwapStmt {
        SignalAccess lhs;
        SignalAccess rhs;
        [[nodiscard]] bool operator==(const SwapStmt&) const = default;
    };

    struct UnaryStmt {
        UnaryOp      op;
        SignalAccess target;
        [[nodiscard]] bool operator==(const UnaryStmt&) const = default;
    };

    struct AssignStmt {
        AssignOp     op;
        SignalAccess lhs;
        Expression   rhs;
        [[nodiscard]] bool operator==(const AssignStmt&) const = default;
    };

    struct IfStmt {
        Expression    condition;
        StatementList thenBody;
        StatementList elseBody;
        Expression    fiCondition;
        [[nodiscard]] bool operator==(const IfStmt&) const;
    };

    struct ForStmt {
        std::string           variable;
        Number                from;
        Number                to;
        std::optional<Number> step;
        /// `step -n`: only valid when the loop counts downwards.
        bool                  negativeStep = false;
        StatementList         body;
        [[nodiscard]] bool operator==(const ForStmt&) const;
    };

    struct CallStmt {
        bool                     uncall = false;
        std::string              module;
        std::vector<std::string> arguments;
        [[nodiscard]] bool operator==(const CallStmt&) const = default;
    };

    struct Statement {
        std::variant<SkipStmt, SwapStmt, UnaryStmt, AssignStmt, IfStmt, ForStmt, CallStmt> node;
        SourceSpan span;

        [[nodiscard]] bool operator==(const Statement&) const = default;

        template<typename T>
        [[nodiscard]] const T* as() const {
            return std::get_if<T>(&node);
        }
    };

    inline bool IfStmt::operator==(const IfStmt& other) const {
        return condition == other.condition && thenBody == other.thenBody && elseBody == other.elseBody && fiCondition == other.fiCondition;
    }

    inline bool ForStmt::operator==(const ForStmt& other) const {
        return variable == other.variable && from == other.from && to == other.to && step == other.step && negativeStep == other.negativeStep && body == other.body;
    }

    // ---------------------------------------------------------------------
    // Declarations

    enum class Direction { In, Out, Inout };
    enum class LocalKind { Wire, State };

    struct Param {
        Direction               direction = Direction::In;
        std::string             name;
        std::optional<unsigned> width; ///< omitted in the source: default width applies
        SourceSpan              span;
        [[nodiscard]] bool operator==(const Param&) const = default;
    };

    struct LocalSignal {
        LocalKind               kind = LocalKind::Wire;
        std::string             name;
        std::optional<unsigned> width;
        SourceSpan              span;
        [[nodiscard]] bool operator==(const LocalSignal&) const = default;
    };

    struct ModuleDecl {
        std::string              name;
        std::vector<Param>       params;
        std::vector<LocalSignal> locals;
        StatementList            body;
        SourceSpan               span;
        [[nodiscard]] bool operator==(const ModuleDecl&) const = default;
    };

    struct Program {
        std::vector<ModuleDecl> modules;

        [[nodiscard]] bool operator==(const Program&) const = default;

        [[nodiscard]] const ModuleDecl* findModule(std::string_view name) const {
            for (const auto& module: modules) {
                if (module.name == name) {
                    return &module;
                }
            }
            return nullptr;
        }

        /// The module called `main` if present, otherwise the last declared one.
        [[nodiscard]] const ModuleDecl* entryModule() const {
            if (const auto* main = findModule("main")) {
                return main;
            }
            return modules.empty() ? nullptr : &modules.back();
        }
    };

    [[nodiscard]] inline std::string_view toString(Direction direction) {
        switch (direction) {
            case Direction::In:
                return "in";
            case Direction::Out:
                return "out";
            case Direction::Inout:
                return "inout";
        }
        return "?";
    }

    [[nodiscard]] inline std::string_view toString(LocalKind kind) {
        return kind == LocalKind::Wire ? "wire" : "state";
    }
} // namespace syrec
