#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "leipnik/errors.hpp"

namespace leipnik {

class QuadraticModel;

// Arithmetic over the time variable t and named parameters.
//
//   expr   := term { ("+" | "-") term }
//   term   := factor { ("*" | "/") factor }
//   factor := "-" factor | power
//   power  := atom [ "^" factor ]            (right associative)
//   atom   := number | ident | ident "(" expr ")" | "(" expr ")"
//
// Functions: sin cos exp sqrt tanh cosh sinh log. No implicit
// multiplication. "t" is the time variable and cannot be a parameter.
class Expr {
public:
    struct Node {
        enum class Op : std::uint8_t {
            Const, Time, Param, Neg, Add, Sub, Mul, Div, Pow,
            Sin, Cos, Exp, Sqrt, Tanh, Cosh, Sinh, Log
        };
        Op op;
        double value = 0.0;     // Const
        std::int32_t a = -1;    // children / parameter table index
        std::int32_t b = -1;
        std::uint32_t offset = 0;  // byte position in the source text
    };

    // Substitutes t and the parameter bindings; NonFiniteResult if any
    // intermediate value is NaN or infinite, UnboundParameter for a
    // missing binding.
    double eval(double t, const std::map<std::string, double>& params = {}) const;

    // Parameter names referenced by the expression, in first-use order.
    const std::vector<std::string>& parameters() const noexcept { return params_; }

    // Resolves parameters once, returns a fast t-only callable.
    std::function<double(double)> bound(
        const std::map<std::string, double>& params = {}) const;

    // Canonical text; parse_expression(str()) evaluates identically.
    std::string str() const;

    friend Expr parse_expression(std::string_view text);
    friend class ExprParser;

private:
    Expr() = default;
    double eval_node(std::int32_t i, double t,
                     const std::vector<double>& bound_values) const;
    void print_node(std::int32_t i, int parent_prec, std::string& out) const;

    std::vector<Node> nodes_;
    std::vector<std::string> params_;
    std::int32_t root_ = -1;
};

// SyntaxError (with byte offset) on malformed text, UnknownIdentifier for a
// call to an unsupported function.
Expr parse_expression(std::string_view text);

inline std::string to_string(const Expr& e) { return e.str(); }

// Three expressions -> Custom model, with one shared parameter binding.
QuadraticModel model_from_expressions(
    std::string_view mass, std::string_view omega_sq, std::string_view force,
    const std::map<std::string, double>& params = {});

}  // namespace leipnik
