#include "leipnik/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "leipnik/model.hpp"

namespace leipnik {

namespace {

constexpr std::array<std::pair<std::string_view, Expr::Node::Op>, 8> kFunctions{{
    {"sin", Expr::Node::Op::Sin},
    {"cos", Expr::Node::Op::Cos},
    {"exp", Expr::Node::Op::Exp},
    {"sqrt", Expr::Node::Op::Sqrt},
    {"tanh", Expr::Node::Op::Tanh},
    {"cosh", Expr::Node::Op::Cosh},
    {"sinh", Expr::Node::Op::Sinh},
    {"log", Expr::Node::Op::Log},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

class ExprParser {
public:
    ExprParser(std::string_view text, Expr& out) : s_(text), e_(out) {}

    void run() {
        e_.root_ = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw SyntaxError("unexpected trailing input", pos_);
    }

private:
    using Node = Expr::Node;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' ||
                                    s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int32_t add(Node n) {
        e_.nodes_.push_back(n);
        return static_cast<std::int32_t>(e_.nodes_.size() - 1);
    }

    const Node& at(std::int32_t i) const { return e_.nodes_[i]; }

    std::int32_t fold_unary(Node::Op op, std::int32_t a, std::uint32_t off) {
        if (at(a).op == Node::Op::Const) {
            const double x = at(a).value;
            double v = 0.0;
            switch (op) {
                case Node::Op::Neg: v = -x; break;
                case Node::Op::Sin: v = std::sin(x); break;
                case Node::Op::Cos: v = std::cos(x); break;
                case Node::Op::Exp: v = std::exp(x); break;
                case Node::Op::Sqrt: v = std::sqrt(x); break;
                case Node::Op::Tanh: v = std::tanh(x); break;
                case Node::Op::Cosh: v = std::cosh(x); break;
                case Node::Op::Sinh: v = std::sinh(x); break;
                case Node::Op::Log: v = std::log(x); break;
                default: break;
            }
            if (std::isfinite(v)) {
                e_.nodes_[a] = Node{Node::Op::Const, v, -1, -1, off};
                return a;
            }
        }
        return add(Node{op, 0.0, a, -1, off});
    }

    std::int32_t fold_binary(Node::Op op, std::int32_t a, std::int32_t b,
                             std::uint32_t off) {
        if (at(a).op == Node::Op::Const && at(b).op == Node::Op::Const) {
            const double x = at(a).value, y = at(b).value;
            double v = 0.0;
            switch (op) {
                case Node::Op::Add: v = x + y; break;
                case Node::Op::Sub: v = x - y; break;
                case Node::Op::Mul: v = x * y; break;
                case Node::Op::Div: v = y != 0.0 ? x / y : std::nan(""); break;
                case Node::Op::Pow: v = std::pow(x, y); break;
                default: break;
            }
            if (std::isfinite(v)) {
                e_.nodes_[a] = Node{Node::Op::Const, v, -1, -1, off};
                return a;
            }
        }
        return add(Node{op, 0.0, a, b, off});
    }

    std::int32_t parse_expr() {
        std::int32_t lhs = parse_term();
        for (;;) {
            skip_ws();
            const auto off = static_cast<std::uint32_t>(pos_);
            if (eat('+'))
                lhs = fold_binary(Node::Op::Add, lhs, parse_term(), off);
            else if (eat('-'))
                lhs = fold_binary(Node::Op::Sub, lhs, parse_term(), off);
            else
                return lhs;
        }
    }

    std::int32_t parse_term() {
        std::int32_t lhs = parse_factor();
        for (;;) {
            skip_ws();
            const auto off = static_cast<std::uint32_t>(pos_);
            if (eat('*'))
                lhs = fold_binary(Node::Op::Mul, lhs, parse_factor(), off);
            else if (eat('/'))
                lhs = fold_binary(Node::Op::Div, lhs, parse_factor(), off);
            else
                return lhs;
        }
    }

    std::int32_t parse_factor() {
        skip_ws();
        const auto off = static_cast<std::uint32_t>(pos_);
        if (eat('-')) return fold_unary(Node::Op::Neg, parse_factor(), off);
        return parse_power();
    }

    std::int32_t parse_power() {
        std::int32_t base = parse_atom();
        skip_ws();
        const auto off = static_cast<std::uint32_t>(pos_);
        if (eat('^')) return fold_binary(Node::Op::Pow, base, parse_factor(), off);
        return base;
    }

    std::int32_t parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of expression", pos_);
        const char c = s_[pos_];
        const auto off = static_cast<std::uint32_t>(pos_);

        if (c == '(') {
            ++pos_;
            const std::int32_t inner = parse_expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();

        if (ident_start(c)) {
            size_t end = pos_;
            while (end < s_.size() && ident_char(s_[end])) ++end;
            const std::string_view name = s_.substr(pos_, end - pos_);
            pos_ = end;
            if (eat('(')) {
                for (const auto& [fname, op] : kFunctions) {
                    if (name == fname) {
                        const std::int32_t arg = parse_expr();
                        if (!eat(')')) throw SyntaxError("expected ')'", pos_);
                        return fold_unary(op, arg, off);
                    }
                }
                throw UnknownIdentifier("unknown function '" + std::string(name) + "'",
                                        off);
            }
            if (name == "t") return add(Node{Node::Op::Time, 0.0, -1, -1, off});
            return add(Node{Node::Op::Param, 0.0, param_index(name), -1, off});
        }

        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::int32_t parse_number() {
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr == first)
            throw SyntaxError("malformed number", pos_);
        const auto off = static_cast<std::uint32_t>(pos_);
        pos_ += static_cast<size_t>(ptr - first);
        return add(Node{Node::Op::Const, v, -1, -1, off});
    }

    std::int32_t param_index(std::string_view name) {
        for (size_t i = 0; i < e_.params_.size(); ++i)
            if (e_.params_[i] == name) return static_cast<std::int32_t>(i);
        e_.params_.emplace_back(name);
        return static_cast<std::int32_t>(e_.params_.size() - 1);
    }

    std::string_view s_;
    size_t pos_ = 0;
    Expr& e_;
};

Expr parse_expression(std::string_view text) {
    Expr e;
    ExprParser(text, e).run();
    return e;
}

double Expr::eval_node(std::int32_t i, double t,
                       const std::vector<double>& bound_values) const {
    const Node& n = nodes_[i];
    double v;
    switch (n.op) {
        case Node::Op::Const: return n.value;
        case Node::Op::Time: return t;
        case Node::Op::Param: return bound_values[static_cast<size_t>(n.a)];
        case Node::Op::Neg: v = -eval_node(n.a, t, bound_values); break;
        case Node::Op::Add:
            v = eval_node(n.a, t, bound_values) + eval_node(n.b, t, bound_values);
            break;
        case Node::Op::Sub:
            v = eval_node(n.a, t, bound_values) - eval_node(n.b, t, bound_values);
            break;
        case Node::Op::Mul:
            v = eval_node(n.a, t, bound_values) * eval_node(n.b, t, bound_values);
            break;
        case Node::Op::Div:
            v = eval_node(n.a, t, bound_values) / eval_node(n.b, t, bound_values);
            break;
        case Node::Op::Pow:
            v = std::pow(eval_node(n.a, t, bound_values),
                         eval_node(n.b, t, bound_values));
            break;
        case Node::Op::Sin: v = std::sin(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Cos: v = std::cos(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Exp: v = std::exp(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Sqrt: v = std::sqrt(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Tanh: v = std::tanh(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Cosh: v = std::cosh(eval_node(n.a, t, bound_values)); break;
        case Node::Op::Sinh: v = std::sinh(eval_node(n.a, t, bound_values)); break;
        default: v = std::log(eval_node(n.a, t, bound_values)); break;
    }
    if (!std::isfinite(v))
        throw NonFiniteResult("expression produced a non-finite value at offset " +
                              std::to_string(nodes_[i].offset));
    return v;
}

namespace {

std::vector<double> resolve_params(const std::vector<std::string>& names,
                                   const std::map<std::string, double>& params) {
    std::vector<double> values;
    values.reserve(names.size());
    for (const auto& name : names) {
        const auto it = params.find(name);
        if (it == params.end())
            throw UnboundParameter("parameter '" + name + "' has no binding");
        values.push_back(it->second);
    }
    return values;
}

}  // namespace

double Expr::eval(double t, const std::map<std::string, double>& params) const {
    if (root_ < 0) throw ValidationError("empty expression");
    return eval_node(root_, t, resolve_params(params_, params));
}

std::function<double(double)> Expr::bound(
    const std::map<std::string, double>& params) const {
    if (root_ < 0) throw ValidationError("empty expression");
    return [e = *this, values = resolve_params(params_, params)](double t) {
        return e.eval_node(e.root_, t, values);
    };
}

namespace {

int precedence(Expr::Node::Op op) {
    using O = Expr::Node::Op;
    switch (op) {
        case O::Add: case O::Sub: return 1;
        case O::Mul: case O::Div: return 2;
        case O::Neg: return 3;
        case O::Pow: return 4;
        default: return 5;
    }
}

}  // namespace

void Expr::print_node(std::int32_t i, int parent_prec, std::string& out) const {
    const Node& n = nodes_[i];
    const int prec = precedence(n.op);
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (n.op) {
        case Node::Op::Const: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += buf;
            break;
        }
        case Node::Op::Time: out += 't'; break;
        case Node::Op::Param: out += params_[static_cast<size_t>(n.a)]; break;
        case Node::Op::Neg:
            out += '-';
            print_node(n.a, prec, out);
            break;
        case Node::Op::Add:
            print_node(n.a, prec, out); out += " + "; print_node(n.b, prec + 1, out);
            break;
        case Node::Op::Sub:
            print_node(n.a, prec, out); out += " - "; print_node(n.b, prec + 1, out);
            break;
        case Node::Op::Mul:
            print_node(n.a, prec, out); out += "*"; print_node(n.b, prec + 1, out);
            break;
        case Node::Op::Div:
            print_node(n.a, prec, out); out += "/"; print_node(n.b, prec + 1, out);
            break;
        case Node::Op::Pow:
            print_node(n.a, prec + 1, out); out += "^"; print_node(n.b, prec, out);
            break;
        default: {
            for (const auto& [fname, op] : kFunctions)
                if (op == n.op) { out += fname; break; }
            out += '(';
            print_node(n.a, 0, out);
            out += ')';
            break;
        }
    }
    if (parens) out += ')';
}

std::string Expr::str() const {
    if (root_ < 0) return {};
    std::string out;
    print_node(root_, 0, out);
    return out;
}

QuadraticModel model_from_expressions(std::string_view mass,
                                      std::string_view omega_sq,
                                      std::string_view force,
                                      const std::map<std::string, double>& params) {
    auto m = parse_expression(mass).bound(params);
    auto w2 = parse_expression(omega_sq).bound(params);
    auto f = parse_expression(force).bound(params);
    return QuadraticModel::custom(std::move(m), std::move(w2), std::move(f),
                                  "custom");
}

}  // namespace leipnik
