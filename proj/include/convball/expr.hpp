#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "convball/errors.hpp"
#include "convball/linalg.hpp"
#include "convball/operator_spec.hpp"
#include "convball/real.hpp"

// Expression-defined operators: a recursive-descent parser producing a shared
// AST, evaluated either on the plain backend or on dual numbers for exact
// forward-mode Jacobians.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?          // right-associative, binds above unary minus
//   atom   := number | variable | fn '(' expr ')' | '(' expr ')'
//   fn     := exp | log | sin | cos | sqrt
// Numeric literals keep their source text so extended-precision backends can
// re-read them at full precision.

namespace convball {

// ---------------------------------------------------------------------------
// dual numbers

template <class Real>
struct Dual {
    using value_type = Real;
    Real v{0.0};  // value
    Real d{0.0};  // derivative along the seeded direction

    Dual() = default;
    explicit Dual(Real value) : v(std::move(value)) {}
    Dual(Real value, Real deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

template <class Real>
Dual<Real> operator+(const Dual<Real>& a, const Dual<Real>& b) {
    return {a.v + b.v, a.d + b.d};
}
template <class Real>
Dual<Real> operator-(const Dual<Real>& a, const Dual<Real>& b) {
    return {a.v - b.v, a.d - b.d};
}
template <class Real>
Dual<Real> operator-(const Dual<Real>& a) {
    return {-a.v, -a.d};
}
template <class Real>
Dual<Real> operator*(const Dual<Real>& a, const Dual<Real>& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <class Real>
Dual<Real> operator/(const Dual<Real>& a, const Dual<Real>& b) {
    if (b.v == Real(0.0)) throw EvalDomainError("division by zero");
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

namespace ast {

template <class T>
struct is_dual : std::false_type {};
template <class R>
struct is_dual<Dual<R>> : std::true_type {};
template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

template <class T>
T one_value() {
    if constexpr (is_dual_v<T>) {
        using R = typename T::value_type;
        return T{R(1.0), R(0.0)};
    } else {
        return T(1.0);
    }
}

template <class T>
bool value_is_zero(const T& x) {
    if constexpr (is_dual_v<T>) {
        using R = typename T::value_type;
        return x.v == R(0.0);
    } else {
        return x == T(0.0);
    }
}

template <class T>
T apply_div(const T& a, const T& b) {
    if (value_is_zero(b)) throw EvalDomainError("division by zero");
    return a / b;
}

template <class T>
T apply_exp(const T& x) {
    using std::exp;
    if constexpr (is_dual_v<T>) {
        auto e = exp(x.v);
        return T{e, e * x.d};
    } else {
        return exp(x);
    }
}

template <class T>
T apply_log(const T& x) {
    using std::log;
    if constexpr (is_dual_v<T>) {
        using R = typename T::value_type;
        if (!(x.v > R(0.0))) throw EvalDomainError("log of a nonpositive value");
        return T{log(x.v), x.d / x.v};
    } else {
        if (!(x > T(0.0))) throw EvalDomainError("log of a nonpositive value");
        return log(x);
    }
}

template <class T>
T apply_sin(const T& x) {
    using std::cos;
    using std::sin;
    if constexpr (is_dual_v<T>) {
        return T{sin(x.v), cos(x.v) * x.d};
    } else {
        return sin(x);
    }
}

template <class T>
T apply_cos(const T& x) {
    using std::cos;
    using std::sin;
    if constexpr (is_dual_v<T>) {
        return T{cos(x.v), -(sin(x.v) * x.d)};
    } else {
        return cos(x);
    }
}

template <class T>
T apply_sqrt(const T& x) {
    using std::sqrt;
    if constexpr (is_dual_v<T>) {
        using R = typename T::value_type;
        if (!(x.v > R(0.0)))
            throw EvalDomainError("sqrt (with derivative) requires a positive argument");
        auto s = sqrt(x.v);
        return T{s, x.d / (R(2.0) * s)};
    } else {
        if (x < T(0.0)) throw EvalDomainError("sqrt of a negative value");
        return sqrt(x);
    }
}

// integer detection for the x^n fast path (valid for negative bases)
template <class Real>
bool integral_value(const Real& x, long& out) {
    const double d = to_double(x);
    if (!(d >= -1e15 && d <= 1e15)) return false;
    const long n = static_cast<long>(std::llround(d));
    if (x == Real(static_cast<double>(n))) {
        out = n;
        return true;
    }
    return false;
}

template <class T>
T powi(T base, long n) {
    if (n < 0) {
        if (value_is_zero(base)) throw EvalDomainError("zero raised to a negative power");
        return one_value<T>() / powi(base, -n);
    }
    T acc = one_value<T>();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

template <class T>
T apply_pow(const T& base, const T& expo) {
    using std::log;
    using std::pow;
    if constexpr (is_dual_v<T>) {
        using R = typename T::value_type;
        long n = 0;
        if (expo.d == R(0.0) && integral_value(expo.v, n)) return powi(base, n);
        if (!(base.v > R(0.0)))
            throw EvalDomainError("x^y with non-integer exponent requires a positive base");
        R val = pow(base.v, expo.v);
        R deriv = val * (expo.d * log(base.v) + expo.v * base.d / base.v);
        return T{val, deriv};
    } else {
        long n = 0;
        if (integral_value(expo, n)) return powi(base, n);
        if (!(base > T(0.0)))
            throw EvalDomainError("x^y with non-integer exponent requires a positive base");
        return pow(base, expo);
    }
}

// --- AST -------------------------------------------------------------------

enum class Fn { Exp, Log, Sin, Cos, Sqrt };

inline const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Exp: return "exp";
        case Fn::Log: return "log";
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Sqrt: return "sqrt";
    }
    return "?";
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg, Call } kind;
    double number = 0.0;       // Kind::Number
    std::string literal;       // source text of the literal
    std::size_t var_index = 0; // Kind::Variable
    Fn fn = Fn::Exp;           // Kind::Call
    NodePtr lhs, rhs;          // operands (rhs unused for Neg/Call)
};

template <class T, class Real>
T eval_node(const Node& n, const std::vector<T>& vars) {
    switch (n.kind) {
        case Node::Kind::Number:
            if constexpr (is_dual_v<T>)
                return T{real_from_literal<Real>(n.literal), Real(0.0)};
            else
                return real_from_literal<Real>(n.literal);
        case Node::Kind::Variable:
            return vars[n.var_index];
        case Node::Kind::Add:
            return eval_node<T, Real>(*n.lhs, vars) + eval_node<T, Real>(*n.rhs, vars);
        case Node::Kind::Sub:
            return eval_node<T, Real>(*n.lhs, vars) - eval_node<T, Real>(*n.rhs, vars);
        case Node::Kind::Mul:
            return eval_node<T, Real>(*n.lhs, vars) * eval_node<T, Real>(*n.rhs, vars);
        case Node::Kind::Div:
            return apply_div(eval_node<T, Real>(*n.lhs, vars),
                             eval_node<T, Real>(*n.rhs, vars));
        case Node::Kind::Pow:
            return apply_pow(eval_node<T, Real>(*n.lhs, vars),
                             eval_node<T, Real>(*n.rhs, vars));
        case Node::Kind::Neg:
            return -eval_node<T, Real>(*n.lhs, vars);
        case Node::Kind::Call: {
            T a = eval_node<T, Real>(*n.lhs, vars);
            switch (n.fn) {
                case Fn::Exp: return apply_exp(a);
                case Fn::Log: return apply_log(a);
                case Fn::Sin: return apply_sin(a);
                case Fn::Cos: return apply_cos(a);
                case Fn::Sqrt: return apply_sqrt(a);
            }
            break;
        }
    }
    throw EvalDomainError("corrupt expression node");
}

inline void print_node(const Node& n, const std::vector<std::string>& names,
                       std::string& out) {
    switch (n.kind) {
        case Node::Kind::Number:
            out += n.literal;
            return;
        case Node::Kind::Variable:
            out += names[n.var_index];
            return;
        case Node::Kind::Neg:
            out += "(-";
            print_node(*n.lhs, names, out);
            out += ')';
            return;
        case Node::Kind::Call:
            out += fn_name(n.fn);
            out += '(';
            print_node(*n.lhs, names, out);
            out += ')';
            return;
        default: {
            const char* op = n.kind == Node::Kind::Add   ? " + "
                             : n.kind == Node::Kind::Sub ? " - "
                             : n.kind == Node::Kind::Mul ? " * "
                             : n.kind == Node::Kind::Div ? " / "
                                                         : " ^ ";
            out += '(';
            print_node(*n.lhs, names, out);
            out += op;
            print_node(*n.rhs, names, out);
            out += ')';
        }
    }
}

}  // namespace ast

// ---------------------------------------------------------------------------
// parser

/// A parsed system of expressions over named variables.
struct ParsedSystem {
    std::vector<ast::NodePtr> equations;
    std::vector<std::string> variables;

    /// Fully parenthesized canonical form; reparsing it reproduces the system.
    std::string pretty() const {
        std::string out;
        for (std::size_t i = 0; i < equations.size(); ++i) {
            if (i) out += "; ";
            ast::print_node(*equations[i], variables, out);
        }
        return out;
    }
};

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& src, std::size_t base_offset,
               const std::vector<std::string>& variables, bool default_names)
        : src_(src), base_(base_offset), vars_(variables), default_names_(default_names) {}

    ast::NodePtr parse() {
        ast::NodePtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            throw ParseError(base_ + pos_, "unexpected trailing input '" +
                                               src_.substr(pos_, 8) + "'");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    static ast::NodePtr binary(ast::Node::Kind k, ast::NodePtr a, ast::NodePtr b) {
        auto n = std::make_shared<ast::Node>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    ast::NodePtr parse_expr() {
        ast::NodePtr acc = parse_term();
        for (;;) {
            if (eat('+'))
                acc = binary(ast::Node::Kind::Add, acc, parse_term());
            else if (eat('-'))
                acc = binary(ast::Node::Kind::Sub, acc, parse_term());
            else
                return acc;
        }
    }

    ast::NodePtr parse_term() {
        ast::NodePtr acc = parse_unary();
        for (;;) {
            if (eat('*'))
                acc = binary(ast::Node::Kind::Mul, acc, parse_unary());
            else if (eat('/'))
                acc = binary(ast::Node::Kind::Div, acc, parse_unary());
            else
                return acc;
        }
    }

    ast::NodePtr parse_unary() {
        if (eat('-')) {
            auto n = std::make_shared<ast::Node>();
            n->kind = ast::Node::Kind::Neg;
            n->lhs = parse_unary();
            return n;
        }
        return parse_power();
    }

    ast::NodePtr parse_power() {
        ast::NodePtr base = parse_atom();
        if (eat('^')) return binary(ast::Node::Kind::Pow, base, parse_unary());
        return base;
    }

    ast::NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(base_ + pos_, "unexpected end of expression");
        const char c = src_[pos_];

        if (c == '(') {
            ++pos_;
            ast::NodePtr e = parse_expr();
            if (!eat(')')) throw ParseError(base_ + pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        throw ParseError(base_ + pos_, std::string("unexpected character '") + c + "'");
    }

    ast::NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t probe = pos_ + 1;
            if (probe < src_.size() && (src_[probe] == '+' || src_[probe] == '-')) ++probe;
            if (probe < src_.size() && std::isdigit(static_cast<unsigned char>(src_[probe]))) {
                pos_ = probe;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        const std::string text = src_.substr(start, pos_ - start);
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size())
            throw ParseError(base_ + start, "malformed number '" + text + "'");
        auto n = std::make_shared<ast::Node>();
        n->kind = ast::Node::Kind::Number;
        n->number = value;
        n->literal = text;
        return n;
    }

    ast::NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);

        if (peek() == '(') {
            ++pos_;  // consume '('
            ast::Fn fn;
            if (name == "exp")
                fn = ast::Fn::Exp;
            else if (name == "log")
                fn = ast::Fn::Log;
            else if (name == "sin")
                fn = ast::Fn::Sin;
            else if (name == "cos")
                fn = ast::Fn::Cos;
            else if (name == "sqrt")
                fn = ast::Fn::Sqrt;
            else
                throw ParseError(base_ + start, "unknown function '" + name + "'");
            auto n = std::make_shared<ast::Node>();
            n->kind = ast::Node::Kind::Call;
            n->fn = fn;
            n->lhs = parse_expr();
            if (!eat(')')) throw ParseError(base_ + pos_, "expected ')' after argument");
            return n;
        }

        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == name) {
                auto n = std::make_shared<ast::Node>();
                n->kind = ast::Node::Kind::Variable;
                n->var_index = i;
                return n;
            }
        }
        // default x1..xn naming: a well-formed xK beyond n is an arity problem
        if (default_names_ && name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits)
                throw ArityError("variable '" + name + "' exceeds the system size of " +
                                 std::to_string(vars_.size()));
        }
        throw ParseError(base_ + start, "unknown identifier '" + name + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    std::size_t base_;
    const std::vector<std::string>& vars_;
    bool default_names_;
};

inline std::vector<std::pair<std::string, std::size_t>> split_expressions(
    const std::string& source) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= source.size(); ++i) {
        if (i == source.size() || source[i] == ';') {
            parts.emplace_back(source.substr(begin, i - begin), begin);
            begin = i + 1;
        }
    }
    // allow a trailing ';'
    while (parts.size() > 1) {
        const std::string& tail = parts.back().first;
        if (tail.find_first_not_of(" \t\r\n") != std::string::npos) break;
        parts.pop_back();
    }
    return parts;
}

}  // namespace detail

/// Parse semicolon-separated expressions over explicitly named variables.
/// Expression count must equal the variable count.
inline ParsedSystem parse_expressions(const std::string& source,
                                      const std::vector<std::string>& variables) {
    auto parts = detail::split_expressions(source);
    if (parts.size() != variables.size())
        throw ArityError("system has " + std::to_string(parts.size()) +
                         " expressions but " + std::to_string(variables.size()) +
                         " variables");
    ParsedSystem sys;
    sys.variables = variables;
    const bool default_names = [&] {
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] != "x" + std::to_string(i + 1)) return false;
        return true;
    }();
    for (const auto& [text, offset] : parts)
        sys.equations.push_back(
            detail::ExprParser(text, offset, variables, default_names).parse());
    return sys;
}

/// Parse with default variable names x1..xn, n = number of expressions.
inline ParsedSystem parse_expressions(const std::string& source) {
    const std::size_t n = detail::split_expressions(source).size();
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return parse_expressions(source, vars);
}

/// Build an operator from a parsed system.  The Jacobian comes from one
/// forward-mode dual pass per variable — exact to arithmetic precision.
template <class Real>
OperatorSpec<Real> make_operator(const ParsedSystem& sys) {
    const std::size_t n = sys.variables.size();
    auto equations = std::make_shared<const std::vector<ast::NodePtr>>(sys.equations);

    OperatorSpec<Real> op;
    op.dimension = n;
    op.evaluate = [equations, n](const Vector<Real>& x) -> Vector<Real> {
        if (x.size() != n) throw DomainError("argument dimension mismatch");
        Vector<Real> f(n);
        for (std::size_t i = 0; i < n; ++i)
            f[i] = ast::eval_node<Real, Real>(*(*equations)[i], x);
        return f;
    };
    op.jacobian = [equations, n](const Vector<Real>& x) -> Matrix<Real> {
        if (x.size() != n) throw DomainError("argument dimension mismatch");
        Matrix<Real> jac(n, n);
        std::vector<Dual<Real>> duals(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                duals[k] = Dual<Real>(x[k], Real(k == j ? 1.0 : 0.0));
            for (std::size_t i = 0; i < n; ++i)
                jac(i, j) = ast::eval_node<Dual<Real>, Real>(*(*equations)[i], duals).d;
        }
        return jac;
    };
    return op;
}

/// parse + build in one call (variables x1..xn).
template <class Real>
OperatorSpec<Real> parse_system(const std::string& source) {
    return make_operator<Real>(parse_expressions(source));
}

}  // namespace convball
