#include "sharptop/expr.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <vector>

#include "sharptop/errors.hpp"

namespace sharptop {

struct ExprNet::Node {
    Op op;
    Rational constant;                 // Op::Const value or Op::Pow exponent
    int var = -1;                      // Op::Var index
    std::shared_ptr<const Node> a, b;  // children
    int dim = 0;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNet::Node>;
using Op = ExprNet::Op;

NodePtr make(Op op, Rational constant, int var, NodePtr a, NodePtr b) {
    int dim = 0;
    if (op == Op::Var) dim = var + 1;
    if (a) dim = std::max(dim, a->dim);
    if (b) dim = std::max(dim, b->dim);
    return std::make_shared<const ExprNet::Node>(
        ExprNet::Node{op, std::move(constant), var, std::move(a), std::move(b), dim});
}

bool is_const(const NodePtr& n, const Rational& v) {
    return n->op == Op::Const && n->constant == v;
}

NodePtr make_const(Rational v) { return make(Op::Const, std::move(v), -1, nullptr, nullptr); }

// Smart constructors fold constants and drop units so differentiation does
// not balloon the trees.
NodePtr make_add(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->constant + b->constant);
    if (is_const(a, Rational(0))) return b;
    if (is_const(b, Rational(0))) return a;
    return make(Op::Add, Rational(0), -1, std::move(a), std::move(b));
}

NodePtr make_neg(NodePtr a) {
    if (a->op == Op::Const) return make_const(-a->constant);
    if (a->op == Op::Neg) return a->a;
    return make(Op::Neg, Rational(0), -1, std::move(a), nullptr);
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->constant - b->constant);
    if (is_const(b, Rational(0))) return a;
    if (is_const(a, Rational(0))) return make_neg(std::move(b));
    return make(Op::Sub, Rational(0), -1, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) return make_const(a->constant * b->constant);
    if (is_const(a, Rational(0)) || is_const(b, Rational(0))) return make_const(Rational(0));
    if (is_const(a, Rational(1))) return b;
    if (is_const(b, Rational(1))) return a;
    return make(Op::Mul, Rational(0), -1, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_const(a, Rational(0))) return make_const(Rational(0));
    if (is_const(b, Rational(1))) return a;
    if (a->op == Op::Const && b->op == Op::Const && !b->constant.is_zero())
        return make_const(a->constant / b->constant);
    return make(Op::Div, Rational(0), -1, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr base, Rational exponent) {
    if (exponent.is_zero()) return make_const(Rational(1));
    if (exponent == Rational(1)) return base;
    if (base->op == Op::Const && exponent.is_integer() && exponent.num() >= 0 &&
        exponent.num() <= 8)
        return make_const(base->constant.pow(static_cast<int>(exponent.num())));
    return make(Op::Pow, std::move(exponent), -1, std::move(base), nullptr);
}

NodePtr make_unary(Op op, NodePtr a) { return make(op, Rational(0), -1, std::move(a), nullptr); }

NodePtr diff(const NodePtr& n, int axis) {
    switch (n->op) {
    case Op::Const:
    case Op::Eps:
        return make_const(Rational(0));
    case Op::Var:
        return make_const(Rational(n->var == axis ? 1 : 0));
    case Op::Add:
        return make_add(diff(n->a, axis), diff(n->b, axis));
    case Op::Sub:
        return make_sub(diff(n->a, axis), diff(n->b, axis));
    case Op::Neg:
        return make_neg(diff(n->a, axis));
    case Op::Mul:
        return make_add(make_mul(diff(n->a, axis), n->b), make_mul(n->a, diff(n->b, axis)));
    case Op::Div:
        // (a/b)' = a'/b - a b'/b^2
        return make_sub(make_div(diff(n->a, axis), n->b),
                        make_div(make_mul(n->a, diff(n->b, axis)), make_pow(n->b, Rational(2))));
    case Op::Pow:
        return make_mul(make_mul(make_const(n->constant), make_pow(n->a, n->constant - Rational(1))),
                        diff(n->a, axis));
    case Op::Exp:
        return make_mul(make_unary(Op::Exp, n->a), diff(n->a, axis));
    case Op::Log:
        return make_div(diff(n->a, axis), n->a);
    case Op::Sin:
        return make_mul(make_unary(Op::Cos, n->a), diff(n->a, axis));
    case Op::Cos:
        return make_neg(make_mul(make_unary(Op::Sin, n->a), diff(n->a, axis)));
    }
    throw InvariantError("unreachable expression op");
}

double eval_node(const ExprNet::Node& n, std::span<const double> x, double eps) {
    switch (n.op) {
    case Op::Const:
        return n.constant.to_double();
    case Op::Var:
        return n.var < static_cast<int>(x.size()) ? x[static_cast<std::size_t>(n.var)]
                                                  : std::numeric_limits<double>::quiet_NaN();
    case Op::Eps:
        return eps;
    case Op::Add:
        return eval_node(*n.a, x, eps) + eval_node(*n.b, x, eps);
    case Op::Sub:
        return eval_node(*n.a, x, eps) - eval_node(*n.b, x, eps);
    case Op::Neg:
        return -eval_node(*n.a, x, eps);
    case Op::Mul:
        return eval_node(*n.a, x, eps) * eval_node(*n.b, x, eps);
    case Op::Div:
        return eval_node(*n.a, x, eps) / eval_node(*n.b, x, eps);
    case Op::Pow:
        return std::pow(eval_node(*n.a, x, eps), n.constant.to_double());
    case Op::Exp:
        return std::exp(eval_node(*n.a, x, eps));
    case Op::Log:
        return std::log(eval_node(*n.a, x, eps));
    case Op::Sin:
        return std::sin(eval_node(*n.a, x, eps));
    case Op::Cos:
        return std::cos(eval_node(*n.a, x, eps));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

bool equal_nodes(const ExprNet::Node& a, const ExprNet::Node& b) {
    if (a.op != b.op || a.var != b.var || !(a.constant == b.constant)) return false;
    if (static_cast<bool>(a.a) != static_cast<bool>(b.a)) return false;
    if (static_cast<bool>(a.b) != static_cast<bool>(b.b)) return false;
    if (a.a && !equal_nodes(*a.a, *b.a)) return false;
    if (a.b && !equal_nodes(*a.b, *b.b)) return false;
    return true;
}

void print_node(const ExprNet::Node& n, std::string& out) {
    switch (n.op) {
    case Op::Const:
        out += n.constant.str();
        return;
    case Op::Var:
        out += "x" + std::to_string(n.var);
        return;
    case Op::Eps:
        out += "eps";
        return;
    case Op::Pow:
        out += "(pow ";
        print_node(*n.a, out);
        out += " " + n.constant.str() + ")";
        return;
    default:
        break;
    }
    static const char* names[] = {"", "", "", "add", "sub", "mul", "div", "neg",
                                  "", "exp", "log", "sin", "cos"};
    out += "(";
    out += names[static_cast<int>(n.op)];
    out += " ";
    print_node(*n.a, out);
    if (n.b) {
        out += " ";
        print_node(*n.b, out);
    }
    out += ")";
}

struct SexprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    std::string_view token() {
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == start) fail("expected token");
        return text.substr(start, pos - start);
    }

    Rational number() {
        std::size_t at = pos;
        std::string_view t = token();
        try {
            return Rational::parse(t);
        } catch (const ParseError& e) {
            throw ParseError("bad rational literal '" + std::string(t) + "': " + e.what(), at);
        }
    }

    NodePtr atom(std::string_view t, std::size_t at) {
        if (t == "eps") return make(Op::Eps, Rational(0), -1, nullptr, nullptr);
        if (t.size() >= 2 && t[0] == 'x' && std::isdigit(static_cast<unsigned char>(t[1]))) {
            int idx = 0;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(t[i])))
                    throw ParseError("bad variable name", at);
                idx = idx * 10 + (t[i] - '0');
            }
            return make(Op::Var, Rational(0), idx, nullptr, nullptr);
        }
        try {
            return make_const(Rational::parse(t));
        } catch (const ParseError&) {
            throw ParseError("unknown atom '" + std::string(t) + "'", at);
        }
    }

    NodePtr expr() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] != '(') {
            std::size_t at = pos;
            return atom(token(), at);
        }
        ++pos; // '('
        skip_ws();
        std::size_t at = pos;
        std::string_view head = token();
        NodePtr result;
        if (head == "add" || head == "sub" || head == "mul" || head == "div") {
            NodePtr a = expr();
            NodePtr b = expr();
            if (head == "add") result = make_add(a, b);
            else if (head == "sub") result = make_sub(a, b);
            else if (head == "mul") result = make_mul(a, b);
            else result = make_div(a, b);
        } else if (head == "neg" || head == "exp" || head == "log" || head == "sin" ||
                   head == "cos") {
            NodePtr a = expr();
            if (head == "neg") result = make_neg(a);
            else if (head == "exp") result = make_unary(Op::Exp, a);
            else if (head == "log") result = make_unary(Op::Log, a);
            else if (head == "sin") result = make_unary(Op::Sin, a);
            else result = make_unary(Op::Cos, a);
        } else if (head == "pow") {
            NodePtr base = expr();
            skip_ws();
            Rational exponent = number();
            result = make_pow(base, exponent);
        } else {
            throw ParseError("unknown operator '" + std::string(head) + "'", at);
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        return result;
    }
};

} // namespace

ExprNet ExprNet::constant(Rational value) { return ExprNet(make_const(std::move(value))); }
ExprNet ExprNet::var(int index) {
    if (index < 0) throw InvariantError("variable index must be nonnegative");
    return ExprNet(make(Op::Var, Rational(0), index, nullptr, nullptr));
}
ExprNet ExprNet::eps() { return ExprNet(make(Op::Eps, Rational(0), -1, nullptr, nullptr)); }

ExprNet operator+(const ExprNet& a, const ExprNet& b) { return ExprNet(make_add(a.node_, b.node_)); }
ExprNet operator-(const ExprNet& a, const ExprNet& b) { return ExprNet(make_sub(a.node_, b.node_)); }
ExprNet operator-(const ExprNet& a) { return ExprNet(make_neg(a.node_)); }
ExprNet operator*(const ExprNet& a, const ExprNet& b) { return ExprNet(make_mul(a.node_, b.node_)); }
ExprNet operator/(const ExprNet& a, const ExprNet& b) { return ExprNet(make_div(a.node_, b.node_)); }
ExprNet ExprNet::pow(const ExprNet& base, Rational exponent) {
    return ExprNet(make_pow(base.node_, std::move(exponent)));
}
ExprNet ExprNet::exp(const ExprNet& a) { return ExprNet(make_unary(Op::Exp, a.node_)); }
ExprNet ExprNet::log(const ExprNet& a) { return ExprNet(make_unary(Op::Log, a.node_)); }
ExprNet ExprNet::sin(const ExprNet& a) { return ExprNet(make_unary(Op::Sin, a.node_)); }
ExprNet ExprNet::cos(const ExprNet& a) { return ExprNet(make_unary(Op::Cos, a.node_)); }

ExprNet::Op ExprNet::op() const noexcept { return node_->op; }

const Rational& ExprNet::constant_value() const {
    if (node_->op != Op::Const) throw InvariantError("not a constant expression");
    return node_->constant;
}

int ExprNet::dim() const noexcept { return node_->dim; }

ExprNet ExprNet::differentiate(int axis) const {
    if (axis < 0) throw InvariantError("derivative axis must be nonnegative");
    return ExprNet(diff(node_, axis));
}

double ExprNet::eval(std::span<const double> x, double eps_value) const {
    return eval_node(*node_, x, eps_value);
}

std::string ExprNet::to_sexpr() const {
    std::string out;
    print_node(*node_, out);
    return out;
}

ExprNet ExprNet::parse_sexpr(std::string_view text) {
    SexprParser parser{text};
    NodePtr root = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ParseError("trailing characters after expression", parser.pos);
    return ExprNet(std::move(root));
}

bool operator==(const ExprNet& a, const ExprNet& b) { return equal_nodes(*a.node_, *b.node_); }

} // namespace sharptop
