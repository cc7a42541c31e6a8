#include "adm/expr.hpp"

#include "adm/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace adm {

struct Node {
    NodeKind kind;
    double value = 0.0;
    int int_exponent = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

std::shared_ptr<const Node> make_node(NodeKind kind, std::shared_ptr<const Node> lhs = nullptr,
                                      std::shared_ptr<const Node> rhs = nullptr, double value = 0.0,
                                      int int_exponent = 0) {
    return std::make_shared<const Node>(Node{kind, value, int_exponent, std::move(lhs), std::move(rhs)});
}

bool same_tree(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case NodeKind::Constant:
    case NodeKind::PowXReal: return a->value == b->value;
    case NodeKind::PowInt:
        return a->int_exponent == b->int_exponent && same_tree(a->lhs.get(), b->lhs.get());
    default: return same_tree(a->lhs.get(), b->lhs.get()) && same_tree(a->rhs.get(), b->rhs.get());
    }
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse_all() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::SyntaxError) const {
        throw Error(code, what + " at position " + std::to_string(pos_), std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr parse_sum() {
        Expr lhs = parse_product();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::add(lhs, parse_product());
            } else if (accept('-')) {
                lhs = Expr::sub(lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    Expr parse_product() {
        Expr lhs = parse_power();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::mul(lhs, parse_power());
            } else if (accept('/')) {
                lhs = Expr::div(lhs, parse_power());
            } else {
                return lhs;
            }
        }
    }

    Expr parse_power() {
        bool bare_x = false;
        Expr base = parse_unary(bare_x);
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t literal_pos = pos_;
        std::string literal = scan_signed_number();
        if (literal.empty()) fail("exponent must be a numeric literal", ErrorCode::UnsupportedPower);
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            fail("exponent must be a numeric literal", ErrorCode::UnsupportedPower);
        }
        if (bare_x) return Expr::pow_x(std::strtod(literal.c_str(), nullptr));

        const bool integral = literal.find_first_of(".eE") == std::string::npos;
        int k = 0;
        const char* first = literal.data() + (literal[0] == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(first, literal.data() + literal.size(), k);
        if (!integral || ec != std::errc{} || ptr != literal.data() + literal.size()) {
            pos_ = literal_pos;
            fail("non-integer exponent '" + literal + "' on a base other than x", ErrorCode::UnsupportedPower);
        }
        return Expr::pow_int(base, k);
    }

    Expr parse_unary(bool& bare_x) {
        if (accept('-')) {
            bool ignored = false;
            return Expr::neg(parse_unary(ignored));
        }
        return parse_primary(bare_x);
    }

    Expr parse_primary(bool& bare_x) {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string literal = scan_number();
            if (literal.empty()) fail("malformed number");
            return Expr::constant(std::strtod(literal.c_str(), nullptr));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view ident = src_.substr(start, pos_ - start);
            if (ident == "x") {
                bare_x = true;
                return Expr::var_x();
            }
            if (ident == "y") return Expr::var_y();
            if (ident == "yp") return Expr::var_yp();
            if (ident == "exp" || ident == "ln") {
                expect('(');
                Expr arg = parse_sum();
                expect(')');
                return ident == "exp" ? Expr::exp(arg) : Expr::ln(arg);
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(ident) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string scan_signed_number() {
        std::string sign;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
            sign = src_[pos_] == '-' ? "-" : "+";
            ++pos_;
        }
        std::string digits = scan_number();
        return digits.empty() ? std::string{} : sign + digits;
    }

    // digits [. digits] [(e|E) [+-] digits]
    std::string scan_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            pos_ = start;
            return {};
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = mark;
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string format_literal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print(const Node& n, std::string& out) {
    switch (n.kind) {
    case NodeKind::Constant: out += format_literal(n.value); return;
    case NodeKind::VarX: out += 'x'; return;
    case NodeKind::VarY: out += 'y'; return;
    case NodeKind::VarYp: out += "yp"; return;
    case NodeKind::PowXReal:
        out += "(x^";
        out += format_literal(n.value);
        out += ')';
        return;
    case NodeKind::PowInt:
        out += '(';
        if (n.lhs->kind == NodeKind::VarX) {
            out += "(x)";
        } else {
            print(*n.lhs, out);
        }
        out += '^';
        out += std::to_string(n.int_exponent);
        out += ')';
        return;
    case NodeKind::Neg:
        out += "(-";
        print(*n.lhs, out);
        out += ')';
        return;
    case NodeKind::Exp:
    case NodeKind::Ln:
        out += n.kind == NodeKind::Exp ? "exp(" : "ln(";
        print(*n.lhs, out);
        out += ')';
        return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
        static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
        out += '(';
        print(*n.lhs, out);
        out += ops[static_cast<int>(n.kind) - static_cast<int>(NodeKind::Add)];
        print(*n.rhs, out);
        out += ')';
        return;
    }
    }
}

double eval_node(const Node& n, double x, double y, double yp) {
    switch (n.kind) {
    case NodeKind::Constant: return n.value;
    case NodeKind::VarX: return x;
    case NodeKind::VarY: return y;
    case NodeKind::VarYp: return yp;
    case NodeKind::Neg: return -eval_node(*n.lhs, x, y, yp);
    case NodeKind::Add: return eval_node(*n.lhs, x, y, yp) + eval_node(*n.rhs, x, y, yp);
    case NodeKind::Sub: return eval_node(*n.lhs, x, y, yp) - eval_node(*n.rhs, x, y, yp);
    case NodeKind::Mul: return eval_node(*n.lhs, x, y, yp) * eval_node(*n.rhs, x, y, yp);
    case NodeKind::Div: {
        const double num = eval_node(*n.lhs, x, y, yp);
        const double den = eval_node(*n.rhs, x, y, yp);
        if (den == 0.0) throw Error(ErrorCode::DivisionByZero, "division by zero");
        return num / den;
    }
    case NodeKind::PowInt: {
        const double b = eval_node(*n.lhs, x, y, yp);
        if (b == 0.0 && n.int_exponent < 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
        return std::pow(b, n.int_exponent);
    }
    case NodeKind::PowXReal:
        if (x == 0.0 && n.value < 0.0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
        if (x < 0.0 && n.value != std::round(n.value)) {
            throw Error(ErrorCode::DomainError, "negative x to a fractional power");
        }
        return std::pow(x, n.value);
    case NodeKind::Exp: return std::exp(eval_node(*n.lhs, x, y, yp));
    case NodeKind::Ln: {
        const double v = eval_node(*n.lhs, x, y, yp);
        if (!(v > 0.0)) throw Error(ErrorCode::LogOfNonPositive, "ln of " + std::to_string(v));
        return std::log(v);
    }
    }
    return 0.0;
}

struct LambdaEvaluator {
    const LambdaSeries& y;
    const LambdaSeries& yp;
    const LambdaEvalOptions& options;

    std::size_t order() const { return y.order(); }

    LambdaSeries eval(const Node& n) const {
        const std::size_t cap = options.term_cap;
        switch (n.kind) {
        case NodeKind::Constant: return LambdaSeries::constant(order(), GPSeries::constant(n.value));
        case NodeKind::VarX: return LambdaSeries::constant(order(), GPSeries::monomial(1.0, 1.0));
        case NodeKind::PowXReal: return LambdaSeries::constant(order(), GPSeries::monomial(1.0, n.value));
        case NodeKind::VarY: return y;
        case NodeKind::VarYp: return yp;
        case NodeKind::Neg: return ring_neg(eval(*n.lhs));
        case NodeKind::Add: return ring_add(eval(*n.lhs), eval(*n.rhs));
        case NodeKind::Sub: return ring_sub(eval(*n.lhs), eval(*n.rhs));
        case NodeKind::Mul: return guarded(n, [&] { return ring_mul(eval(*n.lhs), eval(*n.rhs), cap); });
        case NodeKind::Div: {
            LambdaSeries num = eval(*n.lhs);
            LambdaSeries den = eval(*n.rhs);
            return guarded(n, [&] { return ring_mul(num, ring_recip(den, cap), cap); });
        }
        case NodeKind::PowInt: {
            LambdaSeries base = eval(*n.lhs);
            return guarded(n, [&] { return ring_powi(base, n.int_exponent, cap); });
        }
        case NodeKind::Exp: {
            LambdaSeries arg = eval(*n.lhs);
            return guarded(n, [&] { return ring_exp(arg, cap); });
        }
        case NodeKind::Ln: {
            LambdaSeries arg = eval(*n.lhs);
            return guarded(n, [&] { return ring_ln(arg, cap); });
        }
        }
        return LambdaSeries(order());
    }

    template <typename F>
    static LambdaSeries guarded(const Node& n, F&& op) {
        try {
            return op();
        } catch (const Error& err) {
            std::string where;
            print(n, where);
            throw err.with_context("in '" + where + "'");
        }
    }
};

void collect_vars(const Node& n, std::set<Variable>& out) {
    switch (n.kind) {
    case NodeKind::VarX:
    case NodeKind::PowXReal: out.insert(Variable::X); return;
    case NodeKind::VarY: out.insert(Variable::Y); return;
    case NodeKind::VarYp: out.insert(Variable::Yp); return;
    case NodeKind::Constant: return;
    default:
        if (n.lhs) collect_vars(*n.lhs, out);
        if (n.rhs) collect_vars(*n.rhs, out);
    }
}

} // namespace

Expr Expr::constant(double value) { return Expr(make_node(NodeKind::Constant, nullptr, nullptr, value)); }
Expr Expr::var_x() { return Expr(make_node(NodeKind::VarX)); }
Expr Expr::var_y() { return Expr(make_node(NodeKind::VarY)); }
Expr Expr::var_yp() { return Expr(make_node(NodeKind::VarYp)); }
Expr Expr::neg(Expr a) { return Expr(make_node(NodeKind::Neg, std::move(a.node_))); }
Expr Expr::add(Expr a, Expr b) { return Expr(make_node(NodeKind::Add, std::move(a.node_), std::move(b.node_))); }
Expr Expr::sub(Expr a, Expr b) { return Expr(make_node(NodeKind::Sub, std::move(a.node_), std::move(b.node_))); }
Expr Expr::mul(Expr a, Expr b) { return Expr(make_node(NodeKind::Mul, std::move(a.node_), std::move(b.node_))); }
Expr Expr::div(Expr a, Expr b) { return Expr(make_node(NodeKind::Div, std::move(a.node_), std::move(b.node_))); }
Expr Expr::pow_int(Expr base, int exponent) {
    return Expr(make_node(NodeKind::PowInt, std::move(base.node_), nullptr, 0.0, exponent));
}
Expr Expr::pow_x(double exponent) { return Expr(make_node(NodeKind::PowXReal, nullptr, nullptr, exponent)); }
Expr Expr::exp(Expr a) { return Expr(make_node(NodeKind::Exp, std::move(a.node_))); }
Expr Expr::ln(Expr a) { return Expr(make_node(NodeKind::Ln, std::move(a.node_))); }

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
int Expr::int_exponent() const noexcept { return node_->int_exponent; }

Expr Expr::child(std::size_t i) const {
    const auto& c = i == 0 ? node_->lhs : node_->rhs;
    if (!c) throw Error(ErrorCode::OutOfRange, "expression node has no operand " + std::to_string(i));
    return Expr(c);
}

bool operator==(const Expr& a, const Expr& b) { return same_tree(a.node_.get(), b.node_.get()); }

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

struct ExprAccess {
    static const Node& node(const Expr& e) { return *e.node_; }
};

std::string to_string(const Expr& e) {
    std::string out;
    print(ExprAccess::node(e), out);
    return out;
}

double eval_real(const Expr& e, double x, double y, double yp) { return eval_node(ExprAccess::node(e), x, y, yp); }

LambdaSeries eval_lambda(const Expr& e, const LambdaSeries& y, const LambdaSeries& yp,
                         const LambdaEvalOptions& options) {
    if (y.order() != yp.order()) {
        throw Error(ErrorCode::OrderMismatch, "y and yp lambda-series have different orders");
    }
    return LambdaEvaluator{y, yp, options}.eval(ExprAccess::node(e));
}

std::set<Variable> free_vars(const Expr& e) {
    std::set<Variable> out;
    collect_vars(ExprAccess::node(e), out);
    return out;
}

} // namespace adm
