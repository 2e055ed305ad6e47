#include "hessjet/exprparse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hessjet/error.hpp"

namespace hj {

namespace {

ExprPtr make_number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Number;
    e->value = v;
    return e;
}

ExprPtr make_node(ExprKind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

struct FunctionName {
    const char* name;
    Function fn;
};

constexpr FunctionName kFunctions[] = {
    {"exp", Function::Exp}, {"log", Function::Log}, {"sin", Function::Sin},
    {"cos", Function::Cos}, {"sqrt", Function::Sqrt},
};

const char* function_name(Function f) {
    for (const auto& entry : kFunctions)
        if (entry.fn == f) return entry.name;
    return "?";
}

// Grammar:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] integer)*
//   primary := number | y1 | y2 | func '(' sum ')' | '(' sum ')'
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr run() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos_, what); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    ExprPtr sum() {
        ExprPtr lhs = product();
        for (;;) {
            if (accept('+')) lhs = make_node(ExprKind::Add, {lhs, product()});
            else if (accept('-')) lhs = make_node(ExprKind::Sub, {lhs, product()});
            else return lhs;
        }
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = make_node(ExprKind::Mul, {lhs, unary()});
            else if (accept('/')) lhs = make_node(ExprKind::Div, {lhs, unary()});
            else return lhs;
        }
    }

    ExprPtr unary() {
        if (accept('-')) return make_node(ExprKind::Neg, {unary()});
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        while (accept('^')) {
            skip_ws();
            bool negative = false;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                negative = true;
                ++pos_;
                skip_ws();
            }
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("exponent must be an integer literal");
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
                pos_ = start;
                fail("exponent must be an integer literal");
            }
            const long v = std::strtol(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
            auto e = std::make_shared<Expr>();
            e->kind = ExprKind::Pow;
            e->exponent = static_cast<int>(negative ? -v : v);
            e->args = {base};
            base = e;
        }
        return base;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string word = s_.substr(start, pos_ - start);
            if (word == "y1" || word == "y2") {
                auto e = std::make_shared<Expr>();
                e->kind = ExprKind::Variable;
                e->variable = word == "y1" ? 1 : 2;
                return e;
            }
            for (const auto& entry : kFunctions) {
                if (word == entry.name) {
                    expect('(');
                    ExprPtr arg = sum();
                    expect(')');
                    auto e = std::make_shared<Expr>();
                    e->kind = ExprKind::Call;
                    e->function = entry.fn;
                    e->args = {arg};
                    return e;
                }
            }
            pos_ = start;
            fail("unknown identifier '" + word + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprPtr number() {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_number(v);
    }
};

// Taylor coefficients f^(k)(a)/k! of a univariate function at a.
std::vector<double> taylor_coefficients(Function f, double a, int n) {
    std::vector<double> t(static_cast<std::size_t>(n + 1), 0.0);
    switch (f) {
        case Function::Exp: {
            const double ea = std::exp(a);
            double fact = 1.0;
            for (int k = 0; k <= n; ++k) {
                if (k > 0) fact *= k;
                t[k] = ea / fact;
            }
            break;
        }
        case Function::Log: {
            if (!(a > 0.0)) throw Error(ErrorCode::DomainError, "log argument is not positive at the base point");
            t[0] = std::log(a);
            double ak = 1.0;
            for (int k = 1; k <= n; ++k) {
                ak *= a;
                t[k] = ((k % 2 == 1) ? 1.0 : -1.0) / (k * ak);
            }
            break;
        }
        case Function::Sin:
        case Function::Cos: {
            // Derivatives cycle through sin, cos, -sin, -cos.
            const double s = std::sin(a), c = std::cos(a);
            const double cyc_sin[4] = {s, c, -s, -c};
            const double cyc_cos[4] = {c, -s, -c, s};
            double fact = 1.0;
            for (int k = 0; k <= n; ++k) {
                if (k > 0) fact *= k;
                t[k] = (f == Function::Sin ? cyc_sin[k % 4] : cyc_cos[k % 4]) / fact;
            }
            break;
        }
        case Function::Sqrt: {
            if (!(a > 0.0)) throw Error(ErrorCode::DomainError, "sqrt argument is not positive at the base point");
            // sqrt(a + h) = sqrt(a) * sum binom(1/2, k) (h/a)^k
            double binom = 1.0;
            double ak = 1.0;
            const double r = std::sqrt(a);
            for (int k = 0; k <= n; ++k) {
                if (k > 0) {
                    binom *= (0.5 - (k - 1)) / k;
                    ak *= a;
                }
                t[k] = r * binom / ak;
            }
            break;
        }
    }
    return t;
}

Jet2 apply_function(Function f, const Jet2& x) {
    const int n = x.order();
    const std::vector<double> t = taylor_coefficients(f, x.constant_term(), n);
    Jet2 h = x;
    h(0, 0) = 0.0;
    Jet2 acc(n);
    for (int k = n; k >= 0; --k) acc = mul(acc, h) + t[k];
    return acc;
}

Jet2 int_power(const Jet2& x, int p) {
    if (p < 0) return reciprocal(int_power(x, -p));
    Jet2 result = Jet2::constant(x.order(), 1.0);
    Jet2 base = x;
    while (p > 0) {
        if (p & 1) result = mul(result, base);
        p >>= 1;
        if (p > 0) base = mul(base, base);
    }
    return result;
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    switch (a.kind) {
        case ExprKind::Number:
            if (a.value != b.value) return false;
            break;
        case ExprKind::Variable:
            if (a.variable != b.variable) return false;
            break;
        case ExprKind::Pow:
            if (a.exponent != b.exponent) return false;
            break;
        case ExprKind::Call:
            if (a.function != b.function) return false;
            break;
        default:
            break;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    return true;
}

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Number: return format_number(e.value);
        case ExprKind::Variable: return e.variable == 1 ? "y1" : "y2";
        case ExprKind::Add: return "(" + print(*e.args[0]) + " + " + print(*e.args[1]) + ")";
        case ExprKind::Sub: return "(" + print(*e.args[0]) + " - " + print(*e.args[1]) + ")";
        case ExprKind::Mul: return "(" + print(*e.args[0]) + " * " + print(*e.args[1]) + ")";
        case ExprKind::Div: return "(" + print(*e.args[0]) + " / " + print(*e.args[1]) + ")";
        case ExprKind::Pow: return "(" + print(*e.args[0]) + "^" + std::to_string(e.exponent) + ")";
        case ExprKind::Neg: return "(-" + print(*e.args[0]) + ")";
        case ExprKind::Call: return std::string(function_name(e.function)) + "(" + print(*e.args[0]) + ")";
    }
    return "";
}

Jet2 eval_jet(const Expr& e, const std::array<double, 2>& base, int order) {
    switch (e.kind) {
        case ExprKind::Number: return Jet2::constant(order, e.value);
        case ExprKind::Variable: {
            Jet2 v = Jet2::variable(order, e.variable);
            v(0, 0) = base[e.variable - 1];
            return v;
        }
        case ExprKind::Add: return eval_jet(*e.args[0], base, order) + eval_jet(*e.args[1], base, order);
        case ExprKind::Sub: return eval_jet(*e.args[0], base, order) - eval_jet(*e.args[1], base, order);
        case ExprKind::Mul: return mul(eval_jet(*e.args[0], base, order), eval_jet(*e.args[1], base, order));
        case ExprKind::Div: return div(eval_jet(*e.args[0], base, order), eval_jet(*e.args[1], base, order));
        case ExprKind::Pow: return int_power(eval_jet(*e.args[0], base, order), e.exponent);
        case ExprKind::Neg: return -eval_jet(*e.args[0], base, order);
        case ExprKind::Call: return apply_function(e.function, eval_jet(*e.args[0], base, order));
    }
    return Jet2(order);
}

double eval(const Expr& e, const std::array<double, 2>& point) {
    switch (e.kind) {
        case ExprKind::Number: return e.value;
        case ExprKind::Variable: return point[e.variable - 1];
        case ExprKind::Add: return eval(*e.args[0], point) + eval(*e.args[1], point);
        case ExprKind::Sub: return eval(*e.args[0], point) - eval(*e.args[1], point);
        case ExprKind::Mul: return eval(*e.args[0], point) * eval(*e.args[1], point);
        case ExprKind::Div: return eval(*e.args[0], point) / eval(*e.args[1], point);
        case ExprKind::Pow: return std::pow(eval(*e.args[0], point), e.exponent);
        case ExprKind::Neg: return -eval(*e.args[0], point);
        case ExprKind::Call: {
            const double a = eval(*e.args[0], point);
            switch (e.function) {
                case Function::Exp: return std::exp(a);
                case Function::Log: return std::log(a);
                case Function::Sin: return std::sin(a);
                case Function::Cos: return std::cos(a);
                case Function::Sqrt: return std::sqrt(a);
            }
        }
    }
    return 0.0;
}

}  // namespace hj
