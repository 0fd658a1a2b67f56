#include "cvschmidt/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace cvschmidt {

namespace {

enum class Op { Num, VarP, VarQ, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Fn { Exp, Sin, Cos, Sinc, Sqrt, Abs };

constexpr std::array<std::pair<std::string_view, Fn>, 6> kFunctions{{
    {"exp", Fn::Exp},
    {"sin", Fn::Sin},
    {"cos", Fn::Cos},
    {"sinc", Fn::Sinc},
    {"sqrt", Fn::Sqrt},
    {"abs", Fn::Abs},
}};

std::string_view fn_name(Fn f) {
    for (const auto& [name, fn] : kFunctions)
        if (fn == f) return name;
    return "?";
}

}  // namespace

struct Expression::Node {
    Op op;
    double value = 0.0;  // Num
    Fn fn = Fn::Exp;     // Call
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_num(double value) {
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::Num;
    n->value = value;
    return n;
}

NodePtr make_call(Fn fn, NodePtr arg) {
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::Call;
    n->fn = fn;
    n->lhs = std::move(arg);
    return n;
}

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string_view text;
    size_t offset;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const size_t at = pos_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::End, {}, at};
            return;
        }
        const char c = src_[pos_];
        auto single = [&](Token::Kind k) {
            ++pos_;
            tok_ = {k, src_.substr(at, 1), at};
        };
        switch (c) {
            case '+': return single(Token::Plus);
            case '-': return single(Token::Minus);
            case '*': return single(Token::Star);
            case '/': return single(Token::Slash);
            case '^': return single(Token::Caret);
            case '(': return single(Token::LParen);
            case ')': return single(Token::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                size_t e = pos_ + 1;
                if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
                if (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) {
                    pos_ = e;
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                        ++pos_;
                }
            }
            tok_ = {Token::Number, src_.substr(at, pos_ - at), at};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, src_.substr(at, pos_ - at), at};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    std::string_view src_;
    size_t pos_ = 0;
    Token tok_{};
};

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr run() {
        NodePtr e = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End) throw ParseError("unexpected trailing input", t.offset);
        return e;
    }

  private:
    NodePtr expr() {
        NodePtr lhs = term();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Plus || t.kind == Token::Minus) {
                lex_.next();
                lhs = make(t.kind == Token::Plus ? Op::Add : Op::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Star || t.kind == Token::Slash) {
                lex_.next();
                lhs = make(t.kind == Token::Star ? Op::Mul : Op::Div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Minus) {
            lex_.next();
            return make(Op::Neg, factor());
        }
        if (t.kind == Token::Plus) {
            lex_.next();
            return factor();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.next();
            return make(Op::Pow, base, factor());  // right-associative, signed exponents
        }
        return base;
    }

    NodePtr atom() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Token::Number: {
                const std::string text(t.text);
                char* end = nullptr;
                const double v = std::strtod(text.c_str(), &end);
                if (end != text.c_str() + text.size())
                    throw ParseError("malformed number '" + text + "'", t.offset);
                return make_num(v);
            }
            case Token::Ident: {
                if (t.text == "p") return make(Op::VarP);
                if (t.text == "q") return make(Op::VarQ);
                for (const auto& [name, fn] : kFunctions) {
                    if (t.text == name) {
                        expect(Token::LParen, "expected '(' after function name");
                        NodePtr arg = expr();
                        expect(Token::RParen, "expected ')'");
                        return make_call(fn, std::move(arg));
                    }
                }
                throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.offset);
            }
            case Token::LParen: {
                NodePtr e = expr();
                expect(Token::RParen, "expected ')'");
                return e;
            }
            case Token::End:
                throw ParseError("unexpected end of input", t.offset);
            default:
                throw ParseError("unexpected token '" + std::string(t.text) + "'", t.offset);
        }
    }

    void expect(Token::Kind k, const char* msg) {
        const Token t = lex_.next();
        if (t.kind != k) throw ParseError(msg, t.offset);
    }

    Lexer lex_;
};

double eval_node(const Expression::Node& n, double p, double q) {
    switch (n.op) {
        case Op::Num: return n.value;
        case Op::VarP: return p;
        case Op::VarQ: return q;
        case Op::Neg: return -eval_node(*n.lhs, p, q);
        case Op::Add: return eval_node(*n.lhs, p, q) + eval_node(*n.rhs, p, q);
        case Op::Sub: return eval_node(*n.lhs, p, q) - eval_node(*n.rhs, p, q);
        case Op::Mul: return eval_node(*n.lhs, p, q) * eval_node(*n.rhs, p, q);
        case Op::Div: {
            const double d = eval_node(*n.rhs, p, q);
            if (d == 0.0) throw NumericalError("expression: division by zero");
            return eval_node(*n.lhs, p, q) / d;
        }
        case Op::Pow: return std::pow(eval_node(*n.lhs, p, q), eval_node(*n.rhs, p, q));
        case Op::Call: {
            const double a = eval_node(*n.lhs, p, q);
            switch (n.fn) {
                case Fn::Exp: return std::exp(a);
                case Fn::Sin: return std::sin(a);
                case Fn::Cos: return std::cos(a);
                case Fn::Sinc: return sinc(a);
                case Fn::Sqrt: return std::sqrt(a);
                case Fn::Abs: return std::abs(a);
            }
            return 0.0;
        }
    }
    return 0.0;
}

int precedence(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        default: return 5;  // atoms
    }
}

void render(const Expression::Node& n, std::string& out) {
    auto child = [&out](const Expression::Node& c, int min_prec) {
        const bool parens = precedence(c.op) < min_prec;
        if (parens) out += '(';
        render(c, out);
        if (parens) out += ')';
    };
    switch (n.op) {
        case Op::Num: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            return;
        }
        case Op::VarP: out += 'p'; return;
        case Op::VarQ: out += 'q'; return;
        case Op::Neg:
            out += '-';
            child(*n.lhs, 3);
            return;
        case Op::Add:
        case Op::Sub:
            child(*n.lhs, 1);
            out += n.op == Op::Add ? '+' : '-';
            child(*n.rhs, 2);  // right operand of '-' must not swallow a sum
            return;
        case Op::Mul:
        case Op::Div:
            child(*n.lhs, 2);
            out += n.op == Op::Mul ? '*' : '/';
            child(*n.rhs, 3);
            return;
        case Op::Pow:
            child(*n.lhs, 5);  // any compound base needs parens
            out += '^';
            child(*n.rhs, 3);  // signed exponents reparse via the factor rule
            return;
        case Op::Call:
            out += fn_name(n.fn);
            out += '(';
            render(*n.lhs, out);
            out += ')';
            return;
    }
}

}  // namespace

Expression Expression::parse(std::string_view src) {
    Parser parser(src);
    return Expression(parser.run());
}

double Expression::eval(double p, double q) const { return eval_node(*root_, p, q); }

std::string Expression::str() const {
    std::string out;
    render(*root_, out);
    return out;
}

Amplitude Expression::as_amplitude() const {
    Amplitude amp;
    amp.evaluate = [root = root_](double p, double q) {
        return Complex(eval_node(*root, p, q), 0.0);
    };
    amp.label = str();
    return amp;
}

Amplitude parse_expression(std::string_view src) {
    Amplitude amp = Expression::parse(src).as_amplitude();
    amp.label = std::string(src);
    return amp;
}

}  // namespace cvschmidt
