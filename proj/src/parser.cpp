#include <algorithm>
#include <cctype>
#include <climits>
#include <utility>

#include "qweyl/error.hpp"
#include "qweyl/expr.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

namespace {

struct Token {
    enum class Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;     // 1-based
    std::string text;    // Name
    mpz_class value;     // Int
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_ + 1;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = s_[i_];
        switch (c) {
            case '+': tok_.kind = Token::Kind::Plus; ++i_; return;
            case '-': tok_.kind = Token::Kind::Minus; ++i_; return;
            case '*': tok_.kind = Token::Kind::Star; ++i_; return;
            case '/': tok_.kind = Token::Kind::Slash; ++i_; return;
            case '^': tok_.kind = Token::Kind::Caret; ++i_; return;
            case '(': tok_.kind = Token::Kind::LParen; ++i_; return;
            case ')': tok_.kind = Token::Kind::RParen; ++i_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Kind::Int;
            tok_.value = mpz_class(s_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.kind = Token::Kind::Name;
            tok_.text = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_ + 1);
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, VarCtxPtr ctx, int n, bool allow_generators)
        : lex_(text), ctx_(std::move(ctx)), n_(n), allow_generators_(allow_generators) {}

    FreeExpr parse() {
        FreeExpr e = parse_expr_level();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input", t.pos, "end of input");
        return e;
    }

private:
    FreeExpr parse_expr_level() {
        FreeExpr e = parse_term();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Plus) {
                lex_.take();
                e = make_add(e, parse_term());
            } else if (t.kind == Token::Kind::Minus) {
                lex_.take();
                e = make_sub(e, parse_term());
            } else {
                return e;
            }
        }
    }

    FreeExpr parse_term() {
        bool negated = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negated = true;
        }
        FreeExpr e = parse_factor();
        for (;;) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::Star) {
                lex_.take();
                e = make_mul(e, parse_factor());
            } else if (t.kind == Token::Kind::Slash) {
                lex_.take();
                std::size_t dpos = lex_.peek().pos;
                FreeExpr d = parse_factor();
                if (!is_scalar_subtree(d))
                    throw ParseError("divisor is not a scalar expression", dpos);
                e = make_mul(e, make_pow(d, -1));
            } else {
                break;
            }
        }
        return negated ? make_neg(e) : e;
    }

    FreeExpr parse_factor() {
        FreeExpr base = parse_atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        lex_.take();
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::Kind::Int)
            throw ParseError("expected integer exponent", t.pos, "integer");
        if (!t.value.fits_slong_p() || t.value.get_si() > 1000000)
            throw ParseError("exponent too large", t.pos);
        long e = t.value.get_si();
        if (neg) e = -e;
        if (e < 0 && !is_scalar_subtree(base))
            throw ParseError("negative power of a non-scalar expression", t.pos);
        return make_pow(base, e);
    }

    FreeExpr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Int:
                return make_scalar(Scalar::rational(mpq_class(t.value), ctx_));
            case Token::Kind::Name:
                return atom_from_name(t);
            case Token::Kind::LParen: {
                FreeExpr e = parse_expr_level();
                Token r = lex_.take();
                if (r.kind != Token::Kind::RParen)
                    throw ParseError("expected ')'", r.pos, ")");
                return e;
            }
            case Token::Kind::End:
                throw ParseError("expected operand", t.pos, "operand");
            default:
                throw ParseError("expected operand", t.pos, "operand");
        }
    }

    FreeExpr atom_from_name(const Token& t) {
        if (VarContext::reserved_name(t.text)) {
            if (!allow_generators_)
                throw ParseError("generator '" + t.text + "' not allowed in a scalar expression",
                                 t.pos);
            long idx = std::stol(t.text.substr(1));
            if (idx < 1 || idx > n_)
                throw ParseError("generator index " + std::to_string(idx) + " exceeds n=" +
                                     std::to_string(n_),
                                 t.pos);
            GeneratorRef g{t.text[0] == 'x' ? GeneratorRef::Kind::X : GeneratorRef::Kind::Y,
                           static_cast<int>(idx)};
            return make_gen(g);
        }
        auto vi = ctx_->index_of(t.text);
        if (!vi) throw ParseError("unknown indeterminate '" + t.text + "'", t.pos);
        return make_scalar(Scalar::indeterminate(*vi, ctx_));
    }

    Lexer lex_;
    VarCtxPtr ctx_;
    int n_;
    bool allow_generators_;
};

Scalar eval_scalar(const FreeExpr& e) {
    switch (e->tag) {
        case ExprNode::Tag::Scalar: return e->scalar;
        case ExprNode::Tag::Neg: return -eval_scalar(e->a);
        case ExprNode::Tag::Add: return eval_scalar(e->a) + eval_scalar(e->b);
        case ExprNode::Tag::Sub: return eval_scalar(e->a) - eval_scalar(e->b);
        case ExprNode::Tag::Mul: return eval_scalar(e->a) * eval_scalar(e->b);
        case ExprNode::Tag::Pow: return eval_scalar(e->a).pow(e->exponent);
        case ExprNode::Tag::Gen: break;
    }
    throw DomainError("generator in scalar expression");
}

// Printing precedence levels; a node is parenthesized when its level is
// below the minimum its position requires.
constexpr int kPrecAdd = 10;
constexpr int kPrecNeg = 20;
constexpr int kPrecMul = 30;
constexpr int kPrecPow = 40;
constexpr int kPrecAtom = 50;

// A scalar that prints as a single token: a nonnegative integer or one
// bare indeterminate.  Anything else is parenthesized.
bool atomic_scalar(const Scalar& s) {
    if (!s.den().is_one()) return false;
    if (s.num().is_zero()) return true;
    if (s.num().terms().size() != 1) return false;
    const auto& t = *s.num().terms().begin();
    unsigned nz = 0, maxe = 0;
    for (unsigned x : t.first) {
        nz += (x > 0) ? 1 : 0;
        maxe = std::max(maxe, x);
    }
    if (nz == 0) return sgn(t.second) > 0 && t.second.get_den() == 1;
    return nz == 1 && maxe == 1 && t.second == 1;
}

int node_prec(const FreeExpr& e) {
    switch (e->tag) {
        case ExprNode::Tag::Add:
        case ExprNode::Tag::Sub: return kPrecAdd;
        case ExprNode::Tag::Neg: return kPrecNeg;
        case ExprNode::Tag::Mul: return kPrecMul;
        case ExprNode::Tag::Pow: return kPrecPow;
        default: return kPrecAtom;
    }
}

std::string print_node(const FreeExpr& e, int min_prec) {
    std::string s;
    switch (e->tag) {
        case ExprNode::Tag::Scalar:
            s = atomic_scalar(e->scalar) ? e->scalar.to_string()
                                         : "(" + e->scalar.to_string() + ")";
            return s;
        case ExprNode::Tag::Gen: return e->gen.name();
        case ExprNode::Tag::Neg: s = "-" + print_node(e->a, kPrecMul); break;
        case ExprNode::Tag::Add:
            s = print_node(e->a, kPrecAdd) + " + " + print_node(e->b, kPrecNeg);
            break;
        case ExprNode::Tag::Sub:
            s = print_node(e->a, kPrecAdd) + " - " + print_node(e->b, kPrecNeg);
            break;
        case ExprNode::Tag::Mul:
            s = print_node(e->a, kPrecMul) + "*" + print_node(e->b, kPrecPow);
            break;
        case ExprNode::Tag::Pow:
            s = print_node(e->a, kPrecAtom) + "^" + std::to_string(e->exponent);
            break;
    }
    if (node_prec(e) < min_prec) s = "(" + s + ")";
    return s;
}

}  // namespace

FreeExpr make_scalar(Scalar s) {
    auto n = std::make_shared<ExprNode>();
    n->tag = ExprNode::Tag::Scalar;
    n->scalar = std::move(s);
    return n;
}

FreeExpr make_gen(GeneratorRef g) {
    auto n = std::make_shared<ExprNode>();
    n->tag = ExprNode::Tag::Gen;
    n->gen = g;
    return n;
}

FreeExpr make_neg(FreeExpr e) {
    auto n = std::make_shared<ExprNode>();
    n->tag = ExprNode::Tag::Neg;
    n->a = std::move(e);
    return n;
}

static FreeExpr make_binary(ExprNode::Tag tag, FreeExpr a, FreeExpr b) {
    auto n = std::make_shared<ExprNode>();
    n->tag = tag;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

FreeExpr make_add(FreeExpr a, FreeExpr b) { return make_binary(ExprNode::Tag::Add, std::move(a), std::move(b)); }
FreeExpr make_sub(FreeExpr a, FreeExpr b) { return make_binary(ExprNode::Tag::Sub, std::move(a), std::move(b)); }
FreeExpr make_mul(FreeExpr a, FreeExpr b) { return make_binary(ExprNode::Tag::Mul, std::move(a), std::move(b)); }

FreeExpr make_pow(FreeExpr base, long exponent) {
    auto n = std::make_shared<ExprNode>();
    n->tag = ExprNode::Tag::Pow;
    n->a = std::move(base);
    n->exponent = exponent;
    return n;
}

bool is_scalar_subtree(const FreeExpr& e) {
    switch (e->tag) {
        case ExprNode::Tag::Scalar: return true;
        case ExprNode::Tag::Gen: return false;
        case ExprNode::Tag::Neg: return is_scalar_subtree(e->a);
        case ExprNode::Tag::Pow: return is_scalar_subtree(e->a);
        default: return is_scalar_subtree(e->a) && is_scalar_subtree(e->b);
    }
}

bool structural_equal(const FreeExpr& a, const FreeExpr& b) {
    if (a->tag != b->tag) return false;
    switch (a->tag) {
        case ExprNode::Tag::Scalar: return a->scalar.eq(b->scalar);
        case ExprNode::Tag::Gen: return a->gen == b->gen;
        case ExprNode::Tag::Neg: return structural_equal(a->a, b->a);
        case ExprNode::Tag::Pow:
            return a->exponent == b->exponent && structural_equal(a->a, b->a);
        default: return structural_equal(a->a, b->a) && structural_equal(a->b, b->b);
    }
}

FreeExpr parse_expr(const std::string& text, const AlgebraParams& params) {
    Parser p(text, params.ctx, params.n, true);
    return p.parse();
}

std::string print_expr(const FreeExpr& e) { return print_node(e, 0); }

Scalar scalar_parse(const std::string& text, const VarCtxPtr& ctx) {
    Parser p(text, ctx, 0, false);
    return eval_scalar(p.parse());
}

}  // namespace qweyl
