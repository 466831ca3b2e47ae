#pragma once

#include <memory>
#include <string>

#include "qweyl/presentation.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

// Abstract syntax of a free-algebra expression: noncommutative words in
// the generators with scalar coefficients.  Nodes are immutable and
// shared.
class ExprNode;
using FreeExpr = std::shared_ptr<const ExprNode>;

class ExprNode {
public:
    enum class Tag { Scalar, Gen, Neg, Add, Sub, Mul, Pow };

    Tag tag;
    class Scalar scalar;  // Tag::Scalar
    GeneratorRef gen{GeneratorRef::Kind::X, 1};  // Tag::Gen
    FreeExpr a, b;        // operands
    long exponent = 0;    // Tag::Pow
};

FreeExpr make_scalar(Scalar s);
FreeExpr make_gen(GeneratorRef g);
FreeExpr make_neg(FreeExpr e);
FreeExpr make_add(FreeExpr a, FreeExpr b);
FreeExpr make_sub(FreeExpr a, FreeExpr b);
FreeExpr make_mul(FreeExpr a, FreeExpr b);
FreeExpr make_pow(FreeExpr base, long exponent);

// True when the subtree contains no generator.
bool is_scalar_subtree(const FreeExpr& e);

// Node-by-node equality (scalar leaves compared by scalar_eq).
bool structural_equal(const FreeExpr& a, const FreeExpr& b);

// Grammar: expr := term (('+'|'-') term)*;
//          term := ('-')? factor (('*'|'/') factor)*;
//          factor := atom ('^' ('-')? int)?;
//          atom := int | name | generator | '(' expr ')'.
// '/' is sugar for multiplication by the inverse and requires a
// scalar-valued divisor; negative exponents require a scalar base.
FreeExpr parse_expr(const std::string& text, const AlgebraParams& params);

// Deterministic rendering with parentheses minimized by precedence;
// parse_expr(print_expr(e)) is structurally equal to e for trees the
// parser can produce.
std::string print_expr(const FreeExpr& e);

}  // namespace qweyl
