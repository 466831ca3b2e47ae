#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/multipoly.hpp"
#include "qweyl/varcontext.hpp"

namespace qweyl {

// Element of the field K = Q(t_1,...,t_k), stored as a fraction of
// MultiPoly.  Invariants: denominator is nonzero, both parts have
// integer coefficients with joint content 1, and the denominator's
// leading coefficient is positive.  Fractions are not gcd-reduced;
// equality is decided by cross multiplication.  An exact-division
// pass cancels the denominator when it happens to divide the
// numerator, which keeps printed output small but never changes the
// value.
class Scalar {
public:
    Scalar();  // zero over the empty context

    static Scalar integer(long v, VarCtxPtr ctx);
    static Scalar rational(const mpq_class& v, VarCtxPtr ctx);
    static Scalar indeterminate(std::size_t index, VarCtxPtr ctx);
    static Scalar from_fraction(MultiPoly num, MultiPoly den, VarCtxPtr ctx);
    static Scalar zero(VarCtxPtr ctx) { return integer(0, std::move(ctx)); }
    static Scalar one(VarCtxPtr ctx) { return integer(1, std::move(ctx)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarCtxPtr& context() const { return ctx_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True iff the value is 1 or -1 (the only roots of unity in K).
    // Throws on zero input.
    bool is_root_of_unity() const;
    // Exponent vector when the value is a Laurent monomial
    // t_1^{e_1}...t_k^{e_k} with coefficient +1, nullopt otherwise.
    std::optional<std::vector<long>> as_unit_monomial() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const { return one(ctx_) / *this; }
    Scalar pow(long e) const;  // throws on 0^e with e < 0

    // a/b == c/d  iff  a*d == c*b.
    bool eq(const Scalar& o) const;

    std::string to_string() const;

private:
    void normalize();
    static void require_same_context(const Scalar& a, const Scalar& b);

    MultiPoly num_, den_;
    VarCtxPtr ctx_;
};

// Parses a scalar expression (integer literals, declared indeterminate
// names, + - * /, ^ with possibly negative integer exponent,
// parentheses).  Implemented by the shared expression parser.
Scalar scalar_parse(const std::string& text, const VarCtxPtr& ctx);

}  // namespace qweyl
