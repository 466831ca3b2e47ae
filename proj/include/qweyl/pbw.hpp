#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/expr.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

// Exponent vector (b_1, a_1, b_2, a_2, ..., b_n, a_n) of the ordered
// monomial y_1^{b_1} x_1^{a_1} ... y_n^{b_n} x_n^{a_n}.  Component 2i-2
// is the y_i exponent, component 2i-1 the x_i exponent, matching
// GeneratorRef::slot().
using PbwMonomial = std::vector<int>;

struct PbwGradedLexLess {
    bool operator()(const PbwMonomial& a, const PbwMonomial& b) const;
};

// Element of A_n^{Q,Gamma}(K) in PBW normal form: a finite scalar
// combination of ordered monomials.  Immutable in practice; all
// operations return fresh values.
class PbwPolynomial {
public:
    using TermMap = std::map<PbwMonomial, Scalar, PbwGradedLexLess>;

    static PbwPolynomial zero(ParamsPtr params);
    static PbwPolynomial constant(ParamsPtr params, const Scalar& c);
    static PbwPolynomial one(ParamsPtr params);
    static PbwPolynomial generator(ParamsPtr params, GeneratorRef g);
    static PbwPolynomial monomial(ParamsPtr params, PbwMonomial m, const Scalar& c);

    const ParamsPtr& params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Scalar> as_scalar() const;

    void add_term(const PbwMonomial& m, const Scalar& c);

    bool eq(const PbwPolynomial& o) const;

    std::string to_string() const;

private:
    ParamsPtr params_;
    TermMap terms_;
};

PbwPolynomial pbw_add(const PbwPolynomial& f, const PbwPolynomial& g);
PbwPolynomial pbw_sub(const PbwPolynomial& f, const PbwPolynomial& g);
PbwPolynomial pbw_scale(const Scalar& c, const PbwPolynomial& f);
PbwPolynomial pbw_mul(const PbwPolynomial& f, const PbwPolynomial& g);
PbwPolynomial pbw_pow(const PbwPolynomial& f, long e);
PbwPolynomial commutator(const PbwPolynomial& f, const PbwPolynomial& g);

// z_0 = 1; z_i = 1 + sum_{k<=i} (q_k - 1) y_k x_k.
PbwPolynomial z_element(int i, const ParamsPtr& params);

// Normal form of a free expression, by structural recursion over the
// syntax tree.
PbwPolynomial nf(const FreeExpr& e, const ParamsPtr& params);

// Sum of all exponents, maximized over monomials; nullopt for 0.
std::optional<int> total_degree(const PbwPolynomial& f);
// The N-filtration degree with d(x_i) = d(y_i) = 0 for i < n and
// d(x_n) = d(y_n) = 1: max of a_n + b_n over monomials; nullopt for 0.
std::optional<int> filtration_degree(const PbwPolynomial& f);

// Number of PBW monomials of total degree <= d: binomial(d + 2n, 2n).
mpz_class monomial_count(int n, int d);
// The monomials themselves, in ascending graded lex order.
std::vector<PbwMonomial> monomials_up_to(int n, int d);

}  // namespace qweyl
