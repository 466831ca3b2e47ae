#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/varcontext.hpp"

namespace qweyl {

using ExpVec = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lex on the
// exponent vector.  This is the canonical term order for storage,
// equality and printing.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Multivariate polynomial over Q in a fixed number of indeterminates.
// The zero polynomial is the empty term map; no stored coefficient is
// zero.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, mpq_class, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const mpq_class& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::optional<mpq_class> as_constant() const;

    // Accumulates c at exponent e, dropping the term if it cancels.
    void add_term(const ExpVec& e, const mpq_class& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Largest term under graded lex; polynomial must be nonzero.
    const mpq_class& leading_coeff() const;

    // lcm of the coefficient denominators (1 for the zero polynomial).
    mpz_class coeff_denominator_lcm() const;
    // gcd of the coefficient numerators, positive (0 for zero polynomial).
    // Meaningful once denominators are cleared.
    mpz_class integer_content() const;
    void scale(const mpq_class& c);

    // Quotient a / b when the division is exact, nullopt otherwise.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

    // Deterministic rendering, terms in descending graded lex order.
    std::string to_string(const VarContext& ctx) const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

}  // namespace qweyl
