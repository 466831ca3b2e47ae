#pragma once

// Deterministic random builders shared by the unit and acceptance
// suites.

#include <random>
#include <string>
#include <vector>

#include "qweyl/expr.hpp"
#include "qweyl/pbw.hpp"
#include "qweyl/presentation.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Scalar random_rational(Rng& rng, const VarCtxPtr& ctx, bool nonzero = true) {
    int num = uniform(rng, -9, 9);
    if (nonzero && num == 0) num = 1;
    int den = uniform(rng, 1, 9);
    return Scalar::rational(mpq_class(num, den), ctx);
}

// A small rational-function scalar: sums of monomials over a monomial,
// enough variety to exercise cross-multiplied arithmetic.
inline Scalar random_scalar(Rng& rng, const VarCtxPtr& ctx, bool nonzero = true) {
    std::size_t k = ctx->size();
    auto random_poly = [&](int maxterms) {
        MultiPoly p(k);
        int terms = uniform(rng, nonzero ? 1 : 0, maxterms);
        for (int t = 0; t < terms; ++t) {
            ExpVec e(k, 0);
            if (k > 0) {
                int touched = uniform(rng, 0, 2);
                for (int v = 0; v < touched; ++v)
                    e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k) - 1))] +=
                        static_cast<unsigned>(uniform(rng, 1, 2));
            }
            int c = uniform(rng, -4, 4);
            if (c == 0) c = 1;
            p.add_term(e, mpq_class(c));
        }
        if (nonzero && p.is_zero()) p.add_term(ExpVec(k, 0), mpq_class(1));
        return p;
    };
    MultiPoly num = random_poly(2);
    MultiPoly den(k);
    den.add_term(ExpVec(k, 0), mpq_class(uniform(rng, 1, 3)));
    if (k > 0 && uniform(rng, 0, 2) == 0) {
        ExpVec e(k, 0);
        e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(k) - 1))] = 1;
        MultiPoly m(k);
        m.add_term(e, mpq_class(1));
        den = den * m;
    }
    return Scalar::from_fraction(std::move(num), std::move(den), ctx);
}

// A nonzero Laurent monomial in the parameters, handy for mu samples.
inline Scalar random_unit_monomial(Rng& rng, const VarCtxPtr& ctx) {
    Scalar s = Scalar::one(ctx);
    if (ctx->size() == 0) return Scalar::integer(uniform(rng, 1, 5), ctx);
    int factors = uniform(rng, 0, 2);
    for (int i = 0; i < factors; ++i) {
        Scalar v = Scalar::indeterminate(
            static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ctx->size()) - 1)), ctx);
        s = s * v.pow(uniform(rng, 0, 1) ? 1 : -1);
    }
    return s;
}

// Fully symbolic presentation: q = (q1,...,qn), gamma_ij = g<i><j> for
// i < j, all independent indeterminates.  `spare` appends extra
// indeterminates unused by the presentation.
inline ParamsPtr symbolic_params(int n, const std::vector<std::string>& spare = {}) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            names.push_back("g" + std::to_string(i) + std::to_string(j));
    for (const auto& s : spare) names.push_back(s);
    VarCtxPtr ctx = VarContext::make(names);
    AlgebraParams p;
    p.ctx = ctx;
    p.n = n;
    for (int i = 1; i <= n; ++i)
        p.q.push_back(Scalar::indeterminate(*ctx->index_of("q" + std::to_string(i)), ctx));
    p.gamma.assign(n, std::vector<Scalar>(n, Scalar::one(ctx)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Scalar g = Scalar::indeterminate(
                *ctx->index_of("g" + std::to_string(i) + std::to_string(j)), ctx);
            p.gamma[i - 1][j - 1] = g;
            p.gamma[j - 1][i - 1] = g.inverse();
        }
    return std::make_shared<const AlgebraParams>(std::move(p));
}

inline std::vector<GeneratorRef> random_word(Rng& rng, int n, int maxlen) {
    int len = uniform(rng, 0, maxlen);
    std::vector<GeneratorRef> w;
    for (int i = 0; i < len; ++i)
        w.push_back(GeneratorRef::from_slot(uniform(rng, 0, 2 * n - 1)));
    return w;
}

inline FreeExpr word_to_expr(const std::vector<GeneratorRef>& w, const VarCtxPtr& ctx) {
    if (w.empty()) return make_scalar(Scalar::one(ctx));
    FreeExpr e = make_gen(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) e = make_mul(e, make_gen(w[i]));
    return e;
}

inline PbwPolynomial random_pbw(Rng& rng, const ParamsPtr& P, int maxterms, int maxdeg,
                                bool nonzero = false) {
    PbwPolynomial f = PbwPolynomial::zero(P);
    int terms = uniform(rng, nonzero ? 1 : 0, maxterms);
    for (int t = 0; t < terms; ++t) {
        PbwMonomial m(2 * P->n, 0);
        int deg = uniform(rng, 0, maxdeg);
        for (int d = 0; d < deg; ++d) ++m[uniform(rng, 0, 2 * P->n - 1)];
        f.add_term(m, random_rational(rng, P->ctx));
    }
    if (nonzero && f.is_zero())
        f.add_term(PbwMonomial(2 * P->n, 0), Scalar::one(P->ctx));
    return f;
}

}  // namespace qweyl::testing
