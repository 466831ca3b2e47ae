#include "qweyl/pbw.hpp"

#include <algorithm>

#include "qweyl/error.hpp"

namespace qweyl {

namespace {

int mono_degree(const PbwMonomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

void require_same_params(const PbwPolynomial& f, const PbwPolynomial& g) {
    if (f.params() == g.params()) return;
    if (f.params() && g.params() && f.params()->same_presentation(*g.params())) return;
    throw DomainError("operands belong to different algebras");
}

}  // namespace

bool PbwGradedLexLess::operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PbwPolynomial PbwPolynomial::zero(ParamsPtr params) {
    PbwPolynomial p;
    p.params_ = std::move(params);
    return p;
}

PbwPolynomial PbwPolynomial::constant(ParamsPtr params, const Scalar& c) {
    PbwPolynomial p = zero(std::move(params));
    p.add_term(PbwMonomial(2 * p.params_->n, 0), c);
    return p;
}

PbwPolynomial PbwPolynomial::one(ParamsPtr params) {
    const VarCtxPtr& ctx = params->ctx;
    return constant(std::move(params), Scalar::one(ctx));
}

PbwPolynomial PbwPolynomial::generator(ParamsPtr params, GeneratorRef g) {
    if (g.index < 1 || g.index > params->n)
        throw DomainError("generator index out of range");
    PbwPolynomial p = zero(std::move(params));
    PbwMonomial m(2 * p.params_->n, 0);
    m[g.slot()] = 1;
    p.add_term(m, Scalar::one(p.params_->ctx));
    return p;
}

PbwPolynomial PbwPolynomial::monomial(ParamsPtr params, PbwMonomial m, const Scalar& c) {
    if (static_cast<int>(m.size()) != 2 * params->n)
        throw DomainError("monomial length does not match the algebra");
    PbwPolynomial p = zero(std::move(params));
    p.add_term(m, c);
    return p;
}

bool PbwPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

std::optional<Scalar> PbwPolynomial::as_scalar() const {
    if (terms_.empty()) return Scalar::zero(params_->ctx);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

void PbwPolynomial::add_term(const PbwMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool PbwPolynomial::eq(const PbwPolynomial& o) const {
    require_same_params(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (!a->second.eq(b->second)) return false;
    }
    return true;
}

std::string PbwPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Scalar& c = it->second;
        bool negative = sgn(c.num().leading_coeff()) < 0;
        Scalar a = negative ? -c : c;
        std::string mono;
        for (std::size_t s = 0; s < it->first.size(); ++s) {
            int e = it->first[s];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += GeneratorRef::from_slot(static_cast<int>(s)).name();
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string piece;
        if (mono.empty()) {
            piece = a.to_string();
        } else if (a.is_one()) {
            piece = mono;
        } else {
            // a bare coefficient only when it is a single polynomial
            // term; everything else is parenthesized so the rendering
            // reparses to the same element
            bool simple = a.den().is_one() && a.num().terms().size() == 1 &&
                          sgn(a.num().leading_coeff()) > 0;
            std::string cs = a.to_string();
            piece = (simple ? cs : "(" + cs + ")") + "*" + mono;
        }
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

namespace {

// Scalar c with h g = c g h, for generators h at slot hslot and g at
// slot gslot, hslot > gslot, excluding the same-index pair (x_i, y_i).
// These are the local rules R1-R4 obtained from the defining relations.
Scalar swap_scalar(const AlgebraParams& P, int hslot, int gslot) {
    GeneratorRef h = GeneratorRef::from_slot(hslot);
    GeneratorRef g = GeneratorRef::from_slot(gslot);
    int i = h.index, j = g.index;
    bool hx = h.kind == GeneratorRef::Kind::X;
    bool gx = g.kind == GeneratorRef::Kind::X;
    if (!hx && !gx) return P.gamma_at(i, j);                       // y_i y_j -> g_ij y_j y_i
    if (hx && gx) return P.gamma_at(i, j) / P.q_at(j);             // x_i x_j -> q_j^-1 g_ij x_j x_i
    if (hx && !gx) return P.q_at(j) * P.gamma_at(j, i);            // x_i y_j -> q_j g_ji y_j x_i
    return P.gamma_at(j, i);                                       // y_i x_j -> g_ji x_j y_i
}

PbwPolynomial poly_times_gen(const PbwPolynomial& f, int gslot);

// Normal form of m * g for a normal monomial m and a single generator
// g.  Recursion peels the rightmost block of m that stands left of g's
// slot; rule R5 (x_i y_i = q_i y_i x_i + z_{i-1}) is the one case that
// branches, and its correction involves only smaller generator
// indices, which grounds the recursion.
PbwPolynomial mono_times_gen(const ParamsPtr& P, const PbwMonomial& m, int gslot) {
    int top = -1;
    for (int s = static_cast<int>(m.size()) - 1; s > gslot; --s) {
        if (m[s] > 0) {
            top = s;
            break;
        }
    }
    if (top < 0) {
        PbwMonomial r = m;
        ++r[gslot];
        return PbwPolynomial::monomial(P, std::move(r), Scalar::one(P->ctx));
    }
    GeneratorRef h = GeneratorRef::from_slot(top);
    GeneratorRef g = GeneratorRef::from_slot(gslot);
    if (h.index == g.index && h.kind == GeneratorRef::Kind::X) {
        // ... x_i^e * y_i: rewrite the innermost pair.
        int i = g.index;
        PbwMonomial mid = m;
        --mid[top];
        PbwPolynomial t1 = mono_times_gen(P, mid, gslot);
        t1 = poly_times_gen(t1, top);
        t1 = pbw_scale(P->q_at(i), t1);
        PbwPolynomial t2 = PbwPolynomial::zero(P);
        const PbwPolynomial zprev = z_element(i - 1, P);
        for (const auto& [zm, zc] : zprev.terms()) {
            PbwPolynomial part = PbwPolynomial::monomial(P, mid, zc);
            for (std::size_t s = 0; s < zm.size(); ++s)
                for (int k = 0; k < zm[s]; ++k) part = poly_times_gen(part, static_cast<int>(s));
            t2 = pbw_add(t2, part);
        }
        return pbw_add(t1, t2);
    }
    // Pure scaling: h^e g = c^e g h^e.
    PbwMonomial pre = m;
    int e = pre[top];
    pre[top] = 0;
    Scalar c = swap_scalar(*P, top, gslot).pow(e);
    PbwPolynomial r = mono_times_gen(P, pre, gslot);
    PbwPolynomial shifted = PbwPolynomial::zero(P);
    for (const auto& [rm, rc] : r.terms()) {
        PbwMonomial t = rm;
        t[top] += e;
        shifted.add_term(t, rc * c);
    }
    return shifted;
}

PbwPolynomial poly_times_gen(const PbwPolynomial& f, int gslot) {
    PbwPolynomial r = PbwPolynomial::zero(f.params());
    for (const auto& [m, c] : f.terms()) {
        PbwPolynomial part = mono_times_gen(f.params(), m, gslot);
        for (const auto& [pm, pc] : part.terms()) r.add_term(pm, pc * c);
    }
    return r;
}

}  // namespace

PbwPolynomial pbw_add(const PbwPolynomial& f, const PbwPolynomial& g) {
    require_same_params(f, g);
    PbwPolynomial r = f;
    for (const auto& [m, c] : g.terms()) r.add_term(m, c);
    return r;
}

PbwPolynomial pbw_sub(const PbwPolynomial& f, const PbwPolynomial& g) {
    require_same_params(f, g);
    PbwPolynomial r = f;
    for (const auto& [m, c] : g.terms()) r.add_term(m, -c);
    return r;
}

PbwPolynomial pbw_scale(const Scalar& c, const PbwPolynomial& f) {
    PbwPolynomial r = PbwPolynomial::zero(f.params());
    if (c.is_zero()) return r;
    for (const auto& [m, fc] : f.terms()) r.add_term(m, fc * c);
    return r;
}

PbwPolynomial pbw_mul(const PbwPolynomial& f, const PbwPolynomial& g) {
    require_same_params(f, g);
    const ParamsPtr& P = f.params();
    PbwPolynomial r = PbwPolynomial::zero(P);
    for (const auto& [fm, fc] : f.terms()) {
        for (const auto& [gm, gc] : g.terms()) {
            PbwPolynomial part = PbwPolynomial::monomial(P, fm, fc * gc);
            for (std::size_t s = 0; s < gm.size(); ++s)
                for (int k = 0; k < gm[s]; ++k) part = poly_times_gen(part, static_cast<int>(s));
            for (const auto& [pm, pc] : part.terms()) r.add_term(pm, pc);
        }
    }
    return r;
}

PbwPolynomial pbw_pow(const PbwPolynomial& f, long e) {
    if (e < 0) {
        auto c = f.as_scalar();
        if (!c) throw DomainError("negative power of a non-scalar element");
        return PbwPolynomial::constant(f.params(), c->pow(e));
    }
    PbwPolynomial r = PbwPolynomial::one(f.params());
    for (long i = 0; i < e; ++i) r = pbw_mul(r, f);
    return r;
}

PbwPolynomial commutator(const PbwPolynomial& f, const PbwPolynomial& g) {
    return pbw_sub(pbw_mul(f, g), pbw_mul(g, f));
}

PbwPolynomial z_element(int i, const ParamsPtr& params) {
    if (i < 0 || i > params->n) throw DomainError("z index out of range");
    PbwPolynomial r = PbwPolynomial::one(params);
    for (int k = 1; k <= i; ++k) {
        PbwMonomial m(2 * params->n, 0);
        m[GeneratorRef{GeneratorRef::Kind::Y, k}.slot()] = 1;
        m[GeneratorRef{GeneratorRef::Kind::X, k}.slot()] = 1;
        r.add_term(m, params->q_at(k) - Scalar::one(params->ctx));
    }
    return r;
}

PbwPolynomial nf(const FreeExpr& e, const ParamsPtr& params) {
    switch (e->tag) {
        case ExprNode::Tag::Scalar:
            if (!same_context(e->scalar.context(), params->ctx))
                throw DomainError("scalar context does not match the algebra");
            return PbwPolynomial::constant(params, e->scalar);
        case ExprNode::Tag::Gen: return PbwPolynomial::generator(params, e->gen);
        case ExprNode::Tag::Neg:
            return pbw_scale(Scalar::integer(-1, params->ctx), nf(e->a, params));
        case ExprNode::Tag::Add: return pbw_add(nf(e->a, params), nf(e->b, params));
        case ExprNode::Tag::Sub: return pbw_sub(nf(e->a, params), nf(e->b, params));
        case ExprNode::Tag::Mul: return pbw_mul(nf(e->a, params), nf(e->b, params));
        case ExprNode::Tag::Pow: return pbw_pow(nf(e->a, params), e->exponent);
    }
    throw DomainError("corrupt expression node");
}

std::optional<int> total_degree(const PbwPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    return mono_degree(f.terms().rbegin()->first);
}

std::optional<int> filtration_degree(const PbwPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    int n = f.params()->n;
    int d = 0;
    for (const auto& [m, c] : f.terms())
        d = std::max(d, m[2 * n - 2] + m[2 * n - 1]);
    return d;
}

mpz_class monomial_count(int n, int d) {
    if (n < 1 || d < 0) throw DomainError("monomial_count arguments out of range");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d + 2 * n),
                 static_cast<unsigned long>(2 * n));
    return r;
}

std::vector<PbwMonomial> monomials_up_to(int n, int d) {
    std::vector<PbwMonomial> out;
    PbwMonomial cur(2 * n, 0);
    // depth-first over exponent vectors with remaining-degree budget
    auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == 2 * n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[slot] = e;
            self(self, slot + 1, budget - e);
        }
        cur[slot] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), PbwGradedLexLess{});
    return out;
}

}  // namespace qweyl
