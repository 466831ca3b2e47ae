#include "qweyl/iso.hpp"

#include "qweyl/error.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

std::string SignVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < eps.size(); ++i)
        s += std::string(i ? "," : "") + (eps[i] > 0 ? "+1" : "-1");
    return s + ")";
}

const PbwPolynomial& Homomorphism::image_of(GeneratorRef g) const {
    return images.at(2 * (g.index - 1) + (g.kind == GeneratorRef::Kind::X ? 0 : 1));
}

std::string IsoDecision::to_text() const {
    if (isomorphic) return "ISOMORPHIC eps=" + eps.to_string();
    return "NOT-ISOMORPHIC reason=" + reason + " detail=" + detail;
}

namespace {

void require_valid(const ParamsPtr& P, const char* which) {
    auto v = validate(*P);
    if (!v.empty())
        throw DomainError(std::string("presentation ") + which + " is invalid: " + v.front());
}

void require_shared_context(const ParamsPtr& A, const ParamsPtr& B) {
    if (!same_context(A->ctx, B->ctx))
        throw DomainError("presentations must declare identical indeterminates");
}

}  // namespace

IsoDecision decide_iso(const ParamsPtr& A, const ParamsPtr& B) {
    require_valid(A, "A");
    require_valid(B, "B");
    require_shared_context(A, B);
    IsoDecision d;
    if (A->n != B->n) {
        d.reason = "gk-dimension";
        d.detail = "n=" + std::to_string(A->n) + ",m=" + std::to_string(B->n);
        return d;
    }
    const int n = A->n;
    SignVector eps;
    eps.eps.resize(n);
    for (int i = 1; i <= n; ++i) {
        if (B->q_at(i).eq(A->q_at(i)))
            eps.eps[i - 1] = 1;
        else if (B->q_at(i).eq(A->q_at(i).inverse()))
            eps.eps[i - 1] = -1;
        else {
            d.reason = "q-condition";
            d.detail = "i=" + std::to_string(i);
            return d;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Scalar expected = [&] {
                int ei = eps.at(i), ej = eps.at(j);
                if (ei > 0 && ej > 0) return A->gamma_at(i, j);
                if (ei < 0 && ej > 0) return A->gamma_at(j, i);
                if (ei > 0 && ej < 0) return A->gamma_at(j, i) / A->q_at(i);
                return A->q_at(i) * A->gamma_at(i, j);
            }();
            if (!B->gamma_at(i, j).eq(expected)) {
                d.reason = "gamma-condition";
                d.detail = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
                return d;
            }
        }
    }
    d.isomorphic = true;
    d.eps = std::move(eps);
    return d;
}

std::vector<Scalar> lambda_of(const SignVector& eps, const AlgebraParams& A) {
    if (static_cast<int>(eps.eps.size()) != A.n)
        throw DomainError("sign vector length does not match n");
    std::vector<Scalar> lambda;
    Scalar running = Scalar::one(A.ctx);
    for (int i = 1; i <= A.n; ++i) {
        if (eps.at(i) < 0) running = running / A.q_at(i);
        lambda.push_back(running);
    }
    return lambda;
}

Homomorphism build_iso(const ParamsPtr& A, const ParamsPtr& B, const SignVector& eps,
                       const std::vector<Scalar>& mu) {
    if (static_cast<int>(mu.size()) != A->n) throw DomainError("mu length does not match n");
    for (const auto& m : mu)
        if (m.is_zero()) throw DomainError("mu entries must be nonzero");
    IsoDecision d = decide_iso(A, B);
    if (!d.isomorphic || !(d.eps == eps))
        throw DomainError("eps is not a valid witness for these presentations");

    std::vector<Scalar> lambda = lambda_of(eps, *A);
    Homomorphism h;
    h.source = A;
    h.target = B;
    for (int i = 1; i <= A->n; ++i) {
        const Scalar& mi = mu[i - 1];
        const Scalar& li = lambda[i - 1];
        GeneratorRef xp{GeneratorRef::Kind::X, i}, yp{GeneratorRef::Kind::Y, i};
        if (eps.at(i) > 0) {
            h.images.push_back(pbw_scale(mi, PbwPolynomial::generator(B, xp)));
            h.images.push_back(pbw_scale(li / mi, PbwPolynomial::generator(B, yp)));
        } else {
            h.images.push_back(pbw_scale(mi, PbwPolynomial::generator(B, yp)));
            h.images.push_back(pbw_scale(-(li / mi), PbwPolynomial::generator(B, xp)));
        }
    }
    if (!verify_hom(h).empty())
        throw DomainError("constructed map fails relation verification");
    h.verified = true;
    return h;
}

std::vector<RelationViolation> verify_hom(const Homomorphism& h) {
    const AlgebraParams& S = *h.source;
    const int n = S.n;
    if (static_cast<int>(h.images.size()) != 2 * n)
        throw DomainError("homomorphism must provide 2n generator images");
    std::vector<RelationViolation> out;
    auto X = [&](int i) { return h.image_of({GeneratorRef::Kind::X, i}); };
    auto Y = [&](int i) { return h.image_of({GeneratorRef::Kind::Y, i}); };
    auto check = [&](const char* rel, int i, int j, const PbwPolynomial& residual) {
        if (!residual.is_zero()) out.push_back({rel, i, j, residual});
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // y_i y_j = gamma_ij y_j y_i
            PbwPolynomial r = pbw_sub(pbw_mul(Y(i), Y(j)),
                                      pbw_scale(S.gamma_at(i, j), pbw_mul(Y(j), Y(i))));
            check("rel1", i, j, r);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            // x_i x_j = q_i gamma_ij x_j x_i
            PbwPolynomial r =
                pbw_sub(pbw_mul(X(i), X(j)),
                        pbw_scale(S.q_at(i) * S.gamma_at(i, j), pbw_mul(X(j), X(i))));
            check("rel2", i, j, r);
            // x_i y_j = gamma_ji y_j x_i
            r = pbw_sub(pbw_mul(X(i), Y(j)),
                        pbw_scale(S.gamma_at(j, i), pbw_mul(Y(j), X(i))));
            check("rel3", i, j, r);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            // x_i y_j = q_j gamma_ji y_j x_i
            PbwPolynomial r =
                pbw_sub(pbw_mul(X(i), Y(j)),
                        pbw_scale(S.q_at(j) * S.gamma_at(j, i), pbw_mul(Y(j), X(i))));
            check("rel4", i, j, r);
        }
    for (int j = 1; j <= n; ++j) {
        // x_j y_j - q_j y_j x_j = 1 + sum_{k<j} (q_k - 1) y_k x_k
        PbwPolynomial lhs =
            pbw_sub(pbw_mul(X(j), Y(j)), pbw_scale(S.q_at(j), pbw_mul(Y(j), X(j))));
        PbwPolynomial rhs = PbwPolynomial::one(h.target);
        for (int k = 1; k < j; ++k)
            rhs = pbw_add(rhs, pbw_scale(S.q_at(k) - Scalar::one(S.ctx),
                                         pbw_mul(Y(k), X(k))));
        check("rel5", j, j, pbw_sub(lhs, rhs));
    }
    return out;
}

PbwPolynomial apply_hom(const Homomorphism& h, const PbwPolynomial& f) {
    PbwPolynomial out = PbwPolynomial::zero(h.target);
    for (const auto& [m, c] : f.terms()) {
        PbwPolynomial part = PbwPolynomial::constant(h.target, c);
        for (std::size_t s = 0; s < m.size(); ++s) {
            const PbwPolynomial& img =
                h.image_of(GeneratorRef::from_slot(static_cast<int>(s)));
            for (int k = 0; k < m[s]; ++k) part = pbw_mul(part, img);
        }
        out = pbw_add(out, part);
    }
    return out;
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& second) {
    if (!first.target->same_presentation(*second.source))
        throw DomainError("composition mismatch: target of first != source of second");
    Homomorphism h;
    h.source = first.source;
    h.target = second.target;
    for (const auto& img : first.images) h.images.push_back(apply_hom(second, img));
    return h;
}

bool is_identity(const Homomorphism& h) {
    if (!h.source->same_presentation(*h.target)) return false;
    for (int i = 1; i <= h.source->n; ++i) {
        for (auto kind : {GeneratorRef::Kind::X, GeneratorRef::Kind::Y}) {
            GeneratorRef g{kind, i};
            if (!h.image_of(g).eq(PbwPolynomial::generator(h.target, g))) return false;
        }
    }
    return true;
}

Homomorphism invert_iso(const IsoWitness& w, const ParamsPtr& A, const ParamsPtr& B) {
    {
        std::vector<Scalar> expected = lambda_of(w.eps, *A);
        if (w.lambda.size() != expected.size())
            throw DomainError("witness lambda has the wrong length");
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!w.lambda[i].eq(expected[i]))
                throw DomainError("witness lambda does not satisfy the recursion");
    }
    Homomorphism h = build_iso(A, B, w.eps, w.mu);
    const int n = A->n;
    // Each image is c * (single target generator); solve the 2n image
    // equations for the target generators.
    std::vector<std::optional<std::pair<GeneratorRef, Scalar>>> pre(2 * n);
    for (int i = 1; i <= n; ++i) {
        for (auto kind : {GeneratorRef::Kind::X, GeneratorRef::Kind::Y}) {
            GeneratorRef g{kind, i};
            const PbwPolynomial& img = h.image_of(g);
            if (img.terms().size() != 1) throw DomainError("image is not a scaled generator");
            const auto& [m, c] = *img.terms().begin();
            int slot = -1;
            for (std::size_t s = 0; s < m.size(); ++s) {
                if (m[s] == 0) continue;
                if (m[s] != 1 || slot >= 0)
                    throw DomainError("image is not a scaled generator");
                slot = static_cast<int>(s);
            }
            if (slot < 0) throw DomainError("image is not a scaled generator");
            if (pre[slot]) throw DomainError("two generators map onto the same image");
            pre[slot] = std::make_pair(g, c);
        }
    }
    Homomorphism inv;
    inv.source = B;
    inv.target = A;
    for (int i = 1; i <= n; ++i) {
        for (auto kind : {GeneratorRef::Kind::X, GeneratorRef::Kind::Y}) {
            GeneratorRef gp{kind, i};
            const auto& assigned = pre[gp.slot()];
            if (!assigned) throw DomainError("witness does not cover all target generators");
            inv.images.push_back(pbw_scale(assigned->second.inverse(),
                                           PbwPolynomial::generator(A, assigned->first)));
        }
    }
    if (!is_identity(compose(h, inv)) || !is_identity(compose(inv, h)))
        throw DomainError("witness does not invert to the identity");
    if (!verify_hom(inv).empty()) throw DomainError("inverse fails relation verification");
    inv.verified = true;
    return inv;
}

Homomorphism automorphism(const ParamsPtr& A, const std::vector<Scalar>& mu) {
    SignVector eps;
    eps.eps.assign(A->n, 1);
    return build_iso(A, A, eps, mu);
}

LemmaCheck check_lemma_instance(const PbwPolynomial& a, const PbwPolynomial& b) {
    if (a.is_constant() || b.is_constant())
        throw DomainError("lemma instance requires nonconstant elements");
    const ParamsPtr& P = a.params();
    const int n = P->n;
    PbwPolynomial ab = pbw_mul(a, b);
    auto fd = filtration_degree(ab);
    if (!fd || *fd != 2)
        return {LemmaOutcome::HypothesisNotMet,
                "filtration degree of a*b is not 2"};
    if (!in_span_of_z(ab))
        return {LemmaOutcome::HypothesisNotMet, "a*b is not in span{z_1,...,z_n}"};
    auto is_scaled_gen = [&](const PbwPolynomial& f, GeneratorRef g) {
        if (f.terms().size() != 1) return false;
        PbwMonomial want(2 * n, 0);
        want[g.slot()] = 1;
        return f.terms().begin()->first == want;
    };
    GeneratorRef xn{GeneratorRef::Kind::X, n}, yn{GeneratorRef::Kind::Y, n};
    bool holds = (is_scaled_gen(a, xn) && is_scaled_gen(b, yn)) ||
                 (is_scaled_gen(a, yn) && is_scaled_gen(b, xn));
    if (holds) return {LemmaOutcome::ConclusionHolds, ""};
    return {LemmaOutcome::Counterexample,
            "a = " + a.to_string() + ", b = " + b.to_string()};
}

}  // namespace qweyl
