#include "qweyl/linalg.hpp"

#include <algorithm>
#include <map>

#include "qweyl/error.hpp"

namespace qweyl {

namespace {

// Fraction-free (Bareiss) forward elimination.  Entries stay
// polynomial: the update (piv*a - b*c) / prev divides exactly by the
// previous pivot, so coefficient size is controlled without gcd
// computations.
struct Eliminator {
    std::size_t nrows, ncols;  // ncols excludes the rhs column
    std::vector<std::vector<MultiPoly>> m;  // nrows x (ncols + 1)
    std::vector<bool> used;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

    void run() {
        std::size_t k = nvars();
        MultiPoly prev = MultiPoly::constant(k, 1);
        used.assign(nrows, false);
        for (std::size_t col = 0; col < ncols; ++col) {
            std::size_t piv = nrows;
            std::size_t best = 0;
            for (std::size_t r = 0; r < nrows; ++r) {
                if (used[r] || m[r][col].is_zero()) continue;
                std::size_t sz = m[r][col].terms().size();
                if (piv == nrows || sz < best) {
                    piv = r;
                    best = sz;
                }
            }
            if (piv == nrows) continue;
            used[piv] = true;
            pivots.emplace_back(piv, col);
            const MultiPoly pv = m[piv][col];
            for (std::size_t r = 0; r < nrows; ++r) {
                if (used[r]) continue;
                const MultiPoly br = m[r][col];
                for (std::size_t c = 0; c <= ncols; ++c) {
                    MultiPoly& a = m[r][c];
                    if (a.is_zero() && br.is_zero()) continue;
                    MultiPoly t = pv * a;
                    if (!br.is_zero()) t = t - br * m[piv][c];
                    if (prev.is_one()) {
                        a = std::move(t);
                    } else {
                        auto q = MultiPoly::divide_exact(t, prev);
                        if (!q) throw DomainError("fraction-free elimination lost exactness");
                        a = std::move(*q);
                    }
                }
            }
            prev = pv;
        }
    }

    std::size_t nvars() const {
        for (const auto& row : m)
            for (const auto& e : row)
                return e.nvars();
        return 0;
    }
};

}  // namespace

SolveResult solve(const LinearSystem& sys) {
    const std::size_t nrows = sys.rows.size();
    const std::size_t ncols = sys.unknown_labels.size();
    if (sys.rhs.size() != nrows) throw DomainError("rhs size does not match rows");
    for (const auto& row : sys.rows)
        if (row.size() != ncols) throw DomainError("row length does not match unknowns");

    const VarCtxPtr& ctx = sys.ctx;
    std::size_t k = ctx ? ctx->size() : 0;

    Eliminator el;
    el.nrows = nrows;
    el.ncols = ncols;
    el.m.assign(nrows, std::vector<MultiPoly>(ncols + 1, MultiPoly(k)));
    for (std::size_t r = 0; r < nrows; ++r) {
        // clear denominators across the row: entry_j -> num_j * prod_{l != j} den_l
        std::vector<const Scalar*> entries;
        entries.reserve(ncols + 1);
        for (std::size_t c = 0; c < ncols; ++c) entries.push_back(&sys.rows[r][c]);
        entries.push_back(&sys.rhs[r]);
        std::vector<MultiPoly> pre(ncols + 2), suf(ncols + 2);
        pre[0] = MultiPoly::constant(k, 1);
        for (std::size_t j = 0; j < entries.size(); ++j)
            pre[j + 1] = entries[j]->den().is_one() ? pre[j] : pre[j] * entries[j]->den();
        suf[entries.size()] = MultiPoly::constant(k, 1);
        for (std::size_t j = entries.size(); j-- > 0;)
            suf[j] = entries[j]->den().is_one() ? suf[j + 1] : suf[j + 1] * entries[j]->den();
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (entries[j]->is_zero()) continue;
            MultiPoly v = entries[j]->num();
            if (!pre[j].is_one()) v = v * pre[j];
            if (!suf[j + 1].is_one()) v = v * suf[j + 1];
            el.m[r][j] = std::move(v);
        }
    }
    el.run();

    for (std::size_t r = 0; r < nrows; ++r) {
        if (el.used[r]) continue;
        if (!el.m[r][ncols].is_zero()) return SolveResult{std::nullopt, r};
    }

    std::vector<Scalar> x(ncols, Scalar::zero(ctx));
    for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
        auto [r, c] = *it;
        Scalar acc = Scalar::from_fraction(el.m[r][ncols], MultiPoly::constant(k, 1), ctx);
        for (std::size_t cc = 0; cc < ncols; ++cc) {
            if (cc == c || el.m[r][cc].is_zero() || x[cc].is_zero()) continue;
            Scalar coeff = Scalar::from_fraction(el.m[r][cc], MultiPoly::constant(k, 1), ctx);
            acc = acc - coeff * x[cc];
        }
        x[c] = acc / Scalar::from_fraction(el.m[r][c], MultiPoly::constant(k, 1), ctx);
    }
    return SolveResult{std::move(x), std::nullopt};
}

namespace {

std::string mono_label(const PbwMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += GeneratorRef::from_slot(static_cast<int>(i)).name();
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

// Frames "sum_j c_j * basis_j = a" as a LinearSystem, one row per PBW
// monomial occurring anywhere.
LinearSystem coefficient_system(const std::vector<PbwPolynomial>& basis,
                                const std::vector<std::string>& labels,
                                const PbwPolynomial& a) {
    const VarCtxPtr& ctx = a.params()->ctx;
    std::map<PbwMonomial, std::size_t, PbwGradedLexLess> rowof;
    auto touch = [&](const PbwPolynomial& p) {
        for (const auto& [m, c] : p.terms())
            rowof.emplace(m, 0);
    };
    for (const auto& p : basis) touch(p);
    touch(a);
    std::size_t idx = 0;
    for (auto& [m, r] : rowof) r = idx++;

    LinearSystem sys;
    sys.ctx = ctx;
    sys.unknown_labels = labels;
    sys.rows.assign(rowof.size(), std::vector<Scalar>(basis.size(), Scalar::zero(ctx)));
    sys.rhs.assign(rowof.size(), Scalar::zero(ctx));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [m, c] : basis[j].terms())
            sys.rows[rowof[m]][j] = c;
    for (const auto& [m, c] : a.terms()) sys.rhs[rowof[m]] = c;
    return sys;
}

}  // namespace

std::optional<PbwPolynomial> divide_by_z(int i, const PbwPolynomial& a) {
    const ParamsPtr& P = a.params();
    if (i < 1 || i > P->n) throw DomainError("z index out of range");
    if (a.is_zero()) return PbwPolynomial::zero(P);
    const PbwPolynomial z = z_element(i, P);
    int dA = *total_degree(a);
    std::vector<int> bounds{std::max(0, dA - 2)};
    if (dA > bounds[0]) bounds.push_back(dA);
    for (int D : bounds) {
        std::vector<PbwMonomial> monos = monomials_up_to(P->n, D);
        std::vector<PbwPolynomial> basis;
        std::vector<std::string> labels;
        basis.reserve(monos.size());
        for (const auto& m : monos) {
            basis.push_back(pbw_mul(z, PbwPolynomial::monomial(P, m, Scalar::one(P->ctx))));
            labels.push_back(mono_label(m));
        }
        SolveResult res = solve(coefficient_system(basis, labels, a));
        if (!res.solution) continue;
        PbwPolynomial b = PbwPolynomial::zero(P);
        for (std::size_t j = 0; j < monos.size(); ++j) b.add_term(monos[j], (*res.solution)[j]);
        if (pbw_mul(z, b).eq(a)) return b;
    }
    return std::nullopt;
}

std::optional<std::vector<Scalar>> in_span_of_z(const PbwPolynomial& a) {
    const ParamsPtr& P = a.params();
    std::vector<PbwPolynomial> basis;
    std::vector<std::string> labels;
    for (int i = 1; i <= P->n; ++i) {
        basis.push_back(z_element(i, P));
        labels.push_back("z" + std::to_string(i));
    }
    SolveResult res = solve(coefficient_system(basis, labels, a));
    if (!res.solution) return std::nullopt;
    return res.solution;
}

}  // namespace qweyl
