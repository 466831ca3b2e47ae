#include "qweyl/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "qweyl/error.hpp"

namespace qweyl {

namespace {

unsigned degree_of(const ExpVec& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

}  // namespace

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const mpq_class& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DomainError("indeterminate index out of range");
    MultiPoly p(nvars);
    ExpVec e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), mpq_class(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    return degree_of(terms_.begin()->first) == 0;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

std::optional<mpq_class> MultiPoly::as_constant() const {
    if (terms_.empty()) return mpq_class(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

void MultiPoly::add_term(const ExpVec& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
    MultiPoly r(nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

const mpq_class& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

mpz_class MultiPoly::coeff_denominator_lcm() const {
    mpz_class l(1);
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

mpz_class MultiPoly::integer_content() const {
    mpz_class g(0);
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

void MultiPoly::scale(const mpq_class& c) {
    if (c == 0) throw DomainError("scaling polynomial by zero");
    for (auto& [e, coeff] : terms_) coeff *= c;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.nvars_ != b.nvars_) throw DomainError("polynomial arity mismatch");
    MultiPoly q(a.nvars_);
    MultiPoly r = a;
    const auto& ltb = *b.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms_.rbegin();
        ExpVec e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            if (ltr.first[i] < ltb.first[i]) return std::nullopt;
            e[i] = ltr.first[i] - ltb.first[i];
        }
        mpq_class c = ltr.second / ltb.second;
        q.add_term(e, c);
        MultiPoly t(a.nvars_);
        t.terms_.emplace(std::move(e), std::move(c));
        r = r - t * b;
    }
    return q;
}

std::string MultiPoly::to_string(const VarContext& ctx) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpq_class& c = it->second;
        bool negative = sgn(c) < 0;
        mpq_class a = negative ? mpq_class(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx.name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string piece;
        if (mono.empty())
            piece = a.get_str();
        else if (a == 1)
            piece = mono;
        else
            piece = a.get_str() + "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace qweyl
