#include "qweyl/scalar.hpp"

#include "qweyl/error.hpp"

namespace qweyl {

Scalar::Scalar() : ctx_(VarContext::empty()) {
    num_ = MultiPoly(0);
    den_ = MultiPoly::constant(0, 1);
}

Scalar Scalar::integer(long v, VarCtxPtr ctx) {
    return rational(mpq_class(v), std::move(ctx));
}

Scalar Scalar::rational(const mpq_class& v, VarCtxPtr ctx) {
    Scalar s;
    s.ctx_ = std::move(ctx);
    std::size_t k = s.ctx_->size();
    s.num_ = MultiPoly::constant(k, v);
    s.den_ = MultiPoly::constant(k, 1);
    s.normalize();
    return s;
}

Scalar Scalar::indeterminate(std::size_t index, VarCtxPtr ctx) {
    Scalar s;
    s.ctx_ = std::move(ctx);
    s.num_ = MultiPoly::variable(s.ctx_->size(), index);
    s.den_ = MultiPoly::constant(s.ctx_->size(), 1);
    return s;
}

Scalar Scalar::from_fraction(MultiPoly num, MultiPoly den, VarCtxPtr ctx) {
    if (den.is_zero()) throw DomainError("scalar with zero denominator");
    Scalar s;
    s.ctx_ = std::move(ctx);
    if (num.nvars() != s.ctx_->size() || den.nvars() != s.ctx_->size())
        throw DomainError("polynomial arity does not match context");
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    std::size_t k = ctx_->size();
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(k, 1);
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = MultiPoly::divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = MultiPoly::constant(k, 1);
        }
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), num_.coeff_denominator_lcm().get_mpz_t(),
            den_.coeff_denominator_lcm().get_mpz_t());
    if (l != 1) {
        num_.scale(mpq_class(l));
        den_.scale(mpq_class(l));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.integer_content().get_mpz_t(),
            den_.integer_content().get_mpz_t());
    if (g > 1) {
        mpq_class inv(mpz_class(1), g);
        num_.scale(inv);
        den_.scale(inv);
    }
    if (sgn(den_.leading_coeff()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void Scalar::require_same_context(const Scalar& a, const Scalar& b) {
    if (!same_context(a.ctx_, b.ctx_))
        throw DomainError("scalar operands belong to different contexts");
}

bool Scalar::is_one() const {
    return num_ == den_;
}

bool Scalar::is_root_of_unity() const {
    if (is_zero()) throw DomainError("is_root_of_unity of zero");
    return num_ == den_ || num_ == -den_;
}

std::optional<std::vector<long>> Scalar::as_unit_monomial() const {
    if (num_.terms().size() != 1 || den_.terms().size() != 1) return std::nullopt;
    const auto& tn = *num_.terms().begin();
    const auto& td = *den_.terms().begin();
    if (tn.second != 1 || td.second != 1) return std::nullopt;
    std::vector<long> e(ctx_->size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<long>(tn.first[i]) - static_cast<long>(td.first[i]);
    return e;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_context(*this, o);
    return from_fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, ctx_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_context(*this, o);
    return from_fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_, ctx_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_context(*this, o);
    return from_fraction(num_ * o.num_, den_ * o.den_, ctx_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_context(*this, o);
    if (o.is_zero()) throw DomainError("division by zero scalar");
    return from_fraction(num_ * o.den_, den_ * o.num_, ctx_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return one(ctx_);
    if (is_zero() && e < 0) throw DomainError("zero scalar raised to negative power");
    MultiPoly n = MultiPoly::constant(ctx_->size(), 1);
    MultiPoly d = n;
    long a = e < 0 ? -e : e;
    for (long i = 0; i < a; ++i) {
        n = n * num_;
        d = d * den_;
    }
    if (e < 0) std::swap(n, d);
    return from_fraction(std::move(n), std::move(d), ctx_);
}

bool Scalar::eq(const Scalar& o) const {
    require_same_context(*this, o);
    return num_ * o.den_ == o.num_ * den_;
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string(*ctx_);
    std::string ns = num_.to_string(*ctx_);
    if (num_.terms().size() > 1) ns = "(" + ns + ")";
    std::string ds = den_.to_string(*ctx_);
    bool den_atomic = false;
    if (den_.terms().size() == 1) {
        const auto& t = *den_.terms().begin();
        unsigned nz = 0;
        for (unsigned x : t.first) nz += (x > 0) ? 1 : 0;
        // a bare positive integer, or a single power of one indeterminate
        den_atomic = (nz == 0 && sgn(t.second) > 0) || (nz == 1 && t.second == 1);
    }
    if (!den_atomic) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace qweyl
