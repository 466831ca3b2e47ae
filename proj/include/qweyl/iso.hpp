#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/pbw.hpp"
#include "qweyl/presentation.hpp"

namespace qweyl {

// Sign vector in {+1,-1}^n: +1 keeps (x_i, y_i), -1 swaps their roles.
struct SignVector {
    std::vector<int> eps;

    int at(int i) const { return eps.at(i - 1); }
    std::string to_string() const;
    bool operator==(const SignVector& o) const { return eps == o.eps; }
};

// Parameters of the isomorphism phi_{mu,eps}; lambda is derived from
// eps by lambda_0 = 1, lambda_i = q_i^{(eps_i - 1)/2} lambda_{i-1}.
struct IsoWitness {
    SignVector eps;
    std::vector<Scalar> mu;
    std::vector<Scalar> lambda;
};

// Algebra map given by generator images.  images[2(i-1)] is the image
// of x_i, images[2(i-1)+1] the image of y_i, as elements of the target.
struct Homomorphism {
    ParamsPtr source;
    ParamsPtr target;
    std::vector<PbwPolynomial> images;
    bool verified = false;

    const PbwPolynomial& image_of(GeneratorRef g) const;
};

struct IsoDecision {
    bool isomorphic = false;
    SignVector eps;       // when isomorphic
    std::string reason;   // gk-dimension | q-condition | gamma-condition
    std::string detail;   // indices, e.g. "i=2" or "i=1,j=2"

    // `ISOMORPHIC eps=(+1,-1)` or `NOT-ISOMORPHIC reason=... detail=...`
    std::string to_text() const;
};

// Decides whether the two presentations give isomorphic algebras, by
// conditions (i) m = n and (ii) q'_i = q_i^{eps_i} together with the
// matching gamma' table.  eps is determined per index: q_i = q_i^{-1}
// would force q_i^2 = 1, excluded by the validity hypothesis, so at
// most one sign fits.  Throws if either presentation is invalid.
IsoDecision decide_iso(const ParamsPtr& A, const ParamsPtr& B);

std::vector<Scalar> lambda_of(const SignVector& eps, const AlgebraParams& A);

// The isomorphism phi_{mu,eps}: x_i -> mu_i x'_i or mu_i y'_i,
// y_i -> lambda_i mu_i^{-1} y'_i or -lambda_i mu_i^{-1} x'_i.
// Requires eps to be the witness decide_iso returns for (A, B).
Homomorphism build_iso(const ParamsPtr& A, const ParamsPtr& B, const SignVector& eps,
                       const std::vector<Scalar>& mu);

struct RelationViolation {
    std::string relation;  // rel1..rel5
    int i, j;
    PbwPolynomial residual;
};

// Substitutes the generator images into every defining relation of the
// source and reduces in the target; empty result means the map is a
// homomorphism.
std::vector<RelationViolation> verify_hom(const Homomorphism& h);

// Inverse of phi_{mu,eps}, found by solving the per-index image
// equations; both compositions are checked to be the identity.
Homomorphism invert_iso(const IsoWitness& w, const ParamsPtr& A, const ParamsPtr& B);

// Scaling automorphism x_i -> mu_i x_i, y_i -> mu_i^{-1} y_i.
Homomorphism automorphism(const ParamsPtr& A, const std::vector<Scalar>& mu);

// Image of a normal-form element under h (substitution hom).
PbwPolynomial apply_hom(const Homomorphism& h, const PbwPolynomial& f);

// second after first; source of `first`, target of `second`.
Homomorphism compose(const Homomorphism& first, const Homomorphism& second);

bool is_identity(const Homomorphism& h);

enum class LemmaOutcome { HypothesisNotMet, ConclusionHolds, Counterexample };

struct LemmaCheck {
    LemmaOutcome outcome;
    std::string detail;
};

// Instance checker for the filtration lemma: given nonconstant a, b,
// tests the hypothesis d(ab) = 2 and ab in span{z_1,...,z_n}; when it
// holds, checks that (a, b) is (mu x_n, nu y_n) or (mu y_n, nu x_n).
LemmaCheck check_lemma_instance(const PbwPolynomial& a, const PbwPolynomial& b);

}  // namespace qweyl
