#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweyl/pbw.hpp"
#include "qweyl/scalar.hpp"

namespace qweyl {

// Dense linear system over K.  Rows pair a coefficient vector with a
// right-hand side; unknowns carry printable labels (PBW monomials or
// z_i names) for diagnostics.
struct LinearSystem {
    VarCtxPtr ctx;
    std::vector<std::string> unknown_labels;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
};

struct SolveResult {
    // One solution with free unknowns set to 0, when consistent.
    std::optional<std::vector<Scalar>> solution;
    // Index of a row that reduced to 0 = nonzero, when inconsistent.
    std::optional<std::size_t> inconsistent_row;
};

// Exact elimination over K.  Rows are cleared to polynomial form and
// reduced fraction-free (Bareiss), so intermediate entries stay
// polynomial; divisions reappear only in back substitution.
SolveResult solve(const LinearSystem& sys);

// Left quotient by z_i: returns b with z_i * b = a when it exists.
// Unknowns are the PBW monomials of total degree <= deg(a) - 2,
// widened to deg(a) on failure.
std::optional<PbwPolynomial> divide_by_z(int i, const PbwPolynomial& a);

// Coefficients c_1..c_n with sum c_i z_i = a, if a lies in the span of
// {z_1,...,z_n} (z_0 = 1 excluded).
std::optional<std::vector<Scalar>> in_span_of_z(const PbwPolynomial& a);

}  // namespace qweyl
