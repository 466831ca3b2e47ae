#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

// One of the 2n generators x_i, y_i.  The tower order
// ord(y_i) = 2i-1 < ord(x_i) = 2i is the order in which generators
// appear in a normal word.
struct GeneratorRef {
    enum class Kind { X, Y };
    Kind kind;
    int index;  // 1-based, in [1, n]

    // 0-based position in the tower order: y_i -> 2(i-1), x_i -> 2(i-1)+1.
    int slot() const { return 2 * (index - 1) + (kind == Kind::X ? 1 : 0); }
    static GeneratorRef from_slot(int slot) {
        return {slot % 2 == 1 ? Kind::X : Kind::Y, slot / 2 + 1};
    }
    std::string name() const {
        return (kind == Kind::X ? "x" : "y") + std::to_string(index);
    }
    bool operator==(const GeneratorRef& o) const {
        return kind == o.kind && index == o.index;
    }
};

// A presentation (n, Q, Gamma) of the algebra A_n^{Q,Gamma}(K).
struct AlgebraParams {
    VarCtxPtr ctx;
    int n = 0;
    std::vector<Scalar> q;                   // q_1,...,q_n
    std::vector<std::vector<Scalar>> gamma;  // n x n

    const Scalar& q_at(int i) const { return q.at(i - 1); }
    const Scalar& gamma_at(int i, int j) const { return gamma.at(i - 1).at(j - 1); }

    // The subalgebra presentation on the first m generator pairs.
    AlgebraParams restrict_to(int m) const;

    // Componentwise: same context names, same n, scalar_eq entries.
    bool same_presentation(const AlgebraParams& o) const;

    // Spec-file rendering; parse_spec of the result reproduces the
    // presentation up to scalar equality.
    std::string to_spec_text() const;
};

using ParamsPtr = std::shared_ptr<const AlgebraParams>;

// Every violated presentation invariant, with 1-based indices.  Empty
// means the presentation is valid.
std::vector<std::string> validate(const AlgebraParams& p);

struct ParsedSpec {
    AlgebraParams params;
    std::vector<std::string> violations;  // validate() applied after parsing
};

// Parses the spec file format: `key: value` lines with keys
// indeterminates, n, q, gamma; `#` starts a comment.  Throws
// ParseError on malformed input.
ParsedSpec parse_spec(const std::string& text);
ParsedSpec parse_spec_file(const std::string& path);

struct GenericityResult {
    bool decidable = false;
    int rank = 0;
    int max_rank = 0;       // n(n+1)/2
    bool generic = false;
    std::string detail;     // offending parameter when not decidable
};

// Rank over Q of the exponent matrix of {q_i} and {gamma_ij : i < j}.
// Only certified when every such parameter is a Laurent monomial with
// coefficient +1.
GenericityResult genericity_rank(const AlgebraParams& p);

}  // namespace qweyl
