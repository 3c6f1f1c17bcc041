#ifndef INFORATIO_ENTROPY_LP_HPP
#define INFORATIO_ENTROPY_LP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "inforatio/certificate.hpp"
#include "inforatio/graph.hpp"
#include "inforatio/rational.hpp"

namespace inforatio {

enum class LpMode { Worst, Average };

enum class RowRelation { Eq, Ge };

enum class RowKind {
    EmptyFix,        // f(empty) = 0
    SecretUnit,      // f({s}) = 1
    ElementalMono,   // f(N) - f(N \ i) >= 0
    ElementalSubmod, // f(K+i) + f(K+j) - f(K+i+j) - f(K) >= 0
    EdgeDetermines,  // f(uv + s) - f(uv) = 0
    MisIndependent,  // f(M + s) - f(M) = 1
    WorstBound,      // t - f({v}) >= 0
};

/// One LP row: a linear form over subset variables (masks over the extended
/// ground set, secret = highest bit) plus an optional coefficient on the
/// auxiliary worst-case bound variable t.
struct LpRow {
    RowKind kind;
    RowRelation relation;
    std::vector<std::pair<std::uint32_t, Rational>> terms;
    Rational t_coeff = 0;
    Rational rhs = 0;
    std::uint32_t set_a = 0; // kind parameters: see builders
    std::uint32_t set_b = 0;
    int element = -1;
};

/// The Shannon-inequality LP whose optimum lower-bounds the information
/// ratio: variables f(A) for all subsets of V + {s}, elemental polymatroid
/// constraints, and the perfect-scheme access equalities at edges (minimal
/// qualified sets) and maximal independent sets (maximal unqualified sets).
struct EntropyLP {
    LabeledGraph graph;
    LpMode mode = LpMode::Worst;
    int ground_size = 0;             // |V| + 1
    std::size_t num_subset_vars = 0; // 2^ground_size
    bool has_t = false;
    std::vector<LpRow> rows;
    std::vector<std::pair<std::uint32_t, Rational>> objective_terms; // average mode
    Rational objective_t = 0;                                       // worst mode
};

struct RationalSolution {
    Rational objective_value;
    std::vector<Rational> subset_values; // indexed by subset mask
    Rational t_value = 0;
    std::vector<Rational> row_duals; // per LP row; signed on equality rows
    long iterations = 0;
};

/// Builds the LP for a graph with at most 10 vertices.
EntropyLP build_lp(const LabeledGraph& g, LpMode mode);

/// Exact rational optimum with dual values; verifies primal and dual
/// feasibility and strong duality before returning.
RationalSolution solve(const EntropyLP& lp);

/// build_lp composed with solve.
Rational shannon_bound(const LabeledGraph& g, LpMode mode);

/// Re-expresses the LP optimum as a checkable certificate over the extended
/// ground set: one step per constraint with nonzero dual, equality rows
/// entering with a direction sign.
Certificate extract_dual_certificate(const EntropyLP& lp, const RationalSolution& sol);

/// Human-readable LP text (variables named f_<mask>).
std::string lp_text_dump(const EntropyLP& lp);

/// Solution as JSON with rationals rendered "p/q".
std::string solution_to_json(const EntropyLP& lp, const RationalSolution& sol);

} // namespace inforatio

#endif
