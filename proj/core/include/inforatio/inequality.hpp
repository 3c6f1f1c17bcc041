#ifndef INFORATIO_INEQUALITY_HPP
#define INFORATIO_INEQUALITY_HPP

#include <optional>
#include <string>
#include <utility>

#include "inforatio/graph.hpp"
#include "inforatio/linear_expr.hpp"

namespace inforatio {

/// One concrete information inequality over the entropy values of a graph's
/// access structure.  The first six kinds are the Shannon and access-structure
/// inequalities on vertex sets; the last three are the perfect-scheme axioms
/// on the extended ground set (vertices plus the secret element), used when
/// importing LP duals.  Equality-flavored kinds (EmptyZero, Determines,
/// IndependentOfSecret, SecretUnit) carry a direction and act as two opposite
/// inequalities, so certificate coefficients stay nonnegative.
enum class IneqKind {
    EmptyZero,
    Positivity,
    Monotonicity,
    Submodularity,
    StrongMonotonicity,
    StrongSubmodularity,
    Determines,
    IndependentOfSecret,
    SecretUnit,
};

/// Which precondition the checker enforces for strong submodularity.
/// Generalized: the first set is qualified and the intersection independent.
/// Literal: additionally the second set must be qualified.
enum class StrongSubmodularityRule { Generalized, Literal };

struct InequalityInstance {
    IneqKind kind;
    Subset a;
    Subset b;
    int direction = +1; // meaningful for equality-flavored kinds only

    bool operator==(const InequalityInstance&) const = default;
};

/// Ground set a certificate lives over: the graph's vertices, optionally
/// extended by the secret element as the highest bit.
struct GroundContext {
    const LabeledGraph& graph;
    bool extended = false;

    int nbits() const { return graph.vertex_count + (extended ? 1 : 0); }
    int secret_bit() const { return graph.vertex_count; }
    /// Unqualified: an independent vertex set not containing the secret.
    bool independent(const Subset& s) const;
    bool qualified(const Subset& s) const { return !independent(s); }
};

/// Human-readable name of the failing side condition, or nullopt if valid.
std::optional<std::string> side_condition_violation(const InequalityInstance& inst,
                                                    const GroundContext& ctx,
                                                    StrongSubmodularityRule rule);

/// The instance's linear expression and right-hand constant: expr >= rhs.
/// Throws InvalidInstanceError when a side condition fails.
std::pair<LinearExpr, Rational> instance_expr(const InequalityInstance& inst,
                                              const GroundContext& ctx,
                                              StrongSubmodularityRule rule = StrongSubmodularityRule::Generalized);

std::string kind_name(IneqKind kind);
IneqKind kind_from_name(const std::string& name);

} // namespace inforatio

#endif
