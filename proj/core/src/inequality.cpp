#include "inforatio/inequality.hpp"

#include "inforatio/errors.hpp"

namespace inforatio {

namespace {

Subset vertex_part(const Subset& s, const GroundContext& ctx) {
    if (!ctx.extended) return s;
    Subset v(ctx.graph.vertex_count);
    for (int e : s.elements())
        if (e < ctx.graph.vertex_count) v.set(e);
    return v;
}

} // namespace

bool GroundContext::independent(const Subset& s) const {
    if (extended && s.test(secret_bit())) return false;
    return !graph.contains_edge(vertex_part(s, *this));
}

std::optional<std::string> side_condition_violation(const InequalityInstance& inst,
                                                    const GroundContext& ctx,
                                                    StrongSubmodularityRule rule) {
    const int nbits = ctx.nbits();
    auto sized = [&](const Subset& s) { return s.size() == nbits; };
    switch (inst.kind) {
        case IneqKind::EmptyZero:
            return std::nullopt;
        case IneqKind::Positivity:
            if (!sized(inst.a)) return "positivity set has wrong ground size";
            return std::nullopt;
        case IneqKind::Monotonicity:
            if (!sized(inst.a) || !sized(inst.b)) return "monotonicity sets have wrong ground size";
            if (!inst.a.is_subset_of(inst.b)) return "monotonicity requires A to be a subset of B";
            return std::nullopt;
        case IneqKind::Submodularity:
            if (!sized(inst.a) || !sized(inst.b)) return "submodularity sets have wrong ground size";
            return std::nullopt;
        case IneqKind::StrongMonotonicity:
            if (!sized(inst.a) || !sized(inst.b)) return "strong monotonicity sets have wrong ground size";
            if (!inst.a.is_subset_of(inst.b) || inst.a == inst.b)
                return "strong monotonicity requires A to be a proper subset of B";
            if (!ctx.independent(inst.a)) return "strong monotonicity requires A independent";
            if (ctx.independent(inst.b)) return "strong monotonicity requires B qualified";
            return std::nullopt;
        case IneqKind::StrongSubmodularity:
            if (!sized(inst.a) || !sized(inst.b)) return "strong submodularity sets have wrong ground size";
            if (ctx.independent(inst.a)) return "strong submodularity requires A qualified";
            if (rule == StrongSubmodularityRule::Literal && ctx.independent(inst.b))
                return "strong submodularity (literal rule) requires B qualified";
            if (!ctx.independent(inst.a & inst.b))
                return "strong submodularity requires the intersection independent";
            return std::nullopt;
        case IneqKind::Determines:
            if (!ctx.extended) return "determines requires the extended ground set";
            if (!sized(inst.a)) return "determines set has wrong ground size";
            if (inst.a.test(ctx.secret_bit())) return "determines set must not contain the secret";
            if (ctx.independent(inst.a)) return "determines requires a qualified set";
            return std::nullopt;
        case IneqKind::IndependentOfSecret:
            if (!ctx.extended) return "independence axiom requires the extended ground set";
            if (!sized(inst.a)) return "independence axiom set has wrong ground size";
            if (inst.a.test(ctx.secret_bit())) return "independence axiom set must not contain the secret";
            if (!ctx.independent(inst.a)) return "independence axiom requires an independent set";
            return std::nullopt;
        case IneqKind::SecretUnit:
            if (!ctx.extended) return "secret normalization requires the extended ground set";
            return std::nullopt;
    }
    return "unknown inequality kind";
}

std::pair<LinearExpr, Rational> instance_expr(const InequalityInstance& inst,
                                              const GroundContext& ctx,
                                              StrongSubmodularityRule rule) {
    if (auto why = side_condition_violation(inst, ctx, rule))
        throw InvalidInstanceError(kind_name(inst.kind) + ": " + *why);

    const int nbits = ctx.nbits();
    const int dir = inst.direction >= 0 ? 1 : -1;
    LinearExpr expr;
    Rational rhs = 0;
    switch (inst.kind) {
        case IneqKind::EmptyZero:
            expr.add_term(Subset(nbits), dir);
            break;
        case IneqKind::Positivity:
            expr.add_term(inst.a, 1);
            break;
        case IneqKind::Monotonicity:
            expr.add_term(inst.b, 1);
            expr.add_term(inst.a, -1);
            break;
        case IneqKind::Submodularity:
            expr.add_term(inst.a, 1);
            expr.add_term(inst.b, 1);
            expr.add_term(inst.a | inst.b, -1);
            expr.add_term(inst.a & inst.b, -1);
            break;
        case IneqKind::StrongMonotonicity:
            expr.add_term(inst.b, 1);
            expr.add_term(inst.a, -1);
            rhs = 1;
            break;
        case IneqKind::StrongSubmodularity:
            expr.add_term(inst.a, 1);
            expr.add_term(inst.b, 1);
            expr.add_term(inst.a | inst.b, -1);
            expr.add_term(inst.a & inst.b, -1);
            rhs = 1;
            break;
        case IneqKind::Determines:
            expr.add_term(inst.a.with(ctx.secret_bit()), dir);
            expr.add_term(inst.a, -dir);
            break;
        case IneqKind::IndependentOfSecret:
            expr.add_term(inst.a.with(ctx.secret_bit()), dir);
            expr.add_term(inst.a, -dir);
            rhs = dir;
            break;
        case IneqKind::SecretUnit:
            expr.add_term(Subset(nbits).with(ctx.secret_bit()), dir);
            rhs = dir;
            break;
    }
    return {std::move(expr), std::move(rhs)};
}

std::string kind_name(IneqKind kind) {
    switch (kind) {
        case IneqKind::EmptyZero: return "empty_zero";
        case IneqKind::Positivity: return "positivity";
        case IneqKind::Monotonicity: return "monotonicity";
        case IneqKind::Submodularity: return "submodularity";
        case IneqKind::StrongMonotonicity: return "strong_monotonicity";
        case IneqKind::StrongSubmodularity: return "strong_submodularity";
        case IneqKind::Determines: return "determines";
        case IneqKind::IndependentOfSecret: return "independent_of_secret";
        case IneqKind::SecretUnit: return "secret_unit";
    }
    throw ParameterError("unknown inequality kind");
}

IneqKind kind_from_name(const std::string& name) {
    if (name == "empty_zero") return IneqKind::EmptyZero;
    if (name == "positivity") return IneqKind::Positivity;
    if (name == "monotonicity") return IneqKind::Monotonicity;
    if (name == "submodularity") return IneqKind::Submodularity;
    if (name == "strong_monotonicity") return IneqKind::StrongMonotonicity;
    if (name == "strong_submodularity") return IneqKind::StrongSubmodularity;
    if (name == "determines") return IneqKind::Determines;
    if (name == "independent_of_secret") return IneqKind::IndependentOfSecret;
    if (name == "secret_unit") return IneqKind::SecretUnit;
    throw ParameterError("unknown inequality kind: " + name);
}

} // namespace inforatio
