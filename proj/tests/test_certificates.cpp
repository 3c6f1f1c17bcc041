#include <doctest.h>

#include "inforatio/certificate.hpp"
#include "inforatio/errors.hpp"
#include "inforatio/scheme.hpp"

using namespace inforatio;

namespace {

// Canonical cube-star of dimension 1 is the path 2-0-1-3 (cube vertices 0, 1;
// pendant of 0 is 2, pendant of 1 is 3).  In the construction's naming the
// even cube vertex is a=0, the odd one b=1, x=3 is the pendant of b.
constexpr int A = 0, B = 1, Y = 2, X = 3;

} // namespace

TEST_CASE("bracket expansion") {
    Subset x14(4, {A, X}), b1(4, {B}), a1(4, {A});
    LinearExpr br = bracket(x14, b1, a1);
    LinearExpr expected;
    expected.add_term(Subset(4, {A, B, X}), 1);
    expected.add_term(Subset(4, {X}), -1);
    CHECK(br == expected);

    CHECK(bracket(x14, Subset(4), Subset(4)) == LinearExpr{});

    // X = A = {a}, B = {b}: f(ab) - f(empty).
    LinearExpr small = bracket(Subset(4, {A}), b1, Subset(4, {A}));
    LinearExpr small_expected;
    small_expected.add_term(Subset(4, {A, B}), 1);
    small_expected.add_term(Subset(4), -1);
    CHECK(small == small_expected);

    CHECK_THROWS_AS(bracket(x14, b1, Subset(4, {B})), ParameterError);
}

TEST_CASE("instance expressions") {
    LabeledGraph p4 = build_cube_star(1);
    GroundContext ctx{p4, false};

    auto [sub, sub_rhs] = instance_expr({IneqKind::Submodularity, Subset(4, {A}), Subset(4, {B})}, ctx);
    LinearExpr sub_expected;
    sub_expected.add_term(Subset(4, {A}), 1);
    sub_expected.add_term(Subset(4, {B}), 1);
    sub_expected.add_term(Subset(4, {A, B}), -1);
    sub_expected.add_term(Subset(4), -1);
    CHECK(sub == sub_expected);
    CHECK(sub_rhs == 0);

    // f(bax) - f(ax) >= 1: X side below, with b joined, above.
    auto [smono, smono_rhs] =
        instance_expr({IneqKind::StrongMonotonicity, Subset(4, {A, X}), Subset(4, {A, B, X})}, ctx);
    LinearExpr smono_expected;
    smono_expected.add_term(Subset(4, {A, B, X}), 1);
    smono_expected.add_term(Subset(4, {A, X}), -1);
    CHECK(smono == smono_expected);
    CHECK(smono_rhs == 1);

    // f(ab) + f(ax) - f(a) - f(abx) >= 1 under the relaxed precondition.
    auto [ssub, ssub_rhs] =
        instance_expr({IneqKind::StrongSubmodularity, Subset(4, {A, B}), Subset(4, {A, X})}, ctx);
    LinearExpr ssub_expected;
    ssub_expected.add_term(Subset(4, {A, B}), 1);
    ssub_expected.add_term(Subset(4, {A, X}), 1);
    ssub_expected.add_term(Subset(4, {A}), -1);
    ssub_expected.add_term(Subset(4, {A, B, X}), -1);
    CHECK(ssub == ssub_expected);
    CHECK(ssub_rhs == 1);
}

TEST_CASE("side conditions") {
    LabeledGraph p4 = build_cube_star(1);
    GroundContext ctx{p4, false};

    // Both sets independent: rejected under either rule.
    InequalityInstance bad{IneqKind::StrongSubmodularity, Subset(4, {A, X}), Subset(4, {Y, X})};
    CHECK(side_condition_violation(bad, ctx, StrongSubmodularityRule::Generalized).has_value());
    CHECK_THROWS_AS(instance_expr(bad, ctx), InvalidInstanceError);

    // The relaxed rule admits an independent second set; the literal rule
    // does not.  This is the pinned base-case discrepancy.
    InequalityInstance base{IneqKind::StrongSubmodularity, Subset(4, {A, B}), Subset(4, {A, X})};
    CHECK(!side_condition_violation(base, ctx, StrongSubmodularityRule::Generalized));
    auto literal = side_condition_violation(base, ctx, StrongSubmodularityRule::Literal);
    REQUIRE(literal.has_value());
    CHECK(literal->find("literal") != std::string::npos);

    // Strong monotonicity needs an independent lower set and qualified upper set.
    CHECK(side_condition_violation({IneqKind::StrongMonotonicity, Subset(4, {A, B}), Subset(4, {A, B, X})},
                                   ctx, StrongSubmodularityRule::Generalized)
              .has_value());
    CHECK(side_condition_violation({IneqKind::StrongMonotonicity, Subset(4, {X}), Subset(4, {Y, X})}, ctx,
                                   StrongSubmodularityRule::Generalized)
              .has_value());
}

TEST_CASE("cube bracket certificate") {
    for (int d = 1; d <= 4; ++d) {
        LabeledGraph g = build_cube_star(d);
        Certificate cert = build_cube_bracket_bound(d, g);
        CHECK(int(cert.steps.size()) == (4 * d + 1) * (1 << (d - 1)));
        CHECK(cert.bound == Rational(d) * (1 << (d - 1)));
        Verdict verdict = check(cert);
        INFO(verdict.reason);
        CHECK(verdict.valid);
    }

    // d = 1: five steps proving f(a)+f(b) >= f(abx)-f(x)+1.
    LabeledGraph p4 = build_cube_star(1);
    Certificate base = build_cube_bracket_bound(1, p4);
    CHECK(base.steps.size() == 5);
    LinearExpr target;
    target.add_term(Subset(4, {A}), 1);
    target.add_term(Subset(4, {B}), 1);
    target.add_term(Subset(4, {A, B, X}), -1);
    target.add_term(Subset(4, {X}), 1);
    CHECK(base.target == target);
    CHECK(base.bound == 1);

    CHECK_THROWS_AS(build_cube_bracket_bound(2, p4), StructureError);
}

TEST_CASE("tampered certificates are rejected") {
    LabeledGraph p4 = build_cube_star(1);
    Certificate cert = build_cube_bracket_bound(1, p4);

    Certificate negated = cert;
    negated.steps[0].coeff = -1;
    Verdict v1 = check(negated);
    CHECK(!v1.valid);
    CHECK(v1.reason.find("negative coefficient") != std::string::npos);

    Certificate greedy = cert;
    greedy.bound += 1;
    CHECK(!check(greedy).valid);

    Certificate skewed = cert;
    skewed.target.add_term(Subset(4, {Y}), 1);
    Verdict v3 = check(skewed);
    CHECK(!v3.valid);
    CHECK(v3.reason.find("differs from target") != std::string::npos);

    // The base case needs the relaxed strong submodularity rule.
    Verdict literal = check(cert, StrongSubmodularityRule::Literal);
    CHECK(!literal.valid);
}

TEST_CASE("bracket lower bound certificate") {
    for (int d = 1; d <= 4; ++d) {
        LabeledGraph g = build_cube_star(d);
        Certificate cert = build_bracket_bound(d, g);
        CHECK(int(cert.steps.size()) == 3 * (1 << (d - 1)));
        CHECK(cert.bound == (1 << d));
        Verdict verdict = check(cert);
        INFO(verdict.reason);
        CHECK(verdict.valid);
    }

    // d = 1: f(abx) - f(x) >= 2.
    Certificate cert = build_bracket_bound(1, build_cube_star(1));
    LinearExpr target;
    target.add_term(Subset(4, {A, B, X}), 1);
    target.add_term(Subset(4, {X}), -1);
    CHECK(cert.target == target);
    CHECK(cert.bound == 2);
}

TEST_CASE("cube sum certificate and ratio bounds") {
    Certificate cube_sum = build_cube_sum_bound(1, build_cube_star(1));
    LinearExpr target;
    target.add_term(Subset(4, {A}), 1);
    target.add_term(Subset(4, {B}), 1);
    CHECK(cube_sum.target == target);
    CHECK(cube_sum.bound == 3);
    CHECK(check(cube_sum).valid);

    RatioBoundCertificate worst = build_worst_case_bound(2);
    CHECK(worst.ratio_bound == 2);
    CHECK(worst.certificate.bound == 8); // (d+2) * 2^(d-1)
    CHECK(check(worst.certificate).valid);

    for (std::uint64_t seed : {0ull, 1ull, 7ull}) {
        RatioBoundCertificate avg = build_average_case_bound(1, build_delta(1, seed));
        CHECK(avg.ratio_bound == Rational(3, 2));
        CHECK(avg.certificate.bound == 9); // 3 * (d+2) * 2^(d-1)
        Verdict verdict = check(avg.certificate);
        INFO(verdict.reason);
        CHECK(verdict.valid);

        RatioBoundCertificate avg2 = build_average_case_bound(2, build_delta(2, seed));
        CHECK(avg2.ratio_bound == 2);
        CHECK(check(avg2.certificate).valid);
    }
}

TEST_CASE("bracket recursion identity") {
    for (int d = 2; d <= 6; ++d) {
        LabeledGraph g = build_cube_star(d);
        std::vector<CertStep> blocks = top_level_join_blocks(g, d);
        GroundContext ctx{g, false};
        LinearExpr sum;
        Rational rhs = 0;
        for (const CertStep& step : blocks) {
            auto [expr, c] = instance_expr(step.instance, ctx);
            sum.add(expr, step.coeff);
            rhs += c * step.coeff;
        }
        CubeStarSides half0 = cube_star_sides(g, d, d - 1, 0);
        CubeStarSides half1 = cube_star_sides(g, d, d - 1, 1);
        CubeStarSides full = cube_star_sides(g, d, d, 0);
        LinearExpr expected = bracket(half0.x, half0.b, half0.a);
        expected.add(bracket(half1.x, half1.b, half1.a));
        expected.add(bracket(full.x, full.b, full.a), -1);
        CHECK(sum.f_part_equals(expected));
        CHECK(rhs == (1 << (d - 1))); // one strong step per matching edge
    }
}

TEST_CASE("every instance kind holds on a concrete scheme") {
    // Evaluate one valid instance of each kind against the exhaustive entropy
    // vector of the path scheme at q=3 (normalized so the secret has size 1).
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 3);
    std::vector<Subset> all;
    for (std::uint32_t mask = 0; mask < 32; ++mask) all.push_back(Subset::from_mask(5, mask));
    std::vector<long> h = exhaustive_entropies(s, all);
    auto f = [&](const Subset& sub) {
        std::uint32_t mask = 0;
        for (int e : sub.elements()) mask |= 1u << e;
        return make_ratio(h[mask], s.secret_dim);
    };

    GroundContext ctx{p4, true};
    auto holds = [&](InequalityInstance inst) {
        auto [expr, rhs] = instance_expr(inst, ctx);
        return expr.evaluate(f) >= rhs;
    };
    Subset none(5);
    CHECK(holds({IneqKind::EmptyZero, none, none, +1}));
    CHECK(holds({IneqKind::EmptyZero, none, none, -1}));
    CHECK(holds({IneqKind::Positivity, Subset(5, {A}), none}));
    CHECK(holds({IneqKind::Monotonicity, Subset(5, {A}), Subset(5, {A, B})}));
    CHECK(holds({IneqKind::Submodularity, Subset(5, {A}), Subset(5, {B})}));
    CHECK(holds({IneqKind::StrongMonotonicity, Subset(5, {A, X}), Subset(5, {A, B, X})}));
    CHECK(holds({IneqKind::StrongSubmodularity, Subset(5, {A, B}), Subset(5, {A, Y})}));
    for (int dir : {+1, -1}) {
        CHECK(holds({IneqKind::Determines, Subset(5, {A, B}), none, dir}));
        CHECK(holds({IneqKind::IndependentOfSecret, Subset(5, {A, X}), none, dir}));
        CHECK(holds({IneqKind::SecretUnit, none, none, dir}));
    }

    // The relaxed-rule-only base-case instance is NOT enforced by concrete
    // schemes: on this one it evaluates to 1/2.  The strict rule exists for a
    // reason; the relaxed acceptance is pinned separately as a regression.
    InequalityInstance relaxed_only{IneqKind::StrongSubmodularity, Subset(5, {A, B}), Subset(5, {A, X})};
    auto [expr, rhs] = instance_expr(relaxed_only, ctx);
    CHECK(expr.evaluate(f) == Rational(1, 2));
    CHECK(rhs == 1);
}

TEST_CASE("certificate json round trip") {
    Certificate cert = build_cube_sum_bound(2, build_cube_star(2));
    std::string text = certificate_to_json(cert);
    Certificate back = certificate_from_json(text);
    CHECK(back.bound == cert.bound);
    CHECK(back.steps.size() == cert.steps.size());
    CHECK(back.target == cert.target);
    CHECK(back.extended == cert.extended);
    CHECK(check(back).valid);
    CHECK(certificate_to_json(back) == text);
}
