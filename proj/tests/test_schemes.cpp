#include <doctest.h>

#include <algorithm>
#include <set>

#include "inforatio/entropy_lp.hpp"
#include "inforatio/errors.hpp"
#include "inforatio/gfq.hpp"
#include "inforatio/scheme.hpp"

using namespace inforatio;

namespace {

LabeledGraph k2() { return LabeledGraph::from_edges(2, {{0, 1}}); }

int subset_rank(const LinearScheme& s, const Subset& a) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (int v : a.elements()) {
        auto [begin, count] = s.participant_rows[v];
        for (int r = begin; r < begin + count; ++r) rows.push_back(s.rows[r]);
    }
    return gf_rank(std::move(rows), s.field.modulus);
}

// Widen a vertex set into the extended ground set of the entropy oracle.
Subset extended(const LabeledGraph& g, std::initializer_list<int> elems) {
    return Subset(g.vertex_count + 1, elems);
}

} // namespace

TEST_CASE("gfq primitives") {
    CHECK(is_prime(2));
    CHECK(is_prime(257));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91)); // 7 * 13
    CHECK(gf_inverse(3, 7) == 5);
    CHECK(gf_rank({{1, 2}, {2, 4}}, 5) == 1);
    CHECK(gf_rank({{1, 0}, {0, 1}, {1, 1}}, 3) == 2);
    CHECK(gf_rank({}, 3) == 0);
}

TEST_CASE("edge scheme") {
    LinearScheme s = build_star_scheme(k2(), 3);
    CHECK(s.participant_rows[0].second == 2);
    CHECK(s.participant_rows[1].second == 2);
    RatioReport ratios = information_ratios(s);
    CHECK(ratios.max == 1);
    CHECK(ratios.average == 1);

    CHECK_THROWS_AS(build_star_scheme(k2(), 4), ParameterError); // not prime
}

TEST_CASE("path scheme ranks and ratios") {
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 5);
    std::multiset<int> row_counts;
    for (auto [begin, count] : s.participant_rows) row_counts.insert(count);
    CHECK(row_counts == std::multiset<int>{2, 2, 3, 3});

    RatioReport ratios = information_ratios(s);
    std::multiset<Rational> per(ratios.per_vertex.begin(), ratios.per_vertex.end());
    CHECK(per == std::multiset<Rational>{1, 1, Rational(3, 2), Rational(3, 2)});
    CHECK(ratios.max == Rational(3, 2));
}

TEST_CASE("determining and independence checks") {
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 5);

    for (auto [u, v] : p4.edges) CHECK(is_determining(s, Subset(4, {u, v})));
    CHECK(!is_determining(s, Subset(4)));
    for (int v = 0; v < 4; ++v) CHECK(!is_determining(s, Subset(4, {v})));

    CHECK(is_independent_of_secret(s, Subset(4)));
    for (const Subset& m : maximal_independent_sets(p4)) CHECK(is_independent_of_secret(s, m));
    for (auto [u, v] : p4.edges) CHECK(!is_independent_of_secret(s, Subset(4, {u, v})));
}

TEST_CASE("verify perfect") {
    for (int d = 1; d <= 3; ++d) {
        LabeledGraph g = build_cube_star(d);
        LinearScheme s = build_star_scheme(g, d <= 2 ? 11 : 17);
        PerfectnessReport report = verify_perfect(s, g);
        std::string first_violation = report.violations.empty() ? "" : report.violations.front();
        INFO(first_violation);
        CHECK(report.perfect);
        CHECK(!report.sampled);
    }
    for (std::uint64_t seed : {0ull, 3ull}) {
        LabeledGraph g = build_delta(2, seed);
        PerfectnessReport report = verify_perfect(build_star_scheme(g, 13), g);
        CHECK(report.perfect);
    }

    // Fault injection: zeroing one leaf row breaks its edge.
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 5);
    auto [begin, count] = s.participant_rows[2]; // pendant holding a leaf row
    std::fill(s.rows[begin + 1].begin(), s.rows[begin + 1].end(), 0);
    PerfectnessReport broken = verify_perfect(s, p4);
    CHECK(!broken.perfect);
    REQUIRE(!broken.violations.empty());
    CHECK(broken.violations.front().find("does not determine") != std::string::npos);

    // Sampled mode.
    LabeledGraph cs4 = build_cube_star(4);
    CHECK_THROWS_AS(verify_perfect(build_star_scheme(cs4, 37), cs4), SizeError);
    PerfectnessReport sampled = verify_perfect(build_star_scheme(cs4, 37), cs4, 200);
    CHECK(sampled.perfect);
    CHECK(sampled.sampled);
    CHECK(sampled.unqualified_checked == 200);
}

TEST_CASE("regular graphs load every vertex equally") {
    LabeledGraph d2 = build_delta(2);
    RatioReport ratios = information_ratios(build_star_scheme(d2, 13));
    for (const Rational& r : ratios.per_vertex) CHECK(r == 2); // degree 3 everywhere
    CHECK(ratios.average == 2);

    LabeledGraph d3 = build_delta(3);
    RatioReport r3 = information_ratios(build_star_scheme(d3, 29));
    CHECK(r3.average == Rational(5, 2));
    CHECK(r3.max == Rational(5, 2));
}

TEST_CASE("exhaustive entropy oracle matches ranks") {
    // K_2 and the path at q = 3: evaluation points stay distinct across every
    // edge even though q is smaller than the vertex count.
    for (const LabeledGraph& g : {k2(), build_cube_star(1)}) {
        LinearScheme s = build_star_scheme(g, 3);
        std::vector<Subset> queries;
        std::vector<int> expected_ranks;
        for (int v = 0; v < g.vertex_count; ++v) {
            queries.push_back(Subset(g.vertex_count + 1, {v}));
            expected_ranks.push_back(subset_rank(s, Subset(g.vertex_count, {v})));
        }
        for (auto [u, v] : g.edges) {
            queries.push_back(Subset(g.vertex_count + 1, {u, v}));
            expected_ranks.push_back(subset_rank(s, Subset(g.vertex_count, {u, v})));
        }
        // The secret alone has entropy = secret_dim.
        queries.push_back(Subset(g.vertex_count + 1, {g.vertex_count}));
        expected_ranks.push_back(s.secret_dim);

        std::vector<long> entropies = exhaustive_entropies(s, queries);
        for (std::size_t i = 0; i < queries.size(); ++i) CHECK(entropies[i] == expected_ranks[i]);
    }

    // One cube vertex of the path holds 3 q-ary units.
    LinearScheme s = build_star_scheme(build_cube_star(1), 3);
    CHECK(exhaustive_entropies(s, {extended(build_cube_star(1), {1})}) == std::vector<long>{3});

    CHECK_THROWS_AS(exhaustive_entropies(build_star_scheme(build_cube_star(2), 11), {}), SizeError);
}

TEST_CASE("perfectness axioms visible in the entropy oracle") {
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 3);
    // Qualified sets absorb the secret; independent sets add its full size.
    auto h = [&](std::initializer_list<int> elems) {
        return exhaustive_entropies(s, {extended(p4, elems)}).front();
    };
    CHECK(h({0, 1, 4}) == h({0, 1}));          // edge + secret
    CHECK(h({0, 3, 4}) == h({0, 3}) + 2);      // independent set + secret
    CHECK(h({4}) == 2);
}

TEST_CASE("scheme entropy vector is feasible for the entropy lp") {
    LabeledGraph p4 = build_cube_star(1);
    LinearScheme s = build_star_scheme(p4, 3);
    std::vector<Subset> all_subsets;
    for (std::uint32_t mask = 0; mask < 32; ++mask)
        all_subsets.push_back(Subset::from_mask(5, mask));
    std::vector<long> h = exhaustive_entropies(s, all_subsets);

    EntropyLP lp = build_lp(p4, LpMode::Worst);
    for (const LpRow& row : lp.rows) {
        if (row.kind == RowKind::WorstBound) continue;
        Rational activity = 0;
        for (const auto& [mask, coef] : row.terms)
            activity += coef * make_ratio(h[mask], s.secret_dim); // f = H / H(secret)
        if (row.relation == RowRelation::Eq)
            CHECK(activity == row.rhs);
        else
            CHECK(activity >= row.rhs);
    }
}

TEST_CASE("shannon bound sandwiched by the scheme") {
    for (const LabeledGraph& g :
         {k2(), build_cube_star(1), build_delta(1),
          LabeledGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),
          LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})}) {
        std::uint64_t q = std::uint64_t(g.vertex_count);
        while (!is_prime(q)) ++q;
        LinearScheme s = build_star_scheme(g, q);
        RatioReport ratios = information_ratios(s);
        CHECK(shannon_bound(g, LpMode::Worst) <= ratios.max);
        CHECK(shannon_bound(g, LpMode::Average) <= ratios.average);
    }
    // Tight on the named families.
    CHECK(shannon_bound(build_cube_star(1), LpMode::Worst) ==
          information_ratios(build_star_scheme(build_cube_star(1), 5)).max);
    CHECK(shannon_bound(build_delta(1), LpMode::Average) ==
          information_ratios(build_star_scheme(build_delta(1), 7)).average);
}

TEST_CASE("determinism and serialization") {
    LabeledGraph g = build_cube_star(2);
    LinearScheme a = build_star_scheme(g, 11);
    LinearScheme b = build_star_scheme(g, 11);
    CHECK(a.rows == b.rows);
    CHECK(a.participant_rows == b.participant_rows);

    std::string js = scheme_to_json(a);
    CHECK(js.find("\"q\": 11") != std::string::npos);
    PerfectnessReport report = verify_perfect(a, g);
    std::string rj = perfectness_report_to_json(report, information_ratios(a));
    CHECK(rj.find("\"perfect\": true") != std::string::npos);
}

TEST_CASE("field too small for adjacent evaluation points") {
    // A triangle at q = 2 collides on the edge {0, 2}.
    LabeledGraph tri = LabeledGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(build_star_scheme(tri, 2), ParameterError);
}
