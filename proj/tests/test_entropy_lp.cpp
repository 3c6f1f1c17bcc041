#include <doctest.h>

#include "inforatio/entropy_lp.hpp"
#include "inforatio/errors.hpp"

using namespace inforatio;

namespace {

LabeledGraph k2() { return LabeledGraph::from_edges(2, {{0, 1}}); }
LabeledGraph paw() { return LabeledGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

LabeledGraph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.push_back({u, v});
    return LabeledGraph::from_edges(n, edges);
}

LabeledGraph induced(const LabeledGraph& g, const std::vector<int>& keep) {
    std::vector<int> index(g.vertex_count, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
    return LabeledGraph::from_edges(int(keep.size()), edges);
}

} // namespace

TEST_CASE("row and variable counts") {
    EntropyLP lp = build_lp(k2(), LpMode::Worst);
    CHECK(lp.ground_size == 3);
    CHECK(lp.num_subset_vars == 8);
    int bound_rows = 0;
    for (const LpRow& row : lp.rows)
        if (row.kind == RowKind::WorstBound) ++bound_rows;
    CHECK(bound_rows == 2);

    EntropyLP p4 = build_lp(build_cube_star(1), LpMode::Worst);
    CHECK(p4.num_subset_vars == 32);

    EntropyLP cs2 = build_lp(build_cube_star(2), LpMode::Worst);
    CHECK(cs2.num_subset_vars == 512);
    int mono = 0, submod = 0;
    for (const LpRow& row : cs2.rows) {
        if (row.kind == RowKind::ElementalMono) ++mono;
        if (row.kind == RowKind::ElementalSubmod) ++submod;
    }
    CHECK(mono == 9);
    CHECK(submod == 36 * 128);

    CHECK_THROWS_AS(build_lp(graph_from_mask(11, 0x3), LpMode::Worst), SizeError);
}

TEST_CASE("edge graph is ideal") {
    CHECK(shannon_bound(k2(), LpMode::Worst) == 1);
    CHECK(shannon_bound(k2(), LpMode::Average) == 1);
}

TEST_CASE("path on four vertices") {
    LabeledGraph p4 = build_cube_star(1);
    CHECK(shannon_bound(p4, LpMode::Worst) == Rational(3, 2));

    Rational avg = shannon_bound(p4, LpMode::Average);
    CHECK(avg >= 1);
    CHECK(avg <= Rational(3, 2));
}

TEST_CASE("small graph zoo") {
    // Complete multipartite graphs are ideal; the others need 3/2.
    CHECK(shannon_bound(graph_from_mask(3, 0b111), LpMode::Worst) == 1);          // triangle
    CHECK(shannon_bound(graph_from_mask(4, 0b000111), LpMode::Worst) == 1);       // star K_{1,3}
    CHECK(shannon_bound(build_hypercube(2), LpMode::Worst) == 1);                 // C_4 = K_{2,2}
    CHECK(shannon_bound(graph_from_mask(4, 0b111110), LpMode::Worst) == 1);       // diamond
    CHECK(shannon_bound(graph_from_mask(4, 0b111111), LpMode::Worst) == 1);       // K_4
    CHECK(shannon_bound(paw(), LpMode::Worst) == Rational(3, 2));

    // Adding an edge can lower the bound (paw -> diamond), so the bound is
    // monotone only under induced subgraphs, checked below.
    CHECK(shannon_bound(paw(), LpMode::Worst) > shannon_bound(graph_from_mask(4, 0b111110), LpMode::Worst));
}

TEST_CASE("worst dominates average") {
    for (const LabeledGraph& g : {k2(), build_cube_star(1), paw(), build_hypercube(2)})
        CHECK(shannon_bound(g, LpMode::Worst) >= shannon_bound(g, LpMode::Average));
}

TEST_CASE("induced subgraph monotonicity over all 4-vertex graphs") {
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        LabeledGraph g = graph_from_mask(4, mask);
        Rational whole = shannon_bound(g, LpMode::Worst);
        for (int drop = 0; drop < 4; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < 4; ++v)
                if (v != drop) keep.push_back(v);
            CHECK(shannon_bound(induced(g, keep), LpMode::Worst) <= whole);
        }
    }
}

TEST_CASE("secret normalization scales the optimum") {
    for (LpMode mode : {LpMode::Worst, LpMode::Average}) {
        LabeledGraph p4 = build_cube_star(1);
        EntropyLP lp = build_lp(p4, mode);
        Rational base = solve(lp).objective_value;
        for (LpRow& row : lp.rows)
            if (row.kind == RowKind::SecretUnit || row.kind == RowKind::MisIndependent) row.rhs *= 2;
        CHECK(solve(lp).objective_value == base * 2);
    }
}

TEST_CASE("dual certificate extraction") {
    for (LpMode mode : {LpMode::Worst, LpMode::Average}) {
        for (const LabeledGraph& g : {k2(), build_cube_star(1)}) {
            EntropyLP lp = build_lp(g, mode);
            RationalSolution sol = solve(lp);
            Certificate cert = extract_dual_certificate(lp, sol);
            CHECK(cert.extended);
            Verdict verdict = check(cert);
            INFO(verdict.reason);
            CHECK(verdict.valid);
            CHECK(cert.bound == sol.objective_value);
        }
    }
}

TEST_CASE("lp text dump and solution json") {
    EntropyLP lp = build_lp(k2(), LpMode::Worst);
    std::string text = lp_text_dump(lp);
    CHECK(text.find("Minimize") != std::string::npos);
    CHECK(text.find("f_0") != std::string::npos);

    RationalSolution sol = solve(lp);
    std::string js = solution_to_json(lp, sol);
    CHECK(js.find("\"objective\": \"1\"") != std::string::npos);
}
