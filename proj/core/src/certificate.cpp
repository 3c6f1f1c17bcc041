#include "inforatio/certificate.hpp"

#include <bit>

#include <nlohmann/json.hpp>

#include "inforatio/errors.hpp"

namespace inforatio {

namespace {

using json = nlohmann::json;

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

void require_canonical_cube_star(const LabeledGraph& g, int d) {
    if (d < 1 || d > 12) throw ParameterError("certificate builders support dimensions 1..12");
    LabeledGraph canon = build_cube_star(d);
    if (g.vertex_count != canon.vertex_count || g.edges != canon.edges)
        throw StructureError("graph is not a canonical cube-star of dimension " + std::to_string(d));
}

struct Builder {
    const LabeledGraph& g;
    int dim;
    std::vector<CertStep> steps;

    GroundContext ctx() const { return GroundContext{g, false}; }

    void push(IneqKind kind, Subset a, Subset b, int direction = +1) {
        InequalityInstance inst{kind, std::move(a), std::move(b), direction};
        if (auto why = side_condition_violation(inst, ctx(), StrongSubmodularityRule::Generalized))
            throw StructureError("generated instance violates " + kind_name(kind) + ": " + *why);
        steps.push_back({std::move(inst), Rational(1)});
    }

    Subset verts(std::initializer_list<int> elems) const {
        return Subset(g.vertex_count, elems);
    }

    int pendant(int cube_vertex) const { return (1 << dim) + cube_vertex; }

    // Base case on the aligned 1-dimensional subcube with fixed bits `h`:
    // endpoints u = h<<1 and u|1, split by global parity into (a, b), with x
    // the pendant of b.  Realizes f(a)+f(b) >= f(abx)-f(x)+1.
    void base_case(std::uint32_t h) {
        int u = int(h) << 1, w = u | 1;
        int a = parity(std::uint32_t(u)) == 0 ? u : w;
        int b = a == u ? w : u;
        int x = pendant(b);
        push(IneqKind::Submodularity, verts({a}), verts({b}));
        push(IneqKind::Submodularity, verts({a}), verts({x}));
        push(IneqKind::StrongSubmodularity, verts({a, b}), verts({a, x}));
        push(IneqKind::EmptyZero, Subset(g.vertex_count), Subset(g.vertex_count), +1);
        push(IneqKind::EmptyZero, Subset(g.vertex_count), Subset(g.vertex_count), +1);
    }

    // Four-step block for one matching edge of the join at level k: the edge
    // (u, u^e_{k-1}) between the two aligned (k-1)-subcubes below (k, h).
    void join_block(int k, int u) {
        int w = u ^ (1 << (k - 1));
        int b = parity(std::uint32_t(u)) == 1 ? u : w;
        int partner = b == u ? w : u;
        int nb = b ^ 1; // even cube neighbor of b inside its own half
        Subset x_same = cube_star_sides(g, dim, k - 1, std::uint32_t(b) >> (k - 1)).x;
        Subset x_other = cube_star_sides(g, dim, k - 1, std::uint32_t(partner) >> (k - 1)).x;

        push(IneqKind::Submodularity, x_same.with(b), (x_same | x_other).without(partner));
        push(IneqKind::StrongSubmodularity, x_other.with(b), x_other.without(partner).with(nb).with(b));
        push(IneqKind::Submodularity, x_other, x_other.without(partner).with(b));
        push(IneqKind::Submodularity, x_other.with(nb).with(b), (x_same | x_other).with(b).without(partner));
    }
};

Subset remap_subset(const Subset& s, const std::vector<int>& from_canonical, int host_n) {
    Subset out(host_n);
    for (int e : s.elements()) out.set(from_canonical[e]);
    return out;
}

json step_to_json(const CertStep& step) {
    json j;
    j["kind"] = kind_name(step.instance.kind);
    json sets = json::array();
    switch (step.instance.kind) {
        case IneqKind::EmptyZero:
        case IneqKind::SecretUnit:
            break;
        case IneqKind::Positivity:
        case IneqKind::Determines:
        case IneqKind::IndependentOfSecret:
            sets.push_back(step.instance.a.to_hex());
            break;
        default:
            sets.push_back(step.instance.a.to_hex());
            sets.push_back(step.instance.b.to_hex());
            break;
    }
    j["sets"] = sets;
    j["coeff"] = to_fraction_string(step.coeff);
    if (step.instance.kind == IneqKind::EmptyZero || step.instance.kind == IneqKind::SecretUnit ||
        step.instance.kind == IneqKind::Determines || step.instance.kind == IneqKind::IndependentOfSecret)
        j["direction"] = step.instance.direction;
    return j;
}

} // namespace

CubeStarSides cube_star_sides(const LabeledGraph& g, int dim, int free_dims, std::uint32_t fixed_bits) {
    int n = g.vertex_count;
    CubeStarSides sides{Subset(n), Subset(n), Subset(n)};
    int cube = 1 << dim;
    for (int c = fixed_bits << free_dims; c < int((fixed_bits + 1) << free_dims); ++c) {
        if (parity(std::uint32_t(c)) == 0) {
            sides.a.set(c);
            sides.x.set(c);
        } else {
            sides.b.set(c);
            sides.x.set(cube + c);
        }
    }
    return sides;
}

Certificate build_cube_bracket_bound(int d, const LabeledGraph& g) {
    require_canonical_cube_star(g, d);
    Builder builder{g, d, {}};
    for (std::uint32_t h = 0; h < (1u << (d - 1)); ++h) builder.base_case(h);
    for (int k = 2; k <= d; ++k)
        for (std::uint32_t h = 0; h < (1u << (d - k)); ++h)
            for (int low = 0; low < (1 << (k - 1)); ++low)
                builder.join_block(k, int(h << k) | low);

    Certificate cert;
    cert.graph = g;
    cert.extended = false;
    cert.steps = std::move(builder.steps);
    CubeStarSides full = cube_star_sides(g, d, d, 0);
    for (int c = 0; c < (1 << d); ++c) cert.target.add_term(Subset(g.vertex_count, {c}), 1);
    cert.target.add(bracket(full.x, full.b, full.a), -1);
    cert.bound = Rational(d) * (1 << (d - 1));
    return cert;
}

Certificate build_bracket_bound(int d, const LabeledGraph& g) {
    require_canonical_cube_star(g, d);
    Builder builder{g, d, {}};
    CubeStarSides full = cube_star_sides(g, d, d, 0);
    for (int a : full.a.elements()) {
        int b = a ^ 1; // lowest-dimension cube matching
        int y = builder.pendant(a);
        builder.push(IneqKind::StrongMonotonicity, full.x, full.x.with(b));
        builder.push(IneqKind::StrongMonotonicity, full.x.with(y).without(a), full.x.with(y));
        builder.push(IneqKind::Submodularity, full.x.with(y).without(a), full.x);
    }
    Certificate cert;
    cert.graph = g;
    cert.extended = false;
    cert.steps = std::move(builder.steps);
    cert.target = bracket(full.x, full.b, full.a);
    cert.bound = 1 << d;
    return cert;
}

Certificate build_cube_sum_bound(int d, const LabeledGraph& g) {
    Certificate part1 = build_cube_bracket_bound(d, g);
    Certificate part2 = build_bracket_bound(d, g);
    Certificate cert;
    cert.graph = g;
    cert.extended = false;
    cert.steps = std::move(part1.steps);
    cert.steps.insert(cert.steps.end(), part2.steps.begin(), part2.steps.end());
    for (int c = 0; c < (1 << d); ++c) cert.target.add_term(Subset(g.vertex_count, {c}), 1);
    cert.bound = Rational(d + 2) * (1 << (d - 1));
    return cert;
}

RatioBoundCertificate build_worst_case_bound(int d) {
    LabeledGraph g = build_cube_star(d);
    Certificate cert = build_cube_sum_bound(d, g);
    // Some cube vertex carries at least the average of the certified sum over
    // the 2^d cube vertices; pendants have smaller load.
    return {std::move(cert), Rational(d + 2) / 2};
}

RatioBoundCertificate build_average_case_bound(int d, const LabeledGraph& delta) {
    std::vector<CubeStarView> views = induced_cube_star_views(delta);
    LabeledGraph canonical = build_cube_star(d);
    Certificate base = build_cube_sum_bound(d, canonical);

    Certificate cert;
    cert.graph = delta;
    cert.extended = false;
    GroundContext ctx{delta, false};
    for (const CubeStarView& view : views) {
        for (const CertStep& step : base.steps) {
            InequalityInstance inst = step.instance;
            inst.a = remap_subset(inst.a, view.from_canonical, delta.vertex_count);
            inst.b = remap_subset(inst.b, view.from_canonical, delta.vertex_count);
            if (auto why = side_condition_violation(inst, ctx, StrongSubmodularityRule::Generalized))
                throw StructureError("view-mapped instance violates " + kind_name(inst.kind) + ": " + *why);
            cert.steps.push_back({std::move(inst), step.coeff});
        }
    }
    for (int v = 0; v < delta.vertex_count; ++v) cert.target.add_term(Subset(delta.vertex_count, {v}), 1);
    cert.bound = Rational(3) * (d + 2) * (1 << (d - 1));
    return {std::move(cert), Rational(d + 2) / 2};
}

std::vector<CertStep> top_level_join_blocks(const LabeledGraph& g, int d) {
    require_canonical_cube_star(g, d);
    if (d < 2) throw ParameterError("the top-level join needs dimension >= 2");
    Builder builder{g, d, {}};
    for (int low = 0; low < (1 << (d - 1)); ++low) builder.join_block(d, low);
    return std::move(builder.steps);
}

Verdict check(const Certificate& cert, StrongSubmodularityRule rule) {
    GroundContext ctx{cert.graph, cert.extended};
    LinearExpr sum;
    Rational constant_sum = 0;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertStep& step = cert.steps[i];
        if (step.coeff < 0)
            return {false, "step " + std::to_string(i) + ": negative coefficient " + to_fraction_string(step.coeff)};
        if (auto why = side_condition_violation(step.instance, ctx, rule))
            return {false, "step " + std::to_string(i) + " (" + kind_name(step.instance.kind) + "): " + *why};
        auto [expr, rhs] = instance_expr(step.instance, ctx, rule);
        sum.add(expr, step.coeff);
        constant_sum += step.coeff * rhs;
    }
    if (!sum.f_part_equals(cert.target)) {
        // Report the first subset whose coefficient disagrees.
        auto it = sum.terms().begin();
        auto jt = cert.target.terms().begin();
        while (it != sum.terms().end() && jt != cert.target.terms().end() && *it == *jt) {
            ++it;
            ++jt;
        }
        std::string where = it != sum.terms().end()   ? it->first.to_hex()
                            : jt != cert.target.terms().end() ? jt->first.to_hex()
                                                              : "?";
        return {false, "weighted step sum differs from target at subset " + where};
    }
    if (constant_sum < cert.bound)
        return {false, "weighted constants sum to " + to_fraction_string(constant_sum) +
                           " which is below the bound " + to_fraction_string(cert.bound)};
    return {true, ""};
}

std::string certificate_to_json(const Certificate& cert) {
    json j;
    j["ground"] = cert.extended ? "vertices_and_secret" : "vertices";
    j["graph"] = json::parse(graph_to_json(cert.graph));
    json steps = json::array();
    for (const CertStep& step : cert.steps) steps.push_back(step_to_json(step));
    j["steps"] = steps;
    json terms = json::object();
    for (const auto& [s, c] : cert.target.terms()) terms[s.to_hex()] = to_fraction_string(c);
    j["target"] = {{"terms", terms}, {"bound", to_fraction_string(cert.bound)}};
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    Certificate cert;
    cert.extended = j.at("ground").get<std::string>() == "vertices_and_secret";
    cert.graph = graph_from_json(j.at("graph").dump());
    int nbits = cert.graph.vertex_count + (cert.extended ? 1 : 0);
    for (const auto& js : j.at("steps")) {
        CertStep step;
        step.instance.kind = kind_from_name(js.at("kind").get<std::string>());
        const auto& sets = js.at("sets");
        step.instance.a = sets.size() > 0 ? Subset::from_hex(nbits, sets[0].get<std::string>()) : Subset(nbits);
        step.instance.b = sets.size() > 1 ? Subset::from_hex(nbits, sets[1].get<std::string>()) : Subset(nbits);
        step.instance.direction = js.contains("direction") ? js["direction"].get<int>() : +1;
        step.coeff = rational_from_string(js.at("coeff").get<std::string>());
        cert.steps.push_back(std::move(step));
    }
    for (const auto& [key, val] : j.at("target").at("terms").items())
        cert.target.add_term(Subset::from_hex(nbits, key), rational_from_string(val.get<std::string>()));
    cert.bound = rational_from_string(j.at("target").at("bound").get<std::string>());
    return cert;
}

} // namespace inforatio
