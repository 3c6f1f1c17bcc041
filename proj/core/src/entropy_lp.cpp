#include "inforatio/entropy_lp.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "inforatio/errors.hpp"
#include "inforatio/simplex.hpp"

namespace inforatio {

namespace {

using json = nlohmann::json;

std::uint32_t subset_to_mask(const Subset& s) {
    std::uint32_t mask = 0;
    for (int e : s.elements()) mask |= std::uint32_t(1) << e;
    return mask;
}

// ---- symmetry folding -------------------------------------------------
//
// The LP is invariant under any graph automorphism (constraints of each kind
// map onto constraints of the same kind, the objective is fixed), so an
// optimal symmetric solution exists and the LP may be solved over subset
// orbits instead of subsets.  Folded duals spread equally over the original
// rows of each folded class; the exact post-checks in solve() revalidate the
// unfolded solution against every original constraint.

std::vector<std::vector<int>> graph_automorphisms(const LabeledGraph& g, std::size_t cap) {
    const int n = g.vertex_count;
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    std::vector<std::vector<int>> found;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    auto recurse = [&](auto&& self, int v) -> void {
        if (found.size() >= cap) return;
        if (v == n) {
            found.push_back(image);
            return;
        }
        for (int w = 0; w < n && found.size() < cap; ++w) {
            if (used[w] || g.degree(v) != g.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (((adj[v] >> u) & 1) != ((adj[w] >> image[u]) & 1)) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            image[v] = -1;
        }
    };
    recurse(recurse, 0);
    return found;
}

struct SymmetryFold {
    int orbit_count = 0;
    std::vector<int> orbit_of;   // per subset mask
    std::vector<int> orbit_size; // per orbit id

    struct RowClass {
        std::vector<std::pair<int, Rational>> terms; // orbit id -> coefficient
        Rational t_coeff = 0;
        RowRelation relation = RowRelation::Ge;
        Rational rhs = 0;
        std::vector<int> members; // original row indices
    };
    std::vector<RowClass> classes;
    std::vector<int> class_of; // per original row
};

SymmetryFold compute_fold(const EntropyLP& lp) {
    const int n = lp.graph.vertex_count;
    const std::size_t nm = lp.num_subset_vars;
    std::vector<std::vector<int>> autos = graph_automorphisms(lp.graph, 2000);

    // Orbits of subset masks under the generated group, via union-find.
    std::vector<int> parent(nm);
    for (std::size_t i = 0; i < nm; ++i) parent[i] = int(i);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& perm : autos) {
        for (std::size_t mask = 0; mask < nm; ++mask) {
            std::uint32_t img = mask >> n << n; // the secret bit stays put
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) img |= std::uint32_t(1) << perm[v];
            int a = find(int(mask)), b = find(int(img));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }

    SymmetryFold fold;
    fold.orbit_of.assign(nm, -1);
    for (std::size_t mask = 0; mask < nm; ++mask) {
        int root = find(int(mask));
        if (fold.orbit_of[root] < 0) {
            fold.orbit_of[root] = fold.orbit_count++;
            fold.orbit_size.push_back(0);
        }
        fold.orbit_of[mask] = fold.orbit_of[root];
        ++fold.orbit_size[fold.orbit_of[mask]];
    }

    // Fold rows and merge identical images (same relation and rhs only).
    struct Key {
        std::vector<std::pair<int, Rational>> terms;
        Rational t_coeff;
        int relation;
        Rational rhs;
        bool operator<(const Key& o) const {
            if (relation != o.relation) return relation < o.relation;
            if (rhs != o.rhs) return rhs < o.rhs;
            if (t_coeff != o.t_coeff) return t_coeff < o.t_coeff;
            if (terms.size() != o.terms.size()) return terms.size() < o.terms.size();
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (terms[i].first != o.terms[i].first) return terms[i].first < o.terms[i].first;
                if (terms[i].second != o.terms[i].second) return terms[i].second < o.terms[i].second;
            }
            return false;
        }
    };
    std::map<Key, int> seen;
    fold.class_of.assign(lp.rows.size(), -1);
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const LpRow& row = lp.rows[r];
        std::map<int, Rational> acc;
        for (const auto& [mask, coef] : row.terms) {
            auto [it, fresh] = acc.try_emplace(fold.orbit_of[mask], coef);
            if (!fresh) it->second += coef;
        }
        Key key;
        for (auto& [orbit, coef] : acc)
            if (coef != 0) key.terms.push_back({orbit, coef});
        key.t_coeff = row.t_coeff;
        key.relation = int(row.relation);
        key.rhs = row.rhs;
        auto [it, fresh] = seen.try_emplace(key, int(fold.classes.size()));
        if (fresh) {
            SymmetryFold::RowClass cls;
            cls.terms = key.terms;
            cls.t_coeff = row.t_coeff;
            cls.relation = row.relation;
            cls.rhs = row.rhs;
            fold.classes.push_back(std::move(cls));
        }
        fold.classes[it->second].members.push_back(int(r));
        fold.class_of[r] = it->second;
    }
    return fold;
}

} // namespace

EntropyLP build_lp(const LabeledGraph& g, LpMode mode) {
    if (g.vertex_count > 10)
        throw SizeError("entropy LP limited to 10 vertices; use the certificate route beyond that");

    EntropyLP lp;
    lp.graph = g;
    lp.mode = mode;
    const int nv = g.vertex_count;
    const int gs = nv + 1;
    lp.ground_size = gs;
    lp.num_subset_vars = std::size_t(1) << gs;
    lp.has_t = mode == LpMode::Worst;

    const std::uint32_t secret = std::uint32_t(1) << nv;
    const std::uint32_t full = (std::uint32_t(1) << gs) - 1;

    // f(empty) = 0 and f({s}) = 1.
    lp.rows.push_back({RowKind::EmptyFix, RowRelation::Eq, {{0u, 1}}, 0, 0, 0, 0, -1});
    lp.rows.push_back({RowKind::SecretUnit, RowRelation::Eq, {{secret, 1}}, 0, 1, secret, 0, -1});

    // Elemental monotonicity: f(N) - f(N \ i) >= 0.
    for (int i = 0; i < gs; ++i) {
        std::uint32_t bit = std::uint32_t(1) << i;
        lp.rows.push_back({RowKind::ElementalMono,
                           RowRelation::Ge,
                           {{full, 1}, {full ^ bit, -1}},
                           0,
                           0,
                           full ^ bit,
                           full,
                           i});
    }

    // Elemental submodularity: f(K+i) + f(K+j) - f(K+i+j) - f(K) >= 0.
    for (int i = 0; i < gs; ++i) {
        for (int j = i + 1; j < gs; ++j) {
            std::uint32_t bi = std::uint32_t(1) << i, bj = std::uint32_t(1) << j;
            std::uint32_t rest = full ^ bi ^ bj;
            std::uint32_t k = 0;
            for (;;) {
                LpRow row{RowKind::ElementalSubmod, RowRelation::Ge, {}, 0, 0, k | bi, k | bj, -1};
                row.terms = {{k | bi, 1}, {k | bj, 1}, {k | bi | bj, -1}, {k, -1}};
                lp.rows.push_back(std::move(row));
                if (k == rest) break;
                k = (k - rest) & rest;
            }
        }
    }

    // Minimal qualified sets determine the secret: f(uv + s) = f(uv).
    for (auto [u, v] : g.edges) {
        std::uint32_t uv = (std::uint32_t(1) << u) | (std::uint32_t(1) << v);
        lp.rows.push_back({RowKind::EdgeDetermines,
                           RowRelation::Eq,
                           {{uv | secret, 1}, {uv, -1}},
                           0,
                           0,
                           uv,
                           0,
                           -1});
    }

    // Maximal unqualified sets are independent of the secret: f(M+s) = f(M)+1.
    for (const Subset& mis : maximal_independent_sets(g)) {
        std::uint32_t m = subset_to_mask(mis);
        lp.rows.push_back({RowKind::MisIndependent,
                           RowRelation::Eq,
                           {{m | secret, 1}, {m, -1}},
                           0,
                           1,
                           m,
                           0,
                           -1});
    }

    if (mode == LpMode::Worst) {
        lp.objective_t = 1;
        for (int v = 0; v < nv; ++v) {
            std::uint32_t sv = std::uint32_t(1) << v;
            lp.rows.push_back({RowKind::WorstBound, RowRelation::Ge, {{sv, -1}}, 1, 0, sv, 0, v});
        }
    } else {
        for (int v = 0; v < nv; ++v)
            lp.objective_terms.push_back({std::uint32_t(1) << v, Rational(1, nv)});
    }
    return lp;
}

RationalSolution solve(const EntropyLP& lp) {
    // Fold by graph symmetry, then run the simplex on the dual of the folded
    // LP: one standard-form equation per subset orbit, one column per folded
    // row class (equality classes split into a +/- pair to stay
    // sign-constrained).
    const std::size_t nf = lp.num_subset_vars;
    SymmetryFold fold = compute_fold(lp);
    const int t_index = fold.orbit_count;
    const int np = fold.orbit_count + (lp.has_t ? 1 : 0);

    StandardFormLP dual;
    dual.num_rows = np;
    dual.rhs.assign(np, 0);
    for (const auto& [mask, coef] : lp.objective_terms) dual.rhs[fold.orbit_of[mask]] += coef;
    if (lp.has_t) dual.rhs[t_index] = lp.objective_t;

    struct ColRef {
        int class_index;
        int sign;
    };
    std::vector<ColRef> col_refs;
    for (std::size_t c = 0; c < fold.classes.size(); ++c) {
        const SymmetryFold::RowClass& cls = fold.classes[c];
        std::vector<std::pair<int, Rational>> col = cls.terms;
        if (cls.t_coeff != 0) col.push_back({t_index, cls.t_coeff});
        dual.columns.push_back(col);
        dual.objective.push_back(-cls.rhs);
        col_refs.push_back({int(c), +1});
        if (cls.relation == RowRelation::Eq) {
            for (auto& [idx, coef] : col) coef = -coef;
            dual.columns.push_back(std::move(col));
            dual.objective.push_back(cls.rhs);
            col_refs.push_back({int(c), -1});
        }
    }

    StandardFormSolution raw = solve_standard_form(dual);
    if (raw.status != LpStatus::Optimal)
        throw SolverError("entropy LP is infeasible or unbounded; constraint generation is broken");

    std::vector<Rational> class_duals(fold.classes.size(), 0);
    for (std::size_t c = 0; c < col_refs.size(); ++c)
        if (raw.x[c] != 0) class_duals[col_refs[c].class_index] += Rational(col_refs[c].sign) * raw.x[c];

    RationalSolution sol;
    sol.iterations = raw.iterations;
    sol.row_duals.assign(lp.rows.size(), 0);
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const SymmetryFold::RowClass& cls = fold.classes[fold.class_of[r]];
        if (class_duals[fold.class_of[r]] != 0)
            sol.row_duals[r] = class_duals[fold.class_of[r]] / int(cls.members.size());
    }

    sol.subset_values.assign(nf, 0);
    for (std::size_t mask = 0; mask < nf; ++mask)
        sol.subset_values[mask] = -raw.duals[fold.orbit_of[mask]];
    if (lp.has_t) sol.t_value = -raw.duals[t_index];

    sol.objective_value = -raw.objective;

    // Exact optimality post-checks: primal feasibility, dual feasibility and
    // stationarity, and a zero duality gap.
    Rational primal_obj = lp.has_t ? sol.t_value * lp.objective_t : Rational(0);
    for (const auto& [mask, coef] : lp.objective_terms) primal_obj += coef * sol.subset_values[mask];
    Rational dual_obj = 0;
    std::vector<Rational> stationarity(nf + 1, 0);
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const LpRow& row = lp.rows[r];
        Rational activity = row.t_coeff * sol.t_value;
        for (const auto& [mask, coef] : row.terms) activity += coef * sol.subset_values[mask];
        if (row.relation == RowRelation::Eq ? activity != row.rhs : activity < row.rhs)
            throw SolverError("primal infeasibility detected in post-check");
        const Rational& y = sol.row_duals[r];
        if (row.relation == RowRelation::Ge && y < 0)
            throw SolverError("negative dual on an inequality row");
        if (y != 0) {
            dual_obj += y * row.rhs;
            for (const auto& [mask, coef] : row.terms) stationarity[mask] += y * coef;
            if (row.t_coeff != 0) stationarity[int(nf)] += y * row.t_coeff;
        }
    }
    for (std::size_t mask = 0; mask < nf; ++mask) {
        Rational want = 0;
        for (const auto& [m2, coef] : lp.objective_terms)
            if (m2 == mask) want += coef;
        if (stationarity[mask] != want) throw SolverError("dual stationarity violated");
    }
    if (lp.has_t && stationarity[int(nf)] != lp.objective_t)
        throw SolverError("dual stationarity violated on the bound variable");
    if (primal_obj != dual_obj || primal_obj != sol.objective_value)
        throw SolverError("nonzero duality gap");

    return sol;
}

Rational shannon_bound(const LabeledGraph& g, LpMode mode) {
    return solve(build_lp(g, mode)).objective_value;
}

Certificate extract_dual_certificate(const EntropyLP& lp, const RationalSolution& sol) {
    const int nv = lp.graph.vertex_count;
    const int nbits = nv + 1;
    auto to_subset = [&](std::uint32_t mask) {
        Subset s(nbits);
        for (int i = 0; i < nbits; ++i)
            if (mask >> i & 1) s.set(i);
        return s;
    };

    Certificate cert;
    cert.graph = lp.graph;
    cert.extended = true;

    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const Rational& y = sol.row_duals[r];
        if (y == 0) continue;
        const LpRow& row = lp.rows[r];
        InequalityInstance inst;
        inst.direction = y > 0 ? +1 : -1;
        switch (row.kind) {
            case RowKind::EmptyFix:
                inst.kind = IneqKind::EmptyZero;
                inst.a = Subset(nbits);
                inst.b = Subset(nbits);
                break;
            case RowKind::SecretUnit:
                inst.kind = IneqKind::SecretUnit;
                inst.a = Subset(nbits);
                inst.b = Subset(nbits);
                break;
            case RowKind::ElementalMono:
                inst.kind = IneqKind::Monotonicity;
                inst.a = to_subset(row.set_a);
                inst.b = to_subset(row.set_b);
                break;
            case RowKind::ElementalSubmod:
                inst.kind = IneqKind::Submodularity;
                inst.a = to_subset(row.set_a);
                inst.b = to_subset(row.set_b);
                break;
            case RowKind::EdgeDetermines:
                inst.kind = IneqKind::Determines;
                inst.a = to_subset(row.set_a);
                inst.b = Subset(nbits);
                break;
            case RowKind::MisIndependent:
                inst.kind = IneqKind::IndependentOfSecret;
                inst.a = to_subset(row.set_a);
                inst.b = Subset(nbits);
                break;
            case RowKind::WorstBound:
                // Bound rows fold into the target: their duals are the convex
                // weights of the certified singleton combination.
                continue;
        }
        cert.steps.push_back({std::move(inst), abs(y)});
    }

    if (lp.mode == LpMode::Worst) {
        for (std::size_t r = 0; r < lp.rows.size(); ++r)
            if (lp.rows[r].kind == RowKind::WorstBound && sol.row_duals[r] != 0)
                cert.target.add_term(to_subset(lp.rows[r].set_a), sol.row_duals[r]);
    } else {
        for (const auto& [mask, coef] : lp.objective_terms) cert.target.add_term(to_subset(mask), coef);
    }
    cert.bound = sol.objective_value;
    return cert;
}

std::string lp_text_dump(const EntropyLP& lp) {
    std::ostringstream out;
    out << "\\ entropy LP over " << lp.ground_size << " ground elements ("
        << lp.num_subset_vars << " subset variables)\n";
    out << "Minimize\n obj:";
    if (lp.has_t) out << " t";
    for (const auto& [mask, coef] : lp.objective_terms)
        out << " + " << to_fraction_string(coef) << " f_" << mask;
    out << "\nSubject To\n";
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const LpRow& row = lp.rows[r];
        out << " r" << r << ":";
        bool first = true;
        if (row.t_coeff != 0) {
            out << " " << to_fraction_string(row.t_coeff) << " t";
            first = false;
        }
        for (const auto& [mask, coef] : row.terms) {
            if (!first && coef >= 0) out << " +";
            out << " " << to_fraction_string(coef) << " f_" << mask;
            first = false;
        }
        out << (row.relation == RowRelation::Eq ? " = " : " >= ") << to_fraction_string(row.rhs) << "\n";
    }
    out << "Bounds\n";
    out << " t free\n f_* free\nEnd\n";
    return out.str();
}

std::string solution_to_json(const EntropyLP& lp, const RationalSolution& sol) {
    json j;
    j["objective"] = to_fraction_string(sol.objective_value);
    j["mode"] = lp.mode == LpMode::Worst ? "worst" : "average";
    if (lp.has_t) j["t"] = to_fraction_string(sol.t_value);
    json vars = json::object();
    for (std::size_t mask = 0; mask < sol.subset_values.size(); ++mask)
        if (sol.subset_values[mask] != 0)
            vars[std::to_string(mask)] = to_fraction_string(sol.subset_values[mask]);
    j["variables"] = vars;
    json duals = json::object();
    for (std::size_t r = 0; r < sol.row_duals.size(); ++r)
        if (sol.row_duals[r] != 0) duals[std::to_string(r)] = to_fraction_string(sol.row_duals[r]);
    j["duals"] = duals;
    j["iterations"] = sol.iterations;
    return j.dump(2) + "\n";
}

} // namespace inforatio
