#include "inforatio/scheme.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "inforatio/errors.hpp"
#include "inforatio/gfq.hpp"

namespace inforatio {

namespace {

using json = nlohmann::json;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<std::vector<std::uint64_t>> gather_rows(const LinearScheme& s, const Subset& a,
                                                    bool randomness_only) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (int v : a.elements()) {
        if (v >= int(s.participant_rows.size())) throw ParameterError("vertex id out of range");
        auto [begin, count] = s.participant_rows[v];
        for (int r = begin; r < begin + count; ++r) {
            if (randomness_only)
                rows.emplace_back(s.rows[r].begin() + s.secret_dim, s.rows[r].end());
            else
                rows.push_back(s.rows[r]);
        }
    }
    return rows;
}

} // namespace

LinearScheme build_star_scheme(const LabeledGraph& g, std::uint64_t q) {
    if (!is_prime(q)) throw ParameterError("field modulus must be prime, got " + std::to_string(q));

    LinearScheme s;
    s.field.modulus = q;
    s.secret_dim = 2;

    // One star per vertex of positive degree, in vertex order; the evaluation
    // point of star k is its center id mod q.  Edge recovery needs the two
    // endpoint evaluations to differ, which any q >= |V| satisfies.
    std::vector<int> star_of(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.degree(v) == 0) continue;
        star_of[v] = int(s.cover.stars.size());
        s.cover.stars.push_back({v, g.adjacency[v]});
        s.cover.evaluation_points.push_back(std::uint64_t(v) % q);
    }
    for (auto [u, v] : g.edges)
        if (std::uint64_t(u) % q == std::uint64_t(v) % q)
            throw ParameterError("field too small: stars of an edge share an evaluation point; use q >= " +
                                 std::to_string(g.vertex_count));

    s.randomness_dim = int(s.cover.stars.size());
    const int width = s.width();
    auto center_row = [&](int k) {
        std::vector<std::uint64_t> row(width, 0);
        row[s.secret_dim + k] = 1;
        return row;
    };
    auto leaf_row = [&](int k) {
        std::vector<std::uint64_t> row(width, 0);
        row[0] = 1;
        row[1] = s.cover.evaluation_points[k];
        row[s.secret_dim + k] = 1;
        return row;
    };

    s.participant_rows.assign(g.vertex_count, {0, 0});
    for (int v = 0; v < g.vertex_count; ++v) {
        int begin = int(s.rows.size());
        if (star_of[v] >= 0) {
            s.rows.push_back(center_row(star_of[v]));
            for (int u : g.adjacency[v]) s.rows.push_back(leaf_row(star_of[u]));
        }
        s.participant_rows[v] = {begin, int(s.rows.size()) - begin};
    }
    return s;
}

bool is_determining(const LinearScheme& s, const Subset& a) {
    int full = gf_rank(gather_rows(s, a, false), s.field.modulus);
    int rand_only = gf_rank(gather_rows(s, a, true), s.field.modulus);
    return full == rand_only + s.secret_dim;
}

bool is_independent_of_secret(const LinearScheme& s, const Subset& a) {
    int full = gf_rank(gather_rows(s, a, false), s.field.modulus);
    int rand_only = gf_rank(gather_rows(s, a, true), s.field.modulus);
    return full == rand_only;
}

PerfectnessReport verify_perfect(const LinearScheme& s, const LabeledGraph& g,
                                 std::optional<long> sample_budget, std::uint64_t sample_seed) {
    PerfectnessReport report;
    for (auto [u, v] : g.edges) {
        Subset e(g.vertex_count, {u, v});
        ++report.qualified_checked;
        if (!is_determining(s, e))
            report.violations.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} does not determine the secret");
    }

    if (!sample_budget) {
        if (g.vertex_count > 24)
            throw SizeError("exhaustive independence verification limited to 24 vertices; pass a sampling budget");
        for (const Subset& m : maximal_independent_sets(g)) {
            ++report.unqualified_checked;
            if (!is_independent_of_secret(s, m)) {
                std::string desc;
                for (int v : m.elements()) desc += (desc.empty() ? "" : ",") + std::to_string(v);
                report.violations.push_back("independent set {" + desc + "} leaks the secret");
            }
        }
    } else {
        report.sampled = true;
        std::uint64_t state = sample_seed * 0x9e3779b97f4a7c15ull + 1;
        for (long it = 0; it < *sample_budget; ++it) {
            // Random greedy maximal independent set.
            std::vector<int> order(g.vertex_count);
            for (int v = 0; v < g.vertex_count; ++v) order[v] = v;
            for (int i = g.vertex_count - 1; i > 0; --i)
                std::swap(order[i], order[int(splitmix64(state) % std::uint64_t(i + 1))]);
            Subset m(g.vertex_count);
            for (int v : order) {
                bool clash = false;
                for (int w : g.adjacency[v])
                    if (m.test(w)) { clash = true; break; }
                if (!clash) m.set(v);
            }
            ++report.unqualified_checked;
            if (!is_independent_of_secret(s, m)) {
                std::string desc;
                for (int v : m.elements()) desc += (desc.empty() ? "" : ",") + std::to_string(v);
                report.violations.push_back("independent set {" + desc + "} leaks the secret");
            }
        }
    }
    report.perfect = report.violations.empty();
    return report;
}

RatioReport information_ratios(const LinearScheme& s) {
    RatioReport report;
    int n = int(s.participant_rows.size());
    Rational sum = 0;
    for (int v = 0; v < n; ++v) {
        Subset single(n, {v});
        int rank = gf_rank(gather_rows(s, single, false), s.field.modulus);
        Rational ratio = Rational(rank) / s.secret_dim;
        if (ratio > report.max) report.max = ratio;
        sum += ratio;
        report.per_vertex.push_back(std::move(ratio));
    }
    report.average = n > 0 ? sum / n : Rational(0);
    return report;
}

std::vector<long> exhaustive_entropies(const LinearScheme& s, const std::vector<Subset>& subsets) {
    const std::uint64_t q = s.field.modulus;
    const int width = s.width();
    double states_d = 1;
    for (int i = 0; i < width; ++i) states_d *= double(q);
    if (states_d > 1e7) throw SizeError("state space exceeds 10^7 assignments");
    const std::uint64_t states = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < width; ++i) t *= q;
        return t;
    }();

    const int n = int(s.participant_rows.size());
    std::vector<long> out;
    for (const Subset& subset : subsets) {
        if (subset.size() != n + 1) throw ParameterError("subsets must cover vertices plus the secret bit");
        // Row indices observed by this subset; the secret bit contributes the
        // identity rows on the secret coordinates.
        std::vector<std::vector<std::uint64_t>> observed;
        for (int e : subset.elements()) {
            if (e < n) {
                auto [begin, count] = s.participant_rows[e];
                for (int r = begin; r < begin + count; ++r) observed.push_back(s.rows[r]);
            } else {
                for (int c = 0; c < s.secret_dim; ++c) {
                    std::vector<std::uint64_t> row(width, 0);
                    row[c] = 1;
                    observed.push_back(std::move(row));
                }
            }
        }

        std::unordered_map<std::string, std::uint64_t> counts;
        std::vector<std::uint64_t> assign(width, 0);
        std::string key(observed.size() * 2, '\0');
        for (std::uint64_t state = 0;; ++state) {
            for (std::size_t r = 0; r < observed.size(); ++r) {
                std::uint64_t acc = 0;
                for (int c = 0; c < width; ++c) acc += observed[r][c] * assign[c];
                acc %= q;
                key[2 * r] = char(acc & 0xff);
                key[2 * r + 1] = char((acc >> 8) & 0xff);
            }
            ++counts[key];
            // Odometer increment over GF(q)^width.
            int pos = 0;
            while (pos < width && ++assign[pos] == q) assign[pos++] = 0;
            if (pos == width) break;
        }

        // A linear map's joint distribution is uniform over its image of size
        // q^k; read k off the counts and cross-check the uniformity.
        std::uint64_t per_value = counts.begin()->second;
        for (const auto& [k, c] : counts)
            if (c != per_value) throw SolverError("joint distribution of a linear map is not uniform");
        std::uint64_t values = states / per_value;
        long entropy = 0;
        while (values > 1) {
            if (values % q != 0) throw SolverError("image size is not a power of the field size");
            values /= q;
            ++entropy;
        }
        out.push_back(entropy);
    }
    return out;
}

std::string scheme_to_json(const LinearScheme& s) {
    json j;
    j["q"] = s.field.modulus;
    j["secret_dim"] = s.secret_dim;
    j["randomness_dim"] = s.randomness_dim;
    json rows = json::array();
    for (const auto& row : s.rows) rows.push_back(row);
    j["rows"] = rows;
    json parts = json::array();
    for (std::size_t v = 0; v < s.participant_rows.size(); ++v)
        parts.push_back({{"vertex", v},
                         {"row_begin", s.participant_rows[v].first},
                         {"row_count", s.participant_rows[v].second}});
    j["participants"] = parts;
    json stars = json::array();
    for (std::size_t k = 0; k < s.cover.stars.size(); ++k)
        stars.push_back({{"center", s.cover.stars[k].center},
                         {"leaves", s.cover.stars[k].leaves},
                         {"evaluation_point", s.cover.evaluation_points[k]}});
    j["stars"] = stars;
    return j.dump(2) + "\n";
}

std::string perfectness_report_to_json(const PerfectnessReport& r, const RatioReport& ratios) {
    json j;
    j["perfect"] = r.perfect;
    j["sampled"] = r.sampled;
    j["qualified_checked"] = r.qualified_checked;
    j["unqualified_checked"] = r.unqualified_checked;
    j["violations"] = r.violations;
    json per = json::array();
    for (const auto& ratio : ratios.per_vertex) per.push_back(to_fraction_string(ratio));
    j["ratios"] = {{"per_vertex", per},
                   {"max", to_fraction_string(ratios.max)},
                   {"average", to_fraction_string(ratios.average)}};
    return j.dump(2) + "\n";
}

} // namespace inforatio
