#include "inforatio/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <nlohmann/json.hpp>

#include "inforatio/errors.hpp"

namespace inforatio {

namespace {

using json = nlohmann::json;

void check_dimension(int d) {
    if (d < 1 || d > 16) throw ParameterError("dimension must be in 1..16, got " + std::to_string(d));
}

int parity(std::uint32_t bits) { return std::popcount(bits) & 1; }

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::string coord_string(std::uint32_t bits, int d) {
    std::string s(d, '0');
    for (int i = 0; i < d; ++i)
        if (bits >> i & 1) s[i] = '1';
    return s;
}

std::uint32_t coord_bits(const std::string& s) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') bits |= std::uint32_t(1) << i;
        else if (s[i] != '0') throw ParameterError("coordinate must be a bitstring: " + s);
    }
    return bits;
}

// Deterministic Fisher-Yates on a splitmix64 stream; avoids std::shuffle,
// whose result is implementation-defined.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<int> seeded_permutation(int size, std::uint64_t seed, int which) {
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i;
    if (seed == 0) return perm; // identity matchings by default
    std::uint64_t state = seed * 0x100000001b3ull + std::uint64_t(which) + 1;
    for (int i = size - 1; i > 0; --i) {
        std::uint64_t r = splitmix64(state) % std::uint64_t(i + 1);
        std::swap(perm[i], perm[int(r)]);
    }
    return perm;
}

} // namespace

LabeledGraph LabeledGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw ParameterError("negative vertex count");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("edge endpoint out of range");
        if (u == v) throw ParameterError("self-loop rejected");
        dedup.insert({std::min(u, v), std::max(u, v)});
    }
    LabeledGraph g;
    g.vertex_count = n;
    g.edges.assign(dedup.begin(), dedup.end());
    g.labels.assign(n, VertexRole{});
    g.adjacency = build_adjacency(n, g.edges);
    return g;
}

int LabeledGraph::max_degree() const {
    int m = 0;
    for (int v = 0; v < vertex_count; ++v) m = std::max(m, degree(v));
    return m;
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Subset LabeledGraph::full_vertex_set() const {
    Subset s(vertex_count);
    for (int v = 0; v < vertex_count; ++v) s.set(v);
    return s;
}

bool LabeledGraph::contains_edge(const Subset& a) const {
    for (int v : a.elements())
        for (int w : adjacency[v])
            if (w > v && a.test(w)) return true;
    return false;
}

LabeledGraph build_hypercube(int d) {
    check_dimension(d);
    int n = 1 << d;
    LabeledGraph g;
    g.vertex_count = n;
    g.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        g.labels[v] = VertexRole{VertexKind::Cube, std::nullopt, std::uint32_t(v), d};
        for (int i = 0; i < d; ++i) {
            int w = v ^ (1 << i);
            if (v < w) g.edges.push_back({v, w});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.adjacency = build_adjacency(n, g.edges);
    return g;
}

LabeledGraph build_cube_star(int d) {
    check_dimension(d);
    LabeledGraph g = build_hypercube(d);
    int cube = 1 << d;
    g.vertex_count = 2 * cube;
    g.labels.resize(g.vertex_count);
    for (int c = 0; c < cube; ++c) {
        g.labels[cube + c] = VertexRole{VertexKind::Pendant, std::nullopt, std::uint32_t(c), d};
        g.edges.push_back({c, cube + c});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.adjacency = build_adjacency(g.vertex_count, g.edges);
    return g;
}

LabeledGraph build_delta(int d, const DeltaMatchings& matchings) {
    check_dimension(d);
    int cube = 1 << d;
    int half = cube / 2;

    std::vector<std::vector<int>> perms;
    if (std::holds_alternative<std::uint64_t>(matchings)) {
        std::uint64_t seed = std::get<std::uint64_t>(matchings);
        for (int i = 0; i < 3; ++i) perms.push_back(seeded_permutation(half, seed, i));
    } else {
        perms = std::get<std::vector<std::vector<int>>>(matchings);
        if (perms.size() != 3) throw ParameterError("exactly three matchings required");
        for (const auto& p : perms) {
            if (int(p.size()) != half) throw ParameterError("matching permutation has wrong size");
            std::vector<bool> seen(half, false);
            for (int x : p) {
                if (x < 0 || x >= half || seen[x]) throw ParameterError("matching is not a bijection");
                seen[x] = true;
            }
        }
    }

    LabeledGraph g;
    g.vertex_count = 3 * cube;
    g.labels.resize(g.vertex_count);
    for (int copy = 0; copy < 3; ++copy) {
        int base = copy * cube;
        for (int c = 0; c < cube; ++c) {
            g.labels[base + c] = VertexRole{VertexKind::Cube, copy, std::uint32_t(c), d};
            for (int i = 0; i < d; ++i) {
                int w = c ^ (1 << i);
                if (c < w) g.edges.push_back({base + c, base + w});
            }
        }
    }
    // Even (side A) and odd (side B) coordinates of one cube, increasing order.
    std::vector<int> evens, odds;
    for (int c = 0; c < cube; ++c) (parity(std::uint32_t(c)) == 0 ? evens : odds).push_back(c);
    for (int i = 0; i < 3; ++i) {
        int from = i * cube, to = ((i + 1) % 3) * cube;
        for (int j = 0; j < half; ++j)
            g.edges.push_back({std::min(from + evens[j], to + odds[perms[i][j]]),
                               std::max(from + evens[j], to + odds[perms[i][j]])});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.adjacency = build_adjacency(g.vertex_count, g.edges);
    return g;
}

ChessboardSplit chessboard_split(const LabeledGraph& g, const Subset& scope) {
    if (scope.size() != g.vertex_count) throw StructureError("scope ground set does not match graph");
    std::vector<int> verts = scope.elements();
    // Identify the cube part of the scope: vertices whose neighbors inside the
    // scope include a same-kind coordinate neighbor, i.e. cube-role vertices of
    // a single copy for delta graphs, or kind==Cube for cube-star graphs.
    Subset cube_part(g.vertex_count);
    bool any_pendant_role = false;
    for (int v : verts) {
        if (!g.labels[v].coord.has_value()) throw StructureError("scope vertex lacks construction labels");
        if (g.labels[v].kind == VertexKind::Pendant) any_pendant_role = true;
    }
    std::optional<int> cube_copy;
    if (any_pendant_role) {
        for (int v : verts)
            if (g.labels[v].kind == VertexKind::Cube) cube_part.set(v);
    } else {
        // Delta view: the cube copy is the one fully contained in the scope.
        int cube = 0;
        for (int v : verts) cube = std::max(cube, int(*g.labels[v].coord) + 1);
        for (int copy = 0; copy < 3; ++copy) {
            int members = 0, total = 0;
            for (int v = 0; v < g.vertex_count; ++v)
                if (g.labels[v].cube_copy == copy) {
                    ++total;
                    if (scope.test(v)) ++members;
                }
            if (total > 0 && members == total) { cube_copy = copy; break; }
        }
        if (!cube_copy) throw StructureError("scope does not contain a full cube copy");
        for (int v : verts)
            if (g.labels[v].cube_copy == *cube_copy) cube_part.set(v);
    }

    ChessboardSplit split{Subset(g.vertex_count), Subset(g.vertex_count)};
    for (int v : verts) {
        if (cube_part.test(v)) {
            (parity(*g.labels[v].coord) == 0 ? split.side_x : split.side_y).set(v);
        } else {
            // Pendant-role vertex: side is opposite to its unique neighbor in
            // the cube part.
            int partner = -1;
            for (int w : g.adjacency[v])
                if (cube_part.test(w)) {
                    if (partner != -1) throw StructureError("pendant-role vertex has two cube neighbors in scope");
                    partner = w;
                }
            if (partner == -1) throw StructureError("pendant-role vertex has no cube neighbor in scope");
            (parity(*g.labels[partner].coord) == 1 ? split.side_x : split.side_y).set(v);
        }
    }
    if (split.side_x.intersects(split.side_y)) throw StructureError("chessboard sides overlap");
    if (!is_independent(g, split.side_x) || !is_independent(g, split.side_y))
        throw StructureError("chessboard sides are not independent");
    return split;
}

std::vector<CubeStarView> induced_cube_star_views(const LabeledGraph& g) {
    // Requires build_delta labels: three cube copies with coordinates.
    int n = g.vertex_count;
    if (n % 3 != 0) throw StructureError("not a three-cube graph");
    int cube = n / 3;
    int d = 0;
    while ((1 << d) < cube) ++d;
    if ((1 << d) != cube) throw StructureError("cube size is not a power of two");
    for (int v = 0; v < n; ++v)
        if (!g.labels[v].cube_copy.has_value() || !g.labels[v].coord.has_value())
            throw StructureError("graph lacks three-cube construction labels");

    std::vector<CubeStarView> views;
    for (int i = 0; i < 3; ++i) {
        CubeStarView view;
        view.from_canonical.assign(2 * cube, -1);
        // Canonical cube-star ids: cube coordinate c -> c, pendant of c -> cube + c.
        for (int c = 0; c < cube; ++c) {
            int host = i * cube + c;
            view.from_canonical[c] = host;
            // Pendant of c = the cross-matching partner outside copy i.
            int partner = -1;
            for (int w : g.adjacency[host])
                if (*g.labels[w].cube_copy != i) {
                    if (partner != -1) throw StructureError("vertex has two cross-cube partners");
                    partner = w;
                }
            if (partner == -1) throw StructureError("vertex has no cross-cube partner");
            view.from_canonical[cube + c] = partner;
        }
        view.scope = view.from_canonical;
        std::sort(view.scope.begin(), view.scope.end());
        views.push_back(std::move(view));
    }
    return views;
}

bool is_independent(const LabeledGraph& g, const Subset& a) {
    if (a.size() != g.vertex_count) throw ParameterError("subset ground set does not match graph");
    return !g.contains_edge(a);
}

std::vector<Subset> maximal_independent_sets(const LabeledGraph& g) {
    int n = g.vertex_count;
    if (n > 24) throw SizeError("maximal independent set enumeration limited to 24 vertices");
    // Bron-Kerbosch with pivoting on the complement graph.
    std::vector<std::uint32_t> nonadj(n, 0);
    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    for (int v = 0; v < n; ++v) {
        std::uint32_t adj_mask = 0;
        for (int w : g.adjacency[v]) adj_mask |= 1u << w;
        nonadj[v] = all & ~adj_mask & ~(1u << v);
    }
    std::vector<std::uint32_t> found;
    auto expand = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
        if (p == 0 && x == 0) {
            found.push_back(r);
            return;
        }
        std::uint32_t px = p | x;
        int pivot = std::countr_zero(px);
        std::uint32_t candidates = p & ~nonadj[pivot];
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, r | (1u << v), p & nonadj[v], x & nonadj[v]);
            p &= ~(1u << v);
            x |= 1u << v;
        }
    };
    expand(expand, 0, all, 0);
    std::sort(found.begin(), found.end());
    std::vector<Subset> out;
    out.reserve(found.size());
    for (auto mask : found) out.push_back(Subset::from_mask(n, mask));
    return out;
}

std::string graph_to_json(const LabeledGraph& g) {
    json j;
    j["n"] = g.vertex_count;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    json labels = json::array();
    for (const auto& role : g.labels) {
        json l;
        l["kind"] = role.kind == VertexKind::Cube ? "cube" : "pendant";
        l["copy"] = role.cube_copy ? json(*role.cube_copy) : json(nullptr);
        l["coord"] = role.coord ? json(coord_string(*role.coord, role.coord_dim.value_or(0))) : json(nullptr);
        labels.push_back(l);
    }
    j["labels"] = labels;
    return j.dump(2) + "\n";
}

LabeledGraph graph_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    LabeledGraph g = LabeledGraph::from_edges(n, std::move(edges));
    if (j.contains("labels") && !j["labels"].is_null()) {
        const auto& labels = j["labels"];
        if (int(labels.size()) != n) throw ParameterError("labels array must have one entry per vertex");
        for (int v = 0; v < n; ++v) {
            const auto& l = labels[v];
            VertexRole role;
            std::string kind = l.at("kind").get<std::string>();
            if (kind == "cube") role.kind = VertexKind::Cube;
            else if (kind == "pendant") role.kind = VertexKind::Pendant;
            else throw ParameterError("unknown vertex kind: " + kind);
            if (l.contains("copy") && !l["copy"].is_null()) role.cube_copy = l["copy"].get<int>();
            if (l.contains("coord") && !l["coord"].is_null()) {
                std::string s = l["coord"].get<std::string>();
                role.coord = coord_bits(s);
                role.coord_dim = int(s.size());
            }
            g.labels[v] = role;
        }
    }
    return g;
}

} // namespace inforatio
