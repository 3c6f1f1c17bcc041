#ifndef INFORATIO_GRAPH_HPP
#define INFORATIO_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inforatio/subset.hpp"

namespace inforatio {

enum class VertexKind { Cube, Pendant };

/// Construction role attached to every vertex, so that set families named by
/// the constructions (chessboard sides, cube copies, pendant partners) can be
/// recovered without any isomorphism search.
struct VertexRole {
    VertexKind kind = VertexKind::Cube;
    std::optional<int> cube_copy;          // 0..2 inside a three-cube graph
    std::optional<std::uint32_t> coord;    // cube coordinate bits (bit i = dimension i)
    std::optional<int> coord_dim;          // number of coordinate bits

    bool operator==(const VertexRole&) const = default;
};

/// Undirected simple graph with role labels.  Edges are stored normalized
/// (u < v) and sorted; vertices are 0..vertex_count-1.
struct LabeledGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexRole> labels;
    std::vector<std::vector<int>> adjacency;

    static LabeledGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int degree(int v) const { return int(adjacency[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    Subset full_vertex_set() const;

    /// True iff some edge lies entirely inside `a`.
    bool contains_edge(const Subset& a) const;
};

struct ChessboardSplit {
    Subset side_x;
    Subset side_y;
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;
};

/// One of the three cube-star-shaped induced subgraphs of a three-cube graph:
/// the vertex scope plus the explicit relabeling onto canonical cube-star ids.
struct CubeStarView {
    std::vector<int> scope;          // vertex ids in the host graph
    std::vector<int> from_canonical; // canonical cube-star id -> host id
};

/// Explicit cross-cube matchings for build_delta: three bijections, perms[i][j]
/// pairing the j-th even vertex of cube i with the perms[i][j]-th odd vertex of
/// cube i+1 (both sides enumerated in increasing coordinate order).
using DeltaMatchings = std::variant<std::uint64_t, std::vector<std::vector<int>>>;

/// d-dimensional hypercube on 2^d vertices; vertex id = coordinate bits.
LabeledGraph build_hypercube(int d);

/// Hypercube plus one pendant per cube vertex (canonical pendant matching:
/// cube vertex c is matched to pendant 2^d + c).
LabeledGraph build_cube_star(int d);

/// Three disjoint d-cubes joined cyclically by 1-factors between the even
/// side of cube i and the odd side of cube i+1.  Seed 0 means identity
/// matchings; other seeds draw deterministic pseudorandom permutations.
LabeledGraph build_delta(int d, const DeltaMatchings& matchings = std::uint64_t{0});

/// Chessboard split of a cube-star graph (scope = all vertices) or of one
/// cube-star-shaped view inside a three-cube graph (scope = view vertex set).
ChessboardSplit chessboard_split(const LabeledGraph& g, const Subset& scope);

/// The three induced cube-star views of a graph produced by build_delta.
std::vector<CubeStarView> induced_cube_star_views(const LabeledGraph& g);

bool is_independent(const LabeledGraph& g, const Subset& a);

/// All inclusion-maximal independent sets, sorted; vertex_count <= 24.
std::vector<Subset> maximal_independent_sets(const LabeledGraph& g);

/// Canonical JSON serialization (stable bytes for identical graphs).
std::string graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

} // namespace inforatio

#endif
