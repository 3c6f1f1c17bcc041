#ifndef INFORATIO_SCHEME_HPP
#define INFORATIO_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inforatio/graph.hpp"
#include "inforatio/rational.hpp"
#include "inforatio/subset.hpp"

namespace inforatio {

struct PrimeField {
    std::uint64_t modulus = 0;
};

struct Star {
    int center = -1;
    std::vector<int> leaves;
};

/// Every edge is covered twice: once by the star of each endpoint.  Star k
/// carries the degree-1 evaluation point of its sub-secret.
struct StarCover {
    std::vector<Star> stars;
    std::vector<std::uint64_t> evaluation_points;
};

/// Linear scheme over GF(q): each row maps (secret coords ++ randomness
/// coords) to one share coordinate; participants own contiguous row ranges.
struct LinearScheme {
    PrimeField field;
    int secret_dim = 2;
    int randomness_dim = 0;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::pair<int, int>> participant_rows; // (first row, count) per vertex
    StarCover cover;

    int width() const { return secret_dim + randomness_dim; }
};

/// Star-decomposition scheme with a two-coordinate secret: star k holds fresh
/// randomness r_k; its center row is r_k and every leaf row is r_k plus the
/// sub-secret s1 + x_k*s2.  Adjacent participants recover two distinct
/// evaluations and hence the secret; q must be prime and assign distinct
/// evaluation points across every edge (q >= vertex count always suffices).
LinearScheme build_star_scheme(const LabeledGraph& g, std::uint64_t q);

/// Shares of `a` pin down the secret: rank(full rows) = rank(randomness part) + secret_dim.
bool is_determining(const LinearScheme& s, const Subset& a);

/// Share distribution of `a` is identical for every secret: the secret
/// column block lies in the span of the randomness columns.
bool is_independent_of_secret(const LinearScheme& s, const Subset& a);

struct PerfectnessReport {
    bool perfect = false;
    bool sampled = false;
    long qualified_checked = 0;
    long unqualified_checked = 0;
    std::vector<std::string> violations;
};

/// Checks every edge (qualified sets are upward closed, so edges suffice)
/// and every maximal independent set (independence is downward closed).
/// Beyond 24 vertices a sampling budget must be supplied; sampled reports are
/// flagged.
PerfectnessReport verify_perfect(const LinearScheme& s, const LabeledGraph& g,
                                 std::optional<long> sample_budget = std::nullopt,
                                 std::uint64_t sample_seed = 1);

struct RatioReport {
    std::vector<Rational> per_vertex;
    Rational max = 0;
    Rational average = 0;
};

/// Per-participant share entropy over secret entropy; entropy of a uniform
/// linear map is its GF(q) rank, in q-ary units.
RatioReport information_ratios(const LinearScheme& s);

/// Brute-force entropy oracle: enumerates all q^(secret_dim+randomness_dim)
/// assignments and reads entropies off the exact joint distributions of the
/// requested share tuples.  Subsets live over vertices plus the secret
/// element (highest bit).  Returns exact q-ary entropies.
std::vector<long> exhaustive_entropies(const LinearScheme& s, const std::vector<Subset>& subsets);

std::string scheme_to_json(const LinearScheme& s);
std::string perfectness_report_to_json(const PerfectnessReport& r, const RatioReport& ratios);

} // namespace inforatio

#endif
