#ifndef INFORATIO_CERTIFICATE_HPP
#define INFORATIO_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "inforatio/inequality.hpp"

namespace inforatio {

struct CertStep {
    InequalityInstance instance;
    Rational coeff; // must be nonnegative
};

/// A nonnegative combination of inequality instances proving
/// `target >= bound` for every entropy-like function of the graph's access
/// structure.  `extended` certificates live over vertices plus the secret
/// element and may use the perfect-scheme axiom kinds.
struct Certificate {
    LabeledGraph graph;
    bool extended = false;
    std::vector<CertStep> steps;
    LinearExpr target; // f-part only; relation is >=
    Rational bound;
};

struct Verdict {
    bool valid = false;
    std::string reason; // diagnostics for invalid certificates

    explicit operator bool() const { return valid; }
};

/// Valid iff every coefficient is nonnegative, every step's side conditions
/// hold in the graph, the weighted sum of step expressions equals the target
/// f-part exactly, and the weighted constant sum is at least the bound.
Verdict check(const Certificate& cert,
              StrongSubmodularityRule rule = StrongSubmodularityRule::Generalized);

/// Chessboard side data of one aligned subcube of a cube-star graph:
/// `free_dims` low coordinate bits vary, the remaining bits equal
/// `fixed_bits`.  x = even cube vertices plus pendants of odd ones; a/b are
/// the even/odd cube vertices.  Sets are over the whole graph's vertices.
struct CubeStarSides {
    Subset x;
    Subset a;
    Subset b;
};
CubeStarSides cube_star_sides(const LabeledGraph& g, int dim, int free_dims,
                              std::uint32_t fixed_bits);

/// Certifies  sum_{v in cube} f(v) - [[X,B,A]] >= d * 2^(d-1)  on a canonical
/// cube-star graph of dimension d, by induction over aligned subcubes.
Certificate build_cube_bracket_bound(int d, const LabeledGraph& g);

/// Certifies  [[X,B,A]] >= 2^d  using the lowest-dimension cube matching.
Certificate build_bracket_bound(int d, const LabeledGraph& g);

/// Certifies  sum_{v in cube} f(v) >= (d+2) * 2^(d-1)  (combination of the
/// two certificates above).
Certificate build_cube_sum_bound(int d, const LabeledGraph& g);

struct RatioBoundCertificate {
    Certificate certificate;
    Rational ratio_bound; // implied bound on the information ratio
};

/// Worst case: averaging the cube-sum certificate over the 2^d cube vertices
/// shows some vertex carries at least (d+2)/2.  The averaging step is report
/// arithmetic on top of the certificate, not a certificate step.
RatioBoundCertificate build_worst_case_bound(int d);

/// Average case: one cube-sum certificate per induced cube-star view of a
/// three-cube graph, mapped through the view relabelings and concatenated;
/// implies average ratio >= (d+2)/2.
RatioBoundCertificate build_average_case_bound(int d, const LabeledGraph& delta);

/// The per-matching-edge blocks of the top-level induction join of a
/// cube-star graph (its two dimension d-1 halves); exposed so the bracket
/// recursion can be verified symbolically.
std::vector<CertStep> top_level_join_blocks(const LabeledGraph& g, int d);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

} // namespace inforatio

#endif
