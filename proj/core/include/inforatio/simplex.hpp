#ifndef INFORATIO_SIMPLEX_HPP
#define INFORATIO_SIMPLEX_HPP

#include <utility>
#include <vector>

#include "inforatio/rational.hpp"

namespace inforatio {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// min c'w  s.t.  M w = h,  w >= 0.  Columns are sparse (row, coefficient)
/// lists with strictly increasing row indices.
struct StandardFormLP {
    int num_rows = 0;
    std::vector<std::vector<std::pair<int, Rational>>> columns;
    std::vector<Rational> objective; // per column
    std::vector<Rational> rhs;       // per row
};

struct StandardFormSolution {
    LpStatus status = LpStatus::Optimal;
    Rational objective = 0;
    std::vector<Rational> x;     // per column
    std::vector<Rational> duals; // simplex multipliers, one per row
    long iterations = 0;
};

/// Two-phase revised simplex in exact rational arithmetic with Bland's
/// least-index anti-cycling rule; fully deterministic.
StandardFormSolution solve_standard_form(const StandardFormLP& lp);

} // namespace inforatio

#endif
