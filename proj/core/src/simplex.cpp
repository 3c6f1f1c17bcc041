#include "inforatio/simplex.hpp"

#include <cstdlib>

#include "inforatio/errors.hpp"

namespace inforatio {

namespace {

// Revised simplex with a dense rational basis inverse.  Rows are normalized
// to nonnegative right-hand sides so the all-artificial start is the
// identity, which keeps every row of [x_B | Binv] lexicographically positive;
// the lexicographic ratio test then rules out cycling under any entering
// rule.  Entering uses steepest reduced cost with least-index ties, so runs
// are deterministic.
class SimplexSolver {
public:
    explicit SimplexSolver(const StandardFormLP& lp) : m_(lp.num_rows), n_(int(lp.columns.size())) {
        columns_.resize(n_);
        row_sign_.assign(m_, 1);
        rhs_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            row_sign_[i] = lp.rhs[i] >= 0 ? 1 : -1;
            rhs_[i] = abs(lp.rhs[i]);
        }
        for (int j = 0; j < n_; ++j) {
            int prev = -1;
            for (const auto& [row, coef] : lp.columns[j]) {
                if (row <= prev || row >= m_) throw SolverError("malformed sparse column");
                prev = row;
                columns_[j].push_back({row, row_sign_[row] > 0 ? coef : -coef});
            }
        }
        objective_ = lp.objective;

        basis_.resize(m_);
        binv_.assign(m_, std::vector<Rational>(m_, 0));
        xb_ = rhs_;
        pi_.assign(m_, 0);
        in_basis_.assign(std::size_t(n_) + m_, false);
        left_artificials_.assign(m_, false);
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            in_basis_[n_ + i] = true;
            binv_[i][i] = 1;
        }
        verbose_ = std::getenv("INFORATIO_SIMPLEX_VERBOSE") != nullptr;
    }

    StandardFormSolution run() {
        phase_ = 1;
        recompute_pi();
        if (!iterate()) throw SolverError("phase 1 reported unbounded");
        if (objective_of_basis() != 0) return {LpStatus::Infeasible, 0, {}, {}, iterations_};
        drive_out_artificials();

        phase_ = 2;
        recompute_pi();
        if (!iterate()) return {LpStatus::Unbounded, 0, {}, {}, iterations_};

        StandardFormSolution sol;
        sol.status = LpStatus::Optimal;
        sol.x.assign(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) sol.x[basis_[i]] = xb_[i];
        sol.objective = 0;
        for (int j = 0; j < n_; ++j)
            if (sol.x[j] != 0) sol.objective += objective_[j] * sol.x[j];
        sol.duals.resize(m_);
        for (int i = 0; i < m_; ++i) sol.duals[i] = row_sign_[i] > 0 ? pi_[i] : -pi_[i];
        sol.iterations = iterations_;
        return sol;
    }

private:
    Rational cost(int j) const {
        if (phase_ == 1) return j >= n_ ? Rational(1) : Rational(0);
        return j < n_ ? objective_[j] : Rational(0);
    }

    void recompute_pi() {
        for (int t = 0; t < m_; ++t) pi_[t] = 0;
        for (int i = 0; i < m_; ++i) {
            Rational ci = cost(basis_[i]);
            if (ci == 0) continue;
            const auto& row = binv_[i];
            for (int t = 0; t < m_; ++t)
                if (row[t] != 0) pi_[t] += ci * row[t];
        }
    }

    Rational objective_of_basis() const {
        Rational obj = 0;
        for (int i = 0; i < m_; ++i) {
            Rational ci = cost(basis_[i]);
            if (ci != 0) obj += ci * xb_[i];
        }
        return obj;
    }

    Rational reduced_cost(int j) const {
        Rational d = cost(j);
        if (j >= n_) {
            d -= pi_[j - n_];
        } else {
            for (const auto& [row, coef] : columns_[j]) d -= pi_[row] * coef;
        }
        return d;
    }

    std::vector<Rational> tableau_column(int j) const {
        std::vector<Rational> u(m_, 0);
        mpq_class tmp;
        if (j >= n_) {
            int row = j - n_;
            for (int i = 0; i < m_; ++i) u[i] = binv_[i][row];
            return u;
        }
        for (int i = 0; i < m_; ++i) {
            const auto& row = binv_[i];
            Rational& acc = u[i];
            for (const auto& [r, coef] : columns_[j]) {
                if (row[r] != 0) {
                    mpq_mul(tmp.get_mpq_t(), row[r].get_mpq_t(), coef.get_mpq_t());
                    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
                }
            }
        }
        return u;
    }

    // Most negative reduced cost, least index on ties; artificials only in
    // phase 1 and never after they have left the basis.  After a long
    // degenerate streak the rule degrades to pure least-index (Bland), whose
    // termination needs no lexicographic invariant.
    int pick_entering(Rational& d_out) const {
        const int limit = phase_ == 1 ? n_ + m_ : n_;
        const bool bland = degenerate_streak_ > kBlandThreshold;
        int best = -1;
        Rational best_d;
        for (int j = 0; j < limit; ++j) {
            if (in_basis_[j]) continue;
            if (j >= n_ && left_artificials_[j - n_]) continue;
            Rational d = reduced_cost(j);
            if (d < 0 && (best < 0 || d < best_d)) {
                best = j;
                best_d = std::move(d);
                if (bland) break;
            }
        }
        if (best >= 0) d_out = best_d;
        return best;
    }

    // Lexicographic ratio test over rows of [x_B | Binv].
    int pick_leaving(const std::vector<Rational>& u) const {
        std::vector<int> candidates;
        Rational best;
        for (int i = 0; i < m_; ++i) {
            if (u[i] <= 0) continue;
            Rational ratio = xb_[i] / u[i];
            if (candidates.empty() || ratio < best) {
                best = std::move(ratio);
                candidates.assign(1, i);
            } else if (ratio == best) {
                candidates.push_back(i);
            }
        }
        if (candidates.empty()) return -1;
        for (int col = 0; col < m_ && candidates.size() > 1; ++col) {
            Rational best_col;
            std::vector<int> keep;
            for (int i : candidates) {
                Rational ratio = binv_[i][col] / u[i];
                if (keep.empty() || ratio < best_col) {
                    best_col = std::move(ratio);
                    keep.assign(1, i);
                } else if (ratio == best_col) {
                    keep.push_back(i);
                }
            }
            candidates.swap(keep);
        }
        return candidates.front();
    }

    bool iterate() {
        for (;;) {
            Rational d_enter;
            int entering = pick_entering(d_enter);
            if (entering < 0) return true;

            std::vector<Rational> u = tableau_column(entering);
            int leave = pick_leaving(u);
            if (leave < 0) return false;

            degenerate_streak_ = xb_[leave] == 0 ? degenerate_streak_ + 1 : 0;
            pivot(entering, leave, u, d_enter);
            ++iterations_;
            if (verbose_ && iterations_ % 100 == 0)
                std::fprintf(stderr, "simplex: phase %d iteration %ld\n", phase_, iterations_);
        }
    }

    void pivot(int entering, int leave, const std::vector<Rational>& u, const Rational& d_enter) {
        if (basis_[leave] >= n_) left_artificials_[basis_[leave] - n_] = true;

        std::vector<Rational>& prow = binv_[leave];
        Rational inv_pivot = 1 / u[leave];
        nz_.clear();
        for (int t = 0; t < m_; ++t) {
            if (prow[t] != 0) {
                prow[t] *= inv_pivot;
                nz_.push_back(t);
            }
        }
        mpq_class tmp;
        for (int i = 0; i < m_; ++i) {
            if (i == leave || u[i] == 0) continue;
            std::vector<Rational>& row = binv_[i];
            const mpq_srcptr ui = u[i].get_mpq_t();
            for (int t : nz_) {
                mpq_mul(tmp.get_mpq_t(), ui, prow[t].get_mpq_t());
                mpq_sub(row[t].get_mpq_t(), row[t].get_mpq_t(), tmp.get_mpq_t());
            }
        }

        Rational theta = xb_[leave] * inv_pivot;
        if (theta != 0) {
            for (int i = 0; i < m_; ++i) {
                if (i == leave || u[i] == 0) continue;
                mpq_mul(tmp.get_mpq_t(), theta.get_mpq_t(), u[i].get_mpq_t());
                mpq_sub(xb_[i].get_mpq_t(), xb_[i].get_mpq_t(), tmp.get_mpq_t());
            }
        }
        xb_[leave] = std::move(theta);

        if (d_enter != 0) {
            mpq_class tmp2;
            for (int t : nz_) {
                mpq_mul(tmp2.get_mpq_t(), d_enter.get_mpq_t(), prow[t].get_mpq_t());
                mpq_add(pi_[t].get_mpq_t(), pi_[t].get_mpq_t(), tmp2.get_mpq_t());
            }
        }

        in_basis_[basis_[leave]] = false;
        in_basis_[entering] = true;
        basis_[leave] = entering;
    }

    // Rows whose artificial cannot be pivoted onto any real column are
    // redundant; their artificial stays basic at zero and never blocks.
    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int found = -1;
            for (int j = 0; j < n_ && found < 0; ++j) {
                if (in_basis_[j]) continue;
                Rational acc = 0;
                for (const auto& [r, coef] : columns_[j])
                    if (binv_[i][r] != 0) acc += binv_[i][r] * coef;
                if (acc != 0) found = j;
            }
            if (found >= 0) {
                std::vector<Rational> u = tableau_column(found);
                pivot(found, i, u, reduced_cost(found));
                ++iterations_;
            }
        }
    }

    int m_;
    int n_;
    int phase_ = 1;
    std::vector<std::vector<std::pair<int, Rational>>> columns_; // sign-normalized
    std::vector<Rational> objective_;
    std::vector<Rational> rhs_;
    std::vector<int> row_sign_;
    std::vector<int> basis_;
    std::vector<std::vector<Rational>> binv_;
    std::vector<Rational> xb_;
    std::vector<Rational> pi_;
    std::vector<bool> in_basis_;
    std::vector<bool> left_artificials_;
    std::vector<int> nz_;
    long iterations_ = 0;
    long degenerate_streak_ = 0;
    static constexpr long kBlandThreshold = 2000;
    bool verbose_ = false;
};

} // namespace

StandardFormSolution solve_standard_form(const StandardFormLP& lp) {
    if (int(lp.objective.size()) != int(lp.columns.size()) || int(lp.rhs.size()) != lp.num_rows)
        throw SolverError("inconsistent LP dimensions");
    SimplexSolver solver(lp);
    return solver.run();
}

} // namespace inforatio
