#include "inforatio/linear_expr.hpp"

#include "inforatio/errors.hpp"

namespace inforatio {

void LinearExpr::add_term(const Subset& s, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LinearExpr::add(const LinearExpr& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [s, c] : other.terms_) add_term(s, c * scale);
    constant_ += other.constant_ * scale;
}

LinearExpr bracket(const Subset& x, const Subset& b, const Subset& a) {
    if (!a.is_subset_of(x)) throw ParameterError("bracket requires A to be a subset of X");
    LinearExpr expr;
    for (int e : b.elements()) expr.add_term(x.with(e), 1);
    for (int e : a.elements()) expr.add_term(x.without(e), -1);
    return expr;
}

} // namespace inforatio
