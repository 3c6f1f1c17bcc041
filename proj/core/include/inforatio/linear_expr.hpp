#ifndef INFORATIO_LINEAR_EXPR_HPP
#define INFORATIO_LINEAR_EXPR_HPP

#include <map>

#include "inforatio/rational.hpp"
#include "inforatio/subset.hpp"

namespace inforatio {

/// Rational-coefficient linear functional over subset-indexed entropy values
/// f(A), plus a rational constant.  Zero coefficients are never stored.
class LinearExpr {
public:
    LinearExpr() = default;

    void add_term(const Subset& s, const Rational& coeff);
    void add_constant(const Rational& c) { constant_ += c; }
    void add(const LinearExpr& other, const Rational& scale = 1);

    const std::map<Subset, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }
    bool f_part_equals(const LinearExpr& other) const { return terms_ == other.terms_; }

    /// Evaluates the f-part against a value oracle for subsets.
    template <typename FnSubsetToRational>
    Rational evaluate(FnSubsetToRational&& value_of) const {
        Rational sum = constant_;
        for (const auto& [s, c] : terms_) sum += c * value_of(s);
        return sum;
    }

    bool operator==(const LinearExpr&) const = default;

private:
    std::map<Subset, Rational> terms_;
    Rational constant_ = 0;
};

/// [[X,B,A]]: sum over b in B of f(X+b) minus sum over a in A of f(X-a).
/// Requires A to be contained in X.
LinearExpr bracket(const Subset& x, const Subset& b, const Subset& a);

} // namespace inforatio

#endif
