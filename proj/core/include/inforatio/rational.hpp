#ifndef INFORATIO_RATIONAL_HPP
#define INFORATIO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "inforatio/errors.hpp"

namespace inforatio {

/// Exact rational arithmetic everywhere; no floating point in any decision.
using Rational = mpq_class;

/// Renders as "p" or "p/q" (canonical form, q > 0).
inline std::string to_fraction_string(const Rational& r) {
    return r.get_str();
}

/// num/den in canonical form (the raw two-argument mpq constructor does not
/// reduce, which breaks comparisons).
inline Rational make_ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q"; rejects zero denominators and junk.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParameterError("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw ParameterError("bad rational literal: " + s);
    if (r.get_den() == 0) throw ParameterError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

} // namespace inforatio

#endif
