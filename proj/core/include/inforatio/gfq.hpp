#ifndef INFORATIO_GFQ_HPP
#define INFORATIO_GFQ_HPP

#include <cstdint>
#include <vector>

namespace inforatio {

bool is_prime(std::uint64_t q);

/// Multiplicative inverse mod a prime.
std::uint64_t gf_inverse(std::uint64_t a, std::uint64_t q);

/// Rank of a row list over GF(q); destroys its argument.
int gf_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t q);

} // namespace inforatio

#endif
