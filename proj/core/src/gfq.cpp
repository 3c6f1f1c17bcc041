#include "inforatio/gfq.hpp"

#include "inforatio/errors.hpp"

namespace inforatio {

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    if (q % 2 == 0) return q == 2;
    for (std::uint64_t f = 3; f * f <= q; f += 2)
        if (q % f == 0) return false;
    return true;
}

std::uint64_t gf_inverse(std::uint64_t a, std::uint64_t q) {
    // Extended Euclid; a must be nonzero mod q.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(q), new_r = std::int64_t(a % q);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw ParameterError("element not invertible");
    if (t < 0) t += std::int64_t(q);
    return std::uint64_t(t);
}

int gf_rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t q) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && std::size_t(rank) < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] % q == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        std::uint64_t inv = gf_inverse(rows[lead][col] % q, q);
        for (std::size_t c = col; c < cols; ++c) rows[lead][c] = rows[lead][c] % q * inv % q;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead) continue;
            std::uint64_t factor = rows[r][col] % q;
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = (rows[r][c] + (q - factor) * rows[lead][c]) % q;
        }
        ++lead;
        ++rank;
    }
    return rank;
}

} // namespace inforatio
