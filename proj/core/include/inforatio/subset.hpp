#ifndef INFORATIO_SUBSET_HPP
#define INFORATIO_SUBSET_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace inforatio {

/// Fixed-width bitset over a ground set of `size()` elements.  Element i is
/// bit i; for extended (secret-aware) sets the secret is the highest bit.
class Subset {
public:
    Subset() = default;
    explicit Subset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}
    Subset(int nbits, std::initializer_list<int> elems) : Subset(nbits) {
        for (int e : elems) set(e);
    }
    static Subset from_mask(int nbits, std::uint64_t mask);
    static Subset from_elements(int nbits, const std::vector<int>& elems);

    int size() const { return nbits_; }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    int count() const;
    bool empty() const;
    bool intersects(const Subset& o) const;
    bool is_subset_of(const Subset& o) const;
    std::vector<int> elements() const;

    Subset operator|(const Subset& o) const;
    Subset operator&(const Subset& o) const;
    /// Set difference.
    Subset operator-(const Subset& o) const;
    Subset with(int i) const { Subset r = *this; r.set(i); return r; }
    Subset without(int i) const { Subset r = *this; r.reset(i); return r; }

    /// Widens the ground set (new high bits zero); used to lift vertex sets
    /// into the extended ground set that includes the secret.
    Subset widened(int new_nbits) const;

    bool operator==(const Subset& o) const = default;
    std::strong_ordering operator<=>(const Subset& o) const;

    std::uint64_t hash() const;
    /// Hex bitmask, lowest word last ("0x0", "0x1b", ...).
    std::string to_hex() const;
    static Subset from_hex(int nbits, const std::string& hex);

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace inforatio

#endif
