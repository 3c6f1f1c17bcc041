#include "inforatio/subset.hpp"

#include <algorithm>
#include <bit>

#include "inforatio/errors.hpp"

namespace inforatio {

Subset Subset::from_mask(int nbits, std::uint64_t mask) {
    Subset s(nbits);
    if (nbits < 64 && nbits >= 0 && (mask >> nbits) != 0)
        throw ParameterError("mask has bits beyond the ground set");
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

Subset Subset::from_elements(int nbits, const std::vector<int>& elems) {
    Subset s(nbits);
    for (int e : elems) {
        if (e < 0 || e >= nbits) throw ParameterError("element out of range");
        s.set(e);
    }
    return s;
}

int Subset::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool Subset::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Subset::intersects(const Subset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool Subset::is_subset_of(const Subset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(int(w * 64) + b);
            bits &= bits - 1;
        }
    }
    return out;
}

Subset Subset::operator|(const Subset& o) const {
    assert(nbits_ == o.nbits_);
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
}

Subset Subset::operator&(const Subset& o) const {
    assert(nbits_ == o.nbits_);
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
}

Subset Subset::operator-(const Subset& o) const {
    assert(nbits_ == o.nbits_);
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
}

Subset Subset::widened(int new_nbits) const {
    assert(new_nbits >= nbits_);
    Subset r(new_nbits);
    std::copy(words_.begin(), words_.end(), r.words_.begin());
    return r;
}

std::strong_ordering Subset::operator<=>(const Subset& o) const {
    if (auto c = nbits_ <=> o.nbits_; c != 0) return c;
    // High words first so the order matches numeric value of the bitmask.
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::uint64_t Subset::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h ^ std::uint64_t(nbits_);
}

std::string Subset::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            int v = int((words_[i] >> (nib * 4)) & 0xf);
            if (leading && v == 0 && !(i == 0 && nib == 0)) continue;
            leading = false;
            out.push_back(digits[v]);
        }
    }
    if (out.empty()) out = "0";
    return "0x" + out;
}

Subset Subset::from_hex(int nbits, const std::string& hex) {
    std::string body = hex;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    if (body.empty()) throw ParameterError("empty hex bitmask");
    Subset s(nbits);
    int nibble = 0;
    for (auto it = body.rbegin(); it != body.rend(); ++it, ++nibble) {
        char c = *it;
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw ParameterError(std::string("bad hex digit in bitmask: ") + c);
        for (int b = 0; b < 4; ++b) {
            if (v & (1 << b)) {
                int bit = nibble * 4 + b;
                if (bit >= nbits) throw ParameterError("bitmask exceeds ground set: " + hex);
                s.set(bit);
            }
        }
    }
    return s;
}

} // namespace inforatio
