#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsum/integer_set.hpp"
#include "rsum/prime.hpp"

namespace rsum {

/// Subset of Z/pZ for a prime p, stored as a dense p-bit vector.
/// Residues are canonicalized to {0, ..., p-1}; negative inputs reduce mod p.
class ResidueSet {
public:
    ResidueSet() = default;

    explicit ResidueSet(long long modulus) : p_(check_modulus(modulus)), words_(word_count(modulus), 0) {}

    ResidueSet(long long modulus, std::initializer_list<long long> members)
        : ResidueSet(modulus, std::vector<long long>(members)) {}

    ResidueSet(long long modulus, const std::vector<long long>& members) : ResidueSet(modulus) {
        for (long long x : members) insert(x);
    }

    static ResidueSet universe(long long modulus) {
        ResidueSet s(modulus);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    long long modulus() const { return p_; }

    long long reduce(long long x) const {
        long long r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    void insert(long long x) { words_[static_cast<std::size_t>(reduce(x)) >> 6] |= 1ULL << (reduce(x) & 63); }
    void erase(long long x) { words_[static_cast<std::size_t>(reduce(x)) >> 6] &= ~(1ULL << (reduce(x) & 63)); }

    bool contains(long long x) const {
        long long r = reduce(x);
        return (words_[static_cast<std::size_t>(r) >> 6] >> (r & 63)) & 1ULL;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    std::vector<long long> elements() const {
        std::vector<long long> out;
        out.reserve(size());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<long long>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Bitwise-rotated copy: member x becomes x + c (mod p).
    ResidueSet translate(long long c) const {
        ResidueSet out(p_);
        rotate_into(reduce(c), out.words_);
        return out;
    }

    ResidueSet negate() const {
        ResidueSet out(p_);
        for (long long x : elements()) out.insert(-x);
        return out;
    }

    ResidueSet complement() const {
        ResidueSet out(p_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
        out.trim();
        return out;
    }

    ResidueSet unite(const ResidueSet& o) const {
        require_same_modulus(o);
        ResidueSet out(p_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | o.words_[w];
        return out;
    }

    ResidueSet intersect(const ResidueSet& o) const {
        require_same_modulus(o);
        ResidueSet out(p_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & o.words_[w];
        return out;
    }

    ResidueSet difference(const ResidueSet& o) const {
        require_same_modulus(o);
        ResidueSet out(p_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & ~o.words_[w];
        return out;
    }

    bool subset_of(const ResidueSet& o) const {
        require_same_modulus(o);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }

    bool operator==(const ResidueSet& o) const { return p_ == o.p_ && words_ == o.words_; }
    bool operator!=(const ResidueSet& o) const { return !(*this == o); }

    void require_same_modulus(const ResidueSet& o) const {
        if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
    }

    /// OR of this set rotated by c, accumulated into acc (p bits). Kernel of
    /// the shifted-copies sumset.
    void rotate_or_into(long long c, std::vector<std::uint64_t>& acc) const {
        std::vector<std::uint64_t> tmp(words_.size(), 0);
        rotate_into(reduce(c), tmp);
        for (std::size_t w = 0; w < tmp.size(); ++w) acc[w] |= tmp[w];
    }

    static ResidueSet from_words(long long modulus, std::vector<std::uint64_t> words) {
        ResidueSet s(modulus);
        s.words_ = std::move(words);
        s.trim();
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Members as least absolute residues, i.e. representatives in (-p/2, p/2].
    IntegerSet least_absolute_residues() const {
        std::vector<long long> v;
        v.reserve(size());
        for (long long x : elements()) v.push_back(x * 2 > p_ ? x - p_ : x);
        return IntegerSet(std::move(v));
    }

private:
    static long long check_modulus(long long modulus) {
        if (modulus < 2 || !is_prime(static_cast<std::uint64_t>(modulus)))
            throw std::invalid_argument("modulus not prime: " + std::to_string(modulus));
        return modulus;
    }

    static std::size_t word_count(long long modulus) {
        return static_cast<std::size_t>((modulus + 63) / 64);
    }

    void trim() {
        int used = static_cast<int>(p_ & 63);
        if (used != 0) words_.back() &= (1ULL << used) - 1;
    }

    // Cyclic left rotation of the p-bit vector by k; bit i lands on (i+k) mod p.
    void rotate_into(long long k, std::vector<std::uint64_t>& out) const {
        const std::size_t nw = words_.size();
        if (k == 0) {
            out = words_;
            return;
        }
        auto shift_bit = [&](long long src, long long dst) {
            if ((words_[static_cast<std::size_t>(src) >> 6] >> (src & 63)) & 1ULL)
                out[static_cast<std::size_t>(dst) >> 6] |= 1ULL << (dst & 63);
        };
        if (p_ <= 256) {
            // Small moduli dominate the exhaustive scans; a direct loop is fine.
            for (long long i = 0; i < p_; ++i) {
                long long j = i + k;
                if (j >= p_) j -= p_;
                shift_bit(i, j);
            }
            return;
        }
        // Word-level: out = (bits << k | bits >> (p-k)) masked to p bits.
        const long long word_shift = k >> 6;
        const int bit_shift = static_cast<int>(k & 63);
        for (std::size_t i = 0; i < nw; ++i) {
            std::uint64_t w = words_[i];
            if (w == 0) continue;
            std::size_t d = i + static_cast<std::size_t>(word_shift);
            if (bit_shift == 0) {
                put_word(out, d, w);
            } else {
                put_word(out, d, w << bit_shift);
                put_word(out, d + 1, w >> (64 - bit_shift));
            }
        }
        // Fold everything at bit positions >= p back to the front.
        std::size_t extra_words = out.size() - nw;
        std::vector<std::uint64_t> overflow(out.begin() + static_cast<long long>(nw), out.end());
        out.resize(nw);
        int used = static_cast<int>(p_ & 63);
        std::uint64_t high = used == 0 ? 0 : (out[nw - 1] >> used);
        if (used != 0) out[nw - 1] &= (1ULL << used) - 1;
        // Bits that spilled past p sit at offset (64 - used) within `high` and
        // the overflow words; re-inject them starting at residue 0.
        long long pos = 0;
        auto inject = [&](std::uint64_t w) {
            while (w != 0) {
                int b = std::countr_zero(w);
                long long dst = pos + b;
                out[static_cast<std::size_t>(dst) >> 6] |= 1ULL << (dst & 63);
                w &= w - 1;
            }
        };
        inject(high);
        pos = used == 0 ? 0 : 64 - used;
        for (std::size_t i = 0; i < extra_words; ++i) {
            inject(overflow[i]);
            pos += 64;
        }
    }

    static void put_word(std::vector<std::uint64_t>& v, std::size_t idx, std::uint64_t w) {
        if (w == 0) return;
        if (idx >= v.size()) v.resize(idx + 1, 0);
        v[idx] |= w;
    }

    long long p_ = 2;
    std::vector<std::uint64_t> words_ = {0};
};

} // namespace rsum
