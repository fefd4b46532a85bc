#pragma once

#include <cstdint>
#include <stdexcept>

namespace rsum {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

} // namespace rsum
