#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace irratio {

// Exact small-number arithmetic used throughout: everything here is
// trial-division scale (inputs stay well below 2^40).

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    uint64_t prime;
    uint32_t exponent;
};

inline std::vector<PrimePower> factorize(uint64_t n) {
    std::vector<PrimePower> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            uint32_t e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.push_back({d, e});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

/// All divisors of n in increasing order.
inline std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out{1};
    for (const auto& pp : factorize(n)) {
        size_t sz = out.size();
        uint64_t q = 1;
        for (uint32_t e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    if (mod == 1) return 0;
    uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: gcd(a,n) != 1");
    uint64_t ord = euler_phi(n);
    for (const auto& pp : factorize(ord)) {
        for (uint32_t e = 0; e < pp.exponent && pow_mod(a, ord / pp.prime, n) == 1; ++e)
            ord /= pp.prime;
    }
    return ord;
}

/// p-part of n: the largest power of p dividing n.
inline uint64_t p_part(uint64_t n, uint64_t p) {
    uint64_t q = 1;
    while (n % p == 0) { n /= p; q *= p; }
    return q;
}

inline bool is_squarefree(uint64_t n) {
    for (const auto& pp : factorize(n))
        if (pp.exponent > 1) return false;
    return true;
}

/// Units modulo n, i.e. all 1 <= k < n with gcd(k, n) = 1. For n = 1 returns {0}.
inline std::vector<uint32_t> units_mod(uint32_t n) {
    if (n == 1) return {0};
    std::vector<uint32_t> out;
    for (uint32_t k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1u) out.push_back(k);
    return out;
}

/// Smallest prime congruent to r modulo m (r, m coprime; Dirichlet guarantees existence).
inline uint64_t smallest_prime_in_class(uint64_t r, uint64_t m) {
    for (uint64_t p = 2;; ++p)
        if (p % m == r % m && is_prime(p)) return p;
}

}  // namespace irratio
