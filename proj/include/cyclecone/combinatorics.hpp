#pragma once

// Index-set plumbing. Subsets of {1..n} are bitmasks: bit i-1 represents the
// index i. All enumeration helpers emit ascending-tuple lexicographic order so
// every consumer (bases, printers, JSON) agrees on one canonical ordering.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclecone/numeric.hpp"

namespace cyclecone {

using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return __builtin_popcount(m); }

inline mask_t full_mask(int n) { return (n >= 32) ? ~mask_t(0) : ((mask_t(1) << n) - 1); }

inline bool mask_contains(mask_t m, int index1) { return (m >> (index1 - 1)) & 1u; }

inline mask_t mask_with(mask_t m, int index1) { return m | (mask_t(1) << (index1 - 1)); }

inline std::vector<int> mask_indices(mask_t m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

inline std::string mask_str(mask_t m) {
    std::string s = "{";
    bool first = true;
    for (int i : mask_indices(m)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

// Ascending-tuple lexicographic comparison, e.g. {1,4} < {2,3}.
inline bool tuple_lex_less(mask_t a, mask_t b) {
    while (a && b) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

// All size-m subsets of {1..n} in ascending-tuple lexicographic order.
inline std::vector<mask_t> subsets_of_size(int n, int m) {
    std::vector<mask_t> out;
    if (m < 0 || m > n) return out;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    while (true) {
        mask_t mk = 0;
        for (int v : pick) mk = mask_with(mk, v);
        out.push_back(mk);
        if (m == 0) break;
        int i = m - 1;
        while (i >= 0 && pick[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int l = i + 1; l < m; ++l) pick[l] = pick[l - 1] + 1;
    }
    return out;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

inline long long binomial_ll(int n, int k) {
    return static_cast<long long>(binomial(n, k));
}

// Tiny deterministic RNG (xorshift*) so reproducibility does not depend on any
// library's distribution internals.
struct DetRng {
    std::uint64_t state;
    explicit DetRng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    // Uniform-ish integer in [lo, hi]; bias is irrelevant for test sampling.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace cyclecone
