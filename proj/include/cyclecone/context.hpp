#pragma once

// Ambient space bookkeeping: X is the blowup of (P^1)^n at r very general
// points. Every algebraic object carries its (n, r) context and operations
// refuse to mix contexts.

#include <tuple>

#include "cyclecone/numeric.hpp"

namespace cyclecone {

struct RingContext {
    int n = 0;  // number of P^1 factors, n >= 2
    int r = 0;  // number of blown-up points, r >= 0

    RingContext() = default;
    RingContext(int n_, int r_) : n(n_), r(r_) {
        if (n < 2) throw error("context requires n >= 2");
        if (n > 31) throw error("context requires n <= 31");
        if (r < 0) throw error("context requires r >= 0");
    }

    bool operator==(const RingContext& o) const { return n == o.n && r == o.r; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }
    bool operator<(const RingContext& o) const {
        return std::tie(n, r) < std::tie(o.n, o.r);
    }
};

inline void require_same_context(const RingContext& a, const RingContext& b,
                                 const char* op) {
    if (a != b)
        throw error(std::string(op) + ": mixed contexts (n=" + std::to_string(a.n) +
                    ",r=" + std::to_string(a.r) + ") vs (n=" + std::to_string(b.n) +
                    ",r=" + std::to_string(b.r) + ")");
}

}  // namespace cyclecone
