#pragma once

// Chow ring of the blowup X of (P^1)^n at r very general points, presented as
//
//   Z[h_1..h_n, e_1..e_r] / (h_i^2,  h_i e_j,  e_i e_l (i != l),
//                            e_j^n - (-1)^(n-1) h_1...h_n).
//
// A monomial basis is kept in canonical form: squarefree products H(S) of the
// h_i, and pure powers e_j^s with 1 <= s <= n-1. The relation rewrites e_j^n
// to (-1)^(n-1) H({1..n}) eagerly, so e_j^n is never stored.

#include <map>
#include <string>

#include "cyclecone/combinatorics.hpp"
#include "cyclecone/context.hpp"
#include "cyclecone/numeric.hpp"

namespace cyclecone {

struct ChowMonomial {
    enum class Kind { H, E } kind = Kind::H;
    mask_t hmask = 0;   // Kind::H; empty mask is the unit monomial
    int j = 0;          // Kind::E: exceptional index, 1-based
    int power = 0;      // Kind::E: exponent, 1 <= power <= n-1 once canonical

    static ChowMonomial unit() { return {}; }
    static ChowMonomial h_set(mask_t m) { return {Kind::H, m, 0, 0}; }
    static ChowMonomial e_power(int j, int power) {
        return {Kind::E, 0, j, power};
    }

    int degree() const { return kind == Kind::H ? popcount(hmask) : power; }

    bool operator==(const ChowMonomial& o) const {
        return kind == o.kind && hmask == o.hmask && j == o.j && power == o.power;
    }
    bool operator<(const ChowMonomial& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        if (kind != o.kind) return kind == Kind::H;
        if (kind == Kind::H) {
            if (hmask == o.hmask) return false;
            return tuple_lex_less(hmask, o.hmask);
        }
        if (j != o.j) return j < o.j;
        return power < o.power;
    }

    std::string str() const;
};

class ChowElement {
  public:
    explicit ChowElement(RingContext ctx) : ctx_(ctx) {}

    const RingContext& context() const { return ctx_; }
    const std::map<ChowMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff * mon, canonicalizing e_j^n and erasing zero coefficients.
    void add_term(const ChowMonomial& mon, const Rat& coeff);

    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator*(const ChowElement& o) const;
    ChowElement operator*(const Rat& c) const;
    ChowElement operator-() const { return *this * Rat(-1); }
    bool operator==(const ChowElement& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const ChowElement& o) const { return !(*this == o); }

    // True when every term has the same total degree (also true for zero; the
    // zero element reports degree -1).
    bool is_homogeneous(int* deg = nullptr) const;

    std::string str() const;

  private:
    RingContext ctx_;
    std::map<ChowMonomial, Rat> terms_;
};

ChowElement chow_zero(RingContext ctx);
ChowElement chow_unit(RingContext ctx);

// Degree-1 generators: kind 'h' with 1 <= index <= n, kind 'e' with
// 1 <= index <= r.
ChowElement make_generator(RingContext ctx, char kind, int index);

// Sum of all h_i minus the sum of all e_j (anticanonical-flavored sweep class).
ChowElement hyperplane_minus_exceptional(RingContext ctx);

// Degree map: coefficient of the point class H({1..n}). Requires the element
// to be homogeneous of top degree n (the zero element is allowed and maps to 0).
Rat degree(const ChowElement& a);

// d^m for a homogeneous degree-1 element d and 0 <= m <= n.
ChowElement self_intersection(const ChowElement& d, int m);

}  // namespace cyclecone
