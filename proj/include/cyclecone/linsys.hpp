#pragma once

// Multihomogeneous squarefree monomial linear systems on (P^1)^n with the
// blown-up point fixed at ((1:0),...,(1:0)): the |W_s| bases, combinatorial
// base loci (minimal transversals of the support hypergraph, with the empty
// mixed strata filtered out), multiplicity along the invariant curve L, and
// restriction to coordinate strata.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclecone/cycles.hpp"

namespace cyclecone {

// Squarefree multihomogeneous monomial: factor i contributes x_i, y_i or
// nothing. xmask and ymask are disjoint masks over factors 1..n.
struct MHMonomial {
    mask_t xmask = 0;
    mask_t ymask = 0;
    bool operator==(const MHMonomial& o) const {
        return xmask == o.xmask && ymask == o.ymask;
    }
    bool operator<(const MHMonomial& o) const {
        if (ymask != o.ymask) return tuple_lex_less(ymask, o.ymask);
        return tuple_lex_less(xmask, o.xmask);
    }
};

std::string monomial_str(const MHMonomial& m);

struct MonomialSystem {
    int n = 0;
    std::optional<CycleClass> divisor_class;  // set when the system names one
    std::vector<MHMonomial> monomials;        // sorted, deduplicated
};

// |W_s|: monomials prod_{i in I} y_i * prod_{j in {2..n}\I} x_j over
// I subset {2..n} with |I| >= s; divisor class sum_{i>=2} H_i - s E_1.
MonomialSystem basis_Ws(int n, int s);

// A coordinate stratum { y_i = 0 (i in ymask), x_j = 0 (j in xmask) } with
// its cycle class: H_I - E_{1,k} for the pure-y strata through the blown-up
// point, H_I otherwise (I = union of the masks, k = n - |I|); no class when
// the stratum is a point.
struct BaseLocusStratum {
    mask_t ymask = 0;
    mask_t xmask = 0;
    std::optional<CycleClass> cls;
    bool operator==(const BaseLocusStratum& o) const {
        return ymask == o.ymask && xmask == o.xmask;
    }
    bool operator<(const BaseLocusStratum& o) const {
        if (ymask != o.ymask) return tuple_lex_less(ymask, o.ymask);
        return tuple_lex_less(xmask, o.xmask);
    }
};

// Minimal coordinate strata covering the common zero locus of the system.
std::vector<BaseLocusStratum> base_locus(const MonomialSystem& sys);

// Order of the system along L = { y_2 = ... = y_n = 0 }: the minimum
// y-degree (in y_2..y_n) over the monomials, with a witness attaining it.
std::pair<int, MHMonomial> multiplicity_along_L(const MonomialSystem& sys);

// Substitute the stratum's variables by zero and keep the surviving
// monomials verbatim.
MonomialSystem restrict_to_stratum(const MonomialSystem& sys,
                                   const BaseLocusStratum& stratum);

// Zero locus, within the stratum, of one surviving monomial: variables of m
// whose factor is pinned by the stratum are nonzero constants there and are
// dropped; each remaining variable contributes the stratum extended by it.
std::vector<BaseLocusStratum> zero_locus_on_stratum(int n, const MHMonomial& m,
                                                    const BaseLocusStratum& stratum);

// The restriction of |~W_s| to the exceptional divisor of the curve blowup:
// squarefree degree-s monomials in z_2..z_n on P^{n-2}.
struct RestrictedOnE {
    int n = 0;
    int s = 0;
    std::vector<mask_t> monomials;  // I subset {2..n}, |I| = s
};
RestrictedOnE restricted_system_on_E(int n, int s);

// Minimum local order of the restricted system at the fundamental point
// indexed by j (2 <= j <= n): degree in the variables other than z_j.
int fundamental_point_multiplicity(const RestrictedOnE& sys, int j);

}  // namespace cyclecone
