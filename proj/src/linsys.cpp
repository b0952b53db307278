#include "cyclecone/linsys.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cyclecone {

namespace {

// variable sets over { x_1..x_n, y_1..y_n }: bit i-1 = x_i, bit n+i-1 = y_i
using VarSet = std::uint64_t;

VarSet var_x(int n, int i) { (void)n; return VarSet{1} << (i - 1); }
VarSet var_y(int n, int i) { return VarSet{1} << (n + i - 1); }

VarSet support(int n, const MHMonomial& m) {
    VarSet s = 0;
    for (int i : mask_indices(m.xmask)) s |= var_x(n, i);
    for (int i : mask_indices(m.ymask)) s |= var_y(n, i);
    return s;
}

void check_monomial(int n, const MHMonomial& m) {
    if (m.xmask & m.ymask)
        throw error("monomial has both coordinates of one factor: " + monomial_str(m));
    mask_t full = full_mask(n);
    if ((m.xmask | m.ymask) & ~full)
        throw error("monomial index out of range for n = " + std::to_string(n));
}

BaseLocusStratum stratum_from_varset(int n, VarSet v) {
    BaseLocusStratum st;
    for (int i = 1; i <= n; ++i) {
        if (v & var_x(n, i)) st.xmask = mask_with(st.xmask, i);
        if (v & var_y(n, i)) st.ymask = mask_with(st.ymask, i);
    }
    mask_t I = st.xmask | st.ymask;
    int size = popcount(I);
    if (size < n) {
        RingContext ctx{n, 1};
        int k = n - size;
        CycleClass c = cycle_h(ctx, k, I);
        if (st.xmask == 0) c.add_e(1, Rat(-1));  // passes through the blown-up point
        st.cls = c;
    }
    return st;
}

}  // namespace

std::string monomial_str(const MHMonomial& m) {
    if (m.xmask == 0 && m.ymask == 0) return "1";
    std::string s;
    for (int i = 1; i <= 31; ++i) {
        if (mask_contains(m.xmask, i)) s += "x" + std::to_string(i);
        if (mask_contains(m.ymask, i)) s += "y" + std::to_string(i);
    }
    return s;
}

MonomialSystem basis_Ws(int n, int s) {
    if (n < 2) throw error("basis_Ws: n must be at least 2");
    if (s < 1 || s > n - 1) throw error("basis_Ws: s must be between 1 and n-1");
    MonomialSystem sys;
    sys.n = n;
    RingContext ctx{n, 1};
    CycleClass cls(ctx, n - 1);
    for (int i = 2; i <= n; ++i) cls.add_h(mask_with(0, i), Rat(1));
    cls.add_e(1, Rat(-s));
    sys.divisor_class = cls;
    mask_t tail = full_mask(n) & ~mask_t{1};  // {2..n}
    for (int t = s; t <= n - 1; ++t) {
        for (mask_t sub : subsets_of_size(n - 1, t)) {
            mask_t I = 0;
            for (int i : mask_indices(sub)) I = mask_with(I, i + 1);
            sys.monomials.push_back({tail & ~I, I});
        }
    }
    std::sort(sys.monomials.begin(), sys.monomials.end());
    return sys;
}

std::vector<BaseLocusStratum> base_locus(const MonomialSystem& sys) {
    if (sys.n < 1) throw error("base_locus: empty context");
    if (sys.monomials.empty()) throw error("base_locus: empty system");
    int n = sys.n;
    for (const MHMonomial& m : sys.monomials) check_monomial(n, m);

    // minimal transversals of the support hypergraph, built incrementally
    std::vector<VarSet> covers{0};
    for (const MHMonomial& m : sys.monomials) {
        VarSet sup = support(n, m);
        if (sup == 0)
            throw error("base_locus: the system contains the constant monomial");
        std::vector<VarSet> next;
        for (VarSet t : covers) {
            if (t & sup) {
                next.push_back(t);
                continue;
            }
            for (int b = 0; b < 2 * n; ++b) {
                if (sup & (VarSet{1} << b)) next.push_back(t | (VarSet{1} << b));
            }
        }
        // prune non-minimal covers
        std::sort(next.begin(), next.end(), [](VarSet a, VarSet b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<VarSet> pruned;
        for (VarSet t : next) {
            bool dominated = false;
            for (VarSet p : pruned) {
                if ((p & t) == p) { dominated = true; break; }
            }
            if (!dominated) pruned.push_back(t);
        }
        covers = std::move(pruned);
    }

    // strata with both coordinates of one factor are empty in (P^1)^n;
    // minimality is preserved because removing variables never creates a
    // clash, so realizable minimal covers are already in the list.
    std::vector<BaseLocusStratum> out;
    for (VarSet t : covers) {
        bool clash = false;
        for (int i = 1; i <= n && !clash; ++i)
            clash = (t & var_x(n, i)) && (t & var_y(n, i));
        if (!clash) out.push_back(stratum_from_varset(n, t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, MHMonomial> multiplicity_along_L(const MonomialSystem& sys) {
    if (sys.monomials.empty()) throw error("multiplicity_along_L: empty system");
    mask_t tail = full_mask(sys.n) & ~mask_t{1};
    int best = -1;
    MHMonomial witness;
    for (const MHMonomial& m : sys.monomials) {
        int deg = popcount(m.ymask & tail);
        if (best < 0 || deg < best) {
            best = deg;
            witness = m;
        }
    }
    return {best, witness};
}

MonomialSystem restrict_to_stratum(const MonomialSystem& sys,
                                   const BaseLocusStratum& stratum) {
    MonomialSystem out;
    out.n = sys.n;
    for (const MHMonomial& m : sys.monomials) {
        if ((m.ymask & stratum.ymask) || (m.xmask & stratum.xmask)) continue;
        out.monomials.push_back(m);
    }
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

std::vector<BaseLocusStratum> zero_locus_on_stratum(int n, const MHMonomial& m,
                                                    const BaseLocusStratum& stratum) {
    check_monomial(n, m);
    if ((m.ymask & stratum.ymask) || (m.xmask & stratum.xmask))
        throw error("zero_locus_on_stratum: the monomial vanishes identically "
                    "on the stratum");
    // x_i with y_i pinned (and y_i with x_i pinned) are nonzero constants
    mask_t live_x = m.xmask & ~stratum.ymask;
    mask_t live_y = m.ymask & ~stratum.xmask;
    std::vector<BaseLocusStratum> out;
    for (int i : mask_indices(live_y)) {
        BaseLocusStratum st = stratum_from_varset(
            n, support(n, MHMonomial{stratum.xmask, mask_with(stratum.ymask, i)}));
        out.push_back(st);
    }
    for (int i : mask_indices(live_x)) {
        BaseLocusStratum st = stratum_from_varset(
            n, support(n, MHMonomial{mask_with(stratum.xmask, i), stratum.ymask}));
        out.push_back(st);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedOnE restricted_system_on_E(int n, int s) {
    if (n < 3) throw error("restricted_system_on_E: n must be at least 3");
    if (s < 1 || s > n - 1)
        throw error("restricted_system_on_E: s must be between 1 and n-1");
    RestrictedOnE sys;
    sys.n = n;
    sys.s = s;
    for (mask_t sub : subsets_of_size(n - 1, s)) {
        mask_t I = 0;
        for (int i : mask_indices(sub)) I = mask_with(I, i + 1);
        sys.monomials.push_back(I);
    }
    std::sort(sys.monomials.begin(), sys.monomials.end(), tuple_lex_less);
    return sys;
}

int fundamental_point_multiplicity(const RestrictedOnE& sys, int j) {
    if (j < 2 || j > sys.n)
        throw error("fundamental_point_multiplicity: point index must be in 2..n");
    if (sys.monomials.empty())
        throw error("fundamental_point_multiplicity: empty system");
    int best = -1;
    for (mask_t I : sys.monomials) {
        int local = popcount(I) - (mask_contains(I, j) ? 1 : 0);
        if (best < 0 || local < best) best = local;
    }
    return best;
}

}  // namespace cyclecone
