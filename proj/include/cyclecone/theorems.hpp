#pragma once

// The closed-form identities and bound tables: the Picard basis change phi
// between the blowup of P^n at n+r-1 points and X_r^n, the n!-r boundary
// degree, the fiber-divisor product identity, the product lift of curve
// classes witnessing non-generation, the X_4^4 divisor-pair identity, the
// fiber-generation status table, and the Mori-dream lookup.

#include <string>
#include <vector>

#include "cyclecone/chow.hpp"
#include "cyclecone/cycles.hpp"
#include "cyclecone/fans.hpp"  // IVec

namespace cyclecone {

// Divisor basis change: source basis (script H, script E_1..E_{n+r-1}) on the
// blowup of P^n, target basis (H_1..H_n, E_1..E_r) on X_r^n. Columns are the
// images of the source basis vectors; the matrix is unimodular.
struct PicardBasisChange {
    int n = 0;
    int r = 0;
    std::vector<IVec> matrix;  // (n+r) rows x (n+r) cols
};

PicardBasisChange phi_map(int n, int r);
Int phi_det(const PicardBasisChange& m);

// coeffs over (script H, script E_1..E_{n+r-1}) -> divisor class on X_r^n.
CycleClass phi_forward(const PicardBasisChange& m, const QVec& coeffs);
// divisor class on X_r^n -> coefficients over the source basis.
QVec phi_backward(const PicardBasisChange& m, const CycleClass& divisor);

// deg((H_1+..+H_n - E_1-..-E_r)^n) = n! - r, the boundary degree whose sign
// decides fiber-generation for curves.
Int factorial_boundary(int n, int r);

// W_1 * ... * W_k * [Y] on the one-point blowup, where W_s = sum_{i>=2} H_i
// - s E_1. Equals k! (sum_{I contains 1} a_I - b_1) for every Y in N_k; beta
// is the negated bracket, so the product is -k! beta.
struct FiberDivisorIdentity {
    Rat product_degree;
    Rat closed_form;
    Rat beta;
};
FiberDivisorIdentity fiber_divisor_identity(int n, int k, const CycleClass& y);

// Lift of a curve class C = sum a_I H_I - sum b_j E_{j,1} on X_r^{n-k+1} to
// the k-cycle [(P^1)^{k-1} x C] on X_r^n: the H-support embeds into the
// subsets of {1..n-k+1}, the b_j are unchanged, and the coefficient sums are
// preserved — so a violated sum inequality stays violated after the lift.
struct CurveLift {
    CycleClass cls;
    Rat sum_a;
    Rat sum_b;
    bool violates_sum_inequality = false;
};
CurveLift curve_lift(int n, int k, const CycleClass& curve);

// The two X_4^4 divisors with multiplicity pattern (2,2,1,1) and (1,1,2,2).
CycleClass d1_class();
CycleClass d2_class();
// [D_1 cap D_2] = 2 sum_{|I|=2} H_I - 2 sum_j E_{j,2} in N_2(X_4^4).
CycleClass d1d2_intersection_class();

// deg(D_1 * D_2 * Y) for Y in N_2(X_4^4); equals 2 (sum a_I - sum b_j).
struct DivisorPairIdentity {
    Rat degree;
    Rat closed_form;
    Rat sum_a;
    Rat sum_b;
};
DivisorPairIdentity d1d2_identity(const CycleClass& y);

// Fiber-generation status of Eff_k(X_r^n) per the known bounds table.
struct BoundReport {
    int n = 0, k = 0, r = 0;
    std::string status;  // fiber-generated | not-fiber-generated | open
    std::string rule;    // curve-count-bound | divisor-count-bound |
                         // small-point-bound | special-4-2-4 |
                         // factorial-excess | open
};
BoundReport status(int n, int k, int r);

bool is_mori_dream(int n, int r);

}  // namespace cyclecone
