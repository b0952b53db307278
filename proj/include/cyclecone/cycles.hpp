#pragma once

// Numerical cycle groups N_k(X) for X the blowup of (P^1)^n at r very general
// points, in the basis
//
//   { H_I : I subset {1..n}, |I| = n-k }  u  { E_{j,k} : 1 <= j <= r },
//
// where H_I is the class of a k-dimensional fiber of the projection p_I and
// E_{j,k} = (-1)^(n-k+1) e_j^(n-k) is the k-dimensional linear subspace class
// inside the j-th exceptional divisor. The intersection pairing
// N_k x N_{n-k} -> Z is diag(I, -I) in complementary bases.
//
// The cone of fibers CF_k is generated by { H_I - E_{j,k} } u { E_{j,k} }
// (for r = 0 it degenerates to the cone spanned by the H_I). Membership,
// explicit decompositions, and the closed-form dual rays live here.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclecone/chow.hpp"
#include "cyclecone/context.hpp"

namespace cyclecone {

class CycleClass {
  public:
    CycleClass(RingContext ctx, int k);

    const RingContext& context() const { return ctx_; }
    int k() const { return k_; }

    // Coefficient maps; keys are index-set masks (|I| = n-k) and exceptional
    // indices j. Zero coefficients are never stored.
    const std::map<mask_t, Rat>& h_coeffs() const { return h_; }
    const std::map<int, Rat>& e_coeffs() const { return e_; }

    void add_h(mask_t I, const Rat& c);
    void add_e(int j, const Rat& c);
    Rat h_coeff(mask_t I) const;
    Rat e_coeff(int j) const;
    // b_j in the sign convention "alpha = sum a_I H_I - sum b_j E_{j,k}".
    Rat b(int j) const { return -e_coeff(j); }

    bool is_zero() const { return h_.empty() && e_.empty(); }

    CycleClass operator+(const CycleClass& o) const;
    CycleClass operator-(const CycleClass& o) const;
    CycleClass operator*(const Rat& c) const;
    CycleClass operator-() const { return *this * Rat(-1); }
    bool operator==(const CycleClass& o) const;
    bool operator!=(const CycleClass& o) const { return !(*this == o); }
    bool operator<(const CycleClass& o) const;  // canonical order for sets/maps

    std::string str() const;

  private:
    RingContext ctx_;
    int k_;
    std::map<mask_t, Rat> h_;
    std::map<int, Rat> e_;
};

CycleClass cycle_h(RingContext ctx, int k, mask_t I);
CycleClass cycle_e(RingContext ctx, int k, int j);

// Basis of N_k: H_I in ascending-tuple order, then E_{1,k}..E_{r,k}. The
// dimension is binom(n,k) + r.
std::vector<CycleClass> nk_basis(RingContext ctx, int k);

// Intersection pairing N_k x N_{n-k} -> Q.
Rat pair_classes(const CycleClass& a, const CycleClass& b);

// Basis-correspondence maps to and from the Chow ring.
ChowElement to_chow(const CycleClass& a);
CycleClass from_chow(const ChowElement& x, int k);

// Coordinate vectors for the polyhedral kernel: H-part in ascending-tuple
// order followed by signed e-coefficients. Length binom(n,k) + r.
QVec cycle_to_vector(const CycleClass& a);
CycleClass cycle_from_vector(RingContext ctx, int k, const QVec& v);

struct FiberCone {
    RingContext ctx;
    int k = 0;
    std::vector<CycleClass> generators;
};

FiberCone fiber_cone(RingContext ctx, int k);

// A non-negative combination of fiber-cone generators (or of the H_I basis
// classes when r = 0). Terms are merged per generator and canonically ordered.
struct Decomposition {
    std::vector<std::pair<CycleClass, Rat>> terms;
    CycleClass reconstruct(RingContext ctx, int k) const;
};

struct Membership {
    bool inside = false;
    Decomposition decomposition;            // set when inside
    std::optional<CycleClass> separator;    // dual ray with negative pairing otherwise
    Rat separator_pairing = 0;
};

Membership cf_membership(const FiberCone& cone, const CycleClass& alpha);

// Vector-level decomposition: v = (a_1..a_N, -b_1..-b_r) with a, b >= 0 and
// sum(a) >= sum(b) is written as a non-negative combination of the difference
// vectors e_i - e_{N+j} and the axes e_{N+j}. With r = 0 the combination is
// over the axes e_i themselves.
struct VectorDecomposition {
    enum class Gen { Difference, Exceptional, Axis };
    struct Term {
        Gen gen;
        int i = 0;  // 1-based position in the a-block (Difference/Axis)
        int j = 0;  // 1-based position in the b-block (Difference/Exceptional)
        Rat coeff;
    };
    std::vector<Term> terms;
    QVec reconstruct(int N, int r) const;
};

VectorDecomposition decompose_vector(const QVec& v, int N, int r);

// Closed-form extremal rays of the dual cone of CF_k inside N_{n-k}:
// { H_I : |I| = k } u { sum_{|I|=k} H_I - sum_{j in S} E_{j,n-k} : S != {} }.
std::vector<CycleClass> dual_rays(const FiberCone& cone);

struct FgReport {
    struct Row {
        CycleClass cls;
        Rat sum_a;
        Rat sum_b;
        bool pass = false;
    };
    std::vector<Row> rows;
    bool all_pass = true;
};

// Fiber-generation test: every class must satisfy sum a_I >= sum b_j.
// Requires a_I >= 0 and b_j >= 0 on every input class.
FgReport fg_criterion(const std::vector<CycleClass>& classes);

}  // namespace cyclecone
