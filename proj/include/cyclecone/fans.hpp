#pragma once

// Simplicial fans for (P^1)^n and its blowups at one point, two points, two
// points on a common fiber, and along an invariant curve. Stellar subdivision,
// face enumeration, the class tables attaching cycle classes to invariant
// cones, the exceptional-divisor quotient fan, and the Cox-coordinate data of
// the curve blowup.

#include <string>
#include <utility>
#include <vector>

#include "cyclecone/cycles.hpp"
#include "cyclecone/numeric.hpp"

namespace cyclecone {

using IVec = std::vector<Int>;

struct Fan {
    int dim = 0;
    std::vector<IVec> rays;                    // primitive, pairwise distinct
    std::vector<std::vector<int>> max_cones;   // sorted ray-index sets of size dim
};

// The fan of (P^1)^n: rays e_1..e_n at indices 0..n-1, -e_1..-e_n at
// indices n..2n-1, one maximal cone per sign vector.
Fan fan_p1n(int n);

// Stellar subdivision: `cone` (a set of ray indices that spans a cone of the
// fan) is subdivided at new_ray, which must lie in its relative interior.
// Every maximal cone containing `cone` is replaced by the joins of new_ray
// with its facets not containing `cone`'s interior; the rest is unchanged.
Fan stellar_subdivide(const Fan& f, const std::vector<int>& cone, const IVec& new_ray);

// All codim-k faces of the maximal cones, deduplicated and sorted.
// codim = dim gives the zero cone (the empty index set).
std::vector<std::vector<int>> enumerate_cones(const Fan& f, int codim);

// Structural checks: primitive distinct rays, simplicial full-dimensional
// maximal cones, and pairwise intersection in common faces (certified by an
// exact separating functional). Throws on failure.
void validate_fan(const Fan& f);

// Whether p lies in the support (in some maximal cone) of the fan.
bool fan_contains_point(const Fan& f, const QVec& p);

enum class FanPreset { P1N, OnePoint, TwoPoints, TwoPointsFiber, CurveBlowup };

// Accepts p1n, x1, x2, x2fiber, xtilde.
FanPreset fan_preset_from_string(const std::string& s);
std::string fan_preset_name(FanPreset p);

struct BlowupFan {
    FanPreset preset = FanPreset::P1N;
    int n = 0;
    int s = 0;  // TwoPointsFiber: dimension of the shared fiber
    Fan fan;
    // One entry per blown-up point: the index of the ray inserted by its
    // subdivision and the sign pattern (+1/-1 per axis) of its maximal cone.
    struct Center {
        int ray_index = -1;
        std::vector<int> signs;
    };
    std::vector<Center> centers;
    int curve_ray_index = -1;  // CurveBlowup: the second subdivision ray
};

// P1N/OnePoint/TwoPoints/CurveBlowup ignore s; TwoPointsFiber needs
// 1 <= s <= n-1 (the two points span an s-dimensional fiber of the
// projection onto the first n-s factors). CurveBlowup needs n >= 3.
BlowupFan build_preset(FanPreset preset, int n, int s = 0);

// Cycle classes of the codim-k invariant cycles, one per codim-k cone.
// For the point blowups every k in 1..n-1 is supported; the curve blowup
// supports only k = n-1 (the only tabulated case is the ray/divisor table,
// in the basis H_1..H_n, E_1, E encoded as an (n, r=2) context).
struct ConeClass {
    std::vector<int> cone;
    CycleClass cls;
};
std::vector<ConeClass> invariant_cycle_classes(const BlowupFan& f, int k);

// Quotient of the curve-blowup fan by its second subdivision ray: the fan of
// the exceptional divisor P^1 x P^{n-2}. Recomputes every ray image through
// the explicit quotient matrix and checks them against the expected list;
// ray_images pairs each source ray with its image (the quotient ray itself
// maps to zero and is checked, not listed).
struct QuotientResult {
    Fan fan;                                    // dimension n-1
    std::vector<std::pair<IVec, IVec>> ray_images;
    std::vector<IVec> matrix;                   // (n-1) x n quotient matrix rows
};
QuotientResult quotient_fan_exceptional(int n);

// The expected quotient fan, built directly: rays eps_1, -eps_1,
// eps_2..eps_{n-1}, -(eps_2+..+eps_{n-1}) with product maximal cones.
Fan fan_p1_x_projective(int n);

// Two fans are the same up to ray reindexing.
bool fans_equal(const Fan& a, const Fan& b);

// ---------------------------------------------------------------------------
// Cox data of the curve blowup
// ---------------------------------------------------------------------------

struct CoxVariable {
    std::string name;      // T1..Tn, S1..Sn, U1, U2
    int ray_index = -1;    // into build_preset(CurveBlowup, n).fan.rays
    CycleClass divisor_class;
};
std::vector<CoxVariable> cox_grading(int n);

// A section monomial prod_{i in I} S_i * prod_{j in {2..n}\I} T_j * (U1 U2)^u
// with I a subset of {2..n}; u = |I| - s for the systems in scope.
struct CoxMonomial {
    mask_t smask = 0;
    int u = 0;
    bool operator==(const CoxMonomial& o) const { return smask == o.smask && u == o.u; }
    bool operator<(const CoxMonomial& o) const {
        return smask != o.smask ? tuple_lex_less(smask, o.smask) : u < o.u;
    }
};

std::vector<CoxMonomial> cox_sections_Ws(int n, int s);
std::vector<CoxMonomial> cox_restrict_U2(const std::vector<CoxMonomial>& sections);
CycleClass cox_monomial_class(int n, const CoxMonomial& m);
std::string cox_monomial_str(int n, const CoxMonomial& m);

}  // namespace cyclecone
