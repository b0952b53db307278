#pragma once

// Exact rational polyhedral kernel at desk scale: double description for
// H -> V conversion, phase-1 simplex (Bland's rule) for membership with
// certificates, and the derived cone operations. Everything is over Rat;
// rays are normalized to primitive integer vectors.

#include <optional>
#include <vector>

#include "cyclecone/numeric.hpp"

namespace cyclecone {

struct nonpointed_error : error {
    QVec line;
    nonpointed_error(const std::string& what, QVec line_)
        : error(what), line(std::move(line_)) {}
};

struct Limits {
    int dim_limit = 12;
};

// Reads CYCLECONE_DIM_LIMIT once; default 12.
const Limits& default_limits();

struct RationalCone {
    int ambient_dim = 0;
    std::vector<QVec> generators;               // V-description (primitive rays)
    std::optional<std::vector<QVec>> facets;    // H-description: rows f, f.x >= 0
};

RationalCone cone_from_generators(int dim, std::vector<QVec> gens);
RationalCone cone_from_facets(int dim, std::vector<QVec> facets);

// Extremal rays of { x : f.x >= 0 for every row f }. Requires the cone to be
// pointed (rank of the rows equals dim); otherwise throws nonpointed_error
// carrying a line. Output rays are primitive and lexicographically sorted.
std::vector<QVec> dd_extremal_rays(const std::vector<QVec>& inequality_rows, int dim);

// Polar dual { y : y.g >= 0 for all g in c }. The generators of c become the
// facet rows of the dual; the dual's extremal rays are computed by double
// description. Requires c full-dimensional (else the dual is not pointed).
RationalCone dualize(const RationalCone& c, const Limits& limits = default_limits());

struct ContainsResult {
    bool inside = false;
    // inside: coefficients over the cone's generators reproducing v exactly.
    QVec combination;
    // outside: separator s with s.g >= 0 for every generator and s.v < 0.
    QVec separator;
};

ContainsResult contains(const RationalCone& c, const QVec& v,
                        const Limits& limits = default_limits());

// Minimal generating set of a pointed cone, primitive and lex-sorted.
std::vector<QVec> extremal_rays(const RationalCone& c,
                                const Limits& limits = default_limits());

// Exact LP feasibility for "exists lambda >= 0 with sum lambda_i g_i = target".
// Self-certifying: the returned combination or Farkas separator is verified
// exactly before being handed back.
struct FarkasResult {
    bool feasible = false;
    QVec combination;  // over gens when feasible
    QVec separator;    // s.g_i >= 0 for all i, s.target < 0 when infeasible
};
FarkasResult solve_nonneg_combination(const std::vector<QVec>& gens, const QVec& target);

// General feasibility over free variables, rows "coeffs . y REL rhs".
enum class Rel { Eq, Ge, Le };
struct LinearRow {
    QVec coeffs;
    Rel rel = Rel::Ge;
    Rat rhs = 0;
};
bool linear_feasible(const std::vector<LinearRow>& rows, int nvars,
                     QVec* witness = nullptr);

// Rank of a row matrix over Q; if kernel != 0 and kernel_out is given, one
// nonzero kernel vector is stored there.
int matrix_rank(const std::vector<QVec>& rows, int dim, QVec* kernel_out = nullptr);

}  // namespace cyclecone
