#include "cyclecone/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>

namespace cyclecone {

namespace {

// ---------------------------------------------------------------------------
// Gaussian elimination helpers
// ---------------------------------------------------------------------------

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<QVec>& m, int dim) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < dim && row < static_cast<int>(m.size()); ++col) {
        int sel = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i) {
            if (m[i][col] != 0) { sel = i; break; }
        }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Rat p = m[row][col];
        for (int c = 0; c < dim; ++c) m[row][c] /= p;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int c = 0; c < dim; ++c) m[i][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Indices of a maximal linearly independent subset of rows, in input order.
// by_lead[c] holds an eliminated row whose first nonzero entry is column c.
std::vector<int> independent_rows(const std::vector<QVec>& rows, int dim) {
    std::vector<int> picked;
    std::vector<std::optional<QVec>> by_lead(dim);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        QVec v = rows[i];
        for (int c = 0; c < dim; ++c) {
            if (v[c] == 0) continue;
            if (!by_lead[c]) {
                picked.push_back(i);
                by_lead[c] = std::move(v);
                break;
            }
            Rat f = v[c] / (*by_lead[c])[c];
            for (int l = c; l < dim; ++l) v[l] -= f * (*by_lead[c])[l];
        }
    }
    return picked;
}

// Inverse of a square matrix given by rows; throws on singular input.
std::vector<QVec> invert(const std::vector<QVec>& rows) {
    int d = static_cast<int>(rows.size());
    std::vector<QVec> aug(d, QVec(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = rows[i][j];
        aug[i][d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int sel = -1;
        for (int i = col; i < d; ++i) {
            if (aug[i][col] != 0) { sel = i; break; }
        }
        if (sel < 0) throw error("polyhedral: singular matrix in inversion");
        std::swap(aug[col], aug[sel]);
        Rat p = aug[col][col];
        for (int c = 0; c < 2 * d; ++c) aug[col][c] /= p;
        for (int i = 0; i < d; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (int c = 0; c < 2 * d; ++c) aug[i][c] -= f * aug[col][c];
        }
    }
    std::vector<QVec> inv(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
    return inv;
}

// ---------------------------------------------------------------------------
// Phase-1 simplex with Bland's rule: A x = b, x >= 0
// ---------------------------------------------------------------------------

struct Phase1Result {
    bool feasible = false;
    QVec x;  // size nx when feasible
    QVec y;  // Farkas dual when infeasible: y.A_j <= 0 per column, y.b > 0
};

Phase1Result phase1(const std::vector<QVec>& cols, const QVec& b) {
    int nx = static_cast<int>(cols.size());
    int m = static_cast<int>(b.size());
    for (const QVec& c : cols) {
        if (static_cast<int>(c.size()) != m)
            throw error("polyhedral: column length mismatch in LP");
    }
    // tableau: nx structural columns, m artificial columns, rhs.
    int ncols = nx + m + 1;
    std::vector<QVec> t(m, QVec(ncols, Rat(0)));
    std::vector<bool> flipped(m, false);
    for (int i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        flipped[i] = neg;
        for (int j = 0; j < nx; ++j) t[i][j] = neg ? -cols[j][i] : cols[j][i];
        t[i][nx + i] = 1;
        t[i][ncols - 1] = neg ? -b[i] : b[i];
    }
    // objective: minimize sum of artificials; z row holds reduced costs,
    // z[ncols-1] = -objective.
    QVec z(ncols, Rat(0));
    for (int j = 0; j < ncols; ++j) {
        if (j >= nx && j < nx + m) continue;  // c_j = 1 cancels the column sum
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += t[i][j];
        z[j] = -s;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = nx + i;
    std::vector<bool> dead(ncols, false);  // artificials that left the basis

    while (true) {
        int enter = -1;
        for (int j = 0; j < nx + m; ++j) {  // Bland: smallest eligible index
            if (dead[j]) continue;
            if (z[j] < 0) { enter = j; break; }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][ncols - 1] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw error("polyhedral: internal LP error (unbounded phase 1)");
        // pivot on (leave, enter)
        if (basis[leave] >= nx) dead[basis[leave]] = true;
        basis[leave] = enter;
        Rat p = t[leave][enter];
        for (int c = 0; c < ncols; ++c) t[leave][c] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int c = 0; c < ncols; ++c) t[i][c] -= f * t[leave][c];
        }
        if (z[enter] != 0) {
            Rat f = z[enter];
            for (int c = 0; c < ncols; ++c) z[c] -= f * t[leave][c];
        }
    }

    Phase1Result res;
    Rat objective = -z[ncols - 1];
    if (objective == 0) {
        res.feasible = true;
        res.x.assign(nx, Rat(0));
        for (int i = 0; i < m; ++i) {
            if (basis[i] < nx) res.x[basis[i]] = t[i][ncols - 1];
        }
    } else {
        // dual values from artificial reduced costs: z_{a_i} = 1 - y_i.
        res.y.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            Rat yi = Rat(1) - z[nx + i];
            res.y[i] = flipped[i] ? -yi : yi;
        }
    }
    return res;
}

QVec scan_env_limit_error() {  // never returns; keeps throw out of the header
    throw resource_error("CYCLECONE_DIM_LIMIT must be a positive integer");
}

}  // namespace

const Limits& default_limits() {
    static const Limits limits = [] {
        Limits l;
        if (const char* env = std::getenv("CYCLECONE_DIM_LIMIT")) {
            std::string s(env);
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                scan_env_limit_error();
            long v = std::strtol(s.c_str(), nullptr, 10);
            if (v < 1) scan_env_limit_error();
            l.dim_limit = static_cast<int>(v);
        }
        return l;
    }();
    return limits;
}

int matrix_rank(const std::vector<QVec>& rows, int dim, QVec* kernel_out) {
    std::vector<QVec> m = rows;
    std::vector<int> pivots = rref(m, dim);
    if (kernel_out && static_cast<int>(pivots.size()) < dim) {
        // one kernel vector from the first free column
        std::vector<bool> is_pivot(dim, false);
        for (int p : pivots) is_pivot[p] = true;
        int free_col = 0;
        while (free_col < dim && is_pivot[free_col]) ++free_col;
        QVec k(dim, Rat(0));
        k[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -m[r][free_col];
        *kernel_out = std::move(k);
    }
    return static_cast<int>(pivots.size());
}

RationalCone cone_from_generators(int dim, std::vector<QVec> gens) {
    if (dim < 1) throw error("cone: ambient dimension must be positive");
    for (const QVec& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw error("cone: generator length does not match ambient dimension");
        if (is_zero_vec(g)) throw error("cone: the zero vector is not a ray");
    }
    RationalCone c;
    c.ambient_dim = dim;
    c.generators = std::move(gens);
    return c;
}

RationalCone cone_from_facets(int dim, std::vector<QVec> facets) {
    if (dim < 1) throw error("cone: ambient dimension must be positive");
    for (const QVec& f : facets) {
        if (static_cast<int>(f.size()) != dim)
            throw error("cone: facet length does not match ambient dimension");
    }
    RationalCone c;
    c.ambient_dim = dim;
    c.facets = std::move(facets);
    return c;
}

FarkasResult solve_nonneg_combination(const std::vector<QVec>& gens, const QVec& target) {
    Phase1Result p = phase1(gens, target);
    FarkasResult res;
    if (p.feasible) {
        res.feasible = true;
        res.combination = std::move(p.x);
        // exact self-check: the combination reproduces the target
        QVec acc(target.size(), Rat(0));
        for (size_t j = 0; j < gens.size(); ++j) {
            if (res.combination[j] < 0)
                throw error("polyhedral: internal LP error (negative multiplier)");
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] += res.combination[j] * gens[j][i];
        }
        if (acc != target)
            throw error("polyhedral: internal LP error (combination check failed)");
    } else {
        // separator s: s.g >= 0 for all generators, s.target < 0
        QVec s(p.y.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = -p.y[i];
        for (const QVec& g : gens) {
            if (dot(s, g) < 0)
                throw error("polyhedral: internal LP error (separator check failed)");
        }
        if (dot(s, target) >= 0)
            throw error("polyhedral: internal LP error (separator does not separate)");
        res.separator = primitive_qvec(s);
    }
    return res;
}

bool linear_feasible(const std::vector<LinearRow>& rows, int nvars, QVec* witness) {
    // free y via y = u - w with u,w >= 0; one slack per inequality.
    int nslack = 0;
    for (const LinearRow& r : rows) {
        if (static_cast<int>(r.coeffs.size()) != nvars)
            throw error("polyhedral: row length mismatch in linear_feasible");
        if (r.rel != Rel::Eq) ++nslack;
    }
    int m = static_cast<int>(rows.size());
    int nx = 2 * nvars + nslack;
    std::vector<QVec> cols(nx, QVec(m, Rat(0)));
    QVec b(m);
    int slack = 0;
    for (int i = 0; i < m; ++i) {
        Rat sign = rows[i].rel == Rel::Le ? Rat(-1) : Rat(1);  // normalize Le -> Ge
        for (int v = 0; v < nvars; ++v) {
            cols[v][i] = sign * rows[i].coeffs[v];
            cols[nvars + v][i] = -sign * rows[i].coeffs[v];
        }
        b[i] = sign * rows[i].rhs;
        if (rows[i].rel != Rel::Eq) cols[2 * nvars + slack++][i] = -1;
    }
    Phase1Result p = phase1(cols, b);
    if (p.feasible && witness) {
        witness->assign(nvars, Rat(0));
        for (int v = 0; v < nvars; ++v) (*witness)[v] = p.x[v] - p.x[nvars + v];
        // exact self-check against the original rows
        for (const LinearRow& r : rows) {
            Rat lhs = dot(r.coeffs, *witness);
            bool ok = r.rel == Rel::Eq ? lhs == r.rhs
                      : r.rel == Rel::Ge ? lhs >= r.rhs
                                         : lhs <= r.rhs;
            if (!ok) throw error("polyhedral: internal LP error (witness check failed)");
        }
    }
    return p.feasible;
}

std::vector<QVec> dd_extremal_rays(const std::vector<QVec>& inequality_rows, int dim) {
    for (const QVec& r : inequality_rows) {
        if (static_cast<int>(r.size()) != dim)
            throw error("polyhedral: inequality length does not match dimension");
    }
    QVec kernel;
    if (matrix_rank(inequality_rows, dim, &kernel) < dim) {
        throw nonpointed_error("cone is not pointed: contains the line spanned by (" +
                                   [&] {
                                       std::string s;
                                       for (size_t i = 0; i < kernel.size(); ++i) {
                                           if (i) s += ", ";
                                           s += rat_str(kernel[i]);
                                       }
                                       return s;
                                   }() + ")",
                               kernel);
    }

    // initial simplicial cone from the first dim independent inequalities;
    // its rays are the columns of the inverse matrix.
    std::vector<int> base = independent_rows(inequality_rows, dim);
    std::vector<QVec> bm;
    for (int i : base) bm.push_back(inequality_rows[i]);
    std::vector<QVec> binv = invert(bm);
    std::vector<QVec> rays;
    for (int j = 0; j < dim; ++j) {
        QVec col(dim);
        for (int i = 0; i < dim; ++i) col[i] = binv[i][j];
        rays.push_back(primitive_qvec(col));
    }

    std::vector<bool> in_base(inequality_rows.size(), false);
    for (int i : base) in_base[i] = true;
    std::vector<int> processed = base;  // indices of rows already enforced

    auto tight_blocks = [&](const QVec& ray) {
        std::vector<std::uint64_t> blk((processed.size() + 63) / 64, 0);
        for (size_t t = 0; t < processed.size(); ++t) {
            if (dot(inequality_rows[processed[t]], ray) == 0)
                blk[t / 64] |= (std::uint64_t{1} << (t % 64));
        }
        return blk;
    };

    for (size_t next = 0; next < inequality_rows.size(); ++next) {
        if (in_base[next]) continue;
        const QVec& a = inequality_rows[next];
        std::vector<Rat> val(rays.size());
        bool any_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            processed.push_back(static_cast<int>(next));
            continue;
        }
        std::vector<std::vector<std::uint64_t>> tight(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) tight[i] = tight_blocks(rays[i]);

        std::vector<QVec> kept;
        for (size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) kept.push_back(rays[i]);
        // adjacency: p (positive side) and q (negative side) are adjacent iff
        // no third ray is tight on every row where both are tight.
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                bool adjacent = true;
                for (size_t w = 0; w < rays.size() && adjacent; ++w) {
                    if (w == p || w == q) continue;
                    bool covers = true;
                    for (size_t blk = 0; blk < tight[p].size(); ++blk) {
                        std::uint64_t common = tight[p][blk] & tight[q][blk];
                        if ((common & ~tight[w][blk]) != 0) { covers = false; break; }
                    }
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                QVec fresh(dim);
                for (int c = 0; c < dim; ++c)
                    fresh[c] = val[p] * rays[q][c] - val[q] * rays[p][c];
                kept.push_back(primitive_qvec(fresh));
            }
        }
        std::sort(kept.begin(), kept.end(), lex_less);
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        rays = std::move(kept);
        processed.push_back(static_cast<int>(next));
    }

    for (const QVec& ray : rays) {
        for (const QVec& row : inequality_rows) {
            if (dot(row, ray) < 0)
                throw error("polyhedral: internal DD error (ray violates an inequality)");
        }
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

std::vector<QVec> extremal_rays(const RationalCone& c, const Limits& limits) {
    if (c.ambient_dim > limits.dim_limit)
        throw resource_error("ambient dimension " + std::to_string(c.ambient_dim) +
                             " exceeds the configured limit " +
                             std::to_string(limits.dim_limit));
    if (c.generators.empty()) {
        if (!c.facets) return {};
        return dd_extremal_rays(*c.facets, c.ambient_dim);
    }
    // dedup parallel generators via primitive normal form
    std::vector<QVec> gens;
    for (const QVec& g : c.generators) {
        if (is_zero_vec(g)) continue;
        gens.push_back(primitive_qvec(g));
    }
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return {};

    // pointedness: a nontrivial nonnegative circuit sum(nu_i g_i) = 0 with
    // sum(nu) = 1 exists iff the cone contains a line.
    {
        std::vector<QVec> cols;
        for (const QVec& g : gens) {
            QVec col = g;
            col.push_back(Rat(1));  // the sum(nu) = 1 row
            cols.push_back(std::move(col));
        }
        QVec rhs(c.ambient_dim, Rat(0));
        rhs.push_back(Rat(1));
        Phase1Result p = phase1(cols, rhs);
        if (p.feasible) {
            for (size_t i = 0; i < gens.size(); ++i) {
                if (p.x[i] > 0)
                    throw nonpointed_error("cone is not pointed: the generators admit a "
                                           "nontrivial vanishing nonnegative combination",
                                           gens[i]);
            }
        }
    }

    std::vector<QVec> rays;
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<QVec> others;
        for (size_t l = 0; l < gens.size(); ++l)
            if (l != i) others.push_back(gens[l]);
        if (others.empty() || !solve_nonneg_combination(others, gens[i]).feasible)
            rays.push_back(gens[i]);
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    return rays;
}

RationalCone dualize(const RationalCone& c, const Limits& limits) {
    if (c.ambient_dim > limits.dim_limit)
        throw resource_error("ambient dimension " + std::to_string(c.ambient_dim) +
                             " exceeds the configured limit " +
                             std::to_string(limits.dim_limit));
    std::vector<QVec> gens = c.generators;
    if (gens.empty() && c.facets) gens = dd_extremal_rays(*c.facets, c.ambient_dim);
    std::vector<QVec> prim;
    for (const QVec& g : gens) {
        if (is_zero_vec(g)) continue;
        prim.push_back(primitive_qvec(g));
    }
    std::sort(prim.begin(), prim.end(), lex_less);
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

    RationalCone dual;
    dual.ambient_dim = c.ambient_dim;
    dual.generators = dd_extremal_rays(prim, c.ambient_dim);
    dual.facets = std::move(prim);
    return dual;
}

ContainsResult contains(const RationalCone& c, const QVec& v, const Limits& limits) {
    if (static_cast<int>(v.size()) != c.ambient_dim)
        throw error("contains: vector length does not match ambient dimension");
    if (c.ambient_dim > limits.dim_limit)
        throw resource_error("ambient dimension " + std::to_string(c.ambient_dim) +
                             " exceeds the configured limit " +
                             std::to_string(limits.dim_limit));
    ContainsResult res;
    if (c.facets) {
        for (const QVec& f : *c.facets) {
            if (dot(f, v) < 0) {
                res.inside = false;
                res.separator = primitive_qvec(f);
                return res;
            }
        }
        std::vector<QVec> gens = c.generators;
        if (gens.empty()) gens = dd_extremal_rays(*c.facets, c.ambient_dim);
        FarkasResult f = solve_nonneg_combination(gens, v);
        if (!f.feasible)
            throw error("polyhedral: internal error (H/V descriptions disagree)");
        res.inside = true;
        res.combination = std::move(f.combination);
        return res;
    }
    FarkasResult f = solve_nonneg_combination(c.generators, v);
    res.inside = f.feasible;
    if (f.feasible)
        res.combination = std::move(f.combination);
    else
        res.separator = std::move(f.separator);
    return res;
}

}  // namespace cyclecone
