#include "cyclecone/fans.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyclecone/polyhedral.hpp"

namespace cyclecone {

namespace {

QVec to_qvec(const IVec& v) {
    QVec q;
    q.reserve(v.size());
    for (const Int& x : v) q.push_back(Rat(x));
    return q;
}

std::string cone_str(const std::vector<int>& c) {
    std::string s = "{";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "}";
}

// Solve sum over cone rays of lambda_i * ray_i = target exactly; returns the
// lambdas or nullopt when inconsistent. The rays must be independent.
std::optional<QVec> solve_in_cone_basis(const std::vector<IVec>& rays, const IVec& target) {
    int dim = static_cast<int>(target.size());
    int m = static_cast<int>(rays.size());
    // augmented dim x (m+1) system, Gaussian elimination
    std::vector<QVec> a(dim, QVec(m + 1, Rat(0)));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = Rat(rays[j][i]);
        a[i][m] = Rat(target[i]);
    }
    std::vector<int> pivot_of_col(m, -1);
    int row = 0;
    for (int col = 0; col < m && row < dim; ++col) {
        int sel = -1;
        for (int i = row; i < dim; ++i) {
            if (a[i][col] != 0) { sel = i; break; }
        }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        Rat p = a[row][col];
        for (int c = col; c <= m; ++c) a[row][c] /= p;
        for (int i = 0; i < dim; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int c = col; c <= m; ++c) a[i][c] -= f * a[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (int i = row; i < dim; ++i) {
        if (a[i][m] != 0) return std::nullopt;  // inconsistent
    }
    QVec lambda(m, Rat(0));
    for (int col = 0; col < m; ++col) {
        if (pivot_of_col[col] >= 0) lambda[col] = a[pivot_of_col[col]][m];
    }
    return lambda;
}

std::vector<QVec> cone_ray_qvecs(const Fan& f, const std::vector<int>& cone) {
    std::vector<QVec> out;
    for (int i : cone) out.push_back(to_qvec(f.rays[i]));
    return out;
}

}  // namespace

Fan fan_p1n(int n) {
    if (n < 1) throw error("fan_p1n: n must be at least 1");
    if (n > 20) throw resource_error("fan_p1n: n too large for cone enumeration");
    Fan f;
    f.dim = n;
    for (int i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = 1;
        f.rays.push_back(e);
    }
    for (int i = 0; i < n; ++i) {
        IVec e(n, Int(0));
        e[i] = -1;
        f.rays.push_back(e);
    }
    for (std::uint32_t sign = 0; sign < (std::uint32_t{1} << n); ++sign) {
        std::vector<int> cone;
        for (int i = 0; i < n; ++i)
            cone.push_back((sign >> i) & 1 ? n + i : i);
        std::sort(cone.begin(), cone.end());
        f.max_cones.push_back(std::move(cone));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

Fan stellar_subdivide(const Fan& f, const std::vector<int>& cone, const IVec& new_ray) {
    if (cone.empty()) throw error("stellar subdivision: empty cone");
    std::vector<int> tau = cone;
    std::sort(tau.begin(), tau.end());
    if (std::adjacent_find(tau.begin(), tau.end()) != tau.end())
        throw error("stellar subdivision: repeated ray index");
    for (int i : tau) {
        if (i < 0 || i >= static_cast<int>(f.rays.size()))
            throw error("stellar subdivision: ray index " + std::to_string(i) +
                        " out of range");
    }
    if (static_cast<int>(new_ray.size()) != f.dim)
        throw error("stellar subdivision: ray length does not match fan dimension");

    bool is_face = false;
    for (const std::vector<int>& mc : f.max_cones) {
        if (std::includes(mc.begin(), mc.end(), tau.begin(), tau.end())) {
            is_face = true;
            break;
        }
    }
    if (!is_face) throw error("stellar subdivision: " + cone_str(tau) +
                              " is not a cone of the fan");

    std::vector<IVec> tau_rays;
    for (int i : tau) tau_rays.push_back(f.rays[i]);
    std::optional<QVec> lambda = solve_in_cone_basis(tau_rays, new_ray);
    bool interior = lambda.has_value();
    if (interior) {
        for (const Rat& l : *lambda)
            if (l <= 0) { interior = false; break; }
    }
    if (!interior)
        throw error("stellar subdivision: the new ray is not in the relative "
                    "interior of " + cone_str(tau));

    std::vector<Int> prim = primitive_vector(to_qvec(new_ray));
    for (const IVec& r : f.rays) {
        if (r == prim)
            throw error("stellar subdivision: the new ray already belongs to the fan");
    }

    Fan out;
    out.dim = f.dim;
    out.rays = f.rays;
    out.rays.push_back(prim);
    int fresh = static_cast<int>(out.rays.size()) - 1;
    for (const std::vector<int>& mc : f.max_cones) {
        if (!std::includes(mc.begin(), mc.end(), tau.begin(), tau.end())) {
            out.max_cones.push_back(mc);
            continue;
        }
        for (int drop : tau) {
            std::vector<int> nc;
            for (int i : mc)
                if (i != drop) nc.push_back(i);
            nc.push_back(fresh);
            std::sort(nc.begin(), nc.end());
            out.max_cones.push_back(std::move(nc));
        }
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    return out;
}

std::vector<std::vector<int>> enumerate_cones(const Fan& f, int codim) {
    if (codim < 0 || codim > f.dim)
        throw error("enumerate_cones: codimension must be between 0 and " +
                    std::to_string(f.dim));
    int size = f.dim - codim;
    std::set<std::vector<int>> faces;
    for (const std::vector<int>& mc : f.max_cones) {
        int m = static_cast<int>(mc.size());
        for (mask_t sub : subsets_of_size(m, size)) {
            std::vector<int> face;
            for (int t = 0; t < m; ++t)
                if (mask_contains(sub, t + 1)) face.push_back(mc[t]);
            faces.insert(std::move(face));
        }
    }
    return {faces.begin(), faces.end()};
}

void validate_fan(const Fan& f) {
    if (f.dim < 1) throw error("fan: dimension must be positive");
    std::set<IVec> seen;
    for (const IVec& r : f.rays) {
        if (static_cast<int>(r.size()) != f.dim)
            throw error("fan: ray length does not match dimension");
        QVec q = to_qvec(r);
        if (is_zero_vec(q)) throw error("fan: zero ray");
        if (primitive_vector(q) != r) throw error("fan: ray is not primitive");
        if (!seen.insert(r).second) throw error("fan: duplicate ray");
    }
    std::vector<bool> used(f.rays.size(), false);
    for (const std::vector<int>& mc : f.max_cones) {
        if (static_cast<int>(mc.size()) != f.dim)
            throw error("fan: maximal cone " + cone_str(mc) + " is not full-dimensional");
        if (!std::is_sorted(mc.begin(), mc.end()) ||
            std::adjacent_find(mc.begin(), mc.end()) != mc.end())
            throw error("fan: maximal cone " + cone_str(mc) + " is not a sorted set");
        for (int i : mc) {
            if (i < 0 || i >= static_cast<int>(f.rays.size()))
                throw error("fan: ray index out of range in " + cone_str(mc));
            used[i] = true;
        }
        if (matrix_rank(cone_ray_qvecs(f, mc), f.dim) != f.dim)
            throw error("fan: maximal cone " + cone_str(mc) + " is not simplicial");
    }
    for (size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) throw error("fan: ray " + std::to_string(i) +
                                  " appears in no maximal cone");
    }
    // pairwise common-face certificates: a linear functional vanishing on the
    // shared rays and strictly separating the remaining ones witnesses that
    // the two simplicial cones meet exactly in the face they share.
    for (size_t p = 0; p < f.max_cones.size(); ++p) {
        for (size_t q = p + 1; q < f.max_cones.size(); ++q) {
            const std::vector<int>&c1 = f.max_cones[p], &c2 = f.max_cones[q];
            std::vector<int> common;
            std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                  std::back_inserter(common));
            if (common == c1 && common == c2)
                throw error("fan: duplicate maximal cone " + cone_str(c1));
            std::vector<LinearRow> rows;
            for (int i : common)
                rows.push_back({to_qvec(f.rays[i]), Rel::Eq, Rat(0)});
            for (int i : c1)
                if (!std::binary_search(common.begin(), common.end(), i))
                    rows.push_back({to_qvec(f.rays[i]), Rel::Ge, Rat(1)});
            for (int i : c2)
                if (!std::binary_search(common.begin(), common.end(), i))
                    rows.push_back({to_qvec(f.rays[i]), Rel::Le, Rat(-1)});
            if (!linear_feasible(rows, f.dim))
                throw error("fan: maximal cones " + cone_str(c1) + " and " +
                            cone_str(c2) + " do not meet in a common face");
        }
    }
}

bool fan_contains_point(const Fan& f, const QVec& p) {
    if (static_cast<int>(p.size()) != f.dim)
        throw error("fan_contains_point: wrong vector length");
    for (const std::vector<int>& mc : f.max_cones) {
        if (solve_nonneg_combination(cone_ray_qvecs(f, mc), p).feasible) return true;
    }
    return false;
}

FanPreset fan_preset_from_string(const std::string& s) {
    if (s == "p1n") return FanPreset::P1N;
    if (s == "x1") return FanPreset::OnePoint;
    if (s == "x2") return FanPreset::TwoPoints;
    if (s == "x2fiber") return FanPreset::TwoPointsFiber;
    if (s == "xtilde") return FanPreset::CurveBlowup;
    throw error("unknown fan preset '" + s +
                "' (expected p1n, x1, x2, x2fiber or xtilde)");
}

std::string fan_preset_name(FanPreset p) {
    switch (p) {
        case FanPreset::P1N: return "p1n";
        case FanPreset::OnePoint: return "x1";
        case FanPreset::TwoPoints: return "x2";
        case FanPreset::TwoPointsFiber: return "x2fiber";
        case FanPreset::CurveBlowup: return "xtilde";
    }
    throw error("unknown fan preset");
}

namespace {

// maximal-cone ray indices for a sign pattern (+1 -> e_i at i-1, -1 -> -e_i
// at n+i-1), and the subdivision ray it corresponds to.
std::vector<int> sign_cone(int n, const std::vector<int>& signs) {
    std::vector<int> cone;
    for (int i = 0; i < n; ++i) cone.push_back(signs[i] > 0 ? i : n + i);
    std::sort(cone.begin(), cone.end());
    return cone;
}

IVec sign_ray_sum(int n, const std::vector<int>& signs) {
    IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = signs[i];
    return v;
}

}  // namespace

BlowupFan build_preset(FanPreset preset, int n, int s) {
    if (n < 2) throw error("fan preset: n must be at least 2");
    BlowupFan bf;
    bf.preset = preset;
    bf.n = n;
    bf.fan = fan_p1n(n);

    auto blow_up_point = [&bf, n](const std::vector<int>& signs) {
        std::vector<int> cone = sign_cone(n, signs);
        IVec ray = sign_ray_sum(n, signs);
        bf.fan = stellar_subdivide(bf.fan, cone, ray);
        BlowupFan::Center c;
        c.ray_index = static_cast<int>(bf.fan.rays.size()) - 1;
        c.signs = signs;
        bf.centers.push_back(std::move(c));
    };

    switch (preset) {
        case FanPreset::P1N:
            break;
        case FanPreset::OnePoint:
            blow_up_point(std::vector<int>(n, 1));
            break;
        case FanPreset::TwoPoints:
            blow_up_point(std::vector<int>(n, 1));
            blow_up_point(std::vector<int>(n, -1));
            break;
        case FanPreset::TwoPointsFiber: {
            if (s < 1 || s > n - 1)
                throw error("fan preset x2fiber: s must be between 1 and n-1");
            bf.s = s;
            blow_up_point(std::vector<int>(n, 1));
            std::vector<int> signs(n, 1);
            for (int i = n - s; i < n; ++i) signs[i] = -1;  // flip the fiber factors
            blow_up_point(signs);
            break;
        }
        case FanPreset::CurveBlowup: {
            if (n < 3) throw error("fan preset xtilde: n must be at least 3");
            blow_up_point(std::vector<int>(n, -1));
            std::vector<int> curve_cone;
            for (int i = 2; i <= n; ++i) curve_cone.push_back(n + i - 1);  // -e_2..-e_n
            IVec rho2(n, Int(-1));
            rho2[0] = 0;
            bf.fan = stellar_subdivide(bf.fan, curve_cone, rho2);
            bf.curve_ray_index = static_cast<int>(bf.fan.rays.size()) - 1;
            break;
        }
    }
    return bf;
}

std::vector<ConeClass> invariant_cycle_classes(const BlowupFan& f, int k) {
    int n = f.n;
    if (k < 1 || k > n - 1)
        throw error("invariant_cycle_classes: k must be between 1 and n-1");

    if (f.preset == FanPreset::CurveBlowup) {
        if (k != n - 1)
            throw error("invariant_cycle_classes: the curve blowup's "
                        "class table covers divisors only (k = n-1)");
        RingContext ctx{n, 2};  // exceptional slots: 1 = point, 2 = curve
        auto ray_class = [&](int idx) {
            if (idx < n) return cycle_h(ctx, k, mask_with(0, idx + 1));
            if (idx == n) {  // -e_1
                CycleClass c = cycle_h(ctx, k, mask_with(0, 1));
                c.add_e(1, Rat(-1));
                return c;
            }
            if (idx < 2 * n) {  // -e_i, i >= 2
                CycleClass c = cycle_h(ctx, k, mask_with(0, idx - n + 1));
                c.add_e(1, Rat(-1));
                c.add_e(2, Rat(-1));
                return c;
            }
            if (idx == f.centers[0].ray_index) return cycle_e(ctx, k, 1);
            return cycle_e(ctx, k, 2);  // the curve's exceptional ray
        };
        std::vector<ConeClass> out;
        for (const std::vector<int>& c : enumerate_cones(f.fan, k))
            out.push_back({c, ray_class(c[0])});
        return out;
    }

    RingContext ctx{n, static_cast<int>(f.centers.size())};
    std::vector<ConeClass> out;
    for (const std::vector<int>& cone : enumerate_cones(f.fan, k)) {
        int center_ray = -1, center_j = 0;
        for (size_t j = 0; j < f.centers.size(); ++j) {
            for (int i : cone) {
                if (i == f.centers[j].ray_index) {
                    if (center_ray >= 0)
                        throw error("invariant_cycle_classes: cone with two "
                                    "exceptional rays");
                    center_ray = i;
                    center_j = static_cast<int>(j) + 1;
                }
            }
        }
        if (center_ray >= 0) {
            out.push_back({cone, cycle_e(ctx, k, center_j)});
            continue;
        }
        // pure axis cone: read off the support and signs
        mask_t I = 0;
        std::vector<std::pair<int, int>> axis_signs;  // (axis 1..n, sign)
        for (int i : cone) {
            int axis = i < n ? i + 1 : i - n + 1;
            int sign = i < n ? 1 : -1;
            if (mask_contains(I, axis))
                throw error("invariant_cycle_classes: cone with opposite rays");
            I = mask_with(I, axis);
            axis_signs.push_back({axis, sign});
        }
        CycleClass cls = cycle_h(ctx, k, I);
        for (size_t j = 0; j < f.centers.size(); ++j) {
            bool contained = true;
            for (auto& [axis, sign] : axis_signs) {
                if (f.centers[j].signs[axis - 1] != sign) { contained = false; break; }
            }
            if (contained) cls.add_e(static_cast<int>(j) + 1, Rat(-1));
        }
        out.push_back({cone, cls});
    }
    return out;
}

Fan fan_p1_x_projective(int n) {
    if (n < 3) throw error("fan_p1_x_projective: n must be at least 3");
    int d = n - 1;
    Fan f;
    f.dim = d;
    IVec eps1(d, Int(0));
    eps1[0] = 1;
    f.rays.push_back(eps1);           // index 0: eps_1
    IVec neg = eps1;
    neg[0] = -1;
    f.rays.push_back(neg);            // index 1: -eps_1
    for (int i = 1; i < d; ++i) {     // indices 2..d: eps_2..eps_{n-1}
        IVec e(d, Int(0));
        e[i] = 1;
        f.rays.push_back(e);
    }
    IVec sum(d, Int(-1));             // index d+1: -(eps_2+..+eps_{n-1})
    sum[0] = 0;
    f.rays.push_back(sum);
    // projective-factor rays are indices 2..d+1; drop one of them per cone
    for (int first : {0, 1}) {
        for (int drop = 2; drop <= d + 1; ++drop) {
            std::vector<int> cone{first};
            for (int i = 2; i <= d + 1; ++i)
                if (i != drop) cone.push_back(i);
            std::sort(cone.begin(), cone.end());
            f.max_cones.push_back(std::move(cone));
        }
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

bool fans_equal(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.rays.size() != b.rays.size() ||
        a.max_cones.size() != b.max_cones.size())
        return false;
    std::map<IVec, int> where;
    for (size_t i = 0; i < b.rays.size(); ++i) where[b.rays[i]] = static_cast<int>(i);
    std::vector<int> to_b(a.rays.size());
    for (size_t i = 0; i < a.rays.size(); ++i) {
        auto it = where.find(a.rays[i]);
        if (it == where.end()) return false;
        to_b[i] = it->second;
    }
    std::set<std::vector<int>> cones_a, cones_b;
    for (const std::vector<int>& c : a.max_cones) {
        std::vector<int> t;
        for (int i : c) t.push_back(to_b[i]);
        std::sort(t.begin(), t.end());
        cones_a.insert(std::move(t));
    }
    cones_b.insert(b.max_cones.begin(), b.max_cones.end());
    return cones_a == cones_b;
}

QuotientResult quotient_fan_exceptional(int n) {
    if (n < 3) throw error("quotient_fan_exceptional: n must be at least 3");
    BlowupFan bf = build_preset(FanPreset::CurveBlowup, n);
    int rho2 = bf.curve_ray_index;
    int d = n - 1;

    QuotientResult res;
    res.matrix.assign(d, IVec(n, Int(0)));
    res.matrix[0][0] = 1;
    for (int t = 1; t < d; ++t) {
        res.matrix[t][t] = -1;
        res.matrix[t][n - 1] = 1;
    }
    auto apply = [&](const IVec& v) {
        IVec img(d, Int(0));
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < n; ++c) img[i] += res.matrix[i][c] * v[c];
        return img;
    };

    // the quotient direction itself must die
    if (apply(bf.fan.rays[rho2]) != IVec(d, Int(0)))
        throw error("quotient_fan_exceptional: the matrix does not annihilate "
                    "the subdivision ray");

    // cones through the subdivision ray drop to the exceptional divisor's fan
    std::map<int, int> image_index;
    Fan quot;
    quot.dim = d;
    for (const std::vector<int>& mc : bf.fan.max_cones) {
        if (!std::binary_search(mc.begin(), mc.end(), rho2)) continue;
        std::vector<int> cone;
        for (int i : mc) {
            if (i == rho2) continue;
            auto it = image_index.find(i);
            if (it == image_index.end()) {
                IVec img = apply(bf.fan.rays[i]);
                quot.rays.push_back(img);
                it = image_index.insert({i, static_cast<int>(quot.rays.size()) - 1}).first;
                res.ray_images.push_back({bf.fan.rays[i], img});
            }
            cone.push_back(it->second);
        }
        std::sort(cone.begin(), cone.end());
        quot.max_cones.push_back(std::move(cone));
    }
    std::sort(quot.max_cones.begin(), quot.max_cones.end());
    res.fan = std::move(quot);

    // check the images against the expected list: eps_1, -eps_1,
    // eps_2..eps_{n-1}, -(eps_2+..+eps_{n-1}) for e_1, rho_1, -e_2..-e_n.
    Fan expected = fan_p1_x_projective(n);
    auto expect_image = [&](const IVec& src) -> IVec {
        IVec e1(n, Int(0)), rho1(n, Int(-1));
        e1[0] = 1;
        if (src == e1) return expected.rays[0];
        if (src == rho1) return expected.rays[1];
        for (int i = 2; i <= n; ++i) {
            IVec nei(n, Int(0));
            nei[i - 1] = -1;
            if (src == nei)
                return i < n ? expected.rays[i] : expected.rays[n];
        }
        throw error("quotient_fan_exceptional: unexpected source ray");
    };
    for (auto& [src, img] : res.ray_images) {
        if (img != expect_image(src))
            throw error("quotient_fan_exceptional: ray image mismatch for a "
                        "source ray (matrix transcription discrepancy)");
    }
    if (!fans_equal(res.fan, expected))
        throw error("quotient_fan_exceptional: quotient fan differs from the "
                    "product fan");
    return res;
}

// ---------------------------------------------------------------------------
// Cox data
// ---------------------------------------------------------------------------

std::vector<CoxVariable> cox_grading(int n) {
    if (n < 3) throw error("cox_grading: n must be at least 3");
    BlowupFan bf = build_preset(FanPreset::CurveBlowup, n);
    RingContext ctx{n, 2};
    int k = n - 1;
    std::vector<CoxVariable> vars;
    for (int i = 1; i <= n; ++i)
        vars.push_back({"T" + std::to_string(i), i - 1, cycle_h(ctx, k, mask_with(0, i))});
    {
        CycleClass s1 = cycle_h(ctx, k, mask_with(0, 1));
        s1.add_e(1, Rat(-1));
        vars.push_back({"S1", n, s1});
    }
    for (int i = 2; i <= n; ++i) {
        CycleClass si = cycle_h(ctx, k, mask_with(0, i));
        si.add_e(1, Rat(-1));
        si.add_e(2, Rat(-1));
        vars.push_back({"S" + std::to_string(i), n + i - 1, si});
    }
    // The strict transform of the point's exceptional divisor misses the
    // curve (they meet in a single point), so its class stays E_1; the toric
    // character relations [T_1] = [S_1] + [U_1] pin this down.
    vars.push_back({"U1", bf.centers[0].ray_index, cycle_e(ctx, k, 1)});
    vars.push_back({"U2", bf.curve_ray_index, cycle_e(ctx, k, 2)});
    return vars;
}

std::vector<CoxMonomial> cox_sections_Ws(int n, int s) {
    if (n < 3) throw error("cox_sections_Ws: n must be at least 3");
    if (s < 1 || s > n - 1) throw error("cox_sections_Ws: s must be between 1 and n-1");
    std::vector<CoxMonomial> out;
    for (int t = s; t <= n - 1; ++t) {
        for (mask_t sub : subsets_of_size(n - 1, t)) {
            mask_t I = 0;  // shift {1..n-1} up to {2..n}
            for (int i : mask_indices(sub)) I = mask_with(I, i + 1);
            out.push_back({I, t - s});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoxMonomial> cox_restrict_U2(const std::vector<CoxMonomial>& sections) {
    std::vector<CoxMonomial> out;
    for (const CoxMonomial& m : sections)
        if (m.u == 0) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

CycleClass cox_monomial_class(int n, const CoxMonomial& m) {
    RingContext ctx{n, 2};
    int k = n - 1;
    CycleClass cls(ctx, k);
    for (int i = 2; i <= n; ++i) cls.add_h(mask_with(0, i), Rat(1));  // T or S of factor i
    int size = popcount(m.smask);
    cls.add_e(1, Rat(-(size)) + Rat(m.u));  // S_i contribute -E_1, U1 adds +E_1
    cls.add_e(2, Rat(-(size)) + Rat(m.u));  // likewise for the curve class
    return cls;
}

std::string cox_monomial_str(int n, const CoxMonomial& m) {
    std::string out;
    for (int j = 2; j <= n; ++j) {
        if (!mask_contains(m.smask, j)) out += "T" + std::to_string(j);
    }
    for (int i : mask_indices(m.smask)) out += "S" + std::to_string(i);
    if (m.u == 1) out += "U1U2";
    if (m.u > 1) out += "(U1U2)^" + std::to_string(m.u);
    return out;
}

}  // namespace cyclecone
