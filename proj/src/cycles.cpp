#include "cyclecone/cycles.hpp"

#include <algorithm>

namespace cyclecone {

CycleClass::CycleClass(RingContext ctx, int k) : ctx_(ctx), k_(k) {
    if (k < 1 || k > ctx.n - 1)
        throw error("cycle dimension k=" + std::to_string(k) + " out of range [1," +
                    std::to_string(ctx.n - 1) + "]");
}

void CycleClass::add_h(mask_t I, const Rat& c) {
    if (popcount(I) != ctx_.n - k_)
        throw error("H index set " + mask_str(I) + " must have size " +
                    std::to_string(ctx_.n - k_) + " in N_" + std::to_string(k_));
    if ((I & ~full_mask(ctx_.n)) != 0)
        throw error("H index set " + mask_str(I) + " exceeds n=" + std::to_string(ctx_.n));
    if (c == 0) return;
    auto it = h_.find(I);
    if (it == h_.end()) {
        h_.emplace(I, c);
    } else {
        it->second += c;
        if (it->second == 0) h_.erase(it);
    }
}

void CycleClass::add_e(int j, const Rat& c) {
    if (j < 1 || j > ctx_.r)
        throw error("exceptional index " + std::to_string(j) + " out of range [1," +
                    std::to_string(ctx_.r) + "]");
    if (c == 0) return;
    auto it = e_.find(j);
    if (it == e_.end()) {
        e_.emplace(j, c);
    } else {
        it->second += c;
        if (it->second == 0) e_.erase(it);
    }
}

Rat CycleClass::h_coeff(mask_t I) const {
    auto it = h_.find(I);
    return it == h_.end() ? Rat(0) : it->second;
}

Rat CycleClass::e_coeff(int j) const {
    auto it = e_.find(j);
    return it == e_.end() ? Rat(0) : it->second;
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
    require_same_context(ctx_, o.ctx_, "cycle add");
    if (k_ != o.k_) throw error("cycle add: dimension mismatch");
    CycleClass out = *this;
    for (const auto& [I, c] : o.h_) out.add_h(I, c);
    for (const auto& [j, c] : o.e_) out.add_e(j, c);
    return out;
}

CycleClass CycleClass::operator-(const CycleClass& o) const {
    return *this + (o * Rat(-1));
}

CycleClass CycleClass::operator*(const Rat& c) const {
    CycleClass out(ctx_, k_);
    if (c == 0) return out;
    for (const auto& [I, a] : h_) out.add_h(I, a * c);
    for (const auto& [j, a] : e_) out.add_e(j, a * c);
    return out;
}

bool CycleClass::operator==(const CycleClass& o) const {
    return ctx_ == o.ctx_ && k_ == o.k_ && h_ == o.h_ && e_ == o.e_;
}

bool CycleClass::operator<(const CycleClass& o) const {
    if (ctx_ != o.ctx_) return ctx_ < o.ctx_;
    if (k_ != o.k_) return k_ < o.k_;
    if (h_ != o.h_)
        return std::lexicographical_compare(
            h_.begin(), h_.end(), o.h_.begin(), o.h_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return tuple_lex_less(x.first, y.first);
                return x.second < y.second;
            });
    return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
}

std::string CycleClass::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    auto emit = [&](const Rat& coeff, const std::string& gen) {
        Rat a = coeff;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1)
            out += a.str() + "*" + gen;
        else
            out += gen;
        first = false;
    };
    std::vector<mask_t> keys;
    for (const auto& [I, c] : h_) keys.push_back(I);
    std::sort(keys.begin(), keys.end(), tuple_lex_less);
    for (mask_t I : keys) emit(h_.at(I), "H" + mask_str(I));
    for (const auto& [j, c] : e_) {
        std::string gen = (k_ == ctx_.n - 1)
                              ? "E" + std::to_string(j)
                              : "E{" + std::to_string(j) + "," + std::to_string(k_) + "}";
        emit(c, gen);
    }
    return out;
}

CycleClass cycle_h(RingContext ctx, int k, mask_t I) {
    CycleClass c(ctx, k);
    c.add_h(I, 1);
    return c;
}

CycleClass cycle_e(RingContext ctx, int k, int j) {
    CycleClass c(ctx, k);
    c.add_e(j, 1);
    return c;
}

std::vector<CycleClass> nk_basis(RingContext ctx, int k) {
    std::vector<CycleClass> basis;
    for (mask_t I : subsets_of_size(ctx.n, ctx.n - k)) basis.push_back(cycle_h(ctx, k, I));
    for (int j = 1; j <= ctx.r; ++j) basis.push_back(cycle_e(ctx, k, j));
    return basis;
}

Rat pair_classes(const CycleClass& a, const CycleClass& b) {
    require_same_context(a.context(), b.context(), "pairing");
    int n = a.context().n;
    if (a.k() + b.k() != n)
        throw error("pairing requires complementary dimensions, got k=" +
                    std::to_string(a.k()) + " and k=" + std::to_string(b.k()));
    Rat s = 0;
    mask_t full = full_mask(n);
    for (const auto& [I, ca] : a.h_coeffs()) {
        Rat cb = b.h_coeff(full & ~I);
        if (cb != 0) s += ca * cb;
    }
    for (const auto& [j, ca] : a.e_coeffs()) {
        Rat cb = b.e_coeff(j);
        if (cb != 0) s -= ca * cb;
    }
    return s;
}

ChowElement to_chow(const CycleClass& a) {
    ChowElement x(a.context());
    int n = a.context().n, k = a.k();
    for (const auto& [I, c] : a.h_coeffs()) x.add_term(ChowMonomial::h_set(I), c);
    // E_{j,k} = (-1)^(n-k+1) e_j^(n-k)
    Rat sign = ((n - k + 1) % 2 == 0) ? 1 : -1;
    for (const auto& [j, c] : a.e_coeffs())
        x.add_term(ChowMonomial::e_power(j, n - k), c * sign);
    return x;
}

CycleClass from_chow(const ChowElement& x, int k) {
    const RingContext& ctx = x.context();
    int deg = -1;
    if (!x.is_homogeneous(&deg))
        throw error("from_chow: element is not homogeneous");
    if (!x.is_zero() && deg != ctx.n - k)
        throw error("from_chow: degree " + std::to_string(deg) + " does not match n-k=" +
                    std::to_string(ctx.n - k));
    CycleClass a(ctx, k);
    Rat sign = ((ctx.n - k + 1) % 2 == 0) ? 1 : -1;
    for (const auto& [m, c] : x.terms()) {
        if (m.kind == ChowMonomial::Kind::H)
            a.add_h(m.hmask, c);
        else
            a.add_e(m.j, c * sign);  // sign^2 = 1, so dividing equals multiplying
    }
    return a;
}

QVec cycle_to_vector(const CycleClass& a) {
    const RingContext& ctx = a.context();
    std::vector<mask_t> sets = subsets_of_size(ctx.n, ctx.n - a.k());
    QVec v;
    v.reserve(sets.size() + ctx.r);
    for (mask_t I : sets) v.push_back(a.h_coeff(I));
    for (int j = 1; j <= ctx.r; ++j) v.push_back(a.e_coeff(j));
    return v;
}

CycleClass cycle_from_vector(RingContext ctx, int k, const QVec& v) {
    std::vector<mask_t> sets = subsets_of_size(ctx.n, ctx.n - k);
    if (v.size() != sets.size() + static_cast<std::size_t>(ctx.r))
        throw error("cycle_from_vector: expected length " +
                    std::to_string(sets.size() + ctx.r) + ", got " +
                    std::to_string(v.size()));
    CycleClass a(ctx, k);
    for (std::size_t i = 0; i < sets.size(); ++i) a.add_h(sets[i], v[i]);
    for (int j = 1; j <= ctx.r; ++j) a.add_e(j, v[sets.size() + j - 1]);
    return a;
}

FiberCone fiber_cone(RingContext ctx, int k) {
    FiberCone cone{ctx, k, {}};
    std::vector<mask_t> sets = subsets_of_size(ctx.n, ctx.n - k);
    if (ctx.r == 0) {
        for (mask_t I : sets) cone.generators.push_back(cycle_h(ctx, k, I));
        return cone;
    }
    for (mask_t I : sets)
        for (int j = 1; j <= ctx.r; ++j)
            cone.generators.push_back(cycle_h(ctx, k, I) - cycle_e(ctx, k, j));
    for (int j = 1; j <= ctx.r; ++j) cone.generators.push_back(cycle_e(ctx, k, j));
    return cone;
}

CycleClass Decomposition::reconstruct(RingContext ctx, int k) const {
    CycleClass acc(ctx, k);
    for (const auto& [gen, coeff] : terms) acc = acc + gen * coeff;
    return acc;
}

QVec VectorDecomposition::reconstruct(int N, int r) const {
    QVec v(N + r, Rat(0));
    for (const Term& t : terms) {
        switch (t.gen) {
            case Gen::Difference:
                v[t.i - 1] += t.coeff;
                v[N + t.j - 1] -= t.coeff;
                break;
            case Gen::Exceptional:
                v[N + t.j - 1] += t.coeff;
                break;
            case Gen::Axis:
                v[t.i - 1] += t.coeff;
                break;
        }
    }
    return v;
}

VectorDecomposition decompose_vector(const QVec& v, int N, int r) {
    if (static_cast<int>(v.size()) != N + r)
        throw error("decompose: expected vector of length " + std::to_string(N + r));
    // Scale to integers; the step sequence is scale-equivariant, so dividing
    // the coefficients back out at the end reproduces the rational answer.
    Int scale = 1;
    for (const Rat& x : v) scale = lcm(scale, denominator(x));
    std::vector<Int> a(N), b(r);
    for (int i = 0; i < N; ++i) {
        Int e = numerator(v[i]) * (scale / denominator(v[i]));
        if (e < 0)
            throw error("decompose: a[" + std::to_string(i + 1) + "] = " + v[i].str() +
                        " violates a_i >= 0");
        a[i] = e;
    }
    Int suma = 0, sumb = 0;
    for (const Int& x : a) suma += x;
    for (int j = 0; j < r; ++j) {
        Int e = numerator(v[N + j]) * (scale / denominator(v[N + j]));
        if (e > 0)
            throw error("decompose: b[" + std::to_string(j + 1) + "] = " +
                        (-v[N + j]).str() + " violates b_j >= 0");
        b[j] = -e;
        sumb += b[j];
    }
    if (suma < sumb)
        throw error("decompose: sum(a) >= sum(b) violated: " +
                    make_rat(suma, scale).str() + " < " + make_rat(sumb, scale).str());

    using Gen = VectorDecomposition::Gen;
    // (gen kind, i, j) -> accumulated coefficient; the loop and the base case
    // may hit the same difference generator.
    std::map<std::tuple<int, int, int>, Int> combo;
    if (r == 0) {
        for (int i = 0; i < N; ++i)
            if (a[i] > 0) combo[{2, i + 1, 0}] += a[i];
    } else {
        int i = 0, j = 0;
        while (true) {
            while (j < r && b[j] == 0) ++j;
            if (j == r) break;
            while (a[i] == 0) ++i;  // sum(a) >= sum(b) keeps this in range
            Int step = std::min(a[i], b[j]);
            combo[{0, i + 1, j + 1}] += step;
            a[i] -= step;
            b[j] -= step;
        }
        Int rest = 0;
        for (int l = 0; l < N; ++l) {
            if (a[l] > 0) {
                combo[{0, l + 1, 1}] += a[l];
                rest += a[l];
            }
        }
        if (rest > 0) combo[{1, 0, 1}] += rest;
    }

    VectorDecomposition out;
    for (const auto& [key, c] : combo) {
        auto [kind, i, j] = key;
        VectorDecomposition::Term t;
        t.gen = kind == 0 ? Gen::Difference : (kind == 1 ? Gen::Exceptional : Gen::Axis);
        t.i = i;
        t.j = j;
        t.coeff = make_rat(c, scale);
        out.terms.push_back(t);
    }
    return out;
}

Membership cf_membership(const FiberCone& cone, const CycleClass& alpha) {
    require_same_context(cone.ctx, alpha.context(), "cf_membership");
    if (cone.k != alpha.k()) throw error("cf_membership: dimension mismatch");
    const RingContext& ctx = cone.ctx;
    int k = cone.k;
    std::vector<mask_t> sets = subsets_of_size(ctx.n, ctx.n - k);
    int N = static_cast<int>(sets.size());

    Membership result;

    // Negative fiber coefficient: the complementary H-ray separates.
    for (mask_t I : sets) {
        if (alpha.h_coeff(I) < 0) {
            mask_t comp = full_mask(ctx.n) & ~I;
            CycleClass ray = cycle_h(ctx, ctx.n - k, comp);
            result.inside = false;
            result.separator = ray;
            result.separator_pairing = pair_classes(alpha, ray);
            return result;
        }
    }
    // Budget test: sum a_I >= sum of positive b_j. On failure the dual ray for
    // S = { j : b_j > 0 } certifies separation.
    Rat suma = 0, pos_b = 0;
    for (const auto& [I, c] : alpha.h_coeffs()) suma += c;
    std::vector<int> S;
    for (int j = 1; j <= ctx.r; ++j) {
        Rat bj = alpha.b(j);
        if (bj > 0) {
            pos_b += bj;
            S.push_back(j);
        }
    }
    if (suma < pos_b) {
        CycleClass ray(ctx, ctx.n - k);
        for (mask_t J : subsets_of_size(ctx.n, k)) ray.add_h(J, 1);
        for (int j : S) ray.add_e(j, -1);
        result.inside = false;
        result.separator = ray;
        result.separator_pairing = pair_classes(alpha, ray);
        return result;
    }

    // Inside: peel off E_{j,k} for every j with b_j < 0, then decompose the
    // remaining (a, -max(b,0)) vector.
    QVec v(N + ctx.r, Rat(0));
    for (int i = 0; i < N; ++i) v[i] = alpha.h_coeff(sets[i]);
    std::map<int, Rat> direct_e;
    for (int j = 1; j <= ctx.r; ++j) {
        Rat bj = alpha.b(j);
        if (bj > 0)
            v[N + j - 1] = -bj;
        else if (bj < 0)
            direct_e[j] = -bj;  // coefficient of the generator E_{j,k}
    }
    VectorDecomposition vd = decompose_vector(v, N, ctx.r);

    std::map<CycleClass, Rat> merged;
    for (const auto& t : vd.terms) {
        CycleClass gen = [&] {
            switch (t.gen) {
                case VectorDecomposition::Gen::Difference:
                    return cycle_h(ctx, k, sets[t.i - 1]) - cycle_e(ctx, k, t.j);
                case VectorDecomposition::Gen::Exceptional:
                    return cycle_e(ctx, k, t.j);
                default:
                    return cycle_h(ctx, k, sets[t.i - 1]);
            }
        }();
        merged[gen] += t.coeff;
    }
    for (const auto& [j, c] : direct_e) merged[cycle_e(ctx, k, j)] += c;

    result.inside = true;
    for (const auto& [gen, c] : merged)
        if (c != 0) result.decomposition.terms.emplace_back(gen, c);
    return result;
}

std::vector<CycleClass> dual_rays(const FiberCone& cone) {
    const RingContext& ctx = cone.ctx;
    int k = cone.k;
    std::vector<CycleClass> rays;
    for (mask_t I : subsets_of_size(ctx.n, k)) rays.push_back(cycle_h(ctx, ctx.n - k, I));
    // One ray per nonempty S subset {1..r}, enumerated in mask order.
    for (mask_t S = 1; S <= full_mask(ctx.r) && ctx.r > 0; ++S) {
        CycleClass ray(ctx, ctx.n - k);
        for (mask_t J : subsets_of_size(ctx.n, k)) ray.add_h(J, 1);
        for (int j : mask_indices(S)) ray.add_e(j, -1);
        rays.push_back(ray);
    }
    return rays;
}

FgReport fg_criterion(const std::vector<CycleClass>& classes) {
    FgReport report;
    for (const CycleClass& c : classes) {
        for (const auto& [I, a] : c.h_coeffs())
            if (a < 0)
                throw error("fg_criterion: class " + c.str() + " has a_" + mask_str(I) +
                            " < 0");
        Rat sa = 0, sb = 0;
        for (const auto& [I, a] : c.h_coeffs()) sa += a;
        for (int j = 1; j <= c.context().r; ++j) {
            Rat bj = c.b(j);
            if (bj < 0)
                throw error("fg_criterion: class " + c.str() + " has b_" +
                            std::to_string(j) + " < 0");
            sb += bj;
        }
        bool pass = sa >= sb;
        report.rows.push_back({c, sa, sb, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

}  // namespace cyclecone
