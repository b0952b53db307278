#include "cyclecone/theorems.hpp"

#include <algorithm>

namespace cyclecone {

namespace {

// exact determinant by Gaussian elimination over Q
Int det_exact(const std::vector<IVec>& m) {
    int d = static_cast<int>(m.size());
    std::vector<QVec> a(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = Rat(m[i][j]);
    Rat det = 1;
    for (int col = 0; col < d; ++col) {
        int sel = -1;
        for (int i = col; i < d; ++i) {
            if (a[i][col] != 0) { sel = i; break; }
        }
        if (sel < 0) return 0;
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat p = a[col][col];
        for (int c = col; c < d; ++c) a[col][c] /= p;
        for (int i = col + 1; i < d; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int c = col; c < d; ++c) a[i][c] -= f * a[col][c];
        }
    }
    if (!rat_is_integer(det))
        throw error("phi: non-integer determinant of an integer matrix");
    return rat_to_int(det);
}

// exact solve M x = rhs for square invertible M
QVec solve_square(const std::vector<IVec>& m, const QVec& rhs) {
    int d = static_cast<int>(m.size());
    std::vector<QVec> a(d, QVec(d + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = Rat(m[i][j]);
        a[i][d] = rhs[i];
    }
    for (int col = 0; col < d; ++col) {
        int sel = -1;
        for (int i = col; i < d; ++i) {
            if (a[i][col] != 0) { sel = i; break; }
        }
        if (sel < 0) throw error("phi: singular matrix");
        std::swap(a[sel], a[col]);
        Rat p = a[col][col];
        for (int c = col; c <= d; ++c) a[col][c] /= p;
        for (int i = 0; i < d; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int c = col; c <= d; ++c) a[i][c] -= f * a[col][c];
        }
    }
    QVec x(d);
    for (int i = 0; i < d; ++i) x[i] = a[i][d];
    return x;
}

}  // namespace

PicardBasisChange phi_map(int n, int r) {
    if (n < 2) throw error("phi_map: n must be at least 2");
    if (r < 1) throw error("phi_map: r must be at least 1");
    int d = n + r;
    PicardBasisChange m;
    m.n = n;
    m.r = r;
    m.matrix.assign(d, IVec(d, Int(0)));
    // rows: H_1..H_n then E_1..E_r; columns: script H, script E_1..E_{n+r-1}
    for (int i = 0; i < n; ++i) m.matrix[i][0] = 1;
    m.matrix[n][0] = -(n - 1);
    for (int c = 1; c <= n; ++c) {           // script E_c -> H_{n+1-c} - E_1
        m.matrix[n - c][c] = 1;
        m.matrix[n][c] = -1;
    }
    for (int c = n + 1; c < d; ++c)          // script E_c -> E_{c-n+1}
        m.matrix[n + (c - n)][c] = 1;
    Int det = phi_det(m);
    if (det != 1 && det != -1)
        throw error("phi_map: basis change is not unimodular (det " + det.str() + ")");
    return m;
}

Int phi_det(const PicardBasisChange& m) { return det_exact(m.matrix); }

CycleClass phi_forward(const PicardBasisChange& m, const QVec& coeffs) {
    int d = m.n + m.r;
    if (static_cast<int>(coeffs.size()) != d)
        throw error("phi_forward: expected " + std::to_string(d) + " coefficients");
    QVec image(d, Rat(0));
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < d; ++c) image[i] += Rat(m.matrix[i][c]) * coeffs[c];
    RingContext ctx{m.n, m.r};
    return cycle_from_vector(ctx, m.n - 1, image);
}

QVec phi_backward(const PicardBasisChange& m, const CycleClass& divisor) {
    if (divisor.context().n != m.n || divisor.context().r != m.r ||
        divisor.k() != m.n - 1)
        throw error("phi_backward: divisor context does not match the map");
    return solve_square(m.matrix, cycle_to_vector(divisor));
}

Int factorial_boundary(int n, int r) {
    RingContext ctx{n, r};
    ChowElement d = hyperplane_minus_exceptional(ctx);
    ChowElement p = chow_unit(ctx);
    for (int i = 0; i < n; ++i) p = p * d;
    Rat deg = degree(p);
    if (!rat_is_integer(deg)) throw error("factorial_boundary: non-integer degree");
    return rat_to_int(deg);
}

FiberDivisorIdentity fiber_divisor_identity(int n, int k, const CycleClass& y) {
    if (k < 1 || k > n - 1)
        throw error("fiber_divisor_identity: k must be between 1 and n-1");
    RingContext ctx{n, 1};
    if (y.context() != ctx)
        throw error("fiber_divisor_identity: the class must live on the "
                    "one-point blowup (r = 1)");
    if (y.k() != k)
        throw error("fiber_divisor_identity: class dimension " +
                    std::to_string(y.k()) + " does not match k = " + std::to_string(k));

    ChowElement p = to_chow(y);
    for (int s = 1; s <= k; ++s) {
        CycleClass w(ctx, n - 1);
        for (int i = 2; i <= n; ++i) w.add_h(mask_with(0, i), Rat(1));
        w.add_e(1, Rat(-s));
        p = p * to_chow(w);
    }
    FiberDivisorIdentity res;
    res.product_degree = degree(p);

    Rat bracket = y.b(1) * Rat(-1);
    for (auto& [mask, a] : y.h_coeffs()) {
        if (mask_contains(mask, 1)) bracket += a;
    }
    res.closed_form = Rat(factorial(k)) * bracket;
    res.beta = -bracket;
    if (res.product_degree != res.closed_form)
        throw error("fiber_divisor_identity: product " + rat_str(res.product_degree) +
                    " differs from closed form " + rat_str(res.closed_form));
    return res;
}

CurveLift curve_lift(int n, int k, const CycleClass& curve) {
    if (k < 1 || k > n - 1) throw error("curve_lift: k must be between 1 and n-1");
    int m = n - k + 1;
    if (curve.context().n != m)
        throw error("curve_lift: the curve must live on a product of " +
                    std::to_string(m) + " factors for k = " + std::to_string(k));
    if (curve.k() != 1) throw error("curve_lift: input must be a curve class");
    for (auto& [mask, a] : curve.h_coeffs()) {
        (void)mask;
        if (a < 0) throw error("curve_lift: negative fiber coefficient");
    }
    RingContext ctx{n, curve.context().r};
    CurveLift res{CycleClass(ctx, k), Rat(0), Rat(0), false};
    for (auto& [mask, a] : curve.h_coeffs()) {
        res.cls.add_h(mask, a);  // subsets of {1..m} of size m-1 = n-k
        res.sum_a += a;
    }
    for (int j = 1; j <= curve.context().r; ++j) {
        Rat bj = curve.b(j);
        if (bj < 0) throw error("curve_lift: negative multiplicity b_" +
                                std::to_string(j));
        if (bj != 0) res.cls.add_e(j, -bj);
        res.sum_b += bj;
    }
    res.violates_sum_inequality = res.sum_a < res.sum_b;
    return res;
}

namespace {
CycleClass x44_divisor(const std::vector<int>& mults) {
    RingContext ctx{4, 4};
    CycleClass d(ctx, 3);
    for (int i = 1; i <= 4; ++i) d.add_h(mask_with(0, i), Rat(1));
    for (int j = 1; j <= 4; ++j) d.add_e(j, Rat(-mults[j - 1]));
    return d;
}
}  // namespace

CycleClass d1_class() { return x44_divisor({2, 2, 1, 1}); }
CycleClass d2_class() { return x44_divisor({1, 1, 2, 2}); }

CycleClass d1d2_intersection_class() {
    RingContext ctx{4, 4};
    CycleClass c(ctx, 2);
    for (mask_t I : subsets_of_size(4, 2)) c.add_h(I, Rat(2));
    for (int j = 1; j <= 4; ++j) c.add_e(j, Rat(-2));
    return c;
}

DivisorPairIdentity d1d2_identity(const CycleClass& y) {
    RingContext ctx{4, 4};
    if (y.context() != ctx || y.k() != 2)
        throw error("d1d2_identity: the class must be a 2-cycle on the "
                    "four-point blowup of (P^1)^4");
    DivisorPairIdentity res;
    res.degree = degree(to_chow(d1_class()) * to_chow(d2_class()) * to_chow(y));
    res.sum_a = 0;
    for (auto& [mask, a] : y.h_coeffs()) {
        (void)mask;
        res.sum_a += a;
    }
    res.sum_b = 0;
    for (int j = 1; j <= 4; ++j) res.sum_b += y.b(j);
    res.closed_form = Rat(2) * (res.sum_a - res.sum_b);
    if (res.degree != res.closed_form)
        throw error("d1d2_identity: degree " + rat_str(res.degree) +
                    " differs from closed form " + rat_str(res.closed_form));
    return res;
}

BoundReport status(int n, int k, int r) {
    if (n < 2) throw error("status: n must be at least 2");
    if (k < 1 || k > n - 1) throw error("status: k must be between 1 and n-1");
    if (r < 0) throw error("status: r must be non-negative");
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.r = r;
    if (k == 1) {
        bool fg = Int(r) <= factorial(n);
        rep.status = fg ? "fiber-generated" : "not-fiber-generated";
        rep.rule = "curve-count-bound";
        return rep;
    }
    if (k == n - 1) {
        rep.status = r <= 2 ? "fiber-generated" : "not-fiber-generated";
        rep.rule = "divisor-count-bound";
        return rep;
    }
    if (r <= n - k + 1) {
        rep.status = "fiber-generated";
        rep.rule = "small-point-bound";
        return rep;
    }
    if (n == 4 && k == 2 && r == 4) {
        rep.status = "fiber-generated";
        rep.rule = "special-4-2-4";
        return rep;
    }
    if (Int(r) > factorial(n - k + 1)) {
        rep.status = "not-fiber-generated";
        rep.rule = "factorial-excess";
        return rep;
    }
    rep.status = "open";
    rep.rule = "open";
    return rep;
}

bool is_mori_dream(int n, int r) {
    if (n < 2) throw error("is_mori_dream: n must be at least 2");
    if (r < 0) throw error("is_mori_dream: r must be non-negative");
    if (n == 2) return r <= 7;
    if (n == 3) return r <= 6;
    if (n == 4) return r <= 5;
    return r <= 4;
}

}  // namespace cyclecone
