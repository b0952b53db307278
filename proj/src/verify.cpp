#include "cyclecone/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "cyclecone/chow.hpp"
#include "cyclecone/cycles.hpp"
#include "cyclecone/fans.hpp"
#include "cyclecone/linsys.hpp"
#include "cyclecone/polyhedral.hpp"
#include "cyclecone/theorems.hpp"

namespace cyclecone {

bool SuiteResult::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

int SuiteResult::passed() const {
    int n = 0;
    for (const CheckResult& c : checks) n += c.pass ? 1 : 0;
    return n;
}

namespace {

// splitmix64; seeded per suite so outputs never depend on run order.
struct DetRng {
    std::uint64_t state;
    explicit DetRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Runs body; an empty returned string records a pass, anything else (or an
// exception) records the failure with its message.
void guarded(SuiteResult& sr, const std::string& name,
             const std::function<std::string()>& body) {
    try {
        std::string why = body();
        sr.checks.push_back({name, why.empty(), why});
    } catch (const std::exception& e) {
        sr.checks.push_back({name, false, e.what()});
    }
}

std::string tag(int n, int k, int r) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
           " r=" + std::to_string(r);
}

// Positive-scale normalization of a ray to primitive integers.
QVec primitive_ray(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, denominator(x));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    if (g == 0) g = 1;
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(w[i] / g);
    return out;
}

// ---------------------------------------------------------------------------
// pairing: N_k x N_{n-k} intersection matrix is diag(I, -I) in complementary
// bases, by the bilinear formula and independently through the Chow ring.
// ---------------------------------------------------------------------------
SuiteResult verify_pairing(int max_n) {
    if (max_n <= 0) max_n = 4;
    SuiteResult sr{"pairing", {}, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int r = 0; r <= 3; ++r)
                guarded(sr, "matrix " + tag(n, k, r), [&]() -> std::string {
                    RingContext ctx{n, r};
                    auto rows = nk_basis(ctx, k);
                    auto cols = nk_basis(ctx, n - k);
                    int N = static_cast<int>(binomial(n, k));
                    for (std::size_t i = 0; i < rows.size(); ++i)
                        for (std::size_t j = 0; j < cols.size(); ++j) {
                            Rat expect(0);
                            if (static_cast<int>(i) < N && static_cast<int>(j) < N) {
                                mask_t I = rows[i].h_coeffs().begin()->first;
                                mask_t J = cols[j].h_coeffs().begin()->first;
                                if (J == (full_mask(n) & ~I)) expect = 1;
                            } else if (static_cast<int>(i) >= N &&
                                       static_cast<int>(j) >= N) {
                                if (i - N == j - N) expect = -1;
                            }
                            Rat direct = pair_classes(rows[i], cols[j]);
                            Rat chow = degree(to_chow(rows[i]) * to_chow(cols[j]));
                            if (direct != expect || chow != expect)
                                return "entry (" + rows[i].str() + ", " +
                                       cols[j].str() + "): formula " + direct.str() +
                                       ", chow " + chow.str() + ", expected " +
                                       expect.str();
                        }
                    return "";
                });
    return sr;
}

// ---------------------------------------------------------------------------
// thm-linear: deg((H_1+..+H_n - E_1-..-E_r)^n) = n! - r, sign flip at n!+1.
// ---------------------------------------------------------------------------
SuiteResult verify_boundary(int max_n) {
    if (max_n <= 0) max_n = 5;
    SuiteResult sr{"thm-linear", {}, {}};
    for (int n = 2; n <= max_n; ++n)
        guarded(sr, "degree-sweep n=" + std::to_string(n), [&]() -> std::string {
            Int nf = factorial(n);
            int rmax = static_cast<int>(nf) + 2;
            for (int r = 0; r <= rmax; ++r) {
                Int got = factorial_boundary(n, r);
                if (got != nf - r)
                    return "r=" + std::to_string(r) + ": got " + got.str() +
                           ", expected " + (nf - r).str();
            }
            if (factorial_boundary(n, static_cast<int>(nf)) != 0 ||
                factorial_boundary(n, static_cast<int>(nf) + 1) != -1)
                return "sign does not flip at r = n!+1";
            return "";
        });
    sr.facts.emplace_back("boundary_confirmed", sr.all_pass() ? "true" : "false");
    return sr;
}

// ---------------------------------------------------------------------------
// lemma-num: random valid vectors decompose with non-negative coefficients
// and reconstruct exactly; invalid vectors are rejected.
// ---------------------------------------------------------------------------
SuiteResult verify_decomposition(int max_n) {
    (void)max_n;
    SuiteResult sr{"lemma-num", {}, {}};
    const int valid_cases = 1000, invalid_cases = 100;

    guarded(sr, "random-decompositions", [&]() -> std::string {
        DetRng rng(0xc0ffee01);
        for (int t = 0; t < valid_cases; ++t) {
            int n = rng.uniform(2, 5);
            int k = rng.uniform(1, n - 1);
            int N = static_cast<int>(binomial(n, k));
            int r = rng.uniform(0, 6);
            QVec v(N + r);
            Int suma = 0;
            for (int i = 0; i < N; ++i) {
                int a = rng.uniform(0, 20);
                v[i] = a;
                suma += a;
            }
            std::vector<Int> b(r);
            Int sumb = 0;
            for (int j = 0; j < r; ++j) {
                b[j] = rng.uniform(0, 20);
                sumb += b[j];
            }
            // repair: shrink the largest b until the lemma's precondition
            // holds; one case in eight is pushed to the tight boundary
            while (sumb > suma) {
                auto it = std::max_element(b.begin(), b.end());
                Int cut = std::min(*it, sumb - suma);
                *it -= cut;
                sumb -= cut;
            }
            if (r > 0 && suma > sumb && rng.uniform(0, 7) == 0) {
                b[rng.uniform(0, r - 1)] += suma - sumb;
                sumb = suma;
            }
            for (int j = 0; j < r; ++j) v[N + j] = Rat(-b[j]);

            VectorDecomposition d = decompose_vector(v, N, r);
            for (const auto& term : d.terms)
                if (term.coeff < 0)
                    return "case " + std::to_string(t) + ": negative coefficient";
            if (d.reconstruct(N, r) != v)
                return "case " + std::to_string(t) + ": reconstruction mismatch";
        }
        return "";
    });

    guarded(sr, "precondition-rejections", [&]() -> std::string {
        DetRng rng(0xc0ffee02);
        for (int t = 0; t < invalid_cases; ++t) {
            int n = rng.uniform(2, 5);
            int k = rng.uniform(1, n - 1);
            int N = static_cast<int>(binomial(n, k));
            int r = rng.uniform(1, 6);
            QVec v(N + r, Rat(0));
            int mode = t % 3;
            if (mode == 0) {
                // a negative fiber coefficient
                for (int i = 0; i < N; ++i) v[i] = rng.uniform(0, 20);
                v[rng.uniform(0, N - 1)] = Rat(-1 - rng.uniform(0, 5));
            } else if (mode == 1) {
                // a negative multiplicity (positive exceptional coordinate)
                for (int i = 0; i < N; ++i) v[i] = rng.uniform(0, 20);
                v[N + rng.uniform(0, r - 1)] = Rat(1 + rng.uniform(0, 5));
            } else {
                // sum(a) < sum(b)
                Int suma = 0;
                for (int i = 0; i < N; ++i) {
                    int a = rng.uniform(0, 5);
                    v[i] = a;
                    suma += a;
                }
                v[N] = Rat(-(suma + 1 + rng.uniform(0, 5)));
                for (int j = 1; j < r; ++j) v[N + j] = Rat(-rng.uniform(0, 3));
            }
            bool rejected = false;
            try {
                decompose_vector(v, N, r);
            } catch (const error&) {
                rejected = true;
            }
            if (!rejected)
                return "case " + std::to_string(t) + ": invalid vector accepted";
        }
        return "";
    });

    sr.facts.emplace_back("valid_cases", std::to_string(valid_cases));
    sr.facts.emplace_back("rejected_cases", std::to_string(invalid_cases));
    return sr;
}

// ---------------------------------------------------------------------------
// lemma-fg: double-description dual of CF_k equals the closed-form dual rays.
// ---------------------------------------------------------------------------
SuiteResult verify_dual_rays(int max_n) {
    if (max_n <= 0) max_n = 4;
    SuiteResult sr{"lemma-fg", {}, {}};
    const int tuples[][3] = {{2, 1, 1}, {2, 1, 2}, {3, 1, 2}, {3, 2, 2}, {4, 2, 2}};
    for (const auto& t : tuples) {
        int n = t[0], k = t[1], r = t[2];
        if (n > max_n) continue;
        guarded(sr, "dual-rays " + tag(n, k, r), [&]() -> std::string {
            RingContext ctx{n, r};
            FiberCone cone = fiber_cone(ctx, k);
            int dim = static_cast<int>(binomial(n, k)) + r;

            std::vector<QVec> gen_vecs;
            for (const CycleClass& g : cone.generators)
                gen_vecs.push_back(cycle_to_vector(g));
            RationalCone dual = dualize(cone_from_generators(dim, gen_vecs));

            std::set<QVec> got;
            for (const QVec& y : dual.generators) got.insert(primitive_ray(y));

            // Closed-form rays live in N_{n-k}; transport through the pairing
            // (complement the H block, negate the E block) to compare in the
            // dot-product dual coordinates.
            std::set<QVec> want;
            auto rays = dual_rays(cone);
            for (const CycleClass& d : rays) {
                QVec y;
                for (mask_t I : subsets_of_size(n, n - k))
                    y.push_back(d.h_coeff(full_mask(n) & ~I));
                for (int j = 1; j <= r; ++j) y.push_back(-d.e_coeff(j));
                want.insert(primitive_ray(y));
                // transported vector must reproduce the intersection pairing
                for (const CycleClass& g : cone.generators) {
                    Rat dot(0);
                    QVec gv = cycle_to_vector(g);
                    for (std::size_t i = 0; i < gv.size(); ++i) dot += gv[i] * y[i];
                    if (dot != pair_classes(g, d))
                        return "pairing transport mismatch on " + d.str();
                }
            }
            std::size_t expected_count =
                static_cast<std::size_t>(binomial(n, k)) + ((1u << r) - 1);
            if (rays.size() != expected_count)
                return "closed form lists " + std::to_string(rays.size()) +
                       " rays, expected " + std::to_string(expected_count);
            if (got != want)
                return "double description found " + std::to_string(got.size()) +
                       " rays, closed form " + std::to_string(want.size()) +
                       (got.size() == want.size() ? " (sets differ)" : "");
            return "";
        });
    }
    return sr;
}

// ---------------------------------------------------------------------------
// prop-tor: invariant-class tables of the two-point blowup fan against the
// fiber-cone generators, and face counts of the product fan.
// ---------------------------------------------------------------------------
SuiteResult verify_toric_tables(int max_n) {
    if (max_n <= 0) max_n = 5;
    SuiteResult sr{"prop-tor", {}, {}};
    for (int n = 2; n <= max_n; ++n) {
        guarded(sr, "face-counts n=" + std::to_string(n), [&]() -> std::string {
            Fan f = fan_p1n(n);
            for (int k = 1; k <= n - 1; ++k) {
                std::size_t count = enumerate_cones(f, k).size();
                std::size_t want =
                    (static_cast<std::size_t>(1) << (n - k)) *
                    static_cast<std::size_t>(binomial(n, k));
                if (count != want)
                    return "codim " + std::to_string(k) + ": " +
                           std::to_string(count) + " cones, expected " +
                           std::to_string(want);
            }
            return "";
        });

        BlowupFan bf = build_preset(FanPreset::TwoPoints, n);
        guarded(sr, "fan-valid n=" + std::to_string(n),
                [&]() -> std::string {
                    validate_fan(bf.fan);
                    return "";
                });
        guarded(sr, "blowup-face-counts n=" + std::to_string(n),
                [&]() -> std::string {
                    for (int k = 1; k <= n - 1; ++k) {
                        std::size_t count = enumerate_cones(bf.fan, k).size();
                        std::size_t want =
                            (static_cast<std::size_t>(1) << (n - k)) *
                                static_cast<std::size_t>(binomial(n, k)) +
                            2 * static_cast<std::size_t>(binomial(n, k + 1));
                        if (count != want)
                            return "codim " + std::to_string(k) + ": " +
                                   std::to_string(count) + " cones, expected " +
                                   std::to_string(want);
                    }
                    return "";
                });

        for (int k = 1; k <= n - 1; ++k)
            guarded(sr, "class-table n=" + std::to_string(n) + " k=" + std::to_string(k),
                    [&]() -> std::string {
                        RingContext ctx{n, 2};
                        auto table = invariant_cycle_classes(bf, k);
                        std::set<CycleClass> classes;
                        for (const ConeClass& c : table) classes.insert(c.cls);

                        FiberCone cone = fiber_cone(ctx, k);
                        std::set<CycleClass> want(cone.generators.begin(),
                                                  cone.generators.end());
                        if (k <= n - 2)
                            for (mask_t I : subsets_of_size(n, n - k))
                                want.insert(cycle_h(ctx, k, I));
                        if (classes != want) {
                            for (const CycleClass& c : classes)
                                if (!want.count(c))
                                    return "unexpected class " + c.str();
                            for (const CycleClass& c : want)
                                if (!classes.count(c))
                                    return "missing class " + c.str();
                        }
                        // cone equality: every table class must decompose in
                        // CF_k (the bare H classes are the only non-generators)
                        for (const CycleClass& c : classes) {
                            Membership m = cf_membership(cone, c);
                            if (!m.inside)
                                return "class " + c.str() + " not inside CF_k";
                            CycleClass rec = m.decomposition.reconstruct(ctx, k);
                            if (rec != c)
                                return "decomposition of " + c.str() +
                                       " reconstructs to " + rec.str();
                        }
                        return "";
                    });
    }
    return sr;
}

// ---------------------------------------------------------------------------
// lemma-bs: base loci of |W_s|, multiplicity along L, restriction recursion.
// ---------------------------------------------------------------------------
SuiteResult verify_base_loci(int max_n) {
    if (max_n <= 0) max_n = 6;
    SuiteResult sr{"lemma-bs", {}, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            RingContext ctx{n, 1};
            MonomialSystem sys = basis_Ws(n, s);

            guarded(sr, "base-locus n=" + std::to_string(n) + " s=" + std::to_string(s),
                    [&]() -> std::string {
                        auto bl = base_locus(sys);
                        std::set<BaseLocusStratum> got(bl.begin(), bl.end());
                        std::set<BaseLocusStratum> want;
                        for (mask_t I : subsets_of_size(n, n - s)) {
                            if (mask_contains(I, 1)) continue;
                            want.insert({I, 0, std::nullopt});
                        }
                        if (got != want)
                            return "found " + std::to_string(got.size()) +
                                   " strata, expected " + std::to_string(want.size());
                        for (const BaseLocusStratum& st : bl) {
                            CycleClass cls =
                                cycle_h(ctx, s, st.ymask) - cycle_e(ctx, s, 1);
                            if (!st.cls || *st.cls != cls)
                                return "stratum class mismatch at " +
                                       mask_str(st.ymask);
                        }
                        return "";
                    });

            guarded(sr, "brute-force n=" + std::to_string(n) + " s=" + std::to_string(s),
                    [&]() -> std::string {
                        // all coordinate strata: per factor choose x_i = 0,
                        // y_i = 0, or neither
                        std::vector<std::pair<mask_t, mask_t>> vanishing;  // (ymask,xmask)
                        std::vector<int> choice(n, 0);
                        while (true) {
                            mask_t xz = 0, yz = 0;
                            for (int i = 0; i < n; ++i) {
                                if (choice[i] == 1) xz = mask_with(xz, i + 1);
                                if (choice[i] == 2) yz = mask_with(yz, i + 1);
                            }
                            bool kills_all = true;
                            for (const MHMonomial& m : sys.monomials)
                                if (!(m.xmask & xz) && !(m.ymask & yz)) {
                                    kills_all = false;
                                    break;
                                }
                            if (kills_all && (xz || yz)) vanishing.push_back({yz, xz});
                            int p = 0;
                            while (p < n && choice[p] == 2) choice[p++] = 0;
                            if (p == n) break;
                            ++choice[p];
                        }
                        std::set<BaseLocusStratum> minimal;
                        for (const auto& [yz, xz] : vanishing) {
                            bool is_min = true;
                            for (const auto& [yz2, xz2] : vanishing) {
                                if (yz2 == yz && xz2 == xz) continue;
                                if ((yz2 & ~yz) == 0 && (xz2 & ~xz) == 0) {
                                    is_min = false;
                                    break;
                                }
                            }
                            if (is_min) minimal.insert({yz, xz, std::nullopt});
                        }
                        auto bl = base_locus(sys);
                        std::set<BaseLocusStratum> got(bl.begin(), bl.end());
                        if (got != minimal)
                            return "oracle found " + std::to_string(minimal.size()) +
                                   " minimal strata, base_locus " +
                                   std::to_string(got.size());
                        return "";
                    });

            guarded(sr, "multiplicity n=" + std::to_string(n) + " s=" + std::to_string(s),
                    [&]() -> std::string {
                        auto [mult, witness] = multiplicity_along_L(sys);
                        if (mult != s)
                            return "multiplicity " + std::to_string(mult) +
                                   ", expected " + std::to_string(s);
                        if (std::find(sys.monomials.begin(), sys.monomials.end(),
                                      witness) == sys.monomials.end())
                            return "witness monomial not in the system";
                        mask_t tail = full_mask(n) & ~mask_t(1);
                        if (std::popcount(witness.ymask & tail) != s)
                            return "witness " + monomial_str(witness) +
                                   " does not achieve order " + std::to_string(s);
                        return "";
                    });

            if (s <= n - 2)
                guarded(sr, "recursion n=" + std::to_string(n) + " s=" + std::to_string(s),
                        [&]() -> std::string {
                            auto bl_s = base_locus(sys);
                            std::set<BaseLocusStratum> want(bl_s.begin(), bl_s.end());
                            std::set<BaseLocusStratum> got;
                            for (const BaseLocusStratum& st :
                                 base_locus(basis_Ws(n, s + 1))) {
                                MonomialSystem restricted =
                                    restrict_to_stratum(sys, st);
                                if (restricted.monomials.size() != 1)
                                    return "restriction to " + mask_str(st.ymask) +
                                           " keeps " +
                                           std::to_string(restricted.monomials.size()) +
                                           " monomials, expected 1";
                                for (const BaseLocusStratum& ext :
                                     zero_locus_on_stratum(
                                         n, restricted.monomials[0], st))
                                    got.insert(ext);
                            }
                            if (got != want)
                                return "union of restricted zero loci has " +
                                       std::to_string(got.size()) +
                                       " strata, base locus " +
                                       std::to_string(want.size());
                            return "";
                        });
        }
    return sr;
}

// ---------------------------------------------------------------------------
// lemma-tor: restriction to the exceptional divisor of the curve blowup.
// ---------------------------------------------------------------------------
SuiteResult verify_curve_quotient(int max_n) {
    if (max_n <= 0) max_n = 6;
    SuiteResult sr{"lemma-tor", {}, {}};
    // The curve blowup and its exceptional-divisor quotient need n >= 3
    // (the quotient target is P^1 x P^{n-2}).
    for (int n = 3; n <= max_n; ++n)
        for (int s = 1; s <= n - 1; ++s)
            guarded(sr, "restricted-system n=" + std::to_string(n) +
                            " s=" + std::to_string(s),
                    [&]() -> std::string {
                        RestrictedOnE R = restricted_system_on_E(n, s);
                        std::set<mask_t> got(R.monomials.begin(), R.monomials.end());
                        std::set<mask_t> want;
                        for (mask_t I : subsets_of_size(n, s))
                            if (!mask_contains(I, 1)) want.insert(I);
                        if (got != want)
                            return "monomial set mismatch (" +
                                   std::to_string(got.size()) + " vs " +
                                   std::to_string(want.size()) + ")";
                        for (int j = 2; j <= n; ++j)
                            if (fundamental_point_multiplicity(R, j) != s - 1)
                                return "multiplicity at point " + std::to_string(j) +
                                       " is not s-1";
                        return "";
                    });

    for (int n = 3; n <= max_n; ++n) {
        guarded(sr, "quotient-fan n=" + std::to_string(n), [&]() -> std::string {
            QuotientResult q = quotient_fan_exceptional(n);
            if (!fans_equal(q.fan, fan_p1_x_projective(n)))
                return "quotient fan is not the product fan";
            // recompute the expected image list: e_1 and rho_1 map to the
            // P^1 factor, -e_2..-e_n to the projective factor
            BlowupFan bf = build_preset(FanPreset::CurveBlowup, n);
            auto expect_image = [&](const IVec& src) -> IVec {
                IVec img(n - 1, Int(0));
                if (src == bf.fan.rays[0]) {  // e_1
                    img[0] = 1;
                    return img;
                }
                if (src == bf.fan.rays[2 * n]) {  // first subdivision ray
                    img[0] = -1;
                    return img;
                }
                for (int i = 2; i <= n - 1; ++i)
                    if (src == bf.fan.rays[n + i - 1]) {  // -e_i
                        img[i - 1] = 1;
                        return img;
                    }
                if (src == bf.fan.rays[2 * n - 1]) {  // -e_n
                    for (int t = 1; t <= n - 2; ++t) img[t] = -1;
                    return img;
                }
                throw error("unexpected source ray in the quotient");
            };
            for (const auto& [src, img] : q.ray_images)
                if (img != expect_image(src))
                    return "ray image mismatch";
            // matrix must annihilate the curve ray
            const IVec& rho2 = bf.fan.rays[bf.curve_ray_index];
            for (const IVec& row : q.matrix) {
                Int dot = 0;
                for (int i = 0; i < n; ++i) dot += row[i] * rho2[i];
                if (dot != 0) return "quotient matrix does not kill the curve ray";
            }
            return "";
        });

        guarded(sr, "cox-sections n=" + std::to_string(n), [&]() -> std::string {
            RingContext ctx{n, 2};
            for (int s = 1; s <= n - 1; ++s) {
                auto secs = cox_sections_Ws(n, s);
                Int count = 0;
                for (int t = s; t <= n - 1; ++t) count += binomial(n - 1, t);
                if (Int(secs.size()) != count)
                    return "s=" + std::to_string(s) + ": " +
                           std::to_string(secs.size()) + " sections, expected " +
                           count.str();
                CycleClass want(ctx, n - 1);
                for (int i = 2; i <= n; ++i) want.add_h(mask_with(0, i), Rat(1));
                want.add_e(1, Rat(-s));
                want.add_e(2, Rat(-s));
                for (const CoxMonomial& m : secs)
                    if (cox_monomial_class(n, m) != want)
                        return "section " + cox_monomial_str(n, m) +
                               " has the wrong class";
                auto restricted = cox_restrict_U2(secs);
                std::set<mask_t> got;
                for (const CoxMonomial& m : restricted) got.insert(m.smask);
                RestrictedOnE R = restricted_system_on_E(n, s);
                std::set<mask_t> want_masks(R.monomials.begin(), R.monomials.end());
                if (got != want_masks)
                    return "s=" + std::to_string(s) +
                           ": restriction does not match the degree-s system";
            }
            return "";
        });
    }
    return sr;
}

// ---------------------------------------------------------------------------
// lemma-con: W_1 ... W_k . Y = k! (sum_{1 in I} a_I - b_1).
// ---------------------------------------------------------------------------
SuiteResult verify_w_product(int max_n) {
    if (max_n <= 0) max_n = 5;
    SuiteResult sr{"lemma-con", {}, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k <= n - 1; ++k)
            guarded(sr, "basis " + std::to_string(n) + "," + std::to_string(k),
                    [&]() -> std::string {
                        RingContext ctx{n, 1};
                        Rat kf(factorial(k));
                        for (mask_t I : subsets_of_size(n, n - k)) {
                            auto res =
                                fiber_divisor_identity(n, k, cycle_h(ctx, k, I));
                            Rat expect = mask_contains(I, 1) ? kf : Rat(0);
                            if (res.product_degree != expect)
                                return "H_" + mask_str(I) + " gives " +
                                       res.product_degree.str();
                        }
                        auto plus = fiber_divisor_identity(n, k, cycle_e(ctx, k, 1));
                        if (plus.product_degree != kf)
                            return "E gives " + plus.product_degree.str();
                        auto minus =
                            fiber_divisor_identity(n, k, -cycle_e(ctx, k, 1));
                        if (minus.product_degree != -kf || minus.beta != 1)
                            return "-E gives " + minus.product_degree.str() +
                                   ", beta " + minus.beta.str();
                        return "";
                    });

    int randoms = 0;
    guarded(sr, "random-classes", [&]() -> std::string {
        DetRng rng(0xc0ffee03);
        while (randoms < 200) {
            int n = rng.uniform(2, max_n);
            int k = rng.uniform(1, n - 1);
            RingContext ctx{n, 1};
            CycleClass y(ctx, k);
            for (mask_t I : subsets_of_size(n, n - k))
                y.add_h(I, Rat(rng.uniform(-20, 20)));
            y.add_e(1, Rat(rng.uniform(-20, 20)));
            fiber_divisor_identity(n, k, y);  // throws if the identity fails
            ++randoms;
        }
        return "";
    });
    sr.facts.emplace_back("random_cases", std::to_string(randoms));
    return sr;
}

// ---------------------------------------------------------------------------
// prop-not: the product lift preserves coefficient sums, and the lifted class
// of a violating curve is certified outside CF_k.
// ---------------------------------------------------------------------------
SuiteResult verify_curve_lift(int max_n) {
    if (max_n <= 0) max_n = 6;
    SuiteResult sr{"prop-not", {}, {}};

    guarded(sr, "generator-to-generator", [&]() -> std::string {
        // a fiber generator lifts to a fiber generator: n=5, k=2, m=4
        RingContext base{4, 1};
        CycleClass c(base, 1);
        c.add_h(mask_with(mask_with(mask_with(0, 1), 2), 3), Rat(1));
        c.add_e(1, Rat(-1));
        CurveLift lift = curve_lift(5, 2, c);
        if (lift.violates_sum_inequality) return "generator reported as violating";
        RingContext ctx{5, 1};
        CycleClass want(ctx, 2);
        want.add_h(mask_with(mask_with(mask_with(0, 1), 2), 3), Rat(1));
        want.add_e(1, Rat(-1));
        if (lift.cls != want) return "lift is " + lift.cls.str();
        Membership m = cf_membership(fiber_cone(ctx, 2), lift.cls);
        if (!m.inside) return "lifted generator not inside CF_k";
        return "";
    });

    guarded(sr, "support-rule k=n-1", [&]() -> std::string {
        // curves on a two-factor product lift with support inside {1,2}
        RingContext base{2, 3};
        CycleClass c(base, 1);
        c.add_h(mask_with(0, 1), Rat(2));
        c.add_h(mask_with(0, 2), Rat(1));
        c.add_e(2, Rat(-1));
        CurveLift lift = curve_lift(4, 3, c);
        for (auto& [mask, a] : lift.cls.h_coeffs()) {
            (void)a;
            if (mask & ~mask_t(3)) return "support escapes the projection factors";
        }
        if (lift.sum_a != 3 || lift.sum_b != 1) return "sums not preserved";
        return "";
    });

    guarded(sr, "malformed-input", [&]() -> std::string {
        RingContext base{3, 1};
        CycleClass c(base, 1);
        c.add_h(mask_with(mask_with(0, 1), 2), Rat(-1));
        try {
            curve_lift(4, 2, c);
        } catch (const error&) {
            return "";
        }
        return "negative input accepted";
    });

    for (int n = 4; n <= max_n; ++n)
        for (int k = 2; k <= n - 2; ++k) {
            int m = n - k + 1;
            Int rr = factorial(m) + 1;
            if (rr > 130) continue;
            int r = static_cast<int>(rr);
            guarded(sr, "violation " + tag(n, k, r), [&]() -> std::string {
                RingContext base{m, r};
                CycleClass c(base, 1);
                for (mask_t I : subsets_of_size(m, m - 1))
                    c.add_h(I, Rat(factorial(m - 1)));
                for (int j = 1; j <= r; ++j) c.add_e(j, Rat(-1));
                CurveLift lift = curve_lift(n, k, c);
                if (lift.sum_a != Rat(factorial(m)) || lift.sum_b != r)
                    return "sums " + lift.sum_a.str() + "/" + lift.sum_b.str();
                if (!lift.violates_sum_inequality)
                    return "violation not detected";
                RingContext ctx{n, r};
                FiberCone cone = fiber_cone(ctx, k);
                Membership mem = cf_membership(cone, lift.cls);
                if (mem.inside) return "violating class reported inside CF_k";
                if (!mem.separator) return "no separating functional";
                if (mem.separator_pairing >= 0)
                    return "separator does not separate";
                for (const CycleClass& g : cone.generators)
                    if (pair_classes(g, *mem.separator) < 0)
                        return "separator is negative on a generator";
                return "";
            });
        }
    return sr;
}

// ---------------------------------------------------------------------------
// prop-4-4: deg(D1 . D2 . Y) = 2(sum a - sum b) on N_2 of the four-point
// blowup of (P^1)^4.
// ---------------------------------------------------------------------------
SuiteResult verify_d1d2(int max_n) {
    (void)max_n;
    SuiteResult sr{"prop-4-4", {}, {}};
    RingContext ctx{4, 4};

    guarded(sr, "basis-rows", [&]() -> std::string {
        int rows = 0;
        for (mask_t I : subsets_of_size(4, 2)) {
            auto res = d1d2_identity(cycle_h(ctx, 2, I));
            if (res.degree != 2)
                return "H_" + mask_str(I) + " gives " + res.degree.str();
            ++rows;
        }
        for (int j = 1; j <= 4; ++j) {
            auto plus = d1d2_identity(cycle_e(ctx, 2, j));
            auto minus = d1d2_identity(-cycle_e(ctx, 2, j));
            if (plus.degree != 2 || minus.degree != -2)
                return "E_" + std::to_string(j) + " rows give " +
                       plus.degree.str() + "/" + minus.degree.str();
            rows += 2;
        }
        if (rows != 14) return "expected 14 rows, ran " + std::to_string(rows);
        return "";
    });

    guarded(sr, "intersection-class", [&]() -> std::string {
        CycleClass dd = d1d2_intersection_class();
        CycleClass via_chow = from_chow(to_chow(d1_class()) * to_chow(d2_class()), 2);
        if (dd != via_chow)
            return "closed form " + dd.str() + " vs chow " + via_chow.str();
        auto res = d1d2_identity(dd);
        if (res.degree != 8) return "degree " + res.degree.str();
        if (res.sum_a - res.sum_b != 4)
            return "sum gap " + (res.sum_a - res.sum_b).str();
        return "";
    });

    guarded(sr, "random-combinations", [&]() -> std::string {
        DetRng rng(0xc0ffee04);
        for (int t = 0; t < 50; ++t) {
            CycleClass y(ctx, 2);
            for (mask_t I : subsets_of_size(4, 2))
                y.add_h(I, make_rat(rng.uniform(-12, 12), rng.uniform(1, 4)));
            for (int j = 1; j <= 4; ++j)
                y.add_e(j, make_rat(rng.uniform(-12, 12), rng.uniform(1, 4)));
            d1d2_identity(y);  // self-checking
        }
        return "";
    });

    sr.facts.emplace_back("self_intersection_degree", "8");
    sr.facts.emplace_back("sum_gap", "4");
    return sr;
}

// ---------------------------------------------------------------------------
// phi: unimodularity, inverse round trip, and the divisor transport example.
// ---------------------------------------------------------------------------
SuiteResult verify_picard_map(int max_n) {
    if (max_n <= 0) max_n = 6;
    SuiteResult sr{"phi", {}, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int r = 1; r <= 4; ++r)
            guarded(sr, "unimodular n=" + std::to_string(n) + " r=" + std::to_string(r),
                    [&]() -> std::string {
                        PicardBasisChange m = phi_map(n, r);
                        Int det = phi_det(m);
                        if (det != 1 && det != -1) return "det " + det.str();
                        DetRng rng(0xc0ffee05 + n * 16 + r);
                        int d = n + r;
                        for (int t = 0; t < 5; ++t) {
                            QVec c(d);
                            for (int i = 0; i < d; ++i)
                                c[i] = make_rat(rng.uniform(-9, 9),
                                                rng.uniform(1, 3));
                            if (phi_backward(m, phi_forward(m, c)) != c)
                                return "round trip failed";
                        }
                        return "";
                    });

    if (max_n >= 4)
        guarded(sr, "divisor-transport", [&]() -> std::string {
            PicardBasisChange m = phi_map(4, 3);
            QVec c(7, Rat(0));
            c[0] = 1;
            c[1] = -1;
            c[2] = -1;
            c[5] = -1;
            c[6] = -1;
            CycleClass img = phi_forward(m, c);
            RingContext ctx{4, 3};
            CycleClass want(ctx, 3);
            want.add_h(mask_with(0, 1), Rat(1));
            want.add_h(mask_with(0, 2), Rat(1));
            for (int j = 1; j <= 3; ++j) want.add_e(j, Rat(-1));
            if (img != want) return "image " + img.str();
            sr.facts.emplace_back("transport_image", img.str());
            return "";
        });
    return sr;
}

// ---------------------------------------------------------------------------
// status: generation status against an independently tabulated bounds table.
// ---------------------------------------------------------------------------
SuiteResult verify_status_table(int max_n) {
    if (max_n <= 0) max_n = 6;
    SuiteResult sr{"status", {}, {}};
    // (n, k, last fiber-generated r, last open r) for 0 <= r <= 10; beyond
    // the open bound the cone is not fiber-generated
    struct Row {
        int n, k, fg_up_to, open_up_to;
    };
    const Row table[] = {
        {2, 1, 2, 2},   {3, 1, 6, 6},   {3, 2, 2, 2},  {4, 1, 10, 10},
        {4, 2, 4, 6},   {4, 3, 2, 2},   {5, 1, 10, 10}, {5, 2, 4, 10},
        {5, 3, 3, 6},   {5, 4, 2, 2},   {6, 1, 10, 10}, {6, 2, 5, 10},
        {6, 3, 4, 10},  {6, 4, 3, 6},   {6, 5, 2, 2},
    };
    for (const Row& row : table) {
        if (row.n > max_n) continue;
        guarded(sr, "table n=" + std::to_string(row.n) + " k=" + std::to_string(row.k),
                [&]() -> std::string {
                    std::string prev = "fiber-generated";
                    for (int r = 0; r <= 10; ++r) {
                        std::string expect =
                            r <= row.fg_up_to
                                ? "fiber-generated"
                                : (r <= row.open_up_to ? "open"
                                                       : "not-fiber-generated");
                        BoundReport rep = status(row.n, row.k, r);
                        if (rep.status != expect)
                            return "r=" + std::to_string(r) + ": got " + rep.status +
                                   ", expected " + expect;
                        // monotone: the status only ever degrades as r grows
                        if ((prev == "open" && rep.status == "fiber-generated") ||
                            (prev == "not-fiber-generated" &&
                             rep.status != "not-fiber-generated"))
                            return "status not monotone at r=" + std::to_string(r);
                        prev = rep.status;
                    }
                    return "";
                });
    }

    guarded(sr, "mori-dream-table", [&]() -> std::string {
        const int boundary[][2] = {{2, 7}, {3, 6}, {4, 5}, {5, 4}, {7, 4}};
        for (const auto& b : boundary) {
            if (!is_mori_dream(b[0], b[1]))
                return "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) +
                       ") should be a Mori dream space";
            if (b[0] >= 5) continue;  // the >=5 column has no n-specific bound
            if (is_mori_dream(b[0], b[1] + 1))
                return "(" + std::to_string(b[0]) + "," + std::to_string(b[1] + 1) +
                       ") should not be a Mori dream space";
        }
        if (is_mori_dream(5, 5) || is_mori_dream(7, 5))
            return "r=5 accepted in the >=5 column";
        return "";
    });
    return sr;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "pairing",  "lemma-num", "lemma-bs", "lemma-tor", "prop-tor", "lemma-con",
        "thm-linear", "prop-not", "prop-4-4", "phi",      "lemma-fg", "status"};
    return names;
}

SuiteResult run_verify_suite(const std::string& name, int max_n) {
    if (name == "pairing") return verify_pairing(max_n);
    if (name == "lemma-num") return verify_decomposition(max_n);
    if (name == "lemma-bs") return verify_base_loci(max_n);
    if (name == "lemma-tor") return verify_curve_quotient(max_n);
    if (name == "prop-tor") return verify_toric_tables(max_n);
    if (name == "lemma-con") return verify_w_product(max_n);
    if (name == "thm-linear") return verify_boundary(max_n);
    if (name == "prop-not") return verify_curve_lift(max_n);
    if (name == "prop-4-4") return verify_d1d2(max_n);
    if (name == "phi") return verify_picard_map(max_n);
    if (name == "lemma-fg") return verify_dual_rays(max_n);
    if (name == "status") return verify_status_table(max_n);
    throw error("unknown verify suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(int max_n) {
    std::vector<SuiteResult> out;
    for (const std::string& name : verify_suite_names())
        out.push_back(run_verify_suite(name, max_n));
    return out;
}

}  // namespace cyclecone
