#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cyclecone/combinatorics.hpp"
#include "cyclecone/linsys.hpp"

using namespace cyclecone;

namespace {

mask_t mask_of(std::initializer_list<int> xs) {
    mask_t m = 0;
    for (int x : xs) m = mask_with(m, x);
    return m;
}

std::set<std::pair<mask_t, mask_t>> monomial_set(const MonomialSystem& sys) {
    std::set<std::pair<mask_t, mask_t>> out;
    for (const auto& m : sys.monomials) out.insert({m.xmask, m.ymask});
    return out;
}

}  // namespace

TEST_CASE("monomial basis of the tangent systems") {
    // n=2, s=1: the single monomial y_2.
    MonomialSystem w21 = basis_Ws(2, 1);
    CHECK(monomial_set(w21) ==
          std::set<std::pair<mask_t, mask_t>>{{0, mask_of({2})}});

    // n=3, s=1: x_3 y_2, x_2 y_3, y_2 y_3.
    MonomialSystem w31 = basis_Ws(3, 1);
    std::set<std::pair<mask_t, mask_t>> want31 = {
        {mask_of({3}), mask_of({2})},
        {mask_of({2}), mask_of({3})},
        {0, mask_of({2, 3})},
    };
    CHECK(monomial_set(w31) == want31);

    // n=4, s=3: only y_2 y_3 y_4.
    MonomialSystem w43 = basis_Ws(4, 3);
    CHECK(monomial_set(w43) ==
          std::set<std::pair<mask_t, mask_t>>{{0, mask_of({2, 3, 4})}});

    // Count: subsets of {2..n} with |I| >= s.
    for (int n = 2; n <= 6; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            std::size_t count = 0;
            for (int t = s; t <= n - 1; ++t)
                count += static_cast<std::size_t>(binomial(n - 1, t));
            CHECK(basis_Ws(n, s).monomials.size() == count);
        }

    CHECK_THROWS_AS(basis_Ws(3, 0), error);
    CHECK_THROWS_AS(basis_Ws(3, 3), error);
}

TEST_CASE("the divisor class of the system") {
    MonomialSystem sys = basis_Ws(4, 2);
    REQUIRE(sys.divisor_class.has_value());
    RingContext ctx{4, 1};
    CycleClass want(ctx, 3);
    for (int i = 2; i <= 4; ++i) want.add_h(mask_with(0, i), 1);
    want.add_e(1, -2);
    CHECK(*sys.divisor_class == want);
}

TEST_CASE("monomial rendering") {
    MHMonomial m;
    m.xmask = mask_of({3});
    m.ymask = mask_of({2});
    CHECK(monomial_str(m) == "y2x3");
    MHMonomial unit;
    CHECK(monomial_str(unit) == "1");
}

TEST_CASE("base locus: the pinned small cases") {
    // |W_1| on n=3: the single stratum {y_2 = y_3 = 0}, the curve L.
    std::vector<BaseLocusStratum> bl1 = base_locus(basis_Ws(3, 1));
    REQUIRE(bl1.size() == 1);
    CHECK(bl1[0].ymask == mask_of({2, 3}));
    CHECK(bl1[0].xmask == 0);
    REQUIRE(bl1[0].cls.has_value());
    RingContext ctx{3, 1};
    CHECK(*bl1[0].cls == cycle_h(ctx, 1, mask_of({2, 3})) - cycle_e(ctx, 1, 1));

    // |W_2| on n=3: strata {y_2}, {y_3} with plane classes.
    std::vector<BaseLocusStratum> bl2 = base_locus(basis_Ws(3, 2));
    REQUIRE(bl2.size() == 2);
    std::set<mask_t> ymasks;
    for (const auto& st : bl2) {
        CHECK(st.xmask == 0);
        ymasks.insert(st.ymask);
        REQUIRE(st.cls.has_value());
        CHECK(*st.cls == cycle_h(ctx, 2, st.ymask) - cycle_e(ctx, 2, 1));
    }
    CHECK(ymasks == std::set<mask_t>{mask_of({2}), mask_of({3})});
}

TEST_CASE("base locus: stratum count across the range") {
    for (int n = 2; n <= 6; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            std::vector<BaseLocusStratum> bl = base_locus(basis_Ws(n, s));
            CHECK(bl.size() ==
                  static_cast<std::size_t>(binomial(n - 1, n - s)));
            for (const auto& st : bl) {
                CHECK(st.xmask == 0);
                CHECK_FALSE(mask_contains(st.ymask, 1));
                CHECK(subsets_of_size(n, n - s).size() > 0);
            }
        }
}

TEST_CASE("base locus: brute-force cross-check at n=4") {
    // Every coordinate stratum on which all monomials vanish must contain one
    // of the reported strata.
    int n = 4;
    for (int s = 1; s <= 3; ++s) {
        MonomialSystem sys = basis_Ws(n, s);
        std::vector<BaseLocusStratum> bl = base_locus(sys);
        // Walk all assignments: each factor is generic (0), x_i = 0 (1), or
        // y_i = 0 (2).
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            int c = code;
            mask_t xz = 0, yz = 0;
            for (int i = 1; i <= n; ++i) {
                int choice = c % 3;
                c /= 3;
                if (choice == 1) xz = mask_with(xz, i);
                if (choice == 2) yz = mask_with(yz, i);
            }
            bool kills_all = true;
            for (const auto& m : sys.monomials)
                if ((m.xmask & xz) == 0 && (m.ymask & yz) == 0) kills_all = false;
            bool covered = false;
            for (const auto& st : bl)
                if ((st.ymask & ~yz) == 0 && (st.xmask & ~xz) == 0) covered = true;
            CHECK(kills_all == covered);
        }
    }
}

TEST_CASE("multiplicity along the central fiber") {
    for (int n = 2; n <= 6; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            auto [mult, witness] = multiplicity_along_L(basis_Ws(n, s));
            CHECK(mult == s);
            CHECK(std::popcount(witness.ymask) == s);
        }

    // Hand-built systems.
    MonomialSystem xs;
    xs.n = 3;
    xs.monomials.push_back(MHMonomial{mask_of({2, 3}), 0});
    CHECK(multiplicity_along_L(xs).first == 0);

    MonomialSystem ys;
    ys.n = 3;
    ys.monomials.push_back(MHMonomial{0, mask_of({2, 3})});
    CHECK(multiplicity_along_L(ys).first == 2);

    MonomialSystem empty;
    empty.n = 3;
    CHECK_THROWS_AS(multiplicity_along_L(empty), error);
}

TEST_CASE("restriction to a stratum and the recursion step") {
    // Restrict |W_1| (n=3) to the stratum {y_2 = 0} coming from bl(|W_2|):
    // only x_2 y_3 survives, and its zero locus there is {y_2 = y_3 = 0} = L.
    MonomialSystem w1 = basis_Ws(3, 1);
    BaseLocusStratum st;
    st.ymask = mask_of({2});
    MonomialSystem restricted = restrict_to_stratum(w1, st);
    REQUIRE(restricted.monomials.size() == 1);
    CHECK(restricted.monomials[0].xmask == mask_of({2}));
    CHECK(restricted.monomials[0].ymask == mask_of({3}));

    std::vector<BaseLocusStratum> zl =
        zero_locus_on_stratum(3, restricted.monomials[0], st);
    REQUIRE(zl.size() == 1);
    CHECK(zl[0].ymask == mask_of({2, 3}));
    CHECK(zl[0].xmask == 0);

    // Restricting to the empty stratum is the identity.
    BaseLocusStratum empty;
    MonomialSystem same = restrict_to_stratum(w1, empty);
    CHECK(monomial_set(same) == monomial_set(w1));

    // One survivor on every bl(|W_{s+1}|) stratum, for the full range.
    for (int n = 3; n <= 6; ++n)
        for (int s = 1; s <= n - 2; ++s) {
            MonomialSystem ws = basis_Ws(n, s);
            for (const auto& stratum : base_locus(basis_Ws(n, s + 1)))
                CHECK(restrict_to_stratum(ws, stratum).monomials.size() == 1);
        }
}

TEST_CASE("restricted system on the exceptional divisor") {
    RestrictedOnE r42 = restricted_system_on_E(4, 2);
    std::set<mask_t> got(r42.monomials.begin(), r42.monomials.end());
    CHECK(got == std::set<mask_t>{mask_of({2, 3}), mask_of({2, 4}), mask_of({3, 4})});

    RestrictedOnE r31 = restricted_system_on_E(3, 1);
    std::set<mask_t> got31(r31.monomials.begin(), r31.monomials.end());
    CHECK(got31 == std::set<mask_t>{mask_of({2}), mask_of({3})});

    CHECK_THROWS_AS(restricted_system_on_E(2, 1), error);
    CHECK_THROWS_AS(restricted_system_on_E(4, 0), error);
    CHECK_THROWS_AS(restricted_system_on_E(4, 4), error);
}

TEST_CASE("multiplicity at the fundamental points") {
    for (int n = 3; n <= 6; ++n)
        for (int s = 1; s <= n - 1; ++s) {
            RestrictedOnE sys = restricted_system_on_E(n, s);
            for (int j = 2; j <= n; ++j)
                CHECK(fundamental_point_multiplicity(sys, j) == s - 1);
        }
    RestrictedOnE sys = restricted_system_on_E(3, 1);
    CHECK_THROWS_AS(fundamental_point_multiplicity(sys, 1), error);
    CHECK_THROWS_AS(fundamental_point_multiplicity(sys, 4), error);
}
