#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cyclecone/combinatorics.hpp"
#include "cyclecone/cycles.hpp"
#include "cyclecone/polyhedral.hpp"

using namespace cyclecone;

namespace {

std::vector<QVec> cf_generator_vectors(RingContext ctx, int k) {
    std::vector<QVec> out;
    for (const auto& g : fiber_cone(ctx, k).generators)
        out.push_back(cycle_to_vector(g));
    return out;
}

// Pairing-dual coordinates of a class in N_{n-k}, as a functional on N_k.
QVec transport(const CycleClass& d, int n, int k, int r) {
    QVec y;
    for (mask_t I : subsets_of_size(n, n - k))
        y.push_back(d.h_coeff(full_mask(n) & ~I));
    for (int j = 1; j <= r; ++j) y.push_back(-d.e_coeff(j));
    return y;
}

}  // namespace

TEST_CASE("orthant is self-dual") {
    std::vector<QVec> gens = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    RationalCone c = cone_from_generators(3, gens);
    RationalCone d = dualize(c);
    std::set<QVec> rays(d.generators.begin(), d.generators.end());
    CHECK(rays == std::set<QVec>(gens.begin(), gens.end()));
}

TEST_CASE("dualize is an involution") {
    std::vector<QVec> gens = {{1, 0}, {1, 2}};
    RationalCone c = cone_from_generators(2, gens);
    RationalCone dd = dualize(dualize(c));
    std::set<QVec> back(dd.generators.begin(), dd.generators.end());
    CHECK(back == std::set<QVec>(gens.begin(), gens.end()));
}

TEST_CASE("redundant generators are dropped by extremal_rays") {
    RationalCone c = cone_from_generators(2, {{1, 0}, {1, 1}, {0, 1}});
    std::vector<QVec> rays = extremal_rays(c);
    CHECK(rays == std::vector<QVec>{{0, 1}, {1, 0}});
}

TEST_CASE("dual of the fiber cone matches the closed form") {
    struct Tuple {
        int n, k, r;
    };
    for (Tuple t : {Tuple{2, 1, 1}, Tuple{2, 1, 2}, Tuple{3, 1, 2}, Tuple{3, 2, 2}}) {
        RingContext ctx{t.n, t.r};
        int dim = static_cast<int>(subsets_of_size(t.n, t.n - t.k).size()) + t.r;
        RationalCone c = cone_from_generators(dim, cf_generator_vectors(ctx, t.k));
        RationalCone d = dualize(c);
        std::size_t want =
            subsets_of_size(t.n, t.k).size() + (std::size_t(1) << t.r) - 1;
        CHECK(d.generators.size() == want);

        std::set<QVec> dd(d.generators.begin(), d.generators.end());
        std::set<QVec> closed;
        for (const auto& ray : dual_rays(fiber_cone(ctx, t.k)))
            closed.insert(transport(ray, t.n, t.k, t.r));
        CHECK(dd == closed);
    }
}

TEST_CASE("fiber cone generators are all extremal at small size") {
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= 2; ++r)
            for (int k = 1; k <= n - 1; ++k) {
                RingContext ctx{n, r};
                std::vector<QVec> gens = cf_generator_vectors(ctx, k);
                int dim = static_cast<int>(subsets_of_size(n, n - k).size()) + r;
                std::vector<QVec> rays = extremal_rays(cone_from_generators(dim, gens));
                std::size_t want = std::size_t(r) * subsets_of_size(n, k).size() + r;
                CHECK(gens.size() == want);
                CHECK(rays.size() == gens.size());
            }
}

TEST_CASE("containment with certificates") {
    RationalCone orthant = cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    ContainsResult in = contains(orthant, {1, 2, 3});
    REQUIRE(in.inside);
    CHECK(in.combination == QVec{1, 2, 3});

    ContainsResult out = contains(orthant, {-1, 0, 0});
    REQUIRE_FALSE(out.inside);
    CHECK(dot(out.separator, {-1, 0, 0}) < 0);
    for (const auto& g : orthant.generators) CHECK(dot(out.separator, g) >= 0);
    // For the orthant the separating functional is the violated axis itself.
    CHECK(out.separator == QVec{1, 0, 0});
}

TEST_CASE("the three-point divisor vector is outside CF_1") {
    RingContext ctx{2, 3};
    RationalCone c = cone_from_generators(5, cf_generator_vectors(ctx, 1));
    // H_1 + H_2 - E_1 - E_2 - E_3 in coordinates.
    QVec v = {1, 1, -1, -1, -1};
    ContainsResult res = contains(c, v);
    CHECK_FALSE(res.inside);
    CHECK(dot(res.separator, v) < 0);
}

TEST_CASE("farkas solver certifies both outcomes") {
    std::vector<QVec> gens = {{1, 1, 0}, {0, 1, 1}};
    FarkasResult yes = solve_nonneg_combination(gens, {2, 5, 3});
    REQUIRE(yes.feasible);
    REQUIRE(yes.combination.size() == 2);
    CHECK(yes.combination[0] == 2);
    CHECK(yes.combination[1] == 3);

    FarkasResult no = solve_nonneg_combination(gens, {1, 0, 0});
    REQUIRE_FALSE(no.feasible);
    CHECK(dot(no.separator, {1, 0, 0}) < 0);
    for (const auto& g : gens) CHECK(dot(no.separator, g) >= 0);
}

TEST_CASE("general linear feasibility") {
    // x + y = 2, x - y >= 0, y >= 1 is satisfied only by x = y = 1.
    std::vector<LinearRow> rows = {
        {{1, 1}, Rel::Eq, 2},
        {{1, -1}, Rel::Ge, 0},
        {{0, 1}, Rel::Ge, 1},
    };
    QVec w;
    REQUIRE(linear_feasible(rows, 2, &w));
    CHECK(w == QVec{1, 1});

    rows.push_back({{0, 1}, Rel::Le, make_rat(1, 2)});
    CHECK_FALSE(linear_feasible(rows, 2));
}

TEST_CASE("matrix rank and kernel") {
    std::vector<QVec> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    QVec kernel;
    CHECK(matrix_rank(rows, 3, &kernel) == 2);
    REQUIRE(kernel.size() == 3);
    CHECK_FALSE(is_zero_vec(kernel));
    CHECK(dot(rows[0], kernel) == 0);
    CHECK(dot(rows[2], kernel) == 0);

    CHECK(matrix_rank({{1, 0}, {0, 1}}, 2) == 2);
    CHECK(matrix_rank({}, 4) == 0);
}

TEST_CASE("non-pointed cones are refused with a line certificate") {
    try {
        extremal_rays(cone_from_generators(2, {{1, 0}, {-1, 0}, {0, 1}}));
        FAIL("expected nonpointed_error");
    } catch (const nonpointed_error& e) {
        REQUIRE(e.line.size() == 2);
        CHECK_FALSE(is_zero_vec(e.line));
        CHECK(e.line[1] == 0);  // the line is the x-axis
    }
}

TEST_CASE("dimension cap raises resource_error") {
    Limits tight;
    tight.dim_limit = 3;
    std::vector<QVec> gens;
    for (int i = 0; i < 4; ++i) {
        QVec g(4, 0);
        g[i] = 1;
        gens.push_back(g);
    }
    RationalCone c = cone_from_generators(4, gens);
    CHECK_THROWS_AS(dualize(c, tight), resource_error);
    CHECK_THROWS_AS(extremal_rays(c, tight), resource_error);
    // The default cap admits this size.
    CHECK(dualize(c).generators.size() == 4);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(cone_from_generators(2, {{1, 0, 0}}), error);  // wrong length
    CHECK_THROWS_AS(cone_from_generators(0, {}), error);
    // The zero vector is not a ray.
    CHECK_THROWS_AS(cone_from_generators(2, {{0, 0}}), error);
}

TEST_CASE("dd rays from an inequality description") {
    // { x >= 0, y >= 0, x + y - z >= 0, z >= 0 } in R^3: extremal rays are the
    // axes x, y and the two slanted rays x + z, y + z.
    std::vector<QVec> rows = {{1, 0, 0}, {0, 1, 0}, {1, 1, -1}, {0, 0, 1}};
    std::vector<QVec> rays = dd_extremal_rays(rows, 3);
    std::set<QVec> got(rays.begin(), rays.end());
    std::set<QVec> want = {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    CHECK(got == want);
    CHECK(std::is_sorted(rays.begin(), rays.end()));
}
