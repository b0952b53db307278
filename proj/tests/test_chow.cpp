#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclecone/chow.hpp"

using namespace cyclecone;

TEST_CASE("generator construction and index validation") {
    RingContext ctx{2, 1};
    ChowElement h1 = make_generator(ctx, 'h', 1);
    CHECK(h1.terms().size() == 1);
    CHECK(h1.str() == "H{1}");

    ChowElement e1 = make_generator(ctx, 'e', 1);
    CHECK(e1.terms().size() == 1);
    CHECK(e1.str() == "E1");

    CHECK_THROWS_AS(make_generator(ctx, 'e', 2), error);
    CHECK_THROWS_AS(make_generator(ctx, 'h', 0), error);
    CHECK_THROWS_AS(make_generator(ctx, 'h', 3), error);
    CHECK_THROWS_AS(make_generator(ctx, 'x', 1), error);
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(RingContext(1, 0), error);
    CHECK_THROWS_AS(RingContext(2, -1), error);
    RingContext a{2, 0};
    RingContext b{2, 1};
    ChowElement x = make_generator(a, 'h', 1);
    ChowElement y = make_generator(b, 'h', 1);
    CHECK_THROWS_AS(x * y, error);
    CHECK_THROWS_AS(x + y, error);
}

TEST_CASE("square-free H relations") {
    RingContext ctx{3, 0};
    ChowElement h1 = make_generator(ctx, 'h', 1);
    ChowElement h2 = make_generator(ctx, 'h', 2);
    ChowElement prod = h1 * h2;
    CHECK(prod.str() == "H{1,2}");
    CHECK((h1 * h1).is_zero());
}

TEST_CASE("exceptional powers and the canonical rewrite") {
    // e_1^2 with n=3 stays the monomial E_1^2; as a curve class it is -E_{1,1}.
    RingContext ctx3{3, 1};
    ChowElement e1 = make_generator(ctx3, 'e', 1);
    ChowElement sq = e1 * e1;
    CHECK(sq.str() == "E1^2");

    // e_1^2 with n=2 hits the top rewrite e_j^n = (-1)^{n-1} H{1..n}.
    RingContext ctx2{2, 1};
    ChowElement f1 = make_generator(ctx2, 'e', 1);
    ChowElement top = f1 * f1;
    CHECK(top.str() == "-H{1,2}");

    // Mixed H.E monomials vanish.
    ChowElement h1 = make_generator(ctx2, 'h', 1);
    CHECK((h1 * f1).is_zero());

    // Distinct exceptional classes multiply to zero.
    RingContext ctx32{3, 2};
    ChowElement a = make_generator(ctx32, 'e', 1);
    ChowElement b = make_generator(ctx32, 'e', 2);
    CHECK((a * b).is_zero());
}

TEST_CASE("degree map") {
    RingContext ctx{3, 1};
    ChowElement h1 = make_generator(ctx, 'h', 1);
    ChowElement h2 = make_generator(ctx, 'h', 2);
    ChowElement h3 = make_generator(ctx, 'h', 3);
    CHECK(degree(h1 * h2 * h3) == 1);

    // e_1^3 = (-1)^2 H{1,2,3}, so its degree is 1.
    ChowElement e1 = make_generator(ctx, 'e', 1);
    CHECK(degree(e1 * e1 * e1) == 1);

    // The degree map rejects elements that are not 0-cycles.
    CHECK_THROWS_AS(degree(h1 * h2), error);
    CHECK_THROWS_AS(degree(h1 + h1 * h2), error);
    // h_1 e_1 is the zero element (mixed monomials vanish), so degree 0.
    CHECK(degree(h1 * e1) == 0);
    CHECK(degree(chow_zero(ctx)) == 0);
}

TEST_CASE("self-intersection of the balanced divisor") {
    // (sum h_i - sum e_j)^n has degree n! - r; sign flips at r = n!+1.
    RingContext ctx{2, 3};
    ChowElement d = hyperplane_minus_exceptional(ctx);
    CHECK(degree(self_intersection(d, 2)) == -1);

    RingContext ctx0{2, 0};
    ChowElement s = hyperplane_minus_exceptional(ctx0);
    ChowElement s2 = self_intersection(s, 2);
    CHECK(degree(s2) == 2);
    // (h_1 + h_2)^2 = 2 H{1,2}.
    ChowElement expect = (make_generator(ctx0, 'h', 1) * make_generator(ctx0, 'h', 2)) * Rat(2);
    CHECK(s2 == expect);

    // (h_1)^2 = 0.
    ChowElement h1 = make_generator(ctx0, 'h', 1);
    CHECK(self_intersection(h1, 2).is_zero());
}

TEST_CASE("homogeneity reporting") {
    RingContext ctx{3, 1};
    ChowElement h1 = make_generator(ctx, 'h', 1);
    ChowElement h2 = make_generator(ctx, 'h', 2);
    ChowElement e1 = make_generator(ctx, 'e', 1);

    int deg = 0;
    CHECK(h1.is_homogeneous(&deg));
    CHECK(deg == 1);

    ChowElement c = h1 * h2 + e1 * e1;
    CHECK(c.is_homogeneous(&deg));
    CHECK(deg == 2);

    ChowElement mixed = h1 + h1 * h2;
    CHECK_FALSE(mixed.is_homogeneous());

    CHECK(chow_zero(ctx).is_homogeneous(&deg));
    CHECK(deg == -1);
}

TEST_CASE("ring axioms on small elements") {
    RingContext ctx{3, 2};
    ChowElement h1 = make_generator(ctx, 'h', 1);
    ChowElement h2 = make_generator(ctx, 'h', 2);
    ChowElement e1 = make_generator(ctx, 'e', 1);
    ChowElement e2 = make_generator(ctx, 'e', 2);

    ChowElement a = h1 + e1 * Rat(2);
    ChowElement b = h2 - e2;
    ChowElement c = h1 * h2 + e1;

    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * chow_unit(ctx) == a);
    CHECK((a * chow_zero(ctx)).is_zero());
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
}

TEST_CASE("unit and zero rendering") {
    RingContext ctx{2, 0};
    CHECK(chow_unit(ctx).str() == "1");
    CHECK(chow_zero(ctx).str() == "0");
}
