#include <cmath>

#include "doctest.h"
#include "diskhop/geometry.hpp"

using namespace diskhop;

TEST_CASE("weighted distance") {
    CHECK(weighted_distance({3, 4}, make_site(0, 0, 0, 2)) == doctest::Approx(3.0));
    CHECK(weighted_distance({0, 0}, make_site(0, 0, 0, 1.5)) == doctest::Approx(-1.5));
    CHECK(weighted_distance({1, 0}, make_site(0, 0, 0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("edge predicate") {
    CHECK(edge_predicate(make_site(0, 0, 0, 1), make_site(1, 2, 0, 1)));
    CHECK_FALSE(edge_predicate(make_site(0, 0, 0, 1), make_site(1, 2.1, 0, 1)));
    CHECK(edge_predicate(make_site(0, 0, 0, 5), make_site(1, 1, 0, 1)));
    // tangency decided exactly: 0.1 + 0.2 is not 0.3 in binary
    CHECK(edge_predicate(make_site(0, 0, 0, 0.1), make_site(1, 0.3, 0, 0.2)));
    CHECK_FALSE(edge_predicate(make_site(0, 0, 0, 0.1), make_site(1, 0.300000001, 0, 0.2)));
}

TEST_CASE("domination predicate") {
    CHECK(domination_predicate(make_site(0, 1, 0, 1), make_site(1, 0, 0, 5)));
    CHECK_FALSE(domination_predicate(make_site(0, 0, 0, 1), make_site(1, 3, 0, 1)));
    CHECK(domination_predicate(make_site(3, 0, 0, 1), make_site(1, 0, 0, 1)));
    CHECK_FALSE(domination_predicate(make_site(1, 0, 0, 1), make_site(3, 0, 0, 1)));
    // internal tangency still dominates
    CHECK(domination_predicate(make_site(0, 4, 0, 1), make_site(1, 0, 0, 5)));
}

TEST_CASE("compare weighted") {
    auto a = make_site(0, 0, 0, 0), b = make_site(1, 2, 0, 0);
    CHECK(compare_weighted({1, 0}, a, b) == Ordering::equal);
    CHECK(compare_weighted({0, 0}, make_site(0, 0, 0, 1), make_site(1, 10, 0, 1)) == Ordering::less);
    CHECK(compare_weighted({2.5, 0}, make_site(0, 0, 0, 1), make_site(1, 4, 0, 0)) == Ordering::equal);
    CHECK(compare_weighted({5, 0}, a, b) == Ordering::greater);
}

TEST_CASE("apollonius vertex, equal radii give the circumcenter") {
    for (double r : {0.0, 1.0}) {
        auto pts = apollonius_vertex(make_site(0, 0, 0, r), make_site(1, 4, 0, r), make_site(2, 2, 3, r));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].p.x == doctest::Approx(2.0));
        CHECK(pts[0].p.y == doctest::Approx(5.0 / 6.0));
    }
}

TEST_CASE("apollonius vertex, unequal radii") {
    Disk a{0, 0, 2}, b{6, 0, 1}, c{3, 5, 0};
    auto pts = apollonius_vertex(a, b, c);
    // frozen from a grid-refinement search minimizing the larger pairwise residual
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].p.x == doctest::Approx(3.665444284288).epsilon(1e-9));
    CHECK(pts[0].p.y == doctest::Approx(2.597799711718).epsilon(1e-9));
    CHECK(pts[0].rho == doctest::Approx(2.492665705728).epsilon(1e-9));
    CHECK(apex_residual(pts[0], a, b, c) < 1e-9);
    ApexPoint buf[2];
    CHECK(apollonius_vertex(a, b, c, buf) == 1);
}

TEST_CASE("apollonius vertex, collinear equal radii has none") {
    auto pts = apollonius_vertex(make_site(0, 0, 0, 1), make_site(1, 1, 0, 1), make_site(2, 2, 0, 1));
    CHECK(pts.empty());
}

TEST_CASE("decimal grid") {
    CHECK(parse_decimal("1.5") == 1'500'000'000LL);
    CHECK(parse_decimal("-0.000000001") == -1LL);
    CHECK(parse_decimal(".25") == 250'000'000LL);
    CHECK(parse_decimal("1e-3") == 1'000'000LL);
    CHECK_FALSE(parse_decimal("abc"));
    CHECK_FALSE(parse_decimal("1.2.3"));
    CHECK_FALSE(parse_decimal("5e10"));
    CHECK(format_decimal(1'500'000'000LL) == "1.5");
    CHECK(format_decimal(-1) == "-0.000000001");
    CHECK(format_decimal(0) == "0");
    CHECK(to_mantissa(0.1) == 100'000'000LL);
}

TEST_CASE("bisector of equal disks is the perpendicular bisector") {
    auto arc = make_bisector(make_site(0, 0, 0, 1), make_site(1, 4, 0, 1));
    CHECK(arc.kind == BisectorArc::Kind::line);
    for (double t : {-3.0, 0.0, 2.0}) CHECK(arc.at(t).x == doctest::Approx(2.0));
}

TEST_CASE("bisector of unequal disks is a hyperbola branch") {
    auto u = make_site(0, 0, 0, 2), v = make_site(1, 6, 0, 1);
    auto arc = make_bisector(u, v);
    CHECK(arc.kind == BisectorArc::Kind::hyperbola);
    for (double t : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        Point p = arc.at(t);
        CHECK(weighted_distance(p, u) == doctest::Approx(weighted_distance(p, v)));
        CHECK(arc.param(p) == doctest::Approx(t));
    }
}
