#include <cmath>

#include "doctest.h"
#include "diskhop/generate.hpp"
#include "diskhop/locator.hpp"
#include "diskhop/rng.hpp"

using namespace diskhop;

TEST_CASE("single site answers everywhere") {
    auto sites = make_sites({{1, 2, 0.5}});
    auto loc = build_locator(build_diagram(sites));
    for (Point p : {Point{0, 0}, Point{100, -40}, Point{1, 2}}) CHECK(loc.nearest(p).site == 0);
}

TEST_CASE("two equal sites split at x = 2") {
    auto sites = make_sites({{0, 0, 1}, {4, 0, 1}});
    auto loc = build_locator(build_diagram(sites));
    CHECK(nearest_site(loc, {0, -10}).site == 0);
    CHECK(nearest_site(loc, {3, 7}).site == 1);
    CHECK(nearest_site(loc, {0, -10}).distance == doctest::Approx(std::sqrt(100.0) - 1));
}

TEST_CASE("own center and dominated center") {
    auto sites = make_sites({{0, 0, 5}, {1, 0, 1}, {12, 0, 2}});
    auto loc = build_locator(build_diagram(sites));
    CHECK(loc.nearest({12, 0}).site == 2);
    CHECK(loc.nearest({0, 0}).site == 0);
    CHECK(loc.nearest({1, 0}).site == 0);
}

TEST_CASE("queries far outside the clip box") {
    auto sites = make_sites({{0, 0, 1}, {4, 0, 2}, {2, 3, 0.5}});
    auto loc = build_locator(build_diagram(sites));
    for (Point p : {Point{1e6, 0}, Point{-1e6, 3}, Point{5, 1e6}, Point{-3e5, -3e5}})
        CHECK(std::fabs(loc.nearest(p).distance - nearest_linear(sites, p).distance) < 1e-6);
}

TEST_CASE("random queries tie the linear scan") {
    InstanceSpec spec;
    spec.n = 200;
    spec.seed = 5;
    spec.nesting = 0.1;
    auto sites = generate(spec).sites;
    auto d = build_diagram(sites);
    for (uint64_t seed : {1ULL, 99ULL}) {
        auto loc = build_locator(d, seed);
        SplitMix64 rng(seed);
        size_t bad = 0;
        for (int k = 0; k < 10000; ++k) {
            Point p{rng.uniform(-100, 1100), rng.uniform(-100, 1100)};
            auto got = loc.nearest(p);
            auto want = nearest_linear(sites, p);
            if (std::fabs(got.distance - want.distance) > 1e-9 * (1 + std::fabs(want.distance))) ++bad;
            if (std::fabs(weighted_distance(p, sites[static_cast<size_t>(got.site)]) - got.distance) > 1e-9) ++bad;
        }
        CHECK(bad == 0);
        CHECK(loc.skipped_edges() == 0);
    }
    // every non-dominated site owns its center
    auto loc = build_locator(d);
    for (const Site& s : sites)
        if (d.dominated[static_cast<size_t>(s.id)] < 0) CHECK(loc.nearest(s.center).site == s.id);
}
