#include <cmath>

#include "doctest.h"
#include "diskhop/generate.hpp"
#include "diskhop/oracle.hpp"
#include "diskhop/properties.hpp"

using namespace diskhop;

TEST_CASE("tangent chain is a path") {
    auto g = brute_graph(make_sites({{0, 0, 1}, {2, 0, 1}, {4, 0, 1}}));
    CHECK(g.edges == 2);
    CHECK(g.adj[1] == std::vector<int>{0, 2});
    CHECK(oracle_bfs(g, 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("cluster is complete") {
    auto g = brute_graph(make_sites({{0, 0, 2}, {1, 0, 2}, {0, 1, 2}, {1, 1, 2}}));
    CHECK(g.edges == 6);
    CHECK(oracle_bfs(g, 2) == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("bad source") {
    auto g = brute_graph(make_sites({{0, 0, 1}}));
    CHECK_THROWS_AS(oracle_bfs(g, 3), InputError);
}

TEST_CASE("random graph structure") {
    InstanceSpec spec;
    spec.n = 200;
    spec.seed = 21;
    spec.nesting = 0.1;
    auto sites = generate(spec).sites;
    auto g = brute_graph(sites);
    CHECK(graph_is_symmetric(g));
    size_t degree = 0;
    for (const auto& a : g.adj) degree += a.size();
    CHECK(degree == 2 * g.edges);
    auto dist = oracle_bfs(g, 0);
    CHECK(bfs_layering_holds(g, dist));
    CHECK(naive_bfs(sites, 0) == dist);
    CHECK(check_observation1(sites) == 0);
}

TEST_CASE("generator") {
    InstanceSpec one;
    one.n = 1;
    CHECK(generate(one).sites.size() == 1);

    InstanceSpec s;
    s.n = 120;
    s.seed = 42;
    s.radius = RadiusDist::power_law;
    auto a = generate(s), b = generate(s);
    REQUIRE(a.sites.size() == b.sites.size());
    for (size_t i = 0; i < a.sites.size(); ++i) {
        CHECK(a.sites[i].exact.x == b.sites[i].exact.x);
        CHECK(a.sites[i].exact.y == b.sites[i].exact.y);
        CHECK(a.sites[i].exact.r == b.sites[i].exact.r);
    }
    auto m = measure_margins(a.sites, 2000 / std::sqrt(120.0));
    CHECK(m.pairwise >= s.margin);
    CHECK(m.triple >= s.margin);

    InstanceSpec bad;
    bad.n = 0;
    CHECK_THROWS_AS(generate(bad), InputError);

    InstanceSpec tight;
    tight.n = 50;
    tight.margin = 0.5;
    tight.max_attempts = 3;
    CHECK_THROWS_AS(generate(tight), GenerationError);

    InstanceSpec nested;
    nested.n = 80;
    nested.seed = 2;
    nested.radius = RadiusDist::bimodal_nesting;
    nested.nesting = 0.3;
    nested.dominated_source = true;
    auto inst = generate(nested);
    REQUIRE(inst.source);
    bool dominated = false;
    for (const Site& v : inst.sites)
        if (v.id != *inst.source && domination_predicate(inst.sites[static_cast<size_t>(*inst.source)], v)) dominated = true;
    CHECK(dominated);
}

TEST_CASE("radius distribution names") {
    for (auto d : {RadiusDist::uniform, RadiusDist::power_law, RadiusDist::bimodal_nesting})
        CHECK(parse_radius_dist(radius_dist_name(d)) == d);
    CHECK_FALSE(parse_radius_dist("gaussian"));
}
