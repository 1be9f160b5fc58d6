#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "diskhop/diagram.hpp"
#include "diskhop/generate.hpp"
#include "diskhop/validate.hpp"

using namespace diskhop;

namespace {

std::vector<Site> random_sites(int n, uint64_t seed, double nesting = 0) {
    InstanceSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.nesting = nesting;
    return generate(spec).sites;
}

}  // namespace

TEST_CASE("two equal sites: one vertical bisector, no vertices") {
    auto sites = make_sites({{0, 0, 1}, {4, 0, 1}});
    auto d = build_diagram(sites);
    CHECK(d.num_finite_vertices() == 0);
    CHECK(d.num_edges() == 1);
    CHECK(d.num_faces() == 2);
    CHECK(audit_diagram(d).ok());
    auto g = extract_dual(d);
    CHECK(g.edges == 1);
    CHECK(g.adj[0] == std::vector<int>{1});
    auto rep = validate_diagram(d, sites, 1000);
    CHECK(rep.mismatches == 0);
}

TEST_CASE("contained disk is dominated") {
    auto sites = make_sites({{0, 0, 5}, {1, 0, 1}});
    auto d = build_diagram(sites);
    CHECK(d.dominated[1] == 0);
    CHECK(d.dominated[0] == -1);
    CHECK(d.num_faces() == 1);
    CHECK(d.num_edges() == 0);
    auto g = extract_dual(d);
    CHECK(g.edges == 0);
    CHECK(g.dominated[1]);
    auto rep = validate_diagram(d, sites, 1000);
    CHECK(rep.mismatches == 0);
}

TEST_CASE("triangle of equal disks") {
    auto sites = make_sites({{0, 0, 1}, {4, 0, 1}, {2, 3, 1}});
    auto d = build_diagram(sites);
    CHECK(d.num_finite_vertices() == 1);
    CHECK(d.num_edges() == 3);
    auto g = extract_dual(d);
    CHECK(g.edges == 3);
    CHECK(dual_is_simple_symmetric(g));
    CHECK(d.vertices[0].p.x == doctest::Approx(d.frame.to_local({2, 5.0 / 6}).x));
}

TEST_CASE("single site") {
    auto sites = make_sites({{3, 3, 1}});
    auto d = build_diagram(sites);
    CHECK(d.num_faces() == 1);
    CHECK(extract_dual(d).edges == 0);
    CHECK(audit_diagram(d).ok());
}

TEST_CASE("random diagrams pass audit and sampling") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto sites = random_sites(50, seed);
        auto d = build_diagram(sites);
        auto audit = audit_diagram(d);
        CHECK_MESSAGE(audit.ok(), audit.detail);
        CHECK(audit.V - audit.E + audit.F == 2);
        auto rep = validate_diagram(d, sites, 10000, seed);
        CHECK_MESSAGE(rep.ok(), describe(rep));
    }
}

TEST_CASE("dual of 100 sites") {
    auto sites = random_sites(100, 11);
    auto d = build_diagram(sites);
    auto g = extract_dual(d);
    CHECK(dual_is_simple_symmetric(g));
    CHECK(g.edges <= 300);
    // every dual edge is witnessed by a shared diagram edge
    std::vector<std::pair<int, int>> shared;
    for (size_t h = 0; h < d.half_edges.size(); h += 2) {
        int a = d.sites[static_cast<size_t>(d.half_edges[h].face)].id;
        int b = d.sites[static_cast<size_t>(d.half_edges[h + 1].face)].id;
        if (a != b) shared.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(shared.begin(), shared.end());
    for (size_t u = 0; u < g.adj.size(); ++u)
        for (int v : g.adj[u])
            CHECK(std::binary_search(shared.begin(), shared.end(),
                                     std::pair<int, int>{std::min<int>(static_cast<int>(u), v),
                                                         std::max<int>(static_cast<int>(u), v)}));
}

TEST_CASE("nested instance reports its dominated sites") {
    auto sites = random_sites(300, 3, 0.2);
    auto d = build_diagram(sites);
    size_t sweep = 0;
    for (size_t u = 0; u < sites.size(); ++u)
        for (size_t v = 0; v < sites.size(); ++v)
            if (u != v && domination_predicate(sites[u], sites[v])) {
                ++sweep;
                break;
            }
    size_t reported = static_cast<size_t>(std::count_if(d.dominated.begin(), d.dominated.end(), [](int w) { return w >= 0; }));
    CHECK(reported == sweep);
    CHECK(reported >= 50);
    CHECK(validate_diagram(d, sites, 5000).ok());
}

TEST_CASE("rebuilding is deterministic") {
    auto sites = random_sites(200, 8, 0.1);
    auto a = build_diagram(sites), b = build_diagram(sites);
    CHECK(a.num_vertices() == b.num_vertices());
    CHECK(a.num_edges() == b.num_edges());
    CHECK(a.dominated == b.dominated);
    std::ostringstream da, db;
    dump_diagram(a, da);
    dump_diagram(b, db);
    CHECK(da.str() == db.str());
}
