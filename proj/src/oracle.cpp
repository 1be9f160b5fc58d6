#include "diskhop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace diskhop {

namespace {

// Cheap reject in doubles; anything close goes to the exact predicate.
bool quick_far(const Site& a, const Site& b) {
    double dx = a.center.x - b.center.x;
    double dy = a.center.y - b.center.y;
    double s = a.radius + b.radius;
    double d2 = dx * dx + dy * dy;
    return d2 > s * s * (1 + 1e-9) + 1e-12;
}

}  // namespace

ExplicitGraph brute_graph(const std::vector<Site>& sites) {
    ExplicitGraph g;
    g.n = sites.size();
    g.adj.assign(g.n, {});
    for (size_t i = 0; i < g.n; ++i) {
        for (size_t j = i + 1; j < g.n; ++j) {
            if (quick_far(sites[i], sites[j])) continue;
            if (!edge_predicate(sites[i], sites[j])) continue;
            g.adj[i].push_back(static_cast<int>(j));
            g.adj[j].push_back(static_cast<int>(i));
            ++g.edges;
        }
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

std::vector<int> oracle_bfs(const ExplicitGraph& g, int source) {
    if (source < 0 || static_cast<size_t>(source) >= g.n) throw InputError("unknown source id " + std::to_string(source));
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.adj[static_cast<size_t>(u)]) {
            if (dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            q.push_back(w);
        }
    }
    return dist;
}

std::vector<int> naive_bfs(const std::vector<Site>& sites, int source) {
    const size_t n = sites.size();
    if (source < 0 || static_cast<size_t>(source) >= n) throw InputError("unknown source id " + std::to_string(source));
    std::vector<int> dist(n, -1);
    std::vector<int> q{source};
    dist[static_cast<size_t>(source)] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
        const Site& u = sites[static_cast<size_t>(q[h])];
        for (size_t w = 0; w < n; ++w) {
            if (dist[w] >= 0 || quick_far(u, sites[w]) || !edge_predicate(u, sites[w])) continue;
            dist[w] = dist[static_cast<size_t>(q[h])] + 1;
            q.push_back(static_cast<int>(w));
        }
    }
    return dist;
}

bool graph_is_symmetric(const ExplicitGraph& g) {
    size_t degree_sum = 0;
    for (size_t u = 0; u < g.n; ++u) {
        degree_sum += g.adj[u].size();
        for (int w : g.adj[u]) {
            if (w == static_cast<int>(u)) return false;
            const auto& b = g.adj[static_cast<size_t>(w)];
            if (!std::binary_search(b.begin(), b.end(), static_cast<int>(u))) return false;
        }
        if (std::adjacent_find(g.adj[u].begin(), g.adj[u].end()) != g.adj[u].end()) return false;
    }
    return degree_sum == 2 * g.edges;
}

bool bfs_layering_holds(const ExplicitGraph& g, const std::vector<int>& dist) {
    for (size_t u = 0; u < g.n; ++u) {
        for (int w : g.adj[u]) {
            int a = dist[u], b = dist[static_cast<size_t>(w)];
            if ((a < 0) != (b < 0)) return false;
            if (a >= 0 && std::abs(a - b) > 1) return false;
        }
    }
    return true;
}

}  // namespace diskhop
