#ifndef DISKHOP_ORACLE_HPP
#define DISKHOP_ORACLE_HPP

#include <vector>

#include "diskhop/geometry.hpp"

namespace diskhop {

// Disk graph built from all pairs with the exact predicate.
struct ExplicitGraph {
    size_t n = 0;
    std::vector<std::vector<int>> adj;  // ascending
    size_t edges = 0;
};

ExplicitGraph brute_graph(const std::vector<Site>& sites);
// Hop distances, kUnreached (-1) where disconnected. Throws InputError for a bad source.
std::vector<int> oracle_bfs(const ExplicitGraph& g, int source);
// BFS that rescans every site for each popped vertex; no adjacency is stored.
std::vector<int> naive_bfs(const std::vector<Site>& sites, int source);

bool graph_is_symmetric(const ExplicitGraph& g);
// every edge joins equal or consecutive layers
bool bfs_layering_holds(const ExplicitGraph& g, const std::vector<int>& dist);

}  // namespace diskhop

#endif
