#ifndef DISKHOP_SSSP_HPP
#define DISKHOP_SSSP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "diskhop/diagram.hpp"
#include "diskhop/geometry.hpp"
#include "diskhop/locator.hpp"

namespace diskhop {

inline constexpr int kUnreached = -1;

struct LayerResult {
    std::vector<int> dist;  // kUnreached when no path exists
    std::vector<int> pred;  // -1 for the source and unreached sites
    std::vector<std::vector<int>> layers;  // ascending ids
    int source = -1;
    // For a dominated source: the site whose region contains it.
    int anchor = -1;

    bool operator==(const LayerResult&) const = default;
};

enum class PopOrder { fifo, lifo, random };

struct SolveOptions {
    PopOrder order = PopOrder::fifo;
    uint64_t seed = 1;
    uint64_t locator_seed = 0x5eed;
};

struct SolveStats {
    uint64_t q_insertions = 0;
    uint64_t q_pops = 0;
    uint64_t sum_prev_layers = 0;  // sum over iterations of |S_{i-1}|
    uint64_t dt_edges = 0;
    uint64_t locator_queries = 0;
    uint64_t layer_diagrams = 0;
    uint64_t dominated = 0;
    uint64_t iterations = 0;
    uint64_t flood_visits = 0;  // dominated source only
};

// Everything a run builds and keeps: the full diagram, its dual and one
// locator per non-dominated layer (index i holds VD of layer i).
struct Solution {
    LayerResult result;
    SolveStats stats;
    ApolloniusDiagram diagram;
    DualGraph dual;
    std::vector<Placement> placements;
    std::vector<std::optional<Locator>> layer_locators;
};

// Site ids must equal their positions. Throws InputError for a bad source.
Solution solve(const std::vector<Site>& sites, int source, const SolveOptions& options = {});
LayerResult compute_layers(const std::vector<Site>& sites, int source, const SolveOptions& options = {});

// Layer 1 of a dominated source: flood of the dual from the region holding
// the source, plus a scan of the dominated sites. Returns ascending ids and
// sets *anchor to the containing region's site.
std::vector<int> handle_dominated_source(const std::vector<Site>& sites, int source, const ApolloniusDiagram& d,
                                         const DualGraph& dual, int* anchor, uint64_t* visits = nullptr);

// Resolves every dominated site from its witness and the layer locators.
void patch_dominated(LayerResult& result, const std::vector<Site>& sites, const ApolloniusDiagram& d,
                     const std::vector<std::optional<Locator>>& layer_locators, SolveStats* stats = nullptr);

// True when v reaches layer i-1 in the dual restricted to layers i-1 and i,
// with every intermediate vertex in layer i. For a dominated source, layer 0
// is replaced by the anchor.
bool verify_layer_path(const LayerResult& result, const DualGraph& dual, int i, int v);

// Rebuilds the layer lists from dist.
void rebuild_layers(LayerResult& result);

}  // namespace diskhop

#endif
