#include "diskhop/sssp.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "diskhop/rng.hpp"

namespace diskhop {

namespace {

void check_input(const std::vector<Site>& sites, int source) {
    if (sites.empty()) throw InputError("empty instance");
    for (size_t i = 0; i < sites.size(); ++i)
        if (sites[i].id != static_cast<int>(i)) throw InputError("site ids must be 0..n-1 in order");
    if (source < 0 || static_cast<size_t>(source) >= sites.size())
        throw InputError("unknown source id " + std::to_string(source));
}

// Q with a selectable pop discipline.
class WorkQueue {
public:
    WorkQueue(PopOrder order, uint64_t seed) : order_(order), rng_(seed) {}
    bool empty() const { return items_.empty(); }
    void push(int v) { items_.push_back(v); }
    int pop() {
        int v;
        switch (order_) {
        case PopOrder::fifo:
            v = items_.front();
            items_.pop_front();
            break;
        case PopOrder::lifo:
            v = items_.back();
            items_.pop_back();
            break;
        default: {
            size_t k = rng_.below(items_.size());
            std::swap(items_[k], items_.back());
            v = items_.back();
            items_.pop_back();
        }
        }
        return v;
    }

private:
    PopOrder order_;
    SplitMix64 rng_;
    std::deque<int> items_;
};

std::vector<Site> subset(const std::vector<Site>& sites, const std::vector<int>& ids) {
    std::vector<Site> out;
    out.reserve(ids.size());
    for (int v : ids) out.push_back(sites[static_cast<size_t>(v)]);
    return out;
}

}  // namespace

void rebuild_layers(LayerResult& r) {
    int top = -1;
    for (int d : r.dist) top = std::max(top, d);
    r.layers.assign(static_cast<size_t>(top + 1), {});
    for (size_t v = 0; v < r.dist.size(); ++v)
        if (r.dist[v] >= 0) r.layers[static_cast<size_t>(r.dist[v])].push_back(static_cast<int>(v));
}

std::vector<int> handle_dominated_source(const std::vector<Site>& sites, int source, const ApolloniusDiagram& d,
                                         const DualGraph& dual, int* anchor, uint64_t* visits) {
    const Site& s = sites[static_cast<size_t>(source)];
    uint64_t count = 0;
    // Greedy descent in the dual from the witness. A site that is not the
    // nearest to s's center has a dual neighbour strictly nearer, and every
    // site on the way contains that center.
    int z = d.sites[static_cast<size_t>(d.dominated[static_cast<size_t>(source)])].id;
    for (bool moved = true; moved;) {
        moved = false;
        for (int w : dual.adj[static_cast<size_t>(z)]) {
            ++count;
            if (compare_weighted(s.center, sites[static_cast<size_t>(w)], sites[static_cast<size_t>(z)]) ==
                Ordering::less) {
                z = w;
                moved = true;
                break;
            }
        }
    }
    if (anchor) *anchor = z;
    std::vector<int> out;
    std::vector<char> seen(sites.size(), 0);
    std::vector<int> stack;
    // z's disk contains a point of s's disk (the center), so z always qualifies
    seen[static_cast<size_t>(z)] = 1;
    stack.push_back(z);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        if (!edge_predicate(s, sites[static_cast<size_t>(u)])) continue;
        out.push_back(u);
        for (int w : dual.adj[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    for (size_t u = 0; u < sites.size(); ++u) {
        if (static_cast<int>(u) == source || !dual.dominated[u]) continue;
        ++count;
        if (edge_predicate(s, sites[u])) out.push_back(static_cast<int>(u));
    }
    if (visits) *visits += count;
    std::sort(out.begin(), out.end());
    return out;
}

void patch_dominated(LayerResult& r, const std::vector<Site>& sites, const ApolloniusDiagram& d,
                     const std::vector<std::optional<Locator>>& locs, SolveStats* stats) {
    const int s = r.source;
    const bool source_dominated = d.dominated[static_cast<size_t>(s)] >= 0;
    for (size_t u = 0; u < sites.size(); ++u) {
        int w = d.dominated[u];
        if (w < 0 || static_cast<int>(u) == s) continue;
        if (stats) ++stats->dominated;
        if (r.dist[u] != kUnreached) continue;  // already placed in layer 1 of a dominated source
        int R = d.sites[static_cast<size_t>(w)].id;
        int dr = r.dist[static_cast<size_t>(R)];
        if (dr == kUnreached) continue;
        if (dr == 0) {
            r.dist[u] = 1;
            r.pred[u] = R;
            continue;
        }
        size_t j = static_cast<size_t>(dr - 1);
        if (j == 0 && source_dominated) {
            // not adjacent to the source, or it would already be in layer 1
            r.dist[u] = dr + 1;
            r.pred[u] = R;
            continue;
        }
        const Locator& L = *locs[j];
        int z = L.nearest(sites[u].center).site;
        if (stats) ++stats->locator_queries;
        if (edge_predicate(sites[static_cast<size_t>(z)], sites[u])) {
            r.dist[u] = dr;
            r.pred[u] = z;
        } else {
            r.dist[u] = dr + 1;
            r.pred[u] = R;
        }
    }
}

Solution solve(const std::vector<Site>& sites, int source, const SolveOptions& opt) {
    check_input(sites, source);
    const size_t n = sites.size();
    Solution sol;
    sol.placements = make_placements(sites);
    sol.diagram = build_diagram(sites, sol.placements);
    sol.dual = extract_dual(sol.diagram);
    const ApolloniusDiagram& D = sol.diagram;
    const DualGraph& G = sol.dual;
    SolveStats& st = sol.stats;
    st.dt_edges = G.edges;

    LayerResult& r = sol.result;
    r.source = source;
    r.dist.assign(n, kUnreached);
    r.pred.assign(n, -1);
    r.dist[static_cast<size_t>(source)] = 0;

    std::vector<int> cur;  // non-dominated part of S_{i-1}
    int i = 1;
    if (!G.dominated[static_cast<size_t>(source)]) {
        cur.push_back(source);
        sol.layer_locators.resize(1);
    } else {
        std::vector<int> s1 = handle_dominated_source(sites, source, D, G, &r.anchor, &st.flood_visits);
        for (int v : s1) {
            r.dist[static_cast<size_t>(v)] = 1;
            r.pred[static_cast<size_t>(v)] = source;
            if (!G.dominated[static_cast<size_t>(v)]) cur.push_back(v);
        }
        sol.layer_locators.resize(2);
        i = 2;
    }

    std::vector<int> qtag(n, 0);  // iteration that last inserted the site into Q
    WorkQueue Q(opt.order, opt.seed);
    while (!cur.empty()) {
        ++st.iterations;
        st.sum_prev_layers += cur.size();
        ApolloniusDiagram layer = build_diagram(subset(sites, cur), sol.placements, D.placement);
        ++st.layer_diagrams;
        sol.layer_locators.resize(static_cast<size_t>(i));
        sol.layer_locators[static_cast<size_t>(i - 1)] = build_locator(layer, opt.locator_seed);
        const Locator& L = *sol.layer_locators[static_cast<size_t>(i - 1)];

        auto offer = [&](int w) {
            if (r.dist[static_cast<size_t>(w)] != kUnreached || qtag[static_cast<size_t>(w)] == i) return;
            qtag[static_cast<size_t>(w)] = i;
            Q.push(w);
            ++st.q_insertions;
        };
        for (int u : cur)
            for (int w : G.adj[static_cast<size_t>(u)]) offer(w);

        std::vector<int> next;
        while (!Q.empty()) {
            int v = Q.pop();
            ++st.q_pops;
            int z = L.nearest(sites[static_cast<size_t>(v)].center).site;
            ++st.locator_queries;
            if (!edge_predicate(sites[static_cast<size_t>(z)], sites[static_cast<size_t>(v)])) continue;
            r.dist[static_cast<size_t>(v)] = i;
            r.pred[static_cast<size_t>(v)] = z;
            next.push_back(v);
            for (int w : G.adj[static_cast<size_t>(v)]) offer(w);
        }
        std::sort(next.begin(), next.end());
        cur = std::move(next);
        ++i;
    }

    patch_dominated(r, sites, D, sol.layer_locators, &st);
    rebuild_layers(r);
    return sol;
}

LayerResult compute_layers(const std::vector<Site>& sites, int source, const SolveOptions& options) {
    return solve(sites, source, options).result;
}

bool verify_layer_path(const LayerResult& r, const DualGraph& dual, int i, int v) {
    if (i < 1 || static_cast<size_t>(i) >= r.layers.size()) return false;
    if (r.dist[static_cast<size_t>(v)] != i || dual.dominated[static_cast<size_t>(v)]) return false;
    const bool anchored = i == 1 && dual.dominated[static_cast<size_t>(r.source)];
    auto is_target = [&](int w) {
        return anchored ? w == r.anchor : r.dist[static_cast<size_t>(w)] == i - 1;
    };
    if (is_target(v)) return true;
    std::vector<char> seen(r.dist.size(), 0);
    std::vector<int> stack{v};
    seen[static_cast<size_t>(v)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : dual.adj[static_cast<size_t>(u)]) {
            if (is_target(w)) return true;
            if (seen[static_cast<size_t>(w)] || r.dist[static_cast<size_t>(w)] != i) continue;
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace diskhop
