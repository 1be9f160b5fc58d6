#include "diskhop/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diskhop/oracle.hpp"
#include "diskhop/rng.hpp"
#include "diskhop/validate.hpp"

namespace diskhop {

namespace {

void note(std::string* first, size_t count, const std::string& what) {
    if (first && count == 1) *first = what;
}

std::string dist_text(int d) { return d == kUnreached ? "inf" : std::to_string(d); }

bool at_most(double lhs, double rhs, double scale) { return lhs <= rhs + 1e-12 * (1 + std::fabs(scale)); }

}  // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

size_t check_oracle_equivalence(const LayerResult& r, const std::vector<int>& oracle, std::string* first) {
    size_t bad = 0;
    if (r.dist.size() != oracle.size()) {
        if (first) *first = "size mismatch";
        return 1;
    }
    for (size_t v = 0; v < oracle.size(); ++v) {
        if (r.dist[v] == oracle[v]) continue;
        ++bad;
        note(first, bad,
             "site " + std::to_string(v) + ": got " + dist_text(r.dist[v]) + ", oracle " + dist_text(oracle[v]));
    }
    return bad;
}

size_t check_predecessors(const LayerResult& r, const std::vector<Site>& sites, std::string* first) {
    size_t bad = 0;
    const size_t n = sites.size();
    if (r.dist.size() != n || r.pred.size() != n) {
        if (first) *first = "size mismatch";
        return 1;
    }
    for (size_t v = 0; v < n; ++v) {
        std::string why;
        int d = r.dist[v];
        int p = r.pred[v];
        if (static_cast<int>(v) == r.source) {
            if (d != 0 || p != -1) why = "source must have dist 0 and no pred";
        } else if (d == kUnreached) {
            if (p != -1) why = "unreached site has a pred";
        } else if (p < 0 || static_cast<size_t>(p) >= n) {
            why = "missing pred";
        } else if (!edge_predicate(sites[v], sites[static_cast<size_t>(p)])) {
            why = "pred " + std::to_string(p) + " does not intersect";
        } else if (r.dist[static_cast<size_t>(p)] != d - 1) {
            why = "pred " + std::to_string(p) + " has dist " + dist_text(r.dist[static_cast<size_t>(p)]);
        } else {
            // the chain must end at the source in exactly d steps
            int u = static_cast<int>(v);
            for (int k = 0; k < d && u >= 0; ++k) u = r.pred[static_cast<size_t>(u)];
            if (u != r.source) why = "pred chain does not reach the source in " + std::to_string(d) + " steps";
        }
        if (why.empty()) continue;
        ++bad;
        note(first, bad, "site " + std::to_string(v) + ": " + why);
    }
    return bad;
}

size_t check_layers(const LayerResult& r, std::string* first) {
    size_t bad = 0;
    size_t total = 0;
    std::vector<char> seen(r.dist.size(), 0);
    for (size_t i = 0; i < r.layers.size(); ++i) {
        const auto& L = r.layers[i];
        if (L.empty()) {
            ++bad;
            note(first, bad, "layer " + std::to_string(i) + " is empty");
        }
        if (!std::is_sorted(L.begin(), L.end())) {
            ++bad;
            note(first, bad, "layer " + std::to_string(i) + " is not sorted");
        }
        for (int v : L) {
            ++total;
            if (v < 0 || static_cast<size_t>(v) >= r.dist.size() || seen[static_cast<size_t>(v)] ||
                r.dist[static_cast<size_t>(v)] != static_cast<int>(i)) {
                ++bad;
                note(first, bad, "site " + std::to_string(v) + " misplaced in layer " + std::to_string(i));
                continue;
            }
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    size_t reached = static_cast<size_t>(std::count_if(r.dist.begin(), r.dist.end(), [](int d) { return d >= 0; }));
    if (reached != total) {
        ++bad;
        note(first, bad, "layers hold " + std::to_string(total) + " sites, " + std::to_string(reached) + " reached");
    }
    return bad;
}

size_t check_observation1(const std::vector<Site>& sites, size_t pair_limit, uint64_t seed, std::string* first) {
    size_t bad = 0;
    auto test = [&](size_t a, size_t b) {
        const Site& u = sites[a];
        const Site& v = sites[b];
        bool e = edge_predicate(u, v);
        double duv = weighted_distance(u.center, v);  // d_v(u)
        double dvu = weighted_distance(v.center, u);  // d_u(v)
        bool f2 = at_most(duv, u.radius, duv);
        bool f3 = at_most(dvu, v.radius, dvu);
        if (e == f2 && e == f3) return;
        ++bad;
        note(first, bad,
             "pair " + std::to_string(u.id) + "," + std::to_string(v.id) + ": exact " + std::to_string(e) +
                 " forms " + std::to_string(f2) + std::to_string(f3));
    };
    const size_t n = sites.size();
    if (n <= pair_limit) {
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a + 1; b < n; ++b) test(a, b);
    } else {
        SplitMix64 rng(seed);
        size_t pairs = pair_limit * (pair_limit - 1) / 2;
        for (size_t k = 0; k < pairs; ++k) {
            size_t a = rng.below(n), b = rng.below(n);
            if (a != b) test(a, b);
        }
    }
    return bad;
}

size_t check_observation2(const LayerResult& r, const std::vector<Site>& sites, std::string* first) {
    size_t bad = 0;
    const size_t n = sites.size();
    // i runs one past the last layer, where the test must reject everything
    for (size_t i = 1; i <= r.layers.size(); ++i) {
        const auto& prev = r.layers[i - 1];
        for (size_t v = 0; v < n; ++v) {
            int d = r.dist[v];
            if (d >= 0 && static_cast<size_t>(d) < i) continue;
            double best = std::numeric_limits<double>::infinity();
            for (int w : prev) best = std::min(best, weighted_distance(sites[v].center, sites[static_cast<size_t>(w)]));
            bool test = at_most(best, sites[v].radius, best);
            bool member = d >= 0 && static_cast<size_t>(d) == i;
            if (test == member) continue;
            ++bad;
            note(first, bad,
                 "site " + std::to_string(v) + " layer " + std::to_string(i) + ": member " + std::to_string(member) +
                     " test " + std::to_string(test));
        }
    }
    return bad;
}

size_t check_lemma1(const LayerResult& r, const DualGraph& dual, size_t* checked, std::string* first) {
    size_t bad = 0;
    for (size_t i = 1; i < r.layers.size(); ++i)
        for (int v : r.layers[i]) {
            if (dual.dominated[static_cast<size_t>(v)]) continue;
            if (checked) ++*checked;
            if (verify_layer_path(r, dual, static_cast<int>(i), v)) continue;
            ++bad;
            note(first, bad, "site " + std::to_string(v) + " in layer " + std::to_string(i));
        }
    return bad;
}

void corrupt_result(LayerResult& r) {
    for (size_t v = 0; v < r.dist.size(); ++v) {
        if (static_cast<int>(v) == r.source || r.dist[v] < 0) continue;
        r.dist[v] += 1;
        rebuild_layers(r);
        return;
    }
    if (r.source >= 0) r.dist[static_cast<size_t>(r.source)] = 1;
    rebuild_layers(r);
}

VerifyReport verify_instance(const std::vector<Site>& sites, int source, const VerifyOptions& opt) {
    VerifyReport rep;
    Solution sol = solve(sites, source, {});
    rep.stats = sol.stats;
    LayerResult r = opt.candidate ? *opt.candidate : sol.result;
    if (opt.candidate) r.anchor = sol.result.anchor, r.source = source;
    if (opt.inject_fault) corrupt_result(r);
    const size_t n = sites.size();

    auto add = [&](const std::string& name, size_t violations, const std::string& detail) {
        rep.checks.push_back({name, violations == 0, violations == 0 ? detail : std::to_string(violations) +
                                                                                   " violations, first: " + detail});
    };
    std::string first;

    std::vector<int> oracle = oracle_bfs(brute_graph(sites), source);
    add("oracle-equivalence", check_oracle_equivalence(r, oracle, &first), first.empty() ? "all sites agree" : first);
    first.clear();
    add("predecessor-chain", check_predecessors(r, sites, &first), first.empty() ? "all chains valid" : first);
    first.clear();
    add("layers", check_layers(r, &first), first.empty() ? std::to_string(r.layers.size()) + " layers" : first);
    first.clear();
    add("observation-1", check_observation1(sites, 200, opt.seed, &first), first.empty() ? "predicates agree" : first);
    first.clear();
    add("observation-2", check_observation2(r, sites, &first), first.empty() ? "layer tests agree" : first);
    first.clear();
    size_t checked = 0;
    size_t lemma = check_lemma1(r, sol.dual, &checked, &first);
    add("lemma-1", lemma, first.empty() ? std::to_string(checked) + " paths" : first);
    first.clear();

    ValidationReport vr = validate_diagram(sol.diagram, sites, opt.samples, opt.seed);
    rep.checks.push_back({"diagram-sampling", vr.ok(), describe(vr)});

    bool dual_ok = dual_is_simple_symmetric(sol.dual) && sol.dual.edges <= 3 * n;
    rep.checks.push_back({"dual-graph", dual_ok, std::to_string(sol.dual.edges) + " edges"});

    const SolveStats& st = sol.stats;
    bool work_ok = st.q_insertions <= 2 * st.dt_edges + n && st.sum_prev_layers <= n;
    std::ostringstream w;
    w << "q_insertions=" << st.q_insertions << " dt_edges=" << st.dt_edges << " sum_prev_layers=" << st.sum_prev_layers
      << " n=" << n;
    rep.checks.push_back({"work-accounting", work_ok, w.str()});

    if (opt.queue_orders) {
        SolveOptions lifo, rnd;
        lifo.order = PopOrder::lifo;
        rnd.order = PopOrder::random;
        rnd.seed = opt.seed;
        bool same = compute_layers(sites, source, lifo).dist == sol.result.dist &&
                    compute_layers(sites, source, rnd).dist == sol.result.dist;
        rep.checks.push_back({"queue-order", same, same ? "fifo, lifo and random agree" : "pop orders disagree"});
    }
    return rep;
}

}  // namespace diskhop
