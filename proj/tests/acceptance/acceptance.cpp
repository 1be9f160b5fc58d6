// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
// Usage: acceptance [--quick] [--csv path]
//   --quick  smaller instance set and scaling sweep, for development

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "diskhop/bench.hpp"
#include "diskhop/generate.hpp"
#include "diskhop/io.hpp"
#include "diskhop/oracle.hpp"
#include "diskhop/properties.hpp"
#include "diskhop/rng.hpp"
#include "diskhop/sssp.hpp"
#include "diskhop/validate.hpp"

using namespace diskhop;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool passed = true;
    std::string detail;
};

struct Tally {
    size_t instances = 0;
    size_t violations = 0;
    std::string first;
    void fail(size_t count, const std::string& where, const std::string& what) {
        if (count == 0) return;
        if (violations == 0) first = where + ": " + what;
        violations += count;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

InstanceSpec plan(size_t k, int* source_hint) {
    SplitMix64 h(0xacce55ULL + k);
    InstanceSpec s;
    s.n = 2 + static_cast<int>(h.below(499));
    s.seed = h.next();
    s.radius = static_cast<RadiusDist>(k % 3);
    static const double bimodal[] = {0.0, 0.1, 0.2, 0.3, 0.4};
    if (s.radius == RadiusDist::bimodal_nesting)
        s.nesting = bimodal[(k / 3) % 5];
    else
        s.nesting = (k / 3) % 4 == 0 ? 0.15 : 0.0;
    static const double lo[] = {0.3, 0.6, 0.9};
    static const double hi[] = {0.8, 1.2, 1.6};
    s.rmin = lo[(k / 7) % 3];
    s.rmax = hi[(k / 7) % 3];
    s.dominated_source = k % 6 == 1;
    *source_hint = static_cast<int>(h.below(static_cast<uint64_t>(s.n)));
    return s;
}

std::string to_text(const Instance& inst) {
    std::ostringstream o;
    write_instance(o, inst);
    return o.str();
}

std::string to_text(const LayerResult& r) {
    std::ostringstream o;
    write_result(o, r);
    return o.str();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    std::string csv_path = "scaling.csv";
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--quick")) quick = true;
        else if (!std::strcmp(argv[i], "--csv") && i + 1 < argc) csv_path = argv[++i];
    }

    std::vector<Criterion> crit = {
        {1, "oracle equivalence"},  {2, "diagram validity"},  {3, "observation suites"},
        {4, "layer path suite"},    {5, "queue-order invariance"}, {6, "work accounting"},
        {7, "scaling"},             {8, "determinism"},
    };
    auto t_start = std::chrono::steady_clock::now();

    const size_t count = quick ? 120 : 1200;
    Tally c1, c2, c3, c4, c5, c6;
    size_t dominated_sources = 0, disconnected = 0, dominated_total = 0, max_n = 0, min_n = 1 << 30;
    size_t obs1_instances = 0, lemma_paths = 0, order_runs = 0;
    size_t dist_counts[3] = {0, 0, 0};
    for (size_t k = 0; k < count; ++k) {
        int hint = 0;
        InstanceSpec spec = plan(k, &hint);
        std::string where = "instance " + std::to_string(k) + " (n=" + std::to_string(spec.n) + ", " +
                            radius_dist_name(spec.radius) + ")";
        Instance generated;
        try {
            generated = generate(spec);
        } catch (const std::exception& e) {
            c1.fail(1, where, std::string("generation failed: ") + e.what());
            continue;
        }
        // go through the text formats the command line uses
        std::istringstream in(to_text(generated));
        Instance inst = read_instance(in);
        const auto& sites = inst.sites;
        const int source = inst.source.value_or(hint);
        const size_t n = sites.size();
        min_n = std::min(min_n, n);
        max_n = std::max(max_n, n);
        ++dist_counts[static_cast<int>(spec.radius)];

        Solution sol;
        try {
            sol = solve(sites, source);
        } catch (const std::exception& e) {
            c1.fail(1, where, std::string("solve threw: ") + e.what());
            continue;
        }
        std::istringstream rin(to_text(sol.result));
        LayerResult r = read_result(rin);
        r.anchor = sol.result.anchor;

        std::vector<int> oracle = oracle_bfs(brute_graph(sites), source);
        if (std::count(oracle.begin(), oracle.end(), kUnreached) > 0) ++disconnected;
        if (sol.dual.dominated[static_cast<size_t>(source)]) ++dominated_sources;
        dominated_total += static_cast<size_t>(std::count(sol.dual.dominated.begin(), sol.dual.dominated.end(), 1));

        std::string first;
        ++c1.instances;
        c1.fail(check_oracle_equivalence(r, oracle, &first), where, first);
        first.clear();
        c1.fail(check_predecessors(r, sites, &first), where, first);

        ++c2.instances;
        ValidationReport vr = validate_diagram(sol.diagram, sites, 10000, 1000 + k);
        if (!vr.ok()) c2.fail(1, where, describe(vr));

        ++c3.instances;
        if (n <= 200) {
            ++obs1_instances;
            first.clear();
            c3.fail(check_observation1(sites, 200, k, &first), where, "observation 1, " + first);
        }
        first.clear();
        c3.fail(check_observation2(r, sites, &first), where, "observation 2, " + first);

        ++c4.instances;
        first.clear();
        c4.fail(check_lemma1(r, sol.dual, &lemma_paths, &first), where, first);

        if (order_runs < 100) {
            ++order_runs;
            ++c5.instances;
            SolveOptions lifo, rnd;
            lifo.order = PopOrder::lifo;
            rnd.order = PopOrder::random;
            rnd.seed = k + 1;
            bool same = compute_layers(sites, source, lifo).dist == sol.result.dist &&
                        compute_layers(sites, source, rnd).dist == sol.result.dist;
            if (!same) c5.fail(1, where, "pop orders disagree");
        }

        ++c6.instances;
        const SolveStats& st = sol.stats;
        if (st.q_insertions > 2 * st.dt_edges + n)
            c6.fail(1, where, "q_insertions " + std::to_string(st.q_insertions) + " > 2*" +
                                  std::to_string(st.dt_edges) + "+" + std::to_string(n));
        if (st.sum_prev_layers > n) c6.fail(1, where, "sum of |S_{i-1}| = " + std::to_string(st.sum_prev_layers));
    }
    const double t_suite = seconds_since(t_start);

    auto settle = [](Criterion& c, const Tally& t, const std::string& ok_detail) {
        c.passed = t.violations == 0 && t.instances > 0;
        c.detail = c.passed ? ok_detail : std::to_string(t.violations) + " violations, first: " + t.first;
    };
    {
        std::ostringstream d;
        d << c1.instances << " instances, n in [" << min_n << ", " << max_n << "], uniform/power-law/bimodal "
          << dist_counts[0] << "/" << dist_counts[1] << "/" << dist_counts[2] << ", " << dominated_sources
          << " dominated sources, " << disconnected << " disconnected, " << dominated_total
          << " dominated sites, " << static_cast<int>(t_suite) << " s";
        settle(crit[0], c1, d.str());
        const size_t need = quick ? 10 : 100;
        if (crit[0].passed && (c1.instances < count || dominated_sources < need || disconnected < need)) {
            crit[0].passed = false;
            crit[0].detail = "coverage short: " + d.str();
        }
    }
    settle(crit[1], c2, std::to_string(c2.instances) + " diagrams, 10000 samples each, 0 mismatches");
    settle(crit[2], c3,
           std::to_string(obs1_instances) + " all-pairs observation 1 runs, " + std::to_string(c3.instances) +
               " observation 2 runs");
    settle(crit[3], c4, std::to_string(lemma_paths) + " paths checked");
    settle(crit[4], c5, std::to_string(c5.instances) + " instances, fifo = lifo = random");
    settle(crit[5], c6, std::to_string(c6.instances) + " instances within bounds");

    // scaling
    {
        auto t0 = std::chrono::steady_clock::now();
        BenchOptions small, large;
        small.seed = large.seed = 20240601;
        if (quick) {
            small.sizes = {1024, 2048, 4096, 8192};
            small.trials = 5;
        } else {
            small.sizes = {1024, 2048, 4096, 8192, 16384, 32768};
            small.trials = 9;
            large.sizes = {65536, 131072};
            large.trials = 7;
        }
        std::vector<BenchRow> rows = run_bench(small);
        if (!large.sizes.empty()) {
            auto more = run_bench(large);
            rows.insert(rows.end(), more.begin(), more.end());
        }
        std::ofstream csv(csv_path);
        write_bench_csv(csv, rows);

        std::vector<int> sizes;
        for (const auto& r : rows)
            if (sizes.empty() || sizes.back() != r.n) sizes.push_back(r.n);
        std::vector<double> ms, mn;
        for (int n : sizes) {
            std::vector<double> s, v;
            for (const auto& r : rows)
                if (r.n == n) s.push_back(static_cast<double>(r.t_solve_ns)), v.push_back(static_cast<double>(r.t_naive_ns));
            ms.push_back(median(s));
            mn.push_back(median(v));
        }
        std::ostringstream d;
        bool ok = true;
        d << "solve ratios";
        for (size_t i = 1; i < sizes.size(); ++i) {
            double q = ms[i] / ms[i - 1];
            d << ' ' << std::fixed;
            d.precision(2);
            d << q;
            if (q > 2.6) ok = false;
        }
        d << "; naive ratios at top";
        for (size_t i = sizes.size() >= 3 ? sizes.size() - 2 : 1; i < sizes.size(); ++i) {
            double q = mn[i] / mn[i - 1];
            d << ' ' << q;
            if (!quick && q < 3.5) ok = false;
        }
        double speedup = mn.back() / ms.back();
        d << "; speedup at n=" << sizes.back() << ' ' << speedup << "x";
        if (!quick && speedup < 10) ok = false;
        d << "; " << static_cast<int>(seconds_since(t0)) << " s, csv " << csv_path;
        crit[6].passed = ok;
        crit[6].detail = d.str();
    }

    // determinism
    {
        bool ok = true;
        std::string why;
        for (size_t k = 0; k < 20 && ok; ++k) {
            int hint = 0;
            InstanceSpec spec = plan(k * 37 + 5, &hint);
            Instance a = generate(spec), b = generate(spec);
            std::string ta = to_text(a), tb = to_text(b);
            if (ta != tb) {
                ok = false;
                why = "instance text differs for plan " + std::to_string(k);
                break;
            }
            int s = a.source.value_or(hint);
            if (to_text(compute_layers(a.sites, s)) != to_text(compute_layers(b.sites, s))) {
                ok = false;
                why = "result text differs for plan " + std::to_string(k);
            }
        }
        crit[7].passed = ok;
        crit[7].detail = ok ? "20 seeds: identical instance and result text" : why;
    }

    bool all = true;
    for (const auto& c : crit) {
        std::printf("%s criterion %d %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
        all = all && c.passed;
    }
    std::printf("%s (%d s)\n", all ? "all criteria pass" : "some criteria fail",
                static_cast<int>(seconds_since(t_start)));
    return all ? 0 : 1;
}
