#include "diskhop/bench.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>

#include "diskhop/oracle.hpp"
#include "diskhop/rng.hpp"
#include "diskhop/sssp.hpp"

namespace diskhop {

namespace {

using Clock = std::chrono::steady_clock;

int64_t since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
}

}  // namespace

uint64_t bench_instance_seed(uint64_t seed, int n, int trial) {
    SplitMix64 mix(seed ^ (static_cast<uint64_t>(n) << 20) ^ static_cast<uint64_t>(trial));
    return mix.next();
}

std::vector<BenchRow> run_bench(const BenchOptions& opt, std::ostream* progress) {
    std::vector<BenchRow> rows;
    for (int n : opt.sizes) {
        for (int t = 0; t < opt.trials; ++t) {
            InstanceSpec spec = opt.spec;
            spec.n = n;
            spec.seed = bench_instance_seed(opt.seed, n, t);
            Instance inst = generate(spec);
            const int source = inst.source.value_or(0);

            BenchRow row;
            row.n = n;
            row.trial = t;

            auto t0 = Clock::now();
            {
                ApolloniusDiagram d = build_diagram(inst.sites);
                DualGraph g = extract_dual(d);
                row.dt_edges = g.edges;
            }
            row.t_build_ns = since(t0);

            t0 = Clock::now();
            Solution sol = solve(inst.sites, source);
            row.t_solve_ns = since(t0);
            row.q_ops = sol.stats.q_insertions;

            if (n <= opt.naive_max) {
                t0 = Clock::now();
                std::vector<int> dist = oracle_bfs(brute_graph(inst.sites), source);
                row.t_naive_ns = since(t0);
                if (dist != sol.result.dist) throw std::runtime_error("bench: solver and naive baseline disagree");
            }
            if (progress)
                *progress << "n=" << n << " trial=" << t << " build=" << row.t_build_ns / 1e6
                          << "ms solve=" << row.t_solve_ns / 1e6 << "ms naive="
                          << (row.t_naive_ns < 0 ? -1.0 : row.t_naive_ns / 1e6) << "ms" << std::endl;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kBenchHeader << '\n';
    for (const BenchRow& r : rows) {
        out << r.n << ',' << r.trial << ',' << r.t_build_ns << ',' << r.t_solve_ns << ',';
        if (r.t_naive_ns >= 0) out << r.t_naive_ns;
        out << ',' << r.q_ops << ',' << r.dt_edges << '\n';
    }
}

}  // namespace diskhop
