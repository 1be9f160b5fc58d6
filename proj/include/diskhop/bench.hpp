#ifndef DISKHOP_BENCH_HPP
#define DISKHOP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "diskhop/generate.hpp"

namespace diskhop {

struct BenchOptions {
    std::vector<int> sizes;
    int trials = 1;
    uint64_t seed = 1;
    int naive_max = 1 << 17;  // naive baseline skipped above this n
    InstanceSpec spec = dense_spec();  // n and seed are overridden per row

    // radii large enough that the source sits in a giant component
    static InstanceSpec dense_spec() {
        InstanceSpec s;
        s.rmin = 0.6;
        s.rmax = 1.2;
        return s;
    }
};

struct BenchRow {
    int n = 0;
    int trial = 0;
    int64_t t_build_ns = 0;
    int64_t t_solve_ns = 0;
    int64_t t_naive_ns = -1;  // -1 when skipped
    uint64_t q_ops = 0;
    uint64_t dt_edges = 0;
};

// Seed of the instance used for (n, trial).
uint64_t bench_instance_seed(uint64_t seed, int n, int trial);

// Rows in (n, trial) order. `progress` receives one line per row if given.
std::vector<BenchRow> run_bench(const BenchOptions& options, std::ostream* progress = nullptr);

inline constexpr const char* kBenchHeader = "n,trial,t_build_ns,t_solve_ns,t_naive_ns,q_ops,dt_edges";
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace diskhop

#endif
