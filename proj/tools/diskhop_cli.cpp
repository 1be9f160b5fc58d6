#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "diskhop/bench.hpp"
#include "diskhop/diagram.hpp"
#include "diskhop/generate.hpp"
#include "diskhop/io.hpp"
#include "diskhop/oracle.hpp"
#include "diskhop/properties.hpp"
#include "diskhop/sssp.hpp"

using namespace diskhop;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

int pick_source(const Instance& inst, int flag) {
    int s = flag >= 0 ? flag : inst.source.value_or(0);
    if (static_cast<size_t>(s) >= inst.sites.size()) throw InputError("unknown source id " + std::to_string(s));
    return s;
}

// Writes to `path`, or standard output for "-" or empty.
template <class F>
void emit(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    write(out);
    if (!out) throw InputError("write failed for " + path);
}

struct SolveArgs {
    std::string input;
    int source = -1;
    std::string out;
    bool oracle = false;
};

int cmd_solve(const SolveArgs& a) {
    Instance inst = read_instance_file(a.input);
    int s = pick_source(inst, a.source);
    LayerResult r = compute_layers(inst.sites, s);
    emit(a.out, [&](std::ostream& o) { write_result(o, r); });
    if (a.oracle) {
        std::vector<int> oracle = oracle_bfs(brute_graph(inst.sites), s);
        std::string first;
        size_t bad = check_oracle_equivalence(r, oracle, &first);
        if (bad) {
            std::cerr << "oracle mismatch at " << bad << " sites; first: " << first << '\n';
            return kMismatch;
        }
        std::cerr << "oracle agrees on " << oracle.size() << " sites\n";
    }
    return kOk;
}

struct GenArgs {
    InstanceSpec spec;
    std::string dist = "uniform";
    std::string out;
};

int cmd_gen(GenArgs a) {
    auto d = parse_radius_dist(a.dist);
    if (!d) throw InputError("unknown radius distribution '" + a.dist + "'");
    a.spec.radius = *d;
    Instance inst = generate(a.spec);
    std::ostringstream c;
    c << "n=" << a.spec.n << " seed=" << a.spec.seed << " radius=" << a.dist << " nesting=" << a.spec.nesting;
    emit(a.out, [&](std::ostream& o) { write_instance(o, inst, c.str()); });
    return kOk;
}

struct BenchArgs {
    BenchOptions opt;
    std::string dist = "uniform";
    std::string out;
    bool quiet = false;
};

int cmd_bench(BenchArgs a) {
    if (a.opt.sizes.empty()) throw InputError("--sizes is empty");
    for (int n : a.opt.sizes)
        if (n < 1) throw InputError("sizes must be positive");
    if (a.opt.trials < 1) throw InputError("--trials must be positive");
    auto d = parse_radius_dist(a.dist);
    if (!d) throw InputError("unknown radius distribution '" + a.dist + "'");
    a.opt.spec.radius = *d;
    auto rows = run_bench(a.opt, a.quiet ? nullptr : &std::cerr);
    emit(a.out, [&](std::ostream& o) { write_bench_csv(o, rows); });
    return kOk;
}

struct VerifyArgs {
    std::string input;
    int source = -1;
    std::string result;
    bool inject = false;
    size_t samples = 10000;
};

int cmd_verify(const VerifyArgs& a) {
    Instance inst = read_instance_file(a.input);
    int s = pick_source(inst, a.source);
    VerifyOptions opt;
    opt.samples = a.samples;
    opt.inject_fault = a.inject;
    if (!a.result.empty()) {
        std::ifstream in(a.result);
        if (!in) throw InputError("cannot open " + a.result);
        LayerResult r = read_result(in);
        if (r.dist.size() != inst.sites.size()) throw InputError("result has a different site count");
        opt.candidate = r;
    }
    VerifyReport rep = verify_instance(inst.sites, s, opt);
    for (const auto& c : rep.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    std::cout << (rep.ok() ? "all properties pass" : "property failure") << std::endl;
    return rep.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hop distances in disk graphs"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "hop distances from a source");
    solve->add_option("input", sa.input, "instance file")->required();
    solve->add_option("--source", sa.source, "source id (default: file's source comment, else 0)");
    solve->add_option("--out", sa.out, "result file (default stdout)");
    solve->add_flag("--oracle", sa.oracle, "compare with brute-force BFS");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--n", ga.spec.n, "site count")->required();
    gen->add_option("--seed", ga.spec.seed, "seed");
    gen->add_option("--radius-dist", ga.dist, "uniform | power-law | bimodal-nesting");
    gen->add_option("--rmin", ga.spec.rmin, "uniform radius lower factor");
    gen->add_option("--rmax", ga.spec.rmax, "uniform radius upper factor");
    gen->add_option("--nesting", ga.spec.nesting, "fraction of nested disks");
    gen->add_flag("--dominated-source", ga.spec.dominated_source, "make site 0 a nested disk");
    gen->add_option("--margin", ga.spec.margin, "minimum predicate margin");
    gen->add_option("--out", ga.out, "instance file (default stdout)");

    BenchArgs ba;
    ba.opt.sizes = {1024};
    auto* bench = app.add_subcommand("bench", "scaling benchmark");
    bench->add_option("--sizes", ba.opt.sizes, "instance sizes")->delimiter(',');
    bench->add_option("--trials", ba.opt.trials, "trials per size");
    bench->add_option("--seed", ba.opt.seed, "seed");
    bench->add_option("--naive-max", ba.opt.naive_max, "skip the naive baseline above this size");
    bench->add_option("--radius-dist", ba.dist, "radius distribution");
    bench->add_option("--rmin", ba.opt.spec.rmin, "uniform radius lower factor");
    bench->add_option("--rmax", ba.opt.spec.rmax, "uniform radius upper factor");
    bench->add_option("--out", ba.out, "CSV file (default stdout)");
    bench->add_flag("--quiet", ba.quiet, "no progress lines");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the property suite on one instance");
    verify->add_option("input", va.input, "instance file")->required();
    verify->add_option("--source", va.source, "source id");
    verify->add_option("--result", va.result, "check this result file instead of the computed one");
    verify->add_option("--samples", va.samples, "diagram sampling points");
    verify->add_flag("--inject-fault", va.inject, "corrupt the computed result (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(sa);
        if (gen->parsed()) return cmd_gen(ga);
        if (bench->parsed()) return cmd_bench(ba);
        if (verify->parsed()) return cmd_verify(va);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const DegenerateInstance& e) {
        std::cerr << "degenerate instance: " << e.what() << '\n';
        return kInputError;
    } catch (const GenerationError& e) {
        std::cerr << "generation failed: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
