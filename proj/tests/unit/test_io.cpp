#include <sstream>

#include "doctest.h"
#include "diskhop/bench.hpp"
#include "diskhop/io.hpp"

using namespace diskhop;

TEST_CASE("read instance with comments and a source line") {
    std::istringstream in("# chain\n# source 1\n0 0 1\n\n2 0 1\n  4 0 1  \n");
    auto inst = read_instance(in);
    REQUIRE(inst.sites.size() == 3);
    CHECK(inst.source == 1);
    CHECK(inst.sites[2].id == 2);
    CHECK(inst.sites[2].center.x == 4);
}

TEST_CASE("parse errors carry line numbers") {
    auto fails = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_instance(in);
        } catch (const InputError& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
        return false;
    };
    CHECK(fails("0 0 1\n1 x 1\n", "line 2"));
    CHECK(fails("0 0 1\n1 1\n", "line 2"));
    CHECK(fails("0 0 -1\n", "line 1"));
    CHECK(fails("0 0 1 7\n", "line 1"));
    CHECK(fails("# nothing\n", "no sites"));
}

TEST_CASE("instance round trip is exact") {
    InstanceSpec spec;
    spec.n = 60;
    spec.seed = 9;
    spec.dominated_source = true;
    auto inst = generate(spec);
    std::ostringstream out;
    write_instance(out, inst, "generated");
    std::istringstream in(out.str());
    auto back = read_instance(in);
    CHECK(back.source == inst.source);
    REQUIRE(back.sites.size() == inst.sites.size());
    for (size_t i = 0; i < back.sites.size(); ++i) {
        CHECK(back.sites[i].exact.x == inst.sites[i].exact.x);
        CHECK(back.sites[i].exact.r == inst.sites[i].exact.r);
    }
    std::ostringstream again;
    write_instance(again, back, "generated");
    CHECK(again.str() == out.str());
}

TEST_CASE("result text") {
    auto sites = make_sites({{0, 0, 1}, {2, 0, 1}, {4, 0, 1}, {50, 0, 1}});
    auto r = compute_layers(sites, 0);
    std::ostringstream out;
    write_result(out, r);
    CHECK(out.str() == "0 0 -\n1 1 0\n2 2 1\n3 inf -\n");
    std::istringstream in(out.str());
    CHECK(read_result(in) == r);
}

TEST_CASE("result round trip after a generated solve") {
    InstanceSpec spec;
    spec.n = 200;
    spec.seed = 17;
    spec.nesting = 0.2;
    auto inst = generate(spec);
    auto r = compute_layers(inst.sites, 3);
    std::ostringstream out;
    write_result(out, r);
    std::istringstream in(out.str());
    CHECK(read_result(in) == r);
}

TEST_CASE("bench csv schema") {
    BenchOptions opt;
    opt.sizes = {64};
    opt.trials = 2;
    auto rows = run_bench(opt);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].t_naive_ns >= 0);
    CHECK(rows[0].q_ops > 0);
    std::ostringstream out;
    write_bench_csv(out, rows);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == kBenchHeader);
    opt.naive_max = 10;
    rows = run_bench(opt);
    CHECK(rows[0].t_naive_ns == -1);
    std::ostringstream skipped;
    write_bench_csv(skipped, rows);
    CHECK(skipped.str().find(",,") != std::string::npos);
}
