#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diskhop/generate.hpp"
#include "diskhop/io.hpp"
#include "diskhop/oracle.hpp"
#include "diskhop/properties.hpp"
#include "diskhop/sssp.hpp"

namespace py = pybind11;
using namespace diskhop;

namespace {

using Triple = std::tuple<double, double, double>;

std::vector<Site> to_sites(const std::vector<Triple>& xyr) {
    std::vector<Site> out;
    out.reserve(xyr.size());
    for (const auto& [x, y, r] : xyr) {
        if (r < 0) throw InputError("negative radius");
        out.push_back(make_site(static_cast<int>(out.size()), x, y, r));
    }
    return out;
}

std::vector<Triple> from_sites(const std::vector<Site>& sites) {
    std::vector<Triple> out;
    out.reserve(sites.size());
    for (const Site& s : sites) out.emplace_back(s.center.x, s.center.y, s.radius);
    return out;
}

py::object maybe_int(int v) { return v < 0 ? py::none() : py::object(py::int_(v)); }

py::dict result_dict(const Solution& sol) {
    const LayerResult& r = sol.result;
    py::list dist, pred;
    for (int d : r.dist) dist.append(maybe_int(d));
    for (int p : r.pred) pred.append(maybe_int(p));
    const SolveStats& st = sol.stats;
    py::dict stats;
    stats["q_insertions"] = st.q_insertions;
    stats["q_pops"] = st.q_pops;
    stats["sum_prev_layers"] = st.sum_prev_layers;
    stats["dt_edges"] = st.dt_edges;
    stats["locator_queries"] = st.locator_queries;
    stats["layer_diagrams"] = st.layer_diagrams;
    stats["dominated"] = st.dominated;
    stats["iterations"] = st.iterations;
    py::dict out;
    out["dist"] = dist;
    out["pred"] = pred;
    out["layers"] = r.layers;
    out["source"] = r.source;
    out["anchor"] = maybe_int(r.anchor);
    out["dominated"] = std::vector<bool>(sol.dual.dominated.begin(), sol.dual.dominated.end());
    out["stats"] = stats;
    return out;
}

PopOrder parse_order(const std::string& name) {
    if (name == "fifo") return PopOrder::fifo;
    if (name == "lifo") return PopOrder::lifo;
    if (name == "random") return PopOrder::random;
    throw InputError("order must be fifo, lifo or random");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hop distances in disk graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
    py::register_exception<DegenerateInstance>(m, "DegenerateInstance", PyExc_RuntimeError);

    m.def(
        "solve",
        [](const std::vector<Triple>& sites, int source, const std::string& order, uint64_t seed) {
            SolveOptions opt;
            opt.order = parse_order(order);
            opt.seed = seed;
            Solution sol;
            {
                py::gil_scoped_release release;
                sol = solve(to_sites(sites), source, opt);
            }
            return result_dict(sol);
        },
        py::arg("sites"), py::arg("source") = 0, py::arg("order") = "fifo", py::arg("seed") = 1,
        "Hop distances from `source` over (x, y, r) disks; None marks unreached sites.");

    m.def(
        "oracle_bfs",
        [](const std::vector<Triple>& sites, int source) {
            py::list out;
            for (int d : oracle_bfs(brute_graph(to_sites(sites)), source)) out.append(maybe_int(d));
            return out;
        },
        py::arg("sites"), py::arg("source") = 0, "Brute-force BFS over all pairs.");

    m.def(
        "generate",
        [](int n, uint64_t seed, const std::string& radius_dist, double nesting, bool dominated_source, double rmin,
           double rmax, double margin) {
            auto dist = parse_radius_dist(radius_dist);
            if (!dist) throw InputError("unknown radius distribution " + radius_dist);
            InstanceSpec spec;
            spec.n = n;
            spec.seed = seed;
            spec.radius = *dist;
            spec.nesting = nesting;
            spec.dominated_source = dominated_source;
            spec.rmin = rmin;
            spec.rmax = rmax;
            spec.margin = margin;
            Instance inst = generate(spec);
            return py::make_tuple(from_sites(inst.sites), inst.source ? py::object(py::int_(*inst.source)) : py::none());
        },
        py::arg("n"), py::arg("seed") = 1, py::arg("radius_dist") = "uniform", py::arg("nesting") = 0.0,
        py::arg("dominated_source") = false, py::arg("rmin") = 0.3, py::arg("rmax") = 0.8, py::arg("margin") = 1e-6,
        "Returns (sites, source); source is None unless a dominated source was requested.");

    m.def(
        "verify",
        [](const std::vector<Triple>& sites, int source, size_t samples) {
            VerifyOptions opt;
            opt.samples = samples;
            VerifyReport rep = verify_instance(to_sites(sites), source, opt);
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& c : rep.checks) out.emplace_back(c.name, c.passed, c.detail);
            return out;
        },
        py::arg("sites"), py::arg("source") = 0, py::arg("samples") = 10000,
        "Runs the property suite; returns (name, passed, detail) per check.");

    m.def("edge", [](Triple u, Triple v) {
        return edge_predicate(make_site(0, std::get<0>(u), std::get<1>(u), std::get<2>(u)),
                              make_site(1, std::get<0>(v), std::get<1>(v), std::get<2>(v)));
    });

    m.def(
        "read_instance",
        [](const std::string& text) {
            std::istringstream in(text);
            Instance inst = read_instance(in);
            return py::make_tuple(from_sites(inst.sites), inst.source ? py::object(py::int_(*inst.source)) : py::none());
        },
        py::arg("text"));

    m.def(
        "format_result",
        [](const std::vector<Triple>& sites, int source) {
            std::ostringstream out;
            write_result(out, compute_layers(to_sites(sites), source));
            return out.str();
        },
        py::arg("sites"), py::arg("source") = 0, "Result text, one \"id dist pred\" line per site.");
}
