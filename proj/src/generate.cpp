#include "diskhop/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "diskhop/rng.hpp"

namespace diskhop {

namespace {

constexpr double kSquare = 1000;

double snap(double v) { return std::round(v * 1e6) / 1e6; }

class Grid {
public:
    explicit Grid(double cell) : cell_(cell) {}

    void add(int id, double x, double y) { cells_[key(cell_of(x), cell_of(y))].push_back(id); }

    template <class F>
    void near(double x, double y, double radius, F&& f) const {
        int64_t reach = static_cast<int64_t>(std::ceil(radius / cell_));
        int64_t cx = cell_of(x), cy = cell_of(y);
        for (int64_t i = cx - reach; i <= cx + reach; ++i)
            for (int64_t j = cy - reach; j <= cy + reach; ++j) {
                auto it = cells_.find(key(i, j));
                if (it == cells_.end()) continue;
                for (int id : it->second) f(id);
            }
    }

private:
    double cell_;
    std::unordered_map<uint64_t, std::vector<int>> cells_;

    int64_t cell_of(double v) const { return static_cast<int64_t>(std::floor(v / cell_)); }
    static uint64_t key(int64_t i, int64_t j) {
        return (static_cast<uint64_t>(i) << 32) ^ (static_cast<uint64_t>(j) & 0xffffffffULL);
    }
};

struct Cand {
    double x, y, r;
};

double line_distance(const Cand& p, const Cand& a, const Cand& b) {
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::hypot(dx, dy);
    if (len == 0) return std::hypot(p.x - a.x, p.y - a.y);
    return std::fabs(dx * (p.y - a.y) - dy * (p.x - a.x)) / len;
}

double pair_margin(const Cand& a, const Cand& b) {
    double d = std::hypot(a.x - b.x, a.y - b.y);
    return std::min(std::fabs(d - a.r - b.r), std::fabs(d - std::fabs(a.r - b.r)));
}

double triple_margin(const Cand& a, const Cand& b, const Cand& c) {
    return std::min({line_distance(a, b, c), line_distance(b, a, c), line_distance(c, a, b)});
}

}  // namespace

std::optional<RadiusDist> parse_radius_dist(const std::string& name) {
    if (name == "uniform") return RadiusDist::uniform;
    if (name == "power-law") return RadiusDist::power_law;
    if (name == "bimodal-nesting") return RadiusDist::bimodal_nesting;
    return std::nullopt;
}

std::string radius_dist_name(RadiusDist d) {
    switch (d) {
    case RadiusDist::uniform: return "uniform";
    case RadiusDist::power_law: return "power-law";
    case RadiusDist::bimodal_nesting: return "bimodal-nesting";
    }
    return "?";
}

Instance generate(const InstanceSpec& spec) {
    if (spec.n < 1) throw InputError("n must be at least 1");
    if (!(spec.margin > 0)) throw InputError("margin must be positive");
    if (!(spec.nesting >= 0 && spec.nesting < 1)) throw InputError("nesting must be in [0, 1)");
    if (!(spec.rmin > 0 && spec.rmin <= spec.rmax)) throw InputError("need 0 < rmin <= rmax");
    if (spec.dominated_source && spec.n < 2) throw InputError("a dominated source needs n >= 2");
    if (spec.max_attempts < 1) throw InputError("max_attempts must be positive");

    const int n = spec.n;
    const double base = kSquare / std::sqrt(static_cast<double>(n));
    const double m = spec.margin * kSquare;
    int nested = static_cast<int>(std::floor(spec.nesting * n + 0.5));
    if (spec.dominated_source) nested = std::max(nested, 1);
    nested = std::min(nested, n - 1);
    const int free_count = n - nested;

    double rcap;
    switch (spec.radius) {
    case RadiusDist::uniform: rcap = spec.rmax * base; break;
    case RadiusDist::power_law: rcap = 4 * base; break;
    default: rcap = 2.5 * base; break;
    }
    const double triple_radius = 2 * base;
    Grid grid(std::max(2 * rcap, triple_radius));

    SplitMix64 rng(spec.seed);
    auto draw_radius = [&]() {
        switch (spec.radius) {
        case RadiusDist::uniform: return rng.uniform(spec.rmin, spec.rmax) * base;
        case RadiusDist::power_law:
            return std::min(rcap, 0.25 * base * std::pow(1 - rng.uniform(), -1 / 1.5));
        default:
            return rng.uniform() < 0.8 ? rng.uniform(0.25, 0.6) * base : rng.uniform(1.2, 2.5) * base;
        }
    };

    std::vector<Cand> out;
    out.reserve(static_cast<size_t>(n));
    std::vector<int> hosts;  // preferred hosts for nested sites
    std::vector<int> local;

    auto acceptable = [&](const Cand& c) {
        bool ok = true;
        local.clear();
        grid.near(c.x, c.y, c.r + rcap + m, [&](int id) {
            if (!ok) return;
            const Cand& w = out[static_cast<size_t>(id)];
            if (pair_margin(c, w) < m) ok = false;
            if (std::hypot(c.x - w.x, c.y - w.y) <= triple_radius) local.push_back(id);
        });
        if (!ok) return false;
        for (size_t i = 0; i < local.size(); ++i)
            for (size_t j = i + 1; j < local.size(); ++j)
                if (triple_margin(c, out[static_cast<size_t>(local[i])], out[static_cast<size_t>(local[j])]) < m)
                    return false;
        return true;
    };
    auto place = [&](const Cand& c) {
        int id = static_cast<int>(out.size());
        out.push_back(c);
        grid.add(id, c.x, c.y);
        return id;
    };
    auto fail = [&](int i) {
        throw GenerationError("could not place site " + std::to_string(i) + " of " + std::to_string(n) + " after " +
                              std::to_string(spec.max_attempts) + " attempts at margin " +
                              std::to_string(spec.margin));
    };

    for (int i = 0; i < free_count; ++i) {
        bool done = false;
        for (int a = 0; a < spec.max_attempts && !done; ++a) {
            Cand c{snap(rng.uniform(0, kSquare)), snap(rng.uniform(0, kSquare)), std::max(1e-6, snap(draw_radius()))};
            if (!acceptable(c)) continue;
            int id = place(c);
            if (spec.radius != RadiusDist::bimodal_nesting || c.r >= base) hosts.push_back(id);
            done = true;
        }
        if (!done) fail(i);
    }
    if (hosts.empty())
        for (int i = 0; i < free_count; ++i) hosts.push_back(i);

    for (int i = free_count; i < n; ++i) {
        bool done = false;
        for (int a = 0; a < spec.max_attempts && !done; ++a) {
            const Cand& h = out[static_cast<size_t>(hosts[rng.below(hosts.size())])];
            double r = std::max(1e-6, snap(rng.uniform(0.2, 0.6) * h.r));
            double reach = 0.9 * (h.r - r) * std::sqrt(rng.uniform());
            double t = rng.uniform(0, 2 * std::numbers::pi);
            Cand c{snap(h.x + reach * std::cos(t)), snap(h.y + reach * std::sin(t)), r};
            if (c.x < 0 || c.x > kSquare || c.y < 0 || c.y > kSquare) continue;
            if (!acceptable(c)) continue;
            place(c);
            done = true;
        }
        if (!done) fail(i);
    }

    Instance inst;
    if (spec.dominated_source) {
        std::swap(out[0], out[static_cast<size_t>(free_count)]);
        inst.source = 0;
    }
    inst.sites.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i)
        inst.sites.push_back(make_site(static_cast<int>(i), out[i].x, out[i].y, out[i].r));
    return inst;
}

MarginReport measure_margins(const std::vector<Site>& sites, double triple_radius) {
    MarginReport rep;
    rep.pairwise = rep.triple = std::numeric_limits<double>::infinity();
    std::vector<Cand> c;
    c.reserve(sites.size());
    for (const Site& s : sites) c.push_back({s.center.x, s.center.y, s.radius});
    for (size_t i = 0; i < c.size(); ++i) {
        std::vector<size_t> local;
        for (size_t j = i + 1; j < c.size(); ++j) {
            rep.pairwise = std::min(rep.pairwise, pair_margin(c[i], c[j]));
            if (std::hypot(c[i].x - c[j].x, c[i].y - c[j].y) <= triple_radius) local.push_back(j);
        }
        for (size_t a = 0; a < local.size(); ++a)
            for (size_t b = a + 1; b < local.size(); ++b) {
                if (std::hypot(c[local[a]].x - c[local[b]].x, c[local[a]].y - c[local[b]].y) > triple_radius) continue;
                rep.triple = std::min(rep.triple, triple_margin(c[i], c[local[a]], c[local[b]]));
            }
    }
    rep.pairwise /= kSquare;
    rep.triple /= kSquare;
    return rep;
}

}  // namespace diskhop
