#include "diskhop/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diskhop/locator.hpp"
#include "diskhop/rng.hpp"

namespace diskhop {

ValidationReport validate_diagram(const ApolloniusDiagram& d, const std::vector<Site>& sites, size_t samples,
                                  uint64_t seed) {
    ValidationReport rep;
    rep.audit = audit_diagram(d);
    if (sites.empty()) return rep;
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    for (const Site& s : sites) {
        x0 = std::min(x0, s.center.x - s.radius);
        y0 = std::min(y0, s.center.y - s.radius);
        x1 = std::max(x1, s.center.x + s.radius);
        y1 = std::max(y1, s.center.y + s.radius);
    }
    if (x1 - x0 == 0) x0 -= 1, x1 += 1;
    if (y1 - y0 == 0) y0 -= 1, y1 += 1;
    const double band = 10 * kEps * d.frame.scale;

    Locator L = build_locator(d);
    SplitMix64 rng(seed);
    for (size_t k = 0; k < samples; ++k) {
        Point p{rng.uniform(x0, x1), rng.uniform(y0, y1)};
        double best = std::numeric_limits<double>::infinity(), second = best;
        int arg = -1;
        for (const Site& s : sites) {
            double w = weighted_distance(p, s);
            if (w < best) {
                second = best;
                best = w;
                arg = s.id;
            } else if (w < second) {
                second = w;
            }
        }
        int got = L.nearest(p).site;
        ++rep.samples;
        if (second - best <= band) {
            ++rep.band_samples;
            if (got != arg) ++rep.band_disagreements;
        } else if (got != arg) {
            ++rep.mismatches;
        }
    }
    return rep;
}

std::string describe(const ValidationReport& r) {
    std::ostringstream o;
    o << "samples=" << r.samples << " mismatches=" << r.mismatches << " band=" << r.band_samples
      << " V=" << r.audit.V << " E=" << r.audit.E << " F=" << r.audit.F << " euler=" << r.audit.euler
      << " bounds=" << r.audit.size_bounds << " cycles=" << r.audit.cycles
      << " residual=" << r.audit.max_residual;
    if (!r.audit.detail.empty()) o << " (" << r.audit.detail << ")";
    return o.str();
}

}  // namespace diskhop
