#ifndef DISKHOP_VALIDATE_HPP
#define DISKHOP_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "diskhop/diagram.hpp"

namespace diskhop {

struct ValidationReport {
    size_t samples = 0;
    size_t mismatches = 0;    // outside the tolerance band
    size_t band_samples = 0;  // top-two gap within 10 eps scale; not judged
    size_t band_disagreements = 0;
    DiagramAudit audit;
    bool ok() const { return mismatches == 0 && audit.ok(); }
};

// Uniform samples over the bounding box of the disks; the located face is
// compared with the linear-scan argmin of the weighted distance.
ValidationReport validate_diagram(const ApolloniusDiagram& d, const std::vector<Site>& sites, size_t samples,
                                  uint64_t seed = 7);

std::string describe(const ValidationReport& r);

}  // namespace diskhop

#endif
