#ifndef DISKHOP_GENERATE_HPP
#define DISKHOP_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskhop/geometry.hpp"

namespace diskhop {

enum class RadiusDist { uniform, power_law, bimodal_nesting };

std::optional<RadiusDist> parse_radius_dist(const std::string& name);
std::string radius_dist_name(RadiusDist d);

struct InstanceSpec {
    int n = 100;
    uint64_t seed = 1;
    RadiusDist radius = RadiusDist::uniform;
    // uniform radii are drawn from [rmin, rmax] times the base radius 1000/sqrt(n)
    double rmin = 0.3;
    double rmax = 0.8;
    double nesting = 0.0;  // fraction of sites placed inside another disk
    bool dominated_source = false;
    double margin = 1e-6;  // relative to the 1000-unit square
    int max_attempts = 2000;  // per site
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::vector<Site> sites;
    std::optional<int> source;  // set when a dominated source was requested
};

// Coordinates in [0, 1000] with 6 decimals. Throws InputError for a bad
// spec and GenerationError when a site cannot be placed.
Instance generate(const InstanceSpec& spec);

struct MarginReport {
    double pairwise = 0;  // min over pairs of | |uv| - r_u - r_v | and | |uv| - |r_u - r_v| |
    double triple = 0;    // min distance of a site from the line through two others (local triples)
};

// Margins in units of the 1000-unit square. Local triples only: sites within
// `triple_radius` of each other.
MarginReport measure_margins(const std::vector<Site>& sites, double triple_radius);

}  // namespace diskhop

#endif
