#ifndef DISKHOP_PROPERTIES_HPP
#define DISKHOP_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diskhop/sssp.hpp"

namespace diskhop {

struct PropertyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    size_t samples = 10000;
    uint64_t seed = 7;
    // replaces the computed result in the result-level checks
    std::optional<LayerResult> candidate;
    // corrupts the computed result before checking (negative control)
    bool inject_fault = false;
    bool queue_orders = true;
};

struct VerifyReport {
    std::vector<PropertyCheck> checks;
    SolveStats stats;
    bool ok() const;
};

VerifyReport verify_instance(const std::vector<Site>& sites, int source, const VerifyOptions& options = {});

// Individual checks, shared with the test suites. Each returns the number of
// violations and fills `first` with a description of the first one.
size_t check_oracle_equivalence(const LayerResult& r, const std::vector<int>& oracle, std::string* first = nullptr);
size_t check_predecessors(const LayerResult& r, const std::vector<Site>& sites, std::string* first = nullptr);
size_t check_layers(const LayerResult& r, std::string* first = nullptr);
// Pairs are exhaustive up to `pair_limit` sites, sampled beyond.
size_t check_observation1(const std::vector<Site>& sites, size_t pair_limit = 200, uint64_t seed = 1,
                          std::string* first = nullptr);
size_t check_observation2(const LayerResult& r, const std::vector<Site>& sites, std::string* first = nullptr);
size_t check_lemma1(const LayerResult& r, const DualGraph& dual, size_t* checked = nullptr,
                    std::string* first = nullptr);

// Flips the first reached non-source site to a wrong distance.
void corrupt_result(LayerResult& r);

}  // namespace diskhop

#endif
