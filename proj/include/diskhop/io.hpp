#ifndef DISKHOP_IO_HPP
#define DISKHOP_IO_HPP

#include <iosfwd>
#include <string>

#include "diskhop/generate.hpp"
#include "diskhop/sssp.hpp"

namespace diskhop {

// Instance text: one "x y r" per data line, '#' starts a comment line, blank
// lines are skipped. Site ids count data lines from 0. A "# source K"
// comment records a suggested source.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst, const std::string& comment = "");
void write_instance_file(const std::string& path, const Instance& inst, const std::string& comment = "");

// Result text: "id dist pred" per site, dist "inf" and pred "-" when absent.
void write_result(std::ostream& out, const LayerResult& r);
void write_result_file(const std::string& path, const LayerResult& r);
// Restores dist, pred, layers and source; the anchor is not stored.
LayerResult read_result(std::istream& in);

}  // namespace diskhop

#endif
