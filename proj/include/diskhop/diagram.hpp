#ifndef DISKHOP_DIAGRAM_HPP
#define DISKHOP_DIAGRAM_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskhop/geometry.hpp"

namespace diskhop {

class DegenerateInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Similarity map from input coordinates to the working frame: translate and
// scale into the unit square, then rotate by a rational angle (cos, sin) =
// (ca, sa) / hyp so that sweep order is decidable on integer keys.
struct Frame {
    double ox = 0;
    double oy = 0;
    double scale = 1;
    int rotation = 0;
    int64_t ca = 1;
    int64_t sa = 0;
    int64_t hyp = 1;

    Point to_local(Point p) const;
    Point to_world(Point p) const;
    double len_to_local(double d) const { return d / scale; }
    double len_to_world(double d) const { return d * scale; }
};

Frame make_frame(const std::vector<Site>& sites, int rotation);
int frame_rotation_count();

struct Box {
    double xmin = 0;
    double ymin = 0;
    double xmax = 0;
    double ymax = 0;
    bool contains(Point p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
};

inline constexpr int kInfinite = -1;

struct HalfEdge {
    int face = -1;    // local site index on the left
    int twin = -1;
    int next = -1;
    int prev = -1;
    int origin = kInfinite;  // vertex index or kInfinite
};

struct Vertex {
    Point p;        // working frame
    double rho = 0; // common weighted distance, working frame
    int sites[3] = {-1, -1, -1};
    int edge = -1;  // an outgoing half-edge
};

struct SweepStats {
    uint64_t site_events = 0;
    uint64_t circle_events = 0;
    uint64_t stale_events = 0;
    uint64_t queue_pushes = 0;
};

// Faces are indexed by position in `sites`; site ids are kept for reporting.
struct ApolloniusDiagram {
    std::vector<Site> sites;
    std::vector<Disk> disks;  // working frame
    Frame frame;
    Box box;                  // clip box, working frame
    size_t placement = 0;     // index of the placement that succeeded
    std::vector<Vertex> vertices;
    std::vector<HalfEdge> half_edges;  // twins at 2k, 2k+1
    std::vector<int> face_edge;        // one boundary half-edge per face, -1 if none
    std::vector<int> dominated;        // witness index, -1 when the face is nonempty
    SweepStats stats;

    size_t size() const { return sites.size(); }
    size_t num_finite_vertices() const { return vertices.size(); }
    size_t num_vertices() const { return vertices.size() + 1; }
    size_t num_edges() const { return half_edges.size() / 2; }
    size_t num_faces() const;
    int dest(int h) const { return half_edges[static_cast<size_t>(half_edges[static_cast<size_t>(h)].twin)].origin; }
};

struct DiagramAudit {
    bool euler = false;
    bool size_bounds = false;
    bool cycles = false;
    bool vertex_residuals = false;
    bool dominated_witnesses = false;
    long long V = 0;
    long long E = 0;
    long long F = 0;
    double max_residual = 0;
    std::string detail;
    bool ok() const { return euler && size_bounds && cycles && vertex_residuals && dominated_witnesses; }
};

// Frame plus clip box; one per rotation, all derived from the same extent.
struct Placement {
    Frame frame;
    Box box;
};

Box clip_box(const std::vector<Site>& extent, const Frame& frame);
std::vector<Placement> make_placements(const std::vector<Site>& extent);

ApolloniusDiagram build_diagram(const std::vector<Site>& sites);
// Builds over `sites` (any subset of the extent instance). Tries the
// placements in order starting at `first`; throws DegenerateInstance when all fail.
ApolloniusDiagram build_diagram(const std::vector<Site>& sites, const std::vector<Placement>& placements,
                                size_t first = 0);
// Single attempt in a fixed placement.
ApolloniusDiagram build_diagram_once(const std::vector<Site>& sites, const Placement& placement);

DiagramAudit audit_diagram(const ApolloniusDiagram& d);
void dump_diagram(const ApolloniusDiagram& d, std::ostream& out);

struct DualGraph {
    std::vector<std::vector<int>> adj;  // by site id
    std::vector<char> dominated;
    size_t edges = 0;
};

DualGraph extract_dual(const ApolloniusDiagram& d);
bool dual_is_simple_symmetric(const DualGraph& g);

}  // namespace diskhop

#endif
