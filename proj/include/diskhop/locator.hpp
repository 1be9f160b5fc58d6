#ifndef DISKHOP_LOCATOR_HPP
#define DISKHOP_LOCATOR_HPP

#include <cstdint>
#include <vector>

#include "diskhop/diagram.hpp"
#include "diskhop/geometry.hpp"

namespace diskhop {

struct NearestResult {
    int site = -1;  // site id
    double distance = 0;
};

// Randomized trapezoidal map over the x-monotone pieces of the clipped
// diagram edges, plus the top and bottom sides of the clip box.
class Locator {
public:
    struct Piece {
        int p = -1;  // west endpoint
        int q = -1;  // east endpoint
        int arc = -1;  // -1 for a box side
        double lp = 0; // parameter at p
        double lq = 0; // parameter at q
        int above = -1;
        int below = -1;
        double ylo = 0;
        double yhi = 0;
    };
    struct Trap {
        int top = -1;
        int bottom = -1;
        int leftp = -1;
        int rightp = -1;
        int node = -1;
    };
    struct Node {
        int kind = 0;  // 0 leaf, 1 point, 2 piece
        int idx = -1;
        int a = -1;    // left / above
        int b = -1;    // right / below
    };

    NearestResult nearest(Point world) const;
    // face index (into the diagram's site list) for a working-frame point
    int locate_local(Point p) const;

    size_t num_pieces() const { return pieces_.size(); }
    size_t num_traps() const { return traps_.size(); }
    size_t num_nodes() const { return nodes_.size(); }
    size_t depth_bound() const { return max_depth_; }
    size_t skipped_edges() const { return skipped_; }
    const Box& box() const { return box_; }
    const Frame& frame() const { return frame_; }

private:
    friend Locator build_locator(const ApolloniusDiagram& d, uint64_t seed);

    std::vector<Site> sites_;
    std::vector<Disk> disks_;
    std::vector<char> empty_;
    Frame frame_;
    Box box_;
    std::vector<Point> pts_;
    std::vector<BisectorArc> arcs_;
    std::vector<Piece> pieces_;
    std::vector<Trap> traps_;
    std::vector<Node> nodes_;
    size_t max_depth_ = 0;
    size_t skipped_ = 0;
    // scratch for insert
    std::vector<int> walk_, up_, low_;

    double y_at(const Piece& s, double x) const;
    bool piece_above(const Piece& s, const Piece& c, double x) const;
    int locate_start(const Piece& s) const;
    int locate_after(const Piece& s, int rp) const;
    int new_trap(int top, int bottom, int leftp, int rightp);
    void insert(int si);
    int linear_face(Point local) const;
    int best_of(Point local, const int* cand, int k) const;
};

Locator build_locator(const ApolloniusDiagram& d, uint64_t seed = 0x5eed);
NearestResult nearest_site(const Locator& loc, Point p);

// Linear-scan reference used by tests and validation.
NearestResult nearest_linear(const std::vector<Site>& sites, Point p);

}  // namespace diskhop

#endif
