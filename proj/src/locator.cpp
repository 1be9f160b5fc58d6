#include "diskhop/locator.hpp"

#include "diskhop/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstring>
#include <unordered_map>
#include <utility>

namespace diskhop {

namespace {

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

constexpr double kInf = std::numeric_limits<double>::infinity();

enum Side { kLeft, kRight, kBottom, kTop };

struct Crossing {
    double lambda;
    int side;
};

struct PointHash {
    size_t operator()(const std::pair<double, double>& p) const {
        uint64_t a, b;
        std::memcpy(&a, &p.first, sizeof a);
        std::memcpy(&b, &p.second, sizeof b);
        a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        a ^= a >> 31;
        a *= 0xbf58476d1ce4e5b9ULL;
        return static_cast<size_t>(a ^ (a >> 29));
    }
};

}  // namespace

NearestResult nearest_linear(const std::vector<Site>& sites, Point p) {
    NearestResult best;
    best.distance = kInf;
    for (const Site& s : sites) {
        double d = weighted_distance(p, s);
        if (d < best.distance) {
            best.distance = d;
            best.site = s.id;
        }
    }
    return best;
}

double Locator::y_at(const Piece& s, double x) const {
    const Point& P = pts_[static_cast<size_t>(s.p)];
    const Point& Q = pts_[static_cast<size_t>(s.q)];
    if (x <= P.x) return P.y;
    if (x >= Q.x) return Q.y;
    if (s.arc < 0) return P.y;
    const BisectorArc& A = arcs_[static_cast<size_t>(s.arc)];
    double lo = std::min(s.lp, s.lq);
    double hi = std::max(s.lp, s.lq);
    double tol = 1e-9 * (1 + std::max(std::fabs(lo), std::fabs(hi)));
    double roots[2];
    int nr = A.solve_x(x, roots);
    for (int k = 0; k < nr; ++k)
        if (roots[k] >= lo - tol && roots[k] <= hi + tol) return A.at(std::clamp(roots[k], lo, hi)).y;
    // x is monotone along the piece; bisect
    double a = s.lp, b = s.lq;
    for (int it = 0; it < 200 && a != b; ++it) {
        double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        if (A.at(mid).x < x)
            a = mid;
        else
            b = mid;
    }
    return A.at(0.5 * (a + b)).y;
}

bool Locator::piece_above(const Piece& s, const Piece& c, double x) const {
    double ys = y_at(s, x);
    double yc = y_at(c, x);
    if (ys != yc) return ys > yc;
    const Point& sp = pts_[static_cast<size_t>(s.p)];
    const Point& sq = pts_[static_cast<size_t>(s.q)];
    const Point& cp = pts_[static_cast<size_t>(c.p)];
    const Point& cq = pts_[static_cast<size_t>(c.q)];
    if (s.p == c.p && x <= std::min(sq.x, cq.x)) {
        double xm = 0.5 * (sp.x + std::min(sq.x, cq.x));
        return y_at(s, xm) > y_at(c, xm);
    }
    if (s.q == c.q) {
        double xm = 0.5 * (std::max(sp.x, cp.x) + sq.x);
        return y_at(s, xm) > y_at(c, xm);
    }
    return false;
}

int Locator::locate_start(const Piece& s) const {
    const Point& P = pts_[static_cast<size_t>(s.p)];
    int n = 0;
    for (;;) {
        const Node& nd = nodes_[static_cast<size_t>(n)];
        if (nd.kind == 0) return nd.idx;
        if (nd.kind == 1) {
            n = lex_less(P, pts_[static_cast<size_t>(nd.idx)]) ? nd.a : nd.b;
        } else {
            const Piece& c = pieces_[static_cast<size_t>(nd.idx)];
            bool above;
            if (c.p == s.p)
                above = piece_above(s, c, P.x);
            else if (P.y > c.yhi)
                above = true;
            else if (P.y < c.ylo)
                above = false;
            else
                above = P.y > y_at(c, P.x);
            n = above ? nd.a : nd.b;
        }
    }
}

int Locator::locate_after(const Piece& s, int rp) const {
    const Point& R = pts_[static_cast<size_t>(rp)];
    const double ys = y_at(s, R.x);
    int n = 0;
    for (;;) {
        const Node& nd = nodes_[static_cast<size_t>(n)];
        if (nd.kind == 0) return nd.idx;
        if (nd.kind == 1) {
            n = lex_less(R, pts_[static_cast<size_t>(nd.idx)]) ? nd.a : nd.b;
        } else {
            const Piece& c = pieces_[static_cast<size_t>(nd.idx)];
            bool above;
            if (ys > c.yhi)
                above = true;
            else if (ys < c.ylo)
                above = false;
            else
                above = piece_above(s, c, R.x);
            n = above ? nd.a : nd.b;
        }
    }
}

int Locator::new_trap(int top, int bottom, int leftp, int rightp) {
    Trap t;
    t.top = top;
    t.bottom = bottom;
    t.leftp = leftp;
    t.rightp = rightp;
    t.node = static_cast<int>(nodes_.size());
    Node leaf;
    leaf.kind = 0;
    leaf.idx = static_cast<int>(traps_.size());
    nodes_.push_back(leaf);
    traps_.push_back(t);
    return leaf.idx;
}

void Locator::insert(int si) {
    const Piece s = pieces_[static_cast<size_t>(si)];
    const Point& Q = pts_[static_cast<size_t>(s.q)];
    std::vector<int>& list = walk_;
    list.clear();
    int t = locate_start(s);
    list.push_back(t);
    for (;;) {
        int rp = traps_[static_cast<size_t>(t)].rightp;
        if (rp < 0 || !lex_less(pts_[static_cast<size_t>(rp)], Q)) break;
        int nt = locate_after(s, rp);
        if (nt == t || list.size() > traps_.size()) throw DegenerateInstance("point location walk stalled");
        t = nt;
        list.push_back(t);
    }
    const size_t k = list.size();
    const Trap D0 = traps_[static_cast<size_t>(list.front())];
    const Trap Dk = traps_[static_cast<size_t>(list.back())];
    bool hasA = D0.leftp != s.p;
    bool hasC = Dk.rightp != s.q;
    int A = hasA ? new_trap(D0.top, D0.bottom, D0.leftp, s.p) : -1;
    int C = hasC ? new_trap(Dk.top, Dk.bottom, s.q, Dk.rightp) : -1;
    std::vector<int>& U = up_;
    std::vector<int>& L = low_;
    U.resize(k);
    L.resize(k);
    int curU = new_trap(D0.top, si, s.p, -1);
    int curL = new_trap(si, D0.bottom, s.p, -1);
    for (size_t j = 0; j < k; ++j) {
        U[j] = curU;
        L[j] = curL;
        if (j + 1 == k) {
            traps_[static_cast<size_t>(curU)].rightp = s.q;
            traps_[static_cast<size_t>(curL)].rightp = s.q;
            break;
        }
        int rp = traps_[static_cast<size_t>(list[j])].rightp;
        const Point R = pts_[static_cast<size_t>(rp)];
        const Trap nxt = traps_[static_cast<size_t>(list[j + 1])];
        if (R.y > y_at(s, R.x)) {
            traps_[static_cast<size_t>(curU)].rightp = rp;
            curU = new_trap(nxt.top, si, rp, -1);
        } else {
            traps_[static_cast<size_t>(curL)].rightp = rp;
            curL = new_trap(si, nxt.bottom, rp, -1);
        }
    }
    auto add = [&](Node nd) {
        nodes_.push_back(nd);
        return static_cast<int>(nodes_.size() - 1);
    };
    for (size_t j = 0; j < k; ++j) {
        int old = traps_[static_cast<size_t>(list[j])].node;
        Node y{2, si, traps_[static_cast<size_t>(U[j])].node, traps_[static_cast<size_t>(L[j])].node};
        Node root = y;
        if (j + 1 == k && hasC) {
            int yi = add(y);
            root = Node{1, s.q, yi, traps_[static_cast<size_t>(C)].node};
        }
        if (j == 0 && hasA) {
            int ri = add(root);
            root = Node{1, s.p, traps_[static_cast<size_t>(A)].node, ri};
        }
        nodes_[static_cast<size_t>(old)] = root;
        traps_[static_cast<size_t>(list[j])].node = -1;
    }
}

int Locator::best_of(Point p, const int* cand, int k) const {
    int best = -1;
    double bd = kInf;
    for (int i = 0; i < k; ++i) {
        int f = cand[i];
        if (f < 0) continue;
        const Disk& d = disks_[static_cast<size_t>(f)];
        double w = std::sqrt((p.x - d.x) * (p.x - d.x) + (p.y - d.y) * (p.y - d.y)) - d.r;
        if (w < bd) {
            bd = w;
            best = f;
        }
    }
    return best;
}

int Locator::linear_face(Point p) const {
    int best = -1;
    double bd = kInf;
    for (size_t f = 0; f < disks_.size(); ++f) {
        if (empty_[f]) continue;
        const Disk& d = disks_[f];
        double w = std::sqrt((p.x - d.x) * (p.x - d.x) + (p.y - d.y) * (p.y - d.y)) - d.r;
        if (w < bd) {
            bd = w;
            best = static_cast<int>(f);
        }
    }
    return best;
}

int Locator::locate_local(Point p) const {
    if (!box_.contains(p) || nodes_.empty()) return linear_face(p);
    int n = 0;
    for (;;) {
        const Node& nd = nodes_[static_cast<size_t>(n)];
        if (nd.kind == 0) break;
        if (nd.kind == 1)
            n = lex_less(p, pts_[static_cast<size_t>(nd.idx)]) ? nd.a : nd.b;
        else {
            const Piece& c = pieces_[static_cast<size_t>(nd.idx)];
            bool above = p.y > c.yhi || (p.y >= c.ylo && p.y >= y_at(c, p.x));
            n = above ? nd.a : nd.b;
        }
    }
    const Trap& t = traps_[static_cast<size_t>(nodes_[static_cast<size_t>(n)].idx)];
    if (t.top < 0 || t.bottom < 0) return linear_face(p);
    const Piece& top = pieces_[static_cast<size_t>(t.top)];
    const Piece& bot = pieces_[static_cast<size_t>(t.bottom)];
    int cand[4] = {top.below, bot.above, top.above, bot.below};
    int f = best_of(p, cand, 4);
    return f >= 0 ? f : linear_face(p);
}

NearestResult Locator::nearest(Point world) const {
    int f = locate_local(frame_.to_local(world));
    NearestResult r;
    if (f < 0) return r;
    r.site = sites_[static_cast<size_t>(f)].id;
    r.distance = weighted_distance(world, sites_[static_cast<size_t>(f)]);
    return r;
}

NearestResult nearest_site(const Locator& loc, Point p) { return loc.nearest(p); }

Locator build_locator(const ApolloniusDiagram& d, uint64_t seed) {
    Locator L;
    L.sites_ = d.sites;
    L.disks_ = d.disks;
    L.frame_ = d.frame;
    L.box_ = d.box;
    L.empty_.assign(d.sites.size(), 0);
    for (size_t i = 0; i < d.sites.size(); ++i) L.empty_[i] = d.dominated[i] >= 0;
    const Box& B = d.box;

    std::unordered_map<std::pair<double, double>, int, PointHash> index;
    index.reserve(d.vertices.size() * 2 + 16);
    auto point_id = [&](Point p) {
        auto [it, fresh] = index.emplace(std::make_pair(p.x + 0.0, p.y + 0.0), static_cast<int>(L.pts_.size()));
        if (fresh) L.pts_.push_back(p);
        return it->second;
    };
    std::vector<int> vertex_pt(d.vertices.size(), -1);
    auto vertex_id = [&](int v) {
        if (vertex_pt[static_cast<size_t>(v)] < 0) vertex_pt[static_cast<size_t>(v)] = point_id(d.vertices[static_cast<size_t>(v)].p);
        return vertex_pt[static_cast<size_t>(v)];
    };
    // crossings on the top and bottom sides: x, point id, faces
    struct SideHit {
        double x;
        int pt;
        int f0, f1;
    };
    std::vector<SideHit> top_hits, bottom_hits;

    auto add_piece = [&](int arc, double la, int pa, double lb, int pb, int left_face, int right_face) {
        Point A = L.pts_[static_cast<size_t>(pa)];
        Point Bp = L.pts_[static_cast<size_t>(pb)];
        if (A.x == Bp.x) {
            ++L.skipped_;
            return;
        }
        Locator::Piece pc;
        pc.arc = arc;
        if (A.x < Bp.x) {
            pc.p = pa, pc.q = pb, pc.lp = la, pc.lq = lb;
            pc.above = left_face, pc.below = right_face;
        } else {
            pc.p = pb, pc.q = pa, pc.lp = lb, pc.lq = la;
            pc.above = right_face, pc.below = left_face;
        }
        pc.ylo = std::min(A.y, Bp.y);
        pc.yhi = std::max(A.y, Bp.y);
        auto yt = L.arcs_[static_cast<size_t>(arc)].y_turn();
        if (yt && *yt > std::min(la, lb) && *yt < std::max(la, lb)) {
            double y = L.arcs_[static_cast<size_t>(arc)].at(*yt).y;
            pc.ylo = std::min(pc.ylo, y);
            pc.yhi = std::max(pc.yhi, y);
        }
        // slack for rounding in the evaluation
        double pad = 1e-12 * (1 + std::fabs(pc.ylo) + std::fabs(pc.yhi));
        pc.ylo -= pad;
        pc.yhi += pad;
        L.pieces_.push_back(pc);
    };

    // breakpoints along an edge
    struct Stop {
        double lambda;
        int side;  // -1 vertex / turn
    };
    std::vector<Crossing> cuts;
    std::vector<Stop> stops;
    std::vector<int> stop_pts;
    L.pieces_.reserve(d.half_edges.size() + 8);
    L.arcs_.reserve(d.half_edges.size() / 2);
    L.pts_.reserve(d.vertices.size() + d.half_edges.size() / 2 + 8);
    for (size_t h = 0; h < d.half_edges.size(); h += 2) {
        const HalfEdge& e = d.half_edges[h];
        int u = e.face;
        int v = d.half_edges[h + 1].face;
        const Disk& du = d.disks[static_cast<size_t>(u)];
        const Disk& dv = d.disks[static_cast<size_t>(v)];
        BisectorArc arc = make_bisector(du, dv, u, v, false);
        if (arc.b <= 0) {
            ++L.skipped_;
            continue;
        }
        int o = e.origin;
        int t = d.dest(static_cast<int>(h));
        double l0 = o == kInfinite ? -kInf : arc.param(d.vertices[static_cast<size_t>(o)].p);
        double l1 = t == kInfinite ? kInf : arc.param(d.vertices[static_cast<size_t>(t)].p);
        if (!(l0 < l1)) {
            ++L.skipped_;
            continue;
        }
        int arc_id = static_cast<int>(L.arcs_.size());
        L.arcs_.push_back(arc);
        cuts.clear();
        auto collect = [&](const double* ls, int k, int side) {
            for (int i = 0; i < k; ++i)
                if (ls[i] > l0 && ls[i] < l1) cuts.push_back({ls[i], side});
        };
        double roots[2];
        collect(roots, arc.solve_x(B.xmin, roots), kLeft);
        collect(roots, arc.solve_x(B.xmax, roots), kRight);
        collect(roots, arc.solve_y(B.ymin, roots), kBottom);
        collect(roots, arc.solve_y(B.ymax, roots), kTop);
        std::sort(cuts.begin(), cuts.end(), [](const Crossing& a, const Crossing& b) { return a.lambda < b.lambda; });
        stops.clear();
        stops.push_back({l0, -1});
        for (const Crossing& c : cuts) stops.push_back({c.lambda, c.side});
        stops.push_back({l1, -1});
        auto stop_point = [&](size_t i) -> int {
            const Stop& s = stops[i];
            if (s.side < 0) return vertex_id(i == 0 ? o : t);
            Point p = arc.at(s.lambda);
            switch (s.side) {
                case kLeft: p.x = B.xmin; break;
                case kRight: p.x = B.xmax; break;
                case kBottom: p.y = B.ymin; break;
                default: p.y = B.ymax; break;
            }
            p.x = std::clamp(p.x, B.xmin, B.xmax);
            p.y = std::clamp(p.y, B.ymin, B.ymax);
            int id = point_id(p);
            if (p.y == B.ymax) top_hits.push_back({p.x, id, u, v});
            if (p.y == B.ymin) bottom_hits.push_back({p.x, id, u, v});
            return id;
        };
        stop_pts.assign(stops.size(), -2);
        auto sp = [&](size_t i) {
            if (stop_pts[i] == -2) stop_pts[i] = stop_point(i);
            return stop_pts[i];
        };
        for (size_t i = 0; i + 1 < stops.size(); ++i) {
            double a = stops[i].lambda;
            double b = stops[i + 1].lambda;
            if (!std::isfinite(a) || !std::isfinite(b)) continue;
            double mid = 0.5 * (a + b);
            if (!B.contains(arc.at(mid))) continue;
            int pa = sp(i);
            int pb = sp(i + 1);
            auto turn = arc.x_turn();
            if (turn && *turn > a && *turn < b) {
                int pm = point_id(arc.at(*turn));
                add_piece(arc_id, a, pa, *turn, pm, u, v);
                add_piece(arc_id, *turn, pm, b, pb, u, v);
            } else {
                add_piece(arc_id, a, pa, b, pb, u, v);
            }
        }
    }

    // box top and bottom, split at the crossings
    auto side_pieces = [&](std::vector<SideHit>& hits, double y, bool is_top) {
        std::sort(hits.begin(), hits.end(), [](const SideHit& a, const SideHit& b) { return a.x < b.x; });
        std::vector<SideHit> stops;
        stops.push_back({B.xmin, point_id({B.xmin, y}), -1, -1});
        for (const SideHit& h : hits) {
            if (h.x <= stops.back().x) {
                if (h.x == stops.back().x && stops.back().f0 < 0) stops.back() = h;
                continue;
            }
            stops.push_back(h);
        }
        if (stops.back().x < B.xmax) stops.push_back({B.xmax, point_id({B.xmax, y}), -1, -1});
        for (size_t i = 0; i + 1 < stops.size(); ++i) {
            Point mid{0.5 * (stops[i].x + stops[i + 1].x), y};
            int cand[4] = {stops[i].f0, stops[i].f1, stops[i + 1].f0, stops[i + 1].f1};
            int f = L.best_of(mid, cand, 4);
            if (f < 0) f = L.linear_face(mid);
            Locator::Piece pc;
            pc.p = stops[i].pt;
            pc.q = stops[i + 1].pt;
            pc.arc = -1;
            pc.ylo = pc.yhi = y;
            if (is_top)
                pc.below = f;
            else
                pc.above = f;
            L.pieces_.push_back(pc);
        }
    };
    side_pieces(top_hits, B.ymax, true);
    side_pieces(bottom_hits, B.ymin, false);

    // random insertion order
    std::vector<int> order(L.pieces_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    SplitMix64 rng(seed);
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    L.traps_.reserve(order.size() * 4 + 1);
    L.nodes_.reserve(order.size() * 8 + 1);
    L.new_trap(-1, -1, -1, -1);
    for (int si : order) L.insert(si);
    return L;
}

}  // namespace diskhop
