#include "diskhop/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

namespace diskhop {

namespace {

using i128 = __int128;

struct Rotation {
    int64_t ca, sa, hyp;
};

// Pythagorean triples; rotation angles nobody draws test inputs along.
constexpr Rotation kRotations[] = {{20, 21, 29}, {33, 56, 65}, {119, 120, 169}, {48, 55, 73}, {65, 72, 97}};

}  // namespace

int frame_rotation_count() { return static_cast<int>(std::size(kRotations)); }

Point Frame::to_local(Point p) const {
    double X = (p.x - ox) / scale - 0.5;
    double Y = (p.y - oy) / scale - 0.5;
    double c = static_cast<double>(ca) / static_cast<double>(hyp);
    double s = static_cast<double>(sa) / static_cast<double>(hyp);
    return {c * X - s * Y, s * X + c * Y};
}

Point Frame::to_world(Point p) const {
    double c = static_cast<double>(ca) / static_cast<double>(hyp);
    double s = static_cast<double>(sa) / static_cast<double>(hyp);
    double X = c * p.x + s * p.y;
    double Y = -s * p.x + c * p.y;
    return {(X + 0.5) * scale + ox, (Y + 0.5) * scale + oy};
}

Frame make_frame(const std::vector<Site>& sites, int rotation) {
    Frame f;
    const Rotation& r = kRotations[static_cast<size_t>(rotation) % std::size(kRotations)];
    f.rotation = rotation;
    f.ca = r.ca;
    f.sa = r.sa;
    f.hyp = r.hyp;
    if (sites.empty()) return f;
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    double rmax = 0;
    for (const auto& s : sites) {
        xmin = std::min(xmin, s.center.x);
        xmax = std::max(xmax, s.center.x);
        ymin = std::min(ymin, s.center.y);
        ymax = std::max(ymax, s.center.y);
        rmax = std::max(rmax, s.radius);
    }
    double ext = std::max(xmax - xmin, ymax - ymin);
    if (ext <= 0) ext = rmax > 0 ? rmax : 1.0;
    f.scale = ext;
    f.ox = xmin;
    f.oy = ymin;
    return f;
}

Box clip_box(const std::vector<Site>& extent, const Frame& frame) {
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    for (const auto& s : extent) {
        Point p = frame.to_local(s.center);
        double r = frame.len_to_local(s.radius);
        xmin = std::min(xmin, p.x - r);
        xmax = std::max(xmax, p.x + r);
        ymin = std::min(ymin, p.y - r);
        ymax = std::max(ymax, p.y + r);
    }
    if (extent.empty()) xmin = ymin = -0.5, xmax = ymax = 0.5;
    double cx = (xmin + xmax) / 2;
    double cy = (ymin + ymax) / 2;
    double half = 1.5 * std::max({xmax - xmin, ymax - ymin, 1e-6});
    return {cx - half, cy - half, cx + half, cy + half};
}

std::vector<Placement> make_placements(const std::vector<Site>& extent) {
    std::vector<Placement> out;
    for (int r = 0; r < frame_rotation_count(); ++r) {
        Placement p;
        p.frame = make_frame(extent, r);
        p.box = clip_box(extent, p.frame);
        out.push_back(p);
    }
    return out;
}

size_t ApolloniusDiagram::num_faces() const {
    size_t f = 0;
    for (int w : dominated)
        if (w < 0) ++f;
    return f;
}

namespace {

struct Arc {
    int site = -1;
    Arc* prev = nullptr;
    Arc* next = nullptr;
    Arc* l = nullptr;
    Arc* r = nullptr;
    Arc* parent = nullptr;
    uint64_t prio = 0;
    int he_right = -1;  // half-edge of `site` traced by the breakpoint with `next`
    uint32_t version = 0;
    bool alive = true;
};

struct CircleEvent {
    double t;
    Point c;
    double rho;
    Arc* arc;
    uint32_t version;
    uint64_t seq;
};

struct Later {
    bool operator()(const CircleEvent& a, const CircleEvent& b) const {
        if (a.t != b.t) return a.t > b.t;
        return a.seq > b.seq;
    }
};

double angle_key(Point c, const Disk& d) {
    double th = std::atan2(c.x - d.x, -(c.y - d.y));
    if (th <= 0) th += 2 * M_PI;
    return th;
}

class Sweep {
public:
    explicit Sweep(ApolloniusDiagram& d) : d_(d) {}

    void run(const std::vector<i128>& keys) {
        const size_t m = d_.sites.size();
        t_.resize(m);
        for (size_t i = 0; i < m; ++i) t_[i] = d_.disks[i].y - d_.disks[i].r;
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (keys[static_cast<size_t>(a)] != keys[static_cast<size_t>(b)])
                return keys[static_cast<size_t>(a)] < keys[static_cast<size_t>(b)];
            const Site& sa = d_.sites[static_cast<size_t>(a)];
            const Site& sb = d_.sites[static_cast<size_t>(b)];
            if (sa.exact.r != sb.exact.r) return sa.exact.r > sb.exact.r;
            return sa.id < sb.id;
        });
        keys_ = &keys;
        size_t si = 0;
        while (si < m || !events_.empty()) {
            bool site_first = si < m && (events_.empty() || t_[static_cast<size_t>(order[si])] < events_.top().t);
            if (site_first) {
                site_event(order[si++]);
            } else {
                CircleEvent e = events_.top();
                events_.pop();
                circle_event(e);
            }
        }
        finish();
    }

private:
    ApolloniusDiagram& d_;
    const std::vector<i128>* keys_ = nullptr;
    std::vector<double> t_;
    std::deque<Arc> pool_;
    Arc* root_ = nullptr;
    double now_ = -std::numeric_limits<double>::infinity();
    std::priority_queue<CircleEvent, std::vector<CircleEvent>, Later> events_;
    uint64_t seq_ = 0;
    uint64_t rng_ = 0x9e3779b97f4a7c15ULL;

    uint64_t next_prio() {
        rng_ ^= rng_ << 13;
        rng_ ^= rng_ >> 7;
        rng_ ^= rng_ << 17;
        return rng_;
    }

    Arc* new_arc(int site) {
        pool_.emplace_back();
        Arc* a = &pool_.back();
        a->site = site;
        a->prio = next_prio();
        return a;
    }

    int new_edge_pair(int left_face, int right_face) {
        int h = static_cast<int>(d_.half_edges.size());
        HalfEdge a, b;
        a.face = left_face;
        a.twin = h + 1;
        b.face = right_face;
        b.twin = h;
        d_.half_edges.push_back(a);
        d_.half_edges.push_back(b);
        return h;
    }

    HalfEdge& he(int h) { return d_.half_edges[static_cast<size_t>(h)]; }

    double height(int i) const { return std::max(0.0, now_ - t_[static_cast<size_t>(i)]); }

    double breakpoint(int L, int R) const {
        const Disk& u = d_.disks[static_cast<size_t>(L)];
        const Disk& v = d_.disks[static_cast<size_t>(R)];
        double hu = height(L);
        double hv = height(R);
        if (hu == 0 && hv == 0) return 0.5 * (u.x + v.x);
        if (hu == 0) return u.x;
        if (hv == 0) return v.x;
        double A = hu - hv;
        double B = 2 * (hv * u.x - hu * v.x);
        double C = hu * v.x * v.x - hv * u.x * u.x + hu * hv * (2 * (u.y - v.y) + hu - hv);
        double D = std::max(0.0, B * B - 4 * A * C);
        double sD = std::sqrt(D);
        if (B < 0) return 2 * C / (sD - B);
        if (A == 0) return B == 0 ? 0.5 * (u.x + v.x) : -C / B;
        return (-B - sD) / (2 * A);
    }

    Arc* find(double x) const {
        Arc* n = root_;
        for (;;) {
            if (n->prev && x < breakpoint(n->prev->site, n->site)) {
                if (!n->l) return n;
                n = n->l;
                continue;
            }
            if (n->next && x > breakpoint(n->site, n->next->site)) {
                if (!n->r) return n;
                n = n->r;
                continue;
            }
            return n;
        }
    }

    void rotate_up(Arc* x) {
        Arc* p = x->parent;
        Arc* g = p->parent;
        if (p->l == x) {
            p->l = x->r;
            if (x->r) x->r->parent = p;
            x->r = p;
        } else {
            p->r = x->l;
            if (x->l) x->l->parent = p;
            x->l = p;
        }
        p->parent = x;
        x->parent = g;
        if (!g)
            root_ = x;
        else if (g->l == p)
            g->l = x;
        else
            g->r = x;
    }

    void insert_after(Arc* a, Arc* b) {
        b->prev = a;
        b->next = a->next;
        if (a->next) a->next->prev = b;
        a->next = b;
        if (!a->r) {
            a->r = b;
            b->parent = a;
        } else {
            Arc* c = a->r;
            while (c->l) c = c->l;
            c->l = b;
            b->parent = c;
        }
        while (b->parent && b->parent->prio < b->prio) rotate_up(b);
    }

    void erase(Arc* x) {
        while (x->l || x->r) {
            Arc* c = !x->l ? x->r : !x->r ? x->l : (x->l->prio > x->r->prio ? x->l : x->r);
            rotate_up(c);
        }
        Arc* p = x->parent;
        if (!p)
            root_ = nullptr;
        else if (p->l == x)
            p->l = nullptr;
        else
            p->r = nullptr;
        if (x->prev) x->prev->next = x->next;
        if (x->next) x->next->prev = x->prev;
        x->alive = false;
        ++x->version;
    }

    void check_circle(Arc* b) {
        ++b->version;
        Arc* a = b->prev;
        Arc* c = b->next;
        if (!a || !c) return;
        if (a->site == c->site || a->site == b->site || b->site == c->site) return;
        const Disk& da = d_.disks[static_cast<size_t>(a->site)];
        const Disk& db = d_.disks[static_cast<size_t>(b->site)];
        const Disk& dc = d_.disks[static_cast<size_t>(c->site)];
        double best = std::numeric_limits<double>::infinity();
        ApexPoint pick{};
        ApexPoint cand[2];
        int nc = apollonius_vertex(da, db, dc, cand);
        for (int k = 0; k < nc; ++k) {
            const ApexPoint& q = cand[k];
            double ka = angle_key(q.p, da), kb = angle_key(q.p, db), kc = angle_key(q.p, dc);
            if (!(ka < kb && kb < kc)) continue;
            double tau = q.p.y + q.rho;
            if (tau < now_ - 1e-11) continue;
            tau = std::max(tau, now_);
            if (tau < best) {
                best = tau;
                pick = q;
            }
        }
        if (!std::isfinite(best)) return;
        events_.push({best, pick.p, pick.rho, b, b->version, seq_++});
        ++d_.stats.queue_pushes;
    }

    void site_event(int i) {
        ++d_.stats.site_events;
        now_ = std::max(now_, t_[static_cast<size_t>(i)]);
        if (!root_) {
            root_ = new_arc(i);
            return;
        }
        Arc* a = find(d_.disks[static_cast<size_t>(i)].x);
        int u = a->site;
        const Site& si = d_.sites[static_cast<size_t>(i)];
        const Site& su = d_.sites[static_cast<size_t>(u)];
        // a tie in x can land next to the dominator's arc
        for (Arc* w : {a, a->prev, a->next}) {
            if (!w || !domination_predicate(si, d_.sites[static_cast<size_t>(w->site)])) continue;
            d_.dominated[static_cast<size_t>(i)] = w->site;
            return;
        }
        if (domination_predicate(su, si)) throw DegenerateInstance("site activated inside a later disk");
        if ((*keys_)[static_cast<size_t>(u)] == (*keys_)[static_cast<size_t>(i)])
            throw DegenerateInstance("simultaneous site events");
        Arc* b = new_arc(i);
        Arc* a2 = new_arc(u);
        a2->he_right = a->he_right;
        int h = new_edge_pair(u, i);
        a->he_right = h;
        b->he_right = h + 1;
        insert_after(a, b);
        insert_after(b, a2);
        check_circle(a);
        check_circle(b);
        check_circle(a2);
    }

    void circle_event(const CircleEvent& e) {
        Arc* b = e.arc;
        if (!b->alive || e.version != b->version) {
            ++d_.stats.stale_events;
            return;
        }
        ++d_.stats.circle_events;
        now_ = std::max(now_, e.t);
        Arc* a = b->prev;
        Arc* c = b->next;
        int k = static_cast<int>(d_.vertices.size());
        Vertex v;
        v.p = e.c;
        v.rho = e.rho;
        v.sites[0] = a->site;
        v.sites[1] = b->site;
        v.sites[2] = c->site;
        int hab = a->he_right;
        int hbc = b->he_right;
        he(hab ^ 1).origin = k;
        he(hbc ^ 1).origin = k;
        int h = new_edge_pair(a->site, c->site);
        he(h).origin = k;
        a->he_right = h;
        he(hab).next = h;
        he(hbc).next = hab ^ 1;
        he(h ^ 1).next = hbc ^ 1;
        v.edge = h;
        d_.vertices.push_back(v);
        erase(b);
        check_circle(a);
        check_circle(c);
    }

    double inf_angle(int h, int sign) const {
        const HalfEdge& e = d_.half_edges[static_cast<size_t>(h)];
        const HalfEdge& t = d_.half_edges[static_cast<size_t>(e.twin)];
        BisectorArc arc = make_bisector(d_.disks[static_cast<size_t>(e.face)], d_.disks[static_cast<size_t>(t.face)],
                                        e.face, t.face, false);
        Point dir = arc.asymptote(sign);
        return std::atan2(dir.y, dir.x);
    }

    // A face may reach infinity through several chains (a band between two
    // branches); at infinity each outgoing chain continues with the incoming
    // chain that follows it counter-clockwise.
    void finish() {
        const size_t m = d_.sites.size();
        std::vector<std::vector<int>> outs(m), ins(m);
        for (size_t h = 0; h < d_.half_edges.size(); ++h) {
            const HalfEdge& e = d_.half_edges[h];
            size_t f = static_cast<size_t>(e.face);
            if (e.origin == kInfinite) ins[f].push_back(static_cast<int>(h));
            if (d_.dest(static_cast<int>(h)) == kInfinite) outs[f].push_back(static_cast<int>(h));
            d_.face_edge[f] = static_cast<int>(h);
        }
        for (size_t f = 0; f < m; ++f) {
            if (outs[f].size() != ins[f].size()) throw DegenerateInstance("unbalanced unbounded face");
            if (outs[f].empty()) continue;
            if (outs[f].size() == 1) {
                he(outs[f][0]).next = ins[f][0];
                continue;
            }
            std::vector<double> in_angle;
            for (int h : ins[f]) in_angle.push_back(inf_angle(h, -1));
            std::vector<char> used(ins[f].size(), 0);
            for (int h : outs[f]) {
                double a0 = inf_angle(h, +1);
                size_t best = ins[f].size();
                double bd = 10;
                for (size_t k = 0; k < ins[f].size(); ++k) {
                    double dlt = in_angle[k] - a0;
                    while (dlt < -1e-12) dlt += 2 * M_PI;
                    while (dlt >= 2 * M_PI - 1e-12) dlt -= 2 * M_PI;
                    if (dlt < bd) {
                        bd = dlt;
                        best = k;
                    }
                }
                if (best == ins[f].size() || used[best]) throw DegenerateInstance("ambiguous unbounded chains");
                used[best] = 1;
                he(h).next = ins[f][best];
            }
        }
        for (size_t h = 0; h < d_.half_edges.size(); ++h) {
            int n = d_.half_edges[h].next;
            if (n < 0) throw DegenerateInstance("half-edge without successor");
            he(n).prev = static_cast<int>(h);
        }
    }
};

}  // namespace

ApolloniusDiagram build_diagram_once(const std::vector<Site>& sites, const Placement& placement) {
    ApolloniusDiagram d;
    d.sites = sites;
    d.frame = placement.frame;
    d.box = placement.box;
    const size_t m = sites.size();
    d.disks.resize(m);
    d.dominated.assign(m, -1);
    d.face_edge.assign(m, -1);
    std::vector<i128> keys(m);
    const Frame& f = placement.frame;
    for (size_t i = 0; i < m; ++i) {
        Point p = f.to_local(sites[i].center);
        d.disks[i] = {p.x, p.y, f.len_to_local(sites[i].radius)};
        keys[i] = static_cast<i128>(f.sa) * sites[i].exact.x + static_cast<i128>(f.ca) * sites[i].exact.y -
                  static_cast<i128>(f.hyp) * sites[i].exact.r;
    }
    if (m == 0) return d;
    Sweep sweep(d);
    sweep.run(keys);
    DiagramAudit a = audit_diagram(d);
    if (!a.ok()) throw DegenerateInstance("diagram audit failed: " + a.detail);
    return d;
}

ApolloniusDiagram build_diagram(const std::vector<Site>& sites, const std::vector<Placement>& placements,
                                size_t first) {
    std::string last = "no placements";
    for (size_t k = 0; k < placements.size(); ++k) {
        size_t idx = (first + k) % placements.size();
        try {
            ApolloniusDiagram d = build_diagram_once(sites, placements[idx]);
            d.placement = idx;
            return d;
        } catch (const DegenerateInstance& e) {
            last = e.what();
        }
    }
    throw DegenerateInstance("degenerate instance: " + last);
}

ApolloniusDiagram build_diagram(const std::vector<Site>& sites) {
    if (sites.empty()) throw InputError("empty instance");
    return build_diagram(sites, make_placements(sites));
}

DiagramAudit audit_diagram(const ApolloniusDiagram& d) {
    DiagramAudit a;
    const long long n = static_cast<long long>(d.sites.size());
    a.V = static_cast<long long>(d.num_vertices());
    a.E = static_cast<long long>(d.num_edges());
    a.F = static_cast<long long>(d.num_faces());
    a.euler = n == 0 || a.V - a.E + a.F == 2;
    a.size_bounds = a.V <= std::max(2 * n, 1LL) && a.E <= 3 * n && a.F <= n + 1;
    std::string detail;
    if (!a.euler) detail += "euler ";
    if (!a.size_bounds) detail += "size ";

    a.cycles = true;
    std::vector<char> seen(d.half_edges.size(), 0);
    long long cycles = 0;
    for (size_t h0 = 0; h0 < d.half_edges.size() && a.cycles; ++h0) {
        if (seen[h0]) continue;
        ++cycles;
        size_t h = h0;
        size_t steps = 0;
        do {
            const HalfEdge& e = d.half_edges[h];
            if (e.next < 0 || e.face != d.half_edges[h0].face || seen[h]) {
                a.cycles = false;
                break;
            }
            seen[h] = 1;
            h = static_cast<size_t>(e.next);
            if (++steps > d.half_edges.size()) {
                a.cycles = false;
                break;
            }
        } while (h != h0);
    }
    if (a.cycles && !d.half_edges.empty() && cycles != a.F) a.cycles = false;
    if (!a.cycles) detail += "cycles ";

    a.vertex_residuals = true;
    for (const Vertex& v : d.vertices) {
        ApexPoint q{v.p, v.rho};
        double r = apex_residual(q, d.disks[static_cast<size_t>(v.sites[0])], d.disks[static_cast<size_t>(v.sites[1])],
                                 d.disks[static_cast<size_t>(v.sites[2])]);
        a.max_residual = std::max(a.max_residual, r);
    }
    if (a.max_residual >= 1e-9) {
        a.vertex_residuals = false;
        detail += "residual ";
    }

    a.dominated_witnesses = true;
    for (size_t i = 0; i < d.dominated.size(); ++i) {
        int w = d.dominated[i];
        if (w < 0) continue;
        if (d.dominated[static_cast<size_t>(w)] >= 0 || !domination_predicate(d.sites[i], d.sites[static_cast<size_t>(w)]))
            a.dominated_witnesses = false;
    }
    if (!a.dominated_witnesses) detail += "witness ";
    a.detail = detail;
    return a;
}

void dump_diagram(const ApolloniusDiagram& d, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "diagram sites %zu vertices %zu edges %zu faces %zu\n", d.sites.size(),
                  d.num_vertices(), d.num_edges(), d.num_faces());
    out << buf;
    for (size_t i = 0; i < d.sites.size(); ++i) {
        const Site& s = d.sites[i];
        std::snprintf(buf, sizeof buf, "site %d %.12g %.12g %.12g", s.id, s.center.x, s.center.y, s.radius);
        out << buf;
        if (d.dominated[i] >= 0) out << " dominated " << d.sites[static_cast<size_t>(d.dominated[i])].id;
        out << '\n';
    }
    for (size_t k = 0; k < d.vertices.size(); ++k) {
        const Vertex& v = d.vertices[k];
        Point w = d.frame.to_world(v.p);
        std::snprintf(buf, sizeof buf, "vertex %zu %.12g %.12g %.12g %d %d %d\n", k, w.x, w.y,
                      d.frame.len_to_world(v.rho), d.sites[static_cast<size_t>(v.sites[0])].id,
                      d.sites[static_cast<size_t>(v.sites[1])].id, d.sites[static_cast<size_t>(v.sites[2])].id);
        out << buf;
    }
    for (size_t h = 0; h < d.half_edges.size(); h += 2) {
        const HalfEdge& e = d.half_edges[h];
        int o = e.origin;
        int t = d.dest(static_cast<int>(h));
        out << "edge " << h / 2 << ' ' << d.sites[static_cast<size_t>(e.face)].id << ' '
            << d.sites[static_cast<size_t>(d.half_edges[h + 1].face)].id << ' '
            << (o == kInfinite ? std::string("inf") : std::to_string(o)) << ' '
            << (t == kInfinite ? std::string("inf") : std::to_string(t)) << '\n';
    }
}

DualGraph extract_dual(const ApolloniusDiagram& d) {
    DualGraph g;
    int maxid = -1;
    for (const Site& s : d.sites) maxid = std::max(maxid, s.id);
    g.adj.assign(static_cast<size_t>(maxid + 1), {});
    g.dominated.assign(static_cast<size_t>(maxid + 1), 0);
    for (size_t i = 0; i < d.sites.size(); ++i)
        if (d.dominated[i] >= 0) g.dominated[static_cast<size_t>(d.sites[i].id)] = 1;
    for (size_t h = 0; h < d.half_edges.size(); h += 2) {
        int u = d.sites[static_cast<size_t>(d.half_edges[h].face)].id;
        int v = d.sites[static_cast<size_t>(d.half_edges[h + 1].face)].id;
        if (u == v) continue;
        g.adj[static_cast<size_t>(u)].push_back(v);
        g.adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.edges += a.size();
    }
    g.edges /= 2;
    return g;
}

bool dual_is_simple_symmetric(const DualGraph& g) {
    for (size_t u = 0; u < g.adj.size(); ++u) {
        const auto& a = g.adj[u];
        for (size_t k = 0; k < a.size(); ++k) {
            int v = a[k];
            if (v == static_cast<int>(u) || v < 0 || static_cast<size_t>(v) >= g.adj.size()) return false;
            if (k > 0 && a[k - 1] >= v) return false;
            const auto& b = g.adj[static_cast<size_t>(v)];
            if (!std::binary_search(b.begin(), b.end(), static_cast<int>(u))) return false;
            if (g.dominated[u] || g.dominated[static_cast<size_t>(v)]) return false;
        }
    }
    return true;
}

}  // namespace diskhop
