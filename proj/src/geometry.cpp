#include "diskhop/geometry.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <cstdlib>

namespace diskhop {

namespace {

using i128 = __int128;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

i128 sq(i128 v) { return v * v; }

}  // namespace

std::optional<int64_t> parse_decimal(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    i128 digits = 0;
    int ndigits = 0;
    int frac = 0;
    int dropped = 0;  // significant digits beyond what we keep
    bool any = false;
    bool round_up = false;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
            continue;
        }
        if (!is_digit(c)) break;
        any = true;
        if (ndigits < 30) {
            digits = digits * 10 + (c - '0');
            if (digits != 0) ++ndigits;
            if (seen_dot) ++frac;
        } else {
            if (dropped == 0) round_up = c >= '5';
            ++dropped;
            if (!seen_dot) --frac;
        }
    }
    if (!any) return std::nullopt;
    int exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
        if (ec != std::errc() || ptr == s.data() + i) return std::nullopt;
        i = static_cast<size_t>(ptr - s.data());
        exp10 = value;
    }
    if (i != s.size()) return std::nullopt;
    if (round_up) digits += 1;
    // value = digits * 10^(exp10 - frac); mantissa = value * 10^kGridDigits
    long shift = static_cast<long>(exp10) - frac + kGridDigits;
    if (digits == 0) return int64_t{0};
    if (shift > 0) {
        if (shift > 19) return std::nullopt;
        for (long k = 0; k < shift; ++k) {
            digits *= 10;
            if (digits > kMaxMantissa) return std::nullopt;
        }
    } else if (shift < 0) {
        if (shift < -38) return int64_t{0};
        i128 p = 1;
        for (long k = 0; k < -shift; ++k) p *= 10;
        i128 q = digits / p;
        i128 rem = digits % p;
        if (2 * rem >= p) ++q;
        digits = q;
    }
    if (digits > kMaxMantissa) return std::nullopt;
    int64_t m = static_cast<int64_t>(digits);
    return neg ? -m : m;
}

std::string format_decimal(int64_t m) {
    bool neg = m < 0;
    uint64_t a = neg ? static_cast<uint64_t>(-(m + 1)) + 1 : static_cast<uint64_t>(m);
    uint64_t ip = a / 1'000'000'000ULL;
    uint64_t fp = a % 1'000'000'000ULL;
    std::string out = neg && a != 0 ? "-" : "";
    out += std::to_string(ip);
    if (fp != 0) {
        std::string f = std::to_string(fp);
        f.insert(0, static_cast<size_t>(kGridDigits) - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += '.';
        out += f;
    }
    return out;
}

int64_t to_mantissa(double value) {
    if (!std::isfinite(value)) throw InputError("non-finite coordinate");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    auto m = parse_decimal(std::string_view(buf, static_cast<size_t>(res.ptr - buf)));
    if (!m) throw InputError("coordinate magnitude exceeds 4e9");
    return *m;
}

double from_mantissa(int64_t m) { return static_cast<double>(m) / kGrid; }

Site make_site_exact(int id, int64_t mx, int64_t my, int64_t mr) {
    if (mr < 0) throw InputError("negative radius");
    for (int64_t v : {mx, my, mr})
        if (v > kMaxMantissa || v < -kMaxMantissa) throw InputError("coordinate magnitude exceeds 4e9");
    Site s;
    s.id = id;
    s.exact = {mx, my, mr};
    s.center = {from_mantissa(mx), from_mantissa(my)};
    s.radius = from_mantissa(mr);
    return s;
}

Site make_site(int id, double x, double y, double r) {
    return make_site_exact(id, to_mantissa(x), to_mantissa(y), to_mantissa(r));
}

std::vector<Site> make_sites(const std::vector<std::vector<double>>& xyr) {
    std::vector<Site> out;
    out.reserve(xyr.size());
    for (size_t i = 0; i < xyr.size(); ++i) {
        if (xyr[i].size() != 3) throw InputError("site needs x, y, r");
        out.push_back(make_site(static_cast<int>(i), xyr[i][0], xyr[i][1], xyr[i][2]));
    }
    return out;
}

double weighted_distance(Point p, Point c, double r) { return std::sqrt((p.x - c.x) * (p.x - c.x) + (p.y - c.y) * (p.y - c.y)) - r; }

double weighted_distance(Point p, const Site& v) { return weighted_distance(p, v.center, v.radius); }

bool edge_predicate(const Site& u, const Site& v) {
    if (u.id == v.id) throw std::invalid_argument("edge_predicate on a site and itself");
    i128 dx = static_cast<i128>(u.exact.x) - v.exact.x;
    i128 dy = static_cast<i128>(u.exact.y) - v.exact.y;
    i128 s = static_cast<i128>(u.exact.r) + v.exact.r;
    return sq(dx) + sq(dy) <= sq(s);
}

bool domination_predicate(const Site& u, const Site& v) {
    if (u.id == v.id) return false;
    i128 s = static_cast<i128>(v.exact.r) - u.exact.r;
    if (s < 0) return false;
    i128 dx = static_cast<i128>(u.exact.x) - v.exact.x;
    i128 dy = static_cast<i128>(u.exact.y) - v.exact.y;
    i128 d2 = sq(dx) + sq(dy);
    if (d2 == 0 && s == 0) return u.id > v.id;
    return d2 <= sq(s);
}

Ordering compare_weighted(Point p, const Site& u, const Site& v) {
    double du = weighted_distance(p, u);
    double dv = weighted_distance(p, v);
    double scale = 1.0;
    for (double t : {p.x, p.y, u.center.x, u.center.y, v.center.x, v.center.y, u.radius, v.radius})
        scale = std::max(scale, std::fabs(t));
    double diff = du - dv;
    if (std::fabs(diff) <= kEps * scale) return Ordering::equal;
    return diff < 0 ? Ordering::less : Ordering::greater;
}

double apex_residual(const ApexPoint& q, const Disk& a, const Disk& b, const Disk& c) {
    double da = weighted_distance(q.p, {a.x, a.y}, a.r);
    double db = weighted_distance(q.p, {b.x, b.y}, b.r);
    double dc = weighted_distance(q.p, {c.x, c.y}, c.r);
    return std::max({std::fabs(da - db), std::fabs(db - dc), std::fabs(da - dc)});
}

namespace {

// Roots of qa*s^2 + qb*s + qc = 0, numerically stable form.
int quadratic_roots(double qa, double qb, double qc, double tol, double out[2]) {
    double big = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc)});
    if (big == 0) return 0;
    if (std::fabs(qa) <= 1e-14 * big) {
        if (qb == 0) return 0;
        out[0] = -qc / qb;
        return 1;
    }
    double disc = qb * qb - 4 * qa * qc;
    if (disc < 0) {
        if (disc < -tol * (qb * qb + std::fabs(4 * qa * qc))) return 0;
        disc = 0;
    }
    double sd = std::sqrt(disc);
    double q = -0.5 * (qb + (qb >= 0 ? sd : -sd));
    if (q == 0) {
        out[0] = 0;
        return 1;
    }
    out[0] = q / qa;
    out[1] = qc / q;
    return 2;
}

bool newton_refine(std::array<double, 3>& z, const std::array<Disk, 3>& d) {
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        double J[3][3];
        double F[3];
        for (int i = 0; i < 3; ++i) {
            double dx = z[0] - d[i].x;
            double dy = z[1] - d[i].y;
            double D = std::sqrt(dx * dx + dy * dy);
            if (D == 0) return false;
            F[i] = D - d[i].r - z[2];
            J[i][0] = dx / D;
            J[i][1] = dy / D;
            J[i][2] = -1;
        }
        double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                     J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                     J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        if (std::fabs(det) < 1e-300) return true;
        double step[3];
        for (int k = 0; k < 3; ++k) {
            double M[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) M[i][j] = j == k ? F[i] : J[i][j];
            step[k] = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) /
                      det;
        }
        double mag = std::max({std::fabs(step[0]), std::fabs(step[1]), std::fabs(step[2])});
        // stop once the step is at rounding level or has stopped shrinking
        if (!(mag < last)) break;
        last = mag;
        for (int k = 0; k < 3; ++k) z[k] -= step[k];
        if (mag <= 1e-15 * (1 + std::fabs(z[0]) + std::fabs(z[1]) + std::fabs(z[2]))) break;
    }
    return true;
}

}  // namespace

int apollonius_vertex(const Disk& A, const Disk& B, const Disk& C, ApexPoint out[2]) {
    int count = 0;
    const double ox = A.x;
    const double oy = A.y;
    std::array<Disk, 3> d{Disk{0, 0, A.r}, Disk{B.x - ox, B.y - oy, B.r}, Disk{C.x - ox, C.y - oy, C.r}};
    double scale = 0;
    for (const auto& k : d) scale = std::max({scale, std::fabs(k.x), std::fabs(k.y), k.r});
    if (scale == 0) return 0;
    const double r1 = d[0].r;
    // rows: 2 x_i X + 2 y_i Y + 2 (r_i - r1) rho = x_i^2 + y_i^2 - r_i^2 + r1^2
    double M[2][3];
    double f[2];
    for (int i = 0; i < 2; ++i) {
        const Disk& k = d[i + 1];
        M[i][0] = 2 * k.x;
        M[i][1] = 2 * k.y;
        M[i][2] = 2 * (k.r - r1);
        f[i] = k.x * k.x + k.y * k.y - k.r * k.r + r1 * r1;
    }
    // pick the 2x2 minor with the largest determinant; the left-out column is the parameter
    int best_free = -1;
    double best_det = 0;
    for (int freec = 0; freec < 3; ++freec) {
        int c0 = freec == 0 ? 1 : 0;
        int c1 = freec == 2 ? 1 : 2;
        double det = M[0][c0] * M[1][c1] - M[0][c1] * M[1][c0];
        if (std::fabs(det) > std::fabs(best_det)) {
            best_det = det;
            best_free = freec;
        }
    }
    if (best_free < 0 || std::fabs(best_det) <= 1e-13 * scale * scale) return 0;
    int c0 = best_free == 0 ? 1 : 0;
    int c1 = best_free == 2 ? 1 : 2;
    // unknown_k = alpha_k + beta_k * s where s is the free unknown
    double alpha[3];
    double beta[3];
    alpha[best_free] = 0;
    beta[best_free] = 1;
    {
        double g0 = f[0], g1 = f[1];
        double h0 = -M[0][best_free], h1 = -M[1][best_free];
        alpha[c0] = (g0 * M[1][c1] - g1 * M[0][c1]) / best_det;
        alpha[c1] = (M[0][c0] * g1 - M[1][c0] * g0) / best_det;
        beta[c0] = (h0 * M[1][c1] - h1 * M[0][c1]) / best_det;
        beta[c1] = (M[0][c0] * h1 - M[1][c0] * h0) / best_det;
    }
    // X^2 + Y^2 = (rho + r1)^2
    double ar = alpha[2] + r1;
    double qa = beta[0] * beta[0] + beta[1] * beta[1] - beta[2] * beta[2];
    double qb = 2 * (alpha[0] * beta[0] + alpha[1] * beta[1] - ar * beta[2]);
    double qc = alpha[0] * alpha[0] + alpha[1] * alpha[1] - ar * ar;
    double roots[2];
    int nr = quadratic_roots(qa, qb, qc, 1e-12, roots);
    for (int k = 0; k < nr; ++k) {
        double s = roots[k];
        std::array<double, 3> z{alpha[0] + beta[0] * s, alpha[1] + beta[1] * s, alpha[2] + beta[2] * s};
        bool ok = true;
        for (const auto& k : d)
            if (z[2] + k.r < -1e-9 * scale) ok = false;
        if (!ok) continue;
        if (!newton_refine(z, d)) continue;
        ApexPoint q{{z[0] + ox, z[1] + oy}, z[2]};
        bool dup = false;
        for (int e = 0; e < count; ++e)
            if (std::fabs(out[e].p.x - q.p.x) + std::fabs(out[e].p.y - q.p.y) <= 1e-12 * (1 + scale)) dup = true;
        if (dup) continue;
        double res = apex_residual(q, A, B, C);
        if (res > 1e-9 * std::max(1.0, scale)) continue;
        out[count++] = q;
    }
    if (count == 2 && out[1].rho < out[0].rho) std::swap(out[0], out[1]);
    return count;
}

std::vector<ApexPoint> apollonius_vertex(const Disk& A, const Disk& B, const Disk& C) {
    ApexPoint buf[2];
    int k = apollonius_vertex(A, B, C, buf);
    return std::vector<ApexPoint>(buf, buf + k);
}

std::vector<ApexPoint> apollonius_vertex(const Site& u, const Site& v, const Site& w) {
    return apollonius_vertex(Disk{u.center.x, u.center.y, u.radius}, Disk{v.center.x, v.center.y, v.radius},
                             Disk{w.center.x, w.center.y, w.radius});
}

Point BisectorArc::at(double lambda) const {
    double s = a * std::sqrt(1 + lambda * lambda);
    double t = b * lambda;
    return {m.x + s * e1.x + t * e2.x, m.y + s * e1.y + t * e2.y};
}

double BisectorArc::param(Point p) const {
    double w = (p.x - m.x) * e2.x + (p.y - m.y) * e2.y;
    return w / b;
}

std::optional<double> BisectorArc::x_turn() const {
    double A = a * e1.x;
    double B = b * e2.x;
    if (A == 0) return std::nullopt;
    double q = -B / A;
    if (!(std::fabs(q) < 1)) return std::nullopt;
    return q / std::sqrt((1 - q) * (1 + q));
}

namespace {

int solve_axis(double A, double B, double Xp, double out[2]) {
    // A sqrt(1+l^2) + B l = Xp
    double qa = A * A - B * B;
    double qb = 2 * B * Xp;
    double qc = A * A - Xp * Xp;
    double mag = std::fabs(A) + std::fabs(B) + std::fabs(Xp);
    double roots[2];
    int nr = 0;
    double big = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc)});
    if (big == 0) return 0;
    if (std::fabs(qa) <= 1e-14 * big) {
        if (qb != 0) roots[nr++] = -qc / qb;
    } else {
        double disc = qb * qb - 4 * qa * qc;
        if (disc < 0) {
            if (disc < -1e-12 * (qb * qb + std::fabs(4 * qa * qc))) return 0;
            disc = 0;
        }
        double sd = std::sqrt(disc);
        double q = -0.5 * (qb + (qb >= 0 ? sd : -sd));
        if (q != 0) {
            roots[nr++] = q / qa;
            roots[nr++] = qc / q;
        } else {
            roots[nr++] = 0.0;
        }
    }
    int n = 0;
    for (int k = 0; k < nr; ++k) {
        double l = roots[k];
        double g = A * std::sqrt(1 + l * l) + B * l - Xp;
        for (int it = 0; it < 3 && std::fabs(g) > 1e-15 * mag * (1 + std::fabs(l)); ++it) {
            double sq1 = std::sqrt(1 + l * l);
            double dg = A * l / sq1 + B;
            if (dg == 0) break;
            l -= g / dg;
            g = A * std::sqrt(1 + l * l) + B * l - Xp;
        }
        if (!(std::fabs(g) <= 1e-9 * mag * (1 + std::fabs(l)))) continue;
        if (n == 1 && std::fabs(out[0] - l) <= 1e-12 * (1 + std::fabs(l))) continue;
        out[n++] = l;
    }
    if (n == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
    return n;
}

std::optional<double> turn(double A, double B) {
    if (A == 0) return std::nullopt;
    double q = -B / A;
    if (!(std::fabs(q) < 1)) return std::nullopt;
    return q / std::sqrt((1 - q) * (1 + q));
}

}  // namespace

int BisectorArc::solve_x(double X, double out[2]) const { return solve_axis(a * e1.x, b * e2.x, X - m.x, out); }

int BisectorArc::solve_y(double Y, double out[2]) const { return solve_axis(a * e1.y, b * e2.y, Y - m.y, out); }

std::vector<double> BisectorArc::solve_x(double X) const {
    double r[2];
    int n = solve_x(X, r);
    return std::vector<double>(r, r + n);
}

std::vector<double> BisectorArc::solve_y(double Y) const {
    double r[2];
    int n = solve_y(Y, r);
    return std::vector<double>(r, r + n);
}

std::optional<double> BisectorArc::y_turn() const { return turn(a * e1.y, b * e2.y); }

Point BisectorArc::asymptote(int sign) const {
    double s = sign > 0 ? 1.0 : -1.0;
    Point d{a * e1.x + s * b * e2.x, a * e1.y + s * b * e2.y};
    double L = std::sqrt(d.x * d.x + d.y * d.y);
    return {d.x / L, d.y / L};
}

BisectorArc make_bisector(const Disk& u, const Disk& v, int uid, int vid, bool dominated) {
    BisectorArc arc;
    arc.u = uid;
    arc.v = vid;
    double dx = v.x - u.x;
    double dy = v.y - u.y;
    double L = std::sqrt(dx * dx + dy * dy);
    if (dominated || L == 0) {
        arc.kind = BisectorArc::Kind::empty;
        return arc;
    }
    arc.e1 = {dx / L, dy / L};
    arc.e2 = {-arc.e1.y, arc.e1.x};
    arc.m = {(u.x + v.x) / 2, (u.y + v.y) / 2};
    arc.a = (u.r - v.r) / 2;
    double c = L / 2;
    arc.b = std::sqrt(std::max(0.0, (c - std::fabs(arc.a)) * (c + std::fabs(arc.a))));
    arc.kind = u.r == v.r ? BisectorArc::Kind::line : BisectorArc::Kind::hyperbola;
    return arc;
}

BisectorArc make_bisector(const Site& u, const Site& v) {
    bool dom = domination_predicate(u, v) || domination_predicate(v, u);
    BisectorArc arc = make_bisector(Disk{u.center.x, u.center.y, u.radius}, Disk{v.center.x, v.center.y, v.radius},
                                    u.id, v.id, dom);
    if (arc.kind != BisectorArc::Kind::empty)
        arc.kind = u.exact.r == v.exact.r ? BisectorArc::Kind::line : BisectorArc::Kind::hyperbola;
    return arc;
}

}  // namespace diskhop
