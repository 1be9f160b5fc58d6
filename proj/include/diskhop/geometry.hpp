#ifndef DISKHOP_GEOMETRY_HPP
#define DISKHOP_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diskhop {

// Coordinates and radii live on a fixed decimal grid of 1e-9 so the
// squared predicates can be decided with 128-bit integers.
inline constexpr int kGridDigits = 9;
inline constexpr double kGrid = 1e9;
inline constexpr int64_t kMaxMantissa = 4'000'000'000'000'000'000LL;  // |value| <= 4e9

inline constexpr double kEps = 1e-9;

struct Point {
    double x = 0;
    double y = 0;
};

struct Fixed {
    int64_t x = 0;
    int64_t y = 0;
    int64_t r = 0;
};

struct Site {
    int id = 0;
    Point center;
    double radius = 0;
    Fixed exact;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses a plain decimal ("-12.5", "3", ".25", "1e-3") onto the grid.
std::optional<int64_t> parse_decimal(std::string_view text);
std::string format_decimal(int64_t mantissa);
int64_t to_mantissa(double value);
double from_mantissa(int64_t mantissa);

Site make_site(int id, double x, double y, double r);
Site make_site_exact(int id, int64_t mx, int64_t my, int64_t mr);
std::vector<Site> make_sites(const std::vector<std::vector<double>>& xyr);

double weighted_distance(Point p, const Site& v);
double weighted_distance(Point p, Point c, double r);

bool edge_predicate(const Site& u, const Site& v);
// true when u's region is empty because of v
bool domination_predicate(const Site& u, const Site& v);

enum class Ordering { less, equal, greater };
Ordering compare_weighted(Point p, const Site& u, const Site& v);

struct Disk {
    double x = 0;
    double y = 0;
    double r = 0;
};

struct ApexPoint {
    Point p;
    double rho = 0;  // common weighted distance
};

std::vector<ApexPoint> apollonius_vertex(const Disk& a, const Disk& b, const Disk& c);
// Same points without allocation; returns the count, sorted by rho.
int apollonius_vertex(const Disk& a, const Disk& b, const Disk& c, ApexPoint out[2]);
std::vector<ApexPoint> apollonius_vertex(const Site& u, const Site& v, const Site& w);
double apex_residual(const ApexPoint& q, const Disk& a, const Disk& b, const Disk& c);

// Bisector of u (left while the parameter grows) and v.
struct BisectorArc {
    enum class Kind { line, hyperbola, empty };
    int u = -1;
    int v = -1;
    Kind kind = Kind::empty;
    Point m;
    Point e1;
    Point e2;
    double a = 0;
    double b = 0;

    Point at(double lambda) const;
    double param(Point p) const;
    // parameter where x(lambda) is extremal, if any
    std::optional<double> x_turn() const;
    // parameters where x(lambda) == X
    std::vector<double> solve_x(double X) const;
    std::vector<double> solve_y(double Y) const;
    // allocation-free forms; return the root count (0..2), roots ascending
    int solve_x(double X, double out[2]) const;
    int solve_y(double Y, double out[2]) const;
    // parameter where y(lambda) is extremal, if any
    std::optional<double> y_turn() const;
    // direction of travel as the parameter goes to +inf (sign > 0) or -inf
    Point asymptote(int sign) const;
};

BisectorArc make_bisector(const Site& u, const Site& v);
BisectorArc make_bisector(const Disk& u, const Disk& v, int uid, int vid, bool dominated);

}  // namespace diskhop

#endif
