#include "diskhop/io.hpp"

#include <fstream>
#include <sstream>
#include <string_view>

namespace diskhop {

namespace {

[[noreturn]] void fail(size_t line, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> fields(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& v) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    long long acc = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9' || acc > 1'000'000'000'000LL) return false;
        acc = acc * 10 + (s[i] - '0');
    }
    v = s[0] == '-' ? -acc : acc;
    return true;
}

}  // namespace

Instance read_instance(std::istream& in) {
    Instance inst;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto f = fields(line);
        if (f.empty()) continue;
        if (f[0][0] == '#') {
            // "# source K" or "#source K"
            std::vector<std::string_view> g = f;
            if (g[0] == "#") g.erase(g.begin());
            else g[0].remove_prefix(1);
            long long k;
            if (g.size() == 2 && g[0] == "source" && parse_int(g[1], k) && k >= 0) inst.source = static_cast<int>(k);
            continue;
        }
        if (f.size() != 3) fail(lineno, "expected \"x y r\", got " + std::to_string(f.size()) + " fields");
        int64_t m[3];
        for (int k = 0; k < 3; ++k) {
            auto v = parse_decimal(f[static_cast<size_t>(k)]);
            if (!v) fail(lineno, "bad number '" + std::string(f[static_cast<size_t>(k)]) + "'");
            m[k] = *v;
        }
        if (m[2] < 0) fail(lineno, "negative radius");
        try {
            inst.sites.push_back(make_site_exact(static_cast<int>(inst.sites.size()), m[0], m[1], m[2]));
        } catch (const InputError& e) {
            fail(lineno, e.what());
        }
    }
    if (inst.sites.empty()) throw InputError("instance has no sites");
    if (inst.source && static_cast<size_t>(*inst.source) >= inst.sites.size())
        throw InputError("source comment names a missing site");
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    if (inst.source) out << "# source " << *inst.source << '\n';
    for (const Site& s : inst.sites)
        out << format_decimal(s.exact.x) << ' ' << format_decimal(s.exact.y) << ' ' << format_decimal(s.exact.r) << '\n';
}

void write_instance_file(const std::string& path, const Instance& inst, const std::string& comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    write_instance(out, inst, comment);
    if (!out) throw InputError("write failed for " + path);
}

void write_result(std::ostream& out, const LayerResult& r) {
    for (size_t v = 0; v < r.dist.size(); ++v) {
        out << v << ' ';
        if (r.dist[v] == kUnreached) out << "inf";
        else out << r.dist[v];
        out << ' ';
        if (r.pred[v] < 0) out << '-';
        else out << r.pred[v];
        out << '\n';
    }
}

void write_result_file(const std::string& path, const LayerResult& r) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    write_result(out, r);
    if (!out) throw InputError("write failed for " + path);
}

LayerResult read_result(std::istream& in) {
    LayerResult r;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto f = fields(line);
        if (f.empty()) continue;
        if (f.size() != 3) fail(lineno, "expected \"id dist pred\"");
        long long id, d = kUnreached, p = -1;
        if (!parse_int(f[0], id) || id != static_cast<long long>(r.dist.size())) fail(lineno, "ids must ascend from 0");
        if (f[1] != "inf" && (!parse_int(f[1], d) || d < 0)) fail(lineno, "bad dist");
        if (f[2] != "-" && (!parse_int(f[2], p) || p < 0)) fail(lineno, "bad pred");
        r.dist.push_back(static_cast<int>(d));
        r.pred.push_back(static_cast<int>(p));
        if (d == 0) r.source = static_cast<int>(id);
    }
    rebuild_layers(r);
    return r;
}

}  // namespace diskhop
