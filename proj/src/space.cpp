#include "ndmax/space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace ndmax {

int TypeIIIInfo::gamma(int i, int c) const {
    // Cells are listed in order, so the block of level i containing cell c is
    // floor(c * h_i / h_N).
    return static_cast<int>(std::floor((double(c) * h[i]) / hN() + 1e-9));
}

double Space::total_mass() const {
    double t = 0;
    for (const auto& c : classes) t += c.mass();
    return t;
}

double Space::expanded_points() const {
    double t = 0;
    for (const auto& c : classes) t += c.count;
    return t;
}

double Space::diameter() const {
    double d = 0;
    for (std::size_t a = 0; a < size(); ++a) {
        if (classes[a].count > 1) d = std::max(d, within[a]);
        for (std::size_t b = 0; b < size(); ++b)
            if (a != b) d = std::max(d, between[a][b]);
    }
    return d;
}

std::vector<double> Space::masses() const {
    std::vector<double> m(size());
    for (std::size_t a = 0; a < size(); ++a) m[a] = classes[a].mass();
    return m;
}

std::vector<double> Space::counts() const {
    std::vector<double> m(size());
    for (std::size_t a = 0; a < size(); ++a) m[a] = classes[a].count;
    return m;
}

int Space::add_class(double count, double unit_mass, double within_dist, double fill) {
    const int idx = static_cast<int>(classes.size());
    classes.push_back({idx, count, unit_mass});
    within.push_back(within_dist);
    for (auto& row : between) row.push_back(fill);
    between.emplace_back(classes.size(), fill);
    between[idx][idx] = 0;
    return idx;
}

void Space::set_dist(int a, int b, double d) {
    if (a == b) {
        within[a] = d;
        return;
    }
    between[a][b] = d;
    between[b][a] = d;
}

const std::vector<int>& Space::subset(const std::string& name) const {
    auto it = subsets.find(name);
    if (it == subsets.end()) throw std::out_of_range("unknown subset: " + name);
    return it->second;
}

namespace {

std::string issue(const char* what, int a, int b, int c = -1) {
    std::ostringstream os;
    os << what << " at classes (" << a << "," << b;
    if (c >= 0) os << "," << c;
    os << ")";
    return os.str();
}

// Triangle check over points of the expanded set, done on a dense matrix.
void check_triangle_points(const std::vector<std::vector<double>>& d, ValidationReport& r) {
    const std::size_t n = d.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = x + 1; z < n; ++z) {
            const double dxz = d[x][z];
            for (std::size_t y = 0; y < n; ++y) {
                if (y == x || y == z) continue;
                if (!dist_le(dxz, d[x][y] + d[y][z])) {
                    r.ok = false;
                    r.issues.push_back(issue("triangle violation", int(x), int(y), int(z)));
                    return;
                }
            }
        }
}

// Triangle check on the class metric. A triple (a,b,c) is only realizable when
// the classes hold enough distinct members.
bool triple_ok(const Space& s, int a, int b, int c) {
    auto need = [&](int k) { return (a == k) + (b == k) + (c == k); };
    for (int k : {a, b, c})
        if (s.classes[k].count < need(k)) return true;
    return dist_le(s.dist(a, c), s.dist(a, b) + s.dist(b, c));
}

}  // namespace

ValidationReport validate(const Space& s, std::size_t expand_limit) {
    ValidationReport r;
    const int n = static_cast<int>(s.size());
    if (n == 0) {
        r.ok = false;
        r.issues.push_back("empty space");
        return r;
    }
    if (s.within.size() != s.size() || s.between.size() != s.size()) {
        r.ok = false;
        r.issues.push_back("distance table size mismatch");
        return r;
    }
    for (int a = 0; a < n; ++a) {
        const auto& c = s.classes[a];
        if (!(c.count >= 1) || std::floor(c.count) != c.count) {
            r.ok = false;
            r.issues.push_back("class " + std::to_string(a) + ": count not a positive integer");
        }
        if (!(c.unit_mass > 0) || !std::isfinite(c.unit_mass)) {
            r.ok = false;
            r.issues.push_back("class " + std::to_string(a) + ": unit mass not positive and finite");
        }
        if (c.count > 1 && !(s.within[a] > 0)) {
            r.ok = false;
            r.issues.push_back("class " + std::to_string(a) + ": within distance not positive");
        }
        if (s.between[a].size() != s.size()) {
            r.ok = false;
            r.issues.push_back("distance table size mismatch");
            return r;
        }
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (!(s.between[a][b] > 0) || !std::isfinite(s.between[a][b])) {
                r.ok = false;
                r.issues.push_back(issue("nonpositive distance", a, b));
            }
            if (s.between[a][b] != s.between[b][a]) {
                r.ok = false;
                r.issues.push_back(issue("asymmetric distance", a, b));
            }
        }
    }
    if (!r.ok) return r;

    if (s.expanded_points() <= double(expand_limit)) {
        r.expanded = true;
        const Expansion e = expand(s, expand_limit);
        check_triangle_points(e.space.between, r);
        return r;
    }
    // Exhaustive class triples when affordable, otherwise a seeded sample.
    const double triples = double(n) * n * n;
    if (triples <= 4e8) {
        for (int a = 0; a < n; ++a)
            for (int c = a; c < n; ++c)
                for (int b = 0; b < n; ++b)
                    if (!triple_ok(s, a, b, c)) {
                        r.ok = false;
                        r.issues.push_back(issue("triangle violation", a, b, c));
                        return r;
                    }
    } else {
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 20'000'000; ++t) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            if (!triple_ok(s, a, b, c)) {
                r.ok = false;
                r.issues.push_back(issue("triangle violation", a, b, c));
                return r;
            }
        }
        r.issues.push_back("note: triangle inequality sampled, not exhaustive");
    }
    return r;
}

Expansion expand(const Space& s, std::size_t cap) {
    const double pts = s.expanded_points();
    if (pts > double(cap)) throw BuildError("expansion exceeds cap of " + std::to_string(cap) + " points");
    Expansion e;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (double k = 0; k < s.classes[a].count; ++k) e.origin.push_back(int(a));
    const std::size_t n = e.origin.size();
    e.space.classes.resize(n);
    e.space.within.resize(n);
    e.space.between.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t x = 0; x < n; ++x) {
        const int a = e.origin[x];
        e.space.classes[x] = {int(x), 1.0, s.classes[a].unit_mass};
        e.space.within[x] = s.within[a] > 0 ? s.within[a] : 1.0;
        for (std::size_t y = 0; y < n; ++y)
            if (x != y) e.space.between[x][y] = s.dist(a, e.origin[y]);
    }
    for (const auto& [name, members] : s.subsets) {
        std::vector<int> out;
        for (std::size_t x = 0; x < n; ++x)
            if (std::find(members.begin(), members.end(), e.origin[x]) != members.end()) out.push_back(int(x));
        e.space.subsets[name] = out;
    }
    return e;
}

std::vector<double> lift(const std::vector<double>& f, const std::vector<int>& origin) {
    std::vector<double> out(origin.size());
    for (std::size_t x = 0; x < origin.size(); ++x) out[x] = f[origin[x]];
    return out;
}

std::vector<double> critical_radii(const Space& s, int center) {
    std::vector<double> r{0.0};
    if (s.classes[center].count > 1) r.push_back(s.within[center]);
    for (std::size_t b = 0; b < s.size(); ++b)
        if (int(b) != center) r.push_back(s.between[center][b]);
    std::sort(r.begin(), r.end());
    std::vector<double> out;
    for (double d : r)
        if (out.empty() || !dist_eq(out.back(), d)) out.push_back(d);
    return out;
}

Ball closed_ball(const Space& s, int center, double d) {
    Ball b;
    b.center = center;
    b.threshold = d;
    b.members.assign(s.size(), 0.0);
    for (std::size_t c = 0; c < s.size(); ++c) {
        if (int(c) == center) {
            const bool full = s.classes[c].count > 1 && dist_le(s.within[c], d);
            b.members[c] = full ? s.classes[c].count : 1.0;
        } else if (dist_le(s.between[center][c], d)) {
            b.members[c] = s.classes[c].count;
        }
        b.mass += b.members[c] * s.classes[c].unit_mass;
    }
    return b;
}

double closed_ball_mass(const Space& s, int center, double d) { return closed_ball(s, center, d).mass; }

Space combine(const std::vector<Space>& comps, CombineMode mode, double kappa0) {
    if (comps.empty()) throw BuildError("combine: empty component list");
    const double cross = mode == CombineMode::plain ? 2.0 : mode == CombineMode::kappa ? kappa0 + 1.0 : 1.0;
    Space out;
    double prev_min_unit = 0;
    for (std::size_t n = 0; n < comps.size(); ++n) {
        const Space& c = comps[n];
        const double total = c.total_mass();
        if (!(total > 0)) throw BuildError("combine: zero-mass component");
        const double diam = c.diameter();
        const double dscale = diam > 0 ? 1.0 / (2.0 * diam) : 1.0;
        double target;
        if (mode == CombineMode::lorentz)
            target = n == 0 ? 1.0 : prev_min_unit / 2.0;
        else
            target = std::ldexp(1.0, -int(n + 1));
        const double mscale = target / total;
        const int offset = int(out.size());
        double min_unit = kInf;
        for (std::size_t a = 0; a < c.size(); ++a) {
            const double um = c.classes[a].unit_mass * mscale;
            min_unit = std::min(min_unit, um);
            out.add_class(c.classes[a].count, um, c.within[a] * dscale, cross);
        }
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                out.set_dist(offset + int(a), offset + int(b), c.between[a][b] * dscale);
        std::vector<int> members(c.size());
        for (std::size_t a = 0; a < c.size(); ++a) members[a] = offset + int(a);
        out.subsets["component:" + std::to_string(n + 1)] = members;
        for (const auto& [name, sub] : c.subsets) {
            std::vector<int> shifted;
            for (int x : sub) shifted.push_back(offset + x);
            out.subsets[std::to_string(n + 1) + "/" + name] = shifted;
        }
        prev_min_unit = min_unit;
    }
    return out;
}

nlohmann::json to_json(const Space& s) {
    nlohmann::json j;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : s.classes)
        j["classes"].push_back({{"id", c.id}, {"count", c.count}, {"unit_mass", c.unit_mass}});
    j["within"] = s.within;
    std::vector<std::vector<double>> b = s.between;
    j["between"] = b;
    if (!s.subsets.empty()) j["subsets"] = s.subsets;
    return j;
}

Space space_from_json(const nlohmann::json& j) {
    Space s;
    for (const auto& c : j.at("classes"))
        s.classes.push_back({c.at("id").get<int>(), c.at("count").get<double>(), c.at("unit_mass").get<double>()});
    s.within = j.at("within").get<std::vector<double>>();
    s.between = j.at("between").get<std::vector<std::vector<double>>>();
    if (j.contains("subsets")) s.subsets = j["subsets"].get<std::map<std::string, std::vector<int>>>();
    if (s.within.size() != s.classes.size() || s.between.size() != s.classes.size())
        throw std::invalid_argument("space JSON: table sizes do not match the class list");
    for (auto& row : s.between)
        if (row.size() != s.classes.size()) throw std::invalid_argument("space JSON: between is not square");
    return s;
}

nlohmann::json function_to_json(const std::vector<double>& f) { return {{"values", f}}; }

// Accepts {"values": [...]} or a bare array.
std::vector<double> function_from_json(const nlohmann::json& j) {
    if (j.is_array()) return j.get<std::vector<double>>();
    return j.at("values").get<std::vector<double>>();
}

}  // namespace ndmax
