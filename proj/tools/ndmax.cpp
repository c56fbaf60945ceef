#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ndmax/bmo.hpp"
#include "ndmax/checks.hpp"
#include "ndmax/constants.hpp"
#include "ndmax/dichotomy.hpp"
#include "ndmax/interp.hpp"
#include "ndmax/lorentz.hpp"
#include "ndmax/maximal.hpp"
#include "ndmax/scan.hpp"
#include "ndmax/zoo.hpp"

using namespace ndmax;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    std::string caps_file;
    zoo::Caps caps;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(g.out);
    if (!os) throw Usage("cannot write " + g.out);
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

json read_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Usage("cannot read " + path);
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw Usage(path + ": " + e.what());
    }
}

zoo::Caps read_caps(const std::string& path) {
    zoo::Caps c;
    std::ifstream is(path);
    if (!is) throw Usage("cannot read caps file " + path);
    std::string line;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) throw Usage("caps line without '=': " + line);
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        const double v = std::stod(val);
        if (key == "max_classes")
            c.max_classes = std::size_t(v);
        else if (key == "expand_points")
            c.expand_points = std::size_t(v);
        else if (key == "max_mass")
            c.max_mass = v;
        else
            throw Usage("unknown caps key: " + key);
    }
    return c;
}

// "4..20" or "1,2,5"
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
        if (b < a) throw Usage("empty range " + s);
        for (int k = a; k <= b; ++k) out.push_back(k);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw Usage("empty range");
    return out;
}

// "(1,0);(-1,0)"
std::vector<std::pair<int, int>> parse_points(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        int n = 0, m = 0;
        if (std::sscanf(tok.c_str(), " (%d ,%d )", &n, &m) != 2) throw Usage("bad point: " + tok);
        out.push_back({n, m});
    }
    return out;
}

double parse_exponent(const std::string& s) {
    if (s == "inf" || s == "infinity") return kInf;
    return std::stod(s);
}

std::string csv_num(double x) { return std::isnan(x) ? "" : fmt12(x); }

json values_json(const std::vector<double>& f) {
    json v = json::array();
    for (double x : f) v.push_back(checks::num(x));
    return {{"values", v}};
}

json estimate_json(const NormEstimate& e, const OperatorSpec& spec) {
    json j{{"lower", checks::num(e.lower)},
           {"upper", e.upper ? checks::num(*e.upper) : json(nullptr)},
           {"method", e.method},
           {"witness", values_json(e.witness)},
           {"spec",
            {{"kind", kind_name(spec.kind)},
             {"p", checks::num(spec.p)},
             {"q", checks::num(spec.q)},
             {"r", checks::num(spec.r)},
             {"kappa", checks::num(spec.kappa)},
             {"centered", spec.centered}}}};
    return j;
}

json ball_json(const Ball& b) {
    json m = json::array();
    for (double v : b.members) m.push_back(checks::num(v));
    return {{"center", b.center}, {"threshold", checks::num(b.threshold)}, {"members", m}, {"mass", checks::num(b.mass)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal operators, Lorentz and BMO norms on finite nondoubling metric measure spaces"};
    app.require_subcommand(1);
    Globals G;
    app.add_option("--seed", G.seed, "Seed for every randomized step");
    app.add_option("--out", G.out, "Write the result to this file instead of stdout");
    app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--caps", G.caps_file, "Plain-text key=value file with size caps");

    // zoo
    auto* zoo_cmd = app.add_subcommand("zoo", "Build catalogued spaces");
    zoo_cmd->require_subcommand(1);
    auto* zoo_list = zoo_cmd->add_subcommand("list", "Print the catalog");
    auto* zoo_build = zoo_cmd->add_subcommand("build", "Build a space as JSON");
    std::string z_kind, z_witness, z_witness_out;
    std::vector<std::string> z_params;
    zoo_build->add_option("--kind", z_kind, "Construction name")->required();
    zoo_build->add_option("--param", z_params, "key=value parameter (repeatable)");
    zoo_build->add_option("--witness", z_witness, "Also emit this witness function");
    zoo_build->add_option("--witness-out", z_witness_out, "File for the witness function");

    // maximal / norm
    auto* max_cmd = app.add_subcommand("maximal", "Evaluate the maximal function");
    std::string space_file, f_file;
    double kappa = 1, p = 1, lambda = 1;
    std::string q_str = "1", r_str = "1";
    bool centered = true;
    max_cmd->add_option("--space", space_file)->required();
    max_cmd->add_option("--f", f_file)->required();
    max_cmd->add_option("--kappa", kappa);
    max_cmd->add_flag("--centered,!--noncentered", centered, "Centered operator (default) or not");

    auto* norm_cmd = app.add_subcommand("norm", "Lorentz quasinorm of a function");
    norm_cmd->add_option("--space", space_file)->required();
    norm_cmd->add_option("--f", f_file)->required();
    norm_cmd->add_option("--p", p)->required();
    norm_cmd->add_option("--q", q_str, "Second exponent (inf allowed)")->required();

    // constant / trend
    auto* const_cmd = app.add_subcommand("constant", "Lower bound for an operator constant");
    std::string kind = "strong", method = "auto", build_kind, witness_name;
    std::vector<std::string> build_params;
    int budget = 20;
    const_cmd->add_option("--space", space_file, "Space JSON (or use --build)");
    const_cmd->add_option("--build", build_kind, "Construction name to build in place");
    const_cmd->add_option("--param", build_params, "key=value for --build");
    const_cmd->add_option("--kind", kind)->check(CLI::IsMember({"strong", "weak", "rweak", "lorentz"}));
    const_cmd->add_option("--p", p)->required();
    const_cmd->add_option("--q", q_str);
    const_cmd->add_option("--r", r_str);
    const_cmd->add_option("--kappa", kappa);
    const_cmd->add_flag("--centered,!--noncentered", centered, "Centered operator (default) or not");
    const_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "indicators", "ascent", "witness"}));
    const_cmd->add_option("--budget", budget);
    const_cmd->add_option("--witness", witness_name, "Named witness offered to the search (with --build)");

    auto* trend_cmd = app.add_subcommand("trend", "Witness ratios along a family, as CSV");
    std::string index_param = "n", range = "1..4";
    trend_cmd->add_option("--build", build_kind)->required();
    trend_cmd->add_option("--param", build_params);
    trend_cmd->add_option("--index-param", index_param, "Parameter that carries the family index");
    trend_cmd->add_option("--range", range, "Index range, e.g. 1..6");
    trend_cmd->add_option("--witness", witness_name)->required();
    trend_cmd->add_option("--kind", kind)->check(CLI::IsMember({"strong", "weak", "rweak", "lorentz"}));
    trend_cmd->add_option("--p", p)->required();
    trend_cmd->add_option("--q", q_str);
    trend_cmd->add_option("--r", r_str);
    trend_cmd->add_option("--kappa", kappa);
    trend_cmd->add_flag("--centered,!--noncentered", centered, "Centered operator (default) or not");

    // bmo / jn
    auto* bmo_cmd = app.add_subcommand("bmo", "BMO^p norm and the extremal ball");
    bmo_cmd->add_option("--space", space_file)->required();
    bmo_cmd->add_option("--f", f_file)->required();
    bmo_cmd->add_option("--p", p)->required();
    auto* jn_cmd = app.add_subcommand("jn", "Oscillation decay table");
    std::optional<double> c1, c2;
    jn_cmd->add_option("--space", space_file)->required();
    jn_cmd->add_option("--f", f_file)->required();
    jn_cmd->add_option("--c1", c1);
    jn_cmd->add_option("--c2", c2);

    // dichotomy
    auto* dich_cmd = app.add_subcommand("dichotomy", "Weighted lattice probes");
    dich_cmd->require_subcommand(1);
    auto* probe_cmd = dich_cmd->add_subcommand("probe", "Maximal values at lattice points, as CSV");
    std::string example = "C", radii = "4..20", points = "(1,0);(-1,0)", function = "fC";
    bool noncentered = false;
    probe_cmd->add_option("--example", example);
    probe_cmd->add_option("--R", radii, "Truncation radii, e.g. 4..20");
    probe_cmd->add_option("--points", points, "Points as \"(n,m);(n,m)\"");
    probe_cmd->add_option("--function", function)->check(CLI::IsMember({"fC", "gD"}));
    probe_cmd->add_flag("--noncentered", noncentered, "Use the noncentered operator (default centered)");
    auto* ratio_cmd = dich_cmd->add_subcommand("ratio", "Ball growth ratios about the origin, as CSV");
    std::string ratio_r = "1..20";
    ratio_cmd->add_option("--example", example);
    ratio_cmd->add_option("--r", ratio_r);

    // interp
    auto* interp_cmd = app.add_subcommand("interp", "Dyadic splitting");
    interp_cmd->require_subcommand(1);
    auto* split_cmd = interp_cmd->add_subcommand("split", "Split a function at level lambda and check the inequalities");
    double q0 = 1, q1 = 2;
    split_cmd->add_option("--space", space_file)->required();
    split_cmd->add_option("--f", f_file)->required();
    split_cmd->add_option("--p", p)->required();
    split_cmd->add_option("--lambda", lambda)->required();
    split_cmd->add_option("--q0", q0);
    split_cmd->add_option("--q1", q1);
    split_cmd->add_flag("--centered,!--noncentered", centered, "Centered operator (default) or not");
    auto* iverify_cmd = interp_cmd->add_subcommand("verify", "Random splitting trials");
    int trials = 500;
    iverify_cmd->add_option("--trials", trials);

    // verify / scan
    auto* verify_cmd = app.add_subcommand("verify", "Run a registered check");
    std::string check_id;
    std::vector<std::string> sets;
    bool list_checks = false;
    verify_cmd->add_option("id", check_id, "Check id");
    verify_cmd->add_option("--set", sets, "key=value override (repeatable)");
    verify_cmd->add_flag("--list", list_checks, "List registered ids");

    auto* scan_cmd = app.add_subcommand("scan", "Classify a (1/q, 1/r) grid along a family");
    std::string family = "composite_W";
    std::vector<std::string> scan_params;
    int grid = 11;
    scan_cmd->add_option("--family", family)->check(CLI::IsMember({"composite_W", "typeIII_cor", "point"}));
    scan_cmd->add_option("--param", scan_params, "key=value family parameter");
    scan_cmd->add_option("--grid", grid);

    // Global flags are accepted after the subcommand as well.
    std::vector<CLI::App*> pending{&app};
    while (!pending.empty()) {
        CLI::App* a = pending.back();
        pending.pop_back();
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            pending.push_back(sub);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (!G.caps_file.empty()) G.caps = read_caps(G.caps_file);
        // Tabular commands default to CSV unless --format is given.
        const bool csv = app.count("--format") == 0 || G.format == "csv";

        if (zoo_list->parsed()) {
            std::ostringstream os;
            for (const auto& e : zoo::catalog()) {
                os << e.kind << ": " << e.params;
                if (!e.witnesses.empty()) {
                    os << " [witness:";
                    for (const auto& w : e.witnesses) os << ' ' << w;
                    os << ']';
                }
                os << '\n';
            }
            emit(G, os.str());
            return 0;
        }
        if (zoo_build->parsed()) {
            const auto rec = zoo::Recipe::parse(z_kind, z_params);
            const Space s = zoo::build(rec, G.caps);
            json j = to_json(s);
            j["recipe"] = {{"kind", rec.kind}, {"params", rec.params}};
            emit(G, dump(j));
            if (!z_witness.empty()) {
                const auto w = function_to_json(zoo::witness(rec, s, z_witness));
                if (z_witness_out.empty()) throw Usage("--witness needs --witness-out");
                std::ofstream os(z_witness_out);
                os << w.dump(2) << '\n';
            }
            return 0;
        }
        if (max_cmd->parsed()) {
            const Space s = space_from_json(read_json(space_file));
            const auto f = function_from_json(read_json(f_file));
            emit(G, dump(values_json(maximal(s, f, kappa, centered))));
            return 0;
        }
        if (norm_cmd->parsed()) {
            const Space s = space_from_json(read_json(space_file));
            const auto f = function_from_json(read_json(f_file));
            emit(G, fmt12(lorentz_norm(s, f, p, parse_exponent(q_str))));
            return 0;
        }
        if (const_cmd->parsed()) {
            Space s;
            std::optional<zoo::Recipe> rec;
            if (!build_kind.empty()) {
                rec = zoo::Recipe::parse(build_kind, build_params);
                s = zoo::build(*rec, G.caps);
            } else if (!space_file.empty()) {
                s = space_from_json(read_json(space_file));
            } else {
                throw Usage("constant needs --space or --build");
            }
            const Kind k = parse_kind(kind);
            const auto spec = OperatorSpec::make(k, p, kappa, centered, const_cmd->count("--q") ? parse_exponent(q_str) : 0,
                                                 const_cmd->count("--r") ? parse_exponent(r_str) : 0);
            SearchOptions so;
            so.method = parse_method(method);
            so.budget = budget;
            so.seed = G.seed;
            if (rec) {
                so.upper = zoo::explicit_upper(*rec, spec);
                if (!witness_name.empty()) so.witnesses = {{witness_name, zoo::witness(*rec, s, witness_name)}};
            }
            emit(G, dump(estimate_json(search_constant(s, spec, so), spec)));
            return 0;
        }
        if (trend_cmd->parsed()) {
            const Kind k = parse_kind(kind);
            const auto spec = OperatorSpec::make(k, p, kappa, centered, trend_cmd->count("--q") ? parse_exponent(q_str) : 0,
                                                 trend_cmd->count("--r") ? parse_exponent(r_str) : 0);
            const auto base = zoo::Recipe::parse(build_kind, build_params);
            auto at = [&](int n) {
                zoo::Recipe rr = base;
                rr.set(index_param, double(n));
                return rr;
            };
            const auto t = family_trend([&](int n) { return zoo::build(at(n), G.caps); },
                                        [&](const Space& s, int n) { return zoo::witness(at(n), s, witness_name); }, spec,
                                        parse_range(range));
            std::ostringstream os;
            os << "index,lower,predicted\n";
            for (std::size_t i = 0; i < t.index.size(); ++i)
                os << fmt12(t.index[i]) << ',' << fmt12(t.lower[i]) << ',' << csv_num(t.predicted[i]) << '\n';
            emit(G, os.str());
            return 0;
        }
        if (bmo_cmd->parsed()) {
            const Space s = space_from_json(read_json(space_file));
            const auto f = function_from_json(read_json(f_file));
            const auto res = bmo::bmo_norm(s, f, p);
            emit(G, dump({{"p", checks::num(p)},
                          {"norm", checks::num(res.norm)},
                          {"ball", ball_json(res.record.ball)},
                          {"mean", checks::num(res.record.mean)},
                          {"p_oscillation", checks::num(res.record.p_oscillation)}}));
            return 0;
        }
        if (jn_cmd->parsed()) {
            const Space s = space_from_json(read_json(space_file));
            const auto f = function_from_json(read_json(f_file));
            std::optional<std::pair<double, double>> cc;
            if (c1 || c2) {
                if (!c1 || !c2) throw Usage("--c1 and --c2 go together");
                cc = std::make_pair(*c1, *c2);
            }
            const auto prof = bmo::jn_profile(s, f, cc);
            if (!csv) {
                json rows = json::array();
                for (const auto& row : prof.rows)
                    rows.push_back({{"lambda", checks::num(row.lambda)},
                                    {"fraction", checks::num(row.fraction)},
                                    {"bound", cc ? checks::num(row.bound) : json(nullptr)},
                                    {"violated", row.violated}});
                emit(G, dump({{"norm", checks::num(prof.norm)},
                              {"fit_c1", checks::num(prof.c1)},
                              {"fit_c2", checks::num(prof.c2)},
                              {"violations", prof.violations},
                              {"rows", rows}}));
            } else {
                std::ostringstream os;
                os << "lambda,fraction,bound,violated\n";
                for (const auto& row : prof.rows)
                    os << fmt12(row.lambda) << ',' << fmt12(row.fraction) << ',' << (cc ? fmt12(row.bound) : "") << ','
                       << (row.violated ? 1 : 0) << '\n';
                emit(G, os.str());
            }
            return prof.violations > 0 ? 2 : 0;
        }
        if (probe_cmd->parsed()) {
            const auto rows = dichotomy::probe(example, parse_range(radii), function, parse_points(points), !noncentered);
            std::ostringstream os;
            os << "R,n,m,value\n";
            for (const auto& row : rows) os << row.R << ',' << row.n << ',' << row.m << ',' << fmt12(row.value) << '\n';
            emit(G, os.str());
            return 0;
        }
        if (ratio_cmd->parsed()) {
            const auto rs = parse_range(ratio_r);
            dichotomy::LatticeSpec spec;
            spec.example = example;
            spec.R = *std::max_element(rs.begin(), rs.end()) + 1;
            const auto vals = dichotomy::doubling_ratio(spec, rs);
            std::ostringstream os;
            os << "r,ratio\n";
            for (std::size_t i = 0; i < rs.size(); ++i) os << rs[i] << ',' << fmt12(vals[i]) << '\n';
            emit(G, os.str());
            return 0;
        }
        if (split_cmd->parsed()) {
            const Space s = space_from_json(read_json(space_file));
            const auto f = function_from_json(read_json(f_file));
            interp::SplitParams sp{p, q0, q1, lambda, centered};
            const auto rep = interp::verify_split(s, f, sp);
            json items = json::array();
            for (const auto& it : rep.items)
                items.push_back({{"name", it.name}, {"lhs", checks::num(it.lhs)}, {"rhs", checks::num(it.rhs)}, {"holds", it.holds}});
            json N = rep.parts.N;
            emit(G, dump({{"lambda", checks::num(lambda)},
                          {"N", N},
                          {"f0", function_to_json(rep.parts.f0)},
                          {"f1", function_to_json(rep.parts.f1)},
                          {"items", items},
                          {"violations", rep.violations()}}));
            return rep.all_hold() ? 0 : 2;
        }
        if (iverify_cmd->parsed() || verify_cmd->parsed()) {
            if (list_checks) {
                std::ostringstream os;
                for (const auto& reg : checks::registry()) os << reg.id << ": " << reg.summary << '\n';
                emit(G, os.str());
                return 0;
            }
            checks::CheckOptions co;
            co.seed = G.seed;
            co.caps = G.caps;
            std::string id = check_id;
            if (iverify_cmd->parsed()) {
                id = "interp";
                co.overrides["trials"] = std::to_string(trials);
            } else {
                if (id.empty()) throw Usage("verify needs an id (see --list)");
                for (const auto& kv : sets) {
                    const auto eq = kv.find('=');
                    if (eq == std::string::npos) throw Usage("--set expects key=value");
                    co.overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
                }
            }
            if (!checks::registered(id)) throw Usage("unknown check id: " + id);
            const auto res = checks::verify(id, co);
            emit(G, dump(res.to_json()));
            return res.verdict == checks::Verdict::fail ? 2 : 0;
        }
        if (scan_cmd->parsed()) {
            const auto rec = zoo::Recipe::parse(family, scan_params);
            std::vector<scan::Component> comps;
            double sp = rec.num("p", 1.1);
            if (family == "composite_W") {
                comps = scan::w_components(sp, rec.num("gamma"), rec.num("R", 2), rec.num("eps", 1.0 / 3),
                                           rec.integer("a", 1), rec.integer("b", 1), rec.integer("n_max", 4), G.caps);
            } else if (family == "typeIII_cor") {
                comps = scan::cor_components(sp, rec.num("lambda", 1), rec.integer("a", 1), rec.integer("b", 1),
                                             rec.has("kappa") ? rec.seq("kappa") : std::vector<double>{2, 3, 4}, G.caps);
            } else {
                comps = scan::point_components(rec.integer("n_max", 4));
            }
            const auto reg = scan::scan_region(comps, sp, grid);
            if (csv) {
                emit(G, scan::region_csv(reg));
            } else {
                json cells = json::array();
                for (const auto& c : reg.cells)
                    cells.push_back({{"u", checks::num(c.u)},
                                     {"w", checks::num(c.w)},
                                     {"class", !c.feasible ? "n/a" : c.diverging ? "diverging" : "bounded"},
                                     {"slope", c.feasible ? checks::num(c.slope) : json(nullptr)}});
                emit(G, dump({{"family", family}, {"params", rec.params}, {"grid", grid}, {"cells", cells},
                              {"warnings", reg.warnings.size()}}));
            }
            return 0;
        }
    } catch (const BuildError& e) {
        std::cerr << "build error: " << e.what() << '\n';
        return 3;
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
