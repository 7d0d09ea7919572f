#include "sph/cli.hpp"

#include "sph/jsonio.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace sph {

namespace {

struct run_config {
    std::string format = "text";  // or "json"
    long long box = 6;
    long long dim_cap = 2000;
    long long catalog_cap = 24;
};

void emit(const json& j, const run_config& cfg, std::ostream& out,
          const std::function<void(const json&, std::ostream&)>& text_renderer)
{
    if (cfg.format == "json")
        out << j.dump(2) << "\n";
    else
        text_renderer(j, out);
}

std::string join_ivec(const json& arr)
{
    std::string s = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ",";
        s += arr[i].dump();
    }
    return s + ")";
}

std::string join_names(const json& arr)
{
    std::string s = "{";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) s += " ";
        s += arr[i].get<std::string>();
    }
    return s + "}";
}

void render_root_list(const json& j, std::ostream& out)
{
    out << j["diagram"].get<std::string>() << ": " << j["count"].get<int>() << " roots\n";
    for (const auto& r : j["roots"]) {
        out << "  " << join_ivec(r.contains("coeffs") ? r["coeffs"] : r);
        if (r.contains("row")) out << "  [" << r["row"].get<std::string>() << "]";
        out << "\n";
    }
}

void render_axioms(const json& j, std::ostream& out)
{
    out << (j["valid"].get<bool>() ? "valid" : "invalid") << "\n";
    for (const char* ax : {"S1", "S2", "S", "St"})
        out << "  (" << ax << ") " << (j[ax].get<bool>() ? "pass" : "fail") << "\n";
    for (const auto& w : j["witnesses"]) {
        out << "  witness " << w["axiom"].get<std::string>() << " sigma="
            << join_ivec(w["sigma"]);
        if (w.contains("alpha")) out << " alpha=" << w["alpha"].get<std::string>();
        if (w.contains("beta")) out << " beta=" << w["beta"].get<std::string>();
        if (w.contains("spp"))
            out << " spp=" << join_names(w["spp"]) << " sp_sigma=" << join_names(w["sp_sigma"]);
        out << "\n";
    }
}

int cmd_cross_validate(const json& corpus, const run_config& cfg, std::ostream& out)
{
    if (!corpus.is_array()) throw input_error("corpus must be a JSON array of monoids");
    json rows = json::array();
    bool any_fail = false;
    for (const auto& entry : corpus) {
        json row;
        generator_monoid g;
        try {
            g = monoid_from_json(entry);
        } catch (const input_error& e) {
            row = json{{"monoid", entry}, {"status", "REJECTED"}, {"reason", e.what()}};
            rows.push_back(std::move(row));
            continue;
        }
        row["monoid"] = monoid_to_json(g);
        if (!is_saturated(g)) {
            row["status"] = "REJECTED";
            row["reason"] = "monoid is not saturated";
            rows.push_back(std::move(row));
            continue;
        }
        try {
            auto catalog = spherical_root_catalog(g.d);
            sigma_prediction pred = candidate_tangent_weights(g);
            auto od = make_orbit_data(g, cfg.dim_cap);
            tangent_report tr = tangent_space(*od);
            obstruction_report ob = obstruction(*od, cfg.dim_cap);
            cocycle_report cc = verify_cocycle_basis(*od, tr);

            std::vector<ivec> predicted;
            for (const auto& r : pred.predicted) predicted.push_back(r.n);
            std::sort(predicted.begin(), predicted.end());
            std::vector<ivec> oracle = tr.weights();

            bool in_catalog = true;
            std::vector<spherical_root> oracle_roots;
            for (const auto& w : oracle) {
                const spherical_root* r = find_spherical_root(catalog, w);
                if (!r)
                    in_catalog = false;
                else
                    oracle_roots.push_back(*r);
            }
            bool mult_free = true;
            for (const auto& e : tr.entries)
                if (e.in_lattice && e.multiplicity != 1) mult_free = false;
            bool axioms_ok = false;
            if (in_catalog) {
                spherical_system sys;
                sys.d = g.d;
                sys.sp = sp_of_monoid(g);
                sys.sigma = oracle_roots;
                std::sort(sys.sigma.begin(), sys.sigma.end());
                axioms_ok = check_axioms(sys).valid();
            }
            // reported, not part of the pass verdict
            bool cocycles_ok = true;
            for (const auto& chk : cc.checks)
                if (!chk.is_cocycle) cocycles_ok = false;

            json jpred = json::array(), joracle = json::array();
            for (const auto& w : predicted) {
                json a = json::array();
                for (long long x : w) a.push_back(x);
                jpred.push_back(a);
            }
            for (const auto& w : oracle) {
                json a = json::array();
                for (long long x : w) a.push_back(x);
                joracle.push_back(a);
            }
            bool equal = predicted == oracle;
            bool pass = equal && in_catalog && mult_free && axioms_ok && ob.smooth;
            row["predicted"] = jpred;
            row["oracle"] = joracle;
            row["equal"] = equal;
            row["weights_in_catalog"] = in_catalog;
            row["multiplicity_free"] = mult_free;
            row["axioms_pass"] = axioms_ok;
            row["smooth"] = ob.smooth;
            row["cocycles_ok"] = cocycles_ok;
            row["spans_lattice_part"] = cc.spans_lattice_part;
            row["component_group_caveat"] = tr.component_group_caveat;
            row["status"] = pass ? "PASS" : "FAIL";
            if (!pass) any_fail = true;
        } catch (const resource_error& e) {
            row["status"] = "SKIPPED";
            row["reason"] = e.what();
        }
        rows.push_back(std::move(row));
    }
    json result{{"entries", rows}, {"pass", !any_fail}};
    emit(result, cfg, out, [](const json& j, std::ostream& o) {
        for (const auto& row : j["entries"]) {
            std::string status = row["status"].get<std::string>();
            o << status << "  ";
            if (row.contains("monoid"))
                o << row["monoid"]["diagram"].get<std::string>() << " "
                  << row["monoid"]["generators"].dump();
            if (row.contains("reason")) o << "  (" << row["reason"].get<std::string>() << ")";
            if (status == "PASS" || status == "FAIL")
                o << "  predicted=" << row["predicted"].dump()
                  << " oracle=" << row["oracle"].dump();
            o << "\n";
        }
        o << (j["pass"].get<bool>() ? "cross-validation: PASS" : "cross-validation: FAIL")
          << "\n";
    });
    return any_fail ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    run_config cfg;
    if (const char* env = std::getenv("SPHERICAL_FORMAT")) cfg.format = env;

    CLI::App app{"spherical systems and invariant Hilbert scheme tangent computations"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--box", cfg.box, "box bound for the brute-force saturation oracle");
    app.add_option("--dim-cap", cfg.dim_cap, "module dimension cap");
    app.add_option("--catalog-cap", cfg.catalog_cap, "catalog size guard for enumeration");

    std::string type_spec, path, method = "both";
    bool primitive_only = false;

    auto* roots = app.add_subcommand("roots", "positive roots of a diagram");
    roots->add_option("type", type_spec, "diagram spec, e.g. B3 or A2xA1")->required();

    auto* sphroots = app.add_subcommand("sph-roots", "spherical root catalog of a diagram");
    sphroots->add_option("type", type_spec)->required();

    auto* check = app.add_subcommand("check-system", "validate a spherical system");
    check->add_option("file", path, "system JSON file, or - for stdin")->required();

    auto* colors_cmd = app.add_subcommand("colors", "colors of a valid spherical system");
    colors_cmd->add_option("file", path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "all valid spherical systems");
    enumerate->add_option("type", type_spec)->required();
    enumerate->add_flag("--primitive", primitive_only, "only primitive systems");

    auto* saturated_cmd = app.add_subcommand("saturated", "saturation of a weight monoid");
    saturated_cmd->add_option("file", path)->required();
    std::string sat_method = "fm";
    saturated_cmd->add_option("--method", sat_method, "fm|box|both")
        ->check(CLI::IsMember({"fm", "box", "both"}));

    auto* predict = app.add_subcommand("predict-sigma", "combinatorial tangent weight prediction");
    predict->add_option("file", path)->required();

    auto* tangent_cmd = app.add_subcommand("tangent", "tangent space of the invariant Hilbert scheme");
    tangent_cmd->add_option("--monoid", path, "monoid JSON file, or - for stdin")->required();
    tangent_cmd->add_option("--method", method, "oracle|combinatorial|both")
        ->check(CLI::IsMember({"oracle", "combinatorial", "both"}));

    auto* smooth_cmd = app.add_subcommand("smoothness", "obstruction space and smoothness verdict");
    smooth_cmd->add_option("--monoid", path)->required();

    auto* cross = app.add_subcommand("cross-validate", "combinatorics against the oracle on a corpus");
    cross->add_option("corpus", path, "JSON array of monoids")->required();

    try {
        std::vector<const char*> argv;
        argv.push_back("sph");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(roots)) {
            dynkin d = build_diagram(type_spec);
            json r = json::array();
            for (const auto& beta : positive_roots(d)) {
                json a = json::array();
                for (long long x : beta) a.push_back(x);
                r.push_back(a);
            }
            json j{{"diagram", d.spec}, {"count", int(r.size())}, {"roots", r}};
            emit(j, cfg, out, render_root_list);
            return 0;
        }
        if (app.got_subcommand(sphroots)) {
            dynkin d = build_diagram(type_spec);
            json r = json::array();
            for (const auto& root : spherical_root_catalog(d))
                r.push_back(spherical_root_to_json(root));
            json j{{"diagram", d.spec}, {"count", int(r.size())}, {"roots", r}};
            emit(j, cfg, out, render_root_list);
            return 0;
        }
        if (app.got_subcommand(check)) {
            spherical_system sys = system_from_json(load_json(path));
            axiom_report rep = check_axioms(sys);
            emit(axiom_report_to_json(rep, sys.d), cfg, out, render_axioms);
            return rep.valid() ? 0 : 1;
        }
        if (app.got_subcommand(colors_cmd)) {
            spherical_system sys = system_from_json(load_json(path));
            if (!check_axioms(sys).valid()) {
                err << "error: system is not valid\n";
                return 1;
            }
            json j = colors_to_json(colors(sys), sys.d);
            emit(j, cfg, out, [](const json& jj, std::ostream& o) {
                for (const auto& c : jj)
                    o << join_ivec(c["weight"]) << "  origin " << join_names(c["origin"]) << "\n";
            });
            return 0;
        }
        if (app.got_subcommand(enumerate)) {
            dynkin d = build_diagram(type_spec);
            json arr = json::array();
            for (const auto& sys : enumerate_systems(d, cfg.catalog_cap)) {
                if (primitive_only && !is_primitive(sys)) continue;
                arr.push_back(system_to_json(sys));
            }
            json j{{"diagram", d.spec}, {"count", int(arr.size())}, {"systems", arr}};
            emit(j, cfg, out, [](const json& jj, std::ostream& o) {
                o << jj["count"].get<int>() << " systems\n";
                for (const auto& s : jj["systems"]) {
                    o << "  sp=" << join_names(s["sp"]) << " sigma=[";
                    bool first = true;
                    for (const auto& r : s["sigma"]) {
                        if (!first) o << " ";
                        first = false;
                        o << join_ivec(r["coeffs"]);
                    }
                    o << "]\n";
                }
            });
            return 0;
        }
        if (app.got_subcommand(saturated_cmd)) {
            generator_monoid g = monoid_from_json(load_json(path));
            json j{{"monoid", monoid_to_json(g)}, {"method", sat_method}};
            bool sat = true;
            ivec witness;
            if (sat_method == "fm" || sat_method == "both") {
                sat = is_saturated(g, &witness);
                j["saturated"] = sat;
            }
            if (sat_method == "box" || sat_method == "both") {
                ivec bw;
                bool bs = is_saturated_box(g, cfg.box, &bw);
                j["box"] = cfg.box;
                j["box_saturated"] = bs;
                if (!bs) witness = bw;
                if (sat_method == "box") {
                    sat = bs;
                    j["saturated"] = bs;
                }
                if (sat_method == "both" && sat != bs) {
                    j["agreement"] = false;
                } else if (sat_method == "both") {
                    j["agreement"] = true;
                }
            }
            if (!sat && !witness.empty()) {
                json w = json::array();
                for (long long x : witness) w.push_back(x);
                j["witness"] = w;
            }
            emit(j, cfg, out, [](const json& jj, std::ostream& o) {
                o << (jj["saturated"].get<bool>() ? "saturated" : "not saturated") << "\n";
                if (jj.contains("witness")) o << "  witness c = " << jj["witness"].dump() << "\n";
            });
            return sat ? 0 : 1;
        }
        if (app.got_subcommand(predict)) {
            generator_monoid g = monoid_from_json(load_json(path));
            sigma_prediction p = candidate_tangent_weights(g);
            emit(prediction_to_json(p, g.d), cfg, out, [](const json& jj, std::ostream& o) {
                o << "sp = " << join_names(jj["sp"]) << "\npredicted:\n";
                for (const auto& r : jj["predicted"])
                    o << "  " << join_ivec(r["coeffs"]) << "  [" << r["row"].get<std::string>()
                      << "]\n";
                o << "trace:\n";
                for (const auto& t : jj["trace"]) {
                    o << "  " << join_ivec(t["coeffs"]) << "  "
                      << (t["kept"].get<bool>() ? "kept" : "dropped");
                    if (!t["dropped_by"].empty()) o << " " << t["dropped_by"].dump();
                    o << "\n";
                }
            });
            return 0;
        }
        if (app.got_subcommand(tangent_cmd)) {
            generator_monoid g = monoid_from_json(load_json(path));
            json j;
            bool mismatch = false;
            if (method == "combinatorial" || method == "both")
                j["combinatorial"] = prediction_to_json(candidate_tangent_weights(g), g.d);
            if (method == "oracle" || method == "both") {
                auto od = make_orbit_data(g, cfg.dim_cap);
                j["oracle"] = tangent_to_json(tangent_space(*od));
            }
            if (method == "both") {
                std::set<json> a, b;
                for (const auto& r : j["combinatorial"]["predicted"]) a.insert(r["coeffs"]);
                for (const auto& e : j["oracle"]["entries"])
                    if (e["in_monoid_lattice"].get<bool>()) b.insert(e["gamma"]);
                mismatch = a != b;
                j["equal"] = !mismatch;
            }
            emit(j, cfg, out, [](const json& jj, std::ostream& o) {
                if (jj.contains("oracle")) {
                    o << "oracle: dim " << jj["oracle"]["dim"].get<int>() << " (lie "
                      << jj["oracle"]["lie_dim"].get<int>() << ")\n";
                    for (const auto& e : jj["oracle"]["entries"])
                        o << "  gamma " << join_ivec(e["gamma"]) << " mult "
                          << e["multiplicity"].get<int>()
                          << (e["in_monoid_lattice"].get<bool>() ? "" : "  [outside Z-Gamma]")
                          << "\n";
                }
                if (jj.contains("combinatorial")) {
                    o << "combinatorial:";
                    for (const auto& r : jj["combinatorial"]["predicted"])
                        o << " " << join_ivec(r["coeffs"]);
                    o << "\n";
                }
                if (jj.contains("equal"))
                    o << (jj["equal"].get<bool>() ? "methods agree" : "METHODS DISAGREE") << "\n";
            });
            return mismatch ? 1 : 0;
        }
        if (app.got_subcommand(smooth_cmd)) {
            generator_monoid g = monoid_from_json(load_json(path));
            auto od = make_orbit_data(g, cfg.dim_cap);
            obstruction_report rep = obstruction(*od, cfg.dim_cap);
            emit(obstruction_to_json(rep), cfg, out, [](const json& jj, std::ostream& o) {
                o << "dim H1(g_v, V/g.v) = " << jj["h1_dim"].get<int>() << " (lattice part "
                  << jj["h1_dim_lattice"].get<int>() << ")\n";
                o << "dim H1(g_v, K) = " << jj["k_h1_dim"].get<int>() << "\n";
                o << "dim ker f = " << jj["kernel_dim"].get<int>() << " (lattice part "
                  << jj["kernel_dim_lattice"].get<int>() << ")\n";
                o << (jj["smooth"].get<bool>() ? "smooth" : "NOT SMOOTH") << "\n";
            });
            return rep.smooth ? 0 : 1;
        }
        if (app.got_subcommand(cross)) {
            return cmd_cross_validate(load_json(path), cfg, out);
        }
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sph
