#include "sph/jsonio.hpp"

#include <fstream>
#include <iostream>

namespace sph {

namespace {

json ivec_to_json(const ivec& v)
{
    json a = json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

ivec ivec_from_json(const json& j, int rank, const char* what)
{
    if (!j.is_array() || int(j.size()) != rank)
        throw input_error(std::string(what) + ": expected an array of length " +
                          std::to_string(rank));
    ivec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error(std::string(what) + ": integer entries");
        v.push_back(x.get<long long>());
    }
    return v;
}

json nodes_to_json(const std::vector<int>& nodes, const dynkin& d)
{
    json a = json::array();
    for (int n : nodes) a.push_back(d.node_name(n));
    return a;
}

}  // namespace

json spherical_root_to_json(const spherical_root& r)
{
    return json{{"coeffs", ivec_to_json(r.n)}, {"row", row_name(r.row)}};
}

json system_to_json(const spherical_system& sys)
{
    json sigma = json::array();
    for (const auto& r : sys.sigma) sigma.push_back(spherical_root_to_json(r));
    return json{{"diagram", sys.d.spec},
                {"sp", nodes_to_json(sys.sp, sys.d)},
                {"sigma", sigma}};
}

spherical_system system_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("diagram"))
        throw input_error("system JSON needs a \"diagram\" field");
    spherical_system sys;
    sys.d = build_diagram(j.at("diagram").get<std::string>());
    if (j.contains("sp"))
        for (const auto& n : j.at("sp")) sys.sp.push_back(sys.d.node_index(n.get<std::string>()));
    std::sort(sys.sp.begin(), sys.sp.end());
    sys.sp.erase(std::unique(sys.sp.begin(), sys.sp.end()), sys.sp.end());
    auto catalog = spherical_root_catalog(sys.d);
    if (j.contains("sigma"))
        for (const auto& e : j.at("sigma")) {
            ivec n = ivec_from_json(e.is_object() ? e.at("coeffs") : e, sys.d.rank, "sigma");
            const spherical_root* r = find_spherical_root(catalog, n);
            if (!r) throw input_error("sigma entry is not a spherical root of " + sys.d.spec);
            sys.sigma.push_back(*r);
        }
    std::sort(sys.sigma.begin(), sys.sigma.end());
    sys.sigma.erase(std::unique(sys.sigma.begin(), sys.sigma.end()), sys.sigma.end());
    return sys;
}

json monoid_to_json(const generator_monoid& g)
{
    json gens = json::array();
    for (const auto& lam : g.gens) gens.push_back(ivec_to_json(lam));
    return json{{"diagram", g.d.spec}, {"generators", gens}};
}

generator_monoid monoid_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("diagram") || !j.contains("generators"))
        throw input_error("monoid JSON needs \"diagram\" and \"generators\"");
    generator_monoid g;
    g.d = build_diagram(j.at("diagram").get<std::string>());
    for (const auto& e : j.at("generators"))
        g.gens.push_back(ivec_from_json(e, g.d.rank, "generator"));
    validate_monoid(g);
    return g;
}

json axiom_report_to_json(const axiom_report& rep, const dynkin& d)
{
    json w = json::array();
    for (const auto& x : rep.witnesses) {
        json e{{"axiom", x.axiom}, {"sigma", ivec_to_json(x.sigma)}};
        if (x.alpha >= 0) e["alpha"] = d.node_name(x.alpha);
        if (x.beta >= 0) e["beta"] = d.node_name(x.beta);
        if (x.axiom == "S" || x.axiom == "St") {
            e["spp"] = nodes_to_json(x.spp, d);
            e["sp_sigma"] = nodes_to_json(x.sp_sigma, d);
        }
        w.push_back(std::move(e));
    }
    return json{{"valid", rep.valid()}, {"S1", rep.s1},       {"S2", rep.s2},
                {"S", rep.s},           {"St", rep.st},       {"witnesses", w}};
}

json colors_to_json(const std::vector<color>& cs, const dynkin& d)
{
    json a = json::array();
    for (const auto& c : cs)
        a.push_back(json{{"weight", ivec_to_json(c.weight)}, {"origin", nodes_to_json(c.origin, d)}});
    return a;
}

json prediction_to_json(const sigma_prediction& p, const dynkin& d)
{
    json pred = json::array();
    for (const auto& r : p.predicted) pred.push_back(spherical_root_to_json(r));
    json trace = json::array();
    for (const auto& t : p.trace) {
        json e = spherical_root_to_json(t.root);
        e["kept"] = t.kept;
        e["dropped_by"] = t.dropped_by;
        trace.push_back(std::move(e));
    }
    return json{{"sp", nodes_to_json(p.sp, d)},
                {"predicted", pred},
                {"certified", p.certified},
                {"trace", trace}};
}

json tangent_to_json(const tangent_report& tr)
{
    json entries = json::array();
    for (const auto& e : tr.entries) {
        json reps = json::array();
        for (const auto& r : e.reps) {
            json coeffs = json::array();
            for (int i = 0; i < int(r.size()); ++i)
                if (!is_zero(r[i])) coeffs.push_back(json{{"coord", i}, {"value", rat_str(r[i])}});
            reps.push_back(std::move(coeffs));
        }
        entries.push_back(json{{"gamma", ivec_to_json(e.gamma)},
                               {"multiplicity", e.multiplicity},
                               {"in_monoid_lattice", e.in_lattice},
                               {"representatives", reps}});
    }
    return json{{"dim", tr.dim},
                {"lie_dim", tr.lie_dim},
                {"entries", entries},
                {"component_group_caveat", tr.component_group_caveat}};
}

json obstruction_to_json(const obstruction_report& rep)
{
    return json{{"h1_dim", rep.h1_dim},
                {"h1_dim_lattice", rep.h1_dim_lattice},
                {"k_h1_dim", rep.k_h1_dim},
                {"kernel_dim", rep.kernel_dim},
                {"kernel_dim_lattice", rep.kernel_dim_lattice},
                {"smooth", rep.smooth},
                {"cocycle_basis", rep.cocycle_basis}};
}

json cocycle_report_to_json(const cocycle_report& rep)
{
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"alpha", "a" + std::to_string(c.alpha + 1)},
                              {"gamma", ivec_to_json(c.gamma)},
                              {"gamma_is_generator", c.gamma_is_generator},
                              {"r_max", c.r_max},
                              {"r_rule", c.r_rule},
                              {"rules_agree", c.rules_agree},
                              {"is_cocycle", c.is_cocycle}});
    return json{{"checks", checks},
                {"h1_dim", rep.h_dim},
                {"h1_dim_lattice", rep.h_dim_lattice},
                {"span_dim", rep.span_dim},
                {"spans_all", rep.spans_all},
                {"spans_lattice_part", rep.spans_lattice_part}};
}

json load_json(const std::string& path_or_dash)
{
    try {
        if (path_or_dash == "-") return json::parse(std::cin);
        std::ifstream in(path_or_dash);
        if (!in) throw input_error("cannot open " + path_or_dash);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
}

}  // namespace sph
