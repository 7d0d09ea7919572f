#include <doctest.h>

#include "sph/cli.hpp"
#include "sph/jsonio.hpp"

#include <fstream>
#include <sstream>

using namespace sph;

namespace {

struct run_result {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

run_result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const json& j)
{
    std::string path = "cli_" + name + ".json";
    std::ofstream f(path);
    f << j.dump();
    return path;
}

}  // namespace

TEST_CASE("sph-roots and roots output")
{
    auto r = run({"--format", "json", "sph-roots", "G2"});
    CHECK(r.code == 0);
    json j = r.parsed();
    CHECK(j["count"] == 4);
    CHECK(j["roots"].size() == 4);

    auto r2 = run({"--format", "json", "roots", "A2"});
    CHECK(r2.code == 0);
    CHECK(r2.parsed()["count"] == 3);

    auto bad = run({"sph-roots", "Q7"});
    CHECK(bad.code == 2);
}

TEST_CASE("check-system exit codes")
{
    json good{{"diagram", "B2"}, {"sp", json::array()},
              {"sigma", json::array({json{{"coeffs", {1, 1}}}})}};
    auto r = run({"--format", "json", "check-system", write_temp("good", good)});
    CHECK(r.code == 0);
    CHECK(r.parsed()["valid"] == true);

    json bad{{"diagram", "B2"}, {"sp", {"a2"}},
             {"sigma", json::array({json{{"coeffs", {1, 1}}}})}};
    auto r2 = run({"--format", "json", "check-system", write_temp("bad", bad)});
    CHECK(r2.code == 1);
    json j2 = r2.parsed();
    CHECK(j2["valid"] == false);
    CHECK(j2["St"] == false);
    REQUIRE(j2["witnesses"].size() == 1);
    CHECK(j2["witnesses"][0]["axiom"] == "St");
    CHECK(j2["witnesses"][0]["spp"] == json::array({"a2"}));

    std::ofstream("cli_garbage.json") << "this is not json";
    auto r3 = run({"check-system", "cli_garbage.json"});
    CHECK(r3.code == 2);
    auto r4 = run({"check-system", "no_such_file.json"});
    CHECK(r4.code == 2);

    // sigma entry outside the catalog
    json foreign{{"diagram", "A2"}, {"sigma", json::array({json{{"coeffs", {1, 2}}}})}};
    auto r5 = run({"check-system", write_temp("foreign", foreign)});
    CHECK(r5.code == 2);
}

TEST_CASE("colors")
{
    json sys{{"diagram", "A1xA1"}, {"sigma", json::array({json{{"coeffs", {1, 1}}}})}};
    auto r = run({"--format", "json", "colors", write_temp("pair", sys)});
    CHECK(r.code == 0);
    json j = r.parsed();
    REQUIRE(j.size() == 1);
    CHECK(j[0]["weight"] == json::array({1, 1}));
    CHECK(j[0]["origin"].size() == 2);
}

TEST_CASE("enumerate")
{
    auto r = run({"--format", "json", "enumerate", "A1"});
    CHECK(r.code == 0);
    CHECK(r.parsed()["count"] == 3);
    auto rp = run({"--format", "json", "enumerate", "--primitive", "B2"});
    CHECK(rp.code == 0);
    CHECK(rp.parsed()["count"] == 3);
    // catalog guard
    auto rg = run({"enumerate", "B5"});
    CHECK(rg.code == 3);
}

TEST_CASE("saturated")
{
    json bad{{"diagram", "A2"}, {"generators", {{1, 1}, {3, 0}}}};
    auto r = run({"--format", "json", "saturated", "--method", "both", write_temp("unsat", bad)});
    CHECK(r.code == 1);
    json j = r.parsed();
    CHECK(j["saturated"] == false);
    CHECK(j["box_saturated"] == false);
    CHECK(j["agreement"] == true);
    CHECK(j.contains("witness"));

    json good{{"diagram", "B2"}, {"generators", {{1, 0}, {0, 1}}}};
    auto r2 = run({"--format", "json", "saturated", write_temp("sat", good)});
    CHECK(r2.code == 0);
    CHECK(r2.parsed()["saturated"] == true);

    json dep{{"diagram", "A1"}, {"generators", {{1}, {2}}}};
    auto r3 = run({"saturated", write_temp("dep", dep)});
    CHECK(r3.code == 2);
}

TEST_CASE("predict-sigma and tangent")
{
    json m{{"diagram", "B2"}, {"generators", {{1, 0}}}};
    std::string path = write_temp("quadric", m);
    auto r = run({"--format", "json", "predict-sigma", path});
    CHECK(r.code == 0);
    json j = r.parsed();
    REQUIRE(j["predicted"].size() == 1);
    CHECK(j["predicted"][0]["coeffs"] == json::array({2, 2}));
    CHECK(j["sp"] == json::array({"a2"}));

    auto rt = run({"--format", "json", "tangent", "--monoid", path, "--method", "both"});
    CHECK(rt.code == 0);
    json jt = rt.parsed();
    CHECK(jt["equal"] == true);
    CHECK(jt["oracle"]["dim"] == 1);
    CHECK(jt["oracle"]["entries"][0]["gamma"] == json::array({2, 2}));
}

TEST_CASE("smoothness")
{
    json m{{"diagram", "A1"}, {"generators", {{2}}}};
    auto r = run({"--format", "json", "smoothness", "--monoid", write_temp("sl2", m)});
    CHECK(r.code == 0);
    json j = r.parsed();
    CHECK(j["smooth"] == true);
    CHECK(j["kernel_dim_lattice"] == 0);
    CHECK(j["h1_dim"] == 1);
}

TEST_CASE("cross-validate")
{
    json corpus = json::array({json{{"diagram", "A1"}, {"generators", {{2}}}},
                               json{{"diagram", "A1"}, {"generators", {{1}}}},
                               json{{"diagram", "A2"}, {"generators", {{1, 1}, {3, 0}}}}});
    auto r = run({"--format", "json", "cross-validate", write_temp("corpus", corpus)});
    CHECK(r.code == 0);
    json j = r.parsed();
    CHECK(j["pass"] == true);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["status"] == "PASS");
    CHECK(j["entries"][1]["status"] == "PASS");
    CHECK(j["entries"][2]["status"] == "REJECTED");

    auto re = run({"--format", "json", "cross-validate", write_temp("empty", json::array())});
    CHECK(re.code == 0);
    CHECK(re.parsed()["pass"] == true);
}

TEST_CASE("json round trips")
{
    dynkin d = build_diagram("B2");
    for (const auto& sys : enumerate_systems(d)) {
        json j = system_to_json(sys);
        spherical_system back = system_from_json(j);
        CHECK(back.sp == sys.sp);
        REQUIRE(back.sigma.size() == sys.sigma.size());
        for (size_t i = 0; i < sys.sigma.size(); ++i) CHECK(back.sigma[i].n == sys.sigma[i].n);
        CHECK(system_to_json(back) == j);
    }
    generator_monoid g{build_diagram("A2xA1"), {{1, 0, 1}, {0, 1, 0}}};
    json jm = monoid_to_json(g);
    generator_monoid back = monoid_from_json(jm);
    CHECK(back.gens == g.gens);
    CHECK(monoid_to_json(back) == jm);
}

TEST_CASE("sph-roots B2 golden json")
{
    auto r = run({"--format", "json", "sph-roots", "B2"});
    CHECK(r.code == 0);
    json expected = json::parse(R"({
      "count": 4,
      "diagram": "B2",
      "roots": [
        {"coeffs": [2, 0], "row": "2alpha"},
        {"coeffs": [0, 2], "row": "2alpha"},
        {"coeffs": [1, 1], "row": "Bn-sum"},
        {"coeffs": [2, 2], "row": "2Bn-sum"}
      ]
    })");
    CHECK(r.parsed() == expected);
}

TEST_CASE("format comes from the environment")
{
    setenv("SPHERICAL_FORMAT", "json", 1);
    auto r = run({"sph-roots", "A1"});
    unsetenv("SPHERICAL_FORMAT");
    CHECK(r.code == 0);
    CHECK(r.parsed()["count"] == 1);
}
