#include <doctest.h>

#include "sph/table.hpp"

#include <algorithm>
#include <set>

using namespace sph;

namespace {

std::set<ivec> catalog_vectors(const std::string& spec)
{
    std::set<ivec> out;
    for (const auto& r : spherical_root_catalog(build_diagram(spec))) out.insert(r.n);
    return out;
}

}  // namespace

TEST_CASE("catalog of G2")
{
    auto v = catalog_vectors("G2");
    CHECK(v == std::set<ivec>({{2, 0}, {0, 2}, {1, 1}, {4, 2}}));
}

TEST_CASE("catalog of A1 and A2")
{
    CHECK(catalog_vectors("A1") == std::set<ivec>({{2}}));
    CHECK(catalog_vectors("A2") == std::set<ivec>({{2, 0}, {0, 2}, {1, 1}}));
}

TEST_CASE("catalog of A3")
{
    auto v = catalog_vectors("A3");
    std::set<ivec> expected = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0},
                               {0, 1, 1}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}};
    CHECK(v == expected);
}

TEST_CASE("catalog of B2")
{
    auto v = catalog_vectors("B2");
    CHECK(v == std::set<ivec>({{2, 0}, {0, 2}, {1, 1}, {2, 2}}));
}

TEST_CASE("catalog counts for larger diagrams")
{
    CHECK(spherical_root_catalog(build_diagram("B3")).size() == 10);
    CHECK(spherical_root_catalog(build_diagram("C3")).size() == 8);
    CHECK(spherical_root_catalog(build_diagram("F4")).size() == 16);
    CHECK(spherical_root_catalog(build_diagram("D4")).size() == 19);
}

TEST_CASE("row tags are reproduced by sub_diagram_type")
{
    for (const char* spec : {"A3", "B3", "C4", "D4", "D5", "F4", "G2", "B2xA1"}) {
        dynkin d = build_diagram(spec);
        for (const auto& r : spherical_root_catalog(d)) {
            CHECK(r.supp == support(r.n));
            auto comps = sub_diagram_type(d, r.supp);
            if (r.row == row_tag::a1xa1) {
                REQUIRE(comps.size() == 2);
                CHECK(component_type_string(comps[0]) == "A1");
                CHECK(component_type_string(comps[1]) == "A1");
                continue;
            }
            REQUIRE(comps.size() == 1);
            char want = 0;
            switch (r.row) {
                case row_tag::two_alpha:
                case row_tag::an_sum:
                case row_tag::a3_middle: want = 'A'; break;
                case row_tag::bn_sum:
                case row_tag::bn_double:
                case row_tag::b3_special: want = 'B'; break;
                case row_tag::cn: want = 'C'; break;
                case row_tag::dn:
                case row_tag::d4_special1:
                case row_tag::d4_special2: want = 'D'; break;
                case row_tag::f4: want = 'F'; break;
                case row_tag::g2_double:
                case row_tag::g2_sum: want = 'G'; break;
                default: break;
            }
            CHECK(comps[0].letter == want);
        }
    }
}

TEST_CASE("D4 catalog carries all three triality images")
{
    auto v = catalog_vectors("D4");
    CHECK(v.count({2, 2, 1, 1}) == 1);
    CHECK(v.count({1, 2, 2, 1}) == 1);
    CHECK(v.count({1, 2, 1, 2}) == 1);
}

TEST_CASE("Bn-sum rule inside an ambient C diagram")
{
    // {a2, a3} in C3 induces B2 with the long node first; the sum row drops
    // the short end a2
    dynkin c3 = build_diagram("C3");
    auto cat = spherical_root_catalog(c3);
    const spherical_root* sum = find_spherical_root(cat, {0, 1, 1});
    REQUIRE(sum);
    CHECK(sum->row == row_tag::bn_sum);
    CHECK(sp_of_sigma(c3, sum->n) == std::vector<int>({1}));
    CHECK(spp_of_sigma(c3, *sum).empty());
}

TEST_CASE("pairing with roots outside the support is nonpositive")
{
    for (const char* spec : {"A4", "B4", "C4", "D4", "F4", "G2", "A2xB2", "A5", "B5", "D5",
                             "A6", "E6"}) {
        dynkin d = build_diagram(spec);
        for (const auto& r : spherical_root_catalog(d))
            for (int a = 0; a < d.rank; ++a) {
                if (std::find(r.supp.begin(), r.supp.end(), a) != r.supp.end()) continue;
                CHECK(pairing_root(d, a, r.n) <= 0);
            }
    }
}

TEST_CASE("s_of_gamma examples")
{
    dynkin a1 = build_diagram("A1");
    auto p1 = positive_roots(a1);
    CHECK(s_of_gamma(a1, p1, {2}) == std::vector<int>({0}));

    dynkin a3 = build_diagram("A3");
    auto p3 = positive_roots(a3);
    CHECK(s_of_gamma(a3, p3, {1, 1, 1}) == std::vector<int>({0, 2}));

    dynkin aa = build_diagram("A1xA1");
    auto paa = positive_roots(aa);
    CHECK(s_of_gamma(aa, paa, {1, 1}) == std::vector<int>({0, 1}));
}

TEST_CASE("s_of_gamma has cardinality at most two on every catalog")
{
    for (const char* spec : {"A4", "B4", "C4", "D4", "F4", "G2", "A2xB2", "D5", "E6"}) {
        dynkin d = build_diagram(spec);
        auto pos = positive_roots(d);
        for (const auto& r : spherical_root_catalog(d))
            CHECK(s_of_gamma(d, pos, r.n).size() <= 2);
    }
}

TEST_CASE("sp_of_sigma examples")
{
    dynkin b4 = build_diagram("B4");
    // sigma = a1+...+a4: only alpha_1 pairs nonzero
    CHECK(sp_of_sigma(b4, {1, 1, 1, 1}) == std::vector<int>({1, 2, 3}));

    dynkin c3 = build_diagram("C3");
    auto sp = sp_of_sigma(c3, {1, 2, 1});
    CHECK(std::find(sp.begin(), sp.end(), 0) != sp.end());

    dynkin g2 = build_diagram("G2");
    CHECK(sp_of_sigma(g2, {1, 1}).empty());
}

TEST_CASE("spp_of_sigma case split")
{
    dynkin b2 = build_diagram("B2");
    auto cat = spherical_root_catalog(b2);
    const spherical_root* sum = find_spherical_root(cat, {1, 1});
    const spherical_root* dbl = find_spherical_root(cat, {2, 2});
    const spherical_root* two = find_spherical_root(cat, {2, 0});
    REQUIRE(sum);
    REQUIRE(dbl);
    REQUIRE(two);
    CHECK(spp_of_sigma(b2, *sum).empty());
    CHECK(spp_of_sigma(b2, *dbl) == std::vector<int>({1}));
    CHECK(spp_of_sigma(b2, *two).empty());

    dynkin c3 = build_diagram("C3");
    auto cat3 = spherical_root_catalog(c3);
    const spherical_root* cn = find_spherical_root(cat3, {1, 2, 1});
    REQUIRE(cn);
    // S^p(sigma) = {a1, a3}; the C_r rule removes a1
    CHECK(spp_of_sigma(c3, *cn) == std::vector<int>({2}));
}

TEST_CASE("spp is always contained in sp")
{
    for (const char* spec : {"A4", "B4", "C4", "D4", "F4", "G2", "B3xA1", "D5", "E6"}) {
        dynkin d = build_diagram(spec);
        for (const auto& r : spherical_root_catalog(d)) {
            auto spp = spp_of_sigma(d, r);
            auto sp = sp_of_sigma(d, r.n);
            CHECK(subset_of(spp, sp));
        }
    }
}

TEST_CASE("compatibility examples")
{
    dynkin b2 = build_diagram("B2");
    auto cat = spherical_root_catalog(b2);
    const spherical_root* sum = find_spherical_root(cat, {1, 1});
    const spherical_root* dbl = find_spherical_root(cat, {2, 2});
    CHECK(is_compatible(b2, {}, *sum));
    CHECK_FALSE(is_compatible(b2, {0}, *sum));
    CHECK(is_compatible(b2, {1}, *dbl));
}

TEST_CASE("catalog is closed under diagram automorphisms")
{
    for (const char* spec : {"A3", "D4", "A2xA2", "A1xA1"}) {
        dynkin d = build_diagram(spec);
        auto cat = spherical_root_catalog(d);
        std::set<ivec> vecs;
        for (const auto& r : cat) vecs.insert(r.n);
        for (const auto& perm : diagram_automorphisms(d))
            for (const auto& r : cat) {
                ivec img(d.rank, 0);
                for (int i = 0; i < d.rank; ++i) img[perm[i]] = r.n[i];
                CHECK(vecs.count(img) == 1);
            }
    }
}
