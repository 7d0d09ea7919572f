#include <doctest.h>

#include "sph/liealg.hpp"

#include <set>

using namespace sph;

namespace {

std::vector<rat> basis_vec(int dim, int i)
{
    std::vector<rat> v(dim, rat(0));
    v[i] = 1;
    return v;
}

bool vec_zero(const std::vector<rat>& v)
{
    for (const rat& x : v)
        if (!is_zero(x)) return false;
    return true;
}

// bracket of two expansions through the table
std::vector<std::pair<int, rat>> table_bracket(const lie_algebra& L,
                                               const std::vector<std::pair<int, rat>>& x,
                                               const std::vector<std::pair<int, rat>>& y)
{
    std::map<int, rat> acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : L.bracket(i, j)) acc[k] += a * b * c;
    std::vector<std::pair<int, rat>> out;
    for (auto& [k, v] : acc)
        if (!is_zero(v)) out.push_back({k, v});
    return out;
}

}  // namespace

TEST_CASE("algebra dimensions")
{
    CHECK(build_lie_algebra(build_diagram("A1")).dim() == 3);
    CHECK(build_lie_algebra(build_diagram("A2")).dim() == 8);
    CHECK(build_lie_algebra(build_diagram("G2")).dim() == 14);
    CHECK(build_lie_algebra(build_diagram("B2xA1")).dim() == 13);
}

TEST_CASE("sl2 relations")
{
    lie_algebra L = build_lie_algebra(build_diagram("A1"));
    auto ef = L.bracket(L.e_index(0), L.f_index(0));
    REQUIRE(ef.size() == 1);
    CHECK(ef[0].first == L.h_index(0));
    CHECK(ef[0].second == rat(1));
    auto he = L.bracket(L.h_index(0), L.e_index(0));
    REQUIRE(he.size() == 1);
    CHECK(he[0].first == L.e_index(0));
    CHECK(he[0].second == rat(2));
}

TEST_CASE("structure constants are integral and Jacobi holds for ranks up to 4")
{
    for (const char* spec :
         {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A2xA1",
          "A1xA1"}) {
        lie_algebra L = build_lie_algebra(build_diagram(spec));
        const int n = L.dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [k, c] : L.bracket(i, j)) CHECK(is_integer(c));
        // antisymmetry through the table
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto xy = L.bracket(i, j);
                auto yx = L.bracket(j, i);
                std::map<int, rat> sum;
                for (auto& [k, c] : xy) sum[k] += c;
                for (auto& [k, c] : yx) sum[k] += c;
                for (auto& [k, c] : sum) CHECK(is_zero(c));
            }
        // Jacobi identity on all basis triples
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::map<int, rat> acc;
                    auto add = [&](const std::vector<std::pair<int, rat>>& v) {
                        for (const auto& [t, c] : v) acc[t] += c;
                    };
                    add(table_bracket(L, L.bracket(i, j), {{k, rat(1)}}));
                    add(table_bracket(L, L.bracket(j, k), {{i, rat(1)}}));
                    add(table_bracket(L, L.bracket(k, i), {{j, rat(1)}}));
                    for (auto& [t, c] : acc) CHECK_MESSAGE(is_zero(c), spec);
                }
    }
}

TEST_CASE("module dimensions match the Weyl formula")
{
    struct probe { const char* spec; ivec lambda; int dim; };
    std::vector<probe> probes = {
        {"A1", {2}, 3},      {"A1", {5}, 6},     {"A2", {1, 1}, 8},
        {"G2", {1, 0}, 7},   {"G2", {0, 1}, 14}, {"B2", {1, 0}, 5},
        {"B2", {0, 1}, 4},   {"B2", {1, 1}, 16}, {"B3", {0, 0, 1}, 8},
        {"C3", {0, 1, 0}, 14}, {"A3", {0, 1, 0}, 6}, {"A1xA1", {1, 1}, 4},
        {"A2", {2, 0}, 6},   {"A2xA1", {1, 0, 1}, 6}};
    for (const auto& p : probes) {
        lie_algebra L = build_lie_algebra(build_diagram(p.spec));
        module_t m = build_irreducible(L, p.lambda);
        CHECK_MESSAGE(m.dim() == p.dim, p.spec);
        CHECK(m.weight(0) == p.lambda);
        // highest weight vector is killed by every raising operator
        for (int r = 0; r < L.nroots; ++r)
            CHECK(vec_zero(m.act(L.e_index(r), m.highest_vector())));
        // weight space of the highest weight is one-dimensional
        int top = 0;
        for (int i = 0; i < m.dim(); ++i)
            if (m.weight(i) == p.lambda) ++top;
        CHECK(top == 1);
    }
    CHECK_THROWS_AS(build_module_core(build_diagram("A2"), {20, 20}, 2000), resource_error);
    CHECK_THROWS_AS(build_module_core(build_diagram("A1"), {-1}, 2000), input_error);
}

TEST_CASE("module action is a Lie algebra representation")
{
    for (const char* spec : {"A2", "B2", "G2"}) {
        lie_algebra L = build_lie_algebra(build_diagram(spec));
        ivec lam(L.d.rank, 0);
        lam[0] = 1;
        module_t m = build_irreducible(L, lam);
        for (int i = 0; i < L.dim(); ++i)
            for (int j = 0; j < L.dim(); ++j) {
                smat lhs = scomm(m.op(i), m.op(j));
                smat rhs(m.dim(), m.dim());
                for (const auto& [k, c] : L.bracket(i, j)) rhs = slin(rhs, 1, m.op(k), c);
                CHECK(sequal(lhs, rhs));
            }
    }
}

TEST_CASE("sl2 string lengths")
{
    lie_algebra L = build_lie_algebra(build_diagram("A1"));
    module_t m = build_irreducible(L, {2});
    auto v = m.highest_vector();
    CHECK_FALSE(vec_zero(m.act_power(L.f_index(0), 2, v)));
    CHECK(vec_zero(m.act_power(L.f_index(0), 3, v)));
    // h acts on weight vectors by the pairing
    for (int i = 0; i < m.dim(); ++i) {
        auto w = m.act(L.h_index(0), basis_vec(m.dim(), i));
        CHECK(w[i] == to_rat(m.weight(i)[0]));
    }
}

TEST_CASE("weights are symmetric under simple reflections")
{
    lie_algebra L = build_lie_algebra(build_diagram("B2"));
    module_t m = build_irreducible(L, {1, 1});
    std::multiset<ivec> wts;
    for (int i = 0; i < m.dim(); ++i) wts.insert(m.weight(i));
    for (int a = 0; a < 2; ++a) {
        std::multiset<ivec> reflected;
        for (ivec w : wts) {
            long long k = w[a];
            for (int b = 0; b < 2; ++b) w[b] -= k * L.d.cartan[b][a];
            reflected.insert(w);
        }
        CHECK(reflected == wts);
    }
}

TEST_CASE("act on words and powers")
{
    lie_algebra L = build_lie_algebra(build_diagram("A2"));
    module_t m = build_irreducible(L, {1, 0});
    auto v = m.highest_vector();
    auto root_idx = [&](const ivec& r) {
        for (int k = 0; k < L.nroots; ++k)
            if (L.roots[k] == r) return k;
        return -1;
    };
    int f1 = L.f_index(root_idx({1, 0})), f2 = L.f_index(root_idx({0, 1}));
    // words act right to left: {f2, f1} means f2(f1 v)
    CHECK_FALSE(vec_zero(m.act_word({f2, f1}, v)));
    CHECK(vec_zero(m.act_word({f1, f2}, v)));
    CHECK(vec_zero(m.act_power(f1, 2, v)));
}

TEST_CASE("cartan kernel examples")
{
    lie_algebra a1 = build_lie_algebra(build_diagram("A1"));
    module_t v1 = build_irreducible(a1, {1});

    auto sym = cartan_kernel(v1, v1, true);
    CHECK(sym.space.dim == 3);
    CHECK(sym.cartan_basis.size() == 3);
    CHECK(sym.k_basis.empty());

    auto tens = cartan_kernel(v1, v1, false);
    CHECK(tens.space.dim == 4);
    CHECK(tens.cartan_basis.size() == 3);
    CHECK(tens.k_basis.size() == 1);

    lie_algebra a2 = build_lie_algebra(build_diagram("A2"));
    module_t w1 = build_irreducible(a2, {1, 0});
    module_t w2 = build_irreducible(a2, {0, 1});
    auto t12 = cartan_kernel(w1, w2, false);
    CHECK(t12.space.dim == 9);
    CHECK(t12.cartan_basis.size() == 8);
    CHECK(t12.k_basis.size() == 1);
}

TEST_CASE("cartan kernel dimension identity on ten instances")
{
    struct probe { const char* spec; ivec la; ivec lb; bool sym; };
    std::vector<probe> probes = {
        {"A1", {1}, {1}, true},      {"A1", {1}, {1}, false},   {"A1", {2}, {2}, true},
        {"A1", {2}, {1}, false},     {"A2", {1, 0}, {0, 1}, false},
        {"A2", {1, 0}, {1, 0}, true},{"B2", {1, 0}, {1, 0}, true},
        {"B2", {0, 1}, {0, 1}, true},{"A1xA1", {1, 1}, {1, 1}, true},
        {"G2", {1, 0}, {1, 0}, true}};
    for (const auto& p : probes) {
        lie_algebra L = build_lie_algebra(build_diagram(p.spec));
        module_t ma = build_irreducible(L, p.la);
        if (p.sym) {
            auto r = cartan_kernel(ma, ma, true);
            CHECK(mpz_class(int(r.cartan_basis.size())) == weyl_dim(L.d, ivec_add(p.la, p.la)));
            CHECK(int(r.cartan_basis.size() + r.k_basis.size()) == r.space.dim);
        } else {
            module_t mb = build_irreducible(L, p.lb);
            auto r = cartan_kernel(ma, mb, false);
            CHECK(mpz_class(int(r.cartan_basis.size())) == weyl_dim(L.d, ivec_add(p.la, p.lb)));
            CHECK(int(r.cartan_basis.size() + r.k_basis.size()) == r.space.dim);
        }
    }
}

TEST_CASE("K is a submodule")
{
    lie_algebra L = build_lie_algebra(build_diagram("B2"));
    module_t m = build_irreducible(L, {1, 0});
    auto r = cartan_kernel(m, m, true);
    echelon k_span(r.space.dim);
    for (const auto& v : r.k_basis) k_span.add(v);
    for (int op = 0; op < L.dim(); ++op)
        for (const auto& v : r.k_basis) CHECK(k_span.contains(r.space.act(op, v)));
}
