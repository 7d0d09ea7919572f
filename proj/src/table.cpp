#include "sph/table.hpp"

#include <algorithm>
#include <map>

namespace sph {

const char* row_name(row_tag t)
{
    switch (t) {
        case row_tag::a1xa1: return "A1xA1";
        case row_tag::an_sum: return "An-sum";
        case row_tag::two_alpha: return "2alpha";
        case row_tag::a3_middle: return "A3-middle";
        case row_tag::bn_sum: return "Bn-sum";
        case row_tag::bn_double: return "2Bn-sum";
        case row_tag::b3_special: return "B3-special";
        case row_tag::cn: return "Cn";
        case row_tag::dn: return "Dn";
        case row_tag::d4_special1: return "D4-special-1";
        case row_tag::d4_special2: return "D4-special-2";
        case row_tag::f4: return "F4";
        case row_tag::g2_double: return "G2-double";
        case row_tag::g2_sum: return "G2-sum";
    }
    return "?";
}

row_tag row_from_name(const std::string& s)
{
    for (int t = 0; t <= int(row_tag::g2_sum); ++t)
        if (s == row_name(row_tag(t))) return row_tag(t);
    throw input_error("unknown spherical-root row: " + s);
}

namespace {

// weights emitted for one typed connected component; coefficients are in the
// component's Bourbaki order
std::vector<std::pair<row_tag, ivec>> component_rows(char letter, int n)
{
    std::vector<std::pair<row_tag, ivec>> out;
    auto all = [&](long long v) { return ivec(n, v); };
    switch (letter) {
        case 'A':
            if (n == 1) out.push_back({row_tag::two_alpha, {2}});
            if (n >= 2) out.push_back({row_tag::an_sum, all(1)});
            if (n == 3) out.push_back({row_tag::a3_middle, {1, 2, 1}});
            break;
        case 'B':
            out.push_back({row_tag::bn_sum, all(1)});
            out.push_back({row_tag::bn_double, all(2)});
            if (n == 3) out.push_back({row_tag::b3_special, {1, 2, 3}});
            break;
        case 'C': {
            ivec v = all(2);
            v[0] = 1;
            v[n - 1] = 1;
            out.push_back({row_tag::cn, v});
            break;
        }
        case 'D': {
            ivec v = all(2);
            v[n - 2] = 1;
            v[n - 1] = 1;
            out.push_back({row_tag::dn, v});
            if (n == 4) {
                out.push_back({row_tag::d4_special1, {1, 2, 2, 1}});
                out.push_back({row_tag::d4_special2, {1, 2, 1, 2}});
            }
            break;
        }
        case 'F':
            out.push_back({row_tag::f4, {1, 2, 3, 2}});
            break;
        case 'G':
            out.push_back({row_tag::g2_double, {4, 2}});
            out.push_back({row_tag::g2_sum, {1, 1}});
            break;
        default:
            break;
    }
    return out;
}

void connected_subsets_rec(const dynkin& d, std::vector<int>& cur, std::set<int>& frontier,
                           std::set<int> forbidden, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    std::set<int> local_forbidden = forbidden;
    for (int next : std::vector<int>(frontier.begin(), frontier.end())) {
        if (local_forbidden.count(next)) continue;
        std::set<int> new_frontier = frontier;
        new_frontier.erase(next);
        for (int j = 0; j < d.rank; ++j)
            if (d.adjacent(next, j) && !local_forbidden.count(j) &&
                std::find(cur.begin(), cur.end(), j) == cur.end())
                new_frontier.insert(j);
        for (int x : cur) new_frontier.erase(x);
        cur.push_back(next);
        connected_subsets_rec(d, cur, new_frontier, local_forbidden, out);
        cur.pop_back();
        local_forbidden.insert(next);
    }
}

std::vector<std::vector<int>> connected_subsets(const dynkin& d)
{
    std::vector<std::vector<int>> out;
    for (int start = 0; start < d.rank; ++start) {
        // subsets whose minimal node is `start`
        std::vector<int> cur{start};
        std::set<int> frontier, forbidden;
        for (int j = 0; j < start; ++j) forbidden.insert(j);
        for (int j = 0; j < d.rank; ++j)
            if (d.adjacent(start, j) && !forbidden.count(j)) frontier.insert(j);
        connected_subsets_rec(d, cur, frontier, forbidden, out);
    }
    return out;
}

}  // namespace

std::vector<spherical_root> spherical_root_catalog(const dynkin& d)
{
    std::map<ivec, spherical_root> seen;
    auto emit = [&](row_tag t, const ivec& n) {
        if (seen.count(n)) return;
        spherical_root r;
        r.n = n;
        r.row = t;
        r.supp = support(n);
        seen[n] = std::move(r);
    };
    for (const auto& subset : connected_subsets(d)) {
        auto comps = sub_diagram_type(d, subset);
        SPH_CHECK(comps.size() == 1, "connected subset must induce one component");
        const auto& c = comps[0];
        for (const auto& [tag, coeffs] : component_rows(c.letter, c.rank)) {
            ivec n(d.rank, 0);
            for (int k = 0; k < c.rank; ++k) n[c.nodes[k]] = coeffs[k];
            emit(tag, n);
        }
    }
    for (int i = 0; i < d.rank; ++i)
        for (int j = i + 1; j < d.rank; ++j)
            if (d.cartan[i][j] == 0) {
                ivec n(d.rank, 0);
                n[i] = 1;
                n[j] = 1;
                emit(row_tag::a1xa1, n);
            }
    std::vector<spherical_root> out;
    for (auto& [n, r] : seen) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), [](const spherical_root& a, const spherical_root& b) {
        if (a.supp.size() != b.supp.size()) return a.supp.size() < b.supp.size();
        if (a.supp != b.supp) return a.supp < b.supp;
        return a.n < b.n;
    });
    return out;
}

const spherical_root* find_spherical_root(const std::vector<spherical_root>& catalog,
                                          const ivec& n)
{
    for (const auto& r : catalog)
        if (r.n == n) return &r;
    return nullptr;
}

std::vector<int> s_of_gamma(const dynkin& d, const std::vector<ivec>& pos_roots, const ivec& gamma)
{
    std::set<ivec> roots(pos_roots.begin(), pos_roots.end());
    std::vector<int> out;
    for (int a = 0; a < d.rank; ++a) {
        ivec diff = gamma;
        diff[a] -= 1;
        bool neg = false;
        for (long long x : diff)
            if (x < 0) neg = true;
        if (!neg && roots.count(diff)) out.push_back(a);
    }
    return out;
}

std::vector<int> sp_of_sigma(const dynkin& d, const ivec& sigma)
{
    std::vector<int> out;
    for (int a = 0; a < d.rank; ++a)
        if (pairing_root(d, a, sigma) == 0) out.push_back(a);
    return out;
}

std::vector<int> spp_of_sigma(const dynkin& d, const spherical_root& sigma)
{
    std::vector<int> sp = sp_of_sigma(d, sigma.n);
    auto comps = sub_diagram_type(d, sigma.supp);
    std::vector<int> removed;
    if (sigma.row == row_tag::bn_sum) {
        SPH_CHECK(comps.size() == 1 && comps[0].letter == 'B', "Bn-sum support");
        removed.push_back(comps[0].nodes.back());  // alpha_r
    } else if (comps.size() == 1 && comps[0].letter == 'C') {
        removed.push_back(comps[0].nodes.front());  // alpha_1
    }
    std::vector<int> out;
    for (int a : sp) {
        if (std::find(sigma.supp.begin(), sigma.supp.end(), a) == sigma.supp.end()) continue;
        if (std::find(removed.begin(), removed.end(), a) != removed.end()) continue;
        out.push_back(a);
    }
    return out;
}

bool is_compatible(const dynkin& d, const std::vector<int>& sp, const spherical_root& sigma)
{
    return subset_of(spp_of_sigma(d, sigma), sp) && subset_of(sp, sp_of_sigma(d, sigma.n));
}

}  // namespace sph
