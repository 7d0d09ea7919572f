#include "sph/system.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sph {

namespace {

ivec doubled(const ivec& n) { return ivec_scale(n, 2); }

bool is_two_alpha(const ivec& n, int* alpha)
{
    int where = -1;
    for (int i = 0; i < int(n.size()); ++i) {
        if (n[i] == 0) continue;
        if (n[i] != 2 || where >= 0) return false;
        where = i;
    }
    if (where < 0) return false;
    if (alpha) *alpha = where;
    return true;
}

}  // namespace

axiom_report check_axioms(const spherical_system& sys)
{
    const dynkin& d = sys.d;
    auto catalog = spherical_root_catalog(d);
    for (const auto& s : sys.sigma)
        if (!find_spherical_root(catalog, s.n))
            throw input_error("sigma element is not a spherical root of " + d.spec);

    axiom_report rep;

    // (Sigma1): 2alpha in Sigma forces <alpha^vee, sigma> even and <= 0
    for (const auto& dbl : sys.sigma) {
        int alpha;
        if (!is_two_alpha(dbl.n, &alpha)) continue;
        for (const auto& s : sys.sigma) {
            if (s.n == dbl.n) continue;
            long long p = pairing_root(d, alpha, s.n);
            if (p > 0 || p % 2 != 0) {
                rep.s1 = false;
                rep.witnesses.push_back({"S1", s.n, alpha, -1, {}, {}});
            }
        }
    }
    // (Sigma2): alpha+beta in Sigma with alpha orthogonal beta
    for (const auto& pr : sys.sigma) {
        if (pr.row != row_tag::a1xa1) continue;
        int a = pr.supp[0], b = pr.supp[1];
        for (const auto& s : sys.sigma)
            if (pairing_root(d, a, s.n) != pairing_root(d, b, s.n)) {
                rep.s2 = false;
                rep.witnesses.push_back({"S2", s.n, a, b, {}, {}});
            }
    }
    // (S): compatibility with every sigma
    for (const auto& s : sys.sigma)
        if (!is_compatible(d, sys.sp, s)) {
            rep.s = false;
            rep.witnesses.push_back({"S", s.n, -1, -1, spp_of_sigma(d, s), sp_of_sigma(d, s.n)});
        }
    // (St): the double of sigma, when it is a spherical root, must not be compatible
    for (const auto& s : sys.sigma) {
        const spherical_root* twice = find_spherical_root(catalog, doubled(s.n));
        if (!twice) continue;
        if (is_compatible(d, sys.sp, *twice)) {
            rep.st = false;
            rep.witnesses.push_back(
                {"St", s.n, -1, -1, spp_of_sigma(d, *twice), sp_of_sigma(d, twice->n)});
        }
    }
    return rep;
}

std::vector<color> colors_unchecked(const dynkin& d, const std::vector<int>& sp,
                                    const std::vector<spherical_root>& sigma)
{
    std::vector<color> out;
    std::vector<bool> in_pair(d.rank, false);
    for (const auto& s : sigma) {
        if (s.row != row_tag::a1xa1) continue;
        int a = s.supp[0], b = s.supp[1];
        in_pair[a] = in_pair[b] = true;
        color c;
        c.weight.assign(d.rank, 0);
        c.weight[a] = 1;
        c.weight[b] = 1;
        c.origin = {a, b};
        out.push_back(std::move(c));
    }
    auto in_sigma = [&](const ivec& n) {
        for (const auto& s : sigma)
            if (s.n == n) return true;
        return false;
    };
    for (int a = 0; a < d.rank; ++a) {
        if (in_pair[a]) continue;
        if (std::find(sp.begin(), sp.end(), a) != sp.end()) continue;
        ivec two(d.rank, 0);
        two[a] = 2;
        color c;
        c.weight.assign(d.rank, 0);
        c.weight[a] = in_sigma(two) ? 2 : 1;
        c.origin = {a};
        out.push_back(std::move(c));
    }
    std::map<ivec, color> dedup;
    for (auto& c : out)
        if (!dedup.count(c.weight)) dedup[c.weight] = std::move(c);
    out.clear();
    for (auto& [w, c] : dedup) out.push_back(std::move(c));
    return out;
}

std::vector<color> colors(const spherical_system& sys)
{
    if (!check_axioms(sys).valid()) throw input_error("colors: system is not valid");
    return colors_unchecked(sys.d, sys.sp, sys.sigma);
}

bool sigma_independent(const std::vector<spherical_root>& sigma)
{
    if (sigma.empty()) return true;
    mat m(int(sigma.size()), int(sigma[0].n.size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = to_rat(sigma[i].n[j]);
    return rank_of(m) == m.rows;
}

namespace {

// Enumerate subsets of the catalog of size <= rank (larger ones are linearly
// dependent), in (size, lex) order.
void sigma_subsets(const std::vector<spherical_root>& catalog, int max_size,
                   std::vector<std::vector<int>>& out)
{
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        out.push_back(cur);
        if (int(cur.size()) == max_size) return;
        for (int i = start; i < int(catalog.size()); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() < b.size();
    });
}

}  // namespace

std::vector<spherical_system> enumerate_systems(const dynkin& d, size_t catalog_cap)
{
    auto catalog = spherical_root_catalog(d);
    if (catalog.size() > catalog_cap)
        throw resource_error("catalog size " + std::to_string(catalog.size()) +
                             " exceeds enumeration guard " + std::to_string(catalog_cap));
    std::vector<std::vector<int>> subsets;
    sigma_subsets(catalog, d.rank, subsets);
    std::vector<spherical_system> out;
    for (const auto& idx : subsets) {
        std::vector<spherical_root> sigma;
        for (int i : idx) sigma.push_back(catalog[i]);
        std::sort(sigma.begin(), sigma.end());
        if (!sigma_independent(sigma)) continue;
        // sp must sit in the interval [union S^pp, intersection S^p]
        std::vector<int> lower, upper;
        for (int a = 0; a < d.rank; ++a) upper.push_back(a);
        for (const auto& s : sigma) {
            for (int a : spp_of_sigma(d, s))
                if (std::find(lower.begin(), lower.end(), a) == lower.end()) lower.push_back(a);
            auto spa = sp_of_sigma(d, s.n);
            upper.erase(std::remove_if(upper.begin(), upper.end(),
                                       [&](int x) {
                                           return std::find(spa.begin(), spa.end(), x) == spa.end();
                                       }),
                        upper.end());
        }
        std::sort(lower.begin(), lower.end());
        if (!subset_of(lower, upper)) continue;
        std::vector<int> optional_nodes;
        for (int a : upper)
            if (std::find(lower.begin(), lower.end(), a) == lower.end())
                optional_nodes.push_back(a);
        for (size_t mask = 0; mask < (size_t(1) << optional_nodes.size()); ++mask) {
            spherical_system sys;
            sys.d = d;
            sys.sigma = sigma;
            sys.sp = lower;
            for (size_t b = 0; b < optional_nodes.size(); ++b)
                if (mask & (size_t(1) << b)) sys.sp.push_back(optional_nodes[b]);
            std::sort(sys.sp.begin(), sys.sp.end());
            if (check_axioms(sys).valid()) out.push_back(std::move(sys));
        }
    }
    std::sort(out.begin(), out.end(), [](const spherical_system& a, const spherical_system& b) {
        if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
        for (size_t i = 0; i < a.sigma.size(); ++i)
            if (!(a.sigma[i].n == b.sigma[i].n)) return a.sigma[i].n < b.sigma[i].n;
        return a.sp < b.sp;
    });
    return out;
}

bool is_primitive(const spherical_system& sys)
{
    const dynkin& d = sys.d;
    std::vector<bool> covered(d.rank, false);
    for (const auto& s : sys.sigma)
        for (int a : s.supp) covered[a] = true;
    for (int a = 0; a < d.rank; ++a)
        if (!covered[a]) return false;
    // Validity is hereditary in sigma, so maximality reduces to single additions.
    auto catalog = spherical_root_catalog(d);
    for (const auto& extra : catalog) {
        bool present = false;
        for (const auto& s : sys.sigma)
            if (s.n == extra.n) present = true;
        if (present) continue;
        spherical_system bigger = sys;
        bigger.sigma.push_back(extra);
        std::sort(bigger.sigma.begin(), bigger.sigma.end());
        if (!sigma_independent(bigger.sigma)) continue;
        if (check_axioms(bigger).valid()) return false;
    }
    return true;
}

}  // namespace sph
