#pragma once

#include "sph/rootsys.hpp"

#include <set>

namespace sph {

enum class row_tag {
    a1xa1,
    an_sum,
    two_alpha,
    a3_middle,
    bn_sum,
    bn_double,
    b3_special,
    cn,
    dn,
    d4_special1,
    d4_special2,
    f4,
    g2_double,
    g2_sum,
};

const char* row_name(row_tag t);
row_tag row_from_name(const std::string& s);

struct spherical_root {
    ivec n;                 // simple-root coordinates over the full diagram
    row_tag row;
    std::vector<int> supp;  // support nodes, ascending

    bool operator==(const spherical_root& o) const { return n == o.n; }
    bool operator<(const spherical_root& o) const { return n < o.n; }
};

// The full catalog Sigma(G): every node subset whose induced diagram matches a
// row contributes that row's weights; A1xA1 ranges over orthogonal pairs.
std::vector<spherical_root> spherical_root_catalog(const dynkin& d);

const spherical_root* find_spherical_root(const std::vector<spherical_root>& catalog,
                                          const ivec& n);

// S(gamma) = { delta simple : gamma - delta is a positive root }
std::vector<int> s_of_gamma(const dynkin& d, const std::vector<ivec>& pos_roots, const ivec& gamma);

// S^p(sigma) = { alpha : <alpha^vee, sigma> = 0 }
std::vector<int> sp_of_sigma(const dynkin& d, const ivec& sigma);

// The three-case rule (B_r sum drops alpha_r, C_r support drops alpha_1,
// otherwise S^p(sigma) restricted to the support).
std::vector<int> spp_of_sigma(const dynkin& d, const spherical_root& sigma);

// S^pp(sigma) subset sp subset S^p(sigma), inclusions non-strict.
bool is_compatible(const dynkin& d, const std::vector<int>& sp, const spherical_root& sigma);

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& b)
{
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

}  // namespace sph
