#pragma once

#include "sph/rootsys.hpp"

#include <map>

namespace sph {

// Column-sparse matrix over Q for module operators.
struct smat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, rat>>> col;  // row-sorted entries

    smat() = default;
    smat(int r, int c) : rows(r), cols(c), col(c) {}

    void set(int i, int j, const rat& v);
    std::vector<rat> apply(const std::vector<rat>& v) const;
    bool is_zero() const;
};

smat smul(const smat& a, const smat& b);
smat slin(const smat& a, const rat& ca, const smat& b, const rat& cb);  // ca*a + cb*b
inline smat scomm(const smat& a, const smat& b) { return slin(smul(a, b), 1, smul(b, a), -1); }
smat sscale(const smat& a, const rat& c);
bool sequal(const smat& a, const smat& b);

// Irreducible highest-weight module with exact simple-root actions; built by
// closing the highest weight vector under lowering operators, with linear
// dependence decided by the contravariant form.
struct module_core {
    ivec lambda;  // fundamental-weight coordinates
    int dim = 0;
    std::vector<ivec> wt;  // T-weight per basis vector; index 0 = highest
    std::vector<smat> ope, opf;  // per simple root
};

module_core build_module_core(const dynkin& d, const ivec& lambda, long long dim_cap = 2000);

// Chevalley-basis model of the semisimple Lie algebra of a diagram.  Basis
// order: e_beta for beta in positive_roots order, then f_beta, then h_alpha
// for the simple roots.  Non-simple root vectors are defined through the
// recorded chains e_theta = [e_a, e_rest]/denom and f_theta = fsign *
// [f_a, f_rest]/denom, so every module realizes them identically.
struct lie_algebra {
    dynkin d;
    std::vector<ivec> roots;  // positive roots, (height, lex) order
    int nroots = 0;

    struct chain {
        int simple = -1;  // node id for height-1 roots, chain root otherwise
        int rest = -1;    // index into roots
        rat denom = 1;
        int fsign = -1;
    };
    std::vector<chain> chains;

    // bracket table: expansion of [basis_i, basis_j] over the basis
    std::vector<std::vector<std::vector<std::pair<int, rat>>>> table;

    int dim() const { return 2 * nroots + d.rank; }
    int e_index(int r) const { return r; }
    int f_index(int r) const { return nroots + r; }
    int h_index(int a) const { return 2 * nroots + a; }
    bool is_e(int k) const { return k < nroots; }
    bool is_f(int k) const { return k >= nroots && k < 2 * nroots; }
    bool is_h(int k) const { return k >= 2 * nroots; }
    // ad-weight of a basis element in root coordinates
    ivec ad_weight(int k) const;
    std::string basis_name(int k) const;

    std::vector<std::pair<int, rat>> bracket(int i, int j) const { return table[i][j]; }
};

lie_algebra build_lie_algebra(const dynkin& d);

// A module bound to an algebra: lazily materializes operators for every
// algebra basis element.
struct module_t {
    const lie_algebra* L = nullptr;
    module_core core;
    mutable std::map<int, smat> ops;

    int dim() const { return core.dim; }
    const ivec& lambda() const { return core.lambda; }
    const ivec& weight(int i) const { return core.wt[i]; }
    const smat& op(int k) const;  // operator of algebra basis element k

    std::vector<rat> act(int k, const std::vector<rat>& v) const { return op(k).apply(v); }
    std::vector<rat> act_word(const std::vector<int>& word, std::vector<rat> v) const;
    std::vector<rat> act_power(int k, int power, std::vector<rat> v) const;
    std::vector<rat> highest_vector() const;
};

module_t build_irreducible(const lie_algebra& L, const ivec& lambda, long long dim_cap = 2000);

// Pair product V_i (x) V_j, or S^2 V_i when symmetric; coordinates indexed by
// basis pairs.
struct product_space {
    const module_t* A = nullptr;
    const module_t* B = nullptr;
    bool symmetric = false;
    int dim = 0;
    std::vector<std::pair<int, int>> basis;       // (p,q), p<=q when symmetric
    std::map<std::pair<int, int>, int> index_of;  // sorted pair -> coordinate

    ivec weight(int idx) const;  // T-weight of a basis monomial
    std::vector<rat> act(int k, const std::vector<rat>& v) const;
    // multiplication u (x) w resp. u.w into product coordinates
    std::vector<rat> mul(const std::vector<rat>& u, const std::vector<rat>& w) const;
};

product_space make_product(const module_t& a, const module_t& b, bool symmetric);

struct cartan_kernel_result {
    product_space space;
    std::vector<std::vector<rat>> cartan_basis;  // the V(lambda_i + lambda_j) copy
    std::vector<std::vector<rat>> k_basis;       // complement submodule K
};

// K = sum of all isotypic components other than the Cartan component.
cartan_kernel_result cartan_kernel(const module_t& a, const module_t& b, bool symmetric,
                                   long long dim_cap = 2000);

}  // namespace sph
