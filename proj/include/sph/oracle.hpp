#pragma once

#include "sph/liealg.hpp"
#include "sph/monoid.hpp"

#include <memory>

namespace sph {

// Ambient data of the multi-cone point: V = (+) V(lambda_i), v the sum of
// highest weight vectors, the isotropy algebra g_v and the span g.v graded by
// the adjoint-torus action (weight of a vector in V(lambda_i)_mu is
// lambda_i - mu, kept in simple-root coordinates).
struct orbit_data {
    generator_monoid g;
    lie_algebra L;
    std::vector<module_t> mods;
    int vdim = 0;
    std::vector<int> offset;    // per module
    std::vector<ivec> degree;   // T_ad degree per V coordinate

    // g_v basis: root vectors by algebra index, then toral kernel combos
    std::vector<int> gv_roots;
    std::vector<std::vector<rat>> gv_torals;  // combos over the h basis
    echelon toral_span;                       // for expressing h parts of brackets

    std::map<ivec, echelon> orbit_span;  // g.v per degree
    int orbit_dim = 0;

    orbit_data() = default;
    orbit_data(const orbit_data&) = delete;
    orbit_data& operator=(const orbit_data&) = delete;

    int gv_dim() const { return int(gv_roots.size() + gv_torals.size()); }
    ivec gv_degree(int i) const;
    std::string gv_name(int i) const;

    std::vector<rat> base_vector() const;  // v = sum of highest weight vectors
    std::vector<rat> apply_algebra(int k, const std::vector<rat>& vec) const;
    std::vector<rat> apply_gv(int i, const std::vector<rat>& vec) const;
    // [x_i, x_j] expanded over the g_v basis
    std::vector<rat> gv_bracket(int i, int j) const;

    bool in_orbit_span(const std::vector<rat>& vec) const;
};

std::unique_ptr<orbit_data> make_orbit_data(const generator_monoid& g, long long dim_cap = 2000);

// A finite-dimensional g_v-module with a T_ad grading: action columns per
// g_v basis element.
struct gmodule {
    int dim = 0;
    std::vector<ivec> degree;
    std::vector<std::vector<std::vector<rat>>> act;  // [gv][column j]
};

// V / g.v with the induced g_v action; lift/project between quotient and V.
struct quotient_module {
    gmodule mod;
    std::vector<std::pair<ivec, int>> coords;  // (degree, V coordinate)

    std::vector<rat> lift(const std::vector<rat>& q, int vdim) const;
    // class coordinates of a vector of V: reduce against g.v degree by degree
    std::vector<rat> project(const orbit_data& od, const std::vector<rat>& full) const;
};

quotient_module make_quotient(const orbit_data& od);

struct tangent_entry {
    ivec gamma;  // root coordinates
    int multiplicity = 0;
    std::vector<std::vector<rat>> reps;  // representatives in V coordinates
    bool in_lattice = false;             // gamma in Z Gamma
};

struct tangent_report {
    int lie_dim = 0;  // dim (V/g.v)^{g_v}
    int dim = 0;      // after the torus-component refinement
    std::vector<tangent_entry> entries;
    bool component_group_caveat = false;

    std::vector<ivec> weights() const;  // refined weights, sorted
};

tangent_report tangent_space(const orbit_data& od);

struct h1_component {
    ivec degree;
    int z = 0, b = 0, h = 0;
    std::vector<std::vector<rat>> reps;  // cocycles in cochain coordinates
};

struct h1_result {
    int z_dim = 0, b_dim = 0, h_dim = 0;
    int h_dim_lattice = 0;
    std::vector<h1_component> comps;
};

// Cochain coordinates: phi(x_i) stacked module-coordinate blocks, i running
// over the g_v basis; coordinate (i, j) sits at i * M.dim + j.
h1_result h1_graded(const orbit_data& od, const gmodule& M);

// Basis-independent computation for cross-checks: dense action matrices and
// bracket coefficients over an arbitrary basis of g_v.
struct h1_dims {
    int z = 0, b = 0, h = 0;
};
h1_dims h1_ungraded(const std::vector<mat>& action,
                    const std::vector<std::vector<std::vector<rat>>>& brackets);

struct obstruction_report {
    int h1_dim = 0;
    int h1_dim_lattice = 0;
    int k_h1_dim = 0;  // dim (+)_{i<=j} H^1(g_v, K_ij)
    int kernel_dim = 0;
    int kernel_dim_lattice = 0;
    bool smooth = false;  // kernel trivial on the lattice-graded part
    std::vector<std::string> cocycle_basis;
};

obstruction_report obstruction(const orbit_data& od, long long dim_cap = 2000);

struct cocycle_check {
    int alpha = -1;
    ivec gamma;               // root coords, or the generator in weight coords
    bool gamma_is_generator = false;
    int module = -1;          // module carrying the representative, -1 = mixed
    long long r_max = 0;      // max { i : X_{-alpha}^i v_gamma != 0 }
    long long r_rule = 0;     // -(gamma, alpha^vee) outside the support, else 0
    bool rules_agree = false;
    bool is_cocycle = false;
    // the cochain transforms under the monoid torus by gamma + (r+1) alpha;
    // only characters inside Z Gamma are fixed by the stabilizer torus
    bool character_in_lattice = false;
};

struct cocycle_report {
    std::vector<cocycle_check> checks;
    int h_dim = 0, h_dim_lattice = 0;
    int span_dim = 0;  // classes spanned by the cocycle candidates
    bool spans_all = false;
    bool spans_lattice_part = false;
};

cocycle_report verify_cocycle_basis(const orbit_data& od, const tangent_report& tr);

}  // namespace sph
