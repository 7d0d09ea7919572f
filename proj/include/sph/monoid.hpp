#pragma once

#include "sph/system.hpp"

namespace sph {

struct generator_monoid {
    dynkin d;
    std::vector<ivec> gens;  // dominant weights, fundamental-weight coordinates
};

// dominant, nonzero, linearly independent; input_error otherwise
void validate_monoid(const generator_monoid& g);

// Exact Fourier-Motzkin decision of Z(Gamma) cap Lambda+ = Gamma.  When the
// answer is false and witness != nullptr, an integer coefficient vector c with
// sum c_i lambda_i dominant and some c_i < 0 is stored.
bool is_saturated(const generator_monoid& g, ivec* witness = nullptr);

// Box-bounded brute-force lattice oracle: searches |c_i| <= box.
bool is_saturated_box(const generator_monoid& g, long long box, ivec* witness = nullptr);

// { alpha : <alpha^vee, lambda_i> = 0 for all i }
std::vector<int> sp_of_monoid(const generator_monoid& g);

// gamma (root coords) in the integer span of the generators
bool in_monoid_lattice(const generator_monoid& g, const ivec& gamma);

// same test for a vector already in fundamental-weight coordinates
bool weight_in_monoid_lattice(const generator_monoid& g, const ivec& weight_coords);

enum class gen_class { color_multiple, pair_weight, third_case, none };
const char* gen_class_name(gen_class c);

// Classification of a generator against a candidate system's data.
gen_class classify_generator(const generator_monoid& g, const ivec& lambda,
                             const std::vector<spherical_root>& sigma_cand,
                             const std::vector<color>& delta_cand);

struct sigma_prediction {
    std::vector<int> sp;
    std::vector<spherical_root> predicted;
    struct cand_trace {
        spherical_root root;
        bool kept = false;
        std::vector<std::string> dropped_by;  // failed filter tags
    };
    std::vector<cand_trace> trace;
    bool certified = false;  // full-support certification succeeded
};

// Combinatorial prediction of the oracle's tangent weights; a fast predictor,
// the linear-algebra oracle stays authoritative.
sigma_prediction candidate_tangent_weights(const generator_monoid& g);

}  // namespace sph
