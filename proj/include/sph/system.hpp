#pragma once

#include "sph/table.hpp"

namespace sph {

struct spherical_system {
    dynkin d;
    std::vector<int> sp;              // ascending node ids
    std::vector<spherical_root> sigma;  // catalog members, ascending by vector
};

struct axiom_witness {
    std::string axiom;  // "S1", "S2", "S", "St"
    ivec sigma;
    int alpha = -1;
    int beta = -1;
    std::vector<int> spp;       // for S / St failures
    std::vector<int> sp_sigma;  // for S / St failures
};

struct axiom_report {
    bool s1 = true, s2 = true, s = true, st = true;
    std::vector<axiom_witness> witnesses;
    bool valid() const { return s1 && s2 && s && st; }
};

// Validates sigma against the catalog (input_error on a foreign root).
axiom_report check_axioms(const spherical_system& sys);

struct color {
    ivec weight;              // dominant, fundamental-weight coordinates
    std::vector<int> origin;  // one node, or an unordered pair
};

// Colors of a valid system; merged pair colors replace the two individuals.
std::vector<color> colors(const spherical_system& sys);

// Color set from raw (sp, sigma) data without the validity gate; used where a
// candidate configuration is probed before it is known to be a system.
std::vector<color> colors_unchecked(const dynkin& d, const std::vector<int>& sp,
                                    const std::vector<spherical_root>& sigma);

// Linear independence of sigma over Q is required throughout enumeration.
bool sigma_independent(const std::vector<spherical_root>& sigma);

// All valid systems, lexicographic on (|sigma|, sigma vectors, sp).
std::vector<spherical_system> enumerate_systems(const dynkin& d, size_t catalog_cap = 24);

bool is_primitive(const spherical_system& sys);

}  // namespace sph
