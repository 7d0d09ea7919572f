#pragma once

#include "sph/base.hpp"

namespace sph {

struct diagram_component {
    char letter = 0;  // 'A'..'G'
    int rank = 0;
    std::vector<int> nodes;  // global node ids in Bourbaki order
};

// Dynkin diagram with Bourbaki numbering per component.  The Cartan matrix is
// stored as a[i][j] = <alpha_i^vee, alpha_j>.  Length conventions: B_n has
// alpha_n short, C_n has alpha_n long, F4 has alpha_3, alpha_4 short and G2
// has alpha_1 short.
struct dynkin {
    std::string spec;
    int rank = 0;
    std::vector<diagram_component> comps;
    std::vector<std::vector<long long>> cartan;
    std::vector<long long> dsym;  // (alpha,alpha)/2, short roots = 1 per component

    bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
    std::string node_name(int i) const { return "a" + std::to_string(i + 1); }
    int node_index(const std::string& name) const;  // throws input_error
};

dynkin build_diagram(const std::string& spec);

// Typed decomposition of the sub-diagram induced on a node subset.  Each
// component lists its ambient nodes in Bourbaki order under a deterministic
// relabeling: among the valid labelings, lower ambient ids receive lower
// Bourbaki labels (this fixes A_n reversals, the D_n tail swap and D4/E6
// branch choices).
std::vector<diagram_component> sub_diagram_type(const dynkin& d, const std::vector<int>& subset);

std::string component_type_string(const diagram_component& c);

// All node permutations preserving the Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const dynkin& d);

}  // namespace sph
