#pragma once

#include "troplin/array_properties.hpp"
#include "troplin/tropical_module.hpp"

namespace troplin {

// A permutation array realized on a star graph: the center carries the
// divisor s*v with s the maximal coordinate sum, and each dot x gives a
// generator with slope x_i along edge e_i.
struct StarRealization {
    std::shared_ptr<const MetricGraph> graph;  // center is vertex 0
    PermutationArray perm;
    Rat edge_length;
    long long s = 0;
    TropicalModule module;

    // The linear function with slope x_i along e_i, anchored 0 at the
    // center. For x in the closure this is a tropical combination of
    // generators (the meet construction), hence a module element.
    PLFunction function_for(const Position& x) const;
};

StarRealization realize_on_star(const PermutationArray& p, const Rat& edge_length);

// Explicit module element f with div(f) + s*v >= E, following the rank-2
// case analysis (same-edge chain, or cross-edge jump elements). E must be
// effective of degree 2; points of E may sit at the center or at leaves.
PLFunction bnrp_rank2_witness(const StarRealization& r, const Divisor& e);

// All (rank+2)-subsets of the dots admit a subset whose per-axis minimum
// is attained twice; for constant-slope generators this certifies tropical
// dependence of the corresponding functions.
PropertyReport check_generator_dependence(const StarRealization& r);

}  // namespace troplin
