#pragma once

#include <optional>
#include <string>
#include <vector>

#include "troplin/hyperarray.hpp"

namespace troplin {

// Re-checkable evidence attached to a failing (or certifying) verdict.
// `elements` are positions in the original coordinates; `params` carry
// checker-specific indices (axis/value or partition data).
struct Witness {
    std::vector<Position> elements;
    std::vector<int> params;
    std::string note;
};

struct PropertyReport {
    std::string property;
    bool verdict = false;
    std::optional<Witness> witness;
};

// (P1) the dotted set is closed under pointwise minimum.
PropertyReport check_P1(const DotArray& m);

// (P2) every value 0..r appears on every axis.
PropertyReport check_P2(const DotArray& m, int r);

// A subset S' of S whose per-axis minimum is attained at least twice on
// every axis; searched largest-first with lexicographic tie-break.
std::optional<std::vector<Position>> check_P3_subset(const std::vector<Position>& s);

// (P3) every (r+2)-subset admits such an S'.
PropertyReport check_P3(const DotArray& m, int r);

// (P2') for every ordered axis pair (i,j) and partition r = ri + rj there
// are dots z, w_1..w_ri, u_1..u_rj with increasing i-coordinates below z_i,
// increasing j-coordinates below z_j, and every u j-coordinate strictly
// below every w j-coordinate.
PropertyReport check_P2prime(const DotArray& m, int r);

// (P4) every subset of size k+1 <= r lies in a [k]^d-subarray of m that
// recursively satisfies P1, P2, P3 and P4.
PropertyReport check_P4(const DotArray& m, int r);

// True when the given subset (size k+1 <= r) is contained in some
// admissible [k]^d-subarray of m. Used to re-check P4 witnesses.
bool p4_subset_extendable(const DotArray& m, int r, const std::vector<Position>& subset);

// The rank 3, dimension 4 permutation array whose closure fails P4.
PermutationArray billey_vakil_counterexample();

}  // namespace troplin
