#pragma once

#include "troplin/realization.hpp"
#include "troplin/tropical_module.hpp"

namespace troplin {
namespace fixtures {

// Grid transcriptions use 0-based tuples with the bottom-left corner of a
// displayed layer as the all-zeros position: rows are axis 1 (top row is
// the maximal value), columns axis 2, layers axis 3.

// Three dots on [2]^3 with axis ranks (2,1,2); not rankable.
DotArray fig2_array();

// Four dots on [2]^3; totally rankable of rank 2, a permutation array.
DotArray fig3_array();

// fig3 plus its redundant positions (0,0,0) and (0,1,1).
DotArray fig4_array();

// The three small local arrays: the full [1]^1 array, the closed
// anti-diagonal on [1]^2 and the diagonal on [1]^2.
DotArray fig5_dim1_array();
DotArray fig5_left_array();
DotArray fig5_right_array();

// [2]^2 examples: left satisfies P4, middle fails P3, right fails P4.
DotArray fig6_left_array();
DotArray fig6_middle_array();
DotArray fig6_right_array();

// Rank-1 module on the interval of length 2 with D = 2v: three generators
// with slope sets {1,2} left of the midpoint and {0,1} right of it.
// generators[0..2] are f1 (bend 1/2), f2 (bend 3/2), f3 (bend at x).
TropicalModule interval_fixture();
// The midpoint x of the interval fixture.
GraphPoint interval_fixture_x();

// Two parallel edges between u and v, D = 3u, generated by the constant
// and the slope-1 function.
TropicalModule loop_fixture();

}  // namespace fixtures
}  // namespace troplin
