#pragma once

#include <string>

#include "troplin/hyperarray.hpp"

namespace troplin {

// Grid rendering matching the figure layout: rows are axis 1 with the
// maximal value on top, columns axis 2 left to right; higher axes print as
// labeled layers.
std::string render_dot_grid(const DotArray& p);
std::string render_rank_grid(const RankArray& r);

}  // namespace troplin
