#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "troplin/hyperarray.hpp"

namespace troplin {

struct EnumerationBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Documented budget for exhaustive enumeration. Anything larger is refused.
bool enumeration_budget_allows(int r, int d);

// Emits each rank-r dimension-d permutation array exactly once, in
// lexicographic order of the sorted dot list. The sink returns false to
// stop early. `first_dot_filter`, when set, restricts the search to trees
// whose lexicographically smallest dot has the given box index; running
// the filter over all indices partitions the output for work splitting.
void enumerate_permutation_arrays(int r, int d,
                                  const std::function<bool(const DotArray&)>& sink,
                                  std::optional<long long> first_dot_filter = std::nullopt);

std::vector<DotArray> all_permutation_arrays(int r, int d);
long long count_permutation_arrays(int r, int d);

}  // namespace troplin
