#pragma once

#include <optional>
#include <string>
#include <vector>

namespace troplin {

// A position in a box [r1] x ... x [rd], 0-based coordinates.
using Position = std::vector<int>;

// Axis-aligned box of integer tuples x with 0 <= x_i <= bounds[i].
struct Box {
    std::vector<int> bounds;

    Box() = default;
    explicit Box(std::vector<int> b);
    static Box cube(int r, int d);

    int dim() const { return static_cast<int>(bounds.size()); }
    bool contains(const Position& x) const;
    long long position_count() const;

    // All positions in lexicographic order.
    std::vector<Position> positions() const;
    long long index_of(const Position& x) const;
    Position position_at(long long index) const;

    bool operator==(const Box&) const = default;
};

// A finite set of dotted positions inside a box. Dots are kept sorted
// lexicographically with no duplicates.
struct DotArray {
    Box box;
    std::vector<Position> dots;

    DotArray() = default;
    DotArray(Box b, std::vector<Position> ds);

    int dim() const { return box.dim(); }
    std::size_t size() const { return dots.size(); }
    bool empty() const { return dots.empty(); }
    bool contains(const Position& x) const;

    bool operator==(const DotArray&) const = default;
};

// Total map position -> integer >= -1, stored densely in position order.
struct RankArray {
    Box box;
    std::vector<int> values;  // indexed by Box::index_of

    RankArray() = default;
    RankArray(Box b, std::vector<int> vals);

    int at(const Position& x) const { return values[box.index_of(x)]; }
    bool operator==(const RankArray&) const = default;
};

Position meet(const Position& x, const Position& y);
bool leq(const Position& x, const Position& y);          // x `preceq` y
bool shares_coordinate(const Position& x, const Position& y);

// One less than the number of distinct i-th coordinates among dots.
// Throws on an empty array. `axis` is 0-based.
int axis_rank(const DotArray& p, int axis);

// The common axis rank when all axes agree, otherwise nullopt.
std::optional<int> is_rankable(const DotArray& p);

// Principal subarray P[x] = { y in P : y >= x }.
DotArray principal_subarray(const DotArray& p, const Position& x);

// Total rankability, two independent routes. The definitional route walks
// every principal subarray; the other uses the pairwise exchange
// characterization. They must agree on every input.
bool is_totally_rankable(const DotArray& p);
bool is_totally_rankable_definitional(const DotArray& p);

// Rank array of a totally rankable dot array (-1 on empty subarrays).
// Throws if some principal subarray is not rankable.
RankArray rank_array(const DotArray& p);

// Positions expressible as meet(H) for H a subset of the dots, |H| >= 2,
// every member of H sharing at least one coordinate with the position.
std::vector<Position> redundant_positions(const DotArray& p);

bool is_permutation_array(const DotArray& p);

// P minus its redundant positions; requires total rankability.
DotArray permutation_core(const DotArray& p);

// P together with its redundant positions; equals the closure of the dot
// set under pairwise meet, and is idempotent.
DotArray redundant_closure(const DotArray& p);

// Image of the dots under deletion of the given axis (set semantics).
DotArray project(const DotArray& p, int axis);

// A permutation array bundled with its cached rank array and redundancy
// data. Construction validates the defining conditions.
struct PermutationArray {
    DotArray array;                    // dots on a cube [r]^d
    RankArray ranks;                   // rank array of `array`
    std::vector<Position> redundant;   // R(P), never dotted
    DotArray closure;                  // array + redundant, sorted

    int rank() const { return array.box.bounds.empty() ? 0 : array.box.bounds[0]; }
    int dim() const { return array.dim(); }

    static PermutationArray from(DotArray p);
};

PermutationArray standard_permutation_array(int r, int d);
RankArray standard_rank_array(int r, int d);

// The unique y in closure(P) with y >= x and rho(y) == rho(x).
// Throws when rho(x) == -1; uniqueness failures indicate an internal bug.
Position find_jump(const PermutationArray& p, const Position& x);

// Exactly one dot in every full axis-aligned hyperplane slice.
bool is_sparse(const PermutationArray& p);

// True when no two dots are comparable in the product order.
bool is_antichain(const DotArray& p);

// Duplicate the last coordinate, lifting a dimension-d array to d+1.
// Requires an antichain input.
PermutationArray extend_dimension(const PermutationArray& p);

// Add an apex dot one above the previous maximum on every axis,
// lifting rank r to r+1.
PermutationArray extend_rank(const PermutationArray& p);

std::string position_to_string(const Position& x);

}  // namespace troplin
