#pragma once

// Brute-force reference implementations used only by tests. These stay
// deliberately close to the definitions and independent of the library's
// algorithmic shortcuts.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "troplin/hyperarray.hpp"

namespace oracles {

// All positions expressible as meet(H), H over every subset of the dots
// with |H| >= 2 and each member sharing a coordinate with the meet.
inline std::vector<troplin::Position> redundant_positions_by_subsets(const troplin::DotArray& p) {
    using namespace troplin;
    std::set<Position> out;
    const std::size_t n = p.dots.size();
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        Position m;
        bool first = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (!(mask & (1ull << k))) continue;
            m = first ? p.dots[k] : meet(m, p.dots[k]);
            first = false;
        }
        bool all_share = true;
        for (std::size_t k = 0; k < n && all_share; ++k)
            if (mask & (1ull << k)) all_share = shares_coordinate(m, p.dots[k]);
        if (all_share) out.insert(m);
    }
    return {out.begin(), out.end()};
}

// Fixpoint of pairwise meets.
inline troplin::DotArray meet_closure_fixpoint(const troplin::DotArray& p) {
    using namespace troplin;
    std::set<Position> dots(p.dots.begin(), p.dots.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Position> snapshot(dots.begin(), dots.end());
        for (const auto& x : snapshot)
            for (const auto& y : snapshot)
                if (dots.insert(meet(x, y)).second) grew = true;
    }
    return DotArray(p.box, {dots.begin(), dots.end()});
}

// Every subset of the box filtered by the definition; only sane for tiny
// boxes.
inline std::vector<troplin::DotArray> permutation_arrays_by_subsets(int r, int d) {
    using namespace troplin;
    const Box box = Box::cube(r, d);
    const auto positions = box.positions();
    const std::size_t n = positions.size();
    std::vector<DotArray> out;
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
        std::vector<Position> ds;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (1ull << k)) ds.push_back(positions[k]);
        DotArray cand(box, std::move(ds));
        if (is_permutation_array(cand)) out.push_back(std::move(cand));
    }
    return out;
}

inline troplin::DotArray random_dot_array(std::mt19937_64& rng, int max_r, int max_d) {
    using namespace troplin;
    std::uniform_int_distribution<int> rdist(0, max_r), ddist(1, max_d);
    while (true) {
        const int r = rdist(rng), d = ddist(rng);
        const Box box = Box::cube(r, d);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double density = 0.05 + 0.5 * u(rng);
        std::vector<Position> ds;
        for (const auto& x : box.positions())
            if (u(rng) < density) ds.push_back(x);
        if (!ds.empty()) return DotArray(box, std::move(ds));
    }
}

}  // namespace oracles
