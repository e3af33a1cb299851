#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "troplin/enumeration.hpp"
#include "troplin/fixtures.hpp"
#include "troplin/hyperarray.hpp"

using namespace troplin;

TEST_CASE("meet is the pointwise minimum") {
    CHECK(meet({1, 0, 0}, {0, 2, 1}) == Position{0, 0, 0});
    CHECK(meet({2, 1, 1}, {0, 1, 2}) == Position{0, 1, 1});
    const Position x = {1, 2, 0};
    CHECK(meet(x, x) == x);
    CHECK_THROWS_AS(meet({0, 1}, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("axis ranks of the figure arrays") {
    const auto fig3 = fixtures::fig3_array();
    for (int axis = 0; axis < 3; ++axis) CHECK(axis_rank(fig3, axis) == 2);
    const auto fig2 = fixtures::fig2_array();
    CHECK(axis_rank(fig2, 0) == 2);
    CHECK(axis_rank(fig2, 1) == 1);
    CHECK(axis_rank(fig2, 2) == 2);
    const DotArray singleton(Box::cube(1, 2), {{0, 0}});
    CHECK(axis_rank(singleton, 0) == 0);
    CHECK(axis_rank(singleton, 1) == 0);
    CHECK_THROWS_AS(axis_rank(DotArray(Box::cube(1, 2), {}), 0), std::invalid_argument);
}

TEST_CASE("rankable verdicts") {
    CHECK_FALSE(is_rankable(fixtures::fig2_array()).has_value());
    CHECK(is_rankable(fixtures::fig3_array()) == 2);
    CHECK(is_rankable(DotArray(Box::cube(2, 2), {{1, 2}})) == 0);
}

TEST_CASE("total rankability, both routes") {
    CHECK(is_totally_rankable(fixtures::fig3_array()));
    CHECK(is_totally_rankable_definitional(fixtures::fig3_array()));
    CHECK_FALSE(is_totally_rankable(fixtures::fig2_array()));
    CHECK_FALSE(is_totally_rankable_definitional(fixtures::fig2_array()));
    for (int r = 1; r <= 3; ++r)
        for (int d = 1; d <= 3; ++d) {
            const auto st = standard_permutation_array(r, d);
            CHECK(is_totally_rankable(st.array));
            CHECK(is_totally_rankable_definitional(st.array));
        }
}

TEST_CASE("both total-rankability routes agree on random arrays") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = oracles::random_dot_array(rng, 3, 3);
        CHECK(is_totally_rankable(p) == is_totally_rankable_definitional(p));
    }
}

TEST_CASE("rank array of the figure array") {
    const auto fig3 = fixtures::fig3_array();
    const RankArray rho = rank_array(fig3);
    CHECK(rho.at({0, 0, 0}) == 2);
    CHECK(rho.at({2, 2, 2}) == -1);
    // full grid, layer by layer as displayed
    const std::vector<std::tuple<Position, int>> grid = {
        {{0, 0, 0}, 2}, {{0, 1, 0}, 1}, {{0, 2, 0}, 0},  {{1, 0, 0}, 1},  {{1, 1, 0}, 0},
        {{1, 2, 0}, -1}, {{2, 0, 0}, 0}, {{2, 1, 0}, 0},  {{2, 2, 0}, -1}, {{0, 0, 1}, 1},
        {{0, 1, 1}, 1},  {{0, 2, 1}, 0}, {{1, 0, 1}, 0},  {{1, 1, 1}, 0},  {{1, 2, 1}, -1},
        {{2, 0, 1}, 0},  {{2, 1, 1}, 0}, {{2, 2, 1}, -1}, {{0, 0, 2}, 0},  {{0, 1, 2}, 0},
        {{0, 2, 2}, -1}, {{1, 0, 2}, -1}, {{1, 1, 2}, -1}, {{1, 2, 2}, -1}, {{2, 0, 2}, -1},
        {{2, 1, 2}, -1}, {{2, 2, 2}, -1}};
    for (const auto& [x, v] : grid) CHECK(rho.at(x) == v);
    CHECK_THROWS_AS(rank_array(fixtures::fig2_array()), std::invalid_argument);
    CHECK(rank_array(DotArray(Box::cube(2, 2), {{2, 0}, {1, 1}, {0, 2}})).at({1, 1}) == 0);
}

TEST_CASE("rank arrays are non-increasing along the order") {
    auto check_monotone = [](const DotArray& p) {
        const RankArray rho = rank_array(p);
        const auto positions = p.box.positions();
        for (const auto& x : positions)
            for (const auto& y : positions)
                if (leq(x, y)) CHECK(rho.at(x) >= rho.at(y));
    };
    check_monotone(fixtures::fig3_array());
    check_monotone(fixtures::fig4_array());
    check_monotone(standard_permutation_array(2, 3).array);
    std::mt19937_64 rng(7);
    int seen = 0;
    while (seen < 50) {
        const auto p = oracles::random_dot_array(rng, 2, 3);
        if (!is_totally_rankable(p)) continue;
        check_monotone(p);
        ++seen;
    }
}

TEST_CASE("redundant positions") {
    const auto fig3 = fixtures::fig3_array();
    CHECK(redundant_positions(fig3) == std::vector<Position>{{0, 0, 0}, {0, 1, 1}});
    const DotArray anti(Box::cube(1, 2), {{0, 1}, {1, 0}});
    CHECK(redundant_positions(anti) == oracles::redundant_positions_by_subsets(anti));
    CHECK(redundant_positions(anti) == std::vector<Position>{{0, 0}});
    CHECK(redundant_positions(DotArray(Box::cube(2, 2), {{1, 1}})).empty());

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracles::random_dot_array(rng, 2, 3);
        if (p.size() > 12) continue;
        CHECK(redundant_positions(p) == oracles::redundant_positions_by_subsets(p));
    }
}

TEST_CASE("permutation array recognition") {
    CHECK(is_permutation_array(fixtures::fig3_array()));
    CHECK_FALSE(is_permutation_array(fixtures::fig4_array()));
    CHECK_FALSE(is_permutation_array(fixtures::fig2_array()));
    CHECK_FALSE(is_permutation_array(DotArray(Box::cube(2, 2), {})));
}

TEST_CASE("permutation core and redundant closure") {
    CHECK(permutation_core(fixtures::fig4_array()) == fixtures::fig3_array());
    CHECK(permutation_core(fixtures::fig3_array()) == fixtures::fig3_array());
    CHECK(redundant_closure(fixtures::fig3_array()) == fixtures::fig4_array());
    const auto closed = redundant_closure(fixtures::fig3_array());
    CHECK(redundant_closure(closed) == closed);

    const DotArray anti_closed(Box::cube(1, 2), {{0, 0}, {0, 1}, {1, 0}});
    CHECK(permutation_core(anti_closed) == DotArray(Box::cube(1, 2), {{0, 1}, {1, 0}}));
    CHECK(redundant_closure(DotArray(Box::cube(1, 2), {{0, 1}, {1, 0}})) == anti_closed);

    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracles::random_dot_array(rng, 2, 3);
        if (p.size() > 12) continue;
        CHECK(redundant_closure(p) == oracles::meet_closure_fixpoint(p));
    }
}

TEST_CASE("projection") {
    const auto fig3 = fixtures::fig3_array();
    CHECK(project(fig3, 2) == DotArray(Box::cube(2, 2), {{1, 0}, {2, 1}, {0, 2}, {0, 1}}));
    CHECK_THROWS_AS(project(DotArray(Box::cube(1, 1), {{0}}), 0), std::invalid_argument);

    // projections of subsets of a permutation array are injective
    for (const auto& p : all_permutation_arrays(2, 3)) {
        for (int axis = 0; axis < 3; ++axis) CHECK(project(p, axis).size() == p.size());
    }
    // projections of totally rankable arrays stay totally rankable
    for (int d = 2; d <= 3; ++d)
        for (const auto& p : all_permutation_arrays(2, d)) {
            const auto closed = redundant_closure(p);
            for (int axis = 0; axis < d; ++axis) {
                CHECK(is_totally_rankable(project(p, axis)));
                CHECK(is_totally_rankable(project(closed, axis)));
            }
        }
}

TEST_CASE("standard arrays") {
    CHECK(standard_permutation_array(2, 2).array ==
          DotArray(Box::cube(2, 2), {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(standard_permutation_array(1, 3).array ==
          DotArray(Box::cube(1, 3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    for (int r = 0; r <= 3; ++r)
        for (int d = 1; d <= 3; ++d) {
            const auto st = standard_permutation_array(r, d);
            const auto rho = standard_rank_array(r, d);
            CHECK(rho.at(Position(d, 0)) == r);
            CHECK(rank_array(st.array) == rho);
        }
}

TEST_CASE("find_jump") {
    const auto st = standard_permutation_array(2, 2);
    for (const auto& y : st.closure.dots) CHECK(find_jump(st, y) == y);
    // (1,0) is itself a closure element of rank 1, hence its own jump
    CHECK(find_jump(st, {1, 0}) == Position{1, 0});
    CHECK(st.closure.contains({1, 0}));
    CHECK(st.ranks.at({1, 0}) == 1);

    const auto fig3 = PermutationArray::from(fixtures::fig3_array());
    CHECK(find_jump(fig3, {0, 0, 1}) == Position{0, 1, 1});
    CHECK_THROWS_AS(find_jump(fig3, {2, 2, 2}), std::invalid_argument);

    // uniqueness across all nonnegative-rank positions of enumerated arrays
    for (const auto& p : all_permutation_arrays(2, 3)) {
        const auto pa = PermutationArray::from(p);
        for (const auto& x : p.box.positions()) {
            if (pa.ranks.at(x) < 0) continue;
            const Position y = find_jump(pa, x);
            CHECK(leq(x, y));
            CHECK(pa.ranks.at(y) == pa.ranks.at(x));
        }
    }
}

TEST_CASE("sparse arrays") {
    for (const auto& p : all_permutation_arrays(2, 2))
        CHECK(is_sparse(PermutationArray::from(p)));
    CHECK_FALSE(is_sparse(PermutationArray::from(fixtures::fig3_array())));
    CHECK(is_sparse(standard_permutation_array(1, 2)));
}

TEST_CASE("enumeration counts and sanity") {
    CHECK(count_permutation_arrays(1, 2) == 2);
    CHECK(count_permutation_arrays(2, 2) == 6);
    CHECK(count_permutation_arrays(3, 2) == 24);

    const auto fast = all_permutation_arrays(1, 3);
    const auto slow = oracles::permutation_arrays_by_subsets(1, 3);
    CHECK(fast.size() == slow.size());
    std::set<std::vector<Position>> a, b;
    for (const auto& p : fast) a.insert(p.dots);
    for (const auto& p : slow) b.insert(p.dots);
    CHECK(a == b);

    for (const auto& p : fast) CHECK(is_permutation_array(p));
    for (std::size_t i = 1; i < fast.size(); ++i) CHECK(fast[i - 1].dots < fast[i].dots);

    CHECK_THROWS_AS(count_permutation_arrays(3, 4), EnumerationBudgetError);
    CHECK_THROWS_AS(count_permutation_arrays(2, 6), EnumerationBudgetError);
}

TEST_CASE("enumeration splits deterministically by first dot") {
    const auto whole = all_permutation_arrays(2, 3);
    std::vector<DotArray> merged;
    const long long n = Box::cube(2, 3).position_count();
    for (long long first = 0; first < n; ++first)
        enumerate_permutation_arrays(2, 3, [&](const DotArray& p) {
            merged.push_back(p);
            return true;
        }, first);
    REQUIRE(merged.size() == whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i) CHECK(merged[i] == whole[i]);
}

TEST_CASE("closure core round trip and graded poset on enumerated arrays") {
    for (int d = 2; d <= 3; ++d) {
        for (const auto& p : all_permutation_arrays(2, d)) {
            const auto closed = redundant_closure(p);
            CHECK(permutation_core(closed) == p);
            const RankArray rho = rank_array(p);
            CHECK(rank_array(closed) == rho);
            for (const auto& x : closed.dots)
                for (const auto& y : closed.dots)
                    if (x != y && leq(x, y)) CHECK(rho.at(x) > rho.at(y));
        }
    }
}

TEST_CASE("dimension extension") {
    const auto st = standard_permutation_array(1, 2);
    const auto lifted = extend_dimension(st);
    CHECK(lifted.array == DotArray(Box::cube(1, 3), {{0, 1, 1}, {1, 0, 0}}));
    for (const auto& x : lifted.array.dots) CHECK(x[x.size() - 1] == x[x.size() - 2]);

    const DotArray chain(Box::cube(1, 2), {{0, 0}, {1, 1}});
    CHECK_THROWS_AS(extend_dimension(PermutationArray::from(chain)), std::invalid_argument);
}

TEST_CASE("rank extension") {
    const auto st = standard_permutation_array(1, 2);
    const auto up = extend_rank(st);
    CHECK(up.rank() == 2);
    CHECK(up.array.contains({2, 2}));
    CHECK(up.ranks.at({0, 0}) == 2);
}
