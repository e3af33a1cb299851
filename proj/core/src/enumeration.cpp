#include "troplin/enumeration.hpp"

#include <algorithm>

namespace troplin {

bool enumeration_budget_allows(int r, int d) {
    if (r < 0 || d < 1) return false;
    if (d <= 2) return r <= 5;
    if (d == 3) return r <= 4;
    if (d <= 5) return r <= 2;
    return false;
}

namespace {

// DFS over dot sets in increasing lexicographic position order.
//
// Invariants maintained incrementally while a dot z is appended:
//   * no dotted point is redundant: a dot q becomes redundant exactly when
//     a later dot z > q satisfies z >= q and shares a coordinate with q,
//     so such additions are pruned;
//   * every exchange condition (x_i > y_i, x_j = y_j needs a witness
//     z >= x^y with z_i = y_i, z_j > y_j) is either already satisfied or
//     still repairable by a position lexicographically after z;
//   * every axis value not yet covered is still obtainable after z.
// A node emits its dot set when all conditions are satisfied and every
// axis carries all r+1 values; the result is then a permutation array.
struct Enumerator {
    int r, d;
    Box box;
    std::vector<Position> pos;  // all box positions, lex order
    const std::function<bool(const DotArray&)>* sink;
    bool stopped = false;

    struct Condition {
        Position m;  // meet of the violating pair
        int i, yi;   // witness must have w[i] == yi
        int j, yj;   // ... and w[j] > yj
    };

    std::vector<long long> dots;  // indices into pos, increasing

    bool satisfied_by(const Condition& c, const Position& w) const {
        return w[c.i] == c.yi && w[c.j] > c.yj && leq(c.m, w);
    }

    bool satisfied_by_any_dot(const Condition& c) const {
        for (long long k : dots)
            if (satisfied_by(c, pos[static_cast<std::size_t>(k)])) return true;
        return false;
    }

    // Lexicographically largest position that could still witness c.
    // Empty when no position can (value range exhausted).
    std::optional<Position> max_witness(const Condition& c) const {
        if (c.yj >= r) return std::nullopt;
        Position w(d, r);
        w[c.i] = c.yi;
        w[c.j] = r;
        return w;
    }

    bool future_can_fix(const Condition& c, const Position& last) const {
        auto w = max_witness(c);
        return w.has_value() && *w > last;
    }

    // Largest position with the given value on one axis.
    Position max_with_value(int axis, int value) const {
        Position w(d, r);
        w[axis] = value;
        return w;
    }

    void run(std::optional<long long> first_filter) {
        std::vector<Condition> pending;
        std::vector<std::vector<int>> value_count(d, std::vector<int>(r + 1, 0));
        const long long n = static_cast<long long>(pos.size());
        for (long long first = 0; first < n && !stopped; ++first) {
            if (first_filter && *first_filter != first) continue;
            dfs(first, pending, value_count);
        }
    }

    void dfs(long long next, std::vector<Condition> pending,
             std::vector<std::vector<int>>& value_count) {
        if (stopped) return;
        const Position& z = pos[static_cast<std::size_t>(next)];

        // A later dot above an existing dot sharing a coordinate would make
        // the earlier dot redundant.
        for (long long k : dots) {
            const Position& q = pos[static_cast<std::size_t>(k)];
            if (leq(q, z) && shares_coordinate(q, z)) return;
        }

        // New exchange conditions from pairs involving z.
        std::vector<Condition> fresh;
        for (long long k : dots) {
            const Position& q = pos[static_cast<std::size_t>(k)];
            for (int j = 0; j < d; ++j) {
                if (z[j] != q[j]) continue;
                for (int i = 0; i < d; ++i) {
                    if (z[i] > q[i])
                        fresh.push_back({meet(z, q), i, q[i], j, q[j]});
                    else if (q[i] > z[i])
                        fresh.push_back({meet(z, q), i, z[i], j, z[j]});
                }
            }
        }

        dots.push_back(next);
        for (int a = 0; a < d; ++a) ++value_count[a][z[a]];

        std::vector<Condition> still;
        bool dead = false;
        auto keep_or_die = [&](const Condition& c) {
            if (future_can_fix(c, z))
                still.push_back(c);
            else
                dead = true;
        };
        // Conditions carried from the parent were unsatisfied by older dots,
        // so only z can have resolved them.
        for (const auto& c : pending) {
            if (dead) break;
            if (!satisfied_by(c, z)) keep_or_die(c);
        }
        for (const auto& c : fresh) {
            if (dead) break;
            if (!satisfied_by_any_dot(c)) keep_or_die(c);
        }

        if (!dead) {
            bool covered = true;
            for (int a = 0; a < d && !dead; ++a) {
                for (int v = 0; v <= r; ++v) {
                    if (value_count[a][v] > 0) continue;
                    covered = false;
                    if (!(max_with_value(a, v) > z)) {
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead && covered && still.empty()) {
                std::vector<Position> ds;
                ds.reserve(dots.size());
                for (long long k : dots) ds.push_back(pos[static_cast<std::size_t>(k)]);
                if (!(*sink)(DotArray(box, std::move(ds)))) stopped = true;
            }
            if (!dead && !stopped) {
                const long long n = static_cast<long long>(pos.size());
                for (long long nx = next + 1; nx < n && !stopped; ++nx)
                    dfs(nx, still, value_count);
            }
        }

        for (int a = 0; a < d; ++a) --value_count[a][z[a]];
        dots.pop_back();
    }
};

}  // namespace

void enumerate_permutation_arrays(int r, int d,
                                  const std::function<bool(const DotArray&)>& sink,
                                  std::optional<long long> first_dot_filter) {
    if (!enumeration_budget_allows(r, d))
        throw EnumerationBudgetError(
            "enumeration budget exceeded for r=" + std::to_string(r) + ", d=" +
            std::to_string(d) + " (supported: d<=2 with r<=5, d=3 with r<=4, d<=5 with r<=2)");
    Enumerator e;
    e.r = r;
    e.d = d;
    e.box = Box::cube(r, d);
    e.pos = e.box.positions();
    e.sink = &sink;
    e.run(first_dot_filter);
}

std::vector<DotArray> all_permutation_arrays(int r, int d) {
    std::vector<DotArray> out;
    enumerate_permutation_arrays(r, d, [&](const DotArray& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

long long count_permutation_arrays(int r, int d) {
    long long n = 0;
    enumerate_permutation_arrays(r, d, [&](const DotArray&) {
        ++n;
        return true;
    });
    return n;
}

}  // namespace troplin
