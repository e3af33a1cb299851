#include "troplin/array_properties.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace troplin {

PropertyReport check_P1(const DotArray& m) {
    for (const auto& x : m.dots) {
        for (const auto& y : m.dots) {
            Position z = meet(x, y);
            if (!m.contains(z)) {
                return {"P1", false,
                        Witness{{x, y}, {}, "missing meet " + position_to_string(z)}};
            }
        }
    }
    return {"P1", true, std::nullopt};
}

PropertyReport check_P2(const DotArray& m, int r) {
    for (int axis = 0; axis < m.dim(); ++axis) {
        std::vector<bool> seen(r + 1, false);
        for (const auto& x : m.dots)
            if (x[axis] <= r) seen[x[axis]] = true;
        for (int v = 0; v <= r; ++v) {
            if (!seen[v]) {
                return {"P2", false,
                        Witness{{},
                                {axis, v},
                                "no dot with coordinate " + std::to_string(v) + " on axis " +
                                    std::to_string(axis)}};
            }
        }
    }
    return {"P2", true, std::nullopt};
}

namespace {

bool p3_certifies(const std::vector<Position>& sub) {
    if (sub.size() < 2) return false;
    const std::size_t d = sub[0].size();
    for (std::size_t axis = 0; axis < d; ++axis) {
        int mn = sub[0][axis];
        for (const auto& x : sub) mn = std::min(mn, x[axis]);
        int hits = 0;
        for (const auto& x : sub)
            if (x[axis] == mn) ++hits;
        if (hits < 2) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Position>> check_P3_subset(const std::vector<Position>& s) {
    std::vector<Position> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n < 2 || n > 30) {
        if (n > 30) throw std::invalid_argument("check_P3_subset: set too large");
        return std::nullopt;
    }
    // Group masks by size descending; within a size, subsets of a sorted list
    // are visited in lexicographic order of their element sequences.
    std::vector<std::vector<unsigned>> by_size(n + 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    for (std::size_t size = n; size >= 2; --size) {
        auto& masks = by_size[size];
        std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
            for (std::size_t k = 0; k < n; ++k) {
                const bool ina = a & (1u << k), inb = b & (1u << k);
                if (ina != inb) return ina;  // containing the smaller element first
            }
            return false;
        });
        for (unsigned mask : masks) {
            std::vector<Position> sub;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) sub.push_back(sorted[k]);
            if (p3_certifies(sub)) return sub;
        }
    }
    return std::nullopt;
}

namespace {

// Visits all size-k subsets of `items` in lexicographic index order.
template <typename F>
bool for_each_subset(const std::vector<Position>& items, std::size_t k, F&& f) {
    const std::size_t n = items.size();
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Position> sub;
        sub.reserve(k);
        for (std::size_t i : idx) sub.push_back(items[i]);
        if (!f(sub)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PropertyReport check_P3(const DotArray& m, int r) {
    const std::size_t need = static_cast<std::size_t>(r) + 2;
    PropertyReport report{"P3", true, std::nullopt};
    for_each_subset(m.dots, need, [&](const std::vector<Position>& s) {
        if (!check_P3_subset(s)) {
            report.verdict = false;
            report.witness = Witness{s, {}, "no subset attains every axis minimum twice"};
            return false;
        }
        return true;
    });
    return report;
}

PropertyReport check_P2prime(const DotArray& m, int r) {
    const int d = m.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int ri = 0; ri <= r; ++ri) {
                const int rj = r - ri;
                bool found = false;
                for (const auto& z : m.dots) {
                    // Cut value c splits u's (j-coordinate < c) from w's
                    // (j-coordinate >= c); P2c is equivalent to such a split.
                    for (int c = 0; c <= r + 1 && !found; ++c) {
                        std::set<int> uvals, wvals;
                        for (const auto& x : m.dots) {
                            if (x[j] < z[j] && x[j] < c) uvals.insert(x[j]);
                            if (x[i] < z[i] && x[j] >= c) wvals.insert(x[i]);
                        }
                        if (static_cast<int>(uvals.size()) >= rj &&
                            static_cast<int>(wvals.size()) >= ri)
                            found = true;
                    }
                    if (found) break;
                }
                if (!found) {
                    return {"P2'", false,
                            Witness{{},
                                    {i, j, ri, rj},
                                    "no witness chain for axes (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") partition " + std::to_string(ri) +
                                        "+" + std::to_string(rj)}};
                }
            }
        }
    }
    return {"P2'", true, std::nullopt};
}

namespace {

// Recursive subarray machinery for P4. A subarray is identified by its
// per-axis sorted value lists; verdicts are memoized per outer array.
struct P4Engine {
    const DotArray& m;
    std::map<std::vector<std::vector<int>>, bool> memo;

    std::vector<Position> dots_in(const std::vector<std::vector<int>>& values) const {
        std::vector<Position> out;
        for (const auto& x : m.dots) {
            bool inside = true;
            for (std::size_t a = 0; a < values.size() && inside; ++a)
                inside = std::binary_search(values[a].begin(), values[a].end(), x[a]);
            if (inside) out.push_back(x);
        }
        return out;
    }

    // Order-preserving relabel of subarray dots onto [k]^d.
    static DotArray relabel(const std::vector<std::vector<int>>& values,
                            const std::vector<Position>& dots) {
        const int d = static_cast<int>(values.size());
        const int k = static_cast<int>(values[0].size()) - 1;
        std::vector<Position> out;
        out.reserve(dots.size());
        for (const auto& x : dots) {
            Position y(d);
            for (int a = 0; a < d; ++a) {
                auto it = std::lower_bound(values[a].begin(), values[a].end(), x[a]);
                y[a] = static_cast<int>(it - values[a].begin());
            }
            out.push_back(std::move(y));
        }
        return DotArray(Box::cube(k, d), std::move(out));
    }

    bool suite(const std::vector<std::vector<int>>& values) {
        auto it = memo.find(values);
        if (it != memo.end()) return it->second;
        const int k = static_cast<int>(values[0].size()) - 1;
        auto dots = dots_in(values);
        bool ok = !dots.empty();
        if (ok) {
            DotArray sub = relabel(values, dots);
            ok = check_P1(sub).verdict && check_P2(sub, k).verdict && check_P3(sub, k).verdict &&
                 p4_inside(values, dots);
        }
        memo.emplace(values, ok);
        return ok;
    }

    bool p4_inside(const std::vector<std::vector<int>>& values, const std::vector<Position>& dots) {
        const int k = static_cast<int>(values[0].size()) - 1;
        for (int kk = 1; kk < k; ++kk) {
            bool ok = true;
            for_each_subset(dots, static_cast<std::size_t>(kk) + 1,
                            [&](const std::vector<Position>& n) {
                                if (!extendable(values, n, kk)) {
                                    ok = false;
                                    return false;
                                }
                                return true;
                            });
            if (!ok) return false;
        }
        return true;
    }

    // Does some [k]^d-subarray inside `outer` contain n and pass the suite?
    bool extendable(const std::vector<std::vector<int>>& outer, const std::vector<Position>& n,
                    int k) {
        const int d = static_cast<int>(outer.size());
        std::vector<std::vector<int>> used(d), extra(d);
        for (int a = 0; a < d; ++a) {
            std::set<int> u;
            for (const auto& x : n) u.insert(x[a]);
            if (static_cast<int>(u.size()) > k + 1) return false;
            used[a].assign(u.begin(), u.end());
            for (int v : outer[a])
                if (!u.count(v)) extra[a].push_back(v);
        }
        std::vector<std::vector<std::vector<int>>> axis_choices(d);
        for (int a = 0; a < d; ++a) {
            const int need = k + 1 - static_cast<int>(used[a].size());
            std::vector<Position> wrap;  // reuse the subset walker over ints
            for (int v : extra[a]) wrap.push_back({v});
            for_each_subset(wrap, static_cast<std::size_t>(need),
                            [&](const std::vector<Position>& pick) {
                                std::vector<int> vals = used[a];
                                for (const auto& p : pick) vals.push_back(p[0]);
                                std::sort(vals.begin(), vals.end());
                                axis_choices[a].push_back(std::move(vals));
                                return true;
                            });
            if (axis_choices[a].empty()) return false;
        }
        std::vector<std::size_t> pick(d, 0);
        while (true) {
            std::vector<std::vector<int>> values(d);
            for (int a = 0; a < d; ++a) values[a] = axis_choices[a][pick[a]];
            if (suite(values)) return true;
            int a = d - 1;
            while (a >= 0 && pick[a] + 1 == axis_choices[a].size()) pick[a--] = 0;
            if (a < 0) return false;
            ++pick[a];
        }
    }
};

std::vector<std::vector<int>> full_values(int r, int d) {
    std::vector<int> all(r + 1);
    for (int v = 0; v <= r; ++v) all[v] = v;
    return std::vector<std::vector<int>>(d, all);
}

}  // namespace

PropertyReport check_P4(const DotArray& m, int r) {
    P4Engine engine{m, {}};
    const auto outer = full_values(r, m.dim());
    for (int k = 1; k < r; ++k) {
        PropertyReport report{"P4", true, std::nullopt};
        for_each_subset(m.dots, static_cast<std::size_t>(k) + 1,
                        [&](const std::vector<Position>& n) {
                            if (!engine.extendable(outer, n, k)) {
                                report.verdict = false;
                                report.witness =
                                    Witness{n,
                                            {k},
                                            "no [" + std::to_string(k) + "]^" +
                                                std::to_string(m.dim()) +
                                                "-subarray satisfying P1-P4 contains it"};
                                return false;
                            }
                            return true;
                        });
        if (!report.verdict) return report;
    }
    return {"P4", true, std::nullopt};
}

bool p4_subset_extendable(const DotArray& m, int r, const std::vector<Position>& subset) {
    if (subset.empty() || static_cast<int>(subset.size()) > r)
        throw std::invalid_argument("p4_subset_extendable: subset size must be in [1, r]");
    P4Engine engine{m, {}};
    return engine.extendable(full_values(r, m.dim()), subset,
                             static_cast<int>(subset.size()) - 1);
}

PermutationArray billey_vakil_counterexample() {
    std::vector<Position> dots = {
        {0, 2, 0, 3}, {2, 0, 0, 2}, {0, 0, 1, 2}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1},
        {0, 0, 2, 1}, {3, 0, 3, 0}, {2, 3, 0, 0}, {1, 1, 1, 0}, {0, 2, 2, 0}};
    return PermutationArray::from(DotArray(Box::cube(3, 4), std::move(dots)));
}

}  // namespace troplin
