#include "troplin/hyperarray.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace troplin {

Box::Box(std::vector<int> b) : bounds(std::move(b)) {
    if (bounds.empty()) throw std::invalid_argument("Box: dimension must be >= 1");
    for (int r : bounds)
        if (r < 0) throw std::invalid_argument("Box: bounds must be nonnegative");
}

Box Box::cube(int r, int d) {
    if (d < 1) throw std::invalid_argument("Box::cube: d must be >= 1");
    if (r < 0) throw std::invalid_argument("Box::cube: r must be >= 0");
    return Box(std::vector<int>(d, r));
}

bool Box::contains(const Position& x) const {
    if (static_cast<int>(x.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (x[i] < 0 || x[i] > bounds[i]) return false;
    return true;
}

long long Box::position_count() const {
    long long n = 1;
    for (int r : bounds) n *= (r + 1);
    return n;
}

std::vector<Position> Box::positions() const {
    std::vector<Position> out;
    out.reserve(static_cast<std::size_t>(position_count()));
    Position x(dim(), 0);
    while (true) {
        out.push_back(x);
        int i = dim() - 1;
        while (i >= 0 && x[i] == bounds[i]) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

long long Box::index_of(const Position& x) const {
    if (!contains(x)) throw std::out_of_range("Box::index_of: position outside box");
    long long idx = 0;
    for (int i = 0; i < dim(); ++i) idx = idx * (bounds[i] + 1) + x[i];
    return idx;
}

Position Box::position_at(long long index) const {
    Position x(dim(), 0);
    for (int i = dim() - 1; i >= 0; --i) {
        x[i] = static_cast<int>(index % (bounds[i] + 1));
        index /= (bounds[i] + 1);
    }
    return x;
}

DotArray::DotArray(Box b, std::vector<Position> ds) : box(std::move(b)), dots(std::move(ds)) {
    for (const auto& x : dots)
        if (!box.contains(x)) throw std::invalid_argument("DotArray: dot outside box");
    std::sort(dots.begin(), dots.end());
    dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
}

bool DotArray::contains(const Position& x) const {
    return std::binary_search(dots.begin(), dots.end(), x);
}

Position meet(const Position& x, const Position& y) {
    if (x.size() != y.size()) throw std::invalid_argument("meet: dimension mismatch");
    Position z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::min(x[i], y[i]);
    return z;
}

bool leq(const Position& x, const Position& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

bool shares_coordinate(const Position& x, const Position& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) return true;
    return false;
}

int axis_rank(const DotArray& p, int axis) {
    if (p.empty()) throw std::invalid_argument("axis_rank: empty dot array");
    if (axis < 0 || axis >= p.dim()) throw std::out_of_range("axis_rank: bad axis");
    std::set<int> vals;
    for (const auto& x : p.dots) vals.insert(x[axis]);
    return static_cast<int>(vals.size()) - 1;
}

std::optional<int> is_rankable(const DotArray& p) {
    if (p.empty()) throw std::invalid_argument("is_rankable: empty dot array");
    const int s = axis_rank(p, 0);
    for (int i = 1; i < p.dim(); ++i)
        if (axis_rank(p, i) != s) return std::nullopt;
    return s;
}

DotArray principal_subarray(const DotArray& p, const Position& x) {
    std::vector<Position> ds;
    for (const auto& y : p.dots)
        if (leq(x, y)) ds.push_back(y);
    return DotArray(p.box, std::move(ds));
}

bool is_totally_rankable_definitional(const DotArray& p) {
    if (p.empty()) throw std::invalid_argument("is_totally_rankable: empty dot array");
    for (const auto& x : p.box.positions()) {
        DotArray sub = principal_subarray(p, x);
        if (sub.empty()) continue;
        if (!is_rankable(sub)) return false;
    }
    return true;
}

bool is_totally_rankable(const DotArray& p) {
    if (p.empty()) throw std::invalid_argument("is_totally_rankable: empty dot array");
    const int d = p.dim();
    for (const auto& x : p.dots) {
        for (const auto& y : p.dots) {
            for (int i = 0; i < d; ++i) {
                if (x[i] <= y[i]) continue;
                for (int j = 0; j < d; ++j) {
                    if (x[j] != y[j]) continue;
                    const Position m = meet(x, y);
                    bool found = false;
                    for (const auto& z : p.dots) {
                        if (z[i] == y[i] && z[j] > y[j] && leq(m, z)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) return false;
                }
            }
        }
    }
    return true;
}

RankArray rank_array(const DotArray& p) {
    if (p.empty()) throw std::invalid_argument("rank_array: empty dot array");
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(p.box.position_count()));
    for (const auto& x : p.box.positions()) {
        DotArray sub = principal_subarray(p, x);
        if (sub.empty()) {
            vals.push_back(-1);
            continue;
        }
        auto s = is_rankable(sub);
        if (!s)
            throw std::invalid_argument("rank_array: array not totally rankable at " +
                                        position_to_string(x));
        vals.push_back(*s);
    }
    return RankArray(p.box, std::move(vals));
}

RankArray::RankArray(Box b, std::vector<int> vals) : box(std::move(b)), values(std::move(vals)) {
    if (static_cast<long long>(values.size()) != box.position_count())
        throw std::invalid_argument("RankArray: value count does not match box");
}

namespace {

// x is redundant iff H = { y in P : y >= x, y shares a coordinate with x }
// has |H| >= 2 and meet(H) == x. Adding further members of H never raises
// the meet, so testing the full H is exact.
bool is_redundant_position(const DotArray& p, const Position& x) {
    int count = 0;
    Position m;
    for (const auto& y : p.dots) {
        if (!leq(x, y) || !shares_coordinate(x, y)) continue;
        if (count == 0)
            m = y;
        else
            m = meet(m, y);
        ++count;
    }
    return count >= 2 && m == x;
}

}  // namespace

std::vector<Position> redundant_positions(const DotArray& p) {
    std::vector<Position> out;
    for (const auto& x : p.box.positions())
        if (is_redundant_position(p, x)) out.push_back(x);
    return out;
}

bool is_permutation_array(const DotArray& p) {
    if (p.empty()) return false;
    const auto& b = p.box.bounds;
    for (int r : b)
        if (r != b[0]) return false;
    if (!is_totally_rankable(p)) return false;
    auto s = is_rankable(p);
    if (!s || *s != b[0]) return false;
    for (const auto& x : p.dots)
        if (is_redundant_position(p, x)) return false;
    return true;
}

DotArray permutation_core(const DotArray& p) {
    if (!is_totally_rankable(p))
        throw std::invalid_argument("permutation_core: array not totally rankable");
    std::vector<Position> ds;
    for (const auto& x : p.dots)
        if (!is_redundant_position(p, x)) ds.push_back(x);
    return DotArray(p.box, std::move(ds));
}

DotArray redundant_closure(const DotArray& p) {
    std::vector<Position> ds = p.dots;
    for (auto& x : redundant_positions(p)) ds.push_back(std::move(x));
    return DotArray(p.box, std::move(ds));
}

DotArray project(const DotArray& p, int axis) {
    if (p.dim() < 2) throw std::invalid_argument("project: dimension must be >= 2");
    if (axis < 0 || axis >= p.dim()) throw std::out_of_range("project: bad axis");
    std::vector<int> bounds = p.box.bounds;
    bounds.erase(bounds.begin() + axis);
    std::vector<Position> ds;
    ds.reserve(p.size());
    for (const auto& x : p.dots) {
        Position y = x;
        y.erase(y.begin() + axis);
        ds.push_back(std::move(y));
    }
    return DotArray(Box(std::move(bounds)), std::move(ds));
}

PermutationArray PermutationArray::from(DotArray p) {
    if (!is_permutation_array(p))
        throw std::invalid_argument("PermutationArray: input is not a permutation array");
    PermutationArray out;
    out.ranks = rank_array(p);
    out.redundant = redundant_positions(p);
    out.closure = redundant_closure(p);
    out.array = std::move(p);
    return out;
}

PermutationArray standard_permutation_array(int r, int d) {
    Box box = Box::cube(r, d);
    std::vector<Position> ds;
    for (const auto& x : box.positions()) {
        int sum = 0;
        for (int v : x) sum += v;
        if (sum == r) ds.push_back(x);
    }
    return PermutationArray::from(DotArray(std::move(box), std::move(ds)));
}

RankArray standard_rank_array(int r, int d) {
    Box box = Box::cube(r, d);
    std::vector<int> vals;
    for (const auto& x : box.positions()) {
        int sum = 0;
        for (int v : x) sum += v;
        vals.push_back(std::max(-1, r - sum));
    }
    return RankArray(std::move(box), std::move(vals));
}

Position find_jump(const PermutationArray& p, const Position& x) {
    const int rho = p.ranks.at(x);
    if (rho < 0) throw std::invalid_argument("find_jump: rank is -1 at " + position_to_string(x));
    std::vector<Position> hits;
    for (const auto& y : p.closure.dots)
        if (leq(x, y) && p.ranks.at(y) == rho) hits.push_back(y);
    if (hits.size() != 1)
        throw std::logic_error("find_jump: jump witness not unique at " + position_to_string(x));
    return hits[0];
}

bool is_sparse(const PermutationArray& p) {
    const int r = p.rank();
    for (int axis = 0; axis < p.dim(); ++axis) {
        std::vector<int> count(r + 1, 0);
        for (const auto& x : p.array.dots) ++count[x[axis]];
        for (int c : count)
            if (c != 1) return false;
    }
    return true;
}

bool is_antichain(const DotArray& p) {
    for (std::size_t i = 0; i < p.dots.size(); ++i)
        for (std::size_t j = 0; j < p.dots.size(); ++j)
            if (i != j && leq(p.dots[i], p.dots[j])) return false;
    return true;
}

PermutationArray extend_dimension(const PermutationArray& p) {
    if (!is_antichain(p.array))
        throw std::invalid_argument("extend_dimension: input must be an antichain");
    std::vector<Position> ds;
    ds.reserve(p.array.size());
    for (const auto& x : p.array.dots) {
        Position y = x;
        y.push_back(x.back());
        ds.push_back(std::move(y));
    }
    return PermutationArray::from(DotArray(Box::cube(p.rank(), p.dim() + 1), std::move(ds)));
}

PermutationArray extend_rank(const PermutationArray& p) {
    const int r = p.rank() + 1;
    std::vector<Position> ds = p.array.dots;
    ds.emplace_back(p.dim(), r);
    return PermutationArray::from(DotArray(Box::cube(r, p.dim()), std::move(ds)));
}

std::string position_to_string(const Position& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

}  // namespace troplin
