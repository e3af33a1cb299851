#include "troplin/realization.hpp"

#include <algorithm>
#include <stdexcept>

namespace troplin {

PLFunction StarRealization::function_for(const Position& x) const {
    if (!perm.closure.contains(x))
        throw std::invalid_argument("function_for: position not in the closure");
    std::vector<int> slopes(x.begin(), x.end());
    return PLFunction::linear(graph, std::move(slopes), 0, Rat(0));
}

StarRealization realize_on_star(const PermutationArray& p, const Rat& edge_length) {
    if (edge_length <= Rat(0)) throw std::invalid_argument("realize_on_star: length must be > 0");
    const int d = p.dim();
    auto graph = MetricGraph::star(d, edge_length);
    long long s = 0;
    for (const auto& x : p.array.dots) {
        long long sum = 0;
        for (int v : x) sum += v;
        s = std::max(s, sum);
    }
    const Divisor dv = Divisor::single(GraphPoint::at_vertex(0), s);
    std::vector<PLFunction> gens;
    gens.reserve(p.array.size());
    for (const auto& x : p.array.dots)
        gens.push_back(PLFunction::linear(graph, std::vector<int>(x.begin(), x.end()), 0, Rat(0)));
    return StarRealization{graph, p, edge_length, s,
                           TropicalModule(graph, dv, std::move(gens))};
}

namespace {

struct EdgePoint {
    int edge;    // -1 at the center
    Rat dist;    // distance from the center
};

EdgePoint locate(const StarRealization& r, const GraphPoint& p) {
    if (p.is_vertex()) {
        if (p.vertex == 0) return {-1, Rat(0)};
        // leaf i is vertex i+... leaves are vertices 1..d on edge vertex-1
        return {p.vertex - 1, r.edge_length};
    }
    return {p.edge, p.offset};
}

Position indicator(int d, int edge) {
    Position p(static_cast<std::size_t>(d), 0);
    p[static_cast<std::size_t>(edge)] = 1;
    return p;
}

}  // namespace

PLFunction bnrp_rank2_witness(const StarRealization& r, const Divisor& e) {
    if (r.perm.rank() != 2) throw std::invalid_argument("bnrp_rank2_witness: rank must be 2");
    if (!e.is_effective() || e.degree() != 2)
        throw std::invalid_argument("bnrp_rank2_witness: E must be effective of degree 2");

    std::vector<EdgePoint> pts;
    for (const auto& [p, c] : e.coefficients())
        for (long long k = 0; k < c; ++k) pts.push_back(locate(r, p));
    if (pts[0].dist < pts[1].dist) std::swap(pts[0], pts[1]);
    const Rat l1 = pts[0].dist, l2 = pts[1].dist;
    const int d = r.perm.dim();

    auto combo = [&](const Position& a, const Position& b, const Position& c, const Rat& sb,
                     const Rat& sc) {
        return tropical_min(
            std::vector<PLFunction>{r.function_for(a), r.function_for(b), r.function_for(c)},
            std::vector<Rat>{Rat(0), sb, sc});
    };

    const bool same_edge = pts[0].edge == pts[1].edge || pts[1].edge < 0 || pts[0].edge < 0;
    if (same_edge) {
        // Chain on one edge: slopes 2, 1, 0 hand over at distances l2 and l1.
        const int edge = pts[0].edge >= 0 ? pts[0].edge : std::max(pts[1].edge, 0);
        Position x, y, z;
        bool fx = false, fy = false, fz = false;
        for (const auto& dot : r.perm.array.dots) {
            const int v = dot[static_cast<std::size_t>(edge)];
            if (v == 0 && !fx) x = dot, fx = true;
            if (v == 1 && !fy) y = dot, fy = true;
            if (v == 2 && !fz) z = dot, fz = true;
        }
        if (!fx || !fy || !fz)
            throw std::logic_error("bnrp_rank2_witness: axis values missing from the array");
        return combo(z, y, x, l2, l1 + l2);
    }

    const int ea = pts[0].edge, eb = pts[1].edge;
    const auto jump = [&](const Position& at) { return find_jump(r.perm, at); };

    const Position x1 = jump(indicator(d, ea));
    if (r.perm.ranks.at(x1) != 1)
        throw std::logic_error("bnrp_rank2_witness: jump above an edge indicator must have rank 1");
    Position x1_plus = x1;
    x1_plus[static_cast<std::size_t>(eb)] += 1;
    const Position x2 = jump(x1_plus);
    if (r.perm.ranks.at(x2) != 0)
        throw std::logic_error("bnrp_rank2_witness: second jump must have rank 0");
    const Position origin(static_cast<std::size_t>(d), 0);

    if (x1[static_cast<std::size_t>(eb)] >= 1) {
        // x1 dominates both indicators.
        const int a2 = x2[static_cast<std::size_t>(ea)];
        if (a2 == 1) return combo(x2, x1, origin, l2, l1);
        if (a2 == 2) return combo(x2, x1, origin, l2, l2 + l1);
        throw std::logic_error("bnrp_rank2_witness: unexpected coordinate in subcase 1");
    }

    const Position y1 = jump(indicator(d, eb));
    if (r.perm.ranks.at(y1) != 1 || y1[static_cast<std::size_t>(ea)] != 0)
        throw std::logic_error("bnrp_rank2_witness: cross jump element malformed");
    const int a2 = x2[static_cast<std::size_t>(ea)];
    const int b2 = x2[static_cast<std::size_t>(eb)];
    if (a2 == 1 && b2 == 1) return combo(x2, x1, y1, l2, l1);
    if (a2 == 1 && b2 == 2) return combo(x2, x1, y1, l2 * 2, l1);
    if (a2 == 2 && b2 == 1) return combo(x2, x1, y1, l2, l2 + l1);
    if (a2 == 2 && b2 == 2) {
        if (l1 >= l2 * 2) return combo(x2, x1, y1, l2 * 2, l2 * 2 + l1);
        return combo(x2, x1, y1, l2 * 2, l1 * 2);
    }
    throw std::logic_error("bnrp_rank2_witness: unexpected coordinates in subcase 2");
}

PropertyReport check_generator_dependence(const StarRealization& r) {
    const int rank = r.perm.rank();
    PropertyReport report{"P3", true, std::nullopt};
    const std::size_t need = static_cast<std::size_t>(rank) + 2;
    const auto& dots = r.perm.array.dots;
    if (dots.size() < need) return report;
    std::vector<std::size_t> idx(need);
    for (std::size_t i = 0; i < need; ++i) idx[i] = i;
    while (true) {
        std::vector<Position> sub;
        for (std::size_t i : idx) sub.push_back(dots[i]);
        if (!check_P3_subset(sub)) {
            report.verdict = false;
            report.witness = Witness{sub, {}, "generator subset with no twice-attained minima"};
            return report;
        }
        std::size_t i = need;
        while (i > 0 && idx[i - 1] == dots.size() - need + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    return report;
}

}  // namespace troplin
