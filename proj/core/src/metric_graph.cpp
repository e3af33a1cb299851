#include "troplin/metric_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace troplin {

MetricGraph::MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
    if (names_.empty()) throw std::invalid_argument("MetricGraph: no vertices");
    incidence_.resize(names_.size());
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.tail < 0 || ed.tail >= vertex_count() || ed.head < 0 || ed.head >= vertex_count())
            throw std::invalid_argument("MetricGraph: edge endpoint out of range");
        if (ed.tail == ed.head)
            throw std::invalid_argument("MetricGraph: self-loops unsupported, use two edges");
        if (ed.length <= Rat(0)) throw std::invalid_argument("MetricGraph: edge length must be > 0");
        incidence_[static_cast<std::size_t>(ed.tail)].push_back({e, false});
        incidence_[static_cast<std::size_t>(ed.head)].push_back({e, true});
    }
    // connectivity
    std::vector<bool> seen(names_.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, at_head] : incidence_[static_cast<std::size_t>(v)]) {
            int w = at_head ? edges_[static_cast<std::size_t>(e)].tail
                            : edges_[static_cast<std::size_t>(e)].head;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::invalid_argument("MetricGraph: graph must be connected");
}

std::shared_ptr<const MetricGraph> MetricGraph::interval(const Rat& length) {
    return std::make_shared<const MetricGraph>(std::vector<std::string>{"v", "u"},
                                               std::vector<Edge>{{0, 1, length}});
}

std::shared_ptr<const MetricGraph> MetricGraph::loop(const Rat& edge_length) {
    return std::make_shared<const MetricGraph>(
        std::vector<std::string>{"u", "v"},
        std::vector<Edge>{{0, 1, edge_length}, {0, 1, edge_length}});
}

std::shared_ptr<const MetricGraph> MetricGraph::star(int d, const Rat& edge_length) {
    if (d < 1) throw std::invalid_argument("MetricGraph::star: need at least one edge");
    std::vector<std::string> names = {"v"};
    std::vector<Edge> edges;
    for (int i = 1; i <= d; ++i) {
        names.push_back("u" + std::to_string(i));
        edges.push_back({0, i, edge_length});
    }
    return std::make_shared<const MetricGraph>(std::move(names), std::move(edges));
}

int MetricGraph::vertex_index(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (names_[static_cast<std::size_t>(v)] == name) return v;
    throw std::invalid_argument("MetricGraph: unknown vertex '" + name + "'");
}

int MetricGraph::valence(int v) const {
    return static_cast<int>(incidence_.at(static_cast<std::size_t>(v)).size());
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, int e, const Rat& off) {
    const auto& edge = g.edge(e);
    if (off < Rat(0) || off > edge.length)
        throw std::invalid_argument("GraphPoint: offset outside edge");
    if (off == Rat(0)) return at_vertex(edge.tail);
    if (off == edge.length) return at_vertex(edge.head);
    GraphPoint p;
    p.edge = e;
    p.offset = off;
    return p;
}

std::string point_to_string(const MetricGraph& g, const GraphPoint& p) {
    if (p.is_vertex()) return g.vertex_name(p.vertex);
    return "e" + std::to_string(p.edge) + "@" + rat_to_string(p.offset);
}

std::vector<TangentDirection> tangent_directions(const MetricGraph& g, const GraphPoint& p) {
    std::vector<TangentDirection> out;
    if (p.is_vertex()) {
        for (auto [e, at_head] : g.incidences(p.vertex))
            out.push_back({p, e, !at_head});
    } else {
        out.push_back({p, p.edge, false});
        out.push_back({p, p.edge, true});
    }
    return out;
}

std::string direction_to_string(const MetricGraph& g, const TangentDirection& t) {
    return point_to_string(g, t.base) + "->" +
           g.vertex_name(t.toward_head ? g.edge(t.edge).head : g.edge(t.edge).tail) + "(e" +
           std::to_string(t.edge) + ")";
}

Divisor Divisor::single(const GraphPoint& p, long long c) {
    Divisor d;
    d.add(p, c);
    return d;
}

void Divisor::add(const GraphPoint& p, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long long Divisor::at(const GraphPoint& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
}

long long Divisor::degree() const {
    long long deg = 0;
    for (const auto& [p, c] : coeffs_) deg += c;
    return deg;
}

bool Divisor::is_effective() const {
    for (const auto& [p, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add(p, c);
    return out;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add(p, -c);
    return out;
}

bool is_effective(const Divisor& d) { return d.is_effective(); }
long long degree(const Divisor& d) { return d.degree(); }

}  // namespace troplin
