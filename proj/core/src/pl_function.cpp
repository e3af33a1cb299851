#include "troplin/pl_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace troplin {

namespace {

Rat edge_delta(const EdgeProfile& prof, const Rat& length) {
    Rat acc(0);
    Rat prev(0);
    for (std::size_t i = 0; i < prof.cuts.size(); ++i) {
        acc += Rat(prof.slopes[i]) * (prof.cuts[i] - prev);
        prev = prof.cuts[i];
    }
    acc += Rat(prof.slopes.back()) * (length - prev);
    return acc;
}

EdgeProfile normalized(EdgeProfile prof) {
    EdgeProfile out;
    out.slopes.push_back(prof.slopes[0]);
    for (std::size_t i = 0; i < prof.cuts.size(); ++i) {
        const int next = prof.slopes[i + 1];
        if (next == out.slopes.back()) continue;
        out.cuts.push_back(prof.cuts[i]);
        out.slopes.push_back(next);
    }
    return out;
}

}  // namespace

PLFunction::PLFunction(std::shared_ptr<const MetricGraph> graph, int anchor_vertex,
                       Rat anchor_value, std::vector<EdgeProfile> profiles)
    : graph_(std::move(graph)),
      anchor_vertex_(anchor_vertex),
      anchor_value_(std::move(anchor_value)),
      profiles_(std::move(profiles)) {
    if (static_cast<int>(profiles_.size()) != graph_->edge_count())
        throw std::invalid_argument("PLFunction: one profile per edge required");
    for (int e = 0; e < graph_->edge_count(); ++e) {
        auto& prof = profiles_[static_cast<std::size_t>(e)];
        if (prof.slopes.size() != prof.cuts.size() + 1)
            throw std::invalid_argument("PLFunction: slopes must be cuts+1");
        const Rat len = graph_->edge(e).length;
        Rat prev(0);
        for (const Rat& c : prof.cuts) {
            if (!(c > prev) || !(c < len))
                throw std::invalid_argument("PLFunction: cuts must be strictly inside the edge");
            prev = c;
        }
        prof = normalized(std::move(prof));
    }
    if (anchor_vertex_ < 0 || anchor_vertex_ >= graph_->vertex_count())
        throw std::invalid_argument("PLFunction: bad anchor vertex");

    // Propagate values from the anchor; disagreement on revisit means the
    // per-edge data is not cycle-consistent.
    const Rat unset(0);
    std::vector<bool> have(static_cast<std::size_t>(graph_->vertex_count()), false);
    vertex_values_.assign(static_cast<std::size_t>(graph_->vertex_count()), unset);
    vertex_values_[static_cast<std::size_t>(anchor_vertex_)] = anchor_value_;
    have[static_cast<std::size_t>(anchor_vertex_)] = true;
    std::vector<int> stack = {anchor_vertex_};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (auto [e, at_head] : graph_->incidences(v)) {
            const auto& edge = graph_->edge(e);
            const Rat delta = edge_delta(profiles_[static_cast<std::size_t>(e)], edge.length);
            const int w = at_head ? edge.tail : edge.head;
            const Rat wval = at_head ? vertex_values_[static_cast<std::size_t>(v)] - delta
                                     : vertex_values_[static_cast<std::size_t>(v)] + delta;
            if (!have[static_cast<std::size_t>(w)]) {
                have[static_cast<std::size_t>(w)] = true;
                vertex_values_[static_cast<std::size_t>(w)] = wval;
                stack.push_back(w);
            } else if (vertex_values_[static_cast<std::size_t>(w)] != wval) {
                throw std::invalid_argument("PLFunction: edge data is not cycle-consistent");
            }
        }
    }
}

PLFunction PLFunction::constant(std::shared_ptr<const MetricGraph> graph, const Rat& value) {
    std::vector<EdgeProfile> profs(static_cast<std::size_t>(graph->edge_count()),
                                   EdgeProfile{{}, {0}});
    return PLFunction(std::move(graph), 0, value, std::move(profs));
}

PLFunction PLFunction::linear(std::shared_ptr<const MetricGraph> graph,
                              std::vector<int> slope_per_edge, int anchor_vertex,
                              const Rat& anchor_value) {
    if (static_cast<int>(slope_per_edge.size()) != graph->edge_count())
        throw std::invalid_argument("PLFunction::linear: one slope per edge");
    std::vector<EdgeProfile> profs;
    profs.reserve(slope_per_edge.size());
    for (int s : slope_per_edge) profs.push_back(EdgeProfile{{}, {s}});
    return PLFunction(std::move(graph), anchor_vertex, anchor_value, std::move(profs));
}

Rat PLFunction::value_at(const GraphPoint& p) const {
    if (p.is_vertex()) return vertex_value(p.vertex);
    const auto& prof = profiles_[static_cast<std::size_t>(p.edge)];
    Rat acc = vertex_values_[static_cast<std::size_t>(graph_->edge(p.edge).tail)];
    Rat prev(0);
    for (std::size_t i = 0; i < prof.cuts.size() && prof.cuts[i] < p.offset; ++i) {
        acc += Rat(prof.slopes[i]) * (prof.cuts[i] - prev);
        prev = prof.cuts[i];
    }
    const std::size_t cell = static_cast<std::size_t>(
        std::lower_bound(prof.cuts.begin(), prof.cuts.end(), p.offset) - prof.cuts.begin());
    acc += Rat(prof.slopes[cell]) * (p.offset - prev);
    return acc;
}

int PLFunction::slope_along(const TangentDirection& t) const {
    const auto& prof = profiles_[static_cast<std::size_t>(t.edge)];
    const auto& edge = graph_->edge(t.edge);
    if (t.base.is_vertex()) {
        if (t.toward_head && t.base.vertex == edge.tail) return prof.slopes.front();
        if (!t.toward_head && t.base.vertex == edge.head) return -prof.slopes.back();
        throw std::invalid_argument("slope_along: direction does not start at its base");
    }
    if (t.base.edge != t.edge) throw std::invalid_argument("slope_along: direction off its edge");
    if (t.toward_head) {
        const std::size_t cell = static_cast<std::size_t>(
            std::upper_bound(prof.cuts.begin(), prof.cuts.end(), t.base.offset) -
            prof.cuts.begin());
        return prof.slopes[cell];
    }
    const std::size_t cell = static_cast<std::size_t>(
        std::lower_bound(prof.cuts.begin(), prof.cuts.end(), t.base.offset) - prof.cuts.begin());
    return -prof.slopes[cell];
}

long long PLFunction::ord_at(const GraphPoint& p) const {
    long long total = 0;
    for (const auto& t : tangent_directions(*graph_, p)) total += slope_along(t);
    return -total;
}

Divisor PLFunction::divisor() const {
    Divisor div;
    for (int v = 0; v < graph_->vertex_count(); ++v) {
        const GraphPoint p = GraphPoint::at_vertex(v);
        div.add(p, ord_at(p));
    }
    for (int e = 0; e < graph_->edge_count(); ++e) {
        const auto& prof = profiles_[static_cast<std::size_t>(e)];
        for (std::size_t i = 0; i < prof.cuts.size(); ++i) {
            const GraphPoint p = GraphPoint::on_edge(*graph_, e, prof.cuts[i]);
            div.add(p, prof.slopes[i] - prof.slopes[i + 1]);
        }
    }
    return div;
}

std::vector<GraphPoint> PLFunction::bend_points() const {
    std::vector<GraphPoint> out;
    for (int e = 0; e < graph_->edge_count(); ++e)
        for (const Rat& c : profiles_[static_cast<std::size_t>(e)].cuts)
            out.push_back(GraphPoint::on_edge(*graph_, e, c));
    return out;
}

PLFunction PLFunction::shifted(const Rat& c) const {
    PLFunction out = *this;
    out.anchor_value_ += c;
    for (auto& v : out.vertex_values_) v += c;
    return out;
}

bool PLFunction::same_function(const PLFunction& other) const {
    if (graph_ != other.graph_) return false;
    for (int v = 0; v < graph_->vertex_count(); ++v)
        if (vertex_value(v) != other.vertex_value(v)) return false;
    for (int e = 0; e < graph_->edge_count(); ++e) {
        const auto& a = profiles_[static_cast<std::size_t>(e)];
        const auto& b = other.profiles_[static_cast<std::size_t>(e)];
        if (a.cuts != b.cuts || a.slopes != b.slopes) return false;
    }
    return true;
}

EdgeCells refine_edge(std::span<const PLFunction> fns, std::span<const Rat> shifts, int edge) {
    const MetricGraph& g = fns[0].graph();
    const Rat len = g.edge(edge).length;
    std::set<Rat> cutset = {Rat(0), len};
    for (const auto& f : fns)
        for (const Rat& c : f.edge_profile(edge).cuts) cutset.insert(c);

    auto value = [&](std::size_t k, const Rat& off) {
        return fns[k].value_at(GraphPoint::on_edge(g, edge, off)) + shifts[k];
    };

    // Crossings of branch pairs inside base cells.
    std::vector<Rat> base(cutset.begin(), cutset.end());
    for (std::size_t c = 0; c + 1 < base.size(); ++c) {
        const Rat a = base[c], b = base[c + 1];
        for (std::size_t i = 0; i < fns.size(); ++i) {
            for (std::size_t j = i + 1; j < fns.size(); ++j) {
                const Rat da = value(i, a) - value(j, a);
                const Rat db = value(i, b) - value(j, b);
                if ((da > Rat(0) && db < Rat(0)) || (da < Rat(0) && db > Rat(0))) {
                    // linear on [a,b]: crossing where the difference vanishes
                    const Rat x = a + (b - a) * da / (da - db);
                    cutset.insert(x);
                }
            }
        }
    }

    EdgeCells out;
    out.breaks.assign(cutset.begin(), cutset.end());
    out.branch_values.resize(out.breaks.size());
    for (std::size_t c = 0; c < out.breaks.size(); ++c)
        for (std::size_t k = 0; k < fns.size(); ++k)
            out.branch_values[c].push_back(value(k, out.breaks[c]));
    out.argmin.resize(out.breaks.size() - 1);
    for (std::size_t c = 0; c + 1 < out.breaks.size(); ++c) {
        const Rat mid = (out.breaks[c] + out.breaks[c + 1]) / 2;
        Rat best;
        bool first = true;
        std::vector<Rat> vals;
        for (std::size_t k = 0; k < fns.size(); ++k) {
            vals.push_back(value(k, mid));
            if (first || vals.back() < best) {
                best = vals.back();
                first = false;
            }
        }
        for (std::size_t k = 0; k < fns.size(); ++k)
            if (vals[k] == best) out.argmin[c].push_back(static_cast<int>(k));
    }
    return out;
}

PLFunction tropical_min(std::span<const PLFunction> fns, std::span<const Rat> shifts) {
    if (fns.empty()) throw std::invalid_argument("tropical_min: empty input");
    if (fns.size() != shifts.size())
        throw std::invalid_argument("tropical_min: one shift per function");
    const auto& graph = fns[0].graph_ptr();
    for (const auto& f : fns)
        if (f.graph_ptr() != graph)
            throw std::invalid_argument("tropical_min: functions on different graphs");

    std::vector<EdgeProfile> profs;
    for (int e = 0; e < graph->edge_count(); ++e) {
        EdgeCells cells = refine_edge(fns, shifts, e);
        EdgeProfile prof;
        for (std::size_t c = 0; c + 1 < cells.breaks.size(); ++c) {
            const int k = cells.argmin[c][0];
            const Rat mid = (cells.breaks[c] + cells.breaks[c + 1]) / 2;
            TangentDirection t{GraphPoint::on_edge(*graph, e, mid), e, true};
            const int slope = fns[static_cast<std::size_t>(k)].slope_along(t);
            if (c > 0) prof.cuts.push_back(cells.breaks[c]);
            prof.slopes.push_back(slope);
        }
        profs.push_back(std::move(prof));
    }
    Rat anchor_value;
    bool first = true;
    for (std::size_t k = 0; k < fns.size(); ++k) {
        const Rat v = fns[k].vertex_value(0) + shifts[k];
        if (first || v < anchor_value) {
            anchor_value = v;
            first = false;
        }
    }
    return PLFunction(graph, 0, anchor_value, std::move(profs));
}

PLFunction tropical_min(const std::vector<PLFunction>& fns, const std::vector<Rat>& shifts) {
    return tropical_min(std::span<const PLFunction>(fns), std::span<const Rat>(shifts));
}

bool in_R_of_D(const PLFunction& f, const Divisor& d) {
    return (d + f.divisor()).is_effective();
}

}  // namespace troplin
