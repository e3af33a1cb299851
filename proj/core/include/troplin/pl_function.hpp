#pragma once

#include <memory>
#include <span>
#include <vector>

#include "troplin/metric_graph.hpp"

namespace troplin {

// Piecewise data of one function on one edge, oriented tail -> head:
// interior cut offsets (strictly increasing) and one integer slope per cell.
struct EdgeProfile {
    std::vector<Rat> cuts;
    std::vector<int> slopes;  // slopes.size() == cuts.size() + 1
};

// Continuous piecewise linear function with integer slopes. Values are
// anchored at one vertex and propagated; cycle consistency is validated at
// construction and adjacent equal-slope cells are merged, so stored cuts
// are genuine bends.
class PLFunction {
public:
    PLFunction(std::shared_ptr<const MetricGraph> graph, int anchor_vertex, Rat anchor_value,
               std::vector<EdgeProfile> profiles);

    static PLFunction constant(std::shared_ptr<const MetricGraph> graph, const Rat& value);
    // Constant slope per edge in tail->head orientation.
    static PLFunction linear(std::shared_ptr<const MetricGraph> graph,
                             std::vector<int> slope_per_edge, int anchor_vertex,
                             const Rat& anchor_value);

    const MetricGraph& graph() const { return *graph_; }
    const std::shared_ptr<const MetricGraph>& graph_ptr() const { return graph_; }

    Rat value_at(const GraphPoint& p) const;
    Rat vertex_value(int v) const { return vertex_values_.at(static_cast<std::size_t>(v)); }
    int slope_along(const TangentDirection& t) const;
    long long ord_at(const GraphPoint& p) const;
    Divisor divisor() const;
    std::vector<GraphPoint> bend_points() const;  // interior bends only
    const EdgeProfile& edge_profile(int e) const {
        return profiles_.at(static_cast<std::size_t>(e));
    }

    PLFunction shifted(const Rat& c) const;
    bool same_function(const PLFunction& other) const;

    int anchor_vertex() const { return anchor_vertex_; }
    Rat anchor_value() const { return anchor_value_; }

private:
    std::shared_ptr<const MetricGraph> graph_;
    int anchor_vertex_;
    Rat anchor_value_;
    std::vector<EdgeProfile> profiles_;
    std::vector<Rat> vertex_values_;
};

// Exact pointwise minimum min{f_i + shift_i} as a PLFunction.
PLFunction tropical_min(std::span<const PLFunction> fns, std::span<const Rat> shifts);
PLFunction tropical_min(const std::vector<PLFunction>& fns, const std::vector<Rat>& shifts);

// Membership in R(D): D + div(f) >= 0.
bool in_R_of_D(const PLFunction& f, const Divisor& d);

// Shared subdivision of one edge on which every shifted branch is linear
// and no two branches cross in the interior of a cell.
struct EdgeCells {
    std::vector<Rat> breaks;                       // 0 = breaks[0] < ... = length
    std::vector<std::vector<Rat>> branch_values;   // per break, per branch
    std::vector<std::vector<int>> argmin;          // per cell, attaining branches at midpoint
};
EdgeCells refine_edge(std::span<const PLFunction> fns, std::span<const Rat> shifts, int edge);

}  // namespace troplin
