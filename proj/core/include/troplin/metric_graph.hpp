#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "troplin/rational.hpp"

namespace troplin {

// Connected multigraph with positive rational edge lengths. Self-loops are
// not supported; a loop in the topological sense is modeled as two parallel
// edges (the way the fixtures use it).
class MetricGraph {
public:
    struct Edge {
        int tail;
        int head;
        Rat length;
    };

    MetricGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

    static std::shared_ptr<const MetricGraph> interval(const Rat& length);
    static std::shared_ptr<const MetricGraph> loop(const Rat& edge_length);
    static std::shared_ptr<const MetricGraph> star(int d, const Rat& edge_length);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::string& vertex_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    int vertex_index(const std::string& name) const;
    int valence(int v) const;

    // Incident (edge, end) pairs; end true means v is the head.
    const std::vector<std::pair<int, bool>>& incidences(int v) const {
        return incidence_.at(static_cast<std::size_t>(v));
    }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, bool>>> incidence_;
};

// A vertex, or an interior point of an edge at a strictly positive offset
// from the tail. Offsets 0 and length canonicalize to vertex points.
struct GraphPoint {
    int vertex = -1;
    int edge = -1;
    Rat offset{0};

    bool is_vertex() const { return vertex >= 0; }

    static GraphPoint at_vertex(int v) {
        GraphPoint p;
        p.vertex = v;
        return p;
    }
    static GraphPoint on_edge(const MetricGraph& g, int e, const Rat& off);

    friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
        return a.vertex == b.vertex && a.edge == b.edge && a.offset == b.offset;
    }
    friend bool operator<(const GraphPoint& a, const GraphPoint& b) {
        if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
        if (a.is_vertex()) return a.vertex < b.vertex;
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.offset < b.offset;
    }
};

std::string point_to_string(const MetricGraph& g, const GraphPoint& p);

// Outgoing tangent direction at a point: travel along `edge` toward its
// head (true) or its tail (false).
struct TangentDirection {
    GraphPoint base;
    int edge;
    bool toward_head;
};

// Directions at a point, in a fixed order: vertices list incident edge
// ends by edge index, interior points list toward-tail then toward-head.
std::vector<TangentDirection> tangent_directions(const MetricGraph& g, const GraphPoint& p);

std::string direction_to_string(const MetricGraph& g, const TangentDirection& t);

// Finitely supported integer divisor.
class Divisor {
public:
    Divisor() = default;
    static Divisor single(const GraphPoint& p, long long c);

    void add(const GraphPoint& p, long long c);
    long long at(const GraphPoint& p) const;
    long long degree() const;
    bool is_effective() const;
    bool empty() const { return coeffs_.empty(); }

    const std::map<GraphPoint, long long>& coefficients() const { return coeffs_; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    std::map<GraphPoint, long long> coeffs_;
};

bool is_effective(const Divisor& d);
long long degree(const Divisor& d);

}  // namespace troplin
