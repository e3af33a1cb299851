#include "troplin/serialization.hpp"

#include <stdexcept>

namespace troplin {

namespace {

std::string position_key(const Position& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s;
}

}  // namespace

Json dot_array_to_json(const DotArray& p) {
    Json j;
    j["bounds"] = p.box.bounds;
    j["dots"] = Json::array();
    for (const auto& x : p.dots) j["dots"].push_back(x);
    return j;
}

DotArray dot_array_from_json(const Json& j) {
    if (!j.contains("bounds") || !j.contains("dots"))
        throw std::invalid_argument("dot array json needs 'bounds' and 'dots'");
    Box box(j.at("bounds").get<std::vector<int>>());
    std::vector<Position> dots;
    for (const auto& d : j.at("dots")) dots.push_back(d.get<Position>());
    return DotArray(std::move(box), std::move(dots));
}

Json rank_array_to_json(const RankArray& r) {
    Json j;
    j["bounds"] = r.box.bounds;
    Json vals = Json::object();
    const auto positions = r.box.positions();
    for (std::size_t i = 0; i < positions.size(); ++i)
        vals[position_key(positions[i])] = r.values[i];
    j["values"] = std::move(vals);
    return j;
}

RankArray rank_array_from_json(const Json& j) {
    Box box(j.at("bounds").get<std::vector<int>>());
    std::vector<int> values(static_cast<std::size_t>(box.position_count()), -1);
    for (const auto& [key, val] : j.at("values").items()) {
        Position x;
        std::size_t start = 0;
        while (start <= key.size()) {
            const auto comma = key.find(',', start);
            const std::string tok =
                key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            x.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        values[static_cast<std::size_t>(box.index_of(x))] = val.get<int>();
    }
    return RankArray(std::move(box), std::move(values));
}

Json graph_to_json(const MetricGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_name(v));
    j["edges"] = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        j["edges"].push_back({{"from", g.vertex_name(ed.tail)},
                              {"to", g.vertex_name(ed.head)},
                              {"length", rat_to_string(ed.length)}});
    }
    return j;
}

std::shared_ptr<const MetricGraph> graph_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
    auto index = [&](const std::string& n) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw std::invalid_argument("graph json: unknown vertex '" + n + "'");
    };
    std::vector<MetricGraph::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({index(e.at("from").get<std::string>()),
                         index(e.at("to").get<std::string>()),
                         rat_from_string(e.at("length").get<std::string>())});
    return std::make_shared<const MetricGraph>(std::move(names), std::move(edges));
}

Json point_to_json(const MetricGraph& g, const GraphPoint& p) {
    if (p.is_vertex()) return Json(g.vertex_name(p.vertex));
    return Json{{"edge", p.edge}, {"offset", rat_to_string(p.offset)}};
}

GraphPoint point_from_json(const MetricGraph& g, const Json& j) {
    if (j.is_string()) return GraphPoint::at_vertex(g.vertex_index(j.get<std::string>()));
    return GraphPoint::on_edge(g, j.at("edge").get<int>(),
                               rat_from_string(j.at("offset").get<std::string>()));
}

Json divisor_to_json(const MetricGraph& g, const Divisor& d) {
    Json j = Json::array();
    for (const auto& [p, c] : d.coefficients())
        j.push_back({{"point", point_to_json(g, p)}, {"coeff", c}});
    return j;
}

Divisor divisor_from_json(const MetricGraph& g, const Json& j) {
    Divisor d;
    for (const auto& entry : j)
        d.add(point_from_json(g, entry.at("point")), entry.at("coeff").get<long long>());
    return d;
}

Json pl_function_to_json(const PLFunction& f) {
    Json j;
    j["anchor_vertex"] = f.graph().vertex_name(f.anchor_vertex());
    j["anchor_value"] = rat_to_string(f.anchor_value());
    j["edges"] = Json::array();
    for (int e = 0; e < f.graph().edge_count(); ++e) {
        const auto& prof = f.edge_profile(e);
        Json cuts = Json::array();
        for (const auto& c : prof.cuts) cuts.push_back(rat_to_string(c));
        j["edges"].push_back({{"cuts", std::move(cuts)}, {"slopes", prof.slopes}});
    }
    return j;
}

PLFunction pl_function_from_json(std::shared_ptr<const MetricGraph> g, const Json& j) {
    const int anchor = g->vertex_index(j.at("anchor_vertex").get<std::string>());
    const Rat value = rat_from_string(j.at("anchor_value").get<std::string>());
    std::vector<EdgeProfile> profiles;
    for (const auto& e : j.at("edges")) {
        EdgeProfile prof;
        for (const auto& c : e.at("cuts")) prof.cuts.push_back(rat_from_string(c.get<std::string>()));
        prof.slopes = e.at("slopes").get<std::vector<int>>();
        profiles.push_back(std::move(prof));
    }
    return PLFunction(std::move(g), anchor, value, std::move(profiles));
}

Json report_to_json(const PropertyReport& r) {
    Json j;
    j["property"] = r.property;
    j["verdict"] = r.verdict;
    if (r.witness) {
        Json w;
        w["elements"] = Json::array();
        for (const auto& x : r.witness->elements) w["elements"].push_back(x);
        if (!r.witness->params.empty()) w["params"] = r.witness->params;
        w["note"] = r.witness->note;
        j["witness"] = std::move(w);
    }
    return j;
}

Json module_to_json(const TropicalModule& m) {
    Json j;
    j["graph"] = graph_to_json(*m.graph);
    j["divisor"] = divisor_to_json(*m.graph, m.divisor);
    j["generators"] = Json::array();
    for (const auto& f : m.generators) j["generators"].push_back(pl_function_to_json(f));
    return j;
}

TropicalModule module_from_json(const Json& j) {
    auto g = graph_from_json(j.at("graph"));
    Divisor d = divisor_from_json(*g, j.at("divisor"));
    std::vector<PLFunction> gens;
    for (const auto& f : j.at("generators")) gens.push_back(pl_function_from_json(g, f));
    return TropicalModule(g, std::move(d), std::move(gens));
}

Json slope_structure_to_json(const SlopeStructure& s) {
    const MetricGraph& g = *s.graph;
    Json j;
    j["rank"] = s.rank;
    j["V"] = Json::array();
    for (const auto& pd : s.points) j["V"].push_back(point_to_json(g, pd.at));
    j["directions"] = Json::array();
    for (const auto& pd : s.points) {
        for (std::size_t i = 0; i < pd.directions.size(); ++i) {
            j["directions"].push_back({{"at", point_to_json(g, pd.at)},
                                       {"edge", pd.directions[i].edge},
                                       {"toward_head", pd.directions[i].toward_head},
                                       {"slopes", pd.slope_lists[i]}});
        }
    }
    Json arrays = Json::object();
    for (const auto& pd : s.points)
        arrays[point_to_string(g, pd.at)] = dot_array_to_json(pd.array.array);
    j["arrays"] = std::move(arrays);
    j["segments"] = Json::array();
    for (const auto& seg : s.segments)
        j["segments"].push_back({{"edge", seg.edge},
                                 {"from", rat_to_string(seg.from)},
                                 {"to", rat_to_string(seg.to)},
                                 {"slopes_toward_head", seg.slopes_toward_head}});
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace troplin
