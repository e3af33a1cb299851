#include "troplin/ascii_grid.hpp"

#include <algorithm>
#include <functional>

namespace troplin {

namespace {

// Lists every assignment of the coordinates above axis 2, in lex order.
std::vector<Position> layer_tuples(const Box& box) {
    std::vector<Position> out;
    const int extra = box.dim() - 2;
    if (extra <= 0) {
        out.push_back({});
        return out;
    }
    Position t(static_cast<std::size_t>(extra), 0);
    while (true) {
        out.push_back(t);
        int i = extra - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == box.bounds[static_cast<std::size_t>(i + 2)])
            t[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
    }
    return out;
}

std::string render(const Box& box, const std::function<std::string(const Position&)>& cell) {
    const int d = box.dim();
    std::string out;
    std::size_t width = 1;
    for (const auto& x : box.positions()) width = std::max(width, cell(x).size());

    auto pad = [&](std::string s) {
        while (s.size() < width) s = " " + s;
        return s;
    };

    if (d == 1) {
        for (int v = box.bounds[0]; v >= 0; --v) out += pad(cell({v})) + "\n";
        return out;
    }
    for (const auto& layer : layer_tuples(box)) {
        if (d > 2) {
            out += "[";
            for (std::size_t i = 0; i < layer.size(); ++i) {
                if (i) out += ",";
                out += "x" + std::to_string(i + 3) + "=" + std::to_string(layer[i]);
            }
            out += "]\n";
        }
        for (int row = box.bounds[0]; row >= 0; --row) {
            for (int col = 0; col <= box.bounds[1]; ++col) {
                Position x = {row, col};
                x.insert(x.end(), layer.begin(), layer.end());
                if (col) out += " ";
                out += pad(cell(x));
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace

std::string render_dot_grid(const DotArray& p) {
    return render(p.box, [&](const Position& x) { return p.contains(x) ? "*" : "."; });
}

std::string render_rank_grid(const RankArray& r) {
    return render(r.box, [&](const Position& x) { return std::to_string(r.at(x)); });
}

}  // namespace troplin
