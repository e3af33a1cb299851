#include "troplin/fixtures.hpp"

namespace troplin {
namespace fixtures {

DotArray fig2_array() {
    return DotArray(Box::cube(2, 3), {{1, 0, 0}, {2, 1, 1}, {0, 1, 2}});
}

DotArray fig3_array() {
    return DotArray(Box::cube(2, 3), {{1, 0, 0}, {2, 1, 1}, {0, 2, 1}, {0, 1, 2}});
}

DotArray fig4_array() {
    return DotArray(Box::cube(2, 3),
                    {{1, 0, 0}, {2, 1, 1}, {0, 2, 1}, {0, 1, 2}, {0, 0, 0}, {0, 1, 1}});
}

DotArray fig5_dim1_array() { return DotArray(Box::cube(1, 1), {{0}, {1}}); }

DotArray fig5_left_array() { return DotArray(Box::cube(1, 2), {{0, 0}, {0, 1}, {1, 0}}); }

DotArray fig5_right_array() { return DotArray(Box::cube(1, 2), {{0, 0}, {1, 1}}); }

DotArray fig6_left_array() {
    return DotArray(Box::cube(2, 2), {{0, 0}, {1, 1}, {1, 2}, {2, 1}});
}

DotArray fig6_middle_array() {
    return DotArray(Box::cube(2, 2), {{2, 0}, {2, 1}, {1, 1}, {0, 1}});
}

DotArray fig6_right_array() {
    return DotArray(Box::cube(2, 2), {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
}

TropicalModule interval_fixture() {
    auto g = MetricGraph::interval(Rat(2));
    // f1 bends at 1/2 (slopes 2 then 1), f2 at 3/2 (1 then 0), f3 at the
    // midpoint x (2 then 0); pairwise independent, jointly dependent.
    PLFunction f1(g, 0, Rat(0), {EdgeProfile{{Rat(1, 2)}, {2, 1}}});
    PLFunction f2(g, 0, Rat(0), {EdgeProfile{{Rat(3, 2)}, {1, 0}}});
    PLFunction f3(g, 0, Rat(0), {EdgeProfile{{Rat(1)}, {2, 0}}});
    Divisor d = Divisor::single(GraphPoint::at_vertex(0), 2);
    return TropicalModule(g, d, {f1, f2, f3});
}

GraphPoint interval_fixture_x() {
    auto g = MetricGraph::interval(Rat(2));
    return GraphPoint::on_edge(*g, 0, Rat(1));
}

TropicalModule loop_fixture() {
    auto g = MetricGraph::loop(Rat(1));
    PLFunction c = PLFunction::constant(g, Rat(0));
    PLFunction slope1 = PLFunction::linear(g, {1, 1}, 0, Rat(0));
    Divisor d = Divisor::single(GraphPoint::at_vertex(0), 3);
    return TropicalModule(g, d, {c, slope1});
}

}  // namespace fixtures
}  // namespace troplin
