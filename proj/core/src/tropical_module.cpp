#include "troplin/tropical_module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace troplin {

TropicalModule::TropicalModule(std::shared_ptr<const MetricGraph> g, Divisor d,
                               std::vector<PLFunction> gens)
    : graph(std::move(g)), divisor(std::move(d)), generators(std::move(gens)) {
    if (generators.empty()) throw std::invalid_argument("TropicalModule: no generators");
    for (const auto& f : generators) {
        if (f.graph_ptr() != graph)
            throw std::invalid_argument("TropicalModule: generator on a different graph");
        if (!in_R_of_D(f, divisor))
            throw std::invalid_argument("TropicalModule: generator not in R(D)");
    }
}

std::vector<int> slopes_at(const TropicalModule& m, const TangentDirection& t) {
    std::set<int> s;
    for (const auto& f : m.generators) s.insert(f.slope_along(t));
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> direction_slope_lists(const TropicalModule& m, const GraphPoint& p) {
    std::vector<std::vector<int>> lists;
    for (const auto& t : tangent_directions(*m.graph, p)) lists.push_back(slopes_at(m, t));
    return lists;
}

namespace {

Position index_tuple(const std::vector<std::vector<int>>& lists, const std::vector<int>& slopes) {
    Position x(slopes.size());
    for (std::size_t i = 0; i < slopes.size(); ++i) {
        const auto& list = lists[i];
        auto it = std::lower_bound(list.begin(), list.end(), slopes[i]);
        if (it == list.end() || *it != slopes[i])
            throw std::invalid_argument("slope not realized by the module");
        x[i] = static_cast<int>(it - list.begin());
    }
    return x;
}

std::vector<int> slopes_of(const PLFunction& f, const std::vector<TangentDirection>& dirs) {
    std::vector<int> s;
    s.reserve(dirs.size());
    for (const auto& t : dirs) s.push_back(f.slope_along(t));
    return s;
}

}  // namespace

DotArray local_array_at(const TropicalModule& m, const GraphPoint& p) {
    const auto dirs = tangent_directions(*m.graph, p);
    const auto lists = direction_slope_lists(m, p);
    std::vector<int> bounds;
    for (const auto& list : lists) bounds.push_back(static_cast<int>(list.size()) - 1);
    std::vector<Position> tuples;
    for (const auto& f : m.generators) tuples.push_back(index_tuple(lists, slopes_of(f, dirs)));
    // Tropical combinations realize exactly the meets of generator tuples.
    return redundant_closure(DotArray(Box(std::move(bounds)), std::move(tuples)));
}

Position local_index_tuple(const TropicalModule& m, const PLFunction& f, const GraphPoint& p) {
    const auto dirs = tangent_directions(*m.graph, p);
    return index_tuple(direction_slope_lists(m, p), slopes_of(f, dirs));
}

int local_rank(const TropicalModule& m, const PLFunction& f, const GraphPoint& p) {
    const DotArray local = local_array_at(m, p);
    const RankArray ranks = rank_array(permutation_core(local));
    return ranks.at(local_index_tuple(m, f, p));
}

DependenceCheck verify_dependence(const std::vector<PLFunction>& fns,
                                  const std::vector<Rat>& shifts) {
    if (fns.size() < 2) throw std::invalid_argument("verify_dependence: need >= 2 functions");
    if (fns.size() != shifts.size())
        throw std::invalid_argument("verify_dependence: one shift per function");
    const auto& g = fns[0].graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        EdgeCells cells = refine_edge(fns, shifts, e);
        for (std::size_t c = 0; c < cells.argmin.size(); ++c) {
            if (cells.argmin[c].size() < 2) {
                const Rat mid = (cells.breaks[c] + cells.breaks[c + 1]) / 2;
                return {false, GraphPoint::on_edge(g, e, mid)};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

std::optional<DependenceCertificate> certify(const std::vector<PLFunction>& fns,
                                             std::vector<Rat> shifts) {
    if (!verify_dependence(fns, shifts).dependent) return std::nullopt;
    DependenceCertificate cert;
    cert.shifts = std::move(shifts);
    const auto& g = fns[0].graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        EdgeCells cells = refine_edge(fns, cert.shifts, e);
        for (std::size_t c = 0; c < cells.argmin.size(); ++c)
            cert.attainment.push_back(
                {e, cells.breaks[c], cells.breaks[c + 1], cells.argmin[c]});
    }
    return cert;
}

// A vertex incident to every edge (star center; also the interval and the
// two-edge loop qualify).
std::optional<int> central_vertex(const MetricGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(g.incidences(v).size()) == g.edge_count()) return v;
    return std::nullopt;
}

bool all_linear(const std::vector<PLFunction>& fns) {
    for (const auto& f : fns)
        for (int e = 0; e < f.graph().edge_count(); ++e)
            if (!f.edge_profile(e).cuts.empty()) return false;
    return true;
}

// Extremes of a PL function lie at vertices or bends, so this bound pushes
// a branch strictly above every other one.
Rat parking_shift(const std::vector<PLFunction>& fns) {
    Rat lo(0), hi(0);
    bool first = true;
    auto feed = [&](const Rat& val) {
        if (first || val < lo) lo = val;
        if (first || val > hi) hi = val;
        first = false;
    };
    for (const auto& f : fns) {
        for (int v = 0; v < f.graph().vertex_count(); ++v) feed(f.vertex_value(v));
        for (const auto& b : f.bend_points()) feed(f.value_at(b));
    }
    return hi - lo + Rat(1);
}

}  // namespace

std::optional<DependenceCertificate> find_dependence(const std::vector<PLFunction>& fns) {
    if (fns.size() < 2) throw std::invalid_argument("find_dependence: need >= 2 functions");
    const auto& g = fns[0].graph();

    const auto center = central_vertex(g);
    if (center && all_linear(fns)) {
        // Constant-slope star case: dependence is equivalent to a subset of
        // branches whose per-edge minimal slope is attained twice (the
        // branches tying at the center, narrowing to slope minimizers along
        // each edge). Conclusive in both directions.
        std::vector<std::vector<int>> tuples;
        for (const auto& f : fns) {
            std::vector<int> t;
            for (int e = 0; e < g.edge_count(); ++e) {
                const bool at_tail = g.edge(e).tail == *center;
                TangentDirection dir{GraphPoint::at_vertex(*center), e, at_tail};
                t.push_back(f.slope_along(dir));
            }
            tuples.push_back(std::move(t));
        }
        const std::size_t n = fns.size();
        std::optional<unsigned long long> chosen;
        if (n <= 24) {
            for (unsigned long long mask = (1ull << n) - 1; mask > 0 && !chosen; --mask) {
                if (__builtin_popcountll(mask) < 2) continue;
                bool ok = true;
                for (int e = 0; e < g.edge_count() && ok; ++e) {
                    int mn = 0, hits = 0;
                    bool first = true;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!(mask & (1ull << k))) continue;
                        const int s = tuples[k][static_cast<std::size_t>(e)];
                        if (first || s < mn) {
                            mn = s;
                            hits = 1;
                            first = false;
                        } else if (s == mn) {
                            ++hits;
                        }
                    }
                    ok = hits >= 2;
                }
                if (ok) chosen = mask;
            }
        }
        if (!chosen) return std::nullopt;
        const Rat park = parking_shift(fns) * 2;
        std::vector<Rat> shifts(fns.size(), park);
        for (std::size_t k = 0; k < n; ++k)
            if (*chosen & (1ull << k)) shifts[k] = -fns[k].vertex_value(*center);
        return certify(fns, std::move(shifts));
    }

    // General lattice search: shift candidates are value differences at
    // vertices and bends, plus one parking level.
    std::vector<GraphPoint> probes;
    for (int v = 0; v < g.vertex_count(); ++v) probes.push_back(GraphPoint::at_vertex(v));
    for (const auto& f : fns)
        for (const auto& b : f.bend_points()) probes.push_back(b);
    std::set<Rat> cand_set = {Rat(0)};
    for (std::size_t i = 0; i < fns.size(); ++i)
        for (std::size_t j = 0; j < fns.size(); ++j)
            if (i != j)
                for (const auto& q : probes) cand_set.insert(fns[i].value_at(q) - fns[j].value_at(q));
    std::vector<Rat> cands(cand_set.begin(), cand_set.end());
    cands.push_back(parking_shift(fns) * 2);

    const std::size_t m = fns.size();
    double total = 1;
    for (std::size_t k = 1; k < m; ++k) total *= static_cast<double>(cands.size());
    if (total > 2e6) return std::nullopt;  // outside the documented search budget

    std::vector<std::size_t> pick(m - 1, 0);
    while (true) {
        std::vector<Rat> shifts(m, Rat(0));
        for (std::size_t k = 1; k < m; ++k) shifts[k] = cands[pick[k - 1]];
        if (verify_dependence(fns, shifts).dependent) return certify(fns, std::move(shifts));
        std::size_t k = m - 1;
        while (k > 0 && pick[k - 1] + 1 == cands.size()) pick[--k] = 0;
        if (k == 0) return std::nullopt;
        ++pick[k - 1];
    }
}

const SlopeStructure::PointData* SlopeStructure::find_point(const GraphPoint& p) const {
    for (const auto& pd : points)
        if (pd.at == p) return &pd;
    return nullptr;
}

const SlopeStructure::Segment* SlopeStructure::find_segment(const GraphPoint& p) const {
    if (p.is_vertex()) return nullptr;
    for (const auto& s : segments)
        if (s.edge == p.edge && s.from < p.offset && p.offset < s.to) return &s;
    return nullptr;
}

SlopeStructure slope_structure_of(const TropicalModule& m, int r) {
    SlopeStructure out;
    out.graph = m.graph;
    out.rank = r;
    const MetricGraph& g = *m.graph;

    std::set<GraphPoint> vset;
    for (int v = 0; v < g.vertex_count(); ++v) vset.insert(GraphPoint::at_vertex(v));
    for (const auto& [p, c] : m.divisor.coefficients()) vset.insert(p);
    for (const auto& f : m.generators)
        for (const auto& [p, c] : f.divisor().coefficients()) vset.insert(p);

    for (const auto& p : vset) {
        SlopeStructure::PointData pd;
        pd.at = p;
        pd.directions = tangent_directions(g, p);
        pd.slope_lists = direction_slope_lists(m, p);
        for (std::size_t i = 0; i < pd.slope_lists.size(); ++i) {
            if (static_cast<int>(pd.slope_lists[i].size()) != r + 1)
                throw std::invalid_argument(
                    "slope_structure_of: direction " + direction_to_string(g, pd.directions[i]) +
                    " carries " + std::to_string(pd.slope_lists[i].size()) + " slopes, expected " +
                    std::to_string(r + 1));
        }
        DotArray local = local_array_at(m, p);
        if (!is_totally_rankable(local))
            throw std::invalid_argument("slope_structure_of: local array at " +
                                        point_to_string(g, p) + " is not totally rankable");
        pd.array = PermutationArray::from(permutation_core(local));
        out.points.push_back(std::move(pd));
    }

    // Open segments between consecutive V-points on each edge carry
    // constant slope lists; their local arrays must be the standard one.
    const DotArray std_closure = standard_permutation_array(r, 2).closure;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<Rat> cutoffs = {Rat(0), g.edge(e).length};
        for (const auto& p : vset)
            if (!p.is_vertex() && p.edge == e) cutoffs.push_back(p.offset);
        std::sort(cutoffs.begin(), cutoffs.end());
        for (std::size_t c = 0; c + 1 < cutoffs.size(); ++c) {
            const Rat mid = (cutoffs[c] + cutoffs[c + 1]) / 2;
            const GraphPoint probe = GraphPoint::on_edge(g, e, mid);
            const auto lists = direction_slope_lists(m, probe);
            for (std::size_t i = 0; i < lists.size(); ++i) {
                if (static_cast<int>(lists[i].size()) != r + 1)
                    throw std::invalid_argument(
                        "slope_structure_of: interior of edge " + std::to_string(e) + " carries " +
                        std::to_string(lists[i].size()) + " slopes, expected " +
                        std::to_string(r + 1));
            }
            // Opposite orientations are mirror images on a bend-free segment.
            for (int i = 0; i <= r; ++i)
                if (lists[0][static_cast<std::size_t>(i)] +
                        lists[1][static_cast<std::size_t>(r - i)] !=
                    0)
                    throw std::invalid_argument(
                        "slope_structure_of: segment slope lists are not antisymmetric");
            if (local_array_at(m, probe) != std_closure)
                throw std::invalid_argument(
                    "slope_structure_of: local array on edge " + std::to_string(e) +
                    " interior is not the standard closure");
            out.segments.push_back({e, cutoffs[c], cutoffs[c + 1], lists[1]});
        }
    }
    return out;
}

Position local_index(const PLFunction& f, const SlopeStructure& s, const GraphPoint& p) {
    const auto dirs = tangent_directions(*s.graph, p);
    if (const auto* pd = s.find_point(p)) return index_tuple(pd->slope_lists, slopes_of(f, dirs));
    const auto* seg = s.find_segment(p);
    if (!seg) throw std::invalid_argument("local_index: point not covered by the structure");
    std::vector<int> toward_tail;
    for (auto it = seg->slopes_toward_head.rbegin(); it != seg->slopes_toward_head.rend(); ++it)
        toward_tail.push_back(-*it);
    return index_tuple({toward_tail, seg->slopes_toward_head}, slopes_of(f, dirs));
}

bool is_compatible(const PLFunction& f, const SlopeStructure& s) {
    const MetricGraph& g = *s.graph;
    try {
        for (const auto& pd : s.points) {
            const Position x = local_index(f, s, pd.at);
            if (!pd.array.closure.contains(x)) return false;
        }
        const DotArray std_closure = standard_permutation_array(s.rank, 2).closure;
        for (const auto& seg : s.segments) {
            std::vector<Rat> samples;
            samples.push_back((seg.from + seg.to) / 2);
            for (const Rat& c : f.edge_profile(seg.edge).cuts)
                if (seg.from < c && c < seg.to) samples.push_back(c);
            for (const Rat& off : samples) {
                const GraphPoint p = GraphPoint::on_edge(g, seg.edge, off);
                const Position x = local_index(f, s, p);
                if (!std_closure.contains(x)) return false;
            }
        }
    } catch (const std::invalid_argument&) {
        return false;  // a slope of f is not in some S^eta
    }
    return true;
}

bool check_BNRP(const PLFunction& f, const Divisor& d, const Divisor& e) {
    return (d + f.divisor() - e).is_effective();
}

bool check_LRP(const TropicalModule& m, const PLFunction& f, const Divisor& e) {
    if (!e.is_effective()) throw std::invalid_argument("check_LRP: E must be effective");
    for (const auto& [p, k] : e.coefficients()) {
        try {
            if (local_rank(m, f, p) < k) return false;
        } catch (const std::invalid_argument&) {
            return false;  // incompatible slope at p
        }
    }
    return true;
}

namespace {
std::atomic<long long> g_theorem_violations{0};
}

long long TheoremGuard::violations() { return g_theorem_violations.load(); }
void TheoremGuard::reset() { g_theorem_violations.store(0); }
void TheoremGuard::record() { ++g_theorem_violations; }

bool lrp_implies_bnrp_crosscheck(const TropicalModule& m, const PLFunction& f, const Divisor& e) {
    const bool lrp = check_LRP(m, f, e);
    const bool bnrp = check_BNRP(f, m.divisor, e);
    if (lrp && !bnrp) TheoremGuard::record();
    return bnrp;
}

namespace {

// Pure meet functions: min over a generator subset with aligned values.
// These stay inside the module and extend the candidate pool cheaply.
std::vector<PLFunction> base_pool(const TropicalModule& m) {
    std::vector<PLFunction> pool = m.generators;
    const std::size_t n = m.generators.size();
    if (n >= 2 && n <= 5) {
        for (unsigned mask = 3; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<PLFunction> sub;
            std::vector<Rat> zero;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) {
                    sub.push_back(m.generators[k]);
                    zero.push_back(Rat(0));
                }
            PLFunction cand = tropical_min(sub, zero);
            bool dup = false;
            for (const auto& f : pool)
                if (f.same_function(cand)) {
                    dup = true;
                    break;
                }
            if (!dup) pool.push_back(std::move(cand));
        }
    }
    return pool;
}

std::vector<GraphPoint> support_points(const Divisor& e) {
    std::vector<GraphPoint> pts;
    for (const auto& [p, c] : e.coefficients()) pts.push_back(p);
    return pts;
}

// Candidate functions visited in a deterministic order; `accept` returns
// true to stop with that candidate.
template <typename Accept>
std::optional<PLFunction> search_candidates(const TropicalModule& m, const Divisor& e,
                                            Accept&& accept) {
    const auto pool = base_pool(m);
    const auto pts = support_points(e);
    for (const auto& f : pool)
        if (accept(f)) return f;

    auto shift_candidates = [&](const PLFunction& top, const PLFunction& low) {
        std::set<Rat> a = {Rat(0)};
        for (const auto& p : pts) {
            const Rat diff = top.value_at(p) - low.value_at(p);
            if (diff >= Rat(0)) a.insert(diff);
        }
        return a;
    };

    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i == j) continue;
            for (const Rat& a : shift_candidates(pool[i], pool[j])) {
                PLFunction cand = tropical_min(std::vector<PLFunction>{pool[i], pool[j]},
                                               std::vector<Rat>{Rat(0), a});
                if (accept(cand)) return cand;
            }
        }
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (k == i || k == j) continue;
                for (const Rat& a : shift_candidates(pool[i], pool[j])) {
                    std::set<Rat> bs = shift_candidates(pool[i], pool[k]);
                    for (const auto& p : pts) {
                        const Rat chained = a + pool[j].value_at(p) - pool[k].value_at(p);
                        if (chained >= Rat(0)) bs.insert(chained);
                    }
                    for (const Rat& b : bs) {
                        PLFunction cand =
                            tropical_min(std::vector<PLFunction>{pool[i], pool[j], pool[k]},
                                         std::vector<Rat>{Rat(0), a, b});
                        if (accept(cand)) return cand;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PLFunction> find_bnrp_witness(const TropicalModule& m, const Divisor& e) {
    if (!e.is_effective()) throw std::invalid_argument("find_bnrp_witness: E must be effective");
    return search_candidates(m, e,
                             [&](const PLFunction& f) { return check_BNRP(f, m.divisor, e); });
}

std::optional<PLFunction> find_BNRP_LRP_witness(const TropicalModule& m, const Divisor& e) {
    if (!e.is_effective())
        throw std::invalid_argument("find_BNRP_LRP_witness: E must be effective");
    return search_candidates(m, e, [&](const PLFunction& f) {
        return lrp_implies_bnrp_crosscheck(m, f, e) && check_LRP(m, f, e);
    });
}

std::vector<Divisor> critical_divisor_family(const TropicalModule& m, int r) {
    const MetricGraph& g = *m.graph;
    std::set<GraphPoint> pts;
    for (int v = 0; v < g.vertex_count(); ++v) pts.insert(GraphPoint::at_vertex(v));
    std::vector<std::set<Rat>> edge_offsets(static_cast<std::size_t>(g.edge_count()));
    for (const auto& f : m.generators)
        for (const auto& b : f.bend_points()) {
            pts.insert(b);
            edge_offsets[static_cast<std::size_t>(b.edge)].insert(b.offset);
        }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto& offs = edge_offsets[static_cast<std::size_t>(e)];
        const Rat len = g.edge(e).length;
        std::vector<Rat> cell_bounds = {Rat(0), len};
        cell_bounds.insert(cell_bounds.end(), offs.begin(), offs.end());
        std::sort(cell_bounds.begin(), cell_bounds.end());
        for (std::size_t c = 0; c + 1 < cell_bounds.size(); ++c)
            pts.insert(GraphPoint::on_edge(g, e, (cell_bounds[c] + cell_bounds[c + 1]) / 2));
        pts.insert(GraphPoint::on_edge(g, e, len / 4));
        pts.insert(GraphPoint::on_edge(g, e, len / 3));
        pts.insert(GraphPoint::on_edge(g, e, len * Rat(2, 3)));
    }

    const std::vector<GraphPoint> base(pts.begin(), pts.end());
    std::vector<Divisor> out;
    // degree-r multisets over base, nondecreasing index sequences
    auto rec = [&](auto&& self, std::size_t start, int left, Divisor acc) -> void {
        if (left == 0) {
            out.push_back(std::move(acc));
            return;
        }
        for (std::size_t k = start; k < base.size(); ++k) {
            Divisor next = acc;
            next.add(base[k], 1);
            self(self, k, left - 1, std::move(next));
        }
    };
    rec(rec, 0, r, Divisor{});
    return out;
}

TlsReport check_tls_axioms(const TropicalModule& m, int r) {
    TlsReport report;
    const long long guard_before = TheoremGuard::violations();

    try {
        slope_structure_of(m, r);
        report.structured = true;
    } catch (const std::invalid_argument& ex) {
        report.structured = false;
        report.structure_error = ex.what();
    }

    // Condition (2): every (r+2)-subset of generators tropically dependent;
    // by the generating lemma this extends to the whole module.
    const std::size_t need = static_cast<std::size_t>(r) + 2;
    const std::size_t n = m.generators.size();
    if (n >= need) {
        std::vector<std::size_t> idx(need);
        for (std::size_t i = 0; i < need; ++i) idx[i] = i;
        while (true) {
            std::vector<PLFunction> sub;
            for (std::size_t i : idx) sub.push_back(m.generators[i]);
            auto cert = find_dependence(sub);
            if (!cert || !verify_dependence(sub, cert->shifts).dependent) {
                report.dependence_ok = false;
                report.dependence_failures.push_back(
                    std::vector<int>(idx.begin(), idx.end()));
            }
            std::size_t i = need;
            while (i > 0 && idx[i - 1] == n - need + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    // Condition (1) on the critical family.
    for (const auto& e : critical_divisor_family(m, r)) {
        if (!find_bnrp_witness(m, e)) {
            report.divisor_condition_ok = false;
            report.divisor_failures.push_back(e);
        }
    }

    report.lrp_bnrp_violations = TheoremGuard::violations() - guard_before;
    return report;
}

}  // namespace troplin
