#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "troplin/hyperarray.hpp"
#include "troplin/pl_function.hpp"

namespace troplin {

// Finitely generated tropical submodule of R(D): membership means
// expressibility as min{g_i + a_i} over the generators, never materialized.
struct TropicalModule {
    std::shared_ptr<const MetricGraph> graph;
    Divisor divisor;
    std::vector<PLFunction> generators;

    TropicalModule(std::shared_ptr<const MetricGraph> g, Divisor d, std::vector<PLFunction> gens);
};

// Sorted set of generator slopes along a direction; tropical combinations
// cannot create new slopes, so this is the module's slope set.
std::vector<int> slopes_at(const TropicalModule& m, const TangentDirection& t);

std::vector<std::vector<int>> direction_slope_lists(const TropicalModule& m, const GraphPoint& p);

// Slope-index tuples of the generators at p, closed under meet.
DotArray local_array_at(const TropicalModule& m, const GraphPoint& p);

// Index tuple of f against the module's per-direction slope lists at p.
// Throws when some slope of f is not realized by the module.
Position local_index_tuple(const TropicalModule& m, const PLFunction& f, const GraphPoint& p);

// Rank-array value of the local array's permutation core at f's tuple.
int local_rank(const TropicalModule& m, const PLFunction& f, const GraphPoint& p);

struct DependenceCheck {
    bool dependent = false;
    std::optional<GraphPoint> failure_point;
};

// Exact cell-by-cell check that min{f_i + a_i} is attained by at least two
// branches everywhere; reports a violating point otherwise.
DependenceCheck verify_dependence(const std::vector<PLFunction>& fns,
                                  const std::vector<Rat>& shifts);

struct DependenceCertificate {
    std::vector<Rat> shifts;
    struct CellRecord {
        int edge;
        Rat from, to;
        std::vector<int> attaining;
    };
    std::vector<CellRecord> attainment;
};

// Searches for shifts witnessing tropical dependence. Complete for
// constant-slope functions on a graph with a common central vertex (the
// combinatorial criterion applies); elsewhere candidates come from the
// finite lattice of value differences at vertices and bends, so a missing
// certificate is not conclusive. A returned certificate always verifies.
std::optional<DependenceCertificate> find_dependence(const std::vector<PLFunction>& fns);

struct SlopeStructure {
    std::shared_ptr<const MetricGraph> graph;
    int rank = 0;

    struct PointData {
        GraphPoint at;
        std::vector<TangentDirection> directions;
        std::vector<std::vector<int>> slope_lists;  // ascending, size rank+1
        PermutationArray array;
    };
    std::vector<PointData> points;  // the finite set V, sorted

    struct Segment {
        int edge;
        Rat from, to;
        std::vector<int> slopes_toward_head;  // ascending, size rank+1
    };
    std::vector<Segment> segments;

    const PointData* find_point(const GraphPoint& p) const;
    const Segment* find_segment(const GraphPoint& p) const;
};

// Builds the slope structure of a module: per-direction slope lists, the
// permutation core of each local array on the finite set V, and validated
// standard behavior on the open segments. Throws when a direction does not
// carry exactly r+1 slopes or a local array is not totally rankable.
SlopeStructure slope_structure_of(const TropicalModule& m, int r);

bool is_compatible(const PLFunction& f, const SlopeStructure& s);
Position local_index(const PLFunction& f, const SlopeStructure& s, const GraphPoint& p);

// div(f) + D >= E.
bool check_BNRP(const PLFunction& f, const Divisor& d, const Divisor& e);
// local rank of f at every support point of E is at least E(p).
bool check_LRP(const TropicalModule& m, const PLFunction& f, const Divisor& e);

// Counts functions observed with LRP true but BNRP false; the containing
// theorem says this must never happen, so any increment is a bug signal.
class TheoremGuard {
public:
    static long long violations();
    static void reset();
    static void record();
};

// Evaluates both checks, feeding the cross-check guard.
bool lrp_implies_bnrp_crosscheck(const TropicalModule& m, const PLFunction& f, const Divisor& e);

// Tie-lattice search for a function passing BNRP (and optionally LRP) for
// E. Soundness is exact; completeness is limited to the candidate family.
std::optional<PLFunction> find_bnrp_witness(const TropicalModule& m, const Divisor& e);
std::optional<PLFunction> find_BNRP_LRP_witness(const TropicalModule& m, const Divisor& e);

// Degree-r effective divisors over a finite critical family of points:
// vertices, generator bends, cell midpoints and per-edge third/quarter
// probes. A desk-scale certification of condition (1).
std::vector<Divisor> critical_divisor_family(const TropicalModule& m, int r);

struct TlsReport {
    bool dependence_ok = true;                        // condition (2) on generators
    std::vector<std::vector<int>> dependence_failures;  // generator index subsets
    bool divisor_condition_ok = true;                 // condition (1) on the critical family
    std::vector<Divisor> divisor_failures;
    bool structured = false;                          // slope structure exists
    std::string structure_error;
    long long lrp_bnrp_violations = 0;

    bool pass() const { return dependence_ok && divisor_condition_ok; }
};

TlsReport check_tls_axioms(const TropicalModule& m, int r);

}  // namespace troplin
