#pragma once

#include "lamina/leaf.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lamina {

/// Vertex set of a critical leaf or collapsed polygon; all angles share one
/// image under the owning major's d-tupling map. Angles are kept sorted.
struct EquivalenceClass {
    std::vector<Angle> angles;

    int criticality() const { return static_cast<int>(angles.size()) - 1; }
    bool operator==(const EquivalenceClass& o) const { return angles == o.angles; }
};

/// Primitive degree-d major: pairwise unlinked classes of total criticality
/// d-1. Classes are kept sorted by least angle (canonical form).
struct PrimitiveMajor {
    int degree = 2;
    std::vector<EquivalenceClass> classes;

    bool operator==(const PrimitiveMajor& o) const {
        return degree == o.degree && classes == o.classes;
    }
    bool generic() const; // every class is a plain leaf
};

/// Sorts class angles and classes; drops nothing.
PrimitiveMajor canonical_major(int degree, std::vector<EquivalenceClass> classes);

/// Hull-edge chords of every class (k-gon contributes its k boundary edges).
FiniteLamination major_to_lamination(const PrimitiveMajor& m);

enum class violation_kind {
    bad_degree,
    class_too_small,
    duplicate_angle,
    image_mismatch,
    linked_classes,
    criticality_sum,
    region_measure,
};

struct Violation {
    violation_kind kind;
    std::string detail;
};

/// Checks every defining invariant of a primitive major; an empty result
/// means the major is valid.
std::vector<Violation> validate(const PrimitiveMajor& m);
bool is_valid(const PrimitiveMajor& m);

/// The lesser endpoints of a generic major's leaves, strictly increasing,
/// with starts[i] < (i+1)/degree.
struct StartSequence {
    std::vector<Angle> starts;

    bool operator==(const StartSequence& o) const { return starts == o.starts; }
    int degree() const { return static_cast<int>(starts.size()) + 1; }
};

void check_start_sequence(const StartSequence& s, int degree);

/// Builds the unique primitive major with the given starting points. The
/// terminal point of each leaf, taken from the last backwards, is the
/// smallest value giving the leaf span measure 1/d outside previously built
/// spans. Endpoint collisions merge into polygon classes.
PrimitiveMajor from_starting_points(const StartSequence& s, int degree);

/// Sorts the points and subtracts 1/d from entry i while it is >= i/d,
/// repeating until fixed. Errors out if two entries ever collide.
StartSequence normalize_starts(const std::vector<Angle>& points, int degree);

/// Inverse of from_starting_points on generic majors.
StartSequence starting_points(const PrimitiveMajor& m);

/// Collapses the span of the leaf with the largest starting point and
/// rescales by d/(d-1) keeping 0 fixed; degree drops by one.
PrimitiveMajor derive(const PrimitiveMajor& m);

/// PM(3) chart by bisector direction theta and near-arc length a in (0,1/3).
PrimitiveMajor cubic_from_bisector(const Rat& a, const Angle& theta);

/// Deterministic-in-seed valid generic major (internal retry on degenerate
/// draws).
PrimitiveMajor random_generic_major(int degree, std::uint64_t seed);
StartSequence random_start_sequence(int degree, std::uint64_t seed);

/// Circle quotient graph: one vertex per class, one edge per arc between
/// consecutive class angles; edge lengths sum to 1 and the first Betti
/// number equals the degree.
struct QuotientGraph {
    struct Edge {
        int u, v;
        Rat length;
        Angle from, to; // arc swept counterclockwise
    };
    int vertex_count = 0;
    std::vector<Edge> edges;

    int betti() const { return static_cast<int>(edges.size()) - vertex_count + 1; }
};

QuotientGraph quotient_graph(const PrimitiveMajor& m);

/// Shortest-path pseudo-metric on the circle induced by collapsing the
/// major's classes. Precomputes all-pairs vertex distances so repeated
/// queries are cheap.
class MetricEvaluator {
  public:
    struct Point {
        int arc;    // index of the arc containing the point
        int u, v;   // class vertices at the two arc ends
        Rat du, dv; // arc distance to each end
    };

    explicit MetricEvaluator(const PrimitiveMajor& m);
    Point locate(const Angle& x) const;
    Rat eval(const Point& p, const Point& q) const;
    Rat operator()(const Angle& x, const Angle& y) const { return eval(locate(x), locate(y)); }

  private:
    std::vector<Angle> angles_;
    std::vector<int> owner_;
    std::vector<std::vector<Rat>> dist_;
};

Rat met_eval(const PrimitiveMajor& m, const Angle& x, const Angle& y);

struct MetricEstimate {
    Rat value;
    Rat error_bound; // true distance lies in [value, value + error_bound]
};

/// Sup-difference metric on PM(d), evaluated on the class angles of both
/// majors plus a uniform grid; the bound 2/resolution comes from met being
/// 1-Lipschitz in each variable.
MetricEstimate distance(const PrimitiveMajor& m1, const PrimitiveMajor& m2, int resolution);

} // namespace lamina
