#pragma once

#include "lamina/leaf.hpp"

#include <vector>

namespace lamina {

/// Closed subinterval of [0,1]; degenerate (lo == hi) intervals are allowed
/// in intermediate computations and dropped when rectangles are canonicalized.
struct Interval {
    Rat lo, hi;
    Rat length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    bool contains(const Rat& t) const { return lo <= t && t <= hi; }
};

/// Axis-aligned closed rectangle on the torus, stored cut at 0 so that both
/// intervals are subsets of [0,1].
struct TorusRect {
    Interval x, y;
    Rat area() const { return x.length() * y.length(); }
    bool operator==(const TorusRect& o) const {
        return x.lo == o.x.lo && x.hi == o.x.hi && y.lo == o.y.lo && y.hi == o.y.hi;
    }
};

/// Finite union of torus rectangles with exact rational corners and pairwise
/// disjoint interiors.
class RectangleSet {
  public:
    RectangleSet() = default;
    explicit RectangleSet(std::vector<TorusRect> rects) : rects_(std::move(rects)) { canonicalize(); }

    static RectangleSet full_torus();
    /// The two closed compatibility squares of a single chord.
    static RectangleSet leaf_good_region(const Leaf& l);

    const std::vector<TorusRect>& rects() const { return rects_; }
    size_t size() const { return rects_.size(); }
    bool empty() const { return rects_.empty(); }

    Rat area() const;
    void intersect(const RectangleSet& other);
    /// Union of the four affine preimage branches of (x,y) -> (2x,2y).
    RectangleSet doubling_preimage() const;

    bool contains_point(const Rat& x, const Rat& y) const;
    /// True iff other \ this has zero area; with closed rectangle unions this
    /// is equivalent to point-set containment of other in this.
    bool covers(const RectangleSet& other) const;
    /// True iff the diagonal {(t,t)} is entirely inside the union.
    bool covers_diagonal() const;
    bool symmetric_under_swap() const;
    bool interiors_disjoint() const;

  private:
    void canonicalize();
    std::vector<TorusRect> rects_;
};

/// Splits the counterclockwise arc from a to b at the 0 cut; a == b yields
/// the full circle.
std::vector<Interval> arc_intervals(const Angle& a, const Angle& b);

} // namespace lamina
