#pragma once

#include "lamina/lamination.hpp"

namespace lamina {

/// The quadratic major determined by theta: the diameter joining theta/2 and
/// (theta+1)/2.
PrimitiveMajor quadratic_major(const Angle& theta);

/// The forward-invariant post-major set: the doubling orbit of theta plus
/// its preferred half preimage, sorted.
std::vector<Angle> post_major(const Angle& theta);

/// Level-n refinement of the non-escaping region: points of the torus whose
/// first n doubling iterates stay in the good region of the major diameter.
/// Rectangles are kept closed.
struct OmegaLevel {
    Angle theta;
    int level = 0;
    RectangleSet cells;
};

OmegaLevel omega_level(const Angle& theta, int level, int cap = default_depth_cap());

/// All refinements 0..level in one pass (each level is the doubling
/// preimage of the previous one intersected with level 0).
std::vector<OmegaLevel> omega_levels(const Angle& theta, int level, int cap = default_depth_cap());

/// Number of cells at torus distance at least min_separation from the
/// diagonal.
size_t separated_cells(const RectangleSet& cells, const Rat& min_separation);

/// Least-squares slope of log(cell count away from the diagonal) against n
/// for n in [2, n_max]; approximates the core entropy. The diagonal and its
/// shadowing collar never escape, so only cells at definite separation
/// (1/8) are counted.
double growth_rate_estimate(const Angle& theta, int n_max, int cap = default_depth_cap());

/// Pre-major leaves up to the given depth that separate or intersect the
/// post-major set.
struct SeparatingSet {
    Angle theta;
    int depth = 0;
    std::vector<Angle> post;
    FiniteLamination leaves;
};

SeparatingSet separating_leaves(const Angle& theta, int depth, int cap = default_depth_cap());

/// True iff the chord {x,y} has an endpoint in the set or both open arcs
/// between its endpoints contain a point of the set.
bool separates_or_intersects(const Leaf& l, const std::vector<Angle>& pts);

struct SeparationViolation {
    Leaf leaf;
    Leaf image;
};

/// Forward-invariance check for the separating set: every noncollapsing
/// image of a separating leaf must again be separating (depth drops by
/// one). Expected empty.
std::vector<SeparationViolation> check_forward_invariance_S(const Angle& theta, int depth,
                                                            int cap = default_depth_cap());

} // namespace lamina
