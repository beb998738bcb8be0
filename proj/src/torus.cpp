#include "lamina/torus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lamina {

PrimitiveMajor quadratic_major(const Angle& theta) {
    if (theta.value() == 0) fail(errc::domain, "the algorithm excludes angle 0");
    Angle lo(theta.value() / 2), hi((theta.value() + 1) / 2);
    return canonical_major(2, {EquivalenceClass{{lo, hi}}});
}

std::vector<Angle> post_major(const Angle& theta) {
    if (theta.value() == 0) fail(errc::domain, "the algorithm excludes angle 0");
    std::set<Angle> pts;
    pts.insert(preferred_half_preimage(theta));
    for (const auto& p : orbit(theta, 2).points) pts.insert(p);
    return {pts.begin(), pts.end()};
}

std::vector<OmegaLevel> omega_levels(const Angle& theta, int level, int cap) {
    if (level < 0) fail(errc::precondition, "level must be nonnegative");
    if (level > cap)
        fail(errc::resource_limit,
             "level " + std::to_string(level) + " exceeds cap " + std::to_string(cap));
    RectangleSet omega0 = good_region(major_to_lamination(quadratic_major(theta)));
    std::vector<OmegaLevel> out;
    out.push_back({theta, 0, omega0});
    for (int n = 1; n <= level; ++n) {
        RectangleSet next = out.back().cells.doubling_preimage();
        next.intersect(omega0);
        out.push_back({theta, n, std::move(next)});
    }
    return out;
}

OmegaLevel omega_level(const Angle& theta, int level, int cap) {
    return omega_levels(theta, level, cap).back();
}

size_t separated_cells(const RectangleSet& cells, const Rat& min_separation) {
    size_t n = 0;
    for (const auto& r : cells.rects()) {
        // distance from the cell to the nearest torus copy of the diagonal
        Rat sep(1);
        for (int k = -1; k <= 1; ++k) {
            Rat lo = std::max(r.x.lo, r.y.lo + k), hi = std::min(r.x.hi, r.y.hi + k);
            Rat d = lo > hi ? lo - hi : Rat(0);
            sep = std::min(sep, d);
        }
        if (sep >= min_separation) ++n;
    }
    return n;
}

// The count is restricted to cells at a fixed separation from the diagonal.
// The diagonal never escapes and drags a collar of shadowing cells with it,
// about 2^n of them at level n, which would drown every slope in log 2; the
// pairs at definite separation are the ones whose count grows like the
// leading eigenvalue.
double growth_rate_estimate(const Angle& theta, int n_max, int cap) {
    if (n_max < 4) fail(errc::precondition, "need n_max >= 4 for a slope estimate");
    const Rat min_separation(1, 8);
    auto levels = omega_levels(theta, n_max, cap);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = 2; n <= n_max; ++n) {
        size_t cells = std::max<size_t>(1, separated_cells(levels[n].cells, min_separation));
        double x = n, y = std::log(static_cast<double>(cells));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

bool separates_or_intersects(const Leaf& l, const std::vector<Angle>& pts) {
    bool side1 = false, side2 = false;
    for (const auto& p : pts) {
        if (p == l.a || p == l.b) return true; // intersects
        if (cyclic_between(l.a, p, l.b))
            side1 = true;
        else
            side2 = true;
        if (side1 && side2) return true; // separates
    }
    return false;
}

SeparatingSet separating_leaves(const Angle& theta, int depth, int cap) {
    SeparatingSet s;
    s.theta = theta;
    s.depth = depth;
    s.post = post_major(theta);
    FiniteLamination pre = backward_lift(quadratic_major(theta), depth, LiftVariant::literal, cap);
    s.leaves.degree = 2;
    for (const auto& l : pre.leaves)
        if (separates_or_intersects(l, s.post)) s.leaves.leaves.insert(l);
    return s;
}

std::vector<SeparationViolation> check_forward_invariance_S(const Angle& theta, int depth,
                                                            int cap) {
    if (depth < 1) fail(errc::precondition, "depth must be at least 1");
    SeparatingSet cur = separating_leaves(theta, depth, cap);
    SeparatingSet prev = separating_leaves(theta, depth - 1, cap);
    std::set<Angle> post(cur.post.begin(), cur.post.end());

    std::vector<SeparationViolation> violations;
    for (const auto& l : cur.leaves.leaves) {
        Angle ia = tuple_map(l.a, 2), ib = tuple_map(l.b, 2);
        if (ia == ib) continue; // the major leaf collapses
        Leaf image(ia, ib);
        if (prev.leaves.contains(image)) continue;
        if (post.count(ia) && post.count(ib)) continue;
        violations.push_back({l, image});
    }
    return violations;
}

} // namespace lamina
