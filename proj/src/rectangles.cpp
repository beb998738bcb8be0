#include "lamina/rectangles.hpp"

#include <algorithm>

namespace lamina {

namespace {

bool interval_intersect(const Interval& p, const Interval& q, Interval& out) {
    Rat lo = std::max(p.lo, q.lo), hi = std::min(p.hi, q.hi);
    if (lo > hi) return false;
    out = {lo, hi};
    return true;
}

bool rect_less(const TorusRect& a, const TorusRect& b) {
    if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
    if (a.y.lo != b.y.lo) return a.y.lo < b.y.lo;
    if (a.x.hi != b.x.hi) return a.x.hi < b.x.hi;
    return a.y.hi < b.y.hi;
}

bool overlap_positive(const Interval& p, const Interval& q) {
    return std::max(p.lo, q.lo) < std::min(p.hi, q.hi);
}

} // namespace

std::vector<Interval> arc_intervals(const Angle& a, const Angle& b) {
    const Rat &u = a.value(), &v = b.value();
    if (u == v) return {{Rat(0), Rat(1)}};
    if (u < v) return {{u, v}};
    std::vector<Interval> out;
    if (u < 1) out.push_back({u, Rat(1)});
    if (v > 0) out.push_back({Rat(0), v});
    return out;
}

RectangleSet RectangleSet::full_torus() {
    return RectangleSet({TorusRect{{Rat(0), Rat(1)}, {Rat(0), Rat(1)}}});
}

RectangleSet RectangleSet::leaf_good_region(const Leaf& l) {
    std::vector<TorusRect> rects;
    for (auto arcs : {arc_intervals(l.a, l.b), arc_intervals(l.b, l.a)})
        for (const auto& ix : arcs)
            for (const auto& iy : arcs) rects.push_back({ix, iy});
    return RectangleSet(std::move(rects));
}

Rat RectangleSet::area() const {
    Rat total(0);
    for (const auto& r : rects_) total += r.area();
    return total;
}

void RectangleSet::intersect(const RectangleSet& other) {
    std::vector<TorusRect> out;
    for (const auto& a : rects_)
        for (const auto& b : other.rects_) {
            TorusRect r;
            if (interval_intersect(a.x, b.x, r.x) && interval_intersect(a.y, b.y, r.y))
                out.push_back(r);
        }
    rects_ = std::move(out);
    canonicalize();
}

RectangleSet RectangleSet::doubling_preimage() const {
    std::vector<TorusRect> out;
    out.reserve(rects_.size() * 4);
    const Rat half(1, 2);
    for (const auto& r : rects_) {
        Interval xs[2] = {{r.x.lo / 2, r.x.hi / 2}, {r.x.lo / 2 + half, r.x.hi / 2 + half}};
        Interval ys[2] = {{r.y.lo / 2, r.y.hi / 2}, {r.y.lo / 2 + half, r.y.hi / 2 + half}};
        for (const auto& ix : xs)
            for (const auto& iy : ys) out.push_back({ix, iy});
    }
    return RectangleSet(std::move(out));
}

bool RectangleSet::contains_point(const Rat& x, const Rat& y) const {
    for (const auto& r : rects_)
        if (r.x.contains(x) && r.y.contains(y)) return true;
    // torus boundary: 0 and 1 are the same point
    auto alias = [](const Rat& t) { return t == 0 ? Rat(1) : t == 1 ? Rat(0) : t; };
    Rat x2 = alias(x), y2 = alias(y);
    if (x2 == x && y2 == y) return false;
    for (const auto& r : rects_)
        if ((r.x.contains(x) || r.x.contains(x2)) && (r.y.contains(y) || r.y.contains(y2)))
            return true;
    return false;
}

bool RectangleSet::covers(const RectangleSet& other) const {
    // subtract this from each rectangle of other; guillotine splits
    for (const auto& r : other.rects_) {
        std::vector<TorusRect> pending{r};
        for (const auto& c : rects_) {
            std::vector<TorusRect> next;
            for (const auto& p : pending) {
                if (!overlap_positive(p.x, c.x) || !overlap_positive(p.y, c.y)) {
                    next.push_back(p);
                    continue;
                }
                Rat xl = std::max(p.x.lo, c.x.lo), xh = std::min(p.x.hi, c.x.hi);
                Rat yl = std::max(p.y.lo, c.y.lo), yh = std::min(p.y.hi, c.y.hi);
                if (p.x.lo < xl) next.push_back({{p.x.lo, xl}, p.y});
                if (xh < p.x.hi) next.push_back({{xh, p.x.hi}, p.y});
                if (p.y.lo < yl) next.push_back({{xl, xh}, {p.y.lo, yl}});
                if (yh < p.y.hi) next.push_back({{xl, xh}, {yh, p.y.hi}});
            }
            pending = std::move(next);
            if (pending.empty()) break;
        }
        for (const auto& p : pending)
            if (p.area() > 0) return false;
    }
    return true;
}

bool RectangleSet::covers_diagonal() const {
    std::vector<Interval> segs;
    for (const auto& r : rects_) {
        Rat lo = std::max(r.x.lo, r.y.lo), hi = std::min(r.x.hi, r.y.hi);
        if (lo <= hi) segs.push_back({lo, hi});
    }
    std::sort(segs.begin(), segs.end(), [](const Interval& a, const Interval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    Rat covered(0);
    for (const auto& s : segs) {
        if (s.lo > covered) return false;
        covered = std::max(covered, s.hi);
    }
    return covered >= 1;
}

bool RectangleSet::symmetric_under_swap() const {
    std::vector<TorusRect> swapped;
    swapped.reserve(rects_.size());
    for (const auto& r : rects_) swapped.push_back({r.y, r.x});
    std::sort(swapped.begin(), swapped.end(), rect_less);
    return swapped == rects_;
}

bool RectangleSet::interiors_disjoint() const {
    for (size_t i = 0; i < rects_.size(); ++i)
        for (size_t j = i + 1; j < rects_.size(); ++j)
            if (overlap_positive(rects_[i].x, rects_[j].x) &&
                overlap_positive(rects_[i].y, rects_[j].y))
                return false;
    return true;
}

void RectangleSet::canonicalize() {
    std::vector<TorusRect> out;
    out.reserve(rects_.size());
    for (const auto& r : rects_)
        if (!r.x.degenerate() && !r.y.degenerate()) out.push_back(r);
    std::sort(out.begin(), out.end(), rect_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    rects_ = std::move(out);
}

} // namespace lamina
