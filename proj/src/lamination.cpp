#include "lamina/lamination.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace lamina {

int default_depth_cap() {
    if (const char* env = std::getenv("LAMINA_DEPTH_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

RectangleSet good_region(const FiniteLamination& lam) {
    if (lam.leaves.empty()) fail(errc::precondition, "good region of an empty lamination");
    if (auto x = lam.crossings(); !x.empty())
        fail(errc::precondition,
             "leaves cross: " + x.front().first.str() + " and " + x.front().second.str());
    RectangleSet g = RectangleSet::full_torus();
    for (const auto& l : lam.leaves) g.intersect(RectangleSet::leaf_good_region(l));
    return g;
}

namespace {

// A circle point with an infinitesimal offset c*eps; points are ordered by
// (rational part, offset). The rational part sits in [0,1], with 1 used only
// for points infinitesimally below the cut at 0.
struct EpsPoint {
    Rat r, c;

    static EpsPoint normalized(Rat r, Rat c) {
        r = frac_mod1(r);
        if (r == 0 && c < 0) r = 1;
        return {std::move(r), std::move(c)};
    }
    bool operator==(const EpsPoint& o) const { return r == o.r && c == o.c; }
    bool operator<(const EpsPoint& o) const { return r != o.r ? r < o.r : c < o.c; }
};

template <class P> struct ChordOps;

template <> struct ChordOps<Angle> {
    static Angle image(const Angle& p, int d) { return tuple_map(p, d); }
    static std::vector<Angle> preimages(const Angle& p, int d) {
        std::vector<Angle> out;
        for (int k = 0; k < d; ++k) out.push_back(Angle((p.value() + k) / d));
        return out;
    }
};

template <> struct ChordOps<EpsPoint> {
    static EpsPoint image(const EpsPoint& p, int d) { return EpsPoint::normalized(p.r * d, p.c * d); }
    static std::vector<EpsPoint> preimages(const EpsPoint& p, int d) {
        std::vector<EpsPoint> out;
        for (int k = 0; k < d; ++k) out.push_back(EpsPoint::normalized((p.r + k) / d, p.c / d));
        return out;
    }
};

template <class P> struct Chord {
    P a, b; // a < b

    Chord(P x, P y) {
        if (y < x) std::swap(x, y);
        a = std::move(x);
        b = std::move(y);
    }
    bool operator==(const Chord& o) const { return a == o.a && b == o.b; }
    bool operator<(const Chord& o) const { return a == o.a ? b < o.b : a < o.a; }
};

template <class P> bool chords_cross(const Chord<P>& l1, const Chord<P>& l2) {
    if (l1.a == l2.a || l1.a == l2.b || l1.b == l2.a || l1.b == l2.b) return false;
    bool a_in = l1.a < l2.a && l2.a < l1.b;
    bool b_in = l1.a < l2.b && l2.b < l1.b;
    return a_in != b_in;
}

// Candidates that cross one another are dropped pairwise. For a major whose
// classes avoid their own forward images the situation never arises (the
// collapsed-region argument makes same-step preimages compatible), but a
// polygon with a vertex on its own orbit can spawn two preimage chords that
// each clear the current lamination yet interleave with each other; keeping
// either one would break the symmetry the configuration has, so neither is
// kept. Sweep over chords sorted by start, tracking open spans by endpoint.
template <class P>
void drop_mutual_crossings(std::vector<Chord<P>>& cands) {
    std::vector<char> marked(cands.size(), 0);
    std::multimap<P, size_t> active; // endpoint -> candidate index
    for (size_t j = 0; j < cands.size(); ++j) {
        while (!active.empty() && !(cands[j].a < active.begin()->first))
            active.erase(active.begin()); // span over before or at a_j: no crossing
        for (auto it = active.begin(); it != active.end() && it->first < cands[j].b; ++it) {
            const Chord<P>& other = cands[it->second];
            if (other.a == cands[j].a || other.b == cands[j].b) continue; // shared endpoint
            marked[it->second] = marked[j] = 1;
        }
        active.emplace(cands[j].b, j);
    }
    size_t out = 0;
    for (size_t j = 0; j < cands.size(); ++j)
        if (!marked[j]) cands[out++] = std::move(cands[j]);
    cands.erase(cands.begin() + static_cast<long>(out), cands.end());
}

// Preimages of leaves already in the lamination were screened at an earlier
// step against a subset of the current leaves, so their verdict cannot
// change; only the latest generation needs expanding.
template <class P>
std::set<Chord<P>> lift_chords(std::set<Chord<P>> current, int degree, int depth) {
    std::vector<Chord<P>> frontier(current.begin(), current.end());
    for (int step = 0; step < depth && !frontier.empty(); ++step) {
        std::set<Chord<P>> added;
        for (const auto& l : frontier) {
            auto pa = ChordOps<P>::preimages(l.a, degree);
            auto pb = ChordOps<P>::preimages(l.b, degree);
            for (const auto& x : pa)
                for (const auto& y : pb) {
                    if (x == y) continue;
                    Chord<P> cand(x, y);
                    if (current.count(cand) || added.count(cand)) continue;
                    bool good = true;
                    for (const auto& c : current)
                        if (chords_cross(cand, c)) {
                            good = false;
                            break;
                        }
                    if (good) added.insert(std::move(cand));
                }
        }
        std::vector<Chord<P>> kept(added.begin(), added.end());
        drop_mutual_crossings(kept);
        current.insert(kept.begin(), kept.end());
        frontier = std::move(kept);
    }
    return current;
}

} // namespace

FiniteLamination backward_lift(const PrimitiveMajor& m, int depth, LiftVariant variant,
                               int depth_cap) {
    if (auto v = validate(m); !v.empty())
        fail(errc::precondition, "invalid major: " + v.front().detail);
    if (depth < 0) fail(errc::precondition, "depth must be nonnegative");
    if (depth > depth_cap)
        fail(errc::resource_limit, "depth " + std::to_string(depth) + " exceeds cap " +
                                       std::to_string(depth_cap));

    FiniteLamination base = major_to_lamination(m);
    FiniteLamination out;
    out.degree = m.degree;

    if (variant == LiftVariant::literal) {
        std::set<Chord<Angle>> chords;
        for (const auto& l : base.leaves) chords.emplace(l.a, l.b);
        for (const auto& c : lift_chords(std::move(chords), m.degree, depth))
            out.leaves.insert(Leaf(c.a, c.b));
        return out;
    }

    // eps-limit: perturb every vertex by -eps, lift, then drop the
    // infinitesimal part and discard chords that collapse in the limit
    std::set<Chord<EpsPoint>> chords;
    for (const auto& l : base.leaves)
        chords.emplace(EpsPoint::normalized(l.a.value(), Rat(-1)),
                       EpsPoint::normalized(l.b.value(), Rat(-1)));
    for (const auto& c : lift_chords(std::move(chords), m.degree, depth)) {
        Angle a(frac_mod1(c.a.r)), b(frac_mod1(c.b.r));
        if (a == b) continue;
        out.leaves.insert(Leaf(a, b));
    }
    return out;
}

InvarianceReport check_forward_invariant(const FiniteLamination& lam) {
    InvarianceReport report;
    for (const auto& l : lam.leaves) {
        Angle ia = tuple_map(l.a, lam.degree), ib = tuple_map(l.b, lam.degree);
        if (ia == ib) continue; // critical chord collapses
        Leaf image(ia, ib);
        if (!lam.contains(image)) report.missing.push_back({l, image});
    }
    return report;
}

FiniteLamination clean(const FiniteLamination& lam) {
    std::vector<Angle> pts;
    for (const auto& l : lam.leaves) {
        pts.push_back(l.a);
        pts.push_back(l.b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::map<Angle, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);

    std::vector<int> parent(pts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& l : lam.leaves) parent[find(index[l.a])] = find(index[l.b]);

    std::map<int, std::vector<Angle>> classes;
    for (size_t i = 0; i < pts.size(); ++i) classes[find(static_cast<int>(i))].push_back(pts[i]);

    FiniteLamination out;
    out.degree = lam.degree;
    std::vector<std::vector<Angle>> hulls;
    for (auto& [root, angles] : classes) {
        if (angles.size() < 2) continue;
        hulls.push_back(angles); // already sorted
        if (angles.size() == 2) {
            out.leaves.insert(Leaf(angles[0], angles[1]));
            continue;
        }
        for (size_t i = 0; i < angles.size(); ++i)
            out.leaves.insert(Leaf(angles[i], angles[(i + 1) % angles.size()]));
    }
    if (!out.crossings().empty())
        fail(errc::internal, "cleaning produced linked classes; input was not compatible");
    return out;
}

} // namespace lamina
