#include "lamina/major.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace lamina {

namespace {

std::vector<Leaf> hull_edges(const EquivalenceClass& cls) {
    auto a = cls.angles;
    std::sort(a.begin(), a.end());
    std::vector<Leaf> edges;
    if (a.size() < 2) return edges;
    if (a.size() == 2) {
        edges.emplace_back(a[0], a[1]);
        return edges;
    }
    for (size_t i = 0; i < a.size(); ++i) edges.emplace_back(a[i], a[(i + 1) % a.size()]);
    return edges;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Angle arc_midpoint(const Angle& a, const Angle& b) {
    Rat hi = b.value() <= a.value() ? b.value() + 1 : b.value();
    return Angle((a.value() + hi) / 2);
}

} // namespace

bool PrimitiveMajor::generic() const {
    for (const auto& c : classes)
        if (c.angles.size() != 2) return false;
    return true;
}

PrimitiveMajor canonical_major(int degree, std::vector<EquivalenceClass> classes) {
    for (auto& c : classes) std::sort(c.angles.begin(), c.angles.end());
    std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
        return a.angles < b.angles;
    });
    return PrimitiveMajor{degree, std::move(classes)};
}

FiniteLamination major_to_lamination(const PrimitiveMajor& m) {
    FiniteLamination lam;
    lam.degree = m.degree;
    for (const auto& c : m.classes)
        for (const auto& e : hull_edges(c)) lam.leaves.insert(e);
    return lam;
}

std::vector<Violation> validate(const PrimitiveMajor& m) {
    std::vector<Violation> out;
    if (m.degree < 2) {
        out.push_back({violation_kind::bad_degree, "degree must be at least 2"});
        return out;
    }

    std::vector<Angle> all;
    for (const auto& c : m.classes) {
        if (c.angles.size() < 2)
            out.push_back({violation_kind::class_too_small,
                           "class needs at least 2 angles, got " + std::to_string(c.angles.size())});
        for (const auto& a : c.angles) all.push_back(a);
        for (size_t i = 1; i < c.angles.size(); ++i)
            if (tuple_map(c.angles[i], m.degree) != tuple_map(c.angles[0], m.degree))
                out.push_back({violation_kind::image_mismatch,
                               "angles " + c.angles[0].str() + " and " + c.angles[i].str() +
                                   " have different images under the " +
                                   std::to_string(m.degree) + "-tupling map"});
    }
    std::sort(all.begin(), all.end());
    for (size_t i = 1; i < all.size(); ++i)
        if (all[i] == all[i - 1])
            out.push_back({violation_kind::duplicate_angle, "angle " + all[i].str() + " repeated"});

    int total_criticality = 0;
    for (const auto& c : m.classes) total_criticality += c.criticality();
    if (total_criticality != m.degree - 1)
        out.push_back({violation_kind::criticality_sum,
                       "total criticality " + std::to_string(total_criticality) + " != " +
                           std::to_string(m.degree - 1)});

    bool crossing = false;
    for (size_t i = 0; i < m.classes.size() && !crossing; ++i)
        for (size_t j = i + 1; j < m.classes.size() && !crossing; ++j)
            for (const auto& e1 : hull_edges(m.classes[i]))
                for (const auto& e2 : hull_edges(m.classes[j]))
                    if (leaves_cross(e1, e2)) {
                        out.push_back({violation_kind::linked_classes,
                                       "classes linked: " + e1.str() + " crosses " + e2.str()});
                        crossing = true;
                        break;
                    }

    // region measures only make sense for an unlinked configuration
    if (!crossing && !all.empty() && out.empty()) {
        std::vector<Leaf> edges;
        for (const auto& c : m.classes)
            for (const auto& e : hull_edges(c)) edges.push_back(e);

        int n = static_cast<int>(all.size());
        std::vector<Angle> mids(n);
        std::vector<Rat> lengths(n);
        for (int i = 0; i < n; ++i) {
            const Angle& lo = all[i];
            const Angle& hi = all[(i + 1) % n];
            mids[i] = arc_midpoint(lo, hi);
            Rat len = hi.value() - lo.value();
            if (len <= 0) len += 1;
            lengths[i] = len;
        }
        DisjointSet regions(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Leaf chord(mids[i], mids[j]);
                bool blocked = false;
                for (const auto& e : edges)
                    if (leaves_cross(chord, e)) {
                        blocked = true;
                        break;
                    }
                if (!blocked) regions.unite(i, j);
            }
        std::map<int, Rat> measure;
        for (int i = 0; i < n; ++i) measure[regions.find(i)] += lengths[i];
        Rat want(1, m.degree);
        for (const auto& [root, mu] : measure)
            if (mu != want)
                out.push_back({violation_kind::region_measure,
                               "region through " + mids[root].str() + " has boundary measure " +
                                   rat_to_string(mu) + " != 1/" + std::to_string(m.degree)});
    }
    return out;
}

bool is_valid(const PrimitiveMajor& m) { return validate(m).empty(); }

void check_start_sequence(const StartSequence& s, int degree) {
    if (degree < 2) fail(errc::precondition, "degree must be at least 2");
    if (static_cast<int>(s.starts.size()) != degree - 1)
        fail(errc::precondition, "need " + std::to_string(degree - 1) + " starting points, got " +
                                     std::to_string(s.starts.size()));
    for (size_t i = 0; i < s.starts.size(); ++i) {
        if (i > 0 && !(s.starts[i - 1] < s.starts[i]))
            fail(errc::precondition, "starting points must be strictly increasing");
        if (!(s.starts[i].value() < Rat(static_cast<int>(i) + 1, degree)))
            fail(errc::precondition, "starting point " + s.starts[i].str() + " violates s_" +
                                         std::to_string(i + 1) + " < " + std::to_string(i + 1) +
                                         "/" + std::to_string(degree));
    }
}

PrimitiveMajor from_starting_points(const StartSequence& s, int degree) {
    check_start_sequence(s, degree);
    const int n = degree - 1;
    const Rat span(1, degree);

    // spans built so far, from the last leaf backwards; they form a laminar
    // family inside (s_i, 1)
    std::vector<std::pair<Rat, Rat>> used;
    std::vector<Leaf> leaves;
    for (int i = n - 1; i >= 0; --i) {
        Rat start = s.starts[i].value();
        std::vector<std::pair<Rat, Rat>> merged(used);
        std::sort(merged.begin(), merged.end());
        // coalesce into disjoint components
        std::vector<std::pair<Rat, Rat>> comps;
        for (const auto& iv : merged) {
            if (!comps.empty() && iv.first <= comps.back().second)
                comps.back().second = std::max(comps.back().second, iv.second);
            else
                comps.push_back(iv);
        }
        Rat pos = start, need = span;
        for (const auto& [a, b] : comps) {
            if (b <= pos) continue;
            if (a > pos) {
                Rat gap = a - pos;
                if (need <= gap) break;
                need -= gap;
            }
            pos = std::max(pos, b);
        }
        Rat terminal = pos + need;
        if (!(terminal < 1)) fail(errc::internal, "terminal point escaped the circle");
        used.emplace_back(start, terminal);
        leaves.emplace_back(Angle(start), Angle(terminal));
    }

    // merge leaves sharing endpoints into polygon classes
    DisjointSet ds(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Leaf &li = leaves[i], &lj = leaves[j];
            if (li.a == lj.a || li.a == lj.b || li.b == lj.a || li.b == lj.b) ds.unite(i, j);
        }
    std::map<int, std::vector<Angle>> groups;
    for (int i = 0; i < n; ++i) {
        groups[ds.find(i)].push_back(leaves[i].a);
        groups[ds.find(i)].push_back(leaves[i].b);
    }
    std::vector<EquivalenceClass> classes;
    for (auto& [root, angles] : groups) {
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
        classes.push_back({std::move(angles)});
    }
    return canonical_major(degree, std::move(classes));
}

StartSequence normalize_starts(const std::vector<Angle>& points, int degree) {
    if (degree < 2 || static_cast<int>(points.size()) != degree - 1)
        fail(errc::precondition, "need exactly " + std::to_string(degree - 1) + " points");
    std::vector<Rat> x;
    x.reserve(points.size());
    for (const auto& p : points) x.push_back(p.value());

    Int bound = 1;
    for (const auto& v : x) bound += (numerator(v) * degree + denominator(v) - 1) / denominator(v);

    for (Int iter = 0; iter <= bound; ++iter) {
        std::sort(x.begin(), x.end());
        for (size_t i = 1; i < x.size(); ++i)
            if (x[i] == x[i - 1])
                fail(errc::degenerate_input,
                     "points collided at " + rat_to_string(x[i]) + " while normalizing");
        bool changed = false;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] >= Rat(static_cast<int>(i) + 1, degree)) {
                x[i] -= Rat(1, degree);
                changed = true;
            }
        if (!changed) {
            StartSequence s;
            for (const auto& v : x) s.starts.push_back(Angle(v));
            return s;
        }
    }
    fail(errc::internal, "normalization failed to stabilize within its bound");
}

StartSequence starting_points(const PrimitiveMajor& major) {
    if (!major.generic())
        fail(errc::unsupported_shape, "starting points are defined for generic majors only");
    const PrimitiveMajor m = canonical_major(major.degree, major.classes);
    std::vector<Angle> s;
    for (const auto& c : m.classes) s.push_back(c.angles[0]); // lesser endpoint
    std::sort(s.begin(), s.end());
    return StartSequence{std::move(s)};
}

PrimitiveMajor derive(const PrimitiveMajor& major) {
    if (major.degree == 2) fail(errc::domain, "a quadratic major cannot be derived");
    if (!major.generic()) fail(errc::unsupported_shape, "derive is defined for generic majors only");
    const PrimitiveMajor m = canonical_major(major.degree, major.classes);
    const int d = m.degree;

    // leaf with the largest starting point
    size_t last = 0;
    for (size_t i = 1; i < m.classes.size(); ++i)
        if (m.classes[i].angles[0] > m.classes[last].angles[0]) last = i;
    const Rat S = m.classes[last].angles[0].value();
    const Rat T = m.classes[last].angles[1].value();
    if (T - S != Rat(1, d))
        fail(errc::precondition, "last leaf does not span 1/" + std::to_string(d));

    const Rat stretch(d, d - 1);
    auto remap = [&](const Rat& x) -> Rat {
        // measure of [0,x] outside the collapsed span, stretched
        Rat cut = x <= S ? Rat(0) : std::min(x, T) - S;
        return (x - cut) * stretch;
    };

    std::vector<EquivalenceClass> classes;
    for (size_t i = 0; i < m.classes.size(); ++i) {
        if (i == last) continue;
        EquivalenceClass nc;
        for (const auto& a : m.classes[i].angles) nc.angles.push_back(Angle(remap(a.value())));
        classes.push_back(std::move(nc));
    }
    return canonical_major(d - 1, std::move(classes));
}

PrimitiveMajor cubic_from_bisector(const Rat& a, const Angle& theta) {
    if (!(a > 0 && a < Rat(1, 3)))
        fail(errc::domain, "bisector parameter a must lie strictly between 0 and 1/3");
    const Rat t = theta.value(), third(1, 3);
    Angle p1(t + a / 2), q1(t + a / 2 + third);
    Angle p2(t - a / 2 - third), q2(t - a / 2);
    return canonical_major(3, {EquivalenceClass{{p1, q1}}, EquivalenceClass{{p2, q2}}});
}

StartSequence random_start_sequence(int degree, std::uint64_t seed) {
    if (degree < 2) fail(errc::precondition, "degree must be at least 2");
    std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(degree));
    auto draw = [&](std::uint64_t n) { return eng() % n; };
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Angle> pts;
        for (int i = 0; i + 1 < degree; ++i) {
            Int q = 2 + Int(draw(511));
            pts.push_back(Angle(Int(draw(512)), q));
        }
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) continue;
        try {
            StartSequence s = normalize_starts(pts, degree);
            if (from_starting_points(s, degree).generic()) return s;
        } catch (const error& e) {
            if (e.code() != errc::degenerate_input) throw;
        }
    }
    fail(errc::internal, "random draw failed to produce a generic start sequence");
}

PrimitiveMajor random_generic_major(int degree, std::uint64_t seed) {
    return from_starting_points(random_start_sequence(degree, seed), degree);
}

} // namespace lamina
