#include "lamina/major.hpp"

#include <algorithm>
#include <map>

namespace lamina {

namespace {

struct CircleLayout {
    std::vector<Angle> angles; // sorted class angles
    std::vector<int> owner;    // class index per angle
};

CircleLayout layout(const PrimitiveMajor& m) {
    CircleLayout cl;
    std::map<Angle, int> owner;
    for (size_t c = 0; c < m.classes.size(); ++c)
        for (const auto& a : m.classes[c].angles) owner[a] = static_cast<int>(c);
    for (const auto& [a, c] : owner) {
        cl.angles.push_back(a);
        cl.owner.push_back(c);
    }
    return cl;
}

} // namespace

QuotientGraph quotient_graph(const PrimitiveMajor& m) {
    if (auto v = validate(m); !v.empty())
        fail(errc::precondition, "invalid major: " + v.front().detail);
    CircleLayout cl = layout(m);
    QuotientGraph g;
    g.vertex_count = static_cast<int>(m.classes.size());
    const int n = static_cast<int>(cl.angles.size());
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        Rat len = cl.angles[j].value() - cl.angles[i].value();
        if (len <= 0) len += 1;
        g.edges.push_back({cl.owner[i], cl.owner[j], len, cl.angles[i], cl.angles[j]});
    }
    return g;
}

MetricEvaluator::MetricEvaluator(const PrimitiveMajor& m) {
    if (auto v = validate(m); !v.empty())
        fail(errc::precondition, "invalid major: " + v.front().detail);
    CircleLayout cl = layout(m);
    angles_ = std::move(cl.angles);
    owner_ = std::move(cl.owner);

    const int C = static_cast<int>(m.classes.size());
    const Rat inf(2); // everything on the circle is within distance 1/2
    dist_.assign(C, std::vector<Rat>(C, inf));
    for (int i = 0; i < C; ++i) dist_[i][i] = 0;
    const int n = static_cast<int>(angles_.size());
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        Rat len = angles_[j].value() - angles_[i].value();
        if (len <= 0) len += 1;
        int u = owner_[i], v = owner_[j];
        if (len < dist_[u][v]) dist_[u][v] = dist_[v][u] = len;
    }
    for (int k = 0; k < C; ++k)
        for (int i = 0; i < C; ++i)
            for (int j = 0; j < C; ++j) {
                Rat via = dist_[i][k] + dist_[k][j];
                if (via < dist_[i][j]) dist_[i][j] = via;
            }
}

MetricEvaluator::Point MetricEvaluator::locate(const Angle& x) const {
    const int n = static_cast<int>(angles_.size());
    // arc i runs from angles_[i] to angles_[(i+1) % n]
    auto it = std::upper_bound(angles_.begin(), angles_.end(), x);
    int i = (static_cast<int>(it - angles_.begin()) - 1 + n) % n;
    int j = (i + 1) % n;
    Rat du = x.value() - angles_[i].value();
    if (du < 0) du += 1;
    Rat dv = angles_[j].value() - x.value();
    if (dv < 0) dv += 1;
    return {i, owner_[i], owner_[j], du, dv};
}

Rat MetricEvaluator::eval(const Point& p, const Point& q) const {
    Rat best = p.du + dist_[p.u][q.u] + q.du;
    auto consider = [&](const Rat& c) {
        if (c < best) best = c;
    };
    consider(p.du + dist_[p.u][q.v] + q.dv);
    consider(p.dv + dist_[p.v][q.u] + q.du);
    consider(p.dv + dist_[p.v][q.v] + q.dv);
    if (p.arc == q.arc) {
        Rat direct = p.du - q.du;
        if (direct < 0) direct = -direct;
        consider(direct);
    }
    return best;
}

Rat met_eval(const PrimitiveMajor& m, const Angle& x, const Angle& y) {
    return MetricEvaluator(m)(x, y);
}

MetricEstimate distance(const PrimitiveMajor& m1, const PrimitiveMajor& m2, int resolution) {
    if (m1.degree != m2.degree)
        fail(errc::incompatible_majors, "majors have different degrees");
    if (resolution < 1) fail(errc::precondition, "resolution must be positive");

    MetricEvaluator e1(m1), e2(m2);
    std::vector<Angle> grid;
    for (const auto* m : {&m1, &m2})
        for (const auto& c : m->classes)
            for (const auto& a : c.angles) grid.push_back(a);
    for (int j = 0; j < resolution; ++j) grid.push_back(Angle(Int(j), Int(resolution)));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const size_t g = grid.size();
    std::vector<MetricEvaluator::Point> p1, p2;
    p1.reserve(g);
    p2.reserve(g);
    for (const auto& a : grid) {
        p1.push_back(e1.locate(a));
        p2.push_back(e2.locate(a));
    }

    Rat best(0);
    for (size_t i = 0; i < g; ++i)
        for (size_t j = i + 1; j < g; ++j) {
            Rat diff = e1.eval(p1[i], p1[j]) - e2.eval(p2[i], p2[j]);
            if (diff < 0) diff = -diff;
            if (diff > best) best = diff;
        }
    return {best, Rat(2, resolution)};
}

} // namespace lamina
