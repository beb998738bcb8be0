#include "lamina/leaf.hpp"

namespace lamina {

Leaf::Leaf(const Angle& x, const Angle& y) {
    if (x == y) fail(errc::degenerate_input, "leaf endpoints must be distinct: " + x.str());
    if (x < y) {
        a = x;
        b = y;
    } else {
        a = y;
        b = x;
    }
}

bool leaves_cross(const Leaf& l1, const Leaf& l2) {
    if (l1.a == l2.a || l1.a == l2.b || l1.b == l2.a || l1.b == l2.b) return false;
    // crossing <=> exactly one endpoint of l2 lies inside the arc (l1.a, l1.b)
    bool a_in = l1.a < l2.a && l2.a < l1.b;
    bool b_in = l1.a < l2.b && l2.b < l1.b;
    return a_in != b_in;
}

std::vector<std::pair<Leaf, Leaf>> FiniteLamination::crossings() const {
    std::vector<std::pair<Leaf, Leaf>> out;
    std::vector<Leaf> v(leaves.begin(), leaves.end());
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (leaves_cross(v[i], v[j])) out.emplace_back(v[i], v[j]);
    return out;
}

} // namespace lamina
