#pragma once

#include "lamina/angle.hpp"

#include <set>
#include <vector>

namespace lamina {

/// Chord of the disk joining two distinct circle points, stored with a < b.
struct Leaf {
    Angle a, b;

    Leaf() = default;
    Leaf(const Angle& x, const Angle& y);

    bool operator==(const Leaf& o) const { return a == o.a && b == o.b; }
    auto operator<=>(const Leaf& o) const {
        if (auto c = a <=> o.a; c != 0) return c;
        return b <=> o.b;
    }

    std::string str() const { return "{" + a.str() + ", " + b.str() + "}"; }
};

/// True iff the two chords cross in the open disk. Chords sharing an
/// endpoint do not cross.
bool leaves_cross(const Leaf& l1, const Leaf& l2);

/// A finite set of pairwise compatible chords under the degree-d dynamics.
struct FiniteLamination {
    int degree = 2;
    std::set<Leaf> leaves;

    bool contains(const Leaf& l) const { return leaves.count(l) != 0; }
    /// Pairs of leaves that cross; empty iff this is a lamination.
    std::vector<std::pair<Leaf, Leaf>> crossings() const;
};

} // namespace lamina
