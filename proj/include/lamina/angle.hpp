#pragma once

#include "lamina/core.hpp"

#include <compare>
#include <vector>

namespace lamina {

/// A point of the circle R/Z held as an exact reduced fraction in [0,1).
/// Angles are measured in turns; all set-membership logic in the library
/// relies on this representation being canonical.
class Angle {
  public:
    Angle() : v_(0) {}
    explicit Angle(const Rat& v) : v_(frac_mod1(v)) {}
    Angle(const Int& p, const Int& q);

    const Rat& value() const { return v_; }
    const Int& numerator() const { return v_.num(); }
    const Int& denominator() const { return v_.den(); }

    bool operator==(const Angle& o) const { return v_ == o.v_; }
    auto operator<=>(const Angle& o) const { return v_ < o.v_   ? std::strong_ordering::less
                                                  : v_ == o.v_ ? std::strong_ordering::equal
                                                               : std::strong_ordering::greater; }

    std::string str() const;

  private:
    Rat v_; // reduced, 0 <= v_ < 1
};

/// Forward orbit of an angle under the d-tupling map, up to first repetition.
struct OrbitInfo {
    int preperiod = 0;
    int period = 0;
    std::vector<Angle> points; // the preperiod + period distinct points, in visit order
};

Angle make_angle(const Int& p, const Int& q);
Angle angle_from_string(const std::string& s);

/// x -> d*x mod 1, the angle d-tupling map.
Angle tuple_map(const Angle& x, int degree);

OrbitInfo orbit(const Angle& x, int degree);

/// The preferred half preimage of theta under doubling: the periodic angle
/// among theta/2 and (theta+1)/2 when one exists, otherwise theta/2.
Angle preferred_half_preimage(const Angle& theta);

/// True iff x lies strictly inside the arc swept counterclockwise from a to b.
/// For a == b the arc is the full circle minus the point a.
bool cyclic_between(const Angle& a, const Angle& x, const Angle& b);

/// Length of the shorter of the two arcs joining x and y, in [0, 1/2].
Rat arc_distance(const Angle& x, const Angle& y);

} // namespace lamina
