#include "lamina/angle.hpp"

#include <map>

namespace lamina {

std::string rat_to_string(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&] { fail(errc::io, "malformed fraction '" + s + "', expected p/q"); };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) fail(errc::invalid_denominator, "zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rat(); // unreachable
}

Angle::Angle(const Int& p, const Int& q) {
    if (q == 0) fail(errc::invalid_denominator, "angle denominator must be nonzero");
    v_ = frac_mod1(Rat(p, q));
}

std::string Angle::str() const { return rat_to_string(v_); }

Angle make_angle(const Int& p, const Int& q) { return Angle(p, q); }

Angle angle_from_string(const std::string& s) { return Angle(rat_from_string(s)); }

Angle tuple_map(const Angle& x, int degree) { return Angle(x.value() * degree); }

OrbitInfo orbit(const Angle& x, int degree) {
    OrbitInfo info;
    std::map<Angle, int> seen;
    Angle cur = x;
    while (!seen.count(cur)) {
        seen.emplace(cur, static_cast<int>(info.points.size()));
        info.points.push_back(cur);
        cur = tuple_map(cur, degree);
    }
    info.preperiod = seen.at(cur);
    info.period = static_cast<int>(info.points.size()) - info.preperiod;
    return info;
}

Angle preferred_half_preimage(const Angle& theta) {
    if (theta.value() == 0) fail(errc::domain, "angle 0 has no preferred half preimage");
    Angle lower(theta.value() / 2);
    Angle upper((theta.value() + 1) / 2);
    // periodic under doubling <=> odd denominator
    if (upper.denominator() % 2 != 0) return upper;
    if (lower.denominator() % 2 != 0) return lower;
    return lower;
}

bool cyclic_between(const Angle& a, const Angle& x, const Angle& b) {
    if (a == b) return !(x == a);
    if (a < b) return a < x && x < b;
    return x > a || x < b; // arc wraps through 0
}

Rat arc_distance(const Angle& x, const Angle& y) {
    Rat d = x.value() - y.value();
    if (d < 0) d = -d;
    return d <= Rat(1, 2) ? d : 1 - d;
}

} // namespace lamina
