#include "lamina/torus.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

using namespace lamina;

namespace {
Angle A(const std::string& s) { return angle_from_string(s); }
Leaf L(const std::string& a, const std::string& b) { return Leaf(A(a), A(b)); }
}

TEST_CASE("post-major sets") {
    auto as_set = [](const std::vector<Angle>& v) { return std::set<Angle>(v.begin(), v.end()); };
    CHECK(as_set(post_major(A("1/5"))) ==
          std::set<Angle>{A("3/5"), A("1/5"), A("2/5"), A("4/5")});
    CHECK(as_set(post_major(A("1/2"))) == std::set<Angle>{A("1/4"), A("1/2"), A("0/1")});
    CHECK(as_set(post_major(A("1/7"))) == std::set<Angle>{A("4/7"), A("1/7"), A("2/7")});
    CHECK_THROWS_AS(post_major(A("0/1")), error);
}

TEST_CASE("omega level zero is the closed good region of the major diameter") {
    for (const char* t : {"1/2", "1/5", "3/7"}) {
        OmegaLevel o = omega_level(A(t), 0);
        CHECK(o.cells.area() == Rat(1, 2));
        CHECK(o.cells.symmetric_under_swap());
    }
}

TEST_CASE("omega levels decrease and keep the diagonal") {
    for (const char* t : {"1/2", "1/5", "1/7"}) {
        auto levels = omega_levels(A(t), 7);
        for (size_t n = 1; n < levels.size(); ++n) {
            CHECK(levels[n - 1].cells.covers(levels[n].cells));
            CHECK(levels[n].cells.covers_diagonal());
            CHECK(levels[n].cells.interiors_disjoint());
        }
    }
}

TEST_CASE("omega membership matches brute-force orbits on a dyadic grid") {
    Angle theta = A("1/2");
    auto levels = omega_levels(theta, 5);
    const RectangleSet& omega0 = levels[0].cells;
    const int k = 64;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            // offset by half a pixel so no sample sits on a cell boundary
            Rat x(2 * i + 1, 2 * k), y(2 * j + 1, 2 * k);
            bool stays = true;
            Rat cx = x, cy = y;
            for (int n = 0; n <= 5 && stays; ++n) {
                stays = omega0.contains_point(cx, cy);
                cx = frac_mod1(cx * 2);
                cy = frac_mod1(cy * 2);
            }
            CHECK(levels[5].cells.contains_point(x, y) == stays);
        }
}

TEST_CASE("omega level respects the cap") {
    CHECK_THROWS_AS(omega_level(A("1/2"), 13), error);
    CHECK_THROWS_AS(omega_level(A("1/2"), -1), error);
}

TEST_CASE("growth rates approximate core entropy") {
    CHECK(std::abs(growth_rate_estimate(A("1/2"), 10) - std::log(2.0)) <
          0.1 * std::log(2.0));
    CHECK(std::abs(growth_rate_estimate(A("1/7"), 10)) <= 0.1);
}

TEST_CASE("separating leaves at depth zero and one") {
    SeparatingSet s = separating_leaves(A("1/5"), 0);
    CHECK(s.leaves.contains(L("1/10", "3/5")));

    // depth one for 1/2: both lifted leaves separate the post-major set
    SeparatingSet s2 = separating_leaves(A("1/2"), 1);
    std::set<Leaf> expected{L("1/4", "3/4"), L("1/8", "7/8"), L("3/8", "5/8")};
    CHECK(s2.leaves.leaves == expected);
}

TEST_CASE("separating leaves filter the backward lift and grow with depth") {
    for (const char* t : {"1/5", "3/7"}) {
        size_t prev = 0;
        for (int depth = 0; depth <= 5; ++depth) {
            SeparatingSet s = separating_leaves(A(t), depth);
            FiniteLamination pre = backward_lift(quadratic_major(A(t)), depth);
            for (const auto& l : s.leaves.leaves) CHECK(pre.leaves.count(l));
            CHECK(s.leaves.leaves.size() >= prev);
            prev = s.leaves.leaves.size();
        }
    }
}

TEST_CASE("separating set is forward invariant") {
    CHECK(check_forward_invariance_S(A("1/5"), 6).empty());
    CHECK(check_forward_invariance_S(A("1/2"), 6).empty());
    CHECK(check_forward_invariance_S(A("3/7"), 6).empty());
}

TEST_CASE("forward invariance holds for all small denominators at depth 4") {
    for (int q = 2; q <= 12; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(check_forward_invariance_S(make_angle(p, q), 4).empty());
        }
}
