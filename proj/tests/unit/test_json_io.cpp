#include "lamina/json_io.hpp"

#include <doctest.h>

using namespace lamina;

namespace {
Angle A(const std::string& s) { return angle_from_string(s); }
}

TEST_CASE("major JSON round trip in canonical form") {
    PrimitiveMajor m = from_starting_points({{A("7/78"), A("10/91")}}, 3);
    std::string text = major_to_json(m);
    CHECK(major_from_json(text) == m);
    // classes are sorted by least angle
    CHECK(text.find("7/78") < text.find("10/91"));
}

TEST_CASE("major JSON tolerates unsorted and unreduced input") {
    PrimitiveMajor m = major_from_json(
        R"({"degree": 2, "classes": [["2/4", "0/7"]]})");
    CHECK(m == canonical_major(2, {EquivalenceClass{{A("0/1"), A("1/2")}}}));
}

TEST_CASE("major JSON rejects malformed text") {
    CHECK_THROWS_AS(major_from_json("{"), error);
    CHECK_THROWS_AS(major_from_json(R"({"degree": 2})"), error);
    CHECK_THROWS_AS(major_from_json(R"({"degree": 2, "classes": [["1/0", "1/2"]]})"), error);
}

TEST_CASE("lamination JSON round trip") {
    FiniteLamination lam = backward_lift(
        canonical_major(2, {EquivalenceClass{{A("1/7"), A("9/14")}}}), 2);
    FiniteLamination back = lamination_from_json(lamination_to_json(lam));
    CHECK(back.degree == lam.degree);
    CHECK(back.leaves == lam.leaves);
}

TEST_CASE("rectangle JSON round trip preserves area") {
    RectangleSet g = good_region(major_to_lamination(
        canonical_major(2, {EquivalenceClass{{A("0/1"), A("1/2")}}})));
    RectangleSet back = rectangles_from_json(rectangles_to_json(g));
    CHECK(back.area() == g.area());
    CHECK(back.size() == g.size());
}

TEST_CASE("sweep CSV has the pinned header and round trips") {
    auto rows = sweep(5);
    std::string csv = sweep_to_csv(rows);
    CHECK(csv.rfind("theta_num,theta_den,rho,entropy,dimension\n", 0) == 0);
    auto back = sweep_from_csv(csv);
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].theta == rows[i].theta);
        CHECK(back[i].entropy == doctest::Approx(rows[i].entropy).epsilon(1e-9));
    }
}
