#include "lamina/entropy.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace lamina;

namespace {

Angle A(const std::string& s) { return angle_from_string(s); }
Leaf P(const std::string& a, const std::string& b) { return Leaf(A(a), A(b)); }

// columns as (row, mult) lists, sorted by row
std::vector<std::vector<std::pair<int, int>>> columns_of(const TransitionMatrix& m) {
    auto cols = m.columns;
    for (auto& c : cols) std::sort(c.begin(), c.end());
    return cols;
}

TransitionMatrix from_dense(const std::vector<std::vector<int>>& rows) {
    TransitionMatrix m;
    m.dimension = static_cast<int>(rows.size());
    m.columns.resize(m.dimension);
    for (int i = 0; i < m.dimension; ++i)
        for (int j = 0; j < m.dimension; ++j)
            if (rows[i][j] != 0) m.columns[j].emplace_back(i, rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("pair basis for 1/5 matches the worked example") {
    PairBasis b = pair_basis(A("1/5"));
    CHECK(b.points == std::vector<Angle>{A("1/5"), A("2/5"), A("3/5"), A("4/5")});
    CHECK(b.pairs == std::vector<Leaf>{P("1/5", "2/5"), P("1/5", "3/5"), P("1/5", "4/5"),
                                       P("2/5", "3/5"), P("2/5", "4/5"), P("3/5", "4/5")});
    CHECK(b.division_lo == A("1/10"));
    CHECK(b.division_hi == A("3/5"));
}

TEST_CASE("pair basis for 1/2 and 1/7") {
    PairBasis half = pair_basis(A("1/2"));
    CHECK(half.pairs == std::vector<Leaf>{P("0/1", "1/4"), P("0/1", "1/2"), P("1/4", "1/2")});

    PairBasis seventh = pair_basis(A("1/7"));
    CHECK(seventh.pairs == std::vector<Leaf>{P("1/7", "2/7"), P("1/7", "4/7"), P("2/7", "4/7")});

    CHECK_THROWS_AS(pair_basis(A("0/1")), error);
}

TEST_CASE("transition matrix for 1/5 reproduces the six image vectors") {
    TransitionMatrix m = build_matrix(A("1/5"));
    REQUIRE(m.dimension == 6);
    using Col = std::vector<std::pair<int, int>>;
    // basis order: 0:{1/5,2/5} 1:{1/5,3/5} 2:{1/5,4/5} 3:{2/5,3/5} 4:{2/5,4/5} 5:{3/5,4/5}
    CHECK(columns_of(m) == std::vector<Col>{
                               {{4, 1}},         // {1/5,2/5} -> {2/5,4/5}
                               {{0, 1}},         // {1/5,3/5} -> {1/5,2/5}
                               {{0, 1}, {1, 1}}, // {1/5,4/5} -> {1/5,2/5} + {1/5,3/5}
                               {{2, 1}},         // {2/5,3/5} -> {1/5,4/5}
                               {{1, 1}, {2, 1}}, // {2/5,4/5} -> {4/5,1/5} + {1/5,3/5}
                               {{1, 1}},         // {3/5,4/5} -> {1/5,3/5}
                           });
}

TEST_CASE("transition matrix for 1/2 and 1/7") {
    TransitionMatrix half = build_matrix(A("1/2"));
    using Col = std::vector<std::pair<int, int>>;
    // basis order: 0:{0,1/4} 1:{0,1/2} 2:{1/4,1/2}
    CHECK(columns_of(half) == std::vector<Col>{{{1, 1}}, {{1, 2}}, {{1, 1}}});

    TransitionMatrix seventh = build_matrix(A("1/7"));
    // basis order: 0:{1/7,2/7} 1:{1/7,4/7} 2:{2/7,4/7} -- a permutation
    CHECK(columns_of(seventh) == std::vector<Col>{{{2, 1}}, {{0, 1}}, {{1, 1}}});
}

TEST_CASE("column sums are 1 or 2, and 2 exactly on straddling pairs") {
    for (int q = 2; q <= 25; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            PairBasis b = pair_basis(make_angle(p, q));
            TransitionMatrix m = build_matrix(b);
            auto sums = m.column_sums();
            const Rat lo = b.division_lo.value(), hi = b.division_hi.value();
            for (int j = 0; j < m.dimension; ++j) {
                CHECK((sums[j] == 1 || sums[j] == 2));
                const Leaf& pr = b.pairs[j];
                bool a_low = lo < pr.a.value() && pr.a.value() < hi;
                bool a_up = pr.a.value() < lo || pr.a.value() > hi;
                bool b_low = lo < pr.b.value() && pr.b.value() < hi;
                bool b_up = pr.b.value() < lo || pr.b.value() > hi;
                bool straddles = (a_low && b_up) || (a_up && b_low);
                CHECK((sums[j] == 2) == straddles);
            }
        }
}

TEST_CASE("spectral radius on simple matrices") {
    CHECK(spectral_radius(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(spectral_radius(from_dense({{2}})) == doctest::Approx(2.0).epsilon(1e-12));
    // periodic permutation block: the identity shift must still converge
    CHECK(spectral_radius(from_dense({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) ==
          doctest::Approx(1.0).epsilon(1e-11));
    // reducible: radius comes from the lower block
    CHECK(spectral_radius(from_dense({{0, 1}, {0, 2}})) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK_THROWS_AS(spectral_radius(TransitionMatrix{}), error);
}

TEST_CASE("worked entropy values") {
    CHECK(std::abs(std::log(spectral_radius(build_matrix(A("1/5")))) - 0.3331) < 5e-4);
    CHECK(std::abs(core_entropy(A("1/5")) - 0.3331) < 5e-4);
    CHECK(std::abs(core_entropy(A("1/2")) - std::log(2.0)) < 1e-9);
    CHECK(std::abs(core_entropy(A("1/7"))) < 1e-9);
    CHECK_THROWS_AS(core_entropy(A("0/1")), error);
}

TEST_CASE("golden-mean angle") {
    double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(core_entropy(A("3/7")) - std::log(phi)) < 1e-9);
}

TEST_CASE("hausdorff dimension rescales entropy") {
    CHECK(std::abs(hausdorff_dimension(A("1/2")) - 1.0) < 1e-8);
    CHECK(std::abs(hausdorff_dimension(A("1/7"))) < 1e-8);
    CHECK(std::abs(hausdorff_dimension(A("1/5")) - 0.4806) < 1e-3);
}

TEST_CASE("entropy bounds and conjugation symmetry up to q = 32") {
    for (int q = 2; q <= 32; ++q)
        for (int p = 1; 2 * p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            double h = core_entropy(make_angle(p, q));
            double h2 = core_entropy(make_angle(q - p, q));
            CHECK(h >= 0.0);
            CHECK(h <= std::log(2.0) + 1e-12);
            CHECK(std::abs(h - h2) < 1e-9);
        }
}

TEST_CASE("power iteration matches the exact characteristic root, q <= 12") {
    for (int q = 2; q <= 12; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            TransitionMatrix m = build_matrix(make_angle(p, q));
            SpectralResult r = spectral_radius_detailed(m);
            CHECK(r.converged);
            CHECK(std::abs(r.value - exact_spectral_radius(m)) < 1e-9);
        }
}

TEST_CASE("sweep enumerates reduced fractions in (q, p) order") {
    auto rows = sweep(3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].theta == A("1/2"));
    CHECK(rows[1].theta == A("1/3"));
    CHECK(rows[2].theta == A("2/3"));

    auto rows10 = sweep(10);
    size_t expected = 0;
    for (int q = 2; q <= 10; ++q)
        for (int p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) ++expected;
    CHECK(rows10.size() == expected);

    bool found = false;
    for (const auto& r : sweep(15))
        if (r.theta == A("1/5")) {
            found = true;
            CHECK(std::abs(r.entropy - 0.3331) < 5e-4);
        }
    CHECK(found);
}

TEST_CASE("sweep is schedule independent") {
    auto serial = sweep(12, 1);
    auto parallel = sweep(12, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].theta == parallel[i].theta);
        CHECK(serial[i].rho == parallel[i].rho);
        CHECK(serial[i].entropy == parallel[i].entropy);
    }
}
