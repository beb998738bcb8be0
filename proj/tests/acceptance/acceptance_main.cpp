// Acceptance suite: end-to-end checks with pinned tolerances and runtime
// budgets. Prints one PASS/FAIL line per criterion; the exit status is the
// number of failures. Pass --update-golden to regenerate committed SVGs.

#include "lamina/json_io.hpp"
#include "lamina/render.hpp"
#include "lamina/torus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

using namespace lamina;
using Clock = std::chrono::steady_clock;

namespace {

Angle A(const std::string& s) { return angle_from_string(s); }

PrimitiveMajor leaves_major(int d, std::vector<std::pair<std::string, std::string>> leaves) {
    std::vector<EquivalenceClass> classes;
    for (const auto& [a, b] : leaves) classes.push_back({{A(a), A(b)}});
    return canonical_major(d, std::move(classes));
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string golden_dir;
bool update_golden = false;

Outcome check_golden(const std::string& name, const std::string& text) {
    std::string path = golden_dir + "/" + name;
    if (update_golden) {
        std::ofstream out(path, std::ios::binary);
        out << text;
        return {true, "golden updated (" + std::to_string(text.size()) + " bytes)"};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return {false, "missing golden " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text)
        return {false, "regenerated SVG differs from " + path};
    return {true, std::to_string(text.size()) + " bytes, byte-identical"};
}

Outcome worked_example() {
    auto t0 = Clock::now();
    double h = core_entropy(A("1/5"));
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (std::abs(h - 0.3331) >= 5e-4)
        return {false, "entropy(1/5) = " + std::to_string(h)};

    TransitionMatrix m = build_matrix(A("1/5"));
    auto sorted_cols = m.columns;
    for (auto& c : sorted_cols) std::sort(c.begin(), c.end());
    std::vector<std::vector<std::pair<int, int>>> expected{
        {{4, 1}}, {{0, 1}}, {{0, 1}, {1, 1}}, {{2, 1}}, {{1, 1}, {2, 1}}, {{1, 1}}};
    if (m.dimension != 6 || sorted_cols != expected)
        return {false, "transition matrix of 1/5 differs from the worked image vectors"};
    if (ms >= 10) return {false, "took " + std::to_string(ms) + " ms"};
    char buf[96];
    std::snprintf(buf, sizeof(buf), "entropy 1/5 = %.9f, 6 image vectors exact, %.2f ms", h, ms);
    return {true, buf};
}

Outcome oracle_values() {
    auto t0 = Clock::now();
    double h_half = core_entropy(A("1/2"));
    double ms1 = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    t0 = Clock::now();
    double h_seventh = core_entropy(A("1/7"));
    double ms2 = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (std::abs(h_half - std::log(2.0)) >= 1e-9)
        return {false, "entropy(1/2) off by " + std::to_string(h_half - std::log(2.0))};
    if (std::abs(h_seventh) >= 1e-9) return {false, "entropy(1/7) = " + std::to_string(h_seventh)};
    if (ms1 >= 10 || ms2 >= 10)
        return {false, "runtimes " + std::to_string(ms1) + " / " + std::to_string(ms2) + " ms"};
    return {true, "entropy(1/2) = log 2 and entropy(1/7) = 0 to 1e-9"};
}

Outcome exact_area_laws() {
    int majors = 0;
    for (int d = 2; d <= 6; ++d) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            PrimitiveMajor m = random_generic_major(d, seed);
            ++majors;
            if (good_region(major_to_lamination(m)).area() != Rat(1, d))
                return {false, "area(G(m)) != 1/" + std::to_string(d) + " at seed " +
                                   std::to_string(seed)};
            if (d == 2) {
                Rat want(1, 2);
                for (int i = 1; i <= 3; ++i) {
                    want /= 2;
                    if (good_region(backward_lift(m, i)).area() != want)
                        return {false, "area(G(b_" + std::to_string(i) + ")) != 1/2^" +
                                           std::to_string(i + 1)};
                }
            }
        }
    }
    return {true, std::to_string(majors) + " majors, all areas exact"};
}

Outcome parametrization_suite() {
    for (int d = 2; d <= 6; ++d)
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            StartSequence s = random_start_sequence(d, seed);
            PrimitiveMajor m = from_starting_points(s, d);
            if (!validate(m).empty())
                return {false, "invalid major at d=" + std::to_string(d) + " seed " +
                                   std::to_string(seed)};
            if (!(starting_points(m) == s))
                return {false, "round trip failed at d=" + std::to_string(d) + " seed " +
                                   std::to_string(seed)};
        }
    return {true, "5000 start sequences validated and round-tripped"};
}

Outcome backward_lift_correctness() {
    PrimitiveMajor m = leaves_major(2, {{"1/7", "9/14"}});
    FiniteLamination b1 = backward_lift(m, 1);
    std::set<Leaf> expected{Leaf(A("1/7"), A("9/14")), Leaf(A("1/14"), A("23/28")),
                            Leaf(A("9/28"), A("4/7"))};
    if (b1.leaves != expected) return {false, "depth-1 lift differs from the derived leaves"};
    for (int i = 0; i <= 8; ++i)
        if (!backward_lift(m, i).crossings().empty())
            return {false, "crossing at depth " + std::to_string(i)};
    return {true, "depth-1 leaves exact; depths 0..8 pairwise compatible"};
}

Outcome entropy_bounds_symmetry() {
    int tested = 0;
    for (int q = 2; q <= 64; ++q)
        for (int p = 1; 2 * p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            double h = core_entropy(make_angle(p, q));
            double h2 = core_entropy(make_angle(q - p, q));
            ++tested;
            if (h < 0 || h > std::log(2.0) + 1e-12)
                return {false, "entropy out of range at " + std::to_string(p) + "/" +
                                   std::to_string(q)};
            if (std::abs(h - h2) >= 1e-9)
                return {false, "symmetry gap " + std::to_string(std::abs(h - h2)) + " at " +
                                   std::to_string(p) + "/" + std::to_string(q)};
        }
    return {true, std::to_string(tested) + " conjugate pairs inside [0, log 2]"};
}

Outcome spectral_oracle() {
    int tested = 0;
    double worst = 0;
    for (int q = 2; q <= 16; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            TransitionMatrix m = build_matrix(make_angle(p, q));
            double power = spectral_radius(m);
            double exact = exact_spectral_radius(m);
            worst = std::max(worst, std::abs(power - exact));
            ++tested;
            if (std::abs(power - exact) >= 1e-9)
                return {false, "gap " + std::to_string(std::abs(power - exact)) + " at " +
                                   std::to_string(p) + "/" + std::to_string(q)};
        }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d matrices, worst gap %.2e", tested, worst);
    return {true, buf};
}

Outcome growth_rate_crosscheck() {
    for (const char* t : {"1/2", "1/5", "3/7"}) {
        double slope = growth_rate_estimate(A(t), 12);
        double h = core_entropy(A(t));
        if (std::abs(slope - h) > 0.15 * h)
            return {false, std::string("theta=") + t + ": slope " + std::to_string(slope) +
                               " vs entropy " + std::to_string(h)};
    }
    double slope = growth_rate_estimate(A("1/7"), 12);
    if (std::abs(slope) > 0.1) return {false, "theta=1/7: slope " + std::to_string(slope)};
    return {true, "slopes within 15% relative (0.1 absolute for 1/7)"};
}

Outcome forward_invariance() {
    int tested = 0;
    for (int q = 2; q <= 20; ++q)
        for (int p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto violations = check_forward_invariance_S(make_angle(p, q), 6);
            ++tested;
            if (!violations.empty())
                return {false, std::to_string(violations.size()) + " violations at " +
                                   std::to_string(p) + "/" + std::to_string(q)};
        }
    return {true, std::to_string(tested) + " angles, zero violations at depth 6"};
}

Outcome figure_reproduction() {
    auto t0 = Clock::now();
    auto rows = sweep(100);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= 60) return {false, "sweep(100) took " + std::to_string(secs) + " s"};
    std::string svg = render_entropy_plot(rows, RenderConfig{}, /*half_range=*/true);
    Outcome g = check_golden("entropy_plot_half_den100.svg", svg);
    if (!g.pass) return g;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu rows in %.1f s; %s", rows.size(), secs, g.detail.c_str());
    return {true, buf};
}

Outcome metric_suite() {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PrimitiveMajor a = random_generic_major(3, 3 * seed);
        PrimitiveMajor b = random_generic_major(3, 3 * seed + 1);
        PrimitiveMajor c = random_generic_major(3, 3 * seed + 2);
        MetricEstimate ab = distance(a, b, 32);
        if (!(distance(b, a, 32).value == ab.value))
            return {false, "asymmetry at seed " + std::to_string(seed)};
        MetricEstimate ac = distance(a, c, 32), bc = distance(b, c, 32);
        if (!(ac.value <= ab.value + bc.value + 2 * ab.error_bound))
            return {false, "triangle gap at seed " + std::to_string(seed)};
        if (!(distance(a, a, 32).value == Rat(0)))
            return {false, "nonzero self distance at seed " + std::to_string(seed)};
    }
    MetricEstimate e =
        distance(leaves_major(2, {{"0/1", "1/2"}}), leaves_major(2, {{"1/4", "3/4"}}), 1024);
    if (!(e.value == Rat(1, 2)))
        return {false, "md of the two diameters = " + rat_to_string(e.value)};
    return {true, "200 cubic triples pass; diameter distance exactly 1/2 at resolution 1024"};
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) golden_dir = argv[1];
    for (int i = 2; i < argc; ++i)
        if (std::string(argv[i]) == "--update-golden") update_golden = true;

    std::vector<Criterion> criteria{
        {"worked-example-1/5", 1, worked_example},
        {"oracle-values-1/2-1/7", 1, oracle_values},
        {"exact-area-laws", 30, exact_area_laws},
        {"parametrization-suite", 60, parametrization_suite},
        {"backward-lift-depth1", 5, backward_lift_correctness},
        {"entropy-bounds-symmetry", 60, entropy_bounds_symmetry},
        {"spectral-radius-oracle", 30, spectral_oracle},
        {"growth-rate-crosscheck", 120, growth_rate_crosscheck},
        {"forward-invariance-S", 60, forward_invariance},
        {"figure-reproduction", 90, figure_reproduction},
        {"metric-suite", 60, metric_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (o.pass && secs >= c.budget_seconds) {
            o.pass = false;
            o.detail += " [over budget]";
        }
        std::printf("%s: %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
