#include "lamina/json_io.hpp"
#include "lamina/render.hpp"
#include "lamina/torus.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace lamina;

std::string fixed9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

Rat rat_arg(const std::string& value, const char* flag) {
    try {
        return rat_from_string(value);
    } catch (const error& e) {
        fail(e.code(), std::string(flag) + ": " + e.what());
    }
}

Angle angle_arg(const std::string& value, const char* flag) {
    try {
        return angle_from_string(value);
    } catch (const error& e) {
        fail(e.code(), std::string(flag) + ": " + e.what());
    }
}

std::vector<Angle> parse_angle_list(const std::string& csv, const char* flag) {
    std::vector<Angle> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(angle_arg(item, flag));
    }
    return out;
}

LiftVariant parse_variant(const std::string& name) {
    if (name == "literal") return LiftVariant::literal;
    if (name == "eps-limit") return LiftVariant::eps_limit;
    fail(errc::domain, "--variant must be literal or eps-limit");
}

PrimitiveMajor load_major(const std::string& path) { return major_from_json(read_text_file(path)); }

FiniteLamination load_lamination(const std::string& path) {
    return lamination_from_json(read_text_file(path));
}

void emit(const std::string& out_path, const std::string& text) {
    write_text_file(out_path, text);
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for invariant laminations, primitive majors and core entropy"};
    app.require_subcommand(1);

    // ---- major ----------------------------------------------------------
    auto* major_cmd = app.add_subcommand("major", "primitive major operations");
    major_cmd->require_subcommand(1);

    int degree = 2;
    std::string starts_csv, in_path = "-", out_path = "-", in_a, in_b;
    std::uint64_t seed = 0;
    int resolution = 256;
    std::string bis_a, bis_theta = "0/1";

    auto* from_starts = major_cmd->add_subcommand("from-starts", "build the major with given starting points");
    from_starts->add_option("--degree", degree, "degree d >= 2")->required();
    from_starts->add_option("--starts", starts_csv, "comma-separated increasing angles")->required();
    from_starts->add_option("--out", out_path, "output path (default stdout)");
    from_starts->add_flag("--json", "emit JSON (always on; kept for symmetry)");
    from_starts->callback([&] {
        StartSequence s{parse_angle_list(starts_csv, "--starts")};
        emit(out_path, major_to_json(from_starting_points(s, degree)));
    });

    auto* validate_cmd = major_cmd->add_subcommand("validate", "check the invariants of a major");
    validate_cmd->add_option("--in", in_path, "major JSON (default stdin)");
    validate_cmd->callback([&] {
        auto violations = validate(load_major(in_path));
        if (violations.empty()) {
            std::cout << "valid\n";
            return;
        }
        for (const auto& v : violations) std::cout << "violation: " << v.detail << "\n";
        fail(errc::domain, std::to_string(violations.size()) + " invariant(s) violated");
    });

    auto* derive_cmd = major_cmd->add_subcommand("derive", "collapse the last leaf and drop the degree by one");
    derive_cmd->add_option("--in", in_path, "major JSON (default stdin)");
    derive_cmd->add_option("--out", out_path, "output path (default stdout)");
    derive_cmd->callback([&] { emit(out_path, major_to_json(derive(load_major(in_path)))); });

    auto* metric_cmd = major_cmd->add_subcommand("metric", "certified sup-difference distance between two majors");
    metric_cmd->add_option("--a", in_a, "first major JSON")->required();
    metric_cmd->add_option("--b", in_b, "second major JSON")->required();
    metric_cmd->add_option("--resolution", resolution, "grid points (default 256)");
    metric_cmd->callback([&] {
        MetricEstimate e = distance(load_major(in_a), load_major(in_b), resolution);
        std::cout << "value " << rat_to_string(e.value) << "\n"
                  << "error_bound " << rat_to_string(e.error_bound) << "\n";
    });

    auto* bisector_cmd = major_cmd->add_subcommand("bisector", "cubic major from the angle-bisector chart");
    bisector_cmd->add_option("--a", bis_a, "arc length a in (0,1/3)")->required();
    bisector_cmd->add_option("--theta", bis_theta, "bisector direction (default 0/1)");
    bisector_cmd->add_option("--out", out_path, "output path (default stdout)");
    bisector_cmd->callback([&] {
        emit(out_path,
             major_to_json(cubic_from_bisector(rat_arg(bis_a, "--a"), angle_arg(bis_theta, "--theta"))));
    });

    auto* random_cmd = major_cmd->add_subcommand("random", "seeded random generic major");
    random_cmd->add_option("--degree", degree, "degree d >= 2")->required();
    random_cmd->add_option("--seed", seed, "seed (default 0)");
    random_cmd->add_option("--out", out_path, "output path (default stdout)");
    random_cmd->callback([&] { emit(out_path, major_to_json(random_generic_major(degree, seed))); });

    // ---- lam ------------------------------------------------------------
    auto* lam_cmd = app.add_subcommand("lam", "finite lamination operations");
    lam_cmd->require_subcommand(1);

    std::string major_path, theta_str, variant_name = "literal";
    int depth = 1;

    auto* build_cmd = lam_cmd->add_subcommand("build", "backward-lift a major to the given depth");
    build_cmd->add_option("--major", major_path, "major JSON path");
    build_cmd->add_option("--theta", theta_str, "shortcut: quadratic major of theta");
    build_cmd->add_option("--depth", depth, "lift depth")->required();
    build_cmd->add_option("--variant", variant_name, "literal (default) or eps-limit");
    build_cmd->add_option("--out", out_path, "output path (default stdout)");
    build_cmd->callback([&] {
        PrimitiveMajor m = theta_str.empty() ? load_major(major_path.empty() ? "-" : major_path)
                                             : quadratic_major(angle_arg(theta_str, "--theta"));
        emit(out_path, lamination_to_json(backward_lift(m, depth, parse_variant(variant_name))));
    });

    auto* clean_cmd = lam_cmd->add_subcommand("clean", "close endpoint chains into convex hull boundaries");
    clean_cmd->add_option("--in", in_path, "lamination JSON (default stdin)");
    clean_cmd->add_option("--out", out_path, "output path (default stdout)");
    clean_cmd->callback([&] { emit(out_path, lamination_to_json(clean(load_lamination(in_path)))); });

    auto* check_cmd = lam_cmd->add_subcommand("check", "report leaves whose forward image is missing");
    check_cmd->add_option("--in", in_path, "lamination JSON (default stdin)");
    check_cmd->callback([&] {
        auto report = check_forward_invariant(load_lamination(in_path));
        std::cout << "missing_images " << report.missing.size() << "\n";
        for (const auto& v : report.missing)
            std::cout << v.leaf.str() << " -> " << v.image.str() << "\n";
    });

    auto* good_cmd = lam_cmd->add_subcommand("good-region", "exact rectangle decomposition of compatible chords");
    good_cmd->add_option("--in", in_path, "lamination JSON (default stdin)");
    good_cmd->add_option("--out", out_path, "output path (default stdout)");
    good_cmd->callback([&] { emit(out_path, rectangles_to_json(good_region(load_lamination(in_path)))); });

    // ---- entropy / sweep --------------------------------------------------
    auto* entropy_cmd = app.add_subcommand("entropy", "core entropy of one rational angle");
    entropy_cmd->add_option("--theta", theta_str, "angle p/q in (0,1)")->required();
    entropy_cmd->callback([&] { std::cout << fixed9(core_entropy(angle_arg(theta_str, "--theta"))) << "\n"; });

    auto* sweep_cmd = app.add_subcommand("sweep", "entropy table over all reduced angles up to a denominator");
    int max_den = 16, jobs = 1;
    sweep_cmd->add_option("--max-den", max_den, "largest denominator")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker threads (default 1)");
    sweep_cmd->add_option("--out", out_path, "output CSV path (default stdout)");
    sweep_cmd->callback([&] { emit(out_path, sweep_to_csv(sweep(max_den, jobs))); });

    // ---- omega / sep-leaves ----------------------------------------------
    auto* omega_cmd = app.add_subcommand("omega", "non-escaping refinement on the torus");
    int level = 0, growth_n = 0;
    omega_cmd->add_option("--theta", theta_str, "angle p/q")->required();
    omega_cmd->add_option("--level", level, "refinement level");
    omega_cmd->add_option("--growth", growth_n, "also print the growth-rate slope up to n_max");
    omega_cmd->add_option("--out", out_path, "write the rectangle JSON here");
    omega_cmd->callback([&] {
        Angle theta = angle_arg(theta_str, "--theta");
        OmegaLevel o = omega_level(theta, level);
        std::cout << "cells " << o.cells.size() << "\n"
                  << "area " << rat_to_string(o.cells.area()) << "\n";
        if (growth_n > 0)
            std::cout << "growth_rate " << fixed9(growth_rate_estimate(theta, growth_n)) << "\n";
        if (out_path != "-") emit(out_path, rectangles_to_json(o.cells));
    });

    auto* sep_cmd = app.add_subcommand("sep-leaves", "pre-major leaves separating or meeting the post-major set");
    bool do_check = false;
    sep_cmd->add_option("--theta", theta_str, "angle p/q")->required();
    sep_cmd->add_option("--depth", depth, "lift depth")->required();
    sep_cmd->add_flag("--check", do_check, "also check forward invariance");
    sep_cmd->add_option("--out", out_path, "write the lamination JSON here");
    sep_cmd->callback([&] {
        Angle theta = angle_arg(theta_str, "--theta");
        SeparatingSet s = separating_leaves(theta, depth);
        std::cout << "post_major";
        for (const auto& p : s.post) std::cout << " " << p.str();
        std::cout << "\nleaves " << s.leaves.leaves.size() << "\n";
        if (do_check) {
            auto violations = check_forward_invariance_S(theta, depth);
            std::cout << "violations " << violations.size() << "\n";
            for (const auto& v : violations)
                std::cout << v.leaf.str() << " -> " << v.image.str() << "\n";
        }
        if (out_path != "-") emit(out_path, lamination_to_json(s.leaves));
    });

    // ---- render -----------------------------------------------------------
    auto* render_cmd = app.add_subcommand("render", "deterministic SVG output");
    render_cmd->require_subcommand(1);
    std::string style_name = "hyperbolic", markers_csv;
    bool half = false;
    RenderConfig cfg;

    auto parse_cfg = [&] {
        if (style_name == "hyperbolic")
            cfg.style = GeodesicStyle::hyperbolic_arc;
        else if (style_name == "chord")
            cfg.style = GeodesicStyle::straight_chord;
        else
            fail(errc::domain, "--style must be hyperbolic or chord");
    };

    auto* disk_cmd = render_cmd->add_subcommand("disk", "Poincare-disk picture of a lamination or major");
    disk_cmd->add_option("--in", in_path, "lamination or major JSON (default stdin)");
    disk_cmd->add_option("--out", out_path, "SVG path (default stdout)");
    disk_cmd->add_option("--style", style_name, "hyperbolic (default) or chord");
    disk_cmd->callback([&] {
        parse_cfg();
        std::string text = read_text_file(in_path);
        if (text.find("\"classes\"") != std::string::npos)
            emit(out_path, render_disk(major_from_json(text), cfg));
        else
            emit(out_path, render_disk(lamination_from_json(text), cfg));
    });

    auto* torus_cmd = render_cmd->add_subcommand("torus", "unit-square plot of a rectangle set");
    torus_cmd->add_option("--in", in_path, "rectangle JSON (default stdin)");
    torus_cmd->add_option("--out", out_path, "SVG path (default stdout)");
    torus_cmd->add_option("--markers", markers_csv, "dots, e.g. 1/7:9/14,9/14:1/7");
    torus_cmd->callback([&] {
        std::vector<std::pair<Angle, Angle>> markers;
        std::istringstream in(markers_csv);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) fail(errc::domain, "marker format is x:y");
            markers.emplace_back(angle_arg(item.substr(0, colon), "--markers"),
                                 angle_arg(item.substr(colon + 1), "--markers"));
        }
        emit(out_path, render_torus(rectangles_from_json(read_text_file(in_path)), markers, cfg));
    });

    auto* plot_cmd = render_cmd->add_subcommand("plot", "scatter plot of a sweep CSV");
    plot_cmd->add_option("--in", in_path, "sweep CSV (default stdin)");
    plot_cmd->add_option("--out", out_path, "SVG path (default stdout)");
    plot_cmd->add_flag("--half", half, "restrict to theta in [0,1/2]");
    plot_cmd->callback([&] {
        emit(out_path, render_entropy_plot(sweep_from_csv(read_text_file(in_path)), cfg, half));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints the message or requested help text
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lamina::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
