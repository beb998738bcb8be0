#include "lamina/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lamina {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.6931471805599453;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    // avoid the negative-zero artifact so output is stable
    std::string s(buf);
    return s == "-0.0000" ? "0.0000" : s;
}

struct Palette {
    const char* circle;
    const char* leaf;
    const char* fill;
    const char* rect;
    const char* diagonal;
    const char* marker;
    const char* axis;
    const char* point;
};

Palette palette_by_name(const std::string& name) {
    if (name == "print")
        return {"#000000", "#444444", "#44444433", "#bbbbbb", "#000000",
                "#222222", "#000000", "#333333"};
    return {"#202020", "#c02020", "#c0202033", "#8090c0", "#404040",
            "#208020", "#202020", "#2040a0"};
}

struct DiskFrame {
    double cx, cy, radius;
};

DiskFrame disk_frame(const RenderConfig& cfg) {
    double margin = 10.0;
    double r = std::min(cfg.width, cfg.height) / 2.0 - margin;
    return {cfg.width / 2.0, cfg.height / 2.0, r};
}

void svg_open(std::ostringstream& out, const RenderConfig& cfg) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\""
        << cfg.height << "\" viewBox=\"0 0 " << cfg.width << " " << cfg.height << "\">\n";
}

std::pair<double, double> circle_point(const DiskFrame& f, double turns) {
    return {f.cx + f.radius * std::cos(2 * kPi * turns),
            f.cy - f.radius * std::sin(2 * kPi * turns)};
}

// Geodesic from angle a to angle b (turns). The orthogonal arc has its
// center at distance radius/cos(pi*gap) along the bisector of the short way
// around; near-diameters fall back to a straight segment.
std::string geodesic_path(const DiskFrame& f, double a, double b, GeodesicStyle style) {
    auto [x1, y1] = circle_point(f, a);
    auto [x2, y2] = circle_point(f, b);
    double gap = b - a;
    gap -= std::floor(gap);
    if (gap > 0.5) {
        std::swap(a, b);
        std::swap(x1, x2);
        std::swap(y1, y2);
        gap = 1.0 - gap;
    }
    std::ostringstream p;
    p << "M " << fmt(x1) << " " << fmt(y1) << " ";
    if (style == GeodesicStyle::straight_chord || std::abs(gap - 0.5) < 1e-9) {
        p << "L " << fmt(x2) << " " << fmt(y2);
        return p.str();
    }
    double mid = a + gap / 2;
    double center_dist = f.radius / std::cos(kPi * gap);
    double r = f.radius * std::tan(kPi * gap);
    double cx = f.cx + center_dist * std::cos(2 * kPi * mid);
    double cy = f.cy - center_dist * std::sin(2 * kPi * mid);
    double cross = (x2 - x1) * (cy - y1) - (y2 - y1) * (cx - x1);
    int sweep = cross > 0 ? 1 : 0;
    p << "A " << fmt(r) << " " << fmt(r) << " 0 0 " << sweep << " " << fmt(x2) << " " << fmt(y2);
    return p.str();
}

void disk_boilerplate(std::ostringstream& out, const RenderConfig& cfg, const DiskFrame& f,
                      const Palette& pal) {
    out << "<circle cx=\"" << fmt(f.cx) << "\" cy=\"" << fmt(f.cy) << "\" r=\"" << fmt(f.radius)
        << "\" fill=\"none\" stroke=\"" << pal.circle << "\" stroke-width=\"" << fmt(cfg.stroke_width)
        << "\"/>\n";
}

} // namespace

std::string render_disk(const FiniteLamination& lam, const RenderConfig& cfg) {
    Palette pal = palette_by_name(cfg.palette);
    DiskFrame f = disk_frame(cfg);
    std::ostringstream out;
    svg_open(out, cfg);
    disk_boilerplate(out, cfg, f, pal);
    for (const auto& l : lam.leaves)
        out << "<path d=\"" << geodesic_path(f, to_double(l.a.value()), to_double(l.b.value()), cfg.style)
            << "\" fill=\"none\" stroke=\"" << pal.leaf << "\" stroke-width=\""
            << fmt(cfg.stroke_width) << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_disk(const PrimitiveMajor& m, const RenderConfig& cfg) {
    Palette pal = palette_by_name(cfg.palette);
    DiskFrame f = disk_frame(cfg);
    std::ostringstream out;
    svg_open(out, cfg);
    disk_boilerplate(out, cfg, f, pal);
    PrimitiveMajor cm = canonical_major(m.degree, m.classes);
    for (const auto& cls : cm.classes) {
        const auto& a = cls.angles;
        if (a.size() == 2) {
            out << "<path d=\""
                << geodesic_path(f, to_double(a[0].value()), to_double(a[1].value()), cfg.style)
                << "\" fill=\"none\" stroke=\"" << pal.leaf << "\" stroke-width=\""
                << fmt(cfg.stroke_width) << "\"/>\n";
            continue;
        }
        // filled straight-edge polygon under stroked geodesic edges
        out << "<path d=\"";
        for (size_t i = 0; i < a.size(); ++i) {
            auto [vx, vy] = circle_point(f, to_double(a[i].value()));
            out << (i == 0 ? "M " : "L ") << fmt(vx) << " " << fmt(vy) << " ";
        }
        out << "Z\" fill=\"" << pal.fill << "\" stroke=\"none\"/>\n";
        for (size_t i = 0; i < a.size(); ++i) {
            double from = to_double(a[i].value());
            double to = to_double(a[(i + 1) % a.size()].value());
            out << "<path d=\"" << geodesic_path(f, from, to, cfg.style)
                << "\" fill=\"none\" stroke=\"" << pal.leaf << "\" stroke-width=\""
                << fmt(cfg.stroke_width) << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_torus(const RectangleSet& rects,
                         const std::vector<std::pair<Angle, Angle>>& markers,
                         const RenderConfig& cfg) {
    Palette pal = palette_by_name(cfg.palette);
    const double margin = 10.0;
    const double w = cfg.width - 2 * margin, h = cfg.height - 2 * margin;
    auto px = [&](const Rat& t) { return margin + to_double(t) * w; };
    auto py = [&](const Rat& t) { return margin + (1.0 - to_double(t)) * h; };

    std::ostringstream out;
    svg_open(out, cfg);
    out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"" << pal.axis
        << "\" stroke-width=\"" << fmt(cfg.stroke_width) << "\"/>\n";
    for (const auto& r : rects.rects())
        out << "<rect x=\"" << fmt(px(r.x.lo)) << "\" y=\"" << fmt(py(r.y.hi)) << "\" width=\""
            << fmt(to_double(r.x.length()) * w) << "\" height=\"" << fmt(to_double(r.y.length()) * h)
            << "\" fill=\"" << pal.rect << "\" stroke=\"none\"/>\n";
    out << "<line x1=\"" << fmt(px(Rat(0))) << "\" y1=\"" << fmt(py(Rat(0))) << "\" x2=\""
        << fmt(px(Rat(1))) << "\" y2=\"" << fmt(py(Rat(1))) << "\" stroke=\"" << pal.diagonal
        << "\" stroke-width=\"" << fmt(cfg.stroke_width) << "\"/>\n";
    for (const auto& [ma, mb] : markers)
        out << "<circle cx=\"" << fmt(px(ma.value())) << "\" cy=\"" << fmt(py(mb.value()))
            << "\" r=\"" << fmt(3.0) << "\" fill=\"" << pal.marker << "\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_entropy_plot(const std::vector<SweepRow>& rows, const RenderConfig& cfg,
                                bool half_range) {
    if (rows.empty()) fail(errc::empty_input, "empty sweep table");
    Palette pal = palette_by_name(cfg.palette);
    const double margin = 30.0;
    const double w = cfg.width - 2 * margin, h = cfg.height - 2 * margin;
    const double xmax = half_range ? 0.5 : 1.0;
    const double ymax = kLog2 * 1.02;
    auto px = [&](double t) { return margin + t / xmax * w; };
    auto py = [&](double v) { return margin + (1.0 - v / ymax) * h; };

    std::ostringstream out;
    svg_open(out, cfg);
    out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"" << pal.axis
        << "\" stroke-width=\"1.0000\"/>\n";
    // reference line at log 2
    out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(kLog2)) << "\" x2=\""
        << fmt(px(xmax)) << "\" y2=\"" << fmt(py(kLog2)) << "\" stroke=\"" << pal.rect
        << "\" stroke-width=\"0.7500\"/>\n";
    int plotted = 0;
    for (const auto& row : rows) {
        double t = to_double(row.theta.value());
        if (t > xmax) continue;
        out << "<circle cx=\"" << fmt(px(t)) << "\" cy=\"" << fmt(py(row.entropy))
            << "\" r=\"1.5000\" fill=\"" << pal.point << "\"/>\n";
        ++plotted;
    }
    if (plotted == 0) fail(errc::empty_input, "no rows inside the plot range");
    out << "</svg>\n";
    return out.str();
}

} // namespace lamina
