#pragma once

#include "lamina/entropy.hpp"
#include "lamina/major.hpp"
#include "lamina/rectangles.hpp"

#include <string>
#include <vector>

namespace lamina {

enum class GeodesicStyle { hyperbolic_arc, straight_chord };

/// Emission is deterministic: identical input and config give byte-identical
/// SVG text.
struct RenderConfig {
    int width = 800;
    int height = 800;
    double stroke_width = 1.2;
    std::string palette = "default";
    GeodesicStyle style = GeodesicStyle::hyperbolic_arc;
};

/// Unit circle plus one path per leaf; hyperbolic style draws the circular
/// arc orthogonal to the boundary (diameters degenerate to straight lines).
std::string render_disk(const FiniteLamination& lam, const RenderConfig& cfg = {});
/// Same, but polygon classes are emitted as closed filled paths.
std::string render_disk(const PrimitiveMajor& m, const RenderConfig& cfg = {});

/// Unit-square torus plot: shaded rectangles, the diagonal, and marker dots.
std::string render_torus(const RectangleSet& rects,
                         const std::vector<std::pair<Angle, Angle>>& markers,
                         const RenderConfig& cfg = {});

/// Scatter plot of an entropy sweep; x spans [0,1], or [0,1/2] when
/// half_range is set, y spans [0, log 2].
std::string render_entropy_plot(const std::vector<SweepRow>& rows, const RenderConfig& cfg = {},
                                bool half_range = false);

} // namespace lamina
