#pragma once

#include "lamina/major.hpp"
#include "lamina/rectangles.hpp"

namespace lamina {

/// Depth cap for backward lifting and torus refinements; LAMINA_DEPTH_CAP
/// overrides the built-in default of 12.
int default_depth_cap();

enum class LiftVariant {
    literal,   // keep preimage leaves compatible with the current lamination
    eps_limit, // lift the major perturbed by a symbolic -eps, then drop eps
};

/// Exact rectangle decomposition of the set of chords compatible with every
/// leaf of the lamination.
RectangleSet good_region(const FiniteLamination& lam);

/// i-fold backward lifting of a major: at each step the compatible preimage
/// chords of the current leaves are adjoined.
FiniteLamination backward_lift(const PrimitiveMajor& m, int depth,
                               LiftVariant variant = LiftVariant::literal,
                               int depth_cap = default_depth_cap());

struct InvarianceViolation {
    Leaf leaf;  // the leaf whose image is missing
    Leaf image; // the absent image chord
};

struct InvarianceReport {
    std::vector<InvarianceViolation> missing;
    bool ok() const { return missing.empty(); }
};

/// Checks the forward half of degree-d invariance: every leaf either
/// collapses or its image chord is present.
InvarianceReport check_forward_invariant(const FiniteLamination& lam);

/// Lam-of-Rel on a finite set: close the endpoint-sharing relation into
/// classes and keep only the convex-hull boundary of each class.
FiniteLamination clean(const FiniteLamination& lam);

} // namespace lamina
