"""Exact rational dynamics on the circle: primitive majors, invariant
laminations, and core entropy, backed by a C++ core."""

from ._core import (
    Angle,
    EquivalenceClass,
    FiniteLamination,
    LaminaError,
    Leaf,
    OmegaLevel,
    OrbitInfo,
    PairBasis,
    PrimitiveMajor,
    QuotientGraph,
    RectangleSet,
    SeparatingSet,
    StartSequence,
    SweepRow,
    TorusRect,
    TransitionMatrix,
    arc_distance,
    backward_lift,
    build_matrix,
    check_forward_invariance_S,
    check_forward_invariant,
    clean,
    core_entropy,
    cubic_from_bisector,
    cyclic_between,
    derive,
    distance,
    exact_spectral_radius,
    from_starting_points,
    good_region,
    growth_rate_estimate,
    hausdorff_dimension,
    lamination_from_json,
    leaves_cross,
    major_from_json,
    major_to_lamination,
    make_angle,
    met_eval,
    normalize_starts,
    omega_level,
    orbit,
    pair_basis,
    post_major,
    preferred_half_preimage,
    quadratic_major,
    quotient_graph,
    random_generic_major,
    render_disk,
    render_entropy_plot,
    render_torus,
    separating_leaves,
    spectral_radius,
    starting_points,
    sweep,
    sweep_to_csv,
    tuple_map,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
