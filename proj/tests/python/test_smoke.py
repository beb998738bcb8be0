"""Smoke tests for the python bindings: each main operation is exercised
once against a known value."""

import math
from fractions import Fraction

import pytest

import lamina


def test_angles():
    a = lamina.make_angle(7, 5)
    assert str(a) == "2/5"
    assert a.fraction == Fraction(2, 5)
    assert str(lamina.tuple_map("3/5", 2)) == "1/5"
    orb = lamina.orbit("1/7", 2)
    assert (orb.preperiod, orb.period) == (0, 3)
    assert str(lamina.preferred_half_preimage("1/5")) == "3/5"
    assert lamina.arc_distance("1/10", "9/10") == Fraction(1, 5)
    assert lamina.cyclic_between("3/4", "0/1", "1/4")


def test_major_pipeline():
    m = lamina.from_starting_points(["1/10", "1/2"], 3)
    assert lamina.validate(m) == []
    assert [str(a) for c in m.classes for a in c.angles] == ["1/10", "13/30", "1/2", "5/6"]
    s = lamina.starting_points(m)
    assert [str(a) for a in s.starts] == ["1/10", "1/2"]
    d = lamina.derive(m)
    assert d.degree == 2
    assert lamina.validate(d) == []
    g = lamina.quotient_graph(m)
    assert g.betti() == 3
    assert lamina.met_eval(lamina.quadratic_major("1/2"), "0/1", "1/2") == Fraction(1, 2)


def test_metric_and_bisector():
    m1 = lamina.PrimitiveMajor(2, [["0/1", "1/2"]])
    m2 = lamina.PrimitiveMajor(2, [["1/4", "3/4"]])
    value, bound = lamina.distance(m1, m2, 64)
    assert value == Fraction(1, 2)
    assert bound == Fraction(2, 64)
    b = lamina.cubic_from_bisector("1/6", "0/1")
    assert lamina.validate(b) == []


def test_lamination_and_good_region():
    m = lamina.PrimitiveMajor(2, [["1/7", "9/14"]])
    b1 = lamina.backward_lift(m, 1)
    assert len(b1) == 3
    assert b1.contains(lamina.Leaf("1/14", "23/28"))
    g = lamina.good_region(lamina.major_to_lamination(m))
    assert g.area == Fraction(1, 2)
    assert g.symmetric_under_swap()
    cleaned = lamina.clean(b1)
    assert len(cleaned) >= len(b1)


def test_entropy_values():
    assert abs(lamina.core_entropy("1/5") - 0.3331) < 5e-4
    assert abs(lamina.core_entropy("1/2") - math.log(2)) < 1e-9
    assert abs(lamina.core_entropy("1/7")) < 1e-9
    assert abs(lamina.hausdorff_dimension("1/2") - 1.0) < 1e-8
    basis = lamina.pair_basis("1/5")
    assert len(basis.pairs) == 6
    mat = lamina.build_matrix("1/5")
    assert mat.dimension == 6
    assert abs(lamina.spectral_radius(mat) - lamina.exact_spectral_radius(mat)) < 1e-9


def test_sweep_and_render():
    rows = lamina.sweep(8)
    assert len(rows) == 21
    csv = lamina.sweep_to_csv(rows)
    assert csv.startswith("theta_num,theta_den,rho,entropy,dimension")
    svg = lamina.render_entropy_plot(rows, half_range=True)
    assert svg.startswith("<svg")
    disk = lamina.render_disk(lamina.quadratic_major("1/5"))
    assert "<path" in disk
    torus = lamina.render_torus(lamina.good_region(
        lamina.major_to_lamination(lamina.quadratic_major("1/5"))))
    assert "<rect" in torus


def test_torus_dynamics():
    assert {str(a) for a in lamina.post_major("1/2")} == {"0/1", "1/4", "1/2"}
    level = lamina.omega_level("1/2", 3)
    assert level.cells.area > 0
    assert level.cells.covers_diagonal()
    assert abs(lamina.growth_rate_estimate("1/2", 8) - math.log(2)) < 0.15
    sep = lamina.separating_leaves("1/5", 3)
    assert len(sep.leaves) >= 1
    assert lamina.check_forward_invariance_S("1/5", 4) == []


def test_errors():
    with pytest.raises(lamina.LaminaError):
        lamina.core_entropy("0/1")
    with pytest.raises(lamina.LaminaError):
        lamina.derive(lamina.PrimitiveMajor(2, [["0/1", "1/2"]]))
