import math
from fractions import Fraction as F

import pytest

from mopoly.analytic import (
    ContourSpec,
    closed_form_value,
    contour_quadrature,
    integral_representation,
)
from mopoly.errors import PoleOnContourError, WrongEnclosureError
from mopoly.exact import MultiIndex
from mopoly.families import Charlier, Hahn, Kravchuk, MeixnerI, MeixnerII, linear_form


def test_contour_spec_validation():
    with pytest.raises(ValueError):
        ContourSpec("circle", nodes=100)        # not a power of two
    with pytest.raises(ValueError):
        ContourSpec("circle", nodes=8)          # below 16
    with pytest.raises(ValueError):
        ContourSpec("triangle")
    with pytest.raises(ValueError):
        ContourSpec("circle", orientation="widdershins")


def test_charlier_type1_residue_value():
    # single simple pole at t = a: residue of e^{-t} t^0 / (t - 2) is e^{-2}
    params = Charlier((2,))
    rep = integral_representation(params, "type1", (1,), 0, 1)
    res = contour_quadrature(rep, nodes=128)
    assert abs(res.value - math.exp(-2)) < 1e-12


def test_charlier_type2_value():
    params = Charlier((2,))
    rep = integral_representation(params, "type2", (1,), 1)
    res = contour_quadrature(rep, nodes=128)
    assert abs(res.value - (1 - 2)) < 1e-10


def test_hahn_linear_form_vs_direct_sum():
    params = Hahn((F(8, 7), F(16, 7)), F(1, 3), 8)
    n = MultiIndex.of((1, 1))
    for x in (0, 2, 5):
        rep = integral_representation(params, "linear_form", n, x)
        res = contour_quadrature(rep, nodes=256)
        direct = linear_form(params, n, x).value
        assert abs(res.value - direct) <= 1e-8 * max(abs(direct), 1)


def test_orientation_flip_negates():
    # the validated orientation is counterclockwise; flipping the contour
    # negates the value (this is the printed-orientation adjudication)
    params = Charlier((2,))
    rep = integral_representation(params, "type1", (1,), 0, 1)
    assert rep.printed_orientation == "clockwise"
    assert rep.orientation == "counterclockwise"
    spec = rep.default_contour(128)
    flipped = ContourSpec("circle", "clockwise", spec.center, spec.radius, nodes=128)
    res = contour_quadrature(rep, contour=flipped)
    assert abs(res.value + math.exp(-2)) < 1e-12


def test_enclosure_validation_errors():
    params = Charlier((2, F(7, 2)))
    rep = integral_representation(params, "type1", (1, 1), 0, 1)
    # enclosing both poles is a wrong enclosure for a single component
    wide = ContourSpec("circle", "counterclockwise", 2.75 + 0j, 2.0, nodes=64)
    with pytest.raises(WrongEnclosureError):
        contour_quadrature(rep, contour=wide)
    # missing the required pole
    off = ContourSpec("circle", "counterclockwise", 9 + 0j, 0.5, nodes=64)
    with pytest.raises(WrongEnclosureError):
        contour_quadrature(rep, contour=off)
    # pole sitting on the contour
    on = ContourSpec("circle", "counterclockwise", 1 + 0j, 1.0, nodes=64)
    with pytest.raises(PoleOnContourError):
        contour_quadrature(rep, contour=on)
    # half-plane constraint: Hahn type I needs Re(t) > -1
    params = Hahn((F(8, 7),), F(1, 3), 6)
    rep = integral_representation(params, "type1", (1,), 0, 1)
    crossing = ContourSpec("circle", "counterclockwise", 0j, 2.0, nodes=64)
    with pytest.raises(WrongEnclosureError):
        contour_quadrature(rep, contour=crossing)


def test_all_ten_theorems_one_case_each():
    fams = [Hahn((F(8, 7), F(16, 7)), F(1, 3), 8),
            MeixnerII((F(3, 2), F(19, 7)), F(1, 3)),
            MeixnerI(F(3, 2), (F(5, 16), F(11, 16))),
            Kravchuk((F(5, 16), F(11, 16)), 8),
            Charlier((F(8, 7), F(23, 7)))]
    n = MultiIndex.of((2, 1))
    for params in fams:
        for kind in ("type2", "type1", "linear_form"):
            rep = integral_representation(params, kind, n, 2, 1)
            res = contour_quadrature(rep, nodes=256)
            cf = closed_form_value(params, kind, n, 2, 1)
            scale = max(abs(cf), 1.0)
            assert abs(res.value - cf) < 1e-8 * scale, (params.family, kind)
            assert res.error_estimate < 1e-10 * scale, (params.family, kind)


def test_meixner1_type2_at_zero_adjudication():
    # stated for x in N; x = 0 validates as well
    params = MeixnerI(F(3, 2), (F(5, 16), F(11, 16)))
    rep = integral_representation(params, "type2", (1, 1), 0)
    res = contour_quadrature(rep, nodes=256)
    cf = closed_form_value(params, "type2", (1, 1), 0)
    assert abs(res.value - cf) < 1e-10 * max(abs(cf), 1)
    assert "x = 0 validates" in rep.note


def test_rectangle_contour_agrees():
    # same pole set enclosed by a rectangle; coarser convergence but consistent
    params = Charlier((2,))
    rep = integral_representation(params, "type1", (1,), 0, 1)
    rect = ContourSpec("rectangle", "counterclockwise",
                       corners=(1 + 0j - 1j, 3 + 1j), nodes=4096)
    res = contour_quadrature(rep, contour=rect)
    assert abs(res.value - math.exp(-2)) < 1e-6


def test_extended_precision_mode():
    params = Charlier((2,))
    rep = integral_representation(params, "type1", (2,), 1, 1)
    res = contour_quadrature(rep, nodes=64, precision="extended")
    cf = closed_form_value(params, "type1", (2,), 1, 1)
    assert abs(res.value - cf) < 1e-13 * max(abs(cf), 1)
    assert res.error_estimate < 1e-18


def test_node_doubling_stability():
    params = MeixnerII((F(3, 2), F(19, 7)), F(1, 3))
    rep = integral_representation(params, "linear_form", (1, 2), 3)
    r256 = contour_quadrature(rep, nodes=256)
    r512 = contour_quadrature(rep, nodes=512)
    assert abs(r256.value - r512.value) < 1e-10 * max(abs(r512.value), 1)
