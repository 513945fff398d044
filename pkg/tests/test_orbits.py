from fractions import Fraction

import pytest

from strangedual.orbits import (
    CStarAction,
    NewtonStructureError,
    OrbitError,
    OrbitRep,
    StratumError,
    UnresolvedOrbit,
    classify_case,
    dolgachev_pair,
    exceptional_orbits,
    isotropy_order,
    split_newton,
)
from strangedual.polyring import parse_poly
from strangedual.series import parse_weight_system


def test_isotropy_order_examples():
    assert isotropy_order(CStarAction((2, 4, 3, 3)), (0, 0, 1, 0)) == 3
    assert isotropy_order(CStarAction((2, 4, 4, 3)), (1, 0, -1, 0)) == 2
    assert isotropy_order(CStarAction((2, 3, 5, 7)), (1, 1, 1, 1)) == 1


def test_isotropy_order_rejects_origin():
    with pytest.raises(OrbitError):
        isotropy_order(CStarAction((2, 2, 2, 2)), (0, 0, 0, 0))


def test_isotropy_invariant_along_orbit():
    # Rescaling a representative by signs allowed by the weights does not
    # change the isotropy order.
    action = CStarAction((2, 4, 3, 3))
    point = (Fraction(1), Fraction(2), Fraction(0), Fraction(-3))
    base = isotropy_order(action, point)
    for lam in (1, -1):
        moved = tuple(Fraction(lam) ** w * v for w, v in zip(action.weights, point))
        assert isotropy_order(action, moved) == base


# Worked examples (a), (b), (c) of the source data.


def test_example_a_kflat_pair_one():
    h1 = parse_poly("x*y - w^2")
    h2 = parse_poly("-x^2*w + x^2*z + y*z")
    action = CStarAction((2, 4, 3, 3))
    orbits = exceptional_orbits(h1, h2, action)
    summary = {(o.stratum, o.isotropy, o.in_singular_locus) for o in orbits}
    assert summary == {
        (("x",), 2, False),
        (("y",), 4, False),
        (("z",), 3, True),
    }
    assert classify_case(h1, h2).kind == "C"
    assert dolgachev_pair(h1, h2, action) == (2, 4)


def test_example_b_kflat_pair_two():
    h1 = parse_poly("x*y - w^2")
    h2 = parse_poly("x^2*z + y*z + z^2")
    action = CStarAction((2, 4, 4, 3))
    orbits = exceptional_orbits(h1, h2, action)
    assert len(orbits) == 4
    in_u = sorted(o.isotropy for o in orbits if o.point[2] == 0)
    off_u = sorted(o.isotropy for o in orbits if o.point[2] != 0)
    assert in_u == [2, 4]
    assert off_u == [2, 4]
    points = {o.point for o in orbits}
    assert (Fraction(1), Fraction(0), Fraction(-1), Fraction(0)) in points
    assert (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)) in points
    case = classify_case(h1, h2)
    assert case.kind == "B"
    assert case.g2 == parse_poly("x^2 + y + z")
    assert dolgachev_pair(h1, h2, action) == (2, 4)


def test_example_c_l_pair_one():
    h1 = parse_poly("x*y - z*w")
    h2 = parse_poly("-x^2*w + x*w^2 + z^2")
    action = CStarAction((2, 3, 3, 2))
    orbits = exceptional_orbits(h1, h2, action)
    case = classify_case(h1, h2)
    assert case.kind == "A"
    assert case.subspace == ("x", "z")
    in_l = sorted(o.isotropy for o in orbits if o.point[0] == 0 and o.point[2] == 0)
    off_l = sorted(o.isotropy for o in orbits if not (o.point[0] == 0 and o.point[2] == 0))
    assert in_l == [2, 3]
    assert off_l == [2, 2]
    assert (Fraction(1), Fraction(0), Fraction(0), Fraction(1)) in {o.point for o in orbits}
    assert dolgachev_pair(h1, h2, action) == (2, 2)


def test_no_exceptional_orbits_for_coprime_weights():
    # A pair homogeneous for the trivial grading has no stratum with a
    # common weight factor.
    h1 = parse_poly("x*y - w^2")
    h2 = parse_poly("x^2 + y*z + z*w + w^2")
    assert exceptional_orbits(h1, h2, CStarAction((1, 1, 1, 1))) == []


def test_exceptional_orbits_requires_homogeneous_pair():
    with pytest.raises(OrbitError):
        exceptional_orbits(
            parse_poly("x*y - w^2"), parse_poly("x^2*z + y*z"), CStarAction((1, 1, 1, 1))
        )


def test_orbit_representatives_satisfy_equations(catalog):
    for entry in catalog.entries:
        h1 = entry.virtual_equations.first
        for piece in entry.decomposition:
            action = CStarAction(piece.weights.weights)
            for orbit in exceptional_orbits(h1, piece.polynomial, action):
                assert isinstance(orbit, OrbitRep)
                assert h1.evaluate(orbit.point) == 0
                assert piece.polynomial.evaluate(orbit.point) == 0
                nonzero = {
                    name
                    for name, value in zip(("x", "y", "z", "w"), orbit.point)
                    if value != 0
                }
                assert nonzero == set(orbit.stratum)


def test_dolgachev_pairs_full_catalog(catalog):
    for entry in catalog.entries:
        h1 = entry.virtual_equations.first
        for piece, expected in zip(entry.decomposition, entry.dolgachev):
            action = CStarAction(piece.weights.weights)
            assert dolgachev_pair(h1, piece.polynomial, action) == tuple(sorted(expected))


def test_dolgachev_structural_error():
    # Every exceptional stratum misses the variety, so zero principal
    # orbits survive and the count check trips.
    h1 = parse_poly("x*y - z^2*w^2")
    h2 = parse_poly("x^2 + y^2")
    action = CStarAction((2, 2, 1, 1))
    with pytest.raises(OrbitError, match="expected 2 principal orbits"):
        dolgachev_pair(h1, h2, action)


def test_dolgachev_full_stratum_too_complex():
    # All-even weights make the whole space an exceptional stratum; three
    # free coordinates exceed the solver's reach and are reported as such.
    h1 = parse_poly("x*y - w^2")
    h2 = parse_poly("x^2*z + y^2*z + w^3")
    action = CStarAction((2, 2, 2, 2))
    with pytest.raises(StratumError, match="free coordinates"):
        exceptional_orbits(h1, h2, action)


def test_unresolved_orbit_reported():
    # On the z-w stratum the first equation forces w^2 = 2, which has no
    # rational solution; the orbit is reported, not dropped.
    h1 = parse_poly("x*y + z*w^2 - 2*z^3")
    h2 = parse_poly("x^2*z^2 + y^2*w^2")
    action = CStarAction((3, 3, 2, 2))
    orbits = exceptional_orbits(h1, h2, action)
    unresolved = [o for o in orbits if isinstance(o, UnresolvedOrbit)]
    assert unresolved and unresolved[0].stratum == ("z", "w")
    assert unresolved[0].coefficients == (-2, 0, 1)
    with pytest.raises(OrbitError):
        dolgachev_pair(h1, h2, action)


def test_orbit_report_format():
    h1 = parse_poly("x*y - w^2")
    h2 = parse_poly("-x^2*w + x^2*z + y*z")
    orbits = exceptional_orbits(h1, h2, CStarAction((2, 4, 3, 3)))
    rendered = {str(o) for o in orbits}
    assert "stratum={z} point=(0, 0, 1, 0) isotropy=3 singular=yes" in rendered


# Newton splits.


def test_split_newton_m_series():
    split = split_newton(parse_poly("-y*z + x*w + z^3 + w^2"), parse_poly("x*y - w^2"))
    assert split.polynomials() == (
        parse_poly("x*w + z^3 + w^2"),
        parse_poly("z^3 + w^2 - y*z"),
    )
    assert split.faces[0].weights == parse_weight_system("3,3,2,3;6,6")
    assert split.faces[1].weights == parse_weight_system("2,4,2,3;6,6")


def test_split_newton_jprime_and_i():
    split = split_newton(parse_poly("-x^2*z + y*w + z^2 + x*w^2"), parse_poly("x*y - w^2"))
    assert split.polynomials() == (
        parse_poly("-x^2*z + z^2 + x*w^2"),
        parse_poly("z^2 + x*w^2 + y*w"),
    )
    split = split_newton(parse_poly("-x*w + y*z + z^2 + x*z"), parse_poly("x*y - w^3"))
    assert split.polynomials() == (
        parse_poly("-x*w + y*z + x*z"),
        parse_poly("y*z + x*z + z^2"),
    )


def test_split_newton_catalog(catalog):
    for entry in catalog.entries:
        split = split_newton(entry.virtual_equations.second, entry.virtual_equations.first)
        for face, piece in zip(split.faces, entry.decomposition):
            assert face.polynomial == piece.polynomial
            assert face.weights == piece.weights


def test_split_newton_requires_four_terms():
    with pytest.raises(NewtonStructureError):
        split_newton(parse_poly("x*w + z^2"), parse_poly("x*y - w^2"))


def test_split_newton_structural_error():
    # Support living on a single hyperplane together with h1 gives one
    # face, not two.
    with pytest.raises(NewtonStructureError):
        split_newton(
            parse_poly("x^2 + x*y + y^2 + w^2"), parse_poly("x*y - w^2")
        )


def test_stratum_error_message():
    # Both equations vanish identically on the x-z plane while the weights
    # share a factor there: the solution set is positive-dimensional.
    h1 = parse_poly("y*w")
    h2 = parse_poly("y^2 + w^2")
    action = CStarAction((2, 3, 2, 3))
    with pytest.raises(StratumError):
        exceptional_orbits(h1, h2, action)
