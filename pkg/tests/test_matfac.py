import pytest

from strangedual.matfac import (
    CompleteIntersectionPair,
    FactorizationError,
    FactorizationTriple,
    ShapeError,
    factor_poly,
    lift,
    lift_raw,
    reduce,
    verify_factorization,
)
from strangedual.polyring import parse_poly


def triple(a, b, c):
    return FactorizationTriple.parse(a, b, c)


def test_verify_factorization_q_series():
    t = triple("w^2", "w", "-x^2*z + z^2 + x*w^2")
    f = verify_factorization(t)
    assert f == parse_poly("w^3 - x^3*z + x*z^2 + x^2*w^2")


def test_verify_factorization_direct_expansion():
    t = triple("z*w", "w", "z^2")
    assert verify_factorization(t) == parse_poly("x*z^2 + z*w^2")


def test_verify_factorization_i_series():
    t = triple("w^3", "z", "-x*w + z^2 + x*z")
    assert verify_factorization(t) == parse_poly("-x^2*w + x*z^2 + x^2*z + z*w^3")


def test_triple_validation():
    with pytest.raises(FactorizationError):
        triple("x^2", "w", "z^2")  # a contains x
    with pytest.raises(FactorizationError):
        triple("w", "w", "z^2")  # deg a < 2
    with pytest.raises(FactorizationError):
        triple("w^2", "1", "z^2")  # deg b < 1
    with pytest.raises(FactorizationError):
        triple("w^2", "w", "y*z^2")  # c contains y


def test_lift_examples():
    t = triple("w^2", "w", "-x^2*z + z^2 + x*w^2")
    assert lift(t) == CompleteIntersectionPair.parse(
        "x*y - w^2", "-x^2*z + y*w + z^2 + x*w^2"
    )
    t = triple("w^3", "z", "-x*w + z^2 + x*z")
    assert lift(t) == CompleteIntersectionPair.parse("x*y - w^3", "-x*w + z^2 + y*z + x*z")


def test_lift_raw_sign():
    t = triple("w^2", "w", "-x^2*z + z^2 + x*w^2")
    raw = lift_raw(t)
    assert raw.first == parse_poly("w^2 - x*y")
    assert raw.second == lift(t).second


def test_reduce_examples():
    pair = CompleteIntersectionPair.parse("x*y - w^2", "-x^2*z + y*w + z^2 + x*w^2")
    assert reduce(pair) == parse_poly("-x^3*z + x*z^2 + x^2*w^2 + w^3")
    pair = CompleteIntersectionPair.parse("x*y - z*w", "-x^2*w + z^2 + y*w + x*w^2")
    assert reduce(pair) == parse_poly("-x^3*w + x*z^2 + x^2*w^2 + z*w^2")


def test_reduce_accepts_negated_first_equation():
    pair = CompleteIntersectionPair.parse("w^2 - x*y", "-x^2*z + y*w + z^2 + x*w^2")
    assert reduce(pair) == parse_poly("-x^3*z + x*z^2 + x^2*w^2 + w^3")


def test_reduce_shape_errors():
    with pytest.raises(ShapeError):
        reduce(CompleteIntersectionPair.parse("x^2 + y^2", "z^2 + y*w"))
    with pytest.raises(ShapeError):
        reduce(CompleteIntersectionPair.parse("x*y - w^2", "z^2 + y^2*w"))  # y^2 term
    with pytest.raises(ShapeError):
        reduce(CompleteIntersectionPair.parse("x*y - w^2", "z^2 + x*w"))  # no y part
    with pytest.raises(ShapeError):
        reduce(CompleteIntersectionPair.parse("x*y - x*z", "z^2 + y*w"))  # a involves x


def test_reduce_lift_roundtrip():
    for args in (
        ("w^2", "w", "-x^2*z + z^2 + x*w^2"),
        ("w^2", "z", "-x^2*w + z^2 + x*w^2"),
        ("z*w", "w", "-x^2*w + z^2 + x^2*z"),
        ("z*w", "z + w", "-z^2 + x^2*w"),
        ("w^3", "z", "-x*w + z^2 + x*z"),
        ("w^2", "-z", "x*w + z^3 + w^2"),
    ):
        t = triple(*args)
        assert reduce(lift(t)) == t.hypersurface()
        assert reduce(lift_raw(t)) == t.hypersurface()


def test_factor_poly_q_series():
    h = parse_poly("-x^3*z + x*z^2 + x^2*w^2 + w^3")
    t = factor_poly(h)
    assert (t.a, t.b) == (parse_poly("w^2"), parse_poly("w"))
    assert t.c == parse_poly("-x^2*z + z^2 + x*w^2")
    assert t.hypersurface() == h


def test_factor_poly_msharp_split():
    h = parse_poly("-x*z^2 + x^3*w + z^2*w + z*w^2")
    t = factor_poly(h)
    assert (t.a, t.b) == (parse_poly("z*w"), parse_poly("z + w"))
    assert t.c == parse_poly("-z^2 + x^2*w")


def test_factor_poly_m_series_sign():
    h = parse_poly("x^2*w + x*z^3 + x*w^2 - z*w^2")
    t = factor_poly(h)
    assert (t.a, t.b) == (parse_poly("w^2"), parse_poly("-z"))
    assert t.hypersurface() == h


def test_factor_poly_degenerate():
    with pytest.raises(FactorizationError):
        factor_poly(parse_poly("x^2"))


def test_factor_poly_rejects_y():
    with pytest.raises(FactorizationError):
        factor_poly(parse_poly("x*y + w^3"))


def test_factor_poly_reconstructs_catalog_rows(catalog):
    for entry in catalog.entries:
        found = factor_poly(entry.parent.h)
        assert found.hypersurface() == entry.parent.h
        verify_factorization(found)


def test_catalog_triples_verify(catalog):
    for entry in catalog.entries:
        f = verify_factorization(entry.matfac)
        assert f == entry.parent.h
        assert reduce(lift(entry.matfac)) == entry.parent.h
