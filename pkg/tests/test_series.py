import random
from itertools import product

import pytest

from strangedual.series import (
    FrameProduct,
    FrameSyntaxError,
    IntPolynomial,
    NotPolynomialError,
    SaitoDomainError,
    SeriesError,
    WeightSystem,
    format_frame,
    frame_expand,
    frame_mul,
    frame_to_polynomial,
    or_polynomial,
    parse_frame,
    parse_weight_system,
    poincare,
    saito_dual,
)


def test_weight_system_parse_format():
    ws = parse_weight_system("2,6,5,4;8,10")
    assert ws == WeightSystem((2, 6, 5, 4), (8, 10))
    assert str(ws) == "2,6,5,4;8,10"


def test_weight_system_rejects_nonpositive():
    with pytest.raises(SeriesError):
        WeightSystem((2, 0, 1, 1), (3, 4))


def test_poincare_jprime():
    frame = poincare(parse_weight_system("2,6,5,4;8,10"))
    assert frame == FrameProduct({8: 1, 10: 1, 2: -1, 6: -1, 5: -1, 4: -1})


def test_poincare_collision_bookkeeping():
    frame = poincare(WeightSystem((1, 1, 1, 1), (1, 1)))
    assert frame == FrameProduct({1: -2})


def test_poincare_msharp_dual():
    frame = poincare(parse_weight_system("2,4,3,3;6,7"))
    assert frame == FrameProduct({6: 1, 7: 1, 2: -1, 4: -1, 3: -2})


def test_frame_mul_identity_and_cancellation():
    a = FrameProduct({2: 1, 5: -1})
    assert frame_mul(a, FrameProduct.identity(), "mul") == a
    assert frame_mul(FrameProduct({2: 1}), FrameProduct({2: 1}), "div") == FrameProduct.identity()


def test_frame_mul_catalog_row():
    product = frame_mul(or_polynomial((2, 2, 2, 6)), poincare(parse_weight_system("2,6,5,4;8,10")), "mul")
    assert product == parse_frame("2^2*8*10 / 1^2*4*5")


def test_or_polynomial_values():
    assert or_polynomial((2, 2, 2, 6)) == FrameProduct({2: 3, 6: 1, 1: -2})
    assert or_polynomial((3, 3, 3, 3)) == FrameProduct({3: 4, 1: -2})
    assert or_polynomial((1, 1, 1, 1)) == FrameProduct({1: 2})


def test_saito_dual_hand_example():
    # d = 12: exponent at m is -alpha_(12/m).
    frame = FrameProduct({1: 1, 12: 1, 3: -1})
    assert saito_dual(frame, 12) == FrameProduct({12: -1, 1: -1, 4: 1})


def test_saito_dual_involution_random():
    rng = random.Random(2026)
    for _ in range(200):
        d = rng.choice((4, 6, 8, 10, 12, 24))
        divisors = [m for m in range(1, d + 1) if d % m == 0]
        frame = FrameProduct({m: rng.randint(-3, 3) for m in rng.sample(divisors, rng.randint(1, len(divisors)))})
        assert saito_dual(saito_dual(frame, d), d) == frame


def test_saito_dual_domain_error():
    with pytest.raises(SaitoDomainError):
        saito_dual(FrameProduct({2: 1}), 5)


def test_frame_to_polynomial_identity():
    assert frame_to_polynomial(FrameProduct.identity()) == IntPolynomial.one()


def test_frame_to_polynomial_pure_denominator():
    with pytest.raises(NotPolynomialError):
        frame_to_polynomial(FrameProduct({1: -1}))


def test_frame_to_polynomial_jprime():
    # (1+t)^2 (1+t^4)(1+t^5), expanded by hand.
    poly = frame_to_polynomial(parse_frame("2^2*8*10 / 1^2*4*5"))
    assert poly == IntPolynomial([1, 2, 1, 0, 1, 3, 3, 1, 0, 1, 2, 1])
    assert poly.degree() == 11


def test_frame_degree_and_expansion_consistency():
    rng = random.Random(5)
    for _ in range(100):
        numerator = {rng.randint(1, 6): rng.randint(1, 2) for _ in range(rng.randint(1, 3))}
        frame = FrameProduct(numerator)
        divisor = FrameProduct({1: -sum(numerator.values())}) if rng.random() < 0.3 else FrameProduct()
        frame = frame * divisor
        try:
            poly = frame_to_polynomial(frame)
        except NotPolynomialError:
            continue
        assert poly.degree() == frame.degree()
        expansion = frame_expand(frame, poly.degree())
        assert tuple(poly.coefficients) + (0,) * (poly.degree() + 1 - len(poly.coefficients)) == expansion


def _count_monomials(weights, degree):
    count = 0
    bounds = [degree // w for w in weights]
    for exps in product(*[range(b + 1) for b in bounds]):
        if sum(e * w for e, w in zip(exps, weights)) == degree:
            count += 1
    return count


def test_frame_expand_counts_monomials_below_relations():
    # Below the smallest relation degree the Poincare coefficients count
    # monomials of each weighted degree; brute-force enumeration oracle.
    for text in ("2,6,5,4;8,10", "2,4,4,3;6,8", "3,3,3,2;6,6", "2,4,3,3;6,7"):
        ws = parse_weight_system(text)
        cutoff = min(ws.degrees) - 1
        expansion = frame_expand(poincare(ws), cutoff)
        for degree in range(cutoff + 1):
            assert expansion[degree] == _count_monomials(ws.weights, degree)


def test_frame_expand_examples():
    assert frame_expand(poincare(parse_weight_system("2,6,5,4;8,10")), 6) == (1, 0, 1, 0, 2, 1, 3)
    assert frame_expand(FrameProduct.identity(), 3) == (1, 0, 0, 0)
    assert frame_expand(FrameProduct({1: 1}), 3) == (1, -1, 0, 0)


def test_frame_expand_matches_longdivision_oracle():
    # Independent route: expand numerator/denominator polynomials and do
    # power-series division on the coefficient lists.
    rng = random.Random(77)
    for _ in range(50):
        frame = FrameProduct({rng.randint(1, 5): rng.randint(-2, 2) for _ in range(rng.randint(1, 3))})
        order = 25
        numerator = IntPolynomial.one()
        denominator = IntPolynomial.one()
        for base, alpha in frame.items():
            for _ in range(abs(alpha)):
                factor = IntPolynomial.one_minus_t_power(base)
                if alpha > 0:
                    numerator = numerator * factor
                else:
                    denominator = denominator * factor
        series = []
        pad = order + 1 + len(denominator.coefficients) + len(numerator.coefficients)
        carry = list(numerator.coefficients) + [0] * pad
        for k in range(order + 1):
            coeff = carry[k] // denominator.coefficients[0]
            series.append(coeff)
            for j, b in enumerate(denominator.coefficients):
                carry[k + j] -= coeff * b
        assert frame_expand(frame, order) == tuple(series)


def test_parse_frame_catalog_rows():
    assert parse_frame("2^2*8*10 / 1^2*4*5") == FrameProduct(
        {2: 2, 8: 1, 10: 1, 1: -2, 4: -1, 5: -1}
    )
    assert parse_frame("6*7 / 1^2") == FrameProduct({6: 1, 7: 1, 1: -2})
    assert parse_frame("3*6^2 / 1^2*2") == FrameProduct({3: 1, 6: 2, 1: -2, 2: -1})


def test_parse_frame_unicode_dot():
    assert parse_frame("2^2·8·10 / 1^2·4·5") == parse_frame("2^2*8*10 / 1^2*4*5")


def test_parse_frame_merges_repeated_base():
    warnings = []
    frame = parse_frame("2*2^2 / 3", warnings)
    assert frame == FrameProduct({2: 3, 3: -1})
    assert warnings == ["repeated base 2 merged"]


def test_parse_frame_bare_one_is_identity():
    # The classical notation prints "1" for an empty side; the (1 - t) factor
    # always carries an explicit exponent.
    assert parse_frame("1") == FrameProduct.identity()
    assert parse_frame("1^1") == FrameProduct({1: 1})
    assert parse_frame("1 / 1^2") == FrameProduct({1: -2})


def test_parse_frame_errors():
    with pytest.raises(FrameSyntaxError):
        parse_frame("2^^3")
    with pytest.raises(FrameSyntaxError):
        parse_frame("2 * * 3")
    with pytest.raises(FrameSyntaxError):
        parse_frame("4 / 2 / 2")
    with pytest.raises(FrameSyntaxError):
        parse_frame("2000000")


def test_frame_format_parse_roundtrip_random():
    rng = random.Random(808)
    for _ in range(300):
        frame = FrameProduct(
            {rng.randint(1, 12): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))}
        )
        assert parse_frame(format_frame(frame)) == frame


def test_frame_mul_commutative_associative_random():
    rng = random.Random(11)
    for _ in range(150):
        frames = [
            FrameProduct({rng.randint(1, 9): rng.randint(-2, 2) for _ in range(rng.randint(0, 3))})
            for _ in range(3)
        ]
        a, b, c = frames
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_or_polynomial_times_one_minus_t_squared():
    rng = random.Random(21)
    for _ in range(60):
        gammas = tuple(rng.randint(1, 6) for _ in range(4))
        lhs = or_polynomial(gammas) * FrameProduct({1: 2})
        table = {}
        for g in gammas:
            table[g] = table.get(g, 0) + 1
        assert lhs == FrameProduct(table)
