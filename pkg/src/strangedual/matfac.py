r"""Size-two graded matrix factorizations and the reduction that inverts
them.

A corank-3 polynomial of the shape

    f(x, z, w) = x*c(x, z, w) + a(z, w)*b(z, w)

admits the matrix factorization

    q0 = [[a, -x], [c, b]],   q1 = [[b, x], [-c, a]],
    q0*q1 = q1*q0 = f * Id,

and the associated complete intersection pair is (x*y - a, c + y*b).
Eliminating y from such a pair (the reduction L_y) recovers f, so lift
and reduce are mutually inverse on well-shaped inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import Monomial, Polynomial, parse_poly

__all__ = [
    "FactorizationTriple",
    "CompleteIntersectionPair",
    "MatfacError",
    "FactorizationError",
    "ShapeError",
    "verify_factorization",
    "lift",
    "lift_raw",
    "reduce",
    "factor_poly",
]

_X = Polynomial.variable("x")
_Y = Polynomial.variable("y")
_XY = _X * _Y


class MatfacError(Exception):
    pass


class FactorizationError(MatfacError):
    pass


class ShapeError(MatfacError):
    pass


@dataclass(frozen=True, slots=True)
class FactorizationTriple:
    """The data (a, b, c) of a size-two matrix factorization.

    a and b live in (z, w) with deg a >= 2 and deg b >= 1; c lives in
    (x, z, w).  b != 0 guarantees that x, b form a regular sequence.
    """

    a: Polynomial
    b: Polynomial
    c: Polynomial

    def __post_init__(self):
        if self.a.variables() - {"z", "w"}:
            raise FactorizationError(f"a must lie in (z, w): {self.a}")
        if self.b.variables() - {"z", "w"}:
            raise FactorizationError(f"b must lie in (z, w): {self.b}")
        if "y" in self.c.variables():
            raise FactorizationError(f"c must be free of y: {self.c}")
        if self.a.degree() < 2:
            raise FactorizationError(f"a must have degree >= 2: {self.a}")
        if self.b.is_zero() or self.b.degree() < 1:
            raise FactorizationError(f"b must have degree >= 1: {self.b}")
        if self.c.degree() < 2:
            raise FactorizationError(f"c must have degree >= 2: {self.c}")

    @staticmethod
    def parse(a: str, b: str, c: str) -> "FactorizationTriple":
        return FactorizationTriple(parse_poly(a), parse_poly(b), parse_poly(c))

    def hypersurface(self) -> Polynomial:
        """x*c + a*b, the polynomial being factorized."""
        return _X * self.c + self.a * self.b

    def __str__(self) -> str:
        return f"a = {self.a}; b = {self.b}; c = {self.c}"


@dataclass(frozen=True, slots=True)
class CompleteIntersectionPair:
    """A pair of equations cutting out a complete intersection in C^4."""

    first: Polynomial
    second: Polynomial

    def __post_init__(self):
        if self.first.is_zero() or self.second.is_zero():
            raise MatfacError("complete intersection equations must be nonzero")

    @staticmethod
    def parse(first: str, second: str) -> "CompleteIntersectionPair":
        return CompleteIntersectionPair(parse_poly(first), parse_poly(second))

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def _mat_mul(p, q):
    return [
        [
            p[0][0] * q[0][0] + p[0][1] * q[1][0],
            p[0][0] * q[0][1] + p[0][1] * q[1][1],
        ],
        [
            p[1][0] * q[0][0] + p[1][1] * q[1][0],
            p[1][0] * q[0][1] + p[1][1] * q[1][1],
        ],
    ]


def verify_factorization(triple: FactorizationTriple) -> Polynomial:
    """Check q0*q1 = q1*q0 = f*Id by exact arithmetic and return f."""
    a, b, c = triple.a, triple.b, triple.c
    q0 = [[a, -_X], [c, b]]
    q1 = [[b, _X], [-c, a]]
    f = triple.hypersurface()
    for product in (_mat_mul(q0, q1), _mat_mul(q1, q0)):
        if product[0][1] or product[1][0]:
            raise FactorizationError(
                f"off-diagonal entries nonzero: {product[0][1]}, {product[1][0]}"
            )
        if product[0][0] != f or product[1][1] != f:
            raise FactorizationError(
                f"diagonal is not f = {f}: got {product[0][0]}, {product[1][1]}"
            )
    return f


def lift(triple: FactorizationTriple) -> CompleteIntersectionPair:
    """Complete intersection pair of the factorization, in the catalog's
    sign convention (x*y - a, c + y*b)."""
    return CompleteIntersectionPair(_XY - triple.a, triple.c + _Y * triple.b)


def lift_raw(triple: FactorizationTriple) -> CompleteIntersectionPair:
    """The same pair with the first equation as (a - x*y)."""
    return CompleteIntersectionPair(triple.a - _XY, triple.c + _Y * triple.b)


def _split_by_y(p: Polynomial):
    """Split p into (y^0 part, y^1 cofactor); error on higher y powers."""
    constant = {}
    linear = {}
    for mono, coeff in p.terms():
        y_exp = mono.exponents[1]
        if y_exp == 0:
            constant[mono] = coeff
        elif y_exp == 1:
            exps = list(mono.exponents)
            exps[1] = 0
            linear[Monomial(tuple(exps))] = coeff
        else:
            raise ShapeError(f"term {mono} has y-degree {y_exp} > 1")
    return Polynomial(constant), Polynomial(linear)


def reduce(pair: CompleteIntersectionPair) -> Polynomial:
    """Wall reduction L_y of a pair shaped (+-(x*y - a), c + y*b).

    Eliminates y and returns the hypersurface equation x*c + a*b.  Shape
    violations raise :class:`ShapeError` naming the offending terms.
    """
    first, second = pair.first, pair.second
    xy_coeff = first.coefficient(_XY.leading_monomial())
    if xy_coeff == 1:
        sign = 1
    elif xy_coeff == -1:
        sign = -1
    else:
        raise ShapeError(f"first equation has no +-x*y term: {first}")
    a = -(first.scale(sign) - _XY)
    if a.variables() - {"z", "w"}:
        raise ShapeError(f"the non-x*y part of {first} is not a polynomial in (z, w): {a}")
    c, b = _split_by_y(second)
    if b.is_zero():
        raise ShapeError(f"second equation has no y-linear part: {second}")
    if b.variables() - {"z", "w"}:
        raise ShapeError(f"y-cofactor must lie in (z, w): {b}")
    return _X * c + a * b


def _monomial_divisors(mono):
    """All monomials dividing ``mono`` (within z, w only here)."""
    from itertools import product as iproduct

    ranges = [range(e + 1) for e in mono.exponents]
    for exps in iproduct(*ranges):
        yield Monomial(tuple(exps))


def factor_poly(f: Polynomial) -> FactorizationTriple:
    """Find a factorization f = x*c + a*b of the required shape.

    The terms of f divisible by x supply x*c; the remainder r(z, w) is
    searched for monomial-times-(monomial or binomial) splits a*b with
    deg a >= 2 and deg b >= 1.  Ambiguities are resolved deterministically:
    smallest deg b first, then a monomial a preferred, then the larger
    leading monomial of b.  Two catalog series share the same reduced
    polynomial with different splits, so the catalog stores its triple
    per entry rather than relying on this search.
    """
    if "y" in f.variables():
        raise FactorizationError(f"input must lie in (x, z, w): {f}")
    x_part = {}
    remainder = {}
    for mono, coeff in f.terms():
        if mono.exponents[0] > 0:
            exps = list(mono.exponents)
            exps[0] -= 1
            x_part[Monomial(tuple(exps))] = coeff
        else:
            remainder[mono] = coeff
    c = Polynomial(x_part)
    r = Polynomial(remainder)
    if r.is_zero():
        raise FactorizationError("no factorization of this shape: remainder is zero")
    if len(r) > 2:
        raise FactorizationError(
            f"no factorization of this shape: remainder {r} has more than two terms"
        )
    monos = [mono for mono, _ in r.terms()]
    content = monos[0]
    for mono in monos[1:]:
        content = Monomial(tuple(min(a, b) for a, b in zip(content.exponents, mono.exponents)))
    candidates = []
    for divisor in _monomial_divisors(content):
        a_poly = Polynomial({divisor: 1})
        quotient = Polynomial({mono / divisor: coeff for mono, coeff in r.terms()})
        for a_cand, b_cand in ((a_poly, quotient), (quotient, a_poly)):
            if a_cand.degree() >= 2 and not b_cand.is_zero() and b_cand.degree() >= 1:
                candidates.append((a_cand, b_cand))
    seen = set()
    unique = []
    for pair in candidates:
        key = (pair[0], pair[1])
        if key not in seen:
            seen.add(key)
            unique.append(pair)
    if not unique:
        raise FactorizationError(
            f"no factorization of this shape: remainder {r} admits no a*b split"
        )

    def rank(pair):
        a_cand, b_cand = pair
        return (
            b_cand.degree(),
            0 if a_cand.is_monomial() else 1,
            tuple(-e for e in b_cand.leading_monomial().exponents),
        )

    a_best, b_best = min(unique, key=rank)
    return FactorizationTriple(a_best, b_best, c)
