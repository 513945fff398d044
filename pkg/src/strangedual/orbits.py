r"""Weighted C*-action analysis on complete-intersection zero sets.

Given a pair of equations (h1, h2i) that is weighted homogeneous for a
C*-action with positive integer weights, the exceptional orbits (orbits
with nontrivial isotropy) all lie in coordinate strata whose weights
share a common factor.  Enumerating the strata, slicing each orbit by
fixing the lowest-weight coordinate to 1 and solving the restricted
system exactly over the rationals yields explicit orbit representatives,
their isotropy orders and a singular-locus flag from the exact Jacobian
rank.

The case (A)/(B)/(C) classification and the principal-orbit filter turn
this enumeration into the pair of isotropy orders attached to each half
of the defining equations; the Newton-polygon split of the second
equation produces those halves in the first place.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import _linalg
from .polyring import Monomial, Polynomial, QuasiFailure, VARIABLES, quasi_degree
from .series import WeightSystem

__all__ = [
    "CStarAction",
    "OrbitRep",
    "UnresolvedOrbit",
    "NewtonFace",
    "NewtonSplit",
    "CaseInfo",
    "OrbitError",
    "StratumError",
    "NewtonStructureError",
    "isotropy_order",
    "split_newton",
    "classify_case",
    "exceptional_orbits",
    "dolgachev_pair",
]


class OrbitError(Exception):
    pass


class StratumError(OrbitError):
    """The restricted system could not be reduced to univariate form."""


class NewtonStructureError(OrbitError):
    """The Newton polygon did not produce exactly two qualifying faces."""


@dataclass(frozen=True, slots=True)
class CStarAction:
    """Diagonal C*-action with positive integer weights on (x, y, z, w)."""

    weights: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.weights) != 4 or any(w <= 0 for w in self.weights):
            raise OrbitError(f"need 4 positive weights, got {self.weights!r}")


def isotropy_order(action: CStarAction, point) -> int:
    """Order of the isotropy group: gcd of the weights of the nonzero
    coordinates."""
    values = [Fraction(v) for v in point]
    if all(v == 0 for v in values):
        raise OrbitError("the origin has no isotropy order")
    g = 0
    for weight, value in zip(action.weights, values):
        if value != 0:
            g = gcd(g, weight)
    return g


@dataclass(frozen=True, slots=True)
class OrbitRep:
    """One exceptional orbit: a rational representative, its isotropy
    order, the singular-locus flag and the coordinate stratum."""

    point: tuple[Fraction, Fraction, Fraction, Fraction]
    isotropy: int
    in_singular_locus: bool
    stratum: tuple[str, ...]

    def __str__(self) -> str:
        coords = ", ".join(str(v) for v in self.point)
        flag = "yes" if self.in_singular_locus else "no"
        return (
            f"stratum={{{','.join(self.stratum)}}} point=({coords}) "
            f"isotropy={self.isotropy} singular={flag}"
        )


@dataclass(frozen=True, slots=True)
class UnresolvedOrbit:
    """A stratum solution with no rational representative: the residual
    univariate factor is reported instead of a point."""

    stratum: tuple[str, ...]
    variable: str
    coefficients: tuple[int, ...]

    def defining_polynomial(self) -> str:
        pieces = []
        for power, coeff in enumerate(self.coefficients):
            if coeff:
                pieces.append(f"{coeff}*{self.variable}^{power}")
        return " + ".join(pieces) if pieces else "0"

    def __str__(self) -> str:
        return (
            f"stratum={{{','.join(self.stratum)}}} unresolved: "
            f"{self.defining_polynomial()} = 0"
        )


# -- univariate helpers -------------------------------------------------------


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _uni_eval(coeffs, x: Fraction) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _uni_deflate(coeffs, root: Fraction) -> list[Fraction]:
    """Divide by (t - root); assumes root is an exact root."""
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    carry = coeffs[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * root
    return out


def _uni_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _trim(a)
    return a


def _uni_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _trim(_uni_mod(a, b))
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def _rational_roots(coeffs) -> tuple[set[Fraction], tuple[int, ...] | None]:
    """Nonzero rational roots of a univariate polynomial over Q.

    Returns ``(roots, residual)`` where ``residual`` is the integer
    coefficient tuple of the rootless factor of degree >= 1 that remains
    after splitting off t^k and all rational roots, or ``None`` if the
    polynomial splits completely.
    """
    work = _trim([Fraction(c) for c in coeffs])
    if not work:
        raise OrbitError("zero polynomial has every value as a root")
    low = next(i for i, c in enumerate(work) if c != 0)
    work = work[low:]
    roots: set[Fraction] = set()
    while len(work) > 1:
        denom_lcm = 1
        for c in work:
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in work]
        found = None
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for candidate in (Fraction(p, q), Fraction(-p, q)):
                    if _uni_eval(work, candidate) == 0:
                        found = candidate
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.add(found)
        work = _trim(_uni_deflate(work, found))
    residual = None
    if len(work) > 1:
        denom_lcm = 1
        for c in work:
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in work]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        residual = tuple(v // (g or 1) for v in ints)
    return roots, residual


def _restrict_to_univariate(p: Polynomial, var_index: int) -> list[Fraction]:
    coeffs: dict[int, Fraction] = {}
    for mono, c in p.terms():
        for k, e in enumerate(mono.exponents):
            if k != var_index and e != 0:
                raise OrbitError(f"polynomial {p} is not univariate in {VARIABLES[var_index]}")
        power = mono.exponents[var_index]
        coeffs[power] = coeffs.get(power, Fraction(0)) + c
    top = max(coeffs, default=0)
    return [coeffs.get(i, Fraction(0)) for i in range(top + 1)]


# -- stratum solving ----------------------------------------------------------


def _zero_substitution(keep: set[int], fixed: dict[int, Fraction]) -> dict[str, Polynomial]:
    mapping: dict[str, Polynomial] = {}
    for i, name in enumerate(VARIABLES):
        if i in fixed:
            mapping[name] = Polynomial.constant(fixed[i])
        elif i not in keep:
            mapping[name] = Polynomial.zero()
    return mapping


def _linear_eliminable(p: Polynomial, candidates: list[int]) -> tuple[int, Fraction, Polynomial] | None:
    """Find a variable in which p is linear with a constant coefficient.

    Returns ``(index, coefficient, rest)`` with p = coefficient*var + rest
    and rest free of the variable, or ``None``.
    """
    for idx in candidates:
        linear: dict = {}
        rest: dict = {}
        ok = True
        for mono, coeff in p.terms():
            e = mono.exponents[idx]
            if e == 0:
                rest[mono] = coeff
            elif e == 1:
                exps = list(mono.exponents)
                exps[idx] = 0
                linear[Monomial(tuple(exps))] = coeff
            else:
                ok = False
                break
        if not ok or not linear:
            continue
        lin_poly = Polynomial(linear)
        if lin_poly.is_monomial() and lin_poly.leading_monomial().degree == 0:
            coefficient = lin_poly.coefficient(lin_poly.leading_monomial())
            return idx, coefficient, Polynomial(rest)
    return None


def _solve_stratum(h1: Polynomial, h2: Polynomial, stratum: tuple[int, ...], slice_index: int):
    """Solve h1 = h2 = 0 on the stratum (coordinates in ``stratum`` nonzero,
    others zero) with the slice coordinate fixed to 1.

    Returns ``(points, unresolved)`` where points are full rational
    4-tuples with all stratum coordinates nonzero.
    """
    keep = set(stratum)
    free = sorted(keep - {slice_index})
    sub = _zero_substitution(keep, {slice_index: Fraction(1)})
    q1 = h1.substitute(sub)
    q2 = h2.substitute(sub)

    def assemble(assignment: dict[int, Fraction]):
        point = [Fraction(0)] * 4
        point[slice_index] = Fraction(1)
        for idx, value in assignment.items():
            point[idx] = value
        return tuple(point)

    if not free:
        if q1.is_zero() and q2.is_zero():
            return [assemble({})], []
        return [], []

    if len(free) == 1:
        idx = free[0]
        if q1.is_zero() and q2.is_zero():
            raise StratumError(
                f"system too complex: both equations vanish on stratum "
                f"{{{','.join(VARIABLES[i] for i in stratum)}}}"
            )
        if q1.is_zero():
            g = _restrict_to_univariate(q2, idx)
        elif q2.is_zero():
            g = _restrict_to_univariate(q1, idx)
        else:
            g = _uni_gcd(_restrict_to_univariate(q1, idx), _restrict_to_univariate(q2, idx))
        g = _trim(list(g))
        if len(g) == 1:
            return [], []  # constant gcd: no common roots at all
        roots, residual = _rational_roots(g)
        points = [assemble({idx: r}) for r in roots if r != 0]
        unresolved = []
        if residual is not None:
            unresolved.append((VARIABLES[idx], residual))
        return points, unresolved

    if len(free) == 2:
        if q1.is_zero() and q2.is_zero():
            raise StratumError(
                f"system too complex: both equations vanish on stratum "
                f"{{{','.join(VARIABLES[i] for i in stratum)}}}"
            )
        for first, second in ((q1, q2), (q2, q1)):
            if first.is_zero():
                continue
            hit = _linear_eliminable(first, free)
            if hit is None:
                continue
            idx, coeff, rest = hit
            other_idx = next(i for i in free if i != idx)
            image = rest.scale(Fraction(-1) / coeff)
            replaced = second.substitute({VARIABLES[idx]: image})
            if replaced.is_zero():
                raise StratumError(
                    "system too complex: positive-dimensional solutions on stratum "
                    f"{{{','.join(VARIABLES[i] for i in stratum)}}}"
                )
            g = _restrict_to_univariate(replaced, other_idx)
            roots, residual = _rational_roots(g)
            points = []
            for root in roots:
                if root == 0:
                    continue
                value = image.evaluate(assemble({other_idx: root}))
                if value == 0:
                    continue
                points.append(assemble({other_idx: root, idx: value}))
            unresolved = []
            if residual is not None:
                unresolved.append((VARIABLES[other_idx], residual))
            return points, unresolved
        raise StratumError(
            "system too complex: no constant-coefficient linear variable on stratum "
            f"{{{','.join(VARIABLES[i] for i in stratum)}}}"
        )

    raise StratumError(
        "system too complex: stratum "
        f"{{{','.join(VARIABLES[i] for i in stratum)}}} has {len(free)} free coordinates"
    )


def _rational_group_images(point, weights, slice_index):
    """Orbit of a rational point under the residual cyclic group of the
    slice, keeping only the rational images (sign patterns)."""
    order = weights[slice_index]
    images = set()
    for j in range(order):
        signs = []
        rational = True
        for i in range(4):
            e = (j * weights[i]) % order
            if point[i] == 0 or e == 0:
                signs.append(1)
            elif 2 * e == order:
                signs.append(-1)
            else:
                rational = False
                break
        if rational:
            images.add(tuple(s * v for s, v in zip(signs, point)))
    return images


def exceptional_orbits(h1: Polynomial, h2i: Polynomial, action: CStarAction):
    """Enumerate the exceptional orbits of the action on {h1 = h2i = 0}.

    Returns a list of :class:`OrbitRep` (and :class:`UnresolvedOrbit` for
    stratum solutions with no rational representative) in deterministic
    stratum order.  The pair must be weighted homogeneous for the action.
    """
    for label, p in (("first", h1), ("second", h2i)):
        verdict = quasi_degree(p, action.weights)
        if isinstance(verdict, QuasiFailure):
            raise OrbitError(f"{label} equation is not quasi-homogeneous: {verdict}")
    weights = action.weights
    results: list = []
    strata = []
    for size in range(1, 5):
        strata.extend(combinations(range(4), size))
    for stratum in strata:
        g = 0
        for i in stratum:
            g = gcd(g, weights[i])
        if g <= 1:
            continue
        slice_index = min(stratum, key=lambda i: (weights[i], i))
        points, unresolved = _solve_stratum(h1, h2i, stratum, slice_index)
        seen: set = set()
        names = tuple(VARIABLES[i] for i in stratum)
        for point in sorted(points):
            if point in seen:
                continue
            orbit_images = _rational_group_images(point, weights, slice_index)
            seen |= orbit_images
            if h1.evaluate(point) != 0 or h2i.evaluate(point) != 0:
                raise OrbitError(f"internal error: representative {point} misses the variety")
            jacobian = [
                [h1.partial(v).evaluate(point) for v in VARIABLES],
                [h2i.partial(v).evaluate(point) for v in VARIABLES],
            ]
            results.append(
                OrbitRep(
                    point=point,
                    isotropy=g,
                    in_singular_locus=_linalg.mat_rank(jacobian) < 2,
                    stratum=names,
                )
            )
        for variable, residual in unresolved:
            results.append(UnresolvedOrbit(names, variable, residual))
    return results


# -- case classification and Dolgachev numbers --------------------------------


@dataclass(frozen=True, slots=True)
class CaseInfo:
    """Outcome of the (A)/(B)/(C) trichotomy.

    (A) carries the two coordinates whose vanishing cuts the linear
    subspace contained in the variety; (B) carries the factors g1, g2 of
    the shape (g1(x,y,w), z*g2(x,y,z)).
    """

    kind: str
    subspace: tuple[str, str] | None = None
    g1: Polynomial | None = None
    g2: Polynomial | None = None

    def __str__(self) -> str:
        if self.kind == "A":
            i, j = self.subspace
            return f"(A) contains {{{i} = {j} = 0}}"
        if self.kind == "B":
            return f"(B) shape (g1, z*g2) with g2 = {self.g2}"
        return "(C)"


def classify_case(h1: Polynomial, h2i: Polynomial) -> CaseInfo:
    """Classify the pair per the (A)/(B)/(C) trichotomy."""
    for i, j in combinations(range(4), 2):
        sub = {VARIABLES[i]: Polynomial.zero(), VARIABLES[j]: Polynomial.zero()}
        if h1.substitute(sub).is_zero() and h2i.substitute(sub).is_zero():
            return CaseInfo("A", subspace=(VARIABLES[i], VARIABLES[j]))
    if "z" not in h1.variables():
        z_index = VARIABLES.index("z")
        if all(mono.exponents[z_index] >= 1 for mono in h2i.support()):
            g2 = Polynomial(
                {
                    Monomial(
                        tuple(
                            e - 1 if k == z_index else e
                            for k, e in enumerate(mono.exponents)
                        )
                    ): coeff
                    for mono, coeff in h2i.terms()
                }
            )
            if "w" not in g2.variables():
                return CaseInfo("B", g1=h1, g2=g2)
    return CaseInfo("C")


def dolgachev_pair(h1: Polynomial, h2i: Polynomial, action: CStarAction) -> tuple[int, int]:
    """Isotropy orders of the two principal exceptional orbits, ascending.

    Case (A) drops orbits inside the linear subspace, case (B) drops
    orbits inside U = {g1 = z = 0}, case (C) drops the orbit coinciding
    with the singular locus.  Exactly two orbits must survive.
    """
    orbits = exceptional_orbits(h1, h2i, action)
    unresolved = [o for o in orbits if isinstance(o, UnresolvedOrbit)]
    if unresolved:
        raise OrbitError(f"unresolved orbits present: {unresolved[0]}")
    case = classify_case(h1, h2i)
    if case.kind == "A":
        i = VARIABLES.index(case.subspace[0])
        j = VARIABLES.index(case.subspace[1])
        survivors = [o for o in orbits if not (o.point[i] == 0 and o.point[j] == 0)]
    elif case.kind == "B":
        z_index = VARIABLES.index("z")
        survivors = [o for o in orbits if o.point[z_index] != 0]
    else:
        survivors = [o for o in orbits if not o.in_singular_locus]
    if len(survivors) != 2:
        listing = "; ".join(str(o) for o in orbits) or "none"
        raise OrbitError(
            f"expected 2 principal orbits in case ({case.kind}), found "
            f"{len(survivors)} among: {listing}"
        )
    pair = sorted(o.isotropy for o in survivors)
    return (pair[0], pair[1])


# -- Newton polygon split -----------------------------------------------------


@dataclass(frozen=True, slots=True)
class NewtonFace:
    """One origin-avoiding face: its terms and the face weight system."""

    polynomial: Polynomial
    weights: WeightSystem


@dataclass(frozen=True, slots=True)
class NewtonSplit:
    """The two faces, ordered by ascending face degrees."""

    faces: tuple[NewtonFace, NewtonFace]

    def polynomials(self) -> tuple[Polynomial, Polynomial]:
        return (self.faces[0].polynomial, self.faces[1].polynomial)


def _strict_feasible(inequalities: list[list[Fraction]], nvars: int):
    """Fourier-Motzkin solver for strict inequalities c0 + sum ci ti > 0.

    Returns a satisfying point (list of Fractions) or ``None``.
    """
    if nvars == 0:
        return [] if all(row[0] > 0 for row in inequalities) else None
    lowers, uppers, passthrough = [], [], []
    for row in inequalities:
        coeff = row[nvars]
        rest = row[:nvars]
        if coeff > 0:
            lowers.append([-(v / coeff) for v in rest])  # t > -(rest)/coeff
        elif coeff < 0:
            uppers.append([-(v / coeff) for v in rest])  # t < -(rest)/coeff
        else:
            passthrough.append(rest)
    combined = list(passthrough)
    for low in lowers:
        for up in uppers:
            combined.append([u - l for l, u in zip(low, up)])  # up - low > 0
    inner = _strict_feasible(combined, nvars - 1)
    if inner is None:
        return None
    low_vals = [_affine_eval(row, inner) for row in lowers]
    up_vals = [_affine_eval(row, inner) for row in uppers]
    if low_vals and up_vals:
        value = (max(low_vals) + min(up_vals)) / 2
    elif low_vals:
        value = max(low_vals) + 1
    elif up_vals:
        value = min(up_vals) - 1
    else:
        value = Fraction(0)
    return inner + [value]


def _affine_eval(row, values) -> Fraction:
    total = row[0]
    for coeff, value in zip(row[1:], values):
        total += coeff * value
    return total


def split_newton(h2: Polynomial, h1: Polynomial) -> NewtonSplit:
    """Split h2 along the two faces of its Newton polygon at infinity.

    A subset of the support spans a qualifying face when some positive
    weight vector makes the subset's terms share the top degree, keeps
    every other support point (and the origin) strictly below it, and
    makes h1 homogeneous as well; the last condition is what singles out
    the two faces the weighted-homogeneous pairs live on.  Exactly two
    qualifying faces must exist.
    """
    monos = [mono for mono, _ in h2.terms()]
    if len(monos) != 4:
        raise NewtonStructureError(f"h2 must have exactly 4 terms, found {len(monos)}")
    h1_monos = [mono for mono, _ in h1.terms()]
    if len(h1_monos) < 2:
        raise NewtonStructureError("h1 must have at least 2 terms")
    faces = []
    subsets = [tuple(c) for c in combinations(range(4), 3)] + [(0, 1, 2, 3)]
    for subset in subsets:
        rows = [list(monos[i].exponents) for i in subset]
        rhs = [Fraction(1)] * len(subset)
        for other in h1_monos[1:]:
            rows.append(
                [a - b for a, b in zip(other.exponents, h1_monos[0].exponents)]
            )
            rhs.append(Fraction(0))
        solved = _linalg.solve_affine(rows, rhs)
        if solved is None:
            continue
        u0, basis = solved
        # Strict constraints: u_i > 0 and u.a' < 1 for off-face support points.
        constraints = []
        for i in range(4):
            constraints.append([u0[i]] + [vec[i] for vec in basis])
        for k in range(4):
            if k in subset:
                continue
            exps = monos[k].exponents
            value = Fraction(1) - sum(Fraction(e) * u for e, u in zip(exps, u0))
            row = [value]
            for vec in basis:
                row.append(-sum(Fraction(e) * v for e, v in zip(exps, vec)))
            constraints.append(row)
        solution = _strict_feasible(constraints, len(basis))
        if solution is None:
            continue
        u = [u0[i] + sum(t * vec[i] for t, vec in zip(solution, basis)) for i in range(4)]
        weights = _linalg.primitive_integer_vector(u)
        d2 = int(sum(Fraction(e) * wt for e, wt in zip(monos[subset[0]].exponents, weights)))
        d1 = int(sum(Fraction(e) * wt for e, wt in zip(h1_monos[0].exponents, weights)))
        face_poly = Polynomial({monos[i]: h2.coefficient(monos[i]) for i in subset})
        faces.append(
            (
                (d1, d2, tuple(-wt for wt in weights)),
                NewtonFace(face_poly, WeightSystem(tuple(weights), (d1, d2))),
            )
        )
    if len(faces) != 2:
        raise NewtonStructureError(
            f"expected exactly 2 origin-avoiding faces, found {len(faces)}"
        )
    faces.sort(key=lambda item: item[0])
    return NewtonSplit((faces[0][1], faces[1][1]))
