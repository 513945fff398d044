r"""Weight systems, frame products and Poincare series.

A *frame product* is a formal product

    prod_l (1 - t^l)^(alpha_l),   alpha_l in Z,

the common carrier for Poincare series of graded rings, reduced zeta
functions of monodromy operators and the orbit polynomials Or(t).  Frame
products multiply by adding exponents, expand to exact integer power
series, and convert to honest integer polynomials when the denominator
divides the numerator.

The text notation mirrors the tables it came from: ``2^2*8*10 / 1^2*4*5``
stands for (1-t^2)^2 (1-t^8)(1-t^10) / (1-t)^2 (1-t^4)(1-t^5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "WeightSystem",
    "FrameProduct",
    "IntPolynomial",
    "SeriesError",
    "FrameSyntaxError",
    "NotPolynomialError",
    "SaitoDomainError",
    "poincare",
    "frame_mul",
    "or_polynomial",
    "saito_dual",
    "frame_to_polynomial",
    "frame_expand",
    "parse_frame",
    "format_frame",
    "parse_weight_system",
]

MAX_FRAME_BASE = 10**6


class SeriesError(Exception):
    pass


class FrameSyntaxError(SeriesError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class NotPolynomialError(SeriesError):
    """The frame product is not a polynomial; carries the offending term."""

    def __init__(self, message: str, remainder_degree: int, remainder_coeff: int):
        super().__init__(message)
        self.remainder_degree = remainder_degree
        self.remainder_coeff = remainder_coeff


class SaitoDomainError(SeriesError):
    """A frame exponent sits at an l that does not divide the degree."""


@dataclass(frozen=True, slots=True)
class WeightSystem:
    """Weights (w_1..w_n) and degrees (d_1..d_k) of a graded complete
    intersection; printed as ``w1,w2,w3,w4;d1,d2``."""

    weights: tuple[int, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.weights or not self.degrees:
            raise SeriesError("weight system needs weights and degrees")
        if any(v <= 0 for v in self.weights + self.degrees):
            raise SeriesError(f"weight system entries must be positive: {self}")

    @staticmethod
    def parse(text: str) -> "WeightSystem":
        return parse_weight_system(text)

    def __str__(self) -> str:
        ws = ",".join(str(w) for w in self.weights)
        ds = ",".join(str(d) for d in self.degrees)
        return f"{ws};{ds}"


def parse_weight_system(text: str) -> WeightSystem:
    """Parse the ``w1,..,wn;d1,..,dk`` notation."""
    stripped = text.replace(" ", "")
    parts = stripped.split(";")
    if len(parts) != 2:
        raise SeriesError(f"expected 'weights;degrees' in {text!r}")
    try:
        weights = tuple(int(v) for v in parts[0].split(",") if v)
        degrees = tuple(int(v) for v in parts[1].split(",") if v)
    except ValueError as exc:
        raise SeriesError(f"bad weight system {text!r}: {exc}") from None
    return WeightSystem(weights, degrees)


class FrameProduct:
    """Immutable formal product prod (1 - t^l)^(alpha_l)."""

    __slots__ = ("_exps",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        table: dict[int, int] = {}
        for base, alpha in items:
            base = int(base)
            alpha = int(alpha)
            if base <= 0:
                raise SeriesError(f"frame base must be positive, got {base}")
            if base > MAX_FRAME_BASE:
                raise SeriesError(f"frame base {base} exceeds limit {MAX_FRAME_BASE}")
            if alpha:
                acc = table.get(base, 0) + alpha
                if acc:
                    table[base] = acc
                else:
                    table.pop(base, None)
        object.__setattr__(self, "_exps", tuple(sorted(table.items())))

    @staticmethod
    def identity() -> "FrameProduct":
        return FrameProduct()

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._exps

    def exponent(self, base: int) -> int:
        for b, a in self._exps:
            if b == base:
                return a
        return 0

    def is_identity(self) -> bool:
        return not self._exps

    def __mul__(self, other: "FrameProduct") -> "FrameProduct":
        table = dict(self._exps)
        for base, alpha in other._exps:
            table[base] = table.get(base, 0) + alpha
        return FrameProduct(table)

    def __truediv__(self, other: "FrameProduct") -> "FrameProduct":
        table = dict(self._exps)
        for base, alpha in other._exps:
            table[base] = table.get(base, 0) - alpha
        return FrameProduct(table)

    def inverse(self) -> "FrameProduct":
        return FrameProduct({b: -a for b, a in self._exps})

    def degree(self) -> int:
        """Degree of the rational function: sum of l * alpha_l."""
        return sum(b * a for b, a in self._exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, FrameProduct) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __setattr__(self, name, value):
        raise AttributeError("FrameProduct is immutable")

    def __str__(self) -> str:
        return format_frame(self)

    def __repr__(self) -> str:
        return f"FrameProduct({format_frame(self)!r})"


class IntPolynomial:
    """Dense univariate polynomial over Z in the variable t."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial()

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def one_minus_t_power(l: int) -> "IntPolynomial":
        coeffs = [0] * (l + 1)
        coeffs[0] = 1
        coeffs[l] = -1
        return IntPolynomial(coeffs)

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def divide(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Euclidean division (requires the divisor's leading coefficient
        to divide exactly at each step, which holds for 1 - t^l factors)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coefficients)
        div = other.coefficients
        lead = div[-1]
        if len(rem) < len(div):
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - len(div) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + len(div) - 1]
            if top % lead:
                break
            q = top // lead
            quot[k] = q
            if q:
                for j, b in enumerate(div):
                    rem[k + j] -= q * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def evaluate(self, value: Fraction) -> Fraction:
        total = Fraction(0)
        for coeff in reversed(self.coefficients):
            total = total * value + coeff
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for power, coeff in enumerate(self.coefficients):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{power}" if mag == 1 else f"{mag}*t^{power}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"


# -- operations ---------------------------------------------------------------


def poincare(ws: WeightSystem) -> FrameProduct:
    """Poincare series prod (1-t^d_j) / prod (1-t^w_i) as a frame product."""
    table: dict[int, int] = {}
    for d in ws.degrees:
        table[d] = table.get(d, 0) + 1
    for w in ws.weights:
        table[w] = table.get(w, 0) - 1
    return FrameProduct(table)


def frame_mul(a: FrameProduct, b: FrameProduct, kind: str = "mul") -> FrameProduct:
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise SeriesError(f"unknown frame operation {kind!r}")


def or_polynomial(gammas) -> FrameProduct:
    """Orbit polynomial (1-t)^(-2) * prod_i (1-t^(gamma_i))."""
    gammas = tuple(int(g) for g in gammas)
    if len(gammas) != 4 or any(g < 1 for g in gammas):
        raise SeriesError(f"need 4 positive integers, got {gammas!r}")
    table = {1: -2}
    for g in gammas:
        table[g] = table.get(g, 0) + 1
    return FrameProduct(table)


def saito_dual(frame: FrameProduct, d: int) -> FrameProduct:
    """Saito dual: exponent at m becomes -alpha_(d/m) for every m | d."""
    if d <= 0:
        raise SaitoDomainError(f"degree must be positive, got {d}")
    for base, _ in frame.items():
        if d % base:
            raise SaitoDomainError(f"frame base {base} does not divide {d}")
    table = {}
    for m in range(1, d + 1):
        if d % m == 0:
            alpha = frame.exponent(d // m)
            if alpha:
                table[m] = -alpha
    return FrameProduct(table)


def frame_to_polynomial(frame: FrameProduct) -> IntPolynomial:
    """Expand the frame product into an integer polynomial.

    Raises :class:`NotPolynomialError` when the denominator does not
    divide the numerator exactly.
    """
    numerator = IntPolynomial.one()
    denominator = IntPolynomial.one()
    for base, alpha in frame.items():
        factor = IntPolynomial.one_minus_t_power(base)
        for _ in range(abs(alpha)):
            if alpha > 0:
                numerator = numerator * factor
            else:
                denominator = denominator * factor
    quotient, remainder = numerator.divide(denominator)
    if not remainder.is_zero():
        deg = remainder.degree()
        raise NotPolynomialError(
            f"not a polynomial: remainder has leading term "
            f"{remainder.coefficients[-1]}*t^{deg}",
            deg,
            remainder.coefficients[-1],
        )
    return quotient


def frame_expand(frame: FrameProduct, order: int) -> tuple[int, ...]:
    """Exact Taylor coefficients of the frame product up to t^order.

    Works factor by factor in increasing l: multiplying by (1-t^l) is a
    shifted subtraction, dividing is the inverse recurrence; both are
    integer-exact.
    """
    if order < 0:
        raise SeriesError("expansion order must be non-negative")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for base, alpha in frame.items():
        for _ in range(abs(alpha)):
            if alpha > 0:
                for i in range(order, base - 1, -1):
                    coeffs[i] -= coeffs[i - base]
            else:
                for i in range(base, order + 1):
                    coeffs[i] += coeffs[i - base]
    return tuple(coeffs)


# -- frame text I/O -----------------------------------------------------------


def format_frame(frame: FrameProduct) -> str:
    """Canonical notation: ascending bases, numerator then denominator.

    An empty side prints as the placeholder ``1``; the genuine factor
    (1 - t) prints with an explicit exponent (``1^1``, ``1^2``, ...) so
    the two never collide and parse/format round-trip exactly.
    """

    def side(pairs) -> str:
        if not pairs:
            return "1"
        return "*".join(
            f"{b}^{a}" if (a > 1 or b == 1) else str(b) for b, a in pairs
        )

    numerator = [(b, a) for b, a in frame.items() if a > 0]
    denominator = [(b, -a) for b, a in frame.items() if a < 0]
    if not denominator:
        return side(numerator)
    return f"{side(numerator)} / {side(denominator)}"


def parse_frame(text: str, warnings: list[str] | None = None) -> FrameProduct:
    """Parse the ``a^p*b*c / d^q*e`` notation ('*' or a unicode dot).

    A side consisting of the single token ``1`` (with no exponent) is the
    empty side.  A base repeated within one side is merged; a note is
    appended to ``warnings`` when that happens.
    """
    normalised = text.replace("·", "*").replace("⋅", "*")

    def parse_side(chunk: str, offset0: int, sign: int):
        items: list[tuple[int, int, bool]] = []
        expecting_item = True
        i = 0
        while i < len(chunk):
            ch = chunk[i]
            if ch.isspace():
                i += 1
                continue
            if ch == "*":
                if expecting_item:
                    raise FrameSyntaxError("unexpected '*'", offset0 + i + 1)
                expecting_item = True
                i += 1
                continue
            if not ch.isdigit():
                raise FrameSyntaxError(f"unexpected character {ch!r}", offset0 + i + 1)
            if not expecting_item:
                raise FrameSyntaxError("missing '*' between factors", offset0 + i + 1)
            j = i
            while j < len(chunk) and chunk[j].isdigit():
                j += 1
            base = int(chunk[i:j])
            exponent = 1
            explicit = False
            if j < len(chunk) and chunk[j] == "^":
                j += 1
                k = j
                while k < len(chunk) and chunk[k].isdigit():
                    k += 1
                if k == j:
                    raise FrameSyntaxError("expected exponent", offset0 + j + 1)
                exponent = int(chunk[j:k])
                explicit = True
                j = k
            if base <= 0:
                raise FrameSyntaxError("frame base must be positive", offset0 + i + 1)
            if base > MAX_FRAME_BASE:
                raise FrameSyntaxError(
                    f"frame base {base} exceeds limit {MAX_FRAME_BASE}", offset0 + i + 1
                )
            items.append((base, sign * exponent, explicit))
            expecting_item = False
            i = j
        if expecting_item:
            raise FrameSyntaxError("expected factor", offset0 + len(chunk) + 1)
        if len(items) == 1 and items[0][0] == 1 and not items[0][2]:
            return []  # bare "1": the empty side
        return [(base, alpha) for base, alpha, _ in items]

    slash_count = normalised.count("/")
    if slash_count > 1:
        second = normalised.index("/", normalised.index("/") + 1)
        raise FrameSyntaxError("more than one '/'", second + 1)
    if slash_count:
        num_text, den_text = normalised.split("/")
        pairs = parse_side(num_text, 0, +1)
        pairs += parse_side(den_text, len(num_text) + 1, -1)
    else:
        pairs = parse_side(normalised, 0, +1)
    merged: dict[int, int] = {}
    for base, alpha in pairs:
        if base in merged and warnings is not None:
            warnings.append(f"repeated base {base} merged")
        merged[base] = merged.get(base, 0) + alpha
    return FrameProduct(merged)
