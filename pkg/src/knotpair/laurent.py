"""Exact integer Laurent polynomials in a single formal variable.

Everything downstream (brackets in A, Conway polynomials in z, Jones
polynomials in quarter powers of t) is built on the `LaurentPoly` type
defined here.  Coefficients and exponents are plain Python integers; no
floating point ever enters an invariant computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
import re

# Exponents are kept inside a 64-bit-ish window so that a runaway
# computation fails loudly instead of silently chewing memory.
MAX_EXPONENT = 2**62


class TagMismatchError(ValueError):
    """Binary operation on polynomials with different variable tags."""


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial, stored as sorted (exponent, coefficient) pairs.

    ``terms`` never contains a zero coefficient; the zero polynomial has an
    empty ``terms`` tuple.  ``tag`` is a semantic label for the variable
    ('A' for brackets, 'z' for Conway, 't' for Jones in quarter powers,
    'x' for Chebyshev) and must agree between operands of binary ops.
    """

    terms: tuple[tuple[int, int], ...]
    tag: str = "A"

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_dict(coeffs: dict[int, int], tag: str = "A") -> "LaurentPoly":
        items = tuple(sorted((e, c) for e, c in coeffs.items() if c != 0))
        for e, _ in items:
            if abs(e) > MAX_EXPONENT:
                raise OverflowError(f"exponent {e} out of range")
        return LaurentPoly(items, tag)

    @staticmethod
    def zero(tag: str = "A") -> "LaurentPoly":
        return LaurentPoly((), tag)

    @staticmethod
    def one(tag: str = "A") -> "LaurentPoly":
        return LaurentPoly(((0, 1),), tag)

    @staticmethod
    def constant(c: int, tag: str = "A") -> "LaurentPoly":
        return LaurentPoly.from_dict({0: c}, tag)

    @staticmethod
    def monomial(coeff: int, exp: int, tag: str = "A") -> "LaurentPoly":
        return LaurentPoly.from_dict({exp: coeff}, tag)

    @staticmethod
    def var(tag: str = "A") -> "LaurentPoly":
        return LaurentPoly(((1, 1),), tag)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimal exponent")
        return self.terms[0][0]

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no maximal exponent")
        return self.terms[-1][0]

    # -- ring operations ----------------------------------------------------

    def _check_tag(self, other: "LaurentPoly") -> None:
        if self.tag != other.tag:
            raise TagMismatchError(f"tag mismatch: {self.tag!r} vs {other.tag!r}")

    def __add__(self, other: "int | LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.tag)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_tag(other)
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out, self.tag)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.tag)

    def __sub__(self, other: "int | LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.tag)
        return self + (-other)

    def __rsub__(self, other: "int | LaurentPoly") -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "int | LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.tag)
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms), self.tag)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_tag(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(out, self.tag)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return LaurentPoly.monomial(c, -e, self.tag) ** (-n)
            raise ValueError("cannot invert a non-monomial Laurent polynomial")
        result = LaurentPoly.one(self.tag)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structural operations ----------------------------------------------

    def invert_variable(self) -> "LaurentPoly":
        """Substitute the variable by its inverse (exponent negation)."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)), self.tag)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by variable**k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms), self.tag)

    def retag(self, tag: str) -> "LaurentPoly":
        return LaurentPoly(self.terms, tag)

    def derivative_at_one(self) -> int:
        """d/dv evaluated at v = 1, i.e. sum of exponent * coefficient."""
        return sum(e * c for e, c in self.terms)

    def evaluate(self, x: "Fraction | int") -> Fraction:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if x == 0 and self.terms and self.terms[0][0] < 0:
            raise ZeroDivisionError("negative exponent at x = 0")
        return sum((Fraction(c) * x**e for e, c in self.terms), Fraction(0))

    def __str__(self) -> str:
        return poly_to_text(self)


# ---------------------------------------------------------------------------
# spec-level operation wrappers


def lp_arith(op: str, x: LaurentPoly, y: LaurentPoly | int | None = None) -> LaurentPoly:
    """Dispatch basic arithmetic by name (add|sub|mul|neg|scale)."""
    if op == "neg":
        return -x
    if y is None:
        raise ValueError(f"operation {op!r} needs a second operand")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "scale":
        if not isinstance(y, int):
            raise ValueError("scale expects an integer")
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def lp_invert_variable(x: LaurentPoly) -> LaurentPoly:
    return x.invert_variable()


def lp_extremes(x: LaurentPoly) -> tuple[int, int, int]:
    """(min exponent, max exponent, span); rejects the zero polynomial."""
    if x.is_zero():
        raise ValueError("span of the zero polynomial is undefined")
    lo, hi = x.min_exp(), x.max_exp()
    return lo, hi, hi - lo


def lp_derivative_at_one(x: LaurentPoly) -> int:
    return x.derivative_at_one()


def chebyshev_U(n: int) -> LaurentPoly:
    """Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    u_prev = LaurentPoly.one("x")
    if n == 0:
        return u_prev
    two_x = LaurentPoly.monomial(2, 1, "x")
    u = two_x
    for _ in range(n - 1):
        u_prev, u = u, two_x * u - u_prev
    return u


def chebyshev_U_explicit(n: int) -> LaurentPoly:
    """U_n via the binomial sum over (x^2 - 1)^m, used as an independent check."""
    x = LaurentPoly.var("x")
    x2m1 = x * x - 1
    total = LaurentPoly.zero("x")
    for m in range(n // 2 + 1):
        total = total + comb(n + 1, 2 * m + 1) * (x ** (n - 2 * m)) * (x2m1**m)
    return total


def jones_from_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """Writhe-normalize a bracket and substitute A^4 = t.

    The result is returned in the variable t^(1/4): an exponent e stands for
    t^(e/4).  Integer t powers therefore appear as exponents divisible by 4,
    and the span in t is span/4.
    """
    if bracket.tag != "A":
        raise TagMismatchError("bracket must be a polynomial in A")
    if bracket.is_zero():
        raise ValueError("bracket of a nonempty diagram cannot be zero")
    sign = -1 if writhe % 2 else 1
    normalized = bracket * LaurentPoly.monomial(sign, -3 * writhe, "A")
    return normalized.retag("t")


def jones_span(jones: LaurentPoly) -> Fraction:
    """Exponent difference of a Jones polynomial measured in powers of t."""
    _, _, span = lp_extremes(jones)
    return Fraction(span, 4)


def jones_span_inclusive(jones: LaurentPoly) -> Fraction:
    """Degree-count span: exponent difference in t plus one.

    This is the convention under which the double twist family satisfies
    span = p + q; a one-term polynomial has inclusive span 1.
    """
    return jones_span(jones) + 1


@dataclass(frozen=True)
class RationalLaurent:
    """A formal quotient of Laurent polynomials, never auto-reduced."""

    numerator: LaurentPoly
    denominator: LaurentPoly

    def __post_init__(self) -> None:
        if self.denominator.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        if self.numerator.tag != self.denominator.tag:
            raise TagMismatchError("numerator/denominator tag mismatch")

    def equals(self, other: "RationalLaurent | LaurentPoly") -> bool:
        """Cross-multiplication equality."""
        if isinstance(other, LaurentPoly):
            other = RationalLaurent(other, LaurentPoly.one(other.tag))
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __add__(self, other: "RationalLaurent") -> "RationalLaurent":
        return RationalLaurent(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: "RationalLaurent") -> "RationalLaurent":
        return RationalLaurent(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __neg__(self) -> "RationalLaurent":
        return RationalLaurent(-self.numerator, self.denominator)


# ---------------------------------------------------------------------------
# canonical text form


def poly_to_text(p: LaurentPoly, exp_denom: int = 1) -> str:
    """Canonical rendering: terms sorted by ascending exponent.

    ``exp_denom`` divides displayed exponents (4 for Jones quarter powers);
    fractional exponents render as e.g. ``t^(1/2)``.
    """
    if p.is_zero():
        return "0"
    var = p.tag
    parts: list[str] = []
    for e, c in p.terms:
        frac = Fraction(e, exp_denom)
        if frac == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            if frac == 1:
                body = f"{mag}{var}"
            elif frac.denominator == 1:
                body = f"{mag}{var}^{frac.numerator}"
            else:
                body = f"{mag}{var}^({frac.numerator}/{frac.denominator})"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def jones_to_text(p: LaurentPoly) -> str:
    """Render a Jones polynomial held in quarter powers of t."""
    return poly_to_text(p, exp_denom=4)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+)?\s*
        (?:(?P<var>[A-Za-z])
           (?:\^(?:(?P<exp>-?\d+)|\((?P<num>-?\d+)/(?P<den>\d+)\)))?
        )?\s*""",
    re.VERBOSE,
)


def poly_from_text(text: str, tag: str | None = None, exp_denom: int = 1) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    Raises ValueError with the offending position on malformed input.
    """
    coeffs: dict[int, int] = {}
    pos = 0
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(tag or "A")
    seen_var = None
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing +/- between terms at position {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        var = m.group("var")
        if var is not None:
            if seen_var is None:
                seen_var = var
            elif seen_var != var:
                raise ValueError(f"mixed variables {seen_var!r} and {var!r}")
            if m.group("exp") is not None:
                exp = Fraction(int(m.group("exp")))
            elif m.group("num") is not None:
                exp = Fraction(int(m.group("num")), int(m.group("den")))
            else:
                exp = Fraction(1)
        else:
            exp = Fraction(0)
        scaled = exp * exp_denom
        if scaled.denominator != 1:
            raise ValueError(f"exponent {exp} not representable with denominator {exp_denom}")
        e = int(scaled)
        coeffs[e] = coeffs.get(e, 0) + sign * coeff
        pos = m.end()
        first = False
    result_tag = tag if tag is not None else (seen_var or "A")
    return LaurentPoly.from_dict(coeffs, result_tag)
