"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are dense coefficient tuples, constant term first, trailing
zeros trimmed.  The zero polynomial has an empty tuple and degree -1.
All coefficients are fractions.Fraction; nothing here ever touches floats,
so equality of computed values is meaningful.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rat = Fraction

RatLike = Union[Rat, int, str]


class DivByZeroPoly(ZeroDivisionError):
    """Division or reduction by the zero polynomial."""


class GcdOfZeros(ValueError):
    """gcd(0, 0) is undefined."""


class ZeroInput(ValueError):
    """Operation not defined for the zero polynomial."""


class DegreeTooSmall(ValueError):
    """Operation needs a polynomial of positive degree."""


class PolyParseError(ValueError):
    """Bad polynomial text; .pos is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _rat(value: RatLike) -> Rat:
    if isinstance(value, Rat):
        return value
    return Rat(value)


@dataclass(frozen=True)
class Poly:
    """Immutable rational polynomial.

    >>> p = Poly([1, 0, -2])
    >>> p.degree
    2
    >>> p(Rat(3))
    Fraction(-17, 1)
    """

    coeffs: tuple[Rat, ...]

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Rat:
        if self.is_zero:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Rat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Rat(0)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroInput("cannot normalize the zero polynomial")
        lc = self.leading
        if lc == 1:
            return self
        return Poly(c / lc for c in self.coeffs)

    def __call__(self, x: RatLike) -> Rat:
        x = _rat(x)
        acc = Rat(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Rat(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, k: RatLike) -> "Poly":
        k = _rat(k)
        return Poly(k * c for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return Poly((Rat(0),) * k + self.coeffs)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def constant(c: RatLike) -> Poly:
    return Poly([_rat(c)])


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: a = q*b + r with deg r < deg b."""
    if b.is_zero:
        raise DivByZeroPoly("division by the zero polynomial")
    if a.degree < b.degree:
        return ZERO, a
    rem = list(a.coeffs)
    quo = [Rat(0)] * (a.degree - b.degree + 1)
    lb = b.leading
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + b.degree] / lb
        quo[i] = c
        if c != 0:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return Poly(quo), Poly(rem[: b.degree])


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divrem(a, b)
    if not r.is_zero:
        raise ValueError("division is not exact")
    return q


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise GcdOfZeros("gcd(0, 0) is undefined")
    while not b.is_zero:
        _, r = divrem(a, b)
        a, b = b, r
    return a.monic()


def derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def compose(p: Poly, q: Poly) -> Poly:
    """p(q(t)) by Horner in q."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * q + constant(c)
    return acc


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ZeroInput("squarefree part of 0 is undefined")
    if p.degree == 0:
        return ONE
    return exact_div(p, gcd(p, derivative(p))).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[int, Poly]]:
    """Yun decomposition: [(multiplicity, monic factor)], factors coprime,
    squarefree, nonconstant, with p = content * prod(factor^multiplicity)."""
    if p.is_zero:
        raise ZeroInput("decomposition of 0 is undefined")
    if p.degree == 0:
        return []
    out: list[tuple[int, Poly]] = []
    g = gcd(p, derivative(p))
    c = exact_div(p.monic(), g)
    d = exact_div(derivative(p.monic()), g) - derivative(c)
    i = 1
    while c.degree > 0:
        y = gcd(c, d) if not d.is_zero else c.monic()
        if y.degree > 0:
            out.append((i, y))
        c = exact_div(c, y)
        d = exact_div(d, y) - derivative(c)
        i += 1
    return out


def resultant(a: Poly, b: Poly) -> Rat:
    """Resultant via the Euclidean reduction rules."""
    if a.is_zero or b.is_zero:
        return Rat(0)
    if a.degree == 0 and b.degree == 0:
        return Rat(1)
    if b.degree == 0:
        return b.coeffs[0] ** a.degree
    if a.degree == 0:
        return a.coeffs[0] ** b.degree
    if a.degree < b.degree:
        sign = Rat(-1) ** (a.degree * b.degree)
        return sign * resultant(b, a)
    _, r = divrem(a, b)
    sign = Rat(-1) ** (a.degree * b.degree)
    if r.is_zero:
        return Rat(0)
    return sign * b.leading ** (a.degree - r.degree) * resultant(b, r)


def discriminant(p: Poly) -> Rat:
    """disc(p) = (-1)^(d(d-1)/2) res(p, p') / lc(p); zero iff p has a
    repeated root."""
    d = p.degree
    if d < 1:
        raise DegreeTooSmall("discriminant needs degree >= 1")
    sign = Rat(-1) ** (d * (d - 1) // 2)
    return sign * resultant(p, derivative(p)) / p.leading


def _int_nth_root(v: int, m: int) -> Optional[int]:
    """Exact integer m-th root of v >= 0, or None."""
    if v < 0:
        return None
    if v in (0, 1):
        return v
    if m == 1:
        return v
    if m == 2:
        r = math.isqrt(v)
        return r if r * r == v else None
    r = round(v ** (1.0 / m))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**m == v:
            return cand
    return None


def rat_nth_root(x: Rat, m: int) -> Optional[Rat]:
    """Exact rational m-th root, or None.  Even m needs x >= 0 and returns
    the nonnegative root; odd m keeps the sign."""
    if m < 1:
        raise ValueError("root index must be positive")
    neg = x < 0
    if neg and m % 2 == 0:
        return None
    num = _int_nth_root(abs(x.numerator), m)
    den = _int_nth_root(x.denominator, m)
    if num is None or den is None:
        return None
    r = Rat(num, den)
    return -r if neg else r


def poly_sqrt(p: Poly) -> Optional[Poly]:
    """The square root with positive leading coefficient, or None when p is
    not the square of a rational polynomial."""
    if p.is_zero:
        return ZERO
    if p.degree % 2 != 0:
        return None
    if p.leading < 0:
        return None
    s = rat_nth_root(p.leading, 2)
    if s is None:
        return None
    k = p.degree // 2
    q = [Rat(0)] * (k + 1)
    q[k] = s
    for i in range(1, k + 1):
        acc = p.coeff(2 * k - i)
        for j in range(1, i):
            acc -= q[k - j] * q[k - i + j]
        q[k - i] = acc / (2 * s)
    root = Poly(q)
    if root * root == p:
        return root
    return None


# -- text form ---------------------------------------------------------------
#
# Human syntax: terms joined by + or -, highest degree first on output, e.g.
# "t^4 - 2*t^2 + 1", "3/2*t", "-t", "0".  The parser also accepts terms in
# any order and repeated terms (they sum).

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<varc>[a-zA-Z]\w*)\s*(?:\^\s*(?P<expc>\d+))?)?
          | (?P<varb>[a-zA-Z]\w*)\s*(?:\^\s*(?P<expb>\d+))?
        )""",
    re.VERBOSE,
)


def parse_poly(text: str, var: str = "t") -> Poly:
    """Parse human polynomial syntax.  Raises PolyParseError with the
    offending position."""
    s = text
    pos = 0
    end = len(s)
    terms: dict[int, Rat] = {}
    first = True
    while True:
        while pos < end and s[pos].isspace():
            pos += 1
        if pos == end:
            break
        m = _TERM_RE.match(s, pos)
        if not m or m.start() != pos:
            raise PolyParseError("expected a term", pos)
        if not first and m.group("sign") is None:
            raise PolyParseError("expected '+' or '-' between terms", pos)
        sign = -1 if m.group("sign") == "-" else 1
        name = m.group("varc") or m.group("varb")
        if name is not None and name != var:
            offset = m.start("varc") if m.group("varc") else m.start("varb")
            raise PolyParseError(f"unknown variable {name!r}", offset)
        if m.group("coeff") is not None:
            coeff = Rat(m.group("coeff"))
            if m.group("varc") is not None:
                exp = int(m.group("expc")) if m.group("expc") else 1
            else:
                exp = 0
        else:
            coeff = Rat(1)
            exp = int(m.group("expb")) if m.group("expb") else 1
        terms[exp] = terms.get(exp, Rat(0)) + sign * coeff
        pos = m.end()
        first = False
    if first:
        raise PolyParseError("empty polynomial", 0)
    out = [Rat(0)] * (max(terms) + 1)
    for exp, c in terms.items():
        out[exp] = c
    return Poly(out)


def format_poly(p: Poly, var: str = "t") -> str:
    """Canonical human form, highest degree first."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif mag == 1:
            body = var if k == 1 else f"{var}^{k}"
        else:
            body = f"{mag}*{var}" if k == 1 else f"{mag}*{var}^{k}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def to_coeff_strings(p: Poly) -> list[str]:
    """JSON form: ["num/den", ...] from the constant term up."""
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def from_coeff_strings(items: Sequence[Union[str, int]]) -> Poly:
    """Inverse of to_coeff_strings; also accepts bare integers and
    "num" strings."""
    out = []
    for i, item in enumerate(items):
        try:
            out.append(Rat(item))
        except (ValueError, ZeroDivisionError) as exc:
            raise PolyParseError(f"bad coefficient {item!r}: {exc}", i) from None
    return Poly(out)
