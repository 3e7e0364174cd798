"""Polynomial Pell equation core: verification, seeding, powers, roots.

A solution is a triple of rational polynomials with A^2 - D*B^2 = 1, B != 0,
D squarefree of even degree 2d.  Powers of a solution are driven by the
degree-m Chebyshev polynomial: the m-th power has first component T_m(A).
The default degree policy asks deg D >= 4; allow_d1 relaxes it to 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cache
from typing import Optional, Union

from .exactpoly import (
    ONE,
    DegreeTooSmall,
    Poly,
    Rat,
    compose,
    derivative,
    discriminant,
    exact_div,
    poly_sqrt,
    rat_nth_root,
    squarefree_decomposition,
    squarefree_part,
    divrem,
)

NOT_UNIT = "NotUnit"
ZERO_B = "ZeroB"
ODD_DEGREE_D = "OddDegreeD"
SMALL_DEGREE_D = "SmallDegreeD"
NON_SQUAREFREE_D = "NonSquarefreeD"


@dataclass(frozen=True)
class RejectionReason:
    """Structured negative verdict; kind is one of the module constants."""

    kind: str
    message: str


@dataclass(frozen=True)
class PellSolution:
    """Verified solution of A^2 - D*B^2 = 1 with n = deg A, d = deg D / 2."""

    A: Poly
    B: Poly
    D: Poly
    n: int
    d: int


@dataclass
class PowerClassification:
    """Which admissible exponents m have a rational Chebyshev root of A.

    admissible_m holds every candidate (m >= 2, m | n, n/m >= d); witnesses
    only the m where extraction succeeded.  primitive means no witness, i.e.
    primitive over the rationals; a root might still exist with irrational
    coefficients.
    """

    n: int
    admissible_m: frozenset[int]
    witnesses: dict[int, Poly] = field(default_factory=dict)
    primitive: bool = True


def verify_pell(
    A: Poly, B: Poly, D: Poly, allow_d1: bool = False
) -> Union[PellSolution, RejectionReason]:
    """Check the unit equation and the degree/squarefreeness policy."""
    if B.is_zero:
        return RejectionReason(ZERO_B, "B = 0 gives only the trivial unit")
    if A * A - D * (B * B) != ONE:
        return RejectionReason(NOT_UNIT, "A^2 - D*B^2 != 1")
    if D.degree % 2 != 0:
        return RejectionReason(
            ODD_DEGREE_D, f"deg D = {D.degree} is odd; no polynomial B*sqrt(D) form"
        )
    least = 2 if allow_d1 else 4
    if D.degree < least:
        return RejectionReason(
            SMALL_DEGREE_D,
            f"deg D = {D.degree} below policy minimum {least} (allow_d1={allow_d1})",
        )
    if discriminant(D) == 0:
        return RejectionReason(NON_SQUAREFREE_D, "D has a repeated root")
    return PellSolution(A=A, B=B, D=D, n=A.degree, d=D.degree // 2)


@cache
def chebyshev(m: int) -> Poly:
    """Degree-m Chebyshev polynomial by the three-term recurrence."""
    if m < 0:
        raise ValueError("chebyshev index must be >= 0")
    if m == 0:
        return ONE
    if m == 1:
        return Poly([0, 1])
    two_t = Poly([0, 2])
    return two_t * chebyshev(m - 1) - chebyshev(m - 2)


def power_polynomial(m: int) -> Poly:
    """Degree-m polynomial f with f(t^2) = T_m(t)^2, from the closed even/odd
    formulas (not from chebyshev; the composition identity is a test)."""
    if m < 1:
        raise ValueError("power polynomial index must be >= 1")
    k = m // 2
    w = Poly([0, 1])
    w1 = Poly([-1, 1])
    inner = Poly([0])
    for j in range(0, k + 1):
        inner = inner + (w1**j * w ** (k - j)).scale(math.comb(m, 2 * j))
    if m % 2 == 0:
        return inner * inner
    return w * inner * inner


def power_solution(sol: PellSolution, m: int) -> PellSolution:
    """The m-th power: first component T_m(A), second from the odd binomial
    terms of (A + sqrt(D)*B)^m."""
    if m < 1:
        raise ValueError("power index must be >= 1")
    A, B, D = sol.A, sol.B, sol.D
    Am = compose(chebyshev(m), A)
    Bm = Poly([0])
    for j in range(1, m + 1, 2):
        term = (D ** ((j - 1) // 2) * B**j * A ** (m - j)).scale(math.comb(m, j))
        Bm = Bm + term
    return PellSolution(A=Am, B=Bm, D=D, n=m * sol.n, d=sol.d)


def generate_from_seed(
    A: Poly, allow_d1: bool = False
) -> Union[PellSolution, RejectionReason]:
    """Split A^2 - 1 = D * B^2 with D the monic product of odd-multiplicity
    factors; every square factor lands in B."""
    if A.degree < 1:
        raise DegreeTooSmall("seed must be nonconstant")
    U = A * A - ONE
    D = ONE
    for mult, fac in squarefree_decomposition(U):
        if mult % 2 != 0:
            D = D * fac
    if D.degree % 2 != 0:
        return RejectionReason(
            ODD_DEGREE_D,
            f"odd-multiplicity part of A^2 - 1 has odd degree {D.degree}",
        )
    least = 2 if allow_d1 else 4
    if D.degree < least:
        return RejectionReason(
            SMALL_DEGREE_D,
            f"deg D = {D.degree} below policy minimum {least} (allow_d1={allow_d1})",
        )
    B = poly_sqrt(exact_div(U, D))
    if B is None:
        raise AssertionError("odd-multiplicity split must leave a square cofactor")
    return PellSolution(A=A, B=B, D=D, n=A.degree, d=D.degree // 2)


def extract_mth_root(A: Poly, m: int) -> Optional[Poly]:
    """A' with T_m(A') = A or = -A, solved from the top coefficient down and
    confirmed by full composition; None when no rational A' exists."""
    if m < 1:
        raise ValueError("root index must be >= 1")
    if m == 1:
        return A
    n = A.degree
    if n < 1 or n % m != 0:
        return None
    half = n // m
    lead_unit = Rat(2) ** (m - 1)
    for eps in (1, -1):
        target = A.scale(eps)
        a = rat_nth_root(target.leading / lead_unit, m)
        if a is None:
            continue
        coeffs = [Rat(0)] * (half + 1)
        coeffs[half] = a
        for i in range(1, half + 1):
            # t^(n-i) coefficients of T_m(P) and 2^(m-1) P^m agree for i <= half,
            # and depend on coeffs[half-i] only through m * a^(m-1) * coeffs[half-i].
            cur = (Poly(coeffs) ** m).coeff(n - i) * lead_unit
            delta = target.coeff(n - i) - cur
            coeffs[half - i] = delta / (lead_unit * m * a ** (m - 1))
        candidate = Poly(coeffs)
        if compose(chebyshev(m), candidate) == target:
            return candidate
    return None


def classify_powers(sol: PellSolution) -> PowerClassification:
    """Try every admissible exponent; primitive when none has a rational
    root."""
    candidates = frozenset(
        m for m in range(2, sol.n + 1) if sol.n % m == 0 and sol.n // m >= sol.d
    )
    witnesses: dict[int, Poly] = {}
    for m in sorted(candidates):
        root = extract_mth_root(sol.A, m)
        if root is not None:
            witnesses[m] = root
    return PowerClassification(
        n=sol.n,
        admissible_m=candidates,
        witnesses=witnesses,
        primitive=not witnesses,
    )


def verify_branch_locus_in(f: Poly, values) -> bool:
    """Whether every critical value of f lies in the given set: the
    squarefree part of f' must divide prod(f - c)."""
    if f.degree < 2:
        raise DegreeTooSmall("branch locus check needs degree >= 2")
    product = ONE
    for c in values:
        product = product * (f - Poly([Rat(c)]))
    radical = squarefree_part(derivative(f))
    if product.is_zero:
        return False
    _, rem = divrem(product, radical)
    return rem.is_zero


def ramification_type(f: Poly, c) -> tuple[tuple[int, int], ...]:
    """Multiset of (multiplicity, point count) over the fiber f = c, from the
    squarefree decomposition; sum of products equals deg f."""
    if f.degree < 1:
        raise DegreeTooSmall("ramification type needs degree >= 1")
    shifted = f - Poly([Rat(c)])
    return tuple(
        sorted((mult, fac.degree) for mult, fac in squarefree_decomposition(shifted))
    )
