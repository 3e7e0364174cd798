"""Branched-cover permutation tuples: validation, the staircase example
family, power testing through block systems, and normalization.

A tuple acts on 2n points.  Its product is read in application order (the
first entry acts first); the monodromy entries are sigma0, sigmaInf, sigma1
and up to d-1 extra transposition-like factors taus.  The special form fixes
sigmaInf to the standard descending cycle (i maps to i-1, 1 to 2n) and puts
2n among the points fixed by sigma1 and every tau.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import permgroup as pg
from .permgroup import Perm


class DegreeOrder(ValueError):
    """Constructor needs n >= d >= 2."""


class NotSpecialForm(ValueError):
    """Operation needs a tuple in special (normalized) form."""


@dataclass(frozen=True)
class HurwitzTuple:
    sigma0: Perm
    sigmaInf: Perm
    sigma1: Perm
    taus: tuple[Perm, ...]
    n: int
    d: int

    def gens(self) -> list[Perm]:
        return [self.sigma0, self.sigmaInf, self.sigma1, *self.taus]

    @property
    def points(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]
    over_zero: int
    over_one: int
    over_infinity: int
    over_taus: int

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def standard_cycle(N: int) -> Perm:
    """The descending N-cycle: i to i-1, 1 to N."""
    return Perm([N] + list(range(1, N)))


def is_special(t: HurwitzTuple) -> bool:
    if t.sigmaInf != standard_cycle(t.points):
        return False
    common = common_fixed(t)
    return t.points in common


def common_fixed(t: HurwitzTuple) -> frozenset[int]:
    """Indices fixed by sigma1 and every tau."""
    fixed = pg.fixed_points(t.sigma1)
    for tau in t.taus:
        fixed &= pg.fixed_points(tau)
    return fixed


def validate(t: HurwitzTuple) -> ValidationReport:
    """One pass/fail entry per structural invariant, plus the branching
    spent over each branch point."""
    checks: list[CheckResult] = []
    N = t.points

    sizes = {p.size for p in t.gens()}
    size_ok = sizes == {N} and t.n >= 1 and t.d >= 1
    checks.append(
        CheckResult("SizeConsistent", size_ok, f"sizes {sorted(sizes)}, expected {{{N}}}")
    )
    if not size_ok:
        return ValidationReport(tuple(checks), 0, 0, 0, 0)

    k = len(t.taus)
    checks.append(CheckResult("TauCount", k <= t.d - 1, f"k = {k}, bound {t.d - 1}"))

    product = pg.chain(t.gens())
    checks.append(
        CheckResult(
            "ProductIdentity",
            product == pg.identity(N),
            f"product = {pg.format_cycles(product)}",
        )
    )

    checks.append(
        CheckResult("Transitive", pg.is_transitive(t.gens(), N), "orbit of the generators")
    )

    checks.append(
        CheckResult(
            "InfinityFullCycle",
            pg.is_full_cycle(t.sigmaInf),
            f"cycle type {pg.cycle_type(t.sigmaInf)}",
        )
    )

    zero_cycles = pg.cycles(t.sigma0)
    zero_even = all(len(c) % 2 == 0 for c in zero_cycles) and not pg.fixed_points(t.sigma0)
    checks.append(
        CheckResult(
            "ZeroEvenCycles",
            zero_even,
            f"cycle type {pg.cycle_type(t.sigma0)}, fixed {sorted(pg.fixed_points(t.sigma0))}",
        )
    )

    one_even = all(len(c) % 2 == 0 for c in pg.cycles(t.sigma1))
    checks.append(
        CheckResult("OneEvenCycles", one_even, f"cycle type {pg.cycle_type(t.sigma1)}")
    )

    fix1 = pg.fixed_points(t.sigma1)
    checks.append(
        CheckResult(
            "FixedPointCount",
            len(fix1) == 2 * t.d,
            f"sigma1 fixes {len(fix1)} points, expected {2 * t.d}",
        )
    )

    over_zero = pg.branching(t.sigma0)
    over_one = pg.branching(t.sigma1)
    over_inf = pg.branching(t.sigmaInf)
    over_taus = sum(pg.branching(tau) for tau in t.taus)
    total = over_zero + over_one + over_inf + over_taus
    checks.append(
        CheckResult(
            "TotalBranching", total == 4 * t.n - 2, f"total {total}, expected {4 * t.n - 2}"
        )
    )

    return ValidationReport(tuple(checks), over_zero, over_one, over_inf, over_taus)


def zannier_tuple(n: int, d: int) -> HurwitzTuple:
    """The staircase family: sigma0 folds i with 2n+1-i, sigma1 folds i with
    2n-i down to depth n-d, and tau_i = (n-i, n+i)."""
    if not n >= d >= 2:
        raise DegreeOrder(f"need n >= d >= 2, got n={n}, d={d}")
    N = 2 * n
    sigma0 = Perm.from_cycles(N, [(i, N + 1 - i) for i in range(1, n + 1)])
    sigma1 = Perm.from_cycles(N, [(i, N - i) for i in range(1, n - d + 1)])
    taus = tuple(Perm.from_cycles(N, [(n - i, n + i)]) for i in range(1, d))
    return HurwitzTuple(
        sigma0=sigma0,
        sigmaInf=standard_cycle(N),
        sigma1=sigma1,
        taus=taus,
        n=n,
        d=d,
    )


def _expected_block_images(m2: int) -> dict[str, Perm]:
    """Induced label maps a power tuple must realize on the mod-m2 blocks."""
    down = Perm([m2] + list(range(1, m2)))
    mirror_fix_last = Perm([m2 - h if h < m2 else m2 for h in range(1, m2 + 1)])
    mirror = Perm([m2 - h + 1 for h in range(1, m2 + 1)])
    return {
        "sigmaInf": down,
        "sigma1": mirror_fix_last,
        "sigma0": mirror,
        "tau": pg.identity(m2),
    }


def power_test(t: HurwitzTuple, m: int) -> bool:
    """Whether the tuple behaves like an m-th power: every entry must send
    mod-2m residue blocks to residue blocks, with the reflection pattern on
    the labels."""
    if not is_special(t):
        raise NotSpecialForm("power_test needs the special form")
    if m < 1:
        raise ValueError("power index must be >= 1")
    if m == 1:
        return True
    if t.n % m != 0 or t.n // m < t.d:
        raise ValueError(f"m = {m} not admissible for n = {t.n}, d = {t.d}")
    part = pg.congruence_partition(t.points, 2 * m)
    want = _expected_block_images(2 * m)
    pairs = [
        (t.sigmaInf, want["sigmaInf"]),
        (t.sigma1, want["sigma1"]),
        (t.sigma0, want["sigma0"]),
        *((tau, want["tau"]) for tau in t.taus),
    ]
    for perm, expected in pairs:
        induced = pg.preserves_partition(perm, part)
        if induced is None or induced != expected:
            return False
    return True


def admissible_exponents(n: int, d: int) -> list[int]:
    return [m for m in range(2, n + 1) if n % m == 0 and n // m >= d]


def primitivity_profile(t: HurwitzTuple) -> set[int]:
    """Admissible exponents m >= 2 passing power_test; empty means the tuple
    is combinatorially primitive."""
    return {m for m in admissible_exponents(t.n, t.d) if power_test(t, m)}


def normalize_special(t: HurwitzTuple) -> HurwitzTuple:
    """Conjugate into special form.  Special inputs come back unchanged;
    otherwise sigmaInf is rebased to the standard descending cycle and the
    smallest common fixed index is rotated into 2n."""
    if is_special(t):
        return t
    N = t.points
    if not pg.is_full_cycle(t.sigmaInf):
        raise ValueError("sigmaInf must be a full cycle")
    # gamma(N - k) = sigmaInf^k(N) conjugates sigmaInf to the standard cycle.
    images = [0] * N
    x = N
    for k in range(N):
        images[(N - k) - 1] = x
        x = t.sigmaInf(x)
    gamma = Perm(images)
    rebased = _conjugate_tuple(t, gamma)
    fixed = common_fixed(rebased)
    if not fixed:
        raise ValueError("no index is fixed by sigma1 and every tau")
    lowest = min(fixed)
    g = standard_cycle(N) ** ((N - lowest) % N)
    return _conjugate_tuple(rebased, g)


def _conjugate_tuple(t: HurwitzTuple, g: Perm) -> HurwitzTuple:
    return HurwitzTuple(
        sigma0=pg.conjugate(t.sigma0, g),
        sigmaInf=pg.conjugate(t.sigmaInf, g),
        sigma1=pg.conjugate(t.sigma1, g),
        taus=tuple(pg.conjugate(tau, g) for tau in t.taus),
        n=t.n,
        d=t.d,
    )


# -- JSON form ----------------------------------------------------------------


def tuple_to_json_dict(t: HurwitzTuple) -> dict:
    return {
        "n": t.n,
        "d": t.d,
        "sigma0": pg.format_cycles(t.sigma0),
        "sigmaInf": pg.format_cycles(t.sigmaInf),
        "sigma1": pg.format_cycles(t.sigma1),
        "taus": [pg.format_cycles(tau) for tau in t.taus],
    }


def tuple_from_json_dict(data: dict) -> HurwitzTuple:
    try:
        n = int(data["n"])
        d = int(data["d"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"tuple JSON needs integer n and d: {exc}") from None
    N = 2 * n
    try:
        sigma0 = pg.parse_cycles(data["sigma0"], N)
        sigmaInf = pg.parse_cycles(data["sigmaInf"], N)
        sigma1 = pg.parse_cycles(data["sigma1"], N)
        taus = tuple(pg.parse_cycles(s, N) for s in data["taus"])
    except KeyError as exc:
        raise ValueError(f"tuple JSON missing field {exc}") from None
    return HurwitzTuple(sigma0=sigma0, sigmaInf=sigmaInf, sigma1=sigma1, taus=taus, n=n, d=d)
