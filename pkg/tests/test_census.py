from __future__ import annotations

import json
import math
from pathlib import Path

import pytest

from pellab import permgroup as pg
from pellab.census import (
    BRUTE_DEFAULT_MAX,
    DISJOINT,
    FOUR_CYCLE,
    THREE_CYCLE,
    TooLarge,
    brute_force_enumerate,
    case_of,
    census,
    canonical_key,
    closed_formulas,
    conjugacy_classes,
    enumerate_shapes,
    primitive_disjoint_classes,
    report_to_json_dict,
)
from pellab.hurwitz import (
    HurwitzTuple,
    is_special,
    primitivity_profile,
    validate,
)
from pellab.permgroup import Perm

FIXTURES = Path(__file__).parent / "fixtures"

EXPECTED_CLASS_COUNTS = {
    2: (1, 0, 0),
    3: (1, 1, 0),
    4: (2, 3, 1),
    5: (2, 6, 2),
    6: (3, 10, 6),
    7: (3, 15, 10),
    8: (4, 21, 19),
}

EXPECTED_C1 = {2: 0, 3: 0, 4: 1, 5: 4, 6: 10, 7: 20, 8: 35}


def tuple_key(t: HurwitzTuple):
    return (t.sigma0.images, t.sigma1.images, tuple(tau.images for tau in t.taus))


def fixed_point_free_involutions(N):
    """Every pairing of {1..N}, no seed and no filter."""
    out = []
    paired = [0] * (N + 1)

    def rec(unpaired):
        if not unpaired:
            out.append(Perm(paired[1:]))
            return
        a = unpaired[0]
        rest = unpaired[1:]
        for idx, b in enumerate(rest):
            paired[a], paired[b] = b, a
            rec(rest[:idx] + rest[idx + 1 :])

    rec(list(range(1, N + 1)))
    return out


def oracle_sigma0_and_split_count(n):
    """Independent scan: admissible sigma0 set and total split count, found
    without the image-of-1 pruning used by the package."""
    N = 2 * n
    found = {}
    for sigma0 in fixed_point_free_involutions(N):
        pi = Perm([sigma0(x % N + 1) for x in range(1, N + 1)])
        if pi(N) != N:
            continue
        lens = sorted((len(c) for c in pg.cycles(pi)), reverse=True)
        if lens == [2] * (n - 1):
            found[sigma0.images] = n - 1
        elif n >= 3 and lens == [3] + [2] * (n - 3):
            found[sigma0.images] = 3
        elif n >= 4 and lens == [4] + [2] * (n - 4):
            found[sigma0.images] = 2
    return found


def test_enumerate_shapes_smallest_cases():
    shapes = enumerate_shapes(2)
    assert len(shapes) == 1
    params, t = shapes[0]
    assert params.case == DISJOINT and params.h == 1
    assert t.taus == (Perm.from_cycles(4, "(1,3)"),)

    shapes = enumerate_shapes(3)
    cases = [p.case for p, _ in shapes]
    assert cases.count(DISJOINT) == 2
    assert cases.count(THREE_CYCLE) == 3
    assert cases.count(FOUR_CYCLE) == 0
    disjoint_taus = [t.taus[0] for p, t in shapes if p.case == DISJOINT]
    assert disjoint_taus == [
        Perm.from_cycles(6, "(1,5)"),
        Perm.from_cycles(6, "(2,4)"),
    ]
    with pytest.raises(ValueError):
        enumerate_shapes(1)


def test_four_cycle_tuples_n4():
    entries = [(p, t) for p, t in enumerate_shapes(4) if p.case == FOUR_CYCLE]
    assert len(entries) == 2
    assert all((p.h, p.k1, p.k2) == (1, 3, 5) for p, _ in entries)
    assert [p.tau_choice for p, _ in entries] == [0, 1]
    first, second = entries[0][1], entries[1][1]
    assert first.sigma0 == Perm.from_cycles(8, "(1,8)(2,3)(4,5)(6,7)")
    assert first.sigma1 == Perm.from_cycles(8, "(1,3)(5,7)")
    assert first.taus == (Perm.from_cycles(8, "(1,5)"),)
    assert second.sigma1 == Perm.from_cycles(8, "(3,5)(1,7)")
    assert second.taus == (Perm.from_cycles(8, "(3,7)"),)


def test_shape_tuples_are_valid_special_tuples():
    for n in range(2, 7):
        for params, t in enumerate_shapes(n):
            assert is_special(t)
            report = validate(t)
            assert report.ok, (n, params, report.failed())
            assert case_of(t) == params.case


def test_brute_force_equals_shape_enumeration():
    totals = {2: 1, 3: 5, 4: 14, 5: 30}
    for n in range(2, 6):
        brute = brute_force_enumerate(n)
        shapes = [t for _, t in enumerate_shapes(n)]
        assert len(brute) == totals[n]
        assert sorted(map(tuple_key, brute)) == sorted(map(tuple_key, shapes))


def test_brute_force_matches_unpruned_scan():
    for n in range(2, 6):
        oracle = oracle_sigma0_and_split_count(n)
        brute = brute_force_enumerate(n)
        assert {t.sigma0.images for t in brute} == set(oracle)
        assert len(brute) == sum(oracle.values())


def test_conjugacy_classes_n6_disjoint():
    disjoint = [t for p, t in enumerate_shapes(6) if p.case == DISJOINT]
    classes = conjugacy_classes(disjoint)
    tau_sets = sorted(
        sorted(pg.format_cycles(t.taus[0]) for t in cls) for cls in classes
    )
    assert tau_sets == [
        ["(1,11)", "(5,7)"],
        ["(2,10)", "(4,8)"],
        ["(3,9)"],
    ]


def test_class_members_share_profile():
    for n in (5, 6):
        tuples = [t for _, t in enumerate_shapes(n)]
        for cls in conjugacy_classes(tuples):
            profiles = {frozenset(primitivity_profile(t)) for t in cls}
            assert len(profiles) == 1


def test_class_size_rules():
    for n in range(4, 8):
        by_case = {DISJOINT: [], THREE_CYCLE: [], FOUR_CYCLE: []}
        for params, t in enumerate_shapes(n):
            by_case[params.case].append(t)
        for cls in conjugacy_classes(by_case[THREE_CYCLE]):
            assert len(cls) == 3
        for cls in conjugacy_classes(by_case[DISJOINT]):
            h = min(x for x in range(1, 2 * n + 1) if cls[0].taus[0](x) != x)
            expected = 1 if 2 * h == n else 2
            assert len(cls) == expected
        sizes = sorted(len(cls) for cls in conjugacy_classes(by_case[FOUR_CYCLE]))
        c2 = n // 2 - 1 if n % 2 == 0 else 0
        assert all(size in (2, 4) for size in sizes)
        assert sizes.count(2) == c2


def test_closed_formulas_values():
    for n, c1 in EXPECTED_C1.items():
        forms = closed_formulas(n)
        assert forms["C1"] == c1
        assert forms[DISJOINT] == n // 2
        assert forms[THREE_CYCLE] == (n - 1) * (n - 2) // 2
    assert closed_formulas(6)["C2"] == 2
    assert closed_formulas(7)["C2"] == 0
    assert closed_formulas(8)[FOUR_CYCLE] == 19


def test_census_counts_agree_three_ways():
    for n in range(2, 9):
        report = census(n)
        expected = EXPECTED_CLASS_COUNTS[n]
        for case, want in zip((DISJOINT, THREE_CYCLE, FOUR_CYCLE), expected):
            counts = report.case_counts(case)
            assert counts.shape == want
            assert counts.brute == want
            assert counts.formula == want
        assert report.discrepancies == ()
        assert report.c1 == EXPECTED_C1[n]


def test_census_without_brute():
    report = census(5, use_brute=False)
    assert report.case_counts(DISJOINT).brute is None
    assert report.case_counts(DISJOINT).shape == 2
    assert report.discrepancies == ()


def test_primitive_disjoint_counts():
    for n in range(3, 9):
        count, classes = primitive_disjoint_classes(n)
        phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert count == phi // 2
        assert len(classes) == count
    count, classes = primitive_disjoint_classes(6)
    assert count == 1
    assert [pg.format_cycles(t.taus[0]) for t in classes[0]] == ["(1,11)", "(5,7)"]


def test_canonical_key_is_conjugation_invariant():
    tuples = [t for _, t in enumerate_shapes(5)]
    for t in tuples:
        assert canonical_key(t) is not None
    classes = conjugacy_classes(tuples)
    assert sum(len(c) for c in classes) == len(tuples)
    for cls in classes:
        keys = {canonical_key(t) for t in cls}
        assert len(keys) == 1


def test_size_guards():
    with pytest.raises(TooLarge):
        brute_force_enumerate(BRUTE_DEFAULT_MAX + 1)
    with pytest.raises(TooLarge):
        census(BRUTE_DEFAULT_MAX + 1, use_brute=True)
    with pytest.raises(ValueError):
        census(1)
    report = census(9, use_brute=False)
    assert report.case_counts(DISJOINT).brute is None
    assert report.discrepancies == ()


def test_census_json_golden_n8():
    report = census(8)
    got = report_to_json_dict(report)
    with open(FIXTURES / "census_n8.json", "r", encoding="utf-8") as fh:
        want = json.load(fh)
    assert got == want
