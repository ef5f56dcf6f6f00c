"""The ten acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run directly (`python3 tests/test_acceptance.py`) or through pytest, which repeats the lines in
its terminal summary. Criteria that cannot hold as literally stated are marked strict xfail: the
check still runs in full, prints FAIL with the reason, and turns into an error if it ever passes.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, unitary_partitions  # noqa: E402
from unitary_simples.abacus import (  # noqa: E402
    EAbacus,
    UnitaryAbacus,
    abacus_from_partition,
    apply_tau_word,
    core_and_weight,
    empty_core_abacus,
    enumerate_po,
    hd,
    hd_of_partition,
    insert_empty_runners,
    remove_empty_runners,
)
from unitary_simples.alcove import alcove_length, in_fundamental_alcove, path_degree  # noqa: E402
from unitary_simples.bgg import (  # noqa: E402
    SignInconsistencyError,
    build_complex,
    check_signs,
    euler_characteristic,
)
from unitary_simples.comm_alg import (  # noqa: E402
    arrangement_invariants,
    c_function,
    e_equals_reg,
    ke_equals_reg,
    resolution,
    resolution_summary,
    ringel_dual_resolution,
)
from unitary_simples.partitions import (  # noqa: E402
    ChargeContext,
    Partition,
    format_multipartition,
    format_partition,
    multipartitions_of,
    parse_multipartition,
    parse_partition,
)
from unitary_simples.simple_modules import (  # noqa: E402
    classical_mullineux_oracle,
    crystal_f_general,
    generator_matrices,
    mullineux,
    restriction_decomposition,
    verify_restriction,
    y_context,
    y_vertices,
)
from unitary_simples.tableaux import count_std_e, enumerate_std_e  # noqa: E402

P = parse_partition
M = parse_multipartition
L3 = ChargeContext(e=4, level=3, charge=(0, 1, 2), h=1)


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def level_one_unitary(n_max: int, e_values) -> list[tuple[Partition, int, ChargeContext]]:
    return [
        (lam, e, ChargeContext(e=e, h=lam.columns))
        for e in e_values
        for n in range(1, n_max + 1)
        for lam in unitary_partitions(n, e)
    ]


def level_one_restricted(n_max: int, e_values) -> list[tuple[Partition, int, ChargeContext]]:
    # e-restricted unitary partitions: fewer than e columns
    return [(lam, e, ctx) for lam, e, ctx in level_one_unitary(n_max, e_values) if lam.columns < e]


def level_three_fundamental(n_max: int) -> list:
    return [
        mp
        for n in range(1, n_max + 1)
        for mp in multipartitions_of(n, 3, max_part=1)
        if in_fundamental_alcove(mp, L3)
    ]


def test_criterion_1_abacus_golden_values():
    def golden() -> tuple:
        return (
            core_and_weight(P("3^4,1"), 4),
            abacus_from_partition(P("3^4,1"), 3).beads,
            abacus_from_partition(P("3^3,2,1^2"), 3).beads,
        )

    got = golden()
    reps = 1000
    t0 = time.perf_counter()
    for _ in range(reps):
        golden()
    per_call = (time.perf_counter() - t0) / reps
    ok = got == ((P("1"), 3), (4, 5, 7), (3, 5, 8)) and per_call < 1e-3
    report(1, ok, f"core={format_partition(got[0][0])} weight={got[0][1]} beads={got[1]},{got[2]}; {per_call * 1e6:.0f} us per evaluation")


def _s0_on_full_runners(u: UnitaryAbacus) -> UnitaryAbacus:
    """The affine reflection s_0 on the abacus with empty runners removed, then empty runners restored."""
    a = u.to_eabacus()
    empty = [r for r, cols in enumerate(a.runners) if not cols]
    small = remove_empty_runners(a, empty)
    m = small.e
    beads = []
    for p in small.to_zabacus().beads:
        beads.append(p - 1 if p % m == 0 else p + 1 if p % m == m - 1 else p)
    runners: list[list[int]] = [[] for _ in range(m)]
    for p in beads:
        runners[p % m].append(p // m)
    moved = EAbacus(m, tuple(tuple(sorted(cs)) for cs in runners))
    counts = [0] * (m + 1)
    for r in empty:
        counts[r - sum(1 for x in empty if x < r)] += 1
    return UnitaryAbacus.from_eabacus(insert_empty_runners(moved, counts))


def test_criterion_2_homological_degree():
    left = UnitaryAbacus(5, (0, 1, 2, 3), (8, 7, 6, 0))
    right = _s0_on_full_runners(left)
    tau = apply_tau_word((3, 3, 1, 0), empty_core_abacus(5))
    got = (hd(left), hd(right), tau.to_partition(), hd(tau))
    ok = got == (19, 18, P("5,4,2^5,1"), 7) and right.cols == (1, 7, 6, 7)
    report(2, ok, f"hd={got[0]}, s_0-image hd={got[1]}, tau(3,3,1,0)={format_partition(got[2])} with hd {got[3]}")


def test_criterion_3_hd_equals_length():
    t0 = time.perf_counter()
    checked, mismatches = 0, []
    for lam, e, ctx in level_one_unitary(20, (3, 4, 5, 6)):
        for mu in enumerate_po(lam, e):
            checked += 1
            if hd_of_partition(mu, e, lam.columns) != alcove_length(mu, ctx):
                mismatches.append((e, format_partition(lam), format_partition(mu)))
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 60
    report(3, ok, f"{checked} orbit members, {len(mismatches)} mismatches, {elapsed:.1f} s")


_E5_PUBLISHED = [[("3^4,2,1", 0)], [("3^3,2^2,1^2", -1)], [("3,2^6", -3), ("3^3,1^6", -3)], [("3,2^2,1^7", -5)], [("3,2,1^10", -9)]]
_E4_PUBLISHED = [[("3^3,1", 0)], [("3^2,2,1^2", -1)], [("2^5", -3), ("3^2,1^4", -2)], [("2^2,1^6", -6)], [("2,1^8", -8)]]
_RINGEL_PUBLISHED = [[("6", 0)], [("5,1", -2)], [("3^2", -4), ("4,1^2", -4)], [("3,2,1", -5)], [("2^3", -6)]]


def _levels(res) -> list[list[tuple[str, int]]]:
    return [sorted((format_partition(t.mu), t.shift) for t in level) for level in res.levels]


def _compare(name: str, got, want) -> list[str]:
    want = [sorted(level) for level in want]
    out = []
    for i in range(max(len(got), len(want))):
        g = got[i] if i < len(got) else []
        w = want[i] if i < len(want) else []
        if g != w:
            out.append(f"{name} level {i}: computed {g}, published {w}")
    return out


@pytest.mark.xfail(strict=True, reason="the published e=5 level-3 term (3,2^2,1^7)[-5] has 14 boxes in a resolution of partitions of 15")
def test_criterion_4_resolution_shapes():
    problems = (
        _compare("e=5 (3^4,2,1)", _levels(resolution(P("3^4,2,1"), 5)), _E5_PUBLISHED)
        + _compare("e=4 (3^3,1)", _levels(resolution(P("3^3,1"), 4)), _E4_PUBLISHED)
        + _compare("e=3 ringel k=2", _levels(ringel_dual_resolution(3, 2)), _RINGEL_PUBLISHED)
    )
    detail = "all three resolutions match" if not problems else "; ".join(problems) + "; every other level matches"
    report(4, not problems, detail)


def test_criterion_5_invariants():
    s = resolution_summary(P("3^4,2,1"), 5)
    arr = arrangement_invariants(4, 10)
    ke = arrangement_invariants(3, 6, k=2)
    n, e, p, k, ell = sympy.symbols("n e p k ell", integer=True, positive=True)
    e_div = p * (ell * (n - 1) - e + 2) - 1
    e_gen = p * (ell * n - e + 2) - 1
    ke_poly = k * (ell * (n + e - k - 1) - 2 * (e - 1)) / 2
    symbolic = (
        sympy.expand(e_div.subs(ell, 1) - (p * (n - e + 1) - 1)) == 0
        and sympy.expand(e_gen.subs(ell, 1) - (p * (n - e + 2) - 1)) == 0
        and sympy.simplify(ke_poly.subs(ell, 1) - k * (n - e - k + 1) / 2) == 0
    )
    numeric = all(
        e_equals_reg(ee, nn, 1) == (nn // ee) * (nn - ee + (1 if nn % ee == 0 else 2)) - 1
        for ee in range(2, 7)
        for nn in range(ee, 19)
    ) and all(ke_equals_reg(ee, kk, 1) * 2 == kk * (kk * ee - ee - kk + 1) for ee in range(2, 7) for kk in range(1, 5))
    c = c_function(P("3^3,1"), 4)
    ok = (
        (s.regularity, s.pdim) == (5, 4)
        and str(c) == "23/4"
        and (arr.regularity, arr.pdim) == (15, 5)
        and (ke.regularity, ke.depth) == (2, 2)
        and symbolic
        and numeric
    )
    report(
        5,
        ok,
        f"reg={s.regularity} pdim={s.pdim}; c={c}; arrangement reg={arr.regularity} pdim={arr.pdim}; "
        f"(k,e)-equals reg={ke.regularity} depth={ke.depth}; power=1 specialisation {'holds' if symbolic and numeric else 'fails'}",
    )


def test_criterion_6_euler_characteristic():
    t0 = time.perf_counter()
    bad, checked = [], 0
    for lam, e, ctx in level_one_restricted(14, range(2, 7)):
        checked += 1
        if euler_characteristic(build_complex(lam, ctx, solve_signs=False)) != count_std_e(lam, ctx):
            bad.append((e, format_partition(lam)))
    for mp in level_three_fundamental(8):
        checked += 1
        if euler_characteristic(build_complex(mp, L3, solve_signs=False)) != count_std_e(mp, L3):
            bad.append(("l=3", format_multipartition(mp)))
    eg1 = euler_characteristic(build_complex(M("1^3|1^3|1^2"), L3))
    elapsed = time.perf_counter() - t0
    ok = not bad and eg1 == 1 and elapsed < 300
    report(6, ok, f"{checked} labels, {len(bad)} mismatches, level-3 example value {eg1}, {elapsed:.1f} s")


def test_criterion_7_branching():
    bad, checked = [], 0
    labels = [(lam, ctx) for lam, _, ctx in level_one_restricted(14, range(2, 7))] + [(mp, L3) for mp in level_three_fundamental(8)]
    for lam, ctx in labels:
        checked += 1
        table = restriction_decomposition(lam, ctx)
        if sum(count_std_e(mu, ctx) for mu in table.values()) != count_std_e(lam, ctx):
            bad.append(format_multipartition(lam))
    matrix_checked = 0
    for lam, ctx in labels:
        if lam.size > 10:
            continue
        matrix_checked += 1
        problems = verify_restriction(generator_matrices(lam, ctx))
        if problems:
            bad.append(f"{format_multipartition(lam)}: {problems[0]}")
    ok = not bad
    report(7, ok, f"count identity on {checked} labels, matrix restriction on {matrix_checked} modules, {len(bad)} failures")


def _sign_sweep(table: str) -> tuple[int, list[str]]:
    complexes, unsolvable = 0, []
    labels = [(lam, ctx) for lam, _, ctx in level_one_unitary(18, range(2, 7))] + [(mp, L3) for mp in level_three_fundamental(8)]
    for lam, ctx in labels:
        complexes += 1
        try:
            cx = build_complex(lam, ctx, table=table)
        except SignInconsistencyError:
            unsolvable.append(f"e={ctx.e} {format_multipartition(lam)}")
            continue
        if check_signs(cx):
            unsolvable.append(f"e={ctx.e} {format_multipartition(lam)} (violated)")
    return complexes, unsolvable


@pytest.mark.xfail(strict=True, reason="the published epsilon for case (1a) admits no sign assignment on several complexes")
def test_criterion_8_sign_consistency():
    complexes, printed_bad = _sign_sweep("printed")
    _, consistent_bad = _sign_sweep("consistent")
    detail = (
        f"published table: {len(printed_bad)} of {complexes} complexes unsolvable (e.g. {', '.join(printed_bad[:3])}); "
        f"adjusted case (1a) table: {len(consistent_bad)} unsolvable"
    )
    report(8, not printed_bad, detail)


@pytest.mark.xfail(strict=True, reason="the published pair (3^10,2^4) -> (4^8,1^3) has sizes 38 and 35")
def test_criterion_9_mullineux():
    pairs = [(P("2^28,1^3"), 5, P("3^19,1^2")), (P("3^10,2^4"), 7, P("4^8,1^3"))]
    pair_fail = []
    for lam, e, want in pairs:
        try:
            got = mullineux(lam, e)
        except Exception as exc:  # report rather than abort: the remaining checks still run
            got = f"error {exc}"
        if got != want:
            pair_fail.append(f"M({format_partition(lam)}) = {got if isinstance(got, str) else format_partition(got)}, published {format_partition(want)}")
    involution = [(e, lam) for e in range(2, 8) for n in range(1, 21) for lam in y_vertices(n, e) if mullineux(mullineux(lam, e), e) != lam]
    intertwine = []
    for e in range(2, 8):
        for n in range(0, 12):
            for lam in (y_vertices(n, e) if n else (Partition(()),)):
                image = mullineux(lam, e)
                for i in range(e):
                    up = crystal_f_general(lam, i, e)
                    if up is None or up not in set(y_vertices(n + 1, e)):
                        continue
                    if mullineux(up, e) != crystal_f_general(image, -i % e, e):
                        intertwine.append((e, lam, i))
    oracle = [(e, lam) for e in range(2, 8) for n in range(1, 15) for lam in y_vertices(n, e) if classical_mullineux_oracle(lam, e) != mullineux(lam, e)]
    figure = mullineux(P("3^9,2^4"), 7) == P("4^8,1^3")
    ok = not (pair_fail or involution or intertwine or oracle)
    detail = (
        f"{'; '.join(pair_fail) or 'both pairs match'}; figure pair (3^9,2^4) -> (4^8,1^3) {'holds' if figure else 'fails'}; "
        f"involution failures {len(involution)}, intertwining failures {len(intertwine)}, oracle disagreements {len(oracle)}"
    )
    report(9, ok, detail)


def test_criterion_10_degree_concentration():
    nonzero, checked = [], 0
    for e in range(2, 7):
        for n in range(1, 13):
            for lam in y_vertices(n, e):
                ctx = y_context(lam, e)
                for t in enumerate_std_e(lam, ctx):
                    checked += 1
                    if path_degree(t.nodes, ctx):
                        nonzero.append((e, lam))
    for mp in level_three_fundamental(12):
        for t in enumerate_std_e(mp, L3):
            checked += 1
            if path_degree(t.nodes, L3):
                nonzero.append(("l=3", mp))
    report(10, not nonzero, f"{checked} restricted tableaux, {len(nonzero)} of nonzero degree")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
