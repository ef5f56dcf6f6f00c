"""Pure-Python reference implementations of the enumeration kernels.

Every function here has a compiled twin in ``_ckernels.pyx`` with the same signature.
"""

from __future__ import annotations

from typing import Sequence


def _multiples_between(lo_excl: int, hi_incl: int, e: int) -> int:
    # number of integers M with lo_excl < M*e <= hi_incl
    if hi_incl <= lo_excl:
        return 0
    return hi_incl // e - lo_excl // e


def hyperplane_count(x: Sequence[int], rho: Sequence[int], e: int) -> int:
    """Hyperplanes M*e of the roots eps_a - eps_b separating rho from x + rho.

    A hyperplane through x + rho is counted; the origin never lies on one.
    """
    n = len(x)
    total = 0
    for a in range(n):
        wa = x[a] + rho[a]
        ra = rho[a]
        for b in range(a + 1, n):
            v0 = ra - rho[b]
            v1 = wa - x[b] - rho[b]
            if v1 > v0:
                total += _multiples_between(v0, v1, e)
            elif v1 < v0:
                # multiples in [v1, v0)
                total += _multiples_between(v1 - 1, v0 - 1, e)
    return total


def in_alcove(x: Sequence[int], rho: Sequence[int], e: int) -> bool:
    n = len(x)
    for a in range(n):
        wa = x[a] + rho[a]
        ra = rho[a]
        for b in range(a + 1, n):
            v0 = ra - rho[b]
            v1 = wa - x[b] - rho[b]
            if v1 > v0:
                if v1 // e != v0 // e:
                    return False
            elif v1 < v0:
                if (v1 - 1) // e != (v0 - 1) // e:
                    return False
    return True


def path_degree(steps: Sequence[int], rho: Sequence[int], e: int) -> int:
    """Degree of the path from the origin adding eps_{steps[k]} at step k.

    Each hyperplane is visited once per positive root: +1 for leaving a wall towards the
    origin side, -1 for arriving on a wall from the far side.
    """
    n = len(rho)
    w = list(rho)
    deg = 0
    for col in steps:
        for other in range(n):
            if other == col:
                continue
            a, b = (col, other) if col < other else (other, col)
            v0 = rho[a] - rho[b]
            before = w[a] - w[b]
            after = before + (1 if a == col else -1)
            if before % e == 0:
                # leaving the wall at `before`; origin side test
                if (after - before) * (v0 - before) > 0:
                    deg += 1
            if after % e == 0:
                # arriving on the wall at `after` from the far side
                if (before - after) * (v0 - after) < 0:
                    deg -= 1
        w[col] += 1
    return deg


def bead_hd(cols: Sequence[int]) -> int:
    """Homological degree of a one-bead-per-runner abacus given bead columns bottom to top."""
    n = len(cols)
    total = 0
    for a in range(n):
        ca = cols[a]
        for b in range(a + 1, n):
            cb = cols[b]
            if cb >= ca:
                total += cb - ca
            else:
                # upper bead strictly left of lower bead: a disorder
                total += ca - cb - 1
    return total


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`, lexicographically descending."""
    if parts == 0:
        return [()] if total == 0 else []
    out: list[tuple[int, ...]] = []
    buf = [0] * parts

    def rec(i: int, rem: int) -> None:
        if i == parts - 1:
            buf[i] = rem
            out.append(tuple(buf))
            return
        for v in range(rem, -1, -1):
            buf[i] = v
            rec(i + 1, rem - v)

    rec(0, total)
    return out
