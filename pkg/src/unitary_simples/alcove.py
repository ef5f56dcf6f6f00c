"""Alcove geometry: embedding, rho-shift, lengths, the fundamental alcove, one-column reflections, path degree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from . import kernels
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    Node,
    Partition,
    as_multipartition,
    boundary_nodes,
    dominates,
    format_multipartition,
)


def is_h_admissible(charge: Sequence[int], h: int, e: int) -> bool:
    """Every cyclic window of h consecutive residues holds at most one charge entry (with multiplicity)."""
    counts = [0] * e
    for k in charge:
        counts[k % e] += 1
    if h >= e:
        return len(charge) <= 1
    for start in range(e):
        if sum(counts[(start + t) % e] for t in range(h)) > 1:
            return False
    return True


def rho(ctx: ChargeContext) -> tuple[int, ...]:
    out: list[int] = []
    for k in ctx.charge:
        out.extend(ctx.e - k - t for t in range(ctx.h))
    return tuple(out)


def _require_admissible(ctx: ChargeContext) -> None:
    if not is_h_admissible(ctx.charge, ctx.h, ctx.e):
        raise DomainError(f"charge {ctx.charge} is not {ctx.h}-admissible for e={ctx.e}")


def embed(lam: Multipartition | Partition, ctx: ChargeContext) -> tuple[int, ...]:
    """Column lengths of each component, h per component."""
    lam = as_multipartition(lam)
    if lam.level != ctx.level:
        raise DomainError(f"{format_multipartition(lam)} has level {lam.level}, context has level {ctx.level}")
    out: list[int] = []
    for comp in lam:
        cols = comp.conjugate()
        if len(cols) > ctx.h:
            raise DomainError(f"{format_multipartition(lam)} has more than h={ctx.h} columns in a component")
        out.extend(cols)
        out.extend([0] * (ctx.h - len(cols)))
    return tuple(out)


def unembed(x: Sequence[int], ctx: ChargeContext) -> Multipartition | None:
    """Inverse of embed; None when some block is not a weakly decreasing non-negative sequence."""
    comps: list[Partition] = []
    h = ctx.h
    for m in range(ctx.level):
        block = x[m * h : (m + 1) * h]
        if any(v < 0 for v in block) or any(a < b for a, b in zip(block, block[1:])):
            return None
        comps.append(Partition(block).conjugate())
    return Multipartition(comps)


def _hd_delegate(lam: Multipartition, ctx: ChargeContext) -> int:
    from .abacus import hd_of_partition

    try:
        return hd_of_partition(lam[0], ctx.e, ctx.h)
    except DomainError:
        # two beads share a runner: not in a unitary orbit, so only the hyperplane count applies
        return kernels.hyperplane_count(embed(lam, ctx), rho(ctx), ctx.e)


def alcove_length(lam: Multipartition | Partition, ctx: ChargeContext) -> int:
    """Number of hyperplanes separating lam + rho from rho; a hyperplane through lam + rho counts."""
    _require_admissible(ctx)
    lam = as_multipartition(lam)
    if ctx.level == 1 and ctx.e == ctx.h:
        return _hd_delegate(lam, ctx)
    return kernels.hyperplane_count(embed(lam, ctx), rho(ctx), ctx.e)


def geometric_length(lam: Multipartition | Partition, ctx: ChargeContext) -> int:
    """Hyperplane count without the e = h delegation (used to compare both routes)."""
    _require_admissible(ctx)
    return kernels.hyperplane_count(embed(as_multipartition(lam), ctx), rho(ctx), ctx.e)


def in_fundamental_alcove(lam: Multipartition | Partition, ctx: ChargeContext) -> bool:
    _require_admissible(ctx)
    lam = as_multipartition(lam)
    if ctx.level == 1 and ctx.e == ctx.h:
        return _hd_delegate(lam, ctx) == 0
    return kernels.in_alcove(embed(lam, ctx), rho(ctx), ctx.e)


def _require_fundamental(lam: Multipartition, ctx: ChargeContext) -> None:
    if not in_fundamental_alcove(lam, ctx):
        raise DomainError(f"{format_multipartition(lam)} is not in the fundamental alcove")


def good_nodes(lam: Multipartition | Partition, ctx: ChargeContext) -> list[Node]:
    """Removable nodes whose removal stays in the fundamental alcove of the same ambient space."""
    lam = as_multipartition(lam)
    _require_fundamental(lam, ctx)
    return [nd for nd in boundary_nodes(lam, "removable") if in_fundamental_alcove(lam.remove(nd), ctx)]


# --- one-column reflections ----------------------------------------------------


def pair_value(x: Sequence[int], r: Sequence[int], a: int, b: int) -> int:
    """<x + rho, eps_a - eps_b>."""
    return x[a] + r[a] - x[b] - r[b]


def reflect(x: Sequence[int], r: Sequence[int], a: int, b: int, level: int) -> tuple[int, ...]:
    """Reflect x + rho through <., eps_a - eps_b> = level and shift back by rho."""
    shift = pair_value(x, r, a, b) - level
    y = list(x)
    y[a] -= shift
    y[b] += shift
    return tuple(y)


def root_hyperplanes_between(v_from: int, v_to: int, e: int) -> int:
    """Multiples of e strictly between two values of one root."""
    lo, hi = min(v_from, v_to), max(v_from, v_to)
    if hi - lo <= 1:
        return 0
    return (hi - 1) // e - lo // e


def root_length(x: Sequence[int], r: Sequence[int], a: int, b: int, e: int) -> int:
    """Hyperplanes of the root eps_a - eps_b between the origin and x (a wall through x counts)."""
    v0 = r[a] - r[b]
    v1 = pair_value(x, r, a, b)
    if v1 > v0:
        return v1 // e - v0 // e
    if v1 < v0:
        return (v0 - 1) // e - (v1 - 1) // e
    return 0


@dataclass(frozen=True)
class OneColumnMove:
    """beta = s_{i-j, level}(alpha): `count` nodes leave column j (0-based coordinate) and join column i."""

    target: Multipartition
    i: int
    j: int
    level: int
    count: int
    kind: Literal["maximal", "minimal", "both", "other"]

    @property
    def multiple(self) -> int:
        return self.level


def _classify_pair(x: Sequence[int], y: Sequence[int], r: Sequence[int], i: int, j: int, e: int) -> str:
    between = root_hyperplanes_between(pair_value(x, r, i, j), pair_value(y, r, i, j), e)
    maximal = between == 1
    minimal = between == 2 * root_length(x, r, i, j, e) - 1
    if maximal and minimal:
        return "both"
    if maximal:
        return "maximal"
    if minimal:
        return "minimal"
    return "other"


def one_column_moves(alpha: Multipartition | Partition, ctx: ChargeContext) -> list[OneColumnMove]:
    """Every reflection moving a non-empty strip from one column of alpha onto another column."""
    _require_admissible(ctx)
    alpha = as_multipartition(alpha)
    x = embed(alpha, ctx)
    r = rho(ctx)
    e = ctx.e
    n = len(x)
    out: list[OneColumnMove] = []
    for j in range(n):
        if x[j] == 0:
            continue
        for i in range(n):
            if i == j:
                continue
            v = pair_value(x, r, i, j)
            # moving t nodes from j to i changes v by 2t; the reflection level is v + t
            for t in range(1, x[j] + 1):
                if (v + t) % e:
                    continue
                y = list(x)
                y[i] += t
                y[j] -= t
                beta = unembed(y, ctx)
                if beta is None:
                    continue
                out.append(OneColumnMove(beta, i, j, v + t, t, _classify_pair(x, y, r, i, j, e)))  # type: ignore[arg-type]
    return out


def one_column_predecessors(alpha: Multipartition | Partition, ctx: ChargeContext) -> list[OneColumnMove]:
    """Targets beta dominating alpha with length one less, reached by a single one-column reflection."""
    alpha = as_multipartition(alpha)
    la = alcove_length(alpha, ctx)
    out = []
    for mv in one_column_moves(alpha, ctx):
        if alcove_length(mv.target, ctx) == la - 1 and dominates(mv.target, alpha, ctx):
            out.append(mv)
    return _sorted_moves(out)


def one_column_successors(beta: Multipartition | Partition, ctx: ChargeContext) -> list[OneColumnMove]:
    """Targets alpha dominated by beta with length one more, reached by a single one-column reflection."""
    beta = as_multipartition(beta)
    lb = alcove_length(beta, ctx)
    out = []
    for mv in one_column_moves(beta, ctx):
        if alcove_length(mv.target, ctx) == lb + 1 and dominates(beta, mv.target, ctx):
            out.append(mv)
    return _sorted_moves(out)


def _sorted_moves(moves: Iterable[OneColumnMove]) -> list[OneColumnMove]:
    return sorted(moves, key=lambda m: (tuple(tuple(-p for p in c) for c in m.target), m.i, m.j))


# --- path degree ------------------------------------------------------------------


def path_steps(nodes: Sequence[Node], ctx: ChargeContext) -> list[int]:
    steps = []
    for nd in nodes:
        if nd.col > ctx.h:
            raise DomainError(f"node {tuple(nd)} lies beyond column h={ctx.h}")
        steps.append(ctx.h * (nd.comp - 1) + nd.col - 1)
    return steps


def path_degree(nodes: Sequence[Node], ctx: ChargeContext) -> int:
    """Degree of the path adding the given nodes in order, starting from the empty multipartition."""
    _require_admissible(ctx)
    return kernels.path_degree(path_steps(nodes, ctx), rho(ctx), ctx.e)
