"""The BGG complex of a unitary simple module: terms, signed edges, diamonds and character identities."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .abacus import covering_transpositions, enumerate_po
from .alcove import (
    OneColumnMove,
    alcove_length,
    embed,
    in_fundamental_alcove,
    one_column_predecessors,
    one_column_successors,
    rho,
)
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    Partition,
    as_multipartition,
    dim_specht,
    format_multipartition,
)

CaseTag = Literal["1a", "1b", "2a", "2b", "3", "4", "5", "6a-i", "6a-ii", "6b", "unclassified"]
DEGENERATE = {"1b", "2b", "6a-i"}

# "printed" is the sign table exactly as stated; "consistent" differs only in case (1a), which carries
# (-1)^y instead of (-1)^(y+1).  The printed table leaves the sign system unsolvable (e.g. e=4, (3^4,1)).
EpsilonTable = Literal["consistent", "printed"]
DEFAULT_TABLE: EpsilonTable = "consistent"


class SignInconsistencyError(RuntimeError):
    """The diamond constraints on edge signs have no solution."""


class EdgeMismatchError(RuntimeError):
    """The geometric and abacus routes disagree on the covering edges."""


@dataclass(frozen=True)
class Term:
    mu: Multipartition
    degree: int
    dim: int


@dataclass
class Edge:
    source: Multipartition  # degree d
    target: Multipartition  # degree d - 1
    move: OneColumnMove
    sign: int = 1


@dataclass(frozen=True)
class Diamond:
    alpha: Multipartition
    beta: Multipartition
    gamma: Multipartition
    delta: Multipartition | None
    case: CaseTag
    x: int | None = None
    y: int | None = None
    epsilon: int | None = None

    @property
    def degenerate(self) -> bool:
        return self.delta is None


@dataclass
class BGGComplex:
    lam: Multipartition
    ctx: ChargeContext
    levels: dict[int, list[Term]]
    edges: list[Edge] = field(default_factory=list)
    diamonds: list[Diamond] = field(default_factory=list)

    @property
    def top_degree(self) -> int:
        return max(self.levels) if self.levels else 0

    def terms(self) -> list[Term]:
        return [t for d in sorted(self.levels) for t in self.levels[d]]

    def edge_sign(self, source: Multipartition, target: Multipartition) -> int:
        for ed in self.edges:
            if ed.source == source and ed.target == target:
                return ed.sign
        raise KeyError((source, target))

    def to_json(self) -> dict:
        return {
            "lambda": format_multipartition(self.lam),
            "levels": [
                {
                    "degree": d,
                    "terms": [{"mu": format_multipartition(t.mu), "dim": t.dim, "shift": d} for t in self.levels[d]],
                }
                for d in sorted(self.levels)
            ],
            "edges": [
                {"from": format_multipartition(ed.source), "to": format_multipartition(ed.target), "sign": ed.sign}
                for ed in self.edges
            ],
        }


def _sort_terms(mus: Sequence[Multipartition]) -> list[Multipartition]:
    return sorted(mus, key=lambda m: tuple(tuple(-p for p in c) for c in m))


def complex_terms(lam: Multipartition, ctx: ChargeContext) -> dict[int, list[Multipartition]]:
    """Level d holds the labels of length d below lam."""
    levels: dict[int, list[Multipartition]] = defaultdict(list)
    if ctx.level == 1:
        for mu in enumerate_po(lam[0], ctx.e, ctx.h):
            m = Multipartition([mu])
            levels[alcove_length(m, ctx)].append(m)
    else:
        frontier = [lam]
        seen = {lam}
        d = 0
        while frontier:
            levels[d] = list(frontier)
            nxt: set[Multipartition] = set()
            for beta in frontier:
                for mv in one_column_successors(beta, ctx):
                    if mv.target not in seen:
                        nxt.add(mv.target)
            seen |= nxt
            frontier = _sort_terms(list(nxt))
            d += 1
    return {d: _sort_terms(v) for d, v in sorted(levels.items())}


def build_complex(
    lam: Multipartition | Partition,
    ctx: ChargeContext,
    table: EpsilonTable = DEFAULT_TABLE,
    check_abacus: bool = True,
    solve_signs: bool = True,
) -> BGGComplex:
    lam = as_multipartition(lam)
    if not in_fundamental_alcove(lam, ctx):
        raise DomainError(f"{format_multipartition(lam)} is not in the fundamental alcove")
    term_levels = complex_terms(lam, ctx)
    levels = {d: [Term(m, d, dim_specht(m)) for m in mus] for d, mus in term_levels.items()}
    level_of = {t.mu: d for d, ts in levels.items() for t in ts}

    edges: list[Edge] = []
    preds: dict[Multipartition, list[OneColumnMove]] = {}
    for d in sorted(levels):
        if d == 0:
            continue
        for t in levels[d]:
            moves = [mv for mv in one_column_predecessors(t.mu, ctx) if level_of.get(mv.target) == d - 1]
            preds[t.mu] = moves
            edges.extend(Edge(t.mu, mv.target, mv) for mv in moves)
            if ctx.level == 1 and check_abacus:
                geometric = {mv.target[0] for mv in moves}
                abacus = {p for p, _ in covering_transpositions(t.mu[0], ctx.e, ctx.h)}
                if geometric != abacus:
                    raise EdgeMismatchError(
                        f"edges below {format_multipartition(t.mu)} differ: geometric {sorted(geometric)}, abacus {sorted(abacus)}"
                    )

    cx = BGGComplex(lam, ctx, levels, edges)
    cx.diamonds = find_diamonds(cx, preds, table)
    if solve_signs:
        assign_signs(cx)
    return cx


def find_diamonds(
    cx: BGGComplex, preds: dict[Multipartition, list[OneColumnMove]], table: EpsilonTable = DEFAULT_TABLE
) -> list[Diamond]:
    out: list[Diamond] = []
    for d in sorted(cx.levels):
        if d < 2:
            continue
        for t in cx.levels[d]:
            alpha = t.mu
            middle: dict[Multipartition, list[Multipartition]] = defaultdict(list)
            for mv in preds.get(alpha, []):
                for mv2 in preds.get(mv.target, []):
                    middle[mv2.target].append(mv.target)
            for beta in _sort_terms(list(middle)):
                out.append(classify_diamond(alpha, beta, middle[beta], cx.ctx, table))
    return out


# --- classification ---------------------------------------------------------------


def _move(x: Sequence[int], y: Sequence[int]) -> tuple[int, int]:
    """(source, destination) coordinates of a one-column move from x to y."""
    diff = [b - a for a, b in zip(x, y)]
    src = [c for c, v in enumerate(diff) if v < 0]
    dst = [c for c, v in enumerate(diff) if v > 0]
    if len(src) != 1 or len(dst) != 1 or diff[src[0]] != -diff[dst[0]]:
        raise DomainError("not a one-column move")
    return src[0], dst[0]


def _slab_walls(v0: int, e: int) -> tuple[int, int]:
    lo = (v0 // e) * e
    return lo, lo + e


def _reflect_pair(x: Sequence[int], r: Sequence[int], a: int, b: int, level: int) -> tuple[int, ...]:
    shift = x[a] + r[a] - x[b] - r[b] - level
    y = list(x)
    y[a] -= shift
    y[b] += shift
    return tuple(y)


def _three_column_case(paths: list[tuple[tuple[int, int], tuple[int, int]]]) -> tuple[str, int, int, int, int] | None:
    """Match the paths against the case shapes; return (case, index of the gamma path, i, j, k)."""
    if len(paths) == 1:
        (a1, b1), (a2, b2) = paths[0]
        if a1 == a2:  # (i->j, i->k)
            return "1b", 0, a1, b1, b2
        if b1 == b2:  # (j->k, i->k)
            return "2b", 0, a2, a1, b1
        return None
    for g in (0, 1):
        p, q = paths[g], paths[1 - g]
        (pa1, pb1), (pa2, pb2) = p
        (qa1, qb1), (qa2, qb2) = q
        # (1): gamma (i->j, i->k), delta (j->k, i->j)
        if pa1 == pa2:
            i, j, k = pa1, pb1, pb2
            if q == ((j, k), (i, j)):
                return "1a", g, i, j, k
        # (2): gamma (j->k, i->k), delta (i->j, j->k)
        if pb1 == pb2:
            j, k, i = pa1, pb1, pa2
            if q == ((i, j), (j, k)):
                return "2a", g, i, j, k
        # (3): delta (i->j, j->k), gamma (i->k, i->j)
        if pa1 == pa2:
            i, k, j = pa1, pb1, pb2
            if q == ((i, j), (j, k)):
                return "3", g, i, j, k
        # (4): delta (j->k, i->j), gamma (i->k, j->k)
        if pb1 == pb2:
            i, k, j = pa1, pb1, pa2
            if q == ((j, k), (i, j)):
                return "4", g, i, j, k
    return None


def _three_column_epsilon(case: str, x: int, y: int, table: EpsilonTable) -> int:
    if case == "1a":
        return (-1) ** (y + 1) if table == "printed" else (-1) ** y
    if case == "4":
        return (-1) ** x
    return 1


def classify_diamond(
    alpha: Multipartition,
    beta: Multipartition,
    intermediates: Sequence[Multipartition],
    ctx: ChargeContext,
    table: EpsilonTable = DEFAULT_TABLE,
) -> Diamond:
    """Case tag, vertex parameters and sign of a (possibly degenerate) diamond alpha -> {gamma, delta} -> beta."""
    mids = list(dict.fromkeys(intermediates))
    if not 1 <= len(mids) <= 2:
        raise DomainError(f"a diamond has one or two intermediates, got {len(mids)}")
    e = ctx.e
    r = rho(ctx)
    xa, xb = embed(alpha, ctx), embed(beta, ctx)
    xm = [embed(m, ctx) for m in mids]
    paths = [(_move(xa, x), _move(x, xb)) for x in xm]
    cols = sorted({c for p in paths for mv in p for c in mv})
    xi = [min(vals) for vals in zip(xa, xb, *xm)]

    if len(cols) == 4:
        if len(mids) != 2:
            return Diamond(alpha, beta, mids[0], None, "unclassified")
        return Diamond(alpha, beta, mids[0], mids[1], "5", epsilon=1)

    if len(cols) == 2:
        return _classify_two_column(alpha, beta, mids, xa, xb, xm, paths, xi, r, e, ctx)

    found = _three_column_case(paths)
    if found is None:
        return Diamond(alpha, beta, mids[0], mids[1] if len(mids) > 1 else None, "unclassified")
    case, g, i, j, _k = found
    x = xa[i] - xi[i]
    y = xa[j] - xi[j]
    if case in DEGENERATE:
        return Diamond(alpha, beta, mids[0], None, case, x, y)  # type: ignore[arg-type]
    return Diamond(
        alpha, beta, mids[g], mids[1 - g], case, x, y, _three_column_epsilon(case, x, y, table)  # type: ignore[arg-type]
    )


def _classify_two_column(alpha, beta, mids, xa, xb, xm, paths, xi, r, e, ctx) -> Diamond:
    # both first moves leave the same column i for column j
    i, j = paths[0][0]
    v0 = r[j] - r[i]
    walls = _slab_walls(v0, e)
    q, y = divmod(xa[i] - xi[i], e)
    blob = None
    for w, other in ((walls[0], walls[1]), (walls[1], walls[0])):
        first = _reflect_pair(xa, r, j, i, w)
        if first != xa and _reflect_pair(first, r, j, i, other) == tuple(xb):
            blob = first
            break
    if blob is not None:
        others = [(m, x) for m, x in zip(mids, xm) if tuple(x) != blob]
        if len(others) == len(mids):
            # the reflection through the near wall leaves the labels: a single strand
            if len(mids) == 1:
                return Diamond(alpha, beta, mids[0], None, "6a-i", q, y)
        elif others:
            d = next(m for m, x in zip(mids, xm) if tuple(x) == blob)
            return Diamond(alpha, beta, others[0][0], d, "6a-ii", q, y, (-1) ** (e * (q + 1) + y))
    if len(mids) == 2:
        return Diamond(alpha, beta, mids[0], mids[1], "6b", q, y, (-1) ** y)
    return Diamond(alpha, beta, mids[0], None, "unclassified", q, y)


# --- signs ------------------------------------------------------------------------------


def sign_constraints(cx: BGGComplex) -> list[tuple[list[int], int]]:
    """Each non-degenerate diamond gives sum of its four edge bits = 1 + bit(epsilon) over GF(2)."""
    index = {(ed.source, ed.target): n for n, ed in enumerate(cx.edges)}
    rows = []
    for dm in cx.diamonds:
        if dm.delta is None or dm.epsilon is None:
            continue
        vars_ = [
            index[(dm.alpha, dm.gamma)],
            index[(dm.alpha, dm.delta)],
            index[(dm.gamma, dm.beta)],
            index[(dm.delta, dm.beta)],
        ]
        rhs = (1 + (0 if dm.epsilon == 1 else 1)) % 2
        rows.append((vars_, rhs))
    return rows


def solve_gf2(nvars: int, rows: list[tuple[list[int], int]]) -> list[int] | None:
    """Gaussian elimination with bitmask rows; free variables are set to zero."""
    pivots: dict[int, tuple[int, int]] = {}  # pivot column -> (mask, rhs)
    for vars_, rhs in rows:
        mask = 0
        for v in vars_:
            mask ^= 1 << v
        while mask:
            col = mask.bit_length() - 1
            if col not in pivots:
                pivots[col] = (mask, rhs)
                break
            pm, pr = pivots[col]
            mask ^= pm
            rhs ^= pr
        else:
            if rhs:
                return None
    sol = [0] * nvars
    for col in sorted(pivots):
        mask, rhs = pivots[col]
        rest = mask & ~(1 << col)
        acc = rhs
        while rest:
            low = rest & -rest
            acc ^= sol[low.bit_length() - 1]
            rest ^= low
        sol[col] = acc
    return sol


def assign_signs(cx: BGGComplex) -> None:
    sol = solve_gf2(len(cx.edges), sign_constraints(cx))
    if sol is None:
        raise SignInconsistencyError(f"no sign assignment for the complex of {format_multipartition(cx.lam)}")
    for ed, bit in zip(cx.edges, sol):
        ed.sign = -1 if bit else 1


def check_signs(cx: BGGComplex) -> list[Diamond]:
    """Diamonds violating eps(a,g) eps(a,d) eps(g,b) eps(d,b) = -epsilon."""
    sign = {(ed.source, ed.target): ed.sign for ed in cx.edges}
    bad = []
    for dm in cx.diamonds:
        if dm.delta is None or dm.epsilon is None:
            continue
        prod = sign[(dm.alpha, dm.gamma)] * sign[(dm.alpha, dm.delta)] * sign[(dm.gamma, dm.beta)] * sign[(dm.delta, dm.beta)]
        if prod != -dm.epsilon:
            bad.append(dm)
    return bad


# --- characters ---------------------------------------------------------------------------


def euler_characteristic(cx: BGGComplex) -> int:
    return sum((-1) ** d * t.dim for d, ts in cx.levels.items() for t in ts)


def graded_character(cx: BGGComplex) -> list[int]:
    """Coefficients c_d of sum_d c_d t^d, with c_d = (-1)^d * (dimension at level d)."""
    top = cx.top_degree
    coeffs = [0] * (top + 1)
    for d, ts in cx.levels.items():
        coeffs[d] = (-1) ** d * sum(t.dim for t in ts)
    return coeffs


def homology_terms(cx: BGGComplex, i: int) -> list[tuple[Multipartition, int]]:
    return [(t.mu, t.dim) for t in cx.levels.get(i, [])]
