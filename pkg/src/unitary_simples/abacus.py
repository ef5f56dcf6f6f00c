"""Z- and e-abacus calculus for unitary partitions.

Runners of an e-abacus are indexed 0..e-1 from bottom to top; a bead at Z-position p sits on
runner p mod e in column p // e.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .partitions import DomainError, Partition, column_lengths, format_partition


@dataclass(frozen=True)
class ZAbacus:
    beads: tuple[int, ...]

    def __post_init__(self) -> None:
        beads = tuple(sorted(self.beads))
        if len(set(beads)) != len(beads):
            raise DomainError(f"bead positions must be distinct: {self.beads}")
        if beads and beads[0] < 0:
            raise DomainError(f"bead positions must be non-negative: {self.beads}")
        object.__setattr__(self, "beads", beads)

    @property
    def h(self) -> int:
        return len(self.beads)

    def to_partition(self) -> Partition:
        desc = sorted(self.beads, reverse=True)
        h = len(desc)
        cols = [b - (h - 1 - j) for j, b in enumerate(desc)]
        return Partition(cols).conjugate()


@dataclass(frozen=True)
class EAbacus:
    e: int
    runners: tuple[tuple[int, ...], ...]

    @classmethod
    def from_zabacus(cls, z: ZAbacus, e: int) -> "EAbacus":
        runners: list[list[int]] = [[] for _ in range(e)]
        for p in z.beads:
            runners[p % e].append(p // e)
        return cls(e, tuple(tuple(sorted(r)) for r in runners))

    def to_zabacus(self) -> ZAbacus:
        return ZAbacus(tuple(c * self.e + r for r, cols in enumerate(self.runners) for c in cols))

    def to_partition(self) -> Partition:
        return self.to_zabacus().to_partition()

    @property
    def bead_count(self) -> int:
        return sum(len(r) for r in self.runners)

    def to_json(self) -> dict:
        return {"e": self.e, "runners": [list(r) for r in self.runners]}

    def render(self) -> str:
        width = max((c for r in self.runners for c in r), default=0) + 2
        rows = []
        for r in reversed(range(self.e)):
            cells = ["o" if c in self.runners[r] else "-" for c in range(width)]
            rows.append(f"{r:>2} " + " ".join(cells))
        return "\n".join(rows)


@dataclass(frozen=True)
class UnitaryAbacus:
    """An e-abacus with at most one bead per runner: occupied runners (bottom to top) and their columns."""

    e: int
    runners: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.runners) != len(self.cols):
            raise DomainError("runners and columns differ in length")
        if list(self.runners) != sorted(set(self.runners)):
            raise DomainError(f"occupied runners must be distinct and increasing: {self.runners}")
        if self.runners and not (0 <= self.runners[0] and self.runners[-1] < self.e):
            raise DomainError(f"runner index out of range for e={self.e}")
        if any(c < 0 for c in self.cols):
            raise DomainError(f"bead columns must be non-negative: {self.cols}")

    @classmethod
    def from_eabacus(cls, a: EAbacus) -> "UnitaryAbacus":
        runners, cols = [], []
        for r, cs in enumerate(a.runners):
            if len(cs) > 1:
                raise DomainError(f"runner {r} carries {len(cs)} beads")
            if cs:
                runners.append(r)
                cols.append(cs[0])
        return cls(a.e, tuple(runners), tuple(cols))

    @classmethod
    def from_partition(cls, lam: Partition, e: int, h: int | None = None) -> "UnitaryAbacus":
        h = lam.columns if h is None else h
        return cls.from_eabacus(EAbacus.from_zabacus(abacus_from_partition(lam, h), e))

    @property
    def h(self) -> int:
        return len(self.runners)

    def positions(self) -> tuple[int, ...]:
        return tuple(c * self.e + r for r, c in zip(self.runners, self.cols))

    def to_eabacus(self) -> EAbacus:
        runners: list[tuple[int, ...]] = [()] * self.e
        for r, c in zip(self.runners, self.cols):
            runners[r] = (c,)
        return EAbacus(self.e, tuple(runners))

    def to_partition(self) -> Partition:
        return ZAbacus(self.positions()).to_partition()

    def with_cols(self, cols: Sequence[int]) -> "UnitaryAbacus":
        return UnitaryAbacus(self.e, self.runners, tuple(cols))


def abacus_from_partition(lam: Partition, h: int) -> ZAbacus:
    """Bead positions {lam^T_j + h - j : j = 1..h}."""
    if h < lam.columns:
        raise DomainError(f"h={h} is smaller than the {lam.columns} columns of {format_partition(lam)}")
    cols = column_lengths(lam, h)
    return ZAbacus(tuple(cols[j] + h - 1 - j for j in range(h)))


def e_core_and_weight(a: ZAbacus, e: int) -> tuple[Partition, int]:
    ea = EAbacus.from_zabacus(a, e)
    weight = 0
    slid: list[tuple[int, ...]] = []
    for cols in ea.runners:
        weight += sum(c - t for t, c in enumerate(cols))
        slid.append(tuple(range(len(cols))))
    return EAbacus(e, tuple(slid)).to_partition(), weight


def core_and_weight(lam: Partition, e: int) -> tuple[Partition, int]:
    return e_core_and_weight(abacus_from_partition(lam, lam.columns), e)


def is_unitary(lam: Partition, e: int, h: int | None = None) -> bool:
    """All beads of the h-bead Z-abacus (h = number of columns by default) within an interval of width e."""
    if e < 2:
        raise DomainError("e must be at least 2")
    h = lam.columns if h is None else h
    if h == 0:
        return True
    beads = abacus_from_partition(lam, h).beads
    return beads[-1] - beads[0] <= e - 1


def _require_unitary(lam: Partition, e: int, h: int | None = None) -> None:
    if not is_unitary(lam, e, h):
        raise DomainError(f"{format_partition(lam)} is not {e}-unitary")


def disorders(u: UnitaryAbacus) -> int:
    """Pairs of beads where the upper bead sits strictly left of the lower bead."""
    c = u.cols
    return sum(1 for a in range(len(c)) for b in range(a + 1, len(c)) if c[b] < c[a])


def hd(u: UnitaryAbacus) -> int:
    """Sum of pairwise column differences minus the number of disorders."""
    return kernels.bead_hd(u.cols)


def hd_of_partition(mu: Partition, e: int, h: int | None = None) -> int:
    return hd(UnitaryAbacus.from_partition(mu, e, h))


# --- tau operators ----------------------------------------------------------


def apply_tau(u: UnitaryAbacus, i: int) -> UnitaryAbacus:
    """Fix the bottom i occupied runners; rotate the remaining beads one runner up and push the wrapped bead right.

    Empty runners are ignored, so the operator acts on the occupied runners as on an h-runner abacus.
    """
    h = u.h
    if not 0 <= i < h:
        raise DomainError(f"tau index {i} out of range for {h} occupied runners")
    cols = list(u.cols)
    top = cols[h - 1]
    for j in range(h - 1, i, -1):
        cols[j] = cols[j - 1]
    cols[i] = top + 1
    return u.with_cols(cols)


def _undo_tau(u: UnitaryAbacus, i: int) -> UnitaryAbacus:
    h = u.h
    cols = list(u.cols)
    wrapped = cols[i] - 1
    for j in range(i, h - 1):
        cols[j] = cols[j + 1]
    cols[h - 1] = wrapped
    return u.with_cols(cols)


def empty_core_abacus(e: int, runners: Sequence[int] | None = None) -> UnitaryAbacus:
    runners = tuple(range(e)) if runners is None else tuple(runners)
    return UnitaryAbacus(e, runners, (0,) * len(runners))


def apply_tau_word(word: Sequence[int], base: UnitaryAbacus) -> UnitaryAbacus:
    """Apply the word (weakly decreasing entries) as tau_{word[-1]} ... tau_{word[0]}: largest entry first."""
    word = list(word)
    for a, b in zip(word, word[1:]):
        if a < b:
            raise DomainError(f"tau word must be weakly decreasing: {word}")
    if any(base.cols):
        raise DomainError("tau words act on an abacus whose beads are all in column 0")
    u = base
    for i in word:
        if not 0 <= i < base.h:
            raise DomainError(f"tau word entry {i} must be below the runner count {base.h}")
        u = apply_tau(u, i)
    return u


def tau_from_abacus(u: UnitaryAbacus) -> tuple[int, ...]:
    """Invert apply_tau_word: peel operators off by counting bottom runners at column 0."""
    steps: list[int] = []
    guard = sum(u.cols) + 1
    while any(u.cols):
        i = 0
        while u.cols[i] == 0:
            i += 1
        u = _undo_tau(u, i)
        steps.append(i)
        guard -= 1
        if guard < 0 or any(c < 0 for c in u.cols):
            raise DomainError("abacus is not reachable by tau operators")
    word = tuple(reversed(steps))
    for a, b in zip(word, word[1:]):
        if a < b:
            raise DomainError("abacus is not reachable by a monotone tau word")
    return word


def tau_from_partition(mu: Partition, e: int, h: int | None = None) -> tuple[int, ...]:
    """The word tau (padded with zeros to the e-weight) whose action on the core abacus gives mu."""
    u = UnitaryAbacus.from_partition(mu, e, h)
    word = tau_from_abacus(u)
    k = sum(u.cols)
    # each tau application increases the column sum by one
    return word + (0,) * (k - len(word))


# --- the orbit Po_e(lambda) -------------------------------------------------


def enumerate_po(lam: Partition, e: int, h: int | None = None) -> list[Partition]:
    """All partitions whose abacus has lam's occupied runners and a bead-column tuple of the same sum.

    Sorted by homological degree, then by partition (lexicographically larger first).
    """
    _require_unitary(lam, e, h)
    u = UnitaryAbacus.from_partition(lam, e, h)
    total = sum(u.cols)
    members = [(kernels.bead_hd(cols), u.with_cols(cols).to_partition()) for cols in kernels.compositions(total, u.h)]
    members.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
    return [p for _, p in members]


def po_abaci(lam: Partition, e: int) -> list[UnitaryAbacus]:
    _require_unitary(lam, e)
    u = UnitaryAbacus.from_partition(lam, e)
    return [u.with_cols(cols) for cols in kernels.compositions(sum(u.cols), u.h)]


def po_by_moves(lam: Partition, e: int) -> set[Partition]:
    """Breadth-first closure under 'one bead right, another bead left' (debug oracle)."""
    _require_unitary(lam, e)
    start = UnitaryAbacus.from_partition(lam, e)
    seen = {start.cols}
    queue = deque([start.cols])
    h = start.h
    while queue:
        cols = queue.popleft()
        for a in range(h):
            for b in range(h):
                if a == b or cols[b] == 0:
                    continue
                nxt = list(cols)
                nxt[a] += 1
                nxt[b] -= 1
                t = tuple(nxt)
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
    return {start.with_cols(c).to_partition() for c in seen}


@dataclass(frozen=True)
class Transposition:
    """Exchange on occupied runners i < j (bottom to top): runner i moves `shift` columns, runner j moves -shift."""

    i: int
    j: int
    shift: int
    finite: bool  # plain swap of the two bead columns

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "shift": self.shift, "finite": self.finite}


def _hd_change(positions: Sequence[int], i: int, j: int, new_i: int, new_j: int, e: int) -> int:
    """Change of hd under moving beads i, j to new positions, looking only at beads inside the moved range."""
    a, b = positions[i], positions[j]
    lo = min(a, b, new_i, new_j)
    hi = max(a, b, new_i, new_j)
    delta = abs(new_i - new_j) // e - abs(a - b) // e
    for k, c in enumerate(positions):
        if k == i or k == j or c < lo or c > hi:
            # beads outside the range see the pair's sum of column offsets unchanged
            continue
        delta += abs(new_i - c) // e + abs(new_j - c) // e - abs(a - c) // e - abs(b - c) // e
    return delta


def covering_transpositions(mu: Partition, e: int, h: int | None = None) -> list[tuple[Partition, Transposition]]:
    """All nu = t.mu with hd(nu) = hd(mu) - 1 for a two-runner bead exchange t.

    The test for each exchange only inspects beads lying between the old and new bead positions.
    """
    u = UnitaryAbacus.from_partition(mu, e, h)
    pos = u.positions()
    out: list[tuple[Partition, Transposition]] = []
    for i in range(u.h):
        for j in range(i + 1, u.h):
            total = u.cols[i] + u.cols[j]
            for ci in range(total + 1):
                shift = ci - u.cols[i]
                if shift == 0:
                    continue
                cj = total - ci
                new_i = ci * e + u.runners[i]
                new_j = cj * e + u.runners[j]
                if _hd_change(pos, i, j, new_i, new_j, e) == -1:
                    cols = list(u.cols)
                    cols[i], cols[j] = ci, cj
                    out.append((u.with_cols(cols).to_partition(), Transposition(i, j, shift, ci == u.cols[j])))
    return out


# --- runner insertion and removal ------------------------------------------


def insert_empty_runners(a: EAbacus, counts: Sequence[int]) -> EAbacus:
    """Insert counts[i] empty runners directly below runner i (counts[e] goes above the top runner)."""
    if len(counts) != a.e + 1:
        raise DomainError(f"need {a.e + 1} insertion counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise DomainError("insertion counts must be non-negative")
    runners: list[tuple[int, ...]] = []
    for r in range(a.e):
        runners.extend([()] * counts[r])
        runners.append(a.runners[r])
    runners.extend([()] * counts[a.e])
    return EAbacus(len(runners), tuple(runners))


def remove_empty_runners(a: EAbacus, which: Iterable[int] | None = None) -> EAbacus:
    """Delete the given runners (all empty runners by default)."""
    drop = {r for r, cols in enumerate(a.runners) if not cols} if which is None else set(which)
    for r in drop:
        if not 0 <= r < a.e:
            raise DomainError(f"runner {r} out of range")
        if a.runners[r]:
            raise DomainError(f"runner {r} is not empty")
    kept = tuple(cols for r, cols in enumerate(a.runners) if r not in drop)
    if len(kept) < 1:
        raise DomainError("cannot remove every runner")
    return EAbacus(len(kept), kept)


# --- core transposition ------------------------------------------------------


def core_transpose_abacus(a: EAbacus) -> EAbacus:
    """From the h-bead abacus of an e-core (one bead per occupied runner, column 0) to the (e-h)-bead abacus of its transpose.

    Swap beads and gaps in column 0, then flip the runners upside down.
    """
    e = a.e
    h = a.bead_count
    if h >= e:
        raise DomainError(f"core transposition needs fewer than e={e} beads, got {h}")
    occupied = set()
    for r, cols in enumerate(a.runners):
        if cols and cols != (0,):
            raise DomainError("core transposition expects every bead in column 0")
        if cols:
            occupied.add(r)
    runners = [() for _ in range(e)]
    for r in range(e):
        if r not in occupied:
            runners[e - 1 - r] = (0,)
    return EAbacus(e, tuple(runners))


# --- rimhook reading ---------------------------------------------------------


def hd_by_rimhooks(mu: Partition, e: int, h: int | None = None) -> int:
    """(h-1)k minus the arm-lengths of a full e-rimhook removal sequence of minimal total leg length."""
    h = mu.columns if h is None else h
    rows = len(mu)
    beads = frozenset(mu[i] + rows - 1 - i for i in range(rows))

    # removing a rimhook moves a bead p to the vacant p - e; its leg length counts beads strictly between
    memo: dict[frozenset[int], tuple[int, int]] = {}

    def best(bs: frozenset[int]) -> tuple[int, int]:
        if bs in memo:
            return memo[bs]
        result: tuple[int, int] | None = None
        for p in bs:
            q = p - e
            if q < 0 or q in bs:
                continue
            leg = sum(1 for c in bs if q < c < p)
            sub_leg, sub_k = best((bs - {p}) | {q})
            cand = (sub_leg + leg, sub_k + 1)
            if result is None or cand[0] < result[0]:
                result = cand
        memo[bs] = result if result is not None else (0, 0)
        return memo[bs]

    legs, k = best(beads)
    arms = k * (e - 1) - legs
    return (h - 1) * k - arms
