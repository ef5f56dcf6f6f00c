"""Partitions, multipartitions, nodes, residues and the residue-aware dominance order."""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence


class ParseError(ValueError):
    """A partition or multipartition literal could not be parsed."""


class DomainError(ValueError):
    """An input is well formed but violates a precondition of the operation."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; the empty tuple is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def columns(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return Partition(_conjugate(tuple(self)))

    def part(self, r: int) -> int:
        """Length of row r (1-indexed); zero beyond the last row."""
        return self[r - 1] if 1 <= r <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield r, c

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"


@lru_cache(maxsize=None)
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1))


class Multipartition(tuple):
    """An ordered tuple of partitions (components)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]) -> "Multipartition":
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise DomainError("a multipartition needs at least one component")
        return super().__new__(cls, comps)

    @property
    def level(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(p.size for p in self)

    def nodes(self) -> Iterator["Node"]:
        for m, comp in enumerate(self, start=1):
            for r, c in comp.cells():
                yield Node(r, c, m)

    def contains(self, node: "Node") -> bool:
        return 1 <= node.comp <= len(self) and node.col <= self[node.comp - 1].part(node.row) and node.col >= 1

    def add(self, node: "Node") -> "Multipartition":
        comps = list(self)
        parts = list(comps[node.comp - 1])
        if node.row == len(parts) + 1:
            parts.append(1)
        else:
            parts[node.row - 1] += 1
        comps[node.comp - 1] = Partition(parts)
        return Multipartition(comps)

    def remove(self, node: "Node") -> "Multipartition":
        comps = list(self)
        parts = list(comps[node.comp - 1])
        parts[node.row - 1] -= 1
        comps[node.comp - 1] = Partition(parts)
        return Multipartition(comps)

    def __repr__(self) -> str:
        return f"Multipartition({format_multipartition(self)!r})"


class Node(NamedTuple):
    row: int
    col: int
    comp: int = 1


@dataclass(frozen=True)
class ChargeContext:
    """Quantum characteristic e, level, multicharge, column bound h and optional size n."""

    e: int
    level: int = 1
    charge: tuple[int, ...] = (0,)
    h: int = 1
    n: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "charge", tuple(int(k) % self.e for k in self.charge) if self.e >= 2 else tuple(self.charge))
        if self.e < 2:
            raise DomainError(f"e must be at least 2, got {self.e}")
        if self.level < 1:
            raise DomainError(f"level must be at least 1, got {self.level}")
        if len(self.charge) != self.level:
            raise DomainError(f"charge has {len(self.charge)} entries but level is {self.level}")
        if self.h < 1:
            raise DomainError(f"column bound h must be at least 1, got {self.h}")
        if self.level >= 2 and self.e <= self.h * self.level:
            raise DomainError(f"level {self.level} requires e > h*level = {self.h * self.level}, got e={self.e}")
        if self.level == 1 and self.e < self.h:
            raise DomainError(f"level 1 requires e >= h, got e={self.e}, h={self.h}")

    @property
    def rank(self) -> int:
        return self.h * self.level


def residue(node: Node, ctx: ChargeContext) -> int:
    if not 1 <= node.comp <= ctx.level:
        raise DomainError(f"component {node.comp} out of range for level {ctx.level}")
    return (ctx.charge[node.comp - 1] + node.col - node.row) % ctx.e


def box_key(node: Node, level: int) -> tuple[int, int]:
    """Sort key for the box order: a smaller key means a more dominant box.

    The order is total: equal keys force equal (r, c, m).
    """
    return level * (node.row - node.col) + node.comp, node.row + node.col


def box_dominates(a: Node, b: Node, level: int) -> bool:
    return box_key(a, level) < box_key(b, level)


def dominates(lam: Multipartition, mu: Multipartition, ctx: ChargeContext) -> bool:
    """Residue-aware dominance: every i-box b of mu sees at least as many i-boxes of lam weakly dominating it as of mu.

    A box counts as dominating itself; with strict box dominance the relation fails antisymmetry.
    """
    lam, mu = as_multipartition(lam), as_multipartition(mu)
    if lam.size != mu.size:
        raise DomainError(f"size mismatch: {lam.size} vs {mu.size}")
    level = ctx.level
    by_res_lam: dict[int, list[tuple[int, int]]] = {}
    for node in lam.nodes():
        by_res_lam.setdefault(residue(node, ctx), []).append(box_key(node, level))
    by_res_mu: dict[int, list[tuple[int, int]]] = {}
    for node in mu.nodes():
        by_res_mu.setdefault(residue(node, ctx), []).append(box_key(node, level))
    for i, keys_mu in by_res_mu.items():
        keys_lam = sorted(by_res_lam.get(i, ()))
        keys_mu = sorted(keys_mu)
        # keys are distinct within one diagram, so t+1 keys of mu are weakly below keys_mu[t]
        for t, key in enumerate(keys_mu):
            if _count_at_most(keys_lam, key) < t + 1:
                return False
    return True


def _count_at_most(sorted_keys: Sequence[tuple[int, int]], key: tuple[int, int]) -> int:
    return bisect_right(sorted_keys, key)


def classical_dominates(lam: Partition, mu: Partition) -> bool:
    """Ordinary dominance of partitions via partial sums."""
    if sum(lam) != sum(mu):
        raise DomainError("size mismatch")
    a = b = 0
    for r in range(max(len(lam), len(mu))):
        a += lam[r] if r < len(lam) else 0
        b += mu[r] if r < len(mu) else 0
        if a < b:
            return False
    return True


def boundary_nodes(
    lam: Multipartition,
    which: Literal["addable", "removable"],
    ctx: ChargeContext | None = None,
    residue_filter: int | None = None,
) -> list[Node]:
    """Addable or removable nodes, ordered by component then row."""
    lam = as_multipartition(lam)
    out: list[Node] = []
    for m, comp in enumerate(lam, start=1):
        rows = len(comp)
        if which == "addable":
            for r in range(1, rows + 2):
                c = comp.part(r) + 1
                if r == 1 or comp.part(r - 1) >= c:
                    out.append(Node(r, c, m))
        elif which == "removable":
            for r in range(1, rows + 1):
                if comp.part(r) > comp.part(r + 1):
                    out.append(Node(r, comp.part(r), m))
        else:
            raise ValueError(f"unknown boundary kind {which!r}")
    if residue_filter is not None:
        if ctx is None:
            raise DomainError("a residue filter needs a charge context")
        out = [nd for nd in out if residue(nd, ctx) == residue_filter % ctx.e]
    return out


@lru_cache(maxsize=None)
def _hook_dim(parts: tuple[int, ...]) -> int:
    n = sum(parts)
    conj = _conjugate(parts)
    prod = 1
    for r, length in enumerate(parts):
        for c in range(length):
            prod *= (length - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // prod


def dim_specht(lam: Multipartition | Partition) -> int:
    """Number of standard tableaux: multinomial of component sizes times hook-length values."""
    lam = as_multipartition(lam)
    total = factorial(lam.size)
    for comp in lam:
        total //= factorial(comp.size)
    for comp in lam:
        total *= _hook_dim(tuple(comp))
    return total


def as_multipartition(x: Multipartition | Partition | Sequence) -> Multipartition:
    if isinstance(x, Multipartition):
        return x
    if isinstance(x, Partition):
        return Multipartition([x])
    seq = tuple(x)
    if seq and all(isinstance(c, (tuple, list)) for c in seq):
        return Multipartition(seq)
    return Multipartition([Partition(seq)])


def column_lengths(p: Partition, h: int) -> tuple[int, ...]:
    """The first h column lengths of p, padded with zeros."""
    conj = p.conjugate()
    if len(conj) > h:
        raise DomainError(f"partition {format_partition(p)} has {len(conj)} columns, more than h={h}")
    return tuple(conj) + (0,) * (h - len(conj))


def from_column_lengths(cols: Sequence[int]) -> Partition:
    cols = [c for c in cols]
    for a, b in zip(cols, cols[1:]):
        if a < b:
            raise DomainError(f"column lengths must be weakly decreasing: {cols}")
    return Partition(cols).conjugate()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n (optionally with parts bounded), in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    for parts in rec(n, max_part):
        yield Partition(parts)


def multipartitions_of(n: int, level: int, max_part: int | None = None) -> Iterator[Multipartition]:
    def rec(rem: int, slots: int) -> Iterator[tuple[Partition, ...]]:
        if slots == 1:
            for p in partitions_of(rem, max_part):
                yield (p,)
            return
        for k in range(rem, -1, -1):
            for p in partitions_of(k, max_part):
                for rest in rec(rem - k, slots - 1):
                    yield (p,) + rest

    for comps in rec(n, level):
        yield Multipartition(comps)


# --- literal grammar -------------------------------------------------------

_EMPTY = {"", "∅", "0", "-", "()"}
_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse `3^4,1` style literals; `∅`, `0`, `-` or the empty string denote the empty partition."""
    s = text.strip()
    if s in _EMPTY:
        return Partition(())
    parts: list[int] = []
    for term in s.split(","):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"cannot parse partition term {term!r} in {text!r}")
        value, mult = int(m.group(1)), int(m.group(2) or 1)
        if value == 0:
            raise ParseError(f"zero part in {text!r}")
        parts.extend([value] * mult)
    try:
        return Partition(parts)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def parse_multipartition(text: str, level: int | None = None) -> Multipartition:
    comps = [parse_partition(chunk) for chunk in text.split("|")]
    if level is not None and len(comps) != level:
        raise ParseError(f"literal {text!r} has {len(comps)} components but level is {level}")
    return Multipartition(comps)


def format_partition(p: Sequence[int]) -> str:
    if not p:
        return "∅"
    out: list[str] = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        out.append(f"{p[i]}" if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return ",".join(out)


def format_multipartition(mp: Multipartition | Partition) -> str:
    if isinstance(mp, Multipartition):
        if mp.level == 1:
            return format_partition(mp[0])
        return "|".join(format_partition(c) for c in mp)
    return format_partition(mp)
