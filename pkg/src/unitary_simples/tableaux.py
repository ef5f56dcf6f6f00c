"""Standard tableaux as shape chains, residue sequences, and alcove-restricted tableaux."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .alcove import good_nodes, in_fundamental_alcove
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    Node,
    Partition,
    as_multipartition,
    boundary_nodes,
    box_key,
    format_multipartition,
    residue,
)


@dataclass(frozen=True)
class StandardTableau:
    """Entry k sits in nodes[k-1]; the k-th prefix shape is the union of the first k nodes."""

    shape: Multipartition
    nodes: tuple[Node, ...]

    @property
    def size(self) -> int:
        return len(self.nodes)

    def shapes(self) -> Iterator[Multipartition]:
        """The chain of shapes from the empty multipartition to the final shape."""
        cur = Multipartition([Partition()] * self.shape.level)
        yield cur
        for nd in self.nodes:
            cur = cur.add(nd)
            yield cur

    def prefix(self, k: int) -> "StandardTableau":
        nodes = self.nodes[:k]
        comps: list[list[int]] = [[] for _ in range(self.shape.level)]
        for nd in nodes:
            parts = comps[nd.comp - 1]
            if nd.row > len(parts):
                parts.append(0)
            parts[nd.row - 1] += 1
        return StandardTableau(Multipartition(comps), nodes)

    def entry(self, node: Node) -> int:
        return self.nodes.index(node) + 1

    def grid(self) -> list[list[list[int]]]:
        """Rows of entries per component."""
        out: list[list[list[int]]] = [[[0] * length for length in comp] for comp in self.shape]
        for k, nd in enumerate(self.nodes, start=1):
            out[nd.comp - 1][nd.row - 1][nd.col - 1] = k
        return out

    def to_json(self) -> list[list[int]]:
        return [[nd.row, nd.col, nd.comp] for nd in self.nodes]

    def render(self) -> str:
        comps = []
        for rows in self.grid():
            comps.append(" / ".join(",".join(str(v) for v in row) for row in rows) or "∅")
        return " | ".join(comps)


def tableau_from_nodes(nodes: Sequence[Node], level: int = 1) -> StandardTableau:
    """Build a tableau from its entry order, validating every prefix."""
    cur = Multipartition([Partition()] * level)
    for nd in nodes:
        if nd not in boundary_nodes(cur, "addable"):
            raise DomainError(f"node {tuple(nd)} is not addable to {format_multipartition(cur)}")
        cur = cur.add(nd)
    return StandardTableau(cur, tuple(nodes))


def tableau_from_shapes(shapes: Sequence[Multipartition]) -> StandardTableau:
    """Build a tableau from its shape chain (each step adds one node)."""
    shapes = [as_multipartition(s) for s in shapes]
    nodes: list[Node] = []
    for a, b in zip(shapes, shapes[1:]):
        added = [nd for nd in b.nodes() if not a.contains(nd)]
        if len(added) != 1 or b.size != a.size + 1:
            raise DomainError("consecutive shapes must differ by exactly one node")
        nodes.append(added[0])
    if shapes[0].size != 0:
        raise DomainError("a shape chain starts at the empty multipartition")
    return StandardTableau(shapes[-1], tuple(nodes))


def _order_key(t: StandardTableau, level: int) -> tuple:
    return tuple(box_key(nd, level) for nd in t.nodes)


def enumerate_std(lam: Multipartition | Partition) -> list[StandardTableau]:
    """All standard tableaux of shape lam, ordered lexicographically by the box keys of the added nodes."""
    lam = as_multipartition(lam)
    level = lam.level
    out: list[StandardTableau] = []

    def rec(shape: Multipartition, suffix: tuple[Node, ...]) -> None:
        if shape.size == 0:
            out.append(StandardTableau(lam, suffix))
            return
        for nd in boundary_nodes(shape, "removable"):
            rec(shape.remove(nd), (nd,) + suffix)

    rec(lam, ())
    out.sort(key=lambda t: _order_key(t, level))
    return out


def canonical_tableau(lam: Multipartition | Partition) -> StandardTableau:
    """Place the largest entry in the least dominant removable box and recurse."""
    lam = as_multipartition(lam)
    level = lam.level
    nodes: list[Node] = []
    shape = lam
    while shape.size:
        nd = max(boundary_nodes(shape, "removable"), key=lambda b: box_key(b, level))
        nodes.append(nd)
        shape = shape.remove(nd)
    return StandardTableau(lam, tuple(reversed(nodes)))


def residue_sequence(t: StandardTableau, ctx: ChargeContext) -> tuple[int, ...]:
    return tuple(residue(nd, ctx) for nd in t.nodes)


def is_e_restricted(t: StandardTableau, ctx: ChargeContext) -> bool:
    """Every prefix shape lies in the fundamental alcove of the fixed ambient space.

    At level one this is stronger than 'every prefix is an e-restricted partition': prefixes on a wall are excluded.
    """
    if not in_fundamental_alcove(t.shape, ctx):
        raise DomainError(f"{format_multipartition(t.shape)} is not in the fundamental alcove")
    return all(in_fundamental_alcove(s, ctx) for s in t.shapes())


def enumerate_std_e(lam: Multipartition | Partition, ctx: ChargeContext) -> list[StandardTableau]:
    """Tableaux of lam all of whose prefixes lie in the fundamental alcove.

    Standard tableaux are grown node by node and a branch is abandoned as soon as a prefix leaves the alcove,
    which yields exactly the standard tableaux passing is_e_restricted.
    """
    lam = as_multipartition(lam)
    if not in_fundamental_alcove(lam, ctx):
        raise DomainError(f"{format_multipartition(lam)} is not in the fundamental alcove")
    level = lam.level
    out: list[StandardTableau] = []
    empty = Multipartition([Partition()] * level)

    def rec(shape: Multipartition, prefix: tuple[Node, ...]) -> None:
        if shape.size == lam.size:
            out.append(StandardTableau(lam, prefix))
            return
        for nd in boundary_nodes(shape, "addable"):
            if not lam.contains(nd):
                continue
            nxt = shape.add(nd)
            if in_fundamental_alcove(nxt, ctx):
                rec(nxt, prefix + (nd,))

    rec(empty, ())
    out.sort(key=lambda t: _order_key(t, level))
    return out


def enumerate_std_e_by_filter(lam: Multipartition | Partition, ctx: ChargeContext) -> list[StandardTableau]:
    """Literal filter of enumerate_std through is_e_restricted (reference route for small sizes)."""
    return [t for t in enumerate_std(lam) if is_e_restricted(t, ctx)]


class _CountCache:
    """Memo table for count_std_e; concurrent fills of the same key store the same value."""

    def __init__(self) -> None:
        self._data: dict[tuple[ChargeContext, Multipartition], int] = {}
        self._lock = threading.Lock()

    def get(self, key: tuple[ChargeContext, Multipartition]) -> int | None:
        return self._data.get(key)

    def put(self, key: tuple[ChargeContext, Multipartition], value: int) -> None:
        with self._lock:
            self._data[key] = value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_COUNTS = _CountCache()


def count_std_e(lam: Multipartition | Partition, ctx: ChargeContext) -> int:
    """|Std_e(lam)| by the branching recursion over good nodes."""
    lam = as_multipartition(lam)
    if not in_fundamental_alcove(lam, ctx):
        raise DomainError(f"{format_multipartition(lam)} is not in the fundamental alcove")
    return _count(lam, ctx)


def _count(lam: Multipartition, ctx: ChargeContext) -> int:
    if lam.size == 0:
        return 1
    key = (ctx, lam)
    cached = _COUNTS.get(key)
    if cached is not None:
        return cached
    value = sum(_count(lam.remove(nd), ctx) for nd in good_nodes(lam, ctx))
    _COUNTS.put(key, value)
    return value
