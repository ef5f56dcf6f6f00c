"""Bases and generator matrices of the unitary simple modules, restriction, and the Mullineux involution."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
from scipy import sparse

from .abacus import (
    EAbacus,
    abacus_from_partition,
    core_and_weight,
    core_transpose_abacus,
    is_unitary,
)
from .alcove import good_nodes, in_fundamental_alcove
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    Node,
    Partition,
    as_multipartition,
    boundary_nodes,
    format_multipartition,
    format_partition,
    partitions_of,
    residue,
)
from .tableaux import StandardTableau, enumerate_std_e, residue_sequence, tableau_from_shapes

Matrix = sparse.csr_array


def _zero(n: int) -> Matrix:
    return sparse.csr_array((n, n), dtype=np.int64)


def matrix_to_json(m: Matrix) -> dict:
    coo = sparse.coo_array(m)
    entries = sorted((int(i), int(j), int(v)) for i, j, v in zip(coo.row, coo.col, coo.data) if v)
    return {"rows": int(m.shape[0]), "entries": [list(t) for t in entries]}


def residues_adjacent(a: int, b: int, e: int) -> bool:
    """Equal or at cyclic distance one in Z/e."""
    d = (a - b) % e
    return d in (0, 1, e - 1)


# --- generator matrices ----------------------------------------------------------


@dataclass(frozen=True)
class SimpleModuleModel:
    lam: Multipartition
    ctx: ChargeContext
    basis: tuple[StandardTableau, ...]
    residues: tuple[tuple[int, ...], ...]
    idempotents: dict[tuple[int, ...], Matrix]
    y: tuple[Matrix, ...]  # y_1 .. y_n
    psi: tuple[Matrix, ...]  # psi_1 .. psi_{n-1}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.lam.size

    def to_json(self) -> dict:
        return {
            "lambda": format_multipartition(self.lam),
            "dim": self.dim,
            "basis": [t.to_json() for t in self.basis],
            "residues": [list(r) for r in self.residues],
            "idempotents": [
                {"residues": list(k), "matrix": matrix_to_json(m)} for k, m in sorted(self.idempotents.items())
            ],
            "y": [matrix_to_json(m) for m in self.y],
            "psi": [matrix_to_json(m) for m in self.psi],
        }


def _swap(t: StandardTableau, r: int) -> tuple[Node, ...]:
    nodes = list(t.nodes)
    nodes[r - 1], nodes[r] = nodes[r], nodes[r - 1]
    return tuple(nodes)


def generator_matrices(lam: Multipartition | Partition, ctx: ChargeContext) -> SimpleModuleModel:
    """Idempotents, y_k and psi_r acting on the e-restricted tableau basis of the simple module."""
    lam = as_multipartition(lam)
    if not in_fundamental_alcove(lam, ctx):
        raise DomainError(f"{format_multipartition(lam)} is not in the fundamental alcove")
    basis = tuple(enumerate_std_e(lam, ctx))
    if not basis:
        raise DomainError(f"{format_multipartition(lam)} has no e-restricted tableaux")
    dim = len(basis)
    n = lam.size
    e = ctx.e
    residues = tuple(residue_sequence(t, ctx) for t in basis)
    index = {t.nodes: k for k, t in enumerate(basis)}

    weight_rows: dict[tuple[int, ...], list[int]] = {}
    for k, res in enumerate(residues):
        weight_rows.setdefault(res, []).append(k)
    idempotents = {
        res: sparse.csr_array((np.ones(len(ks), dtype=np.int64), (ks, ks)), shape=(dim, dim))
        for res, ks in weight_rows.items()
    }

    psi = []
    for r in range(1, n):
        rows, cols = [], []
        for k, t in enumerate(basis):
            a, b = residues[k][r - 1], residues[k][r]
            if residues_adjacent(a, b, e):
                continue
            target = index.get(_swap(t, r))
            if target is None:
                raise DomainError(
                    f"swapping entries {r}, {r + 1} of {t.render()} leaves the e-restricted basis"
                )
            rows.append(target)
            cols.append(k)
        psi.append(sparse.csr_array((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(dim, dim)))

    return SimpleModuleModel(lam, ctx, basis, residues, idempotents, tuple(_zero(dim) for _ in range(n)), tuple(psi))


def residue_pattern_occurrences(model: SimpleModuleModel) -> list[tuple[int, int]]:
    """(basis index, position k) where residues k, k+1, k+2 read i, i +- 1, i."""
    e = model.ctx.e
    out = []
    for idx, res in enumerate(model.residues):
        for k in range(len(res) - 2):
            a, b, c = res[k], res[k + 1], res[k + 2]
            if a == c and (b - a) % e in (1, e - 1):
                out.append((idx, k + 1))
    return out


# --- restriction ---------------------------------------------------------------------


def restriction_decomposition(lam: Multipartition | Partition, ctx: ChargeContext) -> dict[int, Multipartition]:
    """Residue of each good node mapped to the label obtained by removing it."""
    lam = as_multipartition(lam)
    out: dict[int, Multipartition] = {}
    for nd in good_nodes(lam, ctx):
        r = residue(nd, ctx)
        if r in out:
            raise DomainError(f"{format_multipartition(lam)} has two good nodes of residue {r}")
        out[r] = lam.remove(nd)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class RestrictionBlock:
    node: Node
    label: Multipartition
    indices: tuple[int, ...]  # basis indices of D(lam) ending at `node`, in the order of the basis of D(label)


def restriction_blocks(model: SimpleModuleModel) -> list[RestrictionBlock]:
    """Group the basis by the last node; each group is matched with the basis of the smaller module."""
    ctx = model.ctx
    blocks = []
    for nd in good_nodes(model.lam, ctx):
        label = model.lam.remove(nd)
        smaller = enumerate_std_e(label, ctx)
        where = {t.nodes: k for k, t in enumerate(model.basis) if t.nodes[-1] == nd}
        if len(where) != len(smaller):
            raise DomainError(f"restriction to {format_multipartition(label)} has the wrong size")
        blocks.append(RestrictionBlock(nd, label, tuple(where[s.nodes + (nd,)] for s in smaller)))
    covered = sorted(k for b in blocks for k in b.indices)
    if covered != list(range(model.dim)):
        raise DomainError("the last nodes of the basis are not all good nodes")
    return blocks


def verify_restriction(model: SimpleModuleModel) -> list[str]:
    """Compare psi_1..psi_{n-2} and the idempotents on each restriction block with the smaller module."""
    problems: list[str] = []
    blocks = restriction_blocks(model)
    owner = {k: b for b in blocks for k in b.indices}
    for b in blocks:
        if b.label.size == 0:
            continue
        sub = generator_matrices(b.label, model.ctx)
        idx = list(b.indices)
        for r in range(1, model.n - 1):
            big = model.psi[r - 1]
            if (big[idx][:, idx] != sub.psi[r - 1]).nnz:
                problems.append(f"psi_{r} differs on the block of {format_multipartition(b.label)}")
            coo = sparse.coo_array(big[:, idx])
            if any(owner[int(i)] is not b for i in coo.row):
                problems.append(f"psi_{r} leaves the block of {format_multipartition(b.label)}")
        for k, s in zip(idx, sub.residues):
            if model.residues[k][:-1] != s:
                problems.append(f"residue sequence mismatch in the block of {format_multipartition(b.label)}")
    return problems


# --- unitary branching graph ----------------------------------------------------------


def in_y(lam: Partition, e: int) -> bool:
    """e-restricted and unitary with as many beads as columns."""
    lam = Partition(lam)
    if not lam:
        return True
    if lam[0] >= e:
        return False
    return is_unitary(lam, e, lam[0])


def y_context(lam: Partition, e: int) -> ChargeContext:
    return ChargeContext(e=e, h=max(Partition(lam)[0] if lam else 1, 1))


class _YCache:
    """Memo table for branching-graph levels; concurrent fills of the same key store the same value."""

    def __init__(self) -> None:
        self._data: dict[tuple[int, int], tuple[Partition, ...]] = {}
        self._lock = threading.Lock()

    def level(self, n: int, e: int) -> tuple[Partition, ...]:
        key = (n, e)
        hit = self._data.get(key)
        if hit is None:
            hit = tuple(p for p in partitions_of(n, e - 1) if in_y(p, e))
            with self._lock:
                self._data[key] = hit
        return hit


_Y = _YCache()


def y_vertices(n: int, e: int) -> tuple[Partition, ...]:
    return _Y.level(n, e)


@dataclass(frozen=True)
class BranchingEdge:
    source: Partition  # size k
    target: Partition  # size k + 1
    node: Node
    residue: int


def y_edges_into(mu: Partition, e: int) -> list[BranchingEdge]:
    """Edges lam -> mu with lam = mu minus a good node, lam in Y."""
    mu = Partition(mu)
    if not mu:
        return []
    ctx = y_context(mu, e)
    out = []
    for nd in good_nodes(Multipartition([mu]), ctx):
        lam = Multipartition([mu]).remove(nd)[0]
        if in_y(lam, e):
            out.append(BranchingEdge(lam, mu, nd, residue(nd, ctx)))
    return out


@dataclass(frozen=True)
class UnitaryBranchingGraph:
    e: int
    vertices: tuple[tuple[Partition, ...], ...]  # by size 0..n
    edges: tuple[BranchingEdge, ...]

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "vertices": [[format_partition(p) for p in level] for level in self.vertices],
            "edges": [
                {"from": format_partition(ed.source), "to": format_partition(ed.target), "residue": ed.residue}
                for ed in self.edges
            ],
        }


def branching_graph(n: int, e: int) -> UnitaryBranchingGraph:
    levels = tuple(y_vertices(k, e) for k in range(n + 1))
    edges = tuple(ed for level in levels[1:] for mu in level for ed in y_edges_into(mu, e))
    return UnitaryBranchingGraph(e, levels, edges)


def y_paths(mu: Partition, e: int) -> list[tuple[Partition, ...]]:
    """All paths from the empty partition to mu in the branching graph."""
    mu = Partition(mu)
    if not mu:
        return [(Partition(),)]
    return [p + (mu,) for ed in y_edges_into(mu, e) for p in y_paths(ed.source, e)]


# --- Mullineux involution ---------------------------------------------------------------


def _require_y(lam: Partition, e: int) -> None:
    if not in_y(lam, e):
        raise DomainError(f"{format_partition(lam)} is not an e-restricted unitary partition for e={e}")


def mullineux(lam: Partition, e: int) -> Partition:
    """Transpose the core on the abacus, then shift the beads by the quotient and remainder of the weight."""
    lam = Partition(lam)
    _require_y(lam, e)
    if not lam:
        return Partition()
    h = lam[0]
    core, w = core_and_weight(lam, e)
    core_abacus = EAbacus.from_zabacus(abacus_from_partition(core, h), e)
    transposed = core_transpose_abacus(core_abacus)
    if w == 0:
        return transposed.to_partition()
    beads = e - h
    q, r = divmod(w, beads)
    occupied = [k for k, cols in enumerate(transposed.runners) if cols]  # bottom to top
    runners: list[tuple[int, ...]] = [() for _ in range(e)]
    for rank, k in enumerate(occupied):
        runners[k] = (q + 1,) if rank < r else (q,)
    return EAbacus(e, tuple(runners)).to_partition()


def mullineux_tableau(t: StandardTableau, e: int) -> StandardTableau:
    """Apply the involution to every prefix shape of a tableau."""
    if t.shape.level != 1:
        raise DomainError("the Mullineux map is defined at level one")
    shapes = [Multipartition([mullineux(s[0], e)]) for s in t.shapes()]
    return tableau_from_shapes(shapes)


# --- crystal operators ----------------------------------------------------------------------

SignatureOrder = Literal["left-to-right", "right-to-left"]


def _i_nodes(lam: Partition, i: int, e: int) -> list[tuple[str, Node]]:
    """Addable ('+') and removable ('-') nodes of residue i, from the leftmost column to the rightmost."""
    ctx = ChargeContext(e=e)
    m = Multipartition([lam])
    tagged = [("+", nd) for nd in boundary_nodes(m, "addable") if residue(nd, ctx) == i]
    tagged += [("-", nd) for nd in boundary_nodes(m, "removable") if residue(nd, ctx) == i]
    tagged.sort(key=lambda p: p[1].col)
    return tagged


def _reduced_signature(lam: Partition, i: int, e: int) -> list[tuple[str, Node]]:
    """Cancel every addable node standing left of a removable one (innermost pairs first)."""
    stack: list[tuple[str, Node]] = []
    for tag, nd in _i_nodes(lam, i, e):
        if tag == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((tag, nd))
    return stack  # removable nodes first, then addable nodes


def crystal_f_general(lam: Partition, i: int, e: int) -> Partition | None:
    """Add the cogood i-node: the leftmost addable node surviving the signature cancellation."""
    sig = _reduced_signature(Partition(lam), i % e, e)
    adds = [nd for tag, nd in sig if tag == "+"]
    if not adds:
        return None
    return Multipartition([Partition(lam)]).add(adds[0])[0]


def crystal_e_general(lam: Partition, i: int, e: int) -> Partition | None:
    """Remove the good i-node: the rightmost removable node surviving the signature cancellation."""
    sig = _reduced_signature(Partition(lam), i % e, e)
    rems = [nd for tag, nd in sig if tag == "-"]
    if not rems:
        return None
    return Multipartition([Partition(lam)]).remove(rems[-1])[0]


def crystal_f(lam: Partition, i: int, ctx: ChargeContext) -> Partition | None:
    """Add the leftmost addable node of residue i (the crystal operator on the fundamental alcove)."""
    lam = Partition(lam)
    if ctx.level != 1:
        raise DomainError("crystal_f is defined at level one")
    m = Multipartition([lam])
    if lam and not in_fundamental_alcove(m, ctx):
        raise DomainError(f"{format_partition(lam)} is not in the fundamental alcove")
    adds = [nd for nd in boundary_nodes(m, "addable") if residue(nd, ctx) == i % ctx.e]
    if not adds:
        return None
    return m.add(min(adds, key=lambda nd: nd.col))[0]


def is_e_restricted_partition(lam: Partition, e: int) -> bool:
    lam = Partition(lam)
    parts = list(lam) + [0]
    return all(a - b < e for a, b in zip(parts, parts[1:]))


def classical_mullineux_oracle(lam: Partition, e: int) -> Partition:
    """M(lam) = f_{-i}(M(e_i lam)), recursing on a good node, from M(empty) = empty."""
    lam = Partition(lam)
    if not is_e_restricted_partition(lam, e):
        raise DomainError(f"{format_partition(lam)} is not {e}-restricted")
    return _oracle(lam, e)


@lru_cache(maxsize=None)
def _oracle(lam: Partition, e: int) -> Partition:
    if not lam:
        return Partition()
    for i in range(e):
        smaller = crystal_e_general(lam, i, e)
        if smaller is not None:
            image = crystal_f_general(_oracle(smaller, e), -i, e)
            if image is None:
                raise DomainError(f"crystal recursion failed at {format_partition(lam)}")
            return image
    raise DomainError(f"{format_partition(lam)} has no good node")
