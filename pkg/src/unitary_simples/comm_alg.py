"""Graded free resolutions of unitary modules over a polynomial ring: c-function, Betti tables, regularity,
e-equals and (k,e)-equals arrangements, power scaling, Ringel-dual shapes and support strata."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .abacus import UnitaryAbacus, _require_unitary, core_and_weight, enumerate_po, hd_of_partition
from .partitions import DomainError, Partition, dim_specht, format_partition, partitions_of


def c_function(lam: Partition, e: int) -> Fraction:
    """n/2 - (1/e) * sum of contents."""
    lam = Partition(lam)
    content = sum(c - r for r, row in enumerate(lam, start=1) for c in range(1, row + 1))
    return Fraction(lam.size, 2) - Fraction(content, e)


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise DomainError(f"{what} = {x} is not an integer")
    return int(x)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --- resolutions -------------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionTerm:
    mu: Partition
    dim: int
    shift: int  # the bracket [shift]; generators sit in degree -shift


@dataclass(frozen=True)
class Resolution:
    """Minimal graded free resolution: level i lists the free summands in homological degree i."""

    label: Partition
    e: int
    levels: tuple[tuple[ResolutionTerm, ...], ...]

    @property
    def pdim(self) -> int:
        return len(self.levels) - 1

    def betti(self) -> "BettiTable":
        table: dict[tuple[int, int], int] = {}
        for i, terms in enumerate(self.levels):
            for t in terms:
                key = (i, -t.shift)
                table[key] = table.get(key, 0) + t.dim
        return BettiTable(self.label, self.e, table)

    def regularity(self) -> int:
        return max(max(-t.shift for t in terms) - i for i, terms in enumerate(self.levels))

    def shifts(self) -> list[list[int]]:
        return [[t.shift for t in terms] for terms in self.levels]

    def render(self) -> str:
        parts = []
        for terms in reversed(self.levels):
            parts.append(" ⊕ ".join(f"({format_partition(t.mu)})[{t.shift}]" if t.shift else f"({format_partition(t.mu)})" for t in terms))
        return "0 → " + " → ".join(parts)

    def to_json(self) -> dict:
        return {
            "label": format_partition(self.label),
            "e": self.e,
            "levels": [
                {"degree": i, "terms": [{"mu": format_partition(t.mu), "dim": t.dim, "shift": t.shift} for t in terms]}
                for i, terms in enumerate(self.levels)
            ],
        }


@dataclass(frozen=True)
class BettiTable:
    label: Partition
    e: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def column_sums(self) -> list[int]:
        top = max((i for i, _ in self.entries), default=-1)
        return [sum(b for (i, _), b in self.entries.items() if i == c) for c in range(top + 1)]

    def to_json(self) -> dict:
        return {"betti": [[i, j, b] for (i, j), b in sorted(self.entries.items()) if b]}

    def render(self) -> str:
        """Staircase layout: column i, row j - i, entry beta_{i,j}."""
        if not self.entries:
            return "total:"
        cols = max(i for i, _ in self.entries) + 1
        offsets = [j - i for i, j in self.entries]
        rows = range(min(offsets), max(offsets) + 1)
        cells = [[str(s) for s in self.column_sums()]]
        labels = ["total:"]
        for r in rows:
            labels.append(f"{r}:")
            cells.append([str(self[(i, i + r)]) if self[(i, i + r)] else "." for i in range(cols)])
        header = [str(i) for i in range(cols)]
        width = max(len(x) for row in cells + [header] for x in row)
        lw = max(len(x) for x in labels)
        lines = [" " * lw + " " + " ".join(h.rjust(width) for h in header)]
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(lw) + " " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines)


def _h(lam: Partition) -> int:
    return max(lam.columns, 1)


def resolution(lam: Partition, e: int) -> Resolution:
    """The BGG resolution read as graded free modules: mu at level hd(mu) with shift c_lam - c_mu."""
    lam = Partition(lam)
    _require_unitary(lam, e)
    h = _h(lam)
    c0 = c_function(lam, e)
    by_level: dict[int, list[ResolutionTerm]] = {}
    for mu in enumerate_po(lam, e, h):
        d = hd_of_partition(mu, e, h)
        shift = _integral(c0 - c_function(mu, e), f"c({format_partition(lam)}) - c({format_partition(mu)})")
        by_level.setdefault(d, []).append(ResolutionTerm(mu, dim_specht(mu), shift))
    top = max(by_level)
    return Resolution(lam, e, tuple(tuple(by_level.get(d, ())) for d in range(top + 1)))


def betti_table(lam: Partition, e: int) -> BettiTable:
    return resolution(lam, e).betti()


@dataclass(frozen=True)
class ResolutionSummary:
    label: Partition
    e: int
    n: int
    h: int
    k: int
    pdim: int
    depth: int
    regularity: int
    shifts: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "label": format_partition(self.label),
            "e": self.e,
            "n": self.n,
            "h": self.h,
            "k": self.k,
            "pdim": self.pdim,
            "depth": self.depth,
            "reg": self.regularity,
            "shifts": [list(s) for s in self.shifts],
        }

    def render(self) -> str:
        return f"pdim={self.pdim} depth={self.depth} reg={self.regularity}"


def extremal_member(lam: Partition, e: int) -> Partition:
    """Slide every bead to column 0, then slide the topmost bead k columns right."""
    lam = Partition(lam)
    _require_unitary(lam, e)
    u = UnitaryAbacus.from_partition(lam, e, _h(lam))
    k = sum(u.cols)
    cols = [0] * u.h
    if cols:
        cols[-1] = k
    return u.with_cols(cols).to_partition()


def resolution_summary(lam: Partition, e: int) -> ResolutionSummary:
    """pdim = (h-1)k, depth = n - pdim, reg = (c_mu0 - c_lam) - (h-1)k."""
    lam = Partition(lam)
    _require_unitary(lam, e)
    h = _h(lam)
    _, k = core_and_weight(lam, e)
    pdim = (h - 1) * k
    mu0 = extremal_member(lam, e)
    reg = _integral(c_function(mu0, e) - c_function(lam, e), "c(mu0) - c(lam)") - pdim
    shifts = tuple(tuple(s) for s in resolution(lam, e).shifts())
    return ResolutionSummary(lam, e, lam.size, h, k, pdim, lam.size - pdim, reg, shifts)


# --- arrangements -----------------------------------------------------------------------


@dataclass(frozen=True)
class ArrangementInvariants:
    e: int
    n: int
    k: int | None
    power: int
    pdim: int
    depth: int
    dimension: int
    regularity: int

    @property
    def cohen_macaulay(self) -> bool:
        return self.depth == self.dimension

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "n": self.n,
            "k": self.k,
            "power": self.power,
            "pdim": self.pdim,
            "depth": self.depth,
            "dim": self.dimension,
            "reg": self.regularity,
            "cohen_macaulay": self.cohen_macaulay,
        }

    def render(self) -> str:
        return (
            f"pdim={self.pdim} depth={self.depth} dim={self.dimension} reg={self.regularity} "
            f"cohen_macaulay={'true' if self.cohen_macaulay else 'false'}"
        )


def e_equals_reg(e: int, n: int, power: int = 1) -> int:
    p = n // e
    if n % e == 0:
        return p * (power * (n - 1) - e + 2) - 1
    return p * (power * n - e + 2) - 1


def ke_equals_reg(e: int, k: int, power: int = 1) -> int:
    n = k * e
    return _integral(Fraction(k * (power * (n + e - k - 1) - 2 * (e - 1)), 2), "(k,e)-equals regularity")


def arrangement_invariants(e: int, n: int, k: int | None = None, power: int = 1) -> ArrangementInvariants:
    """Closed forms for the coordinate ring of the e-equals (or (k,e)-equals) arrangement and its power variant."""
    if e < 2 or n < e:
        raise DomainError(f"need 2 <= e <= n, got e={e}, n={n}")
    if power < 1:
        raise DomainError(f"power must be positive, got {power}")
    if k is None:
        pdim = (e - 2) * (n // e) + 1
        return ArrangementInvariants(e, n, None, power, pdim, n - pdim, n - e + 1, e_equals_reg(e, n, power))
    if k * e != n:
        raise DomainError(f"the (k,e)-equals arrangement needs n = ke, got k={k}, e={e}, n={n}")
    pdim = (e - 1) * k
    return ArrangementInvariants(e, n, k, power, pdim, n - pdim, k, ke_equals_reg(e, k, power))


def socle_label(e: int, n: int) -> Partition:
    """((e-1)^p, q) with n = (e-1)p + q, 0 <= q < e-1."""
    if e < 2:
        raise DomainError("e must be at least 2")
    p, q = divmod(n, e - 1)
    return Partition([e - 1] * p + ([q] if q else []))


def arrangement_resolution(e: int, n: int, power: int = 1) -> Resolution:
    """C[x] in degree 0 followed by the resolution of the socle module, shifted to start from c_triv."""
    lam = socle_label(e, n)
    triv = Partition([n])
    inner = resolution(lam, e)
    base = _integral(c_function(triv, e) - c_function(lam, e), "c_triv - c_lam")
    levels = [(ResolutionTerm(triv, 1, 0),)]
    levels += [tuple(replace(t, shift=t.shift + base) for t in terms) for terms in inner.levels]
    return power_scale(Resolution(triv, e, tuple(levels)), power)


def arrangement_from_resolution(e: int, n: int, power: int = 1) -> tuple[int, int]:
    """(pdim, reg) of the e-equals coordinate ring read off the resolution."""
    res = arrangement_resolution(e, n, power)
    return res.pdim, res.regularity()


def power_scale(res: Resolution, power: int) -> Resolution:
    """Multiply every grading shift by the given positive integer."""
    if power < 1:
        raise DomainError(f"power must be positive, got {power}")
    return replace(res, levels=tuple(tuple(replace(t, shift=t.shift * power) for t in terms) for terms in res.levels))


def ringel_dual_resolution(e: int, k: int) -> Resolution:
    """Resolution of the trivial module at n = ke: transposed labels of Po((e^k)), arrows reversed."""
    if k < 0:
        raise DomainError("k must be non-negative")
    n = k * e
    triv = Partition([n] if n else [])
    if k == 0:
        return Resolution(triv, e, ((ResolutionTerm(triv, 1, 0),),))
    lam = Partition([e] * k)
    top = (e - 1) * k
    ct = c_function(triv, e)
    by_level: dict[int, list[ResolutionTerm]] = {}
    for mu in enumerate_po(lam, e, e):
        d = top - hd_of_partition(mu, e, e)
        nu = mu.conjugate()
        shift = _integral(ct - c_function(nu, e), "c_triv - c_mu")
        by_level.setdefault(d, []).append(ResolutionTerm(nu, dim_specht(nu), shift))
    levels = []
    for d in range(top + 1):
        terms = sorted(by_level.get(d, []), key=lambda t: tuple(-x for x in t.mu))
        levels.append(tuple(terms))
    return Resolution(triv, e, tuple(levels))


# --- supports ---------------------------------------------------------------------------------


def support_stratum(lam: Partition, e: int) -> int:
    """|mu| in lam = e*mu + nu with nu e-restricted, read from the gaps between consecutive parts."""
    lam = Partition(lam)
    parts = list(lam) + [0]
    return sum(i * ((a - b) // e) for i, (a, b) in enumerate(zip(parts, parts[1:]), start=1))


def support_decomposition(lam: Partition, e: int) -> tuple[Partition, Partition]:
    """Exhaustive search for the unique (mu, nu) with lam = e*mu + nu partwise and nu e-restricted."""
    lam = Partition(lam)
    found = []
    for m in range(lam.size // e + 1):
        for mu in partitions_of(m):
            if len(mu) > len(lam):
                continue
            rest = [a - e * (mu[i] if i < len(mu) else 0) for i, a in enumerate(lam)]
            if any(v < 0 for v in rest) or any(a < b for a, b in zip(rest, rest[1:])):
                continue
            tail = rest + [0]
            if all(a - b < e for a, b in zip(tail, tail[1:])):
                found.append((Partition(mu), Partition([v for v in rest if v])))
    if len(found) != 1:
        raise DomainError(f"expected a unique decomposition of {format_partition(lam)}, found {len(found)}")
    return found[0]


def c_shift_increasing(lam: Partition, e: int) -> bool:
    """c strictly increases along every covering edge of the orbit."""
    from .abacus import covering_transpositions

    lam = Partition(lam)
    h = _h(lam)
    for mu in enumerate_po(lam, e, h):
        for nu, _ in covering_transpositions(mu, e, h):
            if not c_function(nu, e) < c_function(mu, e):
                return False
    return True


def level_dims(res: Resolution) -> list[int]:
    return [sum(t.dim for t in terms) for terms in res.levels]


def terms_by_level(res: Resolution) -> list[list[tuple[str, int]]]:
    return [[(format_partition(t.mu), t.shift) for t in terms] for terms in res.levels]

