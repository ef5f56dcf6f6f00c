"""Command-line front end: every query renders as stable text or canonical JSON."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import abacus, alcove, bgg, comm_alg, simple_modules, tableaux
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    ParseError,
    Partition,
    format_multipartition,
    format_partition,
    parse_multipartition,
    parse_partition,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def dump_json(obj: object) -> str:
    """Canonical JSON: sorted keys, no whitespace, UTF-8 text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _charge(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse charge {text!r}; expected comma-separated integers") from None


def _literal(args: argparse.Namespace) -> Multipartition:
    if args.level == 1:
        return Multipartition([parse_partition(args.literal)])
    return parse_multipartition(args.literal, args.level)


def _partition(args: argparse.Namespace) -> Partition:
    if args.level != 1:
        raise DomainError(f"{args.command} is defined for partitions (level 1)")
    return parse_partition(args.literal)


def _context(args: argparse.Namespace, lam: Multipartition | None = None) -> ChargeContext:
    charge = _charge(args.charge)
    if args.level >= 2 and charge is None:
        raise ParseError("multipartition commands require --charge with one entry per component")
    if charge is None:
        charge = (0,)
    if len(charge) != args.level:
        raise ParseError(f"charge has {len(charge)} entries but --level is {args.level}")
    h = args.h
    if h is None:
        h = max([1] + [c.columns for c in lam]) if lam is not None else 1
    return ChargeContext(e=args.e, level=args.level, charge=charge, h=h)


def _require_e(args: argparse.Namespace) -> int:
    if args.e is None:
        raise ParseError(f"{args.command} requires --e")
    return args.e


# --- subcommands -----------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    if args.level == 1:
        lam = _partition(args)
        h = args.h if args.h is not None else lam.columns
        core, k = abacus.core_and_weight(lam, e)
        ok = abacus.is_unitary(lam, e, h)
        data = {"lambda": format_partition(lam), "e": e, "h": h, "k": k, "core": format_partition(core), "unitary": ok}
        text = f"unitary: {'true' if ok else 'false'} (h={h}, k={k}, core={format_partition(core)})"
        return data, text
    lam = _literal(args)
    ctx = _context(args, lam)
    length = alcove.alcove_length(lam, ctx)
    data = {"lambda": format_multipartition(lam), "e": e, "h": ctx.h, "length": length, "fundamental": length == 0}
    return data, f"fundamental: {'true' if length == 0 else 'false'} (h={ctx.h}, length={length})"


def cmd_core(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    core, k = abacus.core_and_weight(lam, e)
    h = args.h if args.h is not None else lam.columns
    ea = abacus.EAbacus.from_zabacus(abacus.abacus_from_partition(lam, h), e)
    data = {"lambda": format_partition(lam), "e": e, "core": format_partition(core), "weight": k, "abacus": ea.to_json()}
    return data, f"core={format_partition(core)} weight={k}\n{ea.render()}"


def cmd_po(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    h = args.h if args.h is not None else max(lam.columns, 1)
    members = []
    for mu in abacus.enumerate_po(lam, e, h):
        members.append({"mu": format_partition(mu), "hd": abacus.hd_of_partition(mu, e, h), "tau": list(abacus.tau_from_partition(mu, e, h))})
    text = "\n".join(f"{m['hd']}\t{m['mu']}" for m in members)
    return {"lambda": format_partition(lam), "e": e, "h": h, "members": members}, text


def cmd_hd(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    mu = _partition(args)
    h = args.h if args.h is not None else max(mu.columns, 1)
    value = abacus.hd_of_partition(mu, e, h)
    return {"mu": format_partition(mu), "e": e, "h": h, "hd": value}, str(value)


def cmd_length(args: argparse.Namespace) -> tuple[object, str]:
    _require_e(args)
    lam = _literal(args)
    ctx = _context(args, lam)
    value = alcove.alcove_length(lam, ctx)
    return {"lambda": format_multipartition(lam), "e": ctx.e, "h": ctx.h, "length": value}, str(value)


def cmd_tableaux(args: argparse.Namespace) -> tuple[object, str]:
    _require_e(args)
    lam = _literal(args)
    ctx = _context(args, lam)
    ts = tableaux.enumerate_std_e(lam, ctx)
    data = {"lambda": format_multipartition(lam), "count": len(ts), "tableaux": [t.to_json() for t in ts]}
    return data, "\n".join([t.render() for t in ts] + [f"count={len(ts)}"])


def cmd_simple(args: argparse.Namespace) -> tuple[object, str]:
    _require_e(args)
    lam = _literal(args)
    ctx = _context(args, lam)
    model = simple_modules.generator_matrices(lam, ctx)
    lines = [f"dim={model.dim} weight_spaces={len(model.idempotents)}"]
    for r, m in enumerate(model.psi, start=1):
        lines.append(f"psi_{r}: {m.nnz} nonzero")
    return model.to_json(), "\n".join(lines)


def cmd_branch(args: argparse.Namespace) -> tuple[object, str]:
    _require_e(args)
    lam = _literal(args)
    ctx = _context(args, lam)
    dec = simple_modules.restriction_decomposition(lam, ctx)
    summands = [
        {"residue": r, "label": format_multipartition(mu), "dim": tableaux.count_std_e(mu, ctx)} for r, mu in dec.items()
    ]
    text = "\n".join(f"{s['residue']}: {s['label']} (dim {s['dim']})" for s in summands)
    return {"lambda": format_multipartition(lam), "summands": summands}, text


def cmd_complex(args: argparse.Namespace) -> tuple[object, str]:
    _require_e(args)
    lam = _literal(args)
    ctx = _context(args, lam)
    cx = bgg.build_complex(lam, ctx)
    lines = []
    for d in sorted(cx.levels):
        lines.append(f"{d}: " + " ⊕ ".join(f"{format_multipartition(t.mu)} ({t.dim})" for t in cx.levels[d]))
    for ed in cx.edges:
        sign = "+" if ed.sign > 0 else "-"
        lines.append(f"{sign} {format_multipartition(ed.source)} -> {format_multipartition(ed.target)}")
    return cx.to_json(), "\n".join(lines)


def cmd_betti(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    table = comm_alg.betti_table(lam, e)
    if args.power != 1:
        table = comm_alg.power_scale(comm_alg.resolution(lam, e), args.power).betti()
    data = dict(table.to_json(), **{"lambda": format_partition(lam), "e": e})
    return data, table.render()


def cmd_summary(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    s = comm_alg.resolution_summary(lam, e)
    data = dict(s.to_json(), c=comm_alg.format_fraction(comm_alg.c_function(lam, e)))
    return data, s.render()


def cmd_arrangement(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    if args.n is None:
        raise ParseError("arrangement requires --n")
    inv = comm_alg.arrangement_invariants(e, args.n, args.k, args.power)
    return inv.to_json(), inv.render()


def cmd_mullineux(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    image = simple_modules.mullineux(lam, e)
    return {"lambda": format_partition(lam), "e": e, "image": format_partition(image)}, format_partition(image)


def cmd_support(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    lam = _partition(args)
    stratum = comm_alg.support_stratum(lam, e)
    mu, nu = comm_alg.support_decomposition(lam, e)
    data = {"lambda": format_partition(lam), "e": e, "stratum": stratum, "mu": format_partition(mu), "nu": format_partition(nu)}
    return data, f"stratum={stratum} (mu={format_partition(mu)}, nu={format_partition(nu)})"


def cmd_ringel(args: argparse.Namespace) -> tuple[object, str]:
    e = _require_e(args)
    if args.k is None:
        raise ParseError("ringel requires --k")
    res = comm_alg.power_scale(comm_alg.ringel_dual_resolution(e, args.k), args.power)
    data = dict(res.to_json(), reg=res.regularity(), pdim=res.pdim)
    return data, f"{res.render()}\npdim={res.pdim} reg={res.regularity()}"


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], tuple[object, str]], bool, str]] = {
    "check": (cmd_check, True, "is the label unitary / in the fundamental alcove"),
    "core": (cmd_core, True, "e-core, e-weight and e-abacus"),
    "po": (cmd_po, True, "the orbit Po_e with homological degrees and tau words"),
    "hd": (cmd_hd, True, "homological degree of an orbit member"),
    "length": (cmd_length, True, "alcove length"),
    "tableaux": (cmd_tableaux, True, "e-restricted standard tableaux"),
    "simple": (cmd_simple, True, "basis and generator matrices of the simple module"),
    "branch": (cmd_branch, True, "restriction to one size smaller"),
    "complex": (cmd_complex, True, "signed BGG complex"),
    "betti": (cmd_betti, True, "graded Betti table"),
    "summary": (cmd_summary, True, "projective dimension, depth and regularity"),
    "arrangement": (cmd_arrangement, False, "invariants of the e-equals or (k,e)-equals arrangement"),
    "mullineux": (cmd_mullineux, True, "Mullineux image of an e-restricted unitary partition"),
    "support": (cmd_support, True, "support stratum |mu| of lambda = e*mu + nu"),
    "ringel": (cmd_ringel, False, "Ringel-dual resolution of the trivial module at n = ke"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unitary-simples", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, takes_literal, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        if takes_literal:
            p.add_argument("literal", help='partition such as "3^4,1" or multipartition such as "1^3|1^3|1^2"')
        p.add_argument("--e", type=int, help="quantum characteristic")
        p.add_argument("--level", type=int, default=1, help="number of components")
        p.add_argument("--charge", help="multicharge, comma separated (required when level > 1)")
        p.add_argument("--h", type=int, help="column bound (default: columns of the label)")
        p.add_argument("--power", type=int, default=1, help="scale grading shifts by this power")
        p.add_argument("--n", type=int, help="size (arrangement)")
        p.add_argument("--k", type=int, help="number of clusters (arrangement, ringel)")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Exit status, standard output and standard error of one invocation."""
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        return EXIT_PARSE, "", f"error: {exc}\n"
    handler = COMMANDS[args.command][0]
    try:
        data, text = handler(args)
    except ParseError as exc:
        return EXIT_PARSE, "", f"error: {exc}\n"
    except DomainError as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"
    except bgg.SignInconsistencyError as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"
    out = dump_json(data) if args.format == "json" else text
    return EXIT_OK, out + "\n", ""


def main(argv: Sequence[str] | None = None) -> int:
    status, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status
