"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (inputs outside a family's
range), 2 on usage errors, 3 when an internal cancellation check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import howe_side
from .branching_classical import littlewood_restrict, newell_littlewood
from .littlewood_characters import (
    CASE_ALIASES,
    CaseConfig,
    coord_ring_character,
    module_character,
    poly_det_module_character,
)
from .modification_rules import mod_a, mod_c, mod_d, mod_spin
from .partition_core import CancellationError, DomainError, format_weight, lr_coefficient, lr_product, parse_partition, parse_weight, transpose
from .resolution_engine import (
    a_betti_table,
    b_betti_table,
    b_module_index,
    rep_list_text,
    support_variety,
    sym0_complex_reps,
    sym_complex_terms,
    terms_json,
)
from .weyl_geometry import bott_gl, bott_type_bd, bott_type_c

EXAMPLES = {
    "lr": 'lr "2,1" "1" "3,1"',
    "transpose": 'transpose "5,3,2"',
    "modrule": 'modrule --type C --k 1 "6,5,5,3,2,1,1"',
    "bott": 'bott --type c --weight "-2,1"',
    "branch": 'branch --type sp --rank 2 "2,1"',
    "nl": 'nl --type o --rank 5 "1" "1"',
    "character": 'character M --case sympl --n 2 --dimV 6 --k 1 --nu "1" --max-deg 8',
    "ncharacter": 'ncharacter --case sympl --n 4 --dimV 8 --lambda "" --k 1 --max-deg 4',
    "resolve": 'resolve --case sympl --ring A --n 4 --dimV 8 --k 1 --nu "" --max-i 7 --format table',
    "symcomplex": "symcomplex --n 2 --d 1 --k 2",
    "support": "support --case orth --n 3 --dimV 7 --k 1",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _case_config(args) -> CaseConfig:
    """Build a CaseConfig from --case/--n/--dimV/... and check dim V against the family."""
    case = CASE_ALIASES.get(args.case)
    if case is None:
        raise UsageError(f"--case: unknown case {args.case!r} (use sympl, orth or complexes)")
    n, dimV, k = args.n, args.dimV, args.k
    nu = parse_partition(args.nu)
    if case == "symplectic":
        if args.dprime:
            raise DomainError("--dprime: the symplectic family has even dim V (dprime = 0)")
        if dimV % 2 or dimV < 2 * n:
            raise DomainError(f"--dimV {dimV}: the symplectic family needs dim V = 2n + 2d with d >= 0 (n = {n})")
        return CaseConfig(case, n=n, d=(dimV - 2 * n) // 2, k=k, nu=nu)
    if case == "orthogonal":
        dprime = dimV % 2
        if args.dprime is not None and args.dprime != dprime:
            raise DomainError(f"--dprime {args.dprime}: dim V = {dimV} forces dprime = {dprime}")
        if dimV < 2 * n:
            raise DomainError(f"--dimV {dimV}: the orthogonal family needs dim V = 2n + 2d + dprime with d >= 0 (n = {n})")
        return CaseConfig(case, n=n, d=(dimV - 2 * n) // 2, k=k, nu=nu, dprime=dprime)
    m = args.m or 0
    if dimV < n + m:
        raise DomainError(f"--dimV {dimV}: the complexes family needs dim V = n + m + d with d >= 0 (n = {n}, m = {m})")
    return CaseConfig(case, n=n, m=m, d=dimV - n - m, k=k, l=args.l or 0, nu=nu,
                      nuprime=parse_partition(args.nuprime or ""), a=args.a)


def _add_case_flags(p, with_nu=True):
    p.add_argument("--case", required=True, help="sympl, orth or complexes")
    p.add_argument("--n", type=int, required=True, help="dim E")
    p.add_argument("--dimV", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, help="dim F (complexes)")
    p.add_argument("--l", type=int, help="second twist (complexes)")
    p.add_argument("--dprime", type=int, help="parity of dim V (orth); checked against --dimV")
    p.add_argument("--a", type=int, help="split dim V = a + b (complexes)")
    if with_nu:
        p.add_argument("--nu", default="")
        p.add_argument("--nuprime", default="")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="littlewood-res", description="Equivariant resolutions over Littlewood varieties.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient or product")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?")

    p = sub.add_parser("transpose", help="conjugate partition")
    p.add_argument("lam")

    p = sub.add_parser("modrule", help="border-strip modification rule")
    p.add_argument("--type", required=True, choices=["C", "D", "spin", "A"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("lam")
    p.add_argument("lam2", nargs="?", default="")

    p = sub.add_parser("bott", help="Borel-Weil-Bott for one weight")
    p.add_argument("--type", required=True, choices=["gl", "c", "b", "d"])
    p.add_argument("--weight", required=True)
    p.add_argument("--rank", type=int, help="pad the weight with zeros to this length")

    for name, helptext in (("branch", "restrict S_beta to Sp or O"), ("nl", "Newell-Littlewood product")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--type", required=True, choices=["sp", "o"])
        p.add_argument("--rank", type=int, required=True, help="Sp(2*rank) or O(rank)")
        p.add_argument("mu")
        if name == "nl":
            p.add_argument("nu")

    p = sub.add_parser("character", help="graded character of B, M or the polynomial-ring module")
    p.add_argument("which", choices=["B", "M", "polyM"])
    _add_case_flags(p)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--figure", metavar="PATH", help="save a Hilbert-function plot")

    p = sub.add_parser("ncharacter", help="graded character of the Howe-dual module")
    _add_case_flags(p, with_nu=False)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--lambda2", dest="lam2", default="", help="second index (complexes)")
    p.add_argument("--max-deg", type=int, required=True)

    p = sub.add_parser("resolve", help="terms of the minimal free resolution over A or B")
    _add_case_flags(p)
    p.add_argument("--ring", required=True, choices=["A", "B"])
    p.add_argument("--max-i", type=int)
    p.add_argument("--format", choices=["table", "json", "reps"], default="table")
    p.add_argument("--figure", metavar="PATH", help="save a Betti-table heatmap")

    p = sub.add_parser("symcomplex", help="terms of Sym^k of the complex E -> V -> E*")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--traceless", action="store_true", help="list representations of the trace-free part")

    p = sub.add_parser("support", help="support variety over the quadric ring")
    _add_case_flags(p)
    return parser


def _print_repsum(reps, out) -> None:
    for key, c in reps.items():
        out.write(f"{c} {' x '.join(map(str, key))}\n")


def _cmd_lr(args, out):
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if args.nu is not None:
        out.write(f"{lr_coefficient(lam, mu, parse_partition(args.nu))}\n")
        return
    for nu, c in sorted(lr_product(lam, mu).items()):
        out.write(f"{c} {format_weight(nu)}\n")


def _cmd_modrule(args, out):
    lam = parse_partition(args.lam)
    if args.type == "A":
        res = mod_a(lam, parse_partition(args.lam2), args.k)
    else:
        res = {"C": mod_c, "D": mod_d, "spin": mod_spin}[args.type](lam, args.k)
    for s, step in enumerate(res.trace, 1):
        # the GL rule removes a strip from each partition per step
        for part in step if isinstance(step, tuple) else (step,):
            out.write(f"strip {s}: from {format_weight(part.before)} length={part.length} columns={part.columns}\n")
    if not res.defined:
        out.write("undefined: the next border strip does not leave a partition\n")
        return
    tau = res.tau
    text = ";".join(format_weight(t) for t in tau) if args.type == "A" else format_weight(tau)
    out.write(f"tau = {text}\niota = {res.iota}\n")


def _cmd_bott(args, out):
    w = parse_weight(args.weight)
    if args.rank is not None:
        if args.rank < len(w):
            raise DomainError(f"--rank {args.rank} is shorter than the weight")
        w = w + (0,) * (args.rank - len(w))
    res = {"gl": bott_gl, "c": bott_type_c, "b": lambda v: bott_type_bd(v, 1),
           "d": lambda v: bott_type_bd(v, 0)}[args.type](w)
    if res.vanishes:
        out.write("vanishes\n")
    else:
        out.write(f"degree {res.degree}: {res.dominant}\n")


def _cmd_branch(args, out):
    _print_repsum(littlewood_restrict(args.type, parse_partition(args.mu), args.rank), out)


def _cmd_nl(args, out):
    _print_repsum(newell_littlewood(args.type, parse_partition(args.mu), parse_partition(args.nu), args.rank), out)


def _cmd_character(args, out):
    if args.which == "polyM":
        # here --dimV is the dimension of the second factor F of the polynomial ring
        ch = poly_det_module_character(args.n, args.dimV, args.k, parse_partition(args.nu), args.max_deg)
        name = "polyM"
    else:
        cfg = _case_config(args)
        ch = (coord_ring_character if args.which == "B" else module_character)(cfg, args.max_deg)
        name = args.which
    dims = ch.dims()
    if args.format == "json":
        pieces = [{"degree": j, "dim": dims[j], "labels": [
            {"labels": [list(lab.weight) for lab in key], "mult": c} for key, c in ch.piece(j).items()]}
            for j in range(args.max_deg + 1) if dims[j]]
        out.write(json.dumps({"which": name, "max_deg": args.max_deg, "pieces": pieces}) + "\n")
    else:
        for j, v in enumerate(dims):
            if v:
                out.write(f"{j}: {v}\n")
    if args.figure:
        from .report import hilbert_plot

        hilbert_plot({name: dims}, args.figure, title=f"Hilbert function of {name}")


def _cmd_ncharacter(args, out):
    args.nu, args.nuprime = "", ""
    cfg = _case_config(args)
    ch = howe_side.n_module_character(cfg, parse_partition(args.lam), args.max_deg, parse_partition(args.lam2))
    for i in range(args.max_deg + 1):
        out.write(f"{i}: {rep_list_text(cfg, ch.piece(i))}\n")


def _cmd_resolve(args, out):
    cfg = _case_config(args)
    if args.ring == "A":
        table = a_betti_table(cfg, args.max_i)
    else:
        if args.max_i is None:
            raise UsageError("--max-i is required for --ring B (the resolution is infinite)")
        lam, lam2 = b_module_index(cfg)
        if cfg.case != "complexes" and lam and lam[0] > cfg.d:
            raise DomainError(f"--nu: the resolution over B is linear only when nu has at most d = {cfg.d} parts")
        howe_side.check_admissible(cfg, lam, lam2)
        table = b_betti_table(cfg, args.max_i)
    if args.format == "table":
        out.write(table.render())
    elif args.format == "json":
        out.write(json.dumps(terms_json(cfg, args.ring, table)) + "\n")
    else:
        for i in table.columns():
            for (hom, deg), reps in sorted(table.decorations.items()):
                if hom == i:
                    out.write(f"F_{i} (degree {deg}) = {rep_list_text(cfg, reps)}\n")
    if table.clipped:
        sys.stderr.write(f"note: terms beyond --max-i {args.max_i} were omitted\n")
    if args.figure:
        from .report import betti_heatmap

        betti_heatmap(table, args.figure, title=f"{cfg.case}, ring {args.ring}, {cfg.params()}")


def _cmd_symcomplex(args, out):
    if args.traceless:
        for t, reps in sorted(sym0_complex_reps(args.n, args.d, args.k).items()):
            out.write(f"{t}: ")
            out.write(" + ".join(f"{c}*" * (c != 1) + " x ".join(map(str, key)) for key, c in reps.items()) or "0")
            out.write("\n")
        return
    terms = sym_complex_terms(args.n, args.d, args.k)
    out.write("0 → " + " → ".join(t.text() for t in reversed(terms)) + "\n")


def _cmd_support(args, out):
    sv = support_variety(_case_config(args))
    out.write(f"{sv.text()}\n")


COMMANDS = {
    "lr": _cmd_lr,
    "transpose": lambda a, out: out.write(format_weight(transpose(parse_partition(a.lam))) + "\n"),
    "modrule": _cmd_modrule,
    "bott": _cmd_bott,
    "branch": _cmd_branch,
    "nl": _cmd_nl,
    "character": _cmd_character,
    "ncharacter": _cmd_ncharacter,
    "resolve": _cmd_resolve,
    "symcomplex": _cmd_symcomplex,
    "support": _cmd_support,
}


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse would read "--weight -2,1" as two options
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--weight" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--weight={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    argv = _attach_negative_values(list(argv))
    command = argv[0] if argv else None
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        example = EXAMPLES.get(command)
        err.write(f"example: littlewood-res {example}\n" if example else
                  "subcommands: " + ", ".join(COMMANDS) + "\n")
        return 2
    except CancellationError as exc:
        err.write(f"internal check failed: {exc}\n")
        err.write(json.dumps({str(k): v for k, v in (exc.virtual or {}).items()}, default=str) + "\n")
        return 3
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
