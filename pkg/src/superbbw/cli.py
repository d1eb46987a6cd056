"""``superbbw`` command line.

Exit codes: 0 success, 2 domain error (e.g. non-generic weight), 64 malformed
input, 65 unsupported type or rank, 70 internal consistency failure.
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import coh_engine as ce
from .char_ring import Character
from .errors import SuperBBWError, UnsupportedTypeError
from .regions import (all_omega_reports, generic_report, in_omega_w, omega_w_inequalities,
                      very_dominant_report)
from .root_data import (Kind, RootDatum, SuperType, build_root_datum, parse_kind, parse_word,
                        reduced_word)
from .super_comb import exterior_weights, poincare_polynomial
from .svg import render_generic_region

EX_DOMAIN = 2
EX_DATAERR = 64
EX_UNSUPPORTED = 65
EX_SOFTWARE = 70

GL_NOTE = "note: GL(n|n) outputs are convention-dependent"


class MalformedInput(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    type: str
    rank: int
    output: str
    box: int
    edge_case_flags: bool


def parse_weight(text: str, d: RootDatum) -> tuple[int, ...]:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
    except ValueError:
        raise MalformedInput(f"malformed weight {text!r}: expected comma-separated integers")
    if len(parts) != d.dim:
        raise MalformedInput(f"weight {text!r} has {len(parts)} entries; {d.super_type} needs {d.dim}")
    return tuple(parts)


_SCALAR_LIST = re.compile(r"\[\s*((?:-?\d+,\s*)*-?\d+)\s*\]")


def _dump(obj) -> str:
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    # keep weights like [1, -2] on one line
    return _SCALAR_LIST.sub(lambda m: "[" + ", ".join(re.split(r",\s*", m.group(1))) + "]",
                            text) + "\n"


def _char_text(ch: Character) -> str:
    return f"{ch}   [dim {ch.dim}]"


def _need_weight(args, d):
    if args.weight is None:
        raise MalformedInput("--weight is required for this command")
    return parse_weight(args.weight, d)


def _word(args, d):
    try:
        return parse_word(d, args.w)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


# --- commands ------------------------------------------------------------------

def cmd_datum(args, d, cfg):
    ext = exterior_weights(d)
    if cfg.output == "json":
        return _dump({
            "type": d.kind.value, "rank": d.rank,
            "even_simple": [list(a) for a in d.even_simple],
            "even_positive": [list(a) for a in d.even_positive],
            "odd_positive": [list(a) for a in d.odd_positive],
            "rho": list(d.rho),
            "exterior_sizes": [sum(layer.values()) for layer in ext.by_degree],
        })
    out = [f"{d.super_type}",
           "simple roots: " + "; ".join(str(list(a)) for a in d.even_simple),
           f"even positive roots: {len(d.even_positive)}",
           "odd roots of g1/b1: " + "; ".join(str(list(a)) for a in d.odd_positive),
           f"rho: {list(d.rho)}",
           "exterior degrees: " + ", ".join(str(sum(layer.values())) for layer in ext.by_degree)]
    return "\n".join(out) + "\n"


def cmd_region(args, d, cfg):
    if args.very_dominant:
        rep = very_dominant_report(d)
        return _dump(rep.to_json()) if cfg.output == "json" else rep.inequalities() + "\n"
    if args.w is not None:
        w = _word(args, d)
        if args.weight is not None and not args.inequalities:
            lam = parse_weight(args.weight, d)
            member = in_omega_w(d, lam, w)
            if cfg.output == "json":
                return _dump({"lambda": list(lam), "w": w.one_line(), "member": member})
            return ("true" if member else "false") + "\n"
        rep = omega_w_inequalities(d, w)
        return _dump(rep.to_json()) if cfg.output == "json" else rep.inequalities() + "\n"
    if args.weight is not None:
        lam = parse_weight(args.weight, d)
        rep = generic_report(d, lam)
        if cfg.output == "json":
            return _dump(rep.to_json())
        if not rep.witnesses:
            return f"{list(lam)} is not generic\n"
        return "".join(f"generic: w = {reduced_word(d, w)}, lambda = {list(l0)}\n"
                       for w, l0 in rep.witnesses)
    reports = all_omega_reports(d)
    if cfg.output == "json":
        return _dump([r.to_json() for r in reports])
    return "".join(f"Omega({r.word}): {r.inequalities()}\n" for r in reports)


def _profile_text(p: ce.CohomologyProfile) -> str:
    lines = [f"lambda = {list(p.weight)}  provenance: {p.provenance}"]
    if p.witness is not None:
        w, lam = p.witness
        lines.append(f"witness: w = {w.one_line()}, lambda0 = {list(lam)}")
    for n, ch in sorted(p.degrees.items()):
        lines.append(f"H^{n}: {_char_text(ch)}")
    if p.euler is not None:
        lines.append(f"Euler character: {_char_text(p.euler)}")
    if p.convention_dependent:
        lines.append(GL_NOTE)
    return "\n".join(lines) + "\n"


def cmd_character(args, d, cfg):
    lam = _need_weight(args, d)
    profile = ce.generic_cohomology(d, lam)
    return _dump(profile.to_json()) if cfg.output == "json" else _profile_text(profile)


def cmd_euler(args, d, cfg):
    lam = _need_weight(args, d)
    ch = ce.euler_character(d, lam)
    if cfg.output == "json":
        return _dump(ch.to_json())
    return _char_text(ch) + ("\n" + GL_NOTE if d.kind is Kind.GLNN else "") + "\n"


def cmd_poincare(args, d, cfg):
    p = poincare_polynomial(d)
    return _dump(p.to_json()) if cfg.output == "json" else f"{p}\n"


def cmd_q2(args, d, cfg):
    sigma = _need_weight(args, d)
    simple = ce.q2_simple_character(d, sigma)
    analysis = ce.q2_h0_analysis(d, sigma)
    h1 = ce.q2_h1_character(d, sigma)
    if cfg.output == "json":
        data = analysis.to_json()
        data["simple"] = simple.to_json()
        data["h1"] = h1.to_json()
        if not cfg.edge_case_flags:
            data["flags"] = []
        return _dump(data)
    lines = [f"sigma = {list(sigma)}",
             f"ch L(sigma): {_char_text(simple)}",
             f"ch H^0(sigma): {_char_text(analysis.h0)}",
             "composition factors: " + ", ".join(f"L{list(f)}" for f in analysis.factors),
             f"length: {analysis.length}",
             f"socle: L{list(analysis.socle)}",
             f"ch H^1(sigma): {_char_text(h1)}"]
    if cfg.edge_case_flags:
        lines += [f"flag: {f}" for f in analysis.flags]
    return "\n".join(lines) + "\n"


def cmd_socle(args, d, cfg):
    rep = ce.h1_socle_report(d, _need_weight(args, d))
    if cfg.output == "json":
        return _dump(rep.to_json())
    hw = "" if rep.highest_weight is None else f" L{list(rep.highest_weight)}"
    out = f"{rep.statement}{hw}: {rep.justification}\n"
    return out + (f"note: {rep.note}\n" if rep.note else "")


def cmd_classify(args, d, cfg):
    data = ce.classify_weight(d, _need_weight(args, d))
    if cfg.output == "json":
        return _dump(data)
    mark = {True: "yes", False: "no"}
    lines = [f"lambda = {data['lambda']}",
             f"X_F: {mark[data['in_X_F']]}",
             f"X_F,+: {mark[data['in_X_F_plus']]}",
             f"X_++: {mark[data['very_dominant']]}",
             f"Omega: {mark[data['generic']]}"]
    lines += [f"  witness w = {x['word']}, lambda = {x['lambda']}" for x in data["witnesses"]]
    return "\n".join(lines) + "\n"


def _scan_one(payload):
    kind, rank, lam = payload
    d = build_root_datum(SuperType(Kind(kind), rank))
    p = ce.cohomology(d, lam)
    if p.provenance == ce.EULER_ONLY:
        return {"lambda": list(lam), "provenance": p.provenance, "euler_dim": p.euler.dim}
    return {"lambda": list(lam), "provenance": p.provenance,
            "dims": {str(n): ch.dim for n, ch in sorted(p.degrees.items())}}


def _threads() -> int:
    raw = os.environ.get("SUPERBBW_THREADS")
    if not raw:
        return 1
    try:
        return max(1, min(int(raw), os.cpu_count() or 1))
    except ValueError:
        return 1


def cmd_scan(args, d, cfg):
    box = cfg.box
    points = [(d.kind.value, d.rank, lam)
              for lam in itertools.product(range(-box, box + 1), repeat=d.dim)]
    threads = _threads()
    if threads > 1 and len(points) > 64:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_scan_one, points, chunksize=64))
    else:
        rows = [_scan_one(p) for p in points]
    if cfg.output == "json":
        return _dump(rows)
    out = []
    for r in rows:
        if "dims" in r:
            dims = ", ".join(f"H^{n}:{v}" for n, v in r["dims"].items())
            out.append(f"{r['lambda']}\t{r['provenance']}\t{dims}")
        else:
            out.append(f"{r['lambda']}\t{r['provenance']}\teuler dim {r['euler_dim']}")
    return "\n".join(out) + "\n"


def cmd_svg(args, d, cfg):
    return render_generic_region(d, box=cfg.box, hexagonal=args.hex)


COMMANDS = {
    "datum": (cmd_datum, "root datum, rho and exterior degree sizes"),
    "region": (cmd_region, "Omega(w) inequalities, membership, X_++ bounds, generic witnesses"),
    "character": (cmd_character, "per-degree G_0-character of a generic weight"),
    "euler": (cmd_euler, "Euler character of H^*(lambda)"),
    "poincare": (cmd_poincare, "Poincare polynomial p_{G,B}(t)"),
    "q2": (cmd_q2, "Q(2) simple and induced characters, composition factors, H^1"),
    "socle": (cmd_socle, "socle report for H^1(lambda)"),
    "classify": (cmd_classify, "membership in X_F, X_F,+, X_++ and Omega"),
    "scan": (cmd_scan, "batch cohomology summary over a weight box"),
    "svg": (cmd_svg, "SVG plot of the generic region (Q(3))"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="q", help="super type: q or glnn (default q)")
    common.add_argument("--rank", type=int, default=2, help="n in Q(n) / GL(n|n) (default 2)")
    common.add_argument("--weight", help="comma-separated integer weight, e.g. 1,0,-1")
    common.add_argument("--out", choices=("text", "json", "svg"), default=None)
    common.add_argument("--box", type=int, default=None, help="half-width of scan/plot box")
    common.add_argument("--edge-flags", action=argparse.BooleanOptionalAction, default=True,
                        help="report edge-case flags (default on)")

    parser = argparse.ArgumentParser(prog="superbbw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "region":
            p.add_argument("--w", help="Weyl element as a word, e.g. s1.s2 (1 = identity)")
            p.add_argument("--inequalities", action="store_true",
                           help="print the closed-form bounds of Omega(w)")
            p.add_argument("--very-dominant", action="store_true",
                           help="print the bounds cutting out X_++")
        if name == "svg":
            p.add_argument("--hex", action="store_true", help="hexagonal lattice layout")
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--weight -2,1" as two options
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--weight", "--w") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None) -> tuple[int, str, str]:
    """Execute a command; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        kind = parse_kind(args.type)
        d = build_root_datum(SuperType(kind, args.rank))
        output = args.out or ("svg" if args.cmd == "svg" else "text")
        if (output == "svg") != (args.cmd == "svg"):
            raise UnsupportedTypeError(f"--out {output} is not available for '{args.cmd}'")
        default_box = 9 if args.cmd == "svg" else 3
        cfg = CliConfig(kind.value, args.rank, output,
                        default_box if args.box is None else args.box, args.edge_flags)
        if cfg.box < 0:
            raise MalformedInput("--box must be non-negative")
        func = COMMANDS[args.cmd][0]
        return 0, func(args, d, cfg), ""
    except MalformedInput as exc:
        return EX_DATAERR, "", f"superbbw: {exc}\n"
    except SuperBBWError as exc:
        return exc.exit_code, "", f"superbbw: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run(argv)
    for stream, text in ((sys.stdout, out), (sys.stderr, err)):
        if text:
            if hasattr(stream, "reconfigure"):
                stream.reconfigure(encoding="utf-8")
            stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
