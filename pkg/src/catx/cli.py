"""Command-line front end.

Subcommands: roots, weyl, char, decompose, verify, algebra.  Exit codes:
0 success, 1 a verification or decomposition failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from catx.charcalc import (
    JPRIME_CONVENTIONS,
    FormalCharacter,
    costandard_character,
    decompose_character,
    induced_character,
    simple_character,
)
from catx.chario import (
    character_dumps,
    character_loads,
    module_loads,
)
from catx.errors import InputError, ResourceGuardError
from catx.incidence import (
    algebra_radical,
    build_incidence_algebra,
    cartan_and_ext,
    cartan_determinant,
    heredity_chain_check,
    krull_schmidt_decompose,
    regular_module,
)
from catx.rootsystem import build_root_system
from catx.verify import (
    CHECKS,
    ITHETA_MODES,
    SuiteConfig,
    report_dumps,
    report_to_csv,
    run_suite,
)
from catx.weyl import enumerate_biclosed, enumerate_weyl, longest_element

KINDS = ("M", "E", "nabla")


def _parse_indices(text: str, rs) -> frozenset[int]:
    text = text.strip()
    if text in ("", "none"):
        return frozenset()
    if text == "all":
        return frozenset(rs.simple_indices)
    try:
        items = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad index list {text!r}; want comma-separated ints")
    out = frozenset(items)
    bad = out - set(rs.simple_indices)
    if bad:
        raise InputError(f"indices {sorted(bad)} out of range for {rs.cartan_type}")
    return out


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_in(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.exists():
        raise InputError(f"no such file: {path}")
    return p.read_text()


def _cmd_roots(args) -> int:
    rs = build_root_system(args.type, allow_large=args.allow_large)
    if args.json:
        payload = {
            "type": str(rs.cartan_type),
            "rank": rs.rank,
            "positive_roots": [list(r) for r in rs.positive_roots],
            "count": len(rs.positive_roots),
            "weyl_order": rs.cartan_type.weyl_order(),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"type {rs.cartan_type}: {len(rs.positive_roots)} positive roots, "
             f"group order {rs.cartan_type.weyl_order()}"]
    for r in rs.positive_roots:
        lines.append(f"  {list(r)}  height {rs.root_height(r)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_weyl(args) -> int:
    rs = build_root_system(args.type, allow_large=args.allow_large)
    w0 = longest_element(rs, rs.simple_indices)
    payload = {
        "type": str(rs.cartan_type),
        "order": rs.cartan_type.weyl_order(),
        "longest_word": list(w0.word),
    }
    status = 0
    if args.elements:
        payload["elements"] = [
            list(w.word) for w in enumerate_weyl(rs, allow_large=args.allow_large)
        ]
    if args.biclosed:
        data = enumerate_biclosed(rs, allow_large=args.allow_large)
        witnessed = sum(1 for _, w in data if w is not None)
        payload["biclosed"] = {
            "count": len(data),
            "witnessed": witnessed,
            "matches_group": len(data) == payload["order"]
            and witnessed == len(data),
        }
        if not payload["biclosed"]["matches_group"]:
            status = 1
    if args.json:
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return status
    lines = [
        f"type {payload['type']}: group order {payload['order']}, "
        f"longest word {payload['longest_word']}"
    ]
    if args.elements:
        for word in payload["elements"]:
            lines.append(f"  {word}")
    if args.biclosed:
        b = payload["biclosed"]
        lines.append(
            f"biclosed subsets: {b['count']} (witnessed {b['witnessed']}), "
            f"matches group: {b['matches_group']}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return status


def _character(args, rs, theta, j):
    if args.kind == "M":
        return induced_character(rs, theta, j)
    if args.kind == "E":
        return simple_character(rs, theta, j)
    return costandard_character(
        rs, theta, j, jprime_convention=args.jprime_convention
    )


def _cmd_char(args) -> int:
    rs = build_root_system(args.type, allow_large=args.allow_large)
    theta = FormalCharacter(args.label, _parse_indices(args.itheta, rs))
    j = _parse_indices(args.j, rs)
    char = _character(args, rs, theta, j)
    if args.json:
        _emit(character_dumps(rs, char, base=theta), args.out)
        return 0
    lines = [
        f"{args.kind}({theta.label}, J={sorted(j)}) over {rs.cartan_type}, "
        f"itheta={sorted(theta.itheta)}: {char.total()} weights"
    ]
    for w, mult in char.items():
        lines.append(
            f"  coset_rep {list(w.tchar.coset_rep.word)}  v {list(w.v.word)}  x {mult}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_decompose(args) -> int:
    text = _read_in(args.infile)
    try:
        head = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}")
    if not isinstance(head, dict) or "type" not in head:
        raise InputError("character payload must be an object with a 'type'")
    if args.type and args.type != head["type"]:
        raise InputError(
            f"payload is for type {head['type']!r}, but --type says {args.type!r}"
        )
    rs = build_root_system(head["type"], allow_large=args.allow_large)
    char, base, warnings = character_loads(rs, text, strict=args.strict)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    dec = decompose_character(rs, char, tie_break=args.tie_break)
    factors = sorted(
        ((theta.label, sorted(k), mult) for (theta, k), mult in dec.factors.items()),
        key=lambda x: (len(x[1]), x[1]),
    )
    if args.json:
        payload = {
            "type": str(rs.cartan_type),
            "ok": dec.ok,
            "factors": [
                {"label": label, "j": k, "mult": mult} for label, k, mult in factors
            ],
            "remainder_total": dec.remainder.total(),
            "diagnostic": dec.diagnostic,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = []
        for label, k, mult in factors:
            lines.append(f"  E({label}, {k}) x {mult}")
        if not factors:
            lines.append("  (no factors)")
        if dec.ok:
            lines.insert(0, f"decomposition complete: {len(factors)} distinct factors")
        else:
            lines.insert(0, "decomposition FAILED")
            lines.append(f"  remainder: {dec.remainder.total()} weights")
            lines.append(f"  diagnostic: {dec.diagnostic}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if dec.ok else 1


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        types=tuple(x for x in args.types.split(",") if x) if args.types else (),
        checks=tuple(x for x in args.checks.split(",") if x) if args.checks else CHECKS,
        itheta_mode=args.itheta_mode,
        max_rank=args.max_rank,
        seed=args.seed,
        sample_triples=args.sample_triples,
        jprime_convention=args.jprime_convention,
        theta_label=args.theta_label,
        allow_large=args.allow_large,
    )
    report = run_suite(cfg)
    if args.out:
        _emit(report_dumps(report), args.out)
    if args.csv:
        _emit(report_to_csv(report), args.csv)
    by_check: dict[str, list[dict]] = {}
    for rec in report["records"]:
        by_check.setdefault(rec["check"], []).append(rec)
    for check in sorted(by_check):
        recs = by_check[check]
        bad = [r for r in recs if not r["passed"]]
        line = f"{check}: {len(recs)} checks, "
        line += "all pass" if not bad else f"{len(bad)} FAILED"
        print(line)
        for r in bad[:5]:
            print(f"  failed at {json.dumps(r['params'], sort_keys=True)}")
    print(f"overall: {report['overall_status']}")
    return 0 if report["overall_status"] == "pass" else 1


def _cmd_algebra(args) -> int:
    a = build_incidence_algebra(args.n)
    _, series = algebra_radical(a)
    cartan, ext1 = cartan_and_ext(a)
    heredity = heredity_chain_check(a)
    if args.module:
        module = module_loads(_read_in(args.module))
        if module.algebra.n != a.n:
            raise InputError(
                f"module file is over n={module.algebra.n}, but --n says {a.n}"
            )
        source = f"module file {args.module}"
    else:
        module = regular_module(a)
        source = "regular module"
    parts = krull_schmidt_decompose(a, module, seed=args.seed)
    if args.json:
        payload = {
            "n": a.n,
            "dim": a.dim,
            "radical_series": series,
            "cartan_determinant": str(cartan_determinant(a)),
            "ext1_count": len(ext1),
            "heredity_passed": heredity["passed"],
            "heredity_layers": heredity["layers"],
            "decomposed": source,
            "summands": [
                {
                    "dims": {
                        json.dumps(sorted(y), separators=(",", ":")): d
                        for y, d in m.dims.items()
                        if d
                    },
                    "total_dim": m.total_dim,
                    "multiplicity": mult,
                    "is_certified_local": cert,
                }
                for m, mult, cert in parts
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [
        f"incidence algebra on {a.n} points: dim {a.dim}",
        f"radical power dims: {series}",
        f"cartan determinant: {cartan_determinant(a)}",
        f"ext^1 arrows: {len(ext1)}",
        f"heredity chain: {'pass' if heredity['passed'] else 'FAIL'}",
        f"indecomposable summands of the {source}:",
    ]
    for m, mult, cert in parts:
        dims = {tuple(sorted(y)): d for y, d in m.dims.items() if d}
        lines.append(
            f"  dim {m.total_dim} x {mult}  vertices {dims}  "
            f"local: {'certified' if cert else 'NOT CERTIFIED'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catx",
        description="Exact combinatorics of root systems, twisted characters, "
        "and the Boolean-lattice incidence algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default=None, help="write output to this file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--allow-large", action="store_true", help="lift resource guards"
        )

    p = sub.add_parser("roots", help="positive roots of a type")
    p.add_argument("--type", required=True, help="Cartan type, e.g. A2 or B3")
    add_common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("weyl", help="reflection group data")
    p.add_argument("--type", required=True)
    p.add_argument("--elements", action="store_true", help="list all elements")
    p.add_argument(
        "--biclosed",
        action="store_true",
        help="sweep two-sided-closed subsets and match them to the group",
    )
    add_common(p)
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("char", help="compute a module character")
    p.add_argument("--type", required=True)
    p.add_argument("--kind", choices=KINDS, required=True,
                   help="M induced, E simple, nabla costandard")
    p.add_argument("--itheta", default="all",
                   help="comma list of simple indices fixed by theta; 'all' or ''")
    p.add_argument("--label", default="theta", help="name for the torus character")
    p.add_argument("--j", default="", help="comma list, a subset of itheta")
    p.add_argument(
        "--jprime-convention",
        choices=JPRIME_CONVENTIONS,
        default=JPRIME_CONVENTIONS[0],
        help="complement used for the costandard character",
    )
    add_common(p)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("decompose", help="decompose a character file")
    p.add_argument("--in", dest="infile", required=True,
                   help="character JSON file, or - for stdin")
    p.add_argument("--type", default=None, help="crosscheck the payload type")
    p.add_argument("--strict", action="store_true",
                   help="reject non-canonical or duplicate input instead of fixing it")
    p.add_argument("--tie-break", type=int, default=0, choices=(0, 1, 2),
                   help="which maximal label to peel when several are available")
    add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--types", default=None,
                   help="comma list of Cartan types; default from --max-rank")
    p.add_argument("--checks", default=None,
                   help=f"comma list from {','.join(CHECKS)}; default all")
    p.add_argument("--itheta-mode", choices=ITHETA_MODES, default=ITHETA_MODES[0])
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--seed", type=int, default=1729)
    p.add_argument("--sample-triples", type=int, default=10000)
    p.add_argument(
        "--jprime-convention",
        choices=JPRIME_CONVENTIONS,
        default=JPRIME_CONVENTIONS[0],
    )
    p.add_argument("--theta-label", default="theta")
    p.add_argument("--csv", default=None, help="also write a CSV view to this file")
    p.add_argument("--out", default=None, help="write the JSON report to this file")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("algebra", help="incidence-algebra invariants and splitting")
    p.add_argument("--n", type=int, required=True, help="ground-set size")
    p.add_argument("--module", default=None,
                   help="module JSON file to decompose; default the regular module")
    p.add_argument("--seed", type=int, default=1729)
    add_common(p)
    p.set_defaults(func=_cmd_algebra)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
