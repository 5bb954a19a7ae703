"""Command-line entry point: ``acta <subcommand> ...``."""

from __future__ import annotations

import argparse
import datetime as _dt
import sys
from pathlib import Path

from acta import __version__, io
from acta._backend import BACKEND
from acta.act import Act, Subact
from acta.classify import classification_report
from acta.cogen import cogeneration_witness, cotrace, enumerate_homs
from acta.congruence import Congruence, all_congruences, minimal_congruences, monolith
from acta.errors import ActaError, NotAssociative, NotCompatible, NotUnital
from acta.monoid import Monoid
from acta.structure import large_subacts, structure_report

EXIT_OK = 0
EXIT_FAIL = 1


def _meta(args) -> None:
    if not args.no_meta:
        stamp = _dt.datetime.now(_dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        print(f"# acta {__version__} backend={BACKEND} at {stamp}", file=sys.stderr)


def _elems(A: Act, xs) -> str:
    return "{" + ", ".join(A.name(a) for a in xs) + "}"


def _sub(A: Act, B: Subact | None) -> str:
    return "∅" if B is None else _elems(A, B.elements)


def _classes(A: Act, c: Congruence) -> str:
    return " | ".join(" ".join(A.name(a) for a in cls) for cls in c.classes())


def _emit(args, payload, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(io.dumps(payload))
    else:
        print("\n".join(lines))


def _table(rows: list[tuple[str, str]]) -> list[str]:
    width = max(len(k) for k, _ in rows)
    return [f"{k.ljust(width)}  {v}" for k, v in rows]


def _mark(flag) -> str:
    return "yes" if flag else "no"


# --------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    status = EXIT_OK
    results = []
    for path in args.paths:
        try:
            obj = io.load_any(path)
        except (NotAssociative, NotUnital, NotCompatible) as exc:
            status = EXIT_FAIL
            results.append({"path": path, "valid": False, "error": type(exc).__name__, "witness": list(exc.witness)})
            if not args.json:
                print(f"{path}: invalid: {exc}")
            continue
        except ActaError as exc:
            status = EXIT_FAIL
            results.append({"path": path, "valid": False, "error": type(exc).__name__, "message": str(exc)})
            if not args.json:
                print(f"{path}: invalid: {type(exc).__name__}: {exc}")
            continue
        if isinstance(obj, Monoid):
            info = {"kind": "monoid", "n": obj.size, "identity": obj.identity, "zero": obj.zero}
            text = f"monoid of order {obj.size}, identity {obj.name(obj.identity)}"
            text += f", zero {obj.name(obj.zero)}" if obj.zero is not None else ", no zero"
        else:
            info = {"kind": "act", "m": obj.size, "n": obj.monoid.size}
            text = f"act with {obj.size} elements over a monoid of order {obj.monoid.size}"
        results.append({"path": path, "valid": True, **info})
        if not args.json:
            print(f"{path}: ok: {text}")
    if args.json:
        sys.stdout.write(io.dumps(results))
    return status


def _lattice_summary(A: Act) -> dict:
    cons = all_congruences(A)
    mono = monolith(A)
    return {
        "count": len(cons),
        "atoms": [list(c.labels) for c in minimal_congruences(A)],
        "monolith": list(mono.labels) if mono is not None else None,
    }


def cmd_analyze(args) -> int:
    A = io.load_act(args.act)
    st = structure_report(A)
    cl = classification_report(A)
    lat = _lattice_summary(A)
    payload = {"structure": st.to_json(), "classification": cl.to_json(), "congruences": lat}
    rows = [
        ("elements", _elems(A, range(A.size))),
        ("congruences", str(lat["count"])),
        ("monolith", _classes(A, monolith(A)) if lat["monolith"] else "none"),
        ("socle", _sub(A, st.socle)),
        ("S(A)", _sub(A, st.s_socle) if st.s_socle is not None else "n/a (no zero)"),
        ("radical", _sub(A, st.radical)),
        ("maximal subacts", ", ".join(_sub(A, B) for B in st.maximal_subacts) or "none"),
    ]
    rows += _classification_rows(A, cl)
    _emit(args, payload, _table(rows))
    return EXIT_OK


def _classification_rows(A: Act, cl) -> list[tuple[str, str]]:
    cof = f"yes, n = {cl.cofaithful_n} via {_elems(A, cl.cofaithful)}" if cl.cofaithful is not None else "no"
    sub = f"yes, via {A.name(cl.subgenerator)}" if cl.subgenerator is not None else "no"
    return [
        ("faithful", _mark(cl.faithful)),
        ("cofaithful", cof),
        ("subgenerator", sub),
        ("generator", _mark(cl.generator)),
        ("subdirectly irreducible", _mark(cl.subdirectly_irreducible)),
        ("irreducible", _mark(cl.irreducible)),
        ("finitely cogenerated", "yes (automatic for finite acts)"),
    ]


def cmd_classify(args) -> int:
    A = io.load_act(args.act)
    cl = classification_report(A)
    _emit(args, cl.to_json(), _table(_classification_rows(A, cl)))
    return EXIT_OK


def cmd_congruences(args) -> int:
    A = io.load_act(args.act)
    cons = all_congruences(A)
    payload = [io.congruence_to_json(c) for c in cons]
    lines = [f"{len(cons)} congruences"] + [f"  {_classes(A, c)}" for c in cons]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_socle(args) -> int:
    A = io.load_act(args.act)
    st = structure_report(A)
    payload = {
        "socle": st.to_json()["socle"],
        "s_socle": st.to_json()["s_socle"],
        "large_subacts": [list(B.elements) for B in large_subacts(A)],
    }
    lines = _table(
        [
            ("socle", _sub(A, st.socle)),
            ("S(A)", _sub(A, st.s_socle) if st.s_socle is not None else "n/a (no zero)"),
            ("large subacts", ", ".join(_sub(A, B) for B in st.large_subacts)),
        ]
    )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_radical(args) -> int:
    A = io.load_act(args.act)
    st = structure_report(A)
    payload = {"radical": st.to_json()["radical"], "maximal_subacts": st.to_json()["maximal_subacts"]}
    lines = _table(
        [
            ("radical", _sub(A, st.radical)),
            ("maximal subacts", ", ".join(_sub(A, B) for B in st.maximal_subacts) or "none"),
        ]
    )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_cotrace(args) -> int:
    A = io.load_act(args.act)
    Cs = [io.load_act(p) for p in args.family]
    c = cotrace(A, Cs)
    w = cogeneration_witness(Cs, A) if c.is_diagonal else None
    payload = {"cotrace": list(c.labels), "cogenerates": c.is_diagonal, "witness": w.to_json() if w else None}
    lines = _table([("cotrace", _classes(A, c)), ("cogenerates", _mark(c.is_diagonal))])
    if w:
        lines.append(f"witness: {len(w.family)} homs, embedding {list(w.embedding.map)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_homs(args) -> int:
    A = io.load_act(args.source)
    B = io.load_act(args.target)
    homs = enumerate_homs(A, B)
    payload = [list(h.map) for h in homs]
    lines = [f"{len(homs)} homomorphisms"]
    for h in homs:
        lines.append("  " + ", ".join(f"{A.name(a)}↦{B.name(h.map[a])}" for a in range(A.size)))
    _emit(args, payload, lines)
    return EXIT_OK


def _claim_table(report: dict) -> list[str]:
    head = f"{'claim':36s} {'mode':6s} {'checked':>8s} {'confirmed':>9s} {'skipped':>8s} {'violations':>10s}"
    lines = [head, "-" * len(head)]
    for r in report["claims"]:
        lines.append(
            f"{r['claim']:36s} {r['mode']:6s} {r['checked']:8d} {r['confirmed']:9d} {r['skipped']:8d} {len(r['violations']):10d}"
        )
    for g in report.get("gaps", []):
        found = "witness found" if g["witness"] else "no witness"
        lines.append(f"gap {g['gap']}: {found}" + (f" ({g['note']})" if "note" in g else ""))
    return lines


def cmd_universe(args) -> int:
    from acta.claims import universe_report

    from acta.universe import build_universe

    claims = args.claims.split(",") if args.claims else None
    U = build_universe(args.max_monoid, args.max_act)
    report = universe_report(U, claims, gaps=not args.no_gaps, jobs=args.jobs)
    if args.report:
        Path(args.report).write_text(io.dumps(report), encoding="utf-8")
    _emit(args, report, _claim_table(report))
    return EXIT_FAIL if report["hard_violations"] else EXIT_OK


def cmd_counterexample(args) -> int:
    from acta.claims import find_counterexample

    w = find_counterexample(args.gap, args.max_monoid, args.max_act)
    lines = ["no witness within the bounds"] if w is None else [f"monoid {w['monoid']}", f"action {w['action']}"]
    _emit(args, {"gap": args.gap, "witness": w}, lines)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-meta", action="store_true", help="suppress the timestamped metadata line")

    p = argparse.ArgumentParser(prog="acta", description="Finite monoid acts: structure, cogeneration, classification.")
    p.add_argument("--version", action="version", version=f"acta {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="parse and validate monoid or act files")
    s.add_argument("paths", nargs="+")
    s.set_defaults(func=cmd_validate)

    for name, func, help_ in [
        ("analyze", cmd_analyze, "structure, classification and congruence summary"),
        ("classify", cmd_classify, "faithful / cofaithful / subgenerator / generator"),
        ("congruences", cmd_congruences, "list the congruence lattice"),
        ("socle", cmd_socle, "socle, S(A) and large subacts"),
        ("radical", cmd_radical, "radical and maximal subacts"),
    ]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("act")
        s.set_defaults(func=func)

    s = sub.add_parser("cotrace", parents=[common], help="cotrace of an act with respect to a family")
    s.add_argument("act")
    s.add_argument("family", nargs="+")
    s.set_defaults(func=cmd_cotrace)

    s = sub.add_parser("homs", parents=[common], help="enumerate homomorphisms")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_homs)

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--max-monoid", type=int, default=3)
    bounds.add_argument("--max-act", type=int, default=4)

    s = sub.add_parser("universe", parents=[common, bounds], help="run the claim checks over a bounded universe")
    s.add_argument("--claims", help="comma-separated claim ids (default: all)")
    s.add_argument("--report", help="write the JSON report to this path")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-gaps", action="store_true", help="skip the counterexample searches")
    s.set_defaults(func=cmd_universe)

    s = sub.add_parser("counterexample", parents=[common, bounds], help="smallest witness for a gap in the chain")
    s.add_argument("gap")
    s.set_defaults(func=cmd_counterexample)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _meta(args)
    try:
        return args.func(args)
    except (ActaError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
