"""Command-line front end.

Every subcommand writes one JSON report (``"schema": 1``) to stdout and a
one-line summary to stderr. Exit status: 0 pass, 1 an axiom or theorem
check failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .examples import build_named, enumerate_t_structures
from .fileformat import algebra_to_dict, dump_algebra, load_algebra
from .htalgebra import (
    HTAlgebra,
    check_heyting_law,
    check_ht_axioms,
    check_maximality_equivalence,
    check_prelinearity,
    check_s2_double_negation,
    to_t,
)
from .lattice import AxiomError, FormatError, GuardError, Report, check_distributive_lattice
from .relational import represent_relational
from .rough import represent_rough
from .spectrum import chain_decomposition, check_nested_filters
from .tstructure import TStructure, check_derived_props, check_t_axioms, to_ht
from .verify import RunReport, digest, verify_paper


class UsageError(Exception):
    pass


def _section(report: Report) -> dict:
    return {"pass": report.ok, **report.to_json()}


def _read(path: str) -> tuple[bytes, object]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return data, load_algebra(data)


def _emit(path: str | None, alg) -> None:
    if path:
        Path(path).write_text(dump_algebra(alg) + "\n")


def _checks(alg) -> dict:
    sections = {"lattice": _section(check_distributive_lattice(alg.lattice))}
    if isinstance(alg, TStructure):
        sections["t-axioms"] = _section(check_t_axioms(alg))
        sections["derived"] = _section(check_derived_props(alg))
    elif isinstance(alg, HTAlgebra):
        heyting = check_heyting_law(alg)
        sections["heyting"] = _section(heyting)
        if heyting.ok:
            axioms = check_ht_axioms(alg)
            sections["ht-axioms"] = _section(axioms)
            sections["prelinearity"] = _section(check_prelinearity(alg))
            if axioms.ok:
                sections["double-negation"] = _section(check_s2_double_negation(alg))
                sections["nested-filters"] = _section(check_nested_filters(alg))
                sections["maximal-filters"] = _section(check_maximality_equivalence(alg))
    return sections


def cmd_check(args) -> RunReport:
    data, alg = _read(args.file)
    return RunReport("check", digest(data), sections=_checks(alg), payload={"kind": alg.kind})


def cmd_convert(args) -> RunReport:
    data, alg = _read(args.file)
    run = RunReport("convert", digest(data))
    try:
        if args.to == "ht":
            if not isinstance(alg, TStructure):
                raise UsageError("convert --to ht expects a kind 't' document")
            out = to_ht(alg)
        else:
            if not isinstance(alg, HTAlgebra):
                raise UsageError("convert --to t expects a kind 'ht' document")
            out = to_t(alg)
    except AxiomError as exc:
        run.sections["precondition"] = _section(exc.report)
        return run
    run.sections["precondition"] = _section(Report())
    run.payload["algebra"] = algebra_to_dict(out)
    _emit(args.emit, out)
    return run


def cmd_spectrum(args) -> RunReport:
    data, alg = _read(args.file)
    spectrum = chain_decomposition(alg.lattice)
    run = RunReport("spectrum", digest(data), payload={"spectrum": spectrum.to_json()})
    bound = Report()
    if alg.kind != "lattice" and (spectrum.oversized or spectrum.non_chain):
        bound.add("chains-of-two", spectrum.oversized + spectrum.non_chain)
    run.sections["chains"] = _section(bound)
    return run


def _as_ht(alg) -> HTAlgebra:
    if isinstance(alg, TStructure):
        return to_ht(alg)
    if isinstance(alg, HTAlgebra):
        return alg
    raise UsageError("represent expects a kind 't' or 'ht' document")


def cmd_represent(args) -> RunReport:
    data, alg = _read(args.file)
    run = RunReport(f"represent --mode {args.mode}", digest(data))
    try:
        H = _as_ht(alg)
        rep = represent_rough(H) if args.mode == "rough" else represent_relational(H)
    except (AxiomError, RuntimeError) as exc:
        failed = exc.report if isinstance(exc, AxiomError) else Report()
        if failed.ok:
            failed.add("representation", (), detail=str(exc))
        run.sections["representation"] = _section(failed)
        return run
    run.sections["representation"] = {"pass": True}
    run.payload["representation"] = rep.to_json()
    return run


def cmd_examples(args) -> RunReport:
    try:
        alg = build_named(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.ht:
        alg = to_ht(alg)
    args_digest = digest(json.dumps({"name": args.name, "ht": args.ht}).encode())
    run = RunReport("examples", args_digest, payload={"algebra": algebra_to_dict(alg)})
    run.sections["t-axioms"] = _section(check_t_axioms(to_t(alg) if args.ht else alg))
    _emit(args.emit, alg)
    return run


def cmd_enumerate(args) -> RunReport:
    found = enumerate_t_structures(args.size)
    run = RunReport(
        "enumerate",
        digest(json.dumps({"size": args.size}).encode()),
        payload={"size": args.size, "count": len(found), "algebras": [algebra_to_dict(T) for T in found]},
    )
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for i, T in enumerate(found):
            _emit(str(out / f"t{args.size}-{i}.json"), T)
    return run


def cmd_verify(args) -> RunReport:
    return verify_paper(args.bound)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="threeval", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every applicable law check on an algebra file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", help="convert between T-structure and HT-algebra")
    p.add_argument("--to", choices=("t", "ht"), required=True)
    p.add_argument("--emit", metavar="PATH")
    p.add_argument("file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("spectrum", help="prime filters and their chain decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("represent", help="rough-set or relational representation")
    p.add_argument("--mode", choices=("rough", "relational"), required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("examples", help="build a named example (bt, b, rough:0,1/2, bt*b)")
    p.add_argument("--name", required=True)
    p.add_argument("--ht", action="store_true", help="emit the HT-algebra form")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("enumerate", help="all T-structures of a given size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-paper", help="run the full verification corpus")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run = args.func(args)
    except (UsageError, FormatError, GuardError) as exc:
        print(f"threeval: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(run.to_json(), sort_keys=True) + "\n")
    failed = [k for k, v in run.sections.items() if not v["pass"]]
    summary = f"{run.command}: {run.verdict}" + (f" ({', '.join(failed)})" if failed else "")
    print(f"{summary} [kernels: {kernels.BACKEND}]", file=sys.stderr)
    return 0 if run.verdict == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
