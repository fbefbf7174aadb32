"""Command line front end.

Exit status: 0 when the verdict holds or the verification passed, 1 when it
does not (a witness is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import check_ideal
from .fileio import InputError, read_graph, read_weights
from .graphs import chordless_cycles, is_disjoint_union_complete, is_woodroofe
from .homology import FieldSpec
from .monomials import (
    associated_primes,
    associated_radicals,
    format_monomial,
    is_unmixed,
    krull_dim,
    uniform_weights,
    weighted_edge_ideal,
)
from .verify import BudgetError, VERIFIERS

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _emit(args, payload: dict, text: str):
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        print(text)


def _load(args):
    G = read_graph(args.graph)
    w = read_weights(args.weights, G) if args.weights else uniform_weights(G)
    return G, w


def cmd_classify(args) -> int:
    G = read_graph(args.graph)
    wood = is_woodroofe(G)
    cliques = is_disjoint_union_complete(G)
    lengths = sorted(len(c) for c in chordless_cycles(G, 3))
    payload = {"woodroofe": wood, "complete_union": cliques, "induced_cycles": lengths}
    text = f"woodroofe: {_bool(wood)}; complete-union: {_bool(cliques)}; induced-cycles: {lengths}"
    _emit(args, payload, text)
    if args.expect == "woodroofe":
        return EXIT_TRUE if wood else EXIT_FALSE
    if args.expect == "complete-union":
        return EXIT_TRUE if cliques else EXIT_FALSE
    return EXIT_TRUE


def _witness_dict(wit):
    if wit is None:
        return None
    cw = wit.complex_witness
    return {
        "u": list(wit.u),
        "u_text": format_monomial(wit.u),
        "radical": [format_monomial(g) for g in sorted(wit.radical.gens, reverse=True)],
        "face": None if cw is None else list(cw.face),
        "degree": None if cw is None else cw.degree,
        "skeleton": None if cw is None else cw.skeleton,
        "dims": None if wit.dims is None else list(wit.dims),
    }


def cmd_check(args) -> int:
    G, w = _load(args)
    I = weighted_edge_ideal(G, w)
    if args.property == "unmixed":
        verdict = is_unmixed(I)
        payload = {"property": "unmixed", "verdict": verdict, "dim": krull_dim(I)}
        _emit(args, payload, f"unmixed: {_bool(verdict)}")
        return EXIT_TRUE if verdict else EXIT_FALSE
    field = FieldSpec.parse(args.char)
    report = check_ideal(I, field, cross_field=args.cross_field)
    verdict = report.is_cm if args.property == "cm" else report.is_scm
    wit = report.cm_witness if args.property == "cm" else report.scm_witness
    payload = {
        "property": args.property,
        "verdict": verdict,
        "is_cm": report.is_cm,
        "is_scm": report.is_scm,
        "unmixed": report.unmixed,
        "dim": report.dim,
        "field": str(field),
        "field_sensitive": report.field_sensitive,
        "witness": _witness_dict(wit),
    }
    lines = [f"{args.property}: {_bool(verdict)} over {field} "
             f"(cm={_bool(report.is_cm)}, scm={_bool(report.is_scm)}, "
             f"unmixed={_bool(report.unmixed)}, dim={report.dim})"]
    if wit is not None:
        lines.append(f"witness monomial: {format_monomial(wit.u)}")
        lines.append("witness radical: " + ", ".join(format_monomial(g) for g in sorted(wit.radical.gens, reverse=True)))
        lines.append("reason: " + wit.describe().rsplit("; ", 1)[1])
    if report.field_sensitive:
        lines.append("field-sensitive: " + "; ".join(report.notes))
    _emit(args, payload, "\n".join(lines))
    return EXIT_TRUE if verdict else EXIT_FALSE


def cmd_radicals(args) -> int:
    G, w = _load(args)
    rads = associated_radicals(weighted_edge_ideal(G, w))
    rows = [{"u": list(u), "radical": [format_monomial(g) for g in sorted(J.gens, reverse=True)]} for J, u in rads.items()]
    text = "\n".join(f"{format_monomial(u)}\t({', '.join(format_monomial(g) for g in sorted(J.gens, reverse=True))})"
                     for J, u in rads.items())
    _emit(args, {"count": len(rows), "radicals": rows}, text)
    return EXIT_TRUE


def cmd_ass_primes(args) -> int:
    G, w = _load(args)
    primes = sorted((sorted(P) for P in associated_primes(weighted_edge_ideal(G, w))),
                    key=lambda P: (len(P), P))
    text = "\n".join("(" + ", ".join(f"x{i}" for i in P) + ")" for P in primes)
    _emit(args, {"count": len(primes), "primes": primes}, text)
    return EXIT_TRUE


def cmd_verify(args) -> int:
    cross = not args.no_cross_field
    name = args.claim
    if name in ("thm-cm", "thm-scm"):
        out = VERIFIERS[name](nmax=args.nmax, nmin=args.nmin, wmax=args.wmax,
                              cross_field=cross, jobs=args.jobs)
    elif name == "c5":
        out = VERIFIERS[name](wmax=args.wmax if args.wmax else 3, cross_field=cross)
    elif name == "prop-h":
        out = VERIFIERS[name](cross_field=cross)
    elif name == "cor31":
        out = VERIFIERS[name](sample=args.sample, seed=args.seed, cross_field=cross)
    else:
        out = VERIFIERS[name](t=args.t, omega=args.omega, cross_field=cross)
    if args.json:
        sys.stdout.write(json.dumps(out.to_dict(), sort_keys=True) + "\n")
    else:
        print(out.summary())
        for key, val in out.info.items():
            print(f"  {key}: {val}")
        for cx in out.counterexamples:
            print(f"  counterexample: {cx}")
    return EXIT_TRUE if out.passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seqcm", description="(Sequentially) Cohen-Macaulay edge-weighted graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def io(sp, weights=True):
        sp.add_argument("--graph", required=True, help="graph file ('n <count>' then 'u v' lines)")
        if weights:
            sp.add_argument("--weights", help="weight file ('u v w' lines); default all ones")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    sp = sub.add_parser("classify", help="Woodroofe / clique-union classification")
    io(sp, weights=False)
    sp.add_argument("--expect", choices=["woodroofe", "complete-union"])
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("check", help="decide CM, seqCM or unmixedness of I(G_w)")
    sp.add_argument("property", choices=["cm", "scm", "unmixed"])
    io(sp)
    sp.add_argument("--char", default="0", help="field characteristic, 0 for the rationals")
    sp.add_argument("--cross-field", action="store_true", help="also decide over GF(2) and report disagreement")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("radicals", help="list the associated radicals sqrt(I : u)")
    io(sp)
    sp.set_defaults(func=cmd_radicals)

    sp = sub.add_parser("ass-primes", help="list the associated primes")
    io(sp)
    sp.set_defaults(func=cmd_ass_primes)

    sp = sub.add_parser("verify", help="run a verification sweep")
    sp.add_argument("claim", choices=sorted(VERIFIERS))
    sp.add_argument("--nmax", type=int, default=5)
    sp.add_argument("--nmin", type=int, default=None, help="smallest vertex count (default: nmax)")
    sp.add_argument("--wmax", type=int, default=None)
    sp.add_argument("--sample", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--t", type=int, default=4)
    sp.add_argument("--omega", type=int, default=2)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-cross-field", action="store_true", help="skip the GF(2) re-run")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    if getattr(args, "claim", None) in ("thm-cm", "thm-scm") and args.wmax is None:
        args.wmax = 2
    try:
        return args.func(args)
    except (InputError, BudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
