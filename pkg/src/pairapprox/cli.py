"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 certificate rejected, 3 size limit.
Every command that emits a solution prints a certificate that ``verify``
accepts against the same input file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import certificates, corpus, oracles
from .color_path import dispatch_color_path
from .directed import dispatch_asym_tsp, dispatch_directed
from .gadgets import tsp_maxtsp_gadget
from .graph import Digraph, Graph, SetSystem
from .hadwiger import dispatch_hadwiger
from .io import ParseError, read_file, serialize, write_atomic
from .ramsey import build_ramsey, verify_ramsey
from .setcover import build_kG, build_kstarG
from .solutions import InvalidCertificate
from .thresholds import as_fraction
from .tsp_mis import dispatch_pathcover_mis, dispatch_tsp_mis

EXIT_OK, EXIT_INPUT, EXIT_REJECTED, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _load(path: str, kind: type):
    obj = read_file(path)
    if not isinstance(obj, kind):
        raise UsageError(f"{path}: expected a {kind.__name__}, found a {type(obj).__name__}")
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_cert(cert: dict, obj, args) -> int:
    text = certificates.dumps(cert)
    if getattr(args, "certify", False):
        # round-trip through JSON exactly as `verify` would see it
        certificates.verify_certificate(json.loads(text), obj)
    _emit(text, getattr(args, "output", None))
    return EXIT_OK


def _write_sidecar(data: dict, path: str | None, out: str | None) -> None:
    target = path or (out + ".map.json" if out else None)
    if target:
        write_atomic(target, json.dumps(data, indent=1) + "\n")


# -- paired ---------------------------------------------------------------------------


def _paired_tsp_mis(args) -> int:
    g = _load(args.input, Graph)
    if args.cover == "tour":
        res = dispatch_tsp_mis(g, args.eps, seed=args.seed)
    else:
        res = dispatch_pathcover_mis(g, args.eps, seed=args.seed, cover=args.cover)
    return _emit_cert(certificates.outcome_certificate(res, g), g, args)


def _paired_color_path(args) -> int:
    g = _load(args.input, Graph)
    res = dispatch_color_path(g, args.eps, strategy=args.strategy)
    return _emit_cert(certificates.outcome_certificate(res, g), g, args)


def _paired_directed(args) -> int:
    d = _load(args.input, Digraph)
    if args.objective == "path-acyclic":
        res = dispatch_directed(d, args.eps, seed=args.seed)
    else:
        res = dispatch_asym_tsp(d, args.eps, seed=args.seed)
    return _emit_cert(certificates.outcome_certificate(res, d), d, args)


def _paired_hadwiger(args) -> int:
    g = _load(args.input, Graph)
    res = dispatch_hadwiger(g, args.eps)
    return _emit_cert(certificates.outcome_certificate(res, g), g, args)


# -- reductions --------------------------------------------------------------------------


def _reduce_amplify(args) -> int:
    s = _load(args.input, SetSystem)
    amp = build_kG(s, args.k) if args.kind == "kg" else build_kstarG(s, args.k)
    _emit(serialize(amp.system), args.output)
    _write_sidecar(amp.index_map(), args.sidecar, args.output)
    return EXIT_OK


def _reduce_gadget(args) -> int:
    g = _load(args.input, Graph)
    layout = tsp_maxtsp_gadget(g)
    _emit(serialize(layout.graph), args.output)
    _write_sidecar(layout.sidecar(), args.sidecar, args.output)
    return EXIT_OK


# -- ramsey ------------------------------------------------------------------------------


def _ramsey_build(args) -> int:
    rg = build_ramsey(args.n, mode=args.mode, seed=args.seed, f=args.f)
    _emit(serialize(rg.graph), args.output)
    _write_sidecar(
        {
            "k": rg.k,
            "mode": args.mode,
            "seed": args.seed,
            "piece_bounds": [p.f for p in rg.pieces],
            "pieces": [p.matrix.astype(int).tolist() for p in rg.pieces],
            "biclique_bound": rg.biclique_bound,
            "independent_bound": rg.independent_bound,
        },
        args.sidecar,
        args.output,
    )
    if args.certify:
        rep = verify_ramsey(rg.graph, 1)
        f = max(rep.max_independent, rep.max_biclique) + 1
        cert = certificates.certificate("ramsey", "ramsey", f, rg.graph)
        target = args.certify if isinstance(args.certify, str) else None
        text = certificates.dumps(cert)
        if target:
            write_atomic(target, text + "\n")
        else:
            sys.stderr.write(text + "\n")
    return EXIT_OK


def _ramsey_verify(args) -> int:
    g = _load(args.input, Graph)
    rep = verify_ramsey(g, args.f)
    sys.stdout.write(json.dumps(rep.as_dict(), indent=1) + "\n")
    return EXIT_OK if rep.ok else EXIT_REJECTED


# -- oracles -----------------------------------------------------------------------------

# problem name -> (input type, oracle, certificate side)
ORACLE_PROBLEMS = {
    "tsp12-min": ((Graph, Digraph), lambda x: oracles.exact_tsp12(x, "min"), None),
    "tsp12-max": ((Graph, Digraph), lambda x: oracles.exact_tsp12(x, "max"), None),
    "mis": (Graph, oracles.exact_mis, "independent-set"),
    "clique": (Graph, oracles.exact_clique, "clique"),
    "chromatic": (Graph, oracles.exact_chromatic, "coloring"),
    "longest-path": ((Graph, Digraph), oracles.exact_longest_path, None),
    "max-acyclic": (Digraph, oracles.exact_max_acyclic, "acyclic-set"),
    "cover": (SetSystem, oracles.exact_cover, "set-cover"),
    "hit": (SetSystem, oracles.exact_hit, "hitting-set"),
    "hadwiger": (Graph, oracles.exact_hadwiger, "clique-minor"),
    "biclique": (Graph, oracles.exact_max_balanced_biclique, "biclique"),
}


def _oracle_side(problem: str, obj) -> str:
    if problem.startswith("tsp12"):
        return "asym-tsp12" if isinstance(obj, Digraph) else "tsp12"
    if problem == "longest-path":
        return "directed-path" if isinstance(obj, Digraph) else "longest-path"
    return ORACLE_PROBLEMS[problem][2]


def _oracle(args) -> int:
    kinds, run, _ = ORACLE_PROBLEMS[args.problem]
    obj = read_file(args.input)
    if not isinstance(obj, kinds):
        raise UsageError(f"{args.input}: {args.problem} does not accept a {type(obj).__name__}")
    res = run(obj)
    side = _oracle_side(args.problem, obj)
    cert = certificates.certificate(args.problem, side, res.witness, obj, optimal=True)
    if args.value_only:
        _emit(str(cert["value"]), args.output)
        return EXIT_OK
    return _emit_cert(cert, obj, args)


# -- verify / corpus ----------------------------------------------------------------------


def _verify(args) -> int:
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            cert = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidCertificate(f"{args.certificate}: not valid JSON ({exc})") from exc
    obj = read_file(args.input)
    value = certificates.verify_certificate(cert, obj)
    sys.stdout.write(f"ok {cert['side']} value={value}\n")
    return EXIT_OK


def _corpus_generate(args) -> int:
    graphs = corpus.generate(args.family, args.n, seed=args.seed, count=args.count)
    if args.outdir is None:
        if len(graphs) != 1:
            raise UsageError("--count above 1 needs --outdir")
        _emit(serialize(graphs[0]), None)
        return EXIT_OK
    os.makedirs(args.outdir, exist_ok=True)
    for i, g in enumerate(graphs):
        name = f"{args.family}-n{args.n}-s{args.seed}-{i:04d}.g"
        write_atomic(os.path.join(args.outdir, name), serialize(g))
    sys.stdout.write(f"wrote {len(graphs)} graphs to {args.outdir}\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------------


def _eps(text: str):
    try:
        return as_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pairapprox", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def out_opts(sp, certify=True):
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        if certify:
            sp.add_argument(
                "--certify", action="store_true", help="re-verify the emitted certificate before writing it"
            )

    paired = sub.add_parser("paired", help="paired approximation with a certificate").add_subparsers(
        dest="pair", required=True
    )
    sp = paired.add_parser("tsp-mis", help="(1,2)-TSP tour or independent set")
    sp.add_argument("input")
    sp.add_argument("--eps", type=_eps, required=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument(
        "--cover",
        choices=["tour", "path-cover", "spanning-forest"],
        default="tour",
        help="pair the independent set with a tour (default) or with a path cover / spanning forest",
    )
    out_opts(sp)
    sp.set_defaults(func=_paired_tsp_mis)

    sp = paired.add_parser("color-path", help="coloring or long path")
    sp.add_argument("input")
    sp.add_argument("--eps", type=_eps, required=True)
    sp.add_argument("--strategy", choices=["depth", "degeneracy"], default="depth")
    out_opts(sp)
    sp.set_defaults(func=_paired_color_path)

    sp = paired.add_parser("directed", help="directed path / asymmetric tour or acyclic set")
    sp.add_argument("input")
    sp.add_argument("--eps", type=_eps, required=True)
    sp.add_argument("--objective", choices=["path-acyclic", "asym-tsp"], default="path-acyclic")
    sp.add_argument("--seed", type=int, default=None)
    out_opts(sp)
    sp.set_defaults(func=_paired_directed)

    sp = paired.add_parser("hadwiger", help="coloring or clique minor")
    sp.add_argument("input")
    sp.add_argument("--eps", type=_eps, required=True)
    out_opts(sp)
    sp.set_defaults(func=_paired_hadwiger)

    reduce = sub.add_parser("reduce", help="build reduction instances").add_subparsers(dest="reduction", required=True)
    sp = reduce.add_parser("k-amplify", help="kG or k*G amplification of a set system")
    sp.add_argument("input")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kind", choices=["kg", "kstar"], default="kg")
    sp.add_argument("--sidecar", help="index-map JSON path (default: OUTPUT.map.json when -o is given)")
    out_opts(sp, certify=False)
    sp.set_defaults(func=_reduce_amplify)

    sp = reduce.add_parser("tsp-maxtsp", help="TSP / MaxTSP gadget graph")
    sp.add_argument("input")
    sp.add_argument("--sidecar", help="block-layout JSON path (default: OUTPUT.map.json when -o is given)")
    out_opts(sp, certify=False)
    sp.set_defaults(func=_reduce_gadget)

    ramsey = sub.add_parser("ramsey", help="biclique / independent-set Ramsey graphs").add_subparsers(
        dest="action", required=True
    )
    sp = ramsey.add_parser("build")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=["brute", "random"], default="random")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--f", type=int, default=None, help="bound for every piece (default: smallest found)")
    sp.add_argument("--sidecar", help="piece description JSON path (default: OUTPUT.map.json when -o is given)")
    sp.add_argument(
        "--certify",
        nargs="?",
        const=True,
        default=False,
        metavar="PATH",
        help="emit an exact certificate (to PATH, or stderr) for the tightest bound",
    )
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_ramsey_build)

    sp = ramsey.add_parser("verify")
    sp.add_argument("input")
    sp.add_argument("--f", type=int, required=True)
    sp.set_defaults(func=_ramsey_verify)

    sp = sub.add_parser("oracle", help="exact solver with an optimality certificate")
    sp.add_argument("problem", choices=sorted(ORACLE_PROBLEMS))
    sp.add_argument("input")
    sp.add_argument("--value-only", action="store_true", help="print just the optimum")
    out_opts(sp)
    sp.set_defaults(func=_oracle)

    sp = sub.add_parser("verify", help="check a certificate against its input")
    sp.add_argument("certificate")
    sp.add_argument("input")
    sp.set_defaults(func=_verify)

    gen = sub.add_parser("corpus", help="instance corpora").add_subparsers(dest="action", required=True)
    sp = gen.add_parser("generate")
    sp.add_argument("--family", choices=sorted(corpus.FAMILIES), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--outdir")
    sp.set_defaults(func=_corpus_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, which would read as "rejected"
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except oracles.SizeLimitError as exc:
        sys.stderr.write(f"size limit: {exc}\n")
        return EXIT_LIMIT
    except InvalidCertificate as exc:
        sys.stderr.write(f"rejected: {exc}\n")
        return EXIT_REJECTED
    except (ParseError, UsageError, ValueError, TypeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
