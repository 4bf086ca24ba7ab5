"""Command-line entry point wiring the library together.

Commands:
    construct --q <prime> | --n <int> [--certify] -o FILE
    verify    -i FILE [--k K]
    embed     -i FILE -o FILE
    lemmas    -i FILE [--sample N] [--seed S]
    search    --n <int> [--max-mult M] [--unpruned] [--allow-large] [-o FILE]
    bounds    --n a,b,c

Exit status is the only success/failure channel: 0 means free/pass,
1 means a cycle or violation was found, 2 means an I/O or format problem.
The BERGE_THREADS environment variable caps worker counts where the
underlying operation supports them.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional, Sequence

from .berge import find_berge_cycle, is_berge_c4_free
from .constructions import (
    blow_up,
    certify_blowup_free,
    lower_bound_construction,
    projective_plane_incidence,
    theoretical_bounds,
)
from .core import (
    FormatError,
    dumps_canonical,
    load_hypergraph,
    save_hypergraph,
    weight,
)
from .embedding import NotBergeC4FreeError, build_embedded_graph, verify_lemma_suite, verify_observation1
from .search import max_weight_exact

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_ERROR = 2

# Run the direct Berge detector on constructions up to this many vertices.
DETECTOR_SIZE_CAP = 100


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.q is not None:
            plane = projective_plane_incidence(args.q)
            base = plane.graph()
            hypergraph = blow_up(base, 3)
            q = args.q
        else:
            built = lower_bound_construction(args.n)
            hypergraph = built.hypergraph
            q = built.q
            base = projective_plane_incidence(q).graph()
    except ValueError as exc:
        return _fail(str(exc))
    if args.certify:
        certificate = certify_blowup_free(base)
        print(f"certificate: {json.dumps(certificate.to_json_dict())}", file=sys.stderr)
        if not certificate.certified:
            return EXIT_FOUND
        if hypergraph.n <= DETECTOR_SIZE_CAP:
            if not is_berge_c4_free(hypergraph):
                print("detector disagrees with certificate", file=sys.stderr)
                return EXIT_FOUND
            print("detector: Berge-C4-free confirmed", file=sys.stderr)
    try:
        save_hypergraph(hypergraph, args.output)
    except OSError as exc:
        return _fail(str(exc))
    print(f"wrote n={hypergraph.n} hyperedges={len(hypergraph)} weight={weight(hypergraph)} "
          f"(q={q}) to {args.output}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        hypergraph = load_hypergraph(args.input)
        witness = find_berge_cycle(hypergraph, args.k)
    except (OSError, FormatError, ValueError) as exc:
        return _fail(str(exc))
    if witness is None:
        print(f"Berge-C{args.k}-free", file=sys.stderr)
        return EXIT_OK
    print(dumps_canonical(witness.to_json_dict()), end="")
    return EXIT_FOUND


def cmd_embed(args: argparse.Namespace) -> int:
    try:
        hypergraph = load_hypergraph(args.input)
    except (OSError, FormatError) as exc:
        return _fail(str(exc))
    colored = build_embedded_graph(hypergraph)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(colored.to_json_dict()))
    except OSError as exc:
        return _fail(str(exc))
    print(f"wrote {len(colored.colored_edges)} colored edges to {args.output}",
          file=sys.stderr)
    return EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    try:
        hypergraph = load_hypergraph(args.input)
    except (OSError, FormatError) as exc:
        return _fail(str(exc))
    vertices = None
    if args.sample is not None:
        rng = random.Random(args.seed)
        count = min(args.sample, hypergraph.n)
        vertices = sorted(rng.sample(range(hypergraph.n), count))
    try:
        suite = verify_lemma_suite(hypergraph, vertices=vertices)
    except NotBergeC4FreeError as exc:
        print(dumps_canonical({"berge_c4_witness": exc.witness.to_json_dict()}), end="")
        return EXIT_FOUND
    observation = verify_observation1(build_embedded_graph(hypergraph))
    report = {
        "seed": args.seed,
        "sample": args.sample,
        "observation1": observation.to_json_dict(),
        "lemma_suite": suite.to_json_dict(),
    }
    print(dumps_canonical(report), end="")
    return EXIT_OK if observation.ok and suite.ok else EXIT_FOUND


def cmd_search(args: argparse.Namespace) -> int:
    try:
        start = time.perf_counter()
        result = max_weight_exact(
            args.n,
            max_mult=args.max_mult,
            pruned=not args.unpruned,
            allow_large=args.allow_large,
        )
        elapsed = time.perf_counter() - start
    except ValueError as exc:
        return _fail(str(exc))
    record = {
        "n": result.n,
        "best_weight": result.best_weight,
        "witness": result.witness.to_json_dict(),
        "nodes_explored": result.nodes_explored,
        "exhaustive": result.exhaustive,
        "max_mult": args.max_mult,
        "pruned": not args.unpruned,
        "wall_time_s": round(elapsed, 6),
    }
    try:
        with open(args.output, "a", encoding="utf-8") as fh:
            fh.write(dumps_canonical(record))
    except OSError as exc:
        return _fail(str(exc))
    print(f"n={result.n} best_weight={result.best_weight} "
          f"nodes={result.nodes_explored} ({elapsed:.3f}s) -> {args.output}",
          file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        values = [int(part) for part in args.n.split(",") if part != ""]
    except ValueError:
        return _fail(f"--n wants a comma-separated integer list, got {args.n!r}")
    print("asymptotic comparators (o(1) terms dropped)", file=sys.stderr)
    header = f"{'n':>6} {'upper':>12} {'lower':>12} {'exact':>7} {'construction':>13} {'ratio':>8}"
    print(header)
    for n in values:
        if n < 0:
            return _fail(f"n must be >= 0, got {n}")
        upper, lower = theoretical_bounds(n)
        exact = ""
        if n <= 5:
            exact = str(max_weight_exact(n).best_weight)
        construction = ""
        ratio = ""
        if n >= 42:
            built = lower_bound_construction(n)
            construction = str(built.weight)
            ratio = f"{built.achieved_ratio:.4f}"
        print(f"{n:>6} {upper:>12.2f} {lower:>12.2f} {exact:>7} {construction:>13} {ratio:>8}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berge",
        description="Construct, detect, and verify Berge-C4-free hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a plane blow-up hypergraph as JSON")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=int, help="prime plane order; n becomes 6(q^2+q+1)")
    group.add_argument("--n", type=int, help="target vertex count (>= 42); pads with isolated vertices")
    p.add_argument("--certify", action="store_true",
                   help="run the blow-up certificate and, size permitting, the direct detector")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exit 0 iff the hypergraph is Berge-Ck-free")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("embed", help="write the embedded colored graph as JSON")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("lemmas", help="run the observation and lemma verifiers")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--sample", type=int, default=None,
                   help="check a seeded sample of this many vertices instead of all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("search", help="exact extremal weight for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--unpruned", action="store_true",
                   help="disable the admissible bound (cross-check mode)")
    p.add_argument("--allow-large", action="store_true",
                   help="override the n <= 7 guard")
    p.add_argument("-o", "--output", default="search_results.jsonl",
                   help="JSON-lines results file (appended)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="tabulate asymptotic comparators per n")
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
