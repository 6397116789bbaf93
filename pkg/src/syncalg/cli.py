"""Command line interface.

Subcommands: gb (complete a basis and print it), nf (normal form of a
polynomial), member (ideal membership), chi-alg and chi-lc (chromatic
invariants with certificates), dim-lc (dimension of a locally commuting
homomorphism algebra), verify-k4 (re-verify the four-color bases of
complete graphs), crosscheck (structural identities plus seeded random
membership spot checks).

Exit codes: 0 success / verification passed, 1 a verification or check
failed, 2 usage error (bad arguments or a malformed input file).

Reports are deterministic key = value lines; --format kv emits key=value
lines and appends wall_time, which is the only nondeterministic field.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from typing import Sequence

from .freealg import DegLexOrder, Poly, parse_poly, poly_to_text
from .games import game_ideal, lc_ideal
from .graphs import Graph, complete_graph, coloring_game, parse_graph
from .ncgb import (
    GroebnerBasis,
    basis_from_text,
    basis_to_text,
    complete,
    is_member,
    normal_form,
)
from .chromatic import (
    ChromaticResult,
    chi_alg,
    chi_lc,
    coloring_ideal,
    dim_lc,
    homomorphism_ideal,
    structural_crosschecks,
    verify_k4_groebner,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# instances with more letters than this need --unbounded
LETTER_CAP = 48


class UsageError(Exception):
    pass


def _read_file(path: str, what: str) -> str:
    if not os.path.isfile(path):
        raise UsageError(f"{what} file not found: {path}")
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    text = _read_file(path, "graph")
    try:
        return parse_graph(text)
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_basis(path: str) -> GroebnerBasis:
    text = _read_file(path, "basis")
    try:
        return basis_from_text(text)
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None


def _emit(pairs: list[tuple[str, str]], fmt: str) -> None:
    sep = "=" if fmt == "kv" else " = "
    for k, v in pairs:
        sys.stdout.write(f"{k}{sep}{v}\n")


def _chi_pairs(path: str, res: ChromaticResult) -> list[tuple[str, str]]:
    cert = res.upper_certificate
    for low in res.lower_certificates:
        cert += "; lower " + low.describe()
    degrees = ",".join(f"{c}:{d}" for c, d in res.degrees) or "-"
    return [
        ("graph", path),
        ("invariant", res.invariant),
        ("lo", str(res.lo)),
        ("hi", str(res.hi)),
        ("certificate", cert),
        ("degrees", degrees),
    ]


def _guard_size(g: Graph, colors: int, unbounded: bool) -> None:
    if unbounded:
        return
    if g.vertices * colors > LETTER_CAP:
        raise UsageError(
            f"instance has {g.vertices * colors} generators, above the safety"
            f" cap {LETTER_CAP}; pass --unbounded to run it anyway"
        )


def _make_spec(args):
    g = _load_graph(args.graph)
    if getattr(args, "target", None):
        h = _load_graph(args.target)
        _guard_size(g, h.vertices, args.unbounded)
        return homomorphism_ideal(g, h, args.flavor)
    if args.colors < 1:
        raise UsageError("colors must be at least 1")
    _guard_size(g, args.colors, args.unbounded)
    return coloring_ideal(g, args.colors, args.flavor)


def cmd_gb(args) -> int:
    out_dir = os.path.dirname(os.path.abspath(args.out)) if args.out else None
    if out_dir is not None and not os.path.isdir(out_dir):
        raise UsageError(f"output directory not found: {out_dir}")
    spec = _make_spec(args)
    order = DegLexOrder(spec.alphabet)
    gb = complete(spec.generators, order, args.max_degree, args.threads)
    text = basis_to_text(gb)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_nf(args) -> int:
    basis = _load_basis(args.basis)
    alphabet = basis.order.alphabet
    try:
        p = parse_poly(args.poly, alphabet)
    except ValueError as e:
        raise UsageError(f"polynomial: {e}") from None
    q = basis.normal_form(p)
    sys.stdout.write(poly_to_text(q, alphabet, basis.order) + "\n")
    return EXIT_OK


def cmd_member(args) -> int:
    basis = _load_basis(args.basis)
    alphabet = basis.order.alphabet
    try:
        p = parse_poly(args.poly, alphabet)
    except ValueError as e:
        raise UsageError(f"polynomial: {e}") from None
    verdict = is_member(p, basis)
    _emit([("verdict", verdict.kind)], args.format)
    return EXIT_OK if verdict.kind == "member" else EXIT_FAIL


def cmd_chi(args, which: str) -> int:
    g = _load_graph(args.graph)
    _guard_size(g, 4, args.unbounded)
    t0 = time.monotonic()
    fn = chi_alg if which == "chi_alg" else chi_lc
    res = fn(g, args.max_degree, args.threads)
    wall = time.monotonic() - t0
    pairs = _chi_pairs(args.graph, res)
    if args.format == "kv":
        pairs.append(("wall_time", f"{wall:.3f}s"))
    _emit(pairs, args.format)
    if args.format == "text":
        for note in res.notes:
            sys.stdout.write(f"# {note}\n")
    return EXIT_OK


def cmd_dim_lc(args) -> int:
    g = _load_graph(args.graph)
    if args.target:
        h = _load_graph(args.target)
    elif args.colors is not None:
        if args.colors < 1:
            raise UsageError("colors must be at least 1")
        h = complete_graph(args.colors)
    else:
        raise UsageError("dim-lc needs --colors or --target")
    _guard_size(g, h.vertices, args.unbounded)
    t0 = time.monotonic()
    rep = dim_lc(g, h, args.max_degree, threads=args.threads)
    wall = time.monotonic() - t0
    if rep.dim.kind == "finite":
        dim = str(rep.dim.count)
    else:
        dim = rep.dim.kind
    cert = f"basis {rep.status} with {rep.rules} rules"
    if rep.predicted is not None:
        word = "agrees" if rep.agrees else "DISAGREES"
        cert += f"; structural prediction {rep.predicted} {word}"
    else:
        cert += "; no structural prediction applies"
    pairs = [
        ("graph", args.graph),
        ("invariant", "dim_lc"),
        ("lo", dim),
        ("hi", dim),
        ("certificate", cert),
        ("degrees", f"{h.vertices}:{rep.max_rule_degree}"),
    ]
    if args.format == "kv":
        pairs.append(("wall_time", f"{wall:.3f}s"))
    _emit(pairs, args.format)
    return EXIT_FAIL if rep.hard_failure else EXIT_OK


def cmd_verify_k4(args) -> int:
    if args.n is not None:
        if not 3 <= args.n <= 6:
            raise UsageError("n must be between 3 and 6")
        ns = [args.n]
    else:
        ns = [3, 4, 5, 6]
    all_passed = True
    first = True
    for n in ns:
        if not first:
            sys.stdout.write("\n")
        first = False
        t0 = time.monotonic()
        rep = verify_k4_groebner(n, threads=args.threads)
        wall = time.monotonic() - t0
        all_passed = all_passed and rep.passed
        pairs = [
            ("n", str(rep.n)),
            ("family_counts", ",".join(str(c) for c in rep.family_counts)),
            ("s_polynomials", str(rep.spolys_checked)),
            ("s_polynomials_all_zero", str(rep.spolys_all_zero).lower()),
            ("generators_reduce_to_zero", str(rep.generators_reduce_to_zero).lower()),
            ("families_certified_in_ideal", str(rep.families_certified_in_ideal).lower()),
            ("reduced_basis_size", str(rep.reduced_basis_size)),
            ("reduced_match", str(rep.reduced_match).lower()),
            ("unit_absent", str(rep.unit_absent).lower()),
            ("passed", str(rep.passed).lower()),
        ]
        if args.format == "kv":
            pairs.append(("wall_time", f"{wall:.3f}s"))
        _emit(pairs, args.format)
    return EXIT_OK if all_passed else EXIT_FAIL


def cmd_crosscheck(args) -> int:
    checks = structural_crosschecks(args.max_degree)
    rng = random.Random(args.seed)
    spec = coloring_ideal(complete_graph(2), 3)
    order = DegLexOrder(spec.alphabet)
    gb = complete(spec.generators, order, args.max_degree)
    letters = list(spec.alphabet.letters())
    bad = 0
    for _ in range(args.samples):
        g = rng.choice(spec.generators)
        a = "".join(rng.choice(letters) for _ in range(rng.randrange(0, 2)))
        b = "".join(rng.choice(letters) for _ in range(rng.randrange(0, 2)))
        p = Poly({a: 1}) * g * Poly({b: 1})
        if gb.normal_form(p):
            bad += 1
    ok = bad == 0
    all_passed = ok and all(c.passed for c in checks)
    if args.format == "kv":
        for c in checks:
            sys.stdout.write(f"{c.name}={str(c.passed).lower()}\n")
        sys.stdout.write(f"random-ideal-members={str(ok).lower()}\n")
    else:
        for c in checks:
            tag = "PASS" if c.passed else "FAIL"
            sys.stdout.write(f"{tag}  {c.name}: {c.detail}\n")
        tag = "PASS" if ok else "FAIL"
        sys.stdout.write(
            f"{tag}  random-ideal-members: {args.samples} seeded products"
            f" of generators, {bad} failures (seed {args.seed})\n"
        )
    return EXIT_OK if all_passed else EXIT_FAIL


def _add_common(p: argparse.ArgumentParser, threads: bool = True) -> None:
    p.add_argument("--max-degree", type=int, default=12,
                   help="degree bound for completion (default 12, minimum 2)")
    if threads:
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for reduction (default 1)")
    p.add_argument("--format", choices=("text", "kv"), default="text",
                   help="text: 'key = value' report; kv: 'key=value' plus wall_time")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="syncalg",
        description="two-sided Groebner bases and chromatic invariants of"
        " synchronous game algebras over the rationals",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="complete a game ideal and print the basis")
    p.add_argument("--graph", required=True, help="graph file (p edge format)")
    p.add_argument("--colors", type=int, default=None, help="number of colors")
    p.add_argument("--target", default=None, help="target graph file for a homomorphism ideal")
    p.add_argument("--flavor", choices=("plain", "locally-commuting"), default="plain")
    p.add_argument("--out", default=None, help="write the basis here instead of stdout")
    p.add_argument("--unbounded", action="store_true", help="lift the instance size cap")
    _add_common(p)

    p = sub.add_parser("nf", help="normal form of a polynomial modulo a basis")
    p.add_argument("--basis", required=True, help="basis file written by gb")
    p.add_argument("poly", help="polynomial text, e.g. 'x[0,1]*x[1,0] - 1/2*x[0,1]'")
    p.add_argument("--format", choices=("text", "kv"), default="text")

    p = sub.add_parser("member", help="ideal membership (exit 0 iff member)")
    p.add_argument("--basis", required=True, help="basis file written by gb")
    p.add_argument("poly", help="polynomial text")
    p.add_argument("--format", choices=("text", "kv"), default="text")

    p = sub.add_parser("chi-alg", help="algebraic chromatic number with certificates")
    p.add_argument("--graph", required=True)
    p.add_argument("--unbounded", action="store_true", help="lift the instance size cap")
    _add_common(p)

    p = sub.add_parser("chi-lc", help="locally commuting chromatic number with certificates")
    p.add_argument("--graph", required=True)
    p.add_argument("--unbounded", action="store_true", help="lift the instance size cap")
    _add_common(p)

    p = sub.add_parser("dim-lc", help="dimension of a locally commuting homomorphism algebra")
    p.add_argument("--graph", required=True)
    p.add_argument("--colors", type=int, default=None,
                   help="map into the complete graph with this many vertices")
    p.add_argument("--target", default=None, help="target graph file")
    p.add_argument("--unbounded", action="store_true", help="lift the instance size cap")
    _add_common(p)

    p = sub.add_parser("verify-k4", help="re-verify the four-color bases of complete graphs")
    p.add_argument("--n", type=int, default=None, help="one size in 3..6 (default: all)")
    _add_common(p)

    p = sub.add_parser("crosscheck", help="structural identities and seeded membership checks")
    p.add_argument("--seed", type=int, default=0, help="seed for the random spot checks")
    p.add_argument("--samples", type=int, default=200,
                   help="number of random products to check (default 200)")
    _add_common(p, threads=False)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "max_degree", 12) < 2:
        sys.stderr.write("error: max degree must be at least 2\n")
        return EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        sys.stderr.write("error: threads must be at least 1\n")
        return EXIT_USAGE
    try:
        if args.command == "gb":
            if args.colors is None and args.target is None:
                raise UsageError("gb needs --colors or --target")
            return cmd_gb(args)
        if args.command == "nf":
            return cmd_nf(args)
        if args.command == "member":
            return cmd_member(args)
        if args.command == "chi-alg":
            return cmd_chi(args, "chi_alg")
        if args.command == "chi-lc":
            return cmd_chi(args, "chi_lc")
        if args.command == "dim-lc":
            return cmd_dim_lc(args)
        if args.command == "verify-k4":
            return cmd_verify_k4(args)
        if args.command == "crosscheck":
            return cmd_crosscheck(args)
        raise AssertionError("unreachable")
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
