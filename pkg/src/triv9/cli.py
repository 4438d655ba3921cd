"""Command-line interface.

Commands: classify, jordan, sl2, rank, weyl, canonical, h1, h2,
solve-cocycle, verify, dump.  Exit codes: 0 success/pass, 1 verification
failure, 2 usage error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import cache


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="triv9",
        description="Exact classification toolkit for trivectors of R^9/C^9 under SL(9)",
    )
    parser.add_argument("--format", choices=["human", "machine"], default="human")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--cache", default=None, help="cache directory")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("classify", help="classify a trivector")
    p.add_argument("trivector")

    p = sub.add_parser("jordan", help="homogeneous Jordan decomposition")
    p.add_argument("trivector")

    p = sub.add_parser("sl2", help="homogeneous sl2-triple through a nilpotent trivector")
    p.add_argument("trivector")

    p = sub.add_parser("rank", help="rank of a trivector")
    p.add_argument("trivector")

    p = sub.add_parser("weyl", help="little Weyl group facts")
    p.add_argument("--order", action="store_true")
    p.add_argument("--dump", action="store_true", help="emit the 40 generator matrices")

    p = sub.add_parser("canonical", help="canonical set of a Cartan-subspace point")
    p.add_argument("coords", help="four rational coordinates on p1..p4, comma separated")

    p = sub.add_parser("h1", help="first Galois cohomology of a described group")
    p.add_argument("file", help="group description file")

    p = sub.add_parser("h2", help="second Galois cohomology data of a described torus")
    p.add_argument("file")
    p.add_argument("--element", default=None,
                   help="order-2 fixed point as comma-separated 0/1 exponents")

    p = sub.add_parser("solve-cocycle", help="find g in SL(9) with g^-1 conj(g) = a")
    p.add_argument("file", help="file holding the cocycle matrix in the matrix syntax")

    p = sub.add_parser("verify", help="verify catalog records")
    p.add_argument("--tables", default="builtin", help="'builtin' or a record file path")
    p.add_argument("--catalog", default=None, help="alias of --tables with a path")
    p.add_argument("--points", type=int, default=3, help="parameter points per family")
    p.add_argument("--family", default=None, help="restrict to one family tag")
    p.add_argument("--replays", action="store_true", help="also run worked-example replays")

    p = sub.add_parser("dump", help="emit structure data")
    p.add_argument("what", choices=["structure"])

    args = parser.parse_args(argv)
    if args.cache:
        cache.set_cache_dir(args.cache)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return _dispatch(args)
    except BrokenPipeError:
        return 0


def _out(args, pairs) -> None:
    if args.format == "machine":
        print(" ".join(f"{k}={v}" for k, v in pairs))
    else:
        for k, v in pairs:
            print(f"{k} = {v}")


def _dispatch(args) -> int:
    cmd = args.command
    if cmd in ("classify", "jordan", "sl2", "rank"):
        from .trivector import TrivectorParseError, parse_trivector

        try:
            t = parse_trivector(args.trivector)
        except (TrivectorParseError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return _trivector_command(args, cmd, t)

    if cmd == "weyl":
        from .cartan import build_cartan, weyl_group

        if args.dump:
            data = build_cartan()
            from .scalar import format_scalar

            for refl in data.reflections:
                rows = ";".join(
                    ",".join(format_scalar(x) for x in row) for row in refl.matrix
                )
                print(rows)
            return 0
        W = weyl_group()
        _out(args, [("order", W.order)])
        return 0

    if cmd == "canonical":
        from .cartan import canonical_family

        try:
            coords = [Fraction(x) for x in args.coords.split(",")]
            if len(coords) != 4:
                raise ValueError("need 4 coordinates")
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        k = canonical_family(coords)
        _out(args, [("family", k)])
        return 0

    if cmd == "h1":
        from .galois import NeedsManualFiberData, h1_finite, h1_mixed, h1_torus, parse_gamma_group

        with open(args.file) as fh:
            G = parse_gamma_group(fh.read())
        try:
            if G.torus is not None and (G.finite_generators or G.component_rep):
                classes = h1_mixed(G)
            elif G.torus is not None:
                classes = h1_torus(G.torus.involution, G.torus)
            else:
                classes = h1_finite(G)
        except NeedsManualFiberData as exc:
            print(f"needs manual fiber data: {exc}", file=sys.stderr)
            return 1
        _out(args, [("classes", len(classes))])
        for c in classes:
            print(f"  [{c.class_id}] {c.label or c.representative}")
        return 0

    if cmd == "h2":
        from .galois import h2_torus_class_trivial, parse_gamma_group

        with open(args.file) as fh:
            G = parse_gamma_group(fh.read())
        if G.torus is None:
            print("error: h2 needs a torus section", file=sys.stderr)
            return 2
        if args.element:
            m = [int(x) for x in args.element.split(",")]
            triv = h2_torus_class_trivial(G.torus.involution, m)
            _out(args, [("trivial", triv)])
            return 0
        _out(args, [("rank", G.torus.rank)])
        return 0

    if cmd == "solve-cocycle":
        from .galois import SearchBudgetExhausted, _parse_matrix, solve_cocycle_sl9
        from .scalar import format_scalar

        with open(args.file) as fh:
            a = _parse_matrix(fh.read().strip())
        try:
            g = solve_cocycle_sl9(a, seed=args.seed)
        except SearchBudgetExhausted as exc:
            print(f"search budget exhausted; solution-space dimension "
                  f"{len(exc.basis or [])}", file=sys.stderr)
            return 3
        for row in g:
            print(",".join(format_scalar(x) for x in row))
        return 0

    if cmd == "verify":
        return _verify_command(args)

    if cmd == "dump":
        from . import e8

        _, alg = e8.build()
        sys.stdout.write(e8.dump_structure(alg))
        return 0

    return 2


def _trivector_command(args, cmd, t) -> int:
    from . import e8
    from .classify import ClassifyError, classify, jordan_decompose, sl2_triple
    from .e8 import g1_iso, g1_iso_inv, gm1_iso_inv
    from .trivector import format_trivector, rank as trivector_rank

    if cmd == "rank":
        _out(args, [("rank", trivector_rank(t))])
        return 0
    rs, alg = e8.build()
    if cmd == "classify":
        rep = classify(alg, t)
        if args.format == "machine":
            print(" ".join(rep.lines()))
        else:
            for line in rep.lines():
                print(line)
        return 0
    if cmd == "jordan":
        try:
            xs, xn = jordan_decompose(g1_iso(alg, t))
        except ClassifyError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        _out(args, [
            ("semisimple_part", format_trivector(g1_iso_inv(alg, xs))),
            ("nilpotent_part", format_trivector(g1_iso_inv(alg, xn))),
        ])
        return 0
    if cmd == "sl2":
        try:
            trip = sl2_triple(g1_iso(alg, t))
        except ClassifyError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        from .e8 import psi_inv
        from .scalar import format_scalar

        h = psi_inv(alg, trip.h)
        _out(args, [
            ("e", format_trivector(t)),
            ("h", ";".join(",".join(format_scalar(x) for x in row) for row in h)),
            ("f", format_trivector(gm1_iso_inv(alg, trip.f))),
        ])
        return 0
    return 2


def _verify_command(args) -> int:
    from .catalog import builtin_catalog, load_catalog, replay_all, verify_all

    if args.catalog:
        records = load_catalog(args.catalog)
    elif args.tables == "builtin":
        records = builtin_catalog()
    else:
        records = load_catalog(args.tables)
    if args.family:
        records = [r for r in records if r.family == args.family]
    failures = 0
    total = 0
    if args.replays:
        for c in replay_all():
            total += 1
            mark = "ok  " if c.ok else "FAIL"
            if not c.ok:
                failures += 1
            print(f"{mark} replay {c.name} {c.detail}")

    def progress(rep):
        nonlocal failures, total
        total += 1
        if not rep.ok:
            failures += 1
        if args.format == "machine":
            print(f"record={rep.record} ok={rep.ok}")
        else:
            print(rep.lines()[0])
            if not rep.ok:
                for line in rep.lines()[1:]:
                    print(line)
        sys.stdout.flush()

    verify_all(records, points_per_family=args.points, jobs=args.jobs, progress=progress)
    print(f"{'PASS' if failures == 0 else 'FAIL'}: {total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
