"""Command-line frontend: verification suites and ad-hoc computations."""

from __future__ import annotations

import argparse
import sys

from .catalog import catalog_group, load_catalog
from .complexes import order_complex, poset_f_vector, reduced_betti
from .cosets import build_coset_poset, build_relative_poset
from .groups import PermutationGroup
from .lattice import enumerate_subgroups, lattice_dump, moebius_to_top
from .perm import parse_permutation_list
from .suite import ALL_SUITES, SuiteConfig, run_suite
from .zeta import evaluate, hall_polynomial, poset_moebius_hat


def _add_group_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", help="catalog entry name")
    parser.add_argument("--gens", help="inline generators in cycle notation")
    parser.add_argument("--degree", type=int, help="degree for inline generators")
    parser.add_argument("--catalog", help="path to a catalog file")


def _resolve_group(args) -> PermutationGroup:
    if args.group:
        return catalog_group(args.group, getattr(args, "catalog", None))
    if args.gens:
        gens = parse_permutation_list(args.gens, args.degree)
        return PermutationGroup(gens, args.degree or gens[0].degree)
    raise SystemExit("specify --group NAME or --gens CYCLES [--degree N]")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cosetposets",
        description="Coset posets of finite groups: homology, generation "
                    "probabilities, and structure checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", action="append", choices=ALL_SUITES,
                        help="suite to run (repeatable; default: all)")
    verify.add_argument("--catalog", help="path to a catalog file")
    verify.add_argument("--max-order", type=int, default=None)
    verify.add_argument("--prime", type=int, default=2)
    verify.add_argument("--slow", action="store_true",
                        help="include the slow sweeps (the A_10 claim)")
    verify.add_argument("--out", help="write the JSON report here")

    compute = sub.add_parser("compute", help="ad-hoc computations for one group")
    compute.add_argument("what", choices=["homology", "zeta", "poset", "lattice"])
    _add_group_args(compute)
    compute.add_argument("--prime", type=int, default=2)
    compute.add_argument("--relative-to",
                         help="generators of a normal subgroup; restricts the "
                              "poset to cosets Hx with HN = G")

    args = parser.parse_args(argv)

    if args.command == "verify":
        config = SuiteConfig(
            catalog_path=args.catalog,
            suites=tuple(args.suite) if args.suite else ALL_SUITES,
            max_order=args.max_order,
            prime=args.prime,
            slow=args.slow,
        )
        report = run_suite(config)
        for line in report.summary_lines():
            print(line)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(report.to_json())
            print(f"report written to {args.out}")
        return 0 if report.overall == "pass" else 1

    G = _resolve_group(args)
    lat = enumerate_subgroups(G)
    if args.what == "lattice":
        print(lattice_dump(lat, moebius_to_top(lat)), end="")
        return 0
    if args.relative_to:
        N = PermutationGroup(parse_permutation_list(args.relative_to, G.degree), G.degree)
        poset = build_relative_poset(G, N, lat)
    else:
        poset = build_coset_poset(G, lat)
    if args.what == "poset":
        print(poset.dump(), end="")
        return 0
    if args.what == "zeta":
        poly = hall_polynomial(lat, moebius_to_top(lat))
        print("coefficients (index: value):")
        for n, a in poly.coefficients:
            print(f"  {n}: {a}")
        for k in (2, 1, 0, -1):
            print(f"P({k}) = {evaluate(poly, k)}")
        print(f"moebius-hat of the coset poset = {poset_moebius_hat(poset)}")
        return 0
    if args.what == "homology":
        f_vec = poset_f_vector(poset)
        print(f"f-vector (from dim -1): {f_vec}")
        betti = reduced_betti(order_complex(poset), args.prime)
        print(f"reduced Betti numbers over GF({args.prime}):")
        if betti.is_zero():
            print("  all zero (acyclic)")
        for k, v in betti.values:
            print(f"  dim {k}: {v}")
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
