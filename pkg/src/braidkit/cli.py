"""Command-line front end.

Subcommands map one-to-one onto library operations: `nf`, `verify`, `braid`,
`R`, `transmute`, `bosonise`, `biproduct`, `smashcop`, `export`, `catalog`.
Algebra arguments name catalog entries or paths to definition files.  Exit
codes: 0 ok, 1 verification failure, 2 parse or usage error, 3 internal
(budget or confluence) error.
"""

import argparse
import os
import sys

from . import catalog, deffile, verify
from .constructions import (
    BiproductInput,
    TransmutedAlgebra,
    adjoint_coaction,
    biproduct,
    bosonise,
    braided_smash_coproduct,
    transmuted_product,
)
from .errors import (
    BraidkitError,
    CompletionBudgetExceeded,
    CrossedModuleViolation,
    NonTerminating,
    ParseError,
    UnknownEntry,
    UnknownGenerator,
    VerificationFailed,
)
from .structuremap import BraidedHopf, ComoduleAlgebra, DqtHopf, braiding

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="exact computation with braided Hopf algebras and their bosonisations",
    )
    parser.add_argument("--degree", type=int, default=None,
                        help="override word-length bounds of the check suites "
                             "(also via BRAIDKIT_DEGREE)")
    parser.add_argument("--json", action="store_true", help="emit reports as JSON")
    parser.add_argument("--no-verify", action="store_true",
                        help="skip verification when loading definition files")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list built-in algebras")

    cmd = sub.add_parser("export", help="print a definition file for an algebra")
    cmd.add_argument("name")

    cmd = sub.add_parser("nf", help="normal form of an element")
    cmd.add_argument("algebra")
    cmd.add_argument("element")

    cmd = sub.add_parser("verify", help="run the verification suite for an algebra")
    cmd.add_argument("algebra")

    cmd = sub.add_parser("braid", help="braiding of two generators/elements")
    cmd.add_argument("args", nargs="+",
                     help="V u w (braid within V) or V W u w (braid V with W)")

    cmd = sub.add_parser("R", help="evaluate the dqt functional on two elements")
    cmd.add_argument("hopf")
    cmd.add_argument("u")
    cmd.add_argument("v")

    cmd = sub.add_parser("transmute", help="transmuted products and adjoint coactions")
    cmd.add_argument("hopf")

    for name, text in (
        ("bosonise", "smash products/coproducts of the bosonisation"),
        ("biproduct", "biproduct from the induced crossed-module data"),
        ("smashcop", "braided smash coproduct: cross relations and coproducts"),
    ):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("hopf")
        cmd.add_argument("braided")
    return parser


def load_any(name, do_verify=True):
    if os.path.sep in name or name.endswith(".alg") or os.path.exists(name):
        with open(name, "r", encoding="utf-8") as handle:
            text = handle.read()
        _, bundle = deffile.parse_definition(
            text, resolver=lambda over: catalog.load(over, verify=False),
            verify=do_verify,
        )
        return bundle
    return catalog.load(name, verify=do_verify)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    if args.degree is None:
        env = os.environ.get("BRAIDKIT_DEGREE")
        if env:
            args.degree = int(env)
    try:
        return _dispatch(args)
    except (ParseError, UnknownGenerator, UnknownEntry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailed as exc:
        report = exc.report
        print(report.to_json() if args.json else str(report))
        return EXIT_VERIFY
    except CrossedModuleViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (NonTerminating, CompletionBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BraidkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _dispatch(args):
    do_verify = not args.no_verify
    if args.command == "catalog":
        for name in catalog.NAMES:
            entry = catalog.ENTRIES[name]
            print(f"{name:12s} {entry.kind:17s} {entry.description}")
        return EXIT_OK

    if args.command == "export":
        bundle = load_any(args.name, do_verify=False)
        print(deffile.export_definition(_entry_name(args.name), bundle))
        return EXIT_OK

    if args.command == "nf":
        bundle = load_any(args.algebra, do_verify=False)
        presentation = getattr(bundle, "presentation", bundle)
        element = deffile.parse_element(args.element, (presentation,))
        print(presentation.normal_form(element))
        return EXIT_OK

    if args.command == "verify":
        bundle = load_any(args.algebra, do_verify=False)
        bounds = verify.CheckBounds.with_degree(args.degree)
        report = verify.verify_bundle(bundle, bounds)
        print(report.to_json() if args.json else str(report))
        return EXIT_OK if report.ok else EXIT_VERIFY

    if args.command == "braid":
        return _run_braid(args)

    if args.command == "R":
        bundle = load_any(args.hopf, do_verify=False)
        if not isinstance(bundle, DqtHopf):
            raise UnknownEntry(f"{args.hopf} does not carry a dqt structure")
        u = deffile.parse_element(args.u, (bundle.presentation,))
        v = deffile.parse_element(args.v, (bundle.presentation,))
        print(bundle.eval_R_elem(u, v))
        return EXIT_OK

    if args.command == "transmute":
        H = load_any(args.hopf, do_verify=do_verify)
        if not isinstance(H, DqtHopf):
            raise UnknownEntry(f"{args.hopf} does not carry a dqt structure")
        for g in H.presentation.gens:
            image = adjoint_coaction(H, H.presentation.gen(g))
            print(f"coaction {g} = {image}")
        for g in H.presentation.gens:
            for h in H.presentation.gens:
                value = transmuted_product(H, H.presentation.gen(g), H.presentation.gen(h))
                print(f"{g} . {h} = {value}")
        return EXIT_OK

    H = load_any(args.hopf, do_verify=do_verify)
    B = load_any(args.braided, do_verify=do_verify)
    if not isinstance(B, BraidedHopf):
        raise UnknownEntry(f"{args.braided} is not a braided Hopf algebra")

    if args.command in ("bosonise", "biproduct"):
        if args.command == "bosonise":
            bundle = bosonise(H, B)
        else:
            bundle = biproduct(BiproductInput.from_induced(H, B))
        gens = _smash_generators(bundle, H, B)
        for name, el in gens:
            print(f"Delta({name}) = {bundle.coproduct(el)}")
        for name1, el1 in gens:
            for name2, el2 in gens:
                print(f"{name1} . {name2} = {bundle.product(el1, el2)}")
        return EXIT_OK

    if args.command == "smashcop":
        bundle = braided_smash_coproduct(H, B)
        gens = _smash_generators(bundle, H, B)
        for name, el in gens:
            print(f"Delta({name}) = {bundle.coproduct(el)}")
        for bname in B.presentation.gens:
            bel = B.presentation.gen(bname).embed(bundle.signature, (1,))
            for hname in H.presentation.gens:
                hel = H.presentation.gen(hname).embed(bundle.signature, (0,))
                print(f"{bname} . {hname} = {bundle.product(bel, hel)}")
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


def _run_braid(args):
    parts = args.args
    if len(parts) == 3:
        vname, wname = parts[0], parts[0]
        utext, wtext = parts[1], parts[2]
    elif len(parts) == 4:
        vname, wname = parts[0], parts[1]
        utext, wtext = parts[2], parts[3]
    else:
        raise ParseError("braid expects `V u w` or `V W u w`")
    V = _comodule(load_any(vname, do_verify=False), vname)
    W = _comodule(load_any(wname, do_verify=False), wname)
    u = deffile.parse_element(utext, (V.presentation,))
    w = deffile.parse_element(wtext, (W.presentation,))
    print(braiding(V, W, u @ w))
    return EXIT_OK


def _comodule(bundle, name):
    if isinstance(bundle, BraidedHopf):
        return bundle.carrier
    if isinstance(bundle, ComoduleAlgebra):
        return bundle
    if isinstance(bundle, DqtHopf):
        return TransmutedAlgebra(bundle)
    raise UnknownEntry(f"{name} does not carry a coaction")


def _smash_generators(bundle, H, B):
    gens = []
    for g in H.presentation.gens:
        gens.append((g, H.presentation.gen(g).embed(bundle.signature, (0,))))
    for g in B.presentation.gens:
        gens.append((g, B.presentation.gen(g).embed(bundle.signature, (1,))))
    return gens


def _entry_name(name):
    if os.path.sep in name or name.endswith(".alg"):
        return os.path.splitext(os.path.basename(name))[0]
    return name


if __name__ == "__main__":
    sys.exit(main())
