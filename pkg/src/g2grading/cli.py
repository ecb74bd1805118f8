"""Command-line front end.

JSON goes to standard output, human-readable logging to standard error.
Exit codes: 0 success, 1 verification or consistency failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import octonion
from .abelian import AbelianGroup, characters
from .catalog import GradingDescriptor, canonical_c_grading
from .classify import classify_c_grading, iso_check
from .derivations import bracket, derivation_space, span_check
from .errors import G2GradingError, InconsistencyError
from .grading import OCTONION, Grading, character_automorphism, induce_on_L, verify_grading
from .octonion import Octonion, norm, oct_mul
from .scalar import format_scalar

log = logging.getLogger("g2grading")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, path, report):
        self.path = path
        self.report = report
        super().__init__(f"{path}: {report.reason}")


def _emit(payload, out: str | None = None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text + "\n")


def parse_group(text: str) -> AbelianGroup:
    text = text.strip()
    if not text:
        return AbelianGroup(())
    try:
        factors = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"group must be a comma-separated list of integers, got {text!r}") from None
    return AbelianGroup(factors)


def parse_param(text: str, group: AbelianGroup):
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise InputError(f"parameters look like name=[r1,...], got {text!r}")
    value = value.strip()
    try:
        residues = json.loads(value) if value.startswith("[") else [int(t) for t in value.split(",")]
    except (ValueError, json.JSONDecodeError):
        raise InputError(f"cannot parse residues in {text!r}") from None
    if not isinstance(residues, list) or not all(isinstance(r, int) for r in residues):
        raise InputError(f"residues must be integers in {text!r}")
    return name.strip(), group.element(residues)


def load_grading(path: str) -> Grading:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path} does not hold a grading object")
    return Grading.from_json(data)


def _load_verified(path: str) -> Grading:
    G = load_grading(path)
    report = verify_grading(G)
    if not report.ok:
        raise VerificationFailed(path, report)
    return G


# -- commands -----------------------------------------------------------------

def cmd_selfcheck(args) -> int:
    checks = []

    def run(name, fn):
        try:
            lines = fn()
            checks.append({"name": name, "ok": True, "details": lines})
            for line in lines:
                log.info("%s: %s", name, line)
        except InconsistencyError as exc:
            checks.append({"name": name, "ok": False, "details": [str(exc)]})
            log.error("%s FAILED: %s", name, exc)

    run("multiplication table", lambda: octonion.check_table().lines())

    def der():
        L = derivation_space()
        for A in L:
            for B in L:
                if not L.contains(bracket(A, B)):
                    raise InconsistencyError("Der(C) is not closed under the bracket")
        return [f"dim Der(C) = {L.dim}", "bracket closure verified on all basis pairs"]

    run("derivation algebra", der)
    run("spanning set", lambda: span_check().lines())

    def composition():
        basis = [Octonion.basis(i) for i in range(octonion.DIM)]
        for x in basis:
            for y in basis:
                if norm(oct_mul(x, y)) != norm(x) * norm(y):
                    raise InconsistencyError(f"composition law fails on {x}, {y}")
        rng = random.Random(args.seed)
        for _ in range(args.samples):
            x = Octonion(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)))
            y = Octonion(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(8)))
            if norm(oct_mul(x, y)) != norm(x) * norm(y):
                raise InconsistencyError(f"composition law fails on {x}, {y}")
        return [f"norm(xy) = norm(x)norm(y) on 64 basis pairs and {args.samples} random pairs"]

    run("composition law", composition)
    ok = all(c["ok"] for c in checks)
    _emit({"ok": ok, "checks": checks})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_new(args) -> int:
    group = parse_group(args.group)
    params = dict(parse_param(p, group) for p in args.param or [])
    d = GradingDescriptor(args.type, params)
    G = canonical_c_grading(d, group)
    payload = G.to_json()
    payload["descriptor"] = d.to_json()
    _emit(payload, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = load_grading(args.file)
    report = verify_grading(G)
    _emit(report.to_json())
    if not report.ok:
        log.error("%s: %s", args.file, report.reason)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_induce(args) -> int:
    G = _load_verified(args.file)
    if G.ambient != OCTONION:
        raise InputError("induce needs an octonion grading")
    L = induce_on_L(G)
    report = verify_grading(L)
    if not report.ok:
        raise InconsistencyError(f"induced grading fails verification: {report.reason}")
    _emit(L.to_json(), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    G = _load_verified(args.file)
    if G.ambient != OCTONION:
        raise InputError("classify needs an octonion grading")
    _emit(classify_c_grading(G).to_json())
    return EXIT_OK


def cmd_iso(args) -> int:
    G1 = _load_verified(args.first)
    G2 = _load_verified(args.second)
    _emit(iso_check(G1, G2).to_json())
    return EXIT_OK


def cmd_chars(args) -> int:
    group = parse_group(args.group)
    G = None
    if args.grading:
        G = _load_verified(args.grading)
        if G.group != group:
            raise InputError(f"grading is over {G.group}, not {group}")
    gens = group.generators()
    out = []
    for chi in characters(group):
        entry = {
            "exponents": chi.to_json(),
            "values_on_generators": [format_scalar(chi(g)) for g in gens],
        }
        if G is not None:
            A = character_automorphism(G, chi)
            entry["matrix"] = [[format_scalar(x) for x in row] for row in A]
        out.append(entry)
    _emit({"group": group.to_json(), "characters": out})
    return EXIT_OK


def cmd_table(args) -> int:
    if args.json:
        table = [
            [None if c is None else ("-" if c[0] < 0 else "") + octonion.BASIS_NAMES[c[1]] for c in row]
            for row in octonion.MULT_TABLE
        ]
        _emit({"basis": list(octonion.BASIS_NAMES), "table": table})
    else:
        sys.stdout.write(octonion.format_table() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2grading", description="Gradings of the split octonions and of G2.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("selfcheck", help="verify the algebraic core")
    s.add_argument("--samples", type=int, default=200, help="random pairs for the composition law")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selfcheck)

    g = sub.add_parser("grading", help="build, verify, induce, classify and compare gradings")
    gsub = g.add_subparsers(dest="action", required=True)

    n = gsub.add_parser("new", help="canonical octonion grading of a given type")
    n.add_argument("--type", type=int, required=True, choices=range(1, 10))
    n.add_argument("--group", required=True, help="cyclic factor orders, e.g. 4,2")
    n.add_argument("--param", action="append", help="name=[r1,...], repeatable")
    n.add_argument("-o", "--out")
    n.set_defaults(func=cmd_new)

    v = gsub.add_parser("verify")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    i = gsub.add_parser("induce", help="induced grading of G2")
    i.add_argument("file")
    i.add_argument("-o", "--out")
    i.set_defaults(func=cmd_induce)

    c = gsub.add_parser("classify")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    iso = gsub.add_parser("iso")
    iso.add_argument("first")
    iso.add_argument("second")
    iso.set_defaults(func=cmd_iso)

    ch = sub.add_parser("chars", help="characters of a group, optionally acting on a grading")
    ch.add_argument("--group", required=True)
    ch.add_argument("--grading")
    ch.set_defaults(func=cmd_chars)

    t = sub.add_parser("table", help="print the multiplication table")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose or args.command == "selfcheck" else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.func(args)
    except VerificationFailed as exc:
        log.error("%s", exc)
        _emit({"ok": False, "file": exc.path, **exc.report.to_json()})
        return EXIT_FAIL
    except InconsistencyError as exc:
        log.error("%s", exc)
        return EXIT_FAIL
    except (InputError, G2GradingError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
