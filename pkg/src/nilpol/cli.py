"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 parse error, 3 internal
invariant breach (an algorithm output that does not verify).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .errors import InvalidGeneratorCount, LieAlgebraError, NilpolError, ParseError, ZariskiViolation
from .free_step2 import build_free_step2, polarize_free
from .lie import LieAlgebra
from .linalg import Subspace
from .textformat import (
    emit_algebra,
    format_combination,
    format_rational,
    parse_algebra,
    parse_functional,
    parse_vectors,
)
from .verify import verify_polarization
from .vergne import PolarizationResult, polarize

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class InvariantBreach(NilpolError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def load_algebra(path: str) -> LieAlgebra:
    """Read an algebra file, ``-`` for stdin, or ``catalog:NAME``."""
    if path.startswith("catalog:"):
        return catalog.get(path[len("catalog:"):]).algebra
    return parse_algebra(_read(path))


def _vector_strings(v) -> list[str]:
    return [format_rational(x) for x in v]


def _checked(g: LieAlgebra, ell, result: PolarizationResult):
    report = verify_polarization(g, ell, result.p_basis)
    if not report.ok:
        raise InvariantBreach(
            f"{result.method.value} output failed verification "
            f"(subalgebra={report.is_subalgebra}, isotropic={report.is_isotropic}, "
            f"dim {report.actual_dim} vs expected {report.expected_dim})"
        )
    if report.expected_dim != g.n - result.orbit_dim // 2:
        raise InvariantBreach("orbit dimension disagrees with rank M(ell)")
    return report


def result_json(g: LieAlgebra, result: PolarizationResult, verified: bool, trace: bool = False, spanning=None) -> dict:
    out = {
        "algebra_dim": g.n,
        "method": result.method.value,
        "p_basis": [_vector_strings(b) for b in result.p_basis.basis],
        "dim_p": result.dim,
        "orbit_dim": result.orbit_dim,
        "verified": verified,
    }
    if spanning is not None:
        out["spanning_set"] = [_vector_strings(v) for v in spanning]
    if trace:
        out["trace"] = [
            {"j": j, "basis": [_vector_strings(b) for b in r.basis]} for j, r in result.per_j_nullspaces
        ]
    return out


def result_text(g: LieAlgebra, result: PolarizationResult, verified: bool, trace: bool = False, spanning=None) -> str:
    names = g.basis_names
    lines = [f"method: {result.method.value}"]
    if spanning is not None:
        lines.append("closed-form spanning set:")
        for v, lead in spanning:
            lines.append(f"  {format_combination(v, names, lead)}")
    lines.append("p(ell) basis (RREF):")
    for b in result.p_basis.basis:
        lines.append(f"  ({', '.join(_vector_strings(b))})  {format_combination(b, names)}")
    lines.append(f"dim p = {result.dim}")
    lines.append(f"orbit dim 2d = {result.orbit_dim}")
    if trace:
        lines.append("trace:")
        for j, r in result.per_j_nullspaces:
            span = ", ".join(format_combination(b, names) for b in r.basis) or "0"
            lines.append(f"  r(ell_{j}) = span{{{span}}}")
    lines.append("verified: " + ("yes" if verified else "no"))
    return "\n".join(lines)


def _emit(args, g, result, spanning=None):
    if args.json:
        sp = [v for v, _ in spanning] if spanning is not None else None
        print(json.dumps(result_json(g, result, True, getattr(args, "trace", False), sp), indent=2))
    else:
        print(result_text(g, result, True, getattr(args, "trace", False), spanning))


def cmd_validate(args) -> int:
    g = load_algebra(args.file)
    print(f"valid: dim {g.n}, center dim {g.center_dim}, {len(g.table)} nonzero brackets")
    return EXIT_OK


def cmd_polarize(args) -> int:
    g = load_algebra(args.file)
    ell = parse_functional(args.ell, g.n)
    result = polarize(g, ell, args.method)
    _checked(g, ell, result)
    _emit(args, g, result)
    return EXIT_OK


def cmd_free_step2(args) -> int:
    g, layout = build_free_step2(args.m)
    text = emit_algebra(g, title=f"free nilpotent step-2 algebra on {args.m} generators")
    if args.emit == "-":
        sys.stdout.write(text)
    elif args.emit:
        Path(args.emit).write_text(text, encoding="utf-8")
        print(f"wrote {args.emit}")
    else:
        print(f"free step-2 algebra, m = {args.m}: dim {layout.n}, center dim {layout.center_dim}")
        print("basis: " + " ".join(g.basis_names))
    return EXIT_OK


def cmd_polarize_free(args) -> int:
    g, layout = build_free_step2(args.m)
    ell = parse_functional(args.ell, g.n)
    try:
        result = polarize_free(layout, ell)
    except ZariskiViolation as exc:
        print(f"warning: {exc}; falling back to the basic algorithm", file=sys.stderr)
        result = polarize(g, ell, "basic")
        _checked(g, ell, result)
        _emit(args, g, result)
        return EXIT_OK
    _checked(g, ell, result)
    # lead with the highest generator, as in Z_j - mu_{j-1}(...)
    spanning = [(v, max(k for k, x in enumerate(v) if x)) for v in result.spanning]
    _emit(args, g, result, spanning)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_algebra(args.file)
    ell = parse_functional(args.ell, g.n)
    P = Subspace.span(parse_vectors(args.basis, g.n), g.n)
    report = verify_polarization(g, ell, P)
    if args.json:
        print(json.dumps({
            "is_subalgebra": report.is_subalgebra,
            "is_isotropic": report.is_isotropic,
            "dimension_ok": report.dimension_ok,
            "expected_dim": report.expected_dim,
            "actual_dim": report.actual_dim,
            "witnesses": [
                {
                    "condition": w.condition,
                    "x": _vector_strings(w.x) if w.x is not None else None,
                    "y": _vector_strings(w.y) if w.y is not None else None,
                    "value": _value_repr(w.value),
                }
                for w in report.witnesses
            ],
        }, indent=2))
    else:
        print(f"subalgebra [p,p] in p:             {'yes' if report.is_subalgebra else 'no'}")
        print(f"isotropic [p,p] in ker(ell):       {'yes' if report.is_isotropic else 'no'}")
        print(f"dim p = n - d ({report.actual_dim} vs {report.expected_dim}):    {'yes' if report.dimension_ok else 'no'}")
        for w in report.witnesses:
            x = format_combination(w.x, g.basis_names) if w.x is not None else "-"
            y = format_combination(w.y, g.basis_names) if w.y is not None else "-"
            print(f"  witness [{w.condition}]: X = {x}, Y = {y}, value = {_value_repr(w.value)}")
    return EXIT_OK if report.ok else EXIT_INVALID


def _value_repr(v):
    if isinstance(v, tuple):
        return [_value_repr(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    return format_rational(v)


def cmd_catalog(args) -> int:
    if args.show:
        entry = catalog.get(args.show)
        sys.stdout.write(emit_algebra(entry.algebra, title=entry.description))
        return EXIT_OK
    for nm in catalog.names():
        print(nm)
    return EXIT_OK


def cmd_batch(args) -> int:
    g = load_algebra(args.file)
    status = EXIT_OK
    lines = _read(args.ells).splitlines()
    first = True
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            ell = parse_functional(text, g.n, line=lineno)
        except ParseError as exc:
            print(f"error: {args.ells}: {exc}", file=sys.stderr)
            status = max(status, EXIT_PARSE)
            continue
        result = polarize(g, ell, args.method)
        _checked(g, ell, result)
        if args.json:
            print(json.dumps({"ell": _vector_strings(ell), **result_json(g, result, True)}))
        else:
            if not first:
                print()
            print(f"ell = ({', '.join(_vector_strings(ell))})")
            print(result_text(g, result, True))
        first = False
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilpol", description="Vergne polarizing subalgebras of nilpotent Lie algebras")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and validate an algebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("polarize", help="compute p(ell) for an algebra file")
    s.add_argument("file")
    s.add_argument("--ell", required=True, help="comma-separated values ell(Z1),...,ell(Zn)")
    s.add_argument("--method", choices=["basic", "refined", "auto"], default="auto")
    s.add_argument("--json", action="store_true")
    s.add_argument("--trace", action="store_true", help="print every r(ell_j)")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("free-step2", help="generate the free step-2 algebra on m generators")
    s.add_argument("m", type=int)
    s.add_argument("--emit", metavar="FILE", help="write the algebra file ('-' for stdout)")
    s.set_defaults(func=cmd_free_step2)

    s = sub.add_parser("polarize-free", help="closed-form p(ell) for the free step-2 algebra")
    s.add_argument("m", type=int)
    s.add_argument("--ell", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_polarize_free)

    s = sub.add_parser("verify", help="check that a subspace polarizes ell")
    s.add_argument("file")
    s.add_argument("--ell", required=True)
    s.add_argument("--basis", required=True, help="vectors separated by ';', entries by ','")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("catalog", help="list or show built-in algebras")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--show", metavar="NAME")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("batch", help="polarize many functionals, one per line")
    s.add_argument("file")
    s.add_argument("--ells", required=True, metavar="FILE")
    s.add_argument("--method", choices=["basic", "refined", "auto"], default="auto")
    s.add_argument("--json", action="store_true", help="one JSON object per line")
    s.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LieAlgebraError as exc:
        where = f" ({exc.span})" if exc.span is not None else ""
        print(f"invalid algebra: {exc.condition} violated{where}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvariantBreach as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InvalidGeneratorCount, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NilpolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
