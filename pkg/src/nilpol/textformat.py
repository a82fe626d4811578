"""Line-oriented algebra definition format.

::

    # Heisenberg algebra
    dim 3
    [3,2] = 1*Z1

Comments start with ``#``. ``dim <n>`` must precede the bracket lines.
Each bracket line is ``[i,j] = <c1>*Z<k1> + <c2>*Z<k2> ...`` with exact
rational coefficients (``-3/2``); ``*`` and a coefficient of 1 may be
omitted, and ``0`` is an empty right-hand side. Brackets not listed are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import AntisymmetryConflict, ArityMismatch, LieAlgebraError, ParseError
from .lie import Functional, LieAlgebra, make_algebra

_DIM = re.compile(r"dim\s+(\d+)\s*$")
_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=")
_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)(?:\s*/\s*(\d+))?\s*(\*)?\s*)?(Z(\d+))?")
_RATIONAL = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class SourceSpan:
    line: int  # 1-based
    column: int  # 1-based, first character of the offending text
    end_column: int
    start: int  # byte offsets into the document
    end: int

    def __str__(self) -> str:
        return f"line {self.line}, columns {self.column}-{self.end_column}"


@dataclass(frozen=True)
class BracketLine:
    i: int
    j: int
    text: str
    coeffs: dict  # {k (1-based): Fraction}
    span: SourceSpan


@dataclass
class AlgebraDocument:
    declared_dim: int
    bracket_lines: list = field(default_factory=list)
    header_span: SourceSpan | None = None

    @property
    def source_spans(self) -> list[SourceSpan]:
        return [b.span for b in self.bracket_lines]

    def span_for(self, pairs) -> SourceSpan | None:
        """First bracket line that defines one of the unordered ``pairs``."""
        wanted = {frozenset(p) for p in pairs}
        for b in self.bracket_lines:
            if frozenset((b.i, b.j)) in wanted and b.coeffs:
                return b.span
        for b in self.bracket_lines:
            if frozenset((b.i, b.j)) in wanted:
                return b.span
        return self.header_span

    def to_algebra(self, validate: bool = True) -> LieAlgebra:
        seen: dict[frozenset, tuple[int, int, dict, BracketLine]] = {}
        for b in self.bracket_lines:
            key = frozenset((b.i, b.j))
            if b.i == b.j and b.coeffs:
                err = AntisymmetryConflict(f"[Z{b.i},Z{b.i}] must be zero", pairs=[(b.i, b.i)])
                err.span = b.span
                raise err
            if key in seen:
                pi, pj, pc, prev = seen[key]
                expect = pc if (pi, pj) == (b.i, b.j) else {k: -x for k, x in pc.items()}
                if expect != b.coeffs:
                    err = AntisymmetryConflict(
                        f"[Z{b.i},Z{b.j}] at line {b.span.line} conflicts with "
                        f"[Z{pi},Z{pj}] at line {prev.span.line}",
                        pairs=[(b.i, b.j), (pi, pj)],
                    )
                    err.span = b.span
                    raise err
                continue
            seen[key] = (b.i, b.j, b.coeffs, b)
        try:
            return make_algebra(
                self.declared_dim,
                [(i, j, c) for i, j, c, _ in seen.values()],
                validate=validate,
            )
        except LieAlgebraError as err:
            err.span = self.span_for(err.pairs)
            raise


def _line_offsets(text: str) -> list[int]:
    offs, pos = [], 0
    for line in text.split("\n"):
        offs.append(pos)
        pos += len(line.encode("utf-8")) + 1
    return offs


def _parse_rhs(rhs: str, col0: int, lineno: int, n: int) -> dict:
    body = rhs.strip()
    if body == "0":
        return {}
    if not body:
        raise ParseError("empty right-hand side (write 0 for a zero bracket)", lineno, col0 + 1)
    out: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(rhs):
        if not rhs[pos:].strip():
            break
        mt = _TERM.match(rhs, pos)
        sign, num, den, star, zterm, k = mt.groups()
        col = col0 + pos + len(rhs[pos:]) - len(rhs[pos:].lstrip()) + 1
        if not first and sign is None:
            raise ParseError("expected '+' or '-' between terms", lineno, col)
        if zterm is None:
            raise ParseError(f"expected a term like '3/2*Z1', found {rhs[pos:].strip()!r}", lineno, col)
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator", lineno, col)
        if star and num is None:
            raise ParseError("'*' without a coefficient", lineno, col)
        coef = Fraction(int(num), int(den or 1)) if num is not None else Fraction(1)
        if sign == "-":
            coef = -coef
        k = int(k)
        if not 1 <= k <= n:
            raise ParseError(f"basis index Z{k} outside Z1..Z{n}", lineno, col)
        v = out.get(k, Fraction(0)) + coef
        if v:
            out[k] = v
        else:
            out.pop(k, None)
        pos = mt.end()
        first = False
    return out


def parse_document(text: str) -> AlgebraDocument:
    offsets = _line_offsets(text)
    doc: AlgebraDocument | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        stripped = line.strip()
        start = offsets[lineno - 1]
        span = SourceSpan(lineno, indent + 1, len(line), start + len(line[:indent].encode()), start + len(line.encode()))
        if stripped.startswith("dim"):
            m = _DIM.match(stripped)
            if not m:
                raise ParseError("malformed header, expected 'dim <n>'", lineno, indent + 1)
            if doc is not None:
                raise ParseError("duplicate 'dim' header", lineno, indent + 1)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("dimension must be positive", lineno, indent + 5)
            doc = AlgebraDocument(n, header_span=span)
            continue
        m = _BRACKET.match(stripped)
        if not m:
            raise ParseError(f"unrecognised line {stripped!r}", lineno, indent + 1)
        if doc is None:
            raise ParseError("bracket line before the 'dim <n>' header", lineno, indent + 1)
        i, j = int(m.group(1)), int(m.group(2))
        for idx, g in ((i, 1), (j, 2)):
            if not 1 <= idx <= doc.declared_dim:
                raise ParseError(f"basis index {idx} outside 1..{doc.declared_dim}", lineno, indent + m.start(g) + 1)
        rhs_col = indent + m.end()
        coeffs = _parse_rhs(stripped[m.end():], rhs_col, lineno, doc.declared_dim)
        doc.bracket_lines.append(BracketLine(i, j, stripped, coeffs, span))
    if doc is None:
        raise ParseError("missing 'dim <n>' header", 1, 1)
    return doc


def parse_algebra(text: str, validate: bool = True) -> LieAlgebra:
    return parse_document(text).to_algebra(validate=validate)


def parse_rational(token: str, line: int = 1, column: int = 1) -> Fraction:
    m = _RATIONAL.match(token)
    if not m or not token.strip():
        raise ParseError(f"not an exact rational: {token.strip()!r}", line, column)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", line, column)
    q = Fraction(int(num), int(den or 1))
    return -q if sign == "-" else q


def parse_functional(text: str, n: int, line: int = 1) -> Functional:
    """Comma-separated exact rationals, exactly ``n`` of them."""
    parts = text.strip().split(",")
    values, col = [], 1
    for p in parts:
        values.append(parse_rational(p, line, col))
        col += len(p) + 1
    if len(values) != n:
        raise ArityMismatch(f"functional has {len(values)} entries, algebra dimension is {n}", line, 1)
    return Functional(values)


def parse_vectors(text: str, n: int) -> list[tuple]:
    """Semicolon-separated list of comma-separated vectors."""
    out = []
    for chunk in text.split(";"):
        if chunk.strip():
            out.append(parse_functional(chunk, n).values)
    return out


def format_rational(q) -> str:
    return str(Fraction(q))


def format_combination(v: Sequence, names: Sequence[str], lead: int | None = None) -> str:
    """Human-readable linear combination, e.g. ``Z3 + 3*Z1 - 2*Z2``.

    ``lead`` (0-based) puts that coordinate's term first.
    """
    order = [k for k in range(len(v)) if v[k]]
    if lead is not None and lead in order:
        order.remove(lead)
        order.insert(0, lead)
    if not order:
        return "0"
    parts = []
    for pos, k in enumerate(order):
        c = Fraction(v[k])
        mag = abs(c)
        term = names[k] if mag == 1 else f"{mag}*{names[k]}"
        if pos == 0:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


def emit_algebra(g: LieAlgebra, title: str | None = None) -> str:
    lines = []
    if title:
        lines.append(f"# {title}")
    if tuple(g.basis_names) != tuple(f"Z{i + 1}" for i in range(g.n)):
        lines.append("# basis order: " + " ".join(g.basis_names) + f" (positions Z1..Z{g.n} below)")
    lines.append(f"dim {g.n}")
    for i, j, coeffs in g.nonzero_brackets():
        terms = []
        for k, c in enumerate(coeffs):
            if not c:
                continue
            mag = format_rational(abs(c))
            if not terms:
                terms.append(f"{'-' if c < 0 else ''}{mag}*Z{k + 1}")
            else:
                terms.append(f"{'-' if c < 0 else '+'} {mag}*Z{k + 1}")
        lines.append(f"[{i},{j}] = " + " ".join(terms))
    return "\n".join(lines) + "\n"
