"""Line-oriented text formats for codes and LTI generator matrices.

Code file::

    field 2
    length 8
    sections 1 1 1 1 1 1 1 1      # optional
    1 1 1 1 0 0 0 0
    ...

LTI file (``rows * cols`` entries, row-major, coefficients low to high)::

    field 7
    rows 2
    cols 1
    num: 1
    num: 1 / den: 1 2

``#`` starts a comment everywhere.
"""

from __future__ import annotations

from .field import PrimeField
from .lti import PolyMatrix, RationalMatrix
from .poly import Poly, RationalFunction
from .spans import CodeSpec, GeneratorMatrix


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {no}: expected an integer, got {tok!r}") from None


def _field(value: int, no: int) -> PrimeField:
    try:
        return PrimeField(value)
    except ValueError as e:
        raise ParseError(f"line {no}: {e}") from None


def parse_code_file(text: str) -> GeneratorMatrix:
    """Parse a code file.  Dependent rows raise ``DependentRowsError``."""
    header: dict[str, tuple[int, list[str]]] = {}
    body: list[tuple[int, list[str]]] = []
    for no, line in _lines(text):
        toks = line.split()
        if toks[0] in ("field", "length", "sections"):
            if body:
                raise ParseError(f"line {no}: header keyword after generator rows")
            if toks[0] in header:
                raise ParseError(f"line {no}: duplicate {toks[0]!r}")
            header[toks[0]] = (no, toks[1:])
        else:
            body.append((no, toks))
    for key in ("field", "length"):
        if key not in header:
            raise ParseError(f"missing {key!r} header")
        no, vals = header[key]
        if len(vals) != 1:
            raise ParseError(f"line {no}: {key!r} takes one value")
    no, vals = header["field"]
    field = _field(_int(vals[0], no), no)
    no, vals = header["length"]
    n = _int(vals[0], no)
    if n < 1:
        raise ParseError(f"line {no}: length must be positive")
    sections: tuple[int, ...] = ()
    if "sections" in header:
        no, vals = header["sections"]
        sections = tuple(_int(v, no) for v in vals)
        if len(sections) != n or any(s < 1 for s in sections):
            raise ParseError(f"line {no}: need {n} positive section sizes")
    spec = CodeSpec(field, n, sections)
    p = field.modulus
    rows = []
    for no, toks in body:
        if len(toks) == 1 and len(toks[0]) > 1 and p <= 10 and toks[0].isdigit():
            toks = list(toks[0])
        vals = [_int(t, no) for t in toks]
        if len(vals) != spec.total_cols:
            raise ParseError(f"line {no}: {len(vals)} symbols, expected {spec.total_cols}")
        if any(not 0 <= v < p for v in vals):
            raise ParseError(f"line {no}: symbols must lie in [0, {p})")
        rows.append(vals)
    return GeneratorMatrix(spec, rows)


def format_code_file(g: GeneratorMatrix) -> str:
    spec = g.spec
    lines = [f"field {spec.p}", f"length {spec.n_symbols}"]
    if any(s != 1 for s in spec.section_sizes):
        lines.append("sections " + " ".join(map(str, spec.section_sizes)))
    lines.extend(" ".join(map(str, r)) for r in g.rows)
    return "\n".join(lines) + "\n"


def _poly(toks: list[str], p: int, no: int) -> Poly:
    if not toks:
        raise ParseError(f"line {no}: empty coefficient list")
    return Poly(p, [_int(t, no) for t in toks])


def _entry(line: str, p: int, no: int) -> RationalFunction:
    parts = [s.strip() for s in line.split("/")]
    if len(parts) > 2:
        raise ParseError(f"line {no}: more than one '/'")
    got: dict[str, Poly] = {}
    for part in parts:
        key, sep, rest = part.partition(":")
        key = key.strip()
        if not sep or key not in ("num", "den") or key in got:
            raise ParseError(f"line {no}: expected 'num: ...' optionally followed by '/ den: ...'")
        got[key] = _poly(rest.split(), p, no)
    if "num" not in got:
        raise ParseError(f"line {no}: missing numerator")
    den = got.get("den", Poly(p, [1]))
    if den.coeff(0) == 0:
        raise ParseError(f"line {no}: denominator must have a nonzero constant term")
    return RationalFunction(got["num"], den)


def parse_lti_file(text: str) -> RationalMatrix:
    lines = _lines(text)
    header: dict[str, int] = {}
    where: dict[str, int] = {}
    i = 0
    while i < len(lines) and lines[i][1].split()[0] in ("field", "rows", "cols"):
        no, line = lines[i]
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"line {no}: {toks[0]!r} takes one value")
        header[toks[0]] = _int(toks[1], no)
        where[toks[0]] = no
        i += 1
    for key in ("field", "rows", "cols"):
        if key not in header:
            raise ParseError(f"missing {key!r} header")
    p = _field(header["field"], where["field"]).modulus
    n, k = header["rows"], header["cols"]
    if n < 1 or k < 0 or k > n:
        raise ParseError(f"need rows >= 1 and 0 <= cols <= rows, got {n} x {k}")
    body = lines[i:]
    if len(body) != n * k:
        raise ParseError(f"expected {n * k} entries, found {len(body)}")
    entries = [_entry(line, p, no) for no, line in body]
    try:
        return RationalMatrix(p, n, k, entries)
    except ValueError as e:
        raise ParseError(str(e)) from None


def format_lti_file(m: PolyMatrix) -> str:
    lines = [f"field {m.p}", f"rows {m.n_rows}", f"cols {m.k_cols}"]
    for row in m.rows():
        for e in row:
            lines.append("num: " + (" ".join(map(str, e.coeffs)) or "0"))
    return "\n".join(lines) + "\n"
