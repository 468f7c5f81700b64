"""Line-oriented semiring text format.

::

    semiring <name>
    order <n>
    elements <name0> ... <name(n-1)>
    zero <name>
    one <name>
    add
    <n rows of n names; row i holds i + column>
    mul
    <n rows>
    end

``#`` starts a comment.  Parsing normalizes indices (zero -> 0, one -> 1),
so serialize(parse(text)) is stable after one round.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidSemiring, ParseError, StructureError
from .semiring import FiniteSemiring, make_semiring


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_semiring(text: str) -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Return the normalized semiring and the relabeling (old -> new index)."""
    it = iter(_lines(text))
    last = 0

    def expect(keyword, nargs=None):
        nonlocal last
        try:
            no, toks = next(it)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected '{keyword}'", last + 1) from None
        last = no
        if toks[0] != keyword:
            raise ParseError(f"expected '{keyword}', found '{toks[0]}'", no)
        if nargs is not None and len(toks) - 1 != nargs:
            raise ParseError(f"'{keyword}' takes {nargs} argument(s)", no)
        return no, toks[1:]

    _, (name,) = expect("semiring", 1)
    no, (order_s,) = expect("order", 1)
    try:
        n = int(order_s)
    except ValueError:
        raise ParseError(f"order must be an integer, got {order_s!r}", no) from None
    if n < 1:
        raise ParseError("order must be at least 1", no)
    no, names = expect("elements")
    if len(names) != n:
        raise ParseError(f"expected {n} element names, got {len(names)}", no)
    if len(set(names)) != n:
        raise ParseError("duplicate element names", no)
    index = {nm: i for i, nm in enumerate(names)}

    def lookup(nm, no):
        if nm not in index:
            raise ParseError(f"unknown element {nm!r}", no)
        return index[nm]

    no, (zname,) = expect("zero", 1)
    zero = lookup(zname, no)
    no, (oname,) = expect("one", 1)
    one = lookup(oname, no)

    def table(keyword):
        nonlocal last
        expect(keyword, 0)
        rows = []
        for _ in range(n):
            try:
                no, toks = next(it)
            except StopIteration:
                raise ParseError(f"{keyword} table ended early", last + 1) from None
            last = no
            if len(toks) != n:
                raise ParseError(f"{keyword} row must have {n} entries, got {len(toks)}", no)
            rows.append([lookup(t, no) for t in toks])
        return rows

    add = table("add")
    mul = table("mul")
    expect("end", 0)
    extra = next(it, None)
    if extra is not None:
        raise ParseError("content after 'end'", extra[0])
    try:
        return make_semiring(names, add, mul, zero, one, name)
    except InvalidSemiring:
        raise
    except StructureError as e:
        raise ParseError(str(e)) from None


def load_semiring(path: str | Path) -> tuple[FiniteSemiring, tuple[int, ...]]:
    return parse_semiring(Path(path).read_text(encoding="utf-8"))


def serialize_semiring(R: FiniteSemiring) -> str:
    nm = R.names
    out = [
        f"semiring {R.name}",
        f"order {R.order}",
        "elements " + " ".join(nm),
        f"zero {nm[R.zero]}",
        f"one {nm[R.one]}",
        "add",
    ]
    out += [" ".join(nm[v] for v in row) for row in R.add]
    out.append("mul")
    out += [" ".join(nm[v] for v in row) for row in R.mul]
    out.append("end")
    return "\n".join(out) + "\n"
