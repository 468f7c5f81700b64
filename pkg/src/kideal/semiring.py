"""Finite commutative semirings with identity: tables, validation, constructions,
canonical forms, exhaustive enumeration and homomorphisms.

Elements are indices ``0..n-1``.  Every semiring built here is normalized so
that zero is index 0 and, when ``n >= 2``, one is index 1.
"""

from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidParameter, InvalidSemiring, StructureError

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 4

Table = tuple[tuple[int, ...], ...]


class Verdict(NamedTuple):
    """Boolean answer carrying the first counterexample found, if any."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class FiniteSemiring:
    names: tuple[str, ...]
    add: Table
    mul: Table
    zero: int = 0
    one: int = 1
    name: str = "R"
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.names)
        _check_structure(n, self.add, self.mul, self.zero, self.one)
        if len(set(self.names)) != n:
            raise StructureError("element names must be distinct")
        for nm in self.names:
            if not nm or any(c.isspace() for c in nm) or "," in nm or nm.startswith("#"):
                raise StructureError(f"bad element name {nm!r}")
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "_key", (self.names, self.add, self.mul, self.zero, self.one))

    def __eq__(self, other):
        if not isinstance(other, FiniteSemiring):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FiniteSemiring({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"{self.name}: no element named {name!r}") from None

    def elements(self) -> range:
        return range(self.order)

    def renamed(self, name: str) -> FiniteSemiring:
        return FiniteSemiring(self.names, self.add, self.mul, self.zero, self.one, name)

    def power(self, x: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = self.mul[r][x]
        return r


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()
    relabeling: tuple[int, ...] | None = None


AXIOMS = (
    "add-comm",
    "add-assoc",
    "add-identity",
    "mul-comm",
    "mul-assoc",
    "mul-identity",
    "absorption",
    "distributivity",
)


def _check_structure(n, add, mul, zero, one):
    if n < 1:
        raise StructureError("order must be at least 1")
    for label, t in (("add", add), ("mul", mul)):
        if len(t) != n or any(len(row) != n for row in t):
            raise StructureError(f"{label} table must be {n}x{n}")
        for row in t:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructureError(f"{label} table entry {v!r} out of range [0,{n})")
    for label, v in (("zero", zero), ("one", one)):
        if not isinstance(v, int) or not 0 <= v < n:
            raise StructureError(f"{label} index {v!r} out of range")


def _first_violation(n, add, mul, zero, one, axiom):
    rng = range(n)
    if axiom == "add-comm" or axiom == "mul-comm":
        t = add if axiom == "add-comm" else mul
        for x, y in itertools.combinations(rng, 2):
            if t[x][y] != t[y][x]:
                return (x, y)
    elif axiom == "add-assoc" or axiom == "mul-assoc":
        t = add if axiom == "add-assoc" else mul
        for x, y, z in itertools.product(rng, repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                return (x, y, z)
    elif axiom == "add-identity":
        for x in rng:
            if add[zero][x] != x or add[x][zero] != x:
                return (x,)
    elif axiom == "mul-identity":
        for x in rng:
            if mul[one][x] != x or mul[x][one] != x:
                return (x,)
    elif axiom == "absorption":
        for x in rng:
            if mul[zero][x] != zero or mul[x][zero] != zero:
                return (x,)
    elif axiom == "distributivity":
        for x, y, z in itertools.product(rng, repeat=3):
            if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                return (x, y, z)
            if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
                return (x, y, z)
    return None


def validate_semiring(order, names, add, mul, zero, one) -> ValidationReport:
    """Check all eight axiom families, reporting the lexicographically first
    witness of each violated one.  Raises StructureError on malformed tables."""
    if len(names) != order:
        raise StructureError(f"expected {order} names, got {len(names)}")
    _check_structure(order, add, mul, zero, one)
    violations = []
    for axiom in AXIOMS:
        w = _first_violation(order, add, mul, zero, one, axiom)
        if w is not None:
            violations.append((axiom, w))
    return ValidationReport(ok=not violations, violations=tuple(violations))


def validate(R: FiniteSemiring) -> ValidationReport:
    return validate_semiring(R.order, R.names, R.add, R.mul, R.zero, R.one)


def _relabel_table(t, perm):
    """perm[old] = new."""
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def relabel(R: FiniteSemiring, perm: Sequence[int], name: str | None = None) -> FiniteSemiring:
    """Apply the element permutation ``perm`` (old index -> new index)."""
    n = R.order
    if sorted(perm) != list(range(n)):
        raise StructureError("not a permutation of the carrier")
    names = [""] * n
    for old, new in enumerate(perm):
        names[new] = R.names[old]
    return FiniteSemiring(
        tuple(names),
        _relabel_table(R.add, perm),
        _relabel_table(R.mul, perm),
        perm[R.zero],
        perm[R.one],
        name or R.name,
    )


def normalizing_permutation(n: int, zero: int, one: int) -> tuple[int, ...]:
    """Transpositions moving zero to index 0 and then one to index 1."""
    order = list(range(n))  # order[new] = old
    pz = order.index(zero)
    order[0], order[pz] = order[pz], order[0]
    if n >= 2:
        po = order.index(one)
        order[1], order[po] = order[po], order[1]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    return tuple(perm)


def make_semiring(names, add, mul, zero, one, name="R") -> tuple[FiniteSemiring, tuple[int, ...]]:
    """Validate raw tables and return the normalized semiring plus the
    relabeling that was applied (old index -> new index)."""
    report = validate_semiring(len(names), names, add, mul, zero, one)
    if not report.ok:
        raise InvalidSemiring(report)
    raw = FiniteSemiring(tuple(names), add, mul, zero, one, name)
    perm = normalizing_permutation(len(names), zero, one)
    return relabel(raw, perm), perm


# ---------------------------------------------------------------- standard corpus


def _from_ops(name, names, values, add_fn, mul_fn):
    idx = {v: i for i, v in enumerate(values)}
    add = [[idx[add_fn(a, b)] for b in values] for a in values]
    mul = [[idx[mul_fn(a, b)] for b in values] for a in values]
    zero = idx[values[0]]
    one = idx[values[1]] if len(values) > 1 else zero
    R, _ = make_semiring(names, add, mul, zero, one, name)
    return R


def build_standard(family: str, param: int | None = None, name: str | None = None) -> FiniteSemiring:
    """Members of the standard families: ``boolean``, ``chain(m)``,
    ``ring_mod(m)``, ``truncated_nat(k)`` and ``trivial``."""
    if family == "boolean":
        return _from_ops(name or "B", ("0", "1"), [0, 1], max, min)
    if family == "trivial":
        return FiniteSemiring(("0",), ((0,),), ((0,),), 0, 0, name or "T")
    if param is None or not isinstance(param, int) or param < 1:
        raise InvalidParameter(f"{family} needs an integer parameter >= 1, got {param!r}")
    if family == "chain":
        if param == 1:
            return build_standard("trivial", name=name or "C1")
        # values 0 < 1 < ... < m-1; index 1 must be the top
        top = param - 1
        values = [0, top] + list(range(1, top))
        middle = [chr(ord("a") + i) if param <= 28 else f"a{i}" for i in range(top - 1)]
        return _from_ops(name or f"C{param}", ["0", "1"] + middle, values, max, min)
    if family == "ring_mod":
        m = param
        if m == 1:
            return build_standard("trivial", name=name or "Z1")
        vals = list(range(m))
        return _from_ops(name or f"Z{m}", [str(v) for v in vals], vals,
                         lambda a, b: (a + b) % m, lambda a, b: (a * b) % m)
    if family == "truncated_nat":
        k = param
        vals = list(range(k + 1))
        return _from_ops(name or f"N{k}", [str(v) for v in vals], vals,
                         lambda a, b: min(a + b, k), lambda a, b: min(a * b, k))
    raise InvalidParameter(f"unknown family {family!r}")


def _pair_name(a, b):
    if len(a) == 1 and len(b) == 1:
        return a + b
    return f"{a}.{b}"


def direct_product(R: FiniteSemiring, S: FiniteSemiring, name: str | None = None) -> FiniteSemiring:
    """Componentwise product; pairs are laid out row-major and then normalized
    (zero and one moved into indices 0 and 1 by transposition)."""
    pairs = [(a, b) for a in R.elements() for b in S.elements()]
    idx = {p: i for i, p in enumerate(pairs)}
    add = [[idx[(R.add[a][c], S.add[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[idx[(R.mul[a][c], S.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    names = [_pair_name(R.names[a], S.names[b]) for a, b in pairs]
    P, _ = make_semiring(names, add, mul, idx[(R.zero, S.zero)], idx[(R.one, S.one)],
                         name or f"{R.name}x{S.name}")
    return P


def corpus() -> list[FiniteSemiring]:
    """The built-in test corpus."""
    B = build_standard("boolean")
    Z2 = build_standard("ring_mod", 2)
    return [
        build_standard("trivial"),
        B,
        Z2,
        build_standard("ring_mod", 4),
        build_standard("chain", 3),
        build_standard("chain", 4),
        build_standard("truncated_nat", 3),
        build_standard("truncated_nat", 4),
        direct_product(B, B),
        direct_product(Z2, B),
    ]


# ---------------------------------------------------------------- canonical form


def _serialize(n, add, mul):
    w = len(str(n - 1))
    def rows(t):
        return ",".join("".join(f"{v:0{w}d}" for v in row) for row in t)
    return f"{n}:{rows(add)}|{rows(mul)}"


def table_string(R: FiniteSemiring) -> str:
    return _serialize(R.order, R.add, R.mul)


def _canonical(R: FiniteSemiring) -> tuple[str, tuple[int, ...]]:
    n = R.order
    fixed = [R.zero] if n == 1 else [R.zero, R.one]
    rest = [x for x in range(n) if x not in fixed]
    best = None
    best_perm = None
    for tail in itertools.permutations(range(len(fixed), n)):
        perm = [0] * n
        for new, old in enumerate(fixed):
            perm[old] = new
        for old, new in zip(rest, tail):
            perm[old] = new
        s = _serialize(n, _relabel_table(R.add, perm), _relabel_table(R.mul, perm))
        if best is None or s < best:
            best, best_perm = s, tuple(perm)
    return best, best_perm


def canonical_form(R: FiniteSemiring) -> str:
    """Least table serialization over all relabelings fixing zero and one.
    Two semirings are isomorphic iff their canonical forms coincide."""
    return _canonical(R)[0]


def canonical_representative(R: FiniteSemiring, name: str | None = None) -> FiniteSemiring:
    _, perm = _canonical(R)
    return relabel(R, perm, name)


def are_isomorphic(R: FiniteSemiring, S: FiniteSemiring) -> bool:
    return R.order == S.order and canonical_form(R) == canonical_form(S)


# ---------------------------------------------------------------- enumeration


def max_order_cap() -> int:
    env = os.environ.get("KIDEAL_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameter(f"KIDEAL_MAX_ORDER must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ORDER


def _assoc_ok(t, n):
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if xy < 0:
                continue
            for z in range(n):
                yz = t[y][z]
                if yz < 0:
                    continue
                lhs = t[xy][z]
                rhs = t[x][yz]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


def _distrib_ok(add, mul, n):
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            if xy < 0:
                continue
            for z in range(y, n):
                xz = mul[x][z]
                if xz < 0:
                    continue
                lhs = mul[x][add[y][z]]
                if lhs >= 0 and lhs != add[xy][xz]:
                    return False
    return True


def _commutative_monoids(n):
    """Addition tables with identity 0, commutative and associative."""
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x
    cells = [(x, y) for x in range(1, n) for y in range(x, n)]

    def rec(i):
        if i == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        x, y = cells[i]
        for v in range(n):
            t[x][y] = t[y][x] = v
            if _assoc_ok(t, n):
                yield from rec(i + 1)
        t[x][y] = t[y][x] = -1

    yield from rec(0)


def _multiplications(add, n):
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = 0
    for x in range(1, n):
        t[1][x] = t[x][1] = x
    cells = [(x, y) for x in range(2, n) for y in range(x, n)]

    def rec(i):
        if i == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        x, y = cells[i]
        for v in range(n):
            t[x][y] = t[y][x] = v
            if _assoc_ok(t, n) and _distrib_ok(add, t, n):
                yield from rec(i + 1)
        t[x][y] = t[y][x] = -1

    yield from rec(0)


def enumerate_semirings(order: int, up_to_iso: bool = False, max_order: int | None = None) -> Iterator[FiniteSemiring]:
    """Every normalized semiring of the given order (optionally one per
    isomorphism class), in lexicographic order of the table string."""
    cap = max_order if max_order is not None else max_order_cap()
    if not isinstance(order, int) or order < 1:
        raise InvalidParameter(f"order must be >= 1, got {order!r}")
    if order > cap:
        raise InvalidParameter(
            f"order {order} exceeds the enumeration cap {cap}; raise it explicitly "
            f"(--cap or KIDEAL_MAX_ORDER) if you accept the combinatorial cost")
    if order > DEFAULT_MAX_ORDER:
        log.warning("enumerating semirings of order %d: this may take a long time", order)
    names = tuple(str(i) for i in range(order)) if order <= 10 else tuple(f"e{i}" for i in range(order))
    if order == 1:
        yield FiniteSemiring(names, ((0,),), ((0,),), 0, 0, "S1_0")
        return
    found = {}
    for add in _commutative_monoids(order):
        for mul in _multiplications(add, order):
            R = FiniteSemiring(names, add, mul, 0, 1)
            key = canonical_form(R) if up_to_iso else table_string(R)
            if key not in found:
                found[key] = R
    for i, key in enumerate(sorted(found)):
        R = found[key]
        if up_to_iso:
            R = canonical_representative(R)
        yield R.renamed(f"S{order}_{i}")


# ---------------------------------------------------------------- homomorphisms


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteSemiring
    target: FiniteSemiring
    map: tuple[int, ...]

    def __post_init__(self):
        _check_map(self.map, self.source, self.target)
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def ident(self) -> str:
        return f"{self.source.name}->{self.target.name}[{','.join(self.target.names[v] for v in self.map)}]"

    def compose(self, after: Homomorphism) -> Homomorphism:
        """``after`` applied after ``self``."""
        if after.source != self.target:
            raise StructureError("composition of non-matching homomorphisms")
        return Homomorphism(self.source, after.target, tuple(after.map[v] for v in self.map))

    def image_mask(self, mask: int) -> int:
        out = 0
        for x in range(self.source.order):
            if mask >> x & 1:
                out |= 1 << self.map[x]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for x, v in enumerate(self.map):
            if mask >> v & 1:
                out |= 1 << x
        return out


def _check_map(m, R, S):
    if len(m) != R.order:
        raise StructureError(f"map has length {len(m)}, source has order {R.order}")
    for v in m:
        if not isinstance(v, int) or not 0 <= v < S.order:
            raise StructureError(f"map entry {v!r} out of range for target of order {S.order}")


def is_homomorphism(m: Sequence[int], R: FiniteSemiring, S: FiniteSemiring) -> Verdict:
    """Check that ``m`` preserves 0, 1, + and ·.  The witness is
    ``("zero",)``, ``("one",)`` or ``(op, x, y)`` for the first failing pair."""
    _check_map(m, R, S)
    if m[R.zero] != S.zero:
        return Verdict(False, ("zero",))
    if m[R.one] != S.one:
        return Verdict(False, ("one",))
    for x in R.elements():
        for y in R.elements():
            if m[R.add[x][y]] != S.add[m[x]][m[y]]:
                return Verdict(False, ("add", x, y))
            if m[R.mul[x][y]] != S.mul[m[x]][m[y]]:
                return Verdict(False, ("mul", x, y))
    return Verdict(True)


def enumerate_homomorphisms(R: FiniteSemiring, S: FiniteSemiring) -> list[Homomorphism]:
    """All homomorphisms R -> S in lexicographic order of the map."""
    free = [x for x in R.elements() if x not in (R.zero, R.one)]
    fixed = {R.zero: S.zero, R.one: S.one}
    if R.zero == R.one and S.zero != S.one:
        return []
    out = []
    for values in itertools.product(range(S.order), repeat=len(free)):
        m = [0] * R.order
        for x, v in fixed.items():
            m[x] = v
        for x, v in zip(free, values):
            m[x] = v
        if is_homomorphism(m, R, S):
            out.append(Homomorphism(R, S, tuple(m)))
    out.sort(key=lambda h: h.map)
    return out


def identity_homomorphism(R: FiniteSemiring) -> Homomorphism:
    return Homomorphism(R, R, tuple(R.elements()))
