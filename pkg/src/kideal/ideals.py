"""Ideals of a finite semiring as bitmasks over the carrier: generation,
k-closure, sums, k-products, annihilators, quotients and the lattice of
k-ideals.

Bit ``i`` of a mask stands for element index ``i``.  Lists of ideals are
always sorted by ``(popcount, mask)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError, StructureError
from .semiring import FiniteSemiring, Verdict

MAX_SUBSET_SCAN = 20

_DEBUG = bool(os.environ.get("KIDEAL_DEBUG"))


def set_debug(flag: bool) -> None:
    """Toggle internal cross-checking of k_closure against the fixpoint route."""
    global _DEBUG
    _DEBUG = flag


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def sort_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


@dataclass(frozen=True)
class IdealSet:
    """A subset of a semiring's carrier.  Usually an ideal; operations state
    when they accept arbitrary subsets."""

    parent: FiniteSemiring
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.parent.order:
            raise StructureError(f"mask {self.mask:#x} exceeds carrier of {self.parent.name}")

    @classmethod
    def of(cls, R: FiniteSemiring, elements: Iterable[int | str]) -> IdealSet:
        m = 0
        for e in elements:
            i = R.index(e) if isinstance(e, str) else e
            if not 0 <= i < R.order:
                raise StructureError(f"element index {i} out of range")
            m |= 1 << i
        return cls(R, m)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.parent.names[i] for i in self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __and__(self, other: IdealSet) -> IdealSet:
        _same_parent(self, other)
        return IdealSet(self.parent, self.mask & other.mask)

    def issubset(self, other: IdealSet) -> bool:
        _same_parent(self, other)
        return self.mask & ~other.mask == 0

    @property
    def is_whole(self) -> bool:
        return self.mask == self.parent.full_mask

    def sort_key(self) -> tuple[int, int]:
        return sort_key(self.mask)

    def __str__(self):
        return "{" + ",".join(self.names) + "}"


def _same_parent(*ideals: IdealSet) -> None:
    p = ideals[0].parent
    for I in ideals[1:]:
        if I.parent != p:
            raise StructureError(f"ideals belong to different semirings ({p.name}, {I.parent.name})")


# ------------------------------------------------------------ mask-level kernels


def gen_mask(R: FiniteSemiring, mask: int) -> int:
    """Least fixpoint: close ``mask | {0}`` under + and under · by R."""
    add, mul = R.add, R.mul
    m = mask | (1 << R.zero)
    while True:
        members = bits(m)
        new = m
        for x in members:
            for r in R.elements():
                new |= 1 << mul[r][x]
            for y in members:
                new |= 1 << add[x][y]
        if new == m:
            return m
        m = new


def ideal_violation(R: FiniteSemiring, mask: int):
    if not mask >> R.zero & 1:
        return ("zero",)
    members = bits(mask)
    for x in members:
        for y in members:
            if not mask >> R.add[x][y] & 1:
                return ("add", x, y)
    for x in members:
        for r in R.elements():
            if not mask >> R.mul[r][x] & 1:
                return ("mul", r, x)
    return None


def is_ideal_mask(R: FiniteSemiring, mask: int) -> bool:
    return ideal_violation(R, mask) is None


def k_violation(R: FiniteSemiring, mask: int):
    for x in bits(mask):
        row = R.add[x]
        for y in R.elements():
            if mask >> row[y] & 1 and not mask >> y & 1:
                return (x, y)
    return None


def is_k_ideal_mask(R: FiniteSemiring, mask: int) -> bool:
    return is_ideal_mask(R, mask) and k_violation(R, mask) is None


def kclose_mask(R: FiniteSemiring, mask: int) -> int:
    """{r : r + x in I for some x in I}."""
    members = bits(mask)
    out = 0
    for r in R.elements():
        row = R.add[r]
        for x in members:
            if mask >> row[x] & 1:
                out |= 1 << r
                break
    return out


def least_k_ideal_above(R: FiniteSemiring, mask: int) -> int:
    """Smallest k-ideal containing ``mask``, by iterating 'add every y with
    x, x+y in S' and regenerating until stable.  Independent of kclose_mask."""
    m = gen_mask(R, mask)
    while True:
        extra = 0
        for x in bits(m):
            for y in R.elements():
                if m >> R.add[x][y] & 1:
                    extra |= 1 << y
        nxt = gen_mask(R, m | extra)
        if nxt == m:
            return m
        m = nxt


def sum_mask(R: FiniteSemiring, a: int, b: int) -> int:
    out = 0
    bs = bits(b)
    for x in bits(a):
        for y in bs:
            out |= 1 << R.add[x][y]
    return out


def products_mask(R: FiniteSemiring, a: int, b: int) -> int:
    out = 0
    bs = bits(b)
    for x in bits(a):
        for y in bs:
            out |= 1 << R.mul[x][y]
    return out


def ideal_product_mask(R: FiniteSemiring, a: int, b: int) -> int:
    """Ordinary product: the ideal generated by all pairwise products."""
    return gen_mask(R, products_mask(R, a, b))


def k_product_mask(R: FiniteSemiring, a: int, b: int) -> int:
    return kclose_mask(R, ideal_product_mask(R, a, b))


def quotient_mask(R: FiniteSemiring, a: int, b: int) -> int:
    """(A : B) = {r : rB ⊆ A}."""
    bs = bits(b)
    out = 0
    for r in R.elements():
        row = R.mul[r]
        if all(a >> row[y] & 1 for y in bs):
            out |= 1 << r
    return out


def annihilator_mask(R: FiniteSemiring, x: int) -> int:
    return quotient_mask(R, 1 << R.zero, x)


def _all_ideal_masks(R: FiniteSemiring) -> list[int]:
    """Every ideal, found by growing ideals one generator at a time.  Each
    ideal I is reached from {0} by adding its members in turn, so the search
    is complete."""
    start = gen_mask(R, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for x in R.elements():
                if not m >> x & 1:
                    g = gen_mask(R, m | 1 << x)
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return sorted(seen, key=sort_key)


_IDEAL_CACHE: dict[FiniteSemiring, tuple[list[int], list[int]]] = {}


def ideal_masks(R: FiniteSemiring, k_only: bool = False) -> list[int]:
    if R not in _IDEAL_CACHE:
        if R.order > MAX_SUBSET_SCAN:
            raise PreconditionError(
                f"ideal enumeration is limited to carriers of size <= {MAX_SUBSET_SCAN}")
        alls = _all_ideal_masks(R)
        ks = [m for m in alls if k_violation(R, m) is None]
        if len(_IDEAL_CACHE) > 4096:
            _IDEAL_CACHE.clear()
        _IDEAL_CACHE[R] = (alls, ks)
    alls, ks = _IDEAL_CACHE[R]
    return list(ks if k_only else alls)


# ------------------------------------------------------------ public operations


def _require_ideal(I: IdealSet, what="input") -> None:
    w = ideal_violation(I.parent, I.mask)
    if w is not None:
        raise PreconditionError(f"{what} {I} is not an ideal of {I.parent.name} (witness {w})")


def _require_k_ideal(I: IdealSet, what="input") -> None:
    _require_ideal(I, what)
    w = k_violation(I.parent, I.mask)
    if w is not None:
        raise PreconditionError(f"{what} {I} is not a k-ideal of {I.parent.name} (witness {w})")


def _subset_mask(R: FiniteSemiring, S) -> int:
    if isinstance(S, IdealSet):
        if S.parent != R:
            raise StructureError("subset belongs to a different semiring")
        return S.mask
    return IdealSet.of(R, S).mask


def ideal_generated(R: FiniteSemiring, S) -> IdealSet:
    """Smallest ideal containing the subset ``S`` (indices, names or IdealSet)."""
    return IdealSet(R, gen_mask(R, _subset_mask(R, S)))


def is_ideal(R: FiniteSemiring, S) -> Verdict:
    """Witness is ``("zero",)``, ``("add", x, y)`` with x+y outside S, or
    ``("mul", r, x)`` with r·x outside S."""
    w = ideal_violation(R, _subset_mask(R, S))
    return Verdict(w is None, w)


def is_k_ideal(I: IdealSet) -> Verdict:
    """Witness ``(x, y)`` with x and x+y in I but y not in I."""
    _require_ideal(I)
    w = k_violation(I.parent, I.mask)
    return Verdict(w is None, w)


def k_closure(I: IdealSet) -> IdealSet:
    _require_ideal(I)
    R = I.parent
    out = kclose_mask(R, I.mask)
    if _DEBUG:
        alt = least_k_ideal_above(R, I.mask)
        if alt != out:
            from .errors import ConsistencyError
            raise ConsistencyError(f"k-closure {out:#x} != least k-ideal above {alt:#x} in {R.name}")
    return IdealSet(R, out)


def enumerate_ideals(R: FiniteSemiring, k_only: bool = False) -> list[IdealSet]:
    return [IdealSet(R, m) for m in ideal_masks(R, k_only)]


def sum_ideals(I: IdealSet, J: IdealSet) -> IdealSet:
    _same_parent(I, J)
    _require_ideal(I)
    _require_ideal(J)
    R = I.parent
    return IdealSet(R, gen_mask(R, sum_mask(R, I.mask, J.mask)))


def ideal_product(I: IdealSet, J: IdealSet) -> IdealSet:
    """Ordinary product ⟨{xy}⟩ of two ideals (no k-closure)."""
    _same_parent(I, J)
    return IdealSet(I.parent, ideal_product_mask(I.parent, I.mask, J.mask))


def k_product(I: IdealSet, J: IdealSet) -> IdealSet:
    _same_parent(I, J)
    _require_k_ideal(I, "left factor")
    _require_k_ideal(J, "right factor")
    return IdealSet(I.parent, k_product_mask(I.parent, I.mask, J.mask))


def annihilator(R: FiniteSemiring, X) -> IdealSet:
    m = _subset_mask(R, X)
    if m == 0:
        raise PreconditionError("annihilator of the empty set")
    return IdealSet(R, annihilator_mask(R, m))


def ideal_quotient(I: IdealSet, J: IdealSet) -> IdealSet:
    _same_parent(I, J)
    _require_k_ideal(I, "dividend")
    _require_ideal(J, "divisor")
    return IdealSet(I.parent, quotient_mask(I.parent, I.mask, J.mask))


def intersect_all(R: FiniteSemiring, masks: Iterable[int]) -> int:
    out = R.full_mask
    for m in masks:
        out &= m
    return out


# ------------------------------------------------------------ lattices


@dataclass(frozen=True)
class KIdealLattice:
    """Finite lattice of ideals (k-ideals by default) with meet = ∩ and
    join = k-closure of the sum (plain sum for the all-ideals lattice)."""

    parent: FiniteSemiring
    ideals: tuple[int, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    modular: bool
    distributive: bool
    totally_ordered: bool
    modular_witness: tuple | None = None
    distributive_witness: tuple | None = None

    def __len__(self):
        return len(self.ideals)

    def ideal(self, i: int) -> IdealSet:
        return IdealSet(self.parent, self.ideals[i])

    def leq(self, i: int, j: int) -> bool:
        return self.ideals[i] & ~self.ideals[j] == 0


def _build_lattice(R: FiniteSemiring, k_only: bool) -> KIdealLattice:
    masks = ideal_masks(R, k_only)
    pos = {m: i for i, m in enumerate(masks)}
    n = len(masks)
    meet = []
    join = []
    for a in masks:
        mrow, jrow = [], []
        for b in masks:
            mrow.append(pos[a & b])
            s = gen_mask(R, sum_mask(R, a, b))
            if k_only:
                s = kclose_mask(R, s)
            jrow.append(pos[s])
        meet.append(tuple(mrow))
        join.append(tuple(jrow))
    rng = range(n)
    modular_w = None
    for i in rng:
        for k in rng:
            if masks[i] & ~masks[k]:
                continue
            for j in rng:
                if join[i][meet[j][k]] != meet[join[i][j]][k]:
                    modular_w = (masks[i], masks[j], masks[k])
                    break
            if modular_w:
                break
        if modular_w:
            break
    distrib_w = None
    for i in rng:
        for j in rng:
            for k in rng:
                if meet[i][join[j][k]] != join[meet[i][j]][meet[i][k]]:
                    distrib_w = (masks[i], masks[j], masks[k])
                    break
            if distrib_w:
                break
        if distrib_w:
            break
    chain = all(a & ~b == 0 or b & ~a == 0 for a in masks for b in masks)
    return KIdealLattice(R, tuple(masks), tuple(meet), tuple(join),
                         modular_w is None, distrib_w is None, chain, modular_w, distrib_w)


def lattice_check(R: FiniteSemiring) -> KIdealLattice:
    """Lattice of k-ideals with modularity, distributivity and chain flags."""
    return _build_lattice(R, True)


def ideal_lattice_check(R: FiniteSemiring) -> KIdealLattice:
    """Same flags for the lattice of all ideals (join = sum)."""
    return _build_lattice(R, False)


def format_ideal(R: FiniteSemiring, mask: int) -> str:
    return "{" + ",".join(R.names[i] for i in bits(mask)) + "}"


def parse_ideal(R: FiniteSemiring, text: str) -> IdealSet:
    """Comma-separated element names, e.g. ``"0,2"``; braces optional."""
    text = text.strip().strip("{}")
    names = [t.strip() for t in text.split(",") if t.strip()]
    return IdealSet.of(R, names)


def masks_of(ideals: Sequence[IdealSet]) -> list[int]:
    return [I.mask for I in ideals]
