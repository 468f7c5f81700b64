"""Classification of ideals: prime, semiprime, maximal, irreducible and
strongly irreducible (plain and k-variants), k-radicals, the k-spectrum with
its closed sets, and constructions over multiplicatively closed sets.

Tie-breaking everywhere is by ``(popcount, mask)``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import lru_cache

from .errors import ConsistencyError, PreconditionError, StructureError
from .ideals import (
    IdealSet,
    bits,
    gen_mask,
    ideal_masks,
    ideal_product_mask,
    ideal_violation,
    intersect_all,
    k_product_mask,
    k_violation,
    kclose_mask,
    lattice_check,
    ideal_lattice_check,
    sort_key,

)
from .semiring import FiniteSemiring


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


class _Ctx:
    """Per-semiring tables reused by every predicate."""

    def __init__(self, R: FiniteSemiring):
        self.R = R
        self.full = R.full_mask
        self.all = ideal_masks(R)
        self.k = ideal_masks(R, k_only=True)
        self.kset = set(self.k)
        self.principal_k = [kclose_mask(R, gen_mask(R, 1 << a)) for a in R.elements()]
        self._prod = {}
        self._kprod = {}

    def prod(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._prod:
            self._prod[key] = ideal_product_mask(self.R, a, b)
        return self._prod[key]

    def kprod(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._kprod:
            self._kprod[key] = k_product_mask(self.R, a, b)
        return self._kprod[key]


@lru_cache(maxsize=512)
def _ctx(R: FiniteSemiring) -> _Ctx:
    return _Ctx(R)


# ------------------------------------------------------------ mask predicates


def _prime_def(c: _Ctx, p: int, pool, product) -> bool:
    if p == c.full:
        return False
    for a in pool:
        if _sub(a, p):
            continue
        for b in pool:
            if not _sub(b, p) and _sub(product(a, b), p):
                return False
    return True


def prime_elementwise(R: FiniteSemiring, p: int) -> bool:
    if p == R.full_mask:
        return False
    mul = R.mul
    for x in R.elements():
        if p >> x & 1:
            continue
        for y in R.elements():
            if not p >> y & 1 and p >> mul[x][y] & 1:
                return False
    return True


def _semiprime_def(c: _Ctx, p: int, pool, product) -> bool:
    if p == c.full:
        return False
    return all(_sub(a, p) or not _sub(product(a, a), p) for a in pool)


def _maximal_def(c: _Ctx, p: int, pool) -> bool:
    if p == c.full:
        return False
    return not any(a != p and a != c.full and _sub(p, a) for a in pool)


def _irreducible_def(c: _Ctx, p: int, pool) -> bool:
    for a in pool:
        if a == p:
            continue
        for b in pool:
            if b != p and a & b == p:
                return False
    return True


def _strong_def(c: _Ctx, p: int, pool) -> bool:
    for a in pool:
        if _sub(a, p):
            continue
        for b in pool:
            if not _sub(b, p) and _sub(a & b, p):
                return False
    return True


def strong_elementwise(R: FiniteSemiring, p: int) -> bool:
    """C_k(⟨a⟩) ∩ C_k(⟨b⟩) ⊆ I forces a ∈ I or b ∈ I."""
    pk = _ctx(R).principal_k
    for a in R.elements():
        if p >> a & 1:
            continue
        for b in R.elements():
            if not p >> b & 1 and _sub(pk[a] & pk[b], p):
                return False
    return True


def is_prime_mask(R, p):
    c = _ctx(R)
    return p in c.all and _prime_def(c, p, c.all, c.prod)


def is_k_prime_mask(R, p):
    c = _ctx(R)
    return p in c.kset and _prime_def(c, p, c.k, c.kprod)


def is_semiprime_mask(R, p):
    c = _ctx(R)
    return p in c.all and _semiprime_def(c, p, c.all, c.prod)


def is_k_semiprime_mask(R, p):
    c = _ctx(R)
    return p in c.kset and _semiprime_def(c, p, c.k, c.kprod)


def is_maximal_mask(R, p):
    c = _ctx(R)
    return p in c.all and _maximal_def(c, p, c.all)


def is_k_maximal_mask(R, p):
    c = _ctx(R)
    return p in c.kset and _maximal_def(c, p, c.k)


def is_irreducible_mask(R, p, strong=False):
    c = _ctx(R)
    if p not in c.all:
        return False
    return _strong_def(c, p, c.all) if strong else _irreducible_def(c, p, c.all)


def is_k_irreducible_mask(R, p, strong=False):
    c = _ctx(R)
    if p not in c.kset:
        return False
    return _strong_def(c, p, c.k) if strong else _irreducible_def(c, p, c.k)


# ------------------------------------------------------------ tags


@dataclass(frozen=True)
class ClassTags:
    prime: bool
    k_prime: bool
    semiprime: bool
    k_semiprime: bool
    maximal: bool
    k_maximal: bool
    irreducible: bool
    k_irreducible: bool
    strongly_irreducible: bool
    k_strongly_irreducible: bool
    k_radical_fixed: bool

    def flags(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def line(self, R: FiniteSemiring, mask: int) -> str:
        from .ideals import format_ideal
        flags = " ".join(f"{k}={int(v)}" for k, v in self.flags().items())
        return f"IDEAL {format_ideal(R, mask)} FLAGS {flags}"


def class_tags(I: IdealSet) -> ClassTags:
    """Every flag computed from its own definition; the k-flags are never
    derived from the plain ones."""
    R, p = I.parent, I.mask
    if ideal_violation(R, p) is not None:
        raise PreconditionError(f"{I} is not an ideal")
    is_k = k_violation(R, p) is None
    return ClassTags(
        prime=is_prime_mask(R, p),
        k_prime=is_k_prime_mask(R, p),
        semiprime=is_semiprime_mask(R, p),
        k_semiprime=is_k_semiprime_mask(R, p),
        maximal=is_maximal_mask(R, p),
        k_maximal=is_k_maximal_mask(R, p),
        irreducible=is_irreducible_mask(R, p),
        k_irreducible=is_k_irreducible_mask(R, p),
        strongly_irreducible=is_irreducible_mask(R, p, strong=True),
        k_strongly_irreducible=is_k_irreducible_mask(R, p, strong=True),
        k_radical_fixed=is_k and k_radical_mask(R, p) == p,
    )


# ------------------------------------------------------------ public predicates


def _require_k(I: IdealSet, proper: bool) -> _Ctx:
    c = _ctx(I.parent)
    if I.mask not in c.kset:
        raise PreconditionError(f"{I} is not a k-ideal of {I.parent.name}")
    if proper and I.mask == c.full:
        raise PreconditionError(f"{I} is not proper")
    return c


def is_k_prime(P: IdealSet) -> bool:
    """Elementwise and ideal-wise primality, computed separately and compared."""
    c = _require_k(P, proper=True)
    elementwise = prime_elementwise(P.parent, P.mask)
    definitional = _prime_def(c, P.mask, c.k, c.kprod)
    if elementwise != definitional:
        raise ConsistencyError(f"k-prime criteria disagree on {P} in {P.parent.name}")
    return definitional


def is_k_semiprime(Q: IdealSet) -> bool:
    c = _require_k(Q, proper=True)
    k_def = _semiprime_def(c, Q.mask, c.k, c.kprod)
    plain = _semiprime_def(c, Q.mask, c.all, c.prod)
    if k_def != plain:
        raise ConsistencyError(f"k-semiprime and semiprime disagree on k-ideal {Q}")
    return k_def


def is_k_maximal(M: IdealSet) -> bool:
    """No proper k-ideal strictly contains M.  Maximality among all ideals can
    differ (see :func:`is_maximal`)."""
    c = _require_k(M, proper=True)
    return _maximal_def(c, M.mask, c.k)


def is_maximal(M: IdealSet) -> bool:
    c = _ctx(M.parent)
    if M.mask not in c.all:
        raise PreconditionError(f"{M} is not an ideal")
    return _maximal_def(c, M.mask, c.all)


def is_prime(P: IdealSet) -> bool:
    c = _ctx(P.parent)
    if P.mask not in c.all:
        raise PreconditionError(f"{P} is not an ideal")
    return _prime_def(c, P.mask, c.all, c.prod)


def is_k_irreducible(I: IdealSet, strong: bool = False) -> bool:
    c = _require_k(I, proper=False)
    if not strong:
        return _irreducible_def(c, I.mask, c.k)
    definitional = _strong_def(c, I.mask, c.k)
    if definitional != strong_elementwise(I.parent, I.mask):
        raise ConsistencyError(f"strong irreducibility criteria disagree on {I}")
    return definitional


# ------------------------------------------------------------ radicals and spectrum


def k_prime_masks(R: FiniteSemiring) -> list[int]:
    c = _ctx(R)
    return [p for p in c.k if _prime_def(c, p, c.k, c.kprod)]


def k_radical_mask(R: FiniteSemiring, m: int) -> int:
    return intersect_all(R, (p for p in k_prime_masks(R) if _sub(m, p)))


def radical_powers_mask(R: FiniteSemiring, m: int) -> int:
    out = 0
    for r in R.elements():
        x = r
        seen = set()
        while x not in seen:
            if m >> x & 1:
                out |= 1 << r
                break
            seen.add(x)
            x = R.mul[x][r]
    return out


def k_radical(I: IdealSet, mode: str = "intersection") -> IdealSet:
    """``intersection``: meet of the k-primes above I (R if there are none).
    ``powers``: {r : r^n ∈ I for some n >= 1}."""
    _require_k(I, proper=False)
    if mode == "intersection":
        return IdealSet(I.parent, k_radical_mask(I.parent, I.mask))
    if mode == "powers":
        return IdealSet(I.parent, radical_powers_mask(I.parent, I.mask))
    raise PreconditionError(f"unknown radical mode {mode!r}")


def is_multiplicatively_closed(R: FiniteSemiring, m: int) -> bool:
    if m == 0:
        return False
    return all(m >> R.mul[x][y] & 1 for x in bits(m) for y in bits(m))


def multiplicatively_closed_sets(R: FiniteSemiring) -> list[int]:
    if R.order > 16:
        raise PreconditionError("multiplicatively closed set scan limited to order 16")
    return [m for m in range(1, 1 << R.order) if is_multiplicatively_closed(R, m)]


def radical_tset_mask(R: FiniteSemiring, m: int) -> int:
    """{r : every multiplicatively closed set containing r meets I}, by
    scanning all multiplicatively closed subsets."""
    out = R.full_mask
    for s in multiplicatively_closed_sets(R):
        if s & m == 0:
            out &= ~s
    return out


@dataclass(frozen=True)
class SpectrumK:
    parent: FiniteSemiring
    primes: tuple[int, ...]
    closed_sets: dict  # k-ideal mask -> bitmask over prime indices
    minimal_primes: tuple[int, ...]
    components: tuple[int, ...]  # bitmasks over prime indices

    def V(self, mask: int) -> int:
        return _v(self.primes, mask)

    def prime_ideals(self) -> list[IdealSet]:
        return [IdealSet(self.parent, p) for p in self.primes]


def _v(primes, mask):
    out = 0
    for i, p in enumerate(primes):
        if _sub(mask, p):
            out |= 1 << i
    return out


def spectrum(R: FiniteSemiring) -> SpectrumK:
    """k-primes, the closed sets V(I), minimal primes and the irreducible
    components.  Components are found from the closed-set family alone (maximal
    nonempty closed sets that are not a union of two proper closed subsets)."""
    c = _ctx(R)
    primes = tuple(k_prime_masks(R))
    closed = {m: _v(primes, m) for m in c.k}
    minimal = tuple(p for p in primes if not any(q != p and _sub(q, p) for q in primes))
    family = sorted(set(closed.values()) | {0, (1 << len(primes)) - 1})
    irreducible = []
    for f in family:
        if f == 0:
            continue
        proper = [g for g in family if _sub(g, f) and g != f]
        if not any(g | h == f for g in proper for h in proper):
            irreducible.append(f)
    comps = tuple(sorted(f for f in irreducible if not any(g != f and _sub(f, g) for g in irreducible)))
    return SpectrumK(R, primes, closed, minimal, comps)


# ------------------------------------------------------------ constructions


def _maximal_members(masks):
    return [m for m in masks if not any(o != m and _sub(m, o) for o in masks)]


def _smallest(masks):
    return min(masks, key=sort_key)


def maximal_disjoint_ideal(R: FiniteSemiring, I: IdealSet, S) -> IdealSet:
    """A k-ideal containing I, disjoint from the multiplicatively closed set S
    and maximal with that property."""
    if I.parent != R:
        raise StructureError("ideal from another semiring")
    c = _require_k(I, proper=False)
    s = S.mask if isinstance(S, IdealSet) else IdealSet.of(R, S).mask
    if not is_multiplicatively_closed(R, s):
        raise PreconditionError("S must be nonempty and closed under multiplication")
    if s & I.mask:
        raise PreconditionError("S meets I")
    cands = [m for m in c.k if _sub(I.mask, m) and m & s == 0]
    return IdealSet(R, _smallest(_maximal_members(cands)))


def square_chain(R: FiniteSemiring, x: int) -> IdealSet:
    """{x^n : n >= 1}: the smallest multiplicatively closed set containing x
    (closure of {x} under pairwise products)."""
    m = 1 << x
    while True:
        nxt = m
        for a in bits(m):
            for b in bits(m):
                nxt |= 1 << R.mul[a][b]
        if nxt == m:
            return IdealSet(R, m)
        m = nxt


def is_add_mul_closed(R: FiniteSemiring, m: int) -> bool:
    ms = bits(m)
    return all(m >> R.add[a][b] & 1 and m >> R.mul[a][b] & 1 for a in ms for b in ms)


def prime_avoidance_witness(R: FiniteSemiring, I, Ps) -> int | None:
    """Smallest x in I outside every P in Ps, or None when I lies inside one
    of them.  Ps[2:] must be k-prime."""
    i = I.mask if isinstance(I, IdealSet) else IdealSet.of(R, I).mask
    if i == 0 or not is_add_mul_closed(R, i):
        raise PreconditionError("I must be nonempty and stable under + and ·")
    c = _ctx(R)
    pm = [P.mask for P in Ps]
    for P in Ps:
        if P.parent != R:
            raise StructureError("ideal from another semiring")
    for j, p in enumerate(pm):
        if p not in c.kset:
            raise PreconditionError(f"Ps[{j}] is not a k-ideal")
        if j >= 2 and not _prime_def(c, p, c.k, c.kprod):
            raise PreconditionError(f"Ps[{j}] must be k-prime")
    if any(_sub(i, p) for p in pm):
        return None
    union = 0
    for p in pm:
        union |= p
    rest = i & ~union
    return bits(rest)[0] if rest else None


def separator_ideal(R: FiniteSemiring, I: IdealSet, x: int) -> IdealSet:
    """A k-ideal containing I, avoiding x, maximal with that property."""
    c = _require_k(I, proper=True)
    if x == R.zero or I.mask >> x & 1:
        raise PreconditionError("x must be nonzero and outside I")
    cands = [m for m in c.k if _sub(I.mask, m) and not m >> x & 1]
    return IdealSet(R, _smallest(_maximal_members(cands)))


def k_irreducible_decomposition(I: IdealSet) -> list[IdealSet]:
    """Finite irredundant list of k-irreducible ideals meeting in I."""
    c = _require_k(I, proper=True)
    R = I.parent

    def split(p):
        pairs = [(a, b) for a in c.k for b in c.k
                 if a < b and a != p and b != p and a & b == p]
        if not pairs:
            return [p]
        a, b = min(pairs, key=lambda ab: (ab[0] | ab[1], ab[0], ab[1]))
        return split(a) + split(b)

    parts = sorted(set(split(I.mask)), key=sort_key)
    changed = True
    while changed:
        changed = False
        for j, p in enumerate(parts):
            others = parts[:j] + parts[j + 1:]
            if others and _sub(intersect_all(R, others), p):
                parts = others
                changed = True
                break
    return [IdealSet(R, p) for p in parts]


def minimal_strongly_irreducible_above(I: IdealSet) -> IdealSet:
    c = _require_k(I, proper=True)
    cands = [m for m in c.k if _sub(I.mask, m) and _strong_def(c, m, c.k)]
    minimal = [m for m in cands if not any(o != m and _sub(o, m) for o in cands)]
    return IdealSet(I.parent, _smallest(minimal))


@dataclass(frozen=True)
class StructureFlags:
    arithmetic: bool
    k_chain: bool
    arithmetic_all_ideals: bool


def structure_flags(R: FiniteSemiring) -> StructureFlags:
    """``arithmetic`` is distributivity of the k-ideal lattice; the all-ideals
    reading is reported alongside."""
    lat = lattice_check(R)
    return StructureFlags(lat.distributive, lat.totally_ordered, ideal_lattice_check(R).distributive)


def finite_generating_set(R: FiniteSemiring, m: int) -> list[int]:
    """Greedy generator extraction: add the smallest uncovered element until
    the generated ideal is m."""
    gens = []
    g = gen_mask(R, 0)
    while g != m:
        x = bits(m & ~g)[0]
        gens.append(x)
        g = gen_mask(R, g | 1 << x)
    return gens
