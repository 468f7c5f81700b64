"""Ideals of the semiring (ℕ, +, ·) as eventually periodic subsets of ℕ.

A set is stored as ``(threshold, period, low, residues)``: ``n`` is a member
iff ``low[n]`` when ``n < threshold`` and ``residues[n % period]`` otherwise.
Every operation returns the canonical form (least period, then least
threshold), so equality of sets is equality of the dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InvalidParameter, PreconditionError
from .semiring import Verdict


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    threshold: int
    period: int
    low: tuple[bool, ...]
    residues: tuple[bool, ...]

    def __post_init__(self):
        if self.threshold < 0 or self.period < 1:
            raise InvalidParameter("threshold must be >= 0 and period >= 1")
        if len(self.low) != self.threshold or len(self.residues) != self.period:
            raise InvalidParameter("low/residue bit lengths do not match threshold/period")

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return self.low[n]
        return self.residues[n % self.period]

    def members_below(self, bound: int) -> list[int]:
        return [n for n in range(bound) if n in self]

    @classmethod
    def from_predicate(cls, member: Callable[[int], bool], threshold: int, period: int) -> EventuallyPeriodicSet:
        """Build from a membership test known to be ``period``-periodic from
        ``threshold`` on, then canonicalize."""
        low = tuple(bool(member(n)) for n in range(threshold))
        res = [False] * period
        for n in range(threshold, threshold + period):
            res[n % period] = bool(member(n))
        return cls(threshold, period, low, tuple(res)).canonical()

    def canonical(self) -> EventuallyPeriodicSet:
        T, p = self.threshold, self.period
        # the least eventual period divides p
        best = p
        for d in range(1, p + 1):
            if p % d == 0 and all(self.residues[r] == self.residues[(r + d) % p] for r in range(p)):
                best = d
                break
        # shrink the threshold while the element just below it already
        # follows the periodic pattern
        while T > 0 and ((T - 1) in self) == ((T - 1 + best) in self):
            T -= 1
        low = tuple((n in self) for n in range(T))
        res = [False] * best
        for n in range(T, T + best):
            res[n % best] = n in self
        return EventuallyPeriodicSet(T, best, low, tuple(res))

    def describe(self) -> str:
        T, p = self.threshold, self.period
        if p == 1 and self.residues[0]:
            missing = [n for n in range(T) if not self.low[n]]
            return "N" if not missing else "N \\ {" + ",".join(map(str, missing)) + "}"
        if p == 1:
            return "{" + ",".join(str(n) for n in range(T) if self.low[n]) + "}"
        if self == multiples(p):
            return f"{p}N"
        finite = [str(n) for n in range(T) if self.low[n]]
        res = [str(r) for r in range(p) if self.residues[r]]
        tail = f"{{n >= {T} : n mod {p} in {{{','.join(res)}}}}}"
        return ("{" + ",".join(finite) + "} ∪ " + tail) if finite else tail

    def format(self) -> str:
        low = "".join("1" if b else "0" for b in self.low)
        res = "".join("1" if b else "0" for b in self.residues)
        return f"T={self.threshold} p={self.period} low={low or '-'} residues={res}"


NatIdeal = EventuallyPeriodicSet


def multiples(p: int) -> EventuallyPeriodicSet:
    return EventuallyPeriodicSet(0, p, (), tuple(r == 0 for r in range(p)))


def nat_ideal_generated(generators: Sequence[int]) -> EventuallyPeriodicSet:
    """All ℕ-linear combinations of the generators."""
    gens = list(generators)
    if not gens or any((not isinstance(g, int)) or g <= 0 for g in gens):
        raise InvalidParameter("generators must be a nonempty list of positive integers")
    g = math.gcd(*gens)
    top = max(gens)
    # every multiple of g at or above this bound is representable
    bound = top * top // g + top
    reach = [False] * (bound + g)
    reach[0] = True
    for n in range(1, bound + g):
        reach[n] = any(n >= a and reach[n - a] for a in gens)
    for n in range(bound, bound + g):
        assert reach[n] == (n % g == 0)
    return EventuallyPeriodicSet.from_predicate(
        lambda n: reach[n] if n < bound + g else n % g == 0, bound, g)


def nat_is_ideal(I: EventuallyPeriodicSet) -> bool:
    """Contains 0 and closed under + (hence under · by naturals), decided on
    the window [0, T + 2p): sums of two large members reduce by multiples of
    p without changing membership."""
    if 0 not in I:
        return False
    w = I.threshold + 2 * I.period
    mem = I.members_below(w)
    return all((x + y) in I for x in mem for y in mem)


def nat_is_k_ideal(I: EventuallyPeriodicSet) -> Verdict:
    """Witness ``(x, y)`` with x, x+y in I and y not in I, first in (x, y) order.

    Window argument: if x >= T + p then x - p is in I iff x is, and x - p + y
    is in I iff x + y is (both are >= T), so x can be lowered; likewise
    y >= T + p can be lowered by p keeping y out and x + y's membership.
    A violation therefore has one with x, y < T + p, inside [0, T + 2p).
    """
    w = I.threshold + 2 * I.period
    for x in range(w):
        if x not in I:
            continue
        for y in range(w):
            if (x + y) in I and y not in I:
                return Verdict(False, (x, y))
    return Verdict(True)


def nat_k_closure(I: EventuallyPeriodicSet) -> EventuallyPeriodicSet:
    """{r : r + x in I for some x in I}.

    For x >= T, x and r + x keep their membership when x moves by p, so
    x < T + p suffices.  For r >= T the condition only sees r mod p, so the
    result is p-periodic from T on.
    """
    T, p = I.threshold, I.period
    xs = [x for x in range(T + p) if x in I]

    def member(r):
        return any((r + x) in I for x in xs)

    return EventuallyPeriodicSet.from_predicate(member, T, p)


def nat_combine(I: EventuallyPeriodicSet, J: EventuallyPeriodicSet, op: str) -> EventuallyPeriodicSet:
    """``sum`` = {x + y}; ``intersect`` = I ∩ J.

    The sum is lcm-periodic from T1 + T2 + lcm: a decomposition n = x + y
    has x >= T1 or y >= T2 once n >= T1 + T2, and that summand can absorb a
    shift by lcm in either direction when n >= T1 + T2 + lcm.
    """
    L = I.period * J.period // math.gcd(I.period, J.period)
    if op == "intersect":
        return EventuallyPeriodicSet.from_predicate(
            lambda n: n in I and n in J, max(I.threshold, J.threshold), L)
    if op == "sum":
        T = I.threshold + J.threshold + L

        def member(n):
            return any(x in I and (n - x) in J for x in range(n + 1))

        return EventuallyPeriodicSet.from_predicate(member, T, L)
    raise InvalidParameter(f"unknown op {op!r}")


def require_nat_ideal(I: EventuallyPeriodicSet) -> None:
    if not nat_is_ideal(I):
        raise PreconditionError(f"{I.describe()} is not an ideal of N")


NATURALS = EventuallyPeriodicSet(0, 1, (), (True,))
ZERO_IDEAL = EventuallyPeriodicSet(1, 1, (True,), (False,))
