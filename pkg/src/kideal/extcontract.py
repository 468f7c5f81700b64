"""k-extension and k-contraction of ideals along a semiring homomorphism and
the exhaustive check of the extension/contraction calculus."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import k_radical_mask
from .errors import PreconditionError, StructureError
from .ideals import (
    IdealSet,
    format_ideal,
    gen_mask,
    ideal_masks,
    k_product_mask,
    k_violation,
    kclose_mask,
    quotient_mask,
    ideal_violation,
)
from .semiring import Homomorphism

EQUAL = "EQUAL"
STRICT = "STRICT"
FAIL = "FAIL"

# Items checked as contract; "7a".."7c" are the contraction forms and the
# "-lit" probes evaluate the extension forms without being asserted.
CONTRACT_ITEMS = ("1", "2", "3", "4a", "4b", "4c", "4d", "5", "6a", "6b", "6c", "6d", "7a", "7b", "7c", "8")
PROBE_ITEMS = ("7a-lit", "7b-lit", "7c-lit", "7d-lit")


def _is_k(R, m):
    return ideal_violation(R, m) is None and k_violation(R, m) is None


def contract_mask(phi: Homomorphism, m: int) -> int:
    return phi.preimage_mask(m)


def extend_mask(phi: Homomorphism, m: int) -> int:
    T = phi.target
    return kclose_mask(T, gen_mask(T, phi.image_mask(m)))


def contraction(phi: Homomorphism, J: IdealSet) -> IdealSet:
    """J^c: the preimage of a k-ideal of the target."""
    if J.parent != phi.target:
        raise StructureError("ideal does not live in the target of the homomorphism")
    if not _is_k(J.parent, J.mask):
        raise PreconditionError(f"{J} is not a k-ideal of {J.parent.name}")
    return IdealSet(phi.source, contract_mask(phi, J.mask))


def extension(phi: Homomorphism, I: IdealSet) -> IdealSet:
    """I^e: k-closure of the ideal generated by the image of I."""
    if I.parent != phi.source:
        raise StructureError("ideal does not live in the source of the homomorphism")
    if not _is_k(I.parent, I.mask):
        raise PreconditionError(f"{I} is not a k-ideal of {I.parent.name}")
    return IdealSet(phi.target, extend_mask(phi, I.mask))


def kernel_ideal(phi: Homomorphism) -> IdealSet:
    return IdealSet(phi.source, phi.preimage_mask(1 << phi.target.zero))


@dataclass
class ItemResult:
    status: str = EQUAL
    instances: int = 0
    strict: int = 0
    witness: tuple | None = None

    def record(self, holds: bool, equal: bool, witness: tuple) -> None:
        self.instances += 1
        if not holds:
            if self.status != FAIL:
                self.status = FAIL
                self.witness = witness
            return
        if not equal:
            self.strict += 1
            if self.status == EQUAL:
                self.status = STRICT
                self.witness = witness


@dataclass
class CepReport:
    hom: Homomorphism
    items: dict[str, ItemResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.items[i].status != FAIL for i in CONTRACT_ITEMS)

    def lines(self) -> list[str]:
        out = []
        for item in CONTRACT_ITEMS + PROBE_ITEMS:
            r = self.items[item]
            line = f"CEP {self.hom.ident} ITEM {item} {r.status}"
            if r.witness is not None:
                line += " " + " ".join(self._fmt(w) for w in r.witness)
            out.append(line)
        return out

    def _fmt(self, w):
        side, m = w
        R = self.hom.source if side == "s" else self.hom.target
        return format_ideal(R, m)


def _sub(a, b):
    return a & ~b == 0


def cep_verify(phi: Homomorphism) -> CepReport:
    """Check every item of the extension/contraction calculus over all
    k-ideals (and pairs) of source and target."""
    S, T = phi.source, phi.target
    KS = ideal_masks(S, k_only=True)
    KT = ideal_masks(T, k_only=True)
    rep = CepReport(phi, {i: ItemResult() for i in CONTRACT_ITEMS + PROBE_ITEMS})
    it = rep.items
    e = {m: extend_mask(phi, m) for m in KS}
    c = {m: contract_mask(phi, m) for m in KT}

    def incl(item, small, big, wit):
        it[item].record(_sub(small, big), small == big, wit)

    def eq(item, a, b, wit):
        it[item].record(a == b, True, wit)

    for j in KT:
        it["1"].record(_is_k(S, c[j]), True, (("t", j),))
    ker = kernel_ideal(phi).mask
    it["2"].record(_is_k(S, ker), True, (("s", ker),))
    for i in KS:
        it["3"].record(_is_k(T, e[i]), True, (("s", i),))

    for i in KS:
        incl("4a", i, c[e[i]], (("s", i),))
        eq("4d", e[i], e[c[e[i]]], (("s", i),))
    for j in KT:
        incl("4b", e[c[j]], j, (("t", j),))
        eq("4c", c[j], c[e[c[j]]], (("t", j),))

    # mutually inverse bijections between the two fixed-point sets
    fix_s = [i for i in KS if c[e[i]] == i]
    fix_t = [j for j in KT if e[c[j]] == j]
    bad = None
    for i in fix_s:
        if e[i] not in fix_t or c[e[i]] != i:
            bad = (("s", i),)
            break
    if bad is None:
        for j in fix_t:
            if c[j] not in fix_s or e[c[j]] != j:
                bad = (("t", j),)
                break
    if bad is None and len(fix_s) != len(fix_t):
        bad = ()
    it["5"].record(bad is None, True, bad or ())

    for i1 in KS:
        for i2 in KS:
            w = (("s", i1), ("s", i2))
            incl("6a", e[i1 & i2], e[i1] & e[i2], w)
            eq("6b", e[k_product_mask(S, i1, i2)], k_product_mask(T, e[i1], e[i2]), w)
            incl("6c", extend_mask(phi, quotient_mask(S, i1, i2)), quotient_mask(T, e[i1], e[i2]), w)
            # literal extension-form probes of the contraction items
            it["7a-lit"].record(e[i1 & i2] == e[i1] & e[i2], True, w)
            lhs = e[k_product_mask(S, i1, i2)]
            rhs = k_product_mask(T, e[i1], e[i2])
            it["7b-lit"].record(_sub(rhs, lhs), lhs == rhs, w)
            incl("7c-lit", extend_mask(phi, quotient_mask(S, i1, i2)), quotient_mask(T, e[i1], e[i2]), w)
    for i in KS:
        w = (("s", i),)
        lhs = e[k_radical_mask(S, i)]
        rhs = k_radical_mask(T, e[i])
        incl("6d", lhs, rhs, w)
        it["7d-lit"].record(lhs == rhs, True, w)

    for j1 in KT:
        for j2 in KT:
            w = (("t", j1), ("t", j2))
            eq("7a", c[j1 & j2], c[j1] & c[j2], w)
            incl("7b", k_product_mask(S, c[j1], c[j2]), c[k_product_mask(T, j1, j2)], w)
            incl("7c", c[quotient_mask(T, j1, j2)], quotient_mask(S, c[j1], c[j2]), w)
    for j in KT:
        incl("8", c[k_radical_mask(T, j)], k_radical_mask(S, c[j]), (("t", j),))
    return rep
