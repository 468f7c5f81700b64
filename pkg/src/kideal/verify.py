"""Exhaustive verification suites.  Each suite checks a family of statements
about k-ideals on one finite semiring and returns one CheckRecord per
check id (cep records are per homomorphism)."""

from __future__ import annotations

import itertools
from typing import Callable, Iterable

from . import classify as cl
from .extcontract import CONTRACT_ITEMS, PROBE_ITEMS, FAIL as CEP_FAIL, STRICT, cep_verify
from .ideals import (
    IdealSet,
    format_ideal,
    gen_mask,
    ideal_masks,
    ideal_product_mask,
    intersect_all,
    is_k_ideal_mask,
    k_product_mask,
    kclose_mask,
    lattice_check,
    quotient_mask,
    annihilator_mask,
    sum_mask,
)
from .report import FAIL, PASS, WITNESS, CheckRecord
from .semiring import FiniteSemiring, Homomorphism, corpus, enumerate_homomorphisms

SUITES = ("closure", "prime", "radical", "irreducible", "cep")

# check id -> statement it verifies (also rendered as the README traceability table)
CHECKS = {
    "closure.least": "the k-closure of an ideal is the least k-ideal containing it",
    "closure.zero": "the k-closure of the zero ideal is zero",
    "closure.whole": "the k-closure of R is R",
    "closure.idempotent": "k-closure is idempotent",
    "closure.monotone": "I ⊆ J implies C(I) ⊆ C(J)",
    "closure.union": "C(⟨I ∪ J⟩) ⊇ C(I) ∪ C(J)",
    "closure.intersection": "C(∩ I_λ) = ∩ C(I_λ) (pairs and triples)",
    "closure.fixpoint": "I is a k-ideal iff I = C(I)",
    "closure.product": "C(IJ) ⊇ C(I)C(J)",
    "kideal.intersection": "intersections of k-ideals are k-ideals",
    "kideal.sum-closed": "probe: the sum of two k-ideals is a k-ideal (witness search only)",
    "kproduct.within-meet": "IJ ⊆ I ∩ J for k-ideals",
    "annihilator.k-ideal": "Ann(X) is a k-ideal for nonempty X ≠ {0}",
    "quotient.k-ideal": "(I : J) is a k-ideal for a k-ideal I and an ideal J",
    "quotient.identities": "((I:J):K) = (I:JK) = ((I:K):J), (I∩I' : J) = (I:J)∩(I':J), (I : J+K) = (I:J)∩(I:K), all k-ideals",
    "lattice.modular": "the lattice of k-ideals is modular",
    "exchange.maximal": "k-maximal iff k-ideal and maximal",
    "exchange.prime": "k-prime iff k-ideal and prime",
    "exchange.semiprime": "k-semiprime iff k-ideal and semiprime",
    "exchange.irreducible": "k-irreducible iff k-ideal and irreducible",
    "exchange.strongly-irreducible": "k-strongly irreducible iff k-ideal and strongly irreducible",
    "kmaximal.exists": "every proper k-ideal lies in a k-maximal ideal",
    "kmaximal.prime": "k-maximal ideals are k-prime",
    "spectrum.nonempty": "a nonzero semiring has a minimal k-prime",
    "prime.elementwise": "for a k-ideal, k-primality equals elementwise primality",
    "prime.avoidance": "prime avoidance with two arbitrary k-ideals and the rest k-prime",
    "noetherian.finite-generation": "every k-prime ideal is finitely generated (finite carrier)",
    "spectrum.components": "irreducible components of spec_k are exactly V(P) for minimal k-primes",
    "spectrum.closed-sets": "V(I∩J) = V(I) ∪ V(J), V(C(I+J)) = V(I) ∩ V(J), V reverses inclusion",
    "radical.k-ideal": "R_k(I) is a k-ideal containing I",
    "radical.idempotent": "R_k(R_k(I)) = R_k(I)",
    "radical.product": "R_k(IJ) = R_k(I∩J) = R_k(I) ∩ R_k(J)",
    "radical.whole": "R_k(I) = R iff I = R",
    "prime.complement": "a k-ideal is k-prime iff its complement is multiplicatively closed",
    "prime.maximal-disjoint": "a k-ideal maximal among those missing a multiplicatively closed S is k-prime",
    "radical.tset": "R_k(I) = {r : every multiplicatively closed set containing r meets I}",
    "radical.square-chain": "for k-semiprime I and x ∉ I, the square chain of x misses I",
    "radical.equivalence": "k-semiprime iff intersection of k-primes iff k-radical",
    "radical.least-semiprime": "R_k(I) is the least k-semiprime ideal containing I",
    "radical.modes": "intersection and powers computations of R_k agree",
    "irreducible.elementwise": "k-strongly irreducible iff C(⟨a⟩) ∩ C(⟨b⟩) ⊆ I forces a ∈ I or b ∈ I",
    "irreducible.separator": "x ∉ I (x ≠ 0) is separated from I by a k-irreducible ideal",
    "irreducible.representation": "a proper k-ideal is the intersection of the k-irreducibles above it",
    "irreducible.decomposition": "finite irredundant decomposition into k-irreducibles",
    "irreducible.prime-split": "k-prime iff k-semiprime and k-strongly irreducible",
    "irreducible.minimal-strong": "a proper k-ideal lies in a minimal k-strongly irreducible ideal",
    "irreducible.chain": "all k-ideals k-strongly irreducible iff the k-ideals form a chain",
    "irreducible.arithmetic": "arithmetic iff k-irreducible and k-strongly irreducible coincide",
    "irreducible.arithmetic-representation": "in an arithmetic semiring each k-ideal is the meet of the k-strongly irreducibles above it",
}
CEP_CHECKS = {
    "cep.1": "J^c is a k-ideal",
    "cep.2": "ker φ is a k-ideal",
    "cep.3": "I^e is a k-ideal",
    "cep.4a": "I ⊆ I^ec",
    "cep.4b": "J ⊇ J^ce",
    "cep.4c": "J^c = J^cec",
    "cep.4d": "I^e = I^ece",
    "cep.5": "e and c are inverse bijections between the fixed points",
    "cep.6a": "(I1∩I2)^e ⊆ I1^e ∩ I2^e",
    "cep.6b": "(I1I2)^e = I1^e I2^e",
    "cep.6c": "(I1:I2)^e ⊆ (I1^e:I2^e)",
    "cep.6d": "R_k(I)^e ⊆ R_k(I^e)",
    "cep.7a": "(J1∩J2)^c = J1^c ∩ J2^c",
    "cep.7b": "(J1J2)^c ⊇ J1^c J2^c",
    "cep.7c": "(J1:J2)^c ⊆ (J1^c:J2^c)",
    "cep.8": "R_k(J)^c ⊆ R_k(J^c)",
    "cep.7a-lit": "probe: (I1∩I2)^e = I1^e ∩ I2^e",
    "cep.7b-lit": "probe: (I1I2)^e ⊇ I1^e I2^e",
    "cep.7c-lit": "probe: (I1:I2)^e ⊆ (I1^e:I2^e)",
    "cep.7d-lit": "probe: R_k(I)^e = R_k(I^e)",
    "cep.6a-strict": "whether a strict instance of (I1∩I2)^e ⊆ I1^e ∩ I2^e occurs",
}
ALL_CHECKS = {**CHECKS, **CEP_CHECKS}


def _sub(a, b):
    return a & ~b == 0


class Tally:
    """Aggregates instances of one statement on one semiring."""

    def __init__(self, check_id: str, R: FiniteSemiring, probe: bool = False):
        self.check_id = check_id
        self.R = R
        self.probe = probe
        self.instances = 0
        self.strict = 0
        self.track_strict = False
        self.failure = None
        self.strict_witness = None

    def fmt(self, *masks) -> str:
        return " ".join(format_ideal(self.R, m) for m in masks)

    def check(self, ok: bool, witness: Callable[[], str] | str = "", strict: bool | None = None) -> None:
        self.instances += 1
        if strict is not None:
            self.track_strict = True
        if not ok:
            if self.failure is None:
                self.failure = witness() if callable(witness) else witness
        elif strict:
            self.strict += 1
            if self.strict_witness is None:
                self.strict_witness = witness() if callable(witness) else witness

    def record(self) -> CheckRecord:
        payload = f"{self.R.name} instances={self.instances}"
        if self.track_strict:
            payload += f" strict={self.strict}"
        if self.failure is not None:
            status = WITNESS if self.probe else FAIL
            return CheckRecord(self.check_id, status, f"{payload} witness={self.failure}")
        if self.strict_witness is not None:
            payload += f" strict_witness={self.strict_witness}"
        return CheckRecord(self.check_id, PASS, payload)


def _tallies(R, ids, probes=()):
    return {i: Tally(i, R, probe=i in probes) for i in ids}


def _records(ts):
    return [t.record() for t in ts.values()]


# ------------------------------------------------------------ closure suite


def closure_suite(R: FiniteSemiring) -> list[CheckRecord]:
    ids = ["closure.least", "closure.zero", "closure.whole", "closure.idempotent",
           "closure.monotone", "closure.union", "closure.intersection", "closure.fixpoint",
           "closure.product", "kideal.intersection", "kideal.sum-closed", "kproduct.within-meet",
           "annihilator.k-ideal", "quotient.k-ideal", "quotient.identities", "lattice.modular"]
    t = _tallies(R, ids, probes={"kideal.sum-closed"})
    A = ideal_masks(R)
    K = ideal_masks(R, k_only=True)
    C = {a: kclose_mask(R, a) for a in A}
    full = R.full_mask
    zero = gen_mask(R, 0)

    for a in A:
        least = intersect_all(R, (k for k in K if _sub(a, k)))
        t["closure.least"].check(C[a] == least and C[a] in K, lambda: t["closure.least"].fmt(a))
        t["closure.idempotent"].check(C[C[a]] == C[a], lambda: t["closure.idempotent"].fmt(a))
        t["closure.fixpoint"].check((a in K) == (C[a] == a), lambda: t["closure.fixpoint"].fmt(a))
    t["closure.zero"].check(C[zero] == zero, "C(0)")
    t["closure.whole"].check(C[full] == full, "C(R)")
    for a, b in itertools.product(A, A):
        w = lambda: t["closure.monotone"].fmt(a, b)  # noqa: E731
        if _sub(a, b):
            t["closure.monotone"].check(_sub(C[a], C[b]), w)
        u = kclose_mask(R, gen_mask(R, a | b))
        t["closure.union"].check(_sub(C[a] | C[b], u), w, strict=(C[a] | C[b]) != u)
        t["closure.intersection"].check(C[a & b] == C[a] & C[b], w)
        lhs = kclose_mask(R, ideal_product_mask(R, a, b))
        rhs = k_product_mask(R, C[a], C[b])
        t["closure.product"].check(_sub(rhs, lhs), w, strict=rhs != lhs)
    for a, b, c in itertools.combinations(A, 3):
        t["closure.intersection"].check(C[a & b & c] == C[a] & C[b] & C[c],
                                        lambda: t["closure.intersection"].fmt(a, b, c))

    for a, b in itertools.product(K, K):
        w = lambda: t["kideal.intersection"].fmt(a, b)  # noqa: E731
        t["kideal.intersection"].check(is_k_ideal_mask(R, a & b), w)
        s = gen_mask(R, sum_mask(R, a, b))
        t["kideal.sum-closed"].check(is_k_ideal_mask(R, s), w)
        p = k_product_mask(R, a, b)
        t["kproduct.within-meet"].check(_sub(p, a & b), w, strict=p != a & b)

    subsets = range(1, 1 << R.order) if R.order <= 12 else [1 << x for x in R.elements()]
    for x in subsets:
        if x == 1 << R.zero:
            continue
        t["annihilator.k-ideal"].check(is_k_ideal_mask(R, annihilator_mask(R, x)),
                                       lambda: t["annihilator.k-ideal"].fmt(x))

    for i in K:
        for j in A:
            t["quotient.k-ideal"].check(is_k_ideal_mask(R, quotient_mask(R, i, j)),
                                        lambda: t["quotient.k-ideal"].fmt(i, j))
    tq = t["quotient.identities"]
    for i in K:
        for j in A:
            qij = quotient_mask(R, i, j)
            for k in A:
                a1 = quotient_mask(R, qij, k)
                a2 = quotient_mask(R, i, ideal_product_mask(R, j, k))
                a3 = quotient_mask(R, quotient_mask(R, i, k), j)
                a4 = quotient_mask(R, i, gen_mask(R, sum_mask(R, j, k)))
                a5 = qij & quotient_mask(R, i, k)
                ok = a1 == a2 == a3 and a4 == a5 and all(is_k_ideal_mask(R, m) for m in (a1, a4))
                tq.check(ok, lambda: tq.fmt(i, j, k))
            for i2 in K:
                lhs = quotient_mask(R, i & i2, j)
                ok = lhs == qij & quotient_mask(R, i2, j) and is_k_ideal_mask(R, lhs)
                tq.check(ok, lambda: tq.fmt(i, i2, j))

    lat = lattice_check(R)
    t["lattice.modular"].check(lat.modular, lambda: t["lattice.modular"].fmt(*lat.modular_witness))
    return _records(t)


# ------------------------------------------------------------ prime suite


def prime_suite(R: FiniteSemiring) -> list[CheckRecord]:
    ids = ["exchange.maximal", "exchange.prime", "exchange.semiprime", "prime.elementwise",
           "prime.complement", "prime.maximal-disjoint", "prime.avoidance", "kmaximal.exists",
           "kmaximal.prime", "spectrum.nonempty", "spectrum.components", "spectrum.closed-sets",
           "noetherian.finite-generation"]
    t = _tallies(R, ids)
    A = ideal_masks(R)
    K = ideal_masks(R, k_only=True)
    Kset = set(K)
    full = R.full_mask

    for a in A:
        is_k = a in Kset
        w = lambda: format_ideal(R, a)  # noqa: E731
        t["exchange.maximal"].check(cl.is_k_maximal_mask(R, a) == (cl.is_maximal_mask(R, a) and is_k), w)
        t["exchange.prime"].check(cl.is_k_prime_mask(R, a) == (cl.is_prime_mask(R, a) and is_k), w)
        t["exchange.semiprime"].check(cl.is_k_semiprime_mask(R, a) == (cl.is_semiprime_mask(R, a) and is_k), w)

    kmax = [m for m in K if cl.is_k_maximal_mask(R, m)]
    for p in K:
        w = lambda: format_ideal(R, p)  # noqa: E731
        kp = cl.is_k_prime_mask(R, p)
        if p != full:
            t["prime.elementwise"].check(kp == cl.prime_elementwise(R, p), w)
            t["kmaximal.exists"].check(any(_sub(p, m) for m in kmax), w)
        comp = full & ~p
        t["prime.complement"].check(kp == cl.is_multiplicatively_closed(R, comp), w)
    for m in kmax:
        t["kmaximal.prime"].check(cl.is_k_prime_mask(R, m), lambda: format_ideal(R, m))

    msets = cl.multiplicatively_closed_sets(R)
    for i in K:
        for s in msets:
            if s & i:
                continue
            P = cl.maximal_disjoint_ideal(R, IdealSet(R, i), IdealSet(R, s))
            t["prime.maximal-disjoint"].check(cl.is_k_prime_mask(R, P.mask),
                                              lambda: f"I={format_ideal(R, i)} S={format_ideal(R, s)}")

    primes = cl.k_prime_masks(R)
    closed = [m for m in range(1, 1 << R.order) if cl.is_add_mul_closed(R, m)]
    ta = t["prime.avoidance"]
    for length in (1, 2, 3):
        for Ps in itertools.product(K, repeat=length):
            if any(p not in primes for p in Ps[2:]):
                continue
            for i in closed:
                if any(_sub(i, p) for p in Ps):
                    continue
                x = cl.prime_avoidance_witness(R, IdealSet(R, i), [IdealSet(R, p) for p in Ps])
                ok = x is not None and i >> x & 1 and not any(p >> x & 1 for p in Ps)
                ta.check(ok, lambda: f"I={format_ideal(R, i)} Ps={ta.fmt(*Ps)}")

    sp = cl.spectrum(R)
    if R.order >= 2:
        t["spectrum.nonempty"].check(len(sp.minimal_primes) > 0, "no minimal k-prime")
    else:
        t["spectrum.nonempty"].check(len(sp.primes) == 0, "trivial semiring has a k-prime")
    expected = sorted(sp.V(p) for p in sp.minimal_primes)
    t["spectrum.components"].check(
        sorted(sp.components) == expected and len(sp.components) == len(sp.minimal_primes),
        lambda: f"components={list(sp.components)} minimal={[format_ideal(R, p) for p in sp.minimal_primes]}")
    tc = t["spectrum.closed-sets"]
    for a, b in itertools.product(K, K):
        va, vb = sp.V(a), sp.V(b)
        ok = sp.V(a & b) == va | vb and sp.V(kclose_mask(R, gen_mask(R, sum_mask(R, a, b)))) == va & vb
        if _sub(a, b):
            ok = ok and _sub(vb, va)
        tc.check(ok, lambda: tc.fmt(a, b))

    for p in primes:
        gens = cl.finite_generating_set(R, p)
        t["noetherian.finite-generation"].check(gen_mask(R, sum(1 << g for g in gens)) == p,
                                                lambda: format_ideal(R, p))
    return _records(t)


# ------------------------------------------------------------ radical suite


def radical_suite(R: FiniteSemiring) -> list[CheckRecord]:
    ids = ["radical.k-ideal", "radical.idempotent", "radical.product", "radical.whole",
           "radical.modes", "radical.tset", "radical.equivalence", "radical.least-semiprime",
           "radical.square-chain"]
    t = _tallies(R, ids)
    K = ideal_masks(R, k_only=True)
    full = R.full_mask
    primes = cl.k_prime_masks(R)
    rad = {a: cl.k_radical_mask(R, a) for a in K}
    semiprimes = [m for m in K if cl.is_k_semiprime_mask(R, m)]

    for a in K:
        w = lambda: format_ideal(R, a)  # noqa: E731
        r = rad[a]
        t["radical.k-ideal"].check(is_k_ideal_mask(R, r) and _sub(a, r), w)
        t["radical.idempotent"].check(rad[r] == r, w)
        t["radical.whole"].check((r == full) == (a == full), w)
        t["radical.modes"].check(r == cl.radical_powers_mask(R, a), w)
        t["radical.tset"].check(r == cl.radical_tset_mask(R, a), w)
        above = [s for s in semiprimes if _sub(a, s)]
        if a != full:
            ok = r in above and all(_sub(r, s) for s in above)
            t["radical.least-semiprime"].check(ok, w)
            sp = cl.is_k_semiprime_mask(R, a)
            inter = any(intersect_all(R, (primes[k] for k in range(len(primes)) if sel >> k & 1)) == a
                        for sel in range(1, 1 << len(primes)))
            t["radical.equivalence"].check(sp == inter == (r == a), w)
            if sp:
                for x in R.elements():
                    if not a >> x & 1:
                        chain = cl.square_chain(R, x).mask
                        t["radical.square-chain"].check(chain & a == 0, lambda: f"{format_ideal(R, a)} x={R.names[x]}")
    for a, b in itertools.product(K, K):
        p = k_product_mask(R, a, b)
        ok = rad[p] == rad[a & b] == rad[a] & rad[b]
        t["radical.product"].check(ok, lambda: t["radical.product"].fmt(a, b))
    return _records(t)


# ------------------------------------------------------------ irreducible suite


def irreducible_suite(R: FiniteSemiring) -> list[CheckRecord]:
    ids = ["exchange.irreducible", "exchange.strongly-irreducible", "irreducible.elementwise",
           "irreducible.separator", "irreducible.representation", "irreducible.decomposition",
           "irreducible.prime-split", "irreducible.minimal-strong", "irreducible.chain",
           "irreducible.arithmetic", "irreducible.arithmetic-representation"]
    t = _tallies(R, ids)
    A = ideal_masks(R)
    K = ideal_masks(R, k_only=True)
    Kset = set(K)
    full = R.full_mask

    for a in A:
        w = lambda: format_ideal(R, a)  # noqa: E731
        is_k = a in Kset
        t["exchange.irreducible"].check(
            cl.is_k_irreducible_mask(R, a) == (cl.is_irreducible_mask(R, a) and is_k), w)
        t["exchange.strongly-irreducible"].check(
            cl.is_k_irreducible_mask(R, a, True) == (cl.is_irreducible_mask(R, a, True) and is_k), w)

    irr = [m for m in K if cl.is_k_irreducible_mask(R, m)]
    strong = [m for m in K if cl.is_k_irreducible_mask(R, m, True)]
    for a in K:
        w = lambda: format_ideal(R, a)  # noqa: E731
        t["irreducible.elementwise"].check((a in strong) == cl.strong_elementwise(R, a), w)
        if a == full:
            continue
        I = IdealSet(R, a)
        for x in R.elements():
            if x == R.zero or a >> x & 1:
                continue
            J = cl.separator_ideal(R, I, x).mask
            t["irreducible.separator"].check(_sub(a, J) and not J >> x & 1 and J in irr,
                                             lambda: f"{format_ideal(R, a)} x={R.names[x]}")
        t["irreducible.representation"].check(intersect_all(R, (j for j in irr if _sub(a, j))) == a, w)
        parts = [P.mask for P in cl.k_irreducible_decomposition(I)]
        irredundant = all(not _sub(intersect_all(R, parts[:k] + parts[k + 1:]), parts[k])
                          for k in range(len(parts))) if len(parts) > 1 else True
        t["irreducible.decomposition"].check(
            intersect_all(R, parts) == a and all(p in irr for p in parts) and irredundant, w)
        kp = cl.is_k_prime_mask(R, a)
        t["irreducible.prime-split"].check(kp == (cl.is_k_semiprime_mask(R, a) and a in strong), w)
        m = cl.minimal_strongly_irreducible_above(I).mask
        cands = [s for s in strong if _sub(a, s)]
        t["irreducible.minimal-strong"].check(
            m in cands and not any(s != m and _sub(s, m) for s in cands), w)

    sf = cl.structure_flags(R)
    t["irreducible.chain"].check((len(strong) == len(K)) == sf.k_chain, f"k_chain={int(sf.k_chain)}")
    coincide = irr == strong
    t["irreducible.arithmetic"].check(
        coincide == sf.arithmetic,
        f"arithmetic={int(sf.arithmetic)} coincide={int(coincide)}")
    if sf.arithmetic:
        for a in K:
            t["irreducible.arithmetic-representation"].check(
                intersect_all(R, (s for s in strong if _sub(a, s))) == a, lambda: format_ideal(R, a))
    else:
        t["irreducible.arithmetic-representation"].check(True)
    return _records(t)


# ------------------------------------------------------------ cep suite


def cep_records(homs: Iterable[Homomorphism]) -> list[CheckRecord]:
    out = []
    strict_6a = 0
    first = None
    n = 0
    for h in homs:
        n += 1
        rep = cep_verify(h)
        for item, line in zip(CONTRACT_ITEMS + PROBE_ITEMS, rep.lines()):
            status = rep.items[item].status
            if item in PROBE_ITEMS:
                rs = WITNESS if status == CEP_FAIL else PASS
            else:
                rs = FAIL if status == CEP_FAIL else PASS
            out.append(CheckRecord(f"cep.{item}", rs, line))
        if rep.items["6a"].status == STRICT:
            strict_6a += 1
            first = first or h.ident
    if strict_6a:
        out.append(CheckRecord("cep.6a-strict", WITNESS, f"strict in {strict_6a} of {n} homomorphisms, first {first}"))
    else:
        out.append(CheckRecord("cep.6a-strict", PASS, f"no strict instance among {n} homomorphisms (documented absent)"))
    return out


def homs_around(R: FiniteSemiring, others: Iterable[FiniteSemiring]) -> list[Homomorphism]:
    """Homomorphisms R -> R, R -> S and S -> R for each S in ``others``."""
    seen = {}
    for S in [R, *others]:
        for h in enumerate_homomorphisms(R, S) + enumerate_homomorphisms(S, R):
            seen[h.ident] = h
    return [seen[k] for k in sorted(seen)]


def cep_suite(R: FiniteSemiring, others: Iterable[FiniteSemiring] | None = None) -> list[CheckRecord]:
    others = corpus() if others is None else others
    return cep_records(homs_around(R, others))


SUITE_FUNCS = {
    "closure": closure_suite,
    "prime": prime_suite,
    "radical": radical_suite,
    "irreducible": irreducible_suite,
}


def run_suites(semirings: Iterable[FiniteSemiring], suite: str = "all") -> list[CheckRecord]:
    names = SUITES if suite == "all" else (suite,)
    semirings = list(semirings)
    records = []
    for R in semirings:
        for s in names:
            if s == "cep":
                continue
            records.extend(SUITE_FUNCS[s](R))
    if "cep" in names:
        homs = {}
        for R in semirings:
            for h in homs_around(R, corpus()):
                homs[h.ident] = h
        records.extend(cep_records(homs[k] for k in sorted(homs)))
    return records
