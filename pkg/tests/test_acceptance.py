"""Acceptance criteria.

Each criterion is a plain function returning ``(ok, detail)``; the tests
assert on it and record a one-line verdict that is printed at the end of the
session (also when run directly with ``python3 tests/test_acceptance.py``).
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

from kideal import classify as cl
from kideal.extcontract import CONTRACT_ITEMS, FAIL as CEP_FAIL, PROBE_ITEMS, cep_verify
from kideal.ideals import enumerate_ideals, ideal_masks, intersect_all
from kideal.nat import NATURALS, EventuallyPeriodicSet, multiples, nat_combine, nat_ideal_generated, nat_is_k_ideal, nat_k_closure
from kideal.report import PASS
from kideal.semiring import corpus, enumerate_homomorphisms, enumerate_semirings
from kideal.verify import SUITE_FUNCS, closure_suite

sys.path.insert(0, str(Path(__file__).resolve().parent))
from oracles import brute_force  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
RESULTS: dict[int, tuple[bool, str]] = {}

TITLES = {
    1: "closure laws on the corpus (< 10 s)",
    2: "exchange equivalences on corpus + order <= 3",
    3: "radical modes and three-way equivalence, order <= 3",
    4: "spectrum components vs minimal k-primes",
    5: "irreducible decomposition round trip",
    6: "extension/contraction calculus over all corpus homomorphisms",
    7: "2N + 3N = N \\ {1} reproduction (< 1 s)",
    8: "enumeration oracle and order-3 pipeline (< 60 s)",
    9: "byte-identical verify reports across 3 runs",
}


def small_population():
    return [R for n in (1, 2, 3) for R in enumerate_semirings(n, up_to_iso=True)]


def _failures(records, ids):
    return [f"{r.check_id} {r.payload}" for r in records if r.check_id in ids and r.status != PASS]


def criterion_1():
    ids = {"closure.least", "closure.zero", "closure.whole", "closure.idempotent", "closure.monotone",
           "closure.union", "closure.intersection", "closure.fixpoint", "closure.product"}
    t0 = time.perf_counter()
    recs = [r for R in corpus() for r in closure_suite(R)]
    dt = time.perf_counter() - t0
    seen = {r.check_id for r in recs} & ids
    bad = _failures(recs, ids)
    ok = not bad and seen == ids and dt < 10
    return ok, f"{len(ids)} items x {len(corpus())} semirings, {dt:.2f}s" + (f"; {bad[:3]}" if bad else "")


def criterion_2():
    ids = {"exchange.maximal", "exchange.prime", "exchange.semiprime",
           "exchange.irreducible", "exchange.strongly-irreducible"}
    pop = corpus() + small_population()
    recs = [r for R in pop for s in ("prime", "irreducible") for r in SUITE_FUNCS[s](R)]
    bad = _failures(recs, ids)
    return not bad, f"{len(pop)} semirings; " + ("all hold" if not bad else f"{len(bad)} failing: " + "; ".join(bad))


def criterion_3():
    ids = {"radical.modes", "radical.equivalence", "radical.tset"}
    pop = small_population()
    recs = [r for R in pop for r in SUITE_FUNCS["radical"](R)]
    bad = _failures(recs, ids)
    # direct recomputation, independent of the suite's bookkeeping
    n = 0
    for R in pop:
        for m in ideal_masks(R, k_only=True):
            n += 1
            if cl.k_radical_mask(R, m) != cl.radical_powers_mask(R, m):
                bad.append(f"{R.name} {m:#x}")
    return not bad, f"{n} k-ideals over {len(pop)} semirings" + (f"; {bad[:3]}" if bad else "")


def criterion_4():
    bad = []
    for R in corpus():
        sp = cl.spectrum(R)
        if sorted(sp.components) != sorted(sp.V(p) for p in sp.minimal_primes):
            bad.append(f"{R.name} components")
        if len(sp.components) != len(sp.minimal_primes):
            bad.append(f"{R.name} count")
        if R.order >= 2 and not sp.primes:
            bad.append(f"{R.name} empty")
    return not bad, f"{len(corpus())} semirings" + (f"; {bad}" if bad else "")


def criterion_5():
    bad, n = [], 0
    for R in corpus():
        for I in enumerate_ideals(R, k_only=True):
            if I.is_whole:
                continue
            n += 1
            parts = [P.mask for P in cl.k_irreducible_decomposition(I)]
            if intersect_all(R, parts) != I.mask:
                bad.append(f"{R.name} {I} meet")
            if not all(cl.is_k_irreducible_mask(R, p) for p in parts):
                bad.append(f"{R.name} {I} factor")
            for j in range(len(parts)):
                rest = parts[:j] + parts[j + 1:]
                if rest and intersect_all(R, rest) == I.mask:
                    bad.append(f"{R.name} {I} redundant")
    return not bad, f"{n} proper k-ideals" + (f"; {bad[:3]}" if bad else "")


def criterion_6():
    homs = [h for R in corpus() for S in corpus() for h in enumerate_homomorphisms(R, S)]
    bad, probe_fail, strict_6a = [], {i: 0 for i in PROBE_ITEMS}, 0
    for h in homs:
        rep = cep_verify(h)
        bad += [l for l, item in zip(rep.lines(), CONTRACT_ITEMS) if rep.items[item].status == CEP_FAIL]
        for i in PROBE_ITEMS:
            probe_fail[i] += rep.items[i].status == CEP_FAIL
        strict_6a += rep.items["6a"].strict
    note = f"6a strict instances: {strict_6a}" if strict_6a else "6a strict: documented absent"
    probes = " ".join(f"{i}:{c}" for i, c in probe_fail.items())
    return not bad, f"{len(homs)} homomorphisms; {note}; probe FAIL counts {probes}" + (f"; {bad[:3]}" if bad else "")


def criterion_7():
    t0 = time.perf_counter()
    two, three = nat_ideal_generated([2]), nat_ideal_generated([3])
    s = nat_combine(two, three, "sum")
    v = nat_is_k_ideal(s)
    checks = [
        two == multiples(2) and bool(nat_is_k_ideal(two)),
        three == multiples(3) and bool(nat_is_k_ideal(three)),
        s == EventuallyPeriodicSet(2, 1, (True, False), (True,)),
        s == nat_ideal_generated([2, 3]),
        not v and v.witness == (2, 1),
        nat_k_closure(s) == NATURALS,
    ]
    dt = time.perf_counter() - t0
    return all(checks) and dt < 1, f"{s.format()} = {s.describe()}, witness {v.witness}, {dt * 1000:.1f} ms"


def criterion_8():
    t0 = time.perf_counter()
    two = list(enumerate_semirings(2, up_to_iso=True))
    three = list(enumerate_semirings(3, up_to_iso=True))
    oracle = len(brute_force(3))
    n_ideals = 0
    for R in three:
        for I in enumerate_ideals(R):
            cl.class_tags(I)
            n_ideals += 1
    dt = time.perf_counter() - t0
    ok = len(two) == 2 and len(three) == oracle and dt < 60
    return ok, f"order 2: {len(two)}, order 3: {len(three)} (oracle {oracle}), {n_ideals} ideals classified, {dt:.2f}s"


def criterion_9():
    files = sorted(str(p) for p in (ROOT / "corpus").glob("*.sr"))
    outs = []
    for _ in range(3):
        proc = subprocess.run([sys.executable, "-m", "kideal.cli", "verify", *files, "--suite", "all"],
                              capture_output=True)
        outs.append(proc.stdout)
    ok = len(files) == 10 and outs[0] and outs[0] == outs[1] == outs[2]
    return bool(ok), f"{len(files)} files, {len(outs[0])} bytes per report"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_acceptance_criterion(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    assert ok, f"criterion {n} ({TITLES[n]}): {detail}"


def summary_lines(results=RESULTS):
    return [f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {TITLES[n]}: {detail}"
            for n, (ok, detail) in sorted(results.items())]


if __name__ == "__main__":
    out = {n: fn() for n, fn in CRITERIA.items()}
    print("\n".join(summary_lines(out)))
    sys.exit(0 if all(ok for ok, _ in out.values()) else 1)
