from __future__ import annotations

import itertools

import pytest

from kideal import classify as cl
from kideal.errors import PreconditionError
from kideal.ideals import IdealSet, enumerate_ideals, gen_mask, ideal_masks, intersect_all, kclose_mask
from kideal.semiring import corpus, enumerate_semirings

from conftest import ideal

SMALL = corpus() + [R for n in (1, 2, 3) for R in enumerate_semirings(n, up_to_iso=True)]


def names(I):
    return set(I.names)


def _whole(R):
    return IdealSet(R, R.full_mask)


# ---------------------------------------------------------------- predicates


def test_k_prime_examples(rings):
    Z4, C3 = rings["Z4"], rings["C3"]
    assert cl.is_k_prime(ideal(Z4, "0", "2"))
    assert not cl.is_k_prime(ideal(Z4, "0"))
    assert cl.is_k_prime(ideal(C3, "0"))


def test_k_semiprime_examples(rings):
    Z4, BB = rings["Z4"], rings["BxB"]
    assert not cl.is_k_semiprime(ideal(Z4, "0"))
    assert cl.is_k_semiprime(ideal(Z4, "0", "2"))
    assert cl.is_k_semiprime(ideal(BB, "00"))


def test_k_maximal_examples(rings):
    assert cl.is_k_maximal(ideal(rings["Z4"], "0", "2"))
    assert cl.is_k_maximal(ideal(rings["N3"], "0"))
    assert not cl.is_k_maximal(ideal(rings["BxB"], "00"))


def test_k_maximal_need_not_be_maximal(rings):
    # {0} is the only proper k-ideal of N3, yet {0,3} and {0,2,3} are ideals above it
    N3 = rings["N3"]
    I = ideal(N3, "0")
    assert cl.is_k_maximal(I) and not cl.is_maximal(I)


def test_k_irreducible_examples(rings):
    assert not cl.is_k_irreducible(ideal(rings["BxB"], "00"))
    assert cl.is_k_irreducible(ideal(rings["Z4"], "0"), strong=True)
    assert cl.is_k_irreducible(ideal(rings["C3"], "0", "a"), strong=True)


def test_predicates_reject_non_k_ideals(rings):
    with pytest.raises(PreconditionError):
        cl.is_k_prime(ideal(rings["N3"], "0", "3"))


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_independent_criteria_agree(R):
    # the public predicates raise ConsistencyError when their two
    # computations disagree
    for I in enumerate_ideals(R, k_only=True):
        if I.is_whole:
            continue
        assert cl.is_k_prime(I) == cl.prime_elementwise(R, I.mask)
        cl.is_k_semiprime(I)
        for strong in (False, True):
            cl.is_k_irreducible(I, strong=strong)


def test_class_tags_line(rings):
    Z4 = rings["Z4"]
    tags = cl.class_tags(ideal(Z4, "0", "2"))
    assert tags.k_prime and tags.prime and tags.k_maximal
    line = tags.line(Z4, ideal(Z4, "0", "2").mask)
    assert line.startswith("IDEAL {0,2} FLAGS prime=1 k_prime=1")


# ------------------------------------------------------------------ radicals


def test_k_radical_examples(rings):
    Z4, N3 = rings["Z4"], rings["N3"]
    assert names(cl.k_radical(ideal(Z4, "0"))) == {"0", "2"}
    assert names(cl.k_radical(ideal(Z4, "0", "2"))) == {"0", "2"}
    assert names(cl.k_radical(ideal(N3, "0"))) == {"0"}


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_radical_modes_and_tset_agree(R):
    for m in ideal_masks(R, k_only=True):
        r = cl.k_radical_mask(R, m)
        assert r == cl.radical_powers_mask(R, m)
        assert r == cl.radical_tset_mask(R, m)
        semiprime = m != R.full_mask and cl.is_k_semiprime_mask(R, m)
        primes_above = [p for p in cl.k_prime_masks(R) if m & ~p == 0]
        is_meet = m == intersect_all(R, primes_above) if primes_above else m == R.full_mask
        assert semiprime == (is_meet and m != R.full_mask) == (r == m and m != R.full_mask)


def test_complement_of_k_prime_is_multiplicatively_closed():
    for R in SMALL:
        for m in ideal_masks(R, k_only=True):
            comp = R.full_mask & ~m
            assert cl.is_k_prime_mask(R, m) == (m != R.full_mask and cl.is_multiplicatively_closed(R, comp))


# ------------------------------------------------------------------ spectrum


def test_spectrum_examples(rings):
    z = cl.spectrum(rings["Z4"])
    assert z.primes == (0b101,) and z.minimal_primes == (0b101,) and len(z.components) == 1
    C3 = rings["C3"]
    c = cl.spectrum(C3)
    assert [str(I) for I in c.prime_ideals()] == ["{0}", "{0,a}"]
    assert c.minimal_primes == (1,) and len(c.components) == 1
    bb = cl.spectrum(rings["BxB"])
    assert [str(I) for I in bb.prime_ideals()] == ["{00,10}", "{00,01}"]
    assert len(bb.minimal_primes) == 2 and len(bb.components) == 2


@pytest.mark.parametrize("R", corpus(), ids=lambda R: R.name)
def test_components_are_closures_of_minimal_primes(R):
    sp = cl.spectrum(R)
    assert sorted(sp.components) == sorted(sp.V(p) for p in sp.minimal_primes)
    if R.order >= 2:
        assert sp.primes


# ------------------------------------------------------------- constructions


def test_maximal_disjoint_examples(rings):
    Z4, C3, B = rings["Z4"], rings["C3"], rings["B"]
    assert names(cl.maximal_disjoint_ideal(Z4, ideal(Z4, "0"), ["1", "3"])) == {"0", "2"}
    assert names(cl.maximal_disjoint_ideal(C3, ideal(C3, "0"), ["1"])) == {"0", "a"}
    assert names(cl.maximal_disjoint_ideal(B, ideal(B, "0"), ["1"])) == {"0"}


def test_maximal_disjoint_is_k_prime():
    for R in SMALL:
        for S in cl.multiplicatively_closed_sets(R):
            for m in ideal_masks(R, k_only=True):
                if m & S:
                    continue
                P = cl.maximal_disjoint_ideal(R, IdealSet(R, m), IdealSet(R, S))
                assert cl.is_k_prime(P)


def test_square_chain_examples(rings):
    Z4, B, N3 = rings["Z4"], rings["B"], rings["N3"]
    assert names(cl.square_chain(Z4, Z4.index("2"))) == {"2", "0"}
    assert names(cl.square_chain(B, 1)) == {"1"}
    assert names(cl.square_chain(N3, N3.index("2"))) == {"2", "3"}


def test_prime_avoidance_examples(rings):
    Z4, BB, C3 = rings["Z4"], rings["BxB"], rings["C3"]
    assert cl.prime_avoidance_witness(Z4, _whole(Z4), [ideal(Z4, "0", "2")]) == Z4.index("1")
    w = cl.prime_avoidance_witness(BB, _whole(BB), [ideal(BB, "00", "10"), ideal(BB, "00", "01")])
    assert BB.names[w] == "11"
    assert C3.names[cl.prime_avoidance_witness(C3, ideal(C3, "0", "a"), [ideal(C3, "0")])] == "a"


def test_separator_examples(rings):
    BB, Z4, C3 = rings["BxB"], rings["Z4"], rings["C3"]
    assert names(cl.separator_ideal(BB, ideal(BB, "00"), BB.index("10"))) == {"00", "01"}
    assert names(cl.separator_ideal(Z4, ideal(Z4, "0"), Z4.index("2"))) == {"0"}
    assert names(cl.separator_ideal(C3, ideal(C3, "0"), C3.index("1"))) == {"0", "a"}


def test_decomposition_examples(rings):
    BB, Z4, C3 = rings["BxB"], rings["Z4"], rings["C3"]
    assert [str(I) for I in cl.k_irreducible_decomposition(ideal(BB, "00"))] == ["{00,10}", "{00,01}"]
    assert [str(I) for I in cl.k_irreducible_decomposition(ideal(Z4, "0"))] == ["{0}"]
    assert [str(I) for I in cl.k_irreducible_decomposition(ideal(C3, "0", "a"))] == ["{0,a}"]


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_decomposition_round_trip(R):
    for m in ideal_masks(R, k_only=True):
        if m == R.full_mask:
            continue
        parts = [P.mask for P in cl.k_irreducible_decomposition(IdealSet(R, m))]
        assert intersect_all(R, parts) == m
        assert all(cl.is_k_irreducible_mask(R, p) for p in parts)
        for j in range(len(parts)):
            rest = parts[:j] + parts[j + 1:]
            assert not rest or intersect_all(R, rest) != m


def test_minimal_strongly_irreducible_examples(rings):
    Z4, BB, C3 = rings["Z4"], rings["BxB"], rings["C3"]
    assert names(cl.minimal_strongly_irreducible_above(ideal(Z4, "0"))) == {"0"}
    assert str(cl.minimal_strongly_irreducible_above(ideal(BB, "00"))) == "{00,10}"
    assert names(cl.minimal_strongly_irreducible_above(ideal(C3, "0"))) == {"0"}


def test_structure_flags_examples(rings):
    for name, chain in (("C3", True), ("BxB", False), ("Z4", True)):
        f = cl.structure_flags(rings[name])
        assert f.arithmetic and f.k_chain == chain


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_prime_iff_semiprime_and_strongly_irreducible(R):
    for m in ideal_masks(R, k_only=True):
        if m == R.full_mask:
            continue
        assert cl.is_k_prime_mask(R, m) == (
            cl.is_k_semiprime_mask(R, m) and cl.is_k_irreducible_mask(R, m, strong=True))


@pytest.mark.parametrize("R", SMALL, ids=lambda R: R.name)
def test_chain_iff_all_strongly_irreducible(R):
    proper = [m for m in ideal_masks(R, k_only=True) if m != R.full_mask]
    all_strong = all(cl.is_k_irreducible_mask(R, m, strong=True) for m in proper)
    assert all_strong == cl.structure_flags(R).k_chain


def test_kclosure_of_union_contains_both():
    for R in SMALL:
        for a, b in itertools.product(ideal_masks(R), repeat=2):
            both = kclose_mask(R, a) | kclose_mask(R, b)
            assert both & ~kclose_mask(R, gen_mask(R, a | b)) == 0
