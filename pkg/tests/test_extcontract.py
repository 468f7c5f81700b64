from __future__ import annotations

import pytest

from kideal.errors import PreconditionError, StructureError
from kideal.extcontract import (
    CONTRACT_ITEMS,
    EQUAL,
    FAIL,
    PROBE_ITEMS,
    STRICT,
    cep_verify,
    contract_mask,
    contraction,
    extend_mask,
    extension,
    kernel_ideal,
)
from kideal.ideals import IdealSet, enumerate_ideals, ideal_masks
from kideal.semiring import Homomorphism, corpus, enumerate_homomorphisms, identity_homomorphism

from conftest import ideal


@pytest.fixture
def mod2(rings):
    return Homomorphism(rings["Z4"], rings["Z2"], (0, 1, 0, 1))


def names(I):
    return set(I.names)


def test_contraction_examples(rings, mod2):
    Z2, B = rings["Z2"], rings["B"]
    assert names(contraction(mod2, ideal(Z2, "0"))) == {"0", "2"}
    assert names(contraction(identity_homomorphism(B), ideal(B, "0"))) == {"0"}
    assert contraction(mod2, IdealSet(Z2, Z2.full_mask)).is_whole


def test_extension_examples(rings, mod2):
    Z4 = rings["Z4"]
    assert names(extension(mod2, ideal(Z4, "0", "2"))) == {"0"}
    assert names(extension(mod2, ideal(Z4, "0"))) == {"0"}
    for R in corpus():
        ident = identity_homomorphism(R)
        for I in enumerate_ideals(R, k_only=True):
            assert extension(ident, I) == IdealSet(R, I.mask)


def test_kernel_examples(rings, mod2):
    assert names(kernel_ideal(mod2)) == {"0", "2"}
    assert kernel_ideal(identity_homomorphism(rings["C3"])).mask == 1
    assert kernel_ideal(identity_homomorphism(rings["Z2"])).mask == 1


def test_preconditions(rings, mod2):
    with pytest.raises(StructureError):
        contraction(mod2, ideal(rings["Z4"], "0"))
    N3 = rings["N3"]
    with pytest.raises(PreconditionError):
        extension(identity_homomorphism(N3), ideal(N3, "0", "3"))


def test_item4_on_mod2(rings, mod2):
    Z4, Z2 = rings["Z4"], rings["Z2"]
    I = ideal(Z4, "0", "2").mask
    assert contract_mask(mod2, extend_mask(mod2, I)) == I
    J = ideal(Z2, "0").mask
    assert extend_mask(mod2, contract_mask(mod2, J)) == J


def test_whole_source_extends_to_whole_target():
    for R in corpus():
        for S in corpus():
            for h in enumerate_homomorphisms(R, S):
                assert extend_mask(h, R.full_mask) == S.full_mask


def test_report_lines_and_statuses(mod2):
    rep = cep_verify(mod2)
    assert rep.ok
    lines = rep.lines()
    assert len(lines) == len(CONTRACT_ITEMS) + len(PROBE_ITEMS)
    assert lines[0] == "CEP Z4->Z2[0,1,0,1] ITEM 1 EQUAL"
    assert rep.items["4a"].status == STRICT
    assert all(r.status in (EQUAL, STRICT, FAIL) for r in rep.items.values())


def test_contract_items_hold_between_all_corpus_pairs():
    strict_6a = 0
    for R in corpus():
        for S in corpus():
            for h in enumerate_homomorphisms(R, S):
                rep = cep_verify(h)
                assert rep.ok, [l for l in rep.lines() if " FAIL" in l]
                strict_6a += rep.items["6a"].strict
    # no strict instance of the intersection inclusion exists on this population
    assert strict_6a == 0


def test_fixed_points_biject():
    for R in corpus():
        for S in corpus():
            for h in enumerate_homomorphisms(R, S):
                src = [m for m in ideal_masks(R, k_only=True) if contract_mask(h, extend_mask(h, m)) == m]
                tgt = [m for m in ideal_masks(S, k_only=True) if extend_mask(h, contract_mask(h, m)) == m]
                assert sorted(extend_mask(h, m) for m in src) == sorted(tgt)
