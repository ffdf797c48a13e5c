"""Cryptosystems over cancellative acts: key spaces, protocol round
trips on the modular-exponentiation oracle, and the orbit classification."""

import pytest

from edense import acts, closures, construction, core, crypto
from edense.errors import (
    NotCancellative,
    NotPrime,
    NotSemilattice,
    OrderTooLarge,
    PreconditionFailed,
)

from conftest import fx


def band_system(name="Z3E", key=1):
    return crypto.locally_free_system(fx(name), key)


def test_build_band_extension_system():
    sys_ = band_system()
    assert sys_.carrier == 3
    assert sys_.act.point_labels == ("e.0", "e.1", "e.2")


def test_build_rejects_non_cancellative():
    S = fx("N2")
    rows, _ = acts.left_mult_total(S)
    with pytest.raises(NotCancellative):
        crypto.build_cryptosystem(S, rows, 0)


def test_modexp_system_shapes():
    ms7 = crypto.modexp_system(7)
    assert ms7.exponents == (1, 5)
    assert len(ms7.units) == 6
    assert crypto.modexp_system(11).exponents == (1, 3, 7, 9)
    assert crypto.modexp_system(3).exponents == (1,)


def test_modexp_rejects_bad_moduli():
    with pytest.raises(NotPrime):
        crypto.modexp_system(4)
    with pytest.raises(OrderTooLarge):
        crypto.modexp_system(263)


def test_decrypt_key_space_band_extension():
    sys_ = band_system()
    # point 0 carries the adjoined idempotent times the group identity
    assert crypto.decrypt_key_space(sys_, 0, 1) == {2, 5}
    sizes = {
        len(crypto.decrypt_key_space(sys_, x, s))
        for s in sys_.semigroup.elements
        for x in sys_.act.points
    }
    assert sizes == {2}


def test_decrypt_key_space_modexp_primitive_root():
    ms = crypto.modexp_system(7)
    sys_ = ms.system(5)
    x = ms.point_of(3)  # 3 generates the units mod 7
    assert crypto.decrypt_key_space(sys_, x) == {ms.element_of(5)}


def test_decrypt_key_space_group_free_action():
    S = fx("Z6")
    rows, _ = acts.left_mult_total(S)
    sys_ = crypto.build_cryptosystem(S, rows, 2)
    for x in sys_.act.points:
        assert crypto.decrypt_key_space(sys_, x) == {4}


def test_modexp_not_free_at_plus_minus_one():
    # x = 1 and x = p-1 are fixed by every odd exponent, so the
    # exponentiation action has non-trivial stabilizers there
    for p in (5, 7, 11, 13, 23):
        ms = crypto.modexp_system(p)
        assert not ms.is_free
        assert 1 in ms.non_free_units and p - 1 in ms.non_free_units


def test_key_space_theorem_reports():
    sys_ = band_system()
    for x in sys_.act.points:
        assert all(f.passed for f in crypto.verify_key_space_theorem(sys_, x))
    S = fx("Z6")
    rows, _ = acts.left_mult_total(S)
    gsys = crypto.build_cryptosystem(S, rows, 2)
    findings = crypto.verify_key_space_theorem(gsys, 0)
    assert any(f.name == "key-space-group-form" and f.passed for f in findings)


def test_locally_free_key_space():
    sys_ = band_system()
    S = sys_.semigroup
    for s in S.elements:
        keyed = sys_.with_key(s)
        expected = closures.omega_h(S, core.weak_inverses(S, s))
        for x in keyed.act.points:
            assert crypto.locally_free_key_space(keyed, x) == expected
    assert crypto.locally_free_key_space(sys_, 0) == {2, 5}


def test_locally_free_key_space_z6e_sizes():
    sys_ = crypto.locally_free_system(fx("Z6E"), 1)
    for s in sys_.semigroup.elements:
        keyed = sys_.with_key(s)
        assert len(crypto.locally_free_key_space(keyed, 0)) == 2


def test_locally_free_key_space_preconditions():
    S = fx("B2")
    sys_ = crypto.locally_free_system(S, 0)
    with pytest.raises(PreconditionFailed):
        crypto.locally_free_key_space(sys_, 0)


def test_massey_omura_modexp_11():
    ms = crypto.modexp_system(11)
    sys_ = ms.system(3)
    t = crypto.massey_omura(sys_, ms.point_of(2), ms.element_of(3), ms.element_of(9))
    values = [ms.unit_value(v) for _, _, v in t.entries]
    assert values == [8, 7, 6, 2]
    assert t.ok


def test_massey_omura_identity_keys_echo():
    ms = crypto.modexp_system(11)
    sys_ = ms.system(1)
    one = ms.element_of(1)
    x = ms.point_of(7)
    t = crypto.massey_omura(sys_, x, one, one)
    assert [v for _, _, v in t.entries] == [x, x, x, x]


def test_massey_omura_band_extension():
    sys_ = band_system()
    x = 1  # the point carrying e.1
    t = crypto.massey_omura(sys_, x, 1, 2)
    assert t.ok and t.recovered == x


def test_elgamal_modexp_11():
    ms = crypto.modexp_system(11)
    sys_ = ms.system(3)
    t = crypto.elgamal(
        sys_, ms.point_of(2), ms.element_of(3), ms.element_of(7), ms.element_of(9)
    )
    assert t.ok
    assert ms.unit_value(t.recovered) == 2


def test_elgamal_identity_keys():
    sys_ = band_system(key=0)
    x = 2
    t = crypto.elgamal(sys_, x, 0, 0, 0)
    assert t.ok
    assert t.entries[1] == ("alice", "ciphertext", x)


def test_transcript_rendering():
    sys_ = band_system()
    t = crypto.massey_omura(sys_, 0, 1, 2)
    lines = t.render().splitlines()
    assert lines[0].startswith("alice: ciphertext-1 = ")
    assert lines[-1].startswith("bob: recovered = ")


def test_massey_omura_needs_commutativity_or_biact():
    S = fx("B2")
    sys_ = crypto.locally_free_system(S, 0)
    with pytest.raises(PreconditionFailed):
        crypto.massey_omura(sys_, 0, 3, 4)


def test_biact_variant_roundtrip():
    S = fx("Z6")
    left, _ = acts.left_mult_total(S)
    right = [[S.mul(x, s) for s in S.elements] for x in range(S.n)]
    biact = crypto.build_biact(S, left, right)
    sys_ = crypto.build_cryptosystem(S, left, 0)
    for x in range(6):
        t = crypto.massey_omura(sys_, x, 2, 5, biact=biact)
        assert t.ok


def test_stabilizers_left_dense():
    assert crypto.stabilizers_left_dense(band_system().act)
    ms = crypto.modexp_system(7)
    assert crypto.stabilizers_left_dense(ms.system(5).act)
    # a total act that is not cancellative fails pointwise decryptability
    S = fx("N2")
    rows, labels = acts.left_mult_total(S)
    raw = acts.PartialAct(S, tuple(tuple(r) for r in rows))
    assert not crypto.stabilizers_left_dense(raw)


def test_minimum_idempotent():
    assert crypto.minimum_idempotent(fx("Z3E")) == 3
    assert crypto.minimum_idempotent(fx("B2")) == 0
    assert crypto.minimum_idempotent(fx("CHAIN3")) == 0
    with pytest.raises(NotSemilattice):
        crypto.minimum_idempotent(fx("LZ2"))


def test_classification_band_extension():
    S = fx("Z3E")
    sys_ = band_system()
    rep = crypto.classify_locally_free_cryptosystem(S, sys_.act)
    assert rep.minimum_idempotent == 3
    assert rep.locally_free and rep.is_disjoint_union_of_base
    assert rep.copies == 1
    assert rep.base_points == (3, 4, 5)


def test_classification_two_copies():
    S = fx("Z3E")
    sys_ = band_system()
    double = acts.disjoint_union(sys_.act, sys_.act)
    rep = crypto.classify_locally_free_cryptosystem(S, double)
    assert rep.is_disjoint_union_of_base and rep.copies == 2


def test_classification_modexp_7_honest():
    # the units mod 7 split into orbits {1}, {6}, {2,4}, {3,5}; only the
    # two-point orbits match the base, so no disjoint-union decomposition
    ms = crypto.modexp_system(7)
    rep = crypto.classify_locally_free_cryptosystem(ms.semigroup, ms.system(5).act)
    assert not rep.locally_free
    assert not rep.is_disjoint_union_of_base
    orbit_units = sorted(
        (tuple(ms.unit_value(p) for p in pts), iso) for pts, iso in rep.orbit_results
    )
    assert orbit_units == [
        ((1,), False),
        ((2, 4), True),
        ((3, 5), True),
        ((6,), False),
    ]


def test_discrete_log_candidates():
    ms = crypto.modexp_system(11)
    sys_ = ms.system(3)
    x, y = ms.point_of(2), ms.point_of(8)
    cands = crypto.discrete_log_candidates(sys_, x, y)
    assert ms.element_of(3) in cands
    assert all(sys_.act.act(s, x) == y for s in cands)
