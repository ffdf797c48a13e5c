"""Acceptance criteria, one printed PASS/FAIL line per criterion.

Criteria 2 and 10 contain sub-claims about the modular-exponentiation
cipher (freeness of the action, singleton key spaces, and a 3-copy orbit
decomposition at p = 7) that are contradicted by direct computation:
1 and p-1 are fixed by every unit exponent mod p-1.  Those sub-tests are
kept exactly as stated and fail honestly; the counterexamples are in the
assertion messages.  Everything else must pass at exact tolerance.
"""

from itertools import product

import pytest

from edense import acts, closures, construction, core, cosets, crypto, verify

from conftest import SEMILATTICE_FIXTURES, fx


def _stamp(num, desc):
    def deco(fn):
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[criterion {num}] FAIL  {desc}")
                raise
            print(f"[criterion {num}] PASS  {desc}")

        wrapper.__name__ = fn.__name__
        return wrapper

    return deco


@_stamp(1, "band-extension key spaces all have exactly two keys")
def test_criterion_01_key_space_sizes():
    sys_ = crypto.locally_free_system(fx("Z3E"), 0)
    cases = 0
    for s in sys_.semigroup.elements:
        for x in sys_.act.points:
            K = crypto.decrypt_key_space(sys_, x, s)
            assert len(K) == 2, f"|K({s},{x})| = {len(K)}"
            cases += 1
    assert cases == 18


@_stamp(2, "modexp action is free (all stabilizers trivial)")
def test_criterion_02a_modexp_free():
    for p in (5, 7, 11, 13, 23):
        ms = crypto.modexp_system(p)
        sys_ = ms.system(ms.exponents[0])
        for x in sys_.act.points:
            stab = acts.stabilizer(sys_.act, x)
            assert stab == {ms.element_of(1)}, (
                f"p={p}: unit {ms.unit_value(x)} is fixed by exponents "
                f"{sorted(ms.exponents[i] for i in stab)}, "
                "so the action is not free there"
            )


@_stamp(2, "modexp key spaces are singletons for every key and point")
def test_criterion_02b_modexp_singleton_keys():
    for p in (5, 7, 11, 13, 23):
        ms = crypto.modexp_system(p)
        for n in ms.exponents:
            sys_ = ms.system(n)
            for x in sys_.act.points:
                K = crypto.decrypt_key_space(sys_, x)
                assert len(K) == 1, (
                    f"p={p}, n={n}, x={ms.unit_value(x)}: "
                    f"K has {len(K)} members "
                    f"{sorted(ms.exponents[i] for i in K)}"
                )


@_stamp(2, "modexp protocols recover the plaintext exhaustively")
def test_criterion_02c_modexp_roundtrips():
    cases = 0
    for p in (5, 7, 11, 13):
        ms = crypto.modexp_system(p)
        sys_ = ms.system(ms.exponents[0])
        keys = range(len(ms.exponents))
        for x in sys_.act.points:
            for s, t in product(keys, repeat=2):
                assert crypto.massey_omura(sys_, x, s, t).ok
                cases += 1
            for s, c, d in product(keys, repeat=3):
                assert crypto.elgamal(sys_, x, s, c, d).ok
                cases += 1
    assert cases == sum(
        len(X) * (len(S) ** 2 + len(S) ** 3)
        for S, X in (((1, 3), range(4)), ((1, 5), range(6)),
                     ((1, 3, 7, 9), range(10)), ((1, 5, 7, 11), range(12)))
    )


@_stamp(3, "element-level lemma sweep over all tables of order <= 3 plus corpus")
def test_criterion_03_small_order_lemma_sweep():
    tables = 0
    for n in (1, 2, 3):
        for S in construction.enumerate_semigroups(n):
            tables += 1
            for f in verify.suite_core(S) + verify.suite_closures(S):
                assert f.passed, f.line()
    assert tables == 122
    for name in construction.FIXTURE_NAMES:
        for f in verify.suite_core(fx(name)) + verify.suite_closures(fx(name)):
            assert f.passed, f.line()


@_stamp(4, "weak-inverse laws (all six parts) on the semilattice fixtures")
def test_criterion_04_weak_inverse_lemma():
    for name in ("CHAIN3", "B2", "Z3E", "Z6E"):
        violations = list(verify._weak_inverse_lemma_violations(fx(name)))
        assert not violations, f"{name}: {violations[0]}"


@_stamp(5, "restricted multiplication act: axioms and stabilizer formulas")
def test_criterion_05_wagner_preston_structure():
    for name in SEMILATTICE_FIXTURES:
        S = fx(name)
        wp = acts.wagner_preston(S)  # validation is part of construction
        for e in core.idempotents(S):
            assert acts.stabilizer(wp, e) == closures.omega_h(S, {e}), f"{name}, e={e}"
            assert acts.orbit(wp, e) == core.green_l_class(S, e), f"{name}, e={e}"
        for s in S.elements:
            for w in core.weak_inverses(S, s):
                assert acts.stabilizer(wp, w) == closures.omega_h(
                    S, {S.mul(w, s)}
                ), f"{name}, s={s}, s'={w}"
                assert acts.orbit(wp, w) == core.green_l_class(S, w)


@_stamp(6, "coset machinery on the designated bases")
def test_criterion_06_coset_suite():
    targets = [("Z3E", [frozenset({0, 3})])]
    targets.append(("Z6", closures.closed_e_dense_subsemigroups(fx("Z6"))))
    targets.append(("B2", closures.closed_e_dense_subsemigroups(fx("B2"))))
    for name, bases in targets:
        S = fx(name)
        for H in bases:
            space = cosets.coset_space(S, H)  # asserts S_{H} = H internally
            assert all(
                not v for v in verify._pi_properties_violations(S, H, space)
            ), f"{name}, H={sorted(H)}"
            assert all(
                not v for v in verify._coset_class_violations(S, H, space)
            ), f"{name}, H={sorted(H)}"
            E = core.idempotents(S)
            assert [c.members for c in space.cosets if c.members & E] == [H]
            props = acts.act_properties(space.act)
            assert props.transitive, f"{name}, H={sorted(H)}"
        wp = acts.wagner_preston(S)
        for x in wp.points:
            if not wp.point_domain(x):
                continue
            piece = acts.subact(wp, sorted(acts.orbit(wp, x)))
            space = cosets.coset_space(S, acts.stabilizer(wp, x))
            assert acts.find_act_isomorphism(piece, space.act) is not None, (
                f"{name}: orbit of {x} is not the coset act of its stabilizer"
            )


@_stamp(7, "quotient of the band extension is the 3-cycle group")
def test_criterion_07_quotient_and_representation():
    S = fx("Z3E")
    H = frozenset({0, 3})
    Q = cosets.quotient_group(S, H)
    assert core.is_group(Q)
    assert core.find_semigroup_isomorphism(Q, fx("Z3")) is not None
    rep = cosets.rho_representation(S, H)
    perms = rep.permutations
    assert set(perms) == set(range(6))
    for s, t in product(perms, repeat=2):
        composed = tuple(perms[s][perms[t][i]] for i in range(3))
        assert perms[S.mul(s, t)] == composed
    for s, t in product(perms, repeat=2):
        assert (perms[s] == perms[t]) == cosets.pi_h_related(S, H, s, t)


@_stamp(8, "pair-monoid constructions and the displayed correspondence")
def test_criterion_08_constructions():
    for name in ("Z2", "Z3", "Z6"):
        G = fx(name)
        C, action = construction.derived_category(G)
        cu = construction.c_u_monoid(C, action, 0)
        assert core.find_semigroup_isomorphism(cu.semigroup, G) is not None, name
    S, cu, mapping = construction.adjoined_band_to_cu_map(fx("Z3"))
    assert S.table == fx("Z3E").table
    assert sorted(mapping) == list(range(6))
    built = [
        construction.c_u_monoid(*construction.derived_category(fx(n)), 0)
        for n in ("Z2", "Z3", "Z6")
    ]
    for n, k in (("Z2", 2), ("Z3", 2), ("Z2", 3)):
        G = fx(n)
        C, action = construction.adjoin_band_category(G, k)
        built.append(construction.c_u_monoid(C, action, G.identity))
    for cu in built:
        M = cu.semigroup
        trivial_part = {
            i for i, (p, g) in enumerate(cu.pairs) if g == cu.pairs[M.identity][1]
        }
        assert core.idempotents(M) == trivial_part
        assert core.is_e_unitary(M) and core.is_e_dense(M)


@_stamp(9, "decrypt-key-space theorem across the cancellative corpus")
def test_criterion_09_key_space_theorem():
    systems = verify._system_corpus()
    part4_seen = 0
    for name, sys_ in systems:
        S = sys_.semigroup
        for s in S.elements:
            keyed = sys_.with_key(s)
            for x in sys_.act.points:
                findings = crypto.verify_key_space_theorem(keyed, x)
                for f in findings:
                    assert f.passed, f"{name}: {f.line()}"
                if core.is_inverse_semigroup(S):
                    assert any("inverse-form" in f.name for f in findings)
                    part4_seen += 1
    assert part4_seen > 0
    # group specialisation on the 6-cycle group
    S = fx("Z6")
    rows, _ = acts.left_mult_total(S)
    gsys = crypto.build_cryptosystem(S, rows, 1)
    for s in S.elements:
        keyed = gsys.with_key(s)
        for x in range(6):
            K = crypto.decrypt_key_space(keyed, x)
            assert len(K) == len(acts.stabilizer(gsys.act, x)) == 1


@_stamp(10, "band-extension system is one copy of the base orbit")
def test_criterion_10a_band_extension_classification():
    S = fx("Z3E")
    sys_ = crypto.locally_free_system(S, 1)
    rep = crypto.classify_locally_free_cryptosystem(S, sys_.act)
    assert rep.minimum_idempotent == 3
    assert rep.locally_free and rep.is_disjoint_union_of_base
    assert rep.copies == 1


@_stamp(10, "modexp p=7 decomposes into three copies of the exponent group")
def test_criterion_10b_modexp_7_three_copies():
    ms = crypto.modexp_system(7)
    rep = crypto.classify_locally_free_cryptosystem(ms.semigroup, ms.system(5).act)
    orbit_sizes = sorted(len(pts) for pts, _ in rep.orbit_results)
    assert rep.is_disjoint_union_of_base and rep.copies == 3, (
        "the units mod 7 fall into orbits of sizes "
        f"{orbit_sizes} (units 1 and 6 are fixed points), so they are not "
        "a disjoint union of copies of the 2-element base orbit"
    )
