"""Coset machinery for closed E-dense subsemigroups: the left partial
congruence, omega-cosets, the coset act, conjugacy and quotient groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import acts, closures, core
from .core import FiniteSemigroup
from .errors import BadSubsemigroup, NotSelfConjugate


@dataclass(frozen=True)
class OmegaCoset:
    """One left omega-coset (sH) closed upward, canonical by member set."""

    base: frozenset[int]
    representative: int
    members: frozenset[int]


@dataclass(frozen=True)
class CosetSpace:
    """All cosets of H, with the transitive act of S on them."""

    semigroup: FiniteSemigroup
    base: frozenset[int]
    cosets: tuple[OmegaCoset, ...]
    domain: frozenset[int]  # D_H
    act: acts.PartialAct

    def index_of(self, members) -> int:
        members = frozenset(members)
        for i, c in enumerate(self.cosets):
            if c.members == members:
                return i
        raise KeyError(f"not a coset: {sorted(members)}")

    def coset_of(self, s: int) -> int:
        for i, c in enumerate(self.cosets):
            if s in c.members:
                return i
        raise KeyError(f"{s} lies in no coset")


def check_base(S: FiniteSemigroup, H) -> frozenset[int]:
    """Validate that H qualifies as a coset base; name the failure if not."""
    closures.require_semilattice(S)
    H = frozenset(H)
    if not H:
        raise BadSubsemigroup("empty subset")
    if not all(0 <= h < S.n for h in H):
        raise BadSubsemigroup("member out of range", sorted(H))
    if not core.is_subsemigroup(S, H):
        bad = next(
            (h, k) for h in H for k in H if S.mul(h, k) not in H
        )
        raise BadSubsemigroup("not closed under the product", bad)
    missing = [h for h in H if not core.weak_inverses(S, h) & H]
    if missing:
        raise BadSubsemigroup("member without weak inverse inside", missing[0])
    closure = closures.omega_h(S, H)
    if closure != H:
        raise BadSubsemigroup(
            "not upward closed", sorted(closure - H)
        )
    return H


def domain_d_h(S: FiniteSemigroup, H) -> frozenset[int]:
    """D_H: elements s with some weak inverse s' such that s's lies in H."""
    H = frozenset(H)
    return frozenset(
        s
        for s in S.elements
        if any(S.mul(w, s) in H for w in core.weak_inverses(S, s))
    )


def pi_h_related(S: FiniteSemigroup, H, s: int, t: int) -> bool:
    """The left partial congruence: some weak inverse of s sends t into H."""
    H = check_base(S, H)
    return any(S.mul(w, t) in H for w in core.weak_inverses(S, s))


def coset(S: FiniteSemigroup, H, s: int):
    """The omega-coset of s, or None when s is outside the domain."""
    H = check_base(S, H)
    if s not in domain_d_h(S, H):
        return None
    members = closures.omega_h(S, core.set_mul(S, {s}, H))
    assert s in members
    return OmegaCoset(H, s, members)


def coset_space(S: FiniteSemigroup, H) -> CosetSpace:
    """Materialize all cosets of H and the act of S on them.

    The act is validated against the partial-act axioms, and the
    stabilizer of the coset H itself is asserted to be exactly H.
    """
    return _coset_space(S, frozenset(H))


@lru_cache(maxsize=None)
def _coset_space(S: FiniteSemigroup, H) -> CosetSpace:
    H = check_base(S, H)
    d_h = domain_d_h(S, H)
    by_members = {}
    for s in sorted(d_h):
        members = closures.omega_h(S, core.set_mul(S, {s}, H))
        if members not in by_members:
            by_members[members] = OmegaCoset(H, s, members)
    cosets = tuple(
        sorted(by_members.values(), key=lambda c: min(c.members))
    )
    members_list = [c.members for c in cosets]
    assert H in members_list, "H itself must appear as a coset"
    union = frozenset().union(*members_list)
    assert union == d_h, "cosets must cover exactly the domain"
    assert sum(len(ms) for ms in members_list) == len(d_h), "cosets must be disjoint"

    # s acts on the coset of t exactly when st stays inside the domain;
    # membership is representative-independent because the relation is a
    # left partial congruence
    index = {ms: i for i, ms in enumerate(members_list)}
    rows = []
    for s in S.elements:
        row = []
        for c in cosets:
            t = min(c.members)
            st = S.mul(s, t)
            if st in d_h:
                target = closures.omega_h(S, core.set_mul(S, {st}, H))
                row.append(index[target])
            else:
                row.append(None)
        rows.append(row)
    labels = ["{" + ",".join(str(x) for x in sorted(c.members)) + "}" for c in cosets]
    act = acts.validate_act(S, rows, labels)
    h_idx = index[H]
    assert acts.stabilizer(act, h_idx) == H, "stabilizer of the base coset must be H"
    return CosetSpace(S, H, cosets, d_h, act)


def are_conjugate(S: FiniteSemigroup, H, K):
    """A witness (s, s') with s'Hs inside K and sKs' inside H, or None.

    Any witness found is checked against the sharper characterisation
    ((s'Hs) closure equals K, and symmetrically) and against an explicit
    act isomorphism between the two coset spaces; the two answers must
    agree.
    """
    return _are_conjugate(S, frozenset(H), frozenset(K))


@lru_cache(maxsize=None)
def _are_conjugate(S: FiniteSemigroup, H, K):
    H = check_base(S, H)
    K = check_base(S, K)
    witness = None
    for s in S.elements:
        for w in core.weak_inverses(S, s):
            if core.set_mul(S, {w}, H, {s}) <= K and core.set_mul(S, {s}, K, {w}) <= H:
                witness = (s, w)
                break
        if witness:
            break
    if witness is not None:
        s, w = witness
        assert closures.omega_h(S, core.set_mul(S, {w}, H, {s})) == K
        assert closures.omega_h(S, core.set_mul(S, {s}, K, {w})) == H
        assert S.mul(s, w) in H and S.mul(w, s) in K
    space_h = coset_space(S, H)
    space_k = coset_space(S, K)
    iso = None
    if space_h.act.carrier == space_k.act.carrier:
        iso = acts.find_act_isomorphism(space_h.act, space_k.act)
    assert (witness is not None) == (iso is not None), (
        "conjugacy witness search and act isomorphism disagree"
    )
    return witness


def is_self_conjugate(S: FiniteSemigroup, H) -> bool:
    """Whether st in H always forces ts in H."""
    H = check_base(S, H)
    return all(
        S.mul(t, s) in H
        for s in S.elements
        for t in S.elements
        if S.mul(s, t) in H
    )


def quotient_group(S: FiniteSemigroup, H) -> FiniteSemigroup:
    """The group of cosets of a self-conjugate base, multiplying by
    (coset of s)(coset of t) = coset of st."""
    H = check_base(S, H)
    if not is_self_conjugate(S, H):
        witness = next(
            (
                (s, t)
                for s in S.elements
                for t in S.elements
                if S.mul(s, t) in H and S.mul(t, s) not in H
            ),
            None,
        )
        raise NotSelfConjugate(witness)
    space = coset_space(S, H)
    reps = [min(c.members) for c in space.cosets]
    rows = [
        [space.coset_of(S.mul(a, b)) for b in reps]
        for a in reps
    ]
    labels = ["{" + ",".join(str(x) for x in sorted(c.members)) + "}" for c in space.cosets]
    Q = core.build_semigroup(rows, labels=labels, name=f"{S.name}/H" if S.name else "S/H")
    assert core.is_group(Q)
    assert Q.identity == space.index_of(H)
    return Q


@dataclass(frozen=True)
class RhoRepresentation:
    """For each element of D_H, the permutation it induces on the cosets."""

    space: CosetSpace
    permutations: dict[int, tuple[int, ...]]

    def kernel_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (s, t)
            for s in self.permutations
            for t in self.permutations
            if self.permutations[s] == self.permutations[t]
        )


def rho_representation(S: FiniteSemigroup, H) -> RhoRepresentation:
    """The homomorphism from D_H into the symmetric group on the cosets.

    Each element acts by multiplying cosets; the result is asserted to be
    a homomorphism whose kernel is exactly the coset congruence.
    """
    H = check_base(S, H)
    if not is_self_conjugate(S, H):
        raise NotSelfConjugate()
    space = coset_space(S, H)
    k = len(space.cosets)
    perms = {}
    for s in sorted(space.domain):
        images = []
        for c in space.cosets:
            t = min(c.members)
            st = S.mul(s, t)
            assert st in space.domain, "D_H must be closed under products"
            images.append(space.coset_of(st))
        assert sorted(images) == list(range(k)), "each rho_s must be a bijection"
        perms[s] = tuple(images)
    for s in perms:
        for t in perms:
            st = S.mul(s, t)
            assert st in perms
            composed = tuple(perms[s][perms[t][i]] for i in range(k))
            assert perms[st] == composed, "rho must be a homomorphism"
    rep = RhoRepresentation(space, perms)
    pi_pairs = frozenset(
        (s, t)
        for s in space.domain
        for t in space.domain
        if any(S.mul(w, t) in H for w in core.weak_inverses(S, s))
    )
    assert rep.kernel_pairs() == pi_pairs, "kernel of rho must be the coset congruence"
    return rep
