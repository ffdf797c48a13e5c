"""Cryptosystems over total cancellative semigroup acts: decrypt key
spaces, the Massey-Omura and generalised ElGamal protocol simulations,
the classic modular-exponentiation cipher, and the decomposition of
locally free systems into copies of the minimal idempotent's orbit.

Everything here is desk scale: keys and key spaces are found by
exhaustive scans, and hardness is illustrative only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from . import acts, closures, core
from .core import FiniteSemigroup
from .errors import (
    NoDecryptKey,
    NoMinimumIdempotent,
    NotAssociativeAction,
    NotCancellative,
    NotPrime,
    OrderTooLarge,
    PreconditionFailed,
)
from .report import Finding, check


@dataclass(frozen=True)
class Cryptosystem:
    """A total cancellative act together with a cipher key."""

    semigroup: FiniteSemigroup
    act: acts.PartialAct  # total: every entry defined
    cipher_key: int

    @property
    def carrier(self) -> int:
        return self.act.carrier

    def encrypt(self, x: int, key: int | None = None) -> int:
        key = self.cipher_key if key is None else key
        return self.act.act(key, x)

    def with_key(self, key: int) -> "Cryptosystem":
        return Cryptosystem(self.semigroup, self.act, key)


def build_cryptosystem(S: FiniteSemigroup, rows, cipher_key, point_labels=None) -> Cryptosystem:
    """Validate totality, associativity and cancellativity of the action.

    A total cancellative act over an E-dense semigroup automatically
    satisfies the partial-act axioms with full domains, which is checked
    here by running the act validator on the table as-is.
    """
    rows = [list(r) for r in rows]
    m = len(rows[0])
    for s in S.elements:
        for x in range(m):
            assert rows[s][x] is not None, "cryptosystem actions must be total"
    for s, t in product(S.elements, repeat=2):
        st = S.mul(s, t)
        for x in range(m):
            if rows[st][x] != rows[s][rows[t][x]]:
                raise NotAssociativeAction(s, t, x)
    for s in S.elements:
        seen = {}
        for x in range(m):
            v = rows[s][x]
            if v in seen:
                raise NotCancellative(s, seen[v], x)
            seen[v] = x
    act = acts.validate_act(S, rows, point_labels)
    assert all(act.element_domain(s) == frozenset(act.points) for s in S.elements)
    assert 0 <= cipher_key < S.n
    return Cryptosystem(S, act, cipher_key)


def locally_free_system(S: FiniteSemigroup, cipher_key: int) -> Cryptosystem:
    """The canonical system of S: left multiplication on the orbit of the
    minimum idempotent (a left ideal carrying a locally free act)."""
    f = minimum_idempotent(S)
    carrier = sorted({S.mul(t, f) for t in S.elements} | {f})
    rows, labels = acts.left_mult_total(S, carrier)
    return build_cryptosystem(S, rows, cipher_key, labels)


def minimum_idempotent(S: FiniteSemigroup) -> int:
    """The least idempotent in the idempotent-witnessed order, if any."""
    closures.require_semilattice(S)
    E = core.idempotents(S)
    minima = [e for e in E if all(core.h_leq(S, e, f) for f in E)]
    if not minima:
        raise NoMinimumIdempotent(f"among {sorted(E)}")
    assert len(minima) == 1
    return minima[0]


def decrypt_key_space(sys: Cryptosystem, x: int, key: int | None = None) -> frozenset[int]:
    """K(s, x): all t such that t*s fixes x."""
    s = sys.cipher_key if key is None else key
    return frozenset(
        t for t in sys.semigroup.elements if sys.act.act(sys.semigroup.mul(t, s), x) == x
    )


def uniform_decrypt_keys(sys: Cryptosystem, key: int | None = None) -> frozenset[int]:
    """Decrypt keys valid for every point: the intersection of K(s, x) over x."""
    keys = None
    for x in sys.act.points:
        k = decrypt_key_space(sys, x, key)
        keys = k if keys is None else keys & k
    return keys if keys is not None else frozenset()


def _uniform_key(sys: Cryptosystem, key: int) -> int:
    keys = uniform_decrypt_keys(sys, key)
    if not keys:
        raise NoDecryptKey(key)
    return min(keys)


def verify_key_space_theorem(sys: Cryptosystem, x: int) -> list[Finding]:
    """Evaluate the structural description of K(s, x) part by part.

    Parts: K is closed upward in the natural order; the closed triple
    product of stabilizers around a weak inverse sits inside K; with a
    band of idempotents that closure is exactly K; in an inverse
    semigroup K is the closure of S_x s^{-1}; in a group K = S_x s^{-1}
    with |K| = |S_x|.
    """
    S = sys.semigroup
    s = sys.cipher_key
    K = decrypt_key_space(sys, x)
    S_x = acts.stabilizer(sys.act, x)
    S_sx = acts.stabilizer(sys.act, sys.act.act(s, x))
    W_s = core.weak_inverses(S, s)
    triple = core.set_mul(S, S_x, W_s, S_sx)
    findings = [
        check("key-space-m-closed", closures.omega_m(S, K) == K, f"s={s} x={x}"),
        check(
            "key-space-contains-closed-triple",
            closures.omega_m(S, triple) <= K,
            f"s={s} x={x}",
        ),
    ]
    if core.classify_idempotents(S).is_band:
        findings.append(
            check(
                "key-space-equals-h-closed-triple",
                closures.omega_h(S, triple) == K,
                f"s={s} x={x}",
            )
        )
    if core.is_inverse_semigroup(S):
        (s_inv,) = core.inverse_sets(S, s).V
        findings.append(
            check(
                "key-space-inverse-form",
                closures.omega_h(S, core.set_mul(S, S_x, {s_inv})) == K,
                f"s={s} x={x}",
            )
        )
    if core.is_group(S):
        (s_inv,) = core.inverse_sets(S, s).V
        coset = core.set_mul(S, S_x, {s_inv})
        findings.append(
            check(
                "key-space-group-form",
                coset == K and len(K) == len(S_x),
                f"s={s} x={x}",
            )
        )
    return findings


def locally_free_key_space(sys: Cryptosystem, x: int) -> frozenset[int]:
    """K(s, x) in the locally free E-unitary case, where it collapses to
    the closure of the weak inverses of s (equivalently, to L(s))."""
    S = sys.semigroup
    closures.require_semilattice(S)
    if not core.is_e_dense(S):
        raise PreconditionFailed("e_dense")
    if not core.is_e_unitary(S):
        raise PreconditionFailed("e_unitary")
    E = core.idempotents(S)
    e_closure = closures.omega_h(S, E)
    for y in sys.act.points:
        if acts.stabilizer(sys.act, y) != e_closure:
            raise PreconditionFailed("locally_free", f"point {y}")
    s = sys.cipher_key
    K = decrypt_key_space(sys, x)
    assert K == closures.omega_h(S, core.weak_inverses(S, s))
    assert K == core.left_pre_inverses(S, s)
    return K


@dataclass(frozen=True)
class ProtocolTranscript:
    """Message flow of one protocol run; values are element/point ids."""

    entries: tuple[tuple[str, str, int], ...]
    recovered: int
    plaintext: int

    @property
    def ok(self) -> bool:
        return self.recovered == self.plaintext

    def render(self) -> str:
        return "\n".join(f"{party}: {kind} = {value}" for party, kind, value in self.entries)


@dataclass(frozen=True)
class BiactTable:
    """Compatible left and right total cancellative actions on one set."""

    semigroup: FiniteSemigroup
    left: tuple[tuple[int, ...], ...]  # left[s][x] = s*x
    right: tuple[tuple[int, ...], ...]  # right[x][s] = x*s


def build_biact(S: FiniteSemigroup, left_rows, right_rows) -> BiactTable:
    left = tuple(tuple(r) for r in left_rows)
    right = tuple(tuple(r) for r in right_rows)
    m = len(left[0])
    for s, t in product(S.elements, repeat=2):
        st = S.mul(s, t)
        for x in range(m):
            if left[st][x] != left[s][left[t][x]]:
                raise NotAssociativeAction(s, t, x)
            if right[right[x][s]][t] != right[x][st]:
                raise NotAssociativeAction(s, t, x)
    for s in S.elements:
        if len({left[s][x] for x in range(m)}) != m:
            raise NotCancellative(s, -1, -1)
        if len({right[x][s] for x in range(m)}) != m:
            raise NotCancellative(s, -1, -1)
    for s, t in product(S.elements, repeat=2):
        for x in range(m):
            if right[left[s][x]][t] != left[s][right[x][t]]:
                raise NotAssociativeAction(s, t, x)
    return BiactTable(S, left, right)


def massey_omura(
    sys: Cryptosystem, x: int, alice_key: int, bob_key: int, biact: BiactTable | None = None
) -> ProtocolTranscript:
    """Three-pass key-free exchange: lock, lock again, unlock, unlock.

    With a commutative semigroup the two locks slide past each other;
    otherwise a compatible right action takes Bob's place.
    """
    S = sys.semigroup
    s, t = alice_key, bob_key
    if biact is None:
        commutative = all(
            S.mul(a, b) == S.mul(b, a) for a in S.elements for b in S.elements
        )
        if not commutative:
            raise PreconditionFailed("commutative", "supply a biact for this semigroup")
        s_inv = _uniform_key(sys, s)
        t_inv = _uniform_key(sys, t)
        m1 = sys.act.act(s, x)
        m2 = sys.act.act(t, m1)
        m3 = sys.act.act(s_inv, m2)
        recovered = sys.act.act(t_inv, m3)
    else:
        s_inv = _uniform_key(sys, s)
        t_right_keys = frozenset(
            r
            for r in S.elements
            if all(biact.right[y][S.mul(t, r)] == y for y in range(sys.carrier))
        )
        if not t_right_keys:
            raise NoDecryptKey(t)
        t_inv = min(t_right_keys)
        m1 = biact.left[s][x]
        m2 = biact.right[m1][t]
        m3 = biact.left[s_inv][m2]
        recovered = biact.right[m3][t_inv]
    entries = (
        ("alice", "ciphertext-1", m1),
        ("bob", "ciphertext-2", m2),
        ("alice", "ciphertext-3", m3),
        ("bob", "recovered", recovered),
    )
    return ProtocolTranscript(entries, recovered, x)


def elgamal(sys: Cryptosystem, x: int, shared: int, alice_key: int, bob_key: int) -> ProtocolTranscript:
    """Generalised ElGamal over the act: Bob publishes shared*bob_key,
    Alice sends the pair ((alice_key*(shared*bob_key))x, alice_key*shared),
    Bob rebuilds the masking key by associativity and undoes it."""
    S = sys.semigroup
    s, c, d = shared, alice_key, bob_key
    public = S.mul(s, d)
    mask = S.mul(c, public)
    ciphertext = sys.act.act(mask, x)
    trace = S.mul(c, s)
    bob_mask = S.mul(trace, d)
    assert bob_mask == mask
    k = _uniform_key(sys, bob_mask)
    recovered = sys.act.act(k, ciphertext)
    entries = (
        ("bob", "public-key", public),
        ("alice", "ciphertext", ciphertext),
        ("alice", "key-trace", trace),
        ("bob", "recovered", recovered),
    )
    return ProtocolTranscript(entries, recovered, x)


@dataclass(frozen=True)
class ModExpSystem:
    """The classic discrete-log cipher: exponent units acting on the
    units mod p by x -> x^n."""

    p: int
    exponents: tuple[int, ...]
    units: tuple[int, ...]
    semigroup: FiniteSemigroup
    rows: tuple[tuple[int, ...], ...]
    is_free: bool
    non_free_units: tuple[int, ...]

    def element_of(self, n: int) -> int:
        return self.exponents.index(n)

    def point_of(self, x: int) -> int:
        return self.units.index(x)

    def unit_value(self, point: int) -> int:
        return self.units[point]

    def system(self, n: int) -> Cryptosystem:
        """Cryptosystem keyed by the exponent value n."""
        labels = [str(u) for u in self.units]
        return build_cryptosystem(
            self.semigroup, self.rows, self.element_of(n), labels
        )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def modexp_system(p: int) -> ModExpSystem:
    """Build the exponentiation system mod a small prime.

    The group of units mod p-1 acts on the units mod p by exponentiation;
    every key has a unique uniform decrypt key (the modular inverse of the
    exponent), and the freeness of the action is recorded point by point.
    """
    if p > 257:
        raise OrderTooLarge(p, 257, "modulus")
    if not _is_prime(p):
        raise NotPrime(p)
    modulus = p - 1
    exponents = tuple(
        n for n in range(1, max(modulus, 2)) if math.gcd(n, modulus) == 1
    )
    k = len(exponents)

    def emul(a, b):
        r = (a * b) % modulus
        return r if r else modulus

    table = [[exponents.index(emul(a, b)) for b in exponents] for a in exponents]
    S = core.build_semigroup(
        table, labels=[str(n) for n in exponents], name=f"U_{modulus}"
    )
    units = tuple(range(1, p)) if p > 2 else (1,)
    rows = tuple(
        tuple(units.index(pow(x, n, p)) for x in units) for n in exponents
    )
    non_free = tuple(
        x
        for i, x in enumerate(units)
        if any(rows[j][i] == i for j in range(k) if exponents[j] != 1)
    )
    return ModExpSystem(p, exponents, units, S, rows, not non_free, non_free)


def _pointwise_decryptable(act: acts.PartialAct) -> bool:
    S = act.semigroup
    assert all(act.element_domain(s) == frozenset(act.points) for s in S.elements)
    return all(
        any(act.act(S.mul(t, s), x) == x for t in S.elements)
        for x in act.points
        for s in S.elements
    )


def stabilizers_left_dense(act: acts.PartialAct) -> bool:
    """Whether every stabilizer is left dense: each key has a pointwise
    decrypt key (for all x and s there is t with (ts)x = x).

    On small carriers the two equivalent orbit formulations are asserted
    to agree with the direct scan.
    """
    dense = _pointwise_decryptable(act)
    if act.carrier <= 16:
        for f in left_dense_equivalences(act):
            assert f.passed, f.witness
    return dense


def left_dense_equivalences(act: acts.PartialAct) -> list[Finding]:
    """The three equivalent forms of pointwise decryptability on a total act:
    left dense stabilizers; every orbit transitive with x in its own image;
    every locally cyclic subact transitive with x in its own image."""
    S = act.semigroup
    m = act.carrier
    assert m <= 16, "equivalence scan limited to small carriers"
    cond1 = _pointwise_decryptable(act)

    # reach[x] is the bitmask of {s*x : s in S}
    reach = [0] * m
    for x in range(m):
        for s in S.elements:
            reach[x] |= 1 << act.act(s, x)

    def transitive_mask(mask):
        return all(
            mask & ~reach[y] == 0 for y in range(m) if mask >> y & 1
        )

    cond2 = all(
        reach[x] >> x & 1 and transitive_mask(reach[x] | 1 << x) for x in range(m)
    )

    # subacts of a total act are exactly the unions of forward closures,
    # so scanning unions of the distinct reach-closures covers them all
    def closure_mask(x):
        mask = 1 << x
        while True:
            grown = mask
            for y in range(m):
                if mask >> y & 1:
                    grown |= reach[y]
            if grown == mask:
                return mask
            mask = grown

    distinct = sorted({closure_mask(x) for x in range(m)})
    cond3 = all(reach[x] >> x & 1 for x in range(m))
    for bits in range(1, 1 << len(distinct)):
        mask = 0
        for i, c in enumerate(distinct):
            if bits >> i & 1:
                mask |= c
        points = [y for y in range(m) if mask >> y & 1]
        locally_cyclic = all(
            any(reach[z] >> y1 & 1 and reach[z] >> y2 & 1 for z in points)
            for y1 in points
            for y2 in points
        )
        if locally_cyclic and not transitive_mask(mask):
            cond3 = False
            break
    return [
        check(
            "left-dense-equivalences",
            cond1 == cond2 == cond3,
            f"{cond1},{cond2},{cond3}",
        ),
    ]


@dataclass(frozen=True)
class ClassificationReport:
    """Decomposition of a system against the orbit of the minimum idempotent."""

    minimum_idempotent: int
    base_points: tuple[int, ...]
    orbit_results: tuple[tuple[tuple[int, ...], bool], ...]
    locally_free: bool
    is_disjoint_union_of_base: bool
    copies: int | None


def classify_locally_free_cryptosystem(S: FiniteSemigroup, act: acts.PartialAct) -> ClassificationReport:
    """Decide whether a total act decomposes into disjoint copies of the
    orbit of the minimum idempotent, orbit by orbit.

    The decomposition exists exactly when the act is locally free (every
    stabilizer equals the closure of the idempotents); that equivalence is
    asserted on the way out.
    """
    f = minimum_idempotent(S)
    wp = acts.wagner_preston(S)
    base_points = tuple(sorted(acts.orbit(wp, f)))
    base_act = acts.subact(wp, base_points)
    results = []
    all_iso = True
    for O in acts.orbits(act):
        piece = acts.subact(act, sorted(O))
        iso = None
        if piece.carrier == base_act.carrier:
            iso = acts.find_act_isomorphism(piece, base_act)
        results.append((tuple(sorted(O)), iso is not None))
        all_iso = all_iso and iso is not None
    E = core.idempotents(S)
    e_closure = closures.omega_h(S, E)
    locally_free = all(acts.stabilizer(act, x) == e_closure for x in act.points)
    assert locally_free == all_iso, (
        "a locally free system must decompose into copies of the base orbit"
    )
    return ClassificationReport(
        f,
        base_points,
        tuple(results),
        locally_free,
        all_iso,
        len(results) if all_iso else None,
    )


def discrete_log_candidates(sys: Cryptosystem, x: int, y: int) -> frozenset[int]:
    """All keys s with s*x = y: the brute-force discrete log."""
    return frozenset(s for s in sys.semigroup.elements if sys.act.act(s, x) == y)
