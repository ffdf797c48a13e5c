"""Finite semigroups on Cayley tables and their element-level invariants.

Elements are dense integer ids 0..n-1; a semigroup is just its n x n
multiplication table, validated associative on construction.  All
predicates below are exhaustive scans (n, n^2 or n^3 loops): at desk
scale this is both fast enough and trustworthy enough to serve as an
oracle for the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import (
    BadIdentityHint,
    CarrierTooLarge,
    NonAssociative,
    OutOfRangeEntry,
    ParseError,
)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup given by its Cayley table.

    ``table[i][j]`` is the id of the product i*j.  ``identity`` is the
    two-sided identity if one exists.  ``labels`` are display-only.
    """

    table: tuple[tuple[int, ...], ...]
    identity: int | None = None
    labels: tuple[str, ...] | None = None
    name: str = ""

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *ids: int) -> int:
        it = iter(ids)
        acc = next(it)
        for b in it:
            acc = self.table[acc][b]
        return acc

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def is_monoid(self) -> bool:
        return self.identity is not None

    def __len__(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class InverseSets:
    """Weak inverses W, inverses V and left pre-inverses L of one element."""

    W: frozenset[int]
    V: frozenset[int]
    L: frozenset[int]


@dataclass(frozen=True)
class IdempotentStructure:
    is_band: bool
    is_semilattice: bool


def _find_identity(table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    return None


def build_semigroup(rows, identity_hint=None, labels=None, name="") -> FiniteSemigroup:
    """Validate a square table and return the semigroup it defines.

    Associativity is checked exhaustively over all n^3 triples; the
    first failing triple is reported.  A two-sided identity is detected
    automatically; ``identity_hint`` is only checked against it.
    """
    table = tuple(tuple(row) for row in rows)
    n = len(table)
    if n == 0:
        raise ParseError(1, "empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise OutOfRangeEntry(i, len(row), -1)
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise OutOfRangeEntry(i, j, v)
    for i, j, k in product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NonAssociative(i, j, k)
    identity = _find_identity(table)
    if identity_hint is not None and identity_hint != identity:
        raise BadIdentityHint(identity_hint)
    if labels is not None:
        labels = tuple(labels)
        assert len(labels) == n
    return FiniteSemigroup(table, identity, labels, name)


def parse_cayley_table(text: str, name="") -> FiniteSemigroup:
    """Parse the Cayley table text format.

    Line 1 is the order n, the next n lines hold the rows, an optional
    trailing ``identity <id>`` names the identity, ``#`` starts a comment.
    """
    rows = []
    n = None
    identity_hint = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(lineno, f"expected order, got {line!r}") from None
            if n <= 0:
                raise ParseError(lineno, "order must be positive")
            continue
        if line.startswith("identity"):
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(lineno, "expected 'identity <id>'")
            identity_hint = int(parts[1])
            continue
        if len(rows) == n:
            raise ParseError(lineno, "unexpected extra row")
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"bad row {line!r}") from None
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(row)}")
        rows.append(row)
    if n is None or len(rows) != n:
        raise ParseError(0, "incomplete table")
    return build_semigroup(rows, identity_hint=identity_hint, name=name)


def format_cayley_table(S: FiniteSemigroup) -> str:
    lines = [str(S.n)]
    lines += [" ".join(str(v) for v in row) for row in S.table]
    if S.identity is not None:
        lines.append(f"identity {S.identity}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    """All e with e*e == e."""
    return frozenset(e for e in S.elements if S.mul(e, e) == e)


@lru_cache(maxsize=None)
def classify_idempotents(S: FiniteSemigroup) -> IdempotentStructure:
    """Whether E(S) is closed under the product (a band), and commutative."""
    E = idempotents(S)
    band = all(S.mul(e, f) in E for e in E for f in E)
    semilattice = band and all(S.mul(e, f) == S.mul(f, e) for e in E for f in E)
    return IdempotentStructure(band, semilattice)


def is_semilattice_of_idempotents(S: FiniteSemigroup) -> bool:
    return classify_idempotents(S).is_semilattice


@lru_cache(maxsize=None)
def weak_inverses(S: FiniteSemigroup, s: int) -> frozenset[int]:
    """W(s): all t with t*s*t == t."""
    return frozenset(t for t in S.elements if S.prod(t, s, t) == t)


def inverse_sets(S: FiniteSemigroup, s: int) -> InverseSets:
    """W(s), V(s) and L(s) for one element; always V <= W <= L."""
    E = idempotents(S)
    W = weak_inverses(S, s)
    V = frozenset(t for t in W if S.prod(s, t, s) == s)
    L = frozenset(t for t in S.elements if S.mul(t, s) in E)
    assert V <= W <= L
    return InverseSets(W, V, L)


@lru_cache(maxsize=None)
def left_pre_inverses(S: FiniteSemigroup, s: int) -> frozenset[int]:
    """L(s): all t with t*s idempotent."""
    E = idempotents(S)
    return frozenset(t for t in S.elements if S.mul(t, s) in E)


@lru_cache(maxsize=None)
def mitsch_leq(S: FiniteSemigroup, a: int, b: int) -> bool:
    """The natural partial order: a == b, or a = x*b = b*y with x*a = a*y = a.

    The degenerate clause makes the relation reflexive on semigroups
    without local left/right identities (equivalently, witnesses may be
    taken in the monoid obtained by adjoining an identity).
    """
    if a == b:
        return True
    for x in S.elements:
        if S.mul(x, b) != a or S.mul(x, a) != a:
            continue
        for y in S.elements:
            if S.mul(b, y) == a and S.mul(a, y) == a:
                return True
    return False


@lru_cache(maxsize=None)
def h_leq(S: FiniteSemigroup, a: int, b: int) -> bool:
    """Idempotent-witnessed refinement of the natural order.

    a <= b iff a == b or a = b*e and a = f*b for idempotents e, f.
    """
    if a == b:
        return True
    E = idempotents(S)
    return any(S.mul(b, e) == a for e in E) and any(S.mul(f, b) == a for f in E)


@lru_cache(maxsize=None)
def green_l_class(S: FiniteSemigroup, a: int) -> frozenset[int]:
    """The L-class of a: all b generating the same principal left ideal."""

    def left_ideal(x):
        return frozenset(S.mul(t, x) for t in S.elements) | {x}

    target = left_ideal(a)
    return frozenset(b for b in S.elements if left_ideal(b) == target)


def is_e_dense(S: FiniteSemigroup) -> bool:
    """Every element has left and right products landing in E.

    True for every finite semigroup; kept as a sanity assertion.
    """
    E = idempotents(S)
    for s in S.elements:
        if not any(S.mul(t, s) in E for t in S.elements):
            return False
        if not any(S.mul(s, t) in E for t in S.elements):
            return False
    return True


@lru_cache(maxsize=None)
def is_group(S: FiniteSemigroup) -> bool:
    """Group test via |L(s)| == 1 for all s, cross-checked directly."""
    via_l = all(len(left_pre_inverses(S, s)) == 1 for s in S.elements)
    full = set(S.elements)
    direct = (
        S.identity is not None
        and all(set(row) == full for row in S.table)
        and all({row[j] for row in S.table} == full for j in S.elements)
    )
    assert via_l == direct, "group criteria disagree; table scan is buggy"
    return via_l


def is_unitary_subset(S: FiniteSemigroup, A) -> bool:
    """s*a in A or a*s in A (a in A) forces s in A, both sides."""
    A = frozenset(A)
    for s in S.elements:
        if s in A:
            continue
        for a in A:
            if S.mul(s, a) in A or S.mul(a, s) in A:
                return False
    return True


def is_e_unitary(S: FiniteSemigroup) -> bool:
    """Whether the idempotents form a unitary subset."""
    return is_unitary_subset(S, idempotents(S))


@lru_cache(maxsize=None)
def regular_elements(S: FiniteSemigroup) -> frozenset[int]:
    """All x with x*y*x == x for some y."""
    return frozenset(
        x for x in S.elements if any(S.prod(x, y, x) == x for y in S.elements)
    )


@lru_cache(maxsize=None)
def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    """Every element has exactly one inverse."""
    return all(len(inverse_sets(S, s).V) == 1 for s in S.elements)


def set_mul(S: FiniteSemigroup, *sets) -> frozenset[int]:
    """Elementwise product of subsets, e.g. set_mul(S, A, B) = {a*b}."""
    acc = frozenset(sets[0])
    for other in sets[1:]:
        acc = frozenset(S.mul(a, b) for a in acc for b in other)
    return acc


def is_subsemigroup(S: FiniteSemigroup, H) -> bool:
    H = frozenset(H)
    return bool(H) and all(S.mul(a, b) in H for a in H for b in H)


def _element_signature(S: FiniteSemigroup, x: int):
    # index and period of the cyclic subsemigroup generated by x, plus
    # ideal sizes: cheap isomorphism invariants used to prune search
    seen = {x: 1}
    y = x
    k = 1
    while True:
        y = S.mul(y, x)
        k += 1
        if y in seen:
            index, period = seen[y], k - seen[y]
            break
        seen[y] = k
    Sx = {S.mul(t, x) for t in S.elements}
    xS = {S.mul(x, t) for t in S.elements}
    return (index, period, S.mul(x, x) == x, len(Sx), len(xS), len(Sx & xS))


def find_semigroup_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, max_order=16):
    """A table isomorphism S -> T found by backtracking, or None.

    Candidates are pruned by cyclic-structure signatures; fine for the
    desk-scale orders this package works at.
    """
    if S.n != T.n:
        return None
    if S.n > max_order:
        raise CarrierTooLarge(S.n, max_order)
    sig_s = [_element_signature(S, x) for x in S.elements]
    sig_t = [_element_signature(T, x) for x in T.elements]
    if sorted(sig_s) != sorted(sig_t):
        return None
    candidates = [
        [y for y in T.elements if sig_t[y] == sig_s[x]] for x in S.elements
    ]
    n = S.n
    image = [-1] * n
    used = [False] * n

    def consistent(x, y):
        for a in range(n):
            if image[a] < 0:
                continue
            ab, ba = S.mul(a, x), S.mul(x, a)
            if image[ab] >= 0 and T.mul(image[a], y) != image[ab]:
                return False
            if image[ab] < 0 and ab == x and T.mul(image[a], y) != y:
                return False
            if image[ba] >= 0 and T.mul(y, image[a]) != image[ba]:
                return False
            if image[ba] < 0 and ba == x and T.mul(y, image[a]) != y:
                return False
        xx = S.mul(x, x)
        if image[xx] >= 0 and T.mul(y, y) != image[xx]:
            return False
        if xx == x and T.mul(y, y) != y:
            return False
        return True

    def search(x):
        if x == n:
            return all(
                T.mul(image[a], image[b]) == image[S.mul(a, b)]
                for a in range(n)
                for b in range(n)
            )
        for y in candidates[x]:
            if used[y] or not consistent(x, y):
                continue
            image[x] = y
            used[y] = True
            if search(x + 1):
                return True
            image[x] = -1
            used[y] = False
        return False

    if search(0):
        return {x: image[x] for x in S.elements}
    return None
