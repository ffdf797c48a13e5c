"""Constructions: fixture corpus, small-order enumeration, and monoids
built from free transitive group actions on locally idempotent categories.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import core
from .core import FiniteSemigroup, build_semigroup
from .errors import (
    ActionAxiomViolation,
    BadComposability,
    MissingIdentity,
    NonAssociative,
    NotGroup,
    OrderTooLarge,
    PreconditionFailed,
    UnknownFixture,
    UnsupportedBand,
)

FIXTURE_NAMES = ("CHAIN3", "LZ2", "N2", "Z2", "Z3", "Z6", "T2", "B2", "Z3E", "Z6E")


def _cyclic_group(n: int, name: str) -> FiniteSemigroup:
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_semigroup(rows, name=name)


@lru_cache(maxsize=None)
def fixture(name: str) -> FiniteSemigroup:
    """The frozen fixture corpus; every table is validated on first use."""
    if name == "CHAIN3":
        # min on the chain 0 < 1 < 2
        return build_semigroup([[0, 0, 0], [0, 1, 1], [0, 1, 2]], name=name)
    if name == "LZ2":
        # left-zero band: x*y = x
        return build_semigroup([[0, 0], [1, 1]], name=name)
    if name == "N2":
        # null semigroup {0, a} with a*a = 0
        return build_semigroup([[0, 0], [0, 0]], name=name)
    if name == "Z2":
        return _cyclic_group(2, name)
    if name == "Z3":
        return _cyclic_group(3, name)
    if name == "Z6":
        return _cyclic_group(6, name)
    if name == "T2":
        # all maps on {0,1}: 0=id, 1=swap, 2=const0, 3=const1; row*col = row o col
        rows = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 2, 2, 2], [3, 3, 3, 3]]
        return build_semigroup(rows, labels=("id", "swap", "c0", "c1"), name=name)
    if name == "B2":
        # five-element Brandt semigroup {0, a, a', aa', a'a}
        rows = [
            [0, 0, 0, 0, 0],
            [0, 0, 3, 0, 1],
            [0, 4, 0, 2, 0],
            [0, 1, 0, 3, 0],
            [0, 0, 2, 0, 4],
        ]
        return build_semigroup(rows, labels=("0", "a", "a'", "aa'", "a'a"), name=name)
    if name == "Z3E":
        return adjoined_band_semigroup(_cyclic_group(3, "Z3"), name=name)
    if name == "Z6E":
        return adjoined_band_semigroup(_cyclic_group(6, "Z6"), name=name)
    raise UnknownFixture(name)


def corpus() -> list[FiniteSemigroup]:
    return [fixture(name) for name in FIXTURE_NAMES]


def enumerate_semigroups(n: int):
    """Stream all associative tables on n elements (no isomorphism reduction)."""
    if n > 3:
        raise OrderTooLarge(n, 3)
    ids = range(n)
    triples = list(product(ids, repeat=3))
    for flat in product(ids, repeat=n * n):
        table = tuple(flat[i * n : (i + 1) * n] for i in ids)
        if all(table[table[i][j]][k] == table[i][table[j][k]] for i, j, k in triples):
            yield FiniteSemigroup(table, core._find_identity(table))


# --- adjoined-band family -------------------------------------------------
#
# S = G u e1.G u ... u e[k-1].G where the flags {0, e1, ..., e[k-1]} form a
# band with identity 0 and right-zero products among the nonzero flags, and
# every flag commutes with G.  k = 2 is the classical G u eG.


def _combine_flags(f1: int, f2: int) -> int:
    return f2 if f2 else f1


def _adjoined_band_table(G: FiniteSemigroup, k: int, name="") -> FiniteSemigroup:
    if not core.is_group(G):
        raise NotGroup()
    if k < 2:
        raise UnsupportedBand(k)
    n = G.n

    def eid(flag, g):
        return flag * n + g

    rows = [
        [eid(_combine_flags(f1, f2), G.mul(g, h)) for f2 in range(k) for h in range(n)]
        for f1 in range(k)
        for g in range(n)
    ]
    labels = [G.label(g) for g in range(n)]
    for f in range(1, k):
        suffix = str(f) if k > 2 else ""
        labels += [f"e{suffix}.{G.label(g)}" for g in range(n)]
    return build_semigroup(rows, labels=labels, name=name or f"{G.name}+E{k}")


@lru_cache(maxsize=None)
def adjoined_band_semigroup(G: FiniteSemigroup, k: int = 2, name="") -> FiniteSemigroup:
    """Extend a group by a k-element band of commuting flags (default G u eG).

    The table is verified against the pair-monoid construction over the
    enlarged derived category on every build.
    """
    S, _, _ = adjoined_band_to_cu_map(G, k, name=name)
    return S


# --- finite categories and group actions ----------------------------------


@dataclass(frozen=True)
class FiniteCategory:
    """A small category as data: morphisms with sources/targets, a partial
    composition table, and one identity morphism per object."""

    n_objects: int
    source: tuple[int, ...]
    target: tuple[int, ...]
    compose: tuple[tuple[int | None, ...], ...]  # compose[p][q] = p then q
    identities: tuple[int, ...]
    morphism_labels: tuple[str, ...] | None = None

    @property
    def n_morphisms(self) -> int:
        return len(self.source)

    def hom(self, u: int, v: int) -> list[int]:
        return [
            p
            for p in range(self.n_morphisms)
            if self.source[p] == u and self.target[p] == v
        ]

    def is_locally_idempotent(self) -> bool:
        return all(
            self.compose[p][p] == p
            for p in range(self.n_morphisms)
            if self.source[p] == self.target[p]
        )

    def is_strongly_connected(self) -> bool:
        return all(
            self.hom(u, v) for u in range(self.n_objects) for v in range(self.n_objects)
        )

    def mlabel(self, p: int) -> str:
        return self.morphism_labels[p] if self.morphism_labels else str(p)


@dataclass(frozen=True)
class GroupCategoryAction:
    """A group acting on a category, objectwise and morphismwise."""

    group: FiniteSemigroup
    on_objects: tuple[tuple[int, ...], ...]  # on_objects[g][u]
    on_morphisms: tuple[tuple[int, ...], ...]

    def obj(self, g: int, u: int) -> int:
        return self.on_objects[g][u]

    def mor(self, g: int, p: int) -> int:
        return self.on_morphisms[g][p]


def build_category(n_objects, morphisms, compose_map, labels=None) -> FiniteCategory:
    """Validate category data and return it.

    ``morphisms`` is a sequence of (source, target) pairs, ``compose_map``
    maps composable pairs (p, q) to p-then-q.  Identities are detected,
    one per object.
    """
    source = tuple(src for src, _ in morphisms)
    target = tuple(dst for _, dst in morphisms)
    m = len(source)
    compose = [[None] * m for _ in range(m)]
    for (p, q), r in compose_map.items():
        if target[p] != source[q]:
            raise BadComposability(p, q, "pair is not composable")
        if source[r] != source[p] or target[r] != target[q]:
            raise BadComposability(p, q, f"composite {r} has wrong endpoints")
        compose[p][q] = r
    for p in range(m):
        for q in range(m):
            if target[p] == source[q] and compose[p][q] is None:
                raise BadComposability(p, q, "composable pair left undefined")
    for p in range(m):
        for q in range(m):
            if compose[p][q] is None:
                continue
            for r in range(m):
                if compose[q][r] is None:
                    continue
                if compose[compose[p][q]][r] != compose[p][compose[q][r]]:
                    raise NonAssociative(p, q, r, where="composition")
    identities = []
    for u in range(n_objects):
        loops = [p for p in range(m) if source[p] == u and target[p] == u]
        unit = None
        for e in loops:
            left = all(compose[e][q] == q for q in range(m) if source[q] == u)
            right = all(compose[p][e] == p for p in range(m) if target[p] == u)
            if left and right:
                unit = e
                break
        if unit is None:
            raise MissingIdentity(u)
        identities.append(unit)
    cat = FiniteCategory(
        n_objects,
        source,
        target,
        tuple(tuple(row) for row in compose),
        tuple(identities),
        tuple(labels) if labels else None,
    )
    return cat


def validate_group_action(C: FiniteCategory, G: FiniteSemigroup, on_objects, on_morphisms):
    """Check the action axioms exhaustively; return (transitive, free)."""
    if not core.is_group(G):
        raise NotGroup()
    one = G.identity
    on_objects = tuple(tuple(row) for row in on_objects)
    on_morphisms = tuple(tuple(row) for row in on_morphisms)
    for u in range(C.n_objects):
        if on_objects[one][u] != u:
            raise ActionAxiomViolation("identity must fix objects", u)
    for p in range(C.n_morphisms):
        if on_morphisms[one][p] != p:
            raise ActionAxiomViolation("identity must fix morphisms", p)
    for g, h in product(G.elements, repeat=2):
        gh = G.mul(g, h)
        for u in range(C.n_objects):
            if on_objects[g][on_objects[h][u]] != on_objects[gh][u]:
                raise ActionAxiomViolation("(gh)u != g(hu)", (g, h, u))
        for p in range(C.n_morphisms):
            if on_morphisms[g][on_morphisms[h][p]] != on_morphisms[gh][p]:
                raise ActionAxiomViolation("(gh)p != g(hp)", (g, h, p))
    for g in G.elements:
        for p in range(C.n_morphisms):
            gp = on_morphisms[g][p]
            if C.source[gp] != on_objects[g][C.source[p]] or C.target[gp] != on_objects[g][C.target[p]]:
                raise ActionAxiomViolation("gp must lie in hom(gu, gv)", (g, p))
        for p in range(C.n_morphisms):
            for q in range(C.n_morphisms):
                if C.compose[p][q] is None:
                    continue
                gp, gq = on_morphisms[g][p], on_morphisms[g][q]
                if C.compose[gp][gq] != on_morphisms[g][C.compose[p][q]]:
                    raise ActionAxiomViolation("g(p+q) != gp+gq", (g, p, q))
        for u in range(C.n_objects):
            if on_morphisms[g][C.identities[u]] != C.identities[on_objects[g][u]]:
                raise ActionAxiomViolation("g 0_u != 0_gu", (g, u))
    action = GroupCategoryAction(G, on_objects, on_morphisms)
    transitive = all(
        any(on_objects[g][u] == v for g in G.elements)
        for u in range(C.n_objects)
        for v in range(C.n_objects)
    )
    free = all(
        g == one
        for g in G.elements
        for u in range(C.n_objects)
        if on_objects[g][u] == u
    )
    return action, transitive, free


@dataclass(frozen=True)
class CuMonoid:
    """The monoid of pairs (p, g) with p a morphism from u to gu."""

    semigroup: FiniteSemigroup
    pairs: tuple[tuple[int, int], ...]
    base_object: int


def c_u_monoid(C: FiniteCategory, action: GroupCategoryAction, u: int) -> CuMonoid:
    """Build the pair monoid over base object u and verify its structure.

    Requires the category strongly connected and locally idempotent and
    the action transitive and free; the result is checked to be an
    E-unitary E-dense monoid whose idempotents are exactly the pairs
    with trivial group part.
    """
    G = action.group
    _, transitive, free = validate_group_action(
        C, G, action.on_objects, action.on_morphisms
    )
    if not C.is_strongly_connected():
        raise PreconditionFailed("strongly_connected")
    if not C.is_locally_idempotent():
        raise PreconditionFailed("locally_idempotent")
    if not transitive:
        raise PreconditionFailed("transitive_action")
    if not free:
        raise PreconditionFailed("free_action")

    pairs = [
        (p, g) for g in G.elements for p in C.hom(u, action.obj(g, u))
    ]
    index = {pair: i for i, pair in enumerate(pairs)}
    rows = []
    for p, g in pairs:
        row = []
        for q, h in pairs:
            gq = action.mor(g, q)
            comp = C.compose[p][gq]
            assert comp is not None
            row.append(index[(comp, G.mul(g, h))])
        rows.append(row)
    labels = [f"({C.mlabel(p)},{G.label(g)})" for p, g in pairs]
    S = build_semigroup(rows, labels=labels, name=f"C_{u}")

    one = G.identity
    E = core.idempotents(S)
    assert E == frozenset(i for i, (p, g) in enumerate(pairs) if g == one)
    assert S.identity == index[(C.identities[u], one)]
    assert core.is_e_dense(S)
    assert core.is_e_unitary(S)
    group_iff = all(len(C.hom(u, action.obj(g, u))) == 1 for g in G.elements)
    assert core.is_group(S) == group_iff
    return CuMonoid(S, tuple(pairs), u)


def derived_category(G: FiniteSemigroup):
    """Objects are the group elements; morphisms (u, s, su) compose by
    left translation; the group acts by conjugation on the middle slot."""
    if not core.is_group(G):
        raise NotGroup()
    n = G.n
    morphs = [(u, s) for u in G.elements for s in G.elements]  # (u, s) : u -> su
    index = {us: i for i, us in enumerate(morphs)}
    pairs = [(u, G.mul(s, u)) for u, s in morphs]
    compose_map = {}
    for i, (u, s) in enumerate(morphs):
        su = G.mul(s, u)
        for t in G.elements:
            j = index[(su, t)]
            compose_map[(i, j)] = index[(u, G.mul(t, s))]
    labels = [f"({G.label(u)},{G.label(s)},{G.label(G.mul(s, u))})" for u, s in morphs]
    C = build_category(n, pairs, compose_map, labels=labels)

    inv = {g: next(h for h in G.elements if G.mul(g, h) == G.identity) for g in G.elements}
    on_objects = [[G.mul(g, u) for u in G.elements] for g in G.elements]
    on_morphisms = [
        [index[(G.mul(g, u), G.prod(g, s, inv[g]))] for u, s in morphs]
        for g in G.elements
    ]
    action, transitive, free = validate_group_action(C, G, on_objects, on_morphisms)
    assert transitive and free
    # every morphism of the derived category of a group is invertible
    for i, (u, s) in enumerate(morphs):
        su = G.mul(s, u)
        j = index[(su, inv[s])]
        assert C.compose[i][j] == C.identities[u]
        assert C.compose[j][i] == C.identities[su]
    return C, action


def adjoin_band_category(G: FiniteSemigroup, k: int = 2):
    """The derived category of G with each local monoid enlarged to a
    k-element band of flags that commute with the translations."""
    if not core.is_group(G):
        raise NotGroup()
    if k < 2:
        raise UnsupportedBand(k)
    n = G.n
    morphs = [(u, s, f) for u in G.elements for s in G.elements for f in range(k)]
    index = {m: i for i, m in enumerate(morphs)}
    pairs = [(u, G.mul(s, u)) for u, s, _ in morphs]
    compose_map = {}
    for i, (u, s, f1) in enumerate(morphs):
        su = G.mul(s, u)
        for t in G.elements:
            for f2 in range(k):
                j = index[(su, t, f2)]
                compose_map[(i, j)] = index[(u, G.mul(t, s), _combine_flags(f1, f2))]

    def mlabel(u, s, f):
        base = f"({G.label(u)},{G.label(s)},{G.label(G.mul(s, u))})"
        if f == 0:
            return base
        e = f"e{f}" if k > 2 else "e"
        return f"{e}_{G.label(u)}+{base}"

    labels = [mlabel(*m) for m in morphs]
    C = build_category(n, pairs, compose_map, labels=labels)

    inv = {g: next(h for h in G.elements if G.mul(g, h) == G.identity) for g in G.elements}
    on_objects = [[G.mul(g, u) for u in G.elements] for g in G.elements]
    on_morphisms = [
        [index[(G.mul(g, u), G.prod(g, s, inv[g]), f)] for u, s, f in morphs]
        for g in G.elements
    ]
    action, transitive, free = validate_group_action(C, G, on_objects, on_morphisms)
    assert transitive and free
    assert all(len(C.hom(u, action.obj(g, u))) == k for u in G.elements for g in G.elements)
    return C, action


def adjoined_band_to_cu_map(G: FiniteSemigroup, k: int = 2, name=""):
    """The displayed correspondence between the direct band extension of G
    and the pair monoid over its enlarged derived category.

    Returns (S, cu, mapping) where mapping[i] is the C_u element id of the
    band-extension element i; it is asserted to be an isomorphism.
    """
    S = _adjoined_band_table(G, k, name=name)
    C, action = adjoin_band_category(G, k)
    u = G.identity
    cu = c_u_monoid(C, action, u)
    pair_index = {pair: i for i, pair in enumerate(cu.pairs)}
    # flag f, group part g  ->  (e_u^f + (u, g, gu), g); the morphism list of
    # adjoin_band_category is (u, s, f) in lexicographic order
    mapping = {}
    n = G.n
    for f in range(k):
        for g in G.elements:
            p = (u * n + g) * k + f
            mapping[f * n + g] = pair_index[(p, g)]
    for a in S.elements:
        for b in S.elements:
            assert mapping[S.mul(a, b)] == cu.semigroup.mul(mapping[a], mapping[b])
    assert sorted(mapping.values()) == list(cu.semigroup.elements)
    return S, cu, mapping


def parse_category(text: str, G: FiniteSemigroup):
    """Parse the category text format used by the CLI.

    Sections: ``objects: <count>``, then ``morphisms:`` with ``id src dst``
    lines, ``compose:`` with ``p q r`` lines (p then q equals r), and
    ``action:`` with ``g obj u v`` / ``g mor p q`` lines.  ``#`` comments.
    """
    from .errors import ParseError

    n_objects = None
    morphisms = []
    compose_map = {}
    obj_action = {}
    mor_action = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("objects:"):
            n_objects = int(line.split(":", 1)[1])
            continue
        if low.startswith("morphisms:"):
            section = "morphisms"
            continue
        if low.startswith("compose:"):
            section = "compose"
            continue
        if low.startswith("action:"):
            section = "action"
            continue
        toks = line.split()
        if section == "morphisms":
            if len(toks) != 3:
                raise ParseError(lineno, "expected 'id src dst'")
            mid, src, dst = map(int, toks)
            if mid != len(morphisms):
                raise ParseError(lineno, "morphism ids must be sequential")
            morphisms.append((src, dst))
        elif section == "compose":
            if len(toks) != 3:
                raise ParseError(lineno, "expected 'p q r'")
            p, q, r = map(int, toks)
            compose_map[(p, q)] = r
        elif section == "action":
            if len(toks) != 4 or toks[1] not in ("obj", "mor"):
                raise ParseError(lineno, "expected 'g obj u v' or 'g mor p q'")
            g, kind, a, b = int(toks[0]), toks[1], int(toks[2]), int(toks[3])
            (obj_action if kind == "obj" else mor_action)[(g, a)] = b
        else:
            raise ParseError(lineno, f"unexpected line {line!r}")
    if n_objects is None:
        raise ParseError(0, "missing objects: section")
    C = build_category(n_objects, morphisms, compose_map)
    on_objects = [
        [obj_action[(g, u)] for u in range(n_objects)] for g in G.elements
    ]
    on_morphisms = [
        [mor_action[(g, p)] for p in range(len(morphisms))] for g in G.elements
    ]
    action, transitive, free = validate_group_action(C, G, on_objects, on_morphisms)
    return C, action, transitive, free
