"""Partial actions of E-dense semigroups: validation, the restricted
left-multiplication and idempotent-conjugation actions, orbits,
stabilizers, gradings and act isomorphisms.

An act stores an n x m table of point ids with ``None`` for undefined,
so every domain query is a direct lookup and validation sees the whole
definedness structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import closures, core
from .core import FiniteSemigroup
from .errors import (
    CarrierTooLarge,
    CompositionViolation,
    NotAssociativeAction,
    NotCancellative,
    NotIdempotent,
    NotReflexive,
    ParseError,
    PreconditionFailed,
    WellDefinednessViolation,
)


@dataclass(frozen=True)
class PartialAct:
    """A validated partial act; ``table[s][x]`` is s*x or None."""

    semigroup: FiniteSemigroup
    table: tuple[tuple[int | None, ...], ...]
    point_labels: tuple[str, ...] | None = None

    @property
    def carrier(self) -> int:
        return len(self.table[0]) if self.table else 0

    @property
    def points(self) -> range:
        return range(self.carrier)

    def defined(self, s: int, x: int) -> bool:
        return self.table[s][x] is not None

    def act(self, s: int, x: int) -> int:
        v = self.table[s][x]
        assert v is not None
        return v

    def element_domain(self, s: int) -> frozenset[int]:
        """D_s: the points s acts on."""
        return frozenset(x for x in self.points if self.table[s][x] is not None)

    def point_domain(self, x: int) -> frozenset[int]:
        """D^x: the elements acting on x."""
        return frozenset(s for s in self.semigroup.elements if self.table[s][x] is not None)

    def plabel(self, x: int) -> str:
        return self.point_labels[x] if self.point_labels else str(x)


@dataclass(frozen=True)
class ActProperties:
    effective: bool
    transitive: bool
    indecomposable: bool
    locally_free: bool


@dataclass(frozen=True)
class Grading:
    """Point-to-idempotent map sending x to the minimum idempotent fixing it."""

    p: tuple[int, ...]


@dataclass(frozen=True)
class GradingObstruction:
    reason: str
    witness: int


def validate_act(S: FiniteSemigroup, rows, point_labels=None) -> PartialAct:
    """Check the act axioms exhaustively and return the act.

    The composition law is checked in both directions for all (s, t, x)
    triples: (st)x is defined exactly when s(tx) is, and then they agree.
    The action must be cancellative and reflexive (some weak inverse of s
    acts on every defined sx).
    """
    table = tuple(
        tuple(v if v is None else int(v) for v in row) for row in rows
    )
    assert len(table) == S.n
    m = len(table[0]) if table else 0
    for row in table:
        assert len(row) == m
        for v in row:
            assert v is None or 0 <= v < m
    for s, t in product(S.elements, repeat=2):
        st = S.mul(s, t)
        for x in range(m):
            tx = table[t][x]
            via = None if tx is None else table[s][tx]
            direct = table[st][x]
            if (direct is None) != (via is None):
                raise CompositionViolation(
                    s, t, x, "(one side defined, the other not)"
                )
            if direct is not None and direct != via:
                raise CompositionViolation(s, t, x, f"({direct} != {via})")
    for s in S.elements:
        seen = {}
        for x in range(m):
            v = table[s][x]
            if v is None:
                continue
            if v in seen:
                raise NotCancellative(s, seen[v], x)
            seen[v] = x
    for s in S.elements:
        winv = core.weak_inverses(S, s)
        for x in range(m):
            v = table[s][x]
            if v is None:
                continue
            if not any(table[w][v] is not None for w in winv):
                raise NotReflexive(s, x)
    return PartialAct(S, table, tuple(point_labels) if point_labels else None)


def left_mult_total(S: FiniteSemigroup, carrier=None):
    """Total action of S on itself, or on a left ideal, by multiplication.

    Returns (rows, labels); ``carrier`` must be closed under left
    multiplication.
    """
    ids = sorted(carrier) if carrier is not None else list(S.elements)
    pos = {e: i for i, e in enumerate(ids)}
    for s in S.elements:
        for e in ids:
            if S.mul(s, e) not in pos:
                raise PreconditionFailed(
                    "left_ideal", f"{s}*{e} escapes the carrier"
                )
    rows = [[pos[S.mul(s, e)] for e in ids] for s in S.elements]
    return rows, [S.label(e) for e in ids]


def validate_total_action(S: FiniteSemigroup, rows) -> None:
    m = len(rows[0])
    for s, t in product(S.elements, repeat=2):
        st = S.mul(s, t)
        for x in range(m):
            if rows[st][x] != rows[s][rows[t][x]]:
                raise NotAssociativeAction(s, t, x)


def wagner_preston(S: FiniteSemigroup, total_rows=None, point_labels=None) -> PartialAct:
    """Restrict a total action to the domains where some weak inverse
    undoes the element: D_s = {x : x = s'sx for some s' in W(s)}.

    Defaults to S acting on itself by multiplication.  Needs a
    semilattice of idempotents.
    """
    closures.require_semilattice(S)
    if total_rows is None:
        total_rows, point_labels = left_mult_total(S)
    validate_total_action(S, total_rows)
    m = len(total_rows[0])
    table = []
    for s in S.elements:
        winv = core.weak_inverses(S, s)
        row = []
        for x in range(m):
            if any(total_rows[S.mul(w, s)][x] == x for w in winv):
                row.append(total_rows[s][x])
            else:
                row.append(None)
        table.append(row)
    return validate_act(S, table, point_labels)


def order_ideal(S: FiniteSemigroup, e: int) -> frozenset[int]:
    """[e] = eE, the idempotents below e; asserted equal to W(e) and to
    the set of elements under e in the idempotent-witnessed order."""
    closures.require_semilattice(S)
    if S.mul(e, e) != e:
        raise NotIdempotent(e)
    E = core.idempotents(S)
    ideal = frozenset(S.mul(e, f) for f in E)
    assert ideal == core.weak_inverses(S, e)
    assert ideal == frozenset(s for s in S.elements if core.h_leq(S, s, e))
    return ideal


def munn_act(S: FiniteSemigroup) -> PartialAct:
    """Action of S on its semilattice of idempotents by conjugation:
    s acts on the order ideal of s's and sends x to s x s'."""
    closures.require_semilattice(S)
    E = sorted(core.idempotents(S))
    pos = {e: i for i, e in enumerate(E)}
    table = []
    for s in S.elements:
        winv = core.weak_inverses(S, s)
        row = [None] * len(E)
        for x in E:
            values = {
                S.prod(s, x, w)
                for w in winv
                if x in order_ideal(S, S.mul(w, s))
            }
            if not values:
                continue
            if len(values) > 1:
                raise WellDefinednessViolation((s, x, sorted(values)))
            value = values.pop()
            assert value in pos
            row[pos[x]] = pos[value]
        table.append(row)
    return validate_act(S, table, [S.label(e) for e in E])


def orbit(act: PartialAct, x: int) -> frozenset[int]:
    """Sx = {sx : s acts on x} together with x itself."""
    return frozenset(
        act.act(s, x) for s in act.point_domain(x)
    ) | {x}


def stabilizer(act: PartialAct, x: int) -> frozenset[int]:
    return frozenset(
        s for s in act.semigroup.elements if act.defined(s, x) and act.act(s, x) == x
    )


def orbits(act: PartialAct) -> list[frozenset[int]]:
    seen = {}
    for x in act.points:
        seen.setdefault(orbit(act, x), []).append(x)
    return sorted(seen.keys(), key=min)


def act_properties(act: PartialAct) -> ActProperties:
    S = act.semigroup
    E = core.idempotents(S)
    effective = all(act.point_domain(x) for x in act.points)
    transitive = all(
        any(act.defined(s, x) and act.act(s, x) == y for s in S.elements)
        for x in act.points
        for y in act.points
    )
    indecomposable = len(orbits(act)) == 1
    locally_free = all(
        stabilizer(act, x) == closures.omega_h(S, E & act.point_domain(x))
        for x in act.points
    )
    return ActProperties(effective, transitive, indecomposable, locally_free)


def grading(act: PartialAct):
    """The grading of the act, or the obstruction to one.

    The grading sends x to the minimum idempotent in its stabilizer; it
    exists exactly when the act is effective and each stabilizer has a
    minimum idempotent, and then the domain of every idempotent e is the
    preimage of the order ideal of e.
    """
    S = act.semigroup
    closures.require_semilattice(S)
    E = core.idempotents(S)
    p = []
    for x in act.points:
        if not act.point_domain(x):
            return GradingObstruction("non-effective point", x)
        fixing = stabilizer(act, x) & E
        minima = [e for e in fixing if all(core.h_leq(S, e, f) for f in fixing)]
        if not minima:
            return GradingObstruction("stabilizer without minimum idempotent", x)
        assert len(minima) == 1
        p.append(minima[0])
    for e in E:
        ideal = order_ideal(S, e)
        assert act.element_domain(e) == frozenset(
            x for x in act.points if p[x] in ideal
        ), f"grading does not match the domain of idempotent {e}"
    return Grading(tuple(p))


def subact(act: PartialAct, points) -> PartialAct:
    """Restriction to a subset closed under the action."""
    pts = sorted(points)
    pos = {x: i for i, x in enumerate(pts)}
    for s in act.semigroup.elements:
        for x in pts:
            if act.defined(s, x):
                assert act.act(s, x) in pos, f"{s}*{x} leaves the subset"
    table = [
        [pos[act.act(s, x)] if act.defined(s, x) else None for x in pts]
        for s in act.semigroup.elements
    ]
    labels = [act.plabel(x) for x in pts]
    return PartialAct(act.semigroup, tuple(tuple(r) for r in table), tuple(labels))


def disjoint_union(*acts: PartialAct) -> PartialAct:
    S = acts[0].semigroup
    assert all(a.semigroup.table == S.table for a in acts)
    table = [[] for _ in S.elements]
    labels = []
    for k, a in enumerate(acts):
        offset = len(labels)
        for s in S.elements:
            table[s].extend(
                None if a.table[s][x] is None else a.table[s][x] + offset
                for x in a.points
            )
        labels.extend(f"{k}:{a.plabel(x)}" for x in a.points)
    return PartialAct(S, tuple(tuple(r) for r in table), tuple(labels))


def is_s_map(src: PartialAct, dst: PartialAct, mapping) -> bool:
    """Whether mapping satisfies: x in D_s iff f(x) in D_s, and f(sx) = s f(x)."""
    S = src.semigroup
    for s in S.elements:
        for x in src.points:
            if src.defined(s, x) != dst.defined(s, mapping[x]):
                return False
            if src.defined(s, x) and mapping[src.act(s, x)] != dst.act(s, mapping[x]):
                return False
    return True


def _point_signature(act: PartialAct, x: int):
    return (
        tuple(act.defined(s, x) for s in act.semigroup.elements),
        stabilizer(act, x),
        len(orbit(act, x)),
    )


def find_act_isomorphism(act1: PartialAct, act2: PartialAct, max_points: int = 12):
    """A bijection satisfying the act-map law both ways, or None.

    Plain backtracking pruned by per-point definedness and stabilizer
    signatures; carriers beyond ``max_points`` are refused.
    """
    assert act1.semigroup.table == act2.semigroup.table, "acts over different semigroups"
    if act1.carrier != act2.carrier:
        return None
    if act1.carrier > max_points:
        raise CarrierTooLarge(act1.carrier, max_points)
    sig1 = [_point_signature(act1, x) for x in act1.points]
    sig2 = [_point_signature(act2, x) for x in act2.points]
    if sorted(sig1) != sorted(sig2):
        return None
    m = act1.carrier
    image = [-1] * m
    used = [False] * m
    S = act1.semigroup

    def consistent(x, y):
        for s in S.elements:
            if act1.defined(s, x):
                sx, sy = act1.act(s, x), act2.act(s, y)
                if image[sx] >= 0 and image[sx] != sy:
                    return False
                if sx == x and sy != y:
                    return False
        return True

    def search(x):
        if x == m:
            return is_s_map(act1, act2, image)
        for y in range(m):
            if used[y] or sig2[y] != sig1[x] or not consistent(x, y):
                continue
            image[x] = y
            used[y] = True
            if search(x + 1):
                return True
            image[x] = -1
            used[y] = False
        return False

    if search(0):
        return {x: image[x] for x in act1.points}
    return None


def parse_act(text: str, S: FiniteSemigroup) -> PartialAct:
    """Partial-act text format: first line ``n m``, then n rows of m
    entries, each a point id or ``-`` for undefined."""
    lines = [
        ln.split("#", 1)[0].strip()
        for ln in text.splitlines()
    ]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError(0, "empty act file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(1, "expected 'n m' header")
    n, m = int(head[0]), int(head[1])
    if n != S.n:
        raise ParseError(1, f"act has {n} rows but semigroup has order {S.n}")
    if len(lines) != n + 1:
        raise ParseError(len(lines), f"expected {n} rows, got {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:], start=2):
        toks = ln.split()
        if len(toks) != m:
            raise ParseError(i, f"expected {m} entries, got {len(toks)}")
        rows.append([None if t == "-" else int(t) for t in toks])
    return validate_act(S, rows)


def format_act(act: PartialAct) -> str:
    lines = [f"{act.semigroup.n} {act.carrier}"]
    for row in act.table:
        lines.append(" ".join("-" if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"
