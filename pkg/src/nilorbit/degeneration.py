"""Fundamental degenerations and the set Norm(O) they generate."""

from __future__ import annotations

import functools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import NotDegenerable
from .orbits import Orbit


@functools.total_ordering
class _Unbounded:
    """Column size larger than every integer (the c_0 of an orthogonal orbit)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("unbounded-column")

    def __repr__(self):
        return "UNBOUNDED"

    def __str__(self):
        return "inf"


UNBOUNDED = _Unbounded()
ColumnSize = Union[int, _Unbounded]


@dataclass(frozen=True)
class Quad:
    b0: ColumnSize
    b1: int
    b2: int
    b3: int

    def __post_init__(self):
        b0, b1, b2, b3 = self.b0, self.b1, self.b2, self.b3
        if b1 != b2:
            raise NotDegenerable(f"middle entries differ: {b1} != {b2}")
        if not (b0 >= b1 and b2 >= b3 >= 0):
            raise NotDegenerable(f"({b0},{b1},{b2},{b3}) is not weakly decreasing")
        if b1 <= 0:
            raise NotDegenerable("middle entries must be positive")
        finite = [b for b in (b0, b1, b2, b3) if b is not UNBOUNDED]
        if len({b % 2 for b in finite}) > 1:
            raise NotDegenerable(f"mixed parity in ({b0},{b1},{b2},{b3})")


def fundamental_degeneration(q: Quad) -> tuple[ColumnSize, ...]:
    b0, b1, b2, b3 = q.b0, q.b1, q.b2, q.b3
    top_equal = b0 == b1
    bottom_equal = b2 == b3
    if not top_equal and not bottom_equal:
        out = (b0, b1 + 2, b2 - 2, b3)
    elif top_equal and not bottom_equal:
        out = (b0 + 1, b1 + 1, b2 - 2, b3)
    elif not top_equal:
        out = (b0, b1 + 2, b2 - 1, b3 - 1)
    else:
        out = (b0 + 1, b1 + 1, b2 - 1, b3 - 1)
    if not bottom_equal and out[2] == 0 and out[3] == 0:
        out = out[:2]
    return out


@dataclass(frozen=True)
class Site:
    """A run c_{2i+1} = ... = c_{2j} acted on through the columns c_{2i}, c_{2j+1}."""

    i: int
    j: int

    def describe(self) -> str:
        return f"c{2 * self.i + 1}..c{2 * self.j}"


def _cols_with_sentinel(o: Orbit) -> dict[int, ColumnSize]:
    cols: dict[int, ColumnSize] = dict(o.indexed())
    if o.group.is_orthogonal:
        cols[0] = UNBOUNDED
    return cols


def degeneration_sites(o: Orbit) -> list[Site]:
    """Maximal equal runs that start at an odd index and end at an even one."""
    cols = _cols_with_sentinel(o)
    last = o.last_index
    sites = []
    k = o.first_index
    while k <= last:
        v = cols[k]
        e = k
        while e + 1 <= last and cols[e + 1] == v:
            e += 1
        if v is not UNBOUNDED and v > 0:
            start = k if k % 2 else k + 1
            end = e if e % 2 == 0 else e - 1
            if start < end:
                sites.append(Site((start - 1) // 2, end // 2))
        k = e + 1
    return sites


def degenerate_at(o: Orbit, site: Site) -> Orbit:
    cols = _cols_with_sentinel(o)
    lo, hi = 2 * site.i, 2 * site.j + 1
    q = Quad(cols[lo], cols[lo + 1], cols[hi - 1], cols.get(hi, 0))
    out = fundamental_degeneration(q)
    new = dict(cols)
    new[lo], new[lo + 1] = out[0], out[1]
    if len(out) == 4:
        new[hi - 1], new[hi] = out[2], out[3]
    else:
        del new[hi - 1]
        new.pop(hi, None)
    seq = [new[k] for k in sorted(new) if new[k] is not UNBOUNDED]
    assert all(a >= b for a, b in zip(seq, seq[1:])), (o, site, seq)
    return o.with_columns(seq)


@dataclass
class NormSet:
    source: Orbit
    members: list[Orbit] = field(default_factory=list)
    edges: list[tuple[Orbit, Orbit, Site]] = field(default_factory=list)

    def __contains__(self, o: Orbit) -> bool:
        return o in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def leaves(self) -> list[Orbit]:
        parents = {p for p, _, _ in self.edges}
        return [m for m in self.members if m not in parents]

    def to_dot(self) -> str:
        lines = ["digraph Norm {"]
        for m in self.members:
            lines.append(f'  "{m.label()}";')
        for p, c, s in self.edges:
            lines.append(f'  "{p.label()}" -> "{c.label()}" [label="{s.describe()}"];')
        lines.append("}")
        return "\n".join(lines)


def norm_set(o: Orbit, *, rng: random.Random | None = None) -> NormSet:
    """Breadth-first closure of ``{o}`` under fundamental degenerations.

    Members are listed in discovery order.  Passing ``rng`` shuffles the
    order in which sites are visited, which must not change the member set.
    """
    result = NormSet(o, [o])
    seen = {o}
    queue = deque([o])
    while queue:
        cur = queue.popleft()
        sites = degeneration_sites(cur)
        if rng is not None:
            rng.shuffle(sites)
        for s in sites:
            child = degenerate_at(cur, s)
            result.edges.append((cur, child, s))
            if child not in seen:
                seen.add(child)
                result.members.append(child)
                queue.append(child)
    return result


def members_as_columns(ns: NormSet) -> set[tuple[int, ...]]:
    return {m.columns for m in ns.members}


def count_odd_even_pairs(o: Orbit) -> int:
    """Number of odd k with c_k = c_{k+1} > 0; zero exactly on leaves."""
    return sum(
        1
        for k in range(o.first_index, o.last_index)
        if k % 2 and o.c(k) == o.c(k + 1) and o.c(k) > 0
    )


def parse_quad(values: Iterable) -> Quad:
    vals = list(values)
    if len(vals) != 4:
        raise NotDegenerable("a fundamental degeneration acts on four columns")
    b0 = UNBOUNDED if str(vals[0]).lower() in ("inf", "infinity", "unbounded", "none") else int(vals[0])
    return Quad(b0, *(int(v) for v in vals[1:]))
