"""Classical nilpotent orbits encoded by the column sizes of their partitions.

Symplectic orbits are indexed ``c_0 >= c_1 >= ... >= c_{2p+1}`` and
orthogonal orbits ``c_1 >= ... >= c_{2p+1}``.  Internally the columns are a
plain tuple; :meth:`Orbit.c` translates the group's own indexing.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import NotDecreasing, ParityPairViolation, SizeMismatch


class Family(enum.Enum):
    SP = "Sp"
    O_EVEN = "Oeven"
    O_ODD = "Oodd"

    @property
    def orthogonal(self) -> bool:
        return self is not Family.SP

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower()
        aliases = {
            "sp": cls.SP,
            "c": cls.SP,
            "oeven": cls.O_EVEN,
            "d": cls.O_EVEN,
            "oodd": cls.O_ODD,
            "b": cls.O_ODD,
        }
        if key not in aliases:
            raise ValueError(f"unknown group family {name!r} (expected Sp, Oeven or Oodd)")
        return aliases[key]


@dataclass(frozen=True)
class GroupType:
    """``Sp(dim)`` or ``O(dim)``; ``dim`` is 2n for Sp and 2n+delta for O."""

    family: Family
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("group dimension must be nonnegative")
        if self.family is Family.SP and self.dim % 2:
            raise SizeMismatch(f"Sp({self.dim}) needs an even dimension")
        if self.family is Family.O_EVEN and self.dim % 2:
            raise SizeMismatch(f"even orthogonal group cannot have dimension {self.dim}")
        if self.family is Family.O_ODD and self.dim % 2 == 0:
            raise SizeMismatch(f"odd orthogonal group cannot have dimension {self.dim}")

    @classmethod
    def symplectic(cls, dim: int) -> GroupType:
        return cls(Family.SP, dim)

    @classmethod
    def orthogonal(cls, dim: int) -> GroupType:
        return cls(Family.O_ODD if dim % 2 else Family.O_EVEN, dim)

    @property
    def is_orthogonal(self) -> bool:
        return self.family.orthogonal

    @property
    def delta(self) -> int:
        return self.dim % 2 if self.is_orthogonal else 0

    @property
    def rank(self) -> int:
        return self.dim // 2

    def __str__(self) -> str:
        return f"{'Sp' if self.family is Family.SP else 'O'}({self.dim})"


def canonical_columns(columns: Iterable[int], family: Family) -> tuple[int, ...]:
    """Strip trailing zeros, then pad to even length (Sp) or odd length (O)."""
    cols = list(columns)
    while cols and cols[-1] == 0:
        cols.pop()
    want_odd = family.orthogonal
    if (len(cols) % 2 == 1) != want_odd:
        cols.append(0)
    return tuple(cols)


@dataclass(frozen=True)
class Orbit:
    group: GroupType
    columns: tuple[int, ...]

    @property
    def family(self) -> Family:
        return self.group.family

    @property
    def first_index(self) -> int:
        return 1 if self.group.is_orthogonal else 0

    @property
    def last_index(self) -> int:
        return self.first_index + len(self.columns) - 1

    def c(self, i: int) -> int:
        """Column ``c_i`` in the group's own indexing; zero beyond the end."""
        k = i - self.first_index
        if k < 0:
            raise IndexError(f"no column c_{i} for {self.group}")
        return self.columns[k] if k < len(self.columns) else 0

    def indexed(self) -> Iterator[tuple[int, int]]:
        return ((i + self.first_index, v) for i, v in enumerate(self.columns))

    def with_columns(self, columns: Iterable[int]) -> Orbit:
        """A new orbit of the same family with the group resized to fit."""
        cols = canonical_columns(columns, self.family)
        total = sum(cols)
        group = GroupType(self.family, total)
        return parse_orbit(group, cols)

    def label(self) -> str:
        return ",".join(str(c) for c in self.columns)

    def to_json(self) -> dict:
        return {"group": self.family.value, "columns": list(self.columns)}

    def __str__(self) -> str:
        return f"({self.label()})"


def _check_columns(family: Family, cols: Sequence[int]) -> None:
    start = 1 if family.orthogonal else 0
    for k, v in enumerate(cols):
        if v < 0:
            raise NotDecreasing(f"negative column c_{k + start} = {v}", k + start)
        if k and v > cols[k - 1]:
            raise NotDecreasing(
                f"columns must weakly decrease: c_{k + start} = {v} > c_{k + start - 1} = {cols[k - 1]}",
                k + start,
            )
    # (c_{2i}, c_{2i+1}) share parity: rows of odd length (Sp) or of even
    # length (O) occur with even multiplicity.
    first_pair = 0 if family is Family.SP else 2
    for i in range(first_pair, start + len(cols), 2):
        a = cols[i - start] if 0 <= i - start < len(cols) else 0
        b = cols[i + 1 - start] if i + 1 - start < len(cols) else 0
        if (a + b) % 2:
            raise ParityPairViolation(
                f"c_{i} + c_{i + 1} = {a} + {b} is odd", i
            )


def parse_orbit(group: GroupType | Family | str, columns: Iterable[int]) -> Orbit:
    """Validate columns and build the canonical zero-padded orbit.

    ``group`` may be a full :class:`GroupType` (the column sum is then
    checked against its dimension) or just a family, in which case the
    dimension is read off the column sum.
    """
    cols = [int(c) for c in columns]
    if isinstance(group, str):
        if group.strip().lower() == "o":
            group = Family.O_ODD if sum(cols) % 2 else Family.O_EVEN
        else:
            group = Family.parse(group)
    family = group.family if isinstance(group, GroupType) else group
    _check_columns(family, cols)
    cols = list(canonical_columns(cols, family))
    total = sum(cols)
    if isinstance(group, GroupType):
        if total != group.dim:
            raise SizeMismatch(
                f"columns sum to {total} but {group} needs {group.dim}",
                (1 if family.orthogonal else 0) + len(cols) - 1,
            )
        return Orbit(group, tuple(cols))
    try:
        gt = GroupType(family, total)
    except SizeMismatch as exc:
        raise SizeMismatch(str(exc), (1 if family.orthogonal else 0) + len(cols) - 1) from None
    return Orbit(gt, tuple(cols))


def orbit_from_json(data: dict | str) -> Orbit:
    if isinstance(data, str):
        data = json.loads(data)
    return parse_orbit(data["group"], data["columns"])


def transpose(parts: Iterable[int]) -> list[int]:
    ps = sorted((p for p in parts if p > 0), reverse=True)
    if not ps:
        return []
    return [sum(1 for p in ps if p > j) for j in range(ps[0])]


def from_rows(group: GroupType | Family | str, rows: Iterable[int]) -> Orbit:
    """Build an orbit from its row partition (the usual Jordan type)."""
    return parse_orbit(group, transpose(rows))


def to_rows(o: Orbit) -> list[int]:
    return transpose(o.columns)


def column_multiplicity(o: Orbit, size: int) -> int:
    return sum(1 for c in o.columns if c == size)


def tau(o: Orbit) -> tuple[int, ...]:
    """Indices i >= 1 with c_{2i-1} = c_{2i}."""
    out = []
    i = 1
    while 2 * i <= o.last_index:
        if o.c(2 * i - 1) == o.c(2 * i):
            out.append(i)
        i += 1
    return tuple(out)


def remove_pairs(o: Orbit, indices: Iterable[int]) -> Orbit:
    """Delete the columns c_{2i-1}, c_{2i} for every given i."""
    drop = set()
    for i in indices:
        drop.update((2 * i - 1, 2 * i))
    kept = [v for k, v in o.indexed() if k not in drop]
    return o.with_columns(kept)


def reduced(o: Orbit) -> Orbit:
    """The orbit O' obtained by deleting one equal pair for each i in tau(O)."""
    return remove_pairs(o, tau(o))


def is_generic(o: Orbit) -> bool:
    return all(n <= 2 for v, n in Counter(o.columns).items() if v > 0)


@dataclass(frozen=True)
class GenericDecomposition:
    removed_pairs: tuple[int, ...]
    generic_orbit: Orbit


def generic_part(o: Orbit) -> GenericDecomposition:
    counts = Counter(c for c in o.columns if c > 0)
    keep: dict[int, int] = {}
    removed: list[int] = []
    for size, n in counts.items():
        k = n if n <= 2 else (1 if n % 2 else 2)
        keep[size] = k
        removed.extend([size] * ((n - k) // 2))
    cols = []
    for size in sorted(keep, reverse=True):
        cols.extend([size] * keep[size])
    return GenericDecomposition(tuple(sorted(removed, reverse=True)), o.with_columns(cols))


class Parity(enum.Enum):
    EVEN = "Even"
    ODD = "Odd"
    MIXED = "Mixed"


def parity(o: Orbit) -> Parity:
    # the canonical padding zero is not a column of the partition
    vals = [c for c in o.columns if c > 0] or [0]
    if all(c % 2 == 0 for c in vals):
        return Parity.EVEN
    if all(c % 2 for c in vals):
        return Parity.ODD
    return Parity.MIXED


def is_even(o: Orbit) -> bool:
    return parity(o) is Parity.EVEN


def enumerate_orbits(family: Family, max_sum: int, *, even_only: bool = False,
                     min_sum: int = 1) -> Iterator[Orbit]:
    """All canonical orbits of ``family`` with column sum in [min_sum, max_sum]."""

    def parts(remaining: int, cap: int) -> Iterator[list[int]]:
        yield []
        step = 2 if even_only else 1
        top = min(cap, remaining)
        if even_only:
            top -= top % 2
        for v in range(top, 0, -step):
            for rest in parts(remaining - v, v):
                yield [v] + rest

    seen = set()
    for cols in parts(max_sum, max_sum):
        total = sum(cols)
        if total < min_sum:
            continue
        if family is Family.O_EVEN and total % 2:
            continue
        if family is Family.O_ODD and total % 2 == 0:
            continue
        if family is Family.SP and total % 2:
            continue
        try:
            o = parse_orbit(family, cols)
        except (ParityPairViolation, SizeMismatch):
            continue
        if o.columns not in seen:
            seen.add(o.columns)
            yield o
