"""Weights, signed-permutation Weyl groups and weight multiplicities.

Weights are stored as *doubled* integer coordinates so that half-integral
parameters stay exact.  Families: ``"A"`` is gl(n) acting on n coordinates,
``"B"``, ``"C"``, ``"D"`` are so(2n+1), sp(2n), so(2n) in the usual
epsilon-basis of rank n.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True, order=True)
class Weight:
    doubled: tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable) -> Weight:
        out = []
        for v in values:
            f = Fraction(v)
            if (2 * f).denominator != 1:
                raise ValueError(f"weight coordinate {v} is not a half-integer")
            out.append(int(2 * f))
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> Weight:
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls.of(p.strip() for p in text.split(","))

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n)

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled, strict=True)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.doubled))

    def concat(self, other: Weight) -> Weight:
        return Weight(self.doubled + other.doubled)

    def label(self, sep: str = ",") -> str:
        return sep.join(_fmt(c) for c in self.coords)

    def __str__(self) -> str:
        return f"({self.label()})"


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown root system family {family!r}")
    return family


def _dominant_doubled(d: tuple[int, ...], family: str, connected: bool) -> tuple[int, ...]:
    if family == "A":
        return tuple(sorted(d, reverse=True))
    out = sorted((abs(x) for x in d), reverse=True)
    if family == "D" and connected and out and out[-1] != 0:
        if sum(1 for x in d if x < 0) % 2:
            out[-1] = -out[-1]
    return tuple(out)


def dominant(w: Weight, family: str, *, connected: bool = False) -> Weight:
    """Dominant representative of ``w`` under the compact Weyl group.

    Type D uses all sign changes (the O(2n) convention) unless
    ``connected`` asks for the SO(2n) Weyl group.
    """
    return Weight(_dominant_doubled(w.doubled, _check_family(family), connected))


def is_dominant(w: Weight, family: str, *, connected: bool = False) -> bool:
    return dominant(w, family, connected=connected) == w


@dataclass(frozen=True)
class KType:
    """An irreducible of the compact group, labelled by its highest weight.

    For O(m) a highest weight ending in 0 needs a ``det_tag`` of +1 or -1
    telling the two extensions from SO(m) apart.
    """

    highest_weight: Weight
    family: str
    det_tag: int | None = None

    def __post_init__(self):
        _check_family(self.family)
        if not is_dominant(self.highest_weight, self.family, connected=False):
            raise ValueError(f"{self.highest_weight} is not dominant")
        hw = self.highest_weight.doubled
        needs_tag = self.family in ("B", "D") and (not hw or hw[-1] == 0)
        if needs_tag and self.det_tag not in (1, -1):
            raise ValueError("orthogonal K-type with trailing zero needs det_tag +1 or -1")
        if not needs_tag and self.det_tag is not None:
            raise ValueError("det_tag only applies to orthogonal K-types ending in 0")

    def __str__(self) -> str:
        if self.det_tag is None:
            return f"V_{self.highest_weight}"
        return f"V_({self.highest_weight.label()}|{'+' if self.det_tag > 0 else '-'}1)"


# -- signed permutations -------------------------------------------------------


@dataclass(frozen=True)
class SignedPerm:
    """``(w v)_k = signs[k] * v[perm[k]]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def apply(self, v: Sequence):
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def __call__(self, w: Weight) -> Weight:
        return Weight(self.apply(w.doubled))

    @property
    def sign(self) -> int:
        return permutation_sign(self.perm) * math.prod(self.signs)

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(n)), (1,) * n)


def permutation_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@dataclass(frozen=True)
class WeylSubgroupSpec:
    """A product of Weyl groups on consecutive coordinate blocks.

    Blocks use Lie-rank notation: ``("A", r)`` is the symmetric group on
    r + 1 coordinates, ``("C", r)`` all signed permutations of r
    coordinates and ``("D", r)`` those with an even number of sign changes.
    """

    blocks: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for t, r in self.blocks:
            if t not in ("A", "C", "D") or r < 0 or (t != "A" and r == 0):
                raise ValueError(f"bad Weyl block {t}{r}")

    @classmethod
    def parse(cls, data) -> WeylSubgroupSpec:
        """Accept ``[["C",2],["A",1]]`` or the string ``"C2xA1"``."""
        if isinstance(data, str):
            blocks = []
            for tok in data.replace("×", "x").split("x"):
                tok = tok.strip()
                if tok:
                    blocks.append((tok[0].upper(), int(tok[1:])))
            return cls(tuple(blocks))
        return cls(tuple((str(t).upper(), int(r)) for t, r in data))

    @classmethod
    def symmetric(cls, m: int) -> WeylSubgroupSpec:
        return cls((("A", m - 1),)) if m > 0 else cls(())

    @staticmethod
    def block_width(t: str, r: int) -> int:
        return r + 1 if t == "A" else r

    @property
    def width(self) -> int:
        return sum(self.block_width(t, r) for t, r in self.blocks)

    @property
    def order(self) -> int:
        total = 1
        for t, r in self.blocks:
            if t == "A":
                total *= math.factorial(r + 1)
            elif t == "C":
                total *= 2**r * math.factorial(r)
            else:
                total *= 2 ** (r - 1) * math.factorial(r)
        return total

    def __mul__(self, other: WeylSubgroupSpec) -> WeylSubgroupSpec:
        return WeylSubgroupSpec(self.blocks + other.blocks)

    def to_json(self) -> list:
        return [[t, r] for t, r in self.blocks]

    def __str__(self) -> str:
        return "x".join(f"{t}{r}" for t, r in self.blocks) or "1"


@lru_cache(maxsize=None)
def _block_elements(t: str, r: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    w = WeylSubgroupSpec.block_width(t, r)
    out = []
    for p in itertools.permutations(range(w)):
        ps = permutation_sign(p)
        if t == "A":
            out.append((p, (1,) * w, ps))
            continue
        for signs in itertools.product((1, -1), repeat=w):
            neg = signs.count(-1)
            if t == "D" and neg % 2:
                continue
            out.append((p, signs, ps * (-1) ** neg))
    return tuple(out)


def weyl_elements(spec: WeylSubgroupSpec) -> Iterator[tuple[SignedPerm, int]]:
    """Every element of the product group with its determinant."""
    offsets = []
    off = 0
    for t, r in spec.blocks:
        offsets.append(off)
        off += WeylSubgroupSpec.block_width(t, r)
    factors = [_block_elements(t, r) for t, r in spec.blocks]
    for combo in itertools.product(*factors):
        perm: list[int] = []
        signs: list[int] = []
        det = 1
        for base, (p, s, d) in zip(offsets, combo):
            perm.extend(base + i for i in p)
            signs.extend(s)
            det *= d
        yield SignedPerm(tuple(perm), tuple(signs)), det


# -- root data -----------------------------------------------------------------


@lru_cache(maxsize=None)
def positive_roots(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    _check_family(family)
    roots = []

    def vec(pairs):
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(n):
        for j in range(i + 1, n):
            roots.append(vec([(i, 1), (j, -1)]))
            if family != "A":
                roots.append(vec([(i, 1), (j, 1)]))
        if family == "B":
            roots.append(vec([(i, 1)]))
        elif family == "C":
            roots.append(vec([(i, 2)]))
    return tuple(roots)


@lru_cache(maxsize=None)
def rho_doubled(family: str, n: int) -> tuple[int, ...]:
    _check_family(family)
    if family == "A":
        return tuple(n + 1 - 2 * i for i in range(1, n + 1))
    if family == "B":
        return tuple(2 * n - 2 * i + 1 for i in range(1, n + 1))
    if family == "C":
        return tuple(2 * (n - i + 1) for i in range(1, n + 1))
    return tuple(2 * (n - i) for i in range(1, n + 1))


def in_positive_root_cone(family: str, v: Sequence[int]) -> bool:
    """Whether the doubled vector ``v`` is a nonnegative integer sum of positive roots."""
    n = len(v)
    if any(x % 2 for x in v):
        return False
    partial = list(itertools.accumulate(v))
    if family == "A":
        return (not partial or partial[-1] == 0) and all(s >= 0 for s in partial)
    if family == "B":
        return all(s >= 0 for s in partial)
    if family == "C":
        return all(s >= 0 for s in partial) and (not partial or partial[-1] % 4 == 0)
    # D
    if n == 0:
        return True
    if n == 1:
        return v[0] == 0
    if any(s < 0 for s in partial[: n - 2]):
        return False
    c_prev = partial[n - 2] - v[n - 1]
    c_last = partial[n - 1]
    return c_prev >= 0 and c_last >= 0 and c_prev % 4 == 0 and c_last % 4 == 0


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


class _Freudenthal:
    def __init__(self, family: str, mu: tuple[int, ...]):
        self.family = family
        self.mu = mu
        n = len(mu)
        self.roots = tuple(tuple(2 * c for c in r) for r in positive_roots(family, n))
        rho = rho_doubled(family, n)
        self.rho = rho
        self.top = _dot([a + b for a, b in zip(mu, rho)], [a + b for a, b in zip(mu, rho)])
        self.memo: dict[tuple[int, ...], int] = {mu: 1}

    def canon(self, lam: tuple[int, ...]) -> tuple[int, ...]:
        return _dominant_doubled(lam, self.family, connected=True)

    def is_weight(self, dom: tuple[int, ...]) -> bool:
        return in_positive_root_cone(self.family, [a - b for a, b in zip(self.mu, dom)])

    def mult(self, lam: tuple[int, ...]) -> int:
        lam = self.canon(lam)
        if lam in self.memo:
            return self.memo[lam]
        if not self.is_weight(lam):
            self.memo[lam] = 0
            return 0
        # iterative deepening keeps the recursion shallow for large weights
        stack = [lam]
        while stack:
            cur = stack[-1]
            if cur in self.memo:
                stack.pop()
                continue
            pending = []
            total = 0
            for a in self.roots:
                k = 1
                while True:
                    nxt = tuple(x + k * y for x, y in zip(cur, a))
                    dn = self.canon(nxt)
                    if not self.is_weight(dn):
                        break
                    if dn not in self.memo:
                        pending.append(dn)
                    else:
                        total += self.memo[dn] * _dot(nxt, a)
                    k += 1
            if pending:
                stack.extend(pending)
                continue
            lr = [a + b for a, b in zip(cur, self.rho)]
            denom = self.top - _dot(lr, lr)
            num = 2 * total
            if denom <= 0 or num % denom:
                raise ArithmeticError(f"Freudenthal recursion failed at {cur} for {self.mu}")
            self.memo[cur] = num // denom
            stack.pop()
        return self.memo[lam]


@lru_cache(maxsize=4096)
def _engine(family: str, mu: tuple[int, ...]) -> _Freudenthal:
    return _Freudenthal(family, mu)


def weight_multiplicity(family: str, rank: int, mu: Weight, lam: Weight) -> int:
    """Dimension of the ``lam`` weight space of the irreducible with highest weight ``mu``."""
    _check_family(family)
    if mu.rank != rank or lam.rank != rank:
        raise ValueError(f"weights must have rank {rank}")
    if not is_dominant(mu, family, connected=True):
        raise ValueError(f"{mu} is not dominant for type {family}")
    return _engine(family, mu.doubled).mult(lam.doubled)


def irrep_dimension(family: str, rank: int, mu: Weight) -> int:
    _check_family(family)
    if mu.rank != rank:
        raise ValueError(f"highest weight must have rank {rank}")
    n = rank
    rho = rho_doubled(family, n)
    num = Fraction(1)
    for a in positive_roots(family, n):
        num *= Fraction(_dot([x + y for x, y in zip(mu.doubled, rho)], a), _dot(rho, a))
    assert num.denominator == 1
    return int(num)


def orbit_size(family: str, w: Weight) -> int:
    """Number of distinct images of ``w`` under the (connected) Weyl group."""
    d = w.doubled
    n = len(d)
    if family == "A":
        counts = Counter(d)
        return math.factorial(n) // math.prod(math.factorial(c) for c in counts.values())
    absd = [abs(x) for x in d]
    counts = Counter(absd)
    perms = math.factorial(n) // math.prod(math.factorial(c) for c in counts.values())
    nonzero = sum(1 for x in absd if x)
    size = perms * 2**nonzero
    if family == "D" and nonzero == n and n > 0:
        size //= 2
    return size


def dominant_weights_below(family: str, mu: Weight) -> list[Weight]:
    """All dominant weights of the irreducible with highest weight ``mu``."""
    roots = positive_roots(family, mu.rank)
    start = mu.doubled
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for a in roots:
                cand = _dominant_doubled(tuple(x - 2 * y for x, y in zip(v, a)), family, True)
                if cand in seen:
                    continue
                if in_positive_root_cone(family, [p - q for p, q in zip(start, cand)]):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted((Weight(s) for s in seen), reverse=True)


def dominant_weights_bounded(family: str, n: int, max_entry, *, half_integral: bool = False,
                             connected: bool = True) -> Iterator[Weight]:
    """Dominant weights with coordinates of absolute value at most ``max_entry``.

    Type A weights are taken nonnegative.  ``half_integral`` adds the
    spin-type weights for B and D.
    """
    top = int(2 * Fraction(max_entry))
    values = range(0, top + 1, 2)
    pools = [values]
    if half_integral and family in ("B", "D"):
        pools.append(range(1, top + 1, 2))
    for pool in pools:
        for combo in itertools.combinations_with_replacement(sorted(pool, reverse=True), n):
            d = tuple(combo)
            yield Weight(d)
            if family == "D" and connected and n > 0 and d[-1] != 0:
                yield Weight(d[:-1] + (-d[-1],))
