"""Candidate composition-factor parameters M(P, eps) and their normal forms.

A normal form records, at the level of the compact group, the inducing
data of a module: ``TRIV(m)`` and ``DET(m)`` are the trivial and
determinant characters of a ``U(m)`` factor, and ``TAIL_O(d, sign)`` is the
trivial (+) or sign (-) representation of an ``O(d)`` factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .degeneration import UNBOUNDED
from .errors import IncompatibleSign
from .orbits import GroupType, Orbit, reduced, remove_pairs, tau

PLUS, MINUS = "+", "-"


def tau0(p: Orbit) -> tuple[int, ...]:
    """Indices i with d_{2i-1} = d_{2i} even."""
    return tuple(i for i in tau(p) if p.c(2 * i) % 2 == 0)


def p_star(p: Orbit) -> Orbit:
    return remove_pairs(p, tau0(p))


@dataclass(frozen=True)
class ParamGroupSpec:
    exponents: tuple[int, ...]

    @property
    def order(self) -> int:
        return 2 ** sum(self.exponents)


def _star_pairs(ps: Orbit) -> list[tuple[object, int]]:
    """(d*_{2i}, d*_{2i+1}) for i = 0..t, with d*_0 unbounded for O."""
    out = []
    i = 0
    while 2 * i + 1 <= ps.last_index:
        top = UNBOUNDED if (i == 0 and ps.group.is_orthogonal) else ps.c(2 * i)
        out.append((top, ps.c(2 * i + 1)))
        i += 1
    return out


def param_group(p: Orbit) -> ParamGroupSpec:
    ps = p_star(p)
    return ParamGroupSpec(
        tuple(1 if (b > 0 and b % 2 == 0) else 0 for _, b in _star_pairs(ps))
    )


@dataclass(frozen=True)
class SignVector:
    signs: tuple[str, ...]

    def __post_init__(self):
        if any(s not in (PLUS, MINUS) for s in self.signs):
            raise ValueError(f"signs must be '+' or '-': {self.signs}")

    @classmethod
    def parse(cls, text: str) -> SignVector:
        return cls(tuple(text.replace("−", MINUS).replace(",", "").strip()))

    def compatible(self, spec: ParamGroupSpec) -> bool:
        return len(self.signs) == len(spec.exponents) and all(
            s == PLUS or a == 1 for s, a in zip(self.signs, spec.exponents)
        )

    def __str__(self) -> str:
        return "".join(self.signs)


def characters(spec: ParamGroupSpec) -> list[SignVector]:
    choices = [(PLUS, MINUS) if a else (PLUS,) for a in spec.exponents]
    return [SignVector(tuple(v)) for v in itertools.product(*choices)]


def distinguished_epsilon(p: Orbit) -> SignVector:
    ps = p_star(p)
    marks = [p.c(2 * j) for j in tau0(p)]
    signs = []
    for top, bottom in _star_pairs(ps):
        if bottom > 0 and bottom % 2 == 0:
            n = sum(1 for d in marks if top >= d >= bottom)
            signs.append(MINUS if n % 2 else PLUS)
        else:
            signs.append(PLUS)
    return SignVector(tuple(signs))


@dataclass(frozen=True)
class GLString:
    """The parameter lambda[x, y]^sign on a GL((x+y)/2) factor."""

    x: int
    y: int
    sign: str = PLUS

    def __post_init__(self):
        if self.x < -1 or self.y < -1:
            raise ValueError("string endpoints must be >= -1")
        if (self.x - self.y) % 2:
            raise ValueError(f"lambda[{self.x},{self.y}] needs x, y of equal parity")
        if self.sign == MINUS and self.x < self.y:
            raise ValueError(f"lambda[{self.x},{self.y}]^- needs x >= y")

    @property
    def size(self) -> int:
        return (self.x + self.y) // 2

    def parameter(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Ascending (lambda_L, lambda_R) coordinates."""
        x, y = self.x, self.y
        if x == y and x % 2 and self.sign == PLUS:
            s = _string(Fraction(-(x - 1), 2), Fraction(x - 1, 2))
            return s, s
        if self.sign == PLUS:
            s = _string(Fraction(-y, 2) + 1, Fraction(x, 2))
            return s, s
        tail = _string(Fraction(y, 2) + 1, Fraction(x, 2))
        left = _string(Fraction(-y, 2) + 1, Fraction(y, 2)) + tail
        right = _string(Fraction(-y, 2), Fraction(y, 2) - 1) + tail
        return left, right

    def __str__(self) -> str:
        return f"lambda[{self.x},{self.y}]^{self.sign}"


def _string(a: Fraction, b: Fraction) -> tuple[Fraction, ...]:
    out = []
    v = a
    while v <= b:
        out.append(v)
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class ModuleParam:
    source: Orbit
    tau0: tuple[int, ...]
    p_star: Orbit
    epsilon: SignVector
    minus_strings: tuple[GLString, ...]
    unipotent_strings: tuple[GLString, ...]
    tail: tuple[int, str] | None = None

    def label(self) -> str:
        return f"M({self.source.label()};{self.epsilon})"

    def to_json(self) -> dict:
        return {
            "P": list(self.source.columns),
            "tau0": list(self.tau0),
            "Pstar": list(self.p_star.columns),
            "epsilon": str(self.epsilon),
            "minus_strings": [[s.x, s.y] for s in self.minus_strings],
        }


def module_param(p: Orbit, eps: SignVector | str) -> ModuleParam:
    if isinstance(eps, str):
        eps = SignVector.parse(eps)
    spec = param_group(p)
    if not eps.compatible(spec):
        raise IncompatibleSign(
            f"{eps} is not a character of A(P) with exponents {spec.exponents} for P = {p}"
        )
    t0 = tau0(p)
    ps = p_star(p)
    minus = tuple(GLString(p.c(2 * i), p.c(2 * i - 1), MINUS) for i in t0)
    strings, tail = unipotent_strings(ps, eps)
    return ModuleParam(p, t0, ps, eps, minus, strings, tail)


def unipotent_strings(ps: Orbit, eps: SignVector) -> tuple[tuple[GLString, ...], tuple[int, str] | None]:
    """GL strings (and the O tail) attached to U(ps; eps), one per star pair."""
    strings = []
    tail = None
    for (top, bottom), s in zip(_star_pairs(ps), eps.signs):
        if top is UNBOUNDED:
            tail = (bottom, s)
        else:
            strings.append(GLString(top, bottom, s))
    return tuple(strings), tail


def unipotent_normal_form(ps: Orbit, eps: SignVector | str) -> NormalForm:
    if isinstance(eps, str):
        eps = SignVector.parse(eps)
    strings, tail = unipotent_strings(ps, eps)
    return assemble_normal_form(strings, ps.group, tail)


@dataclass(frozen=True)
class Block:
    kind: str  # "TRIV" or "DET"
    size: int

    def __str__(self) -> str:
        return f"{self.kind}({self.size})"


def TRIV(m: int) -> Block:
    return Block("TRIV", m)


def DET(m: int) -> Block:
    return Block("DET", m)


@dataclass(frozen=True)
class NormalForm:
    blocks: tuple[Block, ...]
    ambient: GroupType
    tail: tuple[int, str] | None = None

    def __post_init__(self):
        total = 2 * sum(b.size for b in self.blocks) + (self.tail[0] if self.tail else 0)
        if total != self.ambient.dim:
            raise ValueError(f"normal form has size {total}, ambient {self.ambient} needs {self.ambient.dim}")
        if self.tail is not None and not self.ambient.is_orthogonal:
            raise ValueError("only orthogonal groups carry an O(d) tail")

    def __str__(self) -> str:
        parts = [str(b) for b in self.blocks]
        if self.tail is not None:
            parts.append(f"TAIL_O({self.tail[0]},{self.tail[1]})")
        return f"[{', '.join(parts)}] in {self.ambient}"


def string_blocks(s: GLString) -> list[Block]:
    """Compact restriction of one GL factor."""
    if s.sign == MINUS:
        out = [DET(s.y), TRIV((s.x - s.y) // 2)]
    else:
        out = [TRIV(s.size)]
    return [b for b in out if b.size > 0]


def assemble_normal_form(strings: Iterable[GLString], ambient: GroupType,
                         tail: tuple[int, str] | None = None) -> NormalForm:
    blocks: list[Block] = []
    for s in strings:
        blocks.extend(string_blocks(s))
    if ambient.is_orthogonal and tail is None:
        tail = (0, PLUS)
    return NormalForm(tuple(blocks), ambient, tail)


def normal_form(m: ModuleParam) -> NormalForm:
    return assemble_normal_form(
        m.minus_strings + m.unipotent_strings, m.source.group, m.tail
    )


def _spherical_strings(o: Orbit) -> tuple[list[GLString], tuple[int, str] | None]:
    strings = []
    tail = None
    i = 0
    while 2 * i + 1 <= o.last_index:
        if i == 0 and o.group.is_orthogonal:
            tail = (o.c(1), PLUS)
        else:
            strings.append(GLString(o.c(2 * i), o.c(2 * i + 1), PLUS))
        i += 1
    return strings, tail


def gamma_normal_form(o: Orbit) -> NormalForm:
    strings, tail = _spherical_strings(o)
    return assemble_normal_form(strings, o.group, tail)


def b_orbit_normal_form(o: Orbit) -> NormalForm:
    """|det| on GL(c_{2i}) for i in tau(O), then the all-plus form of O'."""
    head = [TRIV(o.c(2 * i)) for i in tau(o)]
    strings, tail = _spherical_strings(reduced(o))
    rest = assemble_normal_form(strings, reduced(o).group, tail)
    return NormalForm(tuple(head) + rest.blocks, o.group, rest.tail)


def distinguished_param(p: Orbit) -> ModuleParam:
    return module_param(p, distinguished_epsilon(p))


def all_params(p: Orbit) -> list[ModuleParam]:
    return [module_param(p, e) for e in characters(param_group(p))]

