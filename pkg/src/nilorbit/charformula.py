"""Alternating-sum character formulas and their restriction to the compact group.

A summand ``c * sum_{w in W'} sgn(w) X(L; w R)`` restricts to the compact
group as ``c * sum_w sgn(w) Ind_T^K(L - wR)``; torus-induced characters are
collected at the dominant representative of their weight.  The full K-type
spectrum is then read off with weight multiplicities.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .degeneration import norm_set
from .errors import (
    MissingFixture,
    NonIntegralResult,
    NotEvenGeneric,
    RankMismatch,
    UnsupportedFamily,
)
from .kmult import diminutive_table
from .liecore import (
    KType,
    Weight,
    WeylSubgroupSpec,
    dominant,
    weight_multiplicity,
    weyl_elements,
)
from .orbits import Family, Orbit, generic_part, is_even, is_generic, parse_orbit
from .parameters import (
    PLUS,
    GLString,
    NormalForm,
    SignVector,
    b_orbit_normal_form,
    distinguished_param,
    gamma_normal_form,
    string_blocks,
    unipotent_normal_form,
)


@dataclass(frozen=True)
class StandardModuleTerm:
    coeff: Fraction
    lambda_left: Weight
    lambda_right: Weight

    def __post_init__(self):
        if self.lambda_left.rank != self.lambda_right.rank:
            raise RankMismatch("left and right parameters have different ranks")
        if not (self.lambda_left - self.lambda_right).is_integral:
            raise NonIntegralResult(
                f"{self.lambda_left} - {self.lambda_right} is not a character of the torus"
            )

    @property
    def torus_weight(self) -> Weight:
        return self.lambda_left - self.lambda_right


@dataclass(frozen=True)
class Summand:
    coeff: Fraction
    lambda_left: Weight
    lambda_right_base: Weight
    subgroup: WeylSubgroupSpec

    def __post_init__(self):
        r = self.lambda_left.rank
        if self.lambda_right_base.rank != r or self.subgroup.width != r:
            raise RankMismatch(
                f"summand mixes ranks {r}, {self.lambda_right_base.rank} and subgroup width {self.subgroup.width}"
            )

    def to_json(self) -> dict:
        c = Fraction(self.coeff)
        return {
            "coeff": [c.numerator, c.denominator],
            "lambda_left": list(self.lambda_left.doubled),
            "lambda_right_base": list(self.lambda_right_base.doubled),
            "subgroup": self.subgroup.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Summand:
        c = data.get("coeff", [1, 1])
        coeff = Fraction(c[0], c[1]) if isinstance(c, (list, tuple)) else Fraction(c)
        return cls(
            coeff,
            Weight(tuple(int(v) for v in data["lambda_left"])),
            Weight(tuple(int(v) for v in data["lambda_right_base"])),
            WeylSubgroupSpec.parse(data["subgroup"]),
        )

    def __str__(self) -> str:
        return (f"{self.coeff} * sum_{{w in {self.subgroup}}} sgn(w) "
                f"X({self.lambda_left}; w{self.lambda_right_base})")


@dataclass(frozen=True)
class SymmetrizedFormula:
    rank: int
    summands: tuple[Summand, ...] = ()
    family: str = "C"
    label: str = ""

    def __post_init__(self):
        for s in self.summands:
            if s.lambda_left.rank != self.rank:
                raise RankMismatch(
                    f"summand of rank {s.lambda_left.rank} in a rank {self.rank} formula"
                )

    @property
    def inf_char(self) -> Weight | None:
        if not self.summands:
            return None
        return dominant(self.summands[0].lambda_left, "C")

    def has_constant_inf_char(self) -> bool:
        ic = self.inf_char
        return all(dominant(s.lambda_left, "C") == ic for s in self.summands)

    def scaled(self, c) -> SymmetrizedFormula:
        c = Fraction(c)
        return SymmetrizedFormula(
            self.rank,
            tuple(Summand(s.coeff * c, s.lambda_left, s.lambda_right_base, s.subgroup)
                  for s in self.summands),
            self.family,
            self.label,
        )

    def __add__(self, other: SymmetrizedFormula) -> SymmetrizedFormula:
        if other.rank != self.rank:
            raise RankMismatch(f"cannot add formulas of rank {self.rank} and {other.rank}")
        return SymmetrizedFormula(self.rank, self.summands + other.summands, self.family, self.label)

    def term_count(self) -> int:
        return sum(s.subgroup.order for s in self.summands)

    def to_json(self) -> dict:
        return {
            "group": "Sp" if self.family == "C" else self.family,
            "rank": self.rank,
            "label": self.label,
            "summands": [s.to_json() for s in self.summands],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymmetrizedFormula:
        group = str(data.get("group", "Sp"))
        family = "C" if group.lower() in ("sp", "c") else group
        return cls(
            int(data["rank"]),
            tuple(Summand.from_json(s) for s in data["summands"]),
            family,
            str(data.get("label", "")),
        )


@dataclass
class TorusCharCombo:
    """Integer (or rational) combination of Ind_T^K(C_mu), keyed by dominant mu."""

    rank: int
    terms: dict[Weight, Fraction] = field(default_factory=dict)
    family: str = "C"

    def __post_init__(self):
        self.terms = {
            dominant(w, self.family): Fraction(c) for w, c in self.terms.items() if c
        }

    def coefficient(self, w: Weight) -> Fraction:
        return self.terms.get(dominant(w, self.family), Fraction(0))

    def support(self) -> set[Weight]:
        return set(self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def items(self) -> list[tuple[Weight, Fraction]]:
        """Terms sorted by dominant weight, smallest first."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].doubled)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusCharCombo):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> list:
        return [{"weight": w.label(), "coeff": str(c)} for w, c in self.items()]

    def __str__(self) -> str:
        parts = []
        for w, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}"
            parts.append(f"{sign} {coef}Ind({w.label('')})")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text or "0"


def expand_symmetrized(f: SymmetrizedFormula) -> list[StandardModuleTerm]:
    out = []
    for s in f.summands:
        for w, sign in weyl_elements(s.subgroup):
            out.append(StandardModuleTerm(s.coeff * sign, s.lambda_left, w(s.lambda_right_base)))
    return out


def _collect(acc: dict, family: str, left: Weight, right: Weight, coeff: Fraction) -> None:
    mu = left - right
    if not mu.is_integral:
        raise NonIntegralResult(f"{left} - {right} is not a character of the torus")
    key = dominant(mu, family)
    acc[key] += coeff


def restrict_to_torus_combo(terms: Iterable[StandardModuleTerm], *, family: str = "C",
                            require_integral: bool = True) -> TorusCharCombo:
    acc: dict[Weight, Fraction] = defaultdict(Fraction)
    rank = None
    for t in terms:
        if rank is None:
            rank = t.lambda_left.rank
        elif t.lambda_left.rank != rank:
            raise RankMismatch("terms of different ranks")
        _collect(acc, family, t.lambda_left, t.lambda_right, t.coeff)
    combo = TorusCharCombo(rank or 0, dict(acc), family)
    if require_integral and not combo.is_integral():
        bad = [f"{w}: {c}" for w, c in combo.items() if c.denominator != 1]
        raise NonIntegralResult("non-integral torus coefficients: " + ", ".join(bad))
    return combo


def formula_torus_combo(f: SymmetrizedFormula, *, require_integral: bool = True) -> TorusCharCombo:
    """Same as ``restrict_to_torus_combo(expand_symmetrized(f))`` without the term list."""
    acc: dict[Weight, Fraction] = defaultdict(Fraction)
    for s in f.summands:
        for w, sign in weyl_elements(s.subgroup):
            _collect(acc, f.family, s.lambda_left, w(s.lambda_right_base), s.coeff * sign)
    combo = TorusCharCombo(f.rank, dict(acc), f.family)
    if require_integral and not combo.is_integral():
        bad = [f"{w}: {c}" for w, c in combo.items() if c.denominator != 1]
        raise NonIntegralResult(f"{f.label or 'formula'} has non-integral torus coefficients: "
                                + ", ".join(bad))
    return combo


def combo_difference(a: TorusCharCombo, b: TorusCharCombo) -> TorusCharCombo:
    if a.rank != b.rank and a.terms and b.terms:
        raise RankMismatch(f"cannot subtract combos of rank {a.rank} and {b.rank}")
    rank = a.rank if a.terms else b.rank
    acc: dict[Weight, Fraction] = defaultdict(Fraction)
    for w, c in a.terms.items():
        acc[w] += c
    for w, c in b.terms.items():
        acc[w] -= c
    return TorusCharCombo(rank, dict(acc), a.family)


# -- building formulas ---------------------------------------------------------


def _desc(coords) -> Weight:
    return Weight.of(sorted(coords, reverse=True))


def gl_block_formula(string: GLString, block=None) -> SymmetrizedFormula:
    """Alternating-sum fragment for the character of one GL factor.

    Plus strings give the trivial-type fragment on the string with the full
    symmetric group.  A minus string lambda[x,y]^- pairs the shifted string
    on its first y coordinates (determinant type) with a trivial-type block
    on the remaining (x-y)/2.  ``block``, if given, must be one of the
    normal-form blocks of ``string``.
    """
    if block is not None and block not in string_blocks(string):
        raise ValueError(f"{block} is not a compact block of {string}")
    m = string.size
    if m == 0:
        return SymmetrizedFormula(0, (Summand(Fraction(1), Weight(()), Weight(()),
                                              WeylSubgroupSpec(())),))
    left, right = string.parameter()
    if string.sign == PLUS:
        base = _desc(left)
        sub = WeylSubgroupSpec.symmetric(m)
        return SymmetrizedFormula(m, (Summand(Fraction(1), base, base, sub),),
                                  label=str(string))
    y = string.y
    head_l, head_r = _desc(left[:y]), _desc(right[:y])
    rest = _desc(left[y:])
    sub = WeylSubgroupSpec.symmetric(y) * WeylSubgroupSpec.symmetric(m - y)
    return SymmetrizedFormula(
        m, (Summand(Fraction(1), head_l.concat(rest), head_r.concat(rest), sub),),
        label=str(string),
    )


def induce_formula(blocks: Iterable[SymmetrizedFormula], tail: SymmetrizedFormula, *,
                   rank: int | None = None) -> SymmetrizedFormula:
    """Parabolic induction: tail coordinates first, then each block in order."""
    blocks = list(blocks)
    total = tail.rank + sum(b.rank for b in blocks)
    if rank is not None and total != rank:
        raise RankMismatch(f"blocks and tail have total rank {total}, expected {rank}")
    current = list(tail.summands)
    for b in blocks:
        nxt = []
        for s in current:
            for t in b.summands:
                nxt.append(Summand(
                    s.coeff * t.coeff,
                    s.lambda_left.concat(t.lambda_left),
                    s.lambda_right_base.concat(t.lambda_right_base),
                    s.subgroup * t.subgroup,
                ))
        current = nxt
    return SymmetrizedFormula(total, tuple(current), tail.family)


def trivial_module_formula(rank: int) -> SymmetrizedFormula:
    """The finite-dimensional trivial representation of Sp(2 rank)."""
    if rank == 0:
        return SymmetrizedFormula(0, (Summand(Fraction(1), Weight(()), Weight(()),
                                              WeylSubgroupSpec(())),), label="U(0,0;+)")
    rho = Weight.of(range(rank, 0, -1))
    return SymmetrizedFormula(
        rank, (Summand(Fraction(1), rho, rho, WeylSubgroupSpec((("C", rank),))),),
        label=f"U({2 * rank},0;+)",
    )


# -- K-type multiplicities -----------------------------------------------------


def ktype_multiplicity(combo: TorusCharCombo, mu: KType | Weight) -> int:
    """Multiplicity of V_mu: sum of coeff(lam) * dim V_mu[lam] over the combo."""
    if combo.family != "C":
        raise UnsupportedFamily("full K-type multiplicities are only available for Sp")
    hw = mu.highest_weight if isinstance(mu, KType) else mu
    if isinstance(mu, KType) and mu.family != "C":
        raise UnsupportedFamily("full K-type multiplicities are only available for Sp")
    if hw.rank != combo.rank:
        raise RankMismatch(f"K-type of rank {hw.rank} against a rank {combo.rank} combo")
    total = Fraction(0)
    for lam, c in combo.terms.items():
        total += c * weight_multiplicity("C", combo.rank, hw, lam)
    if total.denominator != 1:
        raise NonIntegralResult(f"multiplicity of V_{hw} is {total}")
    return int(total)


def ktype_spectrum(combo: TorusCharCombo, max_entry: int) -> dict[Weight, int]:
    """Multiplicities of every dominant K-type with entries at most max_entry."""
    out = {}
    for d in itertools.combinations_with_replacement(range(max_entry, -1, -1), combo.rank):
        w = Weight.of(d)
        out[w] = ktype_multiplicity(combo, w)
    return out


def diminutive_projection(combo: TorusCharCombo) -> tuple[int, ...]:
    """Multiplicities of V_(1^{2k}) for k = 0..rank//2."""
    n = combo.rank
    return tuple(
        ktype_multiplicity(combo, Weight.of([1] * (2 * k) + [0] * (n - 2 * k)))
        for k in range(n // 2 + 1)
    )


# -- fixtures ------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """A shipped character formula with what it is a formula of.

    ``kind`` is ``"unipotent"`` for U(orbit; epsilon), ``"closure"`` for the
    model of functions on an orbit closure and ``"orbit"`` for functions on
    the orbit itself.
    """

    formula: SymmetrizedFormula
    kind: str
    orbit: Orbit | None = None
    epsilon: str = ""
    source: str = ""

    @property
    def key(self) -> tuple | None:
        if self.kind != "unipotent" or self.orbit is None:
            return None
        return (self.orbit.columns, self.epsilon)

    def reference_form(self) -> NormalForm | None:
        if self.orbit is None:
            return None
        if self.kind == "unipotent":
            return unipotent_normal_form(self.orbit, self.epsilon)
        if self.kind == "closure":
            return gamma_normal_form(self.orbit)
        return b_orbit_normal_form(self.orbit)

    @classmethod
    def from_json(cls, data: Mapping, source: str = "") -> Fixture:
        formula = SymmetrizedFormula.from_json(data)
        orbit = None
        if "orbit" in data:
            orbit = parse_orbit("Sp", data["orbit"])
        return cls(formula, str(data.get("kind", "unipotent")), orbit,
                   str(SignVector.parse(data.get("epsilon", "")) if data.get("epsilon") else ""),
                   source)

    def to_json(self) -> dict:
        out = self.formula.to_json()
        out["kind"] = self.kind
        if self.orbit is not None:
            out["orbit"] = list(self.orbit.columns)
        if self.epsilon:
            out["epsilon"] = self.epsilon
        return out


@dataclass
class FixtureCheck:
    integral: bool
    inf_char_constant: bool
    diminutive_match: bool | None
    projection: tuple[int, ...] | None = None
    expected: tuple[int, ...] | None = None
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.integral and self.inf_char_constant and self.diminutive_match is not False


def validate_fixture(fx: Fixture) -> FixtureCheck:
    """Integrality, constant infinitesimal character, and diminutive agreement."""
    msgs = []
    try:
        combo = formula_torus_combo(fx.formula)
        integral = True
    except NonIntegralResult as exc:
        msgs.append(str(exc))
        combo = formula_torus_combo(fx.formula, require_integral=False)
        integral = False
    inf_ok = fx.formula.has_constant_inf_char()
    if not inf_ok:
        msgs.append("summands have different infinitesimal characters")
    ref = fx.reference_form()
    match = proj = expected = None
    if ref is not None and integral:
        proj = diminutive_projection(combo)
        expected = diminutive_table(ref).values
        match = proj == expected
        if not match:
            msgs.append(f"diminutive projection {proj} differs from expected {expected}")
    return FixtureCheck(integral, inf_ok, match, proj, expected, msgs)


class UnipotentFixtureSet:
    """Fixtures indexed by (columns, epsilon) of the unipotent module they describe."""

    def __init__(self, fixtures: Iterable[Fixture] = ()):
        self.fixtures: list[Fixture] = []
        self._by_key: dict[tuple, Fixture] = {}
        for fx in fixtures:
            self.add(fx)

    def add(self, fx: Fixture) -> None:
        self.fixtures.append(fx)
        if fx.key is not None:
            self._by_key[fx.key] = fx

    def lookup(self, orbit: Orbit, epsilon: SignVector | str) -> SymmetrizedFormula:
        eps = str(epsilon)
        if sum(orbit.columns) == 0:
            return trivial_module_formula(0)
        fx = self._by_key.get((orbit.columns, eps))
        if fx is None:
            raise MissingFixture(orbit, eps)
        return fx.formula

    def has(self, orbit: Orbit, epsilon: SignVector | str) -> bool:
        return sum(orbit.columns) == 0 or (orbit.columns, str(epsilon)) in self._by_key

    def by_kind(self, kind: str, orbit: Orbit) -> Fixture | None:
        for fx in self.fixtures:
            if fx.kind == kind and fx.orbit == orbit:
                return fx
        return None

    def __iter__(self) -> Iterator[Fixture]:
        return iter(self.fixtures)

    def __len__(self) -> int:
        return len(self.fixtures)

    @classmethod
    def load(cls, *paths: str | Path) -> UnipotentFixtureSet:
        """Load JSON fixtures from files or directories; no paths means the shipped set."""
        out = cls()
        if not paths:
            root = resources.files("nilorbit") / "data"
            for entry in sorted(root.iterdir(), key=lambda p: p.name):
                if entry.name.endswith(".json"):
                    out.add(Fixture.from_json(json.loads(entry.read_text()), entry.name))
            return out
        for p in paths:
            p = Path(p)
            files = sorted(p.glob("*.json")) if p.is_dir() else [p]
            for f in files:
                out.add(Fixture.from_json(json.loads(f.read_text()), str(f)))
        return out


def _pair_fragments(sizes: Iterable[int]) -> list[SymmetrizedFormula]:
    return [gl_block_formula(GLString(s, s, PLUS)) for s in sizes]


def distinguished_module_formula(p: Orbit, fixtures: UnipotentFixtureSet) -> SymmetrizedFormula:
    m = distinguished_param(p)
    tail = fixtures.lookup(m.p_star, m.epsilon)
    frags = [gl_block_formula(s) for s in m.minus_strings]
    f = induce_formula(frags, tail, rank=p.group.rank)
    return SymmetrizedFormula(f.rank, f.summands, f.family, m.label())


def assemble_r_obar(o: Orbit, fixtures: UnipotentFixtureSet) -> SymmetrizedFormula:
    """Formula for functions on the closure of an even symplectic orbit.

    Generic orbits sum the distinguished modules over Norm(o); otherwise
    the removed column pairs of the generic part are induced around the
    formula of the generic part.
    """
    if o.family is not Family.SP:
        raise UnsupportedFamily("character formulas are only assembled for Sp")
    if not is_even(o):
        raise NotEvenGeneric(f"{o} is not even")
    if not is_generic(o):
        gp = generic_part(o)
        inner = assemble_r_obar(gp.generic_orbit, fixtures)
        f = induce_formula(_pair_fragments(gp.removed_pairs), inner, rank=o.group.rank)
        return SymmetrizedFormula(f.rank, f.summands, f.family, f"R({o.label()})")
    total = SymmetrizedFormula(o.group.rank, label=f"R({o.label()})")
    for p in norm_set(o).members:
        total = total + distinguished_module_formula(p, fixtures)
    return total


def fixtures_cover(o: Orbit, fixtures: UnipotentFixtureSet) -> bool:
    """Whether every unipotent formula needed for ``o`` is available."""
    if o.family is not Family.SP or not is_even(o):
        return False
    if not is_generic(o):
        return fixtures_cover(generic_part(o).generic_orbit, fixtures)
    for p in norm_set(o).members:
        m = distinguished_param(p)
        if not fixtures.has(m.p_star, m.epsilon):
            return False
    return True
