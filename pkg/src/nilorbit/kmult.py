"""Diminutive K-type multiplicities of induced modules.

The multiplicity of the exterior power ``^m C^N`` in a module induced
from a character of a product of unitary groups (and one orthogonal
group for O) is the coefficient of ``t^m`` in a product of one small
polynomial per block, computed here exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .degeneration import UNBOUNDED, Quad, fundamental_degeneration, norm_set
from .errors import NotDegenerable, NotEvenGeneric, ShapeMismatch
from .orbits import Family, GroupType, Orbit, enumerate_orbits, is_even, is_generic
from .parameters import (
    MINUS,
    PLUS,
    GLString,
    NormalForm,
    assemble_normal_form,
    b_orbit_normal_form,
    distinguished_param,
    gamma_normal_form,
    normal_form,
)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def exterior_polynomial(nf: NormalForm) -> list[int]:
    """Coefficient list (by degree) of the product of block polynomials."""
    poly = [1]
    for blk in nf.blocks:
        if blk.kind == "TRIV":
            f = [0] * (2 * blk.size + 1)
            for i in range(blk.size + 1):
                f[2 * i] = 1
        else:
            f = [0] * blk.size + [1]
        poly = _poly_mul(poly, f)
    if nf.tail is not None and nf.tail[1] == MINUS:
        poly = _poly_mul(poly, [0] * nf.tail[0] + [1])
    return poly


def exterior_mult(nf: NormalForm, m: int) -> int:
    if m < 0 or m > nf.ambient.dim:
        raise ValueError(f"exterior degree {m} out of range for {nf.ambient}")
    poly = exterior_polynomial(nf)
    return poly[m] if m < len(poly) else 0


@dataclass(frozen=True)
class DimTable:
    """Diminutive multiplicities.

    For Sp(2n) entry k is the multiplicity of V_(1^{2k}) for k = 0..n//2.
    For O(N) entry j is the multiplicity of ^{2j} C^N, j = 0..N//2.
    """

    group: GroupType
    values: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError(f"negative multiplicity in {self.values}")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(2 * j for j in range(len(self.values)))

    def labels(self) -> list[str]:
        n = self.group.rank
        if self.group.is_orthogonal:
            return [f"^{m}C^{self.group.dim}" for m in self.degrees]
        return [ktype_label_sp(n, k) for k in range(len(self.values))]

    def __add__(self, other: DimTable) -> DimTable:
        if self.group != other.group:
            raise ValueError("tables belong to different groups")
        return DimTable(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def to_json(self) -> dict:
        return {"group": str(self.group), "labels": self.labels(), "values": list(self.values)}

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def ktype_label_sp(n: int, k: int) -> str:
    return "V_(" + ",".join(["1"] * (2 * k) + ["0"] * (n - 2 * k)) + ")"


def exterior_to_ktype(dim: int, m: int) -> tuple[int, int | None]:
    """The O(dim) label (j, tag) of ^m C^dim: highest weight (1^j, 0, ...).

    ``tag`` is +1 for m < dim/2, -1 for m > dim/2 and None at m = dim/2.
    """
    if not 0 <= m <= dim:
        raise ValueError(f"no exterior power ^{m} of C^{dim}")
    if 2 * m == dim:
        return m, None
    return (m, 1) if 2 * m < dim else (dim - m, -1)


def ktype_to_exterior(dim: int, j: int, tag: int | None) -> int:
    if tag is None:
        if 2 * j != dim:
            raise ValueError("only the middle exterior power carries no tag")
        return j
    if 2 * j >= dim:
        raise ValueError(f"(1^{j}) is not a tagged O({dim}) label")
    return j if tag > 0 else dim - j


def diminutive_table(nf: NormalForm) -> DimTable:
    poly = exterior_polynomial(nf)
    g = nf.ambient

    def coeff(m: int) -> int:
        return poly[m] if 0 <= m < len(poly) else 0

    if g.is_orthogonal:
        vals = tuple(coeff(m) for m in range(0, g.dim + 1, 2))
    else:
        vals = tuple(coeff(2 * k) - coeff(2 * k - 2) for k in range(g.rank // 2 + 1))
    return DimTable(g, vals)


# -- column lemmas -------------------------------------------------------------


@dataclass
class LemmaReport:
    kind: int
    columns: tuple
    sign_variant: str
    degenerated: tuple
    lhs: DimTable
    rhs_sum: DimTable
    equal: bool
    inferred_sigma: str | None
    printed_sigma: str
    lhs_form: NormalForm
    rhs_forms: tuple[NormalForm, NormalForm]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "columns": [str(c) for c in self.columns],
            "sign_variant": self.sign_variant,
            "degenerated": [str(c) for c in self.degenerated],
            "lhs": list(self.lhs.values),
            "rhs_sum": list(self.rhs_sum.values),
            "equal": self.equal,
            "inferred_sigma": self.inferred_sigma,
            "printed_sigma": self.printed_sigma,
        }


def _flip(s: str) -> str:
    return MINUS if s == PLUS else PLUS


def _parse_lemma_columns(kind: int, columns) -> tuple:
    vals = []
    for c in columns:
        if c is UNBOUNDED or str(c).lower() in ("inf", "infinity", "unbounded"):
            vals.append(UNBOUNDED)
        else:
            vals.append(int(c))
    if kind == 3:
        if len(vals) == 3:
            vals = [UNBOUNDED] + vals
        if len(vals) != 4 or vals[0] is not UNBOUNDED:
            raise ShapeMismatch("the 3-column identity takes (inf, b, c, d) or (b, c, d)")
    elif kind == 4:
        if len(vals) != 4 or UNBOUNDED in vals:
            raise ShapeMismatch("the 4-column identity takes (a, b, c, d)")
    elif kind == 5:
        if len(vals) != 5 or UNBOUNDED in vals:
            raise ShapeMismatch("the 5-column identity takes (z, a, b, c, d)")
        if not vals[0] > vals[1]:
            raise ShapeMismatch(f"need z > a, got z = {vals[0]}, a = {vals[1]}")
    else:
        raise ShapeMismatch(f"no column identity of kind {kind}")
    finite = [v for v in vals if v is not UNBOUNDED]
    if any(v < 0 or v % 2 for v in finite):
        raise ShapeMismatch(f"columns must be even and nonnegative: {columns}")
    quad = vals[-4:]
    if quad[1] != quad[2]:
        raise ShapeMismatch(f"middle columns must agree: {quad[1]} != {quad[2]}")
    if not (quad[0] >= quad[1] and quad[2] >= quad[3]):
        raise ShapeMismatch(f"columns must weakly decrease: {columns}")
    if quad[1] == 0:
        raise ShapeMismatch("middle columns must be positive")
    return tuple(vals)


def _degenerate4(quad) -> tuple:
    try:
        out = fundamental_degeneration(Quad(*quad))
    except NotDegenerable as exc:
        raise ShapeMismatch(str(exc)) from None
    return tuple(out) + (0,) * (4 - len(out))


def verify_column_lemma(kind: int, columns, sign_variant: str = PLUS) -> LemmaReport:
    """Check one 3-, 4- or 5-column identity on diminutive multiplicities.

    ``sign_variant`` is the sign of the T(b|.) factor for kind 3 and of
    the lambda[a,b] factor for kinds 4 and 5.  ``inferred_sigma`` is the
    sign on the lambda[a,d] factor (T(d|.) for kind 3) that makes the
    identity hold; when both signs work the printed rule is reported.
    """
    sign_variant = sign_variant.replace("−", MINUS)
    if sign_variant not in (PLUS, MINUS):
        raise ShapeMismatch(f"sign variant must be + or -, got {sign_variant!r}")
    vals = _parse_lemma_columns(kind, columns)

    if kind == 3:
        _, b, c, d = vals
        _, b2, c2, d2 = _degenerate4(vals)
        g = GroupType.orthogonal(b + c + d)
        lhs = assemble_normal_form([GLString(c, d)], g, (b, sign_variant))
        printed = _flip(sign_variant)

        def rhs(sig: str) -> tuple[NormalForm, NormalForm]:
            first = assemble_normal_form([GLString(c, b, MINUS)], g, (d, sig))
            second = assemble_normal_form([GLString(c2, d2)], g, (b2, sign_variant))
            return first, second

        degenerated = (UNBOUNDED, b2, c2, d2)
    else:
        z = vals[0] if kind == 5 else None
        a, b, c, d = vals[-4:]
        if sign_variant == MINUS and not a > b:
            raise ShapeMismatch("the minus variant needs a > b")
        a2, b2, c2, d2 = _degenerate4((a, b, c, d))
        total = a + b + c + d
        if kind == 5:
            g = GroupType.orthogonal(total + z)
            tail = (z, PLUS)
        else:
            g = GroupType.symplectic(total)
            tail = None
        lhs = assemble_normal_form([GLString(a, b, sign_variant), GLString(c, d)], g, tail)
        printed = (MINUS if d > 0 else PLUS) if sign_variant == PLUS else PLUS

        def rhs(sig: str) -> tuple[NormalForm, NormalForm]:
            first = assemble_normal_form([GLString(c, b, MINUS), GLString(a, d, sig)], g, tail)
            second = assemble_normal_form(
                [GLString(a2, b2, sign_variant), GLString(c2, d2)], g, tail
            )
            return first, second

        degenerated = (z, a2, b2, c2, d2) if kind == 5 else (a2, b2, c2, d2)

    lhs_t = diminutive_table(lhs)
    works = {}
    forms = {}
    for sig in (PLUS, MINUS):
        try:
            f1, f2 = rhs(sig)
        except ValueError:
            continue
        forms[sig] = (f1, f2)
        works[sig] = diminutive_table(f1) + diminutive_table(f2) == lhs_t
    good = [s for s in (PLUS, MINUS) if works.get(s)]
    if len(good) == 2:
        inferred = printed
    elif good:
        inferred = good[0]
    else:
        inferred = None
    used = inferred or printed
    f1, f2 = forms[used]
    rhs_t = diminutive_table(f1) + diminutive_table(f2)
    return LemmaReport(kind, vals, sign_variant, degenerated, lhs_t, rhs_t,
                       rhs_t == lhs_t, inferred, printed, lhs, (f1, f2))


def lemma_parameter_tuples(kind: int, max_entry: int, sign_variant: str = PLUS):
    """All admissible even column tuples for one identity with entries <= max_entry."""
    evens = range(0, max_entry + 1, 2)
    bs = [b for b in evens if b > 0]
    if kind == 3:
        for b in bs:
            for d in evens:
                if d <= b:
                    yield (UNBOUNDED, b, b, d)
        return
    for a in evens:
        for b in bs:
            if b > a or (sign_variant == MINUS and b == a):
                continue
            for d in evens:
                if d > b:
                    continue
                if kind == 4:
                    yield (a, b, b, d)
                else:
                    for z in evens:
                        if z > a:
                            yield (z, a, b, b, d)


def sweep_column_lemma(kind: int, max_entry: int = 10, sign_variant: str = PLUS) -> list[LemmaReport]:
    return [verify_column_lemma(kind, cols, sign_variant)
            for cols in lemma_parameter_tuples(kind, max_entry, sign_variant)]


# -- main identity and normality -----------------------------------------------


@dataclass
class MainReport:
    orbit: Orbit
    gamma: DimTable
    sum: DimTable
    per_member: dict[Orbit, DimTable] = field(default_factory=dict)
    equal: bool = False
    unproven: bool = False

    def to_json(self) -> dict:
        return {
            "orbit": self.orbit.to_json(),
            "gamma": list(self.gamma.values),
            "sum": list(self.sum.values),
            "per_member": [
                {"P": list(p.columns), "epsilon": str(distinguished_param(p).epsilon),
                 "table": list(t.values)}
                for p, t in self.per_member.items()
            ],
            "equal": self.equal,
            "unproven": self.unproven,
        }


def verify_main_theorem(o: Orbit, *, allow_unproven: bool = False) -> MainReport:
    """Compare the Gamma table with the sum over Norm(o) of distinguished tables.

    Orbits that are not even and generic raise NotEvenGeneric unless
    ``allow_unproven`` is set, in which case the report is flagged.
    """
    ok = is_even(o) and is_generic(o)
    if not ok and not allow_unproven:
        raise NotEvenGeneric(f"{o} is not an even generic orbit")
    gamma = diminutive_table(gamma_normal_form(o))
    total = DimTable(o.group, (0,) * len(gamma.values))
    per = {}
    for p in norm_set(o).members:
        t = diminutive_table(normal_form(distinguished_param(p)))
        per[p] = t
        total = total + t
    return MainReport(o, gamma, total, per, total == gamma, not ok)


def sweep_main_theorem(family: Family, max_sum: int) -> list[MainReport]:
    return [verify_main_theorem(o)
            for o in enumerate_orbits(family, max_sum, even_only=True)
            if is_generic(o)]


@dataclass
class NormalityReport:
    orbit: Orbit
    r_obar: DimTable
    r_o: DimTable
    equal: bool
    discrepancies: list[tuple[int, int]]

    def message(self) -> str:
        if self.equal:
            return "NORMAL: diminutive multiplicities agree"
        labels = self.r_obar.labels()
        parts = [f"discrepancy at {labels[k]}, Δ={d}" for k, d in self.discrepancies]
        return "NOT NORMAL: " + "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "orbit": self.orbit.to_json(),
            "r_obar": list(self.r_obar.values),
            "r_o": list(self.r_o.values),
            "equal": self.equal,
            "discrepancies": [list(x) for x in self.discrepancies],
        }


def normality_report(o: Orbit) -> NormalityReport:
    """Diminutive tables of functions on the closure versus on the orbit.

    Each discrepancy is (k, r_o[k] - r_obar[k]).
    """
    closure = diminutive_table(gamma_normal_form(o))
    orbit = diminutive_table(b_orbit_normal_form(o))
    diffs = [(k, b - a) for k, (a, b) in enumerate(zip(closure.values, orbit.values)) if a != b]
    return NormalityReport(o, closure, orbit, not diffs, diffs)
