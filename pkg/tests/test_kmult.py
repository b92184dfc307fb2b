from __future__ import annotations

import pytest

from nilorbit.errors import NotEvenGeneric, ShapeMismatch
from nilorbit.kmult import (
    diminutive_table,
    exterior_mult,
    exterior_to_ktype,
    ktype_to_exterior,
    normality_report,
    sweep_column_lemma,
    verify_column_lemma,
    verify_main_theorem,
)
from nilorbit.liecore import weight_multiplicity, Weight
from nilorbit.orbits import Family, GroupType, enumerate_orbits, parse_orbit
from nilorbit.parameters import DET, TRIV, GLString, NormalForm, assemble_normal_form, gamma_normal_form

from .oracles import sp_normal_form_diminutive

O14 = GroupType.orthogonal(14)
SP12 = GroupType.symplectic(12)


def o14(strings, tail):
    return assemble_normal_form(strings, O14, tail)


def test_exterior_examples():
    nf = NormalForm((TRIV(4),), O14, (6, "+"))
    assert exterior_mult(nf, 8) == 1 and exterior_mult(nf, 10) == 0
    nf = NormalForm((DET(6),), O14, (2, "-"))
    assert [exterior_mult(nf, m) for m in range(0, 15, 2)] == [0, 0, 0, 0, 1, 0, 0, 0]
    nf = NormalForm((DET(2), TRIV(1)), O14, (8, "+"))
    assert [m for m in range(0, 15, 2) if exterior_mult(nf, m)] == [2, 4]
    with pytest.raises(ValueError):
        exterior_mult(nf, 16)


def test_sp_tables():
    assert diminutive_table(gamma_normal_form(parse_orbit("Sp", [6, 2, 2, 2]))).values == (1, 1, 1, 0)
    nf = assemble_normal_form([GLString(2, 2, "-"), GLString(6, 2)], SP12)
    assert diminutive_table(nf).values == (0, 1, 0, 0)
    nf = assemble_normal_form([GLString(6, 4, "-"), GLString(1, 1)], SP12)
    assert diminutive_table(nf).values == (0, 0, 1, 1)


def test_exterior_labels():
    assert exterior_to_ktype(14, 4) == (4, 1)
    assert exterior_to_ktype(14, 10) == (4, -1)
    assert exterior_to_ktype(14, 7) == (7, None)
    for m in range(15):
        j, tag = exterior_to_ktype(14, m)
        assert ktype_to_exterior(14, j, tag) == m


def test_lemma_examples():
    r = verify_column_lemma(3, ("inf", 6, 6, 2), "+")
    assert r.equal and r.inferred_sigma == "-"
    assert r.rhs_forms[0].blocks == (DET(6),) and r.rhs_forms[0].tail == (2, "-")
    assert r.rhs_forms[1].blocks == (TRIV(3),) and r.rhs_forms[1].tail == (8, "+")
    r = verify_column_lemma(4, (6, 2, 2, 2), "+")
    assert r.equal and r.inferred_sigma == "-"
    r = verify_column_lemma(4, (6, 2, 2, 2), "-")
    assert r.equal and r.inferred_sigma == "+"
    r = verify_column_lemma(4, (4, 2, 2, 0), "+")
    assert r.equal and r.inferred_sigma == "+" and r.lhs.values == (1, 1, 0)


def test_lemma_shape_errors():
    with pytest.raises(ShapeMismatch):
        verify_column_lemma(4, (6, 4, 2, 2))
    with pytest.raises(ShapeMismatch):
        verify_column_lemma(5, (6, 6, 2, 2, 0))
    with pytest.raises(ShapeMismatch):
        verify_column_lemma(4, (3, 3, 3, 1))
    with pytest.raises(ShapeMismatch):
        verify_column_lemma(4, (4, 4, 4, 2), "-")
    with pytest.raises(ShapeMismatch):
        verify_column_lemma(6, (4, 4, 4, 2))


@pytest.mark.parametrize("kind, bound", [(3, 10), (4, 10), (5, 8)])
@pytest.mark.parametrize("sign", ["+", "-"])
def test_lemma_sweeps(kind, bound, sign):
    reports = sweep_column_lemma(kind, bound, sign)
    assert reports
    assert all(r.equal for r in reports)
    # the second sign is + in every branch of the identity
    if kind != 3 and sign == "-":
        assert all(r.inferred_sigma == "+" for r in reports)


def test_main_theorem_examples():
    r = verify_main_theorem(parse_orbit("Sp", [8, 6, 6, 4, 4, 2, 2, 0]))
    assert r.equal and len(r.per_member) == 8
    r = verify_main_theorem(parse_orbit("Sp", [8, 6, 4, 2]))
    assert r.equal and len(r.per_member) == 1
    r = verify_main_theorem(parse_orbit("Sp", [4, 2, 2, 0]))
    assert r.equal
    assert [t.values for t in r.per_member.values()] == [(0, 1, 0), (1, 0, 0)]
    assert r.gamma.values == (1, 1, 0)
    with pytest.raises(NotEvenGeneric):
        verify_main_theorem(parse_orbit("Sp", [6, 2, 2, 2]))
    with pytest.raises(NotEvenGeneric):
        verify_main_theorem(parse_orbit("Sp", [3, 3]))
    assert verify_main_theorem(parse_orbit("Sp", [3, 3]), allow_unproven=True).unproven


def test_main_theorem_sweeps():
    sp_orbits = [o for o in enumerate_orbits(Family.SP, 16, even_only=True)]
    checked = 0
    for o in sp_orbits:
        try:
            r = verify_main_theorem(o)
        except NotEvenGeneric:
            continue
        checked += 1
        assert r.equal, o
    assert checked > 30
    for fam in (Family.O_EVEN, Family.O_ODD):
        for o in enumerate_orbits(fam, 14, even_only=True):
            try:
                assert verify_main_theorem(o).equal, o
            except NotEvenGeneric:
                pass


def test_normality():
    r = normality_report(parse_orbit("Sp", [4, 2, 2, 0]))
    assert not r.equal and r.discrepancies == [(2, 1)]
    assert r.message() == "NOT NORMAL: discrepancy at V_(1,1,1,1), Δ=1"
    assert normality_report(parse_orbit("Sp", [2, 2])).equal
    assert normality_report(parse_orbit("Sp", [8, 6, 4, 2])).equal


def test_closure_table_below_orbit_table():
    for fam in Family:
        for o in enumerate_orbits(fam, 14):
            r = normality_report(o)
            assert all(a <= b for a, b in zip(r.r_obar.values, r.r_o.values)), o
            assert r.r_obar.values[0] == 1


def _wm(hw, w):
    return weight_multiplicity("C", len(hw), Weight(hw), Weight(w))


@pytest.mark.parametrize(
    "blocks",
    [
        [("TRIV", 3), ("TRIV", 1)],
        [("TRIV", 2), ("TRIV", 2)],
        [("DET", 2), ("TRIV", 2)],
        [("DET", 4)],
        [("DET", 1), ("DET", 1), ("TRIV", 2)],
        [("TRIV", 5)],
        [("DET", 3), ("TRIV", 2)],
        [("DET", 2), ("DET", 1), ("TRIV", 1), ("TRIV", 1)],
    ],
)
def test_generating_function_matches_torus_oracle(blocks):
    rank = sum(s for _, s in blocks)
    nf = NormalForm(tuple(TRIV(s) if k == "TRIV" else DET(s) for k, s in blocks),
                    GroupType.symplectic(2 * rank))
    assert diminutive_table(nf).values == sp_normal_form_diminutive(blocks, rank, _wm)
