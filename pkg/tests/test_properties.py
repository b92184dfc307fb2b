from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from nilorbit.charformula import formula_torus_combo, gl_block_formula
from nilorbit.degeneration import count_odd_even_pairs, members_as_columns, norm_set
from nilorbit.kmult import diminutive_table, normality_report
from nilorbit.liecore import (
    Weight,
    WeylSubgroupSpec,
    dominant,
    irrep_dimension,
    weight_multiplicity,
    weyl_elements,
)
from nilorbit.orbits import (
    Family,
    enumerate_orbits,
    from_rows,
    generic_part,
    is_generic,
    parse_orbit,
    reduced,
    to_rows,
)
from nilorbit.parameters import (
    GLString,
    MINUS,
    PLUS,
    all_params,
    characters,
    distinguished_epsilon,
    gamma_normal_form,
    normal_form,
    param_group,
    tau0,
)

ORBITS = [o for fam in Family for o in enumerate_orbits(fam, 14)]
EVEN_SP = list(enumerate_orbits(Family.SP, 16, even_only=True))
orbits = st.sampled_from(ORBITS)


@given(orbits)
def test_reduction_and_generic_part(o):
    gp = generic_part(o)
    assert is_generic(gp.generic_orbit)
    assert generic_part(gp.generic_orbit).removed_pairs == ()
    assert sum(o.columns) == 2 * sum(gp.removed_pairs) + sum(gp.generic_orbit.columns)
    assert reduced(gp.generic_orbit) == reduced(o)
    parse_orbit(o.family, reduced(o).columns)


@given(orbits)
def test_rows_round_trip(o):
    assert from_rows(o.group, to_rows(o)) == o


@settings(max_examples=60)
@given(st.sampled_from(EVEN_SP + [o for o in ORBITS if o.family is not Family.SP]),
       st.integers(0, 2**32))
def test_norm_set_confluent_and_valid(o, seed):
    ns = norm_set(o)
    shuffled = norm_set(o, rng=random.Random(seed))
    assert members_as_columns(ns) == members_as_columns(shuffled)
    assert o in ns
    leaves = set(ns.leaves())
    for m in ns.members:
        assert m.group == o.group and sum(m.columns) == sum(o.columns)
        parse_orbit(m.group, m.columns)
        assert (count_odd_even_pairs(m) == 0) == (m in leaves)


def test_norm_members_need_not_be_generic():
    ns = norm_set(parse_orbit("Sp", [8, 6, 6, 4, 4, 2, 2, 0]))
    assert any(not is_generic(m) for m in ns.members)


@settings(max_examples=80)
@given(st.sampled_from(EVEN_SP))
def test_distinguished_sign_unique(o):
    for p in norm_set(o).members:
        spec = param_group(p)
        eps = distinguished_epsilon(p)
        chars = characters(spec)
        assert sum(1 for c in chars if c == eps) == 1
        if not tau0(p):
            assert set(eps.signs) <= {PLUS}
        for m in all_params(p):
            nf = normal_form(m)
            size = 2 * sum(b.size for b in nf.blocks) + (nf.tail[0] if nf.tail else 0)
            assert size == p.group.dim


@given(orbits)
def test_diminutive_tables_nonnegative(o):
    r = normality_report(o)
    assert r.r_obar.values[0] == 1
    assert all(v >= 0 for v in r.r_obar.values + r.r_o.values)
    assert all(a <= b for a, b in zip(r.r_obar.values, r.r_o.values))
    assert diminutive_table(gamma_normal_form(o)) == r.r_obar


FAMILIES = st.sampled_from(["A", "B", "C", "D"])


@st.composite
def dominant_mu(draw):
    fam = draw(FAMILIES)
    n = draw(st.integers(1, 3))
    if fam == "D" and n == 1:
        n = 2
    vals = sorted(draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)), reverse=True)
    return fam, n, Weight.of(vals)


@settings(max_examples=40, deadline=None)
@given(dominant_mu(), st.data())
def test_weight_multiplicity_w_invariant(case, data):
    fam, n, mu = case
    coords = list(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
    lam = Weight.of(coords)
    assert weight_multiplicity(fam, n, mu, lam) == weight_multiplicity(fam, n, mu, dominant(lam, fam, connected=True))
    assert irrep_dimension(fam, n, mu) > 0


@given(st.lists(st.tuples(st.sampled_from("ACD"), st.integers(1, 3)), min_size=1, max_size=2))
def test_weyl_sign_sum_vanishes(blocks):
    blocks = [(t, r) for t, r in blocks if not (t == "D" and r < 2)] or [("A", 1)]
    spec = WeylSubgroupSpec(tuple(blocks))
    elems = list(weyl_elements(spec))
    assert len(elems) == spec.order
    assert sum(s for _, s in elems) == 0


@given(st.tuples(st.sampled_from("AC"), st.integers(1, 2)),
       st.tuples(st.sampled_from("AC"), st.integers(1, 2)))
def test_weyl_sign_multiplicative(a, b):
    left = {tuple(w.perm) + tuple(w.signs): s for w, s in weyl_elements(WeylSubgroupSpec((a,)))}
    right = {tuple(w.perm) + tuple(w.signs): s for w, s in weyl_elements(WeylSubgroupSpec((b,)))}
    prod = list(weyl_elements(WeylSubgroupSpec((a, b))))
    assert len(prod) == len(left) * len(right)
    assert sorted(s for _, s in prod) == sorted(x * y for x in left.values() for y in right.values())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4).flatmap(lambda y: st.tuples(st.just(y), st.integers(0, 2))))
def test_gl_fragments_integral(args):
    y, extra = args
    for s in (GLString(y + 2 * extra, y, PLUS), GLString(y + 2 * extra, y, MINUS)):
        if s.size == 0 or s.size > 4:
            continue
        combo = formula_torus_combo(gl_block_formula(s))
        assert combo.is_integral()
