from __future__ import annotations

import json

import pytest

from nilorbit.errors import NotDecreasing, ParityPairViolation, SizeMismatch
from nilorbit.orbits import (
    Family,
    GroupType,
    Parity,
    column_multiplicity,
    enumerate_orbits,
    from_rows,
    generic_part,
    is_generic,
    orbit_from_json,
    parity,
    parse_orbit,
    reduced,
    tau,
    to_rows,
)

BIG = [9, 9, 9, 9, 8, 6, 6, 6, 5, 5, 4, 2, 2, 2, 2, 0]


def sp(*cols):
    return parse_orbit("Sp", cols)


def test_parse_pads_and_sizes():
    o = parse_orbit(GroupType.symplectic(8), [4, 2, 2, 0])
    assert o.columns == (4, 2, 2, 0)
    assert o.group.rank == 4
    assert sp(4, 2, 2).columns == (4, 2, 2, 0)
    assert sp(4, 4, 0, 0).columns == (4, 4)


def test_orthogonal_indexing_starts_at_one():
    o = parse_orbit("O", [6, 6, 2])
    assert o.family is Family.O_EVEN
    assert o.group == GroupType.orthogonal(14)
    assert o.c(1) == 6 and o.c(3) == 2 and o.c(5) == 0
    with pytest.raises(IndexError):
        o.c(0)
    assert parse_orbit("O", [3, 1, 1]).family is Family.O_ODD


def test_parity_violation_names_first_pair():
    with pytest.raises(ParityPairViolation) as exc:
        sp(3, 2, 2, 1)
    assert exc.value.index == 0
    with pytest.raises(ParityPairViolation) as exc:
        sp(4, 2, 2, 1, 1)
    assert exc.value.index == 2


def test_orthogonal_parity_pairs():
    # first column of an orthogonal orbit is unpaired
    assert parse_orbit("O", [5, 2, 2]).columns == (5, 2, 2)
    with pytest.raises(ParityPairViolation) as exc:
        parse_orbit("O", [5, 3, 2])
    assert exc.value.index == 2


def test_not_decreasing_and_size_errors():
    with pytest.raises(NotDecreasing) as exc:
        sp(2, 4)
    assert exc.value.index == 1
    with pytest.raises(NotDecreasing):
        sp(4, -2)
    with pytest.raises(SizeMismatch):
        parse_orbit(GroupType.symplectic(10), [4, 2, 2, 0])
    with pytest.raises(SizeMismatch):
        parse_orbit(Family.O_EVEN, [3])


def test_column_multiplicity():
    o = sp(*BIG)
    assert column_multiplicity(o, 9) == 4
    assert column_multiplicity(o, 6) == 3
    assert column_multiplicity(o, 7) == 0


def test_tau():
    assert tau(sp(*BIG)) == (1, 3, 6, 7)
    assert tau(sp(4, 2, 2, 0)) == (1,)
    assert tau(sp(8, 6, 4, 2)) == ()


def test_reduced():
    assert reduced(sp(*BIG)).columns == (9, 9, 8, 6, 5, 5, 4, 0)
    assert reduced(sp(4, 2, 2, 0)).columns == (4, 0)
    assert reduced(sp(8, 6, 4, 2)).columns == (8, 6, 4, 2)


def test_generic_part():
    g = generic_part(sp(*BIG))
    assert sorted(g.removed_pairs) == [2, 6, 9]
    assert g.generic_orbit.columns == (9, 9, 8, 6, 5, 5, 4, 2, 2, 0)
    g = generic_part(sp(6, 2, 2, 2))
    assert g.removed_pairs == (2,)
    assert g.generic_orbit.columns == (6, 2)
    assert g.generic_orbit.group.dim == 8
    g = generic_part(sp(8, 6, 6, 4, 4, 2, 2, 0))
    assert g.removed_pairs == ()
    assert g.generic_orbit == sp(8, 6, 6, 4, 4, 2, 2, 0)


def test_is_generic_and_parity():
    assert is_generic(sp(8, 6, 6, 4, 4, 2, 2, 0))
    assert not is_generic(sp(6, 2, 2, 2))
    assert is_generic(sp(2, 2))
    assert parity(sp(8, 6, 6, 4, 4, 2, 2, 0)) is Parity.EVEN
    assert parity(sp(9, 9, 8, 6, 5, 5, 4, 0)) is Parity.MIXED
    assert parity(sp(5, 5, 3, 3)) is Parity.ODD


def test_rows_round_trip():
    o = sp(4, 2, 2, 0)
    assert to_rows(o) == [3, 3, 1, 1]
    assert from_rows("Sp", [3, 3, 1, 1]) == o


def test_json_round_trip():
    o = parse_orbit("O", [6, 6, 2])
    text = json.dumps(o.to_json())
    assert orbit_from_json(text) == o
    assert json.loads(text) == {"group": "Oeven", "columns": [6, 6, 2]}


def test_enumeration_is_valid_and_canonical():
    seen = set()
    for o in enumerate_orbits(Family.SP, 10):
        assert o.columns not in seen
        seen.add(o.columns)
        assert parse_orbit(o.group, o.columns) == o
    # partitions of 2n whose odd parts have even multiplicity
    counts = {d: sum(1 for o in enumerate_orbits(Family.SP, 10) if o.group.dim == d) for d in (2, 4, 6, 8, 10)}
    assert counts == {2: 2, 4: 4, 6: 8, 8: 14, 10: 24}
