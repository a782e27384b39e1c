from __future__ import annotations

from itertools import combinations

import pytest

from arrspec import (
    Arrangement,
    ValidationError,
    build_lattice,
    building_from_closures,
    d_value,
    enumerate_nested,
    is_nested,
    maximal_building,
)

THREE_LINES = build_lattice(Arrangement.from_normals(2, [(1, 0), (0, 1), (1, 1)]))
QUARTIC = build_lattice(
    Arrangement.from_normals(3, [(1, -1, 0), (1, 1, 0), (1, 0, -1), (1, 0, 1)])
)
SINGLE = build_lattice(Arrangement.from_normals(3, [(1, 0, 0)]))


def test_maximal_sizes():
    assert maximal_building(THREE_LINES).size == 4
    assert maximal_building(QUARTIC).size == 11
    assert maximal_building(SINGLE).size == 2


def test_element_order_by_dimension():
    bs = maximal_building(QUARTIC)
    assert bs.dims == (0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2)
    assert bs.codims == (3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1)
    # ties broken lexicographically on closures
    line_closures = [bs.closures[i] for i in range(1, 7)]
    assert line_closures == sorted(line_closures)


def test_zero_element_below_everything():
    bs = maximal_building(QUARTIC)
    for i in range(bs.size):
        assert bs.leq(0, i)
        assert bs.leq(i, 0) == (i == 0)


def test_nonessential_keeps_formal_zero_distinct():
    bs = maximal_building(SINGLE)
    # one proper flat (the hyperplane itself) plus the formal element
    assert bs.dims == (0, 2)
    assert bs.lt(0, 1)
    assert not bs.zero_flat_included


def test_containment_matches_closures():
    bs = maximal_building(QUARTIC)
    for a in range(1, bs.size):
        for b in range(1, bs.size):
            expected = set(bs.closures[b]) <= set(bs.closures[a])
            assert bs.leq(a, b) == expected


def test_is_nested_examples():
    bs = maximal_building(QUARTIC)
    lines = [i for i in range(1, bs.size) if bs.dims[i] == 1]
    planes = [i for i in range(1, bs.size) if bs.dims[i] == 2]
    # chains are nested
    incident = next((b, a) for b in lines for a in planes if bs.lt(b, a))
    assert is_nested(bs, incident)
    # two distinct lines meet only at the origin, which is in the building set
    assert not is_nested(bs, (lines[0], lines[1]))
    # two planes meet in a line of the building set
    assert not is_nested(bs, (planes[0], planes[1]))
    assert is_nested(bs, ())
    assert is_nested(bs, (planes[0],))
    # the formal element never obstructs
    assert is_nested(bs, (0, *incident))


def test_is_nested_rejects_unknown_elements():
    bs = maximal_building(THREE_LINES)
    with pytest.raises(ValueError):
        is_nested(bs, (1, 99))


def test_nested_equals_chains_for_maximal():
    # brute force over all small subsets
    for lat in (THREE_LINES, QUARTIC):
        bs = maximal_building(lat)
        elems = range(1, bs.size)
        for size in (2, 3):
            for sub in combinations(elems, size):
                chain = all(
                    bs.leq(a, b) or bs.leq(b, a) for a, b in combinations(sub, 2)
                )
                assert is_nested(bs, sub) == chain


def test_enumerate_nested_matches_brute_force():
    bs = maximal_building(QUARTIC)
    got = set(enumerate_nested(bs, 2))
    expected = {frozenset()}
    for size in (1, 2):
        for sub in combinations(range(1, bs.size), size):
            if is_nested(bs, sub):
                expected.add(frozenset(sub))
    assert got == expected


def test_enumerate_nested_is_downward_closed():
    bs = maximal_building(QUARTIC)
    fams = set(enumerate_nested(bs, 2))
    for fam in fams:
        for e in fam:
            assert fam - {e} in fams


def test_enumerate_nested_respects_bound():
    bs = maximal_building(QUARTIC)
    with pytest.raises(ValueError):
        enumerate_nested(bs, bs.n)


def test_d_value_chain():
    bs = maximal_building(QUARTIC)
    lines = [i for i in range(1, bs.size) if bs.dims[i] == 1]
    planes = [i for i in range(1, bs.size) if bs.dims[i] == 2]
    b, a = next((b, a) for b in lines for a in planes if bs.lt(b, a))
    # empty family: drop from the ambient space
    assert d_value(bs, (), 0) == 3
    assert d_value(bs, (), b) == 2
    assert d_value(bs, (), a) == 1
    assert d_value(bs, (a,), b) == 1
    assert d_value(bs, (a,), 0) == 2
    assert d_value(bs, (b, a), 0) == 1


def test_d_value_requires_strict_containment():
    bs = maximal_building(QUARTIC)
    planes = [i for i in range(1, bs.size) if bs.dims[i] == 2]
    with pytest.raises(ValueError):
        d_value(bs, (planes[0],), planes[1])
    with pytest.raises(ValueError):
        d_value(bs, (planes[0],), planes[0])


def test_custom_building_set_requires_hyperplanes():
    with pytest.raises(ValidationError, match="hyperplane"):
        building_from_closures(QUARTIC, [[0, 1]])


def test_custom_building_set_roundtrip():
    # listing every proper flat explicitly reproduces the maximal building set
    closures = [list(f.closure) for f in QUARTIC.flats if f.codim > 0]
    bs = building_from_closures(QUARTIC, closures)
    assert bs.is_maximal
    assert bs.size == maximal_building(QUARTIC).size


def test_custom_building_set_rejects_non_flats():
    with pytest.raises(ValidationError):
        building_from_closures(THREE_LINES, [[0], [1], [2], [0, 1]])
