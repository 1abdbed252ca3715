import numpy as np
import pytest

from mixdom import Element, ElementKind, ElementSet, UnknownElement


def test_canonical_id_roundtrip():
    for n in (3, 8, 17):
        seen = set()
        for eid in range(5 * n):
            el = Element.from_id(eid, n)
            assert el.id(n) == eid
            seen.add(el)
        assert len(seen) == 5 * n


def test_id_layout_matches_kind_blocks():
    n = 9
    assert Element(ElementKind.OUTER_VERTEX, 4).id(n) == 4
    assert Element(ElementKind.INNER_VERTEX, 4).id(n) == n + 4
    assert Element(ElementKind.OUTER_EDGE, 4).id(n) == 2 * n + 4
    assert Element(ElementKind.SPOKE, 4).id(n) == 3 * n + 4
    assert Element(ElementKind.INNER_EDGE, 4).id(n) == 4 * n + 4


def test_out_of_range_ids_rejected():
    with pytest.raises(UnknownElement):
        Element.from_id(40, 8)
    with pytest.raises(UnknownElement):
        Element.from_id(-1, 8)
    with pytest.raises(UnknownElement):
        Element(ElementKind.SPOKE, 8).id(8)


def test_set_membership_consistent_with_cardinality():
    s = ElementSet(8, [0, 5, 39])
    assert len(s) == 3
    assert 5 in s and 39 in s and 1 not in s
    assert list(s) == [0, 5, 39]
    s.add(Element(ElementKind.INNER_EDGE, 7))  # id 39 again
    assert len(s) == 3
    s.discard(0)
    assert len(s) == 2 and 0 not in s


def test_set_algebra():
    a = ElementSet(6, [0, 1, 2])
    b = ElementSet(6, [2, 3])
    assert sorted(a | b) == [0, 1, 2, 3]
    assert sorted(a & b) == [2]
    assert sorted(a - b) == [0, 1]
    assert ElementSet(6, [1, 2]) <= a
    assert not a <= b
    assert a != b
    assert a == ElementSet(6, [2, 1, 0])


def test_set_universe_mismatch_rejected():
    with pytest.raises(ValueError):
        ElementSet(6, [0]) | ElementSet(7, [0])


def test_from_mask_and_elements():
    mask = np.zeros(30, dtype=bool)
    mask[[3, 14]] = True
    s = ElementSet.from_mask(6, mask)
    els = s.elements()
    assert [e.kind for e in els] == [ElementKind.OUTER_VERTEX, ElementKind.OUTER_EDGE]
    assert [e.index for e in els] == [3, 2]
