from itertools import product

import pytest
from hypothesis import given

from lrbembed import catalog
from lrbembed.band import (
    BandAxiomError,
    NotRightHereditary,
    adjoin_identity,
    ancestor_tree,
    axiom_violations,
    is_right_hereditary,
    lower_covers,
    s_sets,
    support_quotient,
    validate_band,
)
from lrbembed.iso import enumerate_bands

from oracles import naive_is_lrb
from strategies import subbands


@pytest.fixture
def B():
    return catalog.load("bandB")


def lab(band, xs):
    return {band.label(x) for x in xs}


def test_band_b_loads_with_identity_first(B):
    assert B.n == 7
    assert B.identity == 0
    assert B.labels == ("e", "x1", "x2", "x3", "y0", "y1", "y2")


def test_diamond_is_a_band_but_not_right_hereditary():
    d = catalog.load("diamond")
    with pytest.raises(NotRightHereditary) as info:
        ancestor_tree(d)
    s, p1, p2 = info.value.witness
    assert d.label(s) == "ab"
    assert {d.label(p1), d.label(p2)} == {"a", "b"}
    assert not is_right_hereditary(d)


def test_missing_idempotency_reported():
    table = [[0, 1], [1, 0]]  # the two-element group
    with pytest.raises(BandAxiomError) as info:
        validate_band(table, 0)
    laws = {v.law for v in info.value.violations}
    assert "idempotency" in laws


def test_right_zero_band_fails_left_regularity():
    # xy = y on {a, b}, identity adjoined
    t, labels = adjoin_identity([[0, 1], [0, 1]], ["a", "b"])
    laws = {v.law for v in axiom_violations(t, 0)}
    assert laws == {"left-regularity"}
    with pytest.raises(BandAxiomError):
        validate_band(t, 0, labels)


def test_bad_identity_reported():
    t = [[0, 0], [0, 1]]
    assert any(v.law == "identity" for v in axiom_violations(t, 0))
    assert not any(v.law == "identity" for v in axiom_violations(t, 1))


@pytest.mark.parametrize("table", [[[0, 1], [1]], [[0, 5], [1, 1]], []])
def test_malformed_tables_rejected(table):
    with pytest.raises(ValueError):
        validate_band(table, 0)


def test_printed_b_prime_table_is_not_associative():
    doc_band = catalog.FIXTURES["bandBprime"]
    from lrbembed.formats import document_to_band, parse_band

    with pytest.raises(BandAxiomError) as info:
        document_to_band(parse_band(doc_band))
    assert {v.law for v in info.value.violations} == {"associativity"}


def test_adjoin_identity_shifts_indices():
    t, labels = adjoin_identity([[0, 0], [1, 1]], ["p", "q"])
    assert labels == ["e", "p", "q"]
    assert t == [[0, 1, 2], [1, 1, 1], [2, 2, 2]]


def test_b_ancestor_tree(B):
    tree = ancestor_tree(B)
    parent = {B.label(s): B.label(p) for s, p in tree.parent.items()}
    assert parent == {"x1": "e", "x2": "e", "x3": "e", "y0": "x1", "y1": "y0", "y2": "x2"}
    assert [B.label(s) for s in tree.chain(B.index("y1"))] == ["e", "x1", "y0", "y1"]


def test_b_support_semilattice_is_a_four_chain(B):
    q = support_quotient(B)
    assert [lab(B, c) for c in q.classes] == [{"e"}, {"x1"}, {"x2", "y0"}, {"x3", "y1", "y2"}]
    L = q.semilattice
    assert all(L.leq(i, j) == (i <= j) for i in range(4) for j in range(4))


def test_b_sim_classes(B):
    """Classes of x ~_c y for each c."""
    expected = {
        "x1": [{"e", "x1"}, {"x2"}, {"y2"}, {"y0"}, {"y1"}, {"x3"}],
        "x2": [{"e", "x2"}, {"x1", "y0"}, {"x3"}, {"y1"}, {"y2"}],
        "x3": [{"e", "x3"}, {"x2", "y2"}, {"x1", "y0", "y1"}],
        "y0": [{"e", "x1", "y0"}, {"x2"}, {"x3"}, {"y2"}, {"y1"}],
        "y1": [{"e", "x1", "y0", "y1"}, {"x2", "y2"}, {"x3"}],
        "y2": [{"e", "x2", "y2"}, {"x3"}, {"x1", "y0", "y1"}],
    }
    for c, classes in expected.items():
        ci = B.index(c)
        got = {frozenset(B.label(y) for y in B.elements if B.sim(ci, x, y)) for x in B.elements}
        assert got == {frozenset(k) for k in classes}, c


def test_b_s_sets(B):
    ss = s_sets(B, ancestor_tree(B))
    got = {B.label(c): lab(B, s) for c, s in ss.items()}
    assert got == {
        "x1": {"x1"},
        "x2": {"x2", "y0"},
        "x3": {"x3", "y0", "y1", "y2"},
        "y0": {"y0"},
        "y1": {"y1", "y2"},
        "y2": {"y1", "y2"},
    }


SMALL = enumerate_bands(3)


@pytest.mark.parametrize("band", SMALL, ids=lambda b: str(b.table))
def test_enumerated_bands_are_lrbs(band):
    assert naive_is_lrb(band.table, band.identity)


def _order_laws(band):
    r = band.elements
    for x in r:
        assert band.leq(x, x)
    for x, y in product(r, repeat=2):
        if x != y and band.leq(x, y):
            assert not band.leq(y, x)
    for x, y, z in product(r, repeat=3):
        if band.leq(x, y) and band.leq(y, z):
            assert band.leq(x, z)


@pytest.mark.parametrize("name", ["bandB", "diamond", "H"])
def test_leq_is_a_partial_order_on_fixtures(name):
    _order_laws(catalog.load(name))


@given(subbands())
def test_leq_is_a_partial_order_on_closures(bw):
    _order_laws(bw[0])


@given(subbands())
def test_closures_are_right_hereditary_with_prefix_tree(bw):
    band, words = bw
    tree = ancestor_tree(band)
    for s, p in tree.parent.items():
        assert words[s][: len(words[p])] == words[p]
        assert len(lower_covers(band, s)) == 1


@given(subbands())
def test_support_classes_are_letter_sets(bw):
    band, words = bw
    q = support_quotient(band)
    for cls in q.classes:
        assert len({frozenset(words[x]) for x in cls}) == 1


@given(subbands())
def test_every_element_lies_in_its_own_s_set(bw):
    band, _ = bw
    ss = s_sets(band, ancestor_tree(band))
    for c, s in ss.items():
        assert c in s
        assert band.identity not in s
