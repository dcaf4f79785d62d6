import json

import pytest
from hypothesis import given, strategies as st

from lrbembed import catalog
from lrbembed.formats import (
    BandDocument,
    ParseError,
    band_to_document,
    document_to_band,
    format_map,
    format_order,
    parse_band,
    parse_map,
    parse_order,
    serialize_band,
)
from lrbembed.localorder import analyze, find_local_linear_order


def test_b_fixture_gives_seven_elements(fixtures_dir):
    doc = parse_band((fixtures_dir / "bandB.band").read_text())
    assert doc.identity == "auto"
    assert doc.metadata == {"name": "B"}
    assert document_to_band(doc).n == 7


def test_fixture_files_match_catalog(fixtures_dir):
    for name, text in catalog.FIXTURES.items():
        assert (fixtures_dir / f"{name}.band").read_text() == text


def test_empty_elements_rejected():
    with pytest.raises(ParseError):
        parse_band("elements:\nidentity: auto\n")


def test_unknown_label_named():
    text = "elements: a b\nidentity: auto\na z9\nb b\n"
    with pytest.raises(ParseError) as info:
        parse_band(text)
    assert "z9" in str(info.value)
    assert info.value.line == 3 and info.value.column == 2


@pytest.mark.parametrize("text", [
    "elements: a a\nidentity: auto\na a\na a\n",           # duplicate
    "elements: a b\nidentity: auto\na b\nb\n",             # ragged
    "elements: a b\nidentity: auto\na b\n",                # missing row
    "identity: auto\na\n",                                 # no elements
    "elements: a\na\n",                                    # no identity
    "elements: a\nidentity: q\na\n",                       # undeclared identity
    '{"elements": ["a"], "identity": "a"}',                # json without table
    '{"elements": ["a"], "identity": "a", "table": [',     # broken json
])
def test_malformed_documents(text):
    with pytest.raises(ParseError):
        parse_band(text)


def test_comments_and_json_forms_agree():
    text = "# diamond\nelements: e a b ab\nidentity: e  # explicit\n\ne a b ab\na a ab ab\nb ab b ab\nab ab ab ab\n"
    doc = parse_band(text)
    obj = {"elements": doc.labels, "identity": doc.identity, "table": doc.table}
    assert parse_band(json.dumps(obj)) == doc
    assert document_to_band(doc) == catalog.load("diamond")


def test_adjoin_flag_adds_identity():
    doc = parse_band(catalog.DIAMOND)
    band = document_to_band(doc, adjoin=True)
    assert band.n == 5 and band.identity == 0


labels = st.lists(st.from_regex(r"[a-z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=5, unique=True)


@given(labels, st.data())
def test_parse_serialize_round_trip(labs, data):
    labs = [l for l in labs if l != "auto"] or ["q"]
    n = len(labs)
    table = [[data.draw(st.sampled_from(labs)) for _ in range(n)] for _ in range(n)]
    ident = data.draw(st.sampled_from(labs + ["auto"]))
    doc = BandDocument(labs, ident, table, {"name": "x"})
    assert parse_band(serialize_band(doc)) == doc


def test_band_document_round_trip():
    B = catalog.load("bandB")
    assert document_to_band(parse_band(serialize_band(band_to_document(B)))) == B


def test_order_and_map_round_trip():
    B = catalog.load("bandB")
    st_ = analyze(B)
    llo = find_local_linear_order(st_)
    assert parse_order(format_order(B, llo), B) == llo
    images = [(), (1,), (2, 1), (2, 3, 1), (1, 2), (1, 2, 3), (2, 1, 3)]
    text = format_map(B, images)
    assert "x3 = a2 a3 a1" in text
    assert parse_map(text, B) == images


def test_map_missing_element():
    B = catalog.load("bandB")
    with pytest.raises(ParseError):
        parse_map("x1 = a1\n", B)
