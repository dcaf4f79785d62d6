import pytest
from hypothesis import given

from lrbembed import catalog
from lrbembed.band import adjoin_identity, validate_band
from lrbembed.embedder import (
    Embeddable,
    EmbeddingFault,
    NotLRB,
    NotRightHereditaryVerdict,
    build_h,
    chi,
    comparable,
    decide_embeddable,
    generator_of,
    kernel,
    modification,
    rewrite,
    run_embedding_algorithm,
    select_node,
    verify_embedding,
)
from lrbembed.formats import parse_order
from lrbembed.iso import find_isomorphism
from lrbembed.localorder import analyze, find_local_linear_order
from lrbembed.words import Fresh, close_under_product, fw_leq

from strategies import subbands

B_IMAGES = {
    "x1": "a1", "x2": "a2a1", "x3": "a2a3a1",
    "y0": "a1a2", "y1": "a1a2a3", "y2": "a2a1a3",
}


def flat(w):
    return "".join(f"a{a}" for a in w)


@pytest.fixture
def B():
    return catalog.load("bandB")


def test_b_images_with_fixed_order(B):
    st = analyze(B)
    h = build_h(st, parse_order(catalog.BAND_B_ORDER, B))
    assert {B.label(x): flat(h[x]) for x in B.nonidentity} == B_IMAGES
    assert h[B.identity] == ()
    assert kernel(h) == set()


def test_b_chi_vectors(B):
    st = analyze(B)
    llo = parse_order(catalog.BAND_B_ORDER, B)
    got = {B.label(c): [B.label(e.element) for e in chi(st, llo, c)] for c in B.nonidentity}
    assert got == {
        "x1": ["x1"], "x2": ["y0", "x2"], "x3": ["y0", "y1", "y2", "x3"],
        "y0": ["x1", "y0"], "y1": ["x1", "y0", "y1", "y2"], "y2": ["y0", "x2", "y1", "y2"],
    }
    with pytest.raises(ValueError):
        chi(st, llo, B.identity)


def test_b_decision(B):
    v = decide_embeddable(B)
    assert isinstance(v, Embeddable)
    assert v.rounds == []
    assert v.rank == 3
    assert verify_embedding(v.final, B) is None


def test_diamond_decision():
    v = decide_embeddable(catalog.load("diamond"))
    assert isinstance(v, NotRightHereditaryVerdict)
    assert v.band.label(v.witness[0]) == "ab"


def test_raw_table_that_is_not_a_band():
    v = decide_embeddable(([[0, 1], [1, 0]], 0))
    assert isinstance(v, NotLRB)
    assert v.violations


def test_supplied_invalid_order_rejected(B):
    bad = parse_order(catalog.BAND_B_ORDER.replace("x2: y0 < x2", "x2: x2 < y0"), B)
    with pytest.raises(ValueError):
        decide_embeddable(B, bad)


def test_left_zero_pair_needs_one_round():
    # {a, b} with xy = x, identity adjoined: h sends a and b to the same letter
    t, labels = adjoin_identity([[0, 0], [1, 1]], ["a", "b"])
    band = validate_band(t, 0, labels)
    v = decide_embeddable(band)
    assert v.initial[1] == v.initial[2]
    assert len(v.rounds) == 1
    r = v.rounds[0]
    assert r.c == band.identity
    assert r.kernel_before == {(1, 2)} and r.kernel_after == set()
    assert not comparable(v.final[1], v.final[2])


def test_verify_embedding_reports_failures(B):
    images = [(), (1,), (2, 1), (2, 3, 1), (1, 2), (1, 2, 3), (2, 1, 3)]
    assert verify_embedding(images, B) is None
    collapsed = list(images)
    collapsed[6] = collapsed[5]
    assert verify_embedding(collapsed, B).kind in ("not-homomorphism", "not-injective")
    shuffled = list(images)
    shuffled[1], shuffled[2] = shuffled[2], shuffled[1]
    assert verify_embedding(shuffled, B).kind == "not-homomorphism"
    with pytest.raises(ValueError):
        verify_embedding(images[:3], B)


def test_identity_map_on_a_subband_is_not_injective_after_merging():
    band, words = close_under_product([(1,), (2,)])
    merged = [w[:1] for w in words]  # a1a2 -> a1 collides with a1
    fail = verify_embedding(merged, band)
    assert fail is not None


# ------------------------------------------------------------------ rewriting
# Two rounds on a six-element band whose initial images are
#   x1, x2 -> a1;  x3 -> a2a1;  y1, y2, y3 -> a1a2
# with the descendant sets fixed by hand.

E, X1, X2, X3, Y1, Y2, Y3 = range(7)


def T(owner, tag, rnd):
    return Fresh(owner, tag, rnd)


def test_rewrite_round_at_identity():
    images = [(), (1,), (1,), (2, 1), (1, 2), (1, 2), (1, 2)]
    parts = {X1: {X1, Y1, Y2}, X2: {X2, Y3}, X3: {X3}, None: set()}
    out = rewrite(images, {1, 2}, parts, E, (X1, X2, X3), 1)
    t0, t1, t2, t3 = T(E, None, 1), T(E, X1, 1), T(E, X2, 1), T(E, X3, 1)
    assert out[X1] == (1, t1, t0, t2, t3)
    assert out[X2] == (1, t2, t0, t1, t3)
    assert out[X3] == (2, t3, t0, t1, t2, 1)
    assert out[Y1] == out[Y2] == (1, t1, t0, t2, t3, 2)
    assert out[Y3] == (1, t2, t0, t1, t3, 2)


def test_rewrite_round_at_x1():
    t0, t1, t2, t3 = T(E, None, 1), T(E, X1, 1), T(E, X2, 1), T(E, X3, 1)
    images = [(), (1, t1, t0, t2, t3), (1, t2, t0, t1, t3), (2, t3, t0, t1, t2, 1),
              (1, t1, t0, t2, t3, 2), (1, t1, t0, t2, t3, 2), (1, t2, t0, t1, t3, 2)]
    parts = {Y1: {Y1, X3}, Y2: {Y2}, None: {Y3}}
    out = rewrite(images, {2}, parts, X1, (Y1, Y2), 2)
    u0, u1, u2 = T(X1, None, 2), T(X1, Y1, 2), T(X1, Y2, 2)
    assert out[X1] == images[X1] and out[X2] == images[X2]
    assert out[X3] == (2, u1, u0, u2, t3, t0, t1, t2, 1)
    assert out[Y1] == (1, t1, t0, t2, t3, 2, u1, u0, u2)
    assert out[Y2] == (1, t1, t0, t2, t3, 2, u2, u0, u1)
    assert out[Y3] == (1, t2, t0, t1, t3, 2, u0, u1, u2)
    assert len({out[s] for s in range(7)}) == 7


# ------------------------------------------------------------------ properties

@given(subbands(max_letter=5, max_seeds=4))
def test_closures_embed_and_round_trip(bw):
    band, _ = bw
    v = decide_embeddable(band)
    assert isinstance(v, Embeddable)
    assert verify_embedding(v.final, band) is None
    image_band, _ = close_under_product(v.final.images)
    assert find_isomorphism(image_band, band) is not None


@given(subbands(max_letter=5, max_seeds=4))
def test_h_preserves_order_and_support(bw):
    band, _ = bw
    st = analyze(band)
    h = build_h(st, find_local_linear_order(st))
    for x in band.elements:
        assert {a for a in h[x]} == {generator_of(t) for t in st.numap(st.sigma(x))}
        for y in band.elements:
            if band.leq(x, y):
                assert fw_leq(h[x], h[y])


@given(subbands(max_letter=5, max_seeds=4))
def test_every_round_shrinks_the_kernel(bw):
    band, _ = bw
    st = analyze(band)
    final, rounds = run_embedding_algorithm(st, find_local_linear_order(st))
    for r in rounds:
        assert r.kernel_after < r.kernel_before
        for x in band.elements:
            for y in band.elements:
                if not comparable(r.before[x], r.before[y]):
                    assert not comparable(r.after[x], r.after[y])
    assert select_node(final, st.tree) is None
    assert kernel(final) == set()


def test_modification_needs_descendants(B):
    st = analyze(B)
    h = build_h(st, find_local_linear_order(st))
    with pytest.raises(ValueError):
        modification(h, B, st.tree, B.index("y1"))


def test_forced_round_without_collisions_is_a_fault(B, monkeypatch):
    import lrbembed.embedder as emb

    st = analyze(B)
    llo = find_local_linear_order(st)
    monkeypatch.setattr(emb, "select_node", lambda emap, tree: B.identity)
    with pytest.raises(EmbeddingFault):
        emb.run_embedding_algorithm(st, llo)
