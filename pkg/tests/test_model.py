import random

import pytest
from hypothesis import given, strategies as st

from conftest import RAINBOW_C3, tournaments
from monopath.errors import (
    ColourOutOfRange,
    DuplicateArc,
    FormatError,
    MalformedHeader,
    MissingArc,
    VertexOutOfRange,
)
from monopath.model import (
    ColouredTournament,
    Digraph,
    SimpleGraph,
    induced_sub,
    parse_cdt,
    parse_dg,
    parse_instance,
    parse_ug,
    relabel,
    serialize_cdt,
    serialize_dg,
    serialize_ug,
    split_cdt_stream,
)
from monopath.enumgen import random_instance


def test_parse_smallest():
    T = parse_cdt("cdt 2 1\n0 1 0")
    assert (T.n, T.k) == (2, 1)
    assert list(T.arcs()) == [(0, 1, 0)]


def test_parse_rainbow_triangle():
    T = parse_cdt(RAINBOW_C3)
    assert list(T.arcs()) == [(0, 1, 0), (1, 2, 1), (2, 0, 2)]


def test_parse_accepts_bytes_and_comments():
    T = parse_cdt(b"# a comment\ncdt 2 1\n# another\n1 0 0\n")
    assert T.has_arc(1, 0) and not T.has_arc(0, 1)


@pytest.mark.parametrize(
    "text, exc",
    [
        ("cdt 2 1\n0 1 0\n1 0 0", DuplicateArc),
        ("cdt 2 1\n0 1 0\n0 1 0", DuplicateArc),
        ("cdt 3 1\n0 1 0\n1 2 0", MissingArc),
        ("cdt 2 1\n0 1 1", ColourOutOfRange),
        ("cdx 2 1\n0 1 0", MalformedHeader),
        ("cdt 2\n0 1 0", MalformedHeader),
        ("cdt two 1\n0 1 0", MalformedHeader),
        ("", MalformedHeader),
        ("cdt 2 1\n0 5 0", FormatError),
        ("cdt 2 1\n0 0 0", FormatError),
        ("cdt 2 1\n0 1", FormatError),
    ],
)
def test_parse_rejects(text, exc):
    with pytest.raises(exc):
        parse_cdt(text)


def test_missing_arc_names_the_pair():
    with pytest.raises(MissingArc) as info:
        parse_cdt("cdt 3 1\n0 1 0\n1 2 0")
    assert (info.value.u, info.value.v) == (0, 2)


def test_serialize_examples():
    assert serialize_cdt(ColouredTournament(0, 0, ())) == "cdt 0 0\n"
    assert serialize_cdt(ColouredTournament(2, 1, [(1, 0, 0)])) == "cdt 2 1\n1 0 0\n"
    assert serialize_cdt(parse_cdt(RAINBOW_C3)) == RAINBOW_C3


def test_rainbow_round_trip_bytes():
    text = serialize_cdt(parse_cdt(RAINBOW_C3))
    assert serialize_cdt(parse_cdt(text)) == text


@given(tournaments(max_n=40, max_k=5))
def test_round_trip(T):
    assert parse_cdt(serialize_cdt(T)) == T


def test_round_trip_random_large():
    for seed in range(20):
        T = random_instance(40, 4, seed)
        assert parse_cdt(serialize_cdt(T).encode()) == T


@given(tournaments(max_n=12), st.data())
def test_induced_sub_preserves_structure(T, data):
    W = data.draw(st.sets(st.integers(0, max(T.n - 1, 0))) if T.n else st.just(set()))
    sub, index = induced_sub(T, W)
    assert sub.n == len(W) and sub.k == T.k
    assert list(index) == sorted(W)
    for i in range(sub.n):
        for j in range(sub.n):
            if i != j:
                assert sub.has_arc(i, j) == T.has_arc(index[i], index[j])
                assert sub.colour(i, j) == T.colour(index[i], index[j])


def test_induced_sub_examples(mono_c3):
    sub, index = induced_sub(mono_c3, {0, 1})
    assert list(sub.arcs()) == [(0, 1, 0)] and index == (0, 1)
    empty, index = induced_sub(mono_c3, set())
    assert empty.n == 0 and index == ()
    full, index = induced_sub(mono_c3, range(3))
    assert full == mono_c3 and index == (0, 1, 2)
    with pytest.raises(VertexOutOfRange):
        induced_sub(mono_c3, {5})


@given(tournaments(max_n=10))
def test_induced_full_is_identity(T):
    assert induced_sub(T, range(T.n))[0] == T


def test_relabel_inverse():
    T = random_instance(9, 3, 1)
    perm = list(range(9))
    random.Random(0).shuffle(perm)
    inv = [0] * 9
    for v, p in enumerate(perm):
        inv[p] = v
    assert relabel(relabel(T, perm), inv) == T


def test_equality_and_hash():
    a = random_instance(6, 2, 3)
    b = parse_cdt(serialize_cdt(a))
    assert a == b and hash(a) == hash(b)
    assert a != random_instance(6, 2, 4)


def test_unused_colours_are_legal():
    T = parse_cdt("cdt 2 5\n0 1 0")
    assert T.k == 5


def test_digraph_and_graph_formats():
    D = parse_dg("dg 3\n0 1\n1 0\n1 2\n")
    assert D.has_arc(0, 1) and D.has_arc(1, 0) and not D.has_arc(2, 1)
    assert parse_dg(serialize_dg(D)) == D
    G = parse_ug("ug 4\n0 1\n2 3\n")
    assert G.adjacent(1, 0) and not G.adjacent(0, 2)
    assert parse_ug(serialize_ug(G)) == G
    with pytest.raises(FormatError):
        parse_ug("ug 3\n1 0\n")
    with pytest.raises(FormatError):
        parse_dg("dg 2\n0 0\n")
    assert isinstance(parse_instance("ug 2\n0 1\n"), SimpleGraph)
    assert isinstance(parse_instance("dg 2\n"), Digraph)
    with pytest.raises(MalformedHeader):
        parse_instance("xx 2\n")


def test_split_stream():
    docs = split_cdt_stream("cdt 2 1\n0 1 0\n\ncdt 2 1\n1 0 0\n")
    assert [parse_cdt(d) for d in docs] == [parse_cdt("cdt 2 1\n0 1 0"), parse_cdt("cdt 2 1\n1 0 0")]
