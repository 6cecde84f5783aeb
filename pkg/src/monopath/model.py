"""Immutable coloured tournaments, digraphs and simple graphs.

Vertices are the integers ``0..n-1`` and their index order is the
well-ordering used by every construction in the package.  Adjacency is
stored as Python-int bitmasks (bit ``v`` of ``mask`` set means ``v`` is in
the set), one out-mask and one in-mask per colour, so any
``(direction, colour)`` query is O(1) and set algebra is a single ``|``/``&``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    ColourOutOfRange,
    DuplicateArc,
    FormatError,
    MalformedHeader,
    MissingArc,
    VertexOutOfRange,
)

Colour = int
NO_ARC = -1


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_vertex(n: int, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")


class ColouredTournament:
    """Complete oriented graph on ``n`` vertices with one colour in ``0..k-1`` per arc.

    ``arcs`` is an iterable of ``(tail, head, colour)`` triples covering
    every unordered pair exactly once.
    """

    __slots__ = ("n", "k", "_colour", "_out", "_in", "_succ", "_pred", "_hash")

    def __init__(self, n: int, k: int, arcs: Iterable[tuple[int, int, int]]):
        if n < 0 or k < 0:
            raise ValueError("n and k must be non-negative")
        colour = [[NO_ARC] * n for _ in range(n)]
        for u, v, c in arcs:
            if u == v:
                raise FormatError(f"self-loop at {u}")
            _check_vertex(n, u, v)
            if not 0 <= c < k:
                raise ColourOutOfRange(f"colour {c} of arc {u}->{v} not in 0..{k - 1}")
            if colour[u][v] != NO_ARC or colour[v][u] != NO_ARC:
                raise DuplicateArc(min(u, v), max(u, v))
            colour[u][v] = c
        out = [[0] * n for _ in range(k)]
        inn = [[0] * n for _ in range(k)]
        for u in range(n):
            row = colour[u]
            for v in range(u + 1, n):
                if row[v] != NO_ARC:
                    c, a, b = row[v], u, v
                elif colour[v][u] != NO_ARC:
                    c, a, b = colour[v][u], v, u
                else:
                    raise MissingArc(u, v)
                out[c][a] |= 1 << b
                inn[c][b] |= 1 << a
        self.n = n
        self.k = k
        self._colour = tuple(tuple(r) for r in colour)
        self._out = tuple(tuple(r) for r in out)
        self._in = tuple(tuple(r) for r in inn)
        succ = [0] * n
        pred = [0] * n
        for c in range(k):
            for u in range(n):
                succ[u] |= out[c][u]
                pred[u] |= inn[c][u]
        self._succ = tuple(succ)
        self._pred = tuple(pred)
        self._hash = hash((n, k, self._colour))

    # queries -------------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        _check_vertex(self.n, u, v)
        return self._colour[u][v] != NO_ARC

    def colour(self, u: int, v: int) -> Colour:
        """Colour of the arc ``u -> v``; ``NO_ARC`` if the pair points the other way."""
        _check_vertex(self.n, u, v)
        return self._colour[u][v]

    def out_mask(self, u: int, c: int | None = None) -> int:
        return self._succ[u] if c is None else self._out[c][u]

    def in_mask(self, v: int, c: int | None = None) -> int:
        return self._pred[v] if c is None else self._in[c][v]

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """All arcs as ``(tail, head, colour)`` in lexicographic ``(tail, head)`` order."""
        for u in range(self.n):
            row = self._colour[u]
            for v in range(self.n):
                if row[v] != NO_ARC:
                    yield u, v, row[v]

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self._colour

    def with_colours(self, k: int, colours: Sequence[int]) -> "ColouredTournament":
        """Same orientation, arcs recoloured in ``arcs()`` order."""
        return ColouredTournament(
            self.n, k, ((u, v, c) for (u, v, _), c in zip(self.arcs(), colours, strict=True))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredTournament):
            return NotImplemented
        return (self.n, self.k, self._colour) == (other.n, other.k, other._colour)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ColouredTournament(n={self.n}, k={self.k}, arcs={list(self.arcs())})"


class Digraph:
    """Plain digraph; antiparallel arcs are allowed, loops are not."""

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            _check_vertex(n, u, v)
            if u == v:
                raise FormatError(f"self-loop at {u}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.arcs = arcs
        self._out = tuple(out)
        self._in = tuple(inn)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_mask(self, u: int) -> int:
        return self._out[u]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


class SimpleGraph:
    """Undirected loopless graph; edges are stored as ``(u, v)`` with ``u < v``."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = set()
        adj = [0] * n
        for u, v in edges:
            _check_vertex(n, u, v)
            if u == v:
                raise FormatError(f"loop at {u}")
            e = (min(u, v), max(u, v))
            if e in norm:
                raise DuplicateArc(*e)
            norm.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self._adj = tuple(adj)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adj_mask(self, u: int) -> int:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degree_in(self, u: int, W: Iterable[int]) -> int:
        return (self._adj[u] & to_mask(W)).bit_count()

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


# substructures -------------------------------------------------------------


def induced_sub(
    T: ColouredTournament, W: Iterable[int]
) -> tuple[ColouredTournament, tuple[int, ...]]:
    """Subtournament on ``W``; ``index_map[i]`` is the host vertex of new vertex ``i``."""
    index_map = tuple(sorted(set(W)))
    _check_vertex(T.n, *index_map)
    m = T._colour
    arcs = []
    for i, j in combinations(range(len(index_map)), 2):
        a, b = index_map[i], index_map[j]
        if m[a][b] != NO_ARC:
            arcs.append((i, j, m[a][b]))
        else:
            arcs.append((j, i, m[b][a]))
    return ColouredTournament(len(index_map), T.k, arcs), index_map


def relabel(T: ColouredTournament, perm: Sequence[int]) -> ColouredTournament:
    """Copy of ``T`` with vertex ``v`` renamed ``perm[v]``."""
    return ColouredTournament(T.n, T.k, ((perm[u], perm[v], c) for u, v, c in T.arcs()))


# text formats --------------------------------------------------------------


def _lines(text: str | bytes) -> list[list[str]]:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    rows = []
    for raw in text.split("\n"):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    return rows


def _header(rows: list[list[str]], tag: str, nfields: int) -> list[int]:
    if not rows or rows[0][0] != tag or len(rows[0]) != nfields + 1:
        got = " ".join(rows[0]) if rows else "<empty>"
        raise MalformedHeader(f"expected '{tag}' header with {nfields} field(s), got {got!r}")
    try:
        vals = [int(x) for x in rows[0][1:]]
    except ValueError:
        raise MalformedHeader(f"non-integer header {' '.join(rows[0])!r}") from None
    if any(x < 0 for x in vals):
        raise MalformedHeader("negative header value")
    return vals


def _int_row(row: list[str], width: int) -> list[int]:
    if len(row) != width:
        raise FormatError(f"expected {width} integers, got {' '.join(row)!r}")
    try:
        return [int(x) for x in row]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(row)!r}") from None


def parse_cdt(text: str | bytes) -> ColouredTournament:
    rows = _lines(text)
    n, k = _header(rows, "cdt", 2)
    arcs = []
    for row in rows[1:]:
        u, v, c = _int_row(row, 3)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"arc {u} {v} references a vertex outside 0..{n - 1}")
        arcs.append((u, v, c))
    return ColouredTournament(n, k, arcs)


def serialize_cdt(T: ColouredTournament) -> str:
    out = [f"cdt {T.n} {T.k}\n"]
    out.extend(f"{u} {v} {c}\n" for u, v, c in T.arcs())
    return "".join(out)


def parse_dg(text: str | bytes) -> Digraph:
    rows = _lines(text)
    (n,) = _header(rows, "dg", 1)
    arcs = []
    for row in rows[1:]:
        u, v = _int_row(row, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"arc {u} {v} references a vertex outside 0..{n - 1}")
        if (u, v) in arcs:
            raise DuplicateArc(u, v)
        arcs.append((u, v))
    return Digraph(n, arcs)


def serialize_dg(D: Digraph) -> str:
    return f"dg {D.n}\n" + "".join(f"{u} {v}\n" for u, v in sorted(D.arcs))


def parse_ug(text: str | bytes) -> SimpleGraph:
    rows = _lines(text)
    (n,) = _header(rows, "ug", 1)
    edges = []
    for row in rows[1:]:
        u, v = _int_row(row, 2)
        if not u < v:
            raise FormatError(f"edge line '{u} {v}' must have u < v")
        if v >= n:
            raise FormatError(f"edge {u} {v} references a vertex outside 0..{n - 1}")
        edges.append((u, v))
    return SimpleGraph(n, edges)


def serialize_ug(G: SimpleGraph) -> str:
    return f"ug {G.n}\n" + "".join(f"{u} {v}\n" for u, v in G.sorted_edges())


def parse_instance(text: str | bytes) -> ColouredTournament | Digraph | SimpleGraph:
    """Dispatch on the header tag of a ``.cdt``, ``.dg`` or ``.ug`` document."""
    rows = _lines(text)
    tag = rows[0][0] if rows else ""
    parser = {"cdt": parse_cdt, "dg": parse_dg, "ug": parse_ug}.get(tag)
    if parser is None:
        raise MalformedHeader(f"unknown instance header {tag!r}")
    return parser(text)


def split_cdt_stream(text: str) -> list[str]:
    """Split concatenated ``.cdt`` records (as written by ``enumerate``) into documents."""
    docs: list[list[str]] = []
    for line in text.split("\n"):
        if line.startswith("cdt "):
            docs.append([])
        if docs:
            docs[-1].append(line)
    return ["\n".join(d).strip("\n") + "\n" for d in docs]
