"""Ordered-orientation tournaments and exhaustive colouring checks on small graphs.

Every check enumerates colourings exhaustively under a budget and never
samples: a ``holds`` verdict covers all colourings.  The colour of the first
edge (or arc) in lexicographic order is fixed to 0, which is sound because
both properties are invariant under permuting colour names.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping, Sequence

from .duo import PatternTournament
from .enumgen import check_budget
from .errors import ColouringIncomplete
from .model import ColouredTournament, SimpleGraph, cycle_graph
from .reach import directed_triangles

EdgeColouring = dict[tuple[int, int], int]


@dataclass(frozen=True)
class MotifVerdict:
    holds: bool
    witness: EdgeColouring | None = None

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError("a holding verdict carries no witness")
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness colouring")


def format_colouring(colouring: Mapping[tuple[int, int], int]) -> str:
    """``u v c`` lines in lexicographic edge order."""
    return "".join(f"{u} {v} {c}\n" for (u, v), c in sorted(colouring.items()))


def build_t(G: SimpleGraph) -> PatternTournament:
    """Orient edges of ``G`` forward in index order and add every non-edge as a backward arc."""
    arcs = []
    for i, j in combinations(range(G.n), 2):
        arcs.append((i, j) if G.adjacent(i, j) else (j, i))
    return PatternTournament(G.n, arcs)


def t1_pattern() -> PatternTournament:
    """``build_t`` of the 5-cycle 0-1-2-3-4-0: the target tournament for one colour."""
    return build_t(cycle_graph(5))


# induced motifs -----------------------------------------------------------------


def _induced_isomorphic(G: SimpleGraph, W: Sequence[int], H: SimpleGraph) -> bool:
    """Whether ``G[W]`` is isomorphic to ``H`` (backtracking over vertex images)."""
    h = H.n
    order = sorted(range(h), key=H.degree, reverse=True)
    image = [-1] * h
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == h:
            return True
        a = order[i]
        for w in W:
            if w in used or G.degree_in(w, W) != H.degree(a):
                continue
            if all(G.adjacent(w, image[b]) == H.adjacent(a, b) for b in order[:i]):
                image[a] = w
                used.add(w)
                if rec(i + 1):
                    return True
                used.discard(w)
        return False

    return rec(0)


def induced_copies(G: SimpleGraph, H: SimpleGraph) -> Iterator[tuple[int, ...]]:
    """Vertex subsets ``W`` of ``G`` (lexicographic) with ``G[W]`` isomorphic to ``H``."""
    target_degrees = sorted(H.degree(a) for a in range(H.n))
    ne = len(H.edges)
    for W in combinations(range(G.n), H.n):
        edges = sum(1 for a, b in combinations(W, 2) if G.adjacent(a, b))
        if edges != ne:
            continue
        if sorted(G.degree_in(w, W) for w in W) != target_degrees:
            continue
        if _induced_isomorphic(G, W, H):
            yield W


def _normalise(G: SimpleGraph, colouring: Mapping[tuple[int, int], int]) -> EdgeColouring:
    col = {(min(u, v), max(u, v)): c for (u, v), c in colouring.items()}
    missing = [e for e in G.sorted_edges() if e not in col]
    if missing:
        raise ColouringIncomplete(f"edges without a colour: {missing[:5]}")
    return col


def has_mono_induced_motif(
    G: SimpleGraph, colouring: Mapping[tuple[int, int], int], H: SimpleGraph
) -> bool:
    col = _normalise(G, colouring)
    for W in induced_copies(G, H):
        colours = {col[(a, b)] for a, b in combinations(W, 2) if G.adjacent(a, b)}
        if len(colours) <= 1:
            return True
    return False


def ramsey_check(
    G: SimpleGraph, k: int, H: SimpleGraph, budget: int | None = None
) -> MotifVerdict:
    """Does every ``k``-colouring of ``E(G)`` contain a monochromatic induced copy of ``H``?"""
    if k < 1:
        raise ValueError("need at least one colour")
    edges = G.sorted_edges()
    check_budget(k ** max(len(edges) - 1, 0), budget)
    copies = list(induced_copies(G, H))
    copy_edges = [[(a, b) for a, b in combinations(W, 2) if G.adjacent(a, b)] for W in copies]
    for rest in product(range(k), repeat=max(len(edges) - 1, 0)):
        col = dict(zip(edges, (0, *rest) if edges else ()))
        if not any(len({col[e] for e in ce}) <= 1 for ce in copy_edges):
            return MotifVerdict(False, col)
    return MotifVerdict(True)


# quasi-monochromatic triangles in every colouring ------------------------------------


def has_quasi_mono_triangle(P: PatternTournament, colouring: Mapping[tuple[int, int], int]) -> bool:
    for a, b, c in directed_triangles(P.to_tournament()):
        if len({colouring[(a, b)], colouring[(b, c)], colouring[(c, a)]}) <= 2:
            return True
    return False


def check_quasi_mono_c3_all_colourings(
    P: PatternTournament, k: int, budget: int | None = None
) -> MotifVerdict:
    """Does every ``k``-colouring of ``P``'s arcs contain a quasi-monochromatic directed triangle?"""
    if k < 1:
        raise ValueError("need at least one colour")
    arcs = sorted(P.arcs())
    check_budget(k ** max(len(arcs) - 1, 0), budget)
    tris = [((a, b), (b, c), (c, a)) for a, b, c in directed_triangles(P.to_tournament())]
    for rest in product(range(k), repeat=max(len(arcs) - 1, 0)):
        col = dict(zip(arcs, (0, *rest) if arcs else ()))
        if not any(len({col[x], col[y], col[z]}) <= 2 for x, y, z in tris):
            return MotifVerdict(False, col)
    return MotifVerdict(True)


def coloured_pattern(P: PatternTournament, k: int, colouring: Mapping[tuple[int, int], int]) -> ColouredTournament:
    return ColouredTournament(P.m, k, ((a, b, colouring[(a, b)]) for a, b in P.arcs()))


# orientations of a cycle --------------------------------------------------------------


def oriented_cycle_arcs(forward: Sequence[bool]) -> list[tuple[int, int]]:
    """Arcs of the cycle ``0..L-1``; edge ``i`` joins ``i`` and ``i+1 mod L``, forward means ``i -> i+1``."""
    L = len(forward)
    return [(i, (i + 1) % L) if f else ((i + 1) % L, i) for i, f in enumerate(forward)]


def directed_two_path(arcs: Sequence[tuple[int, int]]) -> tuple[int, int, int] | None:
    """Some ``(u, v, w)`` with ``u -> v`` and ``v -> w`` both in ``arcs``, if one exists."""
    for u, v in arcs:
        for x, w in arcs:
            if x == v and w != u:
                return u, v, w
    return None


def cycle_orientations_without_two_path(L: int = 5) -> list[tuple[bool, ...]]:
    """All orientations of an ``L``-cycle whose arcs contain no directed path of length two."""
    return [f for f in product((True, False), repeat=L) if directed_two_path(oriented_cycle_arcs(f)) is None]
