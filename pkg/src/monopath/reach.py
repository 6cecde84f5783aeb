"""Monochromatic reachability, forbidding arcs and quasi-monochromatic triangles.

A path of length 0 (``u`` to itself) counts as monochromatic.  Over one
colour class, reachability by walks equals reachability by simple paths
(a shortest walk never repeats a vertex), so bounded breadth-first search
and per-colour closures are exact for the simple-path semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import VertexOutOfRange
from .model import NO_ARC, ColouredTournament, bits

ArcSet = frozenset  # frozenset[tuple[int, int]] of host arcs


def _check(T: ColouredTournament, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < T.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{T.n - 1}")


def mono_reach_within(T: ColouredTournament, u: int, v: int, L: int) -> bool:
    """True iff a monochromatic directed path of at most ``L`` arcs runs from ``u`` to ``v``."""
    _check(T, u, v)
    if L < 0:
        raise ValueError("length bound must be non-negative")
    if u == v:
        return True
    if L == 0:
        return False
    if T.has_arc(u, v):
        return True
    target = 1 << v
    for c in range(T.k):
        seen = frontier = 1 << u
        for _ in range(L):
            nxt = 0
            for w in bits(frontier):
                nxt |= T.out_mask(w, c)
            nxt &= ~seen
            if nxt & target:
                return True
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
    return False


@lru_cache(maxsize=512)
def reach2_out(T: ColouredTournament) -> tuple[int, ...]:
    """``R[u]`` = mask of vertices reachable from ``u`` by a monochromatic path of length <= 2."""
    res = []
    for u in range(T.n):
        m = (1 << u) | T.out_mask(u)
        for c in range(T.k):
            for w in bits(T.out_mask(u, c)):
                m |= T.out_mask(w, c)
        res.append(m)
    return tuple(res)


@lru_cache(maxsize=512)
def reach2_in(T: ColouredTournament) -> tuple[int, ...]:
    """``R[v]`` = mask of vertices that reach ``v`` by a monochromatic path of length <= 2."""
    res = []
    for v in range(T.n):
        m = (1 << v) | T.in_mask(v)
        for c in range(T.k):
            for w in bits(T.in_mask(v, c)):
                m |= T.in_mask(w, c)
        res.append(m)
    return tuple(res)


@lru_cache(maxsize=512)
def mono_closure(T: ColouredTournament) -> tuple[int, ...]:
    """``C[u]`` = mask of vertices reachable from ``u`` by a monochromatic path of any length."""
    n = T.n
    total = [1 << u for u in range(n)]
    for c in range(T.k):
        for u in range(n):
            seen = frontier = 1 << u
            while frontier:
                nxt = 0
                for w in bits(frontier):
                    nxt |= T.out_mask(w, c)
                frontier = nxt & ~seen
                seen |= frontier
            total[u] |= seen
    return tuple(total)


def mono_reach_any(T: ColouredTournament, u: int, v: int) -> bool:
    _check(T, u, v)
    return bool(mono_closure(T)[u] >> v & 1)


@lru_cache(maxsize=512)
def forbidding_masks(T: ColouredTournament) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(fout, fin)``: ``fout[u]`` holds every ``v`` with ``u -> v`` forbidding, ``fin[v]`` every such ``u``."""
    r_in = reach2_in(T)
    r_out = reach2_out(T)
    fout = tuple(T.out_mask(u) & ~r_in[u] for u in range(T.n))
    fin = tuple(T.in_mask(v) & ~r_out[v] for v in range(T.n))
    return fout, fin


def forbidding_edges(T: ColouredTournament) -> ArcSet:
    """Arcs ``u -> v`` with no monochromatic path of length <= 2 from ``v`` back to ``u``."""
    fout, _ = forbidding_masks(T)
    return frozenset((u, v) for u in range(T.n) for v in bits(fout[u]))


def is_forbidding(T: ColouredTournament, u: int, v: int) -> bool:
    return T.has_arc(u, v) and not mono_reach_within(T, v, u, 2)


@dataclass(frozen=True)
class QuasiMonoTriangle:
    """Directed triangle ``a -> b -> c -> a`` with at least two arcs of one colour.

    ``distinguished`` is the off-colour arc, ``None`` when all three agree.
    """

    cycle: tuple[int, int, int]
    colours: tuple[int, int, int]
    distinguished: tuple[int, int] | None

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        a, b, c = self.cycle
        return (a, b), (b, c), (c, a)


def directed_triangles(T: ColouredTournament) -> Iterator[tuple[int, int, int]]:
    """Directed 3-cycles, each once, started at their smallest vertex."""
    m = T.matrix
    for a, b, c in combinations(range(T.n), 3):
        if m[a][b] != NO_ARC:
            if m[b][c] != NO_ARC and m[c][a] != NO_ARC:
                yield a, b, c
        elif m[a][c] != NO_ARC and m[c][b] != NO_ARC:
            yield a, c, b


def quasi_mono_triangles(T: ColouredTournament) -> Iterator[QuasiMonoTriangle]:
    m = T.matrix
    for a, b, c in directed_triangles(T):
        arcs = ((a, b), (b, c), (c, a))
        cols = tuple(m[x][y] for x, y in arcs)
        if len(set(cols)) == 3:
            continue
        odd = None
        for i in range(3):
            if cols[i] != cols[(i + 1) % 3] and cols[(i + 1) % 3] == cols[(i + 2) % 3]:
                odd = arcs[i]
        yield QuasiMonoTriangle((a, b, c), cols, odd)
