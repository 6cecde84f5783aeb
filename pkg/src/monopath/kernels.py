"""Absorbing sets, quasi-kernels and the classical sufficient conditions, as exact oracles.

Absorption uses monochromatic paths of any length toward the set.  The
uncoloured quasi-kernel covers *forward*: every vertex outside ``K`` is
reached from ``K`` by a path of at most two arcs.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, permutations
from typing import Iterable, Iterator

from ._search import coverers_of, least_cover, min_two_sided
from .enumgen import check_budget, enumerate_colourings, enumerate_tournaments
from .errors import VertexOutOfRange
from .model import ColouredTournament, Digraph, bits, to_mask
from .reach import directed_triangles, mono_closure


def is_absorbing(T: ColouredTournament, S: Iterable[int]) -> bool:
    smask = to_mask(S)
    if smask >> T.n:
        raise VertexOutOfRange(f"absorbing set {sorted(S)} leaves 0..{T.n - 1}")
    return all(reach & smask for reach in mono_closure(T))


def min_absorbing(T: ColouredTournament) -> tuple[int, tuple[int, ...]]:
    """Smallest absorbing set, lexicographically least among those of that size."""
    n = T.n
    if n < 1:
        raise ValueError("min_absorbing needs at least one vertex")
    closure = mono_closure(T)
    common = (1 << n) - 1
    for reach in closure:
        common &= reach
    if common:
        return 1, ((common & -common).bit_length() - 1,)
    # choosing s absorbs every v whose closure contains s
    absorbs = coverers_of(closure, n)
    full = (1 << n) - 1
    for size in range(2, n + 1):
        S = least_cover(absorbs, closure, full, full, size)
        if S is not None:
            return size, S
    raise AssertionError("the full vertex set is always absorbing")


# uncoloured quasi-kernels ----------------------------------------------------------


def _two_step_out(D: Digraph) -> list[int]:
    res = []
    for x in range(D.n):
        m = (1 << x) | D.out_mask(x)
        for w in bits(D.out_mask(x)):
            m |= D.out_mask(w)
        res.append(m)
    return res


def _two_step_in(D: Digraph) -> list[int]:
    res = []
    for x in range(D.n):
        m = (1 << x) | D.in_mask(x)
        for w in bits(D.in_mask(x)):
            m |= D.in_mask(w)
        res.append(m)
    return res


def _neighbours(D: Digraph) -> list[int]:
    return [D.out_mask(x) | D.in_mask(x) for x in range(D.n)]


def is_independent(D: Digraph, members: Iterable[int]) -> bool:
    members = list(members)
    return not any(D.has_arc(a, b) or D.has_arc(b, a) for a, b in combinations(members, 2))


def quasi_kernel(D: Digraph) -> tuple[int, ...]:
    """Smallest independent set reaching every vertex within two arcs; lexicographically least."""
    n = D.n
    full = (1 << n) - 1
    cover = _two_step_out(D)
    covered_by = coverers_of(cover, n)
    nbr = _neighbours(D)
    for size in range(n + 1):
        K = least_cover(cover, covered_by, full, full, size, conflict=nbr)
        if K is not None:
            return K
    raise AssertionError(f"no quasi-kernel found for {D!r}")


def quasi_partition_duo(D: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Disjoint independent ``K``, ``S``: every vertex is within two arcs from ``K`` or to ``S``.

    Minimum ``|K| + |S|``; ties broken as in :func:`monopath.duo.min_duo`.
    """
    found = min_two_sided(D.n, _two_step_out(D), _two_step_in(D), D.n, conflict=_neighbours(D))
    if found is None:
        raise AssertionError(f"no quasi-kernel/quasi-sink pair for {D!r}")
    return found


# sufficient conditions for an absorbing vertex -----------------------------------------


def _quasi_mono(colours: list[int]) -> bool:
    return max(colours.count(c) for c in set(colours)) >= len(colours) - 1


def directed_four_cycles(T: ColouredTournament) -> Iterator[tuple[int, int, int, int]]:
    """Directed 4-cycles, each once, started at their smallest vertex."""
    for quad in combinations(range(T.n), 4):
        a, rest = quad[0], quad[1:]
        for x, y, z in permutations(rest):
            if T.has_arc(a, x) and T.has_arc(x, y) and T.has_arc(y, z) and T.has_arc(z, a):
                yield a, x, y, z


def gs_violations(T: ColouredTournament) -> Iterator[tuple[int, ...]]:
    """Directed 3- and 4-cycles that are not quasi-monochromatic."""
    for cyc in list(directed_triangles(T)) + list(directed_four_cycles(T)):
        cols = [T.colour(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        if not _quasi_mono(cols):
            yield cyc


def gs_condition(T: ColouredTournament) -> bool:
    return next(gs_violations(T), None) is None


def polychromatic_triples(T: ColouredTournament) -> Iterator[tuple[int, int, int]]:
    """Vertex triples whose three connecting arcs carry three different colours."""
    m = T.matrix
    for a, b, c in combinations(range(T.n), 3):
        cols = {max(m[a][b], m[b][a]), max(m[b][c], m[c][b]), max(m[a][c], m[c][a])}
        if len(cols) == 3:
            yield a, b, c


def minggang_condition(T: ColouredTournament) -> bool:
    if T.k <= 2:
        return True
    return next(polychromatic_triples(T), None) is None


# scanning for large minimum absorbing sets --------------------------------------------------


def _first_above(args: tuple[ColouredTournament, int, int]) -> tuple[ColouredTournament, int, tuple[int, ...]] | None:
    orientation, k, target = args
    for T in enumerate_colourings(orientation, k, first_fixed=True, budget=float("inf")):
        size, S = min_absorbing(T)
        if size > target:
            return T, size, S
    return None


def scan_absorbing_above(
    k: int, n: int, target: int, jobs: int = 1, budget: int | None = None
) -> tuple[ColouredTournament, int, tuple[int, ...]] | None:
    """First ``k``-coloured tournament on ``n`` vertices whose minimum absorbing set exceeds ``target``.

    Scans canonical orientations in key order, each under all colourings with
    the first arc fixed to colour 0 (absorption ignores colour names).  The
    reported instance is the first in that order for any ``jobs``.
    """
    classes = list(enumerate_tournaments(n, canonical=True))
    m = n * (n - 1) // 2
    check_budget(len(classes) * k ** max(m - 1, 0), budget)
    work = [(T, k, target) for T in classes]
    if jobs <= 1:
        results: Iterable = map(_first_above, work)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_first_above, work)
    try:
        for hit in results:
            if hit is not None:
                return hit
        return None
    finally:
        if jobs > 1:
            pool.shutdown(cancel_futures=True)
