"""Lexicographically ordered exact covering searches shared by the minimum solvers."""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .model import bits


def set_key(vertices: Iterable[int]) -> tuple[float, ...]:
    """Sorted tuple plus an end marker that sorts after every vertex.

    Equivalent to comparing indicator vectors with "member" before
    "non-member": ``{0, 1} < {0, 2} < {0} < {1} < {}``.
    """
    return tuple(sorted(vertices)) + (math.inf,)


def subsets_in_key_order(
    n: int, max_size: int, conflict: Sequence[int] | None = None
) -> Iterator[tuple[int, ...]]:
    """Subsets of ``0..n-1`` with at most ``max_size`` members, in :func:`set_key` order.

    With ``conflict``, only sets containing no pair ``x, y`` with ``y`` in
    ``conflict[x]`` are produced.
    """
    chosen: list[int] = []

    def rec(v: int, blocked: int) -> Iterator[tuple[int, ...]]:
        if v == n or len(chosen) == max_size:
            yield tuple(chosen)
            return
        if not blocked >> v & 1:
            chosen.append(v)
            yield from rec(v + 1, blocked | (conflict[v] if conflict else 0))
            chosen.pop()
        yield from rec(v + 1, blocked)

    yield from rec(0, 0)


def coverers_of(cover_of: Sequence[int], n: int) -> list[int]:
    """Transpose: ``result[u]`` = mask of ``y`` whose ``cover_of[y]`` contains ``u``."""
    res = [0] * n
    for y in range(n):
        for u in bits(cover_of[y]):
            res[u] |= 1 << y
    return res


def least_cover(
    cover_of: Sequence[int],
    coverers: Sequence[int],
    avail: int,
    target: int,
    size: int,
    conflict: Sequence[int] | None = None,
) -> tuple[int, ...] | None:
    """Lexicographically least ``size``-subset of ``avail`` whose covers union to ``target``.

    ``conflict[y]`` lists vertices that may not be chosen together with ``y``.
    """
    chosen: list[int] = []

    def rec(start: int, left: int, todo: int, pool: int) -> bool:
        if left == 0:
            return not todo
        pool = pool >> start << start
        if pool.bit_count() < left:
            return False
        if todo:
            u = (todo & -todo).bit_length() - 1
            if not coverers[u] & pool:
                return False
        for y in bits(pool):
            chosen.append(y)
            nxt_pool = pool & ~conflict[y] if conflict else pool
            if rec(y + 1, left - 1, todo & ~cover_of[y], nxt_pool):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if rec(0, size, target, avail) else None


def min_two_sided(
    n: int,
    king_cover: Sequence[int],
    serf_cover: Sequence[int],
    limit: int,
    conflict: Sequence[int] | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Least ``(K, S)`` by (size, key(K), key(S)) with ``K``, ``S`` disjoint covering all vertices.

    Returns ``None`` when no such pair of total size ``<= limit`` exists.
    """
    full = (1 << n) - 1
    serf_coverers = coverers_of(serf_cover, n)
    for s in range(limit + 1):
        for K in subsets_in_key_order(n, s, conflict):
            cov = 0
            kmask = 0
            for x in K:
                cov |= king_cover[x]
                kmask |= 1 << x
            need = s - len(K)
            residual = full & ~cov
            if need == 0:
                if not residual:
                    return K, ()
                continue
            S = least_cover(serf_cover, serf_coverers, full & ~kmask, residual, need, conflict)
            if S is not None:
                return K, S
    return None
