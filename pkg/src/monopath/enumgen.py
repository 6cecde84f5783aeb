"""Exhaustive and seeded random generation of instances, plus canonical keys.

Random generator
----------------
``RNG_NAME = "mt19937-v1"``: a ``random.Random(seed)`` (Mersenne Twister)
is consumed pair by pair over ``(i, j)``, ``i < j`` in lexicographic order.
For tournaments each pair draws ``getrandbits(1)`` (0 means ``i -> j``)
and then ``randrange(k)`` for the colour.  Changing this recipe changes every
seeded stream and must bump the version suffix.

Canonical keys
--------------
A relabeling puts vertex ``perm[p]`` at position ``p``.  Its serialization
lists the pairs of positions column by column, ``(0,1), (0,2), (1,2),
(0,3), ...``, each as the symbol ``2*colour + (0 if forward else 1)``.
The key is the least serialization over all ``n!`` relabelings, found by
branch and bound: placing position ``p`` fixes exactly the next ``p``
symbols, so a partial placement whose prefix already exceeds the best is cut.
"""

from __future__ import annotations

import os
import random
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .duo import PatternTournament
from .errors import BudgetExceeded
from .model import NO_ARC, ColouredTournament, Digraph, SimpleGraph, relabel

RNG_NAME = "mt19937-v1"
DEFAULT_BUDGET = 1 << 24
MAX_CANONICAL_N = 8


def current_budget() -> int:
    env = os.environ.get("MONOPATH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(count: int, budget: int | None = None) -> None:
    budget = current_budget() if budget is None else budget
    if count > budget:
        raise BudgetExceeded(count, budget)


# canonical keys ------------------------------------------------------------------------


def _symbol(T: ColouredTournament, a: int, b: int) -> int:
    c = T.matrix[a][b]
    return 2 * c if c != NO_ARC else 2 * T.matrix[b][a] + 1


def canonical_labeling(T: ColouredTournament) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(symbols, perm)``: the least serialization and a position -> vertex map attaining it."""
    n = T.n
    if n > MAX_CANONICAL_N:
        raise ValueError(f"canonical keys are only computed for n <= {MAX_CANONICAL_N}")
    sym = [[_symbol(T, a, b) if a != b else -1 for b in range(n)] for a in range(n)]
    best: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    prefix: list[int] = []
    used = [False] * n

    def rec() -> None:
        nonlocal best, best_perm
        p = len(perm)
        if p == n:
            if best is None or prefix < best:
                best = prefix.copy()
                best_perm = perm.copy()
            return
        for v in range(n):
            if used[v]:
                continue
            seg = [sym[perm[i]][v] for i in range(p)]
            start = len(prefix)
            if best is not None:
                ref = best[start : start + p]
                head = prefix  # equal-or-less than best[:start] by construction
                if head == best[:start] and seg > ref:
                    continue
            prefix.extend(seg)
            perm.append(v)
            used[v] = True
            rec()
            used[v] = False
            perm.pop()
            del prefix[start:]

    rec()
    return tuple(best or ()), tuple(best_perm)


def canonical_key(T: ColouredTournament) -> bytes:
    symbols, _ = canonical_labeling(T)
    if T.k > 127:
        raise ValueError("canonical keys support at most 127 colours")
    return bytes([T.n, T.k, *symbols])


def canonical_form(T: ColouredTournament) -> ColouredTournament:
    """The relabeling of ``T`` whose serialization is its canonical key."""
    _, perm = canonical_labeling(T)
    inverse = [0] * T.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return relabel(T, inverse)


# tournaments -----------------------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def tournament_from_bits(n: int, flips: Sequence[int], k: int = 1) -> ColouredTournament:
    """Orientation with ``flips[t] = 1`` reversing the ``t``-th lexicographic pair; all colour 0."""
    return ColouredTournament(
        n, k, ((j, i, 0) if f else (i, j, 0) for (i, j), f in zip(_pairs(n), flips, strict=True))
    )


def enumerate_tournaments(
    n: int, canonical: bool = False, budget: int | None = None, prefix: Sequence[int] = ()
) -> Iterator[ColouredTournament]:
    """All one-coloured tournaments on ``n`` vertices.

    Labelled mode walks the flip vectors in lexicographic order, optionally
    only those starting with ``prefix`` (shards by prefix partition the
    stream).  Canonical mode yields one canonical form per isomorphism
    class, sorted by key.
    """
    if canonical:
        if n > MAX_CANONICAL_N - 1:
            raise ValueError(f"canonical enumeration supports n <= {MAX_CANONICAL_N - 1}")
        yield from _canonical_classes(n)
        return
    free = len(_pairs(n)) - len(prefix)
    check_budget(2**free, budget)
    for rest in product((0, 1), repeat=free):
        yield tournament_from_bits(n, (*prefix, *rest))


@lru_cache(maxsize=None)
def _canonical_classes(n: int) -> tuple[ColouredTournament, ...]:
    if n <= 1:
        return (ColouredTournament(n, 1, ()),)
    found: dict[bytes, ColouredTournament] = {}
    for R in _canonical_classes(n - 1):
        base = list(R.arcs())
        for pattern in range(1 << (n - 1)):
            # bit v set: new vertex points to v
            arcs = base + [
                (n - 1, v, 0) if pattern >> v & 1 else (v, n - 1, 0) for v in range(n - 1)
            ]
            form = canonical_form(ColouredTournament(n, 1, arcs))
            key = canonical_key(form)
            found.setdefault(key, form)
    return tuple(found[key] for key in sorted(found))


def enumerate_colourings(
    T: ColouredTournament, k: int, first_fixed: bool = False, budget: int | None = None
) -> Iterator[ColouredTournament]:
    """Every ``k``-colouring of ``T``'s orientation, arcs in ``T.arcs()`` order, last arc fastest."""
    if k < 1:
        raise ValueError("need at least one colour")
    m = T.n * (T.n - 1) // 2
    fixed = 1 if first_fixed and m else 0
    check_budget(k ** (m - fixed), budget)
    for rest in product(range(k), repeat=m - fixed):
        yield T.with_colours(k, (0,) * fixed + rest)


# random instances --------------------------------------------------------------------


def random_instance(n: int, k: int, seed: int) -> ColouredTournament:
    if k < 1:
        raise ValueError("need at least one colour")
    rng = random.Random(seed)
    arcs = []
    for i, j in _pairs(n):
        flip = rng.getrandbits(1)
        c = rng.randrange(k)
        arcs.append((j, i, c) if flip else (i, j, c))
    return ColouredTournament(n, k, arcs)


def random_pattern(m: int, seed: int) -> PatternTournament:
    return PatternTournament.from_tournament(random_instance(m, 1, seed))


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair ``(u, v)``, ``u != v``, is an arc with probability ``p``."""
    rng = random.Random(seed)
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    return SimpleGraph(n, [e for e in _pairs(n) if rng.random() < p])
