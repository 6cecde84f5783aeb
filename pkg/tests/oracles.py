"""Brute-force reference implementations used only by the tests.

They work from ``has_arc``/``colour`` queries and plain enumeration, never
from the package's bitmasks or search helpers.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations, product

from monopath.model import ColouredTournament, Digraph


def simple_mono_paths(T: ColouredTournament, u: int, max_len: int):
    """Every simple monochromatic path from ``u`` with at most ``max_len`` arcs, as vertex tuples."""
    out = [(u,)]

    def grow(path, colour):
        if len(path) - 1 == max_len:
            return
        for w in range(T.n):
            if w in path or not T.has_arc(path[-1], w):
                continue
            c = T.colour(path[-1], w)
            if colour is not None and c != colour:
                continue
            out.append(path + (w,))
            grow(path + (w,), c)

    grow((u,), None)
    return out


def reach_within_oracle(T, u, v, L) -> bool:
    return any(p[-1] == v for p in simple_mono_paths(T, u, L))


def reach_any_oracle(T, u, v) -> bool:
    return reach_within_oracle(T, u, v, max(T.n - 1, 0))


def forbidding_oracle(T) -> set:
    return {(u, v) for u, v, _ in T.arcs() if not reach_within_oracle(T, v, u, 2)}


def set_key(vs):
    return tuple(sorted(vs)) + (math.inf,)


def reach2_table(T):
    return [[reach_within_oracle(T, u, v, 2) for v in range(T.n)] for u in range(T.n)]


def duo_ok(table, n, K, S) -> bool:
    return all(any(table[x][v] for x in K) or any(table[v][y] for y in S) for v in range(n))


def min_duo_oracle(T, table=None):
    """Enumerate every disjoint (K, S) as a vertex labelling, sort, return the first valid."""
    n = T.n
    table = table or reach2_table(T)
    pairs = []
    for lab in product((0, 1, 2), repeat=n):
        K = tuple(v for v in range(n) if lab[v] == 1)
        S = tuple(v for v in range(n) if lab[v] == 2)
        pairs.append((len(K) + len(S), set_key(K), set_key(S), K, S))
    pairs.sort()
    for size, _, _, K, S in pairs:
        if duo_ok(table, n, K, S):
            return size, K, S
    raise AssertionError("K = V always works")


def min_absorbing_oracle(T):
    n = T.n
    reach = [[reach_any_oracle(T, u, v) for v in range(n)] for u in range(n)]
    for size in range(1, n + 1):
        for S in combinations(range(n), size):
            if all(any(reach[v][s] for s in S) for v in range(n)):
                return size, S
    raise AssertionError("V always absorbs")


def within_two_uncoloured(D: Digraph, a: int, b: int) -> bool:
    return a == b or D.has_arc(a, b) or any(D.has_arc(a, w) and D.has_arc(w, b) for w in range(D.n))


def independent(D: Digraph, vs) -> bool:
    return not any(D.has_arc(a, b) or D.has_arc(b, a) for a, b in combinations(vs, 2))


def quasi_kernel_oracle(D: Digraph):
    for size in range(D.n + 1):
        for K in combinations(range(D.n), size):
            if independent(D, K) and all(any(within_two_uncoloured(D, x, v) for x in K) for v in range(D.n)):
                return K
    raise AssertionError("no quasi-kernel")


def partition_duo_oracle(D: Digraph):
    n = D.n
    pairs = []
    for lab in product((0, 1, 2), repeat=n):
        K = tuple(v for v in range(n) if lab[v] == 1)
        S = tuple(v for v in range(n) if lab[v] == 2)
        pairs.append((len(K) + len(S), set_key(K), set_key(S), K, S))
    pairs.sort()
    for _, _, _, K, S in pairs:
        if not (independent(D, K) and independent(D, S)):
            continue
        if all(
            any(within_two_uncoloured(D, x, v) for x in K) or any(within_two_uncoloured(D, v, y) for y in S)
            for v in range(n)
        ):
            return K, S
    raise AssertionError("no partition duo")


def brute_canonical_key(T: ColouredTournament) -> tuple:
    """Least column-major symbol string over all ``n!`` relabelings."""
    best = None
    for perm in permutations(range(T.n)):
        s = []
        for p in range(1, T.n):
            for i in range(p):
                a, b = perm[i], perm[p]
                s.append(2 * T.colour(a, b) if T.has_arc(a, b) else 2 * T.colour(b, a) + 1)
        s = tuple(s)
        if best is None or s < best:
            best = s
    return best


def count_tournament_classes_by_orbits(n: int) -> int:
    """Isomorphism classes of labelled n-tournaments, by marking whole relabeling orbits."""
    pairs = list(combinations(range(n), 2))
    index = {p: t for t, p in enumerate(pairs)}
    m = len(pairs)
    seen = bytearray(1 << m)
    perms = list(permutations(range(n)))
    classes = 0
    for code in range(1 << m):
        if seen[code]:
            continue
        classes += 1
        arcs = [(j, i) if code >> t & 1 else (i, j) for t, (i, j) in enumerate(pairs)]
        for perm in perms:
            img = 0
            for a, b in arcs:
                x, y = perm[a], perm[b]
                if x > y:
                    img |= 1 << index[(y, x)]
            seen[img] = 1
    return classes
