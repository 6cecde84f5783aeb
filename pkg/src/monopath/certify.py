"""Independent re-checking of certificates emitted by the CLI.

Nothing here calls a search routine or reuses its bitmask bookkeeping:
coverage is rebuilt pairwise from ``mono_reach_within``/``mono_reach_any``
and ``Digraph.has_arc``, and motif witnesses are replayed by brute force
over vertex subsets and bijections.
"""

from __future__ import annotations

import hashlib
from itertools import combinations, permutations, product
from math import comb

from .enumgen import check_budget
from .errors import FormatError
from .model import ColouredTournament, Digraph, SimpleGraph, parse_instance
from .reach import mono_reach_any, mono_reach_within, quasi_mono_triangles

KINDS = ("duo", "embedding", "absorbing", "witness-colouring", "quasi-kernel", "partition-duo")


class CertificateError(FormatError):
    """Certificate JSON is structurally unusable (wrong kind, missing fields)."""


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _vertices(cert: dict, field: str, n: int) -> list[int]:
    try:
        vs = [int(v) for v in cert.get(field, [])]
    except (TypeError, ValueError):
        raise CertificateError(f"field {field!r} must be a list of integers") from None
    if any(not 0 <= v < n for v in vs) or len(set(vs)) != len(vs):
        raise CertificateError(f"field {field!r} has repeated or out-of-range vertices")
    return vs


def _expect(inst, cls, kind: str):
    if not isinstance(inst, cls):
        raise CertificateError(f"a {kind} certificate needs a {cls.__name__} instance")
    return inst


def verify_certificate(instance_bytes: bytes, cert: dict) -> tuple[bool, str]:
    """Return ``(valid, reason)``.  Raises ``CertificateError`` on malformed input."""
    if not isinstance(cert, dict) or cert.get("type") not in KINDS:
        raise CertificateError(f"unknown certificate type {cert.get('type') if isinstance(cert, dict) else cert!r}")
    want = cert.get("input_digest")
    if want is not None and want != digest(instance_bytes):
        return False, "input digest does not match the instance file"
    inst = parse_instance(instance_bytes)
    kind = cert["type"]
    if kind == "duo":
        return _check_duo(_expect(inst, ColouredTournament, kind), cert)
    if kind == "embedding":
        return _check_embedding(_expect(inst, ColouredTournament, kind), cert)
    if kind == "absorbing":
        return _check_absorbing(_expect(inst, ColouredTournament, kind), cert)
    if kind == "quasi-kernel":
        return _check_quasi_kernel(_expect(inst, Digraph, kind), cert)
    if kind == "partition-duo":
        return _check_partition_duo(_expect(inst, Digraph, kind), cert)
    return _check_witness_colouring(inst, cert)


# coloured tournaments ---------------------------------------------------------------------


def _reach2_table(T: ColouredTournament) -> list[list[bool]]:
    return [[mono_reach_within(T, u, v, 2) for v in range(T.n)] for u in range(T.n)]


def _duo_covers(table: list[list[bool]], n: int, K, S) -> bool:
    return all(any(table[x][v] for x in K) or any(table[v][y] for y in S) for v in range(n))


def _check_duo(T: ColouredTournament, cert: dict) -> tuple[bool, str]:
    K = _vertices(cert, "K", T.n)
    S = _vertices(cert, "S", T.n)
    if set(K) & set(S):
        return False, "K and S intersect"
    table = _reach2_table(T)
    if not _duo_covers(table, T.n, K, S):
        return False, "some vertex is not covered by the duo"
    size = len(K) + len(S)
    if "size" in cert and int(cert["size"]) != size:
        return False, f"claimed size {cert['size']} but |K|+|S| = {size}"
    if cert.get("minimum"):
        check_budget(sum(comb(T.n, s) * 2**s for s in range(size)))
        for s in range(size):
            for U in combinations(range(T.n), s):
                for sides in product((0, 1), repeat=s):
                    K2 = [u for u, b in zip(U, sides) if b == 0]
                    S2 = [u for u, b in zip(U, sides) if b == 1]
                    if _duo_covers(table, T.n, K2, S2):
                        return False, f"a smaller duo exists: K={K2} S={S2}"
    return True, f"duo of size {size} covers all {T.n} vertices"


def _check_embedding(T: ColouredTournament, cert: dict) -> tuple[bool, str]:
    try:
        m = int(cert["pattern"]["m"])
        parc = [(int(i), int(j)) for i, j in cert["pattern"]["arcs"]]
    except (KeyError, TypeError, ValueError):
        raise CertificateError("embedding certificate needs pattern.m and pattern.arcs") from None
    images = _vertices(cert, "images", T.n)
    if len(images) != m:
        return False, f"{len(images)} images for a {m}-vertex pattern"
    pairs = {frozenset(a) for a in parc}
    if len(parc) != m * (m - 1) // 2 or len(pairs) != len(parc) or any(i == j for i, j in parc):
        return False, "pattern is not a tournament"
    for i, j in parc:
        a, b = images[i], images[j]
        if not T.has_arc(a, b):
            return False, f"pattern arc {i}->{j} maps to host arc {b}->{a}"
        if mono_reach_within(T, b, a, 2):
            return False, f"host arc {a}->{b} is not forbidding"
    return True, f"pattern of {m} vertices embeds into forbidding arcs"


def _check_absorbing(T: ColouredTournament, cert: dict) -> tuple[bool, str]:
    S = _vertices(cert, "S", T.n)

    def absorbs(cand) -> bool:
        return all(any(mono_reach_any(T, v, s) for s in cand) for v in range(T.n))

    if not absorbs(S):
        return False, "some vertex reaches no member of S monochromatically"
    if "size" in cert and int(cert["size"]) != len(S):
        return False, f"claimed size {cert['size']} but |S| = {len(S)}"
    if cert.get("minimum"):
        check_budget(sum(comb(T.n, s) for s in range(len(S))))
        for s in range(len(S)):
            for cand in combinations(range(T.n), s):
                if absorbs(cand):
                    return False, f"a smaller absorbing set exists: {list(cand)}"
    return True, f"absorbing set of size {len(S)}"


# digraphs -----------------------------------------------------------------------------------


def _within_two(D: Digraph, a: int, b: int) -> bool:
    return a == b or D.has_arc(a, b) or any(D.has_arc(a, w) and D.has_arc(w, b) for w in range(D.n))


def _independent(D: Digraph, vs) -> bool:
    return not any(D.has_arc(a, b) or D.has_arc(b, a) for a, b in combinations(vs, 2))


def _check_quasi_kernel(D: Digraph, cert: dict) -> tuple[bool, str]:
    K = _vertices(cert, "K", D.n)
    if not _independent(D, K):
        return False, "K is not independent"
    for v in range(D.n):
        if not any(_within_two(D, x, v) for x in K):
            return False, f"vertex {v} is not reached from K within two arcs"
    return True, f"independent set of size {len(K)} reaches every vertex within two arcs"


def _check_partition_duo(D: Digraph, cert: dict) -> tuple[bool, str]:
    K = _vertices(cert, "K", D.n)
    S = _vertices(cert, "S", D.n)
    if set(K) & set(S):
        return False, "K and S intersect"
    if not (_independent(D, K) and _independent(D, S)):
        return False, "K or S is not independent"
    for v in range(D.n):
        if not (any(_within_two(D, x, v) for x in K) or any(_within_two(D, v, y) for y in S)):
            return False, f"vertex {v} is covered neither from K nor toward S"
    return True, f"disjoint independent pair of total size {len(K) + len(S)} covers every vertex"


# witness colourings ------------------------------------------------------------------------


def _colouring(cert: dict, k: int) -> dict[tuple[int, int], int]:
    try:
        col = {(int(u), int(v)): int(c) for u, v, c in cert["colouring"]}
    except (KeyError, TypeError, ValueError):
        raise CertificateError("witness colouring needs a list of [u, v, c] triples") from None
    if any(not 0 <= c < k for c in col.values()):
        raise CertificateError(f"witness uses a colour outside 0..{k - 1}")
    return col


def _check_witness_colouring(inst, cert: dict) -> tuple[bool, str]:
    k = int(cert.get("k", 0))
    if k < 1:
        raise CertificateError("witness colouring needs k >= 1")
    col = _colouring(cert, k)
    prop = cert.get("property")
    if prop == "quasi-mono-c3":
        P = _expect(inst, ColouredTournament, "quasi-mono-c3 witness")
        if set(col) != {(u, v) for u, v, _ in P.arcs()}:
            return False, "colouring does not match the pattern's arcs"
        coloured = ColouredTournament(P.n, k, ((u, v, col[(u, v)]) for u, v, _ in P.arcs()))
        tri = next(quasi_mono_triangles(coloured), None)
        if tri is not None:
            return False, f"colouring contains quasi-monochromatic triangle {tri.cycle}"
        return True, "colouring has no quasi-monochromatic directed triangle"
    if prop == "mono-induced-motif":
        G = _expect(inst, SimpleGraph, "motif witness")
        try:
            H = SimpleGraph(int(cert["motif"]["n"]), [tuple(e) for e in cert["motif"]["edges"]])
        except (KeyError, TypeError, ValueError):
            raise CertificateError("motif witness needs motif.n and motif.edges") from None
        if set(col) != set(G.edges):
            return False, "colouring does not match the graph's edges"
        for W in combinations(range(G.n), H.n):
            for image in permutations(W):
                same = all(
                    G.adjacent(image[a], image[b]) == H.adjacent(a, b)
                    for a, b in combinations(range(H.n), 2)
                )
                if not same:
                    continue
                cols = {col[(min(image[a], image[b]), max(image[a], image[b]))] for a, b in H.edges}
                if len(cols) <= 1:
                    return False, f"monochromatic induced copy on vertices {list(W)}"
        return True, "colouring has no monochromatic induced copy of the motif"
    raise CertificateError(f"unknown witness property {prop!r}")
