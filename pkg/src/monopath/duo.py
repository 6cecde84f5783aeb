"""King-serf duos: verification, exact minimum search, embed-or-duo construction, bounds.

A duo ``(K, S)`` covers ``v`` when ``v`` lies in ``K | S``, or some king
reaches ``v`` by a monochromatic path of length <= 2, or ``v`` reaches some
serf that way.

Ties between witnesses of equal size are broken by the set order
:func:`set_key`: sorted tuples compared with an end marker that sorts after
every vertex, i.e. indicator vectors compared with "member" before
"non-member".  Under it ``{0, 1} < {0, 2} < {0} < {1} < {}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Union

from ._search import min_two_sided, set_key
from .errors import NotFoundWithinCap, VertexOutOfRange
from .model import ColouredTournament, bits
from .reach import forbidding_masks, reach2_in, reach2_out

DIGIT_CAP = 10**6


@dataclass(frozen=True)
class Duo:
    K: frozenset[int]
    S: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "K", frozenset(self.K))
        object.__setattr__(self, "S", frozenset(self.S))
        if self.K & self.S:
            raise ValueError(f"kings and serfs overlap: {sorted(self.K & self.S)}")

    @property
    def size(self) -> int:
        return len(self.K) + len(self.S)

    def to_json(self) -> dict:
        return {"type": "duo", "K": sorted(self.K), "S": sorted(self.S)}


def duo_cover_mask(T: ColouredTournament, d: Duo) -> int:
    r_out, r_in = reach2_out(T), reach2_in(T)
    cov = 0
    for x in d.K:
        cov |= r_out[x]
    for y in d.S:
        cov |= r_in[y]
    return cov


def verify_duo(T: ColouredTournament, d: Duo) -> bool:
    for v in d.K | d.S:
        if not 0 <= v < T.n:
            raise VertexOutOfRange(f"duo vertex {v} not in 0..{T.n - 1}")
    return duo_cover_mask(T, d) == (1 << T.n) - 1


def min_duo(T: ColouredTournament, size_cap: int | None = None) -> tuple[int, Duo]:
    """Minimum-size duo, ties broken by :func:`set_key` on ``K`` then on ``S``."""
    limit = T.n if size_cap is None else min(size_cap, T.n)
    found = min_two_sided(T.n, reach2_out(T), reach2_in(T), limit)
    if found is None:
        raise NotFoundWithinCap(limit)
    K, S = found
    return len(K) + len(S), Duo(K, S)


# embed-or-duo construction ---------------------------------------------------


class PatternTournament:
    """Uncoloured tournament on ``0..m-1``; index order is the embedding order."""

    __slots__ = ("m", "_out")

    def __init__(self, m: int, arcs: Iterable[tuple[int, int]]):
        out = [0] * m
        for i, j in arcs:
            if i == j or not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"bad pattern arc {i}->{j}")
            if out[i] >> j & 1 or out[j] >> i & 1:
                raise ValueError(f"pattern pair {{{i}, {j}}} given twice")
            out[i] |= 1 << j
        for i in range(m):
            for j in range(i + 1, m):
                if not (out[i] >> j & 1 or out[j] >> i & 1):
                    raise ValueError(f"pattern misses pair {{{i}, {j}}}")
        self.m = m
        self._out = tuple(out)

    @classmethod
    def from_tournament(cls, T: ColouredTournament) -> "PatternTournament":
        return cls(T.n, ((u, v) for u, v, _ in T.arcs()))

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self._out[i] >> j & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in bits(self._out[i])]

    def to_tournament(self, k: int = 1) -> ColouredTournament:
        return ColouredTournament(self.m, k, ((i, j, 0) for i, j in self.arcs()))

    def to_json(self) -> dict:
        return {"m": self.m, "arcs": [list(a) for a in self.arcs()]}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PatternTournament):
            return NotImplemented
        return self.m == other.m and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.m, self._out))

    def __repr__(self) -> str:
        return f"PatternTournament(m={self.m}, arcs={self.arcs()})"


@dataclass(frozen=True)
class Embedding:
    pattern: PatternTournament
    images: tuple[int, ...]

    def to_json(self) -> dict:
        return {"type": "embedding", "pattern": self.pattern.to_json(), "images": list(self.images)}


def check_embedding(T: ColouredTournament, e: Embedding) -> bool:
    """Images distinct and every pattern arc lands on a forbidding host arc of the same direction."""
    img = e.images
    if len(img) != e.pattern.m or len(set(img)) != len(img):
        return False
    if any(not 0 <= v < T.n for v in img):
        return False
    fout, _ = forbidding_masks(T)
    return all(fout[img[i]] >> img[j] & 1 for i, j in e.pattern.arcs())


def duo_construct(T: ColouredTournament, P: PatternTournament) -> Union[Duo, Embedding]:
    """Embed ``P`` into the forbidding arcs of ``T`` greedily, or return the duo that blocks it.

    At step ``d`` the kings are the images of earlier pattern vertices that
    ``u_d`` points to and the serfs are the images of those pointing to
    ``u_d``.  The next image is the smallest host vertex with a forbidding
    arc to every king and from every serf; when none exists, that (K, S)
    covers the host.
    """
    fout, fin = forbidding_masks(T)
    images: list[int] = []
    for d in range(P.m):
        K = [images[g] for g in range(d) if P.has_arc(d, g)]
        S = [images[g] for g in range(d) if not P.has_arc(d, g)]
        cand = (1 << T.n) - 1
        for x in K:
            cand &= fin[x]
        for y in S:
            cand &= fout[y]
        if not cand:
            return Duo(K, S)
        images.append((cand & -cand).bit_length() - 1)
    return Embedding(P, tuple(images))


# bound arithmetic ---------------------------------------------------------------


@dataclass(frozen=True)
class ExactInteger:
    value: int

    @property
    def digits(self) -> int:
        return decimal_digits(self.value)

    def describe(self) -> str:
        d = self.digits
        return f"exact integer with {d} decimal digit{'s' if d != 1 else ''}"


@dataclass(frozen=True)
class SymbolicTower:
    """``exp_height(base)``: ``height``-fold iterated ``x -> 2**x`` starting at ``base``."""

    base: int
    height: int

    def describe(self) -> str:
        return f"exp_{self.height}({self.base})"


@dataclass(frozen=True)
class SymbolicPower:
    """``base ** exponent`` left unevaluated."""

    base: int
    exponent: int

    def describe(self) -> str:
        return f"{self.base}^{self.exponent}"


BoundExpr = Union[ExactInteger, SymbolicTower, SymbolicPower]


def decimal_digits(x: int) -> int:
    """Number of decimal digits of ``|x|``, computed without ``str()``."""
    x = abs(x)
    if x < 10:
        return 1
    d = int(x.bit_length() * math.log10(2))
    while 10**d <= x:
        d += 1
    while 10 ** (d - 1) > x:
        d -= 1
    return d


_MAX_POW2_EXPONENT = int(DIGIT_CAP / math.log10(2)) + 1


def _fits(log10_value: float) -> bool:
    return log10_value < DIGIT_CAP + 1


def exp_tower(base: int, height: int) -> BoundExpr:
    value = base
    for _ in range(height):
        # 2**value has floor(value * log10 2) + 1 digits
        if value > _MAX_POW2_EXPONENT:
            return SymbolicTower(base, height)
        value = 1 << value
    if decimal_digits(value) > DIGIT_CAP:
        return SymbolicTower(base, height)
    return ExactInteger(value)


def theorem_bound(k: int, mode: Literal["finite", "general"] = "general") -> BoundExpr:
    """``k ** (62500 k)`` in finite mode, ``exp_10(k)`` in general mode."""
    if k < 1:
        raise ValueError("colour count must be at least 1")
    if mode == "general":
        return exp_tower(k, 10)
    if mode != "finite":
        raise ValueError(f"unknown mode {mode!r}")
    exponent = 62500 * k
    if not _fits(exponent * math.log10(k)):
        return SymbolicPower(k, exponent)
    value = k**exponent
    if decimal_digits(value) > DIGIT_CAP:
        return SymbolicPower(k, exponent)
    return ExactInteger(value)
