"""Sink/source orientations of the Dynkin graph and the form rho.

A sign vector c (one entry +-1 per simple root) with c_i = -c_j on every
edge encodes an orientation in which each vertex is a sink or a source:
the arrow on edge {i, j} points from i to j exactly when c_i = -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

from .rootsys import RootSystem


class OrientationError(ValueError):
    """A sign vector or edge set is not a valid orientation."""


@dataclass(frozen=True)
class SignAssignment:
    c: Tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.c)
        if any(x not in (1, -1) for x in c):
            raise OrientationError(f"signs must be +-1, got {c}")
        object.__setattr__(self, "c", c)

    def __neg__(self) -> "SignAssignment":
        return SignAssignment(tuple(-x for x in self.c))

    def __getitem__(self, i: int) -> int:
        return self.c[i]

    def __len__(self) -> int:
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def is_valid_for(self, rs: RootSystem) -> bool:
        a = rs.cartan
        return len(self.c) == rs.rank and all(
            self.c[i] == -self.c[j] for i in range(rs.rank) for j in range(rs.rank) if i != j and a[i][j]
        )

    def check(self, rs: RootSystem) -> "SignAssignment":
        if len(self.c) != rs.rank:
            raise OrientationError(f"expected {rs.rank} signs for {rs.ctype}, got {len(self.c)}")
        if not self.is_valid_for(rs):
            raise OrientationError(f"signs {self.c} are not a sink/source orientation of {rs.ctype}")
        return self


@dataclass(frozen=True)
class OrientedEdges:
    """Arrows (i, j) on the Dynkin graph; one per adjacent unordered pair."""

    pairs: FrozenSet[Tuple[int, int]]

    def __contains__(self, edge: object) -> bool:
        return edge in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def one_based(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((i + 1, j + 1) for i, j in sorted(self.pairs))

    @classmethod
    def from_arrows(cls, rs: RootSystem, arrows: Iterable[Tuple[int, int]]) -> "OrientedEdges":
        """Validate a user-supplied orientation (0-based vertex pairs)."""
        pairs = frozenset((int(i), int(j)) for i, j in arrows)
        a = rs.cartan
        for i, j in pairs:
            if i == j or not a[i][j]:
                raise OrientationError(f"({i},{j}) is not an edge of {rs.ctype}")
            if (j, i) in pairs:
                raise OrientationError(f"edge {{{i},{j}}} oriented both ways")
        n_edges = sum(1 for i in range(rs.rank) for j in range(i + 1, rs.rank) if a[i][j])
        if len(pairs) != n_edges:
            raise OrientationError(f"{len(pairs)} arrows given for {n_edges} edges")
        return cls(pairs)

    def is_sink_source(self) -> bool:
        tails = {i for i, _ in self.pairs}
        heads = {j for _, j in self.pairs}
        return not (tails & heads)


def special_orientations(rs: RootSystem) -> Tuple[SignAssignment, SignAssignment]:
    """The two sink/source sign vectors; the first has c = +1 at vertex 0."""
    r = rs.rank
    c = [0] * r
    c[0] = 1
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and rs.cartan[i][j]:
                if c[j] == 0:
                    c[j] = -c[i]
                    stack.append(j)
                elif c[j] == c[i]:
                    raise OrientationError(f"Dynkin graph of {rs.ctype} is not bipartite")
    first = SignAssignment(tuple(c))
    return first, -first


def orientation(rs: RootSystem, which: str = "plus") -> SignAssignment:
    """Select ``"plus"`` (first) or ``"minus"`` (second) special orientation."""
    plus, minus = special_orientations(rs)
    if which == "plus":
        return plus
    if which == "minus":
        return minus
    raise OrientationError(f"orientation must be 'plus' or 'minus', got {which!r}")


def oriented_edges(rs: RootSystem, signs: SignAssignment) -> OrientedEdges:
    signs.check(rs)
    a = rs.cartan
    return OrientedEdges(
        frozenset((i, j) for i in range(rs.rank) for j in range(rs.rank) if i != j and a[i][j] and signs[i] == -1)
    )


def rho_matrix(rs: RootSystem, signs: SignAssignment) -> Tuple[Tuple[int, ...], ...]:
    """R with rho(a, b) = a^T R b, i.e. R_ij = d_i a_ij on oriented edges."""
    edges = oriented_edges(rs, signs)
    return tuple(
        tuple(rs.d[i] * rs.cartan[i][j] if (i, j) in edges else 0 for j in range(rs.rank)) for i in range(rs.rank)
    )


def rho(rs: RootSystem, signs: SignAssignment, a: Sequence[int], b: Sequence[int]) -> int:
    return bilinear(rho_matrix(rs, signs), a, b)


def bilinear(m: Sequence[Sequence[int]], a: Sequence[int], b: Sequence[int]) -> int:
    total = 0
    for i, x in enumerate(a):
        if x:
            row = m[i]
            total += x * sum(row[j] * y for j, y in enumerate(b) if y)
    return total
