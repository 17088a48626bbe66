"""Bimultiplicative +-1 pairings on the root lattice.

A cocycle is stored as its generator matrix gen[i][j] = value(alpha_i,
alpha_j); values on arbitrary lattice vectors are computed mod 2 from the
exponent sum  sum_ij bit_ij n_i m_j.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .orientation import OrientedEdges, SignAssignment, rho_matrix
from .rootsys import RootSystem, add, unit


class NonSimplyLacedError(ValueError):
    """Raised for cocycle constructions on B, C, F or G; use chevkit.folding."""


@dataclass(frozen=True)
class Cocycle:
    gen: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        gen = tuple(tuple(int(x) for x in row) for row in self.gen)
        if any(x not in (1, -1) for row in gen for x in row):
            raise ValueError("cocycle generators must be +-1")
        object.__setattr__(self, "gen", gen)
        object.__setattr__(self, "_bits", tuple(tuple(i for i, x in enumerate(row) if x == -1) for row in gen))

    @property
    def rank(self) -> int:
        return len(self.gen)

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> int:
        return self.value(a, b)

    def value(self, a: Sequence[int], b: Sequence[int]) -> int:
        e = 0
        for i, n in enumerate(a):
            if n & 1:
                for j in self._bits[i]:
                    e += b[j]
        return -1 if e & 1 else 1


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.simply_laced:
        raise NonSimplyLacedError(
            f"{rs.ctype} is not simply laced; structure constants come from chevkit.folding.folded_sign"
        )


def epsilon0(rs: RootSystem, signs: SignAssignment) -> Cocycle:
    """gen[i][j] = c_i ** a_ij; equivalently value = (-1) ** rho."""
    _require_simply_laced(rs)
    signs.check(rs)
    return Cocycle(tuple(tuple(signs[i] ** (rs.cartan[i][j] % 2) for j in range(rs.rank)) for i in range(rs.rank)))


def epsilon_kac(rs: RootSystem, edges: OrientedEdges) -> Cocycle:
    """-1 on the diagonal and on arrows i -> j, +1 elsewhere."""
    _require_simply_laced(rs)
    r = rs.rank
    return Cocycle(tuple(tuple(-1 if i == j or (i, j) in edges else 1 for j in range(r)) for i in range(r)))


def epsilon0_from_rho(rs: RootSystem, signs: SignAssignment) -> Cocycle:
    """Same cocycle as :func:`epsilon0`, built from the rho matrix instead."""
    _require_simply_laced(rs)
    m = rho_matrix(rs, signs)
    return Cocycle(tuple(tuple(-1 if m[i][j] % 2 else 1 for j in range(rs.rank)) for i in range(rs.rank)))


@dataclass(frozen=True)
class FLMReport:
    passed: bool
    checks: int
    axiom: Optional[str] = None
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.passed


def _flm1(c: Cocycle, a, b, g) -> bool:
    return c(a, b) * c(add(a, b), g) == c(b, g) * c(a, add(b, g))


def check_flm(c: Cocycle, rs: RootSystem, samples: int = 10_000, seed: int = 0, bound: int = 3) -> FLMReport:
    """FLM1/FLM2 on generators plus seeded random lattice triples; FLM3 on all root pairs."""
    _require_simply_laced(rs)
    r = rs.rank
    zero = (0,) * r
    gens = [unit(r, i) for i in range(r)]
    checks = 0
    for a in gens:
        for b in gens:
            for g in gens:
                checks += 1
                if not _flm1(c, a, b, g):
                    return FLMReport(False, checks, "FLM1", (a, b, g))
    rng = random.Random(seed)
    lattice = lambda: tuple(rng.randint(-bound, bound) for _ in range(r))  # noqa: E731
    for _ in range(samples):
        a, b, g = lattice(), lattice(), lattice()
        checks += 2
        if not _flm1(c, a, b, g):
            return FLMReport(False, checks, "FLM1", (a, b, g))
        if c(a, zero) != 1 or c(zero, a) != 1:
            return FLMReport(False, checks, "FLM2", (a,))
    for a in gens:
        checks += 1
        if c(a, zero) != 1 or c(zero, a) != 1:
            return FLMReport(False, checks, "FLM2", (a,))
    for a in rs.roots:
        for b in rs.roots:
            checks += 1
            if c(a, b) * c(b, a) != (-1) ** (rs.inner(a, b) % 2):
                return FLMReport(False, checks, "FLM3", (a, b))
    return FLMReport(True, checks)


def kac_relation_violation(rs: RootSystem, kac: Cocycle, eps0: Cocycle) -> Optional[tuple]:
    """First root pair violating eps = eps0 * prod_i (-1)^(n_i m_i), else None."""
    for a in rs.roots:
        for b in rs.roots:
            diag = (-1) ** (sum(x * y for x, y in zip(a, b)) % 2)
            if kac(a, b) != eps0(a, b) * diag:
                return (a, b)
    return None


__all__ = [
    "Cocycle",
    "FLMReport",
    "NonSimplyLacedError",
    "check_flm",
    "epsilon0",
    "epsilon0_from_rho",
    "epsilon_kac",
    "kac_relation_violation",
]
