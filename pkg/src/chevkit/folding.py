"""Folding data and sign transport from a simply laced cover.

Every non simply laced root system is the image of a simply laced one under
a linear projection whose fibres are the orbits of a diagram automorphism:

    B_r  <-  D_{r+1}   (swap the two fork vertices)
    C_r  <-  A_{2r-1}  (reverse the chain)
    F_4  <-  E_6       (1<->6, 3<->5, fixing 2 and 4)
    G_2  <-  D_4       (rotate the three outer vertices)

The structure-constant sign of a target pair is the special cocycle of the
cover evaluated on any lift of the pair.  This module also carries the
closed-form sign rules, which need no cover at all.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Sequence, Tuple

from .cocycle import Cocycle, epsilon0
from .orientation import SignAssignment, bilinear, rho_matrix
from .rootsys import CartanType, Root, RootError, RootSystem, add, build_root_system, root_system_from_cartan, sgn


class FoldingError(RuntimeError):
    """Folding axioms or lift invariance violated; indicates a bug."""


@dataclass(frozen=True)
class LiftedPair:
    alpha_src: Root
    beta_src: Root


@dataclass(frozen=True, eq=False)
class FoldingData:
    """A cover (source, tau) of ``target`` with projection eta.

    ``tau`` and ``eta`` act on source simple-root indices; both extend
    linearly to the root lattice.
    """

    target: RootSystem
    source: RootSystem
    e: int
    tau: Tuple[int, ...]
    eta: Tuple[int, ...]
    signs: SignAssignment
    source_signs: SignAssignment
    fibres: Dict[Root, Tuple[Root, ...]] = field(repr=False)
    eps0: Cocycle = field(repr=False)

    def project(self, v: Sequence[int]) -> Root:
        out = [0] * self.target.rank
        for k, n in enumerate(v):
            out[self.eta[k]] += n
        return tuple(out)

    def tau_root(self, v: Sequence[int]) -> Root:
        out = [0] * self.source.rank
        for k, n in enumerate(v):
            out[self.tau[k]] = n
        return tuple(out)

    def fibre(self, a: Sequence[int]) -> Tuple[Root, ...]:
        try:
            return self.fibres[tuple(a)]
        except KeyError:
            raise RootError(f"{a} is not a root of {self.target.ctype}") from None

    def orbit(self, v: Sequence[int]) -> Tuple[Root, ...]:
        seen = [tuple(v)]
        w = self.tau_root(v)
        while w != seen[0]:
            seen.append(w)
            w = self.tau_root(w)
        return tuple(seen)


def _chain(n: int) -> list:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _cover(ctype: CartanType) -> Tuple[RootSystem, int, Tuple[int, ...], Tuple[int, ...]]:
    """(source, e, tau, eta) for each type; source simple roots 0-based."""
    r = ctype.rank
    letter = ctype.letter
    if letter in "ADE":
        return build_root_system(ctype), 1, tuple(range(r)), tuple(range(r))
    if letter == "B":
        # D_{r+1} labelled 0, 1, ..., r with 0 and 1 both attached to 2
        n = r + 1
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in [(0, 2)] + [(k, k + 1) for k in range(1, r)]:
            a[i][j] = a[j][i] = -1
        src = root_system_from_cartan(CartanType("D", n), a)
        tau = (1, 0) + tuple(range(2, n))
        eta = (0, 0) + tuple(range(1, r))
        return src, 2, tau, eta
    if letter == "C":
        n = 2 * r - 1
        src = root_system_from_cartan(CartanType("A", n), _chain(n))
        tau = tuple(n - 1 - k for k in range(n))
        eta = tuple(min(k, n - 1 - k) for k in range(n))
        return src, 2, tau, eta
    if letter == "F":
        # E_6 vertices 1..6 (Bourbaki) -> 0..5
        src = build_root_system(CartanType("E", 6))
        tau = (5, 1, 4, 3, 2, 0)
        eta = (3, 0, 2, 1, 2, 3)
        return src, 2, tau, eta
    if letter == "G":
        src = build_root_system(CartanType("D", 4))
        tau = (2, 1, 3, 0)
        eta = (1, 0, 1, 1)
        return src, 3, tau, eta
    raise FoldingError(f"no cover known for {ctype}")


def _validate(fd: FoldingData) -> None:
    src, tgt = fd.source, fd.target
    # tau is a diagram automorphism of order e
    n = src.rank
    for i in range(n):
        for j in range(n):
            if src.cartan[fd.tau[i]][fd.tau[j]] != src.cartan[i][j]:
                raise FoldingError("tau is not a diagram automorphism")
    k = 1
    perm = list(fd.tau)
    while perm != list(range(n)):
        perm = [fd.tau[x] for x in perm]
        k += 1
    if k != fd.e:
        raise FoldingError(f"tau has order {k}, expected {fd.e}")
    # eta(Phi°) = Phi
    images = {fd.project(v) for v in src.roots}
    if images != set(tgt.roots):
        raise FoldingError("projection of cover roots is not the target root set")
    # fibres are tau-orbits
    for a, fib in fd.fibres.items():
        if set(fd.orbit(fib[0])) != set(fib):
            raise FoldingError(f"fibre over {a} is not a tau-orbit")
    # preimage of the simple roots is the simple system of Phi°
    pre = {v for v in src.roots if fd.project(v) in set(tgt.simple_roots)}
    if pre != set(src.simple_roots):
        raise FoldingError("preimage of the simple roots is not the cover simple system")
    fd.source_signs.check(src)
    if any(fd.source_signs[fd.tau[k]] != fd.source_signs[k] for k in range(n)):
        raise FoldingError("source orientation is not tau-invariant")


@lru_cache(maxsize=None)
def _folding_data(ctype: CartanType, c: Tuple[int, ...]) -> FoldingData:
    target = build_root_system(ctype)
    signs = SignAssignment(c).check(target)
    source, e, tau, eta = _cover(ctype)
    source_signs = SignAssignment(tuple(signs[eta[k]] for k in range(source.rank)))
    fibres: Dict[Root, list] = {a: [] for a in target.roots}
    for v in source.roots:
        w = tuple(sum(n for k, n in enumerate(v) if eta[k] == i) for i in range(target.rank))
        if w in fibres:
            fibres[w].append(v)
    fd = FoldingData(
        target=target,
        source=source,
        e=e,
        tau=tau,
        eta=eta,
        signs=signs,
        source_signs=source_signs,
        fibres={a: tuple(sorted(vs, key=source.index.__getitem__)) for a, vs in fibres.items()},
        eps0=epsilon0(source, source_signs),
    )
    _validate(fd)
    return fd


def folding_data(ctype: CartanType | str, signs: SignAssignment) -> FoldingData:
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    return _folding_data(ctype, tuple(signs.c))


def lifts(fd: FoldingData, a: Sequence[int], b: Sequence[int]) -> Tuple[LiftedPair, ...]:
    """All of S(a, b), in lexicographic order over the fibre product."""
    src = fd.source
    return tuple(
        LiftedPair(x, y) for x, y in product(fd.fibre(a), fd.fibre(b)) if add(x, y) in src.index
    )


def lift_pair(fd: FoldingData, a: Sequence[int], b: Sequence[int]) -> LiftedPair:
    """First member of S(a, b); asserts the cover cocycle is constant on S."""
    if add(a, b) not in fd.target.index:
        raise RootError(f"{a} + {b} is not a root")
    found = lifts(fd, a, b)
    if not found:
        raise FoldingError(f"S({a}, {b}) is empty")
    values = {fd.eps0(p.alpha_src, p.beta_src) for p in found}
    if len(values) != 1:
        raise FoldingError(f"cover cocycle not constant on S({a}, {b})")
    return found[0]


def folded_sign(fd: FoldingData, a: Sequence[int], b: Sequence[int]) -> int:
    lp = lift_pair(fd, a, b)
    return fd.eps0(lp.alpha_src, lp.beta_src)


def delta4(n: int) -> int:
    if n % 2 == 0:
        return -1 if (n // 2) % 2 else 1
    return -1 if ((n + 1) // 2) % 2 else 1


def closed_form_sign(rs: RootSystem, signs: SignAssignment, a: Sequence[int], b: Sequence[int]) -> int:
    """Structure-constant sign from rho alone, dispatched on the type letter."""
    if add(a, b) not in rs.index:
        raise RootError(f"{a} + {b} is not a root")
    m = rho_matrix(rs, signs)
    rab = bilinear(m, a, b)
    letter = rs.ctype.letter
    if letter in "ADEG":
        return -1 if rab % 2 else 1
    if letter == "B":
        if rab % 2:
            raise FoldingError(f"odd rho {rab} in type B")
        return -1 if (rab // 2) % 2 else 1
    rba = bilinear(m, b, a)
    if letter == "F":
        return delta4(rab) if rab % 2 == 0 else -delta4(rba)
    if letter == "C":
        mu = 1 if rab >= rba else -1
        sa, sb, sab = sgn(a), sgn(b), sgn(add(a, b))
        if sa == sb:
            return mu
        if sb == sab:
            return (-1) ** (sum(a) % 2) * mu
        return (-1) ** (sum(b) % 2) * mu
    raise FoldingError(f"no closed form for type {letter}")
