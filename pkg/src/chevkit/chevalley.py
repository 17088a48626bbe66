"""Lie algebras on the basis {h_i} + {e_alpha} with exact integer brackets.

Basis index convention: ``0 .. r-1`` are h_1 .. h_r, and ``r + k`` is the
root element of ``rs.roots[k]``.  The algebra is fully determined by

* ``N[(k, l)]`` for root indices with roots[k] + roots[l] a root, and
* ``zeta[k]`` with [e_a, e_{-a}] = zeta_a h_a, where h_a is the coroot
  expanded over the h_i.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .cocycle import Cocycle, check_flm
from .folding import folded_sign, folding_data
from .orientation import SignAssignment, bilinear, rho_matrix
from .rootsys import CartanType, Root, RootError, RootSystem, add, build_root_system, format_root, negate, sgn


class AlgebraMismatchError(ValueError):
    """Elements from different algebras were combined."""


class CocycleError(ValueError):
    """A cocycle fails the FLM axioms; carries the counterexample."""

    def __init__(self, message: str, axiom: Optional[str] = None, counterexample: Optional[tuple] = None):
        super().__init__(message)
        self.axiom = axiom
        self.counterexample = counterexample


class SignConsistencyError(ValueError):
    """Positive-pair signs contradict the sign-extension identities."""

    def __init__(self, message: str, witness: tuple):
        super().__init__(message)
        self.witness = witness


class Element:
    """A finitely supported integer combination of basis vectors."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "LieAlgebra", coeffs: Mapping[int, int]):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in coeffs.items() if v}

    @property
    def h_part(self) -> Tuple[int, ...]:
        return tuple(self.coeffs.get(i, 0) for i in range(self.algebra.rank))

    @property
    def e_part(self) -> Dict[int, int]:
        r = self.algebra.rank
        return {k - r: v for k, v in sorted(self.coeffs.items()) if k >= r}

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("elements belong to different Lie algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Element(self.algebra, out)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, k: int) -> "Element":
        return Element(self.algebra, {i: k * v for i, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{self.algebra.basis_label(k)}" for k, v in sorted(self.coeffs.items()))


class LieAlgebra:
    """Immutable bracket table on {h_i} + {e_alpha}.

    ``signs`` records the orientation used to build a special system, or
    ``None`` for algebras built from a non-special cocycle.
    """

    def __init__(
        self,
        rs: RootSystem,
        N: Mapping[Tuple[int, int], int],
        zeta: Sequence[int],
        signs: Optional[SignAssignment] = None,
        label: str = "",
    ):
        self.rs = rs
        self.N = dict(N)
        self.zeta = tuple(zeta)
        self.signs = signs
        self.label = label or str(rs.ctype)
        if len(self.zeta) != len(rs.roots):
            raise ValueError("zeta needs one entry per root")
        self._table = self._build_table()

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return self.rs.rank + len(self.rs.roots)

    def basis_label(self, k: int) -> str:
        if k < self.rank:
            return f"h{k + 1}"
        return f"e[{format_root(self.rs.roots[k - self.rank])}]"

    def _build_table(self) -> Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]]:
        rs, r = self.rs, self.rank
        roots, index = rs.roots, rs.index
        table: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]] = {}
        for k, a in enumerate(roots):
            for i in range(r):
                w = rs.simple_pairing(i, a)
                if w:
                    table[(i, r + k)] = ((r + k, w),)
                    table[(r + k, i)] = ((r + k, -w),)
        for k, a in enumerate(roots):
            hk = rs.coroot_coeffs(a)
            for l, b in enumerate(roots):
                s = add(a, b)
                if not any(s):
                    z = self.zeta[k]
                    table[(r + k, r + l)] = tuple((i, z * c) for i, c in enumerate(hk) if c)
                elif s in index:
                    n = self.N.get((k, l))
                    if not n:
                        raise ValueError(f"missing structure constant for ({format_root(a)}, {format_root(b)})")
                    table[(r + k, r + l)] = ((r + index[s], n),)
        return table

    def basis_bracket(self, x: int, y: int) -> Tuple[Tuple[int, int], ...]:
        return self._table.get((x, y), ())

    def table_items(self) -> Iterable[Tuple[Tuple[int, int], Tuple[Tuple[int, int], ...]]]:
        return self._table.items()

    # basis vectors
    def h(self, i: int) -> Element:
        return Element(self, {i: 1})

    def e(self, a: Sequence[int]) -> Element:
        return Element(self, {self.rank + self.rs.root_index(a): 1})

    def h_root(self, a: Sequence[int]) -> Element:
        """The coroot h_a expanded over the h_i."""
        return Element(self, dict(enumerate(self.rs.coroot_coeffs(a))))

    def basis(self) -> List[Element]:
        return [Element(self, {k: 1}) for k in range(self.dim)]

    def zero(self) -> Element:
        return Element(self, {})

    def bracket(self, x: Element, y: Element) -> Element:
        return bracket(self, x, y)

    def structure_constant(self, a: Sequence[int], b: Sequence[int]) -> int:
        rs = self.rs
        if add(a, b) not in rs.index:
            raise RootError(f"{format_root(a)} + {format_root(b)} is not a root")
        return self.N[(rs.index[tuple(a)], rs.index[tuple(b)])]

    def zeta_of(self, a: Sequence[int]) -> int:
        return self.zeta[self.rs.root_index(a)]

    def __repr__(self) -> str:
        return f"<LieAlgebra {self.label} dim={self.dim}>"


class TransformedAlgebra(LieAlgebra):
    """A rescaled copy of a Lie algebra; ``transform`` names the rescaling."""

    def __init__(self, base: LieAlgebra, scale: Sequence[int], transform: str):
        rs = base.rs
        index = rs.index
        N = {}
        for (k, l), n in base.N.items():
            m = index[add(rs.roots[k], rs.roots[l])]
            N[(k, l)] = n * scale[k] * scale[l] * scale[m]
        zeta = [base.zeta[k] * scale[k] * scale[index[negate(a)]] for k, a in enumerate(rs.roots)]
        super().__init__(rs, N, zeta, base.signs, f"{base.label}/{transform}")
        self.base = base
        self.scale = tuple(scale)
        self.transform = transform


def bracket(L: LieAlgebra, x: Element, y: Element) -> Element:
    if x.algebra is not L or y.algebra is not L:
        raise AlgebraMismatchError("elements do not belong to this Lie algebra")
    out: Dict[int, int] = {}
    table = L._table
    for a, u in x.coeffs.items():
        for b, v in y.coeffs.items():
            for c, k in table.get((a, b), ()):
                out[c] = out.get(c, 0) + u * v * k
    return Element(L, out)


def _special_zeta(rs: RootSystem) -> List[int]:
    return [-((-1) ** (sum(a) % 2)) for a in rs.roots]


def build_simply_laced(rs: RootSystem, c: Cocycle, signs: Optional[SignAssignment] = None) -> LieAlgebra:
    """The lattice construction from a cocycle satisfying FLM1-FLM3."""
    report = check_flm(c, rs, samples=0)
    if not report:
        raise CocycleError(f"cocycle fails {report.axiom} at {report.counterexample}", report.axiom, report.counterexample)
    index = rs.index
    N = {}
    for k, a in enumerate(rs.roots):
        for l, b in enumerate(rs.roots):
            if add(a, b) in index:
                N[(k, l)] = c(a, b)
    zeta = [c(a, negate(a)) for a in rs.roots]
    return LieAlgebra(rs, N, zeta, signs, f"{rs.ctype}/cocycle")


def build_special(ctype: CartanType | str, signs: SignAssignment) -> LieAlgebra:
    """Special Chevalley system with the given orientation signs, any type."""
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    rs = build_root_system(ctype)
    fd = folding_data(ctype, signs)
    index = rs.index
    N = {}
    for k, a in enumerate(rs.roots):
        for l, b in enumerate(rs.roots):
            if add(a, b) in index:
                N[(k, l)] = folded_sign(fd, a, b) * (rs.pq(a, b).q + 1)
    return LieAlgebra(rs, N, _special_zeta(rs), fd.signs, f"{ctype}/special{'+' if signs[0] == 1 else '-'}")


def epsilon_sign(L: LieAlgebra, a: Sequence[int], b: Sequence[int]) -> int:
    n = L.structure_constant(a, b)
    q = L.rs.pq(a, b).q
    if n % (q + 1) or abs(n) != q + 1:
        raise ValueError(f"N({format_root(a)},{format_root(b)}) = {n} is not +-(q+1) = +-{q + 1}")
    return n // (q + 1)


def sign_table(L: LieAlgebra) -> Dict[Tuple[Root, Root], int]:
    """epsilon on every composable ordered pair."""
    return {(a, b): epsilon_sign(L, a, b) for a, b in L.rs.composable_pairs()}


def extend_signs_from_positive(rs: RootSystem, pos_signs: Mapping[Tuple[Root, Root], int]) -> Dict[Tuple[Root, Root], int]:
    """Extend epsilon from positive pairs to all composable pairs.

    Uses eps(a,b) = eps(-a,-b) and
    eps(a,b) = (-1)^ht(b) eps(b,-a-b) = (-1)^ht(a) eps(-a-b,a).
    """

    def par(x: Root) -> int:
        return -1 if sum(x) % 2 else 1

    pos = {(tuple(a), tuple(b)): int(v) for (a, b), v in pos_signs.items()}
    for a, b in rs.composable_pairs(positive_only=True):
        if (a, b) not in pos:
            raise SignConsistencyError(f"missing sign for positive pair ({format_root(a)}, {format_root(b)})", (a, b))
        if pos.get((b, a)) != -pos[(a, b)]:
            raise SignConsistencyError("positive signs are not antisymmetric", (a, b))

    def same_sign(a: Root, b: Root) -> int:
        return pos[(a, b)] if sgn(a) > 0 else pos[(negate(a), negate(b))]

    full: Dict[Tuple[Root, Root], int] = {}
    for a, b in rs.composable_pairs():
        g = negate(add(a, b))
        if sgn(a) == sgn(b):
            full[(a, b)] = same_sign(a, b)
        elif sgn(b) == sgn(g):
            full[(a, b)] = par(b) * same_sign(b, g)
        else:
            full[(a, b)] = par(a) * same_sign(g, a)
    for a, b in rs.composable_pairs():
        g = negate(add(a, b))
        v = full[(a, b)]
        if v != full[(negate(a), negate(b))] or v != par(b) * full[(b, g)] or v != par(a) * full[(g, a)]:
            raise SignConsistencyError(f"sign identities clash at ({format_root(a)}, {format_root(b)})", (a, b))
    return full


def rescale(L: LieAlgebra, scale: Sequence[int], transform: str) -> TransformedAlgebra:
    return TransformedAlgebra(L, scale, transform)


def breve_transform(L: LieAlgebra, eps: int) -> TransformedAlgebra:
    """e_a fixed on positive roots, scaled by -eps(-1)^ht(a) on negative ones."""
    if eps not in (1, -1):
        raise ValueError("eps must be +-1")
    scale = [1 if sgn(a) > 0 else -eps * (-1) ** (sum(a) % 2) for a in L.rs.roots]
    return TransformedAlgebra(L, scale, f"breve{'+' if eps == 1 else '-'}")


def hat_transform(L: LieAlgebra) -> TransformedAlgebra:
    """e_a fixed on positive roots, negated on negative ones."""
    return TransformedAlgebra(L, [sgn(a) for a in L.rs.roots], "hat")


def negate_system(L: LieAlgebra) -> TransformedAlgebra:
    """Replace every e_a by -e_a."""
    out = TransformedAlgebra(L, [-1] * len(L.rs.roots), "neg")
    if L.signs is not None:
        out.signs = -L.signs
    return out


class SpecialReport:
    def __init__(self, passed: bool, signs: Optional[SignAssignment], violation: Optional[str] = None):
        self.passed = passed
        self.signs = signs
        self.violation = violation

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        if self.passed:
            return f"SpecialReport(pass, signs={self.signs.c})"
        return f"SpecialReport(fail: {self.violation})"


def is_special(L: LieAlgebra) -> SpecialReport:
    """Check the special-system rules for every root, recovering the c_i."""
    rs = L.rs
    index = rs.index
    c: List[int] = []
    for i, ai in enumerate(rs.simple_roots):
        if L.zeta_of(ai) != 1:
            return SpecialReport(False, None, f"[e_a{i + 1}, e_-a{i + 1}] = {L.zeta_of(ai)}*h{i + 1}")
        ci = 0
        mi = negate(ai)
        for a in rs.roots:
            if add(a, ai) in index:
                n = L.N[(index[ai], index[a])]
                want = rs.pq(ai, a).q + 1
                if ci == 0:
                    ci = n // want if abs(n) == want else 0
                if n != ci * want:
                    return SpecialReport(False, None, f"[e_a{i + 1}, e[{format_root(a)}]] has constant {n}")
            if add(a, mi) in index:
                n = L.N[(index[mi], index[a])]
                want = rs.pq(ai, a).p + 1
                if ci == 0:
                    ci = n // want if abs(n) == want else 0
                if n != ci * want:
                    return SpecialReport(False, None, f"[e_-a{i + 1}, e[{format_root(a)}]] has constant {n}")
        c.append(ci or (L.signs[i] if L.signs is not None else 1))
    return SpecialReport(True, SignAssignment(tuple(c)))


def structure_table(L: LieAlgebra, roots: str = "positive") -> List[dict]:
    """Rows (alpha, beta, rho_ab, rho_ba, N) for unordered composable pairs.

    Each pair appears once, with index(alpha) < index(beta); ``roots`` is
    ``"positive"`` or ``"all"``.
    """
    if L.signs is None:
        raise ValueError("structure_table needs an algebra built from an orientation")
    rs = L.rs
    m = rho_matrix(rs, L.signs)
    pool = rs.positive if roots == "positive" else rs.roots
    if roots not in ("positive", "all"):
        raise ValueError(f"roots must be 'positive' or 'all', got {roots!r}")
    rows = []
    for k, a in enumerate(pool):
        for b in pool[k + 1 :]:
            if add(a, b) in rs.index:
                rows.append(
                    {
                        "alpha": format_root(a),
                        "beta": format_root(b),
                        "rho_ab": bilinear(m, a, b),
                        "rho_ba": bilinear(m, b, a),
                        "N": L.structure_constant(a, b),
                    }
                )
    return rows
