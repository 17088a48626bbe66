"""Crystallographic root systems of types A-G with exact integer data.

Roots are plain tuples of integers: the coefficients over the simple roots.
Simple roots are indexed from 0 internally; rendered labels are 1-based.

Labelling conventions:

* A, D, E follow Bourbaki (E: 1-3-4-5-6[-7-8] with 2 attached to 4).
* B_r: alpha_1 short, alpha_1 = alpha_2 double bond at the *start*.
* C_r: alpha_r long, alpha_{r-1} = alpha_r double bond at the end.
* F_4: alpha_1, alpha_2 long; alpha_3, alpha_4 short.
* G_2: alpha_1 long, alpha_2 short.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

Root = Tuple[int, ...]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class CartanTypeError(ValueError):
    """Unknown type letter or rank outside the valid range."""


class RootError(ValueError):
    """A vector is not a root, or an operation is undefined on it."""


@dataclass(frozen=True, order=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self) -> None:
        letter = str(self.letter).upper()
        object.__setattr__(self, "letter", letter)
        if letter not in _RANK_BOUNDS:
            raise CartanTypeError(f"unknown Cartan type letter {self.letter!r}; expected one of A-G")
        lo, hi = _RANK_BOUNDS[letter]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            valid = f"{lo}" if lo == hi else (f"{lo}..{hi}" if hi else f">= {lo}")
            raise CartanTypeError(f"rank {self.rank} invalid for type {letter}: rank must be {valid}")

    @classmethod
    def parse(cls, text: str, rank: int | None = None) -> "CartanType":
        """Parse ``"F4"``, ``"B 3"`` or a bare letter plus an explicit rank."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d*)\s*", text)
        if not m:
            raise CartanTypeError(f"cannot parse Cartan type {text!r}")
        letter, digits = m.groups()
        if digits and rank is not None and int(digits) != rank:
            raise CartanTypeError(f"conflicting ranks in {text!r} and rank={rank}")
        if digits:
            rank = int(digits)
        if rank is None:
            raise CartanTypeError(f"no rank given for type {text!r}")
        return cls(letter, rank)

    @property
    def simply_laced(self) -> bool:
        return self.letter in "ADE"

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


def cartan_matrix(ctype: CartanType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix a_ij = 2<a_i,a_j>/<a_i,a_i> in the labelling above."""
    r = ctype.rank
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    letter = ctype.letter
    if letter in "ABC":
        for i in range(r - 1):
            bond(i, i + 1)
        if letter == "B":
            bond(0, 1, -2, -1)
        elif letter == "C":
            bond(r - 2, r - 1, -2, -1)
    elif letter == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    elif letter == "E":
        # 1-3-4-5-...-r with 2 on 4 (1-based)
        bond(0, 2)
        bond(1, 3)
        for i in range(2, r - 1):
            bond(i, i + 1)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif letter == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class PQPair:
    p: int
    q: int


@dataclass(frozen=True, eq=False)
class RootSystem:
    """An irreducible root system with all roots enumerated.

    Positive roots are ordered by height, ties broken by *descending*
    lexicographic order of the coefficient tuples; negative roots follow in
    the same order. ``index`` maps each root to its position in ``roots``.
    """

    ctype: CartanType
    cartan: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]
    gram: Tuple[Tuple[int, ...], ...]
    positive: Tuple[Root, ...]
    roots: Tuple[Root, ...]
    index: Dict[Root, int] = field(repr=False)
    _pq_cache: Dict[Tuple[int, int], PQPair] = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_roots(self) -> Tuple[Root, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(sum(a) for a in self.roots)

    @property
    def simply_laced(self) -> bool:
        return all(self.cartan[i][j] == self.cartan[j][i] for i in range(self.rank) for j in range(self.rank))

    @property
    def n_positive(self) -> int:
        return len(self.positive)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.index

    def root_index(self, v: Sequence[int]) -> int:
        try:
            return self.index[tuple(v)]
        except KeyError:
            raise RootError(f"{format_root(v)} is not a root of {self.ctype}") from None

    def inner(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Exact <a,b> for lattice vectors; short roots have <a,a> = 2."""
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def coroot_pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """<a^vee, b> = 2<a,b>/<a,a> for a root a."""
        num = 2 * self.inner(a, b)
        den = self.inner(a, a)
        if num % den:
            raise RootError(f"non-integral pairing for {format_root(a)}, {format_root(b)}")
        return num // den

    def simple_pairing(self, i: int, b: Sequence[int]) -> int:
        """<alpha_i^vee, b> = sum_j a_ij b_j."""
        row = self.cartan[i]
        return sum(row[j] * b[j] for j in range(self.rank))

    def coroot_coeffs(self, a: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients of a^vee over the simple coroots: n_i d_i / d_a."""
        da = self.inner(a, a) // 2
        out = []
        for n, di in zip(a, self.d):
            if (n * di) % da:
                raise RootError(f"{format_root(a)} has non-integral coroot expansion")
            out.append(n * di // da)
        return tuple(out)

    def pq(self, a: Sequence[int], b: Sequence[int]) -> PQPair:
        """Lengths of the a-string through b, by direct membership scan."""
        a, b = tuple(a), tuple(b)
        ia, ib = self.root_index(a), self.root_index(b)
        if a == b or a == negate(b):
            raise RootError("p/q undefined for a = +-b")
        key = (ia, ib)
        hit = self._pq_cache.get(key)
        if hit is not None:
            return hit
        p = 0
        while add(b, scale(p + 1, a)) in self.index:
            p += 1
        q = 0
        while add(b, scale(-(q + 1), a)) in self.index:
            q += 1
        res = PQPair(p, q)
        self._pq_cache[key] = res
        return res

    def composable_pairs(self, positive_only: bool = False) -> Iterable[Tuple[Root, Root]]:
        """Ordered pairs (a, b) of roots with a + b a root, in index order."""
        pool = self.positive if positive_only else self.roots
        for a in pool:
            for b in pool:
                if add(a, b) in self.index:
                    yield a, b


def unit(rank: int, i: int) -> Root:
    return tuple(1 if j == i else 0 for j in range(rank))


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def negate(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def scale(k: int, a: Sequence[int]) -> Root:
    return tuple(k * x for x in a)


def height(a: Sequence[int]) -> int:
    return sum(a)


def sgn(a: Sequence[int]) -> int:
    """+1 for positive roots, -1 for negative roots."""
    return 1 if sum(a) > 0 else -1


def pq(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> PQPair:
    return rs.pq(a, b)


def inner(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> int:
    return rs.inner(a, b)


def format_root(a: Sequence[int]) -> str:
    """Compact digit string when possible ("0121"), else "[n1,n2,...]"."""
    if len(a) <= 9 and all(0 <= x <= 9 for x in a):
        return "".join(str(x) for x in a)
    if len(a) <= 9 and all(-9 <= x <= 0 for x in a):
        return "-" + "".join(str(-x) for x in a)
    return "[" + ",".join(str(x) for x in a) + "]"


def parse_root(text: str) -> Root:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise RootError(f"unbalanced root literal {text!r}")
        body = text[1:-1].strip()
        return tuple(int(x) for x in body.split(",")) if body else ()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if not text.isdigit():
        raise RootError(f"cannot parse root {text!r}")
    return tuple(sign * int(ch) for ch in text)


def _root_sort_key(a: Root) -> tuple:
    return (sum(a), tuple(-x for x in a))


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """d with d_i a_ij = a_ji d_j, scaled so short roots get d = 1."""
    from fractions import Fraction

    r = len(cartan)
    d: list = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise CartanTypeError("Cartan matrix is not connected")
    m = min(d)
    return tuple(int(x / m) for x in d)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> list:
    r = len(cartan)
    simples = [unit(r, i) for i in range(r)]
    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for b in layer:
            for i in range(r):
                ai = simples[i]
                if b == ai:
                    continue
                q = 0
                while sub(b, scale(q + 1, ai)) in found:
                    q += 1
                p = q - sum(cartan[i][j] * b[j] for j in range(r))
                if p > 0:
                    c = add(b, ai)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        layer = nxt
    return sorted(found, key=_root_sort_key)


def root_system_from_cartan(ctype: CartanType, cartan: Sequence[Sequence[int]]) -> RootSystem:
    """Build a root system from an explicit Cartan matrix.

    Used directly for folding covers whose labelling differs from the
    standard one; ``ctype`` only records the isomorphism type.
    """
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    r = len(cartan)
    for i in range(r):
        if cartan[i][i] != 2:
            raise CartanTypeError("diagonal entries of a Cartan matrix must be 2")
        for j in range(r):
            if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                raise CartanTypeError(f"invalid off-diagonal entries at ({i},{j})")
    d = _symmetrizer(cartan)
    gram = tuple(tuple(d[i] * cartan[i][j] for j in range(r)) for i in range(r))
    pos = tuple(_positive_roots(cartan))
    roots = pos + tuple(negate(a) for a in pos)
    index = {a: k for k, a in enumerate(roots)}
    return RootSystem(ctype=ctype, cartan=cartan, d=d, gram=gram, positive=pos, roots=roots, index=index)


_CACHE: Dict[CartanType, RootSystem] = {}


def build_root_system(ctype: CartanType | str) -> RootSystem:
    if isinstance(ctype, str):
        ctype = CartanType.parse(ctype)
    rs = _CACHE.get(ctype)
    if rs is None:
        rs = root_system_from_cartan(ctype, cartan_matrix(ctype))
        _CACHE[ctype] = rs
    return rs


def expected_root_count(ctype: CartanType) -> int:
    """Classical |Phi| for each type."""
    r = ctype.rank
    return {
        "A": lambda: r * (r + 1),
        "B": lambda: 2 * r * r,
        "C": lambda: 2 * r * r,
        "D": lambda: 2 * r * (r - 1),
        "E": lambda: {6: 72, 7: 126, 8: 240}[r],
        "F": lambda: 48,
        "G": lambda: 12,
    }[ctype.letter]()
