"""The sign of N(a,b) on positive pairs depends only on (rho(a,b), rho(b,a)).

For each type letter, collect that dependence across several ranks and both
orientations and print it as a small lookup table.

Run:  python demos/sign_rule_per_type.py
"""
from collections import defaultdict

from chevkit import build_root_system, build_special, epsilon_sign, rho_matrix, special_orientations
from chevkit.orientation import bilinear
from chevkit.rootsys import CartanType

RANKS = {"A": [3, 4, 5], "B": [2, 3, 4], "C": [2, 3, 4], "D": [4, 5], "E": [6], "F": [4], "G": [2]}

for letter, ranks in RANKS.items():
    seen = defaultdict(set)
    for r in ranks:
        rs = build_root_system(CartanType(letter, r))
        for c in special_orientations(rs):
            L, m = build_special(rs.ctype, c), rho_matrix(rs, c)
            for a, b in rs.composable_pairs(positive_only=True):
                seen[(bilinear(m, a, b), bilinear(m, b, a))].add(epsilon_sign(L, a, b))
    clash = [k for k, v in seen.items() if len(v) > 1]
    entries = ", ".join(f"{k}:{min(v):+d}" for k, v in sorted(seen.items())[:8])
    print(f"{letter}: {len(seen)} (rho, rho^T) values, conflicts {len(clash)}; e.g. {entries}")
