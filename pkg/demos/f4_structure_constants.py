"""Build F4 with its canonical signs and print the positive-pair ledger.

Run:  python demos/f4_structure_constants.py
"""
from chevkit import SignAssignment, build_special, is_special, structure_table
from chevkit.data import f4_table

# c1 = c3 = -1, c2 = c4 = +1: arrows 1->2, 3->2, 3->4
signs = SignAssignment((-1, 1, -1, 1))
L = build_special("F4", signs)
print(L, "special:", is_special(L))

rows = structure_table(L)
print(f"{'alpha':>6} {'beta':>6} {'rho':>5} {'rho^T':>6} {'N':>3}")
for r in rows[:12]:
    print(f"{r['alpha']:>6} {r['beta']:>6} {r['rho_ab']:>5} {r['rho_ba']:>6} {r['N']:>3}")
print(f"... {len(rows)} rows in total")

# the shipped reference ledger is identical row for row
print("matches reference table:", rows == f4_table())

# flipping every c_i flips every sign and keeps every magnitude
flipped = build_special("F4", -signs)
print("flip negates all N:", all(flipped.N[k] == -v for k, v in L.N.items()))
