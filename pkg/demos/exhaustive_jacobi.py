"""Check the Jacobi identity on all of E8, then break one sign and watch it fail.

The check evaluates every ordered basis triple (248^3 of them) through one
sparse product of the structure tensor with itself.

Run:  python demos/exhaustive_jacobi.py
"""
import time

from chevkit import LieAlgebra, build_root_system, build_special, orientation
from chevkit.verify import check_jacobi

rs = build_root_system("E8")
t0 = time.perf_counter()
L = build_special("E8", orientation(rs, "plus"))
print(f"built {L} with {len(L.N)} structure constants in {time.perf_counter() - t0:.2f}s")

rep = check_jacobi(L)
print(rep.summary())

N = dict(L.N)
key = next(iter(N))
N[key] = -N[key]
N[key[::-1]] = -N[key[::-1]]
broken = LieAlgebra(rs, N, L.zeta, L.signs, "E8 with one flipped sign")
rep = check_jacobi(broken)
print(rep.summary().splitlines()[0])
print("first witness:", rep.failures[0][0])
