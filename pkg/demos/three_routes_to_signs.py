"""Three independent routes to the same structure-constant signs.

1. E6 directly from the bimultiplicative cocycle on its root lattice.
2. F4 as the fixed points of the E6 diagram automorphism (folding).
3. A closed formula in the integers rho(a,b), rho(b,a) alone.

Run:  python demos/three_routes_to_signs.py
"""
from chevkit import build_root_system, build_special, closed_form_sign, epsilon_sign, folding_data, lifts, orientation
from chevkit.rootsys import format_root

rs = build_root_system("F4")
signs = orientation(rs, "minus")
fd = folding_data("F4", signs)
print(f"F4 <- {fd.source.ctype}: tau = {[t + 1 for t in fd.tau]}, eta = {[t + 1 for t in fd.eta]}")

L = build_special("F4", signs)
a, b = (0, 1, 1, 0), (0, 0, 1, 1)
for p in lifts(fd, a, b):
    print(f"  lift of ({format_root(a)}, {format_root(b)}): ({format_root(p.alpha_src)}, {format_root(p.beta_src)})"
          f" cover sign {fd.eps0(p.alpha_src, p.beta_src):+d}")
print("  built sign", epsilon_sign(L, a, b), " closed form", closed_form_sign(rs, signs, a, b))

disagreements = 0
for x, y in rs.composable_pairs():
    disagreements += len({epsilon_sign(L, x, y), closed_form_sign(rs, signs, x, y)}) != 1
print(f"disagreements over all {sum(1 for _ in rs.composable_pairs())} composable pairs: {disagreements}")
