"""Three ways to hand symcenter an algebra.

1. Raw structure constants (validated: associativity and the unit law are
   always checked, never trusted).
2. A truncated skew-commutative presentation x_j x_i = q_ji x_i x_j,
   x_i^{b_i} = 0, which yields a monomial basis.
3. Generator matrices inside Mat_m(F); the spanning closure is computed and
   a claimed monomial basis is verified before use.
"""

import numpy as np

from symcenter import GF, Algebra, SkewPresentation, from_matrix_generators, from_skew_presentation
from symcenter.errors import AlgebraValidationError

g3 = GF(3)

print("-- structure constants ------------------------------------------")
# 2x2 matrix units: E_ab E_cd = delta_bc E_ad
basis = [(0, 0), (0, 1), (1, 0), (1, 1)]
table = np.zeros((4, 4, 4), dtype=np.int64)
for i, (a, b) in enumerate(basis):
    for j, (c, d) in enumerate(basis):
        if b == c:
            table[i, j, basis.index((a, d))] = 1
mat2 = Algebra(g3, table, g3.arr([1, 0, 0, 1]),
               labels=["E11", "E12", "E21", "E22"], name="Mat2(GF(3))")
print(mat2, "center dim:", mat2.center().dim,
      "commutator dim:", mat2.commutator_space().dim)

broken = table.copy()
broken[1, 2, 0] = 2
try:
    Algebra(g3, broken, g3.arr([1, 0, 0, 1]))
except AlgebraValidationError as exc:
    print("a broken table is rejected:", exc)

print()
print("-- skew truncated presentations ---------------------------------")
# three anticommuting generators, each cubing to zero: dimension 27
pres = SkewPresentation.anticommuting([3, 3, 3])
a27 = from_skew_presentation(g3, pres, name="three anticommuting cubes")
print(a27, "basis is all monomials x1^r1 x2^r2 x3^r3 with r < 3")
x1, x2 = a27.monomial("x1"), a27.monomial("x2")
print("x2 * x1 =", x2 * x1, "  (anticommuting, char 3)")
print("x1^3    =", x1 ** 3)

print()
print("-- matrix generators --------------------------------------------")
# nilpotent Jordan block plus a partner that squares to it
m = np.zeros((4, 4), dtype=int)
for r in range(1, 4):
    m[r, r - 1] = 1
algebra = from_matrix_generators(g3, 4, {"J": m},
                                 monomial_basis=["1", "J", "J^2", "J^3"])
print(algebra, "labels:", algebra.labels)
print("structure constants are solved exactly from the matrices;")
print("J^2 * J^2 =", algebra.monomial("J^2") * algebra.monomial("J^2"))
