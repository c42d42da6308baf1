"""The substructure pipeline on a worked 12-dimensional example.

A local algebra generated by two 12x12 matrices, whose center turns out to
contain a nilpotent element M^2 with M * M^2 outside the center: the
Jacobson radical of the center is not an ideal of the algebra.  This is the
smallest known symmetric local algebra with that behaviour.
"""

from symcenter import analyze, is_basic, is_local, j_of_center, property_verdicts, radical, socle
from symcenter.corpus import get

a = get("dim12_sharp")
print(a)
print("basis words:", ", ".join(a.labels))
print()

cert = radical(a)
print("radical strategy:", cert.strategy)
print("evidence:", cert.evidence)
print("dim J(A) =", cert.radical.dim, " local:", is_local(a),
      " basic:", is_basic(a))
print()

print("Z(A)  =", a.subspace_str(a.center()))
print("K(A)  =", a.subspace_str(a.commutator_space()))
print("soc   =", a.subspace_str(socle(a)))
print("J(Z)  =", a.subspace_str(j_of_center(a)))
print()

chain = a.radical_powers(cert.radical)
print("Loewy layers:", [chain[i].dim - chain[i + 1].dim
                        for i in range(len(chain) - 1)])
print()

verdicts = property_verdicts(a)
for name, verdict in verdicts.as_dict().items():
    if verdict.holds:
        print(f"({name}) holds")
    else:
        print(f"({name}) FAILS; witness: {verdict.witness.describe(a)}")
print()
print("Every verdict is double-computed: the direct two-sided ideal test")
print("and the annihilation criterion U * K(A) = 0 must agree.")
print()
print("The same information as one report:")
print()
print(analyze(a).to_text())
