"""
Enumerating stabilizer codes on a few qubits
============================================

Walks the extension search level by level and prints how many equivalence
classes of [[n, k]] stabilizer codes exist for n up to 4, where equivalence
means local Clifford operations combined with qubit permutations.  Every
level is then certified against the closed-form count of labeled groups:
the orbit sizes |LCPerm(n)| / |Aut| summed over classes must reproduce the
formula exactly, in exact integer arithmetic.
"""

from stabdb.canon import aut_size
from stabdb.search import enumerate_classes
from stabdb.verify import lcperm_order, mass_check, nlp_count

for n in range(1, 5):
    classes = enumerate_classes(n)
    per_k = {k: len(v) for (_, k), v in sorted(classes.items())}
    total = sum(per_k.values())
    print(f"n={n}: {total} classes", per_k)

# the class counts alone do not prove the enumeration is complete; the mass
# formula does.  Sum the orbit sizes per (n, k) cell and compare with the
# number of labeled stabilizer groups.
print()
print("mass certification, n=4:")
classes = enumerate_classes(4)
for (n, k) in sorted(classes, reverse=True):
    pairs = [(e.key, aut_size(e.rep)) for e in classes[(n, k)]]
    lhs, rhs, ok = mass_check(pairs, n, k)
    print(f"  k={k}: sum of orbit sizes = {lhs}, labeled groups = {rhs}, ok={ok}")

# the labeled-group counts grow fast; the group of symmetries we quotient by
# is |LCPerm(n)| = 6^n n!, which is why a handful of classes covers them all
print()
for n in (4, 8, 12):
    print(f"n={n:2d}: |LCPerm| = {lcperm_order(n)}, labeled [[n,0]] groups = {nlp_count(n, 0)}")
