"""
Character groups: tables, conductors, and orthogonality
=======================================================

Build a few multiplicative character groups, print their invariants, and
verify the two orthogonality relations that everything downstream leans on.
"""

import math

import numpy as np

from thetamoments import build_group, gauss_sum

# A character mod q is determined by its exponent tuple on the generators of
# the unit group.  The table below shows every character mod 12 with its
# parity, order, and conductor (the modulus it is really "about").
q = 12
g = build_group(q)
print(f"modulus {q}: unit group of size {g.phi}, generator orders {g.structure.dims}")
print(f"{'index':>5} {'exponents':>10} {'parity':>6} {'order':>5} {'conductor':>9} {'primitive':>9}")
for i in range(len(g)):
    c = g.char(i)
    exps = ",".join(str(e) for e in c.exponents) or "-"
    print(
        f"{i:>5} {exps:>10} {c.parity:>6} {c.order:>5} {c.conductor:>9} "
        f"{str(c.is_primitive):>9}"
    )

# First orthogonality: summing chi(n) over all n kills every character except
# the trivial one, where it counts the units.
sums = [abs(complex(np.sum(g.value_table(i)))) for i in range(len(g))]
print("\n|character sums| over n mod 12:", [f"{s:.1f}" for s in sums])

# Second orthogonality: summing over characters at fixed n isolates n == 1.
units = [n for n in range(q) if math.gcd(n, q) == 1]
v = np.stack([g.value_table(i) for i in range(len(g))])[:, units]
gram = v.T @ v.conj()
dev = float(np.max(np.abs(gram - g.phi * np.eye(len(units)))))
print(f"max deviation of the unit-pair Gram matrix from phi * I: {dev:.2e}")

# Gauss sums of primitive characters sit on the circle of radius sqrt(q);
# imprimitive ones generally do not.
print("\nGauss sums mod 13 (all nontrivial characters are primitive):")
g13 = build_group(13)
for i in range(1, len(g13), 3):
    tau = gauss_sum(g13.char(i))
    print(f"  chi_{i}: |tau| = {abs(tau.value):.12f}   sqrt(13) = {math.sqrt(13):.12f}")
