"""The dyadic Hilbert symbol as a computable object.

With 2 inert, solvability of a x^2 + b y^2 = z^2 in the completion at 2
reduces to a finite check mod 8 with a primitivity condition.  The symbol
descends to unit classes mod 4 taken up to squares, where it becomes a
nondegenerate symmetric bilinear form over GF(2) -- small enough at n = 3
to print in full.
"""

from importlib import resources
from itertools import product

from spinsweep import residue
from spinsweep.numfield import load_spec

cfg = (resources.files("spinsweep.data") / "simplest-cubic-7.cfg").read_text()
spec = load_spec(cfg)
family = residue.build_family(spec)
r3 = family.level(3)

print("(-1, -1)_2 =", residue.hilbert2(r3, r3.neg_one(), r3.neg_one()), " (always -1 here)")
print("(1, b)_2 = +1 for every unit b: ", all(
    residue.hilbert2(r3, r3.one(), b) == 1
    for b in product(range(8), repeat=3) if r3.is_unit(b)
))

print()
print("Full 8 x 8 symbol table on square classes (rows/cols in binary order):")
bits_list = list(product((0, 1), repeat=3))
reps = {c: residue.class_rep(family, c) for c in bits_list}
for u in bits_list:
    row = [residue.hilbert2(r3, reps[u], reps[v]) for v in bits_list]
    print("  ", "".join(map(str, u)), " ".join(f"{v:+d}" for v in row))

pairing = residue.build_matrix_A(family)
print()
print("Same table from the circulant bilinear form (must match):", all(
    residue.hilbert2(r3, reps[u], reps[v]) == pairing.pairing(u, v)
    for u in bits_list for v in bits_list
))
