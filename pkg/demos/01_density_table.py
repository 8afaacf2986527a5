"""Exact spin-density formulas.

For a cyclic totally real field of odd degree n with odd narrow class
number and 2 inert, the density of completely split primes that stay
inert-free (residue degree 1) in the associated ramified 2-extension has
an exact closed form.  Everything below is rational arithmetic; nothing
is sampled or rounded.
"""

from spinsweep.density import N15_ERRATUM_NOTE, density_report, format_table, s_pair

print("Kernel counts (s_plus, s_minus) drive every density:")
for n in (3, 5, 7, 9, 11, 13, 15):
    print(f"  n = {n:2d}: s = {s_pair(n)}")

print()
print(format_table([3, 5, 7, 9, 11, 13, 15]))
print()
print(N15_ERRATUM_NOTE)

print()
rep = density_report(3)
print("The cubic case in full (unconditional):")
print(f"  d(F+|S+) = {rep.dF_plus}   d(F-|S-) = {rep.dF_minus}   d(F|S) = {rep.dF}")
print(f"  d(R+|S+) = {rep.dR_plus}   d(R-|S-) = {rep.dR_minus}   d(R|S) = {rep.dR}")
print("  and d(F|R) = 1/2 on both signs: the F-condition halves R per spin pair.")
