"""Exact spin-density formulas for cyclic fields of odd degree n.

Everything here is closed-form combinatorics in exact rational arithmetic
(`fractions.Fraction`); no floating point enters.  The two integers
s_plus and s_minus count, inside the 2^n residue classes mod 4 taken up to
squares, the classes on which the dyadic Hilbert pairing of an element
against all of its nontrivial Galois conjugates is trivial, split by the
sign of the norm mod 4.  All densities of interest are s_plus, s_minus
divided by the appropriate power of two:

    d(F+|S+) = s_plus  / 2^(3(n-1)/2)      d(R+|S+) = s_plus  / 2^(n-1)
    d(F-|S-) = s_minus / 2^(3(n-1)/2)      d(R-|S-) = s_minus / 2^(n-1)
    d(F|S)   = (s_plus + s_minus) / 2^((3n-1)/2)
    d(R|S)   = (s_plus + s_minus) / 2^n

where S is the set of completely split primes, R the subset satisfying the
symmetric spin relation, F the subset that splits completely in the
associated ramified 2-extension, and +/- restricts to p = +/-1 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .f2poly import cyclo_profile


def _check_n(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")


def _half(x: int) -> int:
    q, r = divmod(x, 2)
    assert r == 0, "exponent must be even"
    return q


def s_pair(n: int) -> tuple[int, int]:
    """Kernel sizes (s_plus, s_minus) for odd n >= 3.

    s_plus = 1 + prod_{k|n, d_k odd, k!=1} 2^(phi(k)/2d_k)
                 * (prod_{k|n, d_k odd, k!=1} 2^(phi(k)/2) - 1)
    s_minus = prod_{k|n, d_k even, k!=1} (2^(d_k/2)+1)^(phi(k)/d_k)
                 * prod_{k|n, d_k odd, k!=1} (2^d_k - 1)^(phi(k)/2d_k)

    with d_k the order of 2 mod k; empty products are 1.
    """
    _check_n(n)
    profile = cyclo_profile(n)
    a = b = s_minus = 1
    for k, (d, r, m) in profile.table.items():
        if k == 1:
            continue
        phi = (2 * r - m) * d
        if d % 2 == 1:
            a *= 1 << (phi // (2 * d))
            b *= 1 << _half(phi)
            s_minus *= ((1 << d) - 1) ** (phi // (2 * d))
        else:
            s_minus *= ((1 << (d // 2)) + 1) ** (phi // d)
    return 1 + a * (b - 1), s_minus


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def s_pair_prime(n: int) -> tuple[int, int]:
    """Specialized (s_plus, s_minus) for an odd prime n; must equal s_pair(n)."""
    _check_n(n)
    if not _is_prime(n):
        raise ValueError("n must be prime")
    from .f2poly import order_of_two

    d = order_of_two(n)
    if d % 2 == 1:
        e = (n - 1) // (2 * d)
        return 1 + (1 << e) * ((1 << _half(n - 1)) - 1), ((1 << d) - 1) ** e
    return 1, ((1 << (d // 2)) + 1) ** ((n - 1) // d)


@dataclass(frozen=True)
class DensityReport:
    """Exact densities for one degree n; all fractions fully reduced."""

    n: int
    s_plus: int
    s_minus: int
    dF_plus: Fraction
    dF_minus: Fraction
    dF: Fraction
    dR_plus: Fraction
    dR_minus: Fraction
    dR: Fraction

    def __post_init__(self):
        half_split = Fraction(1, 1 << _half(self.n - 1))
        assert self.dF == (self.dF_plus + self.dF_minus) / 2
        assert self.dF_plus == self.dR_plus * half_split
        assert self.dF_minus == self.dR_minus * half_split


def density_report(n: int) -> DensityReport:
    """Full set of exact densities for odd n >= 3."""
    _check_n(n)
    sp, sm = s_pair(n)
    e_f = 3 * _half(n - 1)  # 3(n-1)/2
    e_r = n - 1
    return DensityReport(
        n=n,
        s_plus=sp,
        s_minus=sm,
        dF_plus=Fraction(sp, 1 << e_f),
        dF_minus=Fraction(sm, 1 << e_f),
        dF=Fraction(sp + sm, 1 << (e_f + 1)),  # (3n-1)/2 = 3(n-1)/2 + 1
        dR_plus=Fraction(sp, 1 << e_r),
        dR_minus=Fraction(sm, 1 << e_r),
        dR=Fraction(sp + sm, 1 << n),
    )


TABLE_HEADER = "n | d(F+|S+) | d(F-|S-) | d(F|S)"

# The published table of these densities prints 47/262144 in the final
# column at n = 15; the row's own +/- entries force (1+375)/2^22 = 47/524288,
# which is what the formula engine emits.  Surfaced by the CLI as a footnote.
N15_ERRATUM_NOTE = (
    "note: at n = 15 the value d(F|S) = 47/524288 follows from the +/- columns "
    "(1 + 375)/2^22; a published table prints 47/262144, which is inconsistent "
    "with its own row."
)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_table(rows) -> str:
    """Density table, one row per requested n, pipe-separated reduced fractions."""
    lines = [TABLE_HEADER]
    for n in rows:
        rep = density_report(n)
        lines.append(
            f"{rep.n} | {_frac_str(rep.dF_plus)} | {_frac_str(rep.dF_minus)} | {_frac_str(rep.dF)}"
        )
    return "\n".join(lines)
