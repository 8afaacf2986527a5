"""Exact integer polynomial helpers shared by the residue and field modules.

Polynomials are tuples of Python ints, constant term first.  Everything is
exact; the only division performed is the fraction-free one inside the
Bareiss determinant.
"""

from __future__ import annotations


def normalize(a) -> tuple[int, ...]:
    """Drop trailing zero coefficients."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def poly_rem_monic(a, f) -> tuple[int, ...]:
    """Remainder of a modulo monic f, exact over the integers."""
    assert f[-1] == 1, "modulus must be monic"
    n = len(f) - 1
    a = list(a)
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(n):
                a[i - n + j] -= c * f[j]
    return tuple(a[:n]) + (0,) * max(0, n - len(a))


def compose_mod(g, s, f) -> tuple[int, ...]:
    """g(s(x)) reduced modulo monic f (Horner in the quotient ring)."""
    n = len(f) - 1
    acc: tuple[int, ...] = (0,) * n
    for c in reversed(g):
        acc = poly_rem_monic(poly_mul(acc, s), f)
        acc = tuple(x + (c if k == 0 else 0) for k, x in enumerate(acc))
    return acc


def mul_mod(a, b, f) -> tuple[int, ...]:
    """Product of a and b modulo monic f, padded to degree < deg f."""
    n = len(f) - 1
    r = poly_rem_monic(poly_mul(a, b), f)
    return tuple(r) + (0,) * (n - len(r))


def mult_matrix(a, f) -> list[list[int]]:
    """Matrix of multiplication by a on the power basis of Z[x]/(f), rows = images.

    Row j holds the coordinates of a * x^j mod f.
    """
    n = len(f) - 1
    rows = []
    cur = tuple(a[:n]) + (0,) * (n - len(a))
    for _ in range(n):
        rows.append(list(cur))
        cur = poly_rem_monic(poly_mul(cur, (0, 1)), f)
    return rows


def det_bareiss(m: list[list[int]]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    a = [row[:] for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def norm_mod(a, f) -> int:
    """Field norm of a mod monic irreducible f: det of the multiplication matrix."""
    return det_bareiss(mult_matrix(a, f))


def poly_derivative(f) -> tuple[int, ...]:
    return tuple(i * c for i, c in enumerate(f))[1:] or (0,)


def resultant(f, g) -> int:
    """Resultant of f and g via the Sylvester matrix, exact."""
    fn = normalize(f)
    gn = normalize(g)
    m, n = len(fn) - 1, len(gn) - 1
    if m < 0 or n < 0:
        return 0
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(fn)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(gn)):
            row[i + j] = c
        rows.append(row)
    return det_bareiss(rows) if size else 1


def discriminant(f) -> int:
    """Discriminant of monic f."""
    n = len(f) - 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, poly_derivative(f))


def newton_power_sums(f, count: int) -> list[int]:
    """Power sums p_0..p_{count-1} of the roots of monic f (Newton's identities).

    Recurrence: p_k + sum_{i=1}^{min(k-1,n)} a_{n-i} p_{k-i} + [k<=n] k a_{n-k} = 0.
    """
    n = len(f) - 1
    p = [n]
    for k in range(1, count):
        acc = 0
        for i in range(1, min(k - 1, n) + 1):
            acc += f[n - i] * p[k - i]
        if k <= n:
            acc += k * f[n - k]
        p.append(-acc)
    return p
