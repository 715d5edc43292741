"""Exact integer linear algebra and spectral-radius computation.

Matrices stay in exact integer (or Fraction) arithmetic until the final
root-finding step.  Spectral radii of integer matrices are computed from the
exact characteristic polynomial: its square-free part is extracted with
integer polynomial gcds (repeated eigenvalues would otherwise cost half the
floating-point digits), degree <= 4 factors are solved in closed form,
larger ones through LAPACK's balanced companion eigensolver, and every root
is polished with Newton steps against the exact coefficients.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

IntMatrix = tuple[tuple[int, ...], ...]

_NEWTON_STEPS = 6


def identity_int(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*[tuple(r) for r in m]))


def int_matmul(a, b) -> IntMatrix:
    n, k, p = len(a), len(b), len(b[0])
    bt = transpose(b)
    return tuple(
        tuple(sum(a[i][t] * bt[j][t] for t in range(k)) for j in range(p))
        for i in range(n)
    )


def int_matvec(a, v) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def int_matpow(a, k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("negative matrix power")
    result = identity_int(len(a))
    base = tuple(tuple(r) for r in a)
    while k:
        if k & 1:
            result = int_matmul(result, base)
        base = int_matmul(base, base)
        k >>= 1
    return result


def fraction_inverse(m) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals; raises on singular input."""
    n = len(m)
    aug = [
        [Fraction(m[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def unimodular_inverse(m) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    inv = fraction_inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def char_poly_int(m) -> list[int]:
    """Coefficients [1, c_1, ..., c_n] of det(lambda*I - M), exact.

    Faddeev-LeVerrier; every division is exact for integer input.
    """
    n = len(m)
    coeffs = [1]
    mk = [list(row) for row in m]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        q, r = divmod(tr, k)
        if r:
            raise ArithmeticError("non-integer characteristic coefficient")
        c = -q
        coeffs.append(c)
        if k < n:
            for i in range(n):
                mk[i][i] += c
            mk = [
                [sum(m[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
    return coeffs


def _poly_div(p: list[Fraction], d: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = p[:]
    q: list[Fraction] = []
    while len(p) >= len(d) and any(p):
        f = p[0] / d[0]
        q.append(f)
        for i in range(len(d)):
            p[i] -= f * d[i]
        p.pop(0)
    return q, p


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while any(x != 0 for x in b):
        _, r = _poly_div(a, b)
        while r and r[0] == 0:
            r.pop(0)
        a, b = b, r
    lead = a[0]
    return [x / lead for x in a]


def square_free_part(p: list[int]) -> list[int]:
    """Primitive integer polynomial with the same roots, all simple."""
    pf = [Fraction(c) for c in p]
    dpf = [Fraction(c * (len(p) - 1 - i)) for i, c in enumerate(p[:-1])]
    if not dpf:
        return p[:]
    g = _poly_gcd(pf, dpf)
    if len(g) == 1:
        return p[:]
    q, r = _poly_div(pf, g)
    if any(x != 0 for x in r):
        raise ArithmeticError("square-free division left a remainder")
    denom = math.lcm(*[c.denominator for c in q])
    ints = [int(c * denom) for c in q]
    g0 = math.gcd(*[abs(c) for c in ints if c] or [1])
    ints = [c // g0 for c in ints]
    if ints[0] < 0:
        ints = [-c for c in ints]
    return ints


def _roots_quadratic(b: complex, c: complex) -> list[complex]:
    s = cmath.sqrt(b * b - 4 * c)
    return [(-b + s) / 2, (-b - s) / 2]


def _roots_cubic(a: complex, b: complex, c: complex) -> list[complex]:
    # Cardano on x^3 + a x^2 + b x + c via the depressed cubic y^3 + p y + q.
    p = b - a * a / 3
    q = 2 * a**3 / 27 - a * b / 3 + c
    shift = -a / 3
    if abs(p) < 1e-300 and abs(q) < 1e-300:
        return [shift] * 3
    disc = cmath.sqrt((q / 2) ** 2 + (p / 3) ** 3)
    u3 = -q / 2 + disc
    if abs(u3) < 1e-300:
        u3 = -q / 2 - disc
    u = u3 ** (1 / 3)
    omega = complex(-0.5, math.sqrt(3) / 2)
    roots = []
    for k in range(3):
        uk = u * omega**k
        roots.append(uk - p / (3 * uk) + shift)
    return roots


def _roots_quartic(a: complex, b: complex, c: complex, d: complex) -> list[complex]:
    # Ferrari: depress, split into two quadratics via the resolvent cubic.
    p = b - 3 * a * a / 8
    q = c - a * b / 2 + a**3 / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a**4 / 256
    shift = -a / 4
    if abs(q) < 1e-14 * max(1.0, abs(p), abs(r)):
        ys = []
        for z in _roots_quadratic(p, r):
            s = cmath.sqrt(z)
            ys.extend([s, -s])
        return [y + shift for y in ys]
    res = _roots_cubic(2 * p, p * p - 4 * r, -q * q)
    u = max(res, key=abs)
    alpha = cmath.sqrt(u)
    beta = ((p + u) - q / alpha) / 2
    gamma = ((p + u) + q / alpha) / 2
    ys = _roots_quadratic(alpha, beta) + _roots_quadratic(-alpha, gamma)
    return [y + shift for y in ys]


def _poly_eval(p: list[int], x: complex) -> complex:
    acc = 0j
    for c in p:
        acc = acc * x + c
    return acc


def _newton_polish(p: list[int], x: complex) -> complex:
    dp = [c * (len(p) - 1 - i) for i, c in enumerate(p[:-1])]
    for _ in range(_NEWTON_STEPS):
        d = _poly_eval(dp, x)
        if d == 0:
            break
        step = _poly_eval(p, x) / d
        x -= step
        if abs(step) < 1e-16 * max(1.0, abs(x)):
            break
    return x


def poly_roots(p: list[int]) -> list[complex]:
    """All complex roots of a monic-scalable integer polynomial.

    Degree <= 4 uses the closed-form formulas; higher degrees use the
    companion-matrix eigensolver.  Roots are Newton-polished against the
    exact integer coefficients either way.
    """
    while p and p[0] == 0:
        p = p[1:]
    deg = len(p) - 1
    if deg <= 0:
        return []
    lead = p[0]
    mon = [c / lead for c in p]
    if deg == 1:
        roots = [complex(-mon[1])]
    elif deg == 2:
        roots = _roots_quadratic(mon[1], mon[2])
    elif deg == 3:
        roots = _roots_cubic(mon[1], mon[2], mon[3])
    elif deg == 4:
        roots = _roots_quartic(mon[1], mon[2], mon[3], mon[4])
    else:
        roots = [complex(z) for z in np.roots([float(c) for c in p])]
    return [_newton_polish(p, z) for z in roots]


def spectral_radius_int(m) -> float:
    """Spectral radius of an exact integer matrix.

    Repeated eigenvalues are removed exactly before root-finding, so
    unit-circle spectra (Coxeter transformations of Dynkin and extended
    Dynkin quivers) come out with full double precision.
    """
    p = char_poly_int(m)
    roots = poly_roots(square_free_part(p))
    return max(abs(z) for z in roots)


def spectral_radius_float(a: np.ndarray) -> float:
    """max |eigenvalue| of a dense float matrix (LAPACK, balanced)."""
    if a.size == 1:
        return abs(float(a[0, 0]))
    return float(max(abs(np.linalg.eigvals(a))))


def power_iteration_radius(m, steps: int = 200) -> float:
    """Norm-ratio estimate of the spectral radius from vector iteration.

    Converges geometrically when the dominant eigenvalue is simple and
    strictly largest in modulus (the wild-quiver case); used as the
    independent cross-check for the characteristic-polynomial route.
    """
    n = len(m)
    v = [1.0] * n
    ratio = 0.0
    for _ in range(steps):
        w = [sum(m[i][j] * v[j] for j in range(n)) for i in range(n)]
        norm = sum(abs(x) for x in w)
        if norm == 0:
            return 0.0
        ratio = norm / sum(abs(x) for x in v)
        v = [x / norm for x in w]
    return ratio
