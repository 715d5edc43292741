"""Serre and Coxeter transformations on quiver K-theory, and the entropy
line of the Serre functor.

With C the Euler matrix (entry(i,j) = delta_ij - #arrows(i->j)) the Serre
functor acts on K-theory by [S] = C^{-1} C^T and the Coxeter transformation
is [Phi] = -[S]; both are exact integer matrices because C is unimodular for
acyclic quivers.  The entropy of the Serre functor is slope*t + intercept:
slope (h-2)/h with intercept 0 for Dynkin type (Coxeter number h), slope 1
with intercept log rho([S]) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .linalg import (
    IntMatrix,
    int_matvec,
    spectral_radius_int,
    transpose,
    unimodular_inverse,
)
from .quiver import Quiver, classify_graph, euler_matrix, require_connected_acyclic


@dataclass(frozen=True)
class CoxeterData:
    """Euler matrix C, [S] = C^{-1}C^T, [Phi] = -[S], and rho([Phi])."""

    euler: IntMatrix
    serre_matrix: IntMatrix
    coxeter_matrix: IntMatrix
    spectral_radius: float

    def to_json_obj(self) -> dict:
        return {
            "euler": [list(r) for r in self.euler],
            "serre": [list(r) for r in self.serre_matrix],
            "coxeter": [list(r) for r in self.coxeter_matrix],
            "rho": self.spectral_radius,
        }


@dataclass(frozen=True)
class EntropyLine:
    """h_t = slope * t + intercept; the slope is exact for Dynkin type."""

    slope: Fraction
    intercept: float


COXETER_NUMBERS = {
    ("E", 6): 12,
    ("E", 7): 18,
    ("E", 8): 30,
}


def coxeter_number(family: str, index: int) -> int:
    if family == "A":
        return index + 1
    if family == "D":
        return 2 * index - 2
    return COXETER_NUMBERS[(family, index)]


def serre_matrix(q: Quiver) -> IntMatrix:
    c = euler_matrix(q)
    return tuple(
        tuple(int(x) for x in row)
        for row in _matmul(unimodular_inverse(c), transpose(c))
    )


def _matmul(a, b):
    n = len(a)
    p = len(b[0])
    return [
        [sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(p)]
        for i in range(n)
    ]


def coxeter_data(q: Quiver) -> CoxeterData:
    require_connected_acyclic(q)
    c = euler_matrix(q)
    s = serre_matrix(q)
    phi = tuple(tuple(-x for x in row) for row in s)
    rho = spectral_radius_int(phi)
    return CoxeterData(c, s, phi, rho)


def coxeter_inverse_matrix(q: Quiver) -> IntMatrix:
    """[Phi^{-1}] = -C^{-T} C, exact."""
    c = euler_matrix(q)
    cinv_t = transpose(unimodular_inverse(c))
    return tuple(tuple(-int(x) for x in row) for row in _matmul(cinv_t, c))


def serre_entropy(q: Quiver) -> EntropyLine:
    """Entropy line of the Serre functor of D^b(kQ).

    Dynkin quivers are fractional Calabi-Yau with S^h = [h-2], giving the
    exact rational slope (h-2)/h; otherwise h_t(S) = t + log rho([S]).
    """
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if gc.is_dynkin:
        h = coxeter_number(gc.family, gc.index)
        return EntropyLine(Fraction(h - 2, h), 0.0)
    data = coxeter_data(q)
    rho = data.spectral_radius
    intercept = 0.0 if abs(rho - 1.0) < 1e-12 else math.log(rho)
    return EntropyLine(Fraction(1), intercept)


def stretch_factor_kronecker(m: int) -> float:
    """Stretch factor (m^2 + sqrt(m^4 - 4 m^2))/2 - 1 of the pseudo-Anosov
    autoequivalence of D^b(K(m)); equals rho([Phi]) of K(m)."""
    if m < 3:
        raise DomainError("stretch factor is defined for m >= 3")
    return (m * m + math.sqrt(m**4 - 4 * m * m)) / 2 - 1


def growth_rate_check(q: Quiver, steps: int) -> float:
    """(||[Phi^{-1}]^steps d||_1)^(1/steps) with d the all-ones vector.

    Exact integer iteration followed by one logarithm; tends to rho([Phi])
    as steps grows.  Any strictly positive seed has the same limit when
    rho > 1, so the sum of simples is used instead of the projectives.
    Dynkin quivers are rejected ([Phi] has finite order there and the
    iteration does not track rho).
    """
    require_connected_acyclic(q)
    if steps < 1:
        raise DomainError("steps must be >= 1")
    if classify_graph(q).is_dynkin:
        raise DomainError("growth-rate iteration needs a non-Dynkin quiver")
    phi_inv = coxeter_inverse_matrix(q)
    v = (1,) * q.n
    for _ in range(steps):
        v = int_matvec(phi_inv, v)
    norm = sum(abs(x) for x in v)
    if norm == 0:
        raise DomainError("iteration collapsed to zero (unexpected)")
    return math.exp(math.log(norm) / steps)
