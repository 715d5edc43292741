"""Entropy of endofunctors of semisimple categories.

An endofunctor is a square matrix of Laurent polynomials with nonnegative
integer coefficients (counting shifted copies of the generators); functor
composition is matrix multiplication.  Evaluation substitutes z = e^{-t},
so the entry z^{-n} stands for a copy of the generator in shift [n] and the
shift functor has entropy n*t.  The entropy at t is log of the spectral
radius of the evaluated nonnegative matrix.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DomainError, ParseError
from .linalg import spectral_radius_float


def poincare_complexity(dims: Mapping[int, int], t: float) -> float:
    """sum over n of dims[n] * e^{-n t} for a finitely supported dims map."""
    total = 0.0
    for n, d in dims.items():
        if d < 0:
            raise DomainError("cohomology dimensions must be nonnegative")
        total += d * math.exp(-n * t)
    return total


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial with nonnegative integer coefficients.

    Stored as sorted (exponent, coefficient) pairs with zero coefficients
    dropped.
    """

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for _, c in self.terms:
            if c < 0:
                raise DomainError("Laurent coefficients must be nonnegative")

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        terms = tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c != 0))
        return cls(terms)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(())

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls.from_dict({exp: coef})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.from_dict({0: c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def evaluate(self, t: float) -> float:
        """Value at z = e^{-t}; raises on float overflow."""
        total = 0.0
        for e, c in self.terms:
            try:
                total += c * math.exp(-e * t)
            except OverflowError:
                raise DomainError(f"overflow evaluating z^{e} at t={t}") from None
        if math.isinf(total):
            raise DomainError(f"overflow evaluating Laurent polynomial at t={t}")
        return total


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix of Laurent polynomials; at least one entry nonzero."""

    size: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if self.size < 1 or len(self.entries) != self.size or any(
            len(row) != self.size for row in self.entries
        ):
            raise DomainError("Laurent matrix must be square")
        if all(p.is_zero for row in self.entries for p in row):
            raise DomainError("Laurent matrix must have a nonzero entry")

    @classmethod
    def from_rows(cls, rows) -> "LaurentMatrix":
        ent = tuple(tuple(p for p in row) for row in rows)
        return cls(len(ent), ent)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.size != other.size:
            raise DomainError("size mismatch in Laurent matrix product")
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return LaurentMatrix(n, tuple(rows))

    def power(self, k: int) -> "LaurentMatrix":
        if k < 1:
            raise DomainError("matrix power needs k >= 1")
        out = self
        for _ in range(k - 1):
            out = out @ self
        return out

    def to_json_obj(self) -> dict:
        cells = []
        for row in self.entries:
            for p in row:
                cells.append([{"exp": e, "coef": c} for e, c in p.terms])
        return {"size": self.size, "entries": cells}


def parse_laurent_matrix(text: str) -> LaurentMatrix:
    """Parse the matrix file format.

    Format (JSON): {"size": n, "entries": [cell, ...]} with n*n cells in
    row-major order; each cell is a list of {"exp": int, "coef": int} terms.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or "size" not in data or "entries" not in data:
        raise ParseError("matrix file needs 'size' and 'entries' fields")
    n = data["size"]
    cells = data["entries"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'size' must be a positive integer")
    if not isinstance(cells, list) or len(cells) != n * n:
        raise ParseError(f"'entries' must list {n * n} cells in row-major order")
    polys = []
    for idx, cell in enumerate(cells):
        if not isinstance(cell, list):
            raise ParseError(f"cell {idx} must be a list of terms")
        coeffs: dict[int, int] = {}
        for term in cell:
            if not (isinstance(term, dict) and "exp" in term and "coef" in term):
                raise ParseError(f"cell {idx} has a term without 'exp'/'coef'")
            e, c = term["exp"], term["coef"]
            if not (isinstance(e, int) and isinstance(c, int)):
                raise ParseError(f"cell {idx} has non-integer exponent or coefficient")
            if c < 0:
                raise ParseError(f"cell {idx} has a negative coefficient")
            coeffs[e] = coeffs.get(e, 0) + c
        polys.append(LaurentPoly.from_dict(coeffs))
    rows = tuple(tuple(polys[i * n + j] for j in range(n)) for i in range(n))
    return LaurentMatrix(n, rows)


def evaluate(p: LaurentMatrix, t: float) -> np.ndarray:
    """Entry-wise evaluation at z = e^{-t}; all entries nonnegative."""
    return np.array(
        [[p.entries[i][j].evaluate(t) for j in range(p.size)] for i in range(p.size)],
        dtype=float,
    )


def entropy_at(p: LaurentMatrix, t: float) -> float:
    """log of the spectral radius of P(e^{-t}); -inf when the radius is 0."""
    a = evaluate(p, t)
    rho = spectral_radius_float(a)
    if rho == 0.0:
        return float("-inf")
    return math.log(rho)


@dataclass(frozen=True)
class EntropyCurve:
    t_min: float
    t_max: float
    count: int
    samples: tuple[tuple[float, float], ...]

    def to_csv(self) -> str:
        from .serialize import to_csv

        return to_csv(["t", "h"], [list(s) for s in self.samples])


def entropy_curve(p: LaurentMatrix, t_min: float, t_max: float, count: int) -> EntropyCurve:
    """Uniform-grid sampling of entropy_at; grid points are independent, so
    sampling is safe to parallelize."""
    if not (t_min < t_max):
        raise DomainError("t range must satisfy t_min < t_max")
    if count < 2:
        raise DomainError("need at least 2 sample points")
    samples = []
    for k in range(count):
        t = t_min + (t_max - t_min) * k / (count - 1)
        samples.append((t, entropy_at(p, t)))
    return EntropyCurve(t_min, t_max, count, tuple(samples))


# -- spectral curve -----------------------------------------------------------

_BiPoly = dict[tuple[int, int], int]  # (x exponent, lambda exponent) -> coeff


def _bp_add(a: _BiPoly, b: _BiPoly) -> _BiPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _bp_mul(a: _BiPoly, b: _BiPoly) -> _BiPoly:
    out: _BiPoly = {}
    for (xa, la), ca in a.items():
        for (xb, lb), cb in b.items():
            k = (xa + xb, la + lb)
            out[k] = out.get(k, 0) + ca * cb
            if out[k] == 0:
                del out[k]
    return out


def _bp_det(m: list[list[_BiPoly]]) -> _BiPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    out: _BiPoly = {}
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = _bp_mul(m[0][j], _bp_det(minor))
        if j % 2:
            term = {k: -v for k, v in term.items()}
        out = _bp_add(out, term)
    return out


@dataclass(frozen=True)
class SpectralCurvePoly:
    """det(lambda*I - P(x)) with denominators cleared by x^clearing_exponent."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]  # ((x_exp, lambda_exp), coef)
    clearing_exponent: int

    def evaluate(self, x: float, lam: float) -> float:
        return sum(c * x**xe * lam**le for (xe, le), c in self.coeffs)

    def relative_residual(self, x: float, lam: float) -> float:
        mag = sum(abs(c * x**xe * lam**le) for (xe, le), c in self.coeffs)
        if mag == 0.0:
            return 0.0
        return abs(self.evaluate(x, lam)) / mag

    def to_json_obj(self) -> dict:
        return {
            "clearing_exponent": self.clearing_exponent,
            "terms": [
                {"x": xe, "lambda": le, "coef": c} for (xe, le), c in self.coeffs
            ],
        }


def spectral_curve_poly(p: LaurentMatrix) -> SpectralCurvePoly:
    """Integer bivariate polynomial cutting out the spectral curve
    {(x, lambda) : det(lambda*I - P(x)) = 0}, negative x-powers cleared."""
    n = p.size
    mat: list[list[_BiPoly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            cell: _BiPoly = {(e, 0): -c for e, c in p.entries[i][j].terms}
            if i == j:
                cell = _bp_add(cell, {(0, 1): 1})
            row.append(cell)
        mat.append(row)
    det = _bp_det(mat)
    min_x = min((xe for (xe, _le) in det), default=0)
    k = max(0, -min_x)
    cleared = {(xe + k, le): c for (xe, le), c in det.items()}
    ordered = tuple(sorted(cleared.items()))
    return SpectralCurvePoly(ordered, k)


def gelfand_iterate(p: LaurentMatrix, t: float, steps: int) -> float:
    """Gelfand-limit estimate of the spectral radius of P(e^{-t}).

    rho(A) = lim ||A^n||^(1/n) for the entrywise 1-norm; the estimate
    returned is the consecutive-norm ratio ||A^steps|| / ||A^{steps-1}||
    (equal to the plain root for 1x1 matrices), whose bias decays
    geometrically instead of like 1/steps.  The running power is rescaled
    by its maximum entry every step, so no overflow occurs for rho > 1.
    """
    if steps < 1:
        raise DomainError("steps must be >= 1")
    a = evaluate(p, t)
    if steps == 1:
        return float(a.sum())
    b = a.copy()
    for _ in range(steps - 2):
        m = b.max()
        if m == 0.0:
            return 0.0
        b = (b / m) @ a
    m = b.max()
    if m == 0.0:
        return 0.0
    b /= m
    prev = b.sum()
    nxt = (b @ a).sum()
    if prev == 0.0:
        return 0.0
    return float(nxt / prev)
