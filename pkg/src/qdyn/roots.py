"""Positive root systems of Dynkin, Euclidean, and Kronecker quivers.

Membership is the Euler-form predicate <r, r> <= 1, valid exactly for these
graph classes; everything here is exact integer arithmetic.  Real roots have
<r, r> = 1, imaginary ones <r, r> <= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .quiver import (
    DimVector,
    Quiver,
    as_dims,
    classify_graph,
    dims_to_map,
    euler_form,
    require_connected_acyclic,
    symmetrized_euler_matrix,
)

REAL = "real"
IMAGINARY = "imaginary"

# Largest coordinate of a highest root over the A/D/E types (attained by E8);
# bounds the Dynkin enumeration box.
DYNKIN_BOX_BOUND = 6


def root_class(q: Quiver, r: DimVector) -> str:
    value = euler_form(q, r, r)
    return REAL if value == 1 else IMAGINARY


def is_positive_root(q: Quiver, r) -> str | None:
    """Return "real"/"imaginary" for r in Delta_+, or None.

    Only Dynkin, Euclidean, and Kronecker quivers carry the <r,r> <= 1
    description of the root system; wild quivers are rejected.
    """
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if gc.is_wild:
        raise DomainError("root membership by the Euler form is only valid for "
                          "Dynkin, Euclidean, and Kronecker quivers")
    rv = as_dims(q, r)
    if any(x < 0 for x in rv):
        raise DomainError("dimension vector must be nonnegative")
    if not any(rv):
        raise DomainError("the zero vector is not a root")
    value = euler_form(q, rv, rv)
    if value > 1:
        return None
    return REAL if value == 1 else IMAGINARY


def _root_closure(q: Quiver, box: tuple[int, ...]) -> set[DimVector]:
    """All positive roots inside the coordinate box, by breadth-first search.

    Starts at the simple roots and adds one to a single coordinate per step;
    every positive root is reachable this way because subtracting some simple
    root from a non-simple root stays inside Delta_+.
    """
    n = q.n
    simples = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    found: set[DimVector] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                if r[i] + 1 > box[i]:
                    continue
                cand = r[:i] + (r[i] + 1,) + r[i + 1:]
                if cand in found:
                    continue
                if euler_form(q, cand, cand) <= 1:
                    found.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return found


def enumerate_dynkin(q: Quiver) -> tuple[DimVector, ...]:
    """The complete finite positive root system of a Dynkin quiver."""
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if not gc.is_dynkin:
        raise DomainError("root enumeration over a box requires a Dynkin quiver")
    roots = sorted(_root_closure(q, (DYNKIN_BOX_BOUND,) * q.n))
    assert all(euler_form(q, r, r) == 1 for r in roots)
    if gc.family in ("A", "D"):
        # The box bound is only attained by E8; A/D roots stay strictly inside.
        assert all(max(r) < DYNKIN_BOX_BOUND for r in roots)
    return tuple(roots)


def null_root(q: Quiver) -> DimVector:
    """Minimal positive integer vector delta generating the radical of the
    symmetrized Euler form of a Euclidean quiver."""
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if not gc.is_euclidean:
        raise DomainError("null root exists only for Euclidean quivers")
    sym = symmetrized_euler_matrix(q)
    n = q.n
    # Kernel of sym by exact elimination.
    rows = [[Fraction(sym[i][j]) for j in range(n)] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        d = rows[r][c]
        rows[r] = [x / d for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise DomainError("symmetrized Euler form kernel is not one-dimensional "
                          "(classification bug)")
    fc = free[0]
    vec = [Fraction(0)] * n
    vec[fc] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -rows[i][fc]
    denom = math.lcm(*[x.denominator for x in vec])
    ints = [int(x * denom) for x in vec]
    g = math.gcd(*[abs(x) for x in ints])
    ints = [x // g for x in ints]
    if any(x < 0 for x in ints):
        ints = [-x for x in ints]
    delta = tuple(ints)
    if any(x < 1 for x in delta):
        raise DomainError("null root is not strictly positive (classification bug)")
    assert euler_form(q, delta, delta) == 0
    return delta


@dataclass(frozen=True)
class AffineRootSystem:
    """Delta_+ of a Euclidean quiver: delta plus one minimal representative
    per coset of Z*delta, so Delta_+ = union of (beta_i + N*delta)."""

    quiver: Quiver
    delta: DimVector
    coset_reps: tuple[DimVector, ...]

    def roots_up_to(self, depth: int) -> list[DimVector]:
        """All beta_i + n*delta with 0 <= n <= depth."""
        out = []
        for beta in self.coset_reps:
            for n in range(depth + 1):
                out.append(tuple(b + n * d for b, d in zip(beta, self.delta)))
        return sorted(set(out))


def enumerate_euclidean(q: Quiver) -> AffineRootSystem:
    """Coset decomposition of Delta_+ modulo the null root.

    Scans the box 0 <= r <= 2*delta (any root reduces into it mod delta) and
    keeps the minimal member of each coset; representatives are ordered
    lexicographically in vertex order.
    """
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if not gc.is_euclidean:
        raise DomainError("coset enumeration requires a Euclidean quiver")
    delta = null_root(q)
    box = tuple(2 * d for d in delta)
    roots = _root_closure(q, box)
    reps: set[DimVector] = set()
    for r in roots:
        cur = r
        while True:
            down = tuple(a - b for a, b in zip(cur, delta))
            if all(x >= 0 for x in down) and any(down):
                cur = down
            else:
                break
        reps.add(cur)
    # Closure sanity: stepping a representative up by delta stays a root.
    for beta in reps:
        up = tuple(a + b for a, b in zip(beta, delta))
        if all(u <= 2 * d for u, d in zip(up, delta)) and up not in roots:
            raise DomainError("coset scan box violated closure (internal error)")
    return AffineRootSystem(q, delta, tuple(sorted(reps)))


def enumerate_kronecker(l: int, depth: int) -> list[tuple[tuple[int, int], str]]:
    """All (n, m) in Delta_{l+} with max(n, m) <= depth, tagged real/imaginary.

    Membership is n^2 + m^2 - l*n*m <= 1 with (n, m) != (0, 0); the class
    split is exact integer arithmetic (real iff the value is 1).
    """
    if l < 3:
        raise DomainError("Kronecker root enumeration needs l >= 3")
    if depth < 1:
        raise DomainError("depth must be >= 1")
    out = []
    for n in range(depth + 1):
        for m in range(depth + 1):
            if n == 0 and m == 0:
                continue
            value = n * n + m * m - l * n * m
            if value <= 1:
                out.append(((n, m), REAL if value == 1 else IMAGINARY))
    return out


def is_schur_kronecker(l: int, n: int, m: int) -> bool:
    """Every element of Delta_{l+} is a Schur root (recorded fact; no
    independent computation performed here)."""
    if l < 3:
        raise DomainError("Schur predicate is exposed for K(l), l >= 3")
    if n < 0 or m < 0 or (n == 0 and m == 0) or n * n + m * m - l * n * m > 1:
        raise DomainError(f"({n}, {m}) is not a positive root of K({l})")
    return True


def roots_to_json_obj(q: Quiver, roots: list[tuple[DimVector, str]]) -> list[dict]:
    return [{"dims": dims_to_map(q, r), "class": cls} for r, cls in roots]


def roots_to_csv(q: Quiver, roots: list[tuple[DimVector, str]]) -> str:
    from .serialize import to_csv

    header = list(q.vertices) + ["class"]
    rows = [list(r) + [cls] for r, cls in roots]
    return to_csv(header, rows)
