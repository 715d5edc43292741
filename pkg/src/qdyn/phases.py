"""Phase sets of stability conditions: the superset R_{v,Delta+}, the
density trichotomy, and the Kronecker arc geometry.

Central charges live in H = {r e^{i pi s} : r > 0, 0 < s <= 1}; a phase
point is the parameter t in (-1, 1] of a unit-circle point e^{i pi t}.
Phases of root images are computed with atan2 on exact complex sums; only
f_function uses the arccos formula (the two routes are cross-checked in the
test suite).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import DomainError, ParseError
from .quiver import Quiver, classify_graph, require_connected_acyclic
from .roots import enumerate_dynkin, enumerate_euclidean, enumerate_kronecker

# Angular deduplication tolerance for phase sets, in radians.
DEDUP_TOL = 1e-12

# Relative threshold below which a charge pairing (v, r) counts as zero.
ZERO_PAIRING_TOL = 1e-12


@dataclass(frozen=True)
class CentralCharge:
    """Charge values on the simple objects, stored as (modulus, phase/pi).

    Every value r*e^{i pi s} has r > 0 and s in (0, 1], which places it in
    the strict upper half-plane H; entry order is meaningful where an
    operation distinguishes the two vertices of a Kronecker quiver.
    """

    entries: tuple[tuple[str, float, float], ...]  # (vertex, r, s)

    def __post_init__(self):
        seen = set()
        for v, r, s in self.entries:
            if v in seen:
                raise DomainError(f"duplicate charge for vertex {v}")
            seen.add(v)
            if not r > 0:
                raise DomainError(f"charge modulus at {v} must be positive")
            if not (0 < s <= 1):
                raise DomainError(f"charge phase parameter at {v} must lie in (0, 1]")

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(v for v, _, _ in self.entries)

    def value(self, v: str) -> complex:
        for u, r, s in self.entries:
            if u == v:
                return r * cmath.exp(1j * math.pi * s)
        raise DomainError(f"no charge for vertex {v}")

    def phase_param(self, v: str) -> float:
        for u, _, s in self.entries:
            if u == v:
                return s
        raise DomainError(f"no charge for vertex {v}")

    def as_map(self) -> dict[str, complex]:
        return {v: self.value(v) for v, _, _ in self.entries}

    @classmethod
    def from_pairs(cls, pairs) -> "CentralCharge":
        return cls(tuple((str(v), float(r), float(s)) for v, r, s in pairs))

    @classmethod
    def from_complex_map(cls, values: Mapping[str, complex]) -> "CentralCharge":
        """Convert raw complex values, rejecting the closed lower half-plane
        (negative reals are fine, they have s = 1) and zero."""
        pairs = []
        for v, w in values.items():
            w = complex(w)
            if w == 0:
                raise DomainError(f"charge at {v} must be nonzero")
            if w.imag < 0 or (w.imag == 0 and w.real > 0):
                raise DomainError(f"charge at {v} must lie in the upper half-plane H")
            s = math.atan2(w.imag, w.real) / math.pi
            if s <= 0:
                s = 1.0
            pairs.append((v, abs(w), s))
        return cls.from_pairs(pairs)


def parse_charge(text: str) -> CentralCharge:
    """Parse the charge file format.

    Format (JSON): {"charges": {vertex: {"r": float > 0, "s": float in (0,1]}}}
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or "charges" not in data or not isinstance(data["charges"], dict):
        raise ParseError("charge file needs a 'charges' object")
    pairs = []
    for v, val in data["charges"].items():
        if not (isinstance(val, dict) and "r" in val and "s" in val):
            raise ParseError(f"charge for {v} needs 'r' and 's' fields")
        pairs.append((v, val["r"], val["s"]))
    try:
        return CentralCharge.from_pairs(pairs)
    except DomainError as e:
        raise ParseError(str(e)) from None


def normalize_angle(t: float) -> float:
    """Canonical representative in (-1, 1] of an angle in units of pi."""
    t = math.fmod(t, 2.0)
    if t <= -1.0:
        t += 2.0
    elif t > 1.0:
        t -= 2.0
    return 0.0 if t == 0.0 else t


def phase_of_complex(w: complex) -> float:
    """Phase parameter t in (-1, 1] with w/|w| = e^{i pi t}."""
    if w == 0:
        raise DomainError("zero has no phase")
    return normalize_angle(math.atan2(w.imag, w.real) / math.pi)


def _dedup_angles(angles: list[float]) -> list[float]:
    if not angles:
        return []
    angles = sorted(angles)
    out = [angles[0]]
    for a in angles[1:]:
        if (a - out[-1]) * math.pi > DEDUP_TOL:
            out.append(a)
    # wraparound: -1+eps and 1 name the same circle point
    if len(out) > 1 and (2.0 - (out[-1] - out[0])) * math.pi <= DEDUP_TOL:
        out.pop(0)
    return out


def _charge_vector(q: Quiver, z: CentralCharge) -> list[complex]:
    if set(z.vertices) != set(q.vertices):
        raise DomainError("charge vertices do not match the quiver")
    return [z.value(v) for v in q.vertices]


def _kronecker_source_sink(q: Quiver) -> tuple[str, str]:
    sources = {s for s, _ in q.arrows}
    if len(sources) != 1:
        raise DomainError("Kronecker quiver must have all arrows parallel")
    src = next(iter(sources))
    snk = next(t for _, t in q.arrows)
    return src, snk


def _roots_for(q: Quiver, depth: int) -> list[tuple[int, ...]]:
    gc = classify_graph(q)
    if gc.is_dynkin:
        return list(enumerate_dynkin(q))
    if gc.is_euclidean:
        return enumerate_euclidean(q).roots_up_to(depth)
    if gc.is_kronecker:
        src, _snk = _kronecker_source_sink(q)
        si = q.index(src)
        out = []
        for (n, m), _cls in enumerate_kronecker(gc.index, depth):
            vec = [0, 0]
            vec[si] = n
            vec[1 - si] = m
            out.append(tuple(vec))
        return out
    raise DomainError("phase computations cover Dynkin, Euclidean, and Kronecker "
                      "quivers only")


def phase_superset(q: Quiver, z: CentralCharge, depth: int) -> tuple[float, ...]:
    """The set {+- (v,r)/|(v,r)| : r in Delta_+} as sorted phase parameters.

    Roots with (v, r) = 0 contribute nothing.  For Euclidean quivers the
    roots used are beta_i + n*delta with n <= depth; for K(l) those with
    max(n, m) <= depth.
    """
    require_connected_acyclic(q)
    if depth < 1:
        raise DomainError("depth must be >= 1")
    vec = _charge_vector(q, z)
    angles: list[float] = []
    for r in _roots_for(q, depth):
        w = sum(c * x for c, x in zip(vec, r))
        scale = sum(abs(c) * x for c, x in zip(vec, r))
        if abs(w) <= ZERO_PAIRING_TOL * scale:
            continue
        angles.append(phase_of_complex(w))
        angles.append(phase_of_complex(-w))
    return tuple(_dedup_angles(angles))


@dataclass(frozen=True)
class EuclideanLimits:
    finite: bool
    limit: float | None


def euclidean_limits(q: Quiver, z: Union[CentralCharge, Mapping[str, complex]]) -> EuclideanLimits:
    """Finite iff (v, delta) = 0; otherwise the two limit points are
    +-(v, delta)/|(v, delta)|.

    Charges in H always have (v, delta) != 0 (the imaginary parts cannot
    cancel), so the finite branch is reachable only through a raw complex
    vector, which this function also accepts.
    """
    require_connected_acyclic(q)
    gc = classify_graph(q)
    if not gc.is_euclidean:
        raise DomainError("limit-point analysis requires a Euclidean quiver")
    delta = enumerate_euclidean(q).delta
    if isinstance(z, CentralCharge):
        vec = _charge_vector(q, z)
    else:
        if set(z) != set(q.vertices):
            raise DomainError("charge vertices do not match the quiver")
        vec = [complex(z[v]) for v in q.vertices]
        if all(w == 0 for w in vec):
            raise DomainError("charge vector must be nonzero")
    w = sum(c * d for c, d in zip(vec, delta))
    scale = sum(abs(c) * d for c, d in zip(vec, delta))
    if abs(w) <= ZERO_PAIRING_TOL * scale:
        return EuclideanLimits(True, None)
    return EuclideanLimits(False, phase_of_complex(w))


def f_function(r1: float, phi1: float, r2: float, phi2: float, x: float) -> float:
    """Phase (radians) of x*z1 + z2 for z_i = r_i e^{i phi_i}.

    f(x) = arccos((x r1 cos phi1 + r2 cos phi2) /
                  sqrt(x^2 r1^2 + r2^2 + 2 x r1 r2 cos(phi1 - phi2)));
    strictly increasing from f(0) = phi2 toward the supremum phi1.
    """
    if not (r1 > 0 and r2 > 0):
        raise DomainError("moduli must be positive")
    if not (0 < phi2 < phi1 <= math.pi):
        raise DomainError("angles must satisfy 0 < phi2 < phi1 <= pi")
    if x < 0:
        raise DomainError("x must be nonnegative")
    num = x * r1 * math.cos(phi1) + r2 * math.cos(phi2)
    den = math.sqrt(x * x * r1 * r1 + r2 * r2 + 2 * x * r1 * r2 * math.cos(phi1 - phi2))
    return math.acos(max(-1.0, min(1.0, num / den)))


@dataclass(frozen=True)
class KroneckerArc:
    """Arc endpoints (radians) and the two real-root phase sequences:
    a_seq climbs from phi2 to u, c_seq descends from phi1 to v."""

    u: float
    v: float
    a_seq: tuple[float, ...]
    c_seq: tuple[float, ...]


def kronecker_arc(l: int, z: CentralCharge, depth: int = 50) -> KroneckerArc:
    """Dense-arc geometry for K(l) in the chamber arg Z(s1) > arg Z(s2).

    The charge's first entry is s1 (the source simple), the second s2.
    u = f((l - sqrt(l^2-4))/2) and v = f((l + sqrt(l^2-4))/2); the sequences
    are the phases of the real roots, f((l -+ sqrt(l^2-4+4/m^2))/2).
    """
    if l < 3:
        raise DomainError("the dense arc exists for K(l) with l >= 3")
    if depth < 1:
        raise DomainError("depth must be >= 1")
    if len(z.entries) != 2:
        raise DomainError("Kronecker charge needs exactly two vertices")
    (_, rr1, s1), (_, rr2, s2) = z.entries
    if not s1 > s2:
        raise DomainError("dense-arc chamber requires arg Z(s1) > arg Z(s2)")
    phi1 = math.pi * s1
    phi2 = math.pi * s2
    disc = math.sqrt(l * l - 4)
    u = f_function(rr1, phi1, rr2, phi2, (l - disc) / 2)
    v = f_function(rr1, phi1, rr2, phi2, (l + disc) / 2)
    a_seq = []
    c_seq = [phi1]
    for m in range(1, depth + 1):
        root = math.sqrt(l * l - 4 + 4 / (m * m))
        a_seq.append(f_function(rr1, phi1, rr2, phi2, (l - root) / 2))
        c_seq.append(f_function(rr1, phi1, rr2, phi2, (l + root) / 2))
    return KroneckerArc(u, v, tuple(a_seq), tuple(c_seq))


@dataclass(frozen=True)
class Finite:
    points: tuple[float, ...]


@dataclass(frozen=True)
class TwoLimitPoints:
    limit: float
    samples: tuple[float, ...]


@dataclass(frozen=True)
class DenseArc:
    u: float  # radians
    v: float  # radians
    samples: tuple[float, ...]  # radians, inside [u, v]


@dataclass(frozen=True)
class PhaseReport:
    verdict: Union[Finite, TwoLimitPoints, DenseArc]
    depth: int
    note: str | None = None


def density_verdict(q: Quiver, z: CentralCharge, depth: int) -> PhaseReport:
    """Density trichotomy for the phase set.

    Dynkin: finite (exhaustive point list).  Euclidean: finite when
    (v, delta) = 0, else exactly the two limit points +-(v,delta)/|(v,delta)|
    (a superset classification: the root-image set is what is classified).
    K(l >= 3) in the chamber arg Z(s1) > arg Z(s2): dense arc [u, v]; the
    verdict comes from the classification theorem, sampling only
    illustrates it.
    """
    require_connected_acyclic(q)
    if depth < 1:
        raise DomainError("depth must be >= 1")
    gc = classify_graph(q)
    if gc.is_dynkin:
        return PhaseReport(Finite(phase_superset(q, z, depth)), depth)
    if gc.is_euclidean:
        lim = euclidean_limits(q, z)
        samples = phase_superset(q, z, depth)
        if lim.finite:
            return PhaseReport(Finite(samples), depth, note="superset classification")
        return PhaseReport(TwoLimitPoints(lim.limit, samples), depth,
                           note="superset classification")
    if gc.is_kronecker:
        src, snk = _kronecker_source_sink(q)
        if set(z.vertices) != set(q.vertices):
            raise DomainError("charge vertices do not match the quiver")
        s_src = z.phase_param(src)
        s_snk = z.phase_param(snk)
        if not s_src > s_snk:
            raise DomainError("dense-arc chamber requires arg Z(s1) > arg Z(s2) "
                              "(source simple before sink simple)")
        ordered = CentralCharge.from_pairs(
            [(v, r, s) for v, r, s in z.entries if v == src]
            + [(v, r, s) for v, r, s in z.entries if v == snk]
        )
        arc = kronecker_arc(gc.index, ordered, depth)
        phi1 = math.pi * s_src
        phi2 = math.pi * s_snk
        r_src = next(r for v, r, _ in z.entries if v == src)
        r_snk = next(r for v, r, _ in z.entries if v == snk)
        samples = sorted({
            f_function(r_src, phi1, r_snk, phi2, n / m)
            for (n, m), cls in enumerate_kronecker(gc.index, depth)
            if cls == "imaginary"
        })
        return PhaseReport(DenseArc(arc.u, arc.v, tuple(samples)), depth)
    raise DomainError("density classification covers Dynkin, Euclidean, and "
                      "Kronecker quivers only")


def gap_statistic(report: PhaseReport, depth: int) -> float:
    """Largest gap between consecutive dense-arc samples (radians).

    With fewer than two samples the undivided arc length v - u is returned.
    Boundary gaps against u and v are not counted; radians throughout.
    """
    if not isinstance(report.verdict, DenseArc):
        raise DomainError("gap statistic applies to dense-arc reports")
    if report.depth != depth:
        raise DomainError(f"report was sampled at depth {report.depth}, not {depth}")
    arc = report.verdict
    samples = sorted(s for s in arc.samples if arc.u - 1e-12 <= s <= arc.v + 1e-12)
    if len(samples) < 2:
        return arc.v - arc.u
    return max(b - a for a, b in zip(samples, samples[1:]))


def report_to_json_obj(report: PhaseReport) -> dict:
    out: dict = {"depth": report.depth}
    v = report.verdict
    if isinstance(v, Finite):
        out["verdict"] = "finite"
        out["points"] = list(v.points)
    elif isinstance(v, TwoLimitPoints):
        out["verdict"] = "two_limit_points"
        out["limit"] = v.limit
        out["samples"] = list(v.samples)
    else:
        out["verdict"] = "dense_arc"
        out["u"] = v.u
        out["v"] = v.v
        out["samples"] = list(v.samples)
    if report.note is not None:
        out["note"] = report.note
    return out
