"""Quiver data model, Euler form, and graph classification.

A quiver is a finite directed multigraph without edge-loops.  The Euler
matrix follows the convention entry(i, j) = delta_ij - #arrows(i -> j), so
the bilinear form is evaluated row-vector first: <a, b> = a^T M b.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError

DimVector = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    """Immutable directed multigraph with named vertices.

    Parallel arrows are separate entries of ``arrows``; edge-loops are
    rejected.  All operations on quivers are pure functions.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if not self.vertices:
            raise DomainError("quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            dup = sorted({v for v in self.vertices if self.vertices.count(v) > 1})
            raise DomainError(f"duplicate vertex: {dup[0]}")
        vset = set(self.vertices)
        for s, t in self.arrows:
            if s not in vset:
                raise DomainError(f"unknown arrow endpoint: {s}")
            if t not in vset:
                raise DomainError(f"unknown arrow endpoint: {t}")
            if s == t:
                raise DomainError(f"edge-loop at vertex {s} is not allowed")

    def index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise DomainError(f"unknown vertex: {v}") from None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def arrow_indices(self) -> list[tuple[int, int]]:
        idx = {v: i for i, v in enumerate(self.vertices)}
        return [(idx[s], idx[t]) for s, t in self.arrows]

    def arrow_count(self, s: str, t: str) -> int:
        return sum(1 for a in self.arrows if a == (s, t))

    def to_json_obj(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}


def make_quiver(vertices: Iterable[str], arrows: Iterable[tuple[str, str]]) -> Quiver:
    return Quiver(tuple(vertices), tuple((s, t) for s, t in arrows))


def parse_quiver(text: str) -> Quiver:
    """Parse the quiver file format.

    Format (UTF-8 JSON): {"vertices": [string...], "arrows": [[src, dst]...]}
    with arrow multiplicity given by repetition.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("quiver file must be a JSON object")
    for key in ("vertices", "arrows"):
        if key not in data:
            raise ParseError(f"quiver file is missing the '{key}' field")
    verts = data["vertices"]
    arrows = data["arrows"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise ParseError("'vertices' must be a list of strings")
    if not isinstance(arrows, list):
        raise ParseError("'arrows' must be a list of [source, target] pairs")
    pairs = []
    for i, a in enumerate(arrows):
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, str) for x in a)):
            raise ParseError(f"arrow {i} must be a [source, target] pair of strings")
        pairs.append((a[0], a[1]))
    try:
        return make_quiver(verts, pairs)
    except DomainError as e:
        raise ParseError(str(e)) from None


def as_dims(q: Quiver, d) -> DimVector:
    """Normalize a dimension vector to a tuple in quiver vertex order.

    Accepts a mapping vertex -> int (missing vertices count as 0) or a
    sequence aligned with ``q.vertices``.
    """
    if isinstance(d, Mapping):
        unknown = set(d) - set(q.vertices)
        if unknown:
            raise DomainError(f"dimension vector names unknown vertex: {sorted(unknown)[0]}")
        return tuple(int(d.get(v, 0)) for v in q.vertices)
    if isinstance(d, Sequence):
        if len(d) != q.n:
            raise DomainError(f"dimension vector has length {len(d)}, expected {q.n}")
        return tuple(int(x) for x in d)
    raise DomainError("dimension vector must be a mapping or a sequence")


def dims_to_map(q: Quiver, d: DimVector) -> dict[str, int]:
    return {v: int(x) for v, x in zip(q.vertices, d)}


def euler_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of the Euler form: entry(i,j) = delta_ij - #arrows(i->j)."""
    m = [[1 if i == j else 0 for j in range(q.n)] for i in range(q.n)]
    for i, j in q.arrow_indices():
        m[i][j] -= 1
    return tuple(tuple(row) for row in m)


def euler_form(q: Quiver, a, b) -> int:
    """<a, b>_Q = sum_v a_v b_v - sum_{arrows s->t} a_s b_t (exact integers)."""
    av = as_dims(q, a)
    bv = as_dims(q, b)
    total = sum(x * y for x, y in zip(av, bv))
    for i, j in q.arrow_indices():
        total -= av[i] * bv[j]
    return total


def symmetrized_euler_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    m = euler_matrix(q)
    return tuple(
        tuple(m[i][j] + m[j][i] for j in range(q.n)) for i in range(q.n)
    )


# -- graph structure ---------------------------------------------------------

def is_acyclic(q: Quiver) -> bool:
    """DFS cycle check on the directed graph."""
    adj: dict[int, list[int]] = {i: [] for i in range(q.n)}
    for s, t in q.arrow_indices():
        adj[s].append(t)
    state = [0] * q.n  # 0 unvisited, 1 on stack, 2 done
    for start in range(q.n):
        if state[start]:
            continue
        stack = [(start, iter(adj[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return True


def is_connected(q: Quiver) -> bool:
    """Connectivity of the underlying undirected graph."""
    adj: dict[int, set[int]] = {i: set() for i in range(q.n)}
    for s, t in q.arrow_indices():
        adj[s].add(t)
        adj[t].add(s)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == q.n


def connected_components(q: Quiver) -> list[Quiver]:
    """Split into connected subquivers (plumbing for callers)."""
    adj: dict[str, set[str]] = {v: set() for v in q.vertices}
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen: set[str] = set()
    comps = []
    for v in q.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(subquiver(q, comp))
    return comps


def topological_order(q: Quiver) -> list[int]:
    """Vertex indices in a topological order (acyclic quivers only)."""
    if not is_acyclic(q):
        raise DomainError("quiver has an oriented cycle")
    indeg = [0] * q.n
    adj: dict[int, list[int]] = {i: [] for i in range(q.n)}
    for s, t in q.arrow_indices():
        indeg[t] += 1
        adj[s].append(t)
    ready = [i for i in range(q.n) if indeg[i] == 0]
    order = []
    while ready:
        u = ready.pop(0)
        order.append(u)
        for w in adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order


def subquiver(q: Quiver, a: Iterable[str]) -> Quiver:
    """Full subquiver Q_A: vertices A, all arrows of Q with both ends in A."""
    aset = set(a)
    if not aset:
        raise DomainError("subquiver needs a nonempty vertex set")
    for v in aset:
        if v not in q.vertices:
            raise DomainError(f"unknown vertex: {v}")
    verts = tuple(v for v in q.vertices if v in aset)
    arrows = tuple((s, t) for s, t in q.arrows if s in aset and t in aset)
    return Quiver(verts, arrows)


@dataclass(frozen=True)
class Adjacency:
    """Arrow counts between a vertex v and a vertex set A.

    ``edges_in`` counts Arr({v}, A) (arrows leaving v into A) and
    ``edges_out`` counts Arr(A, {v}).  The source/sink flags refer to the
    union subquiver Q_{A + v}.
    """

    edges_in: int
    edges_out: int
    is_adjacent: bool
    v_is_source_in_union: bool
    v_is_sink_in_union: bool


def adjacency(q: Quiver, a: Iterable[str], v: str) -> Adjacency:
    aset = set(a)
    for u in aset:
        if u not in q.vertices:
            raise DomainError(f"unknown vertex: {u}")
    if v not in q.vertices:
        raise DomainError(f"unknown vertex: {v}")
    if v in aset:
        raise DomainError(f"vertex {v} lies inside the subquiver vertex set")
    out_of_v = sum(1 for s, t in q.arrows if s == v and t in aset)
    into_v = sum(1 for s, t in q.arrows if s in aset and t == v)
    return Adjacency(
        edges_in=out_of_v,
        edges_out=into_v,
        is_adjacent=(out_of_v + into_v) > 0,
        v_is_source_in_union=(into_v == 0),
        v_is_sink_in_union=(out_of_v == 0),
    )


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class GraphClass:
    """Isomorphism type of the underlying graph plus orientation flags.

    kind is one of "dynkin", "euclidean", "kronecker", "wild"; family/index
    identify the diagram (A/D/E with subscript, or l for Kronecker).
    K(1) and K(2) are reported as Dynkin A_2 and Euclidean A~_1; the
    Kronecker tag is reserved for l >= 3.
    """

    kind: str
    family: str | None
    index: int | None
    acyclic: bool
    connected: bool

    @property
    def is_dynkin(self) -> bool:
        return self.kind == "dynkin"

    @property
    def is_euclidean(self) -> bool:
        return self.kind == "euclidean"

    @property
    def is_kronecker(self) -> bool:
        return self.kind == "kronecker"

    @property
    def is_wild(self) -> bool:
        return self.kind == "wild"

    @property
    def label(self) -> str:
        if self.kind == "dynkin":
            return f"{self.family}_{self.index}"
        if self.kind == "euclidean":
            return f"{self.family}~_{self.index}"
        if self.kind == "kronecker":
            return f"K({self.index})"
        return "wild"


def _undirected_adj(q: Quiver) -> tuple[dict[int, dict[int, int]], bool]:
    """Neighbor multiplicity map and a flag for parallel edges."""
    adj: dict[int, dict[int, int]] = {i: {} for i in range(q.n)}
    multi = False
    for s, t in q.arrow_indices():
        adj[s][t] = adj[s].get(t, 0) + 1
        adj[t][s] = adj[t].get(s, 0) + 1
        if adj[s][t] > 1:
            multi = True
    return adj, multi


def _leg_lengths(adj: dict[int, dict[int, int]], branch: int) -> list[int]:
    """Edge-lengths of the simple paths leaving a branch vertex of a tree."""
    legs = []
    for first in adj[branch]:
        length = 1
        prev, cur = branch, first
        while sum(adj[cur].values()) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    return sorted(legs)


def _tag_connected(q: Quiver) -> tuple[str, str | None, int | None]:
    n = q.n
    m = len(q.arrows)
    if n == 1:
        return ("dynkin", "A", 1)
    if n == 2:
        if m == 1:
            return ("dynkin", "A", 2)
        if m == 2:
            return ("euclidean", "A", 1)
        return ("kronecker", None, m)
    adj, multi = _undirected_adj(q)
    if multi:
        return ("wild", None, None)
    degs = [sum(adj[i].values()) for i in range(n)]
    if m == n:
        if all(d == 2 for d in degs):
            return ("euclidean", "A", n - 1)
        return ("wild", None, None)
    if m != n - 1:
        return ("wild", None, None)
    # tree
    maxdeg = max(degs)
    if maxdeg <= 2:
        return ("dynkin", "A", n)
    if maxdeg == 4:
        if n == 5 and sorted(degs) == [1, 1, 1, 1, 4]:
            return ("euclidean", "D", 4)
        return ("wild", None, None)
    if maxdeg > 4:
        return ("wild", None, None)
    branches = [i for i in range(n) if degs[i] == 3]
    if len(branches) == 1:
        legs = _leg_lengths(adj, branches[0])
        a, b, c = legs
        if (a, b) == (1, 1):
            return ("dynkin", "D", n)
        table = {
            (1, 2, 2): ("dynkin", "E", 6),
            (1, 2, 3): ("dynkin", "E", 7),
            (1, 2, 4): ("dynkin", "E", 8),
            (2, 2, 2): ("euclidean", "E", 6),
            (1, 3, 3): ("euclidean", "E", 7),
            (1, 2, 5): ("euclidean", "E", 8),
        }
        return table.get((a, b, c), ("wild", None, None))
    if len(branches) == 2:
        for br in branches:
            leaf_neighbors = sum(1 for w in adj[br] if degs[w] == 1)
            if leaf_neighbors != 2:
                return ("wild", None, None)
        if any(degs[i] > 3 for i in range(n)):
            return ("wild", None, None)
        return ("euclidean", "D", n - 1)
    return ("wild", None, None)


def classify_graph(q: Quiver) -> GraphClass:
    """Match Gamma(Q) against the A/D/E, extended A/D/E and K(l) catalogues.

    The tag depends only on the underlying undirected multigraph; orientation
    enters through the ``acyclic`` flag, connectivity through ``connected``.
    Disconnected graphs match no catalogue entry and are tagged wild.
    """
    acyclic = is_acyclic(q)
    connected = is_connected(q)
    if not connected:
        return GraphClass("wild", None, None, acyclic, connected)
    kind, family, index = _tag_connected(q)
    return GraphClass(kind, family, index, acyclic, connected)


def require_connected_acyclic(q: Quiver) -> None:
    if not is_connected(q):
        raise DomainError("quiver must be connected (split into components first)")
    if not is_acyclic(q):
        raise DomainError("quiver must have no oriented cycles")
