import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qdyn import classify_graph, make_quiver
from qdyn.catalog import dynkin_diagrams, euclidean_diagrams, orientations
from qdyn.quiver import is_acyclic


def iter_small_quivers(max_vertices: int = 5, max_arrows: int = 6):
    """Every connected acyclic quiver with the given bounds, one labeled
    representative per isomorphism class (arrows respect a topological
    order, so i < j covers every acyclic quiver up to relabeling)."""
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for total in range(0, max_arrows + 1):
            for combo in itertools.combinations_with_replacement(pairs, total):
                adj = {i: set() for i in range(n)}
                for s, t in combo:
                    adj[s].add(t)
                    adj[t].add(s)
                seen, stack = {0}, [0]
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                if len(seen) != n:
                    continue
                verts = [str(i + 1) for i in range(n)]
                yield make_quiver(verts, [(verts[s], verts[t]) for s, t in combo])


@pytest.fixture(scope="session")
def small_corpus():
    return list(iter_small_quivers())


@pytest.fixture(scope="session")
def wild_corpus(small_corpus):
    return [q for q in small_corpus if classify_graph(q).is_wild]


def catalog_quivers(max_vertices: int, acyclic_only: bool = True):
    """(name, quiver) for every orientation of every Dynkin and Euclidean
    diagram with at most max_vertices vertices."""
    for name, edges in dynkin_diagrams(max_vertices) + euclidean_diagrams(max_vertices):
        for q in orientations(edges):
            if acyclic_only and not is_acyclic(q):
                continue
            yield name, q
