"""Reachable and co-reachable vertices, deadlocks, and the reachable subcomplex.

Vertex reachability only follows directed edges ``[u, u + e_i]``; a dipath
between vertices can always be replaced by such an edge path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cubes import Cube, CubicalComplex, shift
from .errors import NotAVertex


def _check_vertex(K, v):
    v = tuple(v)
    if not K.has_vertex(v):
        raise NotAVertex(f"{v} is not a vertex of the complex")
    return v


def _bfs(K: CubicalComplex, start, forward: bool) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for i in range(K.n):
            e = 1 << i
            if forward:
                edge, nxt = Cube(u, e), shift(u, e)
            else:
                nxt = shift(u, e, -1)
                edge = Cube(nxt, e)
            if nxt not in seen and edge in K.cubes:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def reachable_vertices(K: CubicalComplex, w) -> set:
    """Vertices reachable from ``w`` along directed edges (``w`` included)."""
    return _bfs(K, _check_vertex(K, w), forward=True)


def coreachable_vertices(K: CubicalComplex, f) -> set:
    """Vertices from which ``f`` is reachable along directed edges."""
    return _bfs(K, _check_vertex(K, f), forward=False)


def unreachable_vertices(K: CubicalComplex, w) -> set:
    return set(K.vertices) - reachable_vertices(K, w)


def deadlocks(K: CubicalComplex, f) -> set:
    return set(K.vertices) - coreachable_vertices(K, f)


def _has_edge(K, v, forward: bool) -> bool:
    for i in range(K.n):
        e = 1 << i
        edge = Cube(v, e) if forward else Cube(shift(v, e, -1), e)
        if edge in K.cubes:
            return True
    return False


def stuck_vertices(K: CubicalComplex, f) -> set:
    """Vertices other than ``f`` with no outgoing edge: executions halt there.

    Every stuck vertex is a deadlock; the other deadlocks are the vertices
    all of whose paths run into one.
    """
    f = _check_vertex(K, f)
    return {v for v in K.vertices if v != f and not _has_edge(K, v, forward=True)}


def source_vertices(K: CubicalComplex, w) -> set:
    """Vertices other than ``w`` with no incoming edge; the dual of stuck vertices."""
    w = _check_vertex(K, w)
    return {v for v in K.vertices if v != w and not _has_edge(K, v, forward=False)}


def reachable_subcomplex(K: CubicalComplex, w) -> CubicalComplex:
    """Cubes whose minimal vertex is reachable from ``w``."""
    reach = reachable_vertices(K, w)
    return CubicalComplex(K.n, (c for c in K.cubes if c.base in reach), closed=True)


def reverse_complex(K: CubicalComplex) -> CubicalComplex:
    """Image of ``K`` under ``x -> -x``; reverses every directed path."""
    return CubicalComplex(
        K.n, (Cube(tuple(-x for x in c.top), c.extent) for c in K.cubes), closed=True
    )


def negate(v):
    return tuple(-x for x in v)


@dataclass
class ReachabilityReport:
    start: tuple
    final: tuple | None
    reachable: set
    unreachable: set
    sources: set = field(default_factory=set)
    coreachable: set | None = None
    deadlocks: set | None = None
    stuck: set | None = None

    def to_dict(self) -> dict:
        out = {
            "start": list(self.start),
            "reachable": sorted(map(list, self.reachable)),
            "unreachable": sorted(map(list, self.unreachable)),
            "sources": sorted(map(list, self.sources)),
        }
        if self.final is not None:
            out["final"] = list(self.final)
            out["coreachable"] = sorted(map(list, self.coreachable))
            out["deadlocks"] = sorted(map(list, self.deadlocks))
            out["stuck"] = sorted(map(list, self.stuck))
        return out


def reachability_report(K: CubicalComplex, w, final=None) -> ReachabilityReport:
    reach = reachable_vertices(K, w)
    report = ReachabilityReport(tuple(w), None, reach, set(K.vertices) - reach,
                                source_vertices(K, w))
    if final is not None:
        co = coreachable_vertices(K, final)
        report.final = tuple(final)
        report.coreachable = co
        report.deadlocks = set(K.vertices) - co
        report.stuck = stuck_vertices(K, final)
    return report
