"""Past links of vertices relative to an initial vertex.

The past link of ``v`` with respect to ``w`` contains the direction mask ``j``
exactly when the cube ``[v - j, v]`` belongs to ``K`` and lies in ``[w, v]``.
"""

from __future__ import annotations

from .cubes import Cube, CubicalComplex, leq, shift
from .errors import NotAVertex
from .simplicial import SimplicialComplex


def past_link(K: CubicalComplex, w, v) -> SimplicialComplex:
    w, v = tuple(w), tuple(v)
    if not K.has_vertex(v):
        raise NotAVertex(f"{v} is not a vertex of the complex")
    if not leq(w, v):
        return SimplicialComplex(K.n)

    def ok(j):
        lo = shift(v, j, -1)
        return leq(w, lo) and Cube(lo, j) in K.cubes

    # grow upward from the singletons; downward closure means every simplex
    # is reachable by adding one vertex at a time
    level = [1 << i for i in range(K.n) if ok(1 << i)]
    found = set(level)
    while level:
        nxt = set()
        for j in level:
            for i in range(K.n):
                bigger = j | 1 << i
                if bigger != j and bigger not in found and bigger not in nxt and ok(bigger):
                    nxt.add(bigger)
        found |= nxt
        level = list(nxt)
    return SimplicialComplex(K.n, found)


def past_links_all(K: CubicalComplex, w) -> dict:
    """Past link of every vertex of ``K``; vertices not above ``w`` get the empty link."""
    w = tuple(w)
    return {v: past_link(K, w, v) for v in sorted(K.vertices)}
