"""Simplicial complexes on ``{1..n}`` encoded as bitmasks.

Past links are subcomplexes of the full simplex, so each simplex is a nonzero
``n``-bit mask (bit ``i`` stands for vertex ``i + 1``).  Connectedness is
decided exactly.  Contractibility is decided soundly but not completely:
nonzero reduced GF(2) homology proves non-contractibility, a cone or a
collapse sequence proves contractibility, and anything else is ``UNKNOWN``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

DEFAULT_BUDGET = 10**6


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _facets(s: int):
    m = s
    while m:
        low = m & -m
        if s ^ low:
            yield s ^ low
        m ^= low


class SimplicialComplex:
    """Downward-closed family of nonzero bitmasks over ``n`` vertices."""

    __slots__ = ("n", "simplices")

    def __init__(self, n: int, simplices: Iterable[int] = (), *, closed: bool = True):
        simplices = set(simplices)
        if 0 in simplices:
            raise ValueError("the empty simplex is not stored")
        if not closed:
            for s in list(simplices):
                simplices.update(_all_faces(s))
        self.n = n
        self.simplices = frozenset(simplices)

    @classmethod
    def generated_by(cls, n: int, simplices: Iterable[int]) -> "SimplicialComplex":
        return cls(n, simplices, closed=False)

    @classmethod
    def full_simplex(cls, vertices: int, n: int | None = None) -> "SimplicialComplex":
        """The full simplex on the vertex mask ``vertices``."""
        n = vertices.bit_length() if n is None else n
        return cls.generated_by(n, [vertices] if vertices else [])

    def __contains__(self, s):
        return s in self.simplices

    def __len__(self):
        return len(self.simplices)

    def __bool__(self):
        return bool(self.simplices)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return f"SimplicialComplex({self.sorted_simplices()})"

    @property
    def dim(self) -> int:
        return max((popcount(s) - 1 for s in self.simplices), default=-1)

    def vertices(self) -> list[int]:
        return sorted(s for s in self.simplices if popcount(s) == 1)

    def edges(self) -> list[int]:
        return sorted(s for s in self.simplices if popcount(s) == 2)

    def sorted_simplices(self) -> list[int]:
        return sorted(self.simplices, key=lambda s: (popcount(s), vertex_labels(s)))

    def is_downward_closed(self) -> bool:
        return all(f in self.simplices for s in self.simplices for f in _facets(s))

    def f_vector(self) -> list[int]:
        out = [0] * (self.dim + 1)
        for s in self.simplices:
            out[popcount(s) - 1] += 1
        return out

    def maximal_simplices(self) -> list[int]:
        sims = self.simplices
        return sorted(
            (s for s in sims if not any(s | 1 << i in sims for i in range(self.n) if not s >> i & 1)),
            key=lambda s: (popcount(s), vertex_labels(s)),
        )


def _all_faces(s: int):
    m = s
    while m:
        yield m
        m = (m - 1) & s


def vertex_labels(s: int) -> list[int]:
    """1-based vertex labels of a simplex mask."""
    return [i + 1 for i in range(s.bit_length()) if s >> i & 1]


def format_simplex(s: int) -> str:
    return "{" + ",".join(map(str, vertex_labels(s))) + "}"


def format_complex(S: SimplicialComplex) -> str:
    """Debug text: one simplex per line."""
    return "".join(format_simplex(s) + "\n" for s in S.sorted_simplices())


# connectivity


class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(S: SimplicialComplex) -> list[list[int]]:
    """Vertex sets of the connected components, as sorted lists of vertex masks."""
    verts = S.vertices()
    ds = _DisjointSet(verts)
    for e in S.edges():
        low = e & -e
        ds.union(low, e ^ low)
    groups: dict[int, list[int]] = {}
    for v in verts:
        groups.setdefault(ds.find(v), []).append(v)
    return sorted(groups.values())


def is_connected(S: SimplicialComplex) -> bool:
    """True iff ``S`` is nonempty with a connected 1-skeleton."""
    return bool(S) and len(components(S)) == 1


# GF(2) homology


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as integer row bitsets."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            if h in pivots:
                r ^= pivots[h]
            else:
                pivots[h] = r
                break
    return len(pivots)


def reduced_betti_gf2(S: SimplicialComplex) -> tuple[int, ...]:
    """Reduced Betti numbers ``(b_0, ..., b_d)`` over GF(2); ``()`` when empty."""
    d = S.dim
    if d < 0:
        return ()
    by_dim: list[list[int]] = [[] for _ in range(d + 1)]
    for s in S.simplices:
        by_dim[popcount(s) - 1].append(s)
    index = [{s: k for k, s in enumerate(sorted(level))} for level in by_dim]
    # rank of the boundary map C_i -> C_{i-1}; the augmentation C_0 -> Z/2 has rank 1
    ranks = [1]
    for i in range(1, d + 1):
        below = index[i - 1]
        rows = []
        for s in by_dim[i]:
            row = 0
            for f in _facets(s):
                row |= 1 << below[f]
            rows.append(row)
        ranks.append(gf2_rank(rows))
    ranks.append(0)
    return tuple(len(by_dim[i]) - ranks[i] - ranks[i + 1] for i in range(d + 1))


def euler_characteristic(S: SimplicialComplex) -> int:
    return sum((-1) ** i * c for i, c in enumerate(S.f_vector()))


# collapsibility


class _Exhausted:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXHAUSTED"


EXHAUSTED = _Exhausted()


def free_pairs(simplices: frozenset[int] | set[int]) -> list[tuple[int, int]]:
    """Pairs ``(tau, sigma)`` where ``sigma`` is the only proper coface of ``tau``."""
    count: dict[int, int] = {}
    owner: dict[int, int] = {}
    for s in simplices:
        for f in _facets(s):
            count[f] = count.get(f, 0) + 1
            owner[f] = s
    return sorted(
        ((t, owner[t]) for t, k in count.items() if k == 1),
        key=lambda p: (-popcount(p[1]), p),
    )


def find_collapse_sequence(S: SimplicialComplex, budget: int = DEFAULT_BUDGET):
    """Search for elementary collapses reducing ``S`` to one vertex.

    Depth-first over free-pair choices, remembering states already known to
    be dead ends.  Returns the list of ``(tau, sigma)`` pairs, ``None`` when
    no sequence exists, or ``EXHAUSTED`` after ``budget`` explored states.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    start = frozenset(S.simplices)
    if not start:
        return None
    dead: set[frozenset[int]] = set()
    explored = 0
    path: list[tuple[int, int]] = []
    # iterative DFS; each frame holds a state and its remaining moves
    stack = [(start, iter(free_pairs(start)))]
    while stack:
        state, moves = stack[-1]
        if len(state) == 1:
            return list(path)
        advanced = False
        for tau, sigma in moves:
            nxt = state - {tau, sigma}
            if nxt in dead:
                continue
            explored += 1
            if explored > budget:
                return EXHAUSTED
            path.append((tau, sigma))
            stack.append((nxt, iter(free_pairs(nxt))))
            advanced = True
            break
        if not advanced:
            dead.add(state)
            stack.pop()
            if path:
                path.pop()
    return None


def is_collapsible(S: SimplicialComplex, budget: int = DEFAULT_BUDGET):
    """True/False, or ``EXHAUSTED`` if the search budget ran out."""
    seq = find_collapse_sequence(S, budget)
    if seq is EXHAUSTED:
        return EXHAUSTED
    return seq is not None


def replay_collapses(S: SimplicialComplex, pairs) -> SimplicialComplex:
    """Apply elementary collapses, checking each pair is free when applied."""
    state = set(S.simplices)
    for tau, sigma in pairs:
        if (tau, sigma) not in free_pairs(state):
            raise ValueError(f"({format_simplex(tau)}, {format_simplex(sigma)}) is not a free pair")
        state -= {tau, sigma}
    return SimplicialComplex(S.n, state)


def cone_apex(S: SimplicialComplex) -> int | None:
    """A vertex ``a`` with ``s | a`` in ``S`` for every simplex ``s``, if any."""
    for a in S.vertices():
        if all(s | a in S.simplices for s in S.simplices):
            return a
    return None


def cone_collapse_sequence(S: SimplicialComplex, apex: int) -> list[tuple[int, int]]:
    """Collapse a cone onto its apex, largest base simplices first."""
    base = [s for s in S.simplices if not s & apex]
    base.sort(key=lambda s: (-popcount(s), s))
    return [(s, s | apex) for s in base]


class LinkStatus(enum.Enum):
    EMPTY = "Empty"
    CONTRACTIBLE = "Contractible"
    NOT_CONTRACTIBLE = "NotContractible"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Contractibility:
    """A contractibility verdict with its witness.

    ``collapses`` replays ``S`` down to a single vertex when ``CONTRACTIBLE``;
    ``betti_index`` names a nonzero reduced Betti number when
    ``NOT_CONTRACTIBLE``.
    """

    status: LinkStatus
    collapses: tuple[tuple[int, int], ...] = field(default=(), repr=False)
    betti_index: int | None = None
    betti: tuple[int, ...] = ()

    def __str__(self):
        if self.status is LinkStatus.NOT_CONTRACTIBLE:
            return f"{self.status}(i={self.betti_index})"
        return str(self.status)


def contractibility_status(S: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> Contractibility:
    if not S:
        return Contractibility(LinkStatus.EMPTY)
    betti = reduced_betti_gf2(S)
    for i, b in enumerate(betti):
        if b:
            return Contractibility(LinkStatus.NOT_CONTRACTIBLE, betti_index=i, betti=betti)
    apex = cone_apex(S)
    if apex is not None:
        seq = cone_collapse_sequence(S, apex)
        return Contractibility(LinkStatus.CONTRACTIBLE, tuple(seq), betti=betti)
    seq = find_collapse_sequence(S, budget)
    if seq is not None and seq is not EXHAUSTED:
        return Contractibility(LinkStatus.CONTRACTIBLE, tuple(seq), betti=betti)
    return Contractibility(LinkStatus.UNKNOWN, betti=betti)


def verify_witness(S: SimplicialComplex, verdict: Contractibility) -> bool:
    """Re-check a verdict's witness independently of how it was found."""
    if verdict.status is LinkStatus.EMPTY:
        return not S
    if verdict.status is LinkStatus.CONTRACTIBLE:
        try:
            rest = replay_collapses(S, verdict.collapses)
        except ValueError:
            return False
        return len(rest) == 1
    if verdict.status is LinkStatus.NOT_CONTRACTIBLE:
        betti = reduced_betti_gf2(S)
        i = verdict.betti_index
        return i is not None and i < len(betti) and betti[i] != 0
    return True


class Homotopy(enum.Enum):
    EQUIVALENT = "Equivalent"
    NOT_EQUIVALENT = "NotEquivalent"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


def _trim(betti):
    betti = list(betti)
    while betti and betti[-1] == 0:
        betti.pop()
    return tuple(betti)


def same_homotopy_class(S1: SimplicialComplex, S2: SimplicialComplex,
                        budget: int = DEFAULT_BUDGET) -> Homotopy:
    if S1 == S2:
        return Homotopy.EQUIVALENT
    if not S1 or not S2:
        return Homotopy.NOT_EQUIVALENT
    if _trim(reduced_betti_gf2(S1)) != _trim(reduced_betti_gf2(S2)):
        return Homotopy.NOT_EQUIVALENT
    c1 = contractibility_status(S1, budget).status
    c2 = contractibility_status(S2, budget).status
    if c1 is LinkStatus.CONTRACTIBLE and c2 is LinkStatus.CONTRACTIBLE:
        return Homotopy.EQUIVALENT
    return Homotopy.UNKNOWN
