"""Euclidean cubical complexes built from elementary integer cubes.

A cube ``[p, q]`` with ``q - p`` in ``{0,1}^n`` is stored as its lower corner
(``base``) and an ``extent`` bitmask, bit ``i`` set when the cube spans one
unit along axis ``i``.  A complex stores every cube explicitly, not just the
maximal ones, so membership queries are plain set lookups.
"""

from __future__ import annotations

import json
from itertools import product
from typing import Iterable, NamedTuple

from .errors import DimensionMismatch, NotInComplex, OrderViolation

MAX_DIM = 32

Vertex = tuple[int, ...]


def leq(p: Vertex, q: Vertex) -> bool:
    """Componentwise order ``p <= q``."""
    return all(a <= b for a, b in zip(p, q))


def bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def mask_to_vector(mask: int, n: int) -> tuple[int, ...]:
    return tuple(mask >> i & 1 for i in range(n))


def vector_to_mask(vec: Iterable[int]) -> int:
    mask = 0
    for i, b in enumerate(vec):
        if b not in (0, 1):
            raise ValueError(f"extent entries must be 0 or 1, got {b!r}")
        mask |= b << i
    return mask


def shift(v: Vertex, mask: int, sign: int = 1) -> Vertex:
    """Add (or subtract, with ``sign=-1``) the 0/1 vector ``mask`` to ``v``."""
    return tuple(x + sign * (mask >> i & 1) for i, x in enumerate(v))


class Cube(NamedTuple):
    base: Vertex
    extent: int

    @classmethod
    def from_vectors(cls, base, extent) -> "Cube":
        base = tuple(int(x) for x in base)
        extent = tuple(extent)
        if len(base) != len(extent):
            raise DimensionMismatch("base and extent lengths differ")
        return cls(base, vector_to_mask(extent))

    @classmethod
    def between(cls, lo, hi) -> "Cube":
        """The elementary cube ``[lo, hi]``."""
        lo, hi = tuple(lo), tuple(hi)
        if len(lo) != len(hi):
            raise DimensionMismatch("corner lengths differ")
        return cls.from_vectors(lo, [b - a for a, b in zip(lo, hi)])

    @property
    def n(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return bin(self.extent).count("1")

    @property
    def top(self) -> Vertex:
        return shift(self.base, self.extent)

    @property
    def extent_vector(self) -> tuple[int, ...]:
        return mask_to_vector(self.extent, self.n)

    def sort_key(self):
        return (self.base, self.extent_vector)

    def vertices(self) -> list[Vertex]:
        return [shift(self.base, sub) for sub in submasks(self.extent)]

    def contains(self, other: "Cube") -> bool:
        """Geometric containment ``other ⊆ self``."""
        return leq(self.base, other.base) and leq(other.top, self.top)

    def __str__(self):
        return f"[{_fmt(self.base)},{_fmt(self.top)}]"


def _fmt(v: Vertex) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            return out
        s = (s - 1) & mask


def faces(c: Cube) -> set[Cube]:
    """All proper faces of ``c`` (``3**dim - 1`` of them)."""
    axes = bits(c.extent)
    out = set()
    # per spanned axis: 0 keep, 1 collapse onto base, 2 collapse onto base+1
    for choice in product((0, 1, 2), repeat=len(axes)):
        if not any(choice):
            continue
        extent = c.extent
        base = list(c.base)
        for axis, how in zip(axes, choice):
            if how:
                extent &= ~(1 << axis)
                base[axis] += how - 1
        out.add(Cube(tuple(base), extent))
    return out


def up_cofaces(c: Cube) -> list[Cube]:
    """Elementary cubes one dimension up that have ``c`` as a facet."""
    out = []
    for i in range(c.n):
        if c.extent >> i & 1:
            continue
        ext = c.extent | 1 << i
        out.append(Cube(c.base, ext))
        out.append(Cube(shift(c.base, 1 << i, -1), ext))
    return out


class CubicalComplex:
    """A finite face-closed set of elementary cubes in R^n.

    Instances are treated as immutable; operations return new complexes.
    """

    __slots__ = ("n", "cubes", "_vertices")

    def __init__(self, n: int, cubes: Iterable[Cube] = (), *, closed: bool = False):
        if not 0 <= n <= MAX_DIM:
            raise DimensionMismatch(f"ambient dimension must be in [0, {MAX_DIM}], got {n}")
        cubes = set(cubes)
        for c in cubes:
            if len(c.base) != n or c.extent >> n:
                raise DimensionMismatch(f"cube {c} does not live in R^{n}")
        if not closed:
            for c in list(cubes):
                cubes |= faces(c)
        self.n = n
        self.cubes = frozenset(cubes)
        self._vertices = None

    def __contains__(self, c) -> bool:
        return c in self.cubes

    def __iter__(self):
        return iter(sorted(self.cubes, key=Cube.sort_key))

    def __len__(self):
        return len(self.cubes)

    def __eq__(self, other):
        if not isinstance(other, CubicalComplex):
            return NotImplemented
        return self.n == other.n and self.cubes == other.cubes

    def __hash__(self):
        return hash((self.n, self.cubes))

    def __repr__(self):
        counts = self.counts()
        return f"CubicalComplex(n={self.n}, cubes by dim={counts})"

    @property
    def vertices(self) -> frozenset[Vertex]:
        if self._vertices is None:
            self._vertices = frozenset(c.base for c in self.cubes if c.extent == 0)
        return self._vertices

    def has_vertex(self, v) -> bool:
        return Cube(tuple(v), 0) in self.cubes

    def counts(self) -> list[int]:
        out = [0] * (self.n + 1)
        for c in self.cubes:
            out[c.dim] += 1
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def cubes_of_dim(self, d: int) -> list[Cube]:
        return sorted((c for c in self.cubes if c.dim == d), key=Cube.sort_key)

    def is_maximal(self, c: Cube) -> bool:
        return not any(s in self.cubes for s in up_cofaces(c))

    def maximal_cubes(self) -> list[Cube]:
        return sorted((c for c in self.cubes if self.is_maximal(c)), key=Cube.sort_key)

    def is_face_closed(self) -> bool:
        return all(f in self.cubes for c in self.cubes for f in faces(c))

    def without(self, removed: Iterable[Cube]) -> "CubicalComplex":
        return CubicalComplex(self.n, self.cubes - set(removed), closed=True)


def complex_from_maximal(n: int, cubes: Iterable[Cube]) -> CubicalComplex:
    """Face closure of ``cubes``."""
    return CubicalComplex(n, cubes)


def cofaces(K: CubicalComplex, t: Cube) -> set[Cube]:
    """All cubes of ``K`` properly containing ``t``."""
    seen = set()
    stack = [t]
    while stack:
        c = stack.pop()
        for s in up_cofaces(c):
            if s in K.cubes and s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


def maximal_cofaces(K: CubicalComplex, t: Cube) -> set[Cube]:
    """Maximal cubes of ``K`` containing ``t`` (``{t}`` if ``t`` is maximal)."""
    if t not in K.cubes:
        raise NotInComplex(f"{t} is not in the complex")
    up = cofaces(K, t)
    if not up:
        return {t}
    return {c for c in up if K.is_maximal(c)}


def interval_restrict(K: CubicalComplex, w, v) -> CubicalComplex:
    """Subcomplex of cubes lying inside the box ``[w, v]``."""
    w, v = tuple(w), tuple(v)
    if not leq(w, v):
        raise OrderViolation(f"{w} is not below {v}")
    return CubicalComplex(
        K.n, (c for c in K.cubes if leq(w, c.base) and leq(c.top, v)), closed=True
    )


def grid_complex(sizes) -> CubicalComplex:
    """The full grid ``[0, N_1] x ... x [0, N_n]``."""
    n = len(sizes)
    full = (1 << n) - 1
    tops = [Cube(base, full) for base in product(*(range(s) for s in sizes))]
    return CubicalComplex(n, tops)


# JSON complex format: {"dim": n, "cubes": [{"base": [...], "extent": [...]}]}


def complex_to_dict(K: CubicalComplex) -> dict:
    return {
        "dim": K.n,
        "cubes": [
            {"base": list(c.base), "extent": list(c.extent_vector)}
            for c in K.maximal_cubes()
        ],
    }


def complex_from_dict(data: dict) -> CubicalComplex:
    try:
        n = int(data["dim"])
        raw = data["cubes"]
    except (KeyError, TypeError) as exc:
        raise DimensionMismatch(f"malformed complex document: {exc}") from None
    cubes = []
    for item in raw:
        base, extent = item["base"], item["extent"]
        if len(base) != n or len(extent) != n:
            raise DimensionMismatch(f"cube {item} does not have length {n}")
        cubes.append(Cube.from_vectors(base, extent))
    return CubicalComplex(n, cubes)


def dumps_complex(K: CubicalComplex) -> str:
    """Serialize the maximal cubes of ``K``, one per line, in sorted order."""
    doc = complex_to_dict(K)
    rows = [json.dumps(c, separators=(", ", ": ")) for c in doc["cubes"]]
    body = ",\n    ".join(rows)
    if rows:
        body = "\n    " + body + "\n  "
    return '{\n  "dim": %d,\n  "cubes": [%s]\n}\n' % (doc["dim"], body)


def loads_complex(text: str) -> CubicalComplex:
    return complex_from_dict(json.loads(text))
