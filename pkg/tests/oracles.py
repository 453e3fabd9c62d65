"""Slow reference computations that share no code paths with the library."""

from itertools import product

import numpy as np

from dicollapse.cubes import Cube, CubicalComplex


def all_cubes_in_box(lo, hi):
    """Every elementary cube inside the box [lo, hi]."""
    n = len(lo)
    out = []
    for base in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        for ext in range(1 << n):
            top = tuple(x + (ext >> i & 1) for i, x in enumerate(base))
            if all(t <= b for t, b in zip(top, hi)):
                out.append(Cube(tuple(base), ext))
    return out


def geometric_faces(c):
    """Proper faces by geometric containment over the bounding box."""
    return {d for d in all_cubes_in_box(c.base, c.top) if d != c and c.contains(d)}


def point_in_interior(x, boxes, sizes):
    """Exact membership of ``x`` in the interior of a union of closed boxes.

    ``x`` is interior iff every orthant around it is filled by one box that
    contains ``x`` and reaches strictly into that orthant.  The ambient
    boundary is never interior.
    """
    if any(xi <= 0 or xi >= s for xi, s in zip(x, sizes)):
        return False
    for signs in product((-1, 1), repeat=len(x)):
        if not any(_reaches(box, x, signs) for box in boxes):
            return False
    return True


def _reaches(box, x, signs):
    for lo, hi, xi, s in zip(box.lo, box.hi, x, signs):
        if not lo <= xi <= hi:
            return False
        if s > 0 and xi >= hi:
            return False
        if s < 0 and xi <= lo:
            return False
    return True


def dense_sample_complex(sizes, boxes):
    """Ambient cubes none of whose quarter-integer sample points is interior."""
    keep = []
    for c in all_cubes_in_box((0,) * len(sizes), sizes):
        axes = [
            [b + k / 4 for k in range(5)] if c.extent >> i & 1 else [b]
            for i, b in enumerate(c.base)
        ]
        if not any(point_in_interior(p, boxes, sizes) for p in product(*axes)):
            keep.append(c)
    return set(keep)


def brute_past_link(K, w, v):
    """All nonzero masks j with [v-j, v] in K and inside [w, v]."""
    n = K.n
    out = set()
    for j in range(1, 1 << n):
        lo = tuple(x - (j >> i & 1) for i, x in enumerate(v))
        if all(a <= b for a, b in zip(w, lo)) and all(a <= b for a, b in zip(w, v)):
            if Cube(lo, j) in K.cubes:
                out.add(j)
    return out


def brute_reachable(K, w):
    """Vertices hit by some monotone edge path from w, by explicit path growth."""
    paths = [[tuple(w)]]
    seen = {tuple(w)}
    while paths:
        grown = []
        for path in paths:
            u = path[-1]
            for i in range(K.n):
                nxt = tuple(x + (k == i) for k, x in enumerate(u))
                if Cube(u, 1 << i) in K.cubes and nxt not in seen:
                    seen.add(nxt)
                    grown.append(path + [nxt])
        paths = grown
    return seen


def gf2_rank_dense(rows, ncols):
    """GF(2) rank via numpy row reduction."""
    if not rows or ncols == 0:
        return 0
    M = np.array(rows, dtype=np.uint8) % 2
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, M.shape[0]) if M[r, col]), None)
        if pivot is None:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        for r in range(M.shape[0]):
            if r != rank and M[r, col]:
                M[r] ^= M[rank]
        rank += 1
    return rank


def dense_reduced_betti(simplices):
    """Reduced Betti numbers from dense boundary matrices."""
    sims = sorted(simplices)
    if not sims:
        return ()
    by_dim = {}
    for s in sims:
        by_dim.setdefault(bin(s).count("1") - 1, []).append(s)
    d = max(by_dim)
    ranks = {0: 1}
    for k in range(1, d + 1):
        rows_k = by_dim.get(k, [])
        cols = by_dim.get(k - 1, [])
        index = {s: i for i, s in enumerate(cols)}
        rows = []
        for s in rows_k:
            row = [0] * len(cols)
            for i in range(s.bit_length()):
                if s >> i & 1 and s ^ (1 << i):
                    row[index[s ^ (1 << i)]] = 1
            rows.append(row)
        ranks[k] = gf2_rank_dense(rows, len(cols))
    ranks[d + 1] = 0
    return tuple(len(by_dim.get(k, [])) - ranks[k] - ranks[k + 1] for k in range(d + 1))


def is_face_closed(K: CubicalComplex):
    return all(f in K.cubes for c in K.cubes for f in geometric_faces(c))
