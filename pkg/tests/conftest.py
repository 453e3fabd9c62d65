import pytest
from hypothesis import strategies as st

from dicollapse.cubes import Cube, CubicalComplex
from dicollapse.pv import builtin


@st.composite
def random_complexes(draw, max_n=4, max_cubes=40, span=3):
    """Face closures of up to ``max_cubes`` random cubes in ``[0, span]^n``."""
    n = draw(st.integers(1, max_n))
    cube = st.tuples(
        st.tuples(*[st.integers(0, span - 1)] * n),
        st.integers(0, (1 << n) - 1),
    ).map(lambda t: Cube(*t))
    cubes = draw(st.lists(cube, min_size=1, max_size=max_cubes))
    return CubicalComplex(n, cubes)


@pytest.fixture(scope="session")
def swiss():
    return builtin("swiss_flag")


@pytest.fixture(scope="session")
def grid():
    return builtin("grid3")


@pytest.fixture(scope="session")
def open_box():
    return builtin("open_top_box")


@pytest.fixture(scope="session")
def dining3():
    return builtin("dining(3,2)")


def sq(lo, hi):
    return Cube.between(lo, hi)


def vx(*coords):
    return Cube(tuple(coords), 0)


def segment(lo, hi):
    """Unit edges of an axis-parallel lattice segment from ``lo`` to ``hi``."""
    axis = next(i for i, (a, b) in enumerate(zip(lo, hi)) if a != b)
    out = []
    for t in range(lo[axis], hi[axis]):
        base = list(lo)
        base[axis] = t
        out.append(Cube(tuple(base), 1 << axis))
    return out


def swiss_flag_collapsed():
    """A hand-built 0-collapse of the Swiss flag: a graph plus the square [3,4]^2."""
    edges = [
        ((0, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (1, 3)), ((1, 1), (3, 1)),
        ((1, 3), (2, 3)), ((3, 1), (3, 2)), ((2, 3), (2, 4)), ((3, 2), (4, 2)),
        ((2, 4), (3, 4)), ((4, 2), (4, 3)), ((4, 4), (4, 5)), ((4, 5), (5, 5)),
    ]
    cubes = [c for lo, hi in edges for c in segment(lo, hi)]
    cubes.append(Cube.between((3, 3), (4, 4)))
    return CubicalComplex(2, cubes)
