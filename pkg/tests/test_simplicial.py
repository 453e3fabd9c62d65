from hypothesis import given, settings
from hypothesis import strategies as st

from dicollapse.simplicial import (
    EXHAUSTED,
    Homotopy,
    LinkStatus,
    SimplicialComplex,
    components,
    contractibility_status,
    euler_characteristic,
    find_collapse_sequence,
    format_complex,
    free_pairs,
    is_collapsible,
    is_connected,
    reduced_betti_gf2,
    same_homotopy_class,
    verify_witness,
)
from oracles import dense_reduced_betti

# vertex masks: 1 -> {1}, 2 -> {2}, 4 -> {3}
TWO_POINTS = SimplicialComplex(3, {0b010, 0b001})
BOUNDARY_TRIANGLE = SimplicialComplex(3, {1, 2, 4, 3, 5, 6})
FULL_TRIANGLE = SimplicialComplex.full_simplex(0b111)
PATH = SimplicialComplex(3, {1, 2, 4, 0b011, 0b110})
POINT = SimplicialComplex(3, {1})
EDGE = SimplicialComplex(2, {1, 2, 3})
EMPTY = SimplicialComplex(3)


@st.composite
def simplicial_complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=8))
    return SimplicialComplex.generated_by(n, gens)


def test_is_connected_examples():
    assert not is_connected(TWO_POINTS)
    assert is_connected(BOUNDARY_TRIANGLE)
    assert is_connected(POINT)
    assert not is_connected(EMPTY)


def test_betti_examples():
    assert reduced_betti_gf2(BOUNDARY_TRIANGLE) == (0, 1)
    assert reduced_betti_gf2(TWO_POINTS) == (1,)
    assert reduced_betti_gf2(FULL_TRIANGLE) == (0, 0, 0)
    assert reduced_betti_gf2(EMPTY) == ()


def test_betti_of_two_sphere():
    # boundary of the 3-simplex: a 2-sphere
    sphere = SimplicialComplex.generated_by(4, [0b0111, 0b1011, 0b1101, 0b1110])
    assert reduced_betti_gf2(sphere) == (0, 0, 1)


def test_collapsible_examples():
    assert is_collapsible(PATH) is True
    assert is_collapsible(BOUNDARY_TRIANGLE) is False
    assert is_collapsible(FULL_TRIANGLE) is True
    assert free_pairs(BOUNDARY_TRIANGLE.simplices) == []


def test_collapsible_budget_exhausts():
    big = SimplicialComplex.full_simplex((1 << 6) - 1)
    assert is_collapsible(big, budget=3) is EXHAUSTED


def test_contractibility_examples():
    s = contractibility_status(BOUNDARY_TRIANGLE)
    assert s.status is LinkStatus.NOT_CONTRACTIBLE and s.betti_index == 1
    open_box_link = SimplicialComplex(3, {1, 2, 4, 0b110, 0b101})
    c = contractibility_status(open_box_link)
    assert c.status is LinkStatus.CONTRACTIBLE
    assert verify_witness(open_box_link, c)
    assert contractibility_status(EMPTY).status is LinkStatus.EMPTY


def test_unknown_when_search_is_cut_off():
    # acyclic, not a cone, and the budget is too small to find a collapse
    S = SimplicialComplex.generated_by(5, [0b00011, 0b00110, 0b01100, 0b11000])
    assert contractibility_status(S, budget=1).status is LinkStatus.UNKNOWN
    assert contractibility_status(S).status is LinkStatus.CONTRACTIBLE


def test_same_homotopy_class_examples():
    assert same_homotopy_class(BOUNDARY_TRIANGLE, BOUNDARY_TRIANGLE) is Homotopy.EQUIVALENT
    assert same_homotopy_class(PATH, POINT) is Homotopy.EQUIVALENT
    assert same_homotopy_class(TWO_POINTS, EDGE) is Homotopy.NOT_EQUIVALENT
    assert same_homotopy_class(EMPTY, POINT) is Homotopy.NOT_EQUIVALENT
    assert same_homotopy_class(EMPTY, SimplicialComplex(2)) is Homotopy.EQUIVALENT


def test_debug_format():
    assert format_complex(PATH).split() == ["{1}", "{2}", "{3}", "{1,2}", "{2,3}"]


def test_components():
    assert components(TWO_POINTS) == [[1], [2]]


@settings(max_examples=150, deadline=None)
@given(simplicial_complexes())
def test_homology_properties(S):
    assert S.is_downward_closed()
    betti = reduced_betti_gf2(S)
    assert betti == dense_reduced_betti(S.simplices)
    if S:
        assert is_connected(S) == (betti[0] == 0)
        assert euler_characteristic(S) - 1 == sum((-1) ** i * b for i, b in enumerate(betti))
        assert len(components(S)) - 1 == betti[0]


@settings(max_examples=150, deadline=None)
@given(simplicial_complexes())
def test_collapsible_implies_acyclic(S):
    if is_collapsible(S, budget=20000) is True:
        assert all(b == 0 for b in reduced_betti_gf2(S))


@settings(max_examples=150, deadline=None)
@given(simplicial_complexes())
def test_witnesses_replay(S):
    verdict = contractibility_status(S)
    assert verify_witness(S, verdict)
    seq = find_collapse_sequence(S) if S else None
    if seq not in (None, EXHAUSTED):
        assert verify_witness(S, contractibility_status(S))


@settings(max_examples=100, deadline=None)
@given(simplicial_complexes(max_n=4), simplicial_complexes(max_n=4))
def test_same_homotopy_class_symmetric(A, B):
    assert same_homotopy_class(A, B) is same_homotopy_class(B, A)
    assert same_homotopy_class(A, A) is Homotopy.EQUIVALENT
