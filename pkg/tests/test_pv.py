import json

import pytest

from dicollapse.cubes import Cube
from dicollapse.errors import InvalidProgram, UnknownBuiltin
from dicollapse.pv import (
    BUILTIN_NAMES,
    PVProgram,
    builtin,
    dining_program,
    forbidden_boxes,
    parse_program,
    state_space_complex,
    swiss_flag_program,
)
from oracles import dense_sample_complex, is_face_closed


def box_set(p):
    return {(b.lo, b.hi) for b in forbidden_boxes(p)}


def test_swiss_flag_boxes():
    assert box_set(swiss_flag_program()) == {((1, 2), (4, 3)), ((2, 1), (3, 4))}


def test_swiss_flag_complex(swiss):
    assert swiss.counts() == [36, 56, 20]
    assert Cube((2, 2), 0b01) not in swiss
    assert swiss == state_space_complex(swiss_flag_program())
    assert is_face_closed(swiss)


def test_swiss_flag_matches_dense_sampling(swiss):
    p = swiss_flag_program()
    assert swiss.cubes == dense_sample_complex(p.sizes, forbidden_boxes(p))


def test_dining_matches_dense_sampling(dining3):
    p = dining_program(3, 2)
    assert dining3.counts() == [208, 504, 396, 98]
    assert dining3.cubes == dense_sample_complex(p.sizes, forbidden_boxes(p))


def test_dining_boxes_are_triples():
    boxes = forbidden_boxes(dining_program(3, 2))
    # one box per resource and per set of three holders
    assert len(boxes) == 2
    assert {(b.lo, b.hi) for b in boxes} == {((1, 1, 1), (4, 4, 4)), ((2, 2, 2), (3, 3, 3))}


def test_capacity_large_enough_leaves_full_grid():
    p = dining_program(2, 2)
    K = state_space_complex(p)
    assert forbidden_boxes(p) == []
    assert K.counts() == [36, 60, 25]


def test_relabeling_processes_permutes_complex(swiss):
    q = parse_program(["PbPaVaVb", "PaPbVbVa"], {"a": 1, "b": 1})
    swapped = {Cube(c.base[::-1], ((c.extent & 1) << 1) | (c.extent >> 1)) for c in swiss.cubes}
    assert state_space_complex(q).cubes == swapped


def test_more_capacity_means_bigger_complex():
    small = state_space_complex(dining_program(3, 1))
    big = state_space_complex(dining_program(3, 2))
    assert small.cubes < big.cubes


def test_json_round_trip():
    p = swiss_flag_program()
    assert PVProgram.from_json(json.dumps(p.to_dict())) == p


@pytest.mark.parametrize(
    "procs, res",
    [
        (["PaPa"], {"a": 1}),
        (["VaPa"], {"a": 1}),
        (["Pa"], {"a": 1}),
        (["PbVb"], {"a": 1}),
        (["PaVa"], {"a": 0}),
        ([], {"a": 1}),
    ],
)
def test_invalid_programs(procs, res):
    with pytest.raises(InvalidProgram):
        parse_program(procs, res)


def test_malformed_document():
    with pytest.raises(InvalidProgram):
        PVProgram.from_dict({"processes": [["Pa", "Va"]]})
    with pytest.raises(InvalidProgram):
        PVProgram.from_dict({"resources": [], "processes": [["Xa"]]})


def test_builtins():
    for name in BUILTIN_NAMES:
        K = builtin(name.replace("(n,cap)", ""))
        assert len(K) > 0 and is_face_closed(K)
    assert builtin("dining(2, 1)").n == 2
    with pytest.raises(UnknownBuiltin):
        builtin("nope")
