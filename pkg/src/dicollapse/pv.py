"""State spaces of PV programs as cubical complexes.

Process ``i``'s ``k``-th action sits at coordinate ``k`` (1-based) on axis
``i``, and the axis runs over ``[0, len_i + 1]``.  A resource of capacity
``c`` is over-subscribed on the product of the hold intervals of any
``c + 1`` processes; the state space is the ambient box minus the interior
of the union of those forbidden boxes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations, product

from .cubes import Cube, CubicalComplex, faces, grid_complex
from .errors import InvalidProgram, UnknownBuiltin

_ACTION = re.compile(r"^([PV])(.+)$")


@dataclass(frozen=True)
class Action:
    kind: str  # "P" lock, "V" release
    resource: str

    def __str__(self):
        return self.kind + self.resource


@dataclass(frozen=True)
class PVProgram:
    resources: tuple[tuple[str, int], ...]
    processes: tuple[tuple[Action, ...], ...]

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_dict(cls, data: dict) -> "PVProgram":
        try:
            resources = tuple((str(r["name"]), r["capacity"]) for r in data["resources"])
            processes = tuple(tuple(parse_action(a) for a in proc) for proc in data["processes"])
        except (KeyError, TypeError) as exc:
            raise InvalidProgram(f"malformed program document: {exc}") from None
        return cls(resources, processes)

    @classmethod
    def from_json(cls, text: str) -> "PVProgram":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict:
        return {
            "resources": [{"name": n, "capacity": c} for n, c in self.resources],
            "processes": [[str(a) for a in proc] for proc in self.processes],
        }

    @property
    def capacities(self) -> dict[str, int]:
        return dict(self.resources)

    @property
    def sizes(self) -> tuple[int, ...]:
        """Ambient box extent along each axis."""
        return tuple(len(proc) + 1 for proc in self.processes)

    def validate(self):
        names = [n for n, _ in self.resources]
        if len(set(names)) != len(names):
            raise InvalidProgram("duplicate resource names")
        for name, cap in self.resources:
            if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
                raise InvalidProgram(f"capacity of {name!r} must be a positive integer")
        if not self.processes:
            raise InvalidProgram("a program needs at least one process")
        for i, proc in enumerate(self.processes):
            held = set()
            for k, act in enumerate(proc, start=1):
                if act.resource not in names:
                    raise InvalidProgram(f"process {i}: unknown resource {act.resource!r}")
                if act.kind == "P":
                    if act.resource in held:
                        raise InvalidProgram(
                            f"process {i}: re-lock of held resource {act.resource!r} at action {k}"
                        )
                    held.add(act.resource)
                else:
                    if act.resource not in held:
                        raise InvalidProgram(
                            f"process {i}: release of unheld resource {act.resource!r} at action {k}"
                        )
                    held.discard(act.resource)
            if held:
                raise InvalidProgram(f"process {i}: locks never released: {sorted(held)}")

    def hold_intervals(self, i: int, resource: str) -> list[tuple[int, int]]:
        out, start = [], None
        for k, act in enumerate(self.processes[i], start=1):
            if act.resource != resource:
                continue
            if act.kind == "P":
                start = k
            else:
                out.append((start, k))
        return out


def parse_action(text: str) -> Action:
    m = _ACTION.match(str(text))
    if not m:
        raise InvalidProgram(f"bad action {text!r}; expected P<resource> or V<resource>")
    return Action(m.group(1), m.group(2))


def parse_program(processes, resources) -> PVProgram:
    """Shorthand: ``parse_program(["PaPbVbVa", ...], {"a": 1, "b": 1})`` for one-letter resources."""
    procs = []
    for p in processes:
        if isinstance(p, str):
            p = [p[k:k + 2] for k in range(0, len(p), 2)]
        procs.append(tuple(parse_action(a) for a in p))
    return PVProgram(tuple(resources.items()), tuple(procs))


@dataclass(frozen=True)
class ForbiddenBox:
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    resource: str = ""

    def cells(self):
        return product(*(range(a, b) for a, b in zip(self.lo, self.hi)))


def forbidden_boxes(p: PVProgram) -> list[ForbiddenBox]:
    out = []
    for name, cap in p.resources:
        holders = {i: p.hold_intervals(i, name) for i in range(len(p.processes))}
        holders = {i: iv for i, iv in holders.items() if iv}
        for group in combinations(sorted(holders), cap + 1):
            for choice in product(*(holders[i] for i in group)):
                lo = [0] * len(p.processes)
                hi = list(p.sizes)
                for i, (a, b) in zip(group, choice):
                    lo[i], hi[i] = a, b
                out.append(ForbiddenBox(tuple(lo), tuple(hi), name))
    return out


def forbidden_cells(sizes, boxes) -> set:
    """Unit top cells (by lower corner) of the ambient box covered by the boxes."""
    cells = set()
    for box in boxes:
        for a in box.cells():
            if all(0 <= x < s for x, s in zip(a, sizes)):
                cells.add(a)
    return cells


def _incident_cells(c: Cube, sizes):
    ranges = []
    for i, x in enumerate(c.base):
        if c.extent >> i & 1:
            ranges.append((x,))
        else:
            ranges.append(tuple(a for a in (x - 1, x) if 0 <= a < sizes[i]))
    return product(*ranges)


def _all_incident_forbidden(c: Cube, sizes, cells) -> bool:
    n_free = c.n - c.dim
    incident = list(_incident_cells(c, sizes))
    # a face on the ambient boundary misses some of its 2**n_free cells
    return len(incident) == 1 << n_free and all(a in cells for a in incident)


def complex_avoiding(sizes, boxes) -> CubicalComplex:
    """Cubes of the ambient grid that miss the interior of the union of ``boxes``."""
    sizes = tuple(sizes)
    ambient = grid_complex(sizes)
    cells = forbidden_cells(sizes, boxes)
    if not cells:
        return ambient
    interior = {c for c in ambient.cubes if _all_incident_forbidden(c, sizes, cells)}
    keep = []
    for c in ambient.cubes:
        if c in interior:
            continue
        if c.dim and any(f in interior for f in faces(c)):
            continue
        keep.append(c)
    return CubicalComplex(len(sizes), keep, closed=True)


def state_space_complex(p: PVProgram) -> CubicalComplex:
    return complex_avoiding(p.sizes, forbidden_boxes(p))


# fixtures


def swiss_flag_program() -> PVProgram:
    return parse_program(["PaPbVbVa", "PbPaVaVb"], {"a": 1, "b": 1})


def dining_program(n: int = 3, capacity: int = 2) -> PVProgram:
    """``n`` processes all running ``PaPbVbVa`` on two resources of equal capacity."""
    return parse_program(["PaPbVbVa"] * n, {"a": capacity, "b": capacity})


def open_top_box() -> CubicalComplex:
    top = Cube((0, 0, 1), 0b011)
    squares = [c for c in grid_complex((1, 1, 1)).cubes if c.dim == 2 and c != top]
    return CubicalComplex(3, squares)


def cube_boundary(size: int = 3, n: int = 3) -> CubicalComplex:
    """Boundary surface of ``[0, size]^n`` subdivided into unit cubes."""
    full = (1 << n) - 1
    cubes = []
    for axis in range(n):
        ext = full & ~(1 << axis)
        for side in (0, size):
            for rest in product(range(size), repeat=n - 1):
                base = list(rest)
                base.insert(axis, side)
                cubes.append(Cube(tuple(base), ext))
    return CubicalComplex(n, cubes)


def boundary333_plus_top() -> CubicalComplex:
    top = Cube((2, 2, 2), 0b111)
    K = cube_boundary(3, 3)
    return CubicalComplex(3, set(K.cubes) | {top})


_DINING = re.compile(r"^dining(?:\((\d+),\s*(\d+)\))?$")


def builtin(name: str) -> CubicalComplex:
    """A named example complex: open_top_box, grid3, boundary333_plus_top,
    swiss_flag, or dining(n,cap)."""
    if name == "open_top_box":
        return open_top_box()
    if name == "grid3":
        return grid_complex((3, 3))
    if name == "boundary333_plus_top":
        return boundary333_plus_top()
    if name == "swiss_flag":
        return state_space_complex(swiss_flag_program())
    m = _DINING.match(name.replace(" ", ""))
    if m:
        n, cap = (int(m.group(1)), int(m.group(2))) if m.group(1) else (3, 2)
        return state_space_complex(dining_program(n, cap))
    raise UnknownBuiltin(
        f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
    )


BUILTIN_NAMES = ("open_top_box", "grid3", "boundary333_plus_top", "swiss_flag", "dining(n,cap)")
