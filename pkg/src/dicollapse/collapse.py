"""Directed collapses of cubical complexes.

A collapsing pair ``(tau, sigma)`` has ``sigma`` maximal and the only maximal
cube containing ``tau``; collapsing removes every cube between them.  The
collapse is *directed* when each surviving past link keeps its homotopy
type, and a *0-collapse* when each surviving past link keeps its
connectedness.

Only vertices of ``sigma`` other than its minimal corner can see their past
link change, so checks are restricted to those unless ``full=True``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from .cubes import Cube, CubicalComplex, faces, maximal_cofaces, shift, submasks
from .errors import NotFreePair
from .pastlink import past_link
from .simplicial import (
    DEFAULT_BUDGET,
    Homotopy,
    contractibility_status,
    is_connected,
    popcount,
    same_homotopy_class,
)

log = logging.getLogger(__name__)


class CollapseMode(enum.Enum):
    HOMOTOPY = "homotopy"
    ZERO = "0"

    @classmethod
    def parse(cls, value) -> "CollapseMode":
        if isinstance(value, cls):
            return value
        value = str(value).lower()
        if value in ("0", "zero"):
            return cls.ZERO
        if value in ("homotopy", "h", "inf"):
            return cls.HOMOTOPY
        raise ValueError(f"unknown collapse mode {value!r}")


class Verdict(enum.Enum):
    ACCEPTED = "Accepted"
    REJECTED = "Rejected"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CollapsingPair:
    tau: Cube
    sigma: Cube
    mode: CollapseMode = CollapseMode.HOMOTOPY

    def __str__(self):
        return f"({self.tau}, {self.sigma})"


@dataclass(frozen=True)
class VertexCheck:
    vertex: tuple
    before: str
    after: str
    outcome: Verdict


@dataclass(frozen=True)
class CollapseVerdict:
    verdict: Verdict
    checks: tuple[VertexCheck, ...] = ()
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPTED

    @property
    def failing(self) -> list[tuple]:
        """Vertices that broke the condition, in check order (top corner first)."""
        return [c.vertex for c in self.checks if c.outcome is Verdict.REJECTED]

    @property
    def undecided(self) -> list[tuple]:
        return [c.vertex for c in self.checks if c.outcome is Verdict.UNKNOWN]


@dataclass(frozen=True)
class CollapseStep:
    pair: CollapsingPair
    removed: frozenset[Cube]
    result: CollapseVerdict = field(default_factory=lambda: CollapseVerdict(Verdict.UNKNOWN))

    @property
    def verdict(self) -> Verdict:
        return self.result.verdict

    def to_dict(self) -> dict:
        return {
            "tau": _cube_dict(self.pair.tau),
            "sigma": _cube_dict(self.pair.sigma),
            "mode": self.pair.mode.value,
            "removed": [_cube_dict(c) for c in sorted(self.removed, key=Cube.sort_key)],
            "verdict": self.verdict.value,
            "reason": self.result.reason,
            "checks": [
                {
                    "vertex": list(c.vertex),
                    "before": c.before,
                    "after": c.after,
                    "outcome": c.outcome.value,
                }
                for c in self.result.checks
            ],
        }


def _cube_dict(c: Cube) -> dict:
    return {"base": list(c.base), "extent": list(c.extent_vector)}


def candidate_pairs(K: CubicalComplex, max_tau_dim: int | None = None) -> list[tuple[Cube, Cube]]:
    """Free pairs ``(tau, sigma)`` sorted by ``(sigma, tau)``."""
    owners: dict[Cube, list[Cube]] = {}
    for sigma in K.maximal_cubes():
        for tau in faces(sigma):
            owners.setdefault(tau, []).append(sigma)
    pairs = [
        (tau, sig[0])
        for tau, sig in owners.items()
        if len(sig) == 1 and (max_tau_dim is None or tau.dim <= max_tau_dim)
    ]
    pairs.sort(key=lambda p: (p[1].sort_key(), p[0].sort_key()))
    return pairs


def collapse_interval(tau: Cube, sigma: Cube) -> set[Cube]:
    """All cubes ``gamma`` with ``tau ⊆ gamma ⊆ sigma``."""
    free = sigma.extent & ~tau.extent
    out = set()
    for sub in submasks(free):
        base = tuple(
            sigma.base[i] if sub >> i & 1 else tau.base[i] for i in range(tau.n)
        )
        out.add(Cube(base, tau.extent | sub))
    return out


def is_free_pair(K: CubicalComplex, tau: Cube, sigma: Cube) -> bool:
    if tau not in K or sigma not in K:
        return False
    if tau == sigma or not sigma.contains(tau):
        return False
    return K.is_maximal(sigma) and maximal_cofaces(K, tau) == {sigma}


def apply_collapse(K: CubicalComplex, tau: Cube, sigma: Cube) -> CubicalComplex:
    if not is_free_pair(K, tau, sigma):
        raise NotFreePair(f"({tau}, {sigma}) is not a free pair of the complex")
    return K.without(collapse_interval(tau, sigma))


def affected_vertices(K2: CubicalComplex, sigma: Cube) -> list[tuple]:
    """Surviving vertices of ``sigma`` other than its minimal corner.

    These are ``top(sigma) - j'`` for every ``j'`` strictly below the extent
    of ``sigma``; ordered from the top corner down.
    """
    top = sigma.top
    found = []
    for s in submasks(sigma.extent):
        if s == sigma.extent:
            continue
        v = shift(top, s, -1)
        if K2.has_vertex(v):
            found.append((popcount(s), v))
    return [v for _, v in sorted(found)]


def _link_label_zero(S) -> str:
    if not S:
        return "empty"
    return "connected" if is_connected(S) else "disconnected"


def check_directed_collapse(K: CubicalComplex, K2: CubicalComplex, w, pair: CollapsingPair,
                            mode=None, *, full: bool = False,
                            budget: int = DEFAULT_BUDGET) -> CollapseVerdict:
    """Compare past links before and after a collapse.

    With ``full=True`` every vertex of ``K2`` is compared, which is the slow
    reference the affected-vertex shortcut is tested against.
    """
    mode = pair.mode if mode is None else CollapseMode.parse(mode)
    w = tuple(w)
    vertices = sorted(K2.vertices) if full else affected_vertices(K2, pair.sigma)
    checks = []
    for v in vertices:
        before = past_link(K, w, v)
        after = past_link(K2, w, v)
        if mode is CollapseMode.ZERO:
            ok = is_connected(before) == is_connected(after)
            outcome = Verdict.ACCEPTED if ok else Verdict.REJECTED
            checks.append(VertexCheck(v, _link_label_zero(before), _link_label_zero(after), outcome))
        else:
            h = same_homotopy_class(before, after, budget)
            outcome = {
                Homotopy.EQUIVALENT: Verdict.ACCEPTED,
                Homotopy.NOT_EQUIVALENT: Verdict.REJECTED,
                Homotopy.UNKNOWN: Verdict.UNKNOWN,
            }[h]
            checks.append(VertexCheck(
                v,
                str(contractibility_status(before, budget)),
                str(contractibility_status(after, budget)),
                outcome,
            ))
    checks = tuple(checks)
    failing = [c.vertex for c in checks if c.outcome is Verdict.REJECTED]
    if failing:
        what = "connectedness" if mode is CollapseMode.ZERO else "homotopy type"
        reason = "past link " + what + " changes at " + ", ".join(map(str, failing))
        return CollapseVerdict(Verdict.REJECTED, checks, reason)
    unknown = [c.vertex for c in checks if c.outcome is Verdict.UNKNOWN]
    if unknown:
        reason = "homotopy equivalence undecided at " + ", ".join(map(str, unknown))
        return CollapseVerdict(Verdict.UNKNOWN, checks, reason)
    return CollapseVerdict(Verdict.ACCEPTED, checks)


def try_collapse(K: CubicalComplex, w, tau: Cube, sigma: Cube, mode=CollapseMode.HOMOTOPY,
                 **kwargs) -> tuple[CollapseStep, CubicalComplex]:
    """Apply and check one pair; returns the step and the collapsed complex."""
    pair = CollapsingPair(tau, sigma, CollapseMode.parse(mode))
    K2 = apply_collapse(K, tau, sigma)
    result = check_directed_collapse(K, K2, w, pair, **kwargs)
    return CollapseStep(pair, frozenset(K.cubes - K2.cubes), result), K2


def _deletes_preserved(tau: Cube, preserve) -> bool:
    return tau.dim == 0 and tau.base in preserve


def acceptable_pairs(K: CubicalComplex, w, mode=CollapseMode.ZERO, preserve=(),
                     max_tau_dim: int | None = None, **kwargs) -> list[CollapseStep]:
    """Every candidate pair that would be accepted on ``K`` as it stands."""
    preserve = {tuple(p) for p in preserve}
    out = []
    for tau, sigma in candidate_pairs(K, max_tau_dim):
        if _deletes_preserved(tau, preserve):
            continue
        step, _ = try_collapse(K, w, tau, sigma, mode, **kwargs)
        if step.verdict is Verdict.ACCEPTED:
            out.append(step)
    return out


def greedy_collapse(K: CubicalComplex, w, mode=CollapseMode.ZERO, preserve=(),
                    max_tau_dim: int | None = None, *, log_rejected: bool = False,
                    max_steps: int | None = None,
                    **kwargs) -> tuple[list[CollapseStep], CubicalComplex]:
    """Apply the first acceptable pair in candidate order until none is left.

    ``max_tau_dim=0`` restricts to vertex-into-cube pairs.  Pairs with an
    undecided homotopy verdict are skipped with a warning.
    """
    mode = CollapseMode.parse(mode)
    preserve = {tuple(p) for p in preserve}
    steps: list[CollapseStep] = []
    while max_steps is None or sum(s.verdict is Verdict.ACCEPTED for s in steps) < max_steps:
        for tau, sigma in candidate_pairs(K, max_tau_dim):
            if _deletes_preserved(tau, preserve):
                continue
            step, K2 = try_collapse(K, w, tau, sigma, mode, **kwargs)
            if step.verdict is Verdict.ACCEPTED:
                steps.append(step)
                K = K2
                break
            if step.verdict is Verdict.UNKNOWN:
                log.warning("skipping %s: %s", step.pair, step.result.reason)
            if log_rejected:
                steps.append(step)
        else:
            break
    return steps, K
