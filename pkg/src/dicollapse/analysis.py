"""Global verdicts on directed path spaces from past-link data.

* every past link contractible or empty  =>  all path spaces from the initial
  vertex are contractible;
* every past link connected              =>  all of them are connected;
* a disconnected past link in the subcomplex reachable from the initial
  vertex  =>  the path space to that vertex is disconnected.

Links that cannot be classified make the contractibility verdict
inconclusive rather than being guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .cubes import CubicalComplex, leq
from .errors import NotAVertex, NotMinimal
from .pastlink import past_links_all
from .reachability import reachable_subcomplex
from .simplicial import (
    DEFAULT_BUDGET,
    Contractibility,
    LinkStatus,
    contractibility_status,
    format_complex,
    is_connected,
)


class Verdict(enum.Enum):
    ALL_CONTRACTIBLE = "AllContractible"
    ALL_CONNECTED = "AllConnected"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class VertexLink:
    status: Contractibility
    connected: bool | None  # None: empty link
    link: object = field(repr=False, default=None)

    @property
    def connected_label(self):
        return "Empty" if self.connected is None else self.connected


@dataclass
class AnalysisReport:
    initial: tuple
    per_vertex: dict
    obstructions_type0: set
    obstructions_typeinf: set
    unknown: set
    verdict_contractible: Verdict
    verdict_connected: Verdict
    realized_disconnections: set
    caveats: list = field(default_factory=list)

    def to_dict(self, include_links: bool = False) -> dict:
        rows = []
        for v in sorted(self.per_vertex):
            info = self.per_vertex[v]
            row = {
                "vertex": list(v),
                "link_status": info.status.status.value,
                "link_connected": info.connected_label,
            }
            if info.status.betti_index is not None:
                row["betti_index"] = info.status.betti_index
            if include_links and info.link is not None:
                row["simplices"] = format_complex(info.link).split()
            rows.append(row)
        return {
            "initial": list(self.initial),
            "verdict_contractible": self.verdict_contractible.value,
            "verdict_connected": self.verdict_connected.value,
            "obstructions_type0": sorted(map(list, self.obstructions_type0)),
            "obstructions_typeinf": sorted(map(list, self.obstructions_typeinf)),
            "unknown": sorted(map(list, self.unknown)),
            "realized_disconnections": sorted(map(list, self.realized_disconnections)),
            "caveats": list(self.caveats),
            "per_vertex": rows,
        }


def _exempt(w, v) -> bool:
    return v == w or not leq(w, v)


def classify_links(K: CubicalComplex, w, budget: int = DEFAULT_BUDGET) -> dict:
    out = {}
    for v, S in past_links_all(K, w).items():
        status = contractibility_status(S, budget)
        out[v] = VertexLink(status, is_connected(S) if S else None, S)
    return out


def find_obstructions(K: CubicalComplex, w, budget: int = DEFAULT_BUDGET, links=None):
    """``(type0, typeinf, unknown)`` vertex sets with respect to ``w``.

    type-0: nonempty disconnected past link.  type-inf: provably
    non-contractible past link.  ``unknown`` links are reported separately.
    """
    w = tuple(w)
    if not K.has_vertex(w):
        raise NotAVertex(f"{w} is not a vertex of the complex")
    links = classify_links(K, w, budget) if links is None else links
    type0, typeinf, unknown = set(), set(), set()
    for v, info in links.items():
        if info.connected is False:
            type0.add(v)
        if info.status.status is LinkStatus.NOT_CONTRACTIBLE:
            typeinf.add(v)
        elif info.status.status is LinkStatus.UNKNOWN:
            unknown.add(v)
    return type0, typeinf, unknown


def realize_obstructions(K: CubicalComplex, w) -> set:
    """Vertices whose path space from ``w`` is provably disconnected.

    These are the vertices with a nonempty disconnected past link inside the
    subcomplex reachable from ``w``.
    """
    w = tuple(w)
    if not K.has_vertex(w):
        raise NotAVertex(f"{w} is not a vertex of the complex")
    Khat = reachable_subcomplex(K, w)
    return {v for v, S in past_links_all(Khat, w).items() if S and not is_connected(S)}


def is_minimal(K: CubicalComplex, w) -> bool:
    return all(leq(w, v) for v in K.vertices)


def theorem_verdicts(K: CubicalComplex, w, *, strict: bool = True,
                     budget: int = DEFAULT_BUDGET) -> AnalysisReport:
    """Full report for initial vertex ``w``.

    ``w`` must be the minimal vertex in strict mode.  Otherwise claims are
    restricted to vertices above ``w`` and a caveat is recorded.
    """
    w = tuple(w)
    if not K.has_vertex(w):
        raise NotAVertex(f"{w} is not a vertex of the complex")
    caveats = []
    links = classify_links(K, w, budget)
    if not is_minimal(K, w):
        if strict:
            raise NotMinimal(f"{w} is not the minimal vertex of the complex")
        links = {v: info for v, info in links.items() if leq(w, v)}
        caveats.append(
            f"{list(w)} is not minimal; verdicts only cover vertices v with v >= {list(w)}"
        )
    type0, typeinf, unknown = find_obstructions(K, w, budget, links)

    contractible = all(
        info.status.status in (LinkStatus.CONTRACTIBLE, LinkStatus.EMPTY)
        for info in links.values()
    )
    connected = all(
        info.connected or (info.connected is None and _exempt(w, v))
        for v, info in links.items()
    )
    if unknown:
        caveats.append(f"{len(unknown)} past link(s) could not be classified")
    empty_reachable_gap = sorted(
        v for v, info in links.items() if info.connected is None and not _exempt(w, v)
    )
    if empty_reachable_gap:
        caveats.append(
            "vertices above the initial vertex with empty past links (no path reaches them): "
            + ", ".join(map(str, empty_reachable_gap))
        )
    realized = realize_obstructions(K, w)
    return AnalysisReport(
        initial=w,
        per_vertex=links,
        obstructions_type0=type0,
        obstructions_typeinf=typeinf,
        unknown=unknown,
        verdict_contractible=Verdict.ALL_CONTRACTIBLE if contractible else Verdict.INCONCLUSIVE,
        verdict_connected=Verdict.ALL_CONNECTED if connected else Verdict.INCONCLUSIVE,
        realized_disconnections=realized,
        caveats=caveats,
    )


def dump_links(report: AnalysisReport) -> str:
    """Text listing of every past link and its status."""
    lines = []
    for v in sorted(report.per_vertex):
        info = report.per_vertex[v]
        lines.append(f"vertex {','.join(map(str, v))}: {info.status}")
        if info.link is not None:
            lines.extend("  " + s for s in format_complex(info.link).split())
    return "\n".join(lines) + "\n"
