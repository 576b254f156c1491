"""Deficiency accounting, overfull/full subgraph detection, and the
matching-peel regularization used on full instances.

For an even-order graph with min degree above half the order, the only
candidate overfull or full induced subgraphs are the one-vertex deletions
G - v at minimum-degree vertices, so detection is pure arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classic import dirac_hamiltonian_cycle
from .errors import HypothesisError, PipelineFailure
from .graph import SimpleGraph


@dataclass(frozen=True)
class DeficiencyView:
    delta_max: int                 # max degree
    delta_min: int                 # min degree
    per_vertex: dict               # v -> delta_max - deg(v)
    total: int                     # sum of per-vertex deficiencies
    v_max: tuple                   # vertices of max degree
    v_min: tuple                   # vertices of min degree


def deficiency_view(g: SimpleGraph) -> DeficiencyView:
    verts = g.vertices
    degs = {v: g.degree(v) for v in verts}
    dmax = max(degs.values())
    dmin = min(degs.values())
    per = {v: dmax - d for v, d in degs.items()}
    return DeficiencyView(
        delta_max=dmax,
        delta_min=dmin,
        per_vertex=per,
        total=sum(per.values()),
        v_max=tuple(v for v in verts if degs[v] == dmax),
        v_min=tuple(v for v in verts if degs[v] == dmin),
    )


def is_overfull(h: SimpleGraph, delta_ref: int) -> bool:
    """e(h) exceeds delta_ref * floor(|V(h)|/2)."""
    return h.edge_count() > delta_ref * (h.num_vertices() // 2)


def is_full(h: SimpleGraph, delta_ref: int) -> bool:
    """Odd-order h meeting the overfull bound with equality."""
    if h.num_vertices() % 2 == 0:
        return False
    return h.edge_count() == delta_ref * (h.num_vertices() // 2)


@dataclass(frozen=True)
class OverfullVerdict:
    status: str                    # "overfull-found" | "full-found" | "none"
    witness: int | None = None     # deleted vertex, when status != "none"

    @property
    def overfull(self) -> bool:
        return self.status == "overfull-found"

    @property
    def full(self) -> bool:
        return self.status == "full-found"


def _check_dense_even(g: SimpleGraph) -> None:
    nv = g.num_vertices()
    if nv % 2 != 0:
        raise HypothesisError(f"order {nv} is odd")
    if nv == 0:
        raise HypothesisError("empty vertex set")
    if 2 * g.min_degree() <= nv:
        raise HypothesisError(
            f"min degree {g.min_degree()} not above half of {nv} vertices"
        )


def detect(g: SimpleGraph) -> OverfullVerdict:
    """Overfull/full verdict for even-order g with min degree > |V|/2.

    Under that density every candidate subgraph is G - v for a vertex v
    of minimum degree, so it suffices to compare e(G) - deg(v) with
    Delta * floor((|V|-1)/2).  Overfull wins over full; the witness is
    the smallest-index minimum-degree vertex.
    """
    _check_dense_even(g)
    view = deficiency_view(g)
    bound = view.delta_max * ((g.num_vertices() - 1) // 2)
    full_witness = None
    for v in view.v_min:
        rem = g.edge_count() - g.degree(v)
        if rem > bound:
            return OverfullVerdict("overfull-found", v)
        if rem == bound and full_witness is None:
            full_witness = v
    if full_witness is not None:
        return OverfullVerdict("full-found", full_witness)
    return OverfullVerdict("none", None)


def matching_from_cycle(cycle):
    """Alternate edges of an even cycle form a perfect matching."""
    if len(cycle) % 2 != 0:
        raise ValueError("odd cycle has no perfect matching")
    return sorted(
        (min(cycle[i], cycle[i + 1]), max(cycle[i], cycle[i + 1]))
        for i in range(0, len(cycle), 2)
    )


def regularize_via_full(g: SimpleGraph):
    """Peel perfect matchings off a full instance until it is regular.

    Requires detect(g) == full-found.  Each peel takes a perfect matching
    of the current graph minus {x, y}, where x is the full witness and y
    is the lightest remaining vertex besides x; x and y keep their degree
    while everyone else drops by one, so max degree falls by exactly one
    per peel.  Returns (regular graph, list of matchings in peel order).
    """
    verdict = detect(g)
    if verdict.status != "full-found":
        raise HypothesisError(
            f"regularization needs a full instance, verdict was {verdict.status}"
        )
    x = verdict.witness
    cur = g.copy()
    matchings = []
    while cur.max_degree() > cur.min_degree():
        y = min(
            (v for v in cur.vertices if v != x),
            key=lambda v: (cur.degree(v), v),
        )
        sub = cur.without_vertices([x, y])
        try:
            cycle = dirac_hamiltonian_cycle(sub)
        except HypothesisError as exc:
            raise PipelineFailure("regularize_via_full", str(exc)) from exc
        pm = matching_from_cycle(cycle)
        for (u, v) in pm:
            cur.remove_edge(u, v)
        matchings.append(pm)
    return cur, matchings
