"""Top-level decide-and-color procedure for dense even-order graphs.

Flow: regular graphs go straight to the four-step pipeline; an overfull
witness settles class 2 (colored with one extra color); a full witness
triggers matching-peel regularization.  Otherwise light vertices are
saturated into a clique, and the instance is reduced to a pipeline shape
either by matching peels (few minimum-degree vertices) or by carving out
spanning linear forests prescribed by a deficiency multigraph (narrow
degree spread).  Every transformation is logged in a ReductionTrace whose
replay/recombination restores a proper coloring of the original graph
with exactly its max degree in colors (or one more in class 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classic import (
    dirac_hamiltonian_cycle,
    hakimi_feasible,
    hakimi_realize,
    path_system,
    vizing_color,
)
from .coloring import EdgeColoring
from .errors import HypothesisError, PipelineFailure
from .graph import SimpleGraph, eid
from .overfull import (
    deficiency_view,
    detect,
    matching_from_cycle,
    regularize_via_full,
)
from .pipeline import classify_condition, color_dense
from .profiles import ConstantsProfile, desk_profile, with_epsilon


# ---------------------------------------------------------------------------
# reduction trace


@dataclass(frozen=True)
class TraceEntry:
    kind: str            # "add-edge" | "matching" | "forest"
    payload: tuple       # add-edge: (u, v); matching: ((u,v), ...);
                         # forest: tuple of vertex-path tuples
    colors_needed: int
    note: str = ""


@dataclass
class ReductionTrace:
    """Ordered log of graph transformations applied before core coloring.

    Reserved colors are handed out top-down from base_delta in recording
    order; the core coloring of the final reduced graph takes the bottom
    of the palette.  Replaying the entries on the base graph reproduces
    the reduced graph exactly.
    """

    base_delta: int
    entries: list = field(default_factory=list)

    def log_added_edge(self, u, v, note=""):
        self.entries.append(TraceEntry("add-edge", (min(u, v), max(u, v)), 0, note))

    def log_matching(self, edges, note=""):
        pm = tuple(sorted((min(u, v), max(u, v)) for (u, v) in edges))
        self.entries.append(TraceEntry("matching", pm, 1, note))

    def log_forest(self, paths, note=""):
        self.entries.append(
            TraceEntry("forest", tuple(tuple(p) for p in paths), 2, note)
        )

    def added_edges(self):
        return {e.payload for e in self.entries if e.kind == "add-edge"}

    def reserved_color_count(self):
        return sum(e.colors_needed for e in self.entries)

    def replay(self, g: SimpleGraph) -> SimpleGraph:
        """Apply every logged transformation to a copy of g."""
        cur = g.copy()
        for entry in self.entries:
            if entry.kind == "add-edge":
                cur.add_edge(*entry.payload)
            elif entry.kind == "matching":
                for (u, v) in entry.payload:
                    cur.remove_edge(u, v)
            elif entry.kind == "forest":
                for path in entry.payload:
                    for i in range(len(path) - 1):
                        cur.remove_edge(path[i], path[i + 1])
            else:
                raise ValueError(f"unknown trace entry kind {entry.kind!r}")
        return cur

    def color_plan(self):
        """(entry, colors) pairs, colors drawn top-down from base_delta."""
        hi = self.base_delta
        plan = []
        for entry in self.entries:
            if entry.colors_needed == 0:
                continue
            colors = tuple(range(hi - entry.colors_needed + 1, hi + 1))
            plan.append((entry, colors))
            hi -= entry.colors_needed
        return plan

    def recombine(self, g: SimpleGraph, core: EdgeColoring) -> EdgeColoring:
        """Merge reserved classes with the core coloring, restricted to E(g)."""
        result = EdgeColoring(g.n, self.base_delta)
        for entry, colors in self.color_plan():
            if entry.kind == "matching":
                for (u, v) in entry.payload:
                    if g.has_edge(u, v):
                        result.assign(eid(u, v), colors[0])
            else:  # forest: alternate the two colors along each path
                for path in entry.payload:
                    for i in range(len(path) - 1):
                        u, v = path[i], path[i + 1]
                        if g.has_edge(u, v):
                            result.assign(eid(u, v), colors[i % 2])
        for e, c in sorted(core.items()):
            u, v, _copy = e
            if g.has_edge(u, v):
                result.assign(e, c)
        if result.colored_count() != g.edge_count():
            raise PipelineFailure(
                "recombine",
                f"colored {result.colored_count()} of {g.edge_count()} edges",
            )
        return result


@dataclass
class DriverResult:
    graph_class: int                 # 1 or 2
    coloring: EdgeColoring
    trace: ReductionTrace
    report: dict


# ---------------------------------------------------------------------------
# branch helpers


def class_verdict(g: SimpleGraph) -> int:
    """1 or 2: class 2 exactly when an overfull witness exists."""
    return 2 if detect(g).overfull else 1


def _check_density(g, epsilon, profile):
    nv = g.num_vertices()
    if nv % 2 != 0:
        raise HypothesisError(f"order {nv} is odd")
    n = nv // 2
    if 2 * g.min_degree() <= nv:
        raise HypothesisError(
            f"min degree {g.min_degree()} not above half of {nv} vertices"
        )
    if profile.strict and g.min_degree() < (1 + epsilon) * n:
        raise HypothesisError(
            f"min degree {g.min_degree()} below (1+{epsilon})*{n}"
        )


def _pm_of(sub: SimpleGraph, prefer=None):
    """Perfect matching of an even-order subgraph with high min degree.

    When the min degree dips just below half the order (a forced vertex
    whose degree was eroded by earlier peels), an edge at `prefer` is
    committed first and the rest is matched recursively.
    """
    m = sub.num_vertices()
    if m % 2 != 0:
        raise PipelineFailure("peel", f"odd subgraph order {m}")
    if m == 0:
        return []
    if m == 2:
        u, v = sub.vertices
        if not sub.has_edge(u, v):
            raise PipelineFailure("peel", f"no edge between last pair ({u},{v})")
        return [(u, v)]
    if 2 * sub.min_degree() >= m:
        try:
            return matching_from_cycle(dirac_hamiltonian_cycle(sub))
        except (HypothesisError, RuntimeError) as exc:
            raise PipelineFailure("peel", str(exc)) from exc
    if prefer is not None and sub.degree(prefer) > 0:
        anchor = sub.neighbors(prefer)[0]
        rest = _pm_of(sub.without_vertices([prefer, anchor]))
        return sorted(rest + [(min(prefer, anchor), max(prefer, anchor))])
    raise PipelineFailure(
        "peel",
        f"min degree {sub.min_degree()} below half of {m}, no anchor vertex",
    )


def saturate_light_vertices(g: SimpleGraph, trace: ReductionTrace):
    """Join nonadjacent sub-max-degree vertices until they form a clique.

    Returns (g', full_flag): full_flag is True when an addition produced
    a full witness, in which case saturation stops there and the caller
    regularizes.  Additions never raise the max degree; a fresh overfull
    witness would contradict the entry preconditions and is rejected.
    """
    cur = g.copy()
    delta = cur.max_degree()
    while True:
        light = sorted(v for v in cur.vertices if cur.degree(v) < delta)
        pair = None
        for i in range(len(light)):
            for j in range(i + 1, len(light)):
                if not cur.has_edge(light[i], light[j]):
                    pair = (light[i], light[j])
                    break
            if pair:
                break
        if pair is None:
            return cur, False
        cur.add_edge(*pair)
        trace.log_added_edge(*pair, note="light-saturation")
        verdict = detect(cur)
        if verdict.overfull:
            raise PipelineFailure(
                "saturate",
                f"edge {pair} created an overfull witness at {verdict.witness}",
            )
        if verdict.full:
            return cur, True


def case1_reduce(g: SimpleGraph, trace: ReductionTrace, profile: ConstantsProfile):
    """Peel matchings until the graph fits a pipeline shape.

    Applies when few vertices sit at minimum degree.  Even count: peel a
    perfect matching avoiding all of them.  Odd count with a middle-degree
    vertex: additionally avoid that vertex.  Odd count, no middle degrees:
    peel matching pairs anchored at two fixed minimum-degree vertices until
    only those two sit below the (new) max degree.
    """
    cur = g.copy()
    guard = cur.max_degree() + 2
    while guard > 0:
        guard -= 1
        cond = classify_condition(cur, profile)
        if cond is not None:
            return cur, cond
        view = deficiency_view(cur)
        vdel = set(view.v_min)
        middles = [
            v
            for v in cur.vertices
            if view.delta_min < cur.degree(v) < view.delta_max
        ]
        if len(vdel) % 2 == 0:
            pm = _pm_of(cur.induced_subgraph(set(cur.vertices) - vdel))
        elif middles:
            skip = vdel | {min(middles)}
            pm = _pm_of(cur.induced_subgraph(set(cur.vertices) - skip))
        else:
            _double_peel(cur, trace, vdel, view)
            continue
        for (u, v) in pm:
            cur.remove_edge(u, v)
        trace.log_matching(pm, note="light-avoiding peel")
    raise PipelineFailure("case1", "peel loop failed to reach a pipeline shape")


def _double_peel(cur, trace, vdel, view):
    """Anchored matching pairs for the odd-count, no-middle-degree branch.

    Each round removes two matchings, one covering everything but the
    minimum-degree vertices except a fixed anchor x, the other likewise
    for anchor y; after (spread/2) rounds only x and y sit below the max.
    """
    if len(vdel) < 2:
        raise PipelineFailure(
            "case1",
            f"odd branch needs two minimum-degree vertices, have {len(vdel)}",
        )
    spread = view.delta_max - view.delta_min
    if spread % 2 != 0:
        raise PipelineFailure(
            "case1", f"no middle degrees but odd spread {spread}"
        )
    x, y = sorted(vdel)[:2]
    for _round in range(spread // 2):
        for anchor in (x, y):
            keep = set(cur.vertices) - (vdel - {anchor})
            pm = _pm_of(cur.induced_subgraph(keep), prefer=anchor)
            for (u, v) in pm:
                cur.remove_edge(u, v)
            trace.log_matching(pm, note=f"anchored peel at {anchor}")


def case2_reduce(g: SimpleGraph, trace: ReductionTrace, profile: ConstantsProfile):
    """Carve spanning linear forests until the graph is regular.

    Applies when the degree spread is narrow.  A deficiency multigraph H
    (degree of v = max degree minus degree of v) is realized and split
    into small matchings; each matching M_i prescribes the leaf set of a
    spanning linear forest F_i removed from the graph.  Interior vertices
    lose 2 per forest and leaves lose 1, so after k forests every vertex
    sits at (original max degree) - 2k.
    """
    cur = g.copy()
    view = deficiency_view(cur)
    degrees = [0] * cur.n
    for v in cur.vertices:
        degrees[v] = view.per_vertex[v]
    if all(d == 0 for d in degrees):
        return cur, "a"
    if not hakimi_feasible([degrees[v] for v in cur.vertices]):
        raise PipelineFailure(
            "case2",
            "deficiency sequence not realizable (odd total or dominant vertex)",
        )
    h = hakimi_realize(degrees)
    if h is None:
        raise PipelineFailure("case2", "deficiency realization failed")
    cap = profile.matching_cap(cur.num_vertices() // 2)
    matchings = partition_into_matchings(h, cap)
    for mi in matchings:
        try:
            paths = path_system(cur, mi)
        except (HypothesisError, RuntimeError) as exc:
            raise PipelineFailure("case2", f"forest for {mi}: {exc}") from exc
        for path in paths:
            for i in range(len(path) - 1):
                cur.remove_edge(path[i], path[i + 1])
        ends = sorted({x for pair in mi for x in pair})
        trace.log_forest(paths, note="leaves:" + ",".join(map(str, ends)))
    target = view.delta_max - 2 * len(matchings)
    if cur.max_degree() != cur.min_degree() or cur.max_degree() != target:
        raise PipelineFailure(
            "case2",
            f"degrees [{cur.min_degree()},{cur.max_degree()}] "
            f"after {len(matchings)} forests, expected regular {target}",
        )
    return cur, "a"


def partition_into_matchings(h, cap: int):
    """Split the edges of a multigraph into vertex-disjoint matchings,
    each of size at most cap, by repeated greedy maximal matchings."""
    if cap < 1:
        raise ValueError(f"matching cap {cap} below 1")
    remaining = list(h.edges())
    out = []
    while remaining:
        used = set()
        batch = []
        rest = []
        for (u, v, copy) in remaining:
            if len(batch) < cap and u not in used and v not in used:
                batch.append((u, v))
                used.update((u, v))
            else:
                rest.append((u, v, copy))
        out.append(sorted(batch))
        remaining = rest
    return out


# ---------------------------------------------------------------------------
# the driver


def chi_prime_dense(
    g: SimpleGraph,
    epsilon: float = 0.2,
    profile: ConstantsProfile | None = None,
    seed: int = 0,
) -> DriverResult:
    """Decide class 1 vs class 2 and produce a matching optimal coloring.

    Class 2 (an overfull witness exists): colored with max degree + 1
    colors.  Class 1: colored with exactly max degree colors through the
    regularization / saturation / reduction branches and the four-step
    pipeline.  Construction failures raise PipelineFailure with the
    failing step named; the class verdict itself is available cheaply
    through class_verdict().
    """
    if profile is None:
        profile = desk_profile(epsilon)
    elif abs(profile.epsilon - epsilon) > 1e-12:
        profile = with_epsilon(profile, epsilon)
    _check_density(g, epsilon, profile)
    delta = g.max_degree()
    trace = ReductionTrace(base_delta=delta)
    report = {
        "order": g.num_vertices(),
        "delta": delta,
        "delta_min": g.min_degree(),
        "epsilon": epsilon,
        "profile": profile.name,
        "seed": seed,
    }

    if delta == g.min_degree():
        core, prep = color_dense(g, "a", profile, seed=seed)
        report.update({"branch": "regular", "pipeline": prep})
        return DriverResult(1, core, trace, report)

    verdict = detect(g)
    if verdict.overfull:
        col = vizing_color(g)
        report.update(
            {"branch": "overfull", "witness": verdict.witness, "palette": col.k}
        )
        return DriverResult(2, col, trace, report)

    if verdict.full:
        coloring = _finish_full(g, trace, profile, seed, report)
        return DriverResult(1, coloring, trace, report)

    cur, went_full = saturate_light_vertices(g, trace)
    report["edges_added"] = len(trace.added_edges())
    if went_full:
        coloring = _finish_full(cur, trace, profile, seed, report, base=g)
        return DriverResult(1, coloring, trace, report)

    cond = classify_condition(cur, profile)
    if cond is not None:
        report["branch"] = f"direct-{cond}"
        core, prep = color_dense(cur, cond, profile, seed=seed)
        report["pipeline"] = prep
        return DriverResult(1, trace.recombine(g, core), trace, report)

    view = deficiency_view(cur)
    n = cur.num_vertices() // 2
    thr = profile.case_threshold(n)
    narrow_spread = view.delta_max - view.delta_min < thr
    few_light = len(view.v_min) < thr
    if not narrow_spread and not few_light:
        raise PipelineFailure(
            "driver",
            f"spread {view.delta_max - view.delta_min} and "
            f"{len(view.v_min)} light vertices fit no reduction branch",
        )
    # narrow spread prefers the forest reduction, but either reduction is
    # attempted when its own precondition holds and the preferred one fails
    order = ["forest", "peel"] if narrow_spread else ["peel", "forest"]
    attempts = [
        b
        for b in order
        if (b == "forest" and narrow_spread) or (b == "peel" and few_light)
    ]
    reduced = None
    for branch in attempts:
        mark = len(trace.entries)
        try:
            if branch == "forest":
                reduced, rcond = case2_reduce(cur, trace, profile)
            else:
                reduced, rcond = case1_reduce(cur, trace, profile)
            report["branch"] = f"{branch}-reduction"
            break
        except PipelineFailure as exc:
            del trace.entries[mark:]
            failure = exc
    if reduced is None:
        raise failure
    report["reduced_condition"] = rcond
    report["reserved_colors"] = trace.reserved_color_count()
    core, prep = color_dense(reduced, rcond, profile, seed=seed)
    report["pipeline"] = prep
    return DriverResult(1, trace.recombine(g, core), trace, report)


def _finish_full(g, trace, profile, seed, report, base=None):
    """Color a full instance: peel to regular, color, put the peels back."""
    original = base if base is not None else g
    regular, matchings = regularize_via_full(g)
    for pm in matchings:
        trace.log_matching(pm, note="full-instance peel")
    report["branch"] = "full-regularize"
    report["peels"] = len(matchings)
    core, prep = color_dense(regular, "a", profile, seed=seed)
    report["pipeline"] = prep
    return trace.recombine(original, core)
