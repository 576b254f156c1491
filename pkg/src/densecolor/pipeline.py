"""Four-step construction of a proper Delta-edge-coloring for dense
even-order graphs in one of three recognized shapes:

  (a) regular;
  (b) all vertices at max degree except two of equal lower degree;
  (c) wide degree spread: many minimum-degree and many maximum-degree
      vertices (thresholds from the active ConstantsProfile).

The construction splits V into balanced halves A and B, colors the two
side graphs with k colors and aligns their per-color class sizes, then
repairs every color class into a perfect matching via alternating-path
exchanges through the cross bipartite graph H (displacing a few side
edges into residual multigraphs R_A/R_B), recolors the residuals with
fresh colors extended to near-perfect matchings by H-matchings, and
finishes the remaining cross edges with a bipartite coloring.  The final
palette is exactly Delta.
"""

from __future__ import annotations

import random

from .coloring import EdgeColoring, equalize, kempe_swap
from .classic import (
    greedy_multigraph_color,
    hopcroft_karp,
    konig_color,
    pm_with_degree_condition,
    vizing_color,
)
from .errors import HypothesisError, PipelineFailure
from .graph import Multigraph, SimpleGraph, eid
from .overfull import deficiency_view
from .profiles import ConstantsProfile


def classify_condition(g: SimpleGraph, profile: ConstantsProfile):
    """Which pipeline shape the graph satisfies: 'a', 'b', 'c', or None."""
    view = deficiency_view(g)
    if view.delta_max == view.delta_min:
        return "a"
    light = [v for v in g.vertices if g.degree(v) < view.delta_max]
    if len(light) == 2 and g.degree(light[0]) == g.degree(light[1]):
        return "b"
    n = g.num_vertices() // 2
    thr = profile.case_threshold(n)
    if (
        view.delta_max - view.delta_min >= thr
        and len(view.v_min) >= thr
        and len(view.v_max) >= n + 1
    ):
        return "c"
    return None


def constraint_pairs(g: SimpleGraph, condition: str):
    """The vertex pairs the balanced partition must split."""
    view = deficiency_view(g)
    if condition == "a":
        return []
    if condition == "b":
        light = [v for v in g.vertices if g.degree(v) < view.delta_max]
        return [tuple(sorted(light))]
    # condition (c): pair up non-max-degree vertices, lightest first
    pool = sorted(
        (v for v in g.vertices if g.degree(v) < view.delta_max),
        key=lambda v: (g.degree(v), v),
    )
    return [
        (pool[i], pool[i + 1]) for i in range(0, len(pool) - len(pool) % 2, 2)
    ]


class PipelineRun:
    """One attempt of the four-step construction for a fixed partition."""

    def __init__(self, g, condition, partition, profile, rng=None):
        self.g = g
        self.condition = condition
        self.part = partition
        self.profile = profile
        self.rng = rng if rng is not None else random.Random(0)
        self.n = g.num_vertices() // 2
        self.view = deficiency_view(g)
        self.report = {"condition": condition, "partition_certificate": partition.certificate}

        self.a_set = set(partition.a)
        self.b_set = set(partition.b)
        self.ga = None          # Multigraph on A (side edges + augmentation)
        self.gb = None
        self.h = None           # cross bipartite SimpleGraph
        self.col = None
        self.k = 0
        self.ell = 0
        self.aug = set()        # augmentation edge ids
        self.s_set = set()
        self.s_a = set()
        self.s_b = set()
        self.r_a = set()        # uncolored side edges, A side
        self.r_b = set()
        self.r_deg = {}         # vertex -> residual degree
        self.good_cap = profile.good_edge_cap(self.n)
        # set once the residuals are recolored: exchanges may no longer
        # displace side edges
        self.freeze_residuals = False

    # ---- shared helpers ------------------------------------------------

    def side_of(self, v):
        return "A" if v in self.a_set else "B"

    def d_star(self, v):
        side = self.ga if v in self.a_set else self.gb
        return side.degree(v) + self.h.degree(v)

    def delta_star(self):
        return max(self.d_star(v) for v in self.g.vertices)

    def side_eids(self, which):
        side = self.ga if which == "A" else self.gb
        return list(side.edges())

    def _uncolor_to_residual(self, e):
        self.col.unassign(e)
        u, v, _ = e
        if u in self.a_set:
            self.r_a.add(e)
        else:
            self.r_b.add(e)
        self.r_deg[u] = self.r_deg.get(u, 0) + 1
        self.r_deg[v] = self.r_deg.get(v, 0) + 1

    def _good_side_edge_at(self, v, color, side_set, s_side, banned):
        """The color-carrying side edge at v, if it is safe to uncolor."""
        e = self.col.edge_at(v, color)
        if e is None:
            return None
        u, w, _ = e
        if u not in side_set or w not in side_set:
            return None          # cross edge, not a side edge
        other = u if w == v else w
        if other in banned or u in s_side or w in s_side:
            return None
        if self.r_deg.get(u, 0) >= self.good_cap or self.r_deg.get(w, 0) >= self.good_cap:
            return None
        return e

    def _h_uncolored(self, u, v):
        return self.h.has_edge(u, v) and not self.col.is_colored(eid(u, v))

    # ---- step 1: side colorings and alignment --------------------------

    def step1(self):
        g, part = self.g, self.part
        sub_a = g.induced_subgraph(self.a_set)
        sub_b = g.induced_subgraph(self.b_set)
        self.h = g.bipartite_between(self.a_set, self.b_set)
        self.ga = Multigraph.from_simple(sub_a)
        self.gb = Multigraph.from_simple(sub_b)
        self.k = max(sub_a.max_degree(), sub_b.max_degree()) + 1
        self.col = EdgeColoring(g.n, self.k)
        for sub in (sub_a, sub_b):
            order = list(sub.edges())
            self.rng.shuffle(order)
            local = vizing_color(sub, order)
            for e, c in sorted(local.items()):
                self.col.assign(e, c)

        # deficiency-based augmentation set (usually empty at desk scale)
        s_thr = self.profile.s_threshold(self.n)
        self.s_set = {
            v for v in g.vertices if self.view.per_vertex[v] >= s_thr
        }
        self._augment_side(self.s_set & self.a_set, self.ga)
        self._augment_side(self.s_set & self.b_set, self.gb)
        self.report["augmentation_edges"] = len(self.aug)
        self.report["s_size"] = len(self.s_set)

        equalize(self.col, self.side_eids("A"))
        equalize(self.col, self.side_eids("B"))

        if self.condition == "c" and self.ga.edge_count() > self.gb.edge_count():
            self.a_set, self.b_set = self.b_set, self.a_set
            self.ga, self.gb = self.gb, self.ga
            self.part = self.part.swapped()
        self._align_side_classes()

        rel_thr = self.profile.side_relocation_threshold(self.n, self.k)
        self.s_a = {u for u in self.s_set & self.a_set if self.ga.degree(u) <= rel_thr}
        self.s_b = {u for u in self.s_set & self.b_set if self.gb.degree(u) <= rel_thr}

        # residual-degree cap for good edges: the residuals must later be
        # colorable within the headroom Delta* - k, so on small instances
        # the literal cap is tightened to half the spare headroom
        cap = self.profile.good_edge_cap(self.n)
        if not self.profile.strict:
            headroom = self.delta_star() - self.k
            cap = max(1, min(cap, (headroom - 1) // 2 if headroom > 2 else 1))
        self.good_cap = cap
        self.report["k"] = self.k
        self.report["good_cap"] = cap
        self.report["side_edges"] = [self.ga.edge_count(), self.gb.edge_count()]

    def _augment_side(self, side_s, side_mg):
        """Add parallel side edges between augmentation vertices sharing a
        missing color, while both stay strictly below the global max degree."""
        delta_g = self.view.delta_max
        guard = self.n * max(self.k, 1)
        while guard > 0:
            guard -= 1
            added = False
            members = sorted(side_s)
            for ui in range(len(members)):
                for vi in range(ui + 1, len(members)):
                    u, v = members[ui], members[vi]
                    if self.d_star(u) >= delta_g or self.d_star(v) >= delta_g:
                        continue
                    common = self.col.missing_common(u, v)
                    if not common:
                        continue
                    e = side_mg.add_edge(u, v)
                    self.aug.add(e)
                    self.col.assign(e, common[0])
                    added = True
                    break
                if added:
                    break
            if not added:
                return

    def _class_counts(self, eids):
        counts = {c: 0 for c in range(1, self.k + 1)}
        for e in eids:
            counts[self.col.color_of(e)] += 1
        return counts

    def _align_side_classes(self):
        """Rename side-A colors so per-color class sizes pair with side B's
        by descending rank: equality for shapes (a)/(b), domination
        (A count <= B count) for shape (c)."""
        eids_a = self.side_eids("A")
        cnt_a = self._class_counts(eids_a)
        cnt_b = self._class_counts(self.side_eids("B"))
        rank_a = sorted(cnt_a, key=lambda c: (-cnt_a[c], c))
        rank_b = sorted(cnt_b, key=lambda c: (-cnt_b[c], c))
        mapping = {}
        for ca, cb in zip(rank_a, rank_b):
            if self.condition in ("a", "b"):
                if cnt_a[ca] != cnt_b[cb]:
                    raise PipelineFailure(
                        "step1",
                        f"class sizes unalignable: {cnt_a[ca]} vs {cnt_b[cb]}",
                    )
            else:
                if cnt_a[ca] > cnt_b[cb]:
                    raise PipelineFailure(
                        "step1",
                        f"side A class {cnt_a[ca]} exceeds side B {cnt_b[cb]}",
                    )
            mapping[ca] = cb
        old = [(e, self.col.color_of(e)) for e in sorted(eids_a)]
        for e, _c in old:
            self.col.unassign(e)
        for e, c in old:
            self.col.assign(e, mapping[c])

    # ---- step 2: every class becomes a perfect matching ----------------

    def step2(self):
        pairs_done = 0
        for color in range(1, self.k + 1):
            miss_a = sorted(v for v in self.a_set if not self.col.has(v, color))
            miss_b = sorted(v for v in self.b_set if not self.col.has(v, color))
            self.rng.shuffle(miss_a)
            self.rng.shuffle(miss_b)
            pairs = list(zip(miss_a, miss_b))
            rest = miss_a[len(miss_b):] or miss_b[len(miss_a):]
            if len(rest) % 2 != 0:
                raise PipelineFailure(
                    "step2", f"color {color}: odd one-side leftover"
                )
            pairs += [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
            for (p, q) in pairs:
                p, q = self._relocate_if_needed(color, p, q)
                self._fix_pair(color, p, q)
                pairs_done += 1
            # every vertex must now carry this color
            for v in self.g.vertices:
                if not self.col.has(v, color):
                    raise PipelineFailure(
                        "step2", f"color {color} still missing at {v}"
                    )
        self.report["mcc_pairs"] = pairs_done
        self.report["residual_sizes"] = [len(self.r_a), len(self.r_b)]
        self.report["residual_max_degree"] = max(self.r_deg.values(), default=0)

    def _relocate_if_needed(self, color, p, q):
        """Pairs touching the low-side-degree augmentation vertices are
        re-anchored through a two-edge exchange before path surgery."""
        out = []
        for v in (p, q):
            if v in self.s_a or v in self.s_b:
                out.append(self._relocate_vertex(color, v, {p, q} - {v}))
            else:
                out.append(v)
        return out[0], out[1]

    def _relocate_vertex(self, color, v, banned):
        own_a = v in self.a_set
        opp_set = self.b_set if own_a else self.a_set
        opp_s = self.s_b if own_a else self.s_a
        for w in self.h.neighbors(v):
            if w in banned or self.col.is_colored(eid(v, w)):
                continue
            e = self._good_side_edge_at(w, color, opp_set, opp_s, banned | {v})
            if e is None:
                continue
            u1, u2, _ = e
            repl = u1 if u2 == w else u2
            self._uncolor_to_residual(e)
            self.col.assign(eid(v, w), color)
            return repl
        raise PipelineFailure(
            "step2", f"color {color}: relocation failed for vertex {v}"
        )

    def _fix_pair(self, color, p, q, stack=frozenset(), frontier=None):
        """Make `color` present at both p and q via an alternating path.

        The path alternates uncolored cross edges with color-carrying side
        edges; coloring the cross edges and uncoloring the side edges gives
        every path vertex exactly one edge of this color.  A breadth-first
        search finds the shortest such path (the direct cross edge and the
        5/7-edge zigzags are its shortest instances).
        """
        if frontier is None:
            frontier = color
        path = self._alternating_path(color, p, q)
        if path is None:
            if self._kempe_fallback(color, p, q, stack, frontier):
                return
            raise PipelineFailure(
                "step2",
                f"color {color}: no exchange path for pair ({p},{q})",
            )
        cross, side, cross_off = path
        for e in side:
            self._uncolor_to_residual(e)
        for e in cross_off:
            self.col.unassign(e)
        for e in cross:
            self.col.assign(e, color)

    def _kempe_fallback(self, color, p, q, stack, frontier):
        """Last resort for a stuck pair: swap a two-color chain.

        If for some color j the (color, j)-chain from p ends exactly at q,
        swapping it gives both p and q the current color; interior chain
        vertices keep both colors, so nobody else loses either one.  A j
        not yet processed by the outer loop (j >= frontier) needs nothing
        more (its class is rebuilt when its own turn comes); an
        already-completed j now misses p and q and is repaired
        recursively, the stack guarding against cycles.
        """
        later = [j for j in range(color + 1, self.col.k + 1) if j not in stack]
        earlier = [j for j in range(1, color) if j not in stack]
        for j in later + earlier:
            if self._chain_end(p, color, j) != q:
                continue
            kempe_swap(self.col, p, color, j)
            self.report["kempe_fallbacks"] = (
                self.report.get("kempe_fallbacks", 0) + 1
            )
            if j < frontier:
                self._fix_pair(j, p, q, stack | {color}, frontier)
            return True
        return False

    def _chain_end(self, start, i, j):
        """Endpoint of the (i, j)-alternating path starting at `start`.

        Returns None when `start` misses both colors (empty chain).
        """
        expect = j if self.col.has(start, j) else i
        e = self.col.edge_at(start, expect)
        if e is None:
            return None
        cur = start
        while e is not None:
            cur = e[0] if e[1] == cur else e[1]
            expect = i if expect == j else j
            e = self.col.edge_at(cur, expect)
        return cur

    def _alternating_path(self, color, p, q):
        """BFS for an exchange path from p to q for the given color.

        Returns (cross_to_color, side_to_uncolor, cross_to_uncolor) or
        None.  After traversing an uncolored cross edge the walk must
        leave through the (unique) color-carrying edge of the vertex it
        reached -- a side edge (displaced into the residual, subject to
        the good-edge cap) or an already-recolored cross edge (simply
        uncolored again).
        """
        parent = {p: None}
        frontier = [p]
        found = False
        while frontier and not found:
            nxt = []
            for u in sorted(frontier):
                for w in self.h.neighbors(u):
                    if w in parent or self.col.is_colored(eid(u, w)):
                        continue
                    if w == q:
                        parent[w] = (u, None)
                        found = True
                        break
                    e = self.col.edge_at(w, color)
                    if e is None:
                        continue
                    ea, eb, _ = e
                    x = ea if eb == w else eb
                    if x in parent or x == q:
                        continue
                    if ea in self.a_set and eb in self.a_set:
                        if self.freeze_residuals or self._good_side_edge_at(
                            w, color, self.a_set, self.s_a, parent
                        ) is None:
                            continue
                        kind = "side"
                    elif ea in self.b_set and eb in self.b_set:
                        if self.freeze_residuals or self._good_side_edge_at(
                            w, color, self.b_set, self.s_b, parent
                        ) is None:
                            continue
                        kind = "side"
                    else:
                        kind = "cross"
                    parent[w] = (u, None)
                    parent[x] = (w, (e, kind))
                    nxt.append(x)
                if found:
                    break
            frontier = nxt
        if not found:
            return None
        cross, side, cross_off = [], [], []
        v = q
        while parent[v] is not None:
            u, step = parent[v]
            if step is None:
                cross.append(eid(u, v))
            elif step[1] == "side":
                side.append(step[0])
            else:
                cross_off.append(step[0])
            v = u
        return cross, side, cross_off

    # ---- step 3: recolor residual side edges ---------------------------

    def step3(self):
        delta_star = self.delta_star()
        headroom = delta_star - self.k
        max_rdeg = max(self.r_deg.values(), default=0)
        self.ell = self.profile.ell(self.n, max_rdeg, headroom)
        if self.k + self.ell >= delta_star + 1:
            raise PipelineFailure(
                "step3",
                f"k+ell = {self.k}+{self.ell} exceeds max degree {delta_star}",
            )
        r_a = sorted(self.r_a)
        r_b = sorted(self.r_b)
        self.rng.shuffle(r_a)
        self.rng.shuffle(r_b)
        local = EdgeColoring(self.g.n, self.ell)
        for e in r_a + r_b:
            u, v, _ = e
            picked = None
            for c in range(1, self.ell + 1):
                if not local.has(u, c) and not local.has(v, c):
                    picked = c
                    break
            if picked is None:
                raise PipelineFailure(
                    "step3", f"residual edge {e} stuck with ell={self.ell}"
                )
            local.assign(e, picked)
        equalize(local, r_a)
        equalize(local, r_b)
        self._align_residual_classes(local, r_a, r_b)
        for e in r_a + r_b:
            self.col.expand_palette(self.k + self.ell)
            self.col.assign(e, self.k + local.color_of(e))
        self.col.expand_palette(self.k + self.ell)
        self.freeze_residuals = True
        self.report["ell"] = self.ell

        # extend each fresh color to a near-perfect matching via H
        vdel_a = sorted(
            v for v in self.a_set if self.g.degree(v) == self.view.delta_min
        )
        excl = {}
        df_star = {v: delta_star - self.d_star(v) for v in self.g.vertices}
        matched_total = 0
        for j in range(1, self.ell + 1):
            c = self.k + j
            a_c = {v for v in self.a_set if self.col.has(v, c)}
            b_c = {v for v in self.b_set if self.col.has(v, c)}
            need = len(b_c) - len(a_c)
            if need < 0:
                raise PipelineFailure(
                    "step3", f"color {c}: side A already ahead of side B"
                )
            a_star = []
            for u in vdel_a:
                if len(a_star) == need:
                    break
                if u in a_c:
                    continue
                if excl.get(u, 0) < df_star[u]:
                    a_star.append(u)
            if len(a_star) < need:
                raise PipelineFailure(
                    "step3",
                    f"color {c}: only {len(a_star)} exclusion slots for {need}",
                )
            for u in a_star:
                excl[u] = excl.get(u, 0) + 1
            a_rem = sorted(self.a_set - a_c - set(a_star))
            b_rem = sorted(self.b_set - b_c)
            hc = SimpleGraph(self.g.n, set(a_rem) | set(b_rem))
            b_rem_set = set(b_rem)
            for u in a_rem:
                for w in self.h.neighbors(u):
                    if w in b_rem_set and not self.col.is_colored(eid(u, w)):
                        hc.add_edge(u, w)
            try:
                pm = pm_with_degree_condition(hc, a_rem, b_rem, hc.min_degree())
            except PipelineFailure:
                pm = None
            if pm is None:
                matched_total += self._matching_with_rescue(c, hc, a_rem, b_rem)
            else:
                for (x, y) in pm:
                    self.col.assign(eid(x, y), c)
                matched_total += len(pm)
        self.report["step3_matched"] = matched_total
        self.report["step3_exclusions"] = sum(excl.values())

    def _matching_with_rescue(self, c, hc, a_rem, b_rem):
        """Cover the vertices a maximum matching leaves out for color c.

        The maximum matching is committed first; each leftover pair is
        then given the color through the step-2 exchange machinery
        (side-edge displacement is frozen at this point, so the repairs
        stay within cross edges and chain swaps).  Returns the number of
        vertices paired up.
        """
        adj = {
            x: [y for y in hc.neighbors(x) if y in set(b_rem)] for x in a_rem
        }
        match_l, _ = hopcroft_karp(a_rem, adj)
        for (x, y) in sorted(match_l.items()):
            self.col.assign(eid(x, y), c)
        left_a = sorted(v for v in a_rem if v not in match_l)
        left_b = sorted(set(b_rem) - set(match_l.values()))
        if len(left_a) != len(left_b):
            raise PipelineFailure(
                "step3", f"color {c}: uneven leftover {left_a} vs {left_b}"
            )
        for u in left_a:
            fixed = None
            last = None
            for w in left_b:
                try:
                    self._fix_pair(c, u, w, frontier=c)
                    fixed = w
                    break
                except PipelineFailure as exc:
                    last = exc
            if fixed is None:
                raise last or PipelineFailure(
                    "step3", f"color {c}: vertex {u} has no partner"
                )
            left_b.remove(fixed)
        self.report["step3_rescues"] = (
            self.report.get("step3_rescues", 0) + len(left_a)
        )
        return len(match_l) + len(left_a)

    def _align_residual_classes(self, local, r_a, r_b):
        cnt_a = {c: 0 for c in range(1, self.ell + 1)}
        cnt_b = {c: 0 for c in range(1, self.ell + 1)}
        for e in r_a:
            cnt_a[local.color_of(e)] += 1
        for e in r_b:
            cnt_b[local.color_of(e)] += 1
        rank_a = sorted(cnt_a, key=lambda c: (-cnt_a[c], c))
        rank_b = sorted(cnt_b, key=lambda c: (-cnt_b[c], c))
        mapping = {}
        for ca, cb in zip(rank_a, rank_b):
            if self.condition in ("a", "b"):
                if cnt_a[ca] != cnt_b[cb]:
                    raise PipelineFailure(
                        "step3",
                        f"residual classes unalignable: {cnt_a[ca]} vs {cnt_b[cb]}",
                    )
            elif cnt_a[ca] > cnt_b[cb]:
                raise PipelineFailure(
                    "step3",
                    f"residual side A class {cnt_a[ca]} exceeds B {cnt_b[cb]}",
                )
            mapping[ca] = cb
        old = [(e, local.color_of(e)) for e in r_a]
        for e, _c in old:
            local.unassign(e)
        for e, c in old:
            local.assign(e, mapping[c])

    # ---- step 4: bipartite finish --------------------------------------

    def step4(self):
        delta_star = self.delta_star()
        r_edges = [
            eid(u, v)
            for (u, v) in self.h.edges()
            if not self.col.is_colored(eid(u, v))
        ]
        deg = {}
        for (u, v, _c) in r_edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        delta_r = max(deg.values(), default=0)
        expected = delta_star - self.k - self.ell
        if delta_r != expected:
            raise PipelineFailure(
                "step4",
                f"uncolored cross degree {delta_r}, expected {expected}",
            )
        self.col.expand_palette(delta_star)
        if delta_r == 0:
            if r_edges:
                raise PipelineFailure("step4", "edges left but zero degree")
            return
        rmg = Multigraph(self.g.n)
        for e in r_edges:
            rmg.add_edge(e[0], e[1])
        local = konig_color(rmg, sides=(sorted(self.a_set), sorted(self.b_set)))
        for e, c in sorted(local.items()):
            self.col.assign(e, self.k + self.ell + c)
        self.report["step4_colors"] = delta_r

    # ---- assembly ------------------------------------------------------

    def run(self):
        self.step1()
        self.step2()
        self.step3()
        self.step4()
        result = EdgeColoring(self.g.n, self.view.delta_max)
        for e, c in sorted(self.col.items()):
            if e not in self.aug:
                result.assign(e, c)
        if result.colored_count() != self.g.edge_count():
            raise PipelineFailure(
                "assemble",
                f"colored {result.colored_count()} of {self.g.edge_count()} edges",
            )
        return result, self.report


def color_dense(g, condition, profile, seed=0):
    """Proper Delta-coloring of g via the four-step pipeline.

    Retries with derived partition seeds on failure; the last failure is
    re-raised if every attempt fails.  Returns (coloring, report).
    """
    from .partition import balanced_partition

    if condition is None:
        condition = classify_condition(g, profile)
    if condition not in ("a", "b", "c"):
        raise HypothesisError(f"graph fits no pipeline shape (got {condition!r})")
    pairs = constraint_pairs(g, condition)
    last = None
    for attempt in range(max(1, profile.pipeline_retries)):
        try:
            part = balanced_partition(g, pairs, profile, seed * 8191 + attempt)
            rng = random.Random((seed + 1) * 7919 + attempt)
            run = PipelineRun(g, condition, part, profile, rng=rng)
            coloring, report = run.run()
            report["attempt"] = attempt
            report["seed"] = seed
            return coloring, report
        except PipelineFailure as exc:
            last = exc
    raise last
