"""Exact ground truth at tiny scale.

Chromatic index by backtracking over edge color assignments, and
overfull detection by scanning every odd vertex subset.  Both are meant
for graphs of at most a dozen or so vertices and enforce an explicit
budget before searching.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import OracleTimeout
from .graph import Multigraph, SimpleGraph


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 14
    max_seconds: float = 30.0


def _edge_list(g):
    if isinstance(g, SimpleGraph):
        return [(u, v) for (u, v) in g.edges()]
    return [(u, v) for (u, v, _copy) in g.edges()]


def _check_budget(g, budget):
    if g.num_vertices() > budget.max_vertices:
        raise OracleTimeout(
            f"{g.num_vertices()} vertices exceed oracle budget "
            f"{budget.max_vertices}"
        )


def _odd_set_excess(g, k: int) -> bool:
    """Whether some odd vertex set S has e(G[S]) > k * floor(|S|/2)."""
    verts = g.vertices
    idx = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    adj = [0] * nv
    for (u, v) in _edge_list(g):
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    for mask in range(1, 1 << nv):
        size = mask.bit_count()
        if size % 2 == 0 or size < 3:
            continue
        inner = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            inner += (adj[i] & mask).bit_count()
        if inner // 2 > k * (size // 2):
            return True
    return False


def colorable_with(g, k: int, deadline: float | None = None) -> bool:
    """Whether g admits a proper edge coloring with k colors.

    Backtracking with two symmetry breaks (the edges at one max-degree
    vertex are pre-colored 1..deg, and at most one never-used color is
    tried per branch) and most-constrained-edge-first selection.
    Per-vertex color usage is tracked as bitmasks.
    """
    edges = _edge_list(g)
    if not edges:
        return True
    if k <= 0:
        return False
    deg = {}
    for (u, v) in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if max(deg.values()) > k:
        return False
    # counting bound: a color class has at most floor(|S|/2) edges inside
    # any vertex set S, so an odd S with e(G[S]) > k*floor(|S|/2) makes
    # k colors infeasible outright
    if g.num_vertices() <= 16 and _odd_set_excess(g, k):
        return False
    full = (1 << k) - 1
    used = [0] * g.n
    # pre-color the edges at a max-degree vertex: any proper coloring can
    # be permuted so these take colors 1..deg in index order
    anchor = min(v for v in deg if deg[v] == max(deg.values()))
    rest = []
    nxt = 0
    for (u, v) in edges:
        if anchor in (u, v):
            bit = 1 << nxt
            nxt += 1
            used[u] |= bit
            used[v] |= bit
        else:
            rest.append((u, v))
    max_seed = nxt

    def pick(pending, max_new):
        best = None
        cap = (1 << min(k, max_new + 1)) - 1
        for i, (u, v) in enumerate(pending):
            avail = full & ~(used[u] | used[v]) & cap
            c = avail.bit_count()
            if best is None or c < best[0]:
                best = (c, i, avail)
                if c <= 1:
                    break
        return best

    def bt(pending, max_new):
        if not pending:
            return True
        if deadline is not None and time.monotonic() > deadline:
            raise OracleTimeout("chromatic-index search timed out")
        count, i, avail = pick(pending, max_new)
        if count == 0:
            return False
        u, v = pending[i]
        nxt_pending = pending[:i] + pending[i + 1 :]
        while avail:
            bit = avail & -avail
            avail -= bit
            used[u] |= bit
            used[v] |= bit
            if bt(nxt_pending, max(max_new, bit.bit_length())):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    return bt(rest, max_seed)


def exact_chromatic_index(g, budget: OracleBudget | None = None) -> int:
    """Exact chromatic index of a simple graph or multigraph.

    Simple graphs need at most one extra color beyond the max degree, so
    a single feasibility test decides the class.  Multigraphs climb from
    the max degree until a coloring exists (bounded by degree plus max
    multiplicity).
    """
    budget = budget or OracleBudget()
    _check_budget(g, budget)
    deadline = time.monotonic() + budget.max_seconds
    delta = g.max_degree()
    if delta == 0:
        return 0
    if colorable_with(g, delta, deadline):
        return delta
    if isinstance(g, SimpleGraph):
        return delta + 1
    ceiling = delta + max(g.max_multiplicity(), 1)
    for k in range(delta + 1, ceiling + 1):
        if colorable_with(g, k, deadline):
            return k
    raise RuntimeError("multigraph exceeded its coloring ceiling")


def exhaustive_overfull_scan(g, delta_ref: int, budget: OracleBudget | None = None):
    """All odd vertex subsets S with e(G[S]) > delta_ref * floor(|S|/2).

    Returns the witnesses as sorted vertex tuples.  Single vertices can
    never qualify (0 > 0 is false), so subsets of size >= 3 are scanned.
    """
    budget = budget or OracleBudget()
    _check_budget(g, budget)
    verts = g.vertices
    idx = {v: i for i, v in enumerate(verts)}
    nv = len(verts)
    simple = isinstance(g, SimpleGraph)
    if simple:
        adj = [0] * nv
        for (u, v) in g.edges():
            adj[idx[u]] |= 1 << idx[v]
            adj[idx[v]] |= 1 << idx[u]
    else:
        weighted = [(idx[u], idx[v], m) for (u, v, m) in g.pairs()]
    out = []
    for mask in range(1, 1 << nv):
        size = mask.bit_count()
        if size % 2 == 0 or size < 3:
            continue
        if simple:
            inner = 0
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                inner += (adj[i] & mask).bit_count()
            inner //= 2
        else:
            inner = sum(
                w for (i, j, w) in weighted if mask >> i & 1 and mask >> j & 1
            )
        if inner > delta_ref * (size // 2):
            out.append(tuple(verts[i] for i in range(nv) if mask >> i & 1))
    return out
