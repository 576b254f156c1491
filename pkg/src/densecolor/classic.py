"""Classical subroutines: Vizing fans, greedy/Konig multigraph coloring,
degree-sequence realization, Dirac Hamiltonicity, and structured matchings.

Everything here is deterministic: candidate scans go in ascending vertex
order, so repeated runs on the same input produce identical output.
"""

from __future__ import annotations

import heapq

from .coloring import EdgeColoring, kempe_swap
from .errors import HypothesisError, PipelineFailure
from .graph import Multigraph, SimpleGraph, eid


# -- bipartite matching --------------------------------------------------


def hopcroft_karp(left, adj, initial=None):
    """Maximum matching in a bipartite graph given left->neighbors lists.

    `left` is the list of left-side nodes; `adj[x]` lists right-side
    neighbors.  `initial` seeds the matching with {x: y} pairs.  Returns
    (match_l, match_r) dicts.
    """
    INF = float("inf")
    match_l = {}
    match_r = {}
    if initial:
        for x, y in initial.items():
            match_l[x] = y
            match_r[y] = x
    dist = {}

    def bfs():
        queue = []
        for x in left:
            if x not in match_l:
                dist[x] = 0
                queue.append(x)
            else:
                dist[x] = INF
        found = False
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in adj[x]:
                z = match_r.get(y)
                if z is None:
                    found = True
                elif dist[z] == INF:
                    dist[z] = dist[x] + 1
                    queue.append(z)
        return found

    def dfs(x):
        for y in adj[x]:
            z = match_r.get(y)
            if z is None or (dist[z] == dist[x] + 1 and dfs(z)):
                match_l[x] = y
                match_r[y] = x
                return True
        dist[x] = INF
        return False

    while bfs():
        for x in left:
            if x not in match_l:
                dfs(x)
    return match_l, match_r


# -- Vizing fan-rotation coloring ----------------------------------------


def _free_color(coloring, v):
    for c in range(1, coloring.k + 1):
        if not coloring.has(v, c):
            return c
    raise RuntimeError(f"no free color at vertex {v}")


def vizing_color(g: SimpleGraph, order=None) -> EdgeColoring:
    """Proper edge coloring of a simple graph with at most Delta+1 colors.

    `order` optionally fixes the edge insertion order (default: sorted).
    """
    delta = g.max_degree()
    col = EdgeColoring(g.n, delta + 1 if delta else 0)
    for (u, v) in (order if order is not None else g.edges()):
        _vizing_insert(g, col, u, v)
    return col


def _vizing_insert(g, col, u, v):
    # build a maximal fan of u starting at v
    fan = [v]
    in_fan = {v}
    while True:
        tail = fan[-1]
        nxt = None
        for w in g.neighbors(u):
            if w in in_fan:
                continue
            e = eid(u, w)
            c = col.color_of(e)
            if c is not None and not col.has(tail, c):
                nxt = w
                break
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)

    c = _free_color(col, u)
    d = _free_color(col, fan[-1])
    if c != d:
        # invert the cd-path through u so that d becomes free at u
        kempe_swap(col, u, c, d)
    # largest fan prefix that is still a fan and ends at a vertex missing d
    w_idx = None
    for idx in range(len(fan) - 1, -1, -1):
        if col.has(fan[idx], d):
            continue
        ok = True
        for j in range(idx):
            cj = col.color_of(eid(u, fan[j + 1]))
            if cj is None or col.has(fan[j], cj):
                ok = False
                break
        if ok:
            w_idx = idx
            break
    if w_idx is None:
        raise RuntimeError("fan rotation found no valid prefix")
    # rotate: shift each fan edge's color one step toward the start
    prefix = fan[: w_idx + 1]
    old = [col.color_of(eid(u, w)) for w in prefix]
    for w, c_old in zip(prefix, old):
        if c_old is not None:
            col.unassign(eid(u, w))
    for j in range(w_idx):
        col.assign(eid(u, prefix[j]), old[j + 1])
    col.assign(eid(u, prefix[w_idx]), d)


# -- greedy multigraph coloring ------------------------------------------


def greedy_multigraph_color(g: Multigraph, k: int) -> EdgeColoring:
    """Color every edge with the smallest color free at both ends.

    Always succeeds when k >= 2*Delta(g) - 1; otherwise a stuck edge
    raises PipelineFailure.
    """
    col = EdgeColoring(g.n, k)
    for e in g.edges():
        u, v, _ = e
        picked = None
        for c in range(1, k + 1):
            if not col.has(u, c) and not col.has(v, c):
                picked = c
                break
        if picked is None:
            raise PipelineFailure(
                "greedy_multigraph_color", f"no free color for edge {e} with k={k}"
            )
        col.assign(e, picked)
    return col


# -- Konig coloring of bipartite multigraphs -----------------------------


def bipartition_of(g) -> tuple[list[int], list[int]]:
    """2-color the vertices of g; raises HypothesisError on an odd cycle."""
    side = {}
    pairs = list(g.pairs()) if isinstance(g, Multigraph) else [
        (u, v, 1) for (u, v) in g.edges()
    ]
    adj = {}
    for (u, v, _m) in pairs:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for root in sorted(adj):
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    raise HypothesisError("graph is not bipartite")
    a = sorted(v for v in g.vertices if side.get(v, 0) == 0)
    b = sorted(v for v in g.vertices if side.get(v) == 1)
    return a, b


def konig_color(g: Multigraph, sides=None) -> EdgeColoring:
    """Proper coloring of a bipartite multigraph with exactly Delta colors.

    Pads the graph to a Delta-regular bipartite multigraph (dummy vertices
    and parallel copies), then extracts one perfect matching per color.
    """
    delta = g.max_degree()
    col = EdgeColoring(g.n, delta)
    if delta == 0:
        return col
    if sides is None:
        xs, ys = bipartition_of(g)
    else:
        xs, ys = sorted(sides[0]), sorted(sides[1])
        have = set(xs) | set(ys)
        for (u, v, _m) in g.pairs():
            if u not in have or v not in have:
                raise HypothesisError("supplied sides do not cover all edges")
            if (u in set(xs)) == (v in set(xs)):
                raise HypothesisError("edge inside one side: not bipartite")
        extra = [v for v in g.vertices if v not in have]
        xs = sorted(xs + extra)

    xs, ys = list(xs), list(ys)
    # pad side sizes with dummy vertices (ids beyond the real universe)
    nxt = g.n
    while len(xs) < len(ys):
        xs.append(nxt)
        nxt += 1
    while len(ys) < len(xs):
        ys.append(nxt)
        nxt += 1

    residual = {}
    deg = {v: 0 for v in xs + ys}
    real = {}
    for (u, v, m) in g.pairs():
        x, y = (u, v) if u in set(xs) else (v, u)
        residual[(x, y)] = m
        real[(x, y)] = m
        deg[x] += m
        deg[y] += m
    # pad degrees up to delta with parallel dummy copies
    xi = yi = 0
    while True:
        while xi < len(xs) and deg[xs[xi]] >= delta:
            xi += 1
        while yi < len(ys) and deg[ys[yi]] >= delta:
            yi += 1
        if xi >= len(xs) or yi >= len(ys):
            break
        x, y = xs[xi], ys[yi]
        add = min(delta - deg[x], delta - deg[y])
        residual[(x, y)] = residual.get((x, y), 0) + add
        deg[x] += add
        deg[y] += add

    used = {}
    for color in range(1, delta + 1):
        adj = {x: [] for x in xs}
        for (x, y), m in sorted(residual.items()):
            if m > 0:
                adj[x].append(y)
        match_l, _ = hopcroft_karp(xs, adj)
        if len(match_l) != len(xs):
            raise RuntimeError("regular bipartite multigraph lost its 1-factor")
        for x in xs:
            y = match_l[x]
            residual[(x, y)] -= 1
            used_here = used.get((x, y), 0)
            if used_here < real.get((x, y), 0):
                used[(x, y)] = used_here + 1
                col.assign(eid(x, y, used_here), color)
    return col


# -- degree-sequence realization -----------------------------------------


def hakimi_feasible(degrees) -> bool:
    s = sum(degrees)
    return bool(degrees) and s % 2 == 0 and s - max(degrees) >= max(degrees)


def hakimi_realize(degrees):
    """Loop-free multigraph with exactly the given per-vertex degrees.

    Returns None when infeasible (odd total, or one vertex wants more
    than the rest can supply).  Construction: repeatedly join the two
    largest residual degrees by one edge.
    """
    if not degrees or all(d == 0 for d in degrees):
        mg = Multigraph(len(degrees))
        return mg
    if any(d < 0 for d in degrees):
        return None
    if not hakimi_feasible(degrees):
        return None
    mg = Multigraph(len(degrees))
    res = list(degrees)
    heap = [(-d, i) for i, d in enumerate(res) if d > 0]
    heapq.heapify(heap)
    while heap:
        d1, i = heapq.heappop(heap)
        if -d1 != res[i]:
            continue
        if res[i] == 0:
            continue
        # second-largest live entry
        j = None
        stash = []
        while heap:
            d2, cand = heapq.heappop(heap)
            if -d2 == res[cand] and res[cand] > 0:
                j = cand
                break
            stash.append((d2, cand))
        for item in stash:
            heapq.heappush(heap, item)
        if j is None:
            raise RuntimeError("degree realization ran out of partners")
        mg.add_edge(i, j)
        res[i] -= 1
        res[j] -= 1
        if res[i] > 0:
            heapq.heappush(heap, (-res[i], i))
        if res[j] > 0:
            heapq.heappush(heap, (-res[j], j))
    return mg


# -- Dirac Hamiltonicity -------------------------------------------------


def _close_to_cycle(g: SimpleGraph, path):
    """Turn a non-extendable path into a cycle on the same vertex set."""
    if g.has_edge(path[0], path[-1]):
        return path
    start, end = path[0], path[-1]
    n_end = g.neighbor_set(end)
    n_start = g.neighbor_set(start)
    for i in range(len(path) - 1):
        if path[i] in n_end and path[i + 1] in n_start:
            return path[: i + 1] + path[i + 1 :][::-1]
    raise RuntimeError("could not close path into a cycle")


def dirac_hamiltonian_cycle(g: SimpleGraph):
    """Hamiltonian cycle (vertex list) when min degree >= |V|/2."""
    verts = g.vertices
    m = len(verts)
    if m < 3:
        raise HypothesisError(f"need at least 3 vertices, have {m}")
    if 2 * g.min_degree() < m:
        raise HypothesisError(
            f"min degree {g.min_degree()} below half of {m} vertices"
        )
    path = [verts[0]]
    in_path = {verts[0]}
    while True:
        # extend greedily at both ends
        changed = True
        while changed:
            changed = False
            for w in g.neighbors(path[-1]):
                if w not in in_path:
                    path.append(w)
                    in_path.add(w)
                    changed = True
                    break
            if not changed:
                for w in g.neighbors(path[0]):
                    if w not in in_path:
                        path.insert(0, w)
                        in_path.add(w)
                        changed = True
                        break
        cycle = _close_to_cycle(g, path)
        if len(cycle) == m:
            return cycle
        # absorb an outside vertex through one of its cycle neighbors
        absorbed = False
        for w in verts:
            if w in in_path:
                continue
            for j, cv in enumerate(cycle):
                if g.has_edge(w, cv):
                    path = [w] + cycle[j:] + cycle[:j]
                    in_path.add(w)
                    absorbed = True
                    break
            if absorbed:
                break
        if not absorbed:
            raise RuntimeError("no outside vertex touches the cycle")


def _brute_ham_path(g: SimpleGraph, a, b):
    m = g.num_vertices()

    def dfs(path, seen):
        v = path[-1]
        if len(path) == m:
            return path if v == b else None
        for w in g.neighbors(v):
            if w not in seen and (w != b or len(path) == m - 1):
                seen.add(w)
                path.append(w)
                got = dfs(path, seen)
                if got:
                    return got
                path.pop()
                seen.remove(w)
        return None

    return dfs([a], {a})


def hamiltonian_path_between(g: SimpleGraph, a: int, b: int):
    """Spanning a-b path when min degree >= (|V|+1)/2.

    Built from a Hamiltonian cycle: keep the longer a-b arc, then absorb
    the remaining segment by splicing it between two of its neighbors on
    the kept path (or inserting one endpoint at a time).
    """
    if a == b:
        raise ValueError("endpoints must be distinct")
    verts = g.vertices
    if a not in verts or b not in verts:
        raise ValueError("endpoint not in graph")
    m = len(verts)
    if m <= 8:
        got = _brute_ham_path(g, a, b)
        if got:
            return got
        raise PipelineFailure(
            "hamiltonian_path_between", f"no spanning path {a}-{b} on {m} vertices"
        )
    # min degree >= (m+1)/2 guarantees success; anything meeting the
    # cycle bound m/2 is still worth attempting (absorption just may fail)
    if 2 * g.min_degree() < m:
        raise HypothesisError(
            f"min degree {g.min_degree()} below {m}/2"
        )
    cyc = dirac_hamiltonian_cycle(g)
    ia = cyc.index(a)
    cyc = cyc[ia:] + cyc[:ia]
    ib = cyc.index(b)
    fwd = cyc[: ib + 1]
    bwd = [a] + list(reversed(cyc[ib:]))
    if len(fwd) >= len(bwd):
        q1 = fwd
        q2 = cyc[ib + 1 :]
    else:
        q1 = bwd
        q2 = cyc[1:ib]
    while q2:
        p = len(q2)
        spliced = False
        for i in range(len(q1) - 1):
            hi = min(len(q1), i + p + 1)
            for j in range(i + 1, hi):
                seg = None
                if g.has_edge(q1[i], q2[0]) and g.has_edge(q1[j], q2[-1]):
                    seg = q2
                elif g.has_edge(q1[i], q2[-1]) and g.has_edge(q1[j], q2[0]):
                    seg = q2[::-1]
                if seg is not None:
                    dropped = q1[i + 1 : j]
                    q1 = q1[: i + 1] + seg + q1[j:]
                    q2 = dropped
                    spliced = True
                    break
            if spliced:
                break
        if spliced:
            continue
        inserted = False
        for v in dict.fromkeys([q2[0], q2[-1]]):
            for i in range(len(q1) - 1):
                if g.has_edge(q1[i], v) and g.has_edge(q1[i + 1], v):
                    q1 = q1[: i + 1] + [v] + q1[i + 1 :]
                    q2 = q2[1:] if v == q2[0] else q2[:-1]
                    inserted = True
                    break
            if inserted:
                break
        if not inserted:
            raise PipelineFailure(
                "hamiltonian_path_between",
                f"segment of {p} vertices could not be absorbed",
            )
    return q1


# -- disjoint path systems -----------------------------------------------


def path_system(g: SimpleGraph, pairs):
    """Vertex-disjoint paths spanning V(g), path i joining pairs[i].

    The first t-1 pairs become 3-vertex paths through fresh common
    neighbors; the last pair gets a Hamiltonian path of everything left.
    """
    if not pairs:
        raise ValueError("need at least one endpoint pair")
    flat = [v for pr in pairs for v in pr]
    if len(set(flat)) != len(flat):
        raise ValueError("endpoint pairs are not disjoint")
    reserved = set(flat)
    used = set()
    paths = []
    for (ai, bi) in pairs[:-1]:
        mid = None
        for c in sorted(g.neighbor_set(ai) & g.neighbor_set(bi)):
            if c not in reserved and c not in used:
                mid = c
                break
        if mid is None:
            raise PipelineFailure(
                "path_system", f"no fresh common neighbor for pair ({ai},{bi})"
            )
        used.add(mid)
        used.update((ai, bi))
        paths.append([ai, mid, bi])
    at, bt = pairs[-1]
    remainder = [v for v in g.vertices if v not in used]
    sub = g.induced_subgraph(remainder)
    paths.append(hamiltonian_path_between(sub, at, bt))
    return paths


# -- perfect matching under a degree condition ---------------------------


def pm_with_degree_condition(h: SimpleGraph, xs, ys, t: int):
    """Perfect matching of a bipartite graph with few low-degree vertices.

    Phase 1 greedily saturates every vertex of degree below (n'+t/2)/2;
    phase 2 finishes with augmenting paths.  Returns sorted (x, y) pairs;
    raises PipelineFailure if no perfect matching exists.
    """
    xs, ys = sorted(xs), sorted(ys)
    if len(xs) != len(ys):
        raise HypothesisError(f"side sizes differ: {len(xs)} vs {len(ys)}")
    if not xs:
        return []
    np = len(xs)
    thr = (np + t / 2) / 2
    xset, yset = set(xs), set(ys)
    low = [v for v in xs + ys if h.degree(v) < thr]
    match_l = {}
    match_r = {}
    for v in low:
        if (v in match_l) or (v in match_r):
            continue
        side_x = v in xset
        for w in h.neighbors(v):
            free = w not in (match_r if side_x else match_l)
            if free:
                x, y = (v, w) if side_x else (w, v)
                if x in match_l or y in match_r:
                    continue
                match_l[x] = y
                match_r[y] = x
                break
    adj = {x: [y for y in h.neighbors(x) if y in yset] for x in xs}
    match_l, _ = hopcroft_karp(xs, adj, initial=match_l)
    if len(match_l) != np:
        raise PipelineFailure(
            "pm_with_degree_condition",
            f"maximum matching saturates {len(match_l)} of {np}",
        )
    return sorted(match_l.items())
