"""Instance generators.

Families target the shapes the coloring engine recognizes:

* regular       -- d-regular on 2n vertices;
* two-light     -- all vertices at the max degree except two equal lighter ones;
* wide-spread   -- many minimum-degree and many maximum-degree vertices with
                   a large degree gap;
* random-dense  -- binomial random graph with a min-degree repair pass;
* planted-overfull -- a known class-2 instance (one vertex deletion is an
                   overfull witness) built by complementing a star plus a
                   perfect matching.

Every generator self-checks the properties it promises and raises
ValueError on infeasible parameters.
"""

from __future__ import annotations

import math
import random

from .graph import SimpleGraph


def realize_degree_sequence(targets, rng=None) -> SimpleGraph:
    """Simple graph with the exact degree sequence targets[v] = deg(v).

    Construction: repeatedly satisfy the vertex of largest residual
    degree by connecting it to the next-largest residuals.  Followed by
    randomized degree-preserving double edge swaps when rng is given.
    """
    n = len(targets)
    if any(d < 0 or d > n - 1 for d in targets):
        raise ValueError("degree out of range for a simple graph")
    if sum(targets) % 2 != 0:
        raise ValueError("odd degree sum is not graphical")
    g = SimpleGraph(n)
    residual = list(targets)
    live = sorted(range(n), key=lambda v: (-residual[v], v))
    while live:
        live.sort(key=lambda v: (-residual[v], v))
        v = live.pop(0)
        need = residual[v]
        if need == 0:
            continue
        if need > len(live):
            raise ValueError("degree sequence is not graphical")
        for w in live[:need]:
            if residual[w] <= 0:
                raise ValueError("degree sequence is not graphical")
            g.add_edge(v, w)
            residual[w] -= 1
        residual[v] = 0
        live = [w for w in live if residual[w] > 0]
    if rng is not None:
        _shuffle_edges(g, rng)
    for v in range(n):
        if g.degree(v) != targets[v]:
            raise RuntimeError(f"degree mismatch at {v}")
    return g


def _shuffle_edges(g: SimpleGraph, rng, rounds_per_edge: int = 4) -> None:
    """Randomize g in place with degree-preserving double edge swaps."""
    edges = list(g.edges())
    m = len(edges)
    if m < 2:
        return
    for _ in range(rounds_per_edge * m):
        i, j = rng.randrange(m), rng.randrange(m)
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4:
            continue
        if g.has_edge(a, c) or g.has_edge(b, d):
            continue
        g.remove_edge(a, b)
        g.remove_edge(c, d)
        g.add_edge(a, c)
        g.add_edge(b, d)
        edges[i] = (min(a, c), max(a, c))
        edges[j] = (min(b, d), max(b, d))


def gen_regular(order: int, degree: int, seed: int = 0) -> SimpleGraph:
    """d-regular graph on `order` vertices."""
    if order % 2 != 0:
        raise ValueError(f"order {order} is odd")
    if (order * degree) % 2 != 0:
        raise ValueError(f"order {order} times degree {degree} is odd")
    if not (0 <= degree <= order - 1):
        raise ValueError(f"degree {degree} out of range")
    rng = random.Random(seed)
    g = realize_degree_sequence([degree] * order, rng)
    return g


def gen_two_light(order: int, degree: int, drop: int = 2, seed: int = 0) -> SimpleGraph:
    """All vertices at `degree` except two equal vertices `drop` lower."""
    if order % 2 != 0:
        raise ValueError(f"order {order} is odd")
    if drop < 1 or degree - drop < 1:
        raise ValueError(f"drop {drop} infeasible for degree {degree}")
    targets = [degree] * order
    rng = random.Random(seed)
    u, v = rng.sample(range(order), 2)
    targets[u] -= drop
    targets[v] -= drop
    if sum(targets) % 2 != 0:
        raise ValueError(
            f"degree {degree}, drop {drop}, order {order} has odd total"
        )
    g = realize_degree_sequence(targets, rng)
    light = sorted(w for w in range(order) if g.degree(w) < degree)
    if light != sorted((u, v)):
        raise RuntimeError("light vertex set mismatch")
    return g


def gen_wide_spread(
    order: int,
    seed: int = 0,
    delta_min: int | None = None,
    spread: int | None = None,
) -> SimpleGraph:
    """Graph with many minimum- and maximum-degree vertices far apart.

    Guarantees: max-degree count >= n+1, min-degree count >= ceil(n^{6/7}),
    degree gap >= ceil(n^{6/7}), min degree > n (defaults aim at 1.2n).
    """
    if order % 2 != 0:
        raise ValueError(f"order {order} is odd")
    n = order // 2
    thr = math.ceil(n ** (6.0 / 7.0))
    if delta_min is None:
        delta_min = max(math.ceil(1.2 * n), n + 1)
    if spread is None:
        spread = thr
    if spread < thr:
        raise ValueError(f"spread {spread} below threshold {thr}")
    delta_max = delta_min + spread
    if delta_max > order - 2:
        raise ValueError(
            f"max degree {delta_max} too large for order {order}"
        )
    hi, lo = n + 1, thr
    midc = order - hi - lo
    if midc < 1:
        raise ValueError(f"no room for middle degrees at order {order}")
    mid = delta_min + spread // 2
    targets = [delta_max] * hi + [mid] * midc + [delta_min] * lo
    if sum(targets) % 2 != 0:
        if mid + 1 < delta_max:
            targets[hi] = mid + 1
        else:
            targets[hi] = mid - 1
    rng = random.Random(seed)
    perm = list(range(order))
    rng.shuffle(perm)
    shuffled = [0] * order
    for i, v in enumerate(perm):
        shuffled[v] = targets[i]
    g = realize_degree_sequence(shuffled, rng)
    degs = [g.degree(v) for v in range(order)]
    if (
        max(degs) - min(degs) < thr
        or degs.count(min(degs)) < thr
        or degs.count(max(degs)) < n + 1
        or min(degs) <= n
    ):
        raise RuntimeError("wide-spread self-check failed")
    return g


def gen_random_dense(
    order: int,
    p: float = 0.75,
    min_degree: int | None = None,
    seed: int = 0,
) -> SimpleGraph:
    """Binomial random graph repaired to a minimum-degree floor."""
    if order % 2 != 0:
        raise ValueError(f"order {order} is odd")
    if not (0.0 < p <= 1.0):
        raise ValueError(f"edge probability {p} out of range")
    n = order // 2
    if min_degree is None:
        min_degree = max(n + 1, math.ceil(1.2 * n))
    if min_degree > order - 1:
        raise ValueError(f"min degree {min_degree} infeasible")
    rng = random.Random(seed)
    g = SimpleGraph(order)
    for u in range(order):
        for v in range(u + 1, order):
            if rng.random() < p:
                g.add_edge(u, v)
    while g.min_degree() < min_degree:
        u = min(range(order), key=lambda v: (g.degree(v), v))
        candidates = [
            w
            for w in range(order)
            if w != u and not g.has_edge(u, w)
        ]
        if not candidates:
            raise RuntimeError("cannot raise degree of a dominating vertex")
        w = min(candidates, key=lambda x: (g.degree(x), x))
        g.add_edge(u, w)
    return g


def gen_planted_overfull(order: int, deficiency: int = 2, seed: int = 0) -> SimpleGraph:
    """Class-2 instance: deleting one low vertex leaves an overfull graph.

    Built in the complement: one vertex joined to deficiency+1 others,
    a perfect matching on the rest.  The graph itself then has max degree
    order-2, a single vertex `deficiency` further down, and total
    deficiency small enough that the one-vertex deletion is overfull.
    """
    if order % 2 != 0:
        raise ValueError(f"order {order} is odd")
    n = order // 2
    t = deficiency
    if t < 2 or t % 2 != 0:
        raise ValueError(f"deficiency {t} must be even and at least 2")
    if t >= n - 2:
        raise ValueError(
            f"deficiency {t} too large for order {order} (needs t < n-2)"
        )
    rng = random.Random(seed)
    perm = list(range(order))
    rng.shuffle(perm)
    comp_adj = set()
    u = perm[0]
    for w in perm[1 : t + 2]:
        comp_adj.add((min(u, w), max(u, w)))
    rest = perm[t + 2 :]
    for i in range(0, len(rest), 2):
        a, b = rest[i], rest[i + 1]
        comp_adj.add((min(a, b), max(a, b)))
    g = SimpleGraph(order)
    for x in range(order):
        for y in range(x + 1, order):
            if (x, y) not in comp_adj:
                g.add_edge(x, y)
    if g.max_degree() != order - 2 or g.degree(u) != order - 2 - t:
        raise RuntimeError("planted-overfull self-check failed")
    return g


FAMILIES = {
    "regular": gen_regular,
    "two-light": gen_two_light,
    "wide-spread": gen_wide_spread,
    "random-dense": gen_random_dense,
    "planted-overfull": gen_planted_overfull,
}
