"""Partial edge colorings with incremental present/missing bookkeeping.

Colors are 1-based integers in [1, k].  A coloring is a partial map from
edge ids to colors; per-vertex state is the map color -> edge id, so
present/missing queries and swaps are cheap.
"""

from __future__ import annotations

from .graph import eid


class EdgeColoring:
    """Proper partial edge coloring over a vertex universe of size n."""

    __slots__ = ("n", "k", "_color", "_at")

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self._color = {}
        self._at = [dict() for _ in range(n)]

    # -- queries ---------------------------------------------------------

    def color_of(self, e):
        return self._color.get(e)

    def is_colored(self, e) -> bool:
        return e in self._color

    def has(self, v: int, c: int) -> bool:
        return c in self._at[v]

    def edge_at(self, v: int, c: int):
        return self._at[v].get(c)

    def present(self, v: int) -> list[int]:
        return sorted(self._at[v])

    def missing(self, v: int) -> list[int]:
        at = self._at[v]
        return [c for c in range(1, self.k + 1) if c not in at]

    def missing_count(self, v: int) -> int:
        return self.k - len(self._at[v])

    def missing_common(self, u: int, v: int) -> list[int]:
        au, av = self._at[u], self._at[v]
        return [c for c in range(1, self.k + 1) if c not in au and c not in av]

    def colored_count(self) -> int:
        return len(self._color)

    def items(self):
        return self._color.items()

    def class_sizes(self) -> dict[int, int]:
        sizes = {c: 0 for c in range(1, self.k + 1)}
        for c in self._color.values():
            sizes[c] += 1
        return sizes

    # -- mutation --------------------------------------------------------

    def assign(self, e, c: int) -> None:
        u, v, _ = e
        if not (1 <= c <= self.k):
            raise ValueError(f"color {c} outside palette [1,{self.k}]")
        if e in self._color:
            raise ValueError(f"edge {e} already colored")
        if c in self._at[u] or c in self._at[v]:
            raise ValueError(f"color {c} already present at an endpoint of {e}")
        self._color[e] = c
        self._at[u][c] = e
        self._at[v][c] = e

    def unassign(self, e) -> None:
        c = self._color.pop(e, None)
        if c is None:
            raise ValueError(f"edge {e} not colored")
        u, v, _ = e
        del self._at[u][c]
        del self._at[v][c]

    def expand_palette(self, new_k: int) -> None:
        if new_k < self.k:
            raise ValueError("palette can only grow")
        self.k = new_k

    def copy(self) -> "EdgeColoring":
        c = EdgeColoring(self.n, self.k)
        c._color = dict(self._color)
        c._at = [dict(d) for d in self._at]
        return c


def validate_proper(g, coloring: EdgeColoring):
    """Recount properness from scratch.

    Returns (True, None) or (False, (vertex, color)) for the first violation.
    Also checks that every colored edge exists in g.
    """
    seen = [dict() for _ in range(coloring.n)]
    for e, c in sorted(coloring.items()):
        u, v, copy = e
        if hasattr(g, "multiplicity"):
            if copy >= g.multiplicity(u, v):
                return False, (u, c)
        else:
            if copy != 0 or not g.has_edge(u, v):
                return False, (u, c)
        for w in (u, v):
            if c in seen[w]:
                return False, (w, c)
            seen[w][c] = e
    return True, None


def audit_missing_sets(coloring: EdgeColoring) -> bool:
    """Check the per-vertex color maps against the assignment map."""
    at = [dict() for _ in range(coloring.n)]
    for e, c in coloring.items():
        u, v, _ = e
        if c in at[u] or c in at[v]:
            return False
        at[u][c] = e
        at[v][c] = e
    return all(at[v] == coloring._at[v] for v in range(coloring.n))


def kempe_component(coloring: EdgeColoring, start: int, i: int, j: int):
    """Edges of the (i, j)-subgraph component containing `start`.

    The component is a path or cycle; returns its edge list.
    """
    edges = []
    visited = set()
    stack = [start]
    while stack:
        v = stack.pop()
        if v in visited:
            continue
        visited.add(v)
        for c in (i, j):
            e = coloring.edge_at(v, c)
            if e is not None:
                if e not in edges:
                    edges.append(e)
                u = e[0] if e[1] == v else e[1]
                if u not in visited:
                    stack.append(u)
    return edges


def kempe_swap(coloring: EdgeColoring, start: int, i: int, j: int) -> None:
    """Exchange colors i and j on the component containing `start`."""
    if i == j:
        return
    edges = kempe_component(coloring, start, i, j)
    if not edges:
        return
    old = [(e, coloring.color_of(e)) for e in edges]
    for e, _ in old:
        coloring.unassign(e)
    for e, c in old:
        coloring.assign(e, j if c == i else i)


def swap_edge_set(coloring: EdgeColoring, edges, i: int, j: int) -> None:
    old = [(e, coloring.color_of(e)) for e in edges]
    for e, _ in old:
        coloring.unassign(e)
    for e, c in old:
        coloring.assign(e, j if c == i else i)


def _ij_components(coloring: EdgeColoring, eids, i: int, j: int):
    """Components of the (i, j)-submultigraph restricted to `eids`."""
    adj = {}
    for e in eids:
        c = coloring.color_of(e)
        if c in (i, j):
            u, v, _ = e
            adj.setdefault(u, []).append((v, e, c))
            adj.setdefault(v, []).append((u, e, c))
    seen_v = set()
    comps = []
    for root in sorted(adj):
        if root in seen_v:
            continue
        comp_edges = []
        seen_e = set()
        stack = [root]
        seen_v.add(root)
        while stack:
            v = stack.pop()
            for (u, e, c) in adj[v]:
                if e not in seen_e:
                    seen_e.add(e)
                    comp_edges.append((e, c))
                if u not in seen_v:
                    seen_v.add(u)
                    stack.append(u)
        comps.append(comp_edges)
    return comps


def equalize(coloring: EdgeColoring, eids=None, max_rounds=None) -> None:
    """Rebalance color classes until sizes differ by at most one.

    Operates on the colored edges in `eids` (default: all colored edges),
    treating them as a standalone submultigraph.  Each round swaps one
    path component whose end edges both carry the larger class's color,
    shrinking the maximal class-size gap.
    """
    if eids is None:
        eids = list(coloring._color)
    else:
        eids = [e for e in eids if coloring.is_colored(e)]
    k = coloring.k
    if k <= 1 or not eids:
        return
    n_verts = len({v for e in eids for v in e[:2]})
    if max_rounds is None:
        max_rounds = k * k * max(n_verts, 1) + 10
    for _round in range(max_rounds):
        sizes = {c: 0 for c in range(1, k + 1)}
        for e in eids:
            sizes[coloring.color_of(e)] += 1
        small = min(range(1, k + 1), key=lambda c: (sizes[c], c))
        big = max(range(1, k + 1), key=lambda c: (sizes[c], -c))
        if sizes[big] - sizes[small] <= 1:
            return
        i, j = small, big
        target = None
        for comp in _ij_components(coloring, eids, i, j):
            cj = sum(1 for (_e, c) in comp if c == j)
            ci = len(comp) - cj
            if cj != ci + 1:
                continue
            # a path whose two end edges carry j; cycles and balanced
            # paths have cj == ci or cj == ci - 1
            key = min(min(e[0], e[1]) for (e, _c) in comp)
            if target is None or key < target[0]:
                target = (key, comp)
        if target is None:
            raise RuntimeError("equalize: no unbalanced path component found")
        swap_edge_set(coloring, [e for (e, _c) in target[1]], i, j)
    raise RuntimeError("equalize: round budget exhausted")


def parity_check(g, coloring: EdgeColoring) -> bool:
    """Missing-count congruence |missing(i)| == |V| (mod 2) per color class."""
    verts = g.vertices
    nv = len(verts)
    delta = g.max_degree()
    for c in range(1, min(delta, coloring.k) + 1):
        miss = sum(1 for v in verts if not coloring.has(v, c))
        if miss % 2 != nv % 2:
            return False
    return True


# -- coloring text format ------------------------------------------------
#
#   c <u> <v> <copy> <color>     one line per colored edge
#   k <palette_size>             trailer


def format_coloring(coloring: EdgeColoring) -> str:
    out = []
    for e, c in sorted(coloring.items()):
        u, v, copy = e
        out.append(f"c {u} {v} {copy} {c}")
    out.append(f"k {coloring.k}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, n: int) -> EdgeColoring:
    from .errors import GraphFormatError

    entries = []
    palette = None
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if parts[0] == "c" and len(parts) == 5:
            try:
                u, v, copy, c = (int(x) for x in parts[1:])
            except ValueError as exc:
                raise GraphFormatError(f"bad coloring line: {ln!r}") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex out of range in {ln!r}")
            entries.append((eid(u, v, copy), c))
        elif parts[0] == "k" and len(parts) == 2:
            palette = int(parts[1])
        else:
            raise GraphFormatError(f"bad coloring line: {ln!r}")
    if palette is None:
        raise GraphFormatError("missing 'k <palette>' trailer")
    col = EdgeColoring(n, palette)
    for e, c in entries:
        col.assign(e, c)
    return col
