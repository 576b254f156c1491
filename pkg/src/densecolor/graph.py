"""Loop-free simple-graph and multigraph structures over a dense vertex universe.

Vertices are integers in [0, n).  Subgraph operations never renumber: a
subgraph keeps the full universe size and restricts the *active* vertex set,
so vertex ids stay stable across reductions.
"""

from __future__ import annotations

from .errors import GraphFormatError


def eid(u: int, v: int, copy: int = 0) -> tuple[int, int, int]:
    """Normalized edge id (u < v, parallel-copy index)."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    if u > v:
        u, v = v, u
    return (u, v, copy)


class SimpleGraph:
    """Undirected simple graph with an active-vertex mask."""

    __slots__ = ("n", "_active", "_adj", "_edge_count")

    def __init__(self, n: int, vertices=None):
        self.n = n
        if vertices is None:
            self._active = set(range(n))
        else:
            self._active = set(vertices)
            for v in self._active:
                if not (0 <= v < n):
                    raise ValueError(f"vertex {v} outside universe [0,{n})")
        self._adj = [set() for _ in range(n)]
        self._edge_count = 0

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> list[int]:
        return sorted(self._active)

    def is_active(self, v: int) -> bool:
        return v in self._active

    def num_vertices(self) -> int:
        return len(self._active)

    def edge_count(self) -> int:
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def neighbor_set(self, v: int) -> set:
        return self._adj[v]

    def degree(self, v: int) -> int:
        if v not in self._active:
            raise ValueError(f"vertex {v} not active")
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(self._adj[v]) for v in self._active), default=0)

    def min_degree(self) -> int:
        return min((len(self._adj[v]) for v in self._active), default=0)

    def edges(self):
        """Sorted (u, v) pairs with u < v."""
        for u in sorted(self._active):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    # -- mutation --------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if u not in self._active or v not in self._active:
            raise ValueError(f"edge ({u},{v}) touches inactive vertex")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge ({u},{v}) in simple graph")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self._adj[u]:
            raise ValueError(f"edge ({u},{v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1

    # -- derived graphs --------------------------------------------------

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph(self.n, self._active)
        for v in self._active:
            g._adj[v] = set(self._adj[v])
        g._edge_count = self._edge_count
        return g

    def induced_subgraph(self, s) -> "SimpleGraph":
        s = set(s)
        if not s <= self._active:
            raise ValueError("induced set contains inactive vertices")
        g = SimpleGraph(self.n, s)
        for u in s:
            g._adj[u] = self._adj[u] & s
        g._edge_count = sum(len(g._adj[u]) for u in s) // 2
        return g

    def without_vertices(self, s) -> "SimpleGraph":
        return self.induced_subgraph(self._active - set(s))

    def bipartite_between(self, a, b) -> "SimpleGraph":
        a, b = set(a), set(b)
        if a & b:
            raise ValueError("bipartition sides overlap")
        g = SimpleGraph(self.n, a | b)
        for u in a:
            g._adj[u] = self._adj[u] & b
        for v in b:
            g._adj[v] = self._adj[v] & a
        g._edge_count = sum(len(g._adj[u]) for u in a)
        return g


class Multigraph:
    """Loop-free multigraph; parallel edges stored as per-pair counters."""

    __slots__ = ("n", "_active", "_mult", "_deg", "_edge_count")

    def __init__(self, n: int, vertices=None):
        self.n = n
        self._active = set(range(n)) if vertices is None else set(vertices)
        self._mult = {}
        self._deg = [0] * n
        self._edge_count = 0

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "Multigraph":
        mg = cls(g.n, g._active)
        for (u, v) in g.edges():
            mg.add_edge(u, v)
        return mg

    @property
    def vertices(self) -> list[int]:
        return sorted(self._active)

    def num_vertices(self) -> int:
        return len(self._active)

    def edge_count(self) -> int:
        return self._edge_count

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._mult.get((u, v), 0)

    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def degree(self, v: int) -> int:
        if v not in self._active:
            raise ValueError(f"vertex {v} not active")
        return self._deg[v]

    def max_degree(self) -> int:
        return max((self._deg[v] for v in self._active), default=0)

    def min_degree(self) -> int:
        return min((self._deg[v] for v in self._active), default=0)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for (a, b), m in self._mult.items():
            if m <= 0:
                continue
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def add_edge(self, u: int, v: int) -> tuple[int, int, int]:
        """Add one parallel copy; returns its edge id."""
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        if u not in self._active or v not in self._active:
            raise ValueError(f"edge ({u},{v}) touches inactive vertex")
        copy = self._mult.get((u, v), 0)
        self._mult[(u, v)] = copy + 1
        self._deg[u] += 1
        self._deg[v] += 1
        self._edge_count += 1
        return (u, v, copy)

    def edges(self):
        """Sorted (u, v, copy) triples."""
        for (u, v) in sorted(self._mult):
            for copy in range(self._mult[(u, v)]):
                yield (u, v, copy)

    def pairs(self):
        for (u, v), m in sorted(self._mult.items()):
            if m > 0:
                yield (u, v, m)

    def copy(self) -> "Multigraph":
        mg = Multigraph(self.n, self._active)
        mg._mult = dict(self._mult)
        mg._deg = list(self._deg)
        mg._edge_count = self._edge_count
        return mg


# -- edge-list text format ----------------------------------------------
#
#   p <num_vertices> <num_edges>
#   e <u> <v>          (one line per edge copy, 0-indexed)


def parse_edge_list(text: str, simple: bool = True):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("p "):
        raise GraphFormatError("missing 'p <n> <m>' header line")
    parts = lines[0].split()
    if len(parts) != 3:
        raise GraphFormatError(f"bad header: {lines[0]!r}")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise GraphFormatError(f"bad header: {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    g = SimpleGraph(n) if simple else Multigraph(n)
    seen = 0
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in {ln!r}")
        if simple and g.has_edge(u, v):
            raise GraphFormatError(f"duplicate edge ({u},{v})")
        g.add_edge(u, v)
        seen += 1
    if seen != m:
        raise GraphFormatError(f"header says {m} edges, file has {seen}")
    return g


def format_edge_list(g) -> str:
    out = [f"p {g.n} {g.edge_count()}"]
    if isinstance(g, SimpleGraph):
        for (u, v) in g.edges():
            out.append(f"e {u} {v}")
    else:
        for (u, v, _copy) in g.edges():
            out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"
