"""Multidigraph core: construction, structural predicates, subdivision, text I/O.

Vertices are dense 0-based integers.  Arcs are ordered pairs; parallel arcs
are allowed (each occurrence is a separate instance, identified by its
position in the arc list) but loops never are.  A digraph is *simple* when
every arc has multiplicity one.

The planarity test is exact but exponential in the worst case: after an
Euler-bound shortcut and a degree-2 reduction it searches exhaustively for a
K5 or K3,3 subdivision.  It is meant for the instance sizes the rest of the
package produces (a few dozen vertices), not for bulk graph processing.
"""

from __future__ import annotations

from collections import Counter, deque
from functools import cached_property
from itertools import combinations


class MultiDigraph:
    """A directed multigraph on vertices 0..vertex_count-1, without loops."""

    __slots__ = ("vertex_count", "arcs", "__dict__")

    def __init__(self, vertex_count: int, arcs):
        self.vertex_count = vertex_count
        self.arcs = tuple((int(u), int(v)) for (u, v) in arcs)

    def __eq__(self, other):
        if not isinstance(other, MultiDigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertex_count, self.arcs))

    def __repr__(self):
        return f"MultiDigraph(n={self.vertex_count}, m={len(self.arcs)})"

    @cached_property
    def multiplicity(self) -> Counter:
        """Counter mapping each ordered pair to its number of instances."""
        return Counter(self.arcs)

    @cached_property
    def _out_adj(self) -> dict:
        adj = {v: [] for v in range(self.vertex_count)}
        for (u, v) in self.arcs:
            adj[u].append(v)
        return {u: tuple(sorted(set(heads))) for u, heads in adj.items()}

    @cached_property
    def _in_adj(self) -> dict:
        adj = {v: [] for v in range(self.vertex_count)}
        for (u, v) in self.arcs:
            adj[v].append(u)
        return {v: tuple(sorted(set(tails))) for v, tails in adj.items()}

    @cached_property
    def _out_degree(self) -> dict:
        deg = {v: 0 for v in range(self.vertex_count)}
        for (u, _) in self.arcs:
            deg[u] += 1
        return deg

    @cached_property
    def _in_degree(self) -> dict:
        deg = {v: 0 for v in range(self.vertex_count)}
        for (_, v) in self.arcs:
            deg[v] += 1
        return deg

    def successors(self, v: int) -> tuple:
        """Distinct heads of arcs leaving v, ascending."""
        return self._out_adj[v]

    def predecessors(self, v: int) -> tuple:
        """Distinct tails of arcs entering v, ascending."""
        return self._in_adj[v]

    def out_degree(self, v: int) -> int:
        """Number of arc instances leaving v."""
        return self._out_degree[v]

    def in_degree(self, v: int) -> int:
        """Number of arc instances entering v."""
        return self._in_degree[v]

    def has_arc(self, u: int, v: int) -> bool:
        return self.multiplicity[(u, v)] > 0

    def is_simple(self) -> bool:
        """True when no ordered pair occurs more than once."""
        return all(c <= 1 for c in self.multiplicity.values())


class Graph:
    """An undirected simple graph; edges stored as sorted pairs."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges):
        self.vertex_count = vertex_count
        self.edges = frozenset(
            (min(int(u), int(v)), max(int(u), int(v))) for (u, v) in edges
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={len(self.edges)})"

    def neighbors(self, v: int) -> tuple:
        return tuple(sorted(b if a == v else a for (a, b) in self.edges if v in (a, b)))

    def degree(self, v: int) -> int:
        return sum(1 for (a, b) in self.edges if v in (a, b))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == n


def build_digraph(vertex_count: int, arcs) -> MultiDigraph:
    """Validate and build a MultiDigraph.

    Raises ValueError for a negative vertex count, an out-of-range endpoint,
    or a loop arc.  Parallel arcs are kept, in the given order.
    """
    if vertex_count < 0:
        raise ValueError(f"vertex count must be nonnegative, got {vertex_count}")
    checked = []
    for arc in arcs:
        u, v = int(arc[0]), int(arc[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(
                f"arc ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}"
            )
        if u == v:
            raise ValueError(f"loop arc ({u}, {v}) is not allowed")
        checked.append((u, v))
    return MultiDigraph(vertex_count, checked)


def build_graph(vertex_count: int, edges) -> Graph:
    """Validate and build an undirected simple Graph (no loops, deduplicated)."""
    if vertex_count < 0:
        raise ValueError(f"vertex count must be nonnegative, got {vertex_count}")
    checked = []
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(
                f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}"
            )
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) is not allowed")
        checked.append((u, v))
    return Graph(vertex_count, checked)


def validate_terminals(d: MultiDigraph, members) -> frozenset:
    """Validate a terminal set: at least two distinct vertices of d.

    Returns the set as a frozenset of ints.  Raises ValueError otherwise.
    """
    terminals = frozenset(int(v) for v in members)
    if len(terminals) < 2:
        raise ValueError("a terminal set needs at least two vertices")
    for v in terminals:
        if not (0 <= v < d.vertex_count):
            raise ValueError(f"terminal {v} outside 0..{d.vertex_count - 1}")
    return terminals


def underlying_graph(d: MultiDigraph) -> Graph:
    """The undirected simple graph obtained by forgetting arc directions."""
    return Graph(d.vertex_count, set((min(u, v), max(u, v)) for (u, v) in d.arcs))


def min_semi_degree(d: MultiDigraph) -> int:
    """min over all vertices of min(out-degree, in-degree), with multiplicity."""
    if d.vertex_count == 0:
        return 0
    return min(min(d.out_degree(v), d.in_degree(v)) for v in range(d.vertex_count))


def is_eulerian(d: MultiDigraph) -> bool:
    """True iff the underlying graph is connected and every vertex is balanced.

    Balanced means in-degree equals out-degree counting multiplicities.
    Isolated vertices count against connectivity.
    """
    for v in range(d.vertex_count):
        if d.out_degree(v) != d.in_degree(v):
            return False
    return underlying_graph(d).is_connected()


def is_symmetric(d: MultiDigraph) -> bool:
    """True iff every arc (u, v) has the reverse arc (v, u) present."""
    mult = d.multiplicity
    return all(mult[(v, u)] > 0 for (u, v) in mult if mult[(u, v)] > 0)


def subdivide_arc(d: MultiDigraph, arc) -> MultiDigraph:
    """Replace one instance of `arc` = (u, v) by u -> x -> v with a new vertex x.

    The first instance of the pair (in arc-list order) is removed; x gets id
    d.vertex_count and the two new arcs are appended at the end.  Raises
    ValueError when the pair is absent.  The operation preserves Eulerian-ness
    and planarity; a symmetric digraph generally stops being symmetric.
    """
    u, v = int(arc[0]), int(arc[1])
    try:
        pos = d.arcs.index((u, v))
    except ValueError:
        raise ValueError(f"arc ({u}, {v}) is not present") from None
    x = d.vertex_count
    arcs = list(d.arcs)
    del arcs[pos]
    arcs.append((u, x))
    arcs.append((x, v))
    return MultiDigraph(d.vertex_count + 1, arcs)


# ---------------------------------------------------------------------------
# Planarity: Euler bound, degree-2 reduction, exhaustive Kuratowski search.
# ---------------------------------------------------------------------------


def _reduce_for_planarity(adj: dict) -> dict:
    """Trim degree <=1 vertices and suppress degree-2 vertices.

    Suppression of a degree-2 vertex merges its two incident edges; it is
    skipped when it would create a parallel edge, which keeps the reduction
    conservative (subdivision-preserving in both directions).
    """
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            ns = adj.get(v)
            if ns is None:
                continue
            if len(ns) <= 1:
                for w in ns:
                    adj[w].discard(v)
                del adj[v]
                changed = True
            elif len(ns) == 2:
                a, b = sorted(ns)
                if b not in adj[a]:
                    adj[a].discard(v)
                    adj[b].discard(v)
                    adj[a].add(b)
                    adj[b].add(a)
                    del adj[v]
                    changed = True
    return adj


def _paths_embedding(adj: dict, pairs, branch: set) -> bool:
    """Try to route internally disjoint paths for every pair in `pairs`.

    Internal vertices must avoid `branch` and be globally unused.  Exhaustive
    backtracking; returns True when a full routing exists.
    """
    used = set()

    def route(idx: int) -> bool:
        if idx == len(pairs):
            return True
        a, b = pairs[idx]

        def dfs(v: int, local: list) -> bool:
            for w in sorted(adj[v]):
                if w == b:
                    for x in local:
                        used.add(x)
                    if route(idx + 1):
                        return True
                    for x in local:
                        used.discard(x)
                elif w not in branch and w not in used and w not in local and w in adj:
                    local.append(w)
                    if dfs(w, local):
                        return True
                    local.pop()
            return False

        return dfs(a, [])

    return route(0)


def _has_k5_subdivision(adj: dict) -> bool:
    candidates = sorted(v for v, ns in adj.items() if len(ns) >= 4)
    for branch in combinations(candidates, 5):
        pairs = list(combinations(branch, 2))
        if _paths_embedding(adj, pairs, set(branch)):
            return True
    return False


def _has_k33_subdivision(adj: dict) -> bool:
    candidates = sorted(v for v, ns in adj.items() if len(ns) >= 3)
    for six in combinations(candidates, 6):
        rest = six[1:]
        for two in combinations(rest, 2):
            side_a = (six[0],) + two
            side_b = tuple(v for v in rest if v not in two)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _paths_embedding(adj, pairs, set(six)):
                return True
    return False


def graph_is_planar(g: Graph) -> bool:
    """Exact planarity for a small undirected graph.

    Applies the Euler bound (m > 3n - 6 forces nonplanarity for n >= 3),
    reduces chains, then searches exhaustively for a K5 or K3,3 subdivision.
    Planar iff neither subdivision exists (Kuratowski).
    """
    n, m = g.vertex_count, len(g.edges)
    if n >= 3 and m > 3 * n - 6:
        return False
    if m <= 8:
        # K3,3 has 9 edges and K5 has 10, and subdivisions only add more.
        return True
    adj = {v: set() for v in range(n)}
    for (u, v) in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    adj = _reduce_for_planarity(adj)
    if sum(len(ns) for ns in adj.values()) // 2 <= 8:
        return True
    if _has_k5_subdivision(adj):
        return False
    if _has_k33_subdivision(adj):
        return False
    return True


def is_planar(d: MultiDigraph) -> bool:
    """True iff the underlying simple graph of d is planar."""
    return graph_is_planar(underlying_graph(d))


# ---------------------------------------------------------------------------
# Text format: `n <vertex_count>` then one `a <tail> <head>` line per arc
# instance; lines starting with `#` are comments.  File order is instance
# identity, so parse/serialize round-trips bit for bit.
# ---------------------------------------------------------------------------


def parse_digraph(text: str) -> MultiDigraph:
    """Parse the digraph text format.  Raises ValueError on malformed input."""
    vertex_count = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if vertex_count is not None:
                raise ValueError(f"line {lineno}: duplicate n line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'n <vertex_count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
        elif parts[0] == "a":
            if vertex_count is None:
                raise ValueError(f"line {lineno}: arc before the n line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'a <tail> <head>'")
            try:
                arcs.append((int(parts[1]), int(parts[2])))
            except ValueError:
                raise ValueError(f"line {lineno}: bad arc endpoints") from None
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise ValueError("missing n line")
    return build_digraph(vertex_count, arcs)


def serialize_digraph(d: MultiDigraph) -> str:
    """Emit the digraph text format, arcs in instance order."""
    lines = [f"n {d.vertex_count}"]
    lines.extend(f"a {u} {v}" for (u, v) in d.arcs)
    return "\n".join(lines) + "\n"
