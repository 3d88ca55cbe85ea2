"""Reduction gadgets that encode classical hard problems as packing bounds.

Three constructions, each turning an instance of a known NP-complete
problem into a digraph D with terminals S and a threshold L such that the
instance is a yes-instance exactly when D packs L arc-disjoint Steiner
cycles:

* `eulerian_gadget` encodes weak 2-linkage (two arc-disjoint demand paths)
  into an Eulerian digraph, after balancing the input with `eulerize`;
* `planar_gadget` encodes the two-demand-pair disjoint paths problem for
  planar inputs with all four terminals on the outer face, producing a
  planar digraph;
* `replacement_gadget` encodes undirected Hamiltonicity into a symmetric
  digraph by bidirecting subdivided parallel edge bundles.

Every multi-arc of the raw constructions is subdivided through a fresh
named vertex, so all outputs are simple digraphs.  Outputs carry a trace
mapping each new vertex to its role label, and new vertices are numbered
in a fixed documented order so identical inputs give identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Graph, MultiDigraph, build_digraph, serialize_digraph


@dataclass(frozen=True)
class LinkageInstance:
    """A demand-pair routing instance: find arc-disjoint s1->t1 and s2->t2
    paths in `digraph` (d1 and d2 of them for the planar variant).

    For `planar_gadget` the caller asserts that the digraph is planar with
    the four terminals on the outer face in the cyclic order s1, s2, t1,
    t2; this is not checked here.
    """

    digraph: MultiDigraph
    s1: int
    t1: int
    s2: int
    t2: int
    d1: int | None = None
    d2: int | None = None

    def __post_init__(self):
        terms = (self.s1, self.t1, self.s2, self.t2)
        n = self.digraph.vertex_count
        if any(not 0 <= v < n for v in terms):
            raise ValueError(f"terminal out of range 0..{n - 1}: {terms}")
        if len(set(terms)) != 4:
            raise ValueError(f"terminals must be distinct, got {terms}")
        for d in (self.d1, self.d2):
            if d is not None and d < 1:
                raise ValueError(f"demands must be at least 1, got {d}")


@dataclass(frozen=True)
class GadgetOutput:
    """A reduction output: digraph, terminal set, target packing size, and
    a trace naming every vertex the construction added."""

    digraph: MultiDigraph
    terminals: frozenset
    threshold: int
    trace: dict


def _require_simple(d: MultiDigraph, what: str) -> None:
    if not d.is_simple():
        raise ValueError(f"{what} must be a simple digraph (no parallel arcs)")


def _excesses(d: MultiDigraph, extra_arcs):
    """Per-vertex out-degree minus in-degree after adding extra_arcs."""
    exc = [d.out_degree(v) - d.in_degree(v) for v in range(d.vertex_count)]
    for (u, v) in extra_arcs:
        exc[u] += 1
        exc[v] -= 1
    return exc


def eulerize(d: MultiDigraph, inst: LinkageInstance):
    """Balance a linkage instance into an Eulerian multidigraph.

    Adds the return arcs t1->s1 and t2->s2, two fresh vertices s (id n) and
    t (id n+1), an arc s->v per unit of out-excess and v->t per unit of
    in-excess, and finally p parallel t->s arcs, where p is the total
    positive excess.  Returns (digraph, p, trace); the trace names s and t.
    The result is balanced at every vertex, and Eulerian whenever its
    underlying graph is connected.
    """
    n = d.vertex_count
    returns = [(inst.t1, inst.s1), (inst.t2, inst.s2)]
    exc = _excesses(d, returns)
    s_id, t_id = n, n + 1
    arcs = list(d.arcs) + returns
    p = sum(e for e in exc if e > 0)
    for v in range(n):
        arcs.extend((s_id, v) for _ in range(max(0, exc[v])))
    for v in range(n):
        arcs.extend((v, t_id) for _ in range(max(0, -exc[v])))
    arcs.extend((t_id, s_id) for _ in range(p))
    out = build_digraph(n + 2, arcs)
    return out, p, {s_id: "s", t_id: "t"}


def eulerian_gadget(inst: LinkageInstance, k: int) -> GadgetOutput:
    """Encode weak 2-linkage into an Eulerian packing instance.

    The terminals are a directed ring x_1..x_k spliced into the input: the
    ring is interrupted once to force a route s1->t1 through the input and
    once for s2->t2, and padded with enough parallel (subdivided) ring arcs
    that exactly p+2 arc-disjoint Steiner cycles exist when the two demand
    paths do, and fewer otherwise.  p is the imbalance total from
    `eulerize`; the balancing vertices s and t join the ring through p
    subdivided arcs on each side (and are omitted when p = 0, where they
    would be isolated).  Threshold: p+2.
    """
    if k < 3:
        raise ValueError(f"the ring needs at least 3 vertices, got k={k}")
    g = inst.digraph
    _require_simple(g, "the linkage digraph")
    n = g.vertex_count
    exc = _excesses(g, [(inst.t1, inst.s1), (inst.t2, inst.s2)])
    p = sum(e for e in exc if e > 0)

    def x(i):
        # ring ids follow the input vertices; i is 1-based, cyclic
        i = 1 if i == k + 1 else i
        return n + i - 1

    trace = {x(i): f"x_{i}" for i in range(1, k + 1)}
    next_id = n + k

    def fresh(label):
        nonlocal next_id
        v = next_id
        next_id += 1
        trace[v] = label
        return v

    arcs = list(g.arcs)
    # ring arcs, one subdivision vertex per parallel copy
    ring_mult = {}
    for i in range(1, k + 1):
        if i <= k - 3:
            ring_mult[i] = p + 2
        elif i == k - 2:
            ring_mult[i] = 2
        else:
            ring_mult[i] = p + 1
    for i in range(1, k + 1):
        succ = 1 if i == k else i + 1
        for j in range(1, ring_mult[i] + 1):
            z = fresh(f"z^{j}_{{{i},{succ}}}")
            arcs.append((x(i), z))
            arcs.append((z, x(succ)))
    # the two splice points into the input
    arcs.append((x(k - 1), inst.s1))
    arcs.append((inst.t1, x(k)))
    arcs.append((x(k), inst.s2))
    arcs.append((inst.t2, x(1)))
    if p > 0:
        u_ids = [fresh(f"u_{i}") for i in range(1, p + 1)]
        w_ids = [fresh(f"w_{i}") for i in range(1, p + 1)]
        s_id = fresh("s")
        t_id = fresh("t")
        for u in u_ids:
            arcs.append((x(k - 2), u))
            arcs.append((u, s_id))
        for w in w_ids:
            arcs.append((t_id, w))
            arcs.append((w, x(k - 1)))
        for v in range(n):
            for _ in range(max(0, exc[v])):
                q = fresh("A'-subdivision")
                arcs.append((s_id, q))
                arcs.append((q, v))
        for v in range(n):
            for _ in range(max(0, -exc[v])):
                q = fresh("A'-subdivision")
                arcs.append((v, q))
                arcs.append((q, t_id))
    out = build_digraph(next_id, arcs)
    terminals = frozenset(x(i) for i in range(1, k + 1))
    return GadgetOutput(out, terminals, p + 2, trace)


def planar_gadget(inst: LinkageInstance, k: int) -> GadgetOutput:
    """Encode two planar demand pairs into a planar packing instance.

    The ring x_1..x_k is joined by d2 subdivided forward chains and d1
    subdivided backward chains between consecutive ring vertices, plus d1
    subdivided x_1->s1 and t1->x_k arcs and d2 subdivided x_k->s2 and
    t2->x_1 arcs.  With the input planar and its terminals on the outer
    face in cyclic order s1, s2, t1, t2, the output is planar, and it packs
    d1+d2 Steiner cycles exactly when the input routes d1 arc-disjoint
    s1->t1 paths and d2 s2->t2 paths, all disjoint.  Threshold: d1+d2.
    """
    if k < 2:
        raise ValueError(f"the ring needs at least 2 vertices, got k={k}")
    if inst.d1 is None or inst.d2 is None:
        raise ValueError("the planar construction needs both demands d1, d2")
    g = inst.digraph
    _require_simple(g, "the linkage digraph")
    n = g.vertex_count
    d1, d2 = inst.d1, inst.d2

    def x(i):
        return n + i - 1

    trace = {x(i): f"x_{i}" for i in range(1, k + 1)}
    next_id = n + k

    def fresh(label):
        nonlocal next_id
        v = next_id
        next_id += 1
        trace[v] = label
        return v

    arcs = list(g.arcs)
    for a in range(1, d1 + 1):
        for i in range(1, k):
            q = fresh(f"q^{a}_{{{i + 1},{i}}}")
            arcs.append((x(i + 1), q))
            arcs.append((q, x(i)))
        e = fresh(f"e_{a}")
        arcs.append((x(1), e))
        arcs.append((e, inst.s1))
        e2 = fresh(f"e'_{a}")
        arcs.append((inst.t1, e2))
        arcs.append((e2, x(k)))
    for b in range(1, d2 + 1):
        for i in range(1, k):
            q = fresh(f"p^{b}_{{{i},{i + 1}}}")
            arcs.append((x(i), q))
            arcs.append((q, x(i + 1)))
        f = fresh(f"f_{b}")
        arcs.append((x(k), f))
        arcs.append((f, inst.s2))
        f2 = fresh(f"f'_{b}")
        arcs.append((inst.t2, f2))
        arcs.append((f2, x(1)))
    out = build_digraph(next_id, arcs)
    terminals = frozenset(x(i) for i in range(1, k + 1))
    return GadgetOutput(out, terminals, d1 + d2, trace)


def replacement_gadget(g: Graph, copies: int) -> GadgetOutput:
    """Encode undirected Hamiltonicity into a symmetric packing instance.

    Each edge {i, j} becomes `copies` parallel two-way channels, each
    subdivided by its own vertex and then bidirected (four arcs per
    channel).  With S = all original vertices and threshold = copies, the
    output packs `copies` disjoint Steiner cycles exactly when g has a
    Hamiltonian cycle: one Hamiltonian cycle yields a cycle per channel
    index, and any Steiner cycle projects back onto a Hamiltonian cycle.
    The output is always symmetric, Eulerian when g is connected, and
    planar when g is planar.
    """
    if copies < 1:
        raise ValueError(f"need at least one channel per edge, got {copies}")
    n = g.vertex_count
    trace = {}
    next_id = n
    arcs = []
    for (i, j) in sorted(g.edges):
        for a in range(1, copies + 1):
            v = next_id
            next_id += 1
            trace[v] = f"v^{a}_{{{i},{j}}}"
            arcs.extend([(i, v), (v, j), (j, v), (v, i)])
    out = build_digraph(next_id, arcs)
    return GadgetOutput(out, frozenset(range(n)), copies, trace)


def serialize_gadget(out: GadgetOutput) -> str:
    """Digraph text format plus trace, terminal, and threshold sections."""
    lines = [serialize_digraph(out.digraph).rstrip("\n")]
    for v in sorted(out.trace):
        lines.append(f"role {v} {out.trace[v]}")
    lines.append("S: " + ",".join(str(v) for v in sorted(out.terminals)))
    lines.append(f"L: {out.threshold}")
    return "\n".join(lines) + "\n"
