"""Principal graph, dimensions of P_n and closed-walk counts."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .groups import GenSet

__all__ = [
    "PrincipalGraph",
    "principal_graph",
    "dim_pn",
    "loop_count",
    "export_dot",
    "graph_to_json",
    "InsufficientDepth",
]


class InsufficientDepth(ValueError):
    pass


def _genset(ctx) -> GenSet:
    return ctx if isinstance(ctx, GenSet) else ctx.genset


@dataclass
class PrincipalGraph:
    """Layers ``V_0..V_d`` of group elements and weighted edges between neighbours.

    A vertex is ``(depth, element)``; ``edges`` maps ``((n, g), (n+1, h))`` to the
    multiplicity.
    """

    genset: GenSet
    layers: list[list]
    edges: dict[tuple, int] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def vertices(self):
        for n, layer in enumerate(self.layers):
            for g in layer:
                yield (n, g)

    def name(self, vertex) -> str:
        n, g = vertex
        return f"{self.genset.group.name(g)}@{n}"

    def neighbours(self, vertex) -> list[tuple[tuple, int]]:
        out = []
        for (a, b), m in self.edges.items():
            if a == vertex:
                out.append((b, m))
            elif b == vertex:
                out.append((a, m))
        return out

    def __eq__(self, other):
        if not isinstance(other, PrincipalGraph):
            return NotImplemented
        return self.layers == other.layers and self.edges == other.edges


def _sort_key(genset: GenSet):
    group = genset.group
    if getattr(group, "is_finite", True):
        return lambda g: g
    return lambda g: (len(g), group.name(g))


def principal_graph(ctx, depth: int, *, convention: str = "alt",
                    max_size: int = 10**6) -> PrincipalGraph:
    """Layered graph with ``V_0 = {e}`` and ``V_n = G_n minus G_(n-2)``.

    Between ``g`` at depth n and ``h`` at depth n+1 there is one edge per index
    i with ``h = g * g_i**(-1)**(n+1)``, the step taken by the alternating
    product at position n+1.  ``convention="literal"`` swaps the parities, for
    comparison only.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if convention not in ("alt", "literal"):
        raise ValueError(f"unknown convention {convention!r}")
    gs = _genset(ctx)
    e = gs.group.identity
    key = _sort_key(gs)
    balls = [{e}]
    for pos in range(1, depth + 1):
        nxt = {gs.step(x, i, pos) for x in balls[-1] for i in range(gs.size)}
        if len(nxt) > max_size:
            raise OverflowError(f"G_{pos} has more than {max_size} elements")
        balls.append(nxt)
    layers = [[e]]
    for n in range(1, depth + 1):
        prev = balls[n - 2] if n >= 2 else set()
        layers.append(sorted(balls[n] - prev, key=key))
    edges: dict[tuple, int] = {}
    for n in range(depth):
        nxt = set(layers[n + 1])
        pos = n + 1 if convention == "alt" else n
        for g in layers[n]:
            counts = Counter(gs.step(g, i, pos) for i in range(gs.size))
            for h in sorted(counts, key=key):
                if h in nxt:
                    edges[((n, g), (n + 1, h))] = counts[h]
    return PrincipalGraph(gs, layers, edges)


def dim_pn(ctx, n: int) -> int:
    """``dim P_n``: words of length 2n with trivial alternating product, by counting
    walks on the group rather than listing words."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    gs = _genset(ctx)
    e = gs.group.identity
    counts = {e: 1}
    for pos in range(1, 2 * n + 1):
        nxt: dict = {}
        for x, c in counts.items():
            for i in range(gs.size):
                y = gs.step(x, i, pos)
                nxt[y] = nxt.get(y, 0) + c
        counts = nxt
    return counts.get(e, 0)


def loop_count(graph: PrincipalGraph, n: int) -> int:
    """Closed walks of length 2n from the depth-0 vertex, counted with multiplicity."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if graph.depth < n:
        raise InsufficientDepth(f"graph has depth {graph.depth}, need at least {n}")
    adj: dict = {}
    for (a, b), m in graph.edges.items():
        adj.setdefault(a, []).append((b, m))
        adj.setdefault(b, []).append((a, m))
    root = (0, graph.layers[0][0])
    counts = {root: 1}
    for _ in range(2 * n):
        nxt: dict = {}
        for v, c in counts.items():
            for w, m in adj.get(v, ()):
                nxt[w] = nxt.get(w, 0) + c * m
        counts = nxt
    return counts.get(root, 0)


def graph_to_json(graph: PrincipalGraph) -> dict:
    name = graph.genset.group.name
    return {
        "layers": [[name(g) for g in layer] for layer in graph.layers],
        "edges": [
            {"from": graph.name(a), "to": graph.name(b), "mult": m}
            for (a, b), m in graph.edges.items()
        ],
    }


def export_dot(graph: PrincipalGraph) -> str:
    """Graphviz source with one rank per depth; edges are labelled by multiplicity."""
    ids = {}
    lines = ["graph principal {", "  rankdir=LR;", "  node [shape=circle];"]
    for n, layer in enumerate(graph.layers):
        lines.append(f"  subgraph depth{n} {{")
        lines.append("    rank=same;")
        for k, g in enumerate(layer):
            ids[(n, g)] = f"v{n}_{k}"
            label = graph.genset.group.name(g).replace('"', r'\"')
            lines.append(f'    v{n}_{k} [label="{label}"];')
        lines.append("  }")
    for (a, b), m in graph.edges.items():
        lines.append(f'  {ids[a]} -- {ids[b]} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
