"""Minimum-weight vertex cut via vertex splitting and max-flow (Dinic).

Each vertex v becomes an arc v_in -> v_out whose capacity is the vertex
weight; every original edge u -> v becomes u_out -> v_in with unbounded
capacity. Undirected edges are replaced by the two opposite arcs. A minimum
s-t edge cut of this network only uses split arcs, and the vertices owning
them form a minimum-weight vertex cut.
"""

import math
from collections import deque
from dataclasses import dataclass

from .errors import InfeasibleError, PreconditionError


@dataclass(frozen=True)
class CutProblem:
    """Separate ``source`` from ``sink`` by deleting weighted vertices.

    ``weights`` maps every non-terminal vertex to a weight (``math.inf``
    for vertices that must not be cut). ``edges`` are arcs when
    ``directed`` is true, otherwise undirected pairs.
    """

    weights: dict
    edges: tuple
    source: object
    sink: object
    directed: bool = True

    def __post_init__(self):
        if self.source == self.sink:
            raise PreconditionError("source and sink must differ")
        if self.source in self.weights or self.sink in self.weights:
            raise PreconditionError("terminals cannot carry a weight")
        known = set(self.weights) | {self.source, self.sink}
        for u, v in self.edges:
            if u not in known or v not in known:
                raise PreconditionError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
        for v, w in self.weights.items():
            if not w >= 0:
                raise PreconditionError(f"weight of {v!r} must be >= 0")


class _Network:
    def __init__(self, size):
        self.adj = [[] for _ in range(size)]
        self.to = []
        self.cap = []

    def add(self, u, v, c):
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s, t):
        level = [-1] * len(self.adj)
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if level[v] < 0 and self.cap[e] > 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s, t, stop_at=math.inf):
        flow = 0
        to, cap, adj = self.to, self.cap, self.adj
        while flow < stop_at:
            level = self._levels(s, t)
            if level is None:
                break
            it = [0] * len(adj)
            while True:
                # advance along admissible arcs until t or a dead end
                path = []
                u = s
                while u != t:
                    edges = adj[u]
                    while it[u] < len(edges):
                        e = edges[it[u]]
                        v = to[e]
                        if cap[e] > 0 and level[v] == level[u] + 1:
                            break
                        it[u] += 1
                    else:
                        if u == s:
                            break
                        level[u] = -1
                        u = to[path.pop() ^ 1]
                        it[u] += 1
                        continue
                    path.append(e)
                    u = v
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                flow += push
        return flow

    def reachable(self, s):
        seen = [False] * len(self.adj)
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if not seen[v] and self.cap[e] > 0:
                    seen[v] = True
                    q.append(v)
        return seen


def _solve(p):
    verts = list(p.weights)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    src, snk = n, n + 1
    finite = [w for w in p.weights.values() if not math.isinf(w)]
    big = sum(finite) + 1
    net = _Network(2 * (n + 2))
    for v, i in idx.items():
        w = p.weights[v]
        net.add(2 * i, 2 * i + 1, big if math.isinf(w) else w)
    idx[p.source] = src
    idx[p.sink] = snk
    net.add(2 * src, 2 * src + 1, big)
    net.add(2 * snk, 2 * snk + 1, big)
    for u, v in p.edges:
        a, b = idx[u], idx[v]
        net.add(2 * a + 1, 2 * b, big)
        if not p.directed:
            net.add(2 * b + 1, 2 * a, big)
    s, t = 2 * src + 1, 2 * snk
    value = net.max_flow(s, t, stop_at=big)
    if value >= big:
        raise InfeasibleError(
            f"every {p.source!r}-{p.sink!r} separator needs an infinite-weight vertex")
    seen = net.reachable(s)
    cut = frozenset(v for i, v in enumerate(verts) if seen[2 * i] and not seen[2 * i + 1])
    return cut, value


def min_vertex_cut(p):
    """Minimum-weight vertex set separating ``p.source`` from ``p.sink``.

    Among minimum cuts the one closest to the source is returned. Raises
    InfeasibleError when no finite-weight separator exists.
    """
    return _solve(p)[0]


def max_flow_value(p):
    """Value of the maximum flow of the split network (equals the cut weight)."""
    return _solve(p)[1]
