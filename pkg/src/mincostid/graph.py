"""Semi-Markovian graph model and structural queries.

Vertices are dense integers ``0..n-1``; names are labels only. Vertex sets
are plain ``frozenset`` objects. A graph never changes after construction;
"removing" vertices is expressed by passing a ``within`` set to the queries.
"""

import json
import math

from . import _kernel
from .errors import GraphError, PreconditionError

INF = math.inf
"""Cost of a vertex that cannot be intervened on. Sums saturate at INF."""


def _check_cost(c, v):
    if isinstance(c, str):
        if c.lower() in ("inf", "infinity"):
            return INF
        raise GraphError(f"cost of vertex {v}: expected a number or 'inf', got {c!r}")
    if isinstance(c, bool) or not isinstance(c, (int, float)):
        raise GraphError(f"cost of vertex {v}: expected a number or 'inf', got {c!r}")
    if c != c or c < 0:
        raise GraphError(f"cost of vertex {v} must be >= 0, got {c!r}")
    return c


class CausalGraph:
    """Acyclic directed mixed graph with per-vertex intervention costs.

    ``directed`` holds pairs ``(u, v)`` for ``u -> v``; ``bidirected`` holds
    unordered pairs stored as ``(min, max)``.
    """

    __slots__ = ("n", "directed", "bidirected", "costs", "names",
                 "_pa", "_ch", "_bi", "_kernels")

    def __init__(self, n, directed=(), bidirected=(), costs=None, names=None):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        dset = set()
        for e in directed:
            u, v = self._edge(e, n, "directed")
            dset.add((u, v))
        bset = set()
        for e in bidirected:
            u, v = self._edge(e, n, "bidirected")
            bset.add((min(u, v), max(u, v)))
        if costs is None:
            costs = [1] * n
        costs = tuple(_check_cost(c, v) for v, c in enumerate(costs))
        if len(costs) != n:
            raise GraphError(f"expected {n} costs, got {len(costs)}")
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise GraphError(f"expected {n} names, got {len(names)}")
            if len(set(names)) != n:
                raise GraphError("vertex names must be unique")

        pa = [[] for _ in range(n)]
        ch = [[] for _ in range(n)]
        bi = [[] for _ in range(n)]
        for u, v in sorted(dset):
            pa[v].append(u)
            ch[u].append(v)
        for u, v in sorted(bset):
            bi[u].append(v)
            bi[v].append(u)
        self.n = n
        self.directed = frozenset(dset)
        self.bidirected = frozenset(bset)
        self.costs = costs
        self.names = names
        self._pa = tuple(tuple(p) for p in pa)
        self._ch = tuple(tuple(c) for c in ch)
        self._bi = tuple(tuple(b) for b in bi)
        self._kernels = {}
        self._check_acyclic()

    @staticmethod
    def _edge(e, n, kind):
        try:
            u, v = e
        except (TypeError, ValueError):
            raise GraphError(f"{kind} edge must be a pair, got {e!r}") from None
        for x in (u, v):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
                raise GraphError(f"{kind} edge {e!r}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"{kind} edge {e!r} is a self-loop")
        return u, v

    def _check_acyclic(self):
        indeg = [len(p) for p in self._pa]
        stack = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for c in self._ch[v]:
                indeg[c] -= 1
                if indeg[c] == 0:
                    stack.append(c)
        if seen != self.n:
            cyc = sorted(v for v in range(self.n) if indeg[v] > 0)
            raise GraphError(f"directed edges contain a cycle through vertices {cyc}")

    def __eq__(self, other):
        if not isinstance(other, CausalGraph):
            return NotImplemented
        return (self.n, self.directed, self.bidirected, self.costs, self.names) == (
            other.n, other.directed, other.bidirected, other.costs, other.names)

    def __hash__(self):
        return hash((self.n, self.directed, self.bidirected, self.costs))

    def __repr__(self):
        return (f"CausalGraph(n={self.n}, directed={len(self.directed)}, "
                f"bidirected={len(self.bidirected)})")

    @property
    def vertices(self):
        return frozenset(range(self.n))

    def pa_of(self, v):
        return self._pa[v]

    def ch_of(self, v):
        return self._ch[v]

    def bid_of(self, v):
        return self._bi[v]

    @property
    def kernel(self):
        """Reachability kernel for this graph (built on first use)."""
        name = _kernel.backend()
        k = self._kernels.get(name)
        if k is None:
            k = _kernel.make_kernel(self.n, self._pa, self._bi, name)
            self._kernels[name] = k
        return k

    def name(self, v):
        return self.names[v] if self.names else str(v)

    def index(self, label):
        """Resolve a vertex name or decimal index to its integer index."""
        if isinstance(label, int) and not isinstance(label, bool):
            if 0 <= label < self.n:
                return label
            raise GraphError(f"vertex index {label} out of range 0..{self.n - 1}")
        label = str(label).strip()
        if self.names and label in self.names:
            return self.names.index(label)
        if label.lstrip("-").isdigit():
            return self.index(int(label))
        raise GraphError(f"unknown vertex {label!r}")

    def cost(self, vertices):
        """Total cost of a vertex set (INF if any member is INF)."""
        return sum((self.costs[v] for v in vertices), 0)

    def with_costs(self, costs):
        return CausalGraph(self.n, self.directed, self.bidirected, costs, self.names)

    def with_infinite(self, vertices):
        """Copy of the graph with the given vertices made non-intervenable."""
        vs = set(vertices)
        return self.with_costs([INF if v in vs else c for v, c in enumerate(self.costs)])

    def vset(self, X):
        """Validate an iterable of indices and return it as a frozenset."""
        out = frozenset(X)
        for v in out:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.n:
                raise GraphError(f"vertex {v!r} out of range 0..{self.n - 1}")
        return out


def parents(g, X):
    """Parents of the members of X, excluding X itself."""
    X = g.vset(X)
    return frozenset(u for v in X for u in g.pa_of(v)) - X


def children(g, X):
    X = g.vset(X)
    return frozenset(u for v in X for u in g.ch_of(v)) - X


def bid_neighbors(g, X):
    """Vertices outside X sharing a bidirected edge with some member of X."""
    X = g.vset(X)
    return frozenset(u for v in X for u in g.bid_of(v)) - X


def pac(g, X):
    """Parents of X that are also bidirected neighbours of X."""
    return parents(g, X) & bid_neighbors(g, X)


def _within(g, S, within):
    S = g.vset(S)
    within = g.vertices if within is None else g.vset(within)
    if not S <= within:
        raise PreconditionError(f"target {sorted(S)} is not contained in the working set")
    return S, within


def ancestors(g, S, within=None):
    """Members of ``within`` with a directed path into S inside ``within`` (S included)."""
    S, within = _within(g, S, within)
    return g.kernel.ancestors(S, within)


def c_component_of(g, S, within=None):
    """Vertices of ``within`` bidirected-connected to S inside ``within``."""
    S, within = _within(g, S, within)
    return g.kernel.component(S, within)


def maximal_c_components(g, X):
    """Partition of X into the maximal c-components of the induced subgraph.

    Blocks are ordered by their smallest vertex.
    """
    X = g.vset(X)
    left = set(X)
    out = []
    for v in sorted(X):
        if v in left:
            comp = g.kernel.component((v,), X)
            left -= comp
            out.append(comp)
    return out


def is_c_component(g, X):
    X = g.vset(X)
    return bool(X) and len(maximal_c_components(g, X)) == 1


def ancestral_target(g, S, T):
    """Ancestors of S once T is removed.

    Reduces a query P(S | do(T)) to the form Q[.] used by the solvers.
    """
    S, T = g.vset(S), g.vset(T)
    if S & T:
        raise PreconditionError("outcome and treatment sets must be disjoint")
    return ancestors(g, S, g.vertices - T)


# --- JSON ---------------------------------------------------------------


def graph_to_dict(g):
    d = {"n": g.n}
    if g.names is not None:
        d["names"] = list(g.names)
    d["directed"] = [list(e) for e in sorted(g.directed)]
    d["bidirected"] = [list(e) for e in sorted(g.bidirected)]
    d["costs"] = ["inf" if c == INF else c for c in g.costs]
    return d


def graph_from_dict(d):
    if not isinstance(d, dict):
        raise GraphError("graph document must be a JSON object")
    unknown = set(d) - {"n", "names", "directed", "bidirected", "costs"}
    if unknown:
        raise GraphError(f"unknown keys in graph document: {sorted(unknown)}")
    if "n" not in d:
        raise GraphError("graph document is missing 'n'")
    for key in ("directed", "bidirected"):
        if not isinstance(d.get(key, []), list):
            raise GraphError(f"'{key}' must be a list of [u, v] pairs")
    costs = d.get("costs")
    if costs is not None and not isinstance(costs, list):
        raise GraphError("'costs' must be a list")
    return CausalGraph(d["n"], d.get("directed", []), d.get("bidirected", []),
                       costs, d.get("names"))


def dumps_graph(g):
    return json.dumps(graph_to_dict(g))


def loads_graph(text):
    """Parse a graph document; json.JSONDecodeError propagates with position info."""
    return graph_from_dict(json.loads(text))


def load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())


def save_graph(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))
        fh.write("\n")
