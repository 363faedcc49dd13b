"""Pure-Python reachability kernel.

Reference implementation of the hot loops (ancestor closure, bidirected
component, hedge-hull fixed point). ``_ckernel`` mirrors this API exactly.
"""


class GraphKernel:
    """Adjacency snapshot of one graph, specialised for restricted searches.

    ``parents[v]`` and ``bidirected[v]`` are sequences of vertex indices.
    All methods take ``seed`` and ``within`` as iterables of ints and return
    a frozenset; ``seed`` is assumed to be contained in ``within``.
    """

    backend = "python"

    def __init__(self, n, parents, bidirected):
        self.n = n
        self._pa = [tuple(p) for p in parents]
        self._bi = [tuple(b) for b in bidirected]

    def _closure(self, adj, seed, within):
        seen = set(seed)
        stack = list(seen)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in within and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def ancestors(self, seed, within):
        within = within if isinstance(within, (set, frozenset)) else set(within)
        return frozenset(self._closure(self._pa, seed, within))

    def component(self, seed, within):
        within = within if isinstance(within, (set, frozenset)) else set(within)
        return frozenset(self._closure(self._bi, seed, within))

    def hull(self, seed, within):
        seed = tuple(seed)
        f = set(within)
        while True:
            f1 = self._closure(self._bi, seed, f)
            f2 = self._closure(self._pa, seed, f1)
            if len(f2) == len(f):
                return frozenset(f)
            f = f2
