"""Result containers shared by all solvers."""

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class InterventionCollection:
    """A collection of intervention sets; its cost is the sum over all sets."""

    sets: tuple

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        if len(set(sets)) != len(sets):
            raise ValueError("intervention collection holds a duplicate set")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def single(cls, A):
        return cls((frozenset(A),))

    def cost(self, g):
        return sum((g.cost(A) for A in self.sets), 0)

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


@dataclass
class SolveReport:
    """What a solver returned plus bookkeeping counters."""

    algorithm: str
    result: InterventionCollection
    cost: float
    hedges_discovered: int = 0
    hitting_set_calls: int = 0
    wall_time: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def intervention(self):
        """The single intervention set of a singleton result."""
        if len(self.result) != 1:
            raise ValueError(f"{self.algorithm} returned {len(self.result)} intervention sets")
        return self.result.sets[0]

    def to_dict(self, g=None):
        label = g.name if g is not None else str
        return {
            "algorithm": self.algorithm,
            "sets": [sorted((label(v) for v in A), key=_natural) for A in self.result.sets],
            "indices": [sorted(A) for A in self.result.sets],
            "cost": _json_cost(self.cost),
            "hedges_discovered": self.hedges_discovered,
            "hitting_set_calls": self.hitting_set_calls,
            "wall_time": self.wall_time,
        }


def _natural(s):
    return (len(s), s)


def _json_cost(c):
    return "inf" if c == float("inf") else c


def make_report(g, algorithm, A, started, **counters):
    """Wrap a single intervention set; ``started`` is a perf_counter stamp."""
    A = frozenset(A)
    return SolveReport(algorithm, InterventionCollection.single(A), g.cost(A),
                       wall_time=time.perf_counter() - started, **counters)
