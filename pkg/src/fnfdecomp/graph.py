"""Weighted graphs of symmetric Toeplitz and Hankel matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import DenseMatrix, HankelSpec, Spec, ToeplitzSpec, kind_of


@dataclass(frozen=True)
class Component:
    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if not vs:
            raise ValueError("a component needs at least one vertex")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError(f"component vertices must be strictly increasing: {vs}")

    @classmethod
    def of(cls, vertices) -> "Component":
        return cls(tuple(sorted(vertices)))

    @property
    def max_vertex(self) -> int:
        return self.vertices[-1]

    @property
    def min_vertex(self) -> int:
        return self.vertices[0]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self.vertex_set

    @property
    def vertex_set(self) -> frozenset:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_vset"]
        except KeyError:
            s = frozenset(self.vertices)
            object.__setattr__(self, "_vset", s)
            return s


@dataclass(frozen=True)
class WeightedGraph:
    """The graph G(A) of a spec.

    ``neighbors[v]`` is the sorted neighbor list of ``v``; it contains ``v``
    itself when ``v`` carries a loop. Weights are read from the spec.
    """

    spec: Spec
    neighbors: tuple

    @property
    def kind(self) -> str:
        return kind_of(self.spec)

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return self.spec.weight(u, v) != 0

    def weight(self, u: int, v: int):
        w = self.spec.weight(u, v)
        if w == 0:
            raise KeyError((u, v))
        return w

    def edges(self) -> Iterator[tuple]:
        """Yield ``(u, v, weight)`` once per edge with ``u <= v``."""
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if v >= u:
                    yield u, v, self.spec.weight(u, v)

    def num_edges(self) -> int:
        return sum(1 for _ in self.edges())


def build_toeplitz_graph(spec: ToeplitzSpec) -> WeightedGraph:
    n = spec.n
    strides = sorted(spec.support)
    nbrs = []
    for v in range(n):
        below = [v - s for s in reversed(strides) if s > 0 and v - s >= 0]
        above = [v + s for s in strides if v + s < n]
        nbrs.append(tuple(below + above))
    return WeightedGraph(spec, tuple(nbrs))


def build_hankel_graph(spec: HankelSpec) -> WeightedGraph:
    n = spec.n
    sums = sorted(spec.support)
    nbrs = []
    for v in range(n):
        nbrs.append(tuple(sorted(t - v for t in sums if 0 <= t - v < n)))
    return WeightedGraph(spec, tuple(nbrs))


def build_graph(spec: Spec) -> WeightedGraph:
    if isinstance(spec, ToeplitzSpec):
        return build_toeplitz_graph(spec)
    return build_hankel_graph(spec)


def adjacency_matrix(g: WeightedGraph) -> DenseMatrix:
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for u, v, w in g.edges():
        rows[u][v] = w
        rows[v][u] = w
    return DenseMatrix(tuple(map(tuple, rows)))
