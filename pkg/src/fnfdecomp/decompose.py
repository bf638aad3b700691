"""Frobenius normal form of symmetric Toeplitz and Hankel matrices.

Each component of G(A), relabeled by vertex rank, is itself the graph of a
smaller symmetric Toeplitz (resp. Hankel) matrix. Stacking the components
gives a block-diagonal form whose blocks are irreducible and keep the
structure of the original matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    DenseMatrix,
    FNFError,
    HankelSpec,
    InvariantError,
    SizeMismatch,
    Spec,
    ToeplitzSpec,
    kind_of,
)
from .graph import Component, WeightedGraph, build_graph


class NotAComponent(FNFError):
    pass


class NotAPermutation(FNFError):
    pass


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def groups(self) -> list:
        out = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return list(out.values())


@dataclass(frozen=True)
class NormalizedLabeling:
    """Order-preserving bijection from a component onto ``0..k-1``."""

    component: Component
    psi: dict

    def __call__(self, v: int) -> int:
        return self.psi[v]

    def inverse(self, i: int) -> int:
        return self.component.vertices[i]


@dataclass(frozen=True)
class CompressionMap:
    """Sends each realized difference (Toeplitz) or sum (Hankel) to its
    symbol position in the compressed block."""

    domain: tuple
    image: tuple

    def __call__(self, s: int) -> int:
        return self.as_dict()[s]

    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.image))


@dataclass(frozen=True)
class Part:
    component: Component
    labeling: NormalizedLabeling
    compression: CompressionMap
    block: Spec


@dataclass(frozen=True)
class Decomposition:
    spec: Spec
    parts: tuple
    sigma: tuple

    @property
    def kind(self) -> str:
        return kind_of(self.spec)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def components(self) -> tuple:
        return tuple(p.component for p in self.parts)

    @property
    def blocks(self) -> tuple:
        return tuple(p.block for p in self.parts)

    @property
    def block_offsets(self) -> tuple:
        offs, acc = [], 0
        for p in self.parts:
            offs.append(acc)
            acc += len(p.component)
        return tuple(offs)

    def __len__(self) -> int:
        return len(self.parts)


def _spec_components(spec: Spec) -> list:
    n = spec.n
    uf = UnionFind(n)
    if isinstance(spec, ToeplitzSpec):
        for s in spec.support:
            if s == 0:
                continue
            for v in range(n - s):
                uf.union(v, v + s)
    else:
        for t in spec.support:
            for v in range(max(0, t - n + 1), t // 2 + 1):
                if v != t - v:
                    uf.union(v, t - v)
    return [Component(tuple(g)) for g in uf.groups()]


def order_components(comps, kind: str) -> list:
    """Toeplitz: ascending maximum vertex. Hankel: ascending minimum vertex."""
    if kind == "toeplitz":
        return sorted(comps, key=lambda c: c.max_vertex)
    return sorted(comps, key=lambda c: c.min_vertex)


def components(g: WeightedGraph) -> list:
    """Connected components of ``g`` (loops ignored), in canonical order."""
    return order_components(_spec_components(g.spec), g.kind)


def normalized_labeling(c: Component) -> NormalizedLabeling:
    return NormalizedLabeling(c, {v: i for i, v in enumerate(c.vertices)})


def _check_component(spec: Spec, c: Component) -> None:
    n = spec.n
    if c.max_vertex >= n or c.min_vertex < 0:
        raise NotAComponent(f"vertex out of range 0..{n - 1}")
    g = build_graph(spec)
    members = c.vertex_set
    for v in c.vertices:
        for u in g.neighbors[v]:
            if u not in members:
                raise NotAComponent(f"edge {{{v},{u}}} leaves the vertex set")
    seen = {c.min_vertex}
    stack = [c.min_vertex]
    while stack:
        v = stack.pop()
        for u in g.neighbors[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(c):
        raise NotAComponent("vertex set is closed under adjacency but not connected")


def compress_toeplitz(spec: ToeplitzSpec, c: Component, *, check: bool = True):
    """Compressed block of one component of a symmetric Toeplitz graph.

    Returns ``(CompressionMap, ToeplitzSpec)``. The block has order ``|c|``
    and ``b[phi(s)] = a[s]`` for every distance ``s`` realized inside ``c``.
    """
    if check:
        _check_component(spec, c)
    psi = normalized_labeling(c).psi
    members = c.vertex_set
    phi = {}
    for s in sorted(spec.support):
        for v in c.vertices:
            if v + s not in members:
                continue
            val = psi[v + s] - psi[v]
            prev = phi.setdefault(s, val)
            if prev != val:
                raise InvariantError(f"phi({s}) not well defined: {prev} vs {val}")
    domain = tuple(sorted(phi))
    image = tuple(phi[s] for s in domain)
    if any(a >= b for a, b in zip(image, image[1:])):
        raise InvariantError(f"phi not strictly increasing: {domain} -> {image}")
    b = [0] * len(c)
    for s, i in zip(domain, image):
        b[i] = spec.row[s]
    return CompressionMap(domain, image), ToeplitzSpec(tuple(b))


def compress_hankel(spec: HankelSpec, c: Component, *, check: bool = True):
    """Compressed block of one component of a Hankel graph.

    Returns ``(CompressionMap, HankelSpec)`` with ``b[phi(t)] = a[t]`` for
    every sum ``t`` realized inside ``c``.
    """
    if check:
        _check_component(spec, c)
    psi = normalized_labeling(c).psi
    members = c.vertex_set
    phi = {}
    for t in sorted(spec.support):
        for v in c.vertices:
            if 2 * v > t:
                break
            if t - v not in members:
                continue
            val = psi[v] + psi[t - v]
            prev = phi.setdefault(t, val)
            if prev != val:
                raise InvariantError(f"phi({t}) not well defined: {prev} vs {val}")
    domain = tuple(sorted(phi))
    image = tuple(phi[t] for t in domain)
    if len(set(image)) != len(image):
        raise InvariantError(f"phi not injective: {domain} -> {image}")
    b = [0] * (2 * len(c) - 1)
    for t, i in zip(domain, image):
        b[i] = spec.antidiag[t]
    return CompressionMap(domain, image), HankelSpec(tuple(b))


def assemble_sigma(comps: Sequence[Component], n: int) -> tuple:
    """``sigma[v]`` = offset of v's block + rank of v inside its component."""
    sigma = [None] * n
    off = 0
    for c in comps:
        for i, v in enumerate(c.vertices):
            sigma[v] = off + i
        off += len(c)
    if None in sigma:
        raise InvariantError("components do not cover every vertex")
    return tuple(sigma)


def frobenius_normal_form(spec: Spec) -> Decomposition:
    kind = kind_of(spec)
    comps = order_components(_spec_components(spec), kind)
    compress = compress_toeplitz if kind == "toeplitz" else compress_hankel
    parts = []
    for c in comps:
        phi, block = compress(spec, c, check=False)
        parts.append(Part(c, normalized_labeling(c), phi, block))
    return Decomposition(spec, tuple(parts), assemble_sigma(comps, spec.n))


def apply_permutation(m: DenseMatrix, sigma: Sequence[int]) -> DenseMatrix:
    """Return ``r`` with ``r[sigma[u]][sigma[v]] == m[u][v]``."""
    n = m.n
    if len(sigma) != n:
        raise SizeMismatch(f"permutation of length {len(sigma)} for a matrix of order {n}")
    if sorted(sigma) != list(range(n)):
        raise NotAPermutation(f"not a permutation of 0..{n - 1}: {list(sigma)}")
    inv = [0] * n
    for u, s in enumerate(sigma):
        inv[s] = u
    rows = m.rows
    return DenseMatrix(tuple(tuple(rows[inv[i]][inv[j]] for j in range(n)) for i in range(n)))
