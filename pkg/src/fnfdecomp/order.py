"""Embedding and principal-submatrix certificates between diagonal blocks.

For a symmetric Toeplitz matrix, components sorted by maximum vertex form a
chain: each one, translated by the difference of maxima, lands inside the
next as an induced subgraph. Hence every earlier block is a principal
submatrix of every later one. Hankel matrices have no such chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import DenseMatrix, FNFError, to_dense
from .decompose import Decomposition
from .graph import Component, WeightedGraph, build_graph

# exhaustive index-set search is only attempted up to this order
SEARCH_LIMIT = 12


class CertificateInvalid(FNFError):
    pass


class BadIndexSet(FNFError):
    pass


@dataclass(frozen=True)
class EmbeddingCertificate:
    source: int
    target: int
    source_component: Component
    target_component: Component
    shift: int

    @property
    def vertex_map(self) -> dict:
        return {v: v + self.shift for v in self.source_component.vertices}


@dataclass(frozen=True)
class PrincipalSubmatrixCertificate:
    small: int
    large: int
    index_set: tuple


@dataclass(frozen=True)
class HankelWitness:
    first: int
    second: int
    reason: str


@dataclass(frozen=True)
class ConverseReport:
    """Pairs ``(i, j)`` with ``i > j`` where block i is nonetheless a
    principal submatrix of block j (only possible for equal blocks)."""

    violations: tuple

    @property
    def holds(self) -> bool:
        return not self.violations


def validate_embedding(g: WeightedGraph, cert: EmbeddingCertificate) -> None:
    """Raise CertificateInvalid unless the translated source is an induced,
    weight-preserving copy inside the target component."""
    src = cert.source_component.vertices
    target = cert.target_component.vertex_set
    d = cert.shift
    for v in src:
        if v + d not in target:
            raise CertificateInvalid(f"{v}+{d} is not in target component {cert.target}")
    for i, u in enumerate(src):
        for v in src[i:]:
            w_src = g.spec.weight(u, v)
            w_img = g.spec.weight(u + d, v + d)
            if w_src != w_img:
                raise CertificateInvalid(
                    f"pair {{{u},{v}}} has weight {w_src} but image {{{u + d},{v + d}}} has {w_img}"
                )


def _require_toeplitz(d: Decomposition) -> None:
    if d.kind != "toeplitz":
        raise ValueError("component chains exist only for symmetric Toeplitz decompositions")
    maxima = [c.max_vertex for c in d.components]
    if len(set(maxima)) != len(maxima):
        raise CertificateInvalid("two components share a maximum vertex")
    if maxima != sorted(maxima):
        raise CertificateInvalid("components are not ordered by maximum vertex")


def toeplitz_chain(d: Decomposition) -> list:
    """Certificates ``C_i -> C_{i+1}`` for each consecutive pair."""
    _require_toeplitz(d)
    g = build_graph(d.spec)
    comps = d.components
    chain = []
    for i in range(len(comps) - 1):
        cert = EmbeddingCertificate(
            i, i + 1, comps[i], comps[i + 1], comps[i + 1].max_vertex - comps[i].max_vertex
        )
        validate_embedding(g, cert)
        chain.append(cert)
    return chain


def pairwise_embeddings(d: Decomposition, chain: Optional[Sequence] = None) -> list:
    """Certificates for every ``i < j``, composing the consecutive shifts."""
    if chain is None:
        chain = toeplitz_chain(d)
    g = build_graph(d.spec)
    comps = d.components
    shifts = [c.shift for c in chain]
    out = []
    for i in range(len(comps)):
        total = 0
        for j in range(i + 1, len(comps)):
            total += shifts[j - 1]
            cert = EmbeddingCertificate(i, j, comps[i], comps[j], total)
            validate_embedding(g, cert)
            out.append(cert)
    return out


def check_principal_submatrix(small: DenseMatrix, large: DenseMatrix, index_set: Sequence[int]) -> bool:
    k = small.n
    idx = list(index_set)
    if len(idx) != k:
        raise BadIndexSet(f"index set has {len(idx)} entries, small matrix has order {k}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise BadIndexSet(f"index set must be strictly increasing: {idx}")
    if idx and (idx[0] < 0 or idx[-1] >= large.n):
        raise BadIndexSet(f"index set out of range for order {large.n}: {idx}")
    L, S = large.rows, small.rows
    return all(L[idx[p]][idx[q]] == S[p][q] for p in range(k) for q in range(k))


def principal_submatrix_certificates(d: Decomposition) -> list:
    """For every ``i < j`` the rows/columns of block j that reproduce block i."""
    embeddings = pairwise_embeddings(d)
    dense = [to_dense(b) for b in d.blocks]
    labelings = [p.labeling for p in d.parts]
    out = []
    for e in embeddings:
        psi = labelings[e.target].psi
        idx = tuple(psi[v + e.shift] for v in e.source_component.vertices)
        if not check_principal_submatrix(dense[e.source], dense[e.target], idx):
            raise CertificateInvalid(f"block {e.source} is not block {e.target} restricted to {idx}")
        out.append(PrincipalSubmatrixCertificate(e.source, e.target, idx))
    return out


def find_principal_index_set(small: DenseMatrix, large: DenseMatrix):
    """Exhaustive search for an index set; None if there is none.

    Raises ValueError above :data:`SEARCH_LIMIT` unless the orders match.
    """
    if small.n > large.n:
        return None
    if small.n == large.n:
        return tuple(range(small.n)) if small == large else None
    if large.n > SEARCH_LIMIT:
        raise ValueError(f"search capped at order {SEARCH_LIMIT}, got {large.n}")
    S = small.rows
    diag = [S[p][p] for p in range(small.n)]
    L = large.rows
    for idx in itertools.combinations(range(large.n), small.n):
        if any(L[i][i] != w for i, w in zip(idx, diag)):
            continue
        if check_principal_submatrix(small, large, idx):
            return idx
    return None


def converse_report(d: Decomposition) -> ConverseReport:
    """Which later blocks are principal submatrices of earlier ones.

    By the chain a later block is at least as large as an earlier one, so
    this can only happen when the two blocks coincide.
    """
    dense = [to_dense(b) for b in d.blocks]
    bad = []
    for j in range(len(dense)):
        for i in range(j + 1, len(dense)):
            if dense[i].n == dense[j].n and dense[i] == dense[j]:
                bad.append((i, j))
            elif dense[i].n < dense[j].n:
                # excluded by the chain; reaching here means the ordering is broken
                raise CertificateInvalid(f"block {i} is smaller than earlier block {j}")
    return ConverseReport(tuple(bad))


def hankel_chain_fails(d: Decomposition) -> Optional[HankelWitness]:
    """First pair of Hankel blocks with no principal-submatrix relation.

    Equal-size pairs are compared directly. Unequal sizes are searched
    exhaustively only when the larger block has order at most
    :data:`SEARCH_LIMIT`; larger pairs are skipped as undecided.
    """
    if d.kind != "hankel":
        raise ValueError("expected a Hankel decomposition")
    dense = [to_dense(b) for b in d.blocks]
    for i in range(len(dense)):
        for j in range(i + 1, len(dense)):
            a, b = dense[i], dense[j]
            if a.n == b.n:
                if a != b:
                    return HankelWitness(i, j, f"blocks {i} and {j} have equal order {a.n} but differ")
                continue
            small, large = (a, b) if a.n < b.n else (b, a)
            if large.n > SEARCH_LIMIT:
                continue
            if find_principal_index_set(small, large) is None:
                s, l = (i, j) if a.n < b.n else (j, i)
                return HankelWitness(
                    i, j, f"block {s} (order {small.n}) is not a principal submatrix of block {l} (order {large.n})"
                )
    return None


def certify(d: Decomposition) -> dict:
    """JSON-ready certificate section for a decomposition document."""
    if d.kind == "toeplitz":
        chain = toeplitz_chain(d)
        subs = principal_submatrix_certificates(d)
        conv = converse_report(d)
        return {
            "chain": [
                {
                    "source": c.source,
                    "target": c.target,
                    "shift": c.shift,
                    "vertex_map": [[v, w] for v, w in c.vertex_map.items()],
                }
                for c in chain
            ],
            "principal_submatrices": [
                {"small": s.small, "large": s.large, "index_set": list(s.index_set)} for s in subs
            ],
            "converse": {
                "holds": conv.holds,
                "violations": [list(p) for p in conv.violations],
                "note": (
                    "every later block is a principal submatrix only of blocks at or after it"
                    if conv.holds
                    else "equal blocks: a later block is also a principal submatrix of an earlier one"
                ),
            },
        }
    w = hankel_chain_fails(d)
    if w is None:
        return {"hankel_witness": None}
    return {
        "hankel_witness": {
            "first": w.first,
            "second": w.second,
            "relation": "none",
            "reason": w.reason,
        }
    }
