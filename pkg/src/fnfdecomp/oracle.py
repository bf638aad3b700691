"""Brute-force reference checks built only from dense matrices.

Nothing here touches the union-find or compression code paths; the point is
to have an independent second route to every claim a decomposition makes.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .core import (
    DenseMatrix,
    FNFError,
    HankelSpec,
    InvariantError,
    ToeplitzSpec,
    hankel_violation,
    to_dense,
    toeplitz_violation,
)
from .graph import Component

BIPARTITION_LIMIT = 10


class NotSymmetric(FNFError):
    pass


class BadParams(FNFError):
    pass


def bfs_components(m: DenseMatrix, order: str = "max") -> list:
    """Components of the graph of a symmetric matrix by breadth-first search.

    ``order`` is ``"max"`` (ascending maximum vertex) or ``"min"``.
    """
    if not m.is_symmetric():
        raise NotSymmetric("bfs_components needs a symmetric matrix")
    rows = m.rows
    n = len(rows)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        members = []
        while queue:
            v = queue.popleft()
            members.append(v)
            row = rows[v]
            for u in range(n):
                if not seen[u] and u != v and row[u] != 0:
                    seen[u] = True
                    queue.append(u)
        comps.append(Component.of(members))
    key = (lambda c: c.max_vertex) if order == "max" else (lambda c: c.min_vertex)
    return sorted(comps, key=key)


def _strongly_connected(m: DenseMatrix) -> bool:
    rows = m.rows
    n = len(rows)

    def reach(nonzero):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in range(n):
                if u not in seen and nonzero(v, u):
                    seen.add(u)
                    stack.append(u)
        return len(seen) == n

    return reach(lambda v, u: rows[v][u] != 0) and reach(lambda v, u: rows[u][v] != 0)


def _has_zero_cut(m: DenseMatrix) -> bool:
    # is there a proper vertex subset X with no nonzero entry between X and its complement?
    rows = m.rows
    n = len(rows)
    adj = [sum(1 << u for u in range(n) if u != v and rows[v][u] != 0) for v in range(n)]
    full = (1 << n) - 1
    # fix vertex 0 inside X; X = everything is not proper
    for rest in range(1 << (n - 1)):
        X = (rest << 1) | 1
        if X == full:
            continue
        out = full & ~X
        if all(not (adj[v] & out) for v in range(n) if X >> v & 1):
            return True
    return False


def is_irreducible_bruteforce(m: DenseMatrix) -> bool:
    """Irreducibility decided through connectivity of the matrix graph.

    For symmetric matrices of order at most 10 every bipartition of the
    index set is additionally enumerated; a disagreement raises
    :class:`InvariantError`.
    """
    n = m.n
    if n == 0:
        raise ValueError("empty matrix")
    if not m.is_symmetric():
        return _strongly_connected(m)
    connected = len(bfs_components(m)) == 1
    if n <= BIPARTITION_LIMIT:
        by_cut = not _has_zero_cut(m)
        if by_cut != connected:
            raise InvariantError(f"bipartition check ({by_cut}) disagrees with BFS ({connected})")
    return connected


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def format(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f": {c.detail}" if c.detail else "") for c in self.checks]
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def verify_decomposition(spec, d) -> VerificationReport:
    """Check every claim of a decomposition against the dense matrix.

    ``d`` needs ``kind``, ``sigma``, ``components`` (vertex sequences or
    Components) and ``blocks`` (specs). Works equally on a
    :class:`~fnfdecomp.decompose.Decomposition` and on a document read
    back from disk.
    """
    rep = VerificationReport()
    A = to_dense(spec)
    n = A.n
    kind = "toeplitz" if isinstance(spec, ToeplitzSpec) else "hankel"
    comps = [tuple(c) for c in d.components]
    blocks = list(d.blocks)
    sigma = list(d.sigma)

    rep.add("kind", d.kind == kind, "" if d.kind == kind else f"decomposition is {d.kind}, instance is {kind}")

    flat = sorted(v for c in comps for v in c)
    partition_ok = flat == list(range(n)) and all(c and list(c) == sorted(set(c)) for c in comps)
    rep.add("partition", partition_ok, "" if partition_ok else "components do not partition 0..n-1")

    truth = {tuple(c.vertices) for c in bfs_components(A)}
    comp_ok = set(comps) == truth and len(comps) == len(truth)
    rep.add("components", comp_ok, "" if comp_ok else f"expected {sorted(truth)}")

    sizes_ok = len(blocks) == len(comps) and all(b.n == len(c) for b, c in zip(blocks, comps))
    rep.add("block sizes", sizes_ok, "" if sizes_ok else "block orders do not match component sizes")

    # reconstruction: P A P^T == direct sum of blocks, as an index identity
    recon_ok, recon_detail = True, ""
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        recon_ok, recon_detail = False, "sigma is not a permutation of 0..n-1"
    elif not sizes_ok:
        recon_ok, recon_detail = False, "block sizes inconsistent"
    else:
        target = [[0] * n for _ in range(n)]
        off = 0
        for b in blocks:
            B = to_dense(b).rows
            for p in range(b.n):
                for q in range(b.n):
                    target[off + p][off + q] = B[p][q]
            off += b.n
        rows = A.rows
        for u in range(n):
            su = sigma[u]
            for v in range(n):
                if target[su][sigma[v]] != rows[u][v]:
                    recon_ok = False
                    recon_detail = f"entry ({u},{v}) of A lands at ({su},{sigma[v]}) with mismatching value"
                    break
            if not recon_ok:
                break
    rep.add("reconstruction", recon_ok, recon_detail)

    structure_ok, structure_detail = True, ""
    for i, b in enumerate(blocks):
        if kind == "toeplitz":
            ok = isinstance(b, ToeplitzSpec) and toeplitz_violation(to_dense(b)) is None
        else:
            ok = isinstance(b, HankelSpec) and hankel_violation(to_dense(b)) is None
        if not ok:
            structure_ok, structure_detail = False, f"block {i} is not {kind}"
            break
    rep.add("block structure", structure_ok, structure_detail)

    irr_ok, irr_detail = True, ""
    for i, b in enumerate(blocks):
        if not is_irreducible_bruteforce(to_dense(b)):
            irr_ok, irr_detail = False, f"block {i} is reducible"
            break
    rep.add("block irreducibility", irr_ok, irr_detail)

    iso_ok, iso_detail = partition_ok and sizes_ok, ""
    if iso_ok:
        for i, (b, c) in enumerate(zip(blocks, comps)):
            B = to_dense(b).rows
            for p, u in enumerate(c):
                for q, v in enumerate(c):
                    if A.rows[u][v] != B[p][q]:
                        iso_ok = False
                        iso_detail = f"component {i}: A[{u}][{v}] != block[{p}][{q}]"
                        break
                if not iso_ok:
                    break
            if not iso_ok:
                break
    else:
        iso_detail = "skipped: partition or block sizes invalid"
    rep.add("rank-labeling isomorphism", iso_ok, iso_detail)

    if kind == "toeplitz":
        chain_ok, chain_detail = partition_ok and sizes_ok, ""
        if not chain_ok:
            chain_detail = "skipped: partition or block sizes invalid"
        maxima = [c[-1] for c in comps] if chain_ok else []
        if chain_ok and maxima != sorted(maxima):
            chain_ok, chain_detail = False, "components not ordered by maximum vertex"
        if chain_ok:
            dense = [to_dense(b) for b in blocks]
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    shift = maxima[j] - maxima[i]
                    rank = {v: r for r, v in enumerate(comps[j])}
                    if any(v + shift not in rank for v in comps[i]):
                        chain_ok, chain_detail = False, f"component {i} shifted by {shift} leaves component {j}"
                        break
                    idx = [rank[v + shift] for v in comps[i]]
                    S, L = dense[i].rows, dense[j].rows
                    if any(L[idx[p]][idx[q]] != S[p][q] for p in range(len(idx)) for q in range(len(idx))):
                        chain_ok, chain_detail = False, f"block {i} is not a principal submatrix of block {j}"
                        break
                if not chain_ok:
                    break
        rep.add("chain certificates", chain_ok, chain_detail)
    return rep


def random_instance(kind: str, n: int, density: float, weights=(-9, 9), seed=None):
    """Seeded random spec.

    Every symbol is independently nonzero with probability ``density`` and
    then drawn uniformly from the nonzero integers in the inclusive range
    ``weights = (lo, hi)``.
    """
    if kind not in ("toeplitz", "hankel"):
        raise BadParams(f"unknown kind {kind!r}")
    if not isinstance(n, int) or n < 1:
        raise BadParams(f"order must be a positive integer, got {n!r}")
    if not 0.0 <= density <= 1.0:
        raise BadParams(f"density must lie in [0, 1], got {density!r}")
    lo, hi = weights
    values = [w for w in range(lo, hi + 1) if w != 0]
    if not values:
        raise BadParams(f"no nonzero integers in [{lo}, {hi}]")
    rng = random.Random(seed)
    length = n if kind == "toeplitz" else 2 * n - 1
    symbols = tuple(rng.choice(values) if rng.random() < density else 0 for _ in range(length))
    return ToeplitzSpec(symbols) if kind == "toeplitz" else HankelSpec(symbols)
