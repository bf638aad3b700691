"""Exact weights, symmetric Toeplitz / Hankel specs and dense matrices.

Weights are exact rationals. Integral values are stored as ``int`` and the
rest as :class:`fractions.Fraction`, so comparisons are exact and the common
integer case stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Weight = Union[int, Fraction]


class FNFError(Exception):
    """Base class for every error raised by this package."""


class EmptyRow(FNFError):
    pass


class BadLength(FNFError):
    pass


class BadWeight(FNFError, TypeError):
    pass


class SizeMismatch(FNFError):
    pass


class InvariantError(FNFError, AssertionError):
    """An internal invariant failed; this is a bug, not bad input."""


def to_weight(value) -> Weight:
    """Coerce ``value`` to an exact weight.

    Accepts ints, Fractions, Decimals and strings such as ``"-3/2"``, ``"8"``
    or ``"0.25"``. Binary floats and bools are rejected.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise BadWeight(f"weights must be exact, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadWeight(f"not a rational number: {value!r}") from exc
    elif isinstance(value, Decimal):
        value = Fraction(value)
    elif isinstance(value, Rational):
        value = Fraction(value.numerator, value.denominator)
    else:
        raise BadWeight(f"unsupported weight type {type(value).__name__}")
    if value.denominator == 1:
        return int(value.numerator)
    return value


def format_weight(w: Weight) -> str:
    return str(w)


@dataclass(frozen=True)
class ToeplitzSpec:
    """First row ``a_0..a_{n-1}`` of a symmetric Toeplitz matrix."""

    row: tuple

    @property
    def n(self) -> int:
        return len(self.row)

    @property
    def symbols(self) -> tuple:
        return self.row

    @property
    def support(self) -> frozenset:
        """Indices of the nonzero symbols (the set of realized distances)."""
        return frozenset(i for i, a in enumerate(self.row) if a != 0)

    def weight(self, u: int, v: int) -> Weight:
        return self.row[abs(u - v)]

    def __str__(self) -> str:
        return "T[" + ",".join(map(str, self.row)) + "]"


@dataclass(frozen=True)
class HankelSpec:
    """Anti-diagonal values ``a_0..a_{2n-2}`` of a Hankel matrix."""

    antidiag: tuple

    @property
    def n(self) -> int:
        return (len(self.antidiag) + 1) // 2

    @property
    def symbols(self) -> tuple:
        return self.antidiag

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, a in enumerate(self.antidiag) if a != 0)

    def weight(self, u: int, v: int) -> Weight:
        return self.antidiag[u + v]

    def __str__(self) -> str:
        return "H[" + ",".join(map(str, self.antidiag)) + "]"


Spec = Union[ToeplitzSpec, HankelSpec]


def kind_of(spec: Spec) -> str:
    if isinstance(spec, ToeplitzSpec):
        return "toeplitz"
    if isinstance(spec, HankelSpec):
        return "hankel"
    raise TypeError(f"not a spec: {spec!r}")


@dataclass(frozen=True)
class DenseMatrix:
    """Square matrix of exact weights stored row-major as nested tuples."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise SizeMismatch(f"matrix is not square: row of length {len(r)} in order {n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "DenseMatrix":
        return cls(tuple(tuple(to_weight(x) for x in r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "DenseMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def is_symmetric(self) -> bool:
        rows = self.rows
        n = len(rows)
        return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))

    def submatrix(self, index_set: Sequence[int]) -> "DenseMatrix":
        rows = self.rows
        return DenseMatrix(tuple(tuple(rows[p][q] for q in index_set) for p in index_set))

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def validate_toeplitz_spec(row: Iterable) -> ToeplitzSpec:
    row = tuple(to_weight(a) for a in row)
    if not row:
        raise EmptyRow("a Toeplitz first row needs at least one entry")
    return ToeplitzSpec(row)


def validate_hankel_spec(antidiag: Iterable) -> HankelSpec:
    antidiag = tuple(to_weight(a) for a in antidiag)
    if len(antidiag) % 2 == 0:
        raise BadLength(f"Hankel symbol sequence must have odd length 2n-1, got {len(antidiag)}")
    return HankelSpec(antidiag)


def toeplitz_to_dense(spec: ToeplitzSpec) -> DenseMatrix:
    a = spec.row
    n = len(a)
    return DenseMatrix(tuple(tuple(a[abs(i - j)] for j in range(n)) for i in range(n)))


def hankel_to_dense(spec: HankelSpec) -> DenseMatrix:
    a = spec.antidiag
    n = spec.n
    return DenseMatrix(tuple(tuple(a[i + j] for j in range(n)) for i in range(n)))


def to_dense(spec: Spec) -> DenseMatrix:
    if isinstance(spec, ToeplitzSpec):
        return toeplitz_to_dense(spec)
    return hankel_to_dense(spec)


def direct_sum(blocks: Sequence[DenseMatrix]) -> DenseMatrix:
    n = sum(b.n for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            out[off + i][off:off + b.n] = r
        off += b.n
    return DenseMatrix(tuple(map(tuple, out)))


def toeplitz_violation(m: DenseMatrix):
    """First cell breaking symmetric Toeplitz structure, or None.

    Returns ``(i, j, reason)`` with 0-based indices.
    """
    rows = m.rows
    n = len(rows)
    for i in range(n):
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                return (i, j, f"m[{i}][{j}] != m[{j}][{i}]")
            if i + 1 < n and j + 1 < n and rows[i][j] != rows[i + 1][j + 1]:
                return (i, j, f"m[{i}][{j}] != m[{i + 1}][{j + 1}]")
    return None


def hankel_violation(m: DenseMatrix):
    rows = m.rows
    n = len(rows)
    for i in range(n - 1):
        for j in range(n - 1):
            if rows[i + 1][j] != rows[i][j + 1]:
                return (i, j, f"m[{i + 1}][{j}] != m[{i}][{j + 1}]")
    return None


def detect_structure(m: DenseMatrix):
    """Classify a dense matrix.

    Returns a :class:`ToeplitzSpec` or :class:`HankelSpec` that reproduces
    ``m`` exactly, or None when ``m`` is neither. A matrix with both
    structures (all-zero, constant) is reported as symmetric Toeplitz.
    """
    n = m.n
    if n == 0:
        return None
    if toeplitz_violation(m) is None:
        return ToeplitzSpec(tuple(m.rows[0]))
    if hankel_violation(m) is None:
        return HankelSpec(tuple(m.rows[0]) + tuple(m.rows[i][n - 1] for i in range(1, n)))
    return None
