"""JSON instance / decomposition documents and dense CSV input.

Weights travel as exact rational strings (``"-3/2"``, ``"8"``); JSON numbers
are accepted on input but never produced.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
from dataclasses import dataclass
from typing import Optional

from .core import (
    BadWeight,
    DenseMatrix,
    FNFError,
    HankelSpec,
    ToeplitzSpec,
    detect_structure,
    format_weight,
    hankel_violation,
    kind_of,
    to_weight,
    toeplitz_violation,
)
from .graph import Component

KINDS = ("toeplitz", "hankel")


class ParseError(FNFError):
    pass


class ArityError(ParseError):
    pass


class StructureError(FNFError):
    """A dense matrix is neither symmetric Toeplitz nor Hankel."""


@dataclass(frozen=True)
class InstanceDocument:
    kind: str
    symbols: tuple
    name: Optional[str] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParseError(f"field 'kind': expected one of {KINDS}, got {self.kind!r}")
        _check_arity(self.kind, self.symbols, "symbols")

    @property
    def n(self) -> int:
        return len(self.symbols) if self.kind == "toeplitz" else (len(self.symbols) + 1) // 2

    def to_spec(self):
        if self.kind == "toeplitz":
            return ToeplitzSpec(tuple(self.symbols))
        return HankelSpec(tuple(self.symbols))

    @classmethod
    def from_spec(cls, spec, name=None, seed=None) -> "InstanceDocument":
        return cls(kind_of(spec), tuple(spec.symbols), name, seed)


@dataclass(frozen=True)
class DecompositionDocument:
    kind: str
    n: int
    sigma: tuple
    components: tuple
    blocks: tuple
    certificates: Optional[dict] = None

    @property
    def block_offsets(self) -> tuple:
        offs, acc = [], 0
        for c in self.components:
            offs.append(acc)
            acc += len(c)
        return tuple(offs)


def _check_arity(kind: str, symbols, where: str) -> None:
    if not symbols:
        raise ArityError(f"field '{where}': needs at least one symbol")
    if kind == "hankel" and len(symbols) % 2 == 0:
        raise ArityError(f"field '{where}': Hankel symbol count must be odd (2n-1), got {len(symbols)}")


def _loads(text: str):
    try:
        # keep decimal literals exact by parsing them as strings
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _parse_symbols(raw, where: str) -> tuple:
    if not isinstance(raw, list):
        raise ParseError(f"field '{where}': expected a list")
    out = []
    for i, x in enumerate(raw):
        if not isinstance(x, (str, int)) or isinstance(x, bool):
            raise ParseError(f"field '{where}[{i}]': expected a rational string, got {x!r}")
        try:
            out.append(to_weight(x))
        except BadWeight as exc:
            raise ParseError(f"field '{where}[{i}]': {exc}") from exc
    return tuple(out)


def _field(obj: dict, key: str, where: str = ""):
    if key not in obj:
        raise ParseError(f"missing field '{where}{key}'")
    return obj[key]


def _int_list(raw, where: str) -> tuple:
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise ParseError(f"field '{where}': expected a list of integers")
    return tuple(raw)


def instance_from_obj(obj) -> InstanceDocument:
    if not isinstance(obj, dict):
        raise ParseError("instance document must be a JSON object")
    kind = _field(obj, "kind")
    if kind not in KINDS:
        raise ParseError(f"field 'kind': expected one of {KINDS}, got {kind!r}")
    symbols = _parse_symbols(_field(obj, "symbols"), "symbols")
    _check_arity(kind, symbols, "symbols")
    meta = obj.get("metadata") or {}
    if not isinstance(meta, dict):
        raise ParseError("field 'metadata': expected an object")
    seed = meta.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise ParseError("field 'metadata.seed': expected an integer")
    return InstanceDocument(kind, symbols, meta.get("name"), seed)


def instance_to_obj(doc: InstanceDocument) -> dict:
    obj = {"kind": doc.kind, "symbols": [format_weight(w) for w in doc.symbols]}
    meta = {}
    if doc.name is not None:
        meta["name"] = doc.name
    if doc.seed is not None:
        meta["seed"] = doc.seed
    if meta:
        obj["metadata"] = meta
    return obj


def read_instance(text: str) -> InstanceDocument:
    return instance_from_obj(_loads(text))


def write_instance(doc: InstanceDocument) -> str:
    return json.dumps(instance_to_obj(doc), indent=2) + "\n"


def paper_labels(kind: str, comps) -> list:
    """Vertex labels in the conventional numbering: 1-based for Toeplitz."""
    shift = 1 if kind == "toeplitz" else 0
    return [[v + shift for v in c] for c in comps]


def decomposition_to_obj(d, certificates: Optional[dict] = None) -> dict:
    comps = [list(c) for c in d.components]
    obj = {
        "kind": d.kind,
        "n": d.n,
        "sigma": list(d.sigma),
        "block_offsets": list(d.block_offsets),
        "components": comps,
        "paper_components": paper_labels(d.kind, comps),
        "blocks": [[format_weight(w) for w in b.symbols] for b in d.blocks],
    }
    if certificates is None:
        certificates = getattr(d, "certificates", None)
    if certificates is not None:
        obj["certificates"] = certificates
    return obj


def write_decomposition(d, certificates: Optional[dict] = None) -> str:
    """Serialize a Decomposition (or DecompositionDocument) to JSON text."""
    return json.dumps(decomposition_to_obj(d, certificates), indent=2) + "\n"


def decomposition_from_obj(obj) -> DecompositionDocument:
    if not isinstance(obj, dict):
        raise ParseError("decomposition document must be a JSON object")
    kind = _field(obj, "kind")
    if kind not in KINDS:
        raise ParseError(f"field 'kind': expected one of {KINDS}, got {kind!r}")
    n = _field(obj, "n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("field 'n': expected a positive integer")
    sigma = _int_list(_field(obj, "sigma"), "sigma")
    raw_comps = _field(obj, "components")
    if not isinstance(raw_comps, list):
        raise ParseError("field 'components': expected a list")
    comps = []
    for i, c in enumerate(raw_comps):
        vs = _int_list(c, f"components[{i}]")
        try:
            comps.append(Component(vs))
        except ValueError as exc:
            raise ParseError(f"field 'components[{i}]': {exc}") from exc
    raw_blocks = _field(obj, "blocks")
    if not isinstance(raw_blocks, list):
        raise ParseError("field 'blocks': expected a list")
    blocks = []
    for i, b in enumerate(raw_blocks):
        syms = _parse_symbols(b, f"blocks[{i}]")
        _check_arity(kind, syms, f"blocks[{i}]")
        blocks.append(ToeplitzSpec(syms) if kind == "toeplitz" else HankelSpec(syms))
    certs = obj.get("certificates")
    if certs is not None and not isinstance(certs, dict):
        raise ParseError("field 'certificates': expected an object")
    return DecompositionDocument(kind, n, sigma, tuple(comps), tuple(blocks), certs)


def read_decomposition(text: str) -> DecompositionDocument:
    return decomposition_from_obj(_loads(text))


def read_dense_csv(text: str) -> DenseMatrix:
    rows = []
    for lineno, row in enumerate(csv.reader(_stdio.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        parsed = []
        for col, cell in enumerate(row):
            try:
                parsed.append(to_weight(cell))
            except BadWeight as exc:
                raise ParseError(f"line {lineno}, column {col + 1}: {exc}") from exc
        rows.append(tuple(parsed))
    if not rows:
        raise ParseError("empty matrix")
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ParseError(f"row {i + 1} has {len(r)} cells; a square matrix of order {n} needs {n}")
    return DenseMatrix(tuple(rows))


def write_dense_csv(m: DenseMatrix) -> str:
    return "".join(",".join(format_weight(w) for w in r) + "\n" for r in m.rows)


def instance_from_dense(m: DenseMatrix, name=None) -> InstanceDocument:
    """Read off the symbols of a structured dense matrix.

    Raises StructureError naming the first cell that breaks each recurrence.
    """
    spec = detect_structure(m)
    if spec is None:
        ti, tj, treason = toeplitz_violation(m)
        hi, hj, hreason = hankel_violation(m)
        raise StructureError(
            f"matrix is neither symmetric Toeplitz (first violation at row {ti}, col {tj}: {treason}) "
            f"nor Hankel (first violation at row {hi}, col {hj}: {hreason})"
        )
    return InstanceDocument.from_spec(spec, name=name)
