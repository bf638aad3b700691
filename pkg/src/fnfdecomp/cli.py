"""Command-line front end.

Subcommands: ``analyze``, ``verify``, ``generate``, ``from-dense``. Data goes
to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 parse/parameter error,
2 dense input with no recognizable structure, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as fio
from .core import FNFError, to_dense
from .decompose import frobenius_normal_form
from .oracle import BadParams, random_instance, verify_decomposition
from .order import BadIndexSet, certify, check_principal_submatrix

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_STRUCTURE = 2
EXIT_VERIFY = 3


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_spec(args):
    text = _read(args.input)
    if args.dense:
        return fio.instance_from_dense(fio.read_dense_csv(text)).to_spec()
    return fio.read_instance(text).to_spec()


def format_text(d, certs=None) -> str:
    kind = d.kind
    tag = "T" if kind == "toeplitz" else "H"
    labels = fio.paper_labels(kind, [list(c) for c in d.components])
    lines = [f"kind: {kind}", f"order: {d.n}", f"blocks: {len(d.blocks)}"]
    lines.append("sigma: " + " ".join(f"{v}->{s}" for v, s in enumerate(d.sigma)))
    for i, (c, lab, b) in enumerate(zip(d.components, labels, d.blocks)):
        lines.append(
            f"  block {i}: {tag}[{','.join(map(str, b.symbols))}]"
            f"  vertices {list(c)}  (conventional labels {lab})"
        )
    if certs:
        if kind == "toeplitz":
            for c in certs["chain"]:
                lines.append(f"  embed block {c['source']} -> block {c['target']} by shift {c['shift']}")
            for s in certs["principal_submatrices"]:
                lines.append(f"  block {s['small']} = block {s['large']} at rows/cols {s['index_set']}")
            conv = certs["converse"]
            if conv["holds"]:
                lines.append("  converse: holds")
            else:
                pairs = ", ".join(f"block {i} inside earlier block {j}" for i, j in conv["violations"])
                lines.append(f"  converse: FAILS for equal blocks ({pairs})")
        else:
            w = certs["hankel_witness"]
            if w is None:
                lines.append("  hankel witness: none found")
            else:
                lines.append(
                    f"  hankel witness: blocks {w['first']} and {w['second']} have no principal-submatrix relation ({w['reason']})"
                )
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    spec = _load_spec(args)
    d = frobenius_normal_form(spec)
    certs = certify(d) if args.certify else None
    if args.format == "text":
        sys.stdout.write(format_text(d, certs))
    else:
        sys.stdout.write(fio.write_decomposition(d, certs))
    return EXIT_OK


def _check_document_certificates(report, doc) -> None:
    certs = doc.certificates or {}
    subs = certs.get("principal_submatrices")
    if not subs:
        return
    dense = [to_dense(b) for b in doc.blocks]
    ok, detail = True, ""
    for s in subs:
        try:
            good = check_principal_submatrix(dense[s["small"]], dense[s["large"]], s["index_set"])
        except (BadIndexSet, KeyError, IndexError, TypeError) as exc:
            good, detail = False, f"malformed certificate {s!r}: {exc}"
        if not good:
            ok = False
            detail = detail or f"block {s['small']} not found in block {s['large']} at {s['index_set']}"
            break
    report.add("document certificates", ok, detail)


def cmd_verify(args) -> int:
    inst = fio.read_instance(_read(args.instance))
    doc = fio.read_decomposition(_read(args.decomposition))
    spec = inst.to_spec()
    report = verify_decomposition(spec, doc)
    if doc.n != spec.n:
        report.add("order", False, f"decomposition has n={doc.n}, instance has n={spec.n}")
    _check_document_certificates(report, doc)
    if args.format == "json":
        sys.stdout.write(json.dumps(report.as_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.format() + "\n")
    if not report.passed:
        print("verification failed: " + ", ".join(report.failed()), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _parse_weights(text: str):
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return int(lo), int(hi)
        w = int(text)
        return w, w
    except ValueError as exc:
        raise BadParams(f"--weights expects N or LO:HI, got {text!r}") from exc


def cmd_generate(args) -> int:
    spec = random_instance(args.kind, args.n, args.density, _parse_weights(args.weights), args.seed)
    doc = fio.InstanceDocument.from_spec(spec, name=args.name, seed=args.seed)
    sys.stdout.write(fio.write_instance(doc))
    return EXIT_OK


def cmd_from_dense(args) -> int:
    doc = fio.instance_from_dense(fio.read_dense_csv(_read(args.input)), name=args.name)
    sys.stdout.write(fio.write_instance(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fnfdecomp",
        description="Frobenius normal forms of symmetric Toeplitz and Hankel matrices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="decompose an instance")
    a.add_argument("input", nargs="?", help="instance JSON (or CSV with --dense); default stdin")
    a.add_argument("--dense", action="store_true", help="input is a dense CSV matrix")
    a.add_argument("--certify", action="store_true", help="emit chain / principal-submatrix certificates")
    a.add_argument("--format", choices=["json", "text"], default="json")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="check a decomposition against its instance")
    v.add_argument("instance")
    v.add_argument("decomposition", nargs="?", default="-", help="decomposition JSON; default stdin")
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="seeded random instance")
    g.add_argument("kind", choices=["toeplitz", "hankel"])
    g.add_argument("n", type=int)
    g.add_argument("density", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weights", default="-9:9", help="N or LO:HI (nonzero integers drawn uniformly)")
    g.add_argument("--name")
    g.set_defaults(func=cmd_generate)

    f = sub.add_parser("from-dense", help="convert a dense CSV matrix to an instance document")
    f.add_argument("input", nargs="?")
    f.add_argument("--name")
    f.set_defaults(func=cmd_from_dense)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except fio.StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except (FNFError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
