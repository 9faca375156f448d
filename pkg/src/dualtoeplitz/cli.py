"""Deterministic command-line front end.

Subcommands:

- ``classify``       symbolic verdict for a symbol, with exact certificate
- ``matrix``         self-commutator form matrix or commutator restriction
                     matrix at a truncation order, JSON or CSV
- ``rank``           per-order rank table (recorded, never asserted stable)
- ``verify``         run the identity suites; exit 1 on any failure
- ``apply``          act on an element: complement-project symbol * element
- ``inner-product``  exact inner product of two elements

Reports are JSON documents with top-level keys {"command", "inputs",
"result", "diagnostics", "version"}, serialized with sorted keys and
canonical rational strings so identical invocations produce byte-identical
output.  Timing goes to stderr only.  Exit codes: 0 success / all checks
passed, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from ._backend import BACKEND_NAME
from .algebra import Element, inner_product
from .classify import (
    DEFAULT_ORDER_LIMIT,
    NotNormalCertificate,
    ZeroMatrixCertificate,
    classify_with_certificate,
)
from .engine import (
    apply,
    build_basis,
    commutator_matrix,
    commutator_range_gram,
    selfcomm_form_matrix,
)
from .linalg import HermitianForm, is_antisymmetric, psd_test, rank
from .matrix import ExactMatrix
from .symbols import (
    ParseError,
    format_element,
    format_rational,
    format_scalar,
    parse_symbol,
)
from .verify import SUITE_NAMES, run_suites

VERSION = "0.1.0"


class UsageError(Exception):
    """Bad flag combination or out-of-range argument (exit code 2)."""


def _element_payload(e: Element) -> dict:
    return {
        "text": format_element(e),
        "terms": [[mono.n, mono.m, format_scalar(c)] for mono, c in e.terms()],
    }


def _matrix_entries(a: ExactMatrix) -> list[list[str]]:
    return [[format_scalar(a[i, j]) for j in range(a.cols)] for i in range(a.rows)]


def _certificate_payload(cert) -> dict | None:
    if cert is None:
        return None
    if isinstance(cert, NotNormalCertificate):
        return {
            "kind": "not-normal",
            "order": cert.order,
            "entry": list(cert.entry),
            "entry_pairs": [list(cert.entry_pairs[0]), list(cert.entry_pairs[1])],
            "witness": _element_payload(cert.witness),
            "value": format_rational(cert.value),
        }
    if isinstance(cert, ZeroMatrixCertificate):
        return {"kind": "zero-through-order", "order": cert.order}
    raise TypeError(f"unknown certificate type {type(cert)!r}")


def _document(command: str, inputs: dict, result: dict, diagnostics: dict) -> str:
    doc = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics,
        "version": VERSION,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _parse(text: str) -> Element:
    return parse_symbol(text)


def _cmd_classify(args) -> tuple[str, int]:
    if args.n_max < 1:
        raise UsageError("--N-max must be >= 1")
    phi = _parse(args.symbol)
    verdict = classify_with_certificate(phi, args.n_max)
    result = {
        "status": verdict.status.value,
        "rule": verdict.rule,
        "certificate": _certificate_payload(verdict.certificate),
    }
    inputs = {"symbol": args.symbol, "N_max": args.n_max}
    diagnostics = {"backend": BACKEND_NAME, "canonical": format_element(phi)}
    return _document("classify", inputs, result, diagnostics), 0


def _psd_payload(a: ExactMatrix) -> dict:
    outcome = psd_test(HermitianForm(a))
    if outcome.is_psd:
        return {"is_psd": True, "rank": outcome.rank}
    return {
        "is_psd": False,
        "witness": [format_scalar(c) for c in outcome.witness],
        "value": format_rational(outcome.value),
    }


def _cmd_matrix(args) -> tuple[str, int]:
    if args.N < 1:
        raise UsageError("--N must be >= 1")
    phi = _parse(args.symbol)
    basis = build_basis(args.N)
    if args.kind == "selfcomm":
        if args.symbol2 is not None:
            raise UsageError("selfcomm takes a single symbol")
        a = selfcomm_form_matrix(phi, args.N)
        diagnostics = {
            "backend": BACKEND_NAME,
            "hermitian": True,
            "psd": _psd_payload(a),
            "rank": rank(a),
        }
        inputs = {"kind": args.kind, "symbol": args.symbol, "N": args.N}
    else:
        if args.symbol2 is None:
            raise UsageError("commutator kind needs --symbol2")
        psi = _parse(args.symbol2)
        a = commutator_matrix(phi, psi, args.N)
        r = rank(a)
        diagnostics = {
            "backend": BACKEND_NAME,
            "swap_antisymmetric": is_antisymmetric(a.permute_rows(basis.swap)),
            "rank": r,
            "rank_even": r % 2 == 0,
            "gram_rank": rank(commutator_range_gram(phi, psi, args.N)),
        }
        inputs = {
            "kind": args.kind,
            "symbol": args.symbol,
            "symbol2": args.symbol2,
            "N": args.N,
        }
    if args.format == "csv":
        return _matrix_csv(basis, a), 0
    result = {
        "order": args.N,
        "pairs": [list(p) for p in basis.pairs],
        "entries": _matrix_entries(a),
    }
    return _document("matrix", inputs, result, diagnostics), 0


def _matrix_csv(basis, a: ExactMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["n", "m"] + [f"e({n},{m})" for (n, m) in basis.pairs]
    writer.writerow(header)
    for i, (n, m) in enumerate(basis.pairs):
        writer.writerow([n, m] + [format_scalar(a[i, j]) for j in range(a.cols)])
    return buf.getvalue()


def _cmd_rank(args) -> tuple[str, int]:
    if args.n_max < 1:
        raise UsageError("--N-max must be >= 1")
    phi = _parse(args.symbol)
    table = []
    if args.symbol2 is None:
        for order in range(1, args.n_max + 1):
            table.append(
                {"N": order, "rank": rank(selfcomm_form_matrix(phi, order))}
            )
        inputs = {"symbol": args.symbol, "N_max": args.n_max}
    else:
        psi = _parse(args.symbol2)
        for order in range(1, args.n_max + 1):
            table.append(
                {
                    "N": order,
                    "rank": rank(commutator_matrix(phi, psi, order)),
                    "gram_rank": rank(commutator_range_gram(phi, psi, order)),
                }
            )
        inputs = {
            "symbol": args.symbol,
            "symbol2": args.symbol2,
            "N_max": args.n_max,
        }
    result = {"table": table}
    diagnostics = {"backend": BACKEND_NAME}
    return _document("rank", inputs, result, diagnostics), 0


def _cmd_verify(args) -> tuple[str, int]:
    reports = run_suites(args.suite, args.n_max)
    result = {
        "suites": [
            {
                "name": rep.name,
                "checks": rep.checks,
                "failures": rep.failures,
                "passed": rep.passed,
            }
            for rep in reports
        ],
        "passed": all(rep.passed for rep in reports),
    }
    inputs = {"suite": args.suite, "N_max": args.n_max}
    diagnostics = {"backend": BACKEND_NAME}
    code = 0 if result["passed"] else 1
    return _document("verify", inputs, result, diagnostics), code


def _cmd_apply(args) -> tuple[str, int]:
    phi = _parse(args.symbol)
    f = _parse(args.symbol2)
    result = {"element": _element_payload(apply(phi, f))}
    inputs = {"symbol": args.symbol, "symbol2": args.symbol2}
    diagnostics = {"backend": BACKEND_NAME}
    return _document("apply", inputs, result, diagnostics), 0


def _cmd_inner_product(args) -> tuple[str, int]:
    f = _parse(args.symbol)
    g = _parse(args.symbol2)
    result = {"value": format_scalar(inner_product(f, g))}
    inputs = {"symbol": args.symbol, "symbol2": args.symbol2}
    diagnostics = {"backend": BACKEND_NAME}
    return _document("inner-product", inputs, result, diagnostics), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualtoeplitz",
        description="Exact computations with dual Toeplitz operators on the "
        "orthogonal complement of the harmonic Bergman space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="symbolic normality verdict")
    p.add_argument("--symbol", required=True)
    p.add_argument("--N-max", dest="n_max", type=int, default=DEFAULT_ORDER_LIMIT)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("matrix", help="form or commutator matrix dump")
    p.add_argument("kind", choices=("selfcomm", "commutator"))
    p.add_argument("--symbol", required=True)
    p.add_argument("--symbol2")
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("rank", help="rank per truncation order")
    p.add_argument("--symbol", required=True)
    p.add_argument("--symbol2")
    p.add_argument("--N-max", dest="n_max", type=int, default=5)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument(
        "--suite", choices=SUITE_NAMES + ("all",), default="all"
    )
    p.add_argument("--N-max", dest="n_max", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("apply", help="complement-project symbol * element")
    p.add_argument("--symbol", required=True)
    p.add_argument("--symbol2", required=True, help="element acted on")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("inner-product", help="exact inner product")
    p.add_argument("--symbol", required=True)
    p.add_argument("--symbol2", required=True)
    p.set_defaults(func=_cmd_inner_product)

    for sp in sub.choices.values():
        sp.add_argument("--out", help="write the report to this file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload, code = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - started
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    print(f"timing: {args.command} took {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
