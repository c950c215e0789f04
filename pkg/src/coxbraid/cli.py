"""Command-line interface.

    coxeter parse <graph.json>
    coxeter analyze <graph.json> --word 1,2,1
    coxeter enumerate <graph.json> --max-len L --format tsv|json
    coxeter classify <graph.json>
    coxeter probe <graph.json> --max-len L
    coxeter verify <graph.json> --max-len L [--budget N]

Words are comma-separated vertex identifiers.  Exit codes: 0 success or
all checks passed, 1 check failure, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    BudgetExceededError,
    CoxeterGraph,
    DEFAULT_ELEMENT_BUDGET,
    GraphError,
    Word,
    element_of,
    enumerate_elements,
    graph_to_json,
    parse_graph,
)
from .words import commutation_classes, is_fully_commutative
from .inversions import (
    contractible_triples,
    inversion_triples,
    is_freely_braided,
    root_sequence,
)
from .signature import (
    _signatures_by_class,
    signature_injective,
    signature_surjective,
)
from .analysis import classify_graph, growth_probe, verify_suite


def _load_graph(path: str) -> CoxeterGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _parse_word(text: str) -> Word:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _cmd_parse(args: argparse.Namespace) -> int:
    print(graph_to_json(_load_graph(args.graph)))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    word = _parse_word(args.word)
    e = element_of(g, word)
    doc: dict = {
        "word": list(word),
        "length": e.length,
        "reduced": e.length == len(word),
    }
    if doc["reduced"]:
        contractible = contractible_triples(g, e, args.budget)
        classes = commutation_classes(g, e, args.budget)
        doc.update(
            {
                "element": [list(row) for row in e.rows()],
                "root_sequence": [list(r) for r in root_sequence(g, word).roots],
                "inversion_triples": [
                    {
                        "roots": [list(r) for r in t],
                        "contractible": t in contractible,
                    }
                    for t in sorted(inversion_triples(g, e))
                ],
                "contractible_count": len(contractible),
                "freely_braided": is_freely_braided(g, e, args.budget),
                "fully_commutative": is_fully_commutative(g, e, args.budget),
                "commutation_classes": {
                    "count": len(classes),
                    "representatives": [list(w) for w in classes.representatives],
                    "classes": [[list(w) for w in cls] for cls in classes.classes],
                },
                "signature_image": [
                    {"class": list(cls[0]), "signature": sig.to_json()}
                    for cls, sig in zip(
                        classes.classes, _signatures_by_class(g, e, cap=args.budget)
                    )
                ],
                "signature_injective": signature_injective(g, e, cap=args.budget),
                "signature_surjective": signature_surjective(g, e, cap=args.budget),
            }
        )
    print(json.dumps(doc, sort_keys=True))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    layers = enumerate_elements(g, args.max_len, args.budget)
    if args.format == "tsv":
        for length in sorted(layers):
            for e in layers[length]:
                matrix = json.dumps([list(row) for row in e.rows()], separators=(",", ":"))
                print(f"{length}\t{matrix}")
    else:
        doc = {
            "max_len": args.max_len,
            "layers": [
                {
                    "length": length,
                    "count": len(layers[length]),
                    "elements": [[list(row) for row in e.rows()] for e in layers[length]],
                }
                for length in sorted(layers)
            ],
        }
        print(json.dumps(doc, sort_keys=True))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    result = classify_graph(_load_graph(args.graph))
    doc = {
        "components": [c.name for c in result.components],
        "verdict": result.verdict,
    }
    print(json.dumps(doc, sort_keys=True))
    return 0


def _cmd_probe(args: argparse.Namespace) -> int:
    table = growth_probe(
        _load_graph(args.graph), args.max_len, args.budget, args.budget
    )
    print("length\telements\tfully_commutative\tfreely_braided")
    for row in table.rows:
        print(f"{row.length}\t{row.elements}\t{row.fully_commutative}\t{row.freely_braided}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_suite(
        _load_graph(args.graph), args.max_len, args.budget, args.budget
    )
    print(report.render())
    if not report.passed:
        return 3 if report.budget_exceeded and all(
            r.status != "FAIL" for r in report.results
        ) else 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeter",
        description="Word and root-sequence combinatorics of simply laced Coxeter groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="path to a JSON graph document")
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_ELEMENT_BUDGET,
            help="element and per-element word budget (default 10^6)",
        )

    p = sub.add_parser("parse", help="validate and echo the graph document")
    common(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("analyze", help="full report on one word")
    common(p)
    p.add_argument("--word", required=True, help="comma-separated vertex identifiers")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("enumerate", help="list elements by length")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="component types and finiteness verdict")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("probe", help="growth table of element/FC/freely-braided counts")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("verify", help="run the verification suite")
    common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
