"""Command-line surface: document formats, conversions, operators, graphs.

Documents are single JSON objects with a mandatory ``format``/``version``
header; unknown fields are rejected and emission is canonical, so parsing
an emitted document returns it byte for byte.

Exit codes: 0 success, 2 parse error, 3 invariant violation, 4 operator
annihilation (a legitimate result, kept distinct so scripts can branch),
1 verification-suite failure or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import abacus as ab
from . import heisenberg, kashiwara, verify
from .core import ChargedMultipartition, as_partition, content

FORMAT = "fock-doc"
GRAPH_FORMAT = "fock-graph"
VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_ANNIHILATED = 4


class ParseError(Exception):
    pass


class InvariantError(Exception):
    pass


# ---------------------------------------------------------------------------
# documents


def _require(doc: dict, field: str, typ) -> object:
    if field not in doc:
        raise ParseError(f"missing field {field!r}")
    value = doc[field]
    if typ is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise ParseError(f"field {field!r} must be an integer")
    if typ is list and not isinstance(value, list):
        raise ParseError(f"field {field!r} must be a list")
    return value


def _check_header(doc: dict, kinds: tuple[str, ...]) -> str:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"field 'format' must be {FORMAT!r}")
    if doc.get("version") != VERSION:
        raise ParseError(f"field 'version' must be {VERSION}")
    kind = doc.get("kind")
    if kind not in kinds:
        raise ParseError(f"field 'kind' must be one of {kinds}")
    return kind


_MP_FIELDS = {"format", "version", "kind", "e", "l", "charges", "components"}
_AB_FIELDS = {"format", "version", "kind", "runners", "tail_bound", "beads"}


def parse_multipartition(doc: dict) -> ChargedMultipartition:
    _check_header(doc, ("multipartition",))
    unknown = set(doc) - _MP_FIELDS
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    e = _require(doc, "e", int)
    level = _require(doc, "l", int)
    charges = _require(doc, "charges", list)
    components = _require(doc, "components", list)
    if not all(isinstance(c, int) and not isinstance(c, bool) for c in charges):
        raise ParseError("field 'charges' must hold integers")
    if not all(
        isinstance(comp, list)
        and all(isinstance(p, int) and not isinstance(p, bool) for p in comp)
        for comp in components
    ):
        raise ParseError("field 'components' must hold lists of integers")
    if len(charges) != level or len(components) != level:
        raise InvariantError(
            "invariant 'l = len(charges) = len(components)' violated"
        )
    try:
        return ChargedMultipartition(
            tuple(as_partition(c) for c in components), tuple(charges), e
        )
    except ValueError as exc:
        raise InvariantError(f"invariant violated: {exc}") from exc


def emit_multipartition(cmp: ChargedMultipartition) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": "multipartition",
        "e": cmp.e,
        "l": cmp.level,
        "charges": list(cmp.charges),
        "components": [list(c) for c in cmp.components],
    }


def parse_abacus(doc: dict) -> ab.Abacus:
    _check_header(doc, ("abacus",))
    unknown = set(doc) - _AB_FIELDS
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    runners = _require(doc, "runners", int)
    tail = _require(doc, "tail_bound", int)
    beads = _require(doc, "beads", list)
    pairs = []
    for item in beads:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise ParseError("field 'beads' must hold [runner, position] pairs")
        pairs.append((item[0], item[1]))
    try:
        return ab.make_abacus(runners, pairs, tail)
    except ValueError as exc:
        raise InvariantError(f"invariant violated: {exc}") from exc


def emit_abacus(a: ab.Abacus) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": "abacus",
        "runners": a.runners,
        "tail_bound": a.tail_bound,
        "beads": sorted([j, d] for (j, d) in a.beads),
    }


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    return doc


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True)


def _load_multipartition(args) -> ChargedMultipartition:
    doc = parse_document(_read_input(args.input))
    kind = _check_header(doc, ("multipartition", "abacus"))
    if kind == "multipartition":
        return parse_multipartition(doc)
    if args.e is None:
        raise ParseError("an abacus document needs --e to become a multipartition")
    a = parse_abacus(doc)
    if a.runners == 1:
        # a level-one abacus unfolds through tau, which needs the level too
        if args.l is None:
            raise ParseError("a 1-runner abacus needs --l to unfold through tau")
        a = ab.tau_map(a, args.e, args.l)
    return ab.from_abacus(a, args.e)


# ---------------------------------------------------------------------------
# subcommands


def cmd_convert(args) -> int:
    doc = parse_document(_read_input(args.input))
    kind = _check_header(doc, ("multipartition", "abacus"))
    if args.to == "multipartition":
        cmp = _load_multipartition(args)
        _write_output(args.output, dump(emit_multipartition(cmp)))
        return EXIT_OK
    if args.to == "abacus":
        cmp = _load_multipartition(args)
        _write_output(args.output, dump(emit_abacus(ab.to_abacus(cmp))))
        return EXIT_OK
    if args.to == "level1":
        if kind == "multipartition":
            cmp = parse_multipartition(doc)
            e, level = cmp.e, cmp.level
            a = ab.to_abacus(cmp)
        else:
            a = parse_abacus(doc)
            if a.runners == 1:
                _write_output(args.output, dump(emit_abacus(a)))
                return EXIT_OK
            e, level = args.e, a.runners
            if e is None:
                raise ParseError("converting an abacus to level1 needs --e")
        _write_output(args.output, dump(emit_abacus(ab.tau_inverse_map(a, e, level))))
        return EXIT_OK
    if args.to == "dual":
        cmp = _load_multipartition(args)
        _write_output(
            args.output, dump(emit_multipartition(ab.level_rank_dual(cmp)))
        )
        return EXIT_OK
    raise ParseError(f"unknown conversion target {args.to!r}")


def _parse_opspec(spec: str):
    if ":" not in spec:
        raise ParseError(f"malformed operator spec {spec!r}; expected name:arg")
    name, _, arg = spec.partition(":")
    if name in ("f", "e", "df", "de", "b1", "bm1"):
        try:
            value = int(arg)
        except ValueError:
            raise ParseError(f"operator {name!r} needs one integer argument")
        return name, value
    if name in ("b", "binv"):
        if arg.strip() == "":
            return name, ()
        try:
            parts = tuple(int(p) for p in arg.split(","))
        except ValueError:
            raise ParseError(f"operator {name!r} needs a comma-separated part list")
        try:
            return name, as_partition(parts)
        except ValueError as exc:
            raise ParseError(f"operator {name!r}: {exc}")
    raise ParseError(f"unknown operator {name!r}")


def cmd_apply(args) -> int:
    cmp = _load_multipartition(args)
    name, arg = _parse_opspec(args.op)
    if name in ("f", "e") and not 0 <= arg < cmp.e:
        raise InvariantError(f"residue {arg} out of range 0..{cmp.e - 1}")
    if name in ("df", "de") and not 0 <= arg < cmp.level:
        raise InvariantError(f"dual residue {arg} out of range 0..{cmp.level - 1}")
    result = {
        "f": lambda: kashiwara.f_tilde(cmp, arg),
        "e": lambda: kashiwara.e_tilde(cmp, arg),
        "df": lambda: kashiwara.dual_f_tilde(cmp, arg),
        "de": lambda: kashiwara.dual_e_tilde(cmp, arg),
        "b": lambda: heisenberg.tc(cmp, arg),
        "binv": lambda: heisenberg.b_minus(cmp, arg),
        "b1": lambda: heisenberg.b_one(cmp, arg),
        "bm1": lambda: heisenberg.b_minus_one(cmp, arg),
    }[name]()
    if result is None:
        _write_output(
            args.output,
            dump({"format": FORMAT, "version": VERSION, "kind": "annihilated"}),
        )
        return EXIT_ANNIHILATED
    _write_output(args.output, dump(emit_multipartition(result)))
    return EXIT_OK


def _render_node(cmp: ChargedMultipartition) -> str:
    comps = "|".join(",".join(map(str, lam)) if lam else "-" for lam in cmp.components)
    charges = ",".join(map(str, cmp.charges))
    return f"[{comps};{charges}]"


def _graph_data(args, cmp: ChargedMultipartition):
    if args.type in ("ue", "ul"):
        graph = kashiwara.crystal_graph(cmp, args.type, args.depth)
        return graph.nodes, [(e.source, e.target, e.label) for e in graph.edges]
    if args.type == "h":
        if not heisenberg.is_h_hw(cmp):
            raise InvariantError(
                "seed is not a Heisenberg highest weight vertex; run the kappa "
                "command to locate the root of its component"
            )
        graph = heisenberg.h_crystal_component(cmp, args.depth)
        return graph.nodes, graph.edges
    raise ParseError(f"unknown graph type {args.type!r}")


def cmd_graph(args) -> int:
    cmp = _load_multipartition(args)
    nodes, edges = _graph_data(args, cmp)
    index = {node: i for i, node in enumerate(nodes)}
    edges = sorted(
        ((index[s], index[t], label) for (s, t, label) in edges),
        key=lambda e: (e[0], e[2], e[1]),
    )
    if args.format == "json":
        doc = {
            "format": GRAPH_FORMAT,
            "version": VERSION,
            "type": args.type,
            "nodes": [emit_multipartition(n) for n in nodes],
            "edges": [list(e) for e in edges],
        }
        _write_output(args.output, dump(doc))
        return EXIT_OK
    lines = [f'digraph "{args.type}-crystal" {{']
    for node in nodes:
        name = _render_node(node)
        lines.append(f'  "{name}" [label="{name}"];')
    for (si, ti, label) in edges:
        src, tgt = _render_node(nodes[si]), _render_node(nodes[ti])
        lines.append(f'  "{src}" -> "{tgt}" [label="{label}"];')
    lines.append("}")
    _write_output(args.output, "\n".join(lines))
    return EXIT_OK


def cmd_kappa(args) -> int:
    cmp = _load_multipartition(args)
    result = heisenberg.kappa(cmp)
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": "kappa",
        "kappa": list(result.kappa),
        "doubly_highest_weight": emit_multipartition(result.doubly_hw),
    }
    _write_output(args.output, dump(doc))
    return EXIT_OK


def cmd_hw(args) -> int:
    cmp = _load_multipartition(args)
    if args.algebra in ("ue", "ul"):
        answer = kashiwara.is_hw(cmp, args.algebra)
    elif args.algebra == "h":
        answer = heisenberg.is_h_hw(cmp)
    else:  # double
        answer = kashiwara.is_hw(cmp, "ue") and kashiwara.is_hw(cmp, "ul")
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": "highest-weight",
        "algebra": args.algebra,
        "is_highest_weight": answer,
    }
    _write_output(args.output, dump(doc))
    return EXIT_OK


def cmd_strips(args) -> int:
    cmp = _load_multipartition(args)
    if args.count < 1:
        raise InvariantError("--count must be at least 1")
    strips = heisenberg.good_strips(cmp, args.count)
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": "strips",
        "strips": [
            {
                "boxes": [[b.row, b.col, b.comp] for b in strip],
                "contents": [content(b, cmp) for b in strip],
            }
            for strip in strips
        ],
    }
    _write_output(args.output, dump(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify.run_suites(args.suite, args.bound)
    failed = 0
    for report in reports:
        good, bad = report.counts
        failed += bad
        print(f"suite {report.suite} (bound {report.bound}): {good} passed, {bad} failed")
        for result in report.results:
            status = "PASS" if result.passed else "FAIL"
            detail = f" ({result.detail})" if result.detail else ""
            print(f"  [{status}] {result.name}{detail}")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockcrystals",
        description="Combinatorics of higher-level Fock spaces: abaci, "
        "Kashiwara crystals, and the Heisenberg crystal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p, output=True):
        p.add_argument("--input", default="-", help="input document path or - for stdin")
        if output:
            p.add_argument(
                "--output", default="-", help="output document path or - for stdout"
            )
        p.add_argument("--e", type=int, default=None, help="modulus for abacus inputs")
        p.add_argument("--l", type=int, default=None, help="level override (rarely needed)")

    p = sub.add_parser("convert", help="convert between document representations")
    p.add_argument("--to", required=True, choices=["multipartition", "abacus", "level1", "dual"])
    io_args(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("apply", help="apply one crystal operator")
    p.add_argument(
        "--op",
        required=True,
        help="operator spec: f:i | e:i | df:j | de:j | b:parts | binv:parts | b1:c | bm1:d",
    )
    io_args(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("graph", help="generate a crystal graph from a seed")
    p.add_argument("--type", required=True, choices=["ue", "ul", "h"])
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--format", default="json", choices=["dot", "json"])
    io_args(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("kappa", help="depth partition and doubly highest weight vertex")
    io_args(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("hw", help="test highest weight for a chosen algebra")
    p.add_argument("--algebra", required=True, choices=["ue", "ul", "h", "double"])
    io_args(p)
    p.set_defaults(func=cmd_hw)

    p = sub.add_parser("strips", help="list the first k good vertical strips")
    p.add_argument("--count", type=int, required=True)
    io_args(p)
    p.set_defaults(func=cmd_strips)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", default="all", choices=["identities", "crystals", "all"])
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except heisenberg.CrystalConsistencyError as exc:  # pragma: no cover
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
