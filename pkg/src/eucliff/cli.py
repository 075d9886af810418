"""Expression CLI: evaluate algebra expressions for a fixed (dim, metric).

Grammar, loosest to tightest binding, all levels left-associative:

    + -            addition, subtraction
    .  <|  |>      scalar product, left contraction, right contraction
    ^              exterior product
    *              geometric product
    unary          leading -, rev(x), hat(x), bar(x), neg(x), grade(x, k)
    atoms          numbers, blades (e1, e12, ...), I, names, ( ... )

A number immediately followed by a blade symbol is a scaled blade
("2 e1"), which keeps rendered output re-parseable.  Any other
juxtaposition is a parse error: the geometric product always needs ``*``.
Numbers are decimal doubles, so "2e1" is the number 20.0; blade indices
are single digits (the canonical blade naming is only unambiguous through
e9).  A line "name = expr" binds a session variable and echoes the value.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .blades import (
    Multivector,
    blade_name,
    canonical_reorder,
    conjugate,
    format_multivector,
    format_number,
    grade_involution,
    k_part,
    pseudoscalar,
    reversion,
    sorted_masks,
)
from .clifford import cayley_table_for, geometric_product, left_contraction, right_contraction
from .errors import AlgebraError, MetricError
from .metric import EuclideanMetric, identity_metric, metric_from_json, scalar_product


class CliError(Exception):
    """Parse or evaluation failure, with a 1-based column when known."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column

    def render(self) -> str:
        if self.column is None:
            return f"error: {self}"
        return f"error: {self} (column {self.column})"


# -- lexer ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op><\||\|>|[-+^*.(),=])
    """,
    re.VERBOSE,
)

_KEYWORDS = frozenset({"rev", "hat", "bar", "neg", "grade"})
_BLADE_RE = re.compile(r"e[1-9]+\Z")


class _Token:
    __slots__ = ("kind", "text", "column")

    def __init__(self, kind: str, text: str, column: int):
        self.kind = kind  # "number" | "name" | the operator text | "end"
        self.text = text
        self.column = column


def _tokenize(line: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(line):
        m = _TOKEN_RE.match(line, pos)
        if m is None:
            raise CliError(f"unexpected character {line[pos]!r}", pos + 1)
        if m.lastgroup == "number":
            tokens.append(_Token("number", m.group(), pos + 1))
        elif m.lastgroup == "name":
            tokens.append(_Token("name", m.group(), pos + 1))
        elif m.lastgroup == "op":
            tokens.append(_Token(m.group(), m.group(), pos + 1))
        pos = m.end()
    tokens.append(_Token("end", "", len(line) + 1))
    return tokens


# -- syntax tree ---------------------------------------------------------


class _Node:
    __slots__ = ("column",)


class _Num(_Node):
    __slots__ = ("value",)

    def __init__(self, value: float, column: int):
        self.value = value
        self.column = column


class _Blade(_Node):
    __slots__ = ("mask", "sign")

    def __init__(self, mask: int, sign: int, column: int):
        self.mask = mask
        self.sign = sign
        self.column = column


class _Pseudo(_Node):
    __slots__ = ()

    def __init__(self, column: int):
        self.column = column


class _Var(_Node):
    __slots__ = ("name",)

    def __init__(self, name: str, column: int):
        self.name = name
        self.column = column


class _Unary(_Node):
    __slots__ = ("op", "child")

    def __init__(self, op: str, child: _Node, column: int):
        self.op = op
        self.child = child
        self.column = column


class _GradeSel(_Node):
    __slots__ = ("child", "k")

    def __init__(self, child: _Node, k: int, column: int):
        self.child = child
        self.k = k
        self.column = column


class _Binary(_Node):
    __slots__ = ("op", "left", "right")

    def __init__(self, op: str, left: _Node, right: _Node, column: int):
        self.op = op
        self.left = left
        self.right = right
        self.column = column


class _Assign(_Node):
    __slots__ = ("name", "expr")

    def __init__(self, name: str, expr: _Node, column: int):
        self.name = name
        self.expr = expr
        self.column = column


class _Parser:
    def __init__(self, tokens: list[_Token], dim: int):
        self.tokens = tokens
        self.pos = 0
        self.dim = dim

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise CliError(f"expected {what}", tok.column)
        return self.advance()

    def parse_line(self) -> _Node:
        # assignment: name "=" expr
        if (
            self.peek().kind == "name"
            and self.tokens[self.pos + 1].kind == "="
        ):
            name_tok = self.advance()
            if name_tok.text in _KEYWORDS or name_tok.text == "I" or _BLADE_RE.match(name_tok.text):
                raise CliError(f"cannot assign to reserved name {name_tok.text!r}", name_tok.column)
            eq = self.advance()
            node = _Assign(name_tok.text, self.parse_expr(), eq.column)
        else:
            node = self.parse_expr()
        end = self.peek()
        if end.kind != "end":
            if end.kind in ("number", "name"):
                raise CliError(
                    f"unexpected {end.text!r}: juxtaposition is not a product, use an explicit operator",
                    end.column,
                )
            raise CliError(f"unexpected {end.text!r}", end.column)
        return node

    def parse_expr(self) -> _Node:
        return self.parse_additive()

    def parse_additive(self) -> _Node:
        node = self.parse_contractive()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            node = _Binary(op.kind, node, self.parse_contractive(), op.column)
        return node

    def parse_contractive(self) -> _Node:
        node = self.parse_wedge()
        while self.peek().kind in (".", "<|", "|>"):
            op = self.advance()
            node = _Binary(op.kind, node, self.parse_wedge(), op.column)
        return node

    def parse_wedge(self) -> _Node:
        node = self.parse_geometric()
        while self.peek().kind == "^":
            op = self.advance()
            node = _Binary("^", node, self.parse_geometric(), op.column)
        return node

    def parse_geometric(self) -> _Node:
        node = self.parse_unary()
        while self.peek().kind == "*":
            op = self.advance()
            node = _Binary("*", node, self.parse_unary(), op.column)
        return node

    def parse_unary(self) -> _Node:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return _Unary("neg", self.parse_unary(), tok.column)
        return self.parse_primary()

    def _blade_node(self, tok: _Token) -> _Blade:
        indices = [int(ch) for ch in tok.text[1:]]
        for i in indices:
            if i > self.dim:
                raise CliError(f"blade index {i} exceeds dimension {self.dim}", tok.column)
        mask, sign = canonical_reorder(indices, self.dim)
        return _Blade(mask, sign, tok.column)

    def parse_primary(self) -> _Node:
        tok = self.advance()
        if tok.kind == "number":
            value = float(tok.text)
            nxt = self.peek()
            if nxt.kind == "name" and _BLADE_RE.match(nxt.text):
                blade = self._blade_node(self.advance())
                return _Binary("scale", _Num(value, tok.column), blade, tok.column)
            return _Num(value, tok.column)
        if tok.kind == "(":
            node = self.parse_expr()
            self.expect(")", "')'")
            return node
        if tok.kind == "name":
            if tok.text == "grade":
                self.expect("(", "'(' after grade")
                child = self.parse_expr()
                self.expect(",", "',' and a grade number")
                k_tok = self.expect("number", "a grade number")
                try:
                    k = int(k_tok.text)
                except ValueError:
                    raise CliError("grade must be an integer", k_tok.column) from None
                self.expect(")", "')'")
                return _GradeSel(child, k, tok.column)
            if tok.text in _KEYWORDS:
                self.expect("(", f"'(' after {tok.text}")
                child = self.parse_expr()
                self.expect(")", "')'")
                return _Unary(tok.text, child, tok.column)
            if tok.text == "I":
                return _Pseudo(tok.column)
            if _BLADE_RE.match(tok.text):
                return self._blade_node(tok)
            if tok.text.startswith("e") and tok.text[1:].isdigit():
                raise CliError(f"bad blade symbol {tok.text!r}: indices are digits 1-9", tok.column)
            return _Var(tok.text, tok.column)
        raise CliError(f"expected a value, found {tok.text!r}" if tok.kind != "end" else "unexpected end of input", tok.column)


def parse(line: str, dim: int) -> _Node:
    """Parse one input line for the given dimension."""
    return _Parser(_tokenize(line), dim).parse_line()


# -- evaluation ----------------------------------------------------------


class Session:
    """Evaluation context: a dimension, a metric, and named bindings."""

    def __init__(self, metric: EuclideanMetric):
        self.metric = metric
        self.dim = metric.dim
        self.bindings: dict[str, Multivector] = {}

    def _promote(self, value) -> Multivector:
        if isinstance(value, Multivector):
            return value
        return Multivector.scalar(self.dim, value)

    def evaluate(self, node: _Node):
        """Evaluate a parsed line to a float or a Multivector."""
        try:
            return self._eval(node)
        except AlgebraError as exc:
            raise CliError(str(exc), node.column) from exc

    def _eval(self, node: _Node):
        if isinstance(node, _Num):
            return node.value
        if isinstance(node, _Blade):
            if node.sign == 0:
                return Multivector.zero(self.dim)
            return Multivector.from_blade(self.dim, node.mask, float(node.sign))
        if isinstance(node, _Pseudo):
            return pseudoscalar(self.dim)
        if isinstance(node, _Var):
            value = self.bindings.get(node.name)
            if value is None:
                raise CliError(f"unknown symbol {node.name!r}", node.column)
            return value
        if isinstance(node, _Assign):
            value = self._promote(self._eval(node.expr))
            self.bindings[node.name] = value
            return value
        if isinstance(node, _GradeSel):
            value = self._promote(self._eval(node.child))
            try:
                return k_part(value, node.k)
            except AlgebraError as exc:
                raise CliError(str(exc), node.column) from exc
        if isinstance(node, _Unary):
            value = self._eval(node.child)
            if isinstance(value, float):
                # scalars: reversion and grade involution fix grade 0
                return -value if node.op == "neg" else value
            if node.op == "neg":
                return -value
            if node.op == "rev":
                return reversion(value)
            if node.op == "hat":
                return grade_involution(value)
            return conjugate(value)
        assert isinstance(node, _Binary)
        left = self._eval(node.left)
        right = self._eval(node.right)
        try:
            return self._apply(node.op, left, right)
        except AlgebraError as exc:
            raise CliError(str(exc), node.column) from exc

    def _apply(self, op: str, left, right):
        both_real = isinstance(left, float) and isinstance(right, float)
        if op == "+":
            return left + right if both_real else self._promote(left) + self._promote(right)
        if op == "-":
            return left - right if both_real else self._promote(left) - self._promote(right)
        if op == "scale":
            return right * left
        if op == "*":
            if both_real:
                return left * right
            if isinstance(left, float):
                return right * left
            if isinstance(right, float):
                return left * right
            return geometric_product(left, right, self.metric)
        if op == "^":
            if both_real:
                return left * right
            from .exterior import wedge

            return wedge(self._promote(left), self._promote(right))
        if op == ".":
            return scalar_product(self._promote(left), self._promote(right), self.metric)
        if op == "<|":
            return left_contraction(self._promote(left), self._promote(right), self.metric)
        assert op == "|>"
        return right_contraction(self._promote(left), self._promote(right), self.metric)


# -- output --------------------------------------------------------------


def render_text(value) -> str:
    if isinstance(value, float):
        return format_number(value)
    return format_multivector(value)


def _coefficient_object(x: Multivector) -> dict:
    out: dict[str, float] = {}
    for mask in sorted_masks(x.dim):
        c = float(x.coeffs[mask])
        if c != 0.0:
            out[blade_name(int(mask))] = c
    return out


def render_json(value) -> str:
    if isinstance(value, float):
        return json.dumps({"result": value})
    return json.dumps({"result": _coefficient_object(value)})


def _emit_table(metric: EuclideanMetric, stream) -> None:
    table = cayley_table_for(metric)
    for a in range(1 << metric.dim):
        for b in range(1 << metric.dim):
            row = {
                "a": blade_name(a),
                "b": blade_name(b),
                "product": _coefficient_object(table.entry(a, b)),
            }
            stream.write(json.dumps(row) + "\n")


# -- driver --------------------------------------------------------------


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eucliff",
        description="Evaluate euclidean Clifford algebra expressions.",
    )
    parser.add_argument("--dim", type=int, help="ambient dimension (required with --metric identity)")
    parser.add_argument(
        "--metric",
        default="identity",
        help='"identity" or a path to a metric JSON file {"dim": n, "gram": [[...]]}',
    )
    parser.add_argument(
        "--eval",
        action="append",
        metavar="EXPR",
        help="evaluate an expression and print the result (repeatable)",
    )
    parser.add_argument("--json", action="store_true", help="print results as JSON")
    parser.add_argument("--repl", action="store_true", help="interactive session on stdin")
    parser.add_argument(
        "--table",
        action="store_true",
        help="dump the blade product table as JSON rows and exit",
    )
    return parser


def _load_metric(spec: str, dim: int | None) -> EuclideanMetric:
    if spec == "identity":
        if dim is None:
            raise MetricError("--dim is required when the metric is \"identity\"")
        return identity_metric(dim)
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise MetricError(f"cannot read metric file {spec!r}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise MetricError(f"metric file {spec!r} is not valid JSON: {exc}") from exc
    return metric_from_json(data, expect_dim=dim)


def _run_line(session: Session, line: str, as_json: bool, stream) -> None:
    node = parse(line, session.dim)
    value = session.evaluate(node)
    stream.write((render_json(value) if as_json else render_text(value)) + "\n")


def run(argv=None) -> int:
    args = _build_arg_parser().parse_args(argv)
    try:
        metric = _load_metric(args.metric, args.dim)
    except MetricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    session = Session(metric)
    out = sys.stdout

    if args.table:
        try:
            _emit_table(metric, out)
        except AlgebraError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return 0

    if args.eval:
        for text in args.eval:
            try:
                _run_line(session, text, args.json, out)
            except CliError as exc:
                print(exc.render(), file=sys.stderr)
                return 1
        if not args.repl:
            return 0

    if args.repl or not args.eval:
        interactive = sys.stdin.isatty()
        while True:
            if interactive:
                out.write("eucliff> ")
                out.flush()
            line = sys.stdin.readline()
            if not line:
                break
            line = line.strip()
            if not line:
                continue
            if line in ("quit", "exit"):
                break
            try:
                _run_line(session, line, args.json, out)
            except CliError as exc:
                print(exc.render(), file=sys.stderr)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
