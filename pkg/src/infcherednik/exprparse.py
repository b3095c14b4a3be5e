"""Expression grammar for H_b elements.

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" nat)?
    atom   := rational | "e[" nat "," nat "]" | "x[" nat "]" | "y[" nat "]" | "(" expr ")"

Whitespace is ignored and juxtaposition is not multiplication.
"""

import re
from fractions import Fraction

from .polyseries import Residue

_TOKEN = re.compile(r"\s*(?:(\d+)|([exy])\s*\[|([-+*^(),\]/]))")


class ExprError(ValueError):
    def __init__(self, msg, pos=None):
        super().__init__(msg if pos is None else f"{msg} at position {pos}")
        self.pos = pos


def tokenize(src):
    toks = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            bad = len(src) - len(src[pos:].lstrip())
            raise ExprError(f"unexpected character {src[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("gen", m.group(2), start))
        else:
            toks.append((m.group(3), None, start))
        pos = m.end()
    toks.append(("end", None, len(src)))
    return toks


class _Parser:
    def __init__(self, src, n):
        self.toks = tokenize(src)
        self.k = 0
        self.n = n

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.k += 1
        return tok

    # AST nodes: ("num", Fraction) | ("gen", label) | ("add", [(sign, node)]) |
    # ("mul", [node]) | ("pow", node, k)

    def expr(self):
        items = []
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        items.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            items.append((sign, self.term()))
        return ("add", items)

    def term(self):
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return ("mul", factors)

    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            node = ("pow", node, self.take("num")[1])
        return node

    def index(self):
        tok = self.take("num")
        if not 1 <= tok[1] <= self.n:
            raise ExprError(f"index {tok[1]} out of range [1, {self.n}]", tok[2])
        return tok[1]

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("num")
                if den[1] == 0:
                    raise ExprError("zero denominator in rational literal", den[2])
                value = value / den[1]
            return ("num", value)
        if tok[0] == "gen":
            self.take()
            if tok[1] == "e":
                i = self.index()
                self.take(",")
                j = self.index()
                self.take("]")
                return ("gen", ("e", i, j))
            i = self.index()
            self.take("]")
            return ("gen", (tok[1], i))
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise ExprError(f"unexpected token {tok[0]!r}", tok[2])


def parse_ast(src, n):
    p = _Parser(src, n)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ExprError(f"unexpected token {tok[0]!r}", tok[2])
    return node


def degree_bound(node):
    kind = node[0]
    if kind == "num":
        return 0
    if kind == "gen":
        return 1
    if kind == "add":
        return max(degree_bound(n) for _, n in node[1])
    if kind == "mul":
        return sum(degree_bound(n) for n in node[1])
    return degree_bound(node[1]) * node[2]


def evaluate(node, ctx):
    kind = node[0]
    if kind == "num":
        return ctx.scalar(node[1])
    if kind == "gen":
        return ctx.gen(node[1])
    if kind == "add":
        total = ctx.alg.zero()
        for sign, n in node[1]:
            total = total + evaluate(n, ctx) if sign > 0 else total - evaluate(n, ctx)
        return total
    if kind == "mul":
        out = evaluate(node[1][0], ctx)
        for n in node[1][1:]:
            out = out * evaluate(n, ctx)
        return out
    return evaluate(node[1], ctx) ** node[2]


def parse_expr(src, ctx, max_degree=None):
    """Normal form in ``ctx`` of the expression ``src``."""
    node = parse_ast(src, ctx.n)
    if max_degree is not None and degree_bound(node) > max_degree:
        raise ExprError(f"expression degree {degree_bound(node)} exceeds --max-degree {max_degree}")
    return evaluate(node, ctx)


def _coeff_str(c):
    if isinstance(c, Residue):
        return str(c.value)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_expr(elem):
    """Render an element in the grammar above, terms in canonical order."""
    if elem.is_zero():
        return "0"
    out = []
    for mono, c in elem.sorted_terms():
        neg = False
        if not isinstance(c, Residue) and c < 0:
            neg, c = True, -c
        m = elem.alg.mono_str(mono)
        if not m:
            body = _coeff_str(c)
        elif c == 1:
            body = m
        else:
            body = f"{_coeff_str(c)}*{m}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
