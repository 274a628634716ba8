"""Expression parser and evaluator for the command line.

Grammar sketch::

    expr    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := '-'? atom ('^' '-'? INT)?
    atom    := INT | 't' | 'e'INT | 'h'INT
             | 's' ('.' KIND)? '[' ints ']'
             | NAME ('.' KIND)? '(' args ')'
             | '(' expr ')'

Operator names: B, Bd, Bt, Btd, H (index vector or list of vectors, optional
operand expression).  Calls: expand, skew, omega, dual, kpoly, dpoly, nl.
Partition literals are validated at parse time; every node keeps its source
span for error reporting.
"""

from __future__ import annotations

import re

from .core import LaurentPoly, as_partition, canonical_kind
from .schur import Expansion, SymFunc, skew_by
from .series import (change_basis, diamond_product, dual_basis_truncated,
                     newell_littlewood, omega_diamond)


class ParseError(ValueError):
    def __init__(self, msg, span=None):
        self.span = span
        if span is not None:
            msg = "%s (at %d..%d)" % (msg, span[0], span[1])
        super().__init__(msg)


class EvalError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")

_PUNCT = set("[](),=+-*^.")


def tokenize(src):
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == m.start():
            break
        start = m.start(m.lastindex)
        end = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1)), (start, end)))
        elif m.group(2):
            out.append(("name", m.group(2), (start, end)))
        else:
            ch = m.group(3)
            if ch not in _PUNCT:
                raise ParseError("unexpected character %r" % ch, (start, end))
            out.append((ch, ch, (start, end)))
        pos = end
    out.append(("end", None, (len(src), len(src))))
    return out


# AST nodes: tuples (tag, span, *payload)

OP_FAMILIES = ("B", "Bd", "Bt", "Btd", "H")
CALL_NAMES = ("expand", "skew", "omega", "dual", "kpoly", "dpoly", "nl")


class Parser:
    def __init__(self, src):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, tag):
        t = self.next()
        if t[0] != tag:
            raise ParseError("expected %r, found %r" % (tag, t[1]), t[2])
        return t

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("trailing input %r" % (t[1],), t[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()
            rhs = self.term()
            node = (("add" if op[0] == "+" else "sub"), op[2], node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            op = self.next()
            rhs = self.factor()
            node = ("mul", op[2], node, rhs)
        return node

    def factor(self):
        if self.peek()[0] == "-":
            t = self.next()
            return ("neg", t[2], self.factor())
        node = self.atom()
        if self.peek()[0] == "^":
            self.next()
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            t = self.expect("int")
            node = ("pow", t[2], node, sign * t[1])
        return node

    def atom(self):
        t = self.peek()
        if t[0] == "int":
            self.next()
            return ("int", t[2], t[1])
        if t[0] == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if t[0] == "name":
            return self.named()
        raise ParseError("unexpected token %r" % (t[1],), t[2])

    def named(self):
        t = self.next()
        name = t[1]
        if name == "t":
            return ("tvar", t[2])
        m = re.fullmatch(r"([eh])(\d+)", name)
        if m:
            return ("eh", t[2], m.group(1), int(m.group(2)))
        if name == "s" or (name in OP_FAMILIES) or (name in CALL_NAMES):
            kind = None
            if self.peek()[0] == ".":
                self.next()
                kt = self.expect("name")
                try:
                    kind = canonical_kind(kt[1])
                except ValueError:
                    raise ParseError("unknown kind tag %r" % kt[1], kt[2])
            if name == "s":
                lam = self.bracket_list(self.expect("["))
                try:
                    lam = as_partition(lam)
                except ValueError as exc:
                    raise ParseError(str(exc), t[2])
                return ("schur", t[2], kind or "none", lam)
            if name in OP_FAMILIES:
                return self.op_apply(name, kind, t[2])
            return self.call(name, kind, t[2])
        raise ParseError("unknown symbol %r" % name, t[2])

    def bracket_list(self, _open):
        """[int, int, ...] already past the open bracket."""
        vals = []
        if self.peek()[0] == "]":
            self.next()
            return vals
        while True:
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            t = self.expect("int")
            vals.append(sign * t[1])
            t = self.next()
            if t[0] == "]":
                return vals
            if t[0] != ",":
                raise ParseError("expected ',' or ']'", t[2])

    def list_literal(self):
        """A [...] literal: flat integer list or list of lists."""
        self.expect("[")
        if self.peek()[0] == "[":
            out = []
            while True:
                self.expect("[")
                out.append(self.bracket_list(None))
                t = self.next()
                if t[0] == "]":
                    return ("listlist", out)
                if t[0] != ",":
                    raise ParseError("expected ',' or ']'", t[2])
        out = self.bracket_list(None)
        return ("list", out)

    def op_apply(self, family, kind, span):
        self.expect("(")
        shape = self.list_literal()
        operand = None
        t = self.next()
        if t[0] == ",":
            operand = self.expr()
            self.expect(")")
        elif t[0] != ")":
            raise ParseError("expected ',' or ')'", t[2])
        return ("op", span, family, kind, shape, operand)

    def call(self, name, kind, span):
        self.expect("(")
        args = []
        kwargs = {}
        if self.peek()[0] != ")":
            while True:
                if (self.peek()[0] == "name"
                        and self.toks[self.i + 1][0] == "="):
                    key = self.next()[1]
                    self.next()
                    kwargs[key] = self.arg_value()
                else:
                    args.append(self.arg_value())
                t = self.next()
                if t[0] == ")":
                    break
                if t[0] != ",":
                    raise ParseError("expected ',' or ')'", t[2])
        else:
            self.next()
        if kind is not None:
            kwargs.setdefault("kind", ("kindtag", kind))
        return ("call", span, name, args, kwargs)

    def arg_value(self):
        t = self.peek()
        if t[0] == "[":
            return self.list_literal()
        if t[0] == "name" and t[1] in ("none", "box", "cell", "vd", "vdom",
                                       "hd", "hdom", "schur", "empty"):
            nxt = self.toks[self.i + 1][0]
            if nxt in (",", ")"):
                self.next()
                return ("kindtag", canonical_kind(t[1]))
        return self.expr()


def parse(src):
    """Parse an expression into an AST."""
    return Parser(src).parse()


def strip_spans(node):
    """Structural form of an AST with source spans removed."""
    if not isinstance(node, tuple):
        if isinstance(node, dict):
            return {k: strip_spans(v) for k, v in node.items()}
        if isinstance(node, list):
            return tuple(strip_spans(v) for v in node)
        return node
    if node and node[0] in ("list", "listlist", "kindtag"):
        return (node[0],) + tuple(strip_spans(v) for v in node[1:])
    if node and isinstance(node[0], str) and len(node) >= 2 \
            and isinstance(node[1], tuple) and len(node[1]) == 2 \
            and all(isinstance(x, int) for x in node[1]):
        return (node[0],) + tuple(strip_spans(v) for v in node[2:])
    return tuple(strip_spans(v) for v in node)


def ast_equal(a, b):
    """Equality of ASTs up to source spans."""
    return strip_spans(a) == strip_spans(b)


# ---------------------------------------------------------------------------
# printing (round-trips through parse)

def print_ast(node):
    tag = node[0]
    if tag == "int":
        return str(node[2])
    if tag == "tvar":
        return "t"
    if tag == "eh":
        return "%s%d" % (node[2], node[3])
    if tag == "schur":
        kind = node[2]
        base = "s" if kind == "none" else "s.%s" % kind
        return "%s[%s]" % (base, ",".join(str(x) for x in node[3]))
    if tag == "add":
        rhs = node[3]
        right = print_ast(rhs)
        if rhs[0] in ("add", "sub"):
            right = "(%s)" % right
        return "%s + %s" % (print_ast(node[2]), right)
    if tag == "sub":
        rhs = node[3]
        right = print_ast(rhs)
        if rhs[0] in ("add", "sub"):
            right = "(%s)" % right
        return "%s - %s" % (print_ast(node[2]), right)
    if tag == "mul":
        rhs = node[3]
        right = _fact(rhs)
        if rhs[0] == "mul":
            right = "(%s)" % right
        return "%s*%s" % (_fact(node[2]), right)
    if tag == "neg":
        inner = node[2]
        if inner[0] in ("add", "sub", "mul"):
            return "-(%s)" % print_ast(inner)
        return "-%s" % print_ast(inner)
    if tag == "pow":
        return "%s^%d" % (_fact(node[2]), node[3])
    if tag == "op":
        _, _, family, kind, shape, operand = node
        head = family if kind is None else "%s.%s" % (family, kind)
        body = _print_listval(shape)
        if operand is not None:
            return "%s(%s, %s)" % (head, body, print_ast(operand))
        return "%s(%s)" % (head, body)
    if tag == "call":
        _, _, name, args, kwargs = node
        bits = [_print_argval(a) for a in args]
        bits += ["%s=%s" % (k, _print_argval(v))
                 for k, v in sorted(kwargs.items())]
        return "%s(%s)" % (name, ", ".join(bits))
    raise ValueError("unknown node %r" % (tag,))


def _fact(node):
    if node[0] in ("add", "sub"):
        return "(%s)" % print_ast(node)
    return print_ast(node)


def _print_listval(v):
    if v[0] == "list":
        return "[%s]" % ",".join(str(x) for x in v[1])
    return "[%s]" % ",".join("[%s]" % ",".join(str(x) for x in row)
                             for row in v[1])


def _print_argval(v):
    if v[0] in ("list", "listlist"):
        return _print_listval(v)
    if v[0] == "kindtag":
        return v[1]
    return print_ast(v)


# ---------------------------------------------------------------------------
# evaluation

def eval_ast(node):
    """Evaluate an AST to an Expansion or a LaurentPoly."""
    tag = node[0]
    if tag == "int":
        return LaurentPoly.const(node[2])
    if tag == "tvar":
        return LaurentPoly.t(1)
    if tag == "eh":
        kind_sym, k = node[2], node[3]
        lam = (k,) if kind_sym == "h" else (1,) * k
        return Expansion("none", SymFunc.schur(lam))
    if tag == "schur":
        return Expansion(node[2], SymFunc.schur(node[3]))
    if tag == "add":
        return _add(eval_ast(node[2]), eval_ast(node[3]), 1)
    if tag == "sub":
        return _add(eval_ast(node[2]), eval_ast(node[3]), -1)
    if tag == "neg":
        return _scale(eval_ast(node[2]), LaurentPoly.const(-1))
    if tag == "pow":
        base = eval_ast(node[2])
        if not isinstance(base, LaurentPoly):
            raise EvalError("only scalar powers are supported")
        if base == LaurentPoly.t(1):
            return LaurentPoly.t(node[3])
        if node[3] < 0:
            raise EvalError("negative power of a non-monomial")
        out = LaurentPoly.const(1)
        for _ in range(node[3]):
            out = out * base
        return out
    if tag == "mul":
        return _mul(eval_ast(node[2]), eval_ast(node[3]))
    if tag == "op":
        return _eval_op(node)
    if tag == "call":
        return _eval_call(node)
    raise EvalError("cannot evaluate %r" % (tag,))


def _as_expansion(v, kind="none"):
    if isinstance(v, LaurentPoly):
        return Expansion(kind, SymFunc({(): v}) if v else SymFunc())
    return v


def _add(a, b, sign):
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return a + b * sign if sign == 1 else a - b
    if isinstance(a, LaurentPoly):
        a = _as_expansion(a, b.kind)
    if isinstance(b, LaurentPoly):
        b = _as_expansion(b, a.kind)
    if a.kind != b.kind:
        raise EvalError("basis mismatch: %s vs %s (use expand)"
                        % (a.kind, b.kind))
    f = a.func + b.func.scaled(sign)
    return Expansion(a.kind, f)


def _scale(v, poly):
    if isinstance(v, LaurentPoly):
        return v * poly
    return Expansion(v.kind, v.func.scaled(poly))


def _mul(a, b):
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return a * b
    if isinstance(a, LaurentPoly):
        return _scale(b, a)
    if isinstance(b, LaurentPoly):
        return _scale(a, b)
    if a.kind != b.kind:
        raise EvalError("basis mismatch: %s vs %s (use expand)"
                        % (a.kind, b.kind))
    return diamond_product(a, b)


def _want_vectors(shape, span):
    if shape[0] == "list":
        return (tuple(shape[1]),)
    return tuple(tuple(row) for row in shape[1])


def _eval_op(node):
    _, span, family, kind, shape, operand = node
    from .operators import (bernstein_diamond_row, bernstein_row,
                            tilde_b_diamond_parabolic, tilde_b_parabolic)
    from .kpoly import h_row
    vectors = _want_vectors(shape, span)
    if operand is None:
        f = SymFunc.one()
    else:
        val = eval_ast(operand)
        val = _as_expansion(val)
        if val.kind != "none":
            raise EvalError("operators act on Schur-basis operands")
        f = val.func
    if family == "H":
        hk = kind or "none"
        for vec in reversed(vectors):
            f = h_row(hk, vec, f)
        return Expansion("none", f)
    for vec in reversed(vectors):
        if family == "B" and kind in (None, "none"):
            for r in reversed(vec):
                f = bernstein_row(r, f)
        elif family in ("B", "Bd"):
            # a kind tag on B selects the kind row family
            for r in reversed(vec):
                f = bernstein_diamond_row(kind or "vdom", r, f)
        elif family == "Bt" and kind in (None, "none"):
            f = tilde_b_parabolic(vec, f)
        elif family in ("Bt", "Btd"):
            f = tilde_b_diamond_parabolic(kind or "vdom", vec, f)
        else:
            raise EvalError("unknown operator family %r" % family)
    return Expansion("none", f)


def _kw_kind(kwargs, default="none"):
    v = kwargs.get("kind")
    if v is None:
        return default
    if v[0] == "kindtag":
        return v[1]
    raise EvalError("kind must be a tag")


def _kw_list(kwargs, key):
    v = kwargs.get(key)
    if v is None:
        raise EvalError("missing argument %r" % key)
    if v[0] == "list":
        return tuple(v[1])
    raise EvalError("%r must be a flat list" % key)


def _kw_listlist(kwargs, key):
    v = kwargs.get(key)
    if v is None:
        raise EvalError("missing argument %r" % key)
    if v[0] == "listlist":
        return tuple(tuple(r) for r in v[1])
    if v[0] == "list":
        return (tuple(v[1]),)
    raise EvalError("%r must be a list of lists" % key)


def _eval_call(node):
    _, span, name, args, kwargs = node
    if name == "expand":
        if len(args) != 1:
            raise EvalError("expand takes one expression")
        target = _kw_kind(kwargs, None) or _kw_basis(kwargs)
        val = _as_expansion(eval_ast(args[0]))
        return change_basis(val, target)
    if name == "skew":
        if len(args) != 2:
            raise EvalError("skew takes two expressions")
        p = _as_expansion(eval_ast(args[0]))
        q = _as_expansion(eval_ast(args[1]))
        if p.kind != "none" or q.kind != "none":
            raise EvalError("skew acts in the Schur basis")
        return Expansion("none", skew_by(p.func, q.func))
    if name == "omega":
        if len(args) != 1:
            raise EvalError("omega takes one expression")
        return omega_diamond(_as_expansion(eval_ast(args[0])))
    if name == "dual":
        lam = as_partition(_kw_list(kwargs, "lambda"))
        kind = _kw_kind(kwargs)
        deg = kwargs.get("degree")
        if deg is None or deg[0] != "int":
            raise EvalError("dual requires degree=<int>")
        return Expansion("none", dual_basis_truncated(lam, kind, deg[2]))
    if name == "kpoly":
        from .kpoly import k_via_schur_recurrence
        lam = as_partition(_kw_list(kwargs, "lambda"))
        rects = tuple(as_partition(r) for r in _kw_listlist(kwargs, "R"))
        return k_via_schur_recurrence(_kw_kind(kwargs), lam, rects)
    if name == "dpoly":
        from .operators import d_polynomial
        lam = as_partition(_kw_list(kwargs, "lambda"))
        rects = _kw_listlist(kwargs, "R")
        return d_polynomial(_kw_kind(kwargs, "vdom"), lam, rects)
    if name == "nl":
        if len(args) != 3:
            raise EvalError("nl takes three partitions")
        shapes = []
        for a in args:
            if a[0] != "list":
                raise EvalError("nl arguments are partitions")
            shapes.append(as_partition(a[1]))
        return LaurentPoly.const(newell_littlewood(*shapes))
    raise EvalError("unknown function %r" % name)


def _kw_basis(kwargs):
    v = kwargs.get("basis")
    if v is None:
        raise EvalError("expand requires basis=<kind>")
    if v[0] == "kindtag":
        return v[1]
    raise EvalError("basis must be a kind tag")


def eval_expr(src):
    """Parse and evaluate in one step."""
    return eval_ast(parse(src))


def format_value(v):
    """Deterministic human-readable rendering of an evaluation result."""
    if isinstance(v, LaurentPoly):
        return str(v)
    prefix = "s" if v.kind == "none" else "s.%s" % v.kind
    if v.func.is_zero():
        return "0"
    bits = []
    for lam in v.func.support():
        c = v.func.terms[lam]
        name = "%s[%s]" % (prefix, ",".join(str(x) for x in lam))
        if c == LaurentPoly.const(1):
            bits.append(name)
        else:
            bits.append("(%s)*%s" % (c, name))
    return " + ".join(bits)


def value_to_json(v):
    if isinstance(v, LaurentPoly):
        return {"type": "poly", "poly": v.to_json()}
    return {
        "type": "expansion",
        "basis": v.kind,
        "terms": [{"lambda": list(lam), "coeff": v.func.terms[lam].to_json()}
                  for lam in v.func.support()],
    }
