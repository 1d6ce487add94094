"""Text grammars and printers.

Ordinal terms (whitespace-insensitive):

    0            zero                   v(T)     collapsed term
    w^A          omega-power summand    O^A*A    Omega-monomial (exp, coeff)
    T + T        sum, left-assoc        (T)      grouping
    1 -> v(0);  O -> O^v(0)*v(0);  decimal n -> n-fold unit sum

Constructor expressions:  _  P{n;i<j,...}  W+W  WxW  W*  B(W)  (W)
Elements are read against their governing expression:  bare tree term or
<t> in a hole, #k in a constant, inl E / inr E, (E, E) pairs, [E, ...]
sequences, and (B, B) / leaf E binary trees.
Tree terms:  o  or  o[ELEMENT].   Labeled trees:  (label child ...).

Printing emits the canonical un-sugared grammar; parse(print(x)) == x.
"""

from __future__ import annotations

from .ordinals import (
    CountableSum,
    OmegaCnf,
    OmegaPow,
    OrdinalTerm,
    SystemId,
    Theta,
    ThetaPart,
    ZERO,
    Zero,
    make_cnf,
    make_sum,
    natural,
)
from .gaptrees import LabeledTree
from .posets import from_pairs
from .treeterms import CIRC, Apply, Circ, TreeTerm
from .wexpr import (
    BTree,
    Const,
    ConstVal,
    Hole,
    HoleVal,
    Leaf,
    ListVal,
    Node,
    PairVal,
    Prod,
    Star,
    Sum,
    SumVal,
    TreeVal,
    WElement,
    WExpr,
)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"parse error at column {pos + 1}: {message}")
        self.pos = pos
        self.message = message


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, ch: str):
        c = self.peek()
        if c != ch:
            raise ParseError(f"expected {ch!r}, found {c!r}" if c else f"expected {ch!r}, found end of input", self.pos)
        self.pos += 1

    def try_take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def word(self, w: str) -> bool:
        self.skip_ws()
        if self.text.startswith(w, self.pos):
            end = self.pos + len(w)
            if end >= len(self.text) or not self.text[end].isalnum():
                self.pos = end
                return True
        return False

    def number(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])

    def done(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)


# ---------------------------------------------------------------------------
# Ordinal terms


def parse_term(text: str, sys: SystemId = SystemId.FULL) -> OrdinalTerm:
    sc = _Scanner(text)
    t = _term(sc, sys)
    sc.done()
    return t


def _term(sc: _Scanner, sys: SystemId) -> OrdinalTerm:
    summands = [_summand(sc, sys)]
    while sc.try_take("+"):
        summands.append(_summand(sc, sys))
    return _assemble(summands, sc, sys)


def _assemble(summands, sc: _Scanner, sys: SystemId) -> OrdinalTerm:
    monos, parts, zeros = [], [], 0
    for kind, payload in summands:
        if kind == "zero":
            zeros += 1
        elif kind == "mono":
            monos.append(payload)
        else:
            parts.extend(payload)
    if zeros and (monos or parts):
        raise ParseError("zero cannot appear inside a sum", sc.pos)
    if zeros:
        return ZERO
    if monos:
        if parts:
            monos.append((ZERO, make_sum(parts)))
        return make_cnf(monos)
    if len(parts) == 1:
        p = parts[0]
        if isinstance(p, OmegaPow):
            raise ParseError("a bare omega-power is not a standalone term", sc.pos)
        return Theta(p.arg)
    return make_sum(parts)


def _summand(sc: _Scanner, sys: SystemId):
    c = sc.peek()
    if c == "0":
        sc.take()
        return ("zero", None)
    if c.isdigit():
        n = sc.number()
        if n == 0:
            return ("zero", None)
        if n == 1:
            return ("count", [ThetaPart(ZERO)])
        unit = OmegaPow(ZERO) if sys is SystemId.FULL else ThetaPart(ZERO)
        return ("count", [unit] * n)
    if c == "v":
        sc.take()
        sc.expect("(")
        arg = _term(sc, sys)
        sc.expect(")")
        return ("count", [ThetaPart(arg)])
    if c == "w":
        sc.take()
        sc.expect("^")
        return ("count", [OmegaPow(_atom(sc, sys))])
    if c == "O":
        sc.take()
        if sc.try_take("^"):
            e = _atom(sc, sys)
            sc.expect("*")
            co = _atom(sc, sys)
            return ("mono", (e, co))
        return ("mono", (Theta(ZERO), Theta(ZERO)))
    if c == "(":
        sc.take()
        inner = _term(sc, sys)
        sc.expect(")")
        return _reclassify(inner, sc)
    raise ParseError(f"expected a term, found {c!r}" if c else "expected a term, found end of input", sc.pos)


def _reclassify(t: OrdinalTerm, sc: _Scanner):
    if isinstance(t, Zero):
        return ("zero", None)
    if isinstance(t, Theta):
        return ("count", [ThetaPart(t.arg)])
    if isinstance(t, CountableSum):
        return ("count", list(t.parts))
    raise ParseError("an uncountable term cannot be a summand", sc.pos)


def _atom(sc: _Scanner, sys: SystemId) -> OrdinalTerm:
    c = sc.peek()
    if c == "(":
        sc.take()
        t = _term(sc, sys)
        sc.expect(")")
        return t
    if c == "0":
        sc.take()
        return ZERO
    if c.isdigit():
        return natural(sc.number(), sys)
    if c == "v":
        sc.take()
        sc.expect("(")
        arg = _term(sc, sys)
        sc.expect(")")
        return Theta(arg)
    if c == "O":
        sc.take()
        if sc.try_take("^"):
            e = _atom(sc, sys)
            sc.expect("*")
            co = _atom(sc, sys)
            return make_cnf([(e, co)])
        return OmegaCnf(((Theta(ZERO), Theta(ZERO)),))
    raise ParseError(f"expected an atom, found {c!r}" if c else "expected an atom, found end of input", sc.pos)


def format_term(t: OrdinalTerm) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Theta):
        return f"v({format_term(t.arg)})"
    if isinstance(t, CountableSum):
        return " + ".join(_format_part(p) for p in t.parts)
    if isinstance(t, OmegaCnf):
        return " + ".join(
            f"O^{_format_atom(e)}*{_format_atom(c)}" for e, c in t.monomials
        )
    raise TypeError(f"not a term: {t!r}")


def _format_part(p) -> str:
    if isinstance(p, ThetaPart):
        return f"v({format_term(p.arg)})"
    return f"w^{_format_atom(p.exponent)}"


def _format_atom(t: OrdinalTerm) -> str:
    s = format_term(t)
    if isinstance(t, CountableSum) or (
        isinstance(t, OmegaCnf) and len(t.monomials) > 1
    ):
        return f"({s})"
    return s


# ---------------------------------------------------------------------------
# Constructor expressions


def parse_wexpr(text: str) -> WExpr:
    sc = _Scanner(text)
    w = _wsum(sc)
    sc.done()
    return w


def _wsum(sc: _Scanner) -> WExpr:
    w = _wprod(sc)
    while sc.try_take("+"):
        w = Sum(w, _wprod(sc))
    return w


def _wprod(sc: _Scanner) -> WExpr:
    w = _wpost(sc)
    while sc.try_take("x"):
        w = Prod(w, _wpost(sc))
    return w


def _wpost(sc: _Scanner) -> WExpr:
    w = _wprim(sc)
    while sc.try_take("*"):
        w = Star(w)
    return w


def _wprim(sc: _Scanner) -> WExpr:
    c = sc.peek()
    if c == "_":
        sc.take()
        return Hole()
    if c == "B":
        sc.take()
        sc.expect("(")
        inner = _wsum(sc)
        sc.expect(")")
        return BTree(inner)
    if c == "P":
        sc.take()
        sc.expect("{")
        n = sc.number()
        pairs = []
        if sc.try_take(";"):
            while sc.peek().isdigit():
                i = sc.number()
                sc.expect("<")
                j = sc.number()
                pairs.append((i, j))
                if not sc.try_take(","):
                    break
        sc.expect("}")
        try:
            return Const(from_pairs(n, pairs))
        except ValueError as e:
            raise ParseError(str(e), sc.pos) from None
    if c == "(":
        sc.take()
        w = _wsum(sc)
        sc.expect(")")
        return w
    raise ParseError(f"expected a constructor, found {c!r}" if c else "expected a constructor, found end of input", sc.pos)


def format_wexpr(w: WExpr) -> str:
    def fmt(x, prec: int) -> str:
        if isinstance(x, Hole):
            return "_"
        if isinstance(x, Const):
            pairs = ",".join(f"{i}<{j}" for i, j in x.poset.covering_pairs())
            return f"P{{{x.poset.size}" + (f";{pairs}" if pairs else "") + "}"
        if isinstance(x, BTree):
            return f"B({fmt(x.inner, 0)})"
        if isinstance(x, Star):
            return f"{fmt(x.inner, 2)}*"
        if isinstance(x, Prod):
            s = f"{fmt(x.left, 1)}x{fmt(x.right, 2)}"
            return f"({s})" if prec > 1 else s
        if isinstance(x, Sum):
            s = f"{fmt(x.left, 0)}+{fmt(x.right, 1)}"
            return f"({s})" if prec > 0 else s
        raise TypeError(f"not a constructor expression: {x!r}")

    return fmt(w, 0)


# ---------------------------------------------------------------------------
# Elements and tree terms (shape-directed)


def parse_tree_term(text: str, w: WExpr) -> TreeTerm:
    sc = _Scanner(text)
    t = _tree_term(sc, w)
    sc.done()
    return t


def _tree_term(sc: _Scanner, w: WExpr) -> TreeTerm:
    sc.skip_ws()
    if not sc.word("o"):
        raise ParseError("expected a tree term ('o' or 'o[...]')", sc.pos)
    if sc.try_take("["):
        body = _element(sc, w, w)
        sc.expect("]")
        return Apply(body)
    return CIRC


def _element(sc: _Scanner, w: WExpr, root: WExpr) -> WElement:
    if isinstance(w, Hole):
        if sc.try_take("<"):
            t = _tree_term(sc, root)
            sc.expect(">")
            return HoleVal(t)
        return HoleVal(_tree_term(sc, root))
    if isinstance(w, Const):
        sc.expect("#")
        i = sc.number()
        if not 0 <= i < w.poset.size:
            raise ParseError(f"constant index {i} out of range", sc.pos)
        return ConstVal(i)
    if isinstance(w, Sum):
        if sc.word("inl"):
            return SumVal(0, _element(sc, w.left, root))
        if sc.word("inr"):
            return SumVal(1, _element(sc, w.right, root))
        raise ParseError("expected 'inl' or 'inr'", sc.pos)
    if isinstance(w, Prod):
        sc.expect("(")
        a = _element(sc, w.left, root)
        sc.expect(",")
        b = _element(sc, w.right, root)
        sc.expect(")")
        return PairVal(a, b)
    if isinstance(w, Star):
        sc.expect("[")
        items = []
        if sc.peek() != "]":
            items.append(_element(sc, w.inner, root))
            while sc.try_take(","):
                items.append(_element(sc, w.inner, root))
        sc.expect("]")
        return ListVal(tuple(items))
    if isinstance(w, BTree):
        return TreeVal(_btree(sc, w.inner, root))
    raise TypeError(f"not a constructor expression: {w!r}")


def _btree(sc: _Scanner, inner: WExpr, root: WExpr):
    # '(' always opens a node; a leaf whose element itself starts with
    # '(' must use the explicit 'leaf' keyword (the printer does).
    if sc.word("leaf"):
        return Leaf(_element(sc, inner, root))
    if sc.peek() == "(":
        sc.take()
        left = _btree(sc, inner, root)
        if sc.peek() == ",":
            sc.take()
        right = _btree(sc, inner, root)
        sc.expect(")")
        return Node(left, right)
    return Leaf(_element(sc, inner, root))


def format_tree_term(t: TreeTerm) -> str:
    if isinstance(t, Circ):
        return "o"
    return f"o[{format_element(t.body)}]"


def format_element(a: WElement) -> str:
    if isinstance(a, HoleVal):
        return format_tree_term(a.value)
    if isinstance(a, ConstVal):
        return f"#{a.index}"
    if isinstance(a, SumVal):
        return ("inl " if a.side == 0 else "inr ") + format_element(a.value)
    if isinstance(a, PairVal):
        return f"({format_element(a.left)}, {format_element(a.right)})"
    if isinstance(a, ListVal):
        return "[" + ", ".join(format_element(x) for x in a.items) + "]"
    if isinstance(a, TreeVal):
        return _format_btree(a.tree)
    raise TypeError(f"not an element: {a!r}")


def _format_btree(t) -> str:
    if isinstance(t, Leaf):
        s = format_element(t.value)
        return f"leaf {s}" if s.startswith("(") else s
    return f"({_format_btree(t.left)}, {_format_btree(t.right)})"


# ---------------------------------------------------------------------------
# Labeled trees


def parse_labeled_tree(text: str) -> LabeledTree:
    sc = _Scanner(text)
    t = _ltree(sc)
    sc.done()
    return t


def _ltree(sc: _Scanner) -> LabeledTree:
    sc.expect("(")
    label = sc.number()
    children = []
    while sc.peek() == "(":
        children.append(_ltree(sc))
    sc.expect(")")
    return LabeledTree(label, tuple(children))


def format_labeled_tree(t: LabeledTree) -> str:
    if not t.children:
        return f"({t.label})"
    return f"({t.label} " + " ".join(format_labeled_tree(c) for c in t.children) + ")"
