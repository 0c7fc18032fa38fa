"""Recursive-descent parsers for the command-line expression language.

Polynomials:   term (('+' | '-') term)*, where a term is ``c``, ``c*t^m``,
               ``t^m`` or ``t``; exponents are signed integers.
Coefficients:  integers, ``i``, ``2i``, ``i^2``, ``3/4`` (rationals only),
               products with ``*`` and parenthesized sums such as ``(2i+1)``.
Matrices:      rows separated by ``;``, entries by ``,``.
Scripts:       generator applications ``e[i,j](poly)``, ``x[i,j;m](c)``,
               ``w[i,j;m](c)``, ``h[i,j;m](c)`` separated by spaces or ``*``.
Reflections:   ``s(1,0) s(-theta,1) s(e1-e3,2)``.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import SkewLaurent
from .matrix import GeneratorApp, GroupMatrix
from .weyl import AffineRoot


class ParseError(ValueError):
    def __init__(self, message, pos, expected=None, text=""):
        self.pos = pos
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {pos}{detail}")
        self.text = text


class _Cursor:
    def __init__(self, text, ring=None):
        self.text = text
        self.pos = 0
        self.ring = ring

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self):
        return self.peek() == ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch, what=None):
        if not self.take(ch):
            self.fail(f"unexpected {self._shown()}", what or repr(ch))

    def fail(self, message, expected=None):
        raise ParseError(message, self.pos, expected, self.text)

    def _shown(self):
        c = self.peek()
        return repr(c) if c else "end of input"

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(f"unexpected {self._shown()}", "an integer")
        return int(self.text[start : self.pos])

    def signed_integer(self):
        sign = 1
        if self.take("-"):
            sign = -1
        elif self.take("+"):
            pass
        return sign * self.integer()


# -- coefficients -----------------------------------------------------------------------------


def _coeff_atom(cur: _Cursor):
    F = cur.ring
    c = cur.peek()
    if c == "(":
        cur.take("(")
        val = _coeff_sum(cur)
        cur.expect(")")
        return val
    if c == "i":
        return _i_power(cur, F.one)
    if c.isdigit():
        start = cur.pos
        num = cur.integer()
        if cur.peek() == "/":
            if F.kind != "rational":
                cur.fail("fractions are only accepted over Q")
            cur.take("/")
            den = cur.integer()
            if den == 0:
                cur.pos = start
                cur.fail("zero denominator")
            return F.coerce(Fraction(num, den))
        val = F.coerce(num)
        if cur.peek() == "i":
            return _i_power(cur, val)
        return val
    cur.fail(f"unexpected {cur._shown()}", "a coefficient")


def _i_power(cur, scale):
    F = cur.ring
    pos = cur.pos
    cur.take("i")
    if F.kind != "ext":
        cur.pos = pos
        cur.fail(f"unknown literal 'i' for {F}", "an element of the coefficient field")
    e = 1
    if cur.peek() == "^":
        cur.take("^")
        e = cur.integer()
    return F.mul(scale, F.power(F.generator_element(), e))


def _coeff_product(cur):
    F = cur.ring
    val = _coeff_atom(cur)
    while cur.peek() == "*":
        save = cur.pos
        cur.take("*")
        if cur.peek() == "t":
            cur.pos = save
            break
        val = F.mul(val, _coeff_atom(cur))
    return val


def _coeff_sum(cur):
    F = cur.ring
    neg = False
    if cur.take("-"):
        neg = True
    elif cur.take("+"):
        pass
    val = _coeff_product(cur)
    if neg:
        val = F.neg(val)
    while cur.peek() in ("+", "-"):
        op = cur.text[cur.pos]
        cur.pos += 1
        rhs = _coeff_product(cur)
        val = F.add(val, rhs) if op == "+" else F.sub(val, rhs)
    return val


def parse_scalar(text, ring):
    cur = _Cursor(text, ring)
    val = _coeff_sum(cur)
    if not cur.at_end():
        cur.fail(f"unexpected {cur._shown()}", "end of input")
    return val


# -- polynomials ------------------------------------------------------------------------------


def _tpow(cur):
    cur.expect("t")
    if cur.peek() == "^":
        cur.take("^")
        if cur.peek() == "(":
            cur.take("(")
            m = cur.signed_integer()
            cur.expect(")")
            return m
        return cur.signed_integer()
    return 1


def _term(cur):
    F = cur.ring
    if cur.peek() == "t":
        return F.one, _tpow(cur)
    c = _coeff_product(cur)
    if cur.peek() == "*":
        cur.take("*")
        if cur.peek() != "t":
            cur.fail(f"unexpected {cur._shown()}", "'t'")
        return c, _tpow(cur)
    return c, 0


def _poly(cur):
    F = cur.ring
    terms = {}

    def add(c, m):
        terms[m] = F.add(terms[m], c) if m in terms else c

    neg = False
    if cur.take("-"):
        neg = True
    elif cur.take("+"):
        pass
    c, m = _term(cur)
    add(F.neg(c) if neg else c, m)
    while cur.peek() in ("+", "-"):
        op = cur.text[cur.pos]
        cur.pos += 1
        c, m = _term(cur)
        add(c if op == "+" else F.neg(c), m)
    return SkewLaurent(F, terms)


def parse_scalar_poly(text, ring) -> SkewLaurent:
    cur = _Cursor(text, ring)
    if cur.at_end():
        cur.fail("empty polynomial", "a term")
    f = _poly(cur)
    if not cur.at_end():
        cur.fail(f"unexpected {cur._shown()}", "'+', '-' or end of input")
    return f


def parse_matrix(text, n, ring) -> GroupMatrix:
    rows_text = [r for r in text.strip().split(";")]
    if len(rows_text) != n:
        raise ParseError(f"expected {n} rows, found {len(rows_text)}", 0, f"{n} rows")
    rows = []
    offset = 0
    for r, rt in enumerate(rows_text):
        entries = rt.split(",")
        if len(entries) != n:
            raise ParseError(f"row {r + 1} has {len(entries)} entries, expected {n}", offset, f"{n} entries")
        row = []
        for e in entries:
            try:
                row.append(parse_scalar_poly(e, ring))
            except ParseError as err:
                raise ParseError(str(err).split(" at position")[0], offset + err.pos, err.expected, text) from None
            offset += len(e) + 1
        rows.append(row)
    return GroupMatrix(ring, rows)


# -- generator scripts ----------------------------------------------------------------------------


def _until_matching(cur):
    """Return the text inside a balanced (...) group."""
    cur.expect("(")
    depth, start = 1, cur.pos
    while cur.pos < len(cur.text):
        ch = cur.text[cur.pos]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                inner = cur.text[start : cur.pos]
                cur.pos += 1
                return inner, start
        cur.pos += 1
    cur.fail("unbalanced parentheses", "')'")


def parse_script(text, n, ring):
    """A list of :class:`GeneratorApp` in product order."""
    cur = _Cursor(text, ring)
    apps = []
    while not cur.at_end():
        if apps:
            cur.take("*")
        kind = cur.peek()
        if kind not in ("e", "x", "w", "h"):
            cur.fail(f"unexpected {cur._shown()}", "one of e[, x[, w[, h[")
        cur.pos += 1
        cur.expect("[")
        i = cur.integer()
        cur.expect(",")
        j = cur.integer()
        m = 0
        if kind != "e" and cur.take(";"):
            m = cur.signed_integer()
        cur.expect("]")
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            cur.fail(f"({i},{j}) is not a root for n={n}")
        inner, start = _until_matching(cur)
        try:
            if kind == "e":
                param = parse_scalar_poly(inner, ring)
            else:
                param = parse_scalar(inner, ring)
        except ParseError as err:
            raise ParseError(str(err).split(" at position")[0], start + err.pos, err.expected, text) from None
        if kind in ("w", "h") and ring.is_zero(param):
            cur.fail(f"{kind} needs a nonzero parameter")
        apps.append(GeneratorApp(kind, (i, j) if kind == "e" else (i, j, m), param))
    return apps


def looks_like_script(text):
    s = text.strip()
    return len(s) > 1 and s[0] in "exwh" and s[1] == "["


# -- reflection lists ---------------------------------------------------------------------------------


def _classical_root(cur, n):
    neg = cur.take("-")
    if cur.peek() == "e":
        cur.take("e")
        i = cur.integer()
        cur.expect("-")
        cur.expect("e")
        j = cur.integer()
        root = (i, j)
    elif cur.text.startswith("theta", cur.pos):
        cur.pos += 5
        root = (1, n)
    elif cur.peek().isdigit():
        k = cur.integer()
        if not 1 <= k < n:
            cur.fail(f"simple root index {k} out of range for n={n}")
        root = (k, k + 1)
    else:
        cur.fail(f"unexpected {cur._shown()}", "a root: k, theta or e<i>-e<j>")
    if root[0] == root[1] or not all(1 <= x <= n for x in root):
        cur.fail(f"{root} is not a root for n={n}")
    return (root[1], root[0]) if neg else root


def parse_reflections(text, n):
    """``s(root,level)`` items; returns a list of AffineRoot."""
    cur = _Cursor(text)
    out = []
    while not cur.at_end():
        if out:
            cur.take("*")
        cur.expect("s", "'s('")
        cur.expect("(")
        i, j = _classical_root(cur, n)
        cur.expect(",")
        m = cur.signed_integer()
        cur.expect(")")
        out.append(AffineRoot(i, j, m))
    return out


def parse_pairs(text, ring):
    """``(u,v);(u,v)`` with unit polynomials u, v."""
    out = []
    s = text.strip()
    if not s:
        return out
    for chunk in s.split(";"):
        c = chunk.strip()
        if not (c.startswith("(") and c.endswith(")")):
            raise ParseError(f"pair {c!r} is not parenthesized", text.find(chunk), "'(u,v)'")
        inner = c[1:-1]
        depth, split = 0, None
        for idx, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                split = idx
                break
        if split is None:
            raise ParseError(f"pair {c!r} needs two entries", text.find(chunk), "','")
        out.append((parse_scalar_poly(inner[:split], ring), parse_scalar_poly(inner[split + 1 :], ring)))
    return out
