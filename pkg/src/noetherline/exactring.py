"""Exact coefficients: Python integers, or sparse integer polynomials in e and a.

Every lattice computation in the package is written against ordinary
arithmetic operators, so the same code runs in *concrete* mode (plain
``int`` values for e and a) and in *symbolic* mode (``Poly`` values).
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from typing import Union

__all__ = [
    "Poly",
    "Coefficient",
    "ModeError",
    "E",
    "A",
    "add",
    "mul",
    "sub",
    "evaluate",
    "is_zero",
    "as_int",
    "exact_div",
    "render",
    "parse",
]

Monomial = tuple[int, int]  # (exponent of e, exponent of a)

VARIABLES = ("e", "a")


class ModeError(TypeError):
    """A concrete-only operation received a symbolic coefficient."""


class Poly:
    """Immutable sparse polynomial over the integers in the indeterminates e, a.

    Terms are stored as a tuple of ``((i, j), c)`` with ``c != 0``, sorted
    lexicographically on ``(i, j)``: the e-exponent is compared first. The
    zero polynomial has no terms, so ``==`` is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            i, j = mono
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {mono}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            acc[(i, j)] = acc.get((i, j), 0) + c
        object.__setattr__(self, "_terms", tuple(sorted((m, c) for m, c in acc.items() if c)))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({(0, 0): c})

    @classmethod
    def var(cls, name: str) -> Poly:
        if name == "e":
            return cls({(1, 0): 1})
        if name == "a":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown indeterminate {name!r}")

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == (0, 0))

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ModeError(f"polynomial {self} is not constant")
        return self._terms[0][1] if self._terms else 0

    def degree(self, var: str) -> int:
        idx = VARIABLES.index(var)
        return max((m[idx] for m, _ in self._terms), default=0)

    def evaluate(self, e_val: int, a_val: int) -> int:
        return sum(c * e_val**i * a_val**j for (i, j), c in self._terms)

    def divexact(self, n: int) -> Poly:
        """Divide every coefficient by ``n``; raises if any division is inexact."""
        out = []
        for m, c in self._terms:
            q, r = divmod(c, n)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {n}")
            out.append((m, q))
        return Poly(out)

    # arithmetic

    def __add__(self, other):
        other = _lift_or_none(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms:
            acc[m] = acc.get(m, 0) + c
        return Poly(acc)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly((m, -c) for m, c in self._terms)

    def __pos__(self) -> Poly:
        return self

    def __sub__(self, other):
        other = _lift_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift_or_none(other)
        if other is None:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for (i1, j1), c1 in self._terms:
            for (i2, j2), c2 in other._terms:
                m = (i1 + i2, j1 + j2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    # comparison

    def __eq__(self, other) -> bool:
        other = _lift_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants must hash like the equal int
            h = hash(self.constant_value()) if self.is_constant() else hash(self._terms)
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


Coefficient = Union[int, Poly]

E = Poly.var("e")
A = Poly.var("a")


def _lift_or_none(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return Poly.const(x)
    return None


def lift(x: Coefficient) -> Poly:
    p = _lift_or_none(x)
    if p is None:
        raise TypeError(f"not a coefficient: {x!r}")
    return p


def add(x: Coefficient, y: Coefficient) -> Coefficient:
    return x + y


def sub(x: Coefficient, y: Coefficient) -> Coefficient:
    return x - y


def mul(x: Coefficient, y: Coefficient) -> Coefficient:
    return x * y


def evaluate(p: Coefficient, e_val: int, a_val: int) -> int:
    if isinstance(p, Poly):
        return p.evaluate(e_val, a_val)
    return int(p)


def is_zero(p: Coefficient) -> bool:
    if isinstance(p, Poly):
        return p.is_zero()
    return p == 0


def as_int(p: Coefficient) -> int:
    """Return ``p`` as a Python int, or raise ModeError if it is not constant."""
    if isinstance(p, Poly):
        return p.constant_value()
    if isinstance(p, bool) or not isinstance(p, int):
        raise ModeError(f"expected an integer coefficient, got {p!r}")
    return p


def exact_div(p: Coefficient, n: int) -> Coefficient:
    if isinstance(p, Poly):
        return p.divexact(n)
    q, r = divmod(p, n)
    if r:
        raise ArithmeticError(f"{p} is not divisible by {n}")
    return q


# text form


def _monomial_text(mono: Monomial) -> str:
    parts = []
    for name, k in zip(VARIABLES, mono):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _display_key(item):
    (i, j), _ = item
    return (-(i + j), -j, -i)


def render(p: Coefficient) -> str:
    """Render as e.g. ``8*a - 4*e - 6``: higher total degree first, a before e."""
    if not isinstance(p, Poly):
        return str(int(p))
    if p.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(sorted(p.terms, key=_display_key)):
        mtext = _monomial_text(mono)
        mag = abs(c)
        if not mtext:
            body = str(mag)
        elif mag == 1:
            body = mtext
        else:
            body = f"{mag}*{mtext}"
        if k == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for integer polynomials in a fixed set of names.

    Produces a dict mapping exponent tuples (aligned with ``names``) to ints.
    """

    def __init__(self, text: str, names: tuple[str, ...]):
        self.tokens = _tokenize(text)
        self.names = names
        self.pos = 0
        self.text = text

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _fail(self, msg: str):
        raise ValueError(f"cannot parse {self.text!r}: {msg}")

    def parse(self) -> dict[tuple[int, ...], int]:
        if not self.tokens:
            self._fail("empty expression")
        out = self._expr()
        if self.pos != len(self.tokens):
            self._fail(f"trailing input at token {self.pos}")
        return out

    def _expr(self):
        acc: dict = {}
        sign = 1
        kind, val = self._peek()
        if kind == "op" and val in "+-":
            self._take()
            sign = -1 if val == "-" else 1
        acc = _dadd(acc, _dscale(self._term(), sign))
        while True:
            kind, val = self._peek()
            if kind == "op" and val in "+-":
                self._take()
                acc = _dadd(acc, _dscale(self._term(), -1 if val == "-" else 1))
            else:
                return acc

    def _term(self):
        acc = self._factor()
        while True:
            kind, val = self._peek()
            if kind == "op" and val == "*":
                self._take()
                acc = _dmul(acc, self._factor())
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = _dmul(acc, self._factor())
            else:
                return acc

    def _factor(self):
        kind, val = self._peek()
        if kind == "op" and val == "-":
            self._take()
            return _dscale(self._factor(), -1)
        base = self._atom()
        kind, val = self._peek()
        if kind == "op" and val == "^":
            self._take()
            kind, val = self._take()
            if kind != "num":
                self._fail("exponent must be a nonnegative integer")
            out = {tuple(0 for _ in self.names): 1}
            for _ in range(int(val)):
                out = _dmul(out, base)
            return out
        return base

    def _atom(self):
        kind, val = self._take()
        zero = tuple(0 for _ in self.names)
        if kind == "num":
            return {zero: int(val)} if int(val) else {}
        if kind == "name":
            if val not in self.names:
                self._fail(f"unknown symbol {val!r}")
            k = self.names.index(val)
            return {tuple(1 if i == k else 0 for i in range(len(self.names))): 1}
        if kind == "op" and val == "(":
            inner = self._expr()
            if self._take() != ("op", ")"):
                self._fail("unbalanced parenthesis")
            return inner
        self._fail(f"unexpected token {val!r}")


def _dadd(x: dict, y: dict) -> dict:
    out = dict(x)
    for m, c in y.items():
        out[m] = out.get(m, 0) + c
        if not out[m]:
            del out[m]
    return out


def _dscale(x: dict, k: int) -> dict:
    return {m: k * c for m, c in x.items() if k * c}


def _dmul(x: dict, y: dict) -> dict:
    out: dict = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            m = tuple(p + q for p, q in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def parse_generic(text: str, names: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    """Parse ``text`` as an integer polynomial in ``names``."""
    return _Parser(text, names).parse()


def parse(text: str) -> Poly:
    """Parse the text form produced by :func:`render` (``^`` or ``**`` for powers)."""
    return Poly(parse_generic(text, VARIABLES))
