"""Exact multivariate Laurent polynomials with an M-grading.

Variables are named ``S[i,j]``, ``T[k]``, ``W[l]``, ``Z[i]`` or ``X[...]``.
A polynomial is a sparse map from monomials to nonzero ``Fraction``
coefficients; a monomial is a sorted tuple of ``(Var, exponent)`` pairs.

Textual form::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := int | var | '(' expr ')'
    var    := KIND '[' int (',' int)? ']'      KIND in {S, T, W, Z, X}

Division is only allowed by nonzero constants, which keeps rational
coefficients printable and re-parseable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

KINDS = ("S", "X", "Z", "T", "W")  # also the term order: unit and boundary variables last
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}
# kinds that may carry negative exponents: T lives in a Laurent ring, W only
# transiently inside the homogenization, X/Z never.
LAURENT_KINDS = frozenset({"T", "W"})


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message if position is None else f"{message} at position {position}")


@dataclass(frozen=True, order=False)
class Var:
    kind: str
    index: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise PolynomialError(f"unknown variable kind {self.kind!r}")
        object.__setattr__(self, "index", tuple(int(i) for i in self.index))

    @property
    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.index)

    def __lt__(self, other: "Var") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.kind}[{','.join(map(str, self.index))}]"

    __repr__ = __str__


def S(i: int, j: int) -> Var:
    return Var("S", (i, j))


def T(k: int) -> Var:
    return Var("T", (k,))


def W(l: int) -> Var:
    return Var("W", (l,))


def X(*idx: int) -> Var:
    return Var("X", idx)


def Zv(i: int) -> Var:
    return Var("Z", (i,))


Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by variable, no zero exponents


def _mono(pairs: Iterable[tuple[Var, int]]) -> Monomial:
    acc: dict[Var, int] = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + int(e)
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda p: p[0].sort_key))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return _mono(list(a) + list(b))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = _mono(m)
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({(): c})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "LaurentPoly":
        return cls({((v, exp),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int] | Iterable[tuple[Var, int]], coeff=1) -> "LaurentPoly":
        items = exps.items() if isinstance(exps, Mapping) else exps
        return cls({_mono(items): coeff})

    # inspection
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> list[Var]:
        return sorted({v for m in self._terms for v, _ in m}, key=lambda v: v.sort_key)

    def degree_in(self, v: Var) -> tuple[int, int]:
        """(min, max) exponent of ``v`` over all terms; (0, 0) for the zero poly."""
        exps = [dict(m).get(v, 0) for m in self._terms] or [0]
        return min(exps), max(exps)

    # arithmetic
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            if len(other) != 1:
                raise PolynomialError("can only divide by a monomial")
            (m, c), = other._terms.items()
            inv = tuple((v, -e) for v, e in m)
            return self * LaurentPoly({inv: 1 / c})
        c = Fraction(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return LaurentPoly({m: v / c for m, v in self._terms.items()})

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            if len(self) != 1:
                raise PolynomialError("negative powers are only defined for monomials")
            (m, c), = self._terms.items()
            return LaurentPoly({tuple((v, e * n) for v, e in m): c ** n})
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitution
    def map_terms(self, fn) -> "LaurentPoly":
        """Apply ``fn(monomial, coeff) -> LaurentPoly`` termwise and sum."""
        acc: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            for m2, c2 in fn(m, c)._terms.items():
                acc[m2] = acc.get(m2, Fraction(0)) + c2
        return LaurentPoly(acc)

    def substitute(self, values: Mapping[Var, object]) -> "LaurentPoly":
        """Replace variables by constants or polynomials."""
        subs = {v: (p if isinstance(p, LaurentPoly) else LaurentPoly.constant(p)) for v, p in values.items()}

        def fn(m, c):
            out = LaurentPoly.constant(c)
            for v, e in m:
                out = out * (subs[v] ** e if v in subs else LaurentPoly.var(v, e))
            return out

        return self.map_terms(fn)

    def rename(self, mapping: Mapping[Var, Var]) -> "LaurentPoly":
        return LaurentPoly({tuple((mapping.get(v, v), e) for v, e in m): c for m, c in self._terms.items()})

    # ordering and printing
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing lexicographic order of exponent vectors.

        Exponent vectors run over the variables of this polynomial in kind
        order S < X < Z < T < W, then by index.
        """
        order = self.variables()

        def key(item):
            d = dict(item[0])
            return tuple(d.get(v, 0) for v in order)

        return sorted(self._terms.items(), key=key, reverse=True)

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def normalized(self) -> "LaurentPoly":
        """Scalar multiple with leading coefficient 1 (zero stays zero)."""
        lc = self.leading_coefficient()
        return self / lc if lc else self

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in m:
                factors.append(str(v) if e == 1 else f"{v}^{e}")
            mag = abs(c)
            if not factors:
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = "*".join(factors)
            elif mag.denominator == 1:
                body = f"{mag.numerator}*" + "*".join(factors)
            else:
                num = f"{mag.numerator}*" if mag.numerator != 1 else ""
                body = num + "*".join(factors) + f"/{mag.denominator}"
            pieces.append(("-" if c < 0 else "+", body))
        head = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in pieces[1:]])

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


# --------------------------------------------------------------------------
# variable tables and weights


@dataclass(frozen=True)
class VarTable:
    """Ordered variables of a ring, with M-weights for the S and T kinds.

    ``S[i,j]`` has weight ``v_i*`` and ``T[k]`` has weight ``w_k*`` in the
    lattice M with basis ``(v_1*, ..., v_r*, w_1*, ..., w_m*)``.
    """

    variables: tuple[Var, ...]
    weights: Mapping[Var, tuple[int, ...]] = field(default_factory=dict, compare=False)
    rank: int = 0

    @classmethod
    def standard(cls, dims: Sequence[int], m: int = 0, n_w: int = 0) -> "VarTable":
        r = len(dims)
        rank = r + m
        vs: list[Var] = []
        weights: dict[Var, tuple[int, ...]] = {}
        for i, s in enumerate(dims, start=1):
            for j in range(1, s + 1):
                v = S(i, j)
                vs.append(v)
                weights[v] = tuple(int(t == i - 1) for t in range(rank))
        for k in range(1, m + 1):
            v = T(k)
            vs.append(v)
            weights[v] = tuple(int(t == r + k - 1) for t in range(rank))
        vs.extend(W(l) for l in range(1, n_w + 1))
        return cls(tuple(vs), weights, rank)

    @classmethod
    def free(cls, variables: Iterable[Var]) -> "VarTable":
        return cls(tuple(sorted(set(variables), key=lambda v: v.sort_key)), {}, 0)

    def __contains__(self, v: Var) -> bool:
        return v in self.variables

    def with_variables(self, extra: Iterable[Var]) -> "VarTable":
        vs = list(self.variables) + [v for v in extra if v not in self.variables]
        return VarTable(tuple(vs), self.weights, self.rank)

    def without_kind(self, kind: str) -> "VarTable":
        return VarTable(tuple(v for v in self.variables if v.kind != kind), self.weights, self.rank)

    def weight(self, v: Var) -> tuple[int, ...]:
        try:
            return self.weights[v]
        except KeyError:
            raise PolynomialError(f"variable {v} carries no M-weight") from None

    def check(self, f: LaurentPoly) -> None:
        for m in f.terms:
            for v, e in m:
                if v not in self.variables:
                    raise PolynomialError(f"unknown variable {v}")
                if e < 0 and v.kind not in LAURENT_KINDS:
                    raise PolynomialError(f"negative exponent on {v}")


def weight_of_monomial(mono: Monomial, table: VarTable) -> tuple[int, ...]:
    """M-weight of a monomial over S/T variables."""
    acc = [0] * table.rank
    for v, e in mono:
        if v.kind not in ("S", "T"):
            raise PolynomialError(f"{v} has no weight in M")
        w = table.weight(v)
        for t in range(table.rank):
            acc[t] += e * w[t]
    return tuple(acc)


def homogeneous_components(f: LaurentPoly, table: VarTable) -> dict[tuple[int, ...], LaurentPoly]:
    """Decompose ``f`` into its M-homogeneous components ``f^(mu)``."""
    parts: dict[tuple[int, ...], dict] = {}
    for m, c in f.items():
        parts.setdefault(weight_of_monomial(m, table), {})[m] = c
    return {mu: LaurentPoly(terms) for mu, terms in sorted(parts.items())}


def is_M_homogeneous(f: LaurentPoly, table: VarTable) -> bool:
    return len(homogeneous_components(f, table)) <= 1


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([STWZX])\s*\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]|([-+*/^()]))")


def _tokenize(src: str):
    pos = 0
    toks = []
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos:].lstrip()[:1]!r}", pos + (len(src[pos:]) - len(src[pos:].lstrip())))
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            idx = (int(m.group(3)),) if m.group(4) is None else (int(m.group(3)), int(m.group(4)))
            toks.append(("var", Var(m.group(2), idx), start))
        else:
            toks.append((m.group(5), None, start))
        pos = m.end()
    toks.append(("end", None, len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, table: VarTable | None):
        self.toks = _tokenize(src)
        self.i = 0
        self.table = table

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[0]!r}", tok[2])
        return out

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            f = self.factor()
            if op == "*":
                acc = acc * f
            else:
                if len(f) != 1 or f.variables():
                    raise ParseError("division is only allowed by nonzero constants", pos)
                acc = acc / f.terms[()]
        return acc

    def factor(self) -> LaurentPoly:
        base, start = self.atom()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            neg = False
            if self.peek()[0] == "-":
                self.take()
                neg = True
            e = self.take("int")[1]
            e = -e if neg else e
            if e < 0 and len(base) != 1:
                raise ParseError("negative exponent on a non-monomial", pos)
            base = base ** e
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return LaurentPoly.constant(tok[1]), tok[2]
        if tok[0] == "var":
            self.take()
            v = tok[1]
            if self.table is not None and v not in self.table:
                raise ParseError(f"unknown variable {v}", tok[2])
            return LaurentPoly.var(v), tok[2]
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner, tok[2]
        raise ParseError(f"unexpected token {tok[0]!r}", tok[2])


def parse(expr: str, table: VarTable | None = None) -> LaurentPoly:
    """Parse a polynomial expression into canonical expanded form.

    With a ``table``, unknown variables and negative exponents on kinds
    that do not allow them are rejected.
    """
    f = _Parser(expr, table).parse()
    for m in f.terms:
        for v, e in m:
            if e < 0 and v.kind not in LAURENT_KINDS:
                raise ParseError(f"negative exponent on {v}")
    return f
